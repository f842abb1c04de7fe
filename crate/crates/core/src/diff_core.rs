//! Differential polynomial arithmetic: formal total derivatives, leaders,
//! initials, separants and rank, plus the partial-remainder (DPM) and SPLIT
//! subroutines used by the differential decomposition.
//!
//! A differential polynomial is an ordinary [`Poly`] whose variables are
//! derivative variables `Var::Deriv { base, order }` of the differential
//! indeterminates y_1 < ... < y_n, ranked by (base, order). New derivative
//! variables appear on the fly when differentiating; the ranking is
//! intrinsic to the variable encoding, so existing polynomials are never
//! re-indexed.

use crate::poly_core::{Monomial, Poly, Var};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiffError {
    /// Operation requires a nonconstant differential polynomial.
    ConstantPolynomial,
    /// The DPM pivot's leader is not a derivative strictly below the order
    /// of the polynomials to reduce.
    BadLeader,
}

impl fmt::Display for DiffError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffError::ConstantPolynomial => write!(f, "differential polynomial is constant"),
            DiffError::BadLeader => write!(f, "DPM pivot leader does not reduce the system"),
        }
    }
}

impl std::error::Error for DiffError {}

/// Order of `f` in the indeterminate with base index `alpha`: the greatest
/// j with y_alpha^(j) present, or `None` when no derivative of y_alpha
/// occurs.
pub fn order_in(f: &Poly, alpha: u32) -> Option<u32> {
    f.vars()
        .into_iter()
        .filter_map(|v| match v {
            Var::Deriv { base, order } if base == alpha => Some(order),
            _ => None,
        })
        .max()
}

/// The leader: the highest-ranked derivative variable occurring in `f`.
pub fn leader(f: &Poly) -> Result<Var, DiffError> {
    f.leading_variable().map_err(|_| DiffError::ConstantPolynomial)
}

/// Class of `f`: the base index of its leader plus one (paper convention),
/// 0 for constants.
pub fn class(f: &Poly) -> u32 {
    match f.max_var() {
        Some(Var::Deriv { base, .. }) => base + 1,
        Some(Var::Base(i)) => i + 1,
        _ => 0,
    }
}

/// The separant: ∂f/∂leader.
pub fn separant(f: &Poly) -> Result<Poly, DiffError> {
    let v = leader(f)?;
    Ok(f.partial(v))
}

/// One application of the formal total derivative: additive, Leibniz, and
/// `(y_i^(j))' = y_i^(j+1)`; rational constants map to zero.
pub fn total_derivative(f: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (m, c) in f.terms() {
        for (idx, &(v, e)) in m.pairs().iter().enumerate() {
            let Var::Deriv { base, order } = v else {
                panic!("total derivative requires derivative variables")
            };
            let mut pairs: Vec<(Var, u32)> = m.pairs().to_vec();
            pairs[idx].1 -= 1;
            let lowered = Monomial::from_pairs(pairs);
            let raised = lowered.mul(&Monomial::var(Var::Deriv { base, order: order + 1 }));
            out = out.add(&Poly::from_terms(vec![(
                raised,
                c * num_rational::BigRational::from_integer(e.into()),
            )]));
        }
    }
    out
}

/// `times`-fold total derivative.
pub fn differentiate(f: &Poly, times: u32) -> Poly {
    let mut out = f.clone();
    for _ in 0..times {
        out = total_derivative(&out);
    }
    out
}

/// Is `f` of higher rank than `g` (class, then order in the common class,
/// then degree in the leader)?
pub fn higher_rank(f: &Poly, g: &Poly) -> bool {
    match (f.max_var(), g.max_var()) {
        (None, _) => false,
        (Some(_), None) => true,
        (Some(vf), Some(vg)) => {
            if vf != vg {
                return vf > vg;
            }
            f.degree(vf) > g.degree(vg)
        }
    }
}

/// Is `f` reduced with respect to `g`: lower order in cls(g), or equal
/// order and lower degree in the leader.
pub fn is_reduced(f: &Poly, g: &Poly) -> bool {
    let Ok(Var::Deriv { base, order }) = leader(g) else {
        return true;
    };
    match order_in(f, base) {
        None => true,
        Some(of) => {
            of < order
                || (of == order
                    && f.degree(Var::Deriv { base, order })
                        < g.degree(Var::Deriv { base, order }))
        }
    }
}

/// Output of the DPM partial remainder.
#[derive(Clone, Debug)]
pub struct DpmOutput {
    /// `[g0, f̃_1, ..., f̃_k]`: the pivot followed by the reduced system.
    pub reduced: Vec<Poly>,
    /// `f̃_0 · S_{g0}`.
    pub ineq: Poly,
}

/// Algorithm: DPM. Lower the order of every `f_i` (and of `f0`) in the
/// pivot's indeterminate to at most the pivot leader's order by substituting
/// the prolonged pivot relations; each replacement multiplies by the
/// separant to clear denominators, so
/// `zero(g0, fs / f0·S) = zero(g0, f̃s / f̃0·S)`.
pub fn dpm(g0: &Poly, fs: &[Poly], f0: &Poly) -> Result<DpmOutput, DiffError> {
    let lead = leader(g0)?;
    let Var::Deriv { base: alpha, order: target } = lead else {
        return Err(DiffError::BadLeader);
    };
    let r = fs
        .iter()
        .chain(std::iter::once(f0))
        .filter_map(|f| order_in(f, alpha))
        .max()
        .unwrap_or(0);
    if r <= target {
        return Err(DiffError::BadLeader);
    }
    let sep = g0.partial(lead);
    let reduce = |f: &Poly| -> Poly {
        let mut f = f.clone();
        while let Some(ri) = order_in(&f, alpha) {
            if ri <= target {
                break;
            }
            let v = Var::Deriv { base: alpha, order: ri };
            let prolonged = differentiate(g0, ri - target);
            debug_assert_eq!(prolonged.degree(v), 1);
            debug_assert_eq!(prolonged.coeff_of(v, 1), sep);
            // prolonged = S·v − H  ⇒  v ↦ H/S with clearing by S^deg
            let h = sep.mul(&Poly::var(v)).sub(&prolonged);
            f = f.substitute_clearing(v, &h, &sep);
        }
        f
    };
    let mut reduced = vec![g0.clone()];
    for f in fs {
        reduced.push(reduce(f));
    }
    let f0r = reduce(f0);
    Ok(DpmOutput { reduced, ineq: f0r.mul(&sep) })
}

/// One component of the SPLIT cascade: equations (the first polynomial is
/// the one whose derivative is the inequation) and the optional inequation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitComponent {
    pub polys: Vec<Poly>,
    pub theta: Option<Poly>,
}

/// Algorithm: SPLIT. Decompose `zero(G)` along first-nonvanishing-derivative
/// cases with respect to the indeterminate y_alpha:
///
/// ```text
/// zero(G) = ∪_i zero(h_{i,1}, ... / ∂h_{i,1}/∂v_i) ∪ zero(coeff(G, y_alpha))
/// ```
///
/// Components whose equations contain a nonzero rational constant are
/// dropped immediately.
pub fn split(system: &[Poly], alpha: u32) -> Vec<SplitComponent> {
    let start: Vec<Poly> = system
        .iter()
        .map(|p| p.canonical())
        .filter(|p| !p.is_zero())
        .collect();
    let mut work: Vec<Vec<Poly>> = vec![start];
    let mut out: Vec<SplitComponent> = Vec::new();
    while let Some(fset) = work.pop() {
        if fset.iter().any(|p| p.is_constant() && !p.is_zero()) {
            continue;
        }
        let max_ord = fset.iter().filter_map(|p| order_in(p, alpha)).max();
        let Some(t) = max_ord else {
            // free of y_alpha entirely: coefficient component
            out.push(SplitComponent { polys: fset, theta: None });
            continue;
        };
        // pick the polynomial of maximal order, ties by canonical order
        let f = fset
            .iter()
            .filter(|p| order_in(p, alpha) == Some(t))
            .min()
            .expect("some polynomial attains the maximal order")
            .clone();
        let pos = fset.iter().position(|p| *p == f).unwrap();
        let mut rest = fset.clone();
        rest.remove(pos);
        let v = Var::Deriv { base: alpha, order: t };
        let d = f.degree(v);
        let mut derivs: Vec<Poly> = vec![f.clone()];
        for _ in 1..=d {
            derivs.push(derivs.last().unwrap().partial(v));
        }
        for s in 1..=(d as usize) {
            let mut polys = vec![derivs[s - 1].clone()];
            for q in derivs[..s - 1].iter() {
                polys.push(q.clone());
            }
            polys.extend(rest.iter().cloned());
            out.push(SplitComponent { polys, theta: Some(derivs[s].clone()) });
        }
        let mut next = rest;
        for c in f.univariate_coeffs(v).coeffs {
            let c = c.canonical();
            if !c.is_zero() && !next.contains(&c) {
                next.push(c);
            }
        }
        work.push(next);
    }
    out
}

/// A differential triangular set with its inequation product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffChain {
    /// Chain polynomials, ascending by class.
    pub polys: Vec<Poly>,
    /// Product D of the branch inequations.
    pub ineq_product: Poly,
    /// Base indices not led by any chain polynomial.
    pub params: Vec<u32>,
}

impl DiffChain {
    pub fn classes(&self) -> Vec<u32> {
        self.polys.iter().map(class).collect()
    }

    pub fn is_triangular(&self) -> bool {
        let cs = self.classes();
        cs.windows(2).all(|w| w[0] < w[1]) && cs.iter().all(|&c| c > 0)
    }

    pub fn initials(&self) -> Vec<Poly> {
        self.polys
            .iter()
            .map(|p| p.initial().expect("chain polynomials are nonconstant"))
            .collect()
    }

    pub fn separants(&self) -> Vec<Poly> {
        self.polys
            .iter()
            .map(|p| separant(p).expect("chain polynomials are nonconstant"))
            .collect()
    }
}

/// Differential pseudo-remainder of `f` by a triangular chain: prolonged
/// substitution brings every derivative below the chain orders, then
/// algebraic pseudo-division reduces the leader degrees. A zero remainder
/// certifies membership in the differential saturation ideal.
pub fn d_prem(f: &Poly, chain: &[Poly]) -> Poly {
    let mut r = f.clone();
    loop {
        let mut acted = false;
        for t in chain.iter().rev() {
            let Ok(Var::Deriv { base, order: gamma }) = leader(t) else {
                continue;
            };
            let sep = t.partial(Var::Deriv { base, order: gamma });
            while let Some(o) = order_in(&r, base) {
                if o <= gamma {
                    break;
                }
                let v = Var::Deriv { base, order: o };
                let prolonged = differentiate(t, o - gamma);
                let h = sep.mul(&Poly::var(v)).sub(&prolonged);
                r = r.substitute_clearing(v, &h, &sep);
                acted = true;
            }
            let lead = Var::Deriv { base, order: gamma };
            if t.degree(lead) > 0 && r.degree(lead) >= t.degree(lead) {
                let (rr, _) = r.pseudo_remainder(t, lead).expect("positive degree");
                r = rr;
                acted = true;
            }
        }
        if !acted {
            return r;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::{parse_poly, VarOrder};

    fn ord2() -> VarOrder {
        VarOrder::differential(vec!["x", "y"])
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ord2()).unwrap()
    }

    #[test]
    fn derivative_basics() {
        // d/dt y = y'
        assert_eq!(total_derivative(&p("y")), p("y'"));
        // d/dt (y'² − x·y²) = 2y'y'' − x'y² − 2xyy'
        let f = p("y'^2 - x*y^2");
        let expected = p("2*y'*y'' - x'*y^2 - 2*x*y*y'");
        assert_eq!(total_derivative(&f), expected);
        // constants
        assert!(total_derivative(&Poly::from_int(5)).is_zero());
        assert_eq!(differentiate(&p("y"), 3), p("y^(3)"));
    }

    #[test]
    fn derivation_identities() {
        let f = p("x*y' + y^2");
        let g = p("y'' - 2*x");
        assert_eq!(
            total_derivative(&f.mul(&g)),
            total_derivative(&f).mul(&g).add(&f.mul(&total_derivative(&g)))
        );
        assert_eq!(
            total_derivative(&f.add(&g)),
            total_derivative(&f).add(&total_derivative(&g))
        );
    }

    #[test]
    fn separant_examples() {
        assert_eq!(separant(&p("y'^2 - x*y^2")).unwrap(), p("2*y'"));
        assert_eq!(separant(&p("x*y^2")).unwrap(), p("2*x*y"));
        assert_eq!(separant(&p("y' - y")).unwrap(), Poly::one());
        assert_eq!(separant(&Poly::from_int(2)), Err(DiffError::ConstantPolynomial));
    }

    #[test]
    fn rank_and_reduction() {
        assert!(higher_rank(&p("y''"), &p("y'")));
        assert!(higher_rank(&p("y"), &p("x^(5)")));
        assert!(higher_rank(&p("y'^2"), &p("y'")));
        assert!(is_reduced(&p("y'"), &p("y''")));
        assert!(!is_reduced(&p("y''^2"), &p("y''")));
    }

    #[test]
    fn dpm_linear_example() {
        // g0 = y'−y, fs = {y''+y}: y'' ↦ y' gives y'+y
        let out = dpm(&p("y' - y"), &[p("y'' + y")], &Poly::one()).unwrap();
        assert_eq!(out.reduced[1], p("y' + y"));
        assert!(out.ineq.is_one());
    }

    #[test]
    fn dpm_collapse_example() {
        // g0 = y', fs = {y''}: reduces to 0
        let out = dpm(&p("y'"), &[p("y''")], &Poly::one()).unwrap();
        assert!(out.reduced[1].is_zero());
    }

    #[test]
    fn dpm_paper_branch() {
        // g0 = 2xy, fs = {y', xy²}, f0 = 2x
        let out = dpm(&p("2*x*y"), &[p("y'"), p("x*y^2")], &p("2*x")).unwrap();
        assert_eq!(out.reduced[0], p("2*x*y"));
        assert_eq!(out.reduced[1].canonical(), p("x'*y"));
        assert_eq!(out.reduced[2], p("x*y^2"));
        // ineq = f0·S = 2x·2x (the separant of 2xy is taken at its leader y)
        assert_eq!(out.ineq.canonical(), p("x^2"));
    }

    #[test]
    fn dpm_bad_leader() {
        // nothing to reduce: r = ord(fs, y) = 1 equals the pivot order
        assert_eq!(
            dpm(&p("y'"), &[p("y' + y")], &Poly::one()).unwrap_err(),
            DiffError::BadLeader
        );
    }

    #[test]
    fn split_cascade_example() {
        // ({x·y²}, y): ({xy²},{2xy}), ({2xy, xy²},{2x}), ({x},∅)
        let comps = split(&[p("x*y^2")], 1);
        assert_eq!(comps.len(), 3, "{:?}", comps);
        let c1 = &comps[0];
        assert_eq!(c1.polys, vec![p("x*y^2")]);
        assert_eq!(c1.theta.as_ref().unwrap(), &p("2*x*y"));
        let c2 = &comps[1];
        assert_eq!(c2.polys[0], p("2*x*y"));
        assert!(c2.polys.contains(&p("x*y^2")));
        assert_eq!(c2.theta.as_ref().unwrap(), &p("2*x"));
        let c3 = &comps[2];
        assert_eq!(c3.polys, vec![p("x")]);
        assert!(c3.theta.is_none());
    }

    #[test]
    fn split_linear_and_absent() {
        // ({y−1}, y): one component; the coefficient branch is inconsistent
        let comps = split(&[p("y - 1")], 1);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].polys, vec![p("y - 1")]);
        assert_eq!(comps[0].theta.as_ref().unwrap(), &Poly::one());
        // ({x}, y): single coefficient component
        let comps = split(&[p("x")], 1);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].polys, vec![p("x")]);
        assert!(comps[0].theta.is_none());
    }

    #[test]
    fn split_covers_zero_set() {
        // union of component loci equals zero(G) pointwise
        use num_rational::BigRational;
        use std::collections::BTreeMap;
        let g = vec![p("x*y^2")];
        let comps = split(&g, 1);
        let xv = Var::Deriv { base: 0, order: 0 };
        let yv = Var::Deriv { base: 1, order: 0 };
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let point: BTreeMap<Var, BigRational> = [
                    (xv, BigRational::from_integer(a.into())),
                    (yv, BigRational::from_integer(b.into())),
                ]
                .into_iter()
                .collect();
                let in_g = g.iter().all(|q| q.eval_partial(&point).is_zero());
                let in_union = comps.iter().any(|c| {
                    c.polys.iter().all(|q| q.eval_partial(&point).is_zero())
                        && c.theta
                            .as_ref()
                            .map(|t| !t.eval_partial(&point).is_zero())
                            .unwrap_or(true)
                });
                assert_eq!(in_g, in_union, "point ({}, {})", a, b);
            }
        }
    }

    #[test]
    fn d_prem_membership() {
        // chain [y'²−xy²]: the input reduces to zero
        let chain = vec![p("y'^2 - x*y^2")];
        assert!(d_prem(&p("y'^2 - x*y^2"), &chain).is_zero());
        // a derivative consequence also reduces to zero
        let deriv = total_derivative(&p("y'^2 - x*y^2"));
        assert!(d_prem(&deriv, &chain).is_zero());
        // y does not
        assert!(!d_prem(&p("y"), &chain).is_zero());
    }
}
