//! One-step elimination of a main variable Y from a polynomial system:
//! the quasi GCD and its squarefree variant.
//!
//! Given equations h_1, ..., h_k and an inequation h_0 in K[x][Y], the
//! output is a list of components
//!
//! ```text
//! zero(h_1, ..., h_k / h_0) = ∪_q zero(Ψ_q, g_{q,1}, ..., g_{q,N} / g_{q,0})
//! ```
//!
//! where every Ψ_q has positive degree in Y with ini(Ψ_q) dividing g_{q,0},
//! and all other component polynomials are free of Y. The coefficient
//! component (Ψ absent, all Y-coefficients of the h_i as equations, h_0 as
//! inequation) covers the locus where the system degenerates.
//!
//! The cascade enumerates, per equation h_i and per degree j descending,
//! the locus where the coefficients of h_1, ..., h_{i−1} and the upper
//! coefficients of h_i vanish while the j-th does not; the truncated system
//! is homogenized with Y0 (projective closure) and Y1 (Rabinowitsch variable
//! for h_0 ≠ 0) and handed to the Macaulay elimination. Each resolved branch
//! yields Ψ by reading the U1-power slice of the branch determinant at
//! U = −1, U0 = Y.
//!
//! The squarefree variant splits each truncated system along the
//! first-nonvanishing-derivative cascade of its top equation before
//! homogenizing, which pins every root of Ψ to multiplicity one, so the
//! Y-derivative of Ψ is nonzero on every component point.

use crate::casesplit_linalg::{
    build_macaulay, case_split_determinants, Branch, CasesplitError, HomogSystem,
};
use crate::config::Budget;
use crate::poly_core::{AuxVar, Poly, Var};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcdError {
    /// Some input polynomial involves a variable ranked above the main one.
    MainVariableInCoefficients,
    /// The branch budget was exhausted.
    BranchLimitExceeded,
}

impl fmt::Display for GcdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcdError::MainVariableInCoefficients => {
                write!(f, "input polynomial involves a variable above the main variable")
            }
            GcdError::BranchLimitExceeded => write!(f, "branch budget exhausted"),
        }
    }
}

impl std::error::Error for GcdError {}

impl From<CasesplitError> for GcdError {
    fn from(e: CasesplitError) -> Self {
        match e {
            CasesplitError::BranchLimitExceeded => GcdError::BranchLimitExceeded,
            CasesplitError::EmptySystem => GcdError::MainVariableInCoefficients,
        }
    }
}

/// One output component: `zero(psi, eqs / ineq)`. A missing `psi` means the
/// component constrains only the coefficient variables (every Y satisfies
/// it once the equations hold). For the coefficient component the
/// inequation is the original h_0 and may involve Y; for all other
/// components `ineq` is free of Y and divisible by `ini(psi)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GcdComponent {
    pub psi: Option<Poly>,
    pub eqs: Vec<Poly>,
    pub ineq: Poly,
}

/// Homogenize equations and the inequation in {Y, Y0, Y1}:
///
/// ```text
/// h    ↦  Y0^deg_Y(h) · h(x, Y/Y0)
/// h_0  ↦  Y1 · hom_e(h_0) − Y0^(e+1),   e = max(deg_Y(h_0), 1)
/// ```
///
/// plus the linear form Y0·U0 + Y·U + Y1·U1. The projective solutions of
/// the result correspond to the affine solutions of (h = 0, h_0 ≠ 0)
/// together with the single extra point (Y : Y0 : Y1) = (0 : 0 : 1).
pub fn homogenize_system(polys: &[Poly], h0: &Poly, y: Var) -> HomogSystem {
    let y0 = Var::Aux(AuxVar::Y0);
    let y1 = Var::Aux(AuxVar::Y1);
    let mut gens = Vec::with_capacity(polys.len() + 1);
    for p in polys {
        gens.push(homogenize_to(p, y, y0, p.degree(y)));
    }
    let e = h0.degree(y).max(1);
    let hbar0 = Poly::var(y1)
        .mul(&homogenize_to(h0, y, y0, e))
        .sub(&Poly::var_pow(y0, e + 1));
    gens.push(hbar0);
    HomogSystem::new(gens, y)
}

fn homogenize_to(p: &Poly, y: Var, y0: Var, degree: u32) -> Poly {
    let view = p.univariate_coeffs(y);
    let mut acc = Poly::zero();
    for (j, c) in view.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = c
            .mul(&Poly::var_pow(y, j as u32))
            .mul(&Poly::var_pow(y0, degree - j as u32));
        acc = acc.add(&t);
    }
    acc
}

/// Algorithm: quasi GCD. Eliminates `y` from `zero(eqs / h0)` in one step.
pub fn quasi_gcd(
    eqs: &[Poly],
    h0: &Poly,
    y: Var,
    budget: &mut Budget,
) -> Result<Vec<GcdComponent>, GcdError> {
    run(eqs, h0, y, false, budget)
}

/// Squarefree quasi GCD: additionally guarantees that the Y-derivative of
/// every component's Ψ is nonzero on every point of that component.
pub fn squarefree_quasi_gcd(
    eqs: &[Poly],
    h0: &Poly,
    y: Var,
    budget: &mut Budget,
) -> Result<Vec<GcdComponent>, GcdError> {
    run(eqs, h0, y, true, budget)
}

fn run(
    eqs: &[Poly],
    h0: &Poly,
    y: Var,
    squarefree: bool,
    budget: &mut Budget,
) -> Result<Vec<GcdComponent>, GcdError> {
    for p in eqs.iter().chain(std::iter::once(h0)) {
        if let Some(v) = p.max_var() {
            if v > y {
                return Err(GcdError::MainVariableInCoefficients);
            }
        }
    }
    if h0.is_zero() {
        return Ok(Vec::new());
    }
    let mut y_polys: Vec<Poly> = Vec::new();
    let mut extra: Vec<Poly> = Vec::new();
    for p in eqs {
        let p = p.canonical();
        if p.is_zero() {
            continue;
        }
        if p.degree(y) > 0 {
            y_polys.push(p);
        } else if !extra.contains(&p) {
            extra.push(p);
        }
    }

    let mut out: Vec<GcdComponent> = Vec::new();

    // Coefficient component T0.
    {
        let mut t0_eqs = extra.clone();
        for p in &y_polys {
            for c in p.univariate_coeffs(y).coeffs {
                let c = c.canonical();
                if !c.is_zero() && !t0_eqs.contains(&c) {
                    t0_eqs.push(c);
                }
            }
        }
        push_component(
            &mut out,
            GcdComponent { psi: None, eqs: t0_eqs, ineq: h0.canonical() },
        );
    }

    // U_{i,j} cascade: i ascending, j descending. The cascade conditions
    // are coefficient polynomials; the Y-free input equations in `extra`
    // are carried into every component but do not define the cascade loci.
    let mut upper_zero: Vec<Poly> = Vec::new();
    for (i, hi) in y_polys.iter().enumerate() {
        let coeffs = hi.univariate_coeffs(y).coeffs;
        let di = coeffs.len() - 1;
        for j in (1..=di).rev() {
            let cij = &coeffs[j];
            if cij.is_zero() {
                continue; // the locus with this coefficient nonzero is empty
            }
            let mut cond_eqs = upper_zero.clone();
            let mut dead = false;
            for c in coeffs.iter().take(di + 1).skip(j + 1) {
                let c = c.canonical();
                if c.is_zero() {
                    continue;
                }
                if c.is_constant() {
                    dead = true; // a nonzero constant coefficient must vanish
                    break;
                }
                if !cond_eqs.contains(&c) {
                    cond_eqs.push(c);
                }
            }
            if dead {
                continue;
            }
            // the U_{i,j} locus is empty when its nonzero coefficient is
            // forced to vanish by the accumulated coefficient conditions
            {
                use crate::casesplit_linalg::{certainly_empty, sqfree_bounded};
                let key = sqfree_bounded(cij);
                if cond_eqs.iter().any(|e| sqfree_bounded(e) == key) || certainly_empty(&cond_eqs)
                {
                    continue;
                }
            }
            let htilde = truncate(&coeffs, j, y);
            let pieces = if squarefree {
                derivative_pieces(&htilde, y, j as u32)
            } else {
                vec![(Vec::new(), Poly::one())]
            };
            for (derivs, h0_factor) in pieces {
                let h0_eff = h0.mul(&h0_factor);
                let h0_red = if h0_eff.is_constant() {
                    Poly::one()
                } else {
                    crate::casesplit_linalg::sqfree_bounded(&h0_eff)
                };
                let mut gens: Vec<Poly> = vec![htilde.clone()];
                gens.extend(derivs);
                gens.extend(y_polys.iter().skip(i + 1).cloned());
                let hs = homogenize_system(&gens, &h0_red, y);
                let a = build_macaulay(&hs);
                let branches = case_split_determinants(&a, budget)?;
                for b in branches {
                    if b.delta.is_none() {
                        // Less than full row rank at every branch point: the
                        // rank lemma excludes that inside the U_{i,j} locus.
                        continue;
                    }
                    let Some(psi) = extract_psi(&b, y) else {
                        continue; // Ψ free of Y, yet its lead is asserted nonzero
                    };
                    let mut ceqs = cond_eqs.clone();
                    for e in b.eqs.iter().chain(extra.iter()) {
                        if !ceqs.contains(e) {
                            ceqs.push(e.clone());
                        }
                    }
                    let mut factors: Vec<Poly> = Vec::new();
                    let cij_c = cij.canonical();
                    if !cij_c.is_constant() {
                        factors.push(cij_c);
                    }
                    for f in &b.ineq_factors {
                        if !f.is_constant() && !factors.contains(f) {
                            factors.push(f.clone());
                        }
                    }
                    push_component(
                        &mut out,
                        GcdComponent {
                            psi: Some(psi),
                            eqs: ceqs,
                            ineq: Poly::product(factors.iter()),
                        },
                    );
                }
            }
        }
        for c in &coeffs {
            let c = c.canonical();
            if !c.is_zero() && !upper_zero.contains(&c) {
                upper_zero.push(c);
            }
        }
    }

    Ok(merge_components(out))
}

/// Merge complementary component pairs: `(Ψ, E / i·g)` and `(Ψ, E ∪ {g} / i)`
/// cover exactly `(Ψ, E / i)` whenever the inequations agree up to the factor
/// `g` at zero-set level. The merge is skipped when it would break the
/// `ini(Ψ) | ineq` bookkeeping.
fn merge_components(mut comps: Vec<GcdComponent>) -> Vec<GcdComponent> {
    loop {
        let mut merged: Option<(usize, usize, GcdComponent)> = None;
        'search: for a_idx in 0..comps.len() {
            for b_idx in 0..comps.len() {
                if a_idx == b_idx {
                    continue;
                }
                let (a, b) = (&comps[a_idx], &comps[b_idx]);
                if a.psi != b.psi || b.eqs.len() != a.eqs.len() + 1 {
                    continue;
                }
                if !a.eqs.iter().all(|e| b.eqs.contains(e)) {
                    continue;
                }
                let g = b.eqs.iter().find(|e| !a.eqs.contains(e)).unwrap().clone();
                if a.ineq.squarefree_part() != b.ineq.mul(&g).squarefree_part() {
                    continue;
                }
                if let Some(psi) = &a.psi {
                    let init = psi.initial().expect("Ψ is nonconstant");
                    if !b.ineq.divisible_by(&init) {
                        continue;
                    }
                }
                let m = GcdComponent {
                    psi: a.psi.clone(),
                    eqs: a.eqs.clone(),
                    ineq: b.ineq.clone(),
                };
                merged = Some((a_idx, b_idx, m));
                break 'search;
            }
        }
        match merged {
            Some((a_idx, b_idx, m)) => {
                let (hi, lo) = (a_idx.max(b_idx), a_idx.min(b_idx));
                comps.remove(hi);
                comps.remove(lo);
                comps.push(m);
            }
            None => break,
        }
    }
    comps.sort();
    comps.dedup();
    comps
}

/// Σ_{β ≤ j} coeffs[β]·y^β.
fn truncate(coeffs: &[Poly], j: usize, y: Var) -> Poly {
    let mut acc = Poly::zero();
    for (b, c) in coeffs.iter().enumerate().take(j + 1) {
        acc = acc.add(&c.mul(&Poly::var_pow(y, b as u32)));
    }
    acc
}

/// The first-nonvanishing-derivative cascade of `htilde` (Y-degree j):
/// piece t carries the derivatives ∂^1..∂^(t−1) as extra equations and, for
/// t < j, the factor ∂^t as an extra inequation multiplier. The j-th
/// derivative is a nonzero multiple of the asserted-nonzero coefficient, so
/// the last piece needs no extra factor.
fn derivative_pieces(htilde: &Poly, y: Var, j: u32) -> Vec<(Vec<Poly>, Poly)> {
    let mut derivs = Vec::with_capacity(j as usize);
    let mut d = htilde.clone();
    for _ in 0..j {
        d = d.partial(y);
        derivs.push(d.clone());
    }
    (1..=j as usize)
        .map(|t| {
            let eqs: Vec<Poly> = derivs[..t - 1].to_vec();
            let factor = if t < j as usize { derivs[t - 1].clone() } else { Poly::one() };
            (eqs, factor)
        })
        .collect()
}

/// Read Ψ off a resolved branch: with delta = Σ_i E^(i)·U0^(D2−i) and the
/// branch's (e_index, u1_power) = (l, ν),
///
/// ```text
/// Ψ = e_nu·Y^(D2−l) + Σ_{i>l} [coeff of U1^ν in E^(i)](U := −1) · Y^(D2−i)
/// ```
///
/// normalized by its full content (the content divides e_nu, which is a
/// factor of the branch inequation, so the component's zero set is
/// unchanged). Returns `None` when Ψ would be free of Y.
fn extract_psi(b: &Branch, y: Var) -> Option<Poly> {
    let delta = b.delta.as_ref()?;
    let u0 = Var::Aux(AuxVar::U0);
    let u = Var::Aux(AuxVar::U);
    let u1 = Var::Aux(AuxVar::U1);
    let d2 = delta.degree(u0);
    let l = b.e_index as u32;
    if d2 == l {
        return None;
    }
    let mut psi = b.e_nu.mul(&Poly::var_pow(y, d2 - l));
    for i in (l + 1)..=d2 {
        let e_i = delta.coeff_of(u0, d2 - i);
        let c = e_i.coeff_of(u1, b.u1_power).substitute(u, &Poly::from_int(-1));
        if !c.is_zero() {
            psi = psi.add(&c.mul(&Poly::var_pow(y, d2 - i)));
        }
    }
    debug_assert_eq!(psi.degree(y), d2 - l);
    Some(psi.full_primitive())
}

/// Deletion rules: drop components whose Ψ is constant and components whose
/// equations contain a nonzero rational constant.
fn push_component(out: &mut Vec<GcdComponent>, mut comp: GcdComponent) {
    if let Some(psi) = &comp.psi {
        if psi.is_constant() {
            return;
        }
    }
    if comp.eqs.iter().any(|e| e.is_constant() && !e.is_zero()) {
        return;
    }
    comp.eqs.retain(|e| !e.is_zero());
    comp.eqs = reduce_equation_set(std::mem::take(&mut comp.eqs));
    out.push(comp);
}

/// Remove equations implied by others: when a kept equation divides `e`,
/// the equation `e = 0` is redundant in the conjunction.
pub(crate) fn reduce_equation_set(mut eqs: Vec<Poly>) -> Vec<Poly> {
    eqs.sort();
    eqs.dedup();
    eqs.sort_by(|a, b| {
        (a.total_degree(), a.num_terms())
            .cmp(&(b.total_degree(), b.num_terms()))
            .then(a.cmp(b))
    });
    let mut kept: Vec<Poly> = Vec::new();
    for e in eqs {
        if !kept.iter().any(|k| e.divisible_by(k)) {
            kept.push(e);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::DecomposeConfig;
    use crate::poly_core::{parse_poly, VarOrder};

    fn budget() -> Budget {
        Budget::new(&DecomposeConfig::default())
    }

    #[test]
    fn homogenize_examples() {
        let ord = VarOrder::algebraic(vec!["Y"]);
        let y = ord.var("Y").unwrap();
        let y0 = Var::Aux(AuxVar::Y0);
        let y1 = Var::Aux(AuxVar::Y1);

        // ({Y²+Y}, h0 = Y) → {Y² + Y·Y0, Y1·Y − Y0²} + linear form
        let p = parse_poly("Y^2 + Y", &ord).unwrap();
        let sys = homogenize_system(&[p], &parse_poly("Y", &ord).unwrap(), y);
        let g1 = Poly::var_pow(y, 2).add(&Poly::var(y).mul(&Poly::var(y0)));
        let g2 = Poly::var(y1).mul(&Poly::var(y)).sub(&Poly::var_pow(y0, 2));
        assert!(sys.gens.contains(&g1));
        assert!(sys.gens.contains(&g2));
        assert_eq!(sys.gammas, vec![2, 2, 1]);

        // ({Y−1}, h0 = 1) → {Y − Y0, Y1·Y0 − Y0²} + linear form
        let p = parse_poly("Y - 1", &ord).unwrap();
        let sys = homogenize_system(&[p], &Poly::one(), y);
        let g1 = Poly::var(y).sub(&Poly::var(y0));
        let g2 = Poly::var(y1).mul(&Poly::var(y0)).sub(&Poly::var_pow(y0, 2));
        assert!(sys.gens.contains(&g1));
        assert!(sys.gens.contains(&g2));

        // ({Y}, h0 = 1) → {Y, Y1·Y0 − Y0²} + linear form
        let sys = homogenize_system(&[Poly::var(y)], &Poly::one(), y);
        assert!(sys.gens.contains(&Poly::var(y)));
        assert!(sys.gens.contains(&g2));
        assert!(sys.is_well_formed());
    }

    #[test]
    fn quasi_gcd_square_example() {
        // zero(Y²+Y / Y) = zero(Y+1)
        let ord = VarOrder::algebraic(vec!["Y"]);
        let y = ord.var("Y").unwrap();
        let p = parse_poly("Y^2 + Y", &ord).unwrap();
        let comps = quasi_gcd(&[p], &Poly::var(y), y, &mut budget()).unwrap();
        assert_eq!(comps.len(), 1);
        let c = &comps[0];
        assert_eq!(c.psi.as_ref().unwrap(), &parse_poly("Y + 1", &ord).unwrap());
        assert!(c.eqs.is_empty());
        assert!(c.ineq.is_one());
    }

    #[test]
    fn quasi_gcd_keeps_empty_component() {
        // zero(xy+1, x / x): the (xy+1, {x} / x) component must be kept.
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let x = parse_poly("x", &ord).unwrap();
        let h1 = parse_poly("x*y + 1", &ord).unwrap();
        let comps = quasi_gcd(
            &[h1.clone(), x.clone()],
            &Poly::one(),
            ord.var("y").unwrap(),
            &mut budget(),
        )
        .unwrap();
        let hit = comps.iter().find(|c| c.psi.as_ref() == Some(&h1));
        let hit = hit.expect("component with Ψ = xy+1 present");
        assert_eq!(hit.eqs, vec![x.clone()]);
        assert_eq!(hit.ineq.squarefree_part(), x);
    }

    #[test]
    fn quasi_gcd_generic_root_component() {
        // {(Y−1)(Y−2), (Y−1)(Y−3)}: the generic component's Ψ vanishes at 1.
        let ord = VarOrder::algebraic(vec!["Y"]);
        let y = ord.var("Y").unwrap();
        let f = parse_poly("(Y - 1)*(Y - 2)", &ord).unwrap();
        let g = parse_poly("(Y - 1)*(Y - 3)", &ord).unwrap();
        let comps = quasi_gcd(&[f, g], &Poly::one(), y, &mut budget()).unwrap();
        let point: std::collections::BTreeMap<Var, num_rational::BigRational> =
            [(y, num_rational::BigRational::from_integer(1.into()))]
                .into_iter()
                .collect();
        let hit = comps.iter().any(|c| {
            c.eqs.is_empty()
                && c.psi
                    .as_ref()
                    .map(|p| p.eval_partial(&point).is_zero())
                    .unwrap_or(false)
        });
        assert!(hit, "expected a component whose Ψ vanishes at Y = 1; got {:?}", comps);
    }

    #[test]
    fn squarefree_cascade_example() {
        // {x·y²}/1 with main y: components ∅ (from 2xy ≠ 0), ({y}, ∅ / x),
        // and the coefficient component ({x} / 1).
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let y = ord.var("y").unwrap();
        let f = parse_poly("x*y^2", &ord).unwrap();
        let comps = squarefree_quasi_gcd(&[f], &Poly::one(), y, &mut budget()).unwrap();
        let x = parse_poly("x", &ord).unwrap();
        let ypoly = parse_poly("y", &ord).unwrap();
        assert_eq!(comps.len(), 2, "{:?}", comps);
        assert!(comps
            .iter()
            .any(|c| c.psi.is_none() && c.eqs == vec![x.clone()] && c.ineq.is_one()));
        let main = comps.iter().find(|c| c.psi.is_some()).unwrap();
        assert_eq!(main.psi.as_ref().unwrap(), &ypoly);
        assert!(main.eqs.is_empty());
        assert_eq!(main.ineq.squarefree_part(), x);
    }

    #[test]
    fn squarefree_derivative_split() {
        // {y1p² − x·y0²} with variables treated algebraically.
        let ord = VarOrder::algebraic(vec!["x", "y0", "y1p"]);
        let f = parse_poly("y1p^2 - x*y0^2", &ord).unwrap();
        let comps = squarefree_quasi_gcd(
            &[f.clone()],
            &Poly::one(),
            ord.var("y1p").unwrap(),
            &mut budget(),
        )
        .unwrap();
        let lead = comps
            .iter()
            .find(|c| c.psi.as_ref() == Some(&f))
            .expect("squarefree component with Ψ = y1p² − x·y0²");
        let xy2 = parse_poly("x*y0^2", &ord).unwrap();
        assert_eq!(
            lead.ineq.squarefree_part(),
            xy2.squarefree_part(),
            "separant branch excludes x·y0² = 0"
        );
        let ylin = parse_poly("y1p", &ord).unwrap();
        assert!(
            comps.iter().any(|c| {
                c.psi.as_ref() == Some(&ylin)
                    && c.eqs
                        .iter()
                        .any(|e| e == &xy2 || e == &xy2.squarefree_part())
            }),
            "expected the y1p = 0 component over x·y0² = 0; got {:?}",
            comps
        );
    }

    #[test]
    fn linear_input_single_component() {
        // ({Y − c}, 1, Y) over parameter c: single Ψ = Y − c.
        let ord = VarOrder::algebraic(vec!["c", "Y"]);
        let y = ord.var("Y").unwrap();
        let f = parse_poly("Y - c", &ord).unwrap();
        let comps = squarefree_quasi_gcd(&[f.clone()], &Poly::one(), y, &mut budget()).unwrap();
        assert_eq!(comps.len(), 1, "{:?}", comps);
        assert_eq!(comps[0].psi.as_ref(), Some(&f));
    }

    #[test]
    fn rejects_higher_variables() {
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let f = parse_poly("x*y + 1", &ord).unwrap();
        let r = quasi_gcd(&[f], &Poly::one(), ord.var("x").unwrap(), &mut budget());
        assert_eq!(r.unwrap_err(), GcdError::MainVariableInCoefficients);
    }

    #[test]
    fn init_divides_ineq() {
        let ord = VarOrder::algebraic(vec!["a", "b", "Y"]);
        let y = ord.var("Y").unwrap();
        let f = parse_poly("a*Y^2 + b*Y + 1", &ord).unwrap();
        let g = parse_poly("a*Y + b", &ord).unwrap();
        let comps = quasi_gcd(&[f, g], &Poly::one(), y, &mut budget()).unwrap();
        assert!(!comps.is_empty());
        for c in &comps {
            if let Some(psi) = &c.psi {
                assert!(psi.degree(y) > 0);
                let init = psi.initial().unwrap();
                assert!(
                    c.ineq.divisible_by(&init),
                    "ini(Ψ) = {:?} must divide ineq = {:?}",
                    init,
                    c.ineq
                );
                for e in &c.eqs {
                    assert_eq!(e.degree(y), 0);
                }
            }
        }
    }
}
