//! Full triangular decomposition of an algebraic polynomial system into
//! regular triangular sets:
//!
//! ```text
//! zero(h_1, ..., h_k) = ∪_q zero(sat(A_q))
//! ```
//!
//! The driver keeps a work list of branch states (found equations, pending
//! equations, inequations). Each pass strips the maximal leading variable
//! from the pending set with the quasi GCD, pushes the resulting components
//! back, and emits a chain when nothing is pending. Components whose
//! inequation reaches above the remaining equations are split along its
//! coefficients, which keeps every later elimination step well-posed and
//! records the parameter-space conditions in the inequation list.

use crate::casesplit_linalg::certainly_empty;
use crate::config::{Budget, DecomposeConfig};
use crate::poly_core::{resultant, Monomial, Poly, Var, VarOrder};
use crate::quasi_gcd::{quasi_gcd, GcdError};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecomposeError {
    /// The input contains a nonzero constant equation.
    Inconsistent,
    /// The configured branch cap was exhausted.
    BranchLimitExceeded,
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecomposeError::Inconsistent => write!(f, "system contains a nonzero constant"),
            DecomposeError::BranchLimitExceeded => write!(f, "branch limit exceeded"),
        }
    }
}

impl std::error::Error for DecomposeError {}

/// Branch state of the decomposition: found equations (triangular so far),
/// pending equations, and inequations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SystemTriple {
    pub found: Vec<Poly>,
    pub pending: Vec<Poly>,
    pub ineqs: Vec<Poly>,
}

/// A regular triangular set with its inequation product and parameter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Chain polynomials, ascending by leading variable.
    pub polys: Vec<Poly>,
    /// Product D of the branch inequations.
    pub ineq_product: Poly,
    /// Variables not led by any chain polynomial.
    pub params: Vec<Var>,
}

impl Chain {
    pub fn leaders(&self) -> Vec<Var> {
        self.polys
            .iter()
            .map(|p| p.leading_variable().expect("chain polynomials are nonconstant"))
            .collect()
    }

    pub fn is_triangular(&self) -> bool {
        let ls = self.leaders();
        ls.windows(2).all(|w| w[0] < w[1])
    }
}

struct WorkItem {
    triple: SystemTriple,
    /// Leading variable eliminated by the parent pass; the maximal pending
    /// leading variable must sink strictly below it (termination measure).
    level: Option<Var>,
}

/// Branch-exploration record collected when tracing is requested.
#[derive(Clone, Debug, Default)]
pub struct DecompTrace {
    /// Work-list states in visit order.
    pub visits: Vec<SystemTriple>,
    /// Number of one-variable eliminations performed.
    pub eliminations: u64,
}

/// Algorithm: algebraic triangular decomposition.
pub fn decompose(
    system: &[Poly],
    order: &VarOrder,
    cfg: &DecomposeConfig,
) -> Result<Vec<Chain>, DecomposeError> {
    decompose_impl(system, order, cfg, None)
}

/// As [`decompose`], recording the branch exploration.
pub fn decompose_traced(
    system: &[Poly],
    order: &VarOrder,
    cfg: &DecomposeConfig,
    trace: &mut DecompTrace,
) -> Result<Vec<Chain>, DecomposeError> {
    decompose_impl(system, order, cfg, Some(trace))
}

fn decompose_impl(
    system: &[Poly],
    order: &VarOrder,
    cfg: &DecomposeConfig,
    mut trace: Option<&mut DecompTrace>,
) -> Result<Vec<Chain>, DecomposeError> {
    let mut inputs: Vec<Poly> = Vec::new();
    for p in system {
        // algebraic equations are zero-set data: the squarefree part is an
        // equivalent, smaller equation
        let c = crate::poly_core::squarefree_bounded(&p.canonical());
        if c.is_zero() {
            continue;
        }
        if c.is_constant() {
            return Err(DecomposeError::Inconsistent);
        }
        if !inputs.contains(&c) {
            inputs.push(c);
        }
    }
    let k = inputs.len();
    if k == 0 {
        return Ok(vec![Chain {
            polys: Vec::new(),
            ineq_product: Poly::one(),
            params: order.base_vars(),
        }]);
    }
    let mut budget = Budget::new(cfg);
    let mut work: Vec<WorkItem> = vec![WorkItem {
        triple: normalize_triple(SystemTriple {
            found: Vec::new(),
            pending: inputs,
            ineqs: Vec::new(),
        }),
        level: None,
    }];
    let mut seen: BTreeSet<SystemTriple> = BTreeSet::new();
    let mut chains: Vec<Chain> = Vec::new();

    while let Some(WorkItem { triple, level }) = work.pop() {
        if !budget.step() {
            return Err(DecomposeError::BranchLimitExceeded);
        }
        if !seen.insert(triple.clone()) {
            continue;
        }
        if let Some(t) = trace.as_deref_mut() {
            t.visits.push(triple.clone());
        }
        if triple_dead(&triple) {
            continue;
        }
        if triple.found.len() > k {
            // dimension prune: such components are redundant in the cover
            continue;
        }
        if triple.pending.is_empty() {
            chains.push(make_chain(&triple, order));
            continue;
        }
        let x_gamma = triple
            .pending
            .iter()
            .filter_map(|p| p.max_var())
            .max()
            .expect("pending polynomials are nonconstant");
        if let Some(prev) = level {
            debug_assert!(x_gamma < prev, "pending level must strictly decrease");
        }
        let (ptilde, prest): (Vec<Poly>, Vec<Poly>) = triple
            .pending
            .iter()
            .cloned()
            .partition(|p| p.max_var() == Some(x_gamma));
        let (ntilde, nrest): (Vec<Poly>, Vec<Poly>) = triple
            .ineqs
            .iter()
            .cloned()
            .partition(|p| p.max_var().map(|v| v <= x_gamma).unwrap_or(true));
        let h = consumed_ineq_product(&ntilde);
        if let Some(t) = trace.as_deref_mut() {
            t.eliminations += 1;
        }
        let comps = match quasi_gcd(&ptilde, &h, x_gamma, &mut budget) {
            Ok(c) => c,
            Err(GcdError::BranchLimitExceeded) => {
                return Err(DecomposeError::BranchLimitExceeded)
            }
            Err(GcdError::MainVariableInCoefficients) => {
                unreachable!("inputs are filtered to the main variable level")
            }
        };
        for comp in comps {
            let mut found = triple.found.clone();
            if let Some(psi) = comp.psi {
                found.push(psi);
            }
            let mut u: Vec<Poly> = Vec::new();
            for e in comp.eqs.iter() {
                let e = crate::poly_core::squarefree_bounded(e);
                if !e.is_zero() && !u.contains(&e) {
                    u.push(e);
                }
            }
            for p in &prest {
                if !u.contains(p) {
                    u.push(p.clone());
                }
            }
            let mut ineqs = nrest.clone();
            let v = comp.ineq.clone();
            if u.is_empty() {
                push_ineq(&mut ineqs, &v);
                work.push(WorkItem {
                    triple: normalize_triple(SystemTriple { found, pending: u, ineqs }),
                    level: Some(x_gamma),
                });
                continue;
            }
            let x_eta = u
                .iter()
                .filter_map(|p| p.max_var())
                .max()
                .expect("u nonempty and nonconstant");
            let v_level = v.max_var();
            if v_level.map(|lv| lv <= x_eta).unwrap_or(true) {
                push_ineq(&mut ineqs, &v);
                work.push(WorkItem {
                    triple: normalize_triple(SystemTriple { found, pending: u, ineqs }),
                    level: Some(x_gamma),
                });
            } else {
                // lv(v) > x_eta: split v along its coefficients with respect
                // to the variables above x_eta, keeping v itself.
                for l in high_coefficients(&v, x_eta) {
                    let mut ineqs = ineqs.clone();
                    push_ineq(&mut ineqs, &v);
                    push_ineq(&mut ineqs, &l);
                    work.push(WorkItem {
                        triple: normalize_triple(SystemTriple {
                            found: found.clone(),
                            pending: u.clone(),
                            ineqs,
                        }),
                        level: Some(x_gamma),
                    });
                }
            }
        }
    }

    chains.sort_by(|a, b| a.polys.cmp(&b.polys).then(a.ineq_product.cmp(&b.ineq_product)));
    chains.dedup_by(|a, b| a.polys == b.polys);
    Ok(chains)
}

/// Coefficients of `v` grouped by its monomial part in variables above
/// `cutoff` (distinct, nonzero).
fn high_coefficients(v: &Poly, cutoff: Var) -> Vec<Poly> {
    let mut groups: std::collections::BTreeMap<Monomial, Poly> = Default::default();
    for (m, c) in v.terms() {
        let (high, low): (Vec<(Var, u32)>, Vec<(Var, u32)>) =
            m.pairs().iter().cloned().partition(|&(w, _)| w > cutoff);
        let key = Monomial::from_pairs(high);
        let entry = groups.entry(key).or_insert_with(Poly::zero);
        *entry = entry.add(&Poly::from_terms(vec![(Monomial::from_pairs(low), c.clone())]));
    }
    let mut out: Vec<Poly> = Vec::new();
    for (_, l) in groups {
        let l = l.canonical();
        if !l.is_zero() && !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

fn push_ineq(ineqs: &mut Vec<Poly>, v: &Poly) {
    let c = v.canonical();
    if c.is_zero() || c.is_constant() {
        return;
    }
    if !ineqs.contains(&c) {
        ineqs.push(c);
    }
}

pub(crate) fn normalize_triple(mut t: SystemTriple) -> SystemTriple {
    t.found.sort_by_key(|p| p.max_var());
    t.pending.retain(|p| !p.is_zero());
    t.pending = crate::quasi_gcd::reduce_equation_set(std::mem::take(&mut t.pending));
    t.ineqs.sort();
    t.ineqs.dedup();
    t
}

/// A branch is dead when an equation is a nonzero constant, when an
/// equation divides the inequation product (so it can never be both zero
/// and a factor of a nonzero product), or when the equations are certified
/// inconsistent.
pub(crate) fn triple_dead(t: &SystemTriple) -> bool {
    let eqs: Vec<&Poly> = t.found.iter().chain(t.pending.iter()).collect();
    if eqs.iter().any(|e| e.is_constant() && !e.is_zero()) {
        return true;
    }
    if !t.ineqs.is_empty() {
        if t.ineqs.iter().map(|p| p.num_terms()).sum::<usize>() <= 200 {
            let product = Poly::product(t.ineqs.iter());
            if eqs.iter().any(|e| product.divisible_by(e)) {
                return true;
            }
        } else if eqs
            .iter()
            .any(|e| t.ineqs.iter().any(|f| f.divisible_by(e)))
        {
            return true;
        }
    }
    certainly_empty(&t.pending)
}

/// Product of the consumed inequations, reduced factor-wise to squarefree
/// parts when cheap (the zero set is what matters downstream).
pub(crate) fn consumed_ineq_product(ntilde: &[Poly]) -> Poly {
    let mut factors: Vec<Poly> = Vec::new();
    for f in ntilde {
        let c = crate::casesplit_linalg::sqfree_bounded(f);
        if !c.is_constant() && !factors.contains(&c) {
            factors.push(c);
        }
    }
    Poly::product(factors.iter())
}

fn make_chain(t: &SystemTriple, order: &VarOrder) -> Chain {
    let mut polys = t.found.clone();
    polys.sort_by_key(|p| p.max_var());
    debug_assert!(
        polys.windows(2).all(|w| w[0].max_var() < w[1].max_var()),
        "found set must be triangular"
    );
    let leaders: Vec<Var> = polys.iter().filter_map(|p| p.max_var()).collect();
    let params = order
        .base_vars()
        .into_iter()
        .filter(|v| !leaders.contains(v))
        .collect();
    Chain {
        polys,
        ineq_product: Poly::product(t.ineqs.iter()),
        params,
    }
}

/// Certificate result for one chain.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub pass: bool,
    /// Per chain element: the iterated resultant of its initial against the
    /// preceding subchain. Nonzero witnesses certify regularity.
    pub witnesses: Vec<Poly>,
}

/// Check regularity by iterated resultants: for each element, the initial
/// reduced through the preceding subchain must stay nonzero.
pub fn chain_regularity_certificate(chain: &Chain) -> CertificateReport {
    let mut witnesses = Vec::with_capacity(chain.polys.len());
    let mut pass = true;
    for i in 0..chain.polys.len() {
        let init = chain.polys[i].initial().expect("chain polynomials are nonconstant");
        let mut w = init;
        for j in (0..i).rev() {
            if w.is_zero() {
                break;
            }
            let vj = chain.polys[j].leading_variable().expect("nonconstant");
            if w.degree(vj) > 0 {
                w = resultant(&w, &chain.polys[j], vj);
            }
        }
        if w.is_zero() {
            pass = false;
        }
        witnesses.push(w);
    }
    CertificateReport { pass, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::parse_poly;
    use num_rational::BigRational;
    use std::collections::BTreeMap;

    fn cfg() -> DecomposeConfig {
        DecomposeConfig::default()
    }

    #[test]
    fn decompose_paper_example() {
        // zero(xyz+1, x²+x) = zero(sat(x+1, xyz+1)), ineq product has xy
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        let f = parse_poly("x*y*z + 1", &ord).unwrap();
        let g = parse_poly("x^2 + x", &ord).unwrap();
        let chains = decompose(&[f.clone(), g], &ord, &cfg()).unwrap();
        assert_eq!(chains.len(), 1, "{:?}", chains);
        let c = &chains[0];
        assert_eq!(c.polys[0], parse_poly("x + 1", &ord).unwrap());
        assert_eq!(c.polys[1], f);
        let xy = parse_poly("x*y", &ord).unwrap();
        assert!(
            c.ineq_product.divisible_by(&xy),
            "xy must divide D = {:?}",
            c.ineq_product.to_string_with(&ord)
        );
        assert_eq!(c.params, vec![ord.var("y").unwrap()]);
        assert!(chain_regularity_certificate(c).pass);
    }

    #[test]
    fn decompose_single_linear() {
        let ord = VarOrder::algebraic(vec!["x"]);
        let f = parse_poly("x - 1", &ord).unwrap();
        let chains = decompose(&[f.clone()], &ord, &cfg()).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].polys, vec![f]);
        assert!(chains[0].ineq_product.is_one());
    }

    #[test]
    fn decompose_two_points() {
        // {x²−1, y−x}: solutions (1,1) and (−1,−1)
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let f = parse_poly("x^2 - 1", &ord).unwrap();
        let g = parse_poly("y - x", &ord).unwrap();
        let chains = decompose(&[f.clone(), g.clone()], &ord, &cfg()).unwrap();
        assert!(!chains.is_empty());
        for c in &chains {
            assert!(c.is_triangular());
            assert!(chain_regularity_certificate(c).pass);
        }
        // both solutions satisfy the polynomials of some chain exactly
        for xv in [1i64, -1] {
            let point: BTreeMap<Var, BigRational> = [
                (ord.var("x").unwrap(), BigRational::from_integer(xv.into())),
                (ord.var("y").unwrap(), BigRational::from_integer(xv.into())),
            ]
            .into_iter()
            .collect();
            assert!(
                chains.iter().any(|c| c
                    .polys
                    .iter()
                    .all(|p| p.eval_partial(&point).is_zero())),
                "point x=y={} must lie on some chain",
                xv
            );
        }
    }

    #[test]
    fn decompose_rejects_constants() {
        let ord = VarOrder::algebraic(vec!["x"]);
        assert_eq!(
            decompose(&[Poly::from_int(3)], &ord, &cfg()),
            Err(DecomposeError::Inconsistent)
        );
    }

    #[test]
    fn inconsistent_system_yields_no_chains() {
        // zero(xy+1, x) = ∅: the empty component is created by the quasi
        // GCD and dies downstream.
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let f = parse_poly("x*y + 1", &ord).unwrap();
        let g = parse_poly("x", &ord).unwrap();
        let chains = decompose(&[f, g], &ord, &cfg()).unwrap();
        assert!(chains.is_empty(), "{:?}", chains);
    }

    #[test]
    fn regularity_certificate_examples() {
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        // [x+1, xyz+1]: pass, witness an associate of y
        let chain = Chain {
            polys: vec![
                parse_poly("x + 1", &ord).unwrap(),
                parse_poly("x*y*z + 1", &ord).unwrap(),
            ],
            ineq_product: parse_poly("x*y", &ord).unwrap(),
            params: vec![ord.var("y").unwrap()],
        };
        let report = chain_regularity_certificate(&chain);
        assert!(report.pass);
        assert_eq!(
            report.witnesses[1].canonical(),
            parse_poly("y", &ord).unwrap()
        );

        // [x, xy−1]: fail (res(x, x, x) = 0)
        let chain = Chain {
            polys: vec![
                parse_poly("x", &ord).unwrap(),
                parse_poly("x*y - 1", &ord).unwrap(),
            ],
            ineq_product: Poly::one(),
            params: vec![ord.var("z").unwrap()],
        };
        let report = chain_regularity_certificate(&chain);
        assert!(!report.pass);
        assert!(report.witnesses[1].is_zero());

        // single element with unit initial: trivial pass
        let chain = Chain {
            polys: vec![parse_poly("y - x", &ord).unwrap()],
            ineq_product: Poly::one(),
            params: vec![ord.var("x").unwrap(), ord.var("z").unwrap()],
        };
        assert!(chain_regularity_certificate(&chain).pass);
    }

    #[test]
    fn termination_measure_and_budget() {
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let f = parse_poly("x*y^2 + x + 1", &ord).unwrap();
        let g = parse_poly("x^2*y - y + x", &ord).unwrap();
        // tiny budget must abort cleanly
        let tight = DecomposeConfig { max_branches: 3 };
        assert_eq!(
            decompose(&[f.clone(), g.clone()], &ord, &tight),
            Err(DecomposeError::BranchLimitExceeded)
        );
        // a reasonable budget finishes and yields triangular chains
        let chains = decompose(&[f, g], &ord, &cfg()).unwrap();
        assert!(!chains.is_empty());
        for c in &chains {
            assert!(c.is_triangular());
        }
    }
}
