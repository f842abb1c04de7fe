//! Decomposition of an ordinary differential polynomial system into
//! saturated triangular chains:
//!
//! ```text
//! zero(h_1, ..., h_k) = ∪_q zero(dsat(A_q))
//! ```
//!
//! Each pass eliminates the maximal leader with the squarefree quasi GCD,
//! treating derivative variables as algebraic. The squarefree guarantee
//! makes every separant nonzero on its component, which is what turns the
//! resulting chains into saturated (not merely regular) triangular sets.
//! Components whose equations still involve the eliminated indeterminate at
//! lower orders are split with SPLIT and reduced with DPM before being
//! queued again.

use crate::algebraic_decomp::{normalize_triple, triple_dead, DecomposeError, SystemTriple};
use crate::config::{Budget, DecomposeConfig};
use crate::diff_core::{
    class, differentiate, dpm, leader, separant, DiffChain, DiffError,
};
use crate::poly_core::{resultant, Monomial, Poly, Var, VarOrder};
use crate::quasi_gcd::{squarefree_quasi_gcd, GcdError};
use std::collections::BTreeSet;

struct WorkItem {
    triple: SystemTriple,
    /// Leader eliminated by the parent pass (termination measure).
    level: Option<Var>,
}

/// Algorithm: differential triangular decomposition.
pub fn ddecompose(
    system: &[Poly],
    order: &VarOrder,
    cfg: &DecomposeConfig,
) -> Result<Vec<DiffChain>, DecomposeError> {
    ddecompose_impl(system, order, cfg, None)
}

/// As [`ddecompose`], recording the branch exploration.
pub fn ddecompose_traced(
    system: &[Poly],
    order: &VarOrder,
    cfg: &DecomposeConfig,
    trace: &mut crate::algebraic_decomp::DecompTrace,
) -> Result<Vec<DiffChain>, DecomposeError> {
    ddecompose_impl(system, order, cfg, Some(trace))
}

fn ddecompose_impl(
    system: &[Poly],
    order: &VarOrder,
    cfg: &DecomposeConfig,
    mut trace: Option<&mut crate::algebraic_decomp::DecompTrace>,
) -> Result<Vec<DiffChain>, DecomposeError> {
    let mut inputs: Vec<Poly> = Vec::new();
    for p in system {
        let c = p.canonical();
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
    if inputs.is_empty() {
        return Ok(vec![DiffChain {
            polys: Vec::new(),
            ineq_product: Poly::one(),
            params: (0..order.len() as u32).collect(),
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
    let mut chains: Vec<DiffChain> = Vec::new();

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
        if triple.pending.is_empty() {
            chains.push(make_dchain(&triple, order));
            continue;
        }
        let lead_var = triple
            .pending
            .iter()
            .filter_map(|p| p.max_var())
            .max()
            .expect("pending polynomials are nonconstant");
        let Var::Deriv { base: alpha, .. } = lead_var else {
            unreachable!("differential polynomials use derivative variables")
        };
        if let Some(prev) = level {
            debug_assert!(lead_var < prev, "pending leader must strictly decrease");
        }
        let (ptilde, prest): (Vec<Poly>, Vec<Poly>) = triple
            .pending
            .iter()
            .cloned()
            .partition(|p| p.max_var() == Some(lead_var));
        let (ntilde, nrest): (Vec<Poly>, Vec<Poly>) = triple
            .ineqs
            .iter()
            .cloned()
            .partition(|p| p.max_var().map(|v| v <= lead_var).unwrap_or(true));
        let h = crate::algebraic_decomp::consumed_ineq_product(&ntilde);
        if let Some(t) = trace.as_deref_mut() {
            t.eliminations += 1;
        }
        let comps = match squarefree_quasi_gcd(&ptilde, &h, lead_var, &mut budget) {
            Ok(c) => c,
            Err(GcdError::BranchLimitExceeded) => {
                return Err(DecomposeError::BranchLimitExceeded)
            }
            Err(GcdError::MainVariableInCoefficients) => {
                unreachable!("inputs are filtered to the leader level")
            }
        };
        for comp in comps {
            let w: Option<Poly> = comp.psi;
            let mut u = comp.eqs;
            for p in &prest {
                if !u.contains(p) {
                    u.push(p.clone());
                }
            }
            let v = comp.ineq;
            if u.is_empty() {
                // finished component: chain = found ∪ {ψ}
                let mut found = triple.found.clone();
                found.extend(w.clone());
                let mut ineqs = nrest.clone();
                push_ineq(&mut ineqs, &v);
                work.push(WorkItem {
                    triple: normalize_triple(SystemTriple { found, pending: Vec::new(), ineqs }),
                    level: Some(lead_var),
                });
                continue;
            }
            // split the remaining equations along y_alpha
            for sc in crate::diff_core::split(&u, alpha) {
                if !budget.step() {
                    return Err(DecomposeError::BranchLimitExceeded);
                }
                match (&sc.theta, &w) {
                    (Some(_), _) => {
                        // derivative case: reduce with DPM around the pivot
                        let g = sc.polys[0].clone();
                        let mut fs: Vec<Poly> = Vec::new();
                        fs.extend(w.clone());
                        fs.extend(sc.polys.iter().skip(1).cloned());
                        let (reduced, new_ineq) = match dpm(&g, &fs, &v) {
                            Ok(out) => (out.reduced, out.ineq),
                            Err(DiffError::BadLeader) => {
                                // nothing reaches above the pivot: keep the
                                // system, record only the separant condition
                                let mut rs = vec![g.clone()];
                                rs.extend(fs.iter().cloned());
                                let sep = separant(&g).expect("pivot is nonconstant");
                                (rs, v.mul(&sep))
                            }
                            Err(DiffError::ConstantPolynomial) => {
                                unreachable!("split pivots are nonconstant")
                            }
                        };
                        let mut ineqs = nrest.clone();
                        push_ineq(&mut ineqs, &new_ineq);
                        work.push(WorkItem {
                            triple: normalize_triple(SystemTriple {
                                found: triple.found.clone(),
                                pending: reduced,
                                ineqs,
                            }),
                            level: Some(lead_var),
                        });
                    }
                    (None, _) => {
                        // coefficient case: Γ is free of y_alpha
                        let gamma_eqs = sc.polys.clone();
                        let mut found = triple.found.clone();
                        found.extend(w.clone());
                        let max_ld = gamma_eqs.iter().filter_map(|p| p.max_var()).max();
                        let v_ld = v.max_var();
                        let below = match (v_ld, max_ld) {
                            (None, _) => true,
                            (Some(lv), Some(ml)) => lv <= ml,
                            (Some(_), None) => false,
                        };
                        if below || gamma_eqs.is_empty() {
                            let mut ineqs = nrest.clone();
                            push_ineq(&mut ineqs, &v);
                            work.push(WorkItem {
                                triple: normalize_triple(SystemTriple {
                                    found,
                                    pending: gamma_eqs,
                                    ineqs,
                                }),
                                level: Some(lead_var),
                            });
                        } else {
                            // ld(v) above Γ: split v along its coefficients
                            // in the derivatives ranked above Γ's leaders
                            let cutoff = max_ld.expect("nonempty Γ");
                            for l in high_coefficients(&v, cutoff) {
                                let mut ineqs = nrest.clone();
                                push_ineq(&mut ineqs, &v);
                                push_ineq(&mut ineqs, &l);
                                work.push(WorkItem {
                                    triple: normalize_triple(SystemTriple {
                                        found: found.clone(),
                                        pending: gamma_eqs.clone(),
                                        ineqs,
                                    }),
                                    level: Some(lead_var),
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    chains.sort_by(|a, b| a.polys.cmp(&b.polys).then(a.ineq_product.cmp(&b.ineq_product)));
    chains.dedup_by(|a, b| a.polys == b.polys);
    Ok(chains)
}

/// Coefficients of `v` grouped by its monomial part in variables ranked
/// above `cutoff` (distinct, nonzero).
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

fn make_dchain(t: &SystemTriple, order: &VarOrder) -> DiffChain {
    let mut polys = t.found.clone();
    polys.sort_by_key(|p| p.max_var());
    debug_assert!(
        polys.windows(2).all(|w| class(&w[0]) < class(&w[1])),
        "found set must have pairwise distinct classes"
    );
    let classes: Vec<u32> = polys.iter().map(class).collect();
    let params = (0..order.len() as u32)
        .filter(|b| !classes.contains(&(b + 1)))
        .collect();
    DiffChain {
        polys,
        ineq_product: Poly::product(t.ineqs.iter()),
        params,
    }
}

/// Certificate result for one differential chain.
#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub pass: bool,
    /// Per chain element: iterated-resultant witnesses for the initial and
    /// the separant. Nonzero witnesses certify saturation.
    pub init_witnesses: Vec<Poly>,
    pub sep_witnesses: Vec<Poly>,
}

/// Check that every initial and separant is invertible with respect to the
/// chain, treating derivatives as algebraic variables after prolonging the
/// chain elements as far as the target polynomial requires.
pub fn dchain_saturation_certificate(chain: &DiffChain) -> SaturationReport {
    let mut init_witnesses = Vec::new();
    let mut sep_witnesses = Vec::new();
    let mut pass = true;
    for i in 0..chain.polys.len() {
        let t = &chain.polys[i];
        let init = t.initial().expect("chain polynomials are nonconstant");
        let iw = invertibility_witness(&init, &chain.polys[..i]);
        let sep = separant(t).expect("chain polynomials are nonconstant");
        let sw = invertibility_witness(&sep, &chain.polys[..=i]);
        if iw.is_zero() || sw.is_zero() {
            pass = false;
        }
        init_witnesses.push(iw);
        sep_witnesses.push(sw);
    }
    SaturationReport { pass, init_witnesses, sep_witnesses }
}

/// Eliminate every chain-reducible derivative from `target` by resultants
/// against the (prolonged) chain elements, highest variable first. A
/// nonzero final witness lies in the ideal generated by `target` and the
/// prolonged chain, and involves only under-order and parameter jets.
fn invertibility_witness(target: &Poly, prefix: &[Poly]) -> Poly {
    let mut w = target.clone();
    loop {
        if w.is_zero() || w.is_constant() {
            return w;
        }
        let mut reducible: Option<(Var, &Poly, u32)> = None;
        for v in w.vars().into_iter().rev() {
            let Var::Deriv { base, order } = v else { continue };
            for t in prefix {
                if let Ok(Var::Deriv { base: tb, order: to }) = leader(t) {
                    if tb == base && order >= to {
                        reducible = Some((v, t, order - to));
                        break;
                    }
                }
            }
            if reducible.is_some() {
                break;
            }
        }
        let Some((v, t, s)) = reducible else { return w };
        let elim = differentiate(t, s);
        w = resultant(&w, &elim, v);
    }
}

/// Weak order-bound sanity check: the maximal derivative order occurring in
/// a polynomial.
pub fn max_order(p: &Poly) -> u32 {
    p.vars()
        .into_iter()
        .filter_map(|v| match v {
            Var::Deriv { order, .. } => Some(order),
            _ => None,
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::parse_poly;

    fn cfg() -> DecomposeConfig {
        DecomposeConfig::default()
    }

    fn ord2() -> VarOrder {
        VarOrder::differential(vec!["x", "y"])
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ord2()).unwrap()
    }

    #[test]
    fn ddecompose_product_example() {
        // zero(x·y²) = zero(x) ∪ zero(y)
        let chains = ddecompose(&[p("x*y^2")], &ord2(), &cfg()).unwrap();
        let polys: Vec<Vec<Poly>> = chains.iter().map(|c| c.polys.clone()).collect();
        assert_eq!(polys, vec![vec![p("x")], vec![p("y")]], "{:?}", chains);
        for c in &chains {
            assert!(dchain_saturation_certificate(c).pass);
        }
    }

    #[test]
    fn ddecompose_separant_split_example() {
        // zero(y'² − x·y²) = zero(sat(f)) ∪ zero(x, y') ∪ zero(y)
        let f = p("y'^2 - x*y^2");
        let chains = ddecompose(&[f.clone()], &ord2(), &cfg()).unwrap();
        let polys: Vec<Vec<Poly>> = chains.iter().map(|c| c.polys.clone()).collect();
        assert_eq!(
            polys,
            vec![vec![p("x"), p("y'")], vec![p("y")], vec![f.clone()]],
            "{:#?}",
            chains
        );
        // the generic component excludes x·y² = 0
        let generic = chains.iter().find(|c| c.polys == vec![f.clone()]).unwrap();
        assert_eq!(
            generic.ineq_product.squarefree_part(),
            p("x*y^2").squarefree_part()
        );
        for c in &chains {
            assert!(c.is_triangular());
            assert!(
                dchain_saturation_certificate(c).pass,
                "saturation certificate failed for {:?}",
                c
            );
        }
    }

    #[test]
    fn ddecompose_single_chain() {
        let chains = ddecompose(&[p("y' - 1")], &ord2(), &cfg()).unwrap();
        assert_eq!(chains.len(), 1);
        assert_eq!(chains[0].polys, vec![p("y' - 1")]);
        assert!(chains[0].ineq_product.is_one());
        assert_eq!(chains[0].params, vec![0]);
    }

    #[test]
    fn saturation_certificate_examples() {
        // [y'² − x·y²]: separant witness res(2y', f, y') = −4xy² ≠ 0
        let chain = DiffChain {
            polys: vec![p("y'^2 - x*y^2")],
            ineq_product: p("x*y^2"),
            params: vec![0],
        };
        let report = dchain_saturation_certificate(&chain);
        assert!(report.pass);
        assert_eq!(report.sep_witnesses[0].canonical(), p("x*y^2"));

        // [y]: separant 1, trivial pass
        let chain = DiffChain { polys: vec![p("y")], ineq_product: Poly::one(), params: vec![0] };
        assert!(dchain_saturation_certificate(&chain).pass);

        // [y²]: separant 2y, res(2y, y², y) = 0: fail
        let chain = DiffChain { polys: vec![p("y^2")], ineq_product: Poly::one(), params: vec![0] };
        let report = dchain_saturation_certificate(&chain);
        assert!(!report.pass);
        assert!(report.sep_witnesses[0].is_zero());
    }

    #[test]
    fn order_bound_sanity() {
        // n = 2, R = 2 input: outputs stay within order ≤ 2^n·R = 8
        let f = p("y'' - x'*y");
        let chains = ddecompose(&[f], &ord2(), &cfg()).unwrap();
        assert!(!chains.is_empty());
        for c in &chains {
            for q in &c.polys {
                assert!(max_order(q) <= 8);
            }
        }
    }
}
