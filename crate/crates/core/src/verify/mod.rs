//! Independent correctness oracles: numeric sampling of component
//! solutions, pseudo-remainder membership for saturation ideals, and a
//! brute-force solver for tiny systems.
//!
//! The sampling protocol operationalizes the decomposition equality
//! `zero(H) = ∪ zero(sat(A_q))`:
//! * forward — points sampled from each chain's quasi-generic locus
//!   `zero(A_q / D_q)` must satisfy every input polynomial;
//! * backward — every solution the brute-force oracle finds must lie on
//!   some chain.
//!
//! Membership via iterated pseudo-remainder is one-sided: a zero remainder
//! proves membership in the saturation ideal, a nonzero remainder proves
//! nothing.

mod brute;
mod roots;

pub use brute::{brute_force_solutions, residual, BruteOpts};
pub use roots::complex_roots;

use crate::algebraic_decomp::Chain;
use crate::diff_core::{d_prem, leader, separant, DiffChain};
use crate::poly_core::{Poly, Var, VarOrder};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Residual below which a sampled chain point is accepted as exact.
pub const CASCADE_TOL: f64 = 1e-9;
/// Residual below which an input polynomial counts as vanishing.
pub const ACCEPT_TOL: f64 = 1e-6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyError {
    /// No numeric point of the component was found within the retry budget
    /// (the component may be empty).
    NoPointsFound,
    /// The system exceeds the desk-scale limits of the oracle.
    TooLarge,
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::NoPointsFound => write!(f, "no points found (component may be empty)"),
            VerifyError::TooLarge => write!(f, "system too large for the brute-force oracle"),
        }
    }
}

impl std::error::Error for VerifyError {}

/// Verification summary. `forward` and `backward` are fractions in [0, 1];
/// both must be 1.0 for a passing decomposition. Deterministic for a fixed
/// seed.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub forward: f64,
    pub backward: f64,
    pub residual_max: f64,
    pub seed: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.forward == 1.0 && self.backward == 1.0
    }
}

/// Sampling configuration.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { samples: 50, seed: 0 }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Complex64 {
    let num = rng.gen_range(-9i32..=9) as f64;
    let den = rng.gen_range(1i32..=4) as f64;
    Complex64::new(num / den, 0.0)
}

/// Sample numeric points of `zero(chain / D)`: random rational parameter
/// values, leaders solved by a univariate complex root cascade, points with
/// `|D|` below tolerance or near a separant zero rejected. Every returned
/// point satisfies each chain polynomial to relative residual 1e−9.
pub fn sample_chain_points(
    chain: &Chain,
    n: usize,
    seed: u64,
) -> Result<Vec<BTreeMap<Var, Complex64>>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    let budget = 40 * n.max(1);
    'attempt: for _ in 0..budget {
        if points.len() >= n {
            break;
        }
        let mut point: BTreeMap<Var, Complex64> = BTreeMap::new();
        for &v in &chain.params {
            point.insert(v, random_rational(&mut rng));
        }
        for t in &chain.polys {
            let lead = t.leading_variable().expect("chain polynomials are nonconstant");
            let view = t.univariate_coeffs(lead);
            let mut coeffs = Vec::with_capacity(view.coeffs.len());
            for c in &view.coeffs {
                match c.eval_complex_strict(&point) {
                    Some(z) => coeffs.push(z),
                    None => continue 'attempt,
                }
            }
            let Some(roots) = complex_roots(&coeffs) else { continue 'attempt };
            let sep = t.partial(lead);
            let valid: Vec<Complex64> = roots
                .into_iter()
                .filter(|&r| {
                    let mut q = point.clone();
                    q.insert(lead, r);
                    sep.eval_complex(&q).norm() > ACCEPT_TOL
                })
                .collect();
            if valid.is_empty() {
                continue 'attempt;
            }
            let pick = valid[rng.gen_range(0..valid.len())];
            point.insert(lead, pick);
        }
        if residual(&chain.polys, &point) > CASCADE_TOL {
            continue;
        }
        if chain.ineq_product.eval_complex(&point).norm() <= ACCEPT_TOL {
            continue;
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(VerifyError::NoPointsFound);
    }
    Ok(points)
}

/// Saturation-ideal membership by iterated pseudo-remainder, descending the
/// chain. A `true` answer is a proof; `false` means "not proven".
pub fn sat_membership(f: &Poly, chain: &Chain) -> bool {
    let mut r = f.clone();
    for t in chain.polys.iter().rev() {
        if r.is_zero() {
            return true;
        }
        let v = t.leading_variable().expect("chain polynomials are nonconstant");
        if r.degree(v) >= t.degree(v) {
            let (rr, _) = r.pseudo_remainder(t, v).expect("positive degree in leader");
            r = rr;
        }
    }
    r.is_zero()
}

/// Check a full algebraic decomposition by forward sampling and backward
/// capture of brute-force solutions.
pub fn check_decomposition(
    system: &[Poly],
    chains: &[Chain],
    order: &VarOrder,
    cfg: &VerifyConfig,
) -> VerifyReport {
    let mut total = 0usize;
    let mut good = 0usize;
    let mut residual_max: f64 = 0.0;
    for (i, chain) in chains.iter().enumerate() {
        let per_chain = (cfg.samples / chains.len().max(1)).max(5);
        match sample_chain_points(chain, per_chain, cfg.seed.wrapping_add(i as u64)) {
            Ok(points) => {
                for p in points {
                    total += 1;
                    let r = residual(system, &p);
                    if r <= ACCEPT_TOL {
                        good += 1;
                        residual_max = residual_max.max(r);
                    }
                }
            }
            Err(VerifyError::NoPointsFound) => {
                // possibly empty component: contributes no samples
            }
            Err(VerifyError::TooLarge) => unreachable!(),
        }
    }
    let forward = if total == 0 { 1.0 } else { good as f64 / total as f64 };

    let opts = BruteOpts { seed: cfg.seed, ..BruteOpts::default() };
    let backward = match brute_force_solutions(system, order, &opts) {
        Ok(solutions) if !solutions.is_empty() => {
            let captured = solutions
                .iter()
                .filter(|s| {
                    chains.iter().any(|c| residual(&c.polys, s) <= ACCEPT_TOL)
                })
                .count();
            captured as f64 / solutions.len() as f64
        }
        _ => 1.0, // no oracle solutions to check against
    };
    VerifyReport { forward, backward, residual_max, seed: cfg.seed }
}

/// Sample numeric jet points of `zero(chain / D)` for a differential chain:
/// parameters and under-order coordinates receive random rational jet
/// coefficients; each leader is solved from its chain polynomial and
/// prolonged linearly through the separant.
pub fn sample_dchain_points(
    chain: &DiffChain,
    system: &[Poly],
    n: usize,
    seed: u64,
) -> Result<Vec<BTreeMap<Var, Complex64>>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // jet length: enough orders for every polynomial we evaluate
    let max_ord = chain
        .polys
        .iter()
        .chain(system.iter())
        .map(crate::diff_decomp::max_order)
        .max()
        .unwrap_or(0);
    let jet_len = 2 * max_ord + 4;
    // which classes are led, and by which chain element
    let mut led: BTreeMap<u32, &Poly> = BTreeMap::new();
    for t in &chain.polys {
        if let Ok(Var::Deriv { base, .. }) = leader(t) {
            led.insert(base, t);
        }
    }
    let all_bases: Vec<u32> = {
        let mut bs: Vec<u32> = chain.params.clone();
        bs.extend(led.keys().cloned());
        bs.sort();
        bs.dedup();
        bs
    };
    let mut points = Vec::new();
    let budget = 40 * n.max(1);
    'attempt: for _ in 0..budget {
        if points.len() >= n {
            break;
        }
        let mut point: BTreeMap<Var, Complex64> = BTreeMap::new();
        for &b in &all_bases {
            match led.get(&b) {
                None => {
                    for o in 0..=jet_len {
                        point.insert(Var::Deriv { base: b, order: o }, random_rational(&mut rng));
                    }
                }
                Some(t) => {
                    let Ok(Var::Deriv { base: _, order: gamma }) = leader(t) else {
                        continue 'attempt;
                    };
                    for o in 0..gamma {
                        point.insert(Var::Deriv { base: b, order: o }, random_rational(&mut rng));
                    }
                    // solve T for the leader
                    let lead = Var::Deriv { base: b, order: gamma };
                    let view = t.univariate_coeffs(lead);
                    let mut coeffs = Vec::with_capacity(view.coeffs.len());
                    for c in &view.coeffs {
                        match c.eval_complex_strict(&point) {
                            Some(z) => coeffs.push(z),
                            None => continue 'attempt,
                        }
                    }
                    let Some(roots) = complex_roots(&coeffs) else { continue 'attempt };
                    let sep = separant(t).expect("chain polynomials are nonconstant");
                    let valid: Vec<Complex64> = roots
                        .into_iter()
                        .filter(|&r| {
                            let mut q = point.clone();
                            q.insert(lead, r);
                            sep.eval_complex_strict(&q)
                                .map(|s| s.norm() > ACCEPT_TOL)
                                .unwrap_or(false)
                        })
                        .collect();
                    if valid.is_empty() {
                        continue 'attempt;
                    }
                    point.insert(lead, valid[rng.gen_range(0..valid.len())]);
                    // prolong: T^(s) is linear in the next derivative with
                    // coefficient S
                    for s in 1..=(jet_len.saturating_sub(gamma)) {
                        let prolonged = crate::diff_core::differentiate(t, s);
                        let v = Var::Deriv { base: b, order: gamma + s };
                        let sval = match sep.eval_complex_strict(&point) {
                            Some(z) if z.norm() > 1e-12 => z,
                            _ => continue 'attempt,
                        };
                        let mut q = point.clone();
                        q.insert(v, Complex64::new(0.0, 0.0));
                        let Some(rest) = prolonged.eval_complex_strict(&q) else {
                            // references jets beyond the computed length
                            break;
                        };
                        point.insert(v, -rest / sval);
                    }
                }
            }
        }
        // certify the chain residual and the inequation
        if residual(&chain.polys, &point) > CASCADE_TOL {
            continue;
        }
        match chain.ineq_product.eval_complex_strict(&point) {
            Some(z) if z.norm() > ACCEPT_TOL => {}
            _ => continue,
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(VerifyError::NoPointsFound);
    }
    Ok(points)
}

/// Check a differential decomposition: forward jet sampling per chain, and
/// membership coverage backward (every input polynomial reduces to zero by
/// some chain).
pub fn check_ddecomposition(
    system: &[Poly],
    chains: &[DiffChain],
    cfg: &VerifyConfig,
) -> VerifyReport {
    let mut total = 0usize;
    let mut good = 0usize;
    let mut residual_max: f64 = 0.0;
    for (i, chain) in chains.iter().enumerate() {
        let per_chain = (cfg.samples / chains.len().max(1)).max(5);
        match sample_dchain_points(chain, system, per_chain, cfg.seed.wrapping_add(i as u64)) {
            Ok(points) => {
                for p in points {
                    total += 1;
                    let r = residual(system, &p);
                    if r <= ACCEPT_TOL {
                        good += 1;
                        residual_max = residual_max.max(r);
                    }
                }
            }
            Err(_) => {}
        }
    }
    let forward = if total == 0 { 1.0 } else { good as f64 / total as f64 };
    let covered = system
        .iter()
        .filter(|f| chains.iter().any(|c| d_prem(f, &c.polys).is_zero()))
        .count();
    let backward =
        if system.is_empty() { 1.0 } else { covered as f64 / system.len() as f64 };
    VerifyReport { forward, backward, residual_max, seed: cfg.seed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic_decomp::{decompose, Chain};
    use crate::config::DecomposeConfig;
    use crate::diff_decomp::ddecompose;
    use crate::poly_core::parse_poly;

    #[test]
    fn sample_triangular_chain() {
        // chain [x+1, xyz+1], D = xy: y free, x = −1, z = 1/y
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        let chain = Chain {
            polys: vec![
                parse_poly("x + 1", &ord).unwrap(),
                parse_poly("x*y*z + 1", &ord).unwrap(),
            ],
            ineq_product: parse_poly("x*y", &ord).unwrap(),
            params: vec![ord.var("y").unwrap()],
        };
        let points = sample_chain_points(&chain, 5, 0).unwrap();
        assert!(!points.is_empty());
        for p in &points {
            let x = p[&ord.var("x").unwrap()];
            assert!((x - Complex64::new(-1.0, 0.0)).norm() < 1e-9);
            let y = p[&ord.var("y").unwrap()];
            let z = p[&ord.var("z").unwrap()];
            assert!((x * y * z + Complex64::new(1.0, 0.0)).norm() < 1e-8);
        }
    }

    #[test]
    fn sample_trivial_chains() {
        let ord = VarOrder::algebraic(vec!["x"]);
        let chain = Chain {
            polys: vec![parse_poly("x - 1", &ord).unwrap()],
            ineq_product: Poly::one(),
            params: vec![],
        };
        let points = sample_chain_points(&chain, 3, 1).unwrap();
        assert!((points[0][&ord.var("x").unwrap()] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn membership_examples() {
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        let chain = Chain {
            polys: vec![
                parse_poly("x + 1", &ord).unwrap(),
                parse_poly("x*y*z + 1", &ord).unwrap(),
            ],
            ineq_product: parse_poly("x*y", &ord).unwrap(),
            params: vec![ord.var("y").unwrap()],
        };
        assert!(sat_membership(&parse_poly("x*y*z + 1", &ord).unwrap(), &chain));
        assert!(sat_membership(&parse_poly("x^2 + x", &ord).unwrap(), &chain));
        assert!(!sat_membership(&parse_poly("y", &ord).unwrap(), &chain));
    }

    #[test]
    fn membership_closed_under_multiplication() {
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        let chain = Chain {
            polys: vec![
                parse_poly("x + 1", &ord).unwrap(),
                parse_poly("x*y*z + 1", &ord).unwrap(),
            ],
            ineq_product: parse_poly("x*y", &ord).unwrap(),
            params: vec![ord.var("y").unwrap()],
        };
        let member = parse_poly("x^2 + x", &ord).unwrap();
        for g in ["y^2 - z", "x + y + z", "3*z^2 - 1/2*x"] {
            let g = parse_poly(g, &ord).unwrap();
            assert!(
                sat_membership(&member.mul(&g), &chain),
                "f·g must stay a member for g = {:?}",
                g
            );
        }
    }

    #[test]
    fn check_paper_decomposition() {
        let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
        let sys = vec![
            parse_poly("x*y*z + 1", &ord).unwrap(),
            parse_poly("x^2 + x", &ord).unwrap(),
        ];
        let chains = decompose(&sys, &ord, &DecomposeConfig::default()).unwrap();
        let report = check_decomposition(&sys, &chains, &ord, &VerifyConfig::default());
        assert_eq!(report.forward, 1.0, "{:?}", report);
        assert_eq!(report.backward, 1.0, "{:?}", report);
    }

    #[test]
    fn broken_decomposition_fails_backward() {
        // dropping one chain must surface as backward < 1.0
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let sys = vec![
            parse_poly("x^2 - 1", &ord).unwrap(),
            parse_poly("y - x", &ord).unwrap(),
        ];
        let chains = decompose(&sys, &ord, &DecomposeConfig::default()).unwrap();
        let report = check_decomposition(&sys, &chains, &ord, &VerifyConfig::default());
        assert!(report.passed(), "{:?}", report);
        // negative control: replace the chains by one fake chain at x = 1 only
        let fake = vec![Chain {
            polys: vec![
                parse_poly("x - 1", &ord).unwrap(),
                parse_poly("y - 1", &ord).unwrap(),
            ],
            ineq_product: Poly::one(),
            params: vec![],
        }];
        let report = check_decomposition(&sys, &fake, &ord, &VerifyConfig::default());
        assert!(report.backward < 1.0, "{:?}", report);
    }

    #[test]
    fn check_differential_examples() {
        let ord = VarOrder::differential(vec!["x", "y"]);
        let sys = vec![parse_poly("x*y^2", &ord).unwrap()];
        let chains = ddecompose(&sys, &ord, &DecomposeConfig::default()).unwrap();
        let report = check_ddecomposition(&sys, &chains, &VerifyConfig::default());
        assert_eq!(report.forward, 1.0, "{:?}", report);
        assert_eq!(report.backward, 1.0, "{:?}", report);
    }

    #[test]
    fn jet_sampling_satisfies_input() {
        let ord = VarOrder::differential(vec!["x", "y"]);
        let f = parse_poly("y'^2 - x*y^2", &ord).unwrap();
        let chains = ddecompose(&[f.clone()], &ord, &DecomposeConfig::default()).unwrap();
        let report = check_ddecomposition(&[f], &chains, &VerifyConfig::default());
        assert_eq!(report.forward, 1.0, "{:?}", report);
    }

    #[test]
    fn report_serializes() {
        let r = VerifyReport { forward: 1.0, backward: 1.0, residual_max: 1e-12, seed: 0 };
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"forward\""));
        assert!(json.contains("\"seed\""));
    }
}
