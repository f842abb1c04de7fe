//! Brute-force solver for tiny zero-dimensional systems: resultant-based
//! elimination to univariate polynomials plus a root-lifting cascade, used
//! as an independent oracle for the decomposition.

use super::roots::complex_roots;
use super::VerifyError;
use crate::poly_core::{resultant, Poly, Var, VarOrder};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// Limits and knobs for the brute-force oracle.
#[derive(Clone, Debug)]
pub struct BruteOpts {
    pub seed: u64,
    /// Candidate coordinates above this magnitude are discarded.
    pub box_bound: f64,
    pub max_vars: usize,
    pub max_degree: u32,
}

impl Default for BruteOpts {
    fn default() -> Self {
        BruteOpts { seed: 0, box_bound: 1e4, max_vars: 3, max_degree: 4 }
    }
}

/// All complex solutions of a desk-scale system, found by eliminating the
/// highest variable with pairwise resultants and lifting roots level by
/// level. Every returned point satisfies the system to relative residual
/// 1e−6. Underdetermined systems are sliced with random hyperplanes, so the
/// returned points sample their solution sets.
pub fn brute_force_solutions(
    system: &[Poly],
    order: &VarOrder,
    opts: &BruteOpts,
) -> Result<Vec<BTreeMap<Var, Complex64>>, VerifyError> {
    let vars = order.base_vars();
    if vars.len() > opts.max_vars {
        return Err(VerifyError::TooLarge);
    }
    let polys: Vec<Poly> = system
        .iter()
        .map(|p| p.canonical())
        .filter(|p| !p.is_zero() && !p.is_constant())
        .collect();
    if system.iter().any(|p| p.is_constant() && !p.is_zero()) {
        return Ok(Vec::new());
    }
    if polys.iter().any(|p| p.total_degree() > opts.max_degree) {
        return Err(VerifyError::TooLarge);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut found: Vec<BTreeMap<Var, Complex64>> = Vec::new();
    let slices_needed = vars.len().saturating_sub(polys.len());
    let attempts = if slices_needed > 0 { 4 } else { 1 };
    for _ in 0..attempts {
        let mut sys = polys.clone();
        for _ in 0..slices_needed {
            sys.push(random_hyperplane(&vars, &mut rng));
        }
        for point in solve_square(&sys, &vars, &mut rng, opts) {
            if residual(system, &point) <= 1e-6 && in_box(&point, opts.box_bound) {
                if !found.iter().any(|q| distance(q, &point) < 1e-6) {
                    found.push(point);
                }
            }
        }
    }
    Ok(found)
}

fn random_hyperplane(vars: &[Var], rng: &mut ChaCha8Rng) -> Poly {
    let mut p = Poly::from_int(rng.gen_range(-5i64..=5));
    for &v in vars {
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-5i64..=5);
        }
        p = p.add(&Poly::var(v).scale_int(c));
    }
    p
}

/// Relative residual of the system at a full numeric point.
pub fn residual(system: &[Poly], point: &BTreeMap<Var, Complex64>) -> f64 {
    system
        .iter()
        .map(|p| p.eval_complex(point).norm() / p.coeff_scale())
        .fold(0.0, f64::max)
}

fn in_box(point: &BTreeMap<Var, Complex64>, bound: f64) -> bool {
    point.values().all(|v| v.norm() <= bound && v.is_finite())
}

fn distance(a: &BTreeMap<Var, Complex64>, b: &BTreeMap<Var, Complex64>) -> f64 {
    a.iter()
        .map(|(v, x)| (x - b.get(v).copied().unwrap_or_default()).norm())
        .fold(0.0, f64::max)
}

/// Elimination + lifting for a (near-)square system.
fn solve_square(
    sys: &[Poly],
    vars: &[Var],
    rng: &mut ChaCha8Rng,
    opts: &BruteOpts,
) -> Vec<BTreeMap<Var, Complex64>> {
    // levels[j] holds polynomials in vars[..=j]
    let n = vars.len();
    let mut levels: Vec<Vec<Poly>> = vec![Vec::new(); n];
    let mut current: Vec<Poly> = sys.to_vec();
    for j in (0..n).rev() {
        let v = vars[j];
        let (with_v, free): (Vec<Poly>, Vec<Poly>) =
            current.into_iter().partition(|p| p.degree(v) > 0);
        levels[j] = with_v.clone();
        let mut next: Vec<Poly> = free;
        for i in 0..with_v.len() {
            for k in (i + 1)..with_v.len() {
                let r = resultant(&with_v[i], &with_v[k], v).canonical();
                if !r.is_zero() && !r.is_constant() && !next.contains(&r) {
                    next.push(r.squarefree_part());
                }
            }
        }
        current = next;
    }
    // lift roots level by level
    let mut partials: Vec<BTreeMap<Var, Complex64>> = vec![BTreeMap::new()];
    for j in 0..n {
        let v = vars[j];
        let mut extended: Vec<BTreeMap<Var, Complex64>> = Vec::new();
        for point in partials {
            let mut candidates: Option<Vec<Complex64>> = None;
            // substitute the known coordinates; choose the nonzero
            // polynomial of minimal degree for the root set
            let mut best: Option<Vec<Complex64>> = None;
            for p in &levels[j] {
                let coeffs = numeric_coeffs(p, v, &point);
                let Some(coeffs) = coeffs else { continue };
                let top = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
                if top < 1e-10 {
                    continue; // vanishes identically at this partial point
                }
                if let Some(roots) = complex_roots(&coeffs) {
                    if best.as_ref().map(|b| roots.len() < b.len()).unwrap_or(true) {
                        best = Some(roots);
                    }
                }
            }
            if let Some(roots) = best {
                candidates = Some(roots);
            }
            let values = match candidates {
                Some(roots) => roots,
                None => {
                    // positive-dimensional fiber: sample it
                    vec![Complex64::new(
                        rng.gen_range(-4i32..=4) as f64,
                        0.0,
                    )]
                }
            };
            for val in values {
                if !val.is_finite() || val.norm() > opts.box_bound {
                    continue;
                }
                let mut q = point.clone();
                q.insert(v, val);
                extended.push(q);
            }
        }
        partials = extended;
        if partials.len() > 4000 {
            partials.truncate(4000);
        }
    }
    partials
}

/// Numeric coefficients of `p` in `v` after substituting `point`. `None`
/// when `p` involves an unassigned variable other than `v`.
fn numeric_coeffs(p: &Poly, v: Var, point: &BTreeMap<Var, Complex64>) -> Option<Vec<Complex64>> {
    let view = p.univariate_coeffs(v);
    let mut out = Vec::with_capacity(view.coeffs.len());
    for c in &view.coeffs {
        out.push(c.eval_complex_strict(point)?);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly_core::parse_poly;

    #[test]
    fn univariate_roots() {
        let ord = VarOrder::algebraic(vec!["x"]);
        let f = parse_poly("x^2 - 1", &ord).unwrap();
        let sols = brute_force_solutions(&[f], &ord, &BruteOpts::default()).unwrap();
        assert_eq!(sols.len(), 2);
        // {x² + x} → {0, −1}
        let f = parse_poly("x^2 + x", &ord).unwrap();
        let sols = brute_force_solutions(&[f], &ord, &BruteOpts::default()).unwrap();
        let mut re: Vec<f64> = sols
            .iter()
            .map(|p| p[&ord.var("x").unwrap()].re)
            .collect();
        re.sort_by(f64::total_cmp);
        assert!((re[0] + 1.0).abs() < 1e-8 && re[1].abs() < 1e-8);
    }

    #[test]
    fn circle_line_intersection() {
        // {x² + y² − 1, x − y} → ±(√2/2, √2/2)
        let ord = VarOrder::algebraic(vec!["x", "y"]);
        let f = parse_poly("x^2 + y^2 - 1", &ord).unwrap();
        let g = parse_poly("x - y", &ord).unwrap();
        let sols = brute_force_solutions(&[f, g], &ord, &BruteOpts::default()).unwrap();
        assert_eq!(sols.len(), 2);
        let s = 0.5f64.sqrt();
        let xs: Vec<f64> = sols.iter().map(|p| p[&ord.var("x").unwrap()].re).collect();
        assert!(xs.iter().any(|&x| (x - s).abs() < 1e-6));
        assert!(xs.iter().any(|&x| (x + s).abs() < 1e-6));
    }

    #[test]
    fn inconsistent_system() {
        let ord = VarOrder::algebraic(vec!["x"]);
        let f = parse_poly("x - 1", &ord).unwrap();
        let g = parse_poly("x - 2", &ord).unwrap();
        let sols = brute_force_solutions(&[f, g], &ord, &BruteOpts::default()).unwrap();
        assert!(sols.is_empty());
    }

    #[test]
    fn too_large_guard() {
        let ord = VarOrder::algebraic(vec!["x"]);
        let f = parse_poly("x^5 - 1", &ord).unwrap();
        assert_eq!(
            brute_force_solutions(&[f], &ord, &BruteOpts::default()).unwrap_err(),
            VerifyError::TooLarge
        );
    }
}
