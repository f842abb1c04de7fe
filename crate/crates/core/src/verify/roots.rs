//! Univariate complex root finding (Durand–Kerner) with residual checks.

use num_complex::Complex64;

/// All complex roots of `Σ coeffs[i]·z^i` (leading coefficient nonzero in
/// the numeric sense). Returns `None` when the iteration fails to converge
/// to certified residuals.
pub fn complex_roots(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }
    let mut coeffs: Vec<Complex64> = coeffs.iter().map(|c| c / scale).collect();
    while coeffs.last().map(|c| c.norm() < 1e-12).unwrap_or(false) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Some(Vec::new());
    }
    // strip zero roots
    let mut zero_roots = 0;
    while coeffs.first().map(|c| c.norm() < 1e-13).unwrap_or(false) {
        coeffs.remove(0);
        zero_roots += 1;
    }
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let mut roots: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(0.4, 0.9).powu(i as u32 + 1))
        .collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    for _ in 0..600 {
        let mut delta: f64 = 0.0;
        for i in 0..n {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() < 1e-300 {
                // perturb coincident iterates
                roots[i] += Complex64::new(1e-6, 2e-6);
                delta = f64::MAX;
                continue;
            }
            let step = eval(zi) / denom;
            roots[i] = zi - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    // residual certification on the monic polynomial
    let root_scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    for &r in &roots {
        if eval(r).norm() > 1e-8 * root_scale.powi(n as i32) {
            return None;
        }
    }
    for _ in 0..zero_roots {
        roots.push(Complex64::new(0.0, 0.0));
    }
    Some(roots)
}
