//! Ring arithmetic, substitution and evaluation.

use super::{Monomial, Poly, Var};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use std::collections::BTreeMap;

impl Poly {
    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(acc) => {
                    *acc += c;
                    if acc.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Poly { terms }
    }

    pub fn neg(&self) -> Poly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Poly { terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let terms = self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect();
        Poly { terms }
    }

    pub fn scale_int(&self, n: i64) -> Poly {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                let entry = terms.entry(m).or_insert_with(BigRational::zero);
                *entry += c;
                if entry.is_zero() {
                    // remove later in one pass
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(ma, ca)| (ma.mul(m), ca * c))
            .collect();
        Poly { terms }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to an (algebraic) variable.
    pub fn partial(&self, v: Var) -> Poly {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut pairs: Vec<(Var, u32)> = m
                .pairs()
                .iter()
                .cloned()
                .filter(|&(w, _)| w != v)
                .collect();
            if e > 1 {
                pairs.push((v, e - 1));
            }
            out.push((
                Monomial::from_pairs(pairs),
                c * BigRational::from_integer(BigInt::from(e)),
            ));
        }
        Poly::from_terms(out)
    }

    /// Substitute a polynomial for a variable.
    pub fn substitute(&self, v: Var, value: &Poly) -> Poly {
        let view = self.univariate_coeffs(v);
        // Horner evaluation.
        let mut acc = Poly::zero();
        for c in view.coeffs.iter().rev() {
            acc = acc.mul(value).add(c);
        }
        acc
    }

    /// Substitute `v := num/den` and clear denominators:
    /// returns `Σ coeffs[j]·num^j·den^(d-j)` where `d = deg(self, v)`.
    pub fn substitute_clearing(&self, v: Var, num: &Poly, den: &Poly) -> Poly {
        let view = self.univariate_coeffs(v);
        let d = view.coeffs.len().saturating_sub(1);
        let mut acc = Poly::zero();
        let mut num_pow = Poly::one();
        // precompute den powers descending
        let mut den_pows = vec![Poly::one(); d + 1];
        for j in (0..d).rev() {
            den_pows[j] = den_pows[j + 1].mul(den);
        }
        for (j, c) in view.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc.add(&c.mul(&num_pow).mul(&den_pows[j]));
            }
            if j < d {
                num_pow = num_pow.mul(num);
            }
        }
        acc
    }

    /// Exact rational evaluation at a (partial) point; variables not in the
    /// map stay symbolic.
    pub fn eval_partial(&self, point: &BTreeMap<Var, BigRational>) -> Poly {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut pairs = Vec::new();
            for &(v, e) in m.pairs() {
                match point.get(&v) {
                    Some(val) => {
                        let mut p = BigRational::from_integer(BigInt::from(1));
                        for _ in 0..e {
                            p *= val;
                        }
                        coeff *= p;
                    }
                    None => pairs.push((v, e)),
                }
            }
            out.push((Monomial::from_pairs(pairs), coeff));
        }
        Poly::from_terms(out)
    }

    /// Numeric evaluation returning `None` when some variable of `self` is
    /// unassigned.
    pub fn eval_complex_strict(&self, point: &BTreeMap<Var, Complex64>) -> Option<Complex64> {
        for v in self.vars() {
            if !point.contains_key(&v) {
                return None;
            }
        }
        Some(self.eval_complex(point))
    }

    /// Full numeric evaluation over the complex numbers. Missing variables
    /// evaluate as 0.
    pub fn eval_complex(&self, point: &BTreeMap<Var, Complex64>) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(
                c.numer().to_f64().unwrap_or(f64::NAN),
                0.0,
            ) / c.denom().to_f64().unwrap_or(f64::NAN);
            for &(v, e) in m.pairs() {
                let val = point.get(&v).copied().unwrap_or(Complex64::new(0.0, 0.0));
                t *= val.powi(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Largest coefficient size in bits (numerator plus denominator).
    pub fn coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.numer().bits() + c.denom().bits())
            .max()
            .unwrap_or(0)
    }

    /// Largest absolute coefficient, as f64; scale reference for residuals.
    pub fn coeff_scale(&self) -> f64 {
        self.terms
            .values()
            .map(|c| {
                (c.numer().to_f64().unwrap_or(f64::INFINITY)
                    / c.denom().to_f64().unwrap_or(1.0))
                .abs()
            })
            .fold(1.0, f64::max)
    }

    /// Product of a list of polynomials (1 for an empty list).
    pub fn product<'a, I: IntoIterator<Item = &'a Poly>>(polys: I) -> Poly {
        let mut acc = Poly::one();
        for p in polys {
            acc = acc.mul(p);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    fn x() -> Var {
        Var::Base(0)
    }
    fn y() -> Var {
        Var::Base(1)
    }

    #[test]
    fn ring_identities() {
        let p = Poly::var(x()).add(&Poly::from_int(1));
        let q = Poly::var(y()).sub(&Poly::var(x()));
        let r = Poly::var_pow(x(), 2).add(&Poly::var(y()).scale_int(3));
        // distributivity
        assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        // associativity
        assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        // (p - p) = 0
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn substitution_clears_denominators() {
        // f = y^2 + 1, y := a/b gives a^2 + b^2
        let f = Poly::var_pow(y(), 2).add(&Poly::one());
        let a = Poly::var(x());
        let b = Poly::var(x()).add(&Poly::one());
        let g = f.substitute_clearing(y(), &a, &b);
        let expected = a.mul(&a).add(&b.mul(&b));
        assert_eq!(g, expected);
    }

    #[test]
    fn partial_derivative() {
        // d/dx (x^2 y + x) = 2xy + 1
        let f = Poly::var_pow(x(), 2).mul(&Poly::var(y())).add(&Poly::var(x()));
        let d = f.partial(x());
        let expected = Poly::var(x()).mul(&Poly::var(y())).scale_int(2).add(&Poly::one());
        assert_eq!(d, expected);
    }
}
