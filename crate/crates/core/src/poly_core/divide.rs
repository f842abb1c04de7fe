//! Division-flavored operations: exact division, pseudo-remainder,
//! contents, gcd, squarefree parts and resultants.

use super::{Poly, PolyError, Var};

impl Poly {
    /// Exact multivariate division. Returns `None` when `divisor` does not
    /// divide `self` exactly.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let t = Poly::from_terms(vec![(qm, qc)]);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Some(quot)
    }

    /// Whether `divisor` divides `self` exactly.
    pub fn divisible_by(&self, divisor: &Poly) -> bool {
        self.exact_div(divisor).is_some()
    }

    /// Pseudo-remainder of `self` by `g` in the variable `v`:
    /// `init(g)^e · self ≡ r  (mod g)` with `deg(r, v) < deg(g, v)` and `e`
    /// the number of reduction steps taken (minimal for this scheme).
    pub fn pseudo_remainder(&self, g: &Poly, v: Var) -> Result<(Poly, u32), PolyError> {
        let dg = g.degree(v);
        if dg == 0 {
            return Err(PolyError::BadDivisor);
        }
        let init = g.coeff_of(v, dg);
        let mut r = self.clone();
        let mut e = 0u32;
        while !r.is_zero() && r.degree(v) >= dg {
            let dr = r.degree(v);
            let lead = r.coeff_of(v, dr);
            // r := init·r − lead·g·v^(dr−dg)
            let shift = Poly::var_pow(v, dr - dg);
            r = init.mul(&r).sub(&lead.mul(g).mul(&shift));
            e += 1;
            debug_assert!(r.is_zero() || r.degree(v) < dr);
        }
        Ok((r, e))
    }

    /// Pseudo-remainder with the fixed classical exponent:
    /// `init(g)^(δ+1) · self = q·g + r`, `δ = deg(self,v) − deg(g,v) ≥ 0`.
    pub(crate) fn prem_fixed(&self, g: &Poly, v: Var) -> Poly {
        let df = self.degree(v);
        let dg = g.degree(v);
        debug_assert!(dg > 0 && df >= dg);
        let (r, e) = self.pseudo_remainder(g, v).expect("prem_fixed: bad divisor");
        let init = g.coeff_of(v, dg);
        let missing = df - dg + 1 - e;
        r.mul(&init.pow(missing))
    }

    /// Content with respect to `v`: gcd of the coefficients of `self` viewed
    /// as univariate in `v`. Canonical (primitive, positive lead).
    pub fn content_wrt(&self, v: Var) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let view = self.univariate_coeffs(v);
        let mut acc = Poly::zero();
        for c in &view.coeffs {
            if c.is_zero() {
                continue;
            }
            acc = poly_gcd(&acc, c);
            if acc.is_one() {
                break;
            }
        }
        acc
    }

    /// `self` divided by its content with respect to `v`.
    pub fn primitive_wrt(&self, v: Var) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content_wrt(v);
        self.exact_div(&c).expect("content must divide")
    }

    /// Full polynomial content: gcd of all coefficients with respect to the
    /// top variable, recursively. For a nonzero polynomial `p`,
    /// `p / full_content(p)` has no nonconstant factor free of its top
    /// variable, and rational content 1.
    pub fn full_primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        match self.max_var() {
            None => Poly::one(),
            Some(v) => self.primitive_wrt(v).canonical(),
        }
    }

    /// Squarefree part across all variables (characteristic 0).
    pub fn squarefree_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let v = match self.max_var() {
            None => return Poly::one(),
            Some(v) => v,
        };
        let content = self.content_wrt(v);
        let prim = self.exact_div(&content).expect("content divides");
        let deriv = prim.partial(v);
        let g = poly_gcd(&prim, &deriv);
        let sf = prim.exact_div(&g).expect("gcd divides");
        sf.mul(&content.squarefree_part()).canonical()
    }
}

/// Memoized, work-bounded squarefree part. The monomial content is split
/// off first (its radical is exact and free), the residue goes through the
/// gcd-based computation when small enough and degrades to canonical form
/// otherwise. Deterministic; the result always has the same zero set as
/// the input.
pub fn squarefree_bounded(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    if p.is_constant() {
        return Poly::one();
    }
    let mono = p.monomial_content();
    if !mono.is_one() {
        let q = p
            .exact_div(&Poly::from_terms(vec![(mono.clone(), num_rational::BigRational::from_integer(1.into()))]))
            .expect("monomial content divides");
        let radical = Poly::from_terms(vec![(
            super::Monomial::from_pairs(mono.pairs().iter().map(|&(v, _)| (v, 1)).collect()),
            num_rational::BigRational::from_integer(1.into()),
        )]);
        return radical.mul(&squarefree_bounded(&q)).canonical();
    }
    if !(p.num_terms() <= 80 && p.total_degree() <= 40 && p.coeff_bits() <= 1024) {
        return p.canonical();
    }
    use std::cell::RefCell;
    use std::collections::HashMap;
    thread_local! {
        static CACHE: RefCell<HashMap<Poly, Poly>> = RefCell::new(HashMap::new());
    }
    CACHE.with(|cache| {
        if let Some(hit) = cache.borrow().get(p) {
            return hit.clone();
        }
        let sf = p.squarefree_part();
        let mut cache = cache.borrow_mut();
        if cache.len() > 20_000 {
            cache.clear();
        }
        cache.insert(p.clone(), sf.clone());
        sf
    })
}

/// Work counter for the gcd machinery. Exhaustion makes the gcd fall back
/// to a smaller (still exact) common divisor, which every caller tolerates.
struct Fuel {
    steps: i64,
}

impl Fuel {
    fn spend(&mut self, amount: usize) -> bool {
        self.steps -= amount as i64;
        self.steps >= 0
    }
}

/// Polynomial gcd over Q, canonical output (primitive, positive lead).
/// Primitive pseudo-remainder sequence, recursing on contents. Internally
/// work-bounded: on enormous inputs the result degrades deterministically
/// to a common divisor (possibly 1) instead of the full gcd.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Poly {
    let mut fuel = Fuel { steps: 60_000 };
    gcd_fueled(f, g, &mut fuel).unwrap_or_else(Poly::one)
}

fn gcd_fueled(f: &Poly, g: &Poly, fuel: &mut Fuel) -> Option<Poly> {
    if f.is_zero() {
        return Some(g.canonical());
    }
    if g.is_zero() {
        return Some(f.canonical());
    }
    if f.is_constant() || g.is_constant() {
        return Some(Poly::one());
    }
    if !fuel.spend(f.num_terms() + g.num_terms()) {
        return None;
    }
    let v = f.max_var().max(g.max_var()).expect("nonconstant");
    if f.degree(v) == 0 {
        let cg = content_fueled(g, v, fuel)?;
        return gcd_fueled(f, &cg, fuel);
    }
    if g.degree(v) == 0 {
        let cf = content_fueled(f, v, fuel)?;
        return gcd_fueled(&cf, g, fuel);
    }
    let cf = content_fueled(f, v, fuel)?;
    let cg = content_fueled(g, v, fuel)?;
    let fp = f.exact_div(&cf).expect("content divides");
    let gp = g.exact_div(&cg).expect("content divides");
    let (mut a, mut b) = if fp.degree(v) >= gp.degree(v) { (fp, gp) } else { (gp, fp) };
    loop {
        if b.is_zero() {
            break;
        }
        if b.degree(v) == 0 {
            // both arguments primitive in v, so the v-part of the gcd is 1
            a = Poly::one();
            break;
        }
        let weight = 1 + (a.coeff_bits() + b.coeff_bits()) / 256;
        if !fuel.spend(a.num_terms() * b.num_terms().max(1) * weight as usize) {
            return None;
        }
        let (r, _) = a.pseudo_remainder(&b, v).expect("deg > 0");
        if r.num_terms() > 4000 || r.coeff_bits() > 1 << 17 {
            return None;
        }
        a = b;
        b = if r.is_zero() {
            Poly::zero()
        } else {
            let cr = content_fueled(&r, v, fuel)?;
            r.exact_div(&cr).expect("content divides")
        };
    }
    let apart = if a.is_constant() {
        Poly::one()
    } else {
        let ca = content_fueled(&a, v, fuel)?;
        a.exact_div(&ca).expect("content divides")
    };
    Some(gcd_fueled(&cf, &cg, fuel)?.mul(&apart).canonical())
}

fn content_fueled(p: &Poly, v: Var, fuel: &mut Fuel) -> Option<Poly> {
    if p.is_zero() {
        return Some(Poly::zero());
    }
    let view = p.univariate_coeffs(v);
    let mut acc = Poly::zero();
    for c in &view.coeffs {
        if c.is_zero() {
            continue;
        }
        acc = gcd_fueled(&acc, c, fuel)?;
        if acc.is_one() {
            break;
        }
    }
    Some(acc)
}

/// As [`resultant`] but work-bounded: `None` when the computation would
/// exceed the fuel. Used by heuristic emptiness certificates.
pub fn resultant_bounded(f: &Poly, g: &Poly, v: Var, fuel: usize) -> Option<Poly> {
    let mut fuel = Fuel { steps: fuel as i64 };
    resultant_fueled(f, g, v, &mut fuel)
}

/// Resultant of `f` and `g` with respect to `v`, by the subresultant PRS.
/// Matches the Sylvester-matrix determinant with the rows of `f` on top.
pub fn resultant(f: &Poly, g: &Poly, v: Var) -> Poly {
    let mut fuel = Fuel { steps: i64::MAX };
    resultant_fueled(f, g, v, &mut fuel).expect("unbounded fuel")
}

fn resultant_fueled(f: &Poly, g: &Poly, v: Var, fuel: &mut Fuel) -> Option<Poly> {
    if f.is_zero() || g.is_zero() {
        return Some(Poly::zero());
    }
    let m = f.degree(v);
    let n = g.degree(v);
    if m == 0 && n == 0 {
        return Some(Poly::one());
    }
    if m == 0 {
        return Some(f.pow(n));
    }
    if n == 0 {
        return Some(g.pow(m));
    }
    // Ensure deg(a) >= deg(b); res(f,g) = (-1)^(mn)·res(g,f).
    let (mut a, mut b, mut sign) = if m >= n {
        (f.clone(), g.clone(), false)
    } else {
        (g.clone(), f.clone(), (m * n) % 2 == 1)
    };
    let mut gcoef = Poly::one();
    let mut h = Poly::one();
    loop {
        let da = a.degree(v);
        let db = b.degree(v);
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = !sign;
        }
        let weight = 1 + (a.coeff_bits() + b.coeff_bits()) / 128;
        if !fuel.spend(a.num_terms() * b.num_terms().max(1) * weight as usize) {
            return None;
        }
        let r = a.prem_fixed(&b, v);
        a = b;
        let denom = gcoef.mul(&h.pow(delta));
        b = r.exact_div(&denom).expect("subresultant division is exact");
        gcoef = a.coeff_of(v, a.degree(v));
        h = if delta == 0 {
            h
        } else {
            gcoef
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant h-division is exact")
        };
        if b.is_zero() {
            return Some(Poly::zero());
        }
        if b.degree(v) == 0 {
            let da = a.degree(v);
            let res = b
                .pow(da)
                .exact_div(&h.pow(da - 1))
                .expect("final subresultant division is exact");
            return Some(if sign { res.neg() } else { res });
        }
    }
}
