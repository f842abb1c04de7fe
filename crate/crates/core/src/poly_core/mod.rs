//! Sparse multivariate polynomials over Q with ordered variables.
//!
//! Representation: terms stored in a `BTreeMap` from monomial to nonzero
//! rational coefficient. Monomials are sparse lists of `(variable, exponent)`
//! pairs and compare lexicographically with respect to the variable order,
//! highest variable first.
//!
//! The variable universe mixes three kinds:
//! * `Base(i)` — the ordered algebraic variables x_1 < ... < x_n;
//! * `Deriv { base, order }` — derivative variables y_i^(j) of a differential
//!   indeterminate, ranked by (base, order) lexicographically;
//! * `Aux(_)` — the auxiliary homogenization/resultant variables
//!   Y0, Y1, U, U0, U1, ranked above everything else.
//!
//! Polynomials are immutable after construction; all arithmetic is exact.

mod arith;
mod divide;
mod display;
mod parse;

pub use divide::{resultant, resultant_bounded, squarefree_bounded};
pub use parse::{parse_poly, ParseError};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Auxiliary variables used by the homogenization and Macaulay machinery.
/// The declaration order fixes their ranking: Y0 < Y1 < U < U0 < U1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AuxVar {
    Y0,
    Y1,
    U,
    U0,
    U1,
}

impl AuxVar {
    pub fn name(self) -> &'static str {
        match self {
            AuxVar::Y0 => "Y0",
            AuxVar::Y1 => "Y1",
            AuxVar::U => "U",
            AuxVar::U0 => "U0",
            AuxVar::U1 => "U1",
        }
    }
}

/// A variable identifier. The derived `Ord` is the global ranking:
/// base variables below derivative variables below auxiliaries, base
/// variables by index, derivative variables by (base, order).
///
/// Base and derivative variables are never mixed inside one computation;
/// auxiliaries sit on top of either world.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    Base(u32),
    Deriv { base: u32, order: u32 },
    Aux(AuxVar),
}

impl Var {
    /// Class of a derivative variable (1-based), or of a base variable.
    pub fn class(self) -> u32 {
        match self {
            Var::Base(i) => i + 1,
            Var::Deriv { base, .. } => base + 1,
            Var::Aux(_) => u32::MAX,
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Var::Deriv { order, .. } => order,
            _ => 0,
        }
    }
}

/// An ordered list of named variables x_1 < ... < x_n. In differential mode
/// the names are the differential indeterminates y_1 < ... < y_n and the
/// polynomial variables are their derivatives `Var::Deriv`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarOrder {
    names: Vec<String>,
    differential: bool,
}

impl VarOrder {
    pub fn algebraic<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_unique(&names);
        VarOrder { names, differential: false }
    }

    pub fn differential<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert_unique(&names);
        VarOrder { names, differential: true }
    }

    pub fn is_differential(&self) -> bool {
        self.differential
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Index of a name, if present.
    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    /// The algebraic variable for a name.
    pub fn var(&self, name: &str) -> Option<Var> {
        self.index_of(name).map(|i| {
            if self.differential {
                Var::Deriv { base: i, order: 0 }
            } else {
                Var::Base(i)
            }
        })
    }

    /// All base variables in ascending order (algebraic mode).
    pub fn base_vars(&self) -> Vec<Var> {
        (0..self.names.len() as u32)
            .map(|i| {
                if self.differential {
                    Var::Deriv { base: i, order: 0 }
                } else {
                    Var::Base(i)
                }
            })
            .collect()
    }

    /// Printable name of a variable under this order.
    pub fn var_name(&self, v: Var) -> String {
        match v {
            Var::Base(i) => self
                .names
                .get(i as usize)
                .cloned()
                .unwrap_or_else(|| format!("x{}", i)),
            Var::Deriv { base, order } => {
                let base_name = self
                    .names
                    .get(base as usize)
                    .cloned()
                    .unwrap_or_else(|| format!("y{}", base));
                if order == 0 {
                    base_name
                } else if order <= 3 {
                    format!("{}{}", base_name, "'".repeat(order as usize))
                } else {
                    format!("{}^({})", base_name, order)
                }
            }
            Var::Aux(a) => a.name().to_string(),
        }
    }
}

fn assert_unique(names: &[String]) {
    for (i, n) in names.iter().enumerate() {
        assert!(
            !names[..i].contains(n),
            "duplicate variable identifier `{}` in order",
            n
        );
    }
}

/// A sparse monomial: ascending `(variable, exponent)` pairs, exponents > 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub(crate) Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        for w in pairs.windows(2) {
            assert!(w[0].0 != w[1].0, "repeated variable in monomial");
        }
        Monomial(pairs)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// Degree restricted to a variable subset.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.0
            .iter()
            .filter(|&&(v, _)| vars.contains(&v))
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut pairs = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    pairs.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    pairs.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    pairs.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        pairs.extend_from_slice(&self.0[i..]);
        pairs.extend_from_slice(&other.0[j..]);
        Monomial(pairs)
    }

    /// Componentwise division; `None` if not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            let mut e = e;
            while j < other.0.len() && other.0[j].0 < v {
                return None; // other has a variable we lack
            }
            if j < other.0.len() && other.0[j].0 == v {
                let eo = other.0[j].1;
                if eo > e {
                    return None;
                }
                e -= eo;
                j += 1;
            }
            if e > 0 {
                pairs.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(pairs))
    }

    pub fn max_var(&self) -> Option<Var> {
        self.0.last().map(|&(v, _)| v)
    }
}

impl Poly {
    /// Componentwise minimum exponent over all terms: the largest monomial
    /// dividing every term. 1 for the zero polynomial.
    pub fn monomial_content(&self) -> Monomial {
        let mut acc: Option<Vec<(Var, u32)>> = None;
        for m in self.terms.keys() {
            match &mut acc {
                None => acc = Some(m.pairs().to_vec()),
                Some(pairs) => {
                    pairs.retain_mut(|(v, e)| {
                        let other = m.exponent(*v);
                        if other == 0 {
                            false
                        } else {
                            *e = (*e).min(other);
                            true
                        }
                    });
                }
            }
            if acc.as_ref().map(|p| p.is_empty()).unwrap_or(false) {
                break;
            }
        }
        Monomial(acc.unwrap_or_default())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order with respect to the variable ranking, highest
/// variable first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering::*;
        let (mut i, mut j) = (self.0.len(), other.0.len());
        loop {
            match (i, j) {
                (0, 0) => return Equal,
                (0, _) => return Less,
                (_, 0) => return Greater,
                _ => {}
            }
            let (va, ea) = self.0[i - 1];
            let (vb, eb) = other.0[j - 1];
            match va.cmp(&vb) {
                Greater => return Greater,
                Less => return Less,
                Equal => match ea.cmp(&eb) {
                    Equal => {
                        i -= 1;
                        j -= 1;
                    }
                    ord => return ord,
                },
            }
        }
    }
}

/// Errors from the ordering-dependent polynomial accessors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// Operation requires a nonconstant polynomial.
    ConstantPolynomial,
    /// Pseudo-division by a polynomial of degree zero in the main variable.
    BadDivisor,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ConstantPolynomial => write!(f, "polynomial is constant"),
            PolyError::BadDivisor => {
                write!(f, "divisor has degree zero in the main variable")
            }
        }
    }
}

impl std::error::Error for PolyError {}

/// A sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Poly {
    pub(crate) terms: BTreeMap<Monomial, BigRational>,
}

/// A polynomial viewed as univariate in one variable: `p = Σ coeffs[j]·v^j`
/// with every coefficient free of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivView {
    pub main: Var,
    pub coeffs: Vec<Poly>,
}

impl UnivView {
    /// Rebuild the original polynomial.
    pub fn assemble(&self) -> Poly {
        let mut acc = Poly::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.mul(&Poly::var_pow(self.main, j as u32)));
        }
        acc
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Poly::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        if e == 0 {
            return Poly::one();
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![(v, e)]), BigRational::one());
        Poly { terms }
    }

    pub fn from_terms(terms: Vec<(Monomial, BigRational)>) -> Self {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { terms: map }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Greatest variable present, i.e. the leading variable / leader.
    pub fn max_var(&self) -> Option<Var> {
        self.terms.keys().filter_map(|m| m.max_var()).max()
    }

    /// All variables present, ascending.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for &(v, _) in m.pairs() {
                if !vs.contains(&v) {
                    vs.push(v);
                }
            }
        }
        vs.sort();
        vs
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Degree as a multivariate polynomial in a variable subset.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.terms.keys().map(|m| m.degree_in(vars)).max().unwrap_or(0)
    }

    /// Leading variable: the greatest variable v with deg(p, v) > 0.
    pub fn leading_variable(&self) -> Result<Var, PolyError> {
        self.max_var().ok_or(PolyError::ConstantPolynomial)
    }

    /// Leading degree: deg(p, lv(p)).
    pub fn ldeg(&self) -> Result<u32, PolyError> {
        let v = self.leading_variable()?;
        Ok(self.degree(v))
    }

    /// Initial: the leading coefficient of p viewed as univariate in lv(p).
    pub fn initial(&self) -> Result<Poly, PolyError> {
        let v = self.leading_variable()?;
        Ok(self.coeff_of(v, self.degree(v)))
    }

    /// Coefficient of `v^k` in p (a polynomial free of `v`).
    pub fn coeff_of(&self, v: Var, k: u32) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let rest = Monomial(
                    m.pairs().iter().cloned().filter(|&(w, _)| w != v).collect(),
                );
                terms.insert(rest, c.clone());
            }
        }
        Poly { terms }
    }

    /// View as univariate in `v`; every coefficient is free of `v` and the
    /// top coefficient is nonzero.
    pub fn univariate_coeffs(&self, v: Var) -> UnivView {
        let d = self.degree(v);
        let coeffs = (0..=d).map(|j| self.coeff_of(v, j)).collect();
        UnivView { main: v, coeffs }
    }

    /// Leading monomial and coefficient under the lex term order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// The leading rational coefficient under the lex term order.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.leading_term().map(|(_, c)| c)
    }

    /// Rational content: the positive rational g with p/g integer, coprime
    /// coefficients, carrying the sign of the leading coefficient.
    pub fn rational_content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_bigint::BigInt::from(num_integer::Integer::gcd(
                &num_gcd,
                c.numer(),
            ));
            den_lcm = num_integer::Integer::lcm(&den_lcm, c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_coefficient().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        content
    }

    /// Canonical form: divide by rational content, i.e. primitive integer
    /// coefficients with positive leading coefficient. Zero stays zero.
    pub fn canonical(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let content = self.rational_content();
        self.scale(&content.recip())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Var {
        Var::Base(0)
    }
    fn y() -> Var {
        Var::Base(1)
    }
    fn z() -> Var {
        Var::Base(2)
    }

    #[test]
    fn var_ranking() {
        assert!(Var::Base(0) < Var::Base(1));
        assert!(Var::Base(5) < Var::Deriv { base: 0, order: 0 });
        assert!(Var::Deriv { base: 0, order: 3 } < Var::Deriv { base: 1, order: 0 });
        assert!(Var::Deriv { base: 1, order: 0 } < Var::Deriv { base: 1, order: 1 });
        assert!(Var::Deriv { base: 9, order: 9 } < Var::Aux(AuxVar::Y0));
        assert!(Var::Aux(AuxVar::Y0) < Var::Aux(AuxVar::U1));
    }

    #[test]
    fn monomial_lex_order() {
        let m1 = Monomial::from_pairs(vec![(x(), 1), (y(), 2)]);
        let m2 = Monomial::from_pairs(vec![(y(), 2)]);
        let m3 = Monomial::from_pairs(vec![(z(), 1)]);
        assert!(m3 > m1, "higher variable wins");
        assert!(m1 > m2, "equal top, extra lower variable wins");
        assert!(Monomial::one() < m2);
    }

    #[test]
    fn leading_variable_examples() {
        // lv(xyz + 1) with x < y < z is z.
        let p = Poly::var(x()).mul(&Poly::var(y())).mul(&Poly::var(z())).add(&Poly::one());
        assert_eq!(p.leading_variable().unwrap(), z());
        // lv(x^2 + x) is x.
        let q = Poly::var_pow(x(), 2).add(&Poly::var(x()));
        assert_eq!(q.leading_variable().unwrap(), x());
        // constants have no leading variable.
        assert_eq!(
            Poly::from_int(7).leading_variable(),
            Err(PolyError::ConstantPolynomial)
        );
    }

    #[test]
    fn initial_examples() {
        let p = Poly::var(x()).mul(&Poly::var(y())).mul(&Poly::var(z())).add(&Poly::one());
        let init = p.initial().unwrap();
        assert_eq!(init, Poly::var(x()).mul(&Poly::var(y())));

        let q = Poly::var_pow(x(), 2).add(&Poly::var(x()));
        assert_eq!(q.initial().unwrap(), Poly::one());

        // init(x·Y^2 + Y) with respect to Y (here z plays Y) is x.
        let r = Poly::var(x())
            .mul(&Poly::var_pow(z(), 2))
            .add(&Poly::var(z()));
        assert_eq!(r.initial().unwrap(), Poly::var(x()));
    }

    #[test]
    fn univariate_coeffs_examples() {
        // (xy + 1, y) -> [1, x]
        let p = Poly::var(x()).mul(&Poly::var(y())).add(&Poly::one());
        let view = p.univariate_coeffs(y());
        assert_eq!(view.coeffs, vec![Poly::one(), Poly::var(x())]);
        assert_eq!(view.assemble(), p);

        // (x^2 + x, y) -> [x^2 + x]
        let q = Poly::var_pow(x(), 2).add(&Poly::var(x()));
        let view = q.univariate_coeffs(y());
        assert_eq!(view.coeffs, vec![q.clone()]);

        // (Y^2 + Y, Y) -> [0, 1, 1]
        let r = Poly::var_pow(y(), 2).add(&Poly::var(y()));
        let view = r.univariate_coeffs(y());
        assert_eq!(view.coeffs, vec![Poly::zero(), Poly::one(), Poly::one()]);
        assert_eq!(view.assemble(), r);
    }

    #[test]
    fn canonical_is_primitive_positive() {
        // -4x + 2 -> 2x - 1
        let p = Poly::var(x()).scale_int(-4).add(&Poly::from_int(2));
        let c = p.canonical();
        assert_eq!(c, Poly::var(x()).scale_int(2).add(&Poly::from_int(-1)));
        assert_eq!(c, c.canonical(), "canonical is idempotent");
    }
}
