//! Macaulay matrices over the three homogeneous variables Y, Y0, Y1 and the
//! case-splitting fraction-free elimination.
//!
//! For generators g_0, ..., g_m (degrees γ_0 ≥ ... ≥ γ_m, the last one the
//! linear form Y0·U0 + Y·U + Y1·U1), the Macaulay matrix represents the map
//!
//! ```text
//! (f_0, ..., f_m) ↦ f_0·g_0 + ... + f_m·g_m
//! ```
//!
//! from shifted monomial bases of degree D − γ_l into the degree-D forms.
//! Entries are polynomials in the coefficient variables x (and U, U0, U1 in
//! the block of the linear form). A nonsingular maximal submatrix that keeps
//! as many columns as possible inside the numeric block has a determinant
//! that factors, at every admissible parameter point, into linear forms
//! ξ_0·U0 + ξ·U + ξ_1·U1 over the solutions (ξ : ξ_0 : ξ_1) of the system.
//!
//! Because entries depend on the parameters x, pivoting decisions hold only
//! on parameter-space cases. The elimination therefore forks: each pivot
//! candidate splits into a cascade "first j coefficients vanish, (j+1)-th
//! does not" over its (U, U0, U1)-monomial coefficients, which are x-only
//! polynomials. Branch loci are pairwise disjoint and cover the parameter
//! space.

use crate::config::Budget;
use crate::poly_core::{resultant_bounded, AuxVar, Monomial, Poly, Var};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CasesplitError {
    /// No generators were supplied.
    EmptySystem,
    /// The branch budget was exhausted.
    BranchLimitExceeded,
}

impl fmt::Display for CasesplitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CasesplitError::EmptySystem => write!(f, "empty homogeneous system"),
            CasesplitError::BranchLimitExceeded => write!(f, "branch budget exhausted"),
        }
    }
}

impl std::error::Error for CasesplitError {}

/// A system of polynomials homogeneous in {main, Y0, Y1}, sorted by
/// descending homogeneous degree, with the linear U-form last.
#[derive(Clone, Debug)]
pub struct HomogSystem {
    pub gens: Vec<Poly>,
    pub gammas: Vec<u32>,
    pub main_var: Var,
}

impl HomogSystem {
    /// Sort generators by descending degree (stable) and append the linear
    /// form. `gens` must not contain the linear form.
    pub fn new(gens: Vec<Poly>, main_var: Var) -> Self {
        let y0 = Var::Aux(AuxVar::Y0);
        let y1 = Var::Aux(AuxVar::Y1);
        let hv = [main_var, y0, y1];
        let mut with_deg: Vec<(u32, Poly)> =
            gens.into_iter().map(|g| (g.degree_in(&hv), g)).collect();
        with_deg.sort_by(|a, b| b.0.cmp(&a.0));
        let linear = Poly::var(y0)
            .mul(&Poly::var(Var::Aux(AuxVar::U0)))
            .add(&Poly::var(main_var).mul(&Poly::var(Var::Aux(AuxVar::U))))
            .add(&Poly::var(y1).mul(&Poly::var(Var::Aux(AuxVar::U1))));
        with_deg.push((1, linear));
        let gammas = with_deg.iter().map(|&(d, _)| d).collect();
        let gens = with_deg.into_iter().map(|(_, g)| g).collect();
        HomogSystem { gens, gammas, main_var }
    }

    /// Each generator homogeneous of its recorded degree, degrees sorted
    /// descending, last generator of degree 1.
    pub fn is_well_formed(&self) -> bool {
        if self.gens.is_empty() || self.gens.len() != self.gammas.len() {
            return false;
        }
        let hv = [self.main_var, Var::Aux(AuxVar::Y0), Var::Aux(AuxVar::Y1)];
        for (g, &d) in self.gens.iter().zip(&self.gammas) {
            if g.is_zero() {
                return false;
            }
            for (m, _) in g.terms() {
                if m.degree_in(&hv) != d {
                    return false;
                }
            }
        }
        if self.gammas.windows(2).any(|w| w[0] < w[1]) {
            return false;
        }
        *self.gammas.last().unwrap() == 1
    }
}

/// `D = γ_0 + Σ_{1 ≤ l ≤ min(2, m−1)} (γ_l − 1)` for generator degrees
/// γ_0 ≥ ... ≥ γ_m (the last being the linear form).
pub fn macaulay_degree(gammas: &[u32]) -> Result<u32, CasesplitError> {
    if gammas.is_empty() {
        return Err(CasesplitError::EmptySystem);
    }
    let m = gammas.len() - 1;
    let take = m.saturating_sub(1).min(2);
    let mut d = gammas[0];
    for &g in gammas.iter().skip(1).take(take) {
        d += g - 1;
    }
    Ok(d)
}

/// Monomials of total degree `d` in (main, Y0, Y1), descending by the
/// exponent pair (main, Y0).
fn degree_basis(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=(d - a)).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// Split a polynomial into parts keyed by the (main, Y0, Y1) exponent
/// triple; values are the coefficient polynomials in the other variables.
fn homog_parts(p: &Poly, main: Var) -> BTreeMap<[u32; 3], Poly> {
    let y0 = Var::Aux(AuxVar::Y0);
    let y1 = Var::Aux(AuxVar::Y1);
    let mut parts: BTreeMap<[u32; 3], Poly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let key = [m.exponent(main), m.exponent(y0), m.exponent(y1)];
        let rest = Monomial::from_pairs(
            m.pairs()
                .iter()
                .cloned()
                .filter(|&(v, _)| v != main && v != y0 && v != y1)
                .collect(),
        );
        let entry = parts.entry(key).or_insert_with(Poly::zero);
        *entry = entry.add(&Poly::from_terms(vec![(rest, c.clone())]));
    }
    parts.retain(|_, p| !p.is_zero());
    parts
}

/// The Macaulay matrix of a homogeneous system.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    /// Row basis: monomials of degree D.
    pub row_basis: Vec<[u32; 3]>,
    /// Column labels: (generator index, shift monomial of degree D − γ_l).
    pub col_basis: Vec<(usize, [u32; 3])>,
    /// Dense entries, row-major. Entries left of `num_split` are free of
    /// U, U0, U1.
    pub entries: Vec<Vec<Poly>>,
    /// First column of the block of the linear form.
    pub num_split: usize,
    pub main_var: Var,
    pub degree: u32,
}

impl MacaulayMatrix {
    pub fn rows(&self) -> usize {
        self.row_basis.len()
    }

    pub fn cols(&self) -> usize {
        self.col_basis.len()
    }

    /// Rank of the numeric block A^(num) when its entries are all rational
    /// constants; `None` if some entry still involves parameters.
    pub fn num_rank(&self) -> Option<usize> {
        let mut m: Vec<Vec<BigRational>> = Vec::with_capacity(self.rows());
        for row in &self.entries {
            let mut out = Vec::with_capacity(self.num_split);
            for e in &row[..self.num_split] {
                out.push(e.as_constant()?);
            }
            m.push(out);
        }
        Some(rational_rank(m))
    }
}

fn rational_rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[row][col];
                for c in col..cols {
                    let sub = &m[row][c] * &factor;
                    m[r][c] = &m[r][c] - sub;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Build the Macaulay matrix of the multiplication map in the stated
/// monomial bases.
pub fn build_macaulay(sys: &HomogSystem) -> MacaulayMatrix {
    debug_assert!(sys.is_well_formed(), "malformed homogeneous system");
    let d = macaulay_degree(&sys.gammas).expect("nonempty system");
    let row_basis = degree_basis(d);
    let row_index: BTreeMap<[u32; 3], usize> =
        row_basis.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let mut col_basis = Vec::new();
    let mut num_split = 0;
    for (l, &gamma) in sys.gammas.iter().enumerate() {
        let shifts = degree_basis(d - gamma);
        if l + 1 < sys.gens.len() {
            num_split += shifts.len();
        }
        for s in shifts {
            col_basis.push((l, s));
        }
    }
    let parts: Vec<BTreeMap<[u32; 3], Poly>> =
        sys.gens.iter().map(|g| homog_parts(g, sys.main_var)).collect();
    let mut entries = vec![vec![Poly::zero(); col_basis.len()]; row_basis.len()];
    for (c, &(l, shift)) in col_basis.iter().enumerate() {
        for (key, coeff) in &parts[l] {
            let target = [key[0] + shift[0], key[1] + shift[1], key[2] + shift[2]];
            let r = row_index[&target];
            entries[r][c] = entries[r][c].add(coeff);
        }
    }
    MacaulayMatrix {
        row_basis,
        col_basis,
        entries,
        num_split,
        main_var: sys.main_var,
        degree: d,
    }
}

/// Exact determinant of a square polynomial matrix by fraction-free
/// (Bareiss) elimination.
pub fn bareiss_determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one();
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Poly::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        if k + 1 == n {
            break;
        }
        let pivot = m[k][k].clone();
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                let num = pivot.mul(&m[r][c]).sub(&m[r][k].mul(&m[k][c]));
                m[r][c] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[r][k] = Poly::zero();
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// A parameter-space case produced by the case-splitting elimination.
///
/// On the locus `eqs = 0 ∧ ineq ≠ 0`, `delta` (when present) is the exact
/// determinant of a nonsingular r×r submatrix of the Macaulay matrix that
/// keeps the branch-wise rank of the numeric block inside it. Writing
/// `delta = Σ_i E^(i)·U0^(D2−i)`, the coefficients E^(0), ..., E^(e_index−1)
/// vanish identically on the branch, `e_lead = E^(e_index)` does not, and
/// within `e_lead` the pure power `U1^u1_power` carries the asserted-nonzero
/// coefficient `e_nu` (a parameter-only polynomial, kept as an ineq factor).
///
/// `delta = None` marks a branch on which no full set of columns could be
/// selected: the matrix then has less than full row rank at every branch
/// point, which the rank lemma for the homogeneous system rules out inside
/// the caller's admissible locus, so such branches carry no solutions.
#[derive(Clone, Debug)]
pub struct Branch {
    pub eqs: Vec<Poly>,
    pub ineq_factors: Vec<Poly>,
    pub delta: Option<Poly>,
    pub e_index: usize,
    pub e_lead: Poly,
    pub u1_power: u32,
    pub e_nu: Poly,
}

impl Branch {
    /// Product of the distinct asserted-nonzero factors (1 when none).
    pub fn ineq(&self) -> Poly {
        Poly::product(self.ineq_factors.iter())
    }
}

/// Case-split a Macaulay matrix with no outer conditions.
pub fn case_split_determinants(
    a: &MacaulayMatrix,
    budget: &mut Budget,
) -> Result<Vec<Branch>, CasesplitError> {
    case_split_with_context(a, &[], &[], budget)
}

/// Case-split under preexisting conditions: `seed_eqs = 0`, every member of
/// `seed_ineqs ≠ 0`. The seeds participate in branch pruning and are carried
/// into the output branches.
pub fn case_split_with_context(
    a: &MacaulayMatrix,
    seed_eqs: &[Poly],
    seed_ineqs: &[Poly],
    budget: &mut Budget,
) -> Result<Vec<Branch>, CasesplitError> {
    let mut state = ElimState {
        mat: a.entries.clone(),
        row_used: vec![false; a.rows()],
        piv_rows: Vec::new(),
        piv_cols: Vec::new(),
        prev_pivot: Poly::one(),
        cond: Conditions::default(),
        cols_done: vec![false; a.cols()],
    };
    for e in seed_eqs {
        if !state.cond.add_eq(e) {
            return Ok(Vec::new());
        }
    }
    for f in seed_ineqs {
        state.cond.add_ineq_factor(f);
    }
    if state.cond.certainly_empty() {
        return Ok(Vec::new());
    }
    let mut splitter = Splitter {
        required: a.rows(),
        ncols: a.cols(),
        num_split: a.num_split,
        out: Vec::new(),
        budget,
        limit: false,
    };
    splitter.descend(state);
    if splitter.limit {
        return Err(CasesplitError::BranchLimitExceeded);
    }
    Ok(splitter.out)
}

pub(crate) use crate::poly_core::squarefree_bounded as sqfree_bounded;

/// The parameter-space conditions of a branch, kept separate from the
/// matrix so that candidate branches can be validated without cloning the
/// matrix. `eq_keys` caches the squarefree comparison keys of `eqs`.
#[derive(Clone, Default)]
struct Conditions {
    eqs: Vec<Poly>,
    eq_keys: Vec<Poly>,
    ineq_factors: Vec<Poly>,
}

impl Conditions {
    /// Record `e = 0`. Returns false when the branch is impossible
    /// (a nonzero constant, or a polynomial already asserted nonzero).
    ///
    /// Conditions are stored exact (primitive), not as squarefree parts:
    /// they become equations of the emitted components, and the downstream
    /// derivative cascades depend on their multiplicity structure.
    fn add_eq(&mut self, e: &Poly) -> bool {
        if e.is_zero() {
            return true;
        }
        if e.is_constant() {
            return false;
        }
        self.add_eq_keyed(e, &sqfree_bounded(e))
    }

    /// As [`Conditions::add_eq`] with a precomputed comparison key.
    fn add_eq_keyed(&mut self, e: &Poly, key: &Poly) -> bool {
        if e.is_zero() {
            return true;
        }
        if e.is_constant() {
            return false;
        }
        if self.ineq_factors.contains(key) {
            return false;
        }
        let c = e.canonical();
        if !self.eqs.contains(&c) {
            self.eqs.push(c);
            self.eq_keys.push(key.clone());
        }
        true
    }

    /// Record `f ≠ 0` (squarefree canonical when cheap; constants vacuous).
    fn add_ineq_factor(&mut self, f: &Poly) {
        if f.is_constant() {
            return;
        }
        let c = sqfree_bounded(f);
        if !self.ineq_factors.contains(&c) {
            self.ineq_factors.push(c);
        }
    }

    /// Is `f ≠ 0` impossible because a branch equation has the same zeros?
    fn contradicts_key(&self, key: &Poly) -> bool {
        self.eq_keys.contains(key)
    }

    fn certainly_empty(&self) -> bool {
        certainly_empty_keys(&self.eq_keys)
    }
}

struct ElimState {
    mat: Vec<Vec<Poly>>,
    row_used: Vec<bool>,
    piv_rows: Vec<usize>,
    piv_cols: Vec<usize>,
    prev_pivot: Poly,
    cond: Conditions,
    cols_done: Vec<bool>,
}

impl Clone for ElimState {
    fn clone(&self) -> Self {
        ElimState {
            mat: self.mat.clone(),
            row_used: self.row_used.clone(),
            piv_rows: self.piv_rows.clone(),
            piv_cols: self.piv_cols.clone(),
            prev_pivot: self.prev_pivot.clone(),
            cond: self.cond.clone(),
            cols_done: self.cols_done.clone(),
        }
    }
}

impl ElimState {
    fn apply_pivot(&mut self, prow: usize, pcol: usize) {
        let ncols = self.mat[0].len();
        self.cols_done[pcol] = true;
        let pivot = self.mat[prow][pcol].clone();
        for r in 0..self.mat.len() {
            if self.row_used[r] || r == prow {
                continue;
            }
            let a = std::mem::replace(&mut self.mat[r][pcol], Poly::zero());
            for c in 0..ncols {
                if self.cols_done[c] {
                    continue; // never read again
                }
                let num = if a.is_zero() {
                    pivot.mul(&self.mat[r][c])
                } else {
                    pivot.mul(&self.mat[r][c]).sub(&a.mul(&self.mat[prow][c]))
                };
                self.mat[r][c] =
                    num.exact_div(&self.prev_pivot).expect("Bareiss division is exact");
            }
        }
        self.row_used[prow] = true;
        self.piv_rows.push(prow);
        self.piv_cols.push(pcol);
        self.prev_pivot = pivot;
    }
}

struct Splitter<'a> {
    required: usize,
    ncols: usize,
    num_split: usize,
    out: Vec<Branch>,
    budget: &'a mut Budget,
    limit: bool,
}

impl<'a> Splitter<'a> {
    /// Pick the next column to process: numeric-block columns before the
    /// block of the linear form (the determinant must keep as many numeric
    /// columns as the branch-wise rank allows), and within each block
    /// columns with an always-nonzero pivot first, so cheap pivots shrink
    /// the matrix before any parameter-dependent case split.
    fn pick_column(&self, st: &ElimState) -> Option<usize> {
        for block in [0..self.num_split, self.num_split..self.ncols] {
            let open: Vec<usize> =
                block.filter(|&c| !st.cols_done[c]).collect();
            if open.is_empty() {
                continue;
            }
            for &c in &open {
                let certifiable = (0..st.mat.len()).any(|r| {
                    !st.row_used[r] && has_constant_coefficient(&st.mat[r][c])
                });
                if certifiable {
                    return Some(c);
                }
            }
            return Some(open[0]);
        }
        None
    }

    fn descend(&mut self, mut st: ElimState) {
        if self.limit {
            return;
        }
        loop {
            if st.piv_rows.len() == self.required {
                self.finalize_full(st);
                return;
            }
            let Some(col) = self.pick_column(&st) else {
                self.finalize_deficient(st);
                return;
            };
            let mut candidates: Vec<usize> = (0..st.mat.len())
                .filter(|&r| !st.row_used[r] && !st.mat[r][col].is_zero())
                .collect();
            // simplest entries first: their vanishing conditions are the
            // ones the emptiness certificates can actually resolve
            candidates.sort_by_key(|&r| {
                let e = &st.mat[r][col];
                (e.num_terms(), e.total_degree(), r)
            });
            if candidates.is_empty() {
                st.cols_done[col] = true;
                continue;
            }
            // A pivot with a constant-coefficient monomial is nonzero at
            // every parameter point: take it without branching.
            if let Some(&row) = candidates
                .iter()
                .find(|&&r| has_constant_coefficient(&st.mat[r][col]))
            {
                st.apply_pivot(row, col);
                continue;
            }
            // Cascade over candidate rows and their parameter coefficients.
            let mut acc_zero: Vec<(Poly, Poly)> = Vec::new();
            for &row in &candidates {
                let coeffs: Vec<(Poly, Poly)> = aux_coefficients(&st.mat[row][col])
                    .into_iter()
                    .map(|(_, c)| {
                        let key = sqfree_bounded(&c);
                        (c, key)
                    })
                    .collect();
                let mut prior: Vec<(Poly, Poly)> = Vec::new();
                for (c, key) in &coeffs {
                    if !self.budget.step() {
                        self.limit = true;
                        return;
                    }
                    let mut cond = st.cond.clone();
                    let mut ok = true;
                    for (z, zk) in acc_zero.iter().chain(prior.iter()) {
                        if !cond.add_eq_keyed(z, zk) {
                            ok = false;
                            break;
                        }
                    }
                    ok = ok && !c.is_constant() && !cond.contradicts_key(key);
                    if ok && !cond.certainly_empty() {
                        cond.add_ineq_factor(c);
                        let mut child = st.clone();
                        child.cond = cond;
                        child.apply_pivot(row, col);
                        self.descend(child);
                        if self.limit {
                            return;
                        }
                    }
                    prior.push((c.clone(), key.clone()));
                }
                acc_zero.extend(coeffs);
            }
            // Fallthrough: everything in this column vanishes on the branch.
            for (z, zk) in &acc_zero {
                if !st.cond.add_eq_keyed(z, zk) {
                    return;
                }
            }
            if st.cond.certainly_empty() {
                return;
            }
            st.cols_done[col] = true;
        }
    }

    fn finalize_deficient(&mut self, st: ElimState) {
        if !self.budget.step() {
            self.limit = true;
            return;
        }
        self.out.push(Branch {
            eqs: sorted_dedup(st.cond.eqs),
            ineq_factors: st.cond.ineq_factors,
            delta: None,
            e_index: 0,
            e_lead: Poly::zero(),
            u1_power: 0,
            e_nu: Poly::zero(),
        });
    }

    fn finalize_full(&mut self, st: ElimState) {
        let sign = permutation_sign(&st.piv_rows) * permutation_sign(&st.piv_cols);
        let delta = if sign < 0 { st.prev_pivot.neg() } else { st.prev_pivot.clone() };
        let u0 = Var::Aux(AuxVar::U0);
        let u = Var::Aux(AuxVar::U);
        let u1 = Var::Aux(AuxVar::U1);
        let d2 = delta.degree(u0);
        let mut base = st.cond;
        for level in 0..=d2 {
            let e_level = delta.coeff_of(u0, d2 - level);
            let mut mixed: Vec<(Poly, Poly)> = Vec::new();
            let mut pure: Vec<(u32, Poly)> = Vec::new();
            for (m, c) in aux_coefficients(&e_level) {
                if m.exponent(u) > 0 {
                    let key = sqfree_bounded(&c);
                    mixed.push((c, key));
                } else {
                    pure.push((m.exponent(u1), c));
                }
            }
            // On every admissible point the level coefficient is a pure U1
            // power; a constant mixed coefficient never vanishes, so the
            // remaining locus is empty.
            if mixed.iter().any(|(c, _)| c.is_constant() && !c.is_zero()) {
                return;
            }
            pure.sort_by(|a, b| b.0.cmp(&a.0));
            let mut prior: Vec<(Poly, Poly)> = Vec::new();
            for (nu, c) in &pure {
                if !self.budget.step() {
                    self.limit = true;
                    return;
                }
                let constant_lead = c.is_constant();
                let c_key = sqfree_bounded(c);
                let mut child = base.clone();
                let mut ok = true;
                for (z, zk) in mixed.iter().chain(prior.iter()) {
                    if !child.add_eq_keyed(z, zk) {
                        ok = false;
                        break;
                    }
                }
                ok = ok && !(constant_lead && c.is_zero()) && !child.contradicts_key(&c_key);
                if ok && !child.certainly_empty() {
                    // e_nu stays the exact coefficient: Ψ's remaining
                    // coefficients are read from the same determinant, so
                    // rescaling it here would break their coherence.
                    let e_nu = c.clone();
                    let mut ineq_factors = child.ineq_factors.clone();
                    let factor = e_nu.canonical();
                    if !factor.is_constant() && !ineq_factors.contains(&factor) {
                        ineq_factors.push(factor);
                    }
                    self.out.push(Branch {
                        eqs: sorted_dedup(child.eqs),
                        ineq_factors,
                        delta: Some(delta.clone()),
                        e_index: level as usize,
                        e_lead: e_level.clone(),
                        u1_power: *nu,
                        e_nu,
                    });
                }
                if constant_lead {
                    // deeper cases would need this constant to vanish
                    return;
                }
                prior.push((c.clone(), c_key));
            }
            for (_, c) in pure {
                if !base.add_eq(&c) {
                    return;
                }
            }
            for (c, ck) in mixed {
                if !base.add_eq_keyed(&c, &ck) {
                    return;
                }
            }
            if base.certainly_empty() {
                return;
            }
        }
        // Residual locus: all coefficients of delta vanish, yet the pivot
        // cascade asserted a nonzero coefficient of delta. Empty.
    }
}

fn sorted_dedup(mut v: Vec<Poly>) -> Vec<Poly> {
    v.sort();
    v.dedup();
    v
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Coefficients of a polynomial grouped by auxiliary-variable monomial,
/// descending in the fixed lex order. Every returned coefficient is nonzero.
pub(crate) fn aux_coefficients(p: &Poly) -> Vec<(Monomial, Poly)> {
    let mut map: BTreeMap<Monomial, Poly> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (aux_pairs, rest): (Vec<(Var, u32)>, Vec<(Var, u32)>) = m
            .pairs()
            .iter()
            .cloned()
            .partition(|&(v, _)| matches!(v, Var::Aux(_)));
        let key = Monomial::from_pairs(aux_pairs);
        let entry = map.entry(key).or_insert_with(Poly::zero);
        *entry = entry.add(&Poly::from_terms(vec![(Monomial::from_pairs(rest), c.clone())]));
    }
    map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect()
}

fn has_constant_coefficient(p: &Poly) -> bool {
    aux_coefficients(p)
        .iter()
        .any(|(_, c)| c.is_constant() && !c.is_zero())
}

/// Sound, budgeted emptiness certificate for a conjunction of equations:
/// returns true only when a nonzero constant provably lies in the generated
/// ideal, found by iterated pairwise resultants. A `false` answer proves
/// nothing.
pub(crate) fn certainly_empty(eqs: &[Poly]) -> bool {
    let keys: Vec<Poly> = eqs.iter().map(sqfree_bounded).collect();
    certainly_empty_keys(&keys)
}

/// As [`certainly_empty`] with precomputed squarefree keys. Memoized on
/// the sorted key set: sibling branches share most of their conditions.
fn certainly_empty_keys(eqs: &[Poly]) -> bool {
    let mut sorted: Vec<Poly> = eqs.to_vec();
    sorted.sort();
    sorted.dedup();
    use std::cell::RefCell;
    use std::collections::HashMap;
    thread_local! {
        static CACHE: RefCell<HashMap<Vec<Poly>, bool>> = RefCell::new(HashMap::new());
    }
    CACHE.with(|cache| {
        if let Some(&hit) = cache.borrow().get(&sorted) {
            return hit;
        }
        let result = certainly_empty_keys_impl(&sorted);
        let mut cache = cache.borrow_mut();
        if cache.len() > 20_000 {
            cache.clear();
        }
        cache.insert(sorted, result);
        result
    })
}

fn certainly_empty_keys_impl(eqs: &[Poly]) -> bool {
    let mut polys: Vec<Poly> = Vec::new();
    for e in eqs {
        if e.is_zero() {
            continue;
        }
        if e.is_constant() {
            return true;
        }
        if !polys.contains(e) {
            polys.push(e.clone());
        }
    }
    if polys.len() < 2 {
        return false;
    }
    if polys.len() > 8 || polys.iter().map(|p| p.num_terms()).sum::<usize>() > 120 {
        return false;
    }
    for _round in 0..4 {
        let Some(v) = polys.iter().filter_map(|p| p.max_var()).max() else {
            return false;
        };
        let (with_v, mut rest): (Vec<Poly>, Vec<Poly>) =
            polys.into_iter().partition(|p| p.degree(v) > 0);
        if with_v.len() < 2 {
            if rest.len() < 2 {
                return false;
            }
            polys = rest;
            continue;
        }
        let mut produced = false;
        'pairs: for i in 0..with_v.len() {
            for j in (i + 1)..with_v.len() {
                if with_v[i].total_degree() > 16
                    || with_v[j].total_degree() > 16
                    || with_v[i].num_terms() > 60
                    || with_v[j].num_terms() > 60
                    || with_v[i].coeff_bits() > 2048
                    || with_v[j].coeff_bits() > 2048
                {
                    continue;
                }
                let Some(r) = resultant_bounded(&with_v[i], &with_v[j], v, 40_000) else {
                    continue;
                };
                if r.is_zero() {
                    continue;
                }
                if r.is_constant() {
                    return true;
                }
                let c = r.squarefree_part();
                if !rest.contains(&c) {
                    rest.push(c);
                    produced = true;
                }
                if rest.len() > 8 {
                    break 'pairs;
                }
            }
        }
        if !produced || rest.len() < 2 {
            return false;
        }
        polys = rest;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::DecomposeConfig;
    use num_bigint::BigInt;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn yv() -> Var {
        Var::Base(0)
    }
    fn y0() -> Poly {
        Poly::var(Var::Aux(AuxVar::Y0))
    }
    fn y1() -> Poly {
        Poly::var(Var::Aux(AuxVar::Y1))
    }
    fn uu() -> Var {
        Var::Aux(AuxVar::U)
    }
    fn u0() -> Var {
        Var::Aux(AuxVar::U0)
    }
    fn u1() -> Var {
        Var::Aux(AuxVar::U1)
    }

    /// The homogenized system {Y² + Y·Y0, Y1·Y − Y0²}.
    fn example_system() -> HomogSystem {
        let y = Poly::var(yv());
        let g1 = y.pow(2).add(&y.mul(&y0()));
        let g2 = y1().mul(&y).sub(&y0().pow(2));
        HomogSystem::new(vec![g1, g2], yv())
    }

    #[test]
    fn degree_formula() {
        assert_eq!(macaulay_degree(&[2, 2, 1]).unwrap(), 3);
        assert_eq!(macaulay_degree(&[1, 1]).unwrap(), 1);
        assert_eq!(macaulay_degree(&[3, 2, 1]).unwrap(), 4);
        assert_eq!(macaulay_degree(&[]), Err(CasesplitError::EmptySystem));
    }

    #[test]
    fn example_matrix_shape() {
        let sys = example_system();
        assert!(sys.is_well_formed());
        assert_eq!(sys.gammas, vec![2, 2, 1]);
        let a = build_macaulay(&sys);
        assert_eq!(a.rows(), 10);
        assert_eq!(a.cols(), 12);
        assert_eq!(a.num_split, 6);
        assert_eq!(a.num_rank(), Some(6));
    }

    #[test]
    fn linear_gen_matrix_shape() {
        // {Y − Y0, linear form}: D = 1, 3 rows
        let g = Poly::var(yv()).sub(&y0());
        let a = build_macaulay(&HomogSystem::new(vec![g], yv()));
        assert_eq!(a.degree, 1);
        assert_eq!(a.rows(), 3);
        assert_eq!(a.cols(), 2);
    }

    #[test]
    fn example_determinant_factors() {
        let sys = example_system();
        let a = build_macaulay(&sys);
        let mut budget = Budget::new(&DecomposeConfig::default());
        let branches = case_split_determinants(&a, &mut budget).unwrap();
        assert_eq!(branches.len(), 1, "one branch expected");
        let b = &branches[0];
        assert!(b.eqs.is_empty());
        assert!(b.ineq().is_one());
        let delta = b.delta.as_ref().unwrap();
        // det(Δ) = c · U1³ · (U − U0 + U1)
        let expected = Poly::var_pow(u1(), 3)
            .mul(&Poly::var(uu()).sub(&Poly::var(u0())).add(&Poly::var(u1())));
        assert_eq!(delta.canonical(), expected.canonical());
    }

    #[test]
    fn bareiss_simple() {
        let id = vec![
            vec![Poly::one(), Poly::zero()],
            vec![Poly::zero(), Poly::one()],
        ];
        assert_eq!(bareiss_determinant(&id), Poly::one());
        let x = Poly::var(Var::Base(0));
        let m = vec![
            vec![x.clone(), Poly::one()],
            vec![Poly::one(), x.clone()],
        ];
        assert_eq!(bareiss_determinant(&m), x.pow(2).sub(&Poly::one()));
    }

    fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
        let n = m.len();
        if n == 0 {
            return Poly::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Poly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Poly>> = (1..n)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[r][c].clone())
                        .collect()
                })
                .collect();
            let term = m[0][j].mul(&cofactor_det(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn bareiss_matches_cofactor_oracle() {
        let mut rng = StdRng::seed_from_u64(7);
        for trial in 0..60 {
            let n = 1 + (trial % 5);
            let m: Vec<Vec<Poly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            Poly::constant(BigRational::from_integer(BigInt::from(
                                rng.gen_range(-4i64..=4),
                            )))
                        })
                        .collect()
                })
                .collect();
            assert_eq!(bareiss_determinant(&m), cofactor_det(&m));
        }
    }

    #[test]
    fn bareiss_matches_cofactor_with_variables() {
        let mut rng = StdRng::seed_from_u64(11);
        let x = Var::Base(0);
        let y = Var::Base(1);
        for trial in 0..12 {
            let n = 2 + (trial % 3);
            let m: Vec<Vec<Poly>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let c0 = rng.gen_range(-3i64..=3);
                            let cx = rng.gen_range(-2i64..=2);
                            let cy = rng.gen_range(-2i64..=2);
                            Poly::from_int(c0)
                                .add(&Poly::var(x).scale_int(cx))
                                .add(&Poly::var(y).scale_int(cy))
                        })
                        .collect()
                })
                .collect();
            assert_eq!(bareiss_determinant(&m), cofactor_det(&m));
        }
    }

    #[test]
    fn parametric_split_covers_parameter_line() {
        // {x·Y − Y0, linear form}: the homogeneous system has a positive
        // dimensional solution set, so no full-rank submatrix exists and
        // every branch is rank-deficient; the branch loci still cover the
        // parameter space disjointly.
        let x = Poly::var(Var::Base(0));
        let g = x.mul(&Poly::var(Var::Base(1))).sub(&y0());
        let sys = HomogSystem::new(vec![g], Var::Base(1));
        let a = build_macaulay(&sys);
        assert_eq!(a.rows(), 3);
        let mut budget = Budget::new(&DecomposeConfig::default());
        let branches = case_split_determinants(&a, &mut budget).unwrap();
        assert!(!branches.is_empty());
        assert!(branches.iter().all(|b| b.delta.is_none()));
        for xv in -3i64..=3 {
            let point: BTreeMap<Var, BigRational> =
                [(Var::Base(0), BigRational::from_integer(BigInt::from(xv)))]
                    .into_iter()
                    .collect();
            let hits = branches
                .iter()
                .filter(|b| {
                    b.eqs.iter().all(|e| e.eval_partial(&point).is_zero())
                        && !b.ineq().eval_partial(&point).is_zero()
                })
                .count();
            assert_eq!(hits, 1, "x = {} must lie in exactly one branch", xv);
        }
    }

    #[test]
    fn emptiness_certificate() {
        let x = Poly::var(Var::Base(0));
        let y = Poly::var(Var::Base(1));
        assert!(certainly_empty(&[x.clone(), x.add(&Poly::one())]));
        assert!(!certainly_empty(&[x.add(&y), x.sub(&y)]));
        assert!(!certainly_empty(&[x.clone()]));
    }
}
