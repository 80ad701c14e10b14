//! Graded free complexes over a weighted polynomial ring.
//!
//! Provides the Eagon–Northcott complex of a `2 x m` matrix of monomials,
//! the mapping cone of multiplication by a homogeneous polynomial, the two
//! explicit resolutions built from them (`b = 1` and `b = n`), a verifier for
//! the complex/homogeneity/minimality properties and a pruning routine that
//! removes unit entries.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{self, ArithmeticSequence};
use crate::exactalg::{AlgebraError, Field, Homogeneity, PolyMatrix, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("matrix entry ({row},{col}) is not a monomial")]
    NonMonomialEntry { row: usize, col: usize },
    #[error("column {col} has degree difference {found}, expected {expected}")]
    InhomogeneousColumns { col: usize, expected: i64, found: i64 },
    #[error("expected a 2-row matrix with at least 2 columns, got {rows}x{cols}")]
    BadMatrixShape { rows: usize, cols: usize },
    #[error("construction needs b = {expected}, but the sequence has b = {found}")]
    WrongCase { expected: String, found: u64 },
    #[error("multiplier is not homogeneous")]
    InhomogeneousMultiplier,
    #[error("source and target complexes are incompatible: {0}")]
    IncompatibleComplexes(String),
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Basis element `(e_{i_1} ∧ ... ∧ e_{i_{s+1}}) ⊗ λ0^{v0} λ1^{v1}` of the
/// Eagon–Northcott complex. Columns are 1-based and strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EnLabel {
    pub columns: Vec<usize>,
    pub v0: usize,
    pub v1: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConePart {
    ShiftedSource,
    Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConeLabel {
    pub part: ConePart,
    pub inner: Box<BasisLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisLabel {
    /// The generator of `R` in homological degree 0.
    Unit,
    En(EnLabel),
    Cone(ConeLabel),
    /// The k-th minimal generator found by the oracle.
    Generator(usize),
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::Unit => write!(f, "1"),
            BasisLabel::En(l) => {
                let cols: Vec<String> = l.columns.iter().map(|c| format!("e{c}")).collect();
                write!(f, "{}(x)l0^{}l1^{}", cols.join("^"), l.v0, l.v1)
            }
            BasisLabel::Cone(c) => match c.part {
                ConePart::ShiftedSource => write!(f, "src[{}]", c.inner),
                ConePart::Target => write!(f, "tgt[{}]", c.inner),
            },
            BasisLabel::Generator(k) => write!(f, "g{k}"),
        }
    }
}

/// `⊕ R(-shift_i)` with one label per basis element.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedFreeModule {
    shifts: Vec<i64>,
    labels: Vec<BasisLabel>,
}

impl GradedFreeModule {
    pub fn new(shifts: Vec<i64>, labels: Vec<BasisLabel>) -> Self {
        assert_eq!(shifts.len(), labels.len(), "one label per shift");
        GradedFreeModule { shifts, labels }
    }

    /// `R` itself.
    pub fn unit() -> Self {
        Self::new(vec![0], vec![BasisLabel::Unit])
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }
}

/// `F_0 <- F_1 <- ... <- F_L` with polynomial differentials.
///
/// `modules[s]` is `F_s`; `d(s)` (for `1 <= s <= L`) is the
/// `rank F_{s-1} x rank F_s` matrix of `F_s -> F_{s-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplex<F> {
    modules: Vec<GradedFreeModule>,
    differentials: Vec<PolyMatrix<F>>,
}

impl<F: Field> GradedComplex<F> {
    /// `differentials[k]` is `d_{k+1}`. Checks shape compatibility only.
    pub fn new(modules: Vec<GradedFreeModule>, differentials: Vec<PolyMatrix<F>>) -> Result<Self, HomologyError> {
        if modules.is_empty() || differentials.len() + 1 != modules.len() {
            return Err(HomologyError::Malformed(format!(
                "{} modules and {} differentials",
                modules.len(),
                differentials.len()
            )));
        }
        for (k, d) in differentials.iter().enumerate() {
            let s = k + 1;
            if d.rows() != modules[s - 1].rank() || d.cols() != modules[s].rank() {
                return Err(HomologyError::Malformed(format!(
                    "d_{s} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    modules[s - 1].rank(),
                    modules[s].rank()
                )));
            }
        }
        Ok(GradedComplex { modules, differentials })
    }

    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn module(&self, s: usize) -> &GradedFreeModule {
        &self.modules[s]
    }

    pub fn modules(&self) -> &[GradedFreeModule] {
        &self.modules
    }

    /// `d_s : F_s -> F_{s-1}`, `1 <= s <= length`.
    pub fn d(&self, s: usize) -> &PolyMatrix<F> {
        assert!(s >= 1 && s <= self.length(), "no differential d_{s}");
        &self.differentials[s - 1]
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(GradedFreeModule::rank).collect()
    }

    /// Drops trailing zero modules.
    pub fn trimmed(mut self) -> Self {
        while self.modules.len() > 1 && self.modules.last().unwrap().rank() == 0 {
            self.modules.pop();
            self.differentials.pop();
        }
        self
    }

    /// Replaces one differential entry. Intended for tests and fault injection.
    pub fn set_entry(&mut self, s: usize, row: usize, col: usize, p: Polynomial<F>) {
        self.differentials[s - 1].set(row, col, p);
    }

    /// The complex without its last module.
    pub fn truncated(&self) -> Self {
        let mut c = self.clone();
        if c.modules.len() > 1 {
            c.modules.pop();
            c.differentials.pop();
        }
        c
    }
}

/// Multiplication by a homogeneous polynomial of a given degree.
#[derive(Clone, Debug)]
pub struct MultiplicationMap<F> {
    factor: Polynomial<F>,
    degree: i64,
}

impl<F: Field> MultiplicationMap<F> {
    pub fn new(ring: &PolyRing<F>, factor: Polynomial<F>) -> Result<Self, HomologyError> {
        match ring.weighted_degree(&factor)? {
            Homogeneity::Homogeneous(degree) => Ok(MultiplicationMap { factor, degree }),
            Homogeneity::Inhomogeneous => Err(HomologyError::InhomogeneousMultiplier),
        }
    }

    /// The zero map, regarded as homogeneous of the given degree.
    pub fn zero(degree: i64) -> Self {
        MultiplicationMap { factor: Polynomial::zero(), degree }
    }

    pub fn factor(&self) -> &Polynomial<F> {
        &self.factor
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }
}

/// k-subsets of `1..=m` in lexicographic order.
fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut cur: Vec<usize> = (1..=k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        while i > 0 && cur[i - 1] == m - k + i {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for t in i..k {
            cur[t] = cur[t - 1] + 1;
        }
    }
}

/// Column data of a `2 x m` monomial matrix: top entries, bottom entries,
/// top degrees, and the common difference `deg(bottom) - deg(top)`.
struct ColumnData<F> {
    top: Vec<Polynomial<F>>,
    bottom: Vec<Polynomial<F>>,
    top_deg: Vec<i64>,
    diff: i64,
}

fn column_data<F: Field>(ring: &PolyRing<F>, m: &PolyMatrix<F>) -> Result<ColumnData<F>, HomologyError> {
    if m.rows() != 2 || m.cols() < 2 {
        return Err(HomologyError::BadMatrixShape { rows: m.rows(), cols: m.cols() });
    }
    let mut data = ColumnData { top: vec![], bottom: vec![], top_deg: vec![], diff: 0 };
    for c in 0..m.cols() {
        let mut degs = [0i64; 2];
        for (r, deg) in degs.iter_mut().enumerate() {
            let e = m.get(r, c);
            if !e.is_monomial() {
                return Err(HomologyError::NonMonomialEntry { row: r, col: c });
            }
            *deg = ring.monomial_degree(&e.terms()[0].0)?;
        }
        let diff = degs[1] - degs[0];
        if c == 0 {
            data.diff = diff;
        } else if diff != data.diff {
            return Err(HomologyError::InhomogeneousColumns { col: c, expected: data.diff, found: diff });
        }
        data.top.push(m.get(0, c).clone());
        data.bottom.push(m.get(1, c).clone());
        data.top_deg.push(degs[0]);
    }
    Ok(data)
}

/// The Eagon–Northcott complex of a `2 x m` matrix of monomials whose columns
/// all have the same degree difference `c = deg(bottom) - deg(top)`.
///
/// Step `s >= 1` has basis `e_I ⊗ λ0^{v0} λ1^{v1}` with `|I| = s+1`,
/// `v0 + v1 = s-1`, ordered by `(I, v1)`; its shift is
/// `sum_{i in I} deg top(i) + (v1 + 1) c`. Removing the `j`-th column of `I`
/// (1-based position) contributes `(-1)^{j+1} top(i_j)` when lowering `v0`
/// and `(-1)^{j+1} bottom(i_j)` when lowering `v1`.
pub fn eagon_northcott<F: Field>(ring: &PolyRing<F>, m: &PolyMatrix<F>) -> Result<GradedComplex<F>, HomologyError> {
    let cols = column_data(ring, m)?;
    let ncols = m.cols();
    let mut modules = vec![GradedFreeModule::unit()];
    let mut index: Vec<HashMap<EnLabel, usize>> = vec![HashMap::new()];
    for s in 1..ncols {
        let mut shifts = Vec::new();
        let mut labels = Vec::new();
        let mut idx = HashMap::new();
        for columns in subsets(ncols, s + 1) {
            let base: i64 = columns.iter().map(|&c| cols.top_deg[c - 1]).sum();
            for v1 in 0..s {
                let label = EnLabel { columns: columns.clone(), v0: s - 1 - v1, v1 };
                idx.insert(label.clone(), labels.len());
                shifts.push(base + (v1 as i64 + 1) * cols.diff);
                labels.push(BasisLabel::En(label));
            }
        }
        modules.push(GradedFreeModule::new(shifts, labels));
        index.push(idx);
    }

    let mut differentials = Vec::new();
    // d_1: the 2x2 minors.
    let mut d1 = PolyMatrix::zeros(1, modules[1].rank());
    for (k, label) in modules[1].labels().iter().enumerate() {
        let BasisLabel::En(l) = label else { unreachable!() };
        d1.set(0, k, m.minor_2x2(ring, l.columns[0] - 1, l.columns[1] - 1)?);
    }
    differentials.push(d1);
    for s in 2..ncols {
        let mut d = PolyMatrix::zeros(modules[s - 1].rank(), modules[s].rank());
        for (k, label) in modules[s].labels().iter().enumerate() {
            let BasisLabel::En(l) = label else { unreachable!() };
            for (pos, &c) in l.columns.iter().enumerate() {
                let rest: Vec<usize> = l.columns.iter().copied().filter(|&x| x != c).collect();
                let sign_positive = pos % 2 == 0;
                let lowered = [
                    (l.v0 >= 1, l.v0.wrapping_sub(1), l.v1, &cols.top[c - 1]),
                    (l.v1 >= 1, l.v0, l.v1.wrapping_sub(1), &cols.bottom[c - 1]),
                ];
                for (ok, v0, v1, entry) in lowered {
                    if !ok {
                        continue;
                    }
                    let target = EnLabel { columns: rest.clone(), v0, v1 };
                    let row = index[s - 1][&target];
                    let term = if sign_positive { entry.clone() } else { ring.neg(entry) };
                    let updated = ring.add(d.get(row, k), &term);
                    d.set(row, k, updated);
                }
            }
        }
        differentials.push(d);
    }
    GradedComplex::new(modules, differentials)
}

/// The mapping cone of `psi : source(-deg psi) -> target`, where `psi` is
/// multiplication by a homogeneous polynomial in every homological degree.
///
/// `F_s = source_{s-1}(-deg psi) ⊕ target_s`, shifted-source block first, with
///
/// ```text
/// d_s = | -d^src_{s-1}   0        |
///       |  psi           d^tgt_s  |
/// ```
pub fn mapping_cone<F: Field>(
    ring: &PolyRing<F>,
    source: &GradedComplex<F>,
    target: &GradedComplex<F>,
    psi: &MultiplicationMap<F>,
) -> Result<GradedComplex<F>, HomologyError> {
    if source.ranks() != target.ranks() {
        return Err(HomologyError::IncompatibleComplexes(format!(
            "ranks {:?} vs {:?}",
            source.ranks(),
            target.ranks()
        )));
    }
    let len = target.length() + 1;
    let src_module = |s: isize| -> Option<&GradedFreeModule> {
        (s >= 0 && (s as usize) <= source.length()).then(|| source.module(s as usize))
    };
    let tgt_module = |s: usize| -> Option<&GradedFreeModule> { (s <= target.length()).then(|| target.module(s)) };

    let mut modules = Vec::new();
    // (rank of shifted-source block, rank of target block) per step
    let mut blocks = Vec::new();
    for s in 0..=len {
        let mut shifts = Vec::new();
        let mut labels = Vec::new();
        let src = src_module(s as isize - 1);
        if let Some(m) = src {
            for (sh, l) in m.shifts().iter().zip(m.labels()) {
                shifts.push(sh + psi.degree());
                labels.push(BasisLabel::Cone(ConeLabel { part: ConePart::ShiftedSource, inner: Box::new(l.clone()) }));
            }
        }
        let tgt = tgt_module(s);
        if let Some(m) = tgt {
            for (sh, l) in m.shifts().iter().zip(m.labels()) {
                shifts.push(*sh);
                labels.push(BasisLabel::Cone(ConeLabel { part: ConePart::Target, inner: Box::new(l.clone()) }));
            }
        }
        blocks.push((src.map_or(0, |m| m.rank()), tgt.map_or(0, |m| m.rank())));
        modules.push(GradedFreeModule::new(shifts, labels));
    }

    let mut differentials = Vec::new();
    for s in 1..=len {
        let (row_src, row_tgt) = blocks[s - 1];
        let (col_src, col_tgt) = blocks[s];
        let mut d = PolyMatrix::zeros(row_src + row_tgt, col_src + col_tgt);
        // -d^src_{s-1}: source_{s-1} -> source_{s-2}
        if s >= 2 && col_src > 0 && row_src > 0 {
            let ds = source.d(s - 1);
            for i in 0..row_src {
                for j in 0..col_src {
                    d.set(i, j, ring.neg(ds.get(i, j)));
                }
            }
        }
        // psi_{s-1}: source_{s-1} -> target_{s-1}
        if col_src > 0 {
            debug_assert_eq!(col_src, row_tgt);
            for i in 0..col_src {
                d.set(row_src + i, i, psi.factor().clone());
            }
        }
        // d^tgt_s: target_s -> target_{s-1}
        if col_tgt > 0 && s <= target.length() {
            let dt = target.d(s);
            for i in 0..row_tgt {
                for j in 0..col_tgt {
                    d.set(row_src + i, col_src + j, dt.get(i, j).clone());
                }
            }
        }
        differentials.push(d);
    }
    GradedComplex::new(modules, differentials)
}

/// The Eagon–Northcott resolution of `R/P` when `b = 1` (here `P = I_2(B)`).
pub fn resolution_b1<F: Field>(seq: &ArithmeticSequence, ring: &PolyRing<F>) -> Result<GradedComplex<F>, HomologyError> {
    if seq.b() != 1 {
        return Err(HomologyError::WrongCase { expected: "1".into(), found: seq.b() });
    }
    eagon_northcott(ring, &curve::matrix_b(seq, ring))
}

/// The mapping cone resolution of `R/P` when `b = n`: the Eagon–Northcott
/// complex of `A` coned off by multiplication with `Delta_{1,2}`.
pub fn resolution_bn<F: Field>(seq: &ArithmeticSequence, ring: &PolyRing<F>) -> Result<GradedComplex<F>, HomologyError> {
    if seq.b() != seq.n() as u64 {
        return Err(HomologyError::WrongCase { expected: format!("n = {}", seq.n()), found: seq.b() });
    }
    let en = eagon_northcott(ring, &curve::matrix_a(seq, ring))?;
    let gens = curve::generators(seq, ring);
    let delta12 = gens.big_deltas()[0].poly.clone();
    let psi = MultiplicationMap::new(ring, delta12)?;
    mapping_cone(ring, &en, &en, &psi)
}

/// Location of a failing entry: `d_step[row][col]` (or of `d_{step-1} d_step`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub step: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn from_witness(witness: Option<Witness>) -> Self {
        CheckResult { passed: witness.is_none(), witness }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexReport {
    pub dd_zero: CheckResult,
    pub homogeneous: CheckResult,
    pub minimal: CheckResult,
}

impl ComplexReport {
    pub fn all_passed(&self) -> bool {
        self.dd_zero.passed && self.homogeneous.passed && self.minimal.passed
    }
}

/// Checks `d_{s-1} d_s = 0`, degree compatibility of every entry with the
/// shifts, and absence of nonzero constant entries. Each check reports the
/// first failure in (step, row, column) order.
pub fn verify_complex<F: Field>(ring: &PolyRing<F>, c: &GradedComplex<F>) -> ComplexReport {
    let mut dd = None;
    'dd: for s in 2..=c.length() {
        let prod = c.d(s - 1).mul(ring, c.d(s)).expect("shapes checked at construction");
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                if !prod.get(i, j).is_zero() {
                    dd = Some(Witness { step: s, row: i, col: j });
                    break 'dd;
                }
            }
        }
    }

    let mut homogeneous = None;
    let mut minimal = None;
    for s in 1..=c.length() {
        let d = c.d(s);
        let (src, tgt) = (c.module(s).shifts(), c.module(s - 1).shifts());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let e = d.get(i, j);
                if e.is_zero() {
                    continue;
                }
                if minimal.is_none() && e.is_unit() {
                    minimal = Some(Witness { step: s, row: i, col: j });
                }
                if homogeneous.is_none() {
                    let ok = matches!(
                        ring.weighted_degree(e),
                        Ok(Homogeneity::Homogeneous(deg)) if deg == src[j] - tgt[i]
                    );
                    if !ok {
                        homogeneous = Some(Witness { step: s, row: i, col: j });
                    }
                }
            }
        }
    }
    ComplexReport {
        dd_zero: CheckResult::from_witness(dd),
        homogeneous: CheckResult::from_witness(homogeneous),
        minimal: CheckResult::from_witness(minimal),
    }
}

/// Removes unit entries until none is left.
///
/// For a unit `u = d_s[i][j]`, the basis pair `(e_j in F_s, f_i in F_{s-1})`
/// is split off: `d_s` becomes `D - a u^{-1} b` on the remaining rows and
/// columns, row `j` is dropped from `d_{s+1}` and column `i` from `d_{s-1}`.
/// Entries are scanned step by step in row-major order; the first unit found
/// is eliminated. The result is homotopy equivalent to the input.
pub fn prune_units<F: Field>(ring: &PolyRing<F>, c: &GradedComplex<F>) -> GradedComplex<F> {
    let mut modules = c.modules.clone();
    let mut diffs = c.differentials.clone();
    loop {
        let mut found = None;
        'scan: for (k, d) in diffs.iter().enumerate() {
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if d.get(i, j).is_unit() {
                        found = Some((k + 1, i, j));
                        break 'scan;
                    }
                }
            }
        }
        let Some((s, i, j)) = found else { break };
        let d = &diffs[s - 1];
        let u_inv = d.get(i, j).terms()[0].1.inverse();
        let mut nd = PolyMatrix::zeros(d.rows() - 1, d.cols() - 1);
        for (ri, r) in (0..d.rows()).filter(|&r| r != i).enumerate() {
            let a = d.get(r, j);
            for (ci, col) in (0..d.cols()).filter(|&col| col != j).enumerate() {
                let mut e = d.get(r, col).clone();
                if !a.is_zero() {
                    let b = d.get(i, col);
                    if !b.is_zero() {
                        let corr = ring.scalar_mul(&u_inv, &ring.mul(a, b));
                        e = ring.sub(&e, &corr);
                    }
                }
                nd.set(ri, ci, e);
            }
        }
        diffs[s - 1] = nd;
        if s < diffs.len() {
            diffs[s] = drop_row(&diffs[s], j);
        }
        if s >= 2 {
            diffs[s - 2] = drop_col(&diffs[s - 2], i);
        }
        modules[s] = drop_basis(&modules[s], j);
        modules[s - 1] = drop_basis(&modules[s - 1], i);
    }
    GradedComplex { modules, differentials: diffs }
}

fn drop_row<F: Field>(m: &PolyMatrix<F>, row: usize) -> PolyMatrix<F> {
    let mut out = PolyMatrix::zeros(m.rows() - 1, m.cols());
    for (ri, r) in (0..m.rows()).filter(|&r| r != row).enumerate() {
        for c in 0..m.cols() {
            out.set(ri, c, m.get(r, c).clone());
        }
    }
    out
}

fn drop_col<F: Field>(m: &PolyMatrix<F>, col: usize) -> PolyMatrix<F> {
    let mut out = PolyMatrix::zeros(m.rows(), m.cols() - 1);
    for r in 0..m.rows() {
        for (ci, c) in (0..m.cols()).filter(|&c| c != col).enumerate() {
            out.set(r, ci, m.get(r, c).clone());
        }
    }
    out
}

fn drop_basis(m: &GradedFreeModule, k: usize) -> GradedFreeModule {
    let mut shifts = m.shifts.clone();
    let mut labels = m.labels.clone();
    shifts.remove(k);
    labels.remove(k);
    GradedFreeModule { shifts, labels }
}

/// `n choose k` in `u64` (exact for the small arguments used here).
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::ArithmeticSequence;
    use num_rational::BigRational;

    type Q = BigRational;

    fn seq(m0: u64, d: u64, n: usize) -> ArithmeticSequence {
        ArithmeticSequence::validate(m0, d, n).unwrap()
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(subsets(3, 3), vec![vec![1, 2, 3]]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn en_of_a_has_expected_ranks() {
        let s = seq(5, 1, 4);
        let r = s.ring::<Q>();
        let en = eagon_northcott(&r, &curve::matrix_a(&s, &r)).unwrap();
        assert_eq!(en.ranks(), vec![1, 6, 8, 3]);
        assert!(verify_complex(&r, &en).all_passed());
    }

    #[test]
    fn en_rank_formula() {
        // a 2 x m generic-looking monomial matrix: columns (X_i, X_{i+1}) of a long sequence
        for m in 2..=7usize {
            let s = ArithmeticSequence::from_parameters(100, 1, m).unwrap();
            let r = s.ring::<Q>();
            let en = eagon_northcott(&r, &curve::matrix_a(&s, &r)).unwrap();
            for step in 1..m {
                assert_eq!(en.module(step).rank() as u64, step as u64 * binomial(m as u64, step as u64 + 1));
            }
            assert!(verify_complex(&r, &en).all_passed(), "m = {m}");
        }
    }

    #[test]
    fn en_of_two_columns_is_the_minor() {
        let s = seq(5, 2, 2);
        let r = s.ring::<Q>();
        let a = curve::matrix_a(&s, &r);
        let en = eagon_northcott(&r, &a).unwrap();
        assert_eq!(en.ranks(), vec![1, 1]);
        assert_eq!(en.d(1).get(0, 0), &a.minor_2x2(&r, 0, 1).unwrap());
        assert_eq!(en.module(1).shifts(), &[2 * 5 + 2 * 2]);
    }

    #[test]
    fn en_rejects_bad_matrices() {
        let s = seq(5, 1, 4);
        let r = s.ring::<Q>();
        let mut a = curve::matrix_a(&s, &r);
        a.set(0, 1, r.add(&r.var(1), &r.var(2)));
        assert!(matches!(eagon_northcott(&r, &a), Err(HomologyError::NonMonomialEntry { row: 0, col: 1 })));
        let mut a = curve::matrix_a(&s, &r);
        a.set(1, 2, r.var(4));
        assert!(matches!(eagon_northcott(&r, &a), Err(HomologyError::InhomogeneousColumns { col: 2, .. })));
    }

    #[test]
    fn b1_resolution_of_5_1_4() {
        let s = seq(5, 1, 4);
        let r = s.ring::<Q>();
        let c = resolution_b1(&s, &r).unwrap();
        assert_eq!(c.ranks(), vec![1, 10, 20, 15, 4]);
        assert!(verify_complex(&r, &c).all_passed());
        let mut shifts = c.module(1).shifts().to_vec();
        shifts.sort();
        assert_eq!(shifts, vec![12, 13, 14, 14, 15, 15, 16, 16, 17, 18]);
        let mut gen_degs = curve::generators(&s, &r).degrees();
        gen_degs.sort();
        assert_eq!(shifts, gen_degs);
        assert!(matches!(resolution_b1(&seq(8, 1, 4), &r), Err(HomologyError::WrongCase { .. })));
    }

    #[test]
    fn bn_resolution_of_8_1_4() {
        let s = seq(8, 1, 4);
        let r = s.ring::<Q>();
        let c = resolution_bn(&s, &r).unwrap().trimmed();
        assert_eq!(c.ranks(), vec![1, 7, 14, 11, 3]);
        assert!(verify_complex(&r, &c).all_passed());
        // the new step-1 generator sits in degree (a+d+1) m0 = 24
        assert_eq!(c.module(1).shifts()[0], 24);
        let mut step1 = c.module(1).shifts().to_vec();
        step1.sort();
        let mut expected: Vec<i64> = curve::generators(&s, &r).degrees();
        expected.sort();
        assert_eq!(step1, expected);
        assert!(matches!(resolution_bn(&seq(5, 1, 4), &r), Err(HomologyError::WrongCase { .. })));
    }

    #[test]
    fn cone_of_zero_map_is_a_direct_sum() {
        let s = seq(5, 2, 2);
        let r = s.ring::<Q>();
        let en = eagon_northcott(&r, &curve::matrix_a(&s, &r)).unwrap();
        let cone = mapping_cone(&r, &en, &en, &MultiplicationMap::zero(7)).unwrap();
        assert_eq!(cone.ranks(), vec![1, 2, 1]);
        assert!(cone.d(1).get(0, 0).is_zero());
        assert!(cone.d(2).get(1, 0).is_zero());
        assert_eq!(cone.module(1).shifts(), &[7, 14]);
        assert_eq!(cone.module(2).shifts(), &[21]);
        assert!(verify_complex(&r, &cone).all_passed());
    }

    #[test]
    fn cone_rank_additivity() {
        for (m0, d, n) in [(8, 1, 4), (6, 1, 3), (10, 3, 5)] {
            let s = seq(m0, d, n);
            let r = s.ring::<Q>();
            let en = eagon_northcott(&r, &curve::matrix_a(&s, &r)).unwrap();
            let c = resolution_bn(&s, &r).unwrap();
            for step in 0..=c.length() {
                let src = if step >= 1 && step - 1 <= en.length() { en.module(step - 1).rank() } else { 0 };
                let tgt = if step <= en.length() { en.module(step).rank() } else { 0 };
                assert_eq!(c.module(step).rank(), src + tgt);
            }
        }
    }

    #[test]
    fn inhomogeneous_multiplier_is_rejected() {
        let s = seq(5, 1, 4);
        let r = s.ring::<Q>();
        let f = r.add(&r.var(0), &r.var(1));
        assert!(matches!(MultiplicationMap::new(&r, f), Err(HomologyError::InhomogeneousMultiplier)));
    }

    #[test]
    fn verifier_catches_corruption() {
        let s = seq(5, 1, 4);
        let r = s.ring::<Q>();
        let c = resolution_b1(&s, &r).unwrap();

        let mut unit = c.clone();
        unit.set_entry(2, 0, 0, r.one());
        let rep = verify_complex(&r, &unit);
        assert!(!rep.minimal.passed);
        assert_eq!(rep.minimal.witness, Some(Witness { step: 2, row: 0, col: 0 }));

        let mut signs = c.clone();
        let (row, col) = (0..signs.d(2).rows())
            .flat_map(|i| (0..signs.d(2).cols()).map(move |j| (i, j)))
            .find(|&(i, j)| !c.d(2).get(i, j).is_zero())
            .unwrap();
        let flipped = r.neg(c.d(2).get(row, col));
        signs.set_entry(2, row, col, flipped);
        let rep = verify_complex(&r, &signs);
        assert!(!rep.dd_zero.passed);
        assert_eq!(rep.dd_zero.witness.unwrap().step, 2);
        assert!(rep.homogeneous.passed);
    }

    #[test]
    fn pruning_removes_trivial_pairs() {
        // R <- R(-5) ⊕ R(-12) <- R(-12): the second column cancels against a unit.
        let s = seq(5, 1, 4);
        let r = s.ring::<Q>();
        let d1 = PolyMatrix::from_entries(1, 2, vec![r.var(0), r.mul(&r.var(0), &r.var(2))]).unwrap();
        let d2 = PolyMatrix::from_entries(2, 1, vec![r.neg(&r.var(2)), r.one()]).unwrap();
        let c = GradedComplex::new(
            vec![
                GradedFreeModule::unit(),
                GradedFreeModule::new(vec![5, 12], vec![BasisLabel::Generator(0), BasisLabel::Generator(1)]),
                GradedFreeModule::new(vec![12], vec![BasisLabel::Generator(0)]),
            ],
            vec![d1, d2],
        )
        .unwrap();
        let rep = verify_complex(&r, &c);
        assert!(rep.dd_zero.passed && rep.homogeneous.passed && !rep.minimal.passed);
        let p = prune_units(&r, &c).trimmed();
        assert_eq!(p.ranks(), vec![1, 1]);
        assert_eq!(p.d(1).get(0, 0), &r.var(0));
        assert!(verify_complex(&r, &p).all_passed());
        // pruning a minimal complex is the identity
        let b1 = resolution_b1(&s, &r).unwrap();
        assert_eq!(prune_units(&r, &b1), b1);
    }
}
