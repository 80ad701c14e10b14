//! Closed-form Betti numbers and graded shifts for the three resolved
//! families (`b = 1`, `b = n`, and `b = 2` with `n = 4`).
//!
//! Nothing here builds a complex. Shift tables come either from enumerating
//! the Eagon–Northcott basis labels (`basis_shifts_*`) or from a literal
//! transcription of the displayed graded resolutions (`displayed_shifts_*`,
//! `shifts_gor4`).

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::ArithmeticSequence;
use crate::homology::{binomial, GradedComplex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClosedFormError {
    #[error("closed form needs {expected}, but the sequence has b = {b}, n = {n}")]
    WrongCase { expected: String, b: u64, n: usize },
    #[error("shift does not fit in 64 bits")]
    Overflow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseTag {
    B1,
    Bn,
    Gor4,
    Oracle,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::B1 => "b1",
            CaseTag::Bn => "bn",
            CaseTag::Gor4 => "gor4",
            CaseTag::Oracle => "oracle",
        })
    }
}

/// Graded shifts per homological step, each step kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    case: CaseTag,
    rows: BTreeMap<usize, Vec<i64>>,
}

impl BettiTable {
    /// A table with `rows[0] = {0}`.
    pub fn new(case: CaseTag) -> Self {
        let mut rows = BTreeMap::new();
        rows.insert(0, vec![0]);
        BettiTable { case, rows }
    }

    /// Builds a table from explicit rows; step 0 must be `{0}`.
    pub fn from_rows(case: CaseTag, rows: BTreeMap<usize, Vec<i64>>) -> Self {
        let mut t = BettiTable { case, rows };
        for v in t.rows.values_mut() {
            v.sort_unstable();
        }
        t.rows.retain(|_, v| !v.is_empty());
        debug_assert_eq!(t.rows.get(&0).map(Vec::as_slice), Some(&[0][..]));
        t
    }

    /// The shift table of a graded complex.
    pub fn from_complex<F>(case: CaseTag, c: &GradedComplex<F>) -> Self
    where
        F: crate::exactalg::Field,
    {
        let rows = c
            .modules()
            .iter()
            .enumerate()
            .map(|(s, m)| (s, m.shifts().to_vec()))
            .collect();
        Self::from_rows(case, rows)
    }

    pub fn push(&mut self, step: usize, shift: i64) {
        let row = self.rows.entry(step).or_default();
        let pos = row.partition_point(|&x| x <= shift);
        row.insert(pos, shift);
    }

    pub fn case(&self) -> CaseTag {
        self.case
    }

    pub fn with_case(mut self, case: CaseTag) -> Self {
        self.case = case;
        self
    }

    pub fn rows(&self) -> &BTreeMap<usize, Vec<i64>> {
        &self.rows
    }

    /// Sorted shifts of step `s` (empty if the step is zero).
    pub fn step(&self, s: usize) -> &[i64] {
        self.rows.get(&s).map_or(&[], Vec::as_slice)
    }

    /// Index of the last nonzero step.
    pub fn length(&self) -> usize {
        self.rows.keys().next_back().copied().unwrap_or(0)
    }

    /// `(β_0, ..., β_length)`.
    pub fn betti(&self) -> Vec<u64> {
        (0..=self.length()).map(|s| self.step(s).len() as u64).collect()
    }

    /// `Σ (-1)^s β_s`.
    pub fn alternating_sum(&self) -> i64 {
        self.betti()
            .iter()
            .enumerate()
            .map(|(s, &b)| if s % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// Whether `rows[L - s] = {total - x : x in rows[s]}` for every `s`.
    pub fn is_palindromic(&self, total: i64) -> bool {
        let len = self.length();
        (0..=len).all(|s| {
            let mut mirrored: Vec<i64> = self.step(s).iter().map(|x| total - x).collect();
            mirrored.sort_unstable();
            mirrored == self.step(len - s)
        })
    }

    /// Same shifts at every step, ignoring the case tag.
    pub fn same_shifts(&self, other: &BettiTable) -> bool {
        self.rows == other.rows
    }
}

/// `(1, s C(n+1, s+1) for s = 1..n)`.
pub fn betti_b1(n: usize) -> Vec<u64> {
    let n = n as u64;
    std::iter::once(1).chain((1..=n).map(|s| s * binomial(n + 1, s + 1))).collect()
}

/// `(1, 1 + C(n,2), (s-1) C(n,s) + s C(n,s+1) for s = 2..n)`.
pub fn betti_bn(n: usize) -> Vec<u64> {
    let n = n as u64;
    let mut v = vec![1, 1 + binomial(n, 2)];
    v.extend((2..=n).map(|s| (s - 1) * binomial(n, s) + s * binomial(n, s + 1)));
    v
}

fn to_i64(x: i128) -> Result<i64, ClosedFormError> {
    i64::try_from(x).map_err(|_| ClosedFormError::Overflow)
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=m {
            cur.push(x);
            go(x + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, k, &mut Vec::new(), &mut out);
    out
}

/// Shifts of the Eagon–Northcott complex of a 2-row monomial matrix given
/// only by its column top-degrees and common column difference `c`:
/// step `s` contributes `Σ_{i in I} top(i) + (v1+1) c` for `|I| = s+1`,
/// `0 <= v1 <= s-1`.
fn en_shift_rows(top: &[i128], c: i128) -> Vec<Vec<i128>> {
    let m = top.len();
    let mut rows = vec![vec![0]];
    for s in 1..m {
        let mut row = Vec::new();
        for cols in subsets(m, s + 1) {
            let base: i128 = cols.iter().map(|&i| top[i - 1]).sum();
            for v1 in 0..s {
                row.push(base + (v1 as i128 + 1) * c);
            }
        }
        rows.push(row);
    }
    rows
}

fn check_case(seq: &ArithmeticSequence, b: u64, expected: &str) -> Result<(), ClosedFormError> {
    if seq.b() != b {
        return Err(ClosedFormError::WrongCase { expected: expected.into(), b: seq.b(), n: seq.n() });
    }
    Ok(())
}

fn table_from(case: CaseTag, rows: Vec<Vec<i128>>) -> Result<BettiTable, ClosedFormError> {
    let mut out = BTreeMap::new();
    for (s, row) in rows.into_iter().enumerate() {
        out.insert(s, row.into_iter().map(to_i64).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(BettiTable::from_rows(case, out))
}

/// Graded shifts for `b = 1` from the basis labels of the complex of `B`.
pub fn basis_shifts_b1(seq: &ArithmeticSequence) -> Result<BettiTable, ClosedFormError> {
    check_case(seq, 1, "b = 1")?;
    let (m0, d, n, a) = (seq.m0() as i128, seq.d() as i128, seq.n(), seq.a() as i128);
    let mut top = vec![a * (m0 + n as i128 * d)];
    top.extend((0..n).map(|i| m0 + i as i128 * d));
    table_from(CaseTag::B1, en_shift_rows(&top, d))
}

/// Graded shifts for `b = n`: the complex of `A` plus a copy shifted by
/// `(a+d+1) m0` one step up.
pub fn basis_shifts_bn(seq: &ArithmeticSequence) -> Result<BettiTable, ClosedFormError> {
    check_case(seq, seq.n() as u64, "b = n")?;
    let (m0, d, n, a) = (seq.m0() as i128, seq.d() as i128, seq.n(), seq.a() as i128);
    let top: Vec<i128> = (0..n).map(|i| m0 + i as i128 * d).collect();
    let en = en_shift_rows(&top, d);
    let shift = (a + d + 1) * m0;
    let mut rows = vec![Vec::new(); n + 1];
    for (s, row) in en.iter().enumerate() {
        rows[s].extend(row);
        rows[s + 1].extend(row.iter().map(|x| x + shift));
    }
    table_from(CaseTag::Bn, rows)
}

/// One `R(-shift)` summand of a displayed graded resolution, with a
/// description of the family and indices it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplayedSummand {
    pub step: usize,
    pub shift: i64,
    pub source: String,
}

fn summand(step: usize, shift: i128, source: String) -> Result<DisplayedSummand, ClosedFormError> {
    Ok(DisplayedSummand { step, shift: to_i64(shift)?, source })
}

/// Literal transcription of the displayed graded resolution for `b = 1`.
///
/// The display writes each module between the arrows `d_s` and `d_{s-1}`;
/// such a module is the target of `d_s`, so it is assigned to step `s - 1`.
/// Lines: the leftmost module (step `n`), the module after `d_n` (step `n-1`),
/// the generic module after `d_s` for `3 <= s <= n-1`, and the module after
/// `d_2` (step 1).
pub fn displayed_shifts_b1(seq: &ArithmeticSequence) -> Result<Vec<DisplayedSummand>, ClosedFormError> {
    check_case(seq, 1, "b = 1")?;
    let (m0, d, n, a) = (seq.m0() as i128, seq.d() as i128, seq.n(), seq.a() as i128);
    let ni = n as i128;
    let c2 = ni * (ni + 1) / 2;
    let mut out = Vec::new();

    for k in 1..=ni {
        out.push(summand(n, (a + ni + d) * m0 - k * d + c2 * d, format!("leftmost, k={k}"))?);
    }
    let generic = |s: usize, out: &mut Vec<DisplayedSummand>, label: &str| -> Result<(), ClosedFormError> {
        let si = s as i128;
        for r in subsets(n, s) {
            let sum: i128 = r.iter().map(|&x| x as i128).sum();
            for k in 1..si {
                out.push(summand(s - 1, si * m0 - k * d + sum * d, format!("{label} first family, r={r:?}, k={k}"))?);
            }
        }
        for r in subsets(n, s - 1) {
            let sum: i128 = r.iter().map(|&x| x as i128).sum();
            for k in 1..si {
                out.push(summand(
                    s - 1,
                    (a + si - 1 + d) * m0 - k * d + sum * d,
                    format!("{label} second family, r={r:?}, k={k}"),
                )?);
            }
        }
        Ok(())
    };
    if n >= 3 {
        // after d_n: the first family has the single index set {1..n}
        for k in 1..ni {
            out.push(summand(n - 1, ni * m0 - k * d + c2 * d, format!("after d_{n} first family, k={k}"))?);
        }
        for r in subsets(n, n - 1) {
            let sum: i128 = r.iter().map(|&x| x as i128).sum();
            for k in 1..ni {
                out.push(summand(
                    n - 1,
                    (a + d + ni - 1) * m0 - k * d + sum * d,
                    format!("after d_{n} second family, r={r:?}, k={k}"),
                )?);
            }
        }
        for s in 3..n {
            generic(s, &mut out, &format!("after d_{s}"))?;
        }
    }
    for r in subsets(n, 2) {
        let (r1, r2) = (r[0] as i128, r[1] as i128);
        out.push(summand(1, 2 * m0 + (r1 + r2 - 1) * d, format!("after d_2 minors, r={r:?}"))?);
    }
    for k in 0..ni {
        out.push(summand(1, (a + 1 + d) * m0 + k * d, format!("after d_2 first column, k={k}"))?);
    }
    Ok(out)
}

/// Literal transcription of the displayed graded resolution for `b = n`,
/// with the same step assignment as [`displayed_shifts_b1`].
pub fn displayed_shifts_bn(seq: &ArithmeticSequence) -> Result<Vec<DisplayedSummand>, ClosedFormError> {
    check_case(seq, seq.n() as u64, "b = n")?;
    let (m0, d, n, a) = (seq.m0() as i128, seq.d() as i128, seq.n(), seq.a() as i128);
    let ni = n as i128;
    let c2 = ni * (ni + 1) / 2;
    let mut out = Vec::new();

    for k in 1..ni {
        out.push(summand(n, (a + ni + d + 1) * m0 - k * d + c2 * d, format!("leftmost, k={k}"))?);
    }
    if n >= 3 {
        for k in 1..ni {
            out.push(summand(n - 1, ni * m0 - k * d + c2 * d, format!("after d_{n} first family, k={k}"))?);
        }
        for r in subsets(n, n - 1) {
            let sum: i128 = r.iter().map(|&x| x as i128).sum();
            for k in 1..ni - 1 {
                out.push(summand(
                    n - 1,
                    (a + ni + d) * m0 - k * d + sum * d,
                    format!("after d_{n} second family, r={r:?}, k={k}"),
                )?);
            }
        }
        for s in 3..n {
            let si = s as i128;
            for r in subsets(n, s) {
                let sum: i128 = r.iter().map(|&x| x as i128).sum();
                for k in 1..si {
                    out.push(summand(s - 1, si * m0 - k * d + sum * d, format!("after d_{s} first family, r={r:?}, k={k}"))?);
                }
            }
            for r in subsets(n, s - 1) {
                let sum: i128 = r.iter().map(|&x| x as i128).sum();
                for k in 1..si - 1 {
                    out.push(summand(
                        s - 1,
                        (a + si + d) * m0 - k * d + sum * d,
                        format!("after d_{s} second family, r={r:?}, k={k}"),
                    )?);
                }
            }
        }
    }
    for r in subsets(n, 2) {
        let (r1, r2) = (r[0] as i128, r[1] as i128);
        out.push(summand(1, 2 * m0 + (r1 + r2 - 1) * d, format!("after d_2 minors, r={r:?}"))?);
    }
    out.push(summand(1, (a + 1 + d) * m0, "after d_2 cone generator".into())?);
    Ok(out)
}

/// A shift present on one side of a comparison but not the other.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftDiscrepancy {
    pub step: usize,
    pub shift: i64,
    /// `Some(summand)` when the displayed text has an unmatched summand,
    /// `None` when the table has a shift the text does not produce.
    pub displayed: Option<String>,
}

/// Multiset difference between a displayed resolution and a shift table.
/// Step 0 is ignored (the display always has `R`).
pub fn compare_displayed(table: &BettiTable, displayed: &[DisplayedSummand]) -> Vec<ShiftDiscrepancy> {
    let mut remaining: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    for (&s, row) in table.rows() {
        if s == 0 {
            continue;
        }
        for &x in row {
            *remaining.entry((s, x)).or_default() += 1;
        }
    }
    let mut out = Vec::new();
    for sm in displayed {
        match remaining.get_mut(&(sm.step, sm.shift)) {
            Some(c) if *c > 0 => *c -= 1,
            _ => out.push(ShiftDiscrepancy { step: sm.step, shift: sm.shift, displayed: Some(sm.source.clone()) }),
        }
    }
    for ((step, shift), c) in remaining {
        for _ in 0..c {
            out.push(ShiftDiscrepancy { step, shift, displayed: None });
        }
    }
    out
}

/// The shift table displayed for `b = 2`, `n = 4`, `m0 = 4a + 2`, with
/// `q = 2a + 1`, transcribed summand by summand.
pub fn shifts_gor4(a: u64, d: u64) -> Result<BettiTable, ClosedFormError> {
    let (a, d) = (a as i128, d as i128);
    let q = 2 * a + 1;
    let mut rows: Vec<Vec<i128>> = vec![vec![0], vec![], vec![], vec![], vec![]];

    rows[1].extend((2..=6).map(|k| 4 * q + k * d));
    rows[1].push(4 * q + 4 * d);
    rows[1].extend((0..=2).map(|k| q * (q + 2 * d + 1) + k * d));

    let g2 = q * (q + 2 * d + 3);
    rows[2].push(6 * q + 4 * d);
    for k in 5..=7 {
        rows[2].extend([6 * q + k * d; 2]);
    }
    rows[2].push(6 * q + 8 * d);
    rows[2].push(g2 + d);
    for k in 2..=4 {
        rows[2].extend([g2 + k * d; 2]);
    }
    rows[2].push(g2 + 5 * d);

    let g3 = q * (q + 2 * d + 5);
    rows[3].extend((7..=9).map(|k| 8 * q + k * d));
    rows[3].extend((3..=7).map(|k| g3 + k * d));
    rows[3].push(g3 + 5 * d);

    rows[4].push(q * (q + 2 * d + 9) + 9 * d);
    table_from(CaseTag::Gor4, rows)
}

/// `T = q(q+2d+9) + 9d`, the degree of the last syzygy for the Gorenstein case.
pub fn gor4_total_shift(a: u64, d: u64) -> Result<i64, ClosedFormError> {
    let q = 2 * a as i128 + 1;
    let d = d as i128;
    to_i64(q * (q + 2 * d + 9) + 9 * d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of the sum of the 9 minimal generator degrees when `b = 2`, `n = 4`:
/// six minors of `A` of degree `2 m0 + k d`, `k = 2,3,4,4,5,6`, and three
/// minors of `B` of degree `(a+d+1) m0 + k d`, `k = 0,1,2`.
pub fn generator_degree_sum_parity(seq: &ArithmeticSequence) -> Result<Parity, ClosedFormError> {
    if seq.b() != 2 || seq.n() != 4 {
        return Err(ClosedFormError::WrongCase { expected: "b = 2, n = 4".into(), b: seq.b(), n: seq.n() });
    }
    let (m0, d, a) = (seq.m0() as i128, seq.d() as i128, seq.a() as i128);
    let sum: i128 = [2, 3, 4, 4, 5, 6].iter().map(|k| 2 * m0 + k * d).sum::<i128>()
        + (0..=2).map(|k| (a + d + 1) * m0 + k * d).sum::<i128>();
    Ok(if sum % 2 == 0 { Parity::Even } else { Parity::Odd })
}
