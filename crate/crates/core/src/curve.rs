//! Arithmetic sequences, their numerical semigroups, and the binomial
//! generators of the defining ideal of the associated monomial curve.
//!
//! For `m_i = m0 + i*d` (`0 <= i <= n`) write `m0 = a*n + b` with `b` in `[1, n]`.
//! The defining ideal `P` of `t -> (t^{m_0}, ..., t^{m_n})` is generated by the
//! 2x2 minors of
//!
//! ```text
//! A = | X0 X1 ... X_{n-1} |      B = | X_n^a      X0  X1      ... X_{n-b} |
//!     | X1 X2 ... X_n     |          | X0^{a+d}   X_b X_{b+1} ... X_n     |
//! ```
//!
//! where only the minors of `B` involving its first column are needed.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactalg::{Field, Monomial, MonomialOrder, PolyMatrix, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("gcd({terms}) = {gcd} ≠ 1")]
    GcdNotOne { gcd: u64, terms: String },
    #[error("m_{index} = {value} is a combination of the other terms; they do not generate the semigroup minimally")]
    NotMinimalGenerators { index: usize, value: u64 },
    #[error("m0 = {m0} <= n = {n} forces a = 0")]
    AIsZero { m0: u64, n: usize },
    #[error("term m_n = {0} does not fit the supported range")]
    Overflow(u64),
}

/// A validated arithmetic sequence `m_i = m0 + i*d`, `0 <= i <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticSequence {
    m0: u64,
    d: u64,
    n: usize,
    a: u64,
    b: u64,
    terms: Vec<u64>,
}

impl ArithmeticSequence {
    /// Checks gcd 1, `a >= 1` and minimal generation of the semigroup.
    pub fn validate(m0: u64, d: u64, n: usize) -> Result<Self, CurveError> {
        let seq = Self::from_parameters(m0, d, n)?;
        let g = seq.terms.iter().fold(0u64, |g, &m| g.gcd(&m));
        if g != 1 {
            return Err(CurveError::GcdNotOne { gcd: g, terms: join(&seq.terms) });
        }
        if seq.a == 0 {
            return Err(CurveError::AIsZero { m0, n });
        }
        for j in 0..=n {
            let others: Vec<u64> = seq
                .terms
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, &m)| m)
                .collect();
            if NumericalSemigroup::new(&others).contains(seq.terms[j]) {
                return Err(CurveError::NotMinimalGenerators { index: j, value: seq.terms[j] });
            }
        }
        Ok(seq)
    }

    /// Builds the sequence without checking conditions (i) and (iii). Only
    /// the shape requirements `m0 >= 1`, `n >= 2` are enforced. Useful for
    /// exploring parameter choices that are not arithmetic sequences in the
    /// strict sense; no theorem about `P` applies to them.
    pub fn from_parameters(m0: u64, d: u64, n: usize) -> Result<Self, CurveError> {
        if m0 == 0 {
            return Err(CurveError::InvalidParameters("m0 must be at least 1".into()));
        }
        if n < 2 {
            return Err(CurveError::InvalidParameters("n must be at least 2".into()));
        }
        let terms = (0..=n as u64)
            .map(|i| i.checked_mul(d).and_then(|x| x.checked_add(m0)))
            .collect::<Option<Vec<u64>>>()
            .ok_or(CurveError::Overflow(u64::MAX))?;
        let last = *terms.last().unwrap();
        if last > u32::MAX as u64 {
            return Err(CurveError::Overflow(last));
        }
        let nn = n as u64;
        let b = (m0 - 1) % nn + 1;
        let a = (m0 - b) / nn;
        Ok(ArithmeticSequence { m0, d, n, a, b, terms })
    }

    pub fn m0(&self) -> u64 {
        self.m0
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn semigroup(&self) -> NumericalSemigroup {
        NumericalSemigroup::new(&self.terms)
    }

    /// `R = k[X_0..X_n]` with `deg X_i = m_i` and the weighted grevlex order.
    pub fn ring<F: Field>(&self) -> PolyRing<F> {
        PolyRing::new(MonomialOrder::weighted_grevlex(self.terms.clone()))
    }

    fn exp_a(&self) -> u32 {
        u32::try_from(self.a).expect("a fits in u32 since m_n does")
    }

    fn exp_a_plus_d(&self) -> u32 {
        u32::try_from(self.a + self.d).expect("a + d fits in u32 since m_n does")
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// The numerical semigroup generated by a finite set of positive integers.
///
/// Membership is decided with the Apéry table of the smallest generator `m`:
/// for every residue `r mod m` the least element of the semigroup congruent to `r`,
/// computed as a shortest-path problem over residues.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    modulus: u64,
    apery: Vec<Option<u64>>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Self {
        let gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        let Some(&m) = gens.iter().min() else {
            return NumericalSemigroup { modulus: 1, apery: vec![Some(0)] };
        };
        let mut dist: Vec<Option<u64>> = vec![None; m as usize];
        dist[0] = Some(0);
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u64, 0usize)));
        while let Some(Reverse((w, r))) = heap.pop() {
            if dist[r] != Some(w) {
                continue;
            }
            for &g in &gens {
                let nw = w + g;
                let nr = (nw % m) as usize;
                if dist[nr].is_none_or(|old| nw < old) {
                    dist[nr] = Some(nw);
                    heap.push(Reverse((nw, nr)));
                }
            }
        }
        NumericalSemigroup { modulus: m, apery: dist }
    }

    pub fn contains(&self, x: u64) -> bool {
        match self.apery[(x % self.modulus) as usize] {
            Some(w) => x >= w,
            None => false,
        }
    }
}

/// Convenience wrapper: is `x` in the semigroup generated by the sequence?
pub fn semigroup_membership(x: u64, seq: &ArithmeticSequence) -> bool {
    seq.semigroup().contains(x)
}

/// The `2 x n` matrix `A`; column `j` (0-based) is `(X_j, X_{j+1})`.
pub fn matrix_a<F: Field>(seq: &ArithmeticSequence, ring: &PolyRing<F>) -> PolyMatrix<F> {
    let n = seq.n;
    let cols = (0..n).map(|j| vec![ring.var(j), ring.var(j + 1)]).collect();
    PolyMatrix::from_columns(2, cols).expect("columns have two entries")
}

/// The `2 x (n-b+2)` matrix `B`: first column `(X_n^a, X_0^{a+d})`, then
/// `(X_{j-2}, X_{b+j-2})` for `j = 2..n+2-b` (1-based column index `j`).
pub fn matrix_b<F: Field>(seq: &ArithmeticSequence, ring: &PolyRing<F>) -> PolyMatrix<F> {
    let n = seq.n;
    let b = seq.b as usize;
    let mut cols = vec![vec![ring.var_power(n, seq.exp_a()), ring.var_power(0, seq.exp_a_plus_d())]];
    for j in 2..=n + 2 - b {
        cols.push(vec![ring.var(j - 2), ring.var(b + j - 2)]);
    }
    PolyMatrix::from_columns(2, cols).expect("columns have two entries")
}

/// Which binomial of the minimal generating set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GeneratorLabel {
    /// `delta_{i,j} = X_i X_{j+1} - X_j X_{i+1}`, `0 <= i < j <= n-1`.
    Delta { i: usize, j: usize },
    /// `Delta_{1,j} = X_{b+j-2} X_n^a - X_{j-2} X_0^{a+d}`, `2 <= j <= n+2-b`.
    BigDelta { j: usize },
}

impl std::fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeneratorLabel::Delta { i, j } => write!(f, "delta[{i},{j}]"),
            GeneratorLabel::BigDelta { j } => write!(f, "Delta[1,{j}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator<F> {
    pub label: GeneratorLabel,
    pub poly: Polynomial<F>,
    pub degree: i64,
}

/// The minimal binomial generators of `P`: all `delta_{i,j}` in lexicographic
/// `(i, j)` order followed by the `Delta_{1,j}` with `j` ascending.
#[derive(Clone, Debug)]
pub struct GeneratorSet<F> {
    all: Vec<Generator<F>>,
    num_deltas: usize,
}

impl<F: Field> GeneratorSet<F> {
    pub fn deltas(&self) -> &[Generator<F>] {
        &self.all[..self.num_deltas]
    }

    pub fn big_deltas(&self) -> &[Generator<F>] {
        &self.all[self.num_deltas..]
    }

    pub fn all(&self) -> &[Generator<F>] {
        &self.all
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn polys(&self) -> Vec<Polynomial<F>> {
        self.all.iter().map(|g| g.poly.clone()).collect()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.all.iter().map(|g| g.degree).collect()
    }
}

/// The `C(n,2) + n - b + 1` minimal generators of the defining ideal.
pub fn generators<F: Field>(seq: &ArithmeticSequence, ring: &PolyRing<F>) -> GeneratorSet<F> {
    let n = seq.n;
    let b = seq.b as usize;
    let nv = n + 1;
    let mut all = Vec::new();
    let x = |i: usize| Monomial::var_power(nv, i, 1);
    for i in 0..n {
        for j in i + 1..n {
            let poly = ring.binomial(x(i).mul(&x(j + 1)), x(j).mul(&x(i + 1)));
            all.push(labelled(ring, GeneratorLabel::Delta { i, j }, poly));
        }
    }
    let num_deltas = all.len();
    let xn_a = Monomial::var_power(nv, n, seq.exp_a());
    let x0_ad = Monomial::var_power(nv, 0, seq.exp_a_plus_d());
    for j in 2..=n + 2 - b {
        let poly = ring.binomial(x(b + j - 2).mul(&xn_a), x(j - 2).mul(&x0_ad));
        all.push(labelled(ring, GeneratorLabel::BigDelta { j }, poly));
    }
    GeneratorSet { all, num_deltas }
}

fn labelled<F: Field>(ring: &PolyRing<F>, label: GeneratorLabel, poly: Polynomial<F>) -> Generator<F> {
    let degree = match ring.weighted_degree(&poly) {
        Ok(crate::exactalg::Homogeneity::Homogeneous(d)) => d,
        other => panic!("generator {label} is not homogeneous: {other:?}"),
    };
    Generator { label, poly, degree }
}

/// A polynomial in the single variable `t`, as `(exponent, coefficient)` pairs
/// with exponents strictly decreasing.
pub type UnivariatePoly<F> = Vec<(u128, F)>;

/// The image of `p` under `X_i -> t^{m_i}`.
pub fn phi_evaluate<F: Field>(p: &Polynomial<F>, seq: &ArithmeticSequence) -> UnivariatePoly<F> {
    let mut acc: BTreeMap<u128, F> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.weighted_degree(&seq.terms);
        let slot = acc.entry(e).or_insert_with(F::zero);
        *slot = slot.clone() + c.clone();
    }
    acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect()
}
