use super::field::Field;
use super::poly::{PolyRing, Polynomial};
use super::AlgebraError;

/// A dense row-major matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![Polynomial::zero(); rows * cols] }
    }

    pub fn identity(ring: &PolyRing<F>, n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial<F>>,
    ) -> Result<Self, AlgebraError> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::ShapeMismatch {
                expected: format!("{rows}x{cols} = {} entries", rows * cols),
                found: format!("{} entries", entries.len()),
            });
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    /// Builds a matrix from its columns; all columns must have length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Polynomial<F>>>) -> Result<Self, AlgebraError> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != rows {
                return Err(AlgebraError::ShapeMismatch {
                    expected: format!("column of length {rows}"),
                    found: format!("column {j} of length {}", col.len()),
                });
            }
            for (i, p) in col.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Polynomial<F>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<F> {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<F>) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<F>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    /// `M[0][c1] * M[1][c2] - M[0][c2] * M[1][c1]` for a two-row matrix (0-based columns).
    pub fn minor_2x2(&self, ring: &PolyRing<F>, c1: usize, c2: usize) -> Result<Polynomial<F>, AlgebraError> {
        if self.rows != 2 {
            return Err(AlgebraError::ShapeMismatch {
                expected: "2 rows".into(),
                found: format!("{} rows", self.rows),
            });
        }
        for c in [c1, c2] {
            if c >= self.cols {
                return Err(AlgebraError::IndexOutOfRange { index: c, len: self.cols });
            }
        }
        let lhs = ring.mul(self.get(0, c1), self.get(1, c2));
        let rhs = ring.mul(self.get(0, c2), self.get(1, c1));
        Ok(ring.sub(&lhs, &rhs))
    }

    /// All 2x2 minors of a two-row matrix, columns `(c1, c2)` in lexicographic order.
    pub fn all_minors_2x2(&self, ring: &PolyRing<F>) -> Result<Vec<Polynomial<F>>, AlgebraError> {
        let mut out = Vec::new();
        for c1 in 0..self.cols {
            for c2 in c1 + 1..self.cols {
                out.push(self.minor_2x2(ring, c1, c2)?);
            }
        }
        Ok(out)
    }

    /// The product `self * right`.
    pub fn mul(&self, ring: &PolyRing<F>, right: &PolyMatrix<F>) -> Result<PolyMatrix<F>, AlgebraError> {
        if self.cols != right.rows {
            return Err(AlgebraError::ShapeMismatch {
                expected: format!("left has {} columns", self.cols),
                found: format!("right has {} rows", right.rows),
            });
        }
        let mut out = Self::zeros(self.rows, right.cols);
        for i in 0..self.rows {
            for j in 0..right.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), right.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = ring.add(&acc, &ring.mul(a, b));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Rows as vectors of printed polynomials; the format used in JSON output.
    pub fn to_strings(&self, ring: &PolyRing<F>) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| ring.display(self.get(i, j))).collect())
            .collect()
    }
}
