use std::cmp::Ordering;
use std::marker::PhantomData;

use super::field::Field;
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::AlgebraError;

/// A sparse polynomial: `(monomial, coefficient)` pairs, strictly decreasing
/// under the order of the [`PolyRing`] that built it, with no zero coefficients.
///
/// A polynomial does not carry its ring; all arithmetic goes through
/// [`PolyRing`], which keeps the term order in one place.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F> {
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Two terms, e.g. `X0*X2 - X1^2`.
    pub fn is_binomial(&self) -> bool {
        self.terms.len() == 2
    }
}

/// Result of asking for the weighted degree of a nonzero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(i64),
    Inhomogeneous,
}

/// The ring `k[X_0, ..., X_{k-1}]` with positive variable weights and a term order.
#[derive(Clone, Debug)]
pub struct PolyRing<F> {
    order: MonomialOrder,
    names: Vec<String>,
    _field: PhantomData<fn() -> F>,
}

impl<F: Field> PolyRing<F> {
    /// Variables are named `X0, X1, ...`.
    pub fn new(order: MonomialOrder) -> Self {
        let names = (0..order.nvars()).map(|i| format!("X{i}")).collect();
        PolyRing { order, names, _field: PhantomData }
    }

    pub fn with_names(order: MonomialOrder, names: Vec<String>) -> Self {
        assert_eq!(order.nvars(), names.len());
        PolyRing { order, names, _field: PhantomData }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn weights(&self) -> &[u64] {
        self.order.weights()
    }

    pub fn nvars(&self) -> usize {
        self.order.nvars()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(F::one())
    }

    pub fn constant(&self, c: F) -> Polynomial<F> {
        self.term(Monomial::one(self.nvars()), c)
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        self.var_power(i, 1)
    }

    pub fn var_power(&self, i: usize, e: u32) -> Polynomial<F> {
        self.term(Monomial::var_power(self.nvars(), i, e), F::one())
    }

    pub fn term(&self, m: Monomial, c: F) -> Polynomial<F> {
        assert_eq!(m.nvars(), self.nvars(), "monomial from a different ring");
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and drops zeros.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F)>) -> Polynomial<F> {
        let mut terms: Vec<(Monomial, F)> = terms.into_iter().collect();
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), self.nvars(), "monomial from a different ring");
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.clone() + c;
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        out.push((m, c));
                    }
                }
            }
        }
        Polynomial { terms: out }
    }

    /// `X_a*X_b - X_c*X_d`-style binomial helper: `lhs - rhs` for monomials.
    pub fn binomial(&self, lhs: Monomial, rhs: Monomial) -> Polynomial<F> {
        self.from_terms([(lhs, F::one()), (rhs, -F::one())])
    }

    /// Re-sorts a polynomial that was built in a ring with the same variables
    /// but a different order.
    pub fn import(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.from_terms(p.terms.iter().cloned())
    }

    pub fn add(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        self.merge(p, q, F::one())
    }

    pub fn sub(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        self.merge(p, q, -F::one())
    }

    pub fn neg(&self, p: &Polynomial<F>) -> Polynomial<F> {
        Polynomial {
            terms: p.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &F, p: &Polynomial<F>) -> Polynomial<F> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(m, pc)| (m.clone(), c.clone() * pc.clone()))
                .collect(),
        }
    }

    /// `c * mono * p`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, c: &F, mono: &Monomial, p: &Polynomial<F>) -> Polynomial<F> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|(m, pc)| (m.mul(mono), c.clone() * pc.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, p: &Polynomial<F>, q: &Polynomial<F>) -> Polynomial<F> {
        if p.is_zero() || q.is_zero() {
            return Polynomial::zero();
        }
        let (small, big) = if p.len() <= q.len() { (p, q) } else { (q, p) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            let part = self.mul_term(c, m, big);
            acc = self.add(&acc, &part);
        }
        acc
    }

    pub fn pow(&self, p: &Polynomial<F>, e: u32) -> Polynomial<F> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, p);
        }
        acc
    }

    /// `p + c*q` by merging two sorted term lists.
    fn merge(&self, p: &Polynomial<F>, q: &Polynomial<F>, c: F) -> Polynomial<F> {
        let mut out = Vec::with_capacity(p.len() + q.len());
        let (mut i, mut j) = (0, 0);
        while i < p.terms.len() && j < q.terms.len() {
            let (pm, pc) = &p.terms[i];
            let (qm, qc) = &q.terms[j];
            match self.order.cmp(pm, qm) {
                Ordering::Greater => {
                    out.push((pm.clone(), pc.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((qm.clone(), c.clone() * qc.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = pc.clone() + c.clone() * qc.clone();
                    if !s.is_zero() {
                        out.push((pm.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(p.terms[i..].iter().cloned());
        out.extend(q.terms[j..].iter().map(|(m, qc)| (m.clone(), c.clone() * qc.clone())));
        Polynomial { terms: out }
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Result<i64, AlgebraError> {
        i64::try_from(self.order.degree(m)).map_err(|_| AlgebraError::DegreeOverflow)
    }

    /// The common weighted degree of all terms of a nonzero polynomial.
    pub fn weighted_degree(&self, p: &Polynomial<F>) -> Result<Homogeneity, AlgebraError> {
        let (first, rest) = p.terms.split_first().ok_or(AlgebraError::ZeroPolynomial)?;
        let d = self.order.degree(&first.0);
        if rest.iter().any(|(m, _)| self.order.degree(m) != d) {
            return Ok(Homogeneity::Inhomogeneous);
        }
        i64::try_from(d)
            .map(Homogeneity::Homogeneous)
            .map_err(|_| AlgebraError::DegreeOverflow)
    }

    /// The zero polynomial counts as homogeneous (of every degree).
    pub fn is_homogeneous(&self, p: &Polynomial<F>) -> bool {
        match p.terms.split_first() {
            None => true,
            Some((first, rest)) => {
                let d = self.order.degree(&first.0);
                rest.iter().all(|(m, _)| self.order.degree(m) == d)
            }
        }
    }

    /// Writes `p` with terms in descending order, e.g. `X0*X2 - X1^2`,
    /// `-X0^3 + X4^2`, `2/3*X1 + 1`.
    pub fn display(&self, p: &Polynomial<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in p.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                m.write_with(&self.names, &mut s).expect("writing to a String");
            }
        }
        s
    }
}

impl<F: Field> PolyRing<F> {
    /// Convenience: `sum c_i * prod X_j^{e_ij}` from integer data.
    pub fn from_int_terms(&self, terms: &[(i64, &[u32])]) -> Polynomial<F> {
        self.from_terms(
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e.to_vec()), F::from_i64(*c))),
        )
    }

    /// `c` times the monomial `X^e` with `c = 1`.
    pub fn monomial(&self, e: &[u32]) -> Polynomial<F> {
        self.term(Monomial::new(e.to_vec()), F::one())
    }
}
