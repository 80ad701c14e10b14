use std::cmp::Ordering;

use crate::exactalg::{Field, Monomial, MonomialOrder, PolyRing, Polynomial};

/// How module terms `(component, monomial)` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleOrderKind {
    /// Component first (lower index is larger), then the ring order.
    #[default]
    PositionOverTerm,
    /// Graded degree first (shift included), then the ring order, then position.
    TermOverPosition,
}

/// Term order on a graded free module `⊕ R(-shift_i)`.
#[derive(Clone, Debug)]
pub(crate) struct VecOrder {
    ring: MonomialOrder,
    kind: ModuleOrderKind,
    shifts: Vec<i64>,
}

impl VecOrder {
    pub(crate) fn new(ring: MonomialOrder, kind: ModuleOrderKind, shifts: Vec<i64>) -> Self {
        VecOrder { ring, kind, shifts }
    }

    pub(crate) fn ring(&self) -> &MonomialOrder {
        &self.ring
    }

    pub(crate) fn shift(&self, comp: usize) -> i64 {
        self.shifts.get(comp).copied().unwrap_or(0)
    }

    pub(crate) fn term_degree(&self, comp: usize, m: &Monomial) -> i64 {
        self.shift(comp) + self.ring.degree(m) as i64
    }

    pub(crate) fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self.kind {
            ModuleOrderKind::PositionOverTerm => b.0.cmp(&a.0).then_with(|| self.ring.cmp(a.1, b.1)),
            ModuleOrderKind::TermOverPosition => self
                .term_degree(a.0, a.1)
                .cmp(&self.term_degree(b.0, b.1))
                .then_with(|| self.ring.cmp(a.1, b.1))
                .then_with(|| b.0.cmp(&a.0)),
        }
    }
}

/// A sparse element of a free module, terms strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ModVec<F> {
    pub(crate) terms: Vec<(usize, Monomial, F)>,
}

impl<F: Field> ModVec<F> {
    pub(crate) fn zero() -> Self {
        ModVec { terms: Vec::new() }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn len(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn lead(&self) -> Option<&(usize, Monomial, F)> {
        self.terms.first()
    }

    /// The basis vector `e_comp`.
    pub(crate) fn unit(comp: usize, nvars: usize) -> Self {
        ModVec { terms: vec![(comp, Monomial::one(nvars), F::one())] }
    }

    pub(crate) fn from_column(order: &VecOrder, column: &[Polynomial<F>]) -> Self {
        let mut terms: Vec<(usize, Monomial, F)> = column
            .iter()
            .enumerate()
            .flat_map(|(c, p)| p.terms().iter().map(move |(m, f)| (c, m.clone(), f.clone())))
            .collect();
        terms.sort_by(|x, y| order.cmp((y.0, &y.1), (x.0, &x.1)));
        ModVec { terms }
    }

    pub(crate) fn to_column(&self, ring: &PolyRing<F>, rank: usize) -> Vec<Polynomial<F>> {
        let mut parts: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); rank];
        for (c, m, f) in &self.terms {
            parts[*c].push((m.clone(), f.clone()));
        }
        parts.into_iter().map(|t| ring.from_terms(t)).collect()
    }

    /// Re-sorts the terms under another order on the same module.
    pub(crate) fn resorted(mut self, order: &VecOrder) -> Self {
        self.terms.sort_by(|x, y| order.cmp((y.0, &y.1), (x.0, &x.1)));
        self
    }

    pub(crate) fn scale(&mut self, c: &F) {
        for t in &mut self.terms {
            t.2 = t.2.clone() * c.clone();
        }
    }

    /// The graded degree, read off the leading term.
    pub(crate) fn degree(&self, order: &VecOrder) -> Option<i64> {
        self.lead().map(|(c, m, _)| order.term_degree(*c, m))
    }

    /// `self + c * m * other`.
    pub(crate) fn add_mul(&self, order: &VecOrder, c: &F, m: &Monomial, other: &ModVec<F>) -> ModVec<F> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(comp, mono, f)| (*comp, mono.mul(m), f.clone() * c.clone())).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp((x.0, &x.1), (y.0, &y.1)),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let x = a.next().unwrap();
                    let y = b.next().unwrap();
                    let s = x.2.clone() + y.2;
                    if !s.is_zero() {
                        out.push((x.0, x.1.clone(), s));
                    }
                }
            }
        }
        ModVec { terms: out }
    }
}
