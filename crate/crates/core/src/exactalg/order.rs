use std::cmp::Ordering;

use super::monomial::Monomial;

/// Which family of term order is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Weighted degree first, ties broken by reverse lexicographic comparison
    /// (the monomial with the smaller exponent in the last differing variable is larger).
    WeightedGrevlex,
    /// Block order eliminating the last variable: its exponent is compared
    /// first (larger wins), the remaining variables are then compared by
    /// [`OrderKind::WeightedGrevlex`].
    EliminateLast,
}

/// A term order on monomials of a weighted polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    weights: Vec<u64>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, weights: Vec<u64>) -> Self {
        assert!(
            weights.iter().all(|&w| w > 0),
            "weights must be positive for a well-order"
        );
        if kind == OrderKind::EliminateLast {
            assert!(!weights.is_empty(), "elimination order needs a variable to eliminate");
        }
        MonomialOrder { kind, weights }
    }

    pub fn weighted_grevlex(weights: Vec<u64>) -> Self {
        Self::new(OrderKind::WeightedGrevlex, weights)
    }

    pub fn eliminate_last(weights: Vec<u64>) -> Self {
        Self::new(OrderKind::EliminateLast, weights)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn degree(&self, m: &Monomial) -> u128 {
        m.weighted_degree(&self.weights)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::WeightedGrevlex => grevlex(&self.weights, a.exponents(), b.exponents()),
            OrderKind::EliminateLast => {
                let k = self.weights.len() - 1;
                let (ea, eb) = (a.exponents(), b.exponents());
                ea[k]
                    .cmp(&eb[k])
                    .then_with(|| grevlex(&self.weights[..k], &ea[..k], &eb[..k]))
            }
        }
    }
}

fn grevlex(weights: &[u64], a: &[u32], b: &[u32]) -> Ordering {
    let deg = |e: &[u32]| -> u128 {
        e.iter()
            .zip(weights)
            .map(|(&x, &w)| x as u128 * w as u128)
            .sum()
    };
    deg(a).cmp(&deg(b)).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}
