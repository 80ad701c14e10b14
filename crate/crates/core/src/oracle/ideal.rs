use crate::curve::ArithmeticSequence;
use crate::exactalg::{AlgebraError, Field, Monomial, MonomialOrder, PolyRing, Polynomial};

use super::engine::Engine;
use super::resolution::syzygies;
use super::vector::{ModVec, ModuleOrderKind, VecOrder};
use super::{OracleConfig, OracleError};

/// A reduced Gröbner basis, generators monic and sorted by increasing
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F> {
    order: MonomialOrder,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn into_generators(self) -> Vec<Polynomial<F>> {
        self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The remainder of `p` on division by the basis.
    pub fn normal_form(&self, ring: &PolyRing<F>, p: &Polynomial<F>) -> Polynomial<F> {
        normal_form(ring, &self.generators, p)
    }

    pub fn contains(&self, ring: &PolyRing<F>, p: &Polynomial<F>) -> bool {
        self.normal_form(ring, p).is_zero()
    }
}

fn normal_form<F: Field>(ring: &PolyRing<F>, divisors: &[Polynomial<F>], p: &Polynomial<F>) -> Polynomial<F> {
    let mut p = p.clone();
    let mut rest = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let hit = divisors.iter().find(|g| g.leading_monomial().is_some_and(|l| l.divides(&m)));
        match hit {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = lm.quotient_of(&m).unwrap();
                let factor = -(c / lc.clone());
                p = ring.add(&p, &ring.mul_term(&factor, &q, g));
            }
            None => {
                rest.push((m, c));
                p = ring.from_terms(p.into_terms().into_iter().skip(1));
            }
        }
    }
    ring.from_terms(rest)
}

fn poly_order(ring_order: &MonomialOrder) -> VecOrder {
    VecOrder::new(ring_order.clone(), ModuleOrderKind::PositionOverTerm, vec![0])
}

fn sugar<F: Field>(order: &VecOrder, v: &ModVec<F>) -> i64 {
    v.terms.iter().map(|(c, m, _)| order.term_degree(*c, m)).max().unwrap_or(0)
}

/// The reduced Gröbner basis of the ideal generated by `gens` under the
/// ring's monomial order.
pub fn groebner<F: Field>(ring: &PolyRing<F>, gens: &[Polynomial<F>], cfg: &OracleConfig) -> Result<GroebnerBasis<F>, OracleError> {
    let order = poly_order(ring.order());
    let mut eng = Engine::new(order.clone(), order.clone(), false, true, cfg);
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let v = ModVec::from_column(&order, std::slice::from_ref(g));
        let s = sugar(&order, &v);
        let _ = eng.insert(v, ModVec::zero(), s)?;
    }
    eng.complete_through(None)?;

    let polys: Vec<Polynomial<F>> = eng.basis().iter().map(|e| e.v.to_column(ring, 1).remove(0)).collect();
    let leads: Vec<&Monomial> = polys.iter().map(|p| p.leading_monomial().unwrap()).collect();
    let kept: Vec<Polynomial<F>> = polys
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !leads
                .iter()
                .enumerate()
                .any(|(k, l)| k != *i && l.divides(leads[*i]) && (*l != leads[*i] || k < *i))
        })
        .map(|(_, p)| p.clone())
        .collect();
    let mut reduced = Vec::with_capacity(kept.len());
    for (i, p) in kept.iter().enumerate() {
        let others: Vec<Polynomial<F>> = kept.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, q)| q.clone()).collect();
        let (lm, lc) = p.leading_term().unwrap().clone();
        let tail = ring.from_terms(p.terms()[1..].iter().cloned());
        let tail = normal_form(ring, &others, &tail);
        let full = ring.add(&ring.term(lm, F::one()), &ring.scalar_mul(&lc.inverse(), &tail));
        reduced.push(full);
    }
    reduced.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis { order: ring.order().clone(), generators: reduced })
}

/// The kernel of `X_i -> t^{w_i}`, as a reduced Gröbner basis in the ring
/// with weights `w` and the weighted reverse-lexicographic order.
///
/// Computed by eliminating `t` from `(X_i - t^{w_i})`.
pub fn toric_ideal_of<F: Field>(weights: &[u64], cfg: &OracleConfig) -> Result<GroebnerBasis<F>, OracleError> {
    let n1 = weights.len();
    if let Some(cap) = cfg.limits.max_degree {
        if let Some(&w) = weights.iter().find(|&&w| w as i64 > cap) {
            return Err(OracleError::ResourceLimit(format!("weight {w} exceeds the degree cap {cap}")));
        }
    }
    let mut ew = weights.to_vec();
    ew.push(1);
    let mut names: Vec<String> = (0..n1).map(|i| format!("X{i}")).collect();
    names.push("t".into());
    let er = PolyRing::<F>::with_names(MonomialOrder::eliminate_last(ew), names);
    let mut gens = Vec::with_capacity(n1);
    for (i, &w) in weights.iter().enumerate() {
        let e = u32::try_from(w).map_err(|_| AlgebraError::DegreeOverflow)?;
        gens.push(er.binomial(Monomial::var_power(n1 + 1, i, 1), Monomial::var_power(n1 + 1, n1, e)));
    }
    let gb = groebner(&er, &gens, cfg)?;
    let ring = PolyRing::<F>::new(MonomialOrder::weighted_grevlex(weights.to_vec()));
    let mut out: Vec<Polynomial<F>> = gb
        .generators
        .iter()
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[n1] == 0))
        .map(|p| {
            ring.from_terms(p.terms().iter().map(|(m, c)| (Monomial::new(m.exponents()[..n1].to_vec()), c.clone())))
        })
        .collect();
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    Ok(GroebnerBasis { order: ring.order().clone(), generators: out })
}

/// The defining ideal of the monomial curve of `seq`.
pub fn toric_ideal<F: Field>(seq: &ArithmeticSequence, cfg: &OracleConfig) -> Result<GroebnerBasis<F>, OracleError> {
    toric_ideal_of(seq.terms(), cfg)
}

/// Whether two generating sets span the same ideal.
pub fn ideal_equal<F: Field>(
    ring: &PolyRing<F>,
    a: &[Polynomial<F>],
    b: &[Polynomial<F>],
    cfg: &OracleConfig,
) -> Result<bool, OracleError> {
    let ga = groebner(ring, a, cfg)?;
    if !b.iter().all(|p| ga.contains(ring, p)) {
        return Ok(false);
    }
    let gb = groebner(ring, b, cfg)?;
    Ok(a.iter().all(|p| gb.contains(ring, p)))
}

/// Whether `(I : f) = I` for `I = (gens)`. The colon ideal is read off the
/// first coordinates of the syzygies of `(f, gens...)`.
pub fn colon_check<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    f: &Polynomial<F>,
    cfg: &OracleConfig,
) -> Result<bool, OracleError> {
    let gb = groebner(ring, gens, cfg)?;
    if gb.contains(ring, f) {
        return Err(OracleError::MemberOfIdeal);
    }
    let columns: Vec<Vec<Polynomial<F>>> = std::iter::once(f).chain(gens).map(|p| vec![p.clone()]).collect();
    let syz = syzygies(ring, &[0], &columns, cfg)?;
    Ok(syz.generators.iter().all(|s| gb.contains(ring, &s[0])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let r = PolyRing::<Q>::new(MonomialOrder::weighted_grevlex(vec![5, 6, 7]));
        let f = r.from_int_terms(&[(1, &[1, 0, 1]), (-1, &[0, 2, 0])]);
        let gb = groebner(&r, std::slice::from_ref(&f), &cfg()).unwrap();
        assert_eq!(gb.generators(), &[r.neg(&f)]);
        assert_eq!(gb.generators()[0].leading_term().unwrap().1, Q::from_integer(1.into()));
    }

    #[test]
    fn linear_example() {
        let r = PolyRing::<Q>::new(MonomialOrder::weighted_grevlex(vec![1, 1]));
        let gb = groebner(&r, &[r.var(0), r.add(&r.var(0), &r.var(1))], &cfg()).unwrap();
        let mut got = gb.into_generators();
        got.sort_by(|a, b| r.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
        assert_eq!(got, vec![r.var(0), r.var(1)]);
    }

    #[test]
    fn cusp() {
        let gb = toric_ideal_of::<Q>(&[2, 3], &cfg()).unwrap();
        assert_eq!(gb.len(), 1);
        let r = PolyRing::<Q>::new(MonomialOrder::weighted_grevlex(vec![2, 3]));
        let p = &gb.generators()[0];
        let expected = r.from_int_terms(&[(1, &[3, 0]), (-1, &[0, 2])]);
        assert!(p == &expected || p == &r.neg(&expected));
    }

    #[test]
    fn idempotent() {
        let r = PolyRing::<Q>::new(MonomialOrder::weighted_grevlex(vec![3, 4, 5]));
        let gb = toric_ideal_of::<Q>(&[3, 4, 5], &cfg()).unwrap();
        let again = groebner(&r, gb.generators(), &cfg()).unwrap();
        assert_eq!(again, gb);
    }

    #[test]
    fn equality_and_colon_examples() {
        let r = PolyRing::<Q>::new(MonomialOrder::weighted_grevlex(vec![1, 1]));
        let x0 = r.var(0);
        let x0sq = r.mul(&x0, &x0);
        assert!(!ideal_equal(&r, std::slice::from_ref(&x0), std::slice::from_ref(&x0sq), &cfg()).unwrap());
        assert!(ideal_equal(&r, &[x0.clone(), x0sq.clone()], std::slice::from_ref(&x0), &cfg()).unwrap());
        let i = vec![r.mul(&r.var(0), &r.var(1))];
        assert!(!colon_check(&r, &i, &x0, &cfg()).unwrap());
        assert!(matches!(colon_check(&r, &i, &i[0], &cfg()), Err(OracleError::MemberOfIdeal)));
    }

    #[test]
    fn spair_cap_is_reported() {
        let limits = super::super::Limits { max_spairs: Some(1), ..Default::default() };
        let err = toric_ideal_of::<Q>(&[5, 6, 7, 8, 9], &OracleConfig::new(limits)).unwrap_err();
        assert!(matches!(err, OracleError::ResourceLimit(_)));
    }
}
