use std::collections::BTreeSet;

use crate::exactalg::{Field, Monomial};

use super::vector::{ModVec, VecOrder};
use super::{OracleConfig, OracleError};

pub(crate) struct Elem<F> {
    pub(crate) v: ModVec<F>,
    pub(crate) cof: ModVec<F>,
    sugar: i64,
}

/// Buchberger's algorithm on submodules of a graded free module.
///
/// Elements are only ever appended, never removed, so cofactors stay valid.
/// Pairs are queued by `(sugar, j, i)`; for each new element `j` only the
/// pairs `(i, j)` whose monomial `lcm(lm_i, lm_j) / lm_j` is minimal among
/// `i < j` are created. With tracking on, every pair whose S-vector reduces
/// to zero contributes its cofactor combination as a syzygy.
pub(crate) struct Engine<'a, F> {
    order: VecOrder,
    cof_order: VecOrder,
    basis: Vec<Elem<F>>,
    by_comp: Vec<Vec<usize>>,
    pairs: BTreeSet<(i64, usize, usize)>,
    track: bool,
    product_criterion: bool,
    syzygies: Vec<ModVec<F>>,
    cfg: &'a OracleConfig,
    spairs: u64,
    steps: u64,
}

impl<'a, F: Field> Engine<'a, F> {
    pub(crate) fn new(order: VecOrder, cof_order: VecOrder, track: bool, product_criterion: bool, cfg: &'a OracleConfig) -> Self {
        Engine {
            order,
            cof_order,
            basis: Vec::new(),
            by_comp: Vec::new(),
            pairs: BTreeSet::new(),
            track,
            product_criterion,
            syzygies: Vec::new(),
            cfg,
            spairs: 0,
            steps: 0,
        }
    }

    pub(crate) fn basis(&self) -> &[Elem<F>] {
        &self.basis
    }

    pub(crate) fn take_syzygies(&mut self) -> Vec<ModVec<F>> {
        std::mem::take(&mut self.syzygies)
    }

    fn divisor(&self, comp: usize, m: &Monomial) -> Option<usize> {
        let list = self.by_comp.get(comp)?;
        list.iter().copied().find(|&k| self.basis[k].v.lead().unwrap().1.divides(m))
    }

    fn tick(&mut self) -> Result<(), OracleError> {
        self.steps += 1;
        if self.steps.is_multiple_of(256) {
            if let Some(deadline) = self.cfg.limits.deadline {
                if std::time::Instant::now() > deadline {
                    return Err(OracleError::ResourceLimit("time limit exceeded".into()));
                }
            }
        }
        Ok(())
    }

    fn check_size(&self, v: &ModVec<F>) -> Result<(), OracleError> {
        if let Some(max) = self.cfg.limits.max_terms {
            if v.len() > max {
                return Err(OracleError::ResourceLimit(format!("polynomial support exceeds {max} terms")));
            }
        }
        Ok(())
    }

    /// Full reduction of `v` by the current basis, applying the same
    /// operations to `cof` when tracking.
    pub(crate) fn reduce(&mut self, mut v: ModVec<F>, mut cof: ModVec<F>) -> Result<(ModVec<F>, ModVec<F>), OracleError> {
        let mut done = Vec::new();
        while !v.is_zero() {
            self.tick()?;
            let (comp, mono, coeff) = v.terms[0].clone();
            match self.divisor(comp, &mono) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.v.lead().unwrap().1.quotient_of(&mono).expect("divisor");
                    let c = -coeff;
                    v = v.add_mul(&self.order, &c, &q, &g.v);
                    if self.track {
                        cof = cof.add_mul(&self.cof_order, &c, &q, &g.cof);
                    }
                    self.check_size(&v)?;
                }
                None => {
                    done.push(v.terms.remove(0));
                }
            }
        }
        Ok((ModVec { terms: done }, cof))
    }

    fn add_element(&mut self, mut v: ModVec<F>, mut cof: ModVec<F>, sugar: i64) -> usize {
        let inv = v.lead().unwrap().2.inverse();
        v.scale(&inv);
        if self.track {
            cof.scale(&inv);
        }
        let j = self.basis.len();
        let (comp, lm) = {
            let l = v.lead().unwrap();
            (l.0, l.1.clone())
        };
        if self.by_comp.len() <= comp {
            self.by_comp.resize(comp + 1, Vec::new());
        }
        let lm_deg = self.order.term_degree(comp, &lm);
        let cands: Vec<(usize, Monomial)> = self.by_comp[comp]
            .iter()
            .map(|&i| {
                let li = &self.basis[i].v.lead().unwrap().1;
                (i, lm.quotient_of(&li.lcm(&lm)).expect("lcm"))
            })
            .collect();
        for (i, mij) in &cands {
            let dominated = cands
                .iter()
                .any(|(i2, m2)| i2 != i && m2.divides(mij) && (m2 != mij || i2 < i));
            if dominated {
                continue;
            }
            let li = &self.basis[*i].v.lead().unwrap().1;
            if self.product_criterion && li.is_coprime(&lm) {
                continue;
            }
            let lcm_deg = lm_deg + self.order.ring().degree(mij) as i64;
            let si = self.basis[*i].sugar + lcm_deg - self.order.term_degree(comp, li);
            let sj = sugar + lcm_deg - lm_deg;
            self.pairs.insert((si.max(sj), j, *i));
        }
        self.by_comp[comp].push(j);
        self.basis.push(Elem { v, cof, sugar });
        j
    }

    /// Reduces `v` and appends it to the basis unless it reduces to zero.
    /// Returns the new index, or the reduced cofactor (a relation) when
    /// `v` already lies in the module.
    pub(crate) fn insert(&mut self, v: ModVec<F>, cof: ModVec<F>, sugar: i64) -> Result<Result<usize, ModVec<F>>, OracleError> {
        let (r, c) = self.reduce(v, cof)?;
        if r.is_zero() {
            Ok(Err(c))
        } else {
            Ok(Ok(self.add_element(r, c, sugar)))
        }
    }

    /// Processes every queued pair of sugar at most `bound` (all if `None`).
    pub(crate) fn complete_through(&mut self, bound: Option<i64>) -> Result<(), OracleError> {
        while let Some(&(sugar, j, i)) = self.pairs.first() {
            if bound.is_some_and(|b| sugar > b) {
                break;
            }
            self.pairs.pop_first();
            self.spairs += 1;
            let limits = &self.cfg.limits;
            if limits.max_spairs.is_some_and(|m| self.spairs > m) {
                return Err(OracleError::ResourceLimit(format!("more than {} S-pairs", limits.max_spairs.unwrap())));
            }
            if limits.max_degree.is_some_and(|m| sugar > m) {
                return Err(OracleError::ResourceLimit(format!("S-pair of degree {sugar} exceeds the degree cap")));
            }
            self.process_pair(sugar, i, j)?;
        }
        Ok(())
    }

    fn process_pair(&mut self, sugar: i64, i: usize, j: usize) -> Result<(), OracleError> {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let (li, lj) = (&gi.v.lead().unwrap().1, &gj.v.lead().unwrap().1);
        let lcm = li.lcm(lj);
        let qi = li.quotient_of(&lcm).unwrap();
        let qj = lj.quotient_of(&lcm).unwrap();
        let (one, minus) = (F::one(), -F::one());
        let v = ModVec::zero().add_mul(&self.order, &one, &qi, &gi.v).add_mul(&self.order, &minus, &qj, &gj.v);
        let cof = if self.track {
            ModVec::zero().add_mul(&self.cof_order, &one, &qi, &gi.cof).add_mul(&self.cof_order, &minus, &qj, &gj.cof)
        } else {
            ModVec::zero()
        };
        match self.insert(v, cof, sugar)? {
            Ok(_) => {}
            Err(rel) => {
                if self.track && !rel.is_zero() {
                    self.syzygies.push(rel);
                }
            }
        }
        Ok(())
    }
}
