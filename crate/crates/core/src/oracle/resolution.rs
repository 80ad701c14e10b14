use serde::{Deserialize, Serialize};

use crate::exactalg::{Field, PolyMatrix, PolyRing, Polynomial};
use crate::homology::{prune_units, BasisLabel, GradedComplex, GradedFreeModule};

use super::engine::Engine;
use super::ideal::ideal_equal;
use super::vector::{ModVec, ModuleOrderKind, VecOrder};
use super::{OracleConfig, OracleError};

/// Generators of the syzygies of a list of module elements, as columns in
/// `R^rank` with one degree per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyModule<F> {
    pub rank: usize,
    pub generators: Vec<Vec<Polynomial<F>>>,
    pub shifts: Vec<i64>,
}

struct StepOutput<F> {
    /// Indices of the candidates kept as generators, in processing order.
    chosen: Vec<usize>,
    /// Relations among the kept candidates (minimal mode) or among all
    /// candidates (otherwise), sorted position-over-term.
    syzygies: Vec<ModVec<F>>,
}

fn is_homogeneous<F: Field>(order: &VecOrder, v: &ModVec<F>) -> bool {
    let mut degs = v.terms.iter().map(|(c, m, _)| order.term_degree(*c, m));
    match degs.next() {
        None => true,
        Some(d) => degs.all(|x| x == d),
    }
}

/// Processes candidates by increasing degree against a growing Gröbner basis
/// with cofactor tracking.
///
/// In minimal mode a candidate is kept only if it does not lie in the
/// submodule spanned by the candidates kept before it, which yields a
/// minimal generating set for homogeneous input; relations are then
/// expressed in the kept candidates. Otherwise every candidate is a
/// generator and those already in the span contribute their relation.
fn syzygy_step<F: Field>(
    order: &VecOrder,
    candidates: &[ModVec<F>],
    minimal: bool,
    cfg: &OracleConfig,
) -> Result<StepOutput<F>, OracleError> {
    let nvars = order.ring().nvars();
    let cof_order = VecOrder::new(order.ring().clone(), ModuleOrderKind::PositionOverTerm, Vec::new());
    if minimal {
        if let Some(index) = candidates.iter().position(|v| !is_homogeneous(order, v)) {
            return Err(OracleError::Inhomogeneous { index });
        }
    }
    let mut eng = Engine::new(order.clone(), cof_order, true, false, cfg);
    let mut idx: Vec<(i64, usize)> = Vec::new();
    let mut syz = Vec::new();
    for (i, v) in candidates.iter().enumerate() {
        match v.degree(order) {
            Some(d) => idx.push((d, i)),
            None if !minimal => syz.push(ModVec::unit(i, nvars)),
            None => {}
        }
    }
    idx.sort();
    let mut chosen = Vec::new();
    for (deg, i) in idx {
        eng.complete_through(Some(deg))?;
        let label = if minimal { chosen.len() } else { i };
        match eng.insert(candidates[i].clone(), ModVec::unit(label, nvars), deg)? {
            Ok(_) => chosen.push(i),
            Err(rel) => {
                if !minimal {
                    syz.push(rel);
                }
            }
        }
    }
    eng.complete_through(None)?;
    syz.extend(eng.take_syzygies());
    Ok(StepOutput { chosen, syzygies: syz })
}

fn columns_to_vecs<F: Field>(order: &VecOrder, columns: &[Vec<Polynomial<F>>]) -> Vec<ModVec<F>> {
    columns.iter().map(|c| ModVec::from_column(order, c)).collect()
}

fn matrix_columns<F: Field>(m: &PolyMatrix<F>) -> Vec<Vec<Polynomial<F>>> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Generators of the syzygies of `columns`, elements of the graded free
/// module with the given shifts. The syzygies live in `R^{columns.len()}`
/// graded by the degrees of the columns (zero columns get degree 0).
pub fn syzygies<F: Field>(
    ring: &PolyRing<F>,
    ambient_shifts: &[i64],
    columns: &[Vec<Polynomial<F>>],
    cfg: &OracleConfig,
) -> Result<SyzygyModule<F>, OracleError> {
    let order = VecOrder::new(ring.order().clone(), cfg.module_order, ambient_shifts.to_vec());
    let vecs = columns_to_vecs(&order, columns);
    let col_shifts: Vec<i64> = vecs.iter().map(|v| v.degree(&order).unwrap_or(0)).collect();
    let out = syzygy_step(&order, &vecs, false, cfg)?;
    let target = VecOrder::new(ring.order().clone(), ModuleOrderKind::PositionOverTerm, col_shifts);
    let shifts = out.syzygies.iter().map(|s| s.degree(&target).unwrap_or(0)).collect();
    Ok(SyzygyModule {
        rank: columns.len(),
        generators: out.syzygies.iter().map(|s| s.to_column(ring, columns.len())).collect(),
        shifts,
    })
}

/// A minimal graded free resolution of `R/(gens)`.
///
/// Each step keeps a minimal generating subset of the previous step's
/// syzygies (processed by degree, then by generation order) and records
/// the Schreyer relations among them. Basis elements are labelled
/// `Generator(k)` in that order. Any unit entry left over is pruned.
pub fn minimal_resolution<F: Field>(
    ring: &PolyRing<F>,
    gens: &[Polynomial<F>],
    cfg: &OracleConfig,
) -> Result<GradedComplex<F>, OracleError> {
    let mut order = VecOrder::new(ring.order().clone(), cfg.module_order, vec![0]);
    let mut candidates = columns_to_vecs(&order, &gens.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>());
    let mut modules = vec![GradedFreeModule::unit()];
    let mut differentials = Vec::new();
    loop {
        let out = syzygy_step(&order, &candidates, true, cfg)?;
        if out.chosen.is_empty() {
            break;
        }
        let rank = modules.last().map_or(0, GradedFreeModule::rank);
        let kept: Vec<&ModVec<F>> = out.chosen.iter().map(|&i| &candidates[i]).collect();
        let shifts: Vec<i64> = kept.iter().map(|v| v.degree(&order).expect("nonzero")).collect();
        let columns = kept.iter().map(|v| v.to_column(ring, rank)).collect();
        differentials.push(PolyMatrix::from_columns(rank, columns)?);
        let labels = (0..shifts.len()).map(BasisLabel::Generator).collect();
        modules.push(GradedFreeModule::new(shifts.clone(), labels));
        if modules.len() > ring.nvars() + 2 {
            return Err(OracleError::ResourceLimit("resolution longer than the number of variables".into()));
        }
        order = VecOrder::new(ring.order().clone(), cfg.module_order, shifts);
        candidates = out.syzygies.into_iter().map(|v| v.resorted(&order)).collect();
    }
    let c = GradedComplex::new(modules, differentials)?;
    Ok(prune_units(ring, &c).trimmed())
}

/// Exactness of one step: every syzygy of `d_step` lies in the image of
/// `d_{step+1}`. The witness is the index of the first syzygy generator
/// that does not.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepExactness {
    pub step: usize,
    pub passed: bool,
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactnessReport {
    /// The entries of `d_1` generate the same ideal as the given generators.
    pub ideal_matches: bool,
    pub steps: Vec<StepExactness>,
}

impl ExactnessReport {
    pub fn all_passed(&self) -> bool {
        self.ideal_matches && self.steps.iter().all(|s| s.passed)
    }

    /// The first step that fails, if any.
    pub fn first_failure(&self) -> Option<usize> {
        self.steps.iter().find(|s| !s.passed).map(|s| s.step)
    }
}

/// Checks that a complex (assumed to satisfy `d d = 0`) resolves `R/(gens)`.
pub fn verify_exactness<F: Field>(
    ring: &PolyRing<F>,
    c: &GradedComplex<F>,
    gens: &[Polynomial<F>],
    cfg: &OracleConfig,
) -> Result<ExactnessReport, OracleError> {
    let d1_entries: Vec<Polynomial<F>> = if c.length() >= 1 { c.d(1).entries().to_vec() } else { Vec::new() };
    let ideal_matches = ideal_equal(ring, &d1_entries, gens, cfg)?;
    let mut steps = Vec::new();
    for s in 1..=c.length() {
        let order = VecOrder::new(ring.order().clone(), cfg.module_order, c.module(s - 1).shifts().to_vec());
        let cols = columns_to_vecs(&order, &matrix_columns(c.d(s)));
        let syz = syzygy_step(&order, &cols, false, cfg)?.syzygies;
        let src = VecOrder::new(ring.order().clone(), cfg.module_order, c.module(s).shifts().to_vec());
        let witness = if s == c.length() {
            syz.iter().position(|v| !v.is_zero())
        } else {
            let mut eng = Engine::new(src.clone(), src.clone(), false, false, cfg);
            for v in columns_to_vecs(&src, &matrix_columns(c.d(s + 1))) {
                if let Some(deg) = v.degree(&src) {
                    let _ = eng.insert(v, ModVec::zero(), deg)?;
                }
            }
            eng.complete_through(None)?;
            let mut first = None;
            for (k, v) in syz.into_iter().enumerate() {
                let (r, _) = eng.reduce(v.resorted(&src), ModVec::zero())?;
                if !r.is_zero() {
                    first = Some(k);
                    break;
                }
            }
            first
        };
        steps.push(StepExactness { step: s, passed: witness.is_none(), witness });
    }
    Ok(ExactnessReport { ideal_matches, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{self, BettiTable, CaseTag};
    use crate::curve::{self, ArithmeticSequence};
    use crate::homology;
    use crate::oracle::toric_ideal;
    use num_rational::BigRational;

    type Q = BigRational;

    fn oracle_table(m0: u64, d: u64, n: usize) -> BettiTable {
        let s = ArithmeticSequence::validate(m0, d, n).unwrap();
        let r = s.ring::<Q>();
        let gens = curve::generators(&s, &r).polys();
        let c = minimal_resolution(&r, &gens, &OracleConfig::default()).unwrap();
        assert!(homology::verify_complex(&r, &c).all_passed());
        BettiTable::from_complex(CaseTag::Oracle, &c)
    }

    #[test]
    fn b1_instance_matches_closed_form() {
        let t = oracle_table(5, 1, 4);
        let s = ArithmeticSequence::validate(5, 1, 4).unwrap();
        assert!(t.same_shifts(&closedform::basis_shifts_b1(&s).unwrap()));
    }

    #[test]
    fn gorenstein_n3() {
        assert_eq!(oracle_table(8, 1, 3).betti(), vec![1, 5, 5, 1]);
    }

    #[test]
    fn gorenstein_n4() {
        let t = oracle_table(6, 1, 4);
        assert_eq!(t.betti(), vec![1, 9, 16, 9, 1]);
    }

    #[test]
    fn toric_ideal_resolution_matches_generators() {
        let s = ArithmeticSequence::validate(7, 1, 3).unwrap();
        let r = s.ring::<Q>();
        let p = toric_ideal::<Q>(&s, &OracleConfig::default()).unwrap();
        let c = minimal_resolution(&r, p.generators(), &OracleConfig::default()).unwrap();
        assert_eq!(BettiTable::from_complex(CaseTag::Oracle, &c).betti(), closedform::betti_b1(3));
    }

    #[test]
    fn exactness_of_constructed_and_truncated() {
        let s = ArithmeticSequence::validate(5, 1, 4).unwrap();
        let r = s.ring::<Q>();
        let gens = curve::generators(&s, &r).polys();
        let c = homology::resolution_b1(&s, &r).unwrap();
        let rep = verify_exactness(&r, &c, &gens, &OracleConfig::default()).unwrap();
        assert!(rep.all_passed(), "{rep:?}");
        let t = c.truncated();
        let rep = verify_exactness(&r, &t, &gens, &OracleConfig::default()).unwrap();
        assert_eq!(rep.first_failure(), Some(3));
    }

    #[test]
    fn syzygies_of_two_coprime_monomials() {
        let s = ArithmeticSequence::validate(5, 1, 4).unwrap();
        let r = s.ring::<Q>();
        let cols = vec![vec![r.var(0)], vec![r.var(1)]];
        let syz = syzygies(&r, &[0], &cols, &OracleConfig::default()).unwrap();
        assert_eq!(syz.generators.len(), 1);
        assert_eq!(syz.shifts, vec![11]);
        let g = &syz.generators[0];
        assert!(r.add(&r.mul(&g[0], &r.var(0)), &r.mul(&g[1], &r.var(1))).is_zero());
    }
}
