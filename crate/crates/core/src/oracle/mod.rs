//! Independent ground truth: Gröbner bases of ideals and submodules, toric
//! ideals by elimination, ideal equality and colon checks, syzygies, minimal
//! graded free resolutions and exactness checks of given complexes.
//!
//! Every computation is deterministic and single-threaded. Resource caps in
//! [`Limits`] turn runaway computations into [`OracleError::ResourceLimit`].

mod engine;
mod ideal;
mod resolution;
mod vector;

use std::time::{Duration, Instant};

pub use ideal::{colon_check, groebner, ideal_equal, toric_ideal, toric_ideal_of, GroebnerBasis};
pub use resolution::{minimal_resolution, syzygies, verify_exactness, ExactnessReport, StepExactness, SyzygyModule};
pub use vector::ModuleOrderKind;

use crate::curve::CurveError;
use crate::exactalg::AlgebraError;
use crate::homology::HomologyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("generator {index} is not homogeneous")]
    Inhomogeneous { index: usize },
    #[error("the polynomial already lies in the ideal")]
    MemberOfIdeal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Caps on a single oracle computation. `None` means unbounded.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    pub max_spairs: Option<u64>,
    pub max_terms: Option<usize>,
    pub max_degree: Option<i64>,
    pub deadline: Option<Instant>,
}

impl Limits {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleConfig {
    pub limits: Limits,
    pub module_order: ModuleOrderKind,
}

impl OracleConfig {
    pub fn new(limits: Limits) -> Self {
        OracleConfig { limits, module_order: ModuleOrderKind::default() }
    }
}
