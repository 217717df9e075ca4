pub mod rat;
pub mod upoly;
pub mod ratx;
pub mod mpoly;
pub mod ypoly;
pub mod ratfun;
pub mod qshift;
pub mod qgosper;

pub use rat::{q_log, QParam, Rat};
pub use upoly::UPoly;
pub use ratx::RatX;
pub use mpoly::{apply_shift_mpoly, mpoly_gcd, resultant, MPoly, ShiftMonomial, Var};
pub use ypoly::YPoly;
pub use ratfun::RatFun;
pub use qshift::{
    diophantine_solve, orbit_partition, q_dispersion, stabilizer_min_t, tau_equivalent_in_var,
    Group, OrbitWitness, QDispSet, StabilizerWitness,
};
pub use qgosper::{m_fold_gosper, shift_gcd_spectrum, GosperTriple};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("q must be a rational other than 0, 1, -1")]
    InvalidQ,
    #[error("{0}")]
    Domain(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;
