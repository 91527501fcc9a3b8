//! Finite projective geometry PG(2, q) and the local operators at a vertex
//! of the building.

mod field;
mod local;
mod plane;
mod singer;
mod star;

use thiserror::Error;

pub use field::{prime_power, Fq};
pub use local::{
    local_right_inverse, local_t, local_t_prime, right_inverse_report, LocalOperator, LocalSpace,
    RightInverseReport,
};
pub use plane::{ProjPlane, DEFAULT_MAX_Q};
pub use singer::SingerCycle;
pub use star::{count_common_neighbours, LocalCountReport, Star, StarVertex};

#[derive(Debug, Error)]
pub enum PlaneError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {q} exceeds the configured bound {bound}")]
    BoundExceeded { q: u32, bound: u32 },
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
}
