//! Alternating and symmetric powers of a dualizable object as split
//! idempotents on tensor powers, together with their multiplications,
//! internal multiplications, Poincare morphisms and the mixed algebra
//! `A^i_j = A_i (x) A_j^v`.

mod algebra;
pub mod identities;
mod mixed;
mod power;

pub use algebra::{IotaMethod, PowerAlgebra};
pub use mixed::MixedPowerObject;
pub use power::{leading_contraction, power, tensor_power, tensor_power_ev, Flavor, PowerObject, SplitIdempotent};

use exact_linalg::{Rat, SplitError};
use symmetric_group::GroupError;
use tensor_category::CatError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PowerError {
    #[error(transparent)]
    Category(#[from] CatError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Split(#[from] SplitError<Rat>),
    #[error("degree {degree} exceeds the precomputed maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("degrees ({i}, {j}) need i <= j")]
    Degrees { i: usize, j: usize },
    #[error("power idempotent has an inhomogeneous image vector")]
    Inhomogeneous,
}
