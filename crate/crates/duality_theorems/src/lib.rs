//! Exact checks of the duality statements for alternating and symmetric
//! powers. Each check evaluates both sides of its diagrams as rational
//! matrices and reports a [`CheckResult`].

mod checks;
mod constants;
pub mod formal;
mod result;
mod selftest;
mod structural;
mod subject;

pub use checks::{
    check_corollary_ct, check_fdp_corollaries, check_formal_hypotheses, check_key_lemma, check_key_steps,
    check_p2, check_p2_with, check_rank_formula, check_theorem, P2Form,
};
pub use constants::Constants;
pub use formal::FormalDuality;
pub use result::{CheckId, CheckResult, Params, Status, Witness};
pub use selftest::check_self_test;
pub use structural::{check_structural, structural_laws};
pub use subject::Subject;

use power_algebras::PowerError;
use tensor_category::CatError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DualityError {
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(transparent)]
    Category(#[from] CatError),
    #[error("a plain subject cannot have odd dimensions")]
    OddPlain,
}
