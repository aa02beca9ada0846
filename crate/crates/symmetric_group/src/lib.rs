//! Permutations, the rational group algebra of `S_n`, its two character
//! idempotents, coset representative systems, and the signed action on
//! tensor powers.

mod action;
mod algebra;
mod coset;
mod perm;

use thiserror::Error;

pub use action::{act, act_element};
pub use algebra::{idempotent, Character, GroupAlgebraElement};
pub use coset::{coset_system, injective_tuples, CosetScheme, CosetSystem};
pub use perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("{0:?} is not a permutation")]
    NotPermutation(Vec<usize>),
    #[error("expected {expected} letters, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("coset system needs i <= j, got i = {i}, j = {j}")]
    Degrees { i: usize, j: usize },
}
