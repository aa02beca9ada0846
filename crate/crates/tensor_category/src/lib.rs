//! A small symmetric monoidal category of finite dimensional super vector
//! spaces over the rationals: objects, even morphisms, the Koszul symmetry,
//! dual pairs, internal hom and the contraction combinators built on them.

pub mod dual;
pub mod hom;
pub mod laws;
pub mod mor;
pub mod obj;
pub mod pairing;
pub mod random;
pub mod symmetry;

pub use dual::{solve_against_pairing, DualData, DualPair};
pub use hom::{
    combinators, composition_law, ev_hom, hom_epsilon, hom_functor, hom_obj, hom_pair, hom_tensor_eps,
    hom_tensor_eps_tau, hom_valued, internal_duality, iota_of, iota_star_of, phi_of, tensor_eps, tensor_eps_tau,
    CombinatorVariant, HomPair,
};
pub use mor::{CatError, Mor};
pub use obj::{Obj, Parity};
pub use laws::Law;
pub use pairing::{contract, ev_pairs, Contraction, PairVariant, PairingSpec};
pub use symmetry::{flat_index, koszul_negative, multi_indices, permute_factors, tau};
pub use random::{random_mor, random_obj, random_pair, Model};
