//! Seeded generators for small objects, pairings and even morphisms with
//! small integer entries.

use exact_linalg::{int, RatMat};
use rand::Rng;

use crate::dual::DualPair;
use crate::mor::Mor;
use crate::obj::{Obj, Parity};

/// Which of the two concrete categories a generator draws from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Plain,
    Super,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Plain => "plain",
            Model::Super => "super",
        }
    }
}

/// A random object of dimension `1..=max_dim` with parities shuffled.
pub fn random_obj<R: Rng + ?Sized>(rng: &mut R, model: Model, max_dim: usize) -> Obj {
    let n = rng.gen_range(1..=max_dim.max(1));
    let parities: Vec<Parity> = (0..n)
        .map(|_| match model {
            Model::Super if rng.gen_bool(0.5) => Parity::Odd,
            _ => Parity::Even,
        })
        .collect();
    let odd = parities.iter().filter(|p| p.is_odd()).count();
    Obj::new(parities, format!("R{}|{}", n - odd, odd))
}

/// A random even morphism with entries in `-2..=2`.
pub fn random_mor<R: Rng + ?Sized>(rng: &mut R, dom: &Obj, cod: &Obj) -> Mor {
    let mut entries = Vec::new();
    for r in 0..cod.dim() {
        for c in 0..dom.dim() {
            if cod.parity(r) == dom.parity(c) {
                let v: i64 = rng.gen_range(-2..=2);
                if v != 0 {
                    entries.push((r, c, int(v)));
                }
            }
        }
    }
    Mor::new(dom.clone(), cod.clone(), RatMat::from_triplets(cod.dim(), dom.dim(), entries))
        .expect("entries respect parity")
}

/// A random nondegenerate even pairing on `obj`.
pub fn random_pair<R: Rng + ?Sized>(rng: &mut R, obj: &Obj) -> DualPair {
    loop {
        let gram = random_mor(rng, obj, obj);
        if let Ok(pair) = DualPair::with_gram(obj, gram.mat().clone()) {
            return pair;
        }
    }
}
