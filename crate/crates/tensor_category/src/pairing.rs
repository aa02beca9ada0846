use crate::dual::DualPair;
use crate::mor::{CatError, Mor};
use crate::obj::Obj;
use crate::symmetry::permute_factors;

/// How a pair of slots is contracted. With `Phi` the first slot holds the
/// dual and the second the primal object (`ev`); with `Tau` the order is
/// reversed (`ev^tau`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairVariant {
    Phi,
    Tau,
}

/// A pairing of four tensor slots into two contracted pairs, written with
/// 1-based slots as in `ev_{13,24}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingSpec {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub variants: (PairVariant, PairVariant),
}

impl PairingSpec {
    pub fn new(first: (usize, usize), second: (usize, usize), variants: (PairVariant, PairVariant)) -> Self {
        PairingSpec {
            first,
            second,
            variants,
        }
    }

    fn validate(&self) -> Result<(), CatError> {
        let mut slots = [self.first.0, self.first.1, self.second.0, self.second.1];
        slots.sort_unstable();
        if slots != [1, 2, 3, 4] {
            return Err(CatError::BadPairing(format!(
                "slots {:?} and {:?} do not partition 1..4",
                self.first, self.second
            )));
        }
        Ok(())
    }
}

/// One contracted pair for [`contract`]: 0-based slots, variant, and the dual
/// pair of the primal member.
#[derive(Debug, Clone, Copy)]
pub struct Contraction<'a> {
    pub left: usize,
    pub right: usize,
    pub variant: PairVariant,
    pub pairing: &'a DualPair,
}

/// Contracts the listed slot pairs of `factors`: the pairs are moved to the
/// front (dual member first) by the symmetry, evaluated, and the remaining
/// factors are kept in their original order.
pub fn contract(factors: &[Obj], pairs: &[Contraction<'_>]) -> Result<Mor, CatError> {
    let n = factors.len();
    let mut order = Vec::with_capacity(n);
    for c in pairs {
        let (dual_slot, primal_slot) = match c.variant {
            PairVariant::Phi => (c.left, c.right),
            PairVariant::Tau => (c.right, c.left),
        };
        for slot in [dual_slot, primal_slot] {
            if slot >= n || order.contains(&slot) {
                return Err(CatError::BadPairing(format!("slot {slot} invalid or reused")));
            }
        }
        if factors[primal_slot] != *c.pairing.obj() || factors[dual_slot] != *c.pairing.obj() {
            return Err(CatError::BadPairing(format!(
                "slots {dual_slot},{primal_slot} ({:?}, {:?}) do not match {:?}",
                factors[dual_slot],
                factors[primal_slot],
                c.pairing.obj()
            )));
        }
        order.push(dual_slot);
        order.push(primal_slot);
    }
    let rest: Vec<usize> = (0..n).filter(|k| !order.contains(k)).collect();
    order.extend(&rest);
    let mut images = vec![0; n];
    for (pos, &slot) in order.iter().enumerate() {
        images[slot] = pos;
    }
    let reorder = permute_factors(factors, &images)?;
    let mut evals: Vec<Mor> = pairs.iter().map(|c| c.pairing.ev()).collect();
    evals.extend(rest.iter().map(|&k| Mor::id(&factors[k])));
    Mor::tensor_all(&evals).after(&reorder)
}

/// `ev_{ij,kl}^{alpha,beta}` on `W1 (x) W2 (x) W3 (x) W4`. `pairings` holds the
/// dual pairs of the primal members of the first and second pair.
pub fn ev_pairs(spec: &PairingSpec, objects: [&Obj; 4], pairings: [&DualPair; 2]) -> Result<Mor, CatError> {
    spec.validate()?;
    let factors: Vec<Obj> = objects.iter().map(|o| (*o).clone()).collect();
    let pairs = [
        Contraction {
            left: spec.first.0 - 1,
            right: spec.first.1 - 1,
            variant: spec.variants.0,
            pairing: pairings[0],
        },
        Contraction {
            left: spec.second.0 - 1,
            right: spec.second.1 - 1,
            variant: spec.variants.1,
            pairing: pairings[1],
        },
    ];
    contract(&factors, &pairs)
}
