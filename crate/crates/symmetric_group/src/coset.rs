use exact_linalg::{factorial, Rat};
use num_traits::One;

use crate::algebra::{Character, GroupAlgebraElement};
use crate::perm::Perm;
use crate::GroupError;

/// How the letters outside a tuple `p` are sent to `i+1..j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CosetScheme {
    /// The complement keeps its relative order.
    Ordered,
    /// The complement is reversed, giving a different system of representatives.
    Reversed,
}

/// Representatives `delta_p` with `delta_p(p_k) = k` for every injective
/// tuple `p` of length `i` in `1..j`, and the averaged element
/// `e^{i<=j} = ((j-i)!/j!) sum chi(delta_p)^{-1} delta_p`.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    pub i: usize,
    pub j: usize,
    pub reps: Vec<(Vec<usize>, Perm)>,
    pub e_leq: GroupAlgebraElement,
}

/// Injective tuples of length `i` in `0..j`, lexicographically.
pub fn injective_tuples(i: usize, j: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..i {
        let mut next = Vec::new();
        for t in &out {
            for x in (0..j).filter(|x| !t.contains(x)) {
                let mut longer = t.clone();
                longer.push(x);
                next.push(longer);
            }
        }
        out = next;
    }
    out
}

pub fn coset_system(i: usize, j: usize, chi: Character, scheme: CosetScheme) -> Result<CosetSystem, GroupError> {
    if i > j {
        return Err(GroupError::Degrees { i, j });
    }
    let weight = Rat::new(factorial(j - i), factorial(j));
    let mut reps = Vec::new();
    let mut e_leq = GroupAlgebraElement::zero(j);
    for p in injective_tuples(i, j) {
        let mut images = vec![usize::MAX; j];
        for (k, &pk) in p.iter().enumerate() {
            images[pk] = k;
        }
        let mut rest: Vec<usize> = (0..j).filter(|x| !p.contains(x)).collect();
        if scheme == CosetScheme::Reversed {
            rest.reverse();
        }
        for (offset, &x) in rest.iter().enumerate() {
            images[x] = i + offset;
        }
        let delta = Perm::new(images)?;
        let c = &weight * (Rat::one() / chi.value(&delta));
        e_leq.add_term(delta.clone(), c)?;
        reps.push((p.iter().map(|x| x + 1).collect(), delta));
    }
    Ok(CosetSystem { i, j, reps, e_leq })
}
