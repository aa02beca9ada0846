use std::collections::BTreeMap;

use exact_linalg::{int, Rat};
use num_traits::{One, Zero};

use crate::perm::Perm;
use crate::GroupError;

/// One of the two linear characters of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Character {
    Sign,
    Trivial,
}

impl Character {
    pub fn value(self, p: &Perm) -> Rat {
        match self {
            Character::Sign => int(p.sign()),
            Character::Trivial => Rat::one(),
        }
    }
}

/// A finite formal combination of permutations of a fixed number of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    letters: usize,
    terms: BTreeMap<Perm, Rat>,
}

impl GroupAlgebraElement {
    pub fn zero(letters: usize) -> Self {
        GroupAlgebraElement {
            letters,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(letters: usize) -> Self {
        GroupAlgebraElement::from_perm(Perm::identity(letters))
    }

    pub fn from_perm(p: Perm) -> Self {
        let mut terms = BTreeMap::new();
        let letters = p.len();
        terms.insert(p, Rat::one());
        GroupAlgebraElement { letters, terms }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Perm) -> Rat {
        self.terms.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c * p`, dropping the term if it cancels.
    pub fn add_term(&mut self, p: Perm, c: Rat) -> Result<(), GroupError> {
        if p.len() != self.letters {
            return Err(GroupError::Arity {
                expected: self.letters,
                found: p.len(),
            });
        }
        let entry = self.terms.entry(p).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, GroupError> {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        let mut out = GroupAlgebraElement::zero(self.letters);
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(p, c)| (p.clone(), c * s)).collect();
        }
        out
    }

    /// The convolution product, `(sum a_s s)(sum b_t t) = sum a_s b_t (s o t)`.
    pub fn mul(&self, other: &Self) -> Result<Self, GroupError> {
        let mut out = GroupAlgebraElement::zero(self.letters);
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_term(s.compose(t)?, a * b)?;
            }
        }
        Ok(out)
    }

    /// Extends an element of `S_k` to `S_n` (`k <= n`) by fixing the letters
    /// `offset..offset+k` outside of which everything is fixed.
    pub fn embed(&self, n: usize, offset: usize) -> Result<Self, GroupError> {
        if offset + self.letters > n {
            return Err(GroupError::Arity {
                expected: n,
                found: offset + self.letters,
            });
        }
        let mut out = GroupAlgebraElement::zero(n);
        for (p, c) in &self.terms {
            let images = (0..n)
                .map(|k| {
                    if k >= offset && k < offset + self.letters {
                        offset + p.apply(k - offset)
                    } else {
                        k
                    }
                })
                .collect();
            out.add_term(Perm::new(images)?, c.clone())?;
        }
        Ok(out)
    }
}

/// `e_{S_n}^chi = (1/n!) sum_s chi(s)^{-1} s`.
pub fn idempotent(n: usize, chi: Character) -> GroupAlgebraElement {
    let perms = Perm::all(n);
    let weight = Rat::one() / int(perms.len() as i64);
    let mut out = GroupAlgebraElement::zero(n);
    for p in perms {
        let c = &weight / chi.value(&p);
        out.add_term(p, c).expect("arity matches");
    }
    out
}
