use std::fmt;

use crate::GroupError;

/// A permutation of `{0, .., n-1}`: `k` is sent to `images[k]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Perm, GroupError> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(GroupError::NotPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// From the images of `1..=n`, in one-line notation.
    pub fn from_one_based(images: &[usize]) -> Result<Perm, GroupError> {
        if images.contains(&0) {
            return Err(GroupError::NotPermutation(images.to_vec()));
        }
        Perm::new(images.iter().map(|i| i - 1).collect())
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// The transposition of `a` and `b` (0-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm { images }
    }

    /// The cycle `(1, 2, ..., p)` in one-based notation, as an element of `S_n`.
    pub fn initial_cycle(n: usize, p: usize) -> Perm {
        let images = (0..n)
            .map(|k| if k + 1 < p { k + 1 } else if k + 1 == p { 0 } else { k })
            .collect();
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    /// `self o other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, GroupError> {
        if self.len() != other.len() {
            return Err(GroupError::Arity {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i] = k;
        }
        Perm { images }
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.images[a] > self.images[b])
            .count()
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// All permutations of `n` letters in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: current.clone(),
            });
            let Some(pivot) = (1..n).rev().find(|&k| current[k - 1] < current[k]).map(|k| k - 1) else {
                break;
            };
            let swap_with = (pivot + 1..n).rev().find(|&k| current[k] > current[pivot]).unwrap();
            current.swap(pivot, swap_with);
            current[pivot + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|i| i + 1).collect();
        write!(f, "Perm{one_based:?}")
    }
}
