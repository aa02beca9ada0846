use exact_linalg::{binom_at, int, Rat};
use num_traits::One;
use power_algebras::identities::flavor_sign;
use power_algebras::Flavor;

/// The scalars predicted for a power algebra of a given flavor over an
/// object of rank `rank`, with `S = A_i`, `X = A_{g-i}`, `Y = A_g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constants {
    pub flavor: Flavor,
    pub rank: Rat,
}

fn nat(n: usize) -> Rat {
    int(n as i64)
}

fn binom(n: usize, k: usize) -> Rat {
    binom_at(&nat(n), k)
}

impl Constants {
    pub fn new(flavor: Flavor, rank: Rat) -> Constants {
        Constants { flavor, rank }
    }

    fn shifted(&self, by: i64) -> Rat {
        &self.rank + int(by)
    }

    /// The rank of `A_k`: `binom(r, k)` or `binom(r + k - 1, k)`.
    pub fn power_rank(&self, k: usize) -> Rat {
        match self.flavor {
            Flavor::Alternating => binom_at(&self.rank, k),
            Flavor::Symmetric => binom_at(&self.shifted(k as i64 - 1), k),
        }
    }

    /// `lambda_{S,X}` in `phi_{X,S} o tau = lambda phi_{S,X}`.
    pub fn lambda(&self, i: usize, g: usize) -> Rat {
        flavor_sign(self.flavor, i * (g - i))
    }

    /// `lambda_{[S],[X]} = lambda_{S,X} lambda_{S^v,X^v}`.
    pub fn lambda_brackets(&self, i: usize, g: usize) -> Rat {
        let l = self.lambda(i, g);
        &l * &l
    }

    /// The numerator of `mu_{S,X}`: `binom(r - i, g - i)` or `binom(r + g - 1, g - i)`.
    pub fn upper_witness(&self, i: usize, g: usize) -> Rat {
        match self.flavor {
            Flavor::Alternating => binom_at(&self.shifted(-(i as i64)), g - i),
            Flavor::Symmetric => binom_at(&self.shifted(g as i64 - 1), g - i),
        }
    }

    /// The numerator of `mu_{X,S}`: `binom(r + i - g, i)` or `binom(r + g - 1, i)`.
    pub fn lower_witness(&self, i: usize, g: usize) -> Rat {
        match self.flavor {
            Flavor::Alternating => binom_at(&self.shifted(i as i64 - g as i64), i),
            Flavor::Symmetric => binom_at(&self.shifted(g as i64 - 1), i),
        }
    }

    pub fn mu_sx(&self, i: usize, g: usize) -> Rat {
        self.upper_witness(i, g) / binom(g, g - i)
    }

    pub fn mu_xs(&self, i: usize, g: usize) -> Rat {
        self.lower_witness(i, g) / binom(g, i)
    }

    /// The coefficient in `m delta^{1,m}_{1,m} (C_1 (x) C_m) = c C_{m-1}`.
    pub fn casimir_contraction(&self, m: usize) -> Rat {
        match self.flavor {
            Flavor::Alternating => self.shifted(1 - m as i64),
            Flavor::Symmetric => self.shifted(m as i64 - 1),
        }
    }

    /// The coefficient in `binom(m, k) delta^{k,m}_{k,m} (C_k (x) C_m) = c C_{m-k}`.
    pub fn iterated_contraction(&self, k: usize, m: usize) -> Rat {
        match self.flavor {
            Flavor::Alternating => binom_at(&self.shifted(k as i64 - m as i64), k),
            Flavor::Symmetric => binom_at(&self.shifted(m as i64 - 1), k),
        }
    }

    /// The sign of the second term when splitting off one tensor factor.
    pub fn split_sign(&self) -> Rat {
        match self.flavor {
            Flavor::Alternating => -Rat::one(),
            Flavor::Symmetric => Rat::one(),
        }
    }

    pub fn sign(&self, n: usize) -> Rat {
        flavor_sign(self.flavor, n)
    }
}
