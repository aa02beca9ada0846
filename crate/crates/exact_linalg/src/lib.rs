//! Exact rational linear algebra: matrices generic over a field, with the
//! arbitrary-precision rational instance exported as [`Rat`] and [`RatMat`].

mod mat;
mod split;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use mat::{mat_ops, Mat, MatError, MatOp, Scalar};
pub use split::{split_idempotent, SplitError};

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Rat = BigRational;

/// Matrix over [`Rat`].
pub type RatMat = Mat<Rat>;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Value at `t` of the polynomial `T(T-1)...(T-k+1)/k!`.
pub fn binom_at(t: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k {
        acc *= t - int(j as i64);
    }
    acc / Rat::from_integer(factorial(k))
}

/// `(-1)^n` as a rational.
pub fn sign(n: usize) -> Rat {
    if n.is_multiple_of(2) {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Largest absolute numerator among the entries, rendered as text; "0" for
/// the zero matrix.
pub fn residual_fingerprint(m: &RatMat) -> String {
    m.entries()
        .map(|(_, _, v)| v.numer().abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        .to_string()
}

/// Renders a rational as "p/q", or "p" for integers.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
