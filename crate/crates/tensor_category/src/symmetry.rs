use exact_linalg::{Rat, RatMat};
use num_traits::One;

use crate::mor::{CatError, Mor};
use crate::obj::Obj;

/// True when moving homogeneous items along `images` (item `k` goes to
/// position `images[k]`) produces the sign -1: an odd number of inversions
/// among the odd items.
pub fn koszul_negative(images: &[usize], odd: &[bool]) -> bool {
    let mut count = 0usize;
    for k in 0..images.len() {
        if !odd[k] {
            continue;
        }
        for l in k + 1..images.len() {
            if odd[l] && images[k] > images[l] {
                count += 1;
            }
        }
    }
    count % 2 == 1
}

fn check_images(images: &[usize], n: usize) -> Result<(), CatError> {
    let mut seen = vec![false; n];
    if images.len() != n {
        return Err(CatError::Invalid(format!(
            "permutation of length {} applied to {n} factors",
            images.len()
        )));
    }
    for &i in images {
        if i >= n || seen[i] {
            return Err(CatError::Invalid(format!("{images:?} is not a permutation")));
        }
        seen[i] = true;
    }
    Ok(())
}

/// Iterates over all multi-indices of the given mixed radix, last digit fastest.
pub fn multi_indices(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut flat| {
        let mut digits = vec![0; dims.len()];
        for (slot, &d) in digits.iter_mut().zip(dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        digits
    })
}

/// Flat index of a multi-index (row-major, last digit fastest).
pub fn flat_index(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (d, n)| acc * n + d)
}

/// The symmetry isomorphism reordering tensor factors: factor `k` of the
/// domain lands in position `images[k]` of the codomain, with the Koszul sign.
pub fn permute_factors(factors: &[Obj], images: &[usize]) -> Result<Mor, CatError> {
    check_images(images, factors.len())?;
    let mut target: Vec<Obj> = vec![Obj::unit(); factors.len()];
    for (k, &pos) in images.iter().enumerate() {
        target[pos] = factors[k].clone();
    }
    let dims: Vec<usize> = factors.iter().map(Obj::dim).collect();
    let target_dims: Vec<usize> = target.iter().map(Obj::dim).collect();
    let dom = Obj::tensor_all(factors);
    let cod = Obj::tensor_all(&target);
    let mut entries = Vec::with_capacity(dom.dim());
    for digits in multi_indices(&dims) {
        let mut out = vec![0; digits.len()];
        let mut odd = vec![false; digits.len()];
        for (k, &d) in digits.iter().enumerate() {
            out[images[k]] = d;
            odd[k] = factors[k].parity(d).is_odd();
        }
        let value = if koszul_negative(images, &odd) {
            -Rat::one()
        } else {
            Rat::one()
        };
        entries.push((
            flat_index(&out, &target_dims),
            flat_index(&digits, &dims),
            value,
        ));
    }
    let mat = RatMat::from_triplets(cod.dim(), dom.dim(), entries);
    Mor::new(dom, cod, mat)
}

/// The symmetry `x (x) y -> y (x) x`, sign `(-1)^{|a||b|}` on `e_a (x) f_b`.
pub fn tau(x: &Obj, y: &Obj) -> Mor {
    permute_factors(&[x.clone(), y.clone()], &[1, 0]).expect("two-factor swap is a permutation")
}
