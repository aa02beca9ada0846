use exact_linalg::RatMat;
use tensor_category::{permute_factors, CatError, Mor, Obj};

use crate::algebra::GroupAlgebraElement;
use crate::perm::Perm;

/// The action of `sigma` on `V^{(x) n}`: tensor slot `k` moves to slot
/// `sigma(k)`, with the Koszul sign. `act(s o t) = act(s) o act(t)`.
pub fn act(sigma: &Perm, v: &Obj, n: usize) -> Result<Mor, CatError> {
    if sigma.len() != n {
        return Err(CatError::Invalid(format!(
            "permutation of {} letters acting on {n} tensor factors",
            sigma.len()
        )));
    }
    permute_factors(&vec![v.clone(); n], sigma.images())
}

/// Linear extension of [`act`].
pub fn act_element(e: &GroupAlgebraElement, v: &Obj, n: usize) -> Result<Mor, CatError> {
    let power = Obj::tensor_all(&vec![v.clone(); n]);
    let dim = power.dim();
    let mut entries = Vec::new();
    for (p, c) in e.terms() {
        let m = act(p, v, n)?;
        entries.extend(m.mat().entries().map(|(r, col, x)| (r, col, x * c)));
    }
    Mor::new(power.clone(), power, RatMat::from_triplets(dim, dim, entries))
}
