use tensor_category::{tensor_eps, tensor_eps_tau, Mor, Obj};

use crate::algebra::PowerAlgebra;
use crate::PowerError;

/// `A^p_q = A_p (x) A_q^v`.
#[derive(Clone, Debug)]
pub struct MixedPowerObject {
    pub upper: usize,
    pub lower: usize,
    pub carrier: Obj,
}

impl PowerAlgebra {
    pub fn mixed(&self, upper: usize, lower: usize) -> Result<MixedPowerObject, PowerError> {
        let carrier = self
            .power(upper)?
            .carrier()
            .tensor(self.dual_power(lower)?.carrier());
        Ok(MixedPowerObject { upper, lower, carrier })
    }

    /// `phi^{i,k}_{j,l} = phi_{i,k} (x)_eps phi^v_{j,l} : A^i_j (x) A^k_l -> A^{i+k}_{j+l}`.
    pub fn phi_mixed(&self, i: usize, j: usize, k: usize, l: usize) -> Result<Mor, PowerError> {
        Ok(tensor_eps(
            &self.phi(i, k)?,
            &self.phi_dual(j, l)?,
            self.power(i)?.carrier(),
            self.power(k)?.carrier(),
            self.dual_power(j)?.carrier(),
            self.dual_power(l)?.carrier(),
        )?)
    }

    /// `delta^{i,k}_{j,l} = phi_{iota*_{j,k}} (x)_eps^tau phi_{iota_{i,l}} :
    /// A^i_j (x) A^k_l -> A^{k-j}_{l-i}`, defined for `j <= k` and `i <= l`.
    pub fn delta_mixed(&self, i: usize, j: usize, k: usize, l: usize) -> Result<Mor, PowerError> {
        Ok(tensor_eps_tau(
            &self.iota_star_phi(j, k)?,
            &self.iota_phi(i, l)?,
            self.dual_power(j)?.carrier(),
            self.power(k)?.carrier(),
            self.power(i)?.carrier(),
            self.dual_power(l)?.carrier(),
        )?)
    }
}
