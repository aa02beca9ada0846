//! The algebraic identities satisfied by a [`PowerAlgebra`], phrased as
//! [`Law`]s so that tests and the structural verifier share one source.

use exact_linalg::{int, sign, Rat};
use tensor_category::laws::Law;
use tensor_category::{contract, tau, Contraction, Mor, Obj, PairVariant};

use crate::algebra::{IotaMethod, PowerAlgebra};
use crate::power::Flavor;
use crate::PowerError;

fn id(x: &Obj) -> Mor {
    Mor::id(x)
}

fn scalar(n: usize) -> Rat {
    int(n as i64)
}

/// `(-1)^n` for alternating powers, `1` for symmetric ones.
pub fn flavor_sign(flavor: Flavor, n: usize) -> Rat {
    match flavor {
        Flavor::Alternating => sign(n),
        Flavor::Symmetric => int(1),
    }
}

impl PowerAlgebra {
    fn carrier(&self, k: usize) -> Result<Obj, PowerError> {
        Ok(self.power(k)?.carrier().clone())
    }

    fn dual_carrier(&self, k: usize) -> Result<Obj, PowerError> {
        Ok(self.dual_power(k)?.carrier().clone())
    }

    /// `ev^{tau,phi}_{14,23}` on `A^p_q (x) A^q_p`.
    pub fn mixed_pairing(&self, p: usize, q: usize) -> Result<Mor, PowerError> {
        let factors = [
            self.carrier(p)?,
            self.dual_carrier(q)?,
            self.carrier(q)?,
            self.dual_carrier(p)?,
        ];
        let pairs = [
            Contraction {
                left: 0,
                right: 3,
                variant: PairVariant::Tau,
                pairing: self.pair(p)?,
            },
            Contraction {
                left: 1,
                right: 2,
                variant: PairVariant::Phi,
                pairing: self.pair(q)?,
            },
        ];
        Ok(contract(&factors, &pairs)?)
    }
}

/// `phi_{i+j,k} (phi_{i,j} (x) 1) = phi_{i,j+k} (1 (x) phi_{j,k})` for both the
/// algebra and its dual.
pub fn associativity_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    for i in 0..=max {
        for j in 0..=max - i {
            for k in 0..=max - i - j {
                let lhs = alg.phi(i + j, k)?.after(&alg.phi(i, j)?.tensor(&id(&alg.carrier(k)?)))?;
                let rhs = alg.phi(i, j + k)?.after(&id(&alg.carrier(i)?).tensor(&alg.phi(j, k)?))?;
                laws.push(Law::new(format!("associativity {i},{j},{k}"), lhs, rhs));
                let lhs = alg
                    .phi_dual(i + j, k)?
                    .after(&alg.phi_dual(i, j)?.tensor(&id(&alg.dual_carrier(k)?)))?;
                let rhs = alg
                    .phi_dual(i, j + k)?
                    .after(&id(&alg.dual_carrier(i)?).tensor(&alg.phi_dual(j, k)?))?;
                laws.push(Law::new(format!("dual associativity {i},{j},{k}"), lhs, rhs));
            }
        }
    }
    Ok(laws)
}

/// `phi_{j,i} o tau = (-1)^{ij} phi_{i,j}` (no sign for symmetric powers).
pub fn commutativity_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    for i in 0..=max {
        for j in 0..=max - i {
            let swapped = alg.phi(j, i)?.after(&tau(&alg.carrier(i)?, &alg.carrier(j)?))?;
            let lhs = alg.phi(i, j)?.scale(&flavor_sign(alg.flavor(), i * j));
            laws.push(Law::new(format!("commutativity {i},{j}"), swapped, lhs));
        }
    }
    Ok(laws)
}

/// The explicit internal multiplications agree with the ones obtained from
/// internal duality.
pub fn route_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    for j in 0..=max {
        for i in 0..=j {
            laws.push(Law::new(
                format!("iota routes {i},{j}"),
                alg.iota_phi_with(i, j, IotaMethod::Explicit)?,
                alg.iota_phi_with(i, j, IotaMethod::ViaD)?,
            ));
            laws.push(Law::new(
                format!("iota* routes {i},{j}"),
                alg.iota_star_phi_with(i, j, IotaMethod::Explicit)?,
                alg.iota_star_phi_with(i, j, IotaMethod::ViaD)?,
            ));
        }
    }
    Ok(laws)
}

/// The characterizing property of the internal multiplication:
/// `ev^tau_{A_j} (phi_{i,j-i} (x) 1) = ev^tau_{A_{j-i}} (1 (x) phi_iota) (tau (x) 1)`
/// on `A_i (x) A_{j-i} (x) A_j^v`.
pub fn adjunction_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    for j in 0..=max {
        for i in 0..=j {
            let (s, x, yd) = (alg.carrier(i)?, alg.carrier(j - i)?, alg.dual_carrier(j)?);
            let lhs = alg.pair(j)?.ev_tau().after(&alg.phi(i, j - i)?.tensor(&id(&yd)))?;
            let rhs = Mor::chain(&[
                &tau(&s, &x).tensor(&id(&yd)),
                &id(&x).tensor(&alg.iota_phi(i, j)?),
                &alg.pair(j - i)?.ev_tau(),
            ])?;
            laws.push(Law::new(format!("iota adjunction {i},{j}"), lhs, rhs));
        }
    }
    Ok(laws)
}

/// Contraction with a vector is an antiderivation of the dual algebra
/// (a derivation for symmetric powers), on `V (x) A_j^v (x) A_l^v`.
pub fn antiderivation_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    let v = alg.carrier(1)?;
    for j in 1..=max {
        for l in 1..=max - j {
            let (dj, dl) = (alg.dual_carrier(j)?, alg.dual_carrier(l)?);
            let lhs = alg
                .iota_phi(1, j + l)?
                .after(&id(&v).tensor(&alg.phi_dual(j, l)?))?
                .scale(&scalar(j + l));
            let first = alg
                .phi_dual(j - 1, l)?
                .after(&alg.iota_phi(1, j)?.tensor(&id(&dl)))?
                .scale(&scalar(j));
            let second = Mor::chain(&[
                &tau(&v, &dj).tensor(&id(&dl)),
                &id(&dj).tensor(&alg.iota_phi(1, l)?),
                &alg.phi_dual(j, l - 1)?,
            ])?
            .scale(&(flavor_sign(alg.flavor(), j) * scalar(l)));
            laws.push(Law::new(format!("antiderivation {j},{l}"), lhs, first.add(&second)?));
        }
    }
    Ok(laws)
}

/// `ev_{14,23}^{tau,phi} (phi^{i,l-i}_{j,k-j} (x) 1) =
/// ev_{14,23}^{tau,phi} (1 (x) delta^{i,k}_{j,l}) (tau (x) 1)` on
/// `A^i_j (x) A^{l-i}_{k-j} (x) A^k_l`.
pub fn mixed_pairing_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    for k in 0..=max {
        for l in 0..=max {
            for i in 0..=l {
                for j in 0..=k {
                    let (a, b, c) = (
                        alg.mixed(i, j)?.carrier,
                        alg.mixed(l - i, k - j)?.carrier,
                        alg.mixed(k, l)?.carrier,
                    );
                    let lhs = alg
                        .mixed_pairing(l, k)?
                        .after(&alg.phi_mixed(i, j, l - i, k - j)?.tensor(&id(&c)))?;
                    let rhs = Mor::chain(&[
                        &tau(&a, &b).tensor(&id(&c)),
                        &id(&b).tensor(&alg.delta_mixed(i, j, k, l)?),
                        &alg.mixed_pairing(l - i, k - j)?,
                    ])?;
                    laws.push(Law::new(format!("mixed pairing {i},{j},{k},{l}"), lhs, rhs));
                }
            }
        }
    }
    Ok(laws)
}

/// `delta^{k,m-j}_{l,n-i} (1 (x) delta^{i,m}_{j,n}) =
/// delta^{i+k,m}_{j+l,n} ((phi^{i,k}_{j,l} o tau) (x) 1)` on
/// `A^k_l (x) A^i_j (x) A^m_n`.
pub fn mixed_module_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let mut laws = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            for j in 0..=m {
                for i in 0..=n {
                    for l in 0..=m - j {
                        for k in 0..=n - i {
                            let (kl, ij, mn) = (
                                alg.mixed(k, l)?.carrier,
                                alg.mixed(i, j)?.carrier,
                                alg.mixed(m, n)?.carrier,
                            );
                            let lhs = alg
                                .delta_mixed(k, l, m - j, n - i)?
                                .after(&id(&kl).tensor(&alg.delta_mixed(i, j, m, n)?))?;
                            let twisted = alg.phi_mixed(i, j, k, l)?.after(&tau(&kl, &ij))?;
                            let rhs = alg
                                .delta_mixed(i + k, j + l, m, n)?
                                .after(&twisted.tensor(&id(&mn)))?;
                            laws.push(Law::new(format!("mixed module {i},{j},{k},{l},{m},{n}"), lhs, rhs));
                        }
                    }
                }
            }
        }
    }
    Ok(laws)
}

/// The antiderivation rules for contraction with `A^1_0` and `A^0_1` on the
/// mixed algebra (derivation rules for symmetric powers).
pub fn mixed_antiderivation_laws(alg: &PowerAlgebra) -> Result<Vec<Law>, PowerError> {
    let max = alg.max_degree();
    let flavor = alg.flavor();
    let mut laws = Vec::new();
    let (vec_part, covec_part) = (alg.mixed(1, 0)?.carrier, alg.mixed(0, 1)?.carrier);
    for i in 0..=max {
        for k in 0..=max - i {
            for j in 0..=max {
                for l in 0..=max - j {
                    let (ij, kl) = (alg.mixed(i, j)?.carrier, alg.mixed(k, l)?.carrier);
                    let product = alg.phi_mixed(i, j, k, l)?;
                    if j >= 1 && l >= 1 {
                        let lhs = alg
                            .delta_mixed(1, 0, i + k, j + l)?
                            .after(&id(&vec_part).tensor(&product))?
                            .scale(&scalar(j + l));
                        let first = alg
                            .phi_mixed(i, j - 1, k, l)?
                            .after(&alg.delta_mixed(1, 0, i, j)?.tensor(&id(&kl)))?
                            .scale(&scalar(j));
                        let second = Mor::chain(&[
                            &tau(&vec_part, &ij).tensor(&id(&kl)),
                            &id(&ij).tensor(&alg.delta_mixed(1, 0, k, l)?),
                            &alg.phi_mixed(i, j, k, l - 1)?,
                        ])?
                        .scale(&(flavor_sign(flavor, j) * scalar(l)));
                        laws.push(Law::new(
                            format!("vector contraction {i},{j},{k},{l}"),
                            lhs,
                            first.add(&second)?,
                        ));
                    }
                    if i >= 1 && k >= 1 {
                        let lhs = alg
                            .delta_mixed(0, 1, i + k, j + l)?
                            .after(&id(&covec_part).tensor(&product))?
                            .scale(&scalar(i + k));
                        let first = alg
                            .phi_mixed(i - 1, j, k, l)?
                            .after(&alg.delta_mixed(0, 1, i, j)?.tensor(&id(&kl)))?
                            .scale(&scalar(i));
                        let second = Mor::chain(&[
                            &tau(&covec_part, &ij).tensor(&id(&kl)),
                            &id(&ij).tensor(&alg.delta_mixed(0, 1, k, l)?),
                            &alg.phi_mixed(i, j, k - 1, l)?,
                        ])?
                        .scale(&(flavor_sign(flavor, i) * scalar(k)));
                        laws.push(Law::new(
                            format!("covector contraction {i},{j},{k},{l}"),
                            lhs,
                            first.add(&second)?,
                        ));
                    }
                }
            }
        }
    }
    Ok(laws)
}
