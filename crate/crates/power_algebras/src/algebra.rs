use std::collections::HashMap;
use std::sync::RwLock;

use symmetric_group::{act_element, coset_system, CosetScheme};
use tensor_category::{hom_valued, iota_of, iota_star_of, phi_of, DualPair, Mor};

use crate::power::{leading_contraction, power, Flavor, PowerObject};
use crate::PowerError;

/// How an internal multiplication is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum IotaMethod {
    /// Contract against the averaged coset element on the tensor powers.
    #[default]
    Explicit,
    /// Internal duality applied to the hom valued multiplication.
    ViaD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Iota,
    IotaStar,
}

type Key = (Kind, usize, usize, IotaMethod, CosetScheme);

/// The powers `A_0, ..., A_max` of one dual pair and one flavor, the powers of
/// its dual, and the structure maps between them. Internal multiplications
/// are memoized behind a lock, so a shared algebra can serve parallel checks.
#[derive(Debug)]
pub struct PowerAlgebra {
    base: DualPair,
    flavor: Flavor,
    powers: Vec<PowerObject>,
    dual_powers: Vec<PowerObject>,
    cache: RwLock<HashMap<Key, Mor>>,
}

impl PowerAlgebra {
    pub fn new(base: &DualPair, flavor: Flavor, max_degree: usize) -> Result<PowerAlgebra, PowerError> {
        let powers = (0..=max_degree)
            .map(|k| power(base, flavor, k))
            .collect::<Result<Vec<_>, _>>()?;
        let dual_powers = powers.iter().map(PowerObject::dual).collect();
        Ok(PowerAlgebra {
            base: base.clone(),
            flavor,
            powers,
            dual_powers,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn base(&self) -> &DualPair {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn max_degree(&self) -> usize {
        self.powers.len() - 1
    }

    fn check(&self, degree: usize) -> Result<(), PowerError> {
        if degree > self.max_degree() {
            return Err(PowerError::DegreeTooLarge {
                degree,
                max: self.max_degree(),
            });
        }
        Ok(())
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<(), PowerError> {
        self.check(j)?;
        if i > j {
            return Err(PowerError::Degrees { i, j });
        }
        Ok(())
    }

    /// `A_k`.
    pub fn power(&self, k: usize) -> Result<&PowerObject, PowerError> {
        self.check(k)?;
        Ok(&self.powers[k])
    }

    /// `A_k^v`, the degree `k` power of `V^v`.
    pub fn dual_power(&self, k: usize) -> Result<&PowerObject, PowerError> {
        self.check(k)?;
        Ok(&self.dual_powers[k])
    }

    pub fn pair(&self, k: usize) -> Result<&DualPair, PowerError> {
        Ok(self.power(k)?.pair())
    }

    pub fn dual_pair(&self, k: usize) -> Result<&DualPair, PowerError> {
        Ok(self.dual_power(k)?.pair())
    }

    /// `C_{A_k} : I -> A_k (x) A_k^v`.
    pub fn casimir(&self, k: usize) -> Result<Mor, PowerError> {
        Ok(self.pair(k)?.casimir())
    }

    fn multiply(left: &PowerObject, right: &PowerObject, target: &PowerObject) -> Result<Mor, PowerError> {
        let m = target.projection().after(&left.inclusion().tensor(right.inclusion()))?;
        Ok(m.retyped(&left.carrier().tensor(right.carrier()), target.carrier())?)
    }

    /// `phi_{i,j} = p^{i+j} o (i^i (x) i^j) : A_i (x) A_j -> A_{i+j}`.
    pub fn phi(&self, i: usize, j: usize) -> Result<Mor, PowerError> {
        self.check(i + j)?;
        Self::multiply(&self.powers[i], &self.powers[j], &self.powers[i + j])
    }

    /// The multiplication of the dual algebra, `A_i^v (x) A_j^v -> A_{i+j}^v`.
    pub fn phi_dual(&self, i: usize, j: usize) -> Result<Mor, PowerError> {
        self.check(i + j)?;
        Self::multiply(&self.dual_powers[i], &self.dual_powers[j], &self.dual_powers[i + j])
    }

    fn cached(&self, key: Key, compute: impl FnOnce() -> Result<Mor, PowerError>) -> Result<Mor, PowerError> {
        if let Some(m) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(m.clone());
        }
        let m = compute()?;
        self.cache.write().expect("cache lock").insert(key, m.clone());
        Ok(m)
    }

    /// `phi_{iota_{i,j}} : A_i (x) A_j^v -> A_{j-i}^v`, computed explicitly.
    pub fn iota_phi(&self, i: usize, j: usize) -> Result<Mor, PowerError> {
        self.iota_phi_with(i, j, IotaMethod::Explicit)
    }

    pub fn iota_phi_with(&self, i: usize, j: usize, method: IotaMethod) -> Result<Mor, PowerError> {
        match method {
            IotaMethod::Explicit => self.iota_phi_explicit(i, j, CosetScheme::Ordered),
            IotaMethod::ViaD => self.cached((Kind::Iota, i, j, method, CosetScheme::Ordered), || {
                let (x, y) = (self.pair(j - i)?, self.pair(j)?);
                Ok(phi_of(&self.iota_via_d(i, j)?, &y.dual(), &x.dual())?)
            }),
        }
    }

    /// The explicit internal multiplication with a chosen system of coset
    /// representatives: `p^{j-i} o (ev^{i,tau} (x) 1) o (i^i (x) e^{i<=j} i^j)`.
    pub fn iota_phi_explicit(&self, i: usize, j: usize, scheme: CosetScheme) -> Result<Mor, PowerError> {
        self.check_pair(i, j)?;
        self.cached((Kind::Iota, i, j, IotaMethod::Explicit, scheme), || {
            let (a, b, out) = (&self.powers[i], &self.dual_powers[j], &self.dual_powers[j - i]);
            let cosets = coset_system(i, j, self.flavor.character(), scheme)?;
            let averaged = act_element(&cosets.e_leq, &self.base.dual_obj(), j)?.after(b.inclusion())?;
            let contracted = leading_contraction(&self.base, i, j, false)?.after(&a.inclusion().tensor(&averaged))?;
            let m = out.projection().after(&contracted)?;
            Ok(m.retyped(&a.carrier().tensor(b.carrier()), out.carrier())?)
        })
    }

    fn iota_via_d(&self, i: usize, j: usize) -> Result<Mor, PowerError> {
        self.check_pair(i, j)?;
        let (x, y) = (self.pair(j - i)?, self.pair(j)?);
        let f = hom_valued(&self.phi(i, j - i)?, self.powers[i].carrier(), x)?;
        Ok(iota_of(&f, x, y)?)
    }

    /// `iota_{i,j} : A_i -> hom(A_j^v, A_{j-i}^v) = A_{j-i}^v (x) A_j^vv`.
    pub fn iota(&self, i: usize, j: usize, method: IotaMethod) -> Result<Mor, PowerError> {
        match method {
            IotaMethod::ViaD => self.iota_via_d(i, j),
            IotaMethod::Explicit => {
                let phi = self.iota_phi_with(i, j, method)?;
                Ok(hom_valued(&phi, self.powers[i].carrier(), &self.pair(j)?.dual())?)
            }
        }
    }

    /// `phi_{iota*_{i,j}} : A_i^v (x) A_j -> A_{j-i}`, computed explicitly.
    pub fn iota_star_phi(&self, i: usize, j: usize) -> Result<Mor, PowerError> {
        self.iota_star_phi_with(i, j, IotaMethod::Explicit)
    }

    pub fn iota_star_phi_with(&self, i: usize, j: usize, method: IotaMethod) -> Result<Mor, PowerError> {
        self.check_pair(i, j)?;
        self.cached((Kind::IotaStar, i, j, method, CosetScheme::Ordered), || match method {
            IotaMethod::Explicit => {
                let (a, b, out) = (&self.dual_powers[i], &self.powers[j], &self.powers[j - i]);
                let cosets = coset_system(i, j, self.flavor.character(), CosetScheme::Ordered)?;
                let averaged = act_element(&cosets.e_leq, self.base.obj(), j)?.after(b.inclusion())?;
                let contracted =
                    leading_contraction(&self.base, i, j, true)?.after(&a.inclusion().tensor(&averaged))?;
                let m = out.projection().after(&contracted)?;
                Ok(m.retyped(&a.carrier().tensor(b.carrier()), out.carrier())?)
            }
            IotaMethod::ViaD => {
                let (x, y) = (self.pair(j - i)?, self.pair(j)?);
                Ok(phi_of(&self.iota_star_via_d(i, j)?, y, x)?)
            }
        })
    }

    fn iota_star_via_d(&self, i: usize, j: usize) -> Result<Mor, PowerError> {
        self.check_pair(i, j)?;
        let (x, y) = (self.pair(j - i)?, self.pair(j)?);
        let g = hom_valued(&self.phi_dual(i, j - i)?, self.dual_powers[i].carrier(), &x.dual())?;
        Ok(iota_star_of(&g, x, y)?)
    }

    /// `iota*_{i,j} : A_i^v -> hom(A_j, A_{j-i}) = A_{j-i} (x) A_j^v`.
    pub fn iota_star(&self, i: usize, j: usize, method: IotaMethod) -> Result<Mor, PowerError> {
        match method {
            IotaMethod::ViaD => self.iota_star_via_d(i, j),
            IotaMethod::Explicit => {
                let phi = self.iota_star_phi_with(i, j, method)?;
                Ok(hom_valued(&phi, self.dual_powers[i].carrier(), self.pair(j)?)?)
            }
        }
    }

    /// `D^{i,g} : A_i -> A_{g-i}^v (x) A_g^vv`, the hom valued form of `iota_{i,g}`.
    pub fn poincare_upper(&self, i: usize, g: usize) -> Result<Mor, PowerError> {
        self.iota(i, g, IotaMethod::Explicit)
    }

    /// `D_{i,g} : A_i^v -> A_{g-i} (x) A_g^v`, the hom valued form of `iota*_{i,g}`.
    pub fn poincare_lower(&self, i: usize, g: usize) -> Result<Mor, PowerError> {
        self.iota_star(i, g, IotaMethod::Explicit)
    }

    /// Both Poincare morphisms `(D^{i,g}, D_{i,g})`.
    pub fn poincare(&self, i: usize, g: usize) -> Result<(Mor, Mor), PowerError> {
        Ok((self.poincare_upper(i, g)?, self.poincare_lower(i, g)?))
    }
}
