use exact_linalg::RatMat;
use symmetric_group::{act_element, idempotent, Character};
use tensor_category::{contract, Contraction, DualPair, Mor, Obj, PairVariant, Parity};

use crate::PowerError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Alternating,
    Symmetric,
}

impl Flavor {
    /// The character whose idempotent cuts out the power.
    pub fn character(self) -> Character {
        match self {
            Flavor::Alternating => Character::Sign,
            Flavor::Symmetric => Character::Trivial,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Alternating => "alt",
            Flavor::Symmetric => "sym",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Flavor::Alternating => "Alt",
            Flavor::Symmetric => "Sym",
        }
    }
}

/// An idempotent `e = i o p` on `ambient` with `p o i = 1_factor`.
#[derive(Clone, Debug)]
pub struct SplitIdempotent {
    ambient: Obj,
    factor: Obj,
    inclusion: Mor,
    projection: Mor,
}

impl SplitIdempotent {
    /// Splits an even idempotent endomorphism. The image basis is the reduced
    /// echelon one, whose vectors are homogeneous for an even idempotent.
    pub fn of(e: &Mor, label: &str) -> Result<SplitIdempotent, PowerError> {
        let ambient = e.dom().clone();
        let (inc, proj) = exact_linalg::split_idempotent(e.mat())?;
        let mut parities = Vec::with_capacity(inc.cols());
        for col in inc.columns() {
            let mut ps = col.iter().map(|(r, _)| ambient.parity(*r));
            let first = ps.next().unwrap_or(Parity::Even);
            if ps.any(|p| p != first) {
                return Err(PowerError::Inhomogeneous);
            }
            parities.push(first);
        }
        let factor = Obj::new(parities, label);
        Ok(SplitIdempotent {
            inclusion: Mor::new(factor.clone(), ambient.clone(), inc)?,
            projection: Mor::new(ambient.clone(), factor.clone(), proj)?,
            ambient,
            factor,
        })
    }

    pub fn ambient(&self) -> &Obj {
        &self.ambient
    }

    pub fn factor(&self) -> &Obj {
        &self.factor
    }

    pub fn inclusion(&self) -> &Mor {
        &self.inclusion
    }

    pub fn projection(&self) -> &Mor {
        &self.projection
    }

    pub fn idempotent(&self) -> Mor {
        self.inclusion.after(&self.projection).expect("i o p")
    }

    fn relabeled(&self, ambient: &Obj, factor_label: &str) -> SplitIdempotent {
        let factor = self.factor.with_label(factor_label);
        SplitIdempotent {
            inclusion: self.inclusion.retyped(&factor, ambient).expect("same shape"),
            projection: self.projection.retyped(ambient, &factor).expect("same shape"),
            ambient: ambient.clone(),
            factor,
        }
    }
}

pub fn tensor_power(v: &Obj, k: usize) -> Obj {
    Obj::tensor_all(&vec![v.clone(); k]).with_label(format!("{}^{k}", v.label()))
}

/// `ev_V^k : (V^v)^{(x)k} (x) V^{(x)k} -> I`, pairing the `t`-th dual factor
/// with the `t`-th primal factor (Koszul signs included).
pub fn tensor_power_ev(base: &DualPair, k: usize) -> Result<Mor, PowerError> {
    let mut factors = vec![base.dual_obj(); k];
    factors.extend(vec![base.obj().clone(); k]);
    let pairs: Vec<Contraction<'_>> = (0..k)
        .map(|t| Contraction {
            left: t,
            right: k + t,
            variant: PairVariant::Phi,
            pairing: base,
        })
        .collect();
    Ok(contract(&factors, &pairs)?)
}

/// Contracts the first `i` factors of a `(i, j)` block with the first `i`
/// factors of the second block, keeping the last `j - i` factors.
///
/// With `dual_first = false` this is `ev_V^{i,tau} (x) 1 : V^{(x)i} (x) (V^v)^{(x)j}
/// -> (V^v)^{(x)(j-i)}`; with `dual_first = true` it is
/// `ev_V^i (x) 1 : (V^v)^{(x)i} (x) V^{(x)j} -> V^{(x)(j-i)}`.
pub fn leading_contraction(base: &DualPair, i: usize, j: usize, dual_first: bool) -> Result<Mor, PowerError> {
    if i > j {
        return Err(PowerError::Degrees { i, j });
    }
    let (first, second, variant) = if dual_first {
        (base.dual_obj(), base.obj().clone(), PairVariant::Phi)
    } else {
        (base.obj().clone(), base.dual_obj(), PairVariant::Tau)
    };
    let mut factors = vec![first; i];
    factors.extend(vec![second; j]);
    let pairs: Vec<Contraction<'_>> = (0..i)
        .map(|t| Contraction {
            left: t,
            right: i + t,
            variant,
            pairing: base,
        })
        .collect();
    Ok(contract(&factors, &pairs)?)
}

/// The degree `k` power of `base` of the given flavor, with the pairing
/// `ev(a (x) b) = ev_V^k(i(a) (x) i(b))` against the same power of `V^v`.
#[derive(Clone, Debug)]
pub struct PowerObject {
    base: DualPair,
    flavor: Flavor,
    degree: usize,
    split: SplitIdempotent,
    pair: DualPair,
}

impl PowerObject {
    pub fn base(&self) -> &DualPair {
        &self.base
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn split(&self) -> &SplitIdempotent {
        &self.split
    }

    pub fn carrier(&self) -> &Obj {
        self.pair.obj()
    }

    pub fn dim(&self) -> usize {
        self.pair.dim()
    }

    pub fn inclusion(&self) -> &Mor {
        self.split.inclusion()
    }

    pub fn projection(&self) -> &Mor {
        self.split.projection()
    }

    pub fn pair(&self) -> &DualPair {
        &self.pair
    }

    /// `ev_{V,a}^k` on the dual power tensored with this one.
    pub fn ev(&self) -> Mor {
        self.pair.ev()
    }

    pub fn rank(&self) -> exact_linalg::Rat {
        self.pair.rank()
    }

    /// One dimensional with a nondegenerate pairing.
    pub fn is_invertible(&self) -> bool {
        self.dim() == 1 && self.pair.gram().is_invertible()
    }

    /// The same power of `V^v`, sharing the split and the pairing.
    pub fn dual(&self) -> PowerObject {
        let base = self.base.dual();
        let ambient = tensor_power(base.obj(), self.degree);
        let pair = self.pair.dual();
        PowerObject {
            split: self.split.relabeled(&ambient, pair.obj().label()),
            base,
            flavor: self.flavor,
            degree: self.degree,
            pair,
        }
    }
}

pub fn power(base: &DualPair, flavor: Flavor, k: usize) -> Result<PowerObject, PowerError> {
    let v = base.obj();
    let ambient = tensor_power(v, k);
    let e = act_element(&idempotent(k, flavor.character()), v, k)?.retyped(&ambient, &ambient)?;
    let label = format!("{}^{k}({})", flavor.symbol(), v.label());
    let split = SplitIdempotent::of(&e, &label)?;
    let inc = split.inclusion();
    let ev = tensor_power_ev(base, k)?.after(&inc.tensor(inc))?;
    let n = split.factor().dim();
    let gram = RatMat::from_triplets(
        n,
        n,
        ev.mat().entries().map(|(_, c, x)| (c / n, c % n, x.clone())),
    );
    let pair = DualPair::with_gram(split.factor(), gram)?;
    Ok(PowerObject {
        base: base.clone(),
        flavor,
        degree: k,
        split,
        pair,
    })
}
