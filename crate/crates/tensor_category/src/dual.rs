use exact_linalg::{sign, Rat, RatMat};

use crate::mor::{CatError, Mor};
use crate::obj::Obj;
use crate::symmetry::tau;

/// An object together with a chosen dual pair `(X^v, ev_X)`.
///
/// The dual is realized on the same basis, and `ev_X(e^a (x) e_b)` is the
/// entry `(a, b)` of `gram`. The dual of a `DualPair` is again a `DualPair`
/// on the same basis with the same gram, so `X^v`, `X^vv`, ... form a tower
/// that never leaves the carrier.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPair {
    obj: Obj,
    gram: RatMat,
    gram_inv: RatMat,
}

/// Everything a dual pair provides for one object.
#[derive(Clone, Debug)]
pub struct DualData {
    pub x_dual: Obj,
    pub ev: Mor,
    pub ev_tau: Mor,
    pub casimir: Mor,
    pub i_x: Mor,
}

impl DualPair {
    /// The standard dual basis: `ev(e^a (x) e_b) = delta_ab`.
    pub fn canonical(obj: &Obj) -> DualPair {
        let n = obj.dim();
        DualPair {
            obj: obj.clone(),
            gram: RatMat::identity(n),
            gram_inv: RatMat::identity(n),
        }
    }

    /// A dual pair with an arbitrary nondegenerate even pairing.
    pub fn with_gram(obj: &Obj, gram: RatMat) -> Result<DualPair, CatError> {
        Mor::new(obj.clone(), obj.clone(), gram.clone())?;
        let gram_inv = gram
            .inverse()
            .map_err(|_| CatError::Degenerate(obj.clone()))?;
        Ok(DualPair {
            obj: obj.clone(),
            gram,
            gram_inv,
        })
    }

    pub fn obj(&self) -> &Obj {
        &self.obj
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    pub fn gram_inv(&self) -> &RatMat {
        &self.gram_inv
    }

    pub fn dim(&self) -> usize {
        self.obj.dim()
    }

    /// The dual object `X^v` as an object in its own right.
    pub fn dual_obj(&self) -> Obj {
        self.obj.with_label(format!("{}^v", self.obj.label()))
    }

    /// `X^v` with its own dual pair `(X^vv, ev_{X^v})`.
    pub fn dual(&self) -> DualPair {
        DualPair {
            obj: self.dual_obj(),
            gram: self.gram.clone(),
            gram_inv: self.gram_inv.clone(),
        }
    }

    pub fn relabel(&self, label: impl Into<String>) -> DualPair {
        DualPair {
            obj: self.obj.with_label(label),
            ..self.clone()
        }
    }

    /// `ev_X : X^v (x) X -> I`.
    pub fn ev(&self) -> Mor {
        let n = self.dim();
        let entries = self.gram.entries().map(|(a, b, v)| (0, a * n + b, v.clone()));
        let mat = RatMat::from_triplets(1, n * n, entries);
        Mor::new(self.dual_obj().tensor(&self.obj), Obj::unit(), mat).expect("gram is even")
    }

    /// `ev_X o tau_{X, X^v} : X (x) X^v -> I`.
    pub fn ev_tau(&self) -> Mor {
        self.ev()
            .after(&tau(&self.obj, &self.dual_obj()))
            .expect("ev after tau")
    }

    /// `C_X : I -> X (x) X^v`, the element `sum (G^-1)_{ba} e_b (x) e^a`.
    pub fn casimir(&self) -> Mor {
        let n = self.dim();
        let entries = self
            .gram_inv
            .entries()
            .map(|(b, a, v)| (b * n + a, 0, v.clone()));
        let mat = RatMat::from_triplets(n * n, 1, entries);
        Mor::new(Obj::unit(), self.obj.tensor(&self.dual_obj()), mat).expect("casimir is even")
    }

    /// `i_X : X -> X^vv`, the unique map with `ev_{X^v} o (i_X (x) 1) = ev_X^tau`.
    ///
    /// Writing `G` for the gram and `S_{xw} = (-1)^{|x||w|}`, the defining
    /// identity reads `I^T G = S . G^T` entrywise, so `I^T = (S . G^T) G^-1`.
    pub fn reflexive(&self) -> Mor {
        let parity = self.obj.parities();
        let twisted = self.gram.transpose().map_entries(|x, w, v| {
            if parity[x].is_odd() && parity[w].is_odd() {
                -v.clone()
            } else {
                v.clone()
            }
        });
        let it = twisted.compose(&self.gram_inv).expect("square");
        let double_dual = self.dual().dual_obj();
        Mor::new(self.obj.clone(), double_dual, it.transpose()).expect("i_X is even")
    }

    /// Closed form of `i_X` for the canonical pairing: `e_a -> (-1)^{|a|} e_a`.
    pub fn reflexive_closed_form(obj: &Obj) -> Mor {
        let entries = obj
            .parities()
            .iter()
            .enumerate()
            .map(|(a, p)| (a, a, sign(p.is_odd() as usize)));
        let mat = RatMat::from_triplets(obj.dim(), obj.dim(), entries);
        let dd = obj.with_label(format!("{}^vv", obj.label()));
        Mor::new(obj.clone(), dd, mat).expect("diagonal is even")
    }

    /// `rank(X) = ev_X^tau o C_X`.
    pub fn rank(&self) -> Rat {
        self.ev_tau()
            .after(&self.casimir())
            .expect("rank composite")
            .as_scalar()
            .expect("endomorphism of I")
    }

    pub fn data(&self) -> DualData {
        DualData {
            x_dual: self.dual_obj(),
            ev: self.ev(),
            ev_tau: self.ev_tau(),
            casimir: self.casimir(),
            i_x: self.reflexive(),
        }
    }

    /// Dual pair of `X (x) Y` with pairing `ev(e^{(a,b)} (x) e_{(c,d)}) = G_X[a][c] G_Y[b][d]`.
    pub fn tensor(&self, other: &DualPair) -> DualPair {
        DualPair {
            obj: self.obj.tensor(&other.obj),
            gram: self.gram.kron(&other.gram),
            gram_inv: self.gram_inv.kron(&other.gram_inv),
        }
    }

    /// Dual pair of `X (+) Y` with block diagonal gram.
    pub fn direct_sum(&self, other: &DualPair) -> DualPair {
        DualPair {
            obj: self.obj.direct_sum(&other.obj),
            gram: self.gram.direct_sum(&other.gram),
            gram_inv: self.gram_inv.direct_sum(&other.gram_inv),
        }
    }

    pub fn unit() -> DualPair {
        DualPair::canonical(&Obj::unit())
    }

    /// Transpose of `f : X -> Y`, the map `f^v : Y^v -> X^v` with
    /// `ev_X o (f^v (x) 1) = ev_Y o (1 (x) f)`.
    pub fn transpose_mor(f: &Mor, x: &DualPair, y: &DualPair) -> Result<Mor, CatError> {
        if f.dom() != x.obj() || f.cod() != y.obj() {
            return Err(CatError::Invalid(format!(
                "transpose: {f:?} does not run {:?} -> {:?}",
                x.obj(),
                y.obj()
            )));
        }
        let m = y.gram.compose(f.mat())?.compose(&x.gram_inv)?.transpose();
        Mor::new(y.dual_obj(), x.dual_obj(), m)
    }

    /// The comparison `X1^v (x) X2^v -> (X1 (x) X2)^v`, the unique map with
    /// `ev_{X1 X2} o (eps (x) 1) = (ev_1 (x) ev_2) o (1 (x) tau_{X2^v, X1} (x) 1)`.
    pub fn epsilon(x1: &DualPair, x2: &DualPair) -> Result<Mor, CatError> {
        let joint = x1.tensor(x2);
        let swap = Mor::id(&x1.dual_obj())
            .tensor(&tau(&x2.dual_obj(), x1.obj()))
            .tensor(&Mor::id(x2.obj()));
        let target = x1.ev().tensor(&x2.ev()).after(&swap)?;
        solve_against_pairing(&target, &x1.dual_obj().tensor(&x2.dual_obj()), &joint)
    }
}

/// Given `target : A (x) X -> I`, finds `u : A -> X^v` with
/// `ev_X o (u (x) 1_X) = target`.
pub fn solve_against_pairing(target: &Mor, a: &Obj, x: &DualPair) -> Result<Mor, CatError> {
    let n = x.dim();
    let rows = RatMat::from_triplets(
        a.dim(),
        n,
        target.mat().entries().map(|(_, col, v)| (col / n, col % n, v.clone())),
    );
    let u = rows.compose(&x.gram_inv)?.transpose();
    Mor::new(a.clone(), x.dual_obj(), u)
}
