//! Internal hom realized as `hom(X, Y) = Y (x) X^v`, so that the comparison
//! `alpha : Y (x) X^v -> hom(X, Y)` is the identity.

use crate::dual::DualPair;
use crate::mor::{CatError, Mor};
use crate::obj::Obj;
use crate::symmetry::{permute_factors, tau};

/// `hom(X, Y)` with its evaluation `ev_{X,Y} : hom(X,Y) (x) X -> Y` and `alpha`.
#[derive(Clone, Debug)]
pub struct HomPair {
    pub h: Obj,
    pub ev_xy: Mor,
    pub alpha: Mor,
}

/// `hom(X, Y)` as a dual pair in its own right.
pub fn hom_obj(x: &DualPair, y: &DualPair) -> DualPair {
    let h = y.tensor(&x.dual());
    h.relabel(format!("hom({},{})", x.obj().label(), y.obj().label()))
}

pub fn hom_pair(x: &DualPair, y: &DualPair) -> HomPair {
    let h = hom_obj(x, y).obj().clone();
    HomPair {
        ev_xy: ev_hom(x, y),
        alpha: Mor::id(&h),
        h,
    }
}

/// `ev_{X,Y} = 1_Y (x) ev_X : Y (x) X^v (x) X -> Y`.
pub fn ev_hom(x: &DualPair, y: &DualPair) -> Mor {
    Mor::id(y.obj()).tensor(&x.ev())
}

/// `phi_f = ev_{X,Y} o (f (x) 1_X) : S (x) X -> Y` for `f : S -> hom(X, Y)`.
pub fn phi_of(f: &Mor, x: &DualPair, y: &DualPair) -> Result<Mor, CatError> {
    ev_hom(x, y).after(&f.tensor(&Mor::id(x.obj())))
}

/// The hom valued morphism of `phi : S (x) X -> Y`:
/// `D_phi = (phi (x) 1_{X^v}) o (1_S (x) C_X) : S -> Y (x) X^v`.
pub fn hom_valued(phi: &Mor, s: &Obj, x: &DualPair) -> Result<Mor, CatError> {
    let expand = Mor::id(s).tensor(&x.casimir());
    phi.tensor(&Mor::id(&x.dual_obj())).after(&expand)
}

/// Internal duality `d_{X,Y} = (1_{X^v} (x) i_Y) o tau_{Y, X^v} : hom(X,Y) -> hom(Y^v, X^v)`.
pub fn internal_duality(x: &DualPair, y: &DualPair) -> Mor {
    let swap = tau(y.obj(), &x.dual_obj());
    Mor::id(&x.dual_obj())
        .tensor(&y.reflexive())
        .after(&swap)
        .expect("d composite")
}

/// `hom(f, g) = g (x) f^v : hom(X1, Y1) -> hom(X2, Y2)` for `f : X2 -> X1`, `g : Y1 -> Y2`.
pub fn hom_functor(
    f: &Mor,
    g: &Mor,
    x1: &DualPair,
    x2: &DualPair,
    y1: &DualPair,
    y2: &DualPair,
) -> Result<Mor, CatError> {
    if g.dom() != y1.obj() || g.cod() != y2.obj() {
        return Err(CatError::Invalid(format!(
            "hom_functor: {g:?} does not run {:?} -> {:?}",
            y1.obj(),
            y2.obj()
        )));
    }
    let f_t = DualPair::transpose_mor(f, x2, x1)?;
    Ok(g.tensor(&f_t))
}

/// The composition law `c_{X,Y,Z} : hom(Y,Z) (x) hom(X,Y) -> hom(X,Z)` and
/// `c^tau = c o tau_{hom(X,Y), hom(Y,Z)}`.
pub fn composition_law(x: &DualPair, y: &DualPair, z: &DualPair) -> (Mor, Mor) {
    let c = Mor::id(z.obj())
        .tensor(&y.ev())
        .tensor(&Mor::id(&x.dual_obj()));
    let hxy = hom_obj(x, y).obj().clone();
    let hyz = hom_obj(y, z).obj().clone();
    let c_tau = c.after(&tau(&hxy, &hyz)).expect("c after tau");
    (c, c_tau)
}

/// `iota_f = d_{X,Y} o f : S -> hom(Y^v, X^v)`.
pub fn iota_of(f: &Mor, x: &DualPair, y: &DualPair) -> Result<Mor, CatError> {
    internal_duality(x, y).after(f)
}

/// For `g : S -> hom(X^v, Y^v)`, `iota*_g = hom(i_Y, i_X^-1) o iota_g : S -> hom(Y, X)`.
pub fn iota_star_of(g: &Mor, x: &DualPair, y: &DualPair) -> Result<Mor, CatError> {
    let (xd, yd) = (x.dual(), y.dual());
    let iota = iota_of(g, &xd, &yd)?;
    let (xdd, ydd) = (xd.dual(), yd.dual());
    let i_y = y.reflexive().retyped(y.obj(), ydd.obj())?;
    let i_x_inv = x.reflexive().inverse()?.retyped(xdd.obj(), x.obj())?;
    hom_functor(&i_y, &i_x_inv, &ydd, y, &xdd, x)?.after(&iota)
}

/// `phi_1 (x)_eps phi_2 = (phi_1 (x) phi_2) o (1_{S1} (x) tau_{S2,X1} (x) 1_{X2})`
/// on `S1 S2 X1 X2`.
pub fn tensor_eps(phi1: &Mor, phi2: &Mor, s1: &Obj, x1: &Obj, s2: &Obj, x2: &Obj) -> Result<Mor, CatError> {
    let mid = permute_factors(&[s1.clone(), s2.clone(), x1.clone(), x2.clone()], &[0, 2, 1, 3])?;
    phi1.tensor(phi2).after(&mid)
}

/// `phi_1 (x)_eps^tau phi_2 = (phi_1 (x) phi_2) o (tau_{S2, S1 X1} (x) 1_{X2})`
/// on `S2 S1 X1 X2`.
pub fn tensor_eps_tau(phi1: &Mor, phi2: &Mor, s1: &Obj, x1: &Obj, s2: &Obj, x2: &Obj) -> Result<Mor, CatError> {
    let mid = permute_factors(&[s2.clone(), s1.clone(), x1.clone(), x2.clone()], &[2, 0, 1, 3])?;
    phi1.tensor(phi2).after(&mid)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombinatorVariant {
    Eps,
    EpsTau,
}

/// Dispatches to [`tensor_eps`] or [`tensor_eps_tau`].
pub fn combinators(
    phi1: &Mor,
    phi2: &Mor,
    objects: [&Obj; 4],
    variant: CombinatorVariant,
) -> Result<Mor, CatError> {
    let [s1, x1, s2, x2] = objects;
    match variant {
        CombinatorVariant::Eps => tensor_eps(phi1, phi2, s1, x1, s2, x2),
        CombinatorVariant::EpsTau => tensor_eps_tau(phi1, phi2, s1, x1, s2, x2),
    }
}

/// The comparison `hom(X1,Y1) (x) hom(X2,Y2) -> hom(X1 X2, Y1 Y2)`:
/// `(1_{Y1 Y2} (x) eps) o (1_{Y1} (x) tau_{X1^v, Y2} (x) 1_{X2^v})`.
pub fn hom_epsilon(x1: &DualPair, y1: &DualPair, x2: &DualPair, y2: &DualPair) -> Result<Mor, CatError> {
    let factors = [
        y1.obj().clone(),
        x1.dual_obj(),
        y2.obj().clone(),
        x2.dual_obj(),
    ];
    let shuffle = permute_factors(&factors, &[0, 2, 1, 3])?;
    let eps = DualPair::epsilon(x1, x2)?;
    Mor::id(y1.obj())
        .tensor(&Mor::id(y2.obj()))
        .tensor(&eps)
        .after(&shuffle)
}

/// `f_1 (x)_eps f_2 = eps o (f_1 (x) f_2)`.
pub fn hom_tensor_eps(f1: &Mor, f2: &Mor, x1: &DualPair, y1: &DualPair, x2: &DualPair, y2: &DualPair) -> Result<Mor, CatError> {
    hom_epsilon(x1, y1, x2, y2)?.after(&f1.tensor(f2))
}

/// `f_1 (x)_eps^tau f_2 = eps o (f_1 (x) f_2) o tau_{S2, S1}`.
pub fn hom_tensor_eps_tau(
    f1: &Mor,
    f2: &Mor,
    x1: &DualPair,
    y1: &DualPair,
    x2: &DualPair,
    y2: &DualPair,
) -> Result<Mor, CatError> {
    let swap = tau(f2.dom(), f1.dom());
    hom_tensor_eps(f1, f2, x1, y1, x2, y2)?.after(&swap)
}
