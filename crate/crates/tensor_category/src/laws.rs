//! Structural identities of the category, each stated as a pair of parallel
//! morphisms that must agree exactly.

use exact_linalg::RatMat;

use crate::dual::DualPair;
use crate::hom::{
    composition_law, ev_hom, hom_functor, hom_tensor_eps, hom_tensor_eps_tau, hom_valued, internal_duality, iota_of,
    iota_star_of, phi_of, tensor_eps, tensor_eps_tau,
};
use crate::mor::{CatError, Mor};
use crate::obj::Obj;
use crate::pairing::{contract, ev_pairs, Contraction, PairVariant, PairingSpec};
use crate::symmetry::{permute_factors, tau};

/// Two sides of an identity.
#[derive(Clone, Debug)]
pub struct Law {
    pub name: String,
    pub lhs: Mor,
    pub rhs: Mor,
}

impl Law {
    pub fn new(name: impl Into<String>, lhs: Mor, rhs: Mor) -> Law {
        Law {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `lhs - rhs`, or `None` when the sides are not parallel.
    pub fn residual(&self) -> Option<RatMat> {
        self.lhs.residual(&self.rhs).ok()
    }
}

fn id(x: &Obj) -> Mor {
    Mor::id(x)
}

fn pair_spec(first: (usize, usize), second: (usize, usize), a: PairVariant, b: PairVariant) -> PairingSpec {
    PairingSpec::new(first, second, (a, b))
}

use PairVariant::{Phi, Tau};

/// Casimir characterizations (1), snake identities (2), property (5), the
/// defining diagram of `i_X` and `(i_X)^v o i_{X^v} = 1`.
pub fn casimir_laws(x: &DualPair) -> Result<Vec<Law>, CatError> {
    let xo = x.obj();
    let xd = x.dual_obj();
    let c = x.casimir();
    let ev = x.ev();
    let mut laws = Vec::new();

    let ev_1234 = ev_pairs(&pair_spec((1, 2), (3, 4), Phi, Phi), [&xd, xo, &xd, xo], [x, x])?;
    let ev_1423 = ev_pairs(&pair_spec((1, 4), (2, 3), Tau, Phi), [xo, &xd, xo, &xd], [x, x])?;
    let via_1 = ev_1234.after(&id(&xd).tensor(&c).tensor(&id(xo)))?;
    laws.push(Law::new("casimir (1) ev_12,34", via_1, ev.clone()));
    let via_2 = ev_1423.after(&c.tensor(&tau(&xd, xo)))?;
    laws.push(Law::new("casimir (1) ev_14,23 left", via_2, ev.clone()));
    let via_3 = ev_1423.after(&tau(&xd, xo).tensor(&c))?;
    laws.push(Law::new("casimir (1) ev_14,23 right", via_3, ev.clone()));

    let snake_x = id(xo).tensor(&ev).after(&c.tensor(&id(xo)))?;
    laws.push(Law::new("snake X", snake_x, id(xo)));
    let snake_xd = ev.tensor(&id(&xd)).after(&id(&xd).tensor(&c))?;
    laws.push(Law::new("snake X^v", snake_xd, id(&xd)));

    let xdual = x.dual();
    let i_x = x.reflexive();
    let c_dual = id(&xd).tensor(&i_x).after(&tau(xo, &xd))?.after(&c)?;
    laws.push(Law::new("casimir (5)", xdual.casimir(), c_dual));

    let i_def = xdual.ev().after(&i_x.tensor(&id(&xd)))?;
    laws.push(Law::new("i_X defining diagram", i_def, x.ev_tau()));

    let xdd = xdual.dual();
    let i_x_t = DualPair::transpose_mor(&i_x, x, &xdd)?;
    let refl = i_x_t.after(&xdual.reflexive())?;
    laws.push(Law::new("reflexivity duality", refl, id(&xd)));
    Ok(laws)
}

/// Casimir property (3): `C_{X1 X2}` through `C_{X1} (x) C_{X2}` and `eps`.
pub fn casimir_tensor_law(x1: &DualPair, x2: &DualPair) -> Result<Law, CatError> {
    let joint = x1.tensor(x2);
    let eps = DualPair::epsilon(x1, x2)?;
    let shuffle = id(x1.obj())
        .tensor(&tau(&x1.dual_obj(), x2.obj()))
        .tensor(&id(&x2.dual_obj()));
    let rhs = Mor::chain(&[
        &x1.casimir().tensor(&x2.casimir()),
        &shuffle,
        &id(joint.obj()).tensor(&eps),
    ])?;
    Ok(Law::new("casimir (3)", joint.casimir(), rhs))
}

/// Casimir property (4) for `X = X+ (+) X-`: `C_{X+-} = (p_{X+-} (x) p_{X^v+-}) o C_X`.
pub fn casimir_biproduct_laws(plus: &DualPair, minus: &DualPair) -> Result<Vec<Law>, CatError> {
    let sum = plus.direct_sum(minus);
    let (np, nm) = (plus.dim(), minus.dim());
    let mut laws = Vec::new();
    for (part, offset, name) in [(plus, 0, "casimir (4) X+"), (minus, np, "casimir (4) X-")] {
        let k = part.dim();
        let incl = RatMat::from_triplets(np + nm, k, (0..k).map(|a| (offset + a, a, exact_linalg::int(1))));
        let incl = Mor::new(part.obj().clone(), sum.obj().clone(), incl)?;
        let proj = Mor::new(sum.obj().clone(), part.obj().clone(), incl.mat().transpose())?;
        let proj_dual = DualPair::transpose_mor(&incl, part, &sum)?;
        let rhs = proj.tensor(&proj_dual).after(&sum.casimir())?;
        laws.push(Law::new(name, part.casimir(), rhs));
    }
    Ok(laws)
}

/// Hexagons, involutivity and naturality of the symmetry.
pub fn symmetry_laws(f: &Mor, g: &Mor, z: &Obj) -> Result<Vec<Law>, CatError> {
    let (x, y) = (f.dom(), g.dom());
    let mut laws = Vec::new();
    let hex_right = id(y).tensor(&tau(x, z)).after(&tau(x, y).tensor(&id(z)))?;
    laws.push(Law::new("hexagon X past Y Z", tau(x, &y.tensor(z)), hex_right));
    let hex_left = tau(x, z).tensor(&id(y)).after(&id(x).tensor(&tau(y, z)))?;
    laws.push(Law::new("hexagon X Y past Z", tau(&x.tensor(y), z), hex_left));
    laws.push(Law::new("tau involutive", tau(y, x).after(&tau(x, y))?, id(&x.tensor(y))));
    let lhs = g.tensor(f).after(&tau(x, y))?;
    let rhs = tau(f.cod(), g.cod()).after(&f.tensor(g))?;
    laws.push(Law::new("tau naturality", lhs, rhs));
    Ok(laws)
}

/// Inputs for the internal hom identities: morphisms `f1 : X3 -> X2`,
/// `f2 : X2 -> X1`, `g1 : Y1 -> Y2`, `g2 : Y2 -> Y3`.
pub struct HomInputs<'a> {
    pub xs: [&'a DualPair; 3],
    pub ys: [&'a DualPair; 3],
    pub f1: &'a Mor,
    pub f2: &'a Mor,
    pub g1: &'a Mor,
    pub g2: &'a Mor,
}

/// The defining square of `hom(f, g)`, functoriality, `hom(f, 1_I) = f^v`,
/// and internal duality diagram (3).
pub fn hom_functor_laws(h: &HomInputs<'_>) -> Result<Vec<Law>, CatError> {
    let [x1, x2, x3] = h.xs;
    let [y1, y2, y3] = h.ys;
    let mut laws = Vec::new();

    let hom_fg = hom_functor(h.f2, h.g1, x1, x2, y1, y2)?;
    let lhs = ev_hom(x2, y2).after(&hom_fg.tensor(&id(x2.obj())))?;
    let h11 = y1.tensor(&x1.dual());
    let rhs = h.g1.after(&ev_hom(x1, y1))?.after(&id(h11.obj()).tensor(h.f2))?;
    laws.push(Law::new("hom(f,g) defining square", lhs, rhs));

    let composite = hom_functor(&h.f2.after(h.f1)?, &h.g2.after(h.g1)?, x1, x3, y1, y3)?;
    let stepwise = hom_functor(h.f1, h.g2, x2, x3, y2, y3)?.after(&hom_fg)?;
    laws.push(Law::new("hom functoriality", composite, stepwise));

    let unit = DualPair::unit();
    let only_f = hom_functor(h.f2, &Mor::id(&Obj::unit()), x1, x2, &unit, &unit)?;
    let f_t = DualPair::transpose_mor(h.f2, x2, x1)?;
    laws.push(Law::new("hom(f,1) = f^v", only_f, f_t.clone()));

    let g_t = DualPair::transpose_mor(h.g1, y1, y2)?;
    let top = hom_functor(&g_t, &f_t, &y1.dual(), &y2.dual(), &x1.dual(), &x2.dual())?
        .after(&internal_duality(x1, y1))?;
    let bottom = internal_duality(x2, y2).after(&hom_fg)?;
    laws.push(Law::new("internal duality (3)", top, bottom));
    Ok(laws)
}

/// Laws of the composition law and internal duality for `X, Y, Z` and a
/// fourth object `W`.
pub fn composition_laws(x: &DualPair, y: &DualPair, z: &DualPair, w: &DualPair) -> Result<Vec<Law>, CatError> {
    let mut laws = Vec::new();
    let (c_xyz, _) = composition_law(x, y, z);
    let hxy = y.tensor(&x.dual());
    let hyz = z.tensor(&y.dual());
    let hzw = w.tensor(&z.dual());

    let lhs = ev_hom(x, z).after(&c_xyz.tensor(&id(x.obj())))?;
    let rhs = ev_hom(y, z).after(&id(hyz.obj()).tensor(&ev_hom(x, y)))?;
    laws.push(Law::new("composition defining diagram", lhs, rhs));

    let (c_yzw, _) = composition_law(y, z, w);
    let (c_xzw, _) = composition_law(x, z, w);
    let (c_xyw, _) = composition_law(x, y, w);
    let left = c_xzw.after(&id(hzw.obj()).tensor(&c_xyz))?;
    let right = c_xyw.after(&c_yzw.tensor(&id(hxy.obj())))?;
    laws.push(Law::new("composition associativity", left, right));

    let unit = DualPair::unit();
    let d_xy = internal_duality(x, y);
    let (c_xy_unit, _) = composition_law(x, y, &unit);
    let lhs = ev_hom(&y.dual(), &x.dual()).after(&d_xy.tensor(&id(&y.dual_obj())))?;
    let rhs = c_xy_unit.after(&tau(hxy.obj(), &y.dual_obj()))?;
    let rhs = rhs.retyped(rhs.dom(), &x.dual_obj())?;
    laws.push(Law::new("d defining diagram", lhs, rhs));

    let swap = tau(hxy.obj(), x.obj()).tensor(&id(&y.dual_obj()));
    let step = id(x.obj()).tensor(&d_xy).tensor(&id(&y.dual_obj()));
    let eval = id(x.obj()).tensor(&ev_hom(&y.dual(), &x.dual()));
    let top = Mor::chain(&[&swap, &step, &eval, &x.ev_tau()])?;
    let left = y.ev_tau().after(&ev_hom(x, y).tensor(&id(&y.dual_obj())))?;
    laws.push(Law::new("internal duality (1)", left, top));

    let d_yz = internal_duality(y, z);
    let d_xz = internal_duality(x, z);
    let (_, c_tau_dual) = composition_law(&z.dual(), &y.dual(), &x.dual());
    let lhs = d_xz.after(&c_xyz)?;
    let rhs = c_tau_dual.after(&d_yz.tensor(&d_xy))?;
    laws.push(Law::new("internal duality (2)", lhs, rhs));

    let double = internal_duality(&y.dual(), &x.dual()).after(&d_xy)?;
    let xdd = x.dual().dual();
    let ydd = y.dual().dual();
    let i_x = x.reflexive();
    let pull = hom_functor(&i_x, &id(ydd.obj()), &xdd, x, &ydd, &ydd)?;
    let push = hom_functor(&id(x.obj()), &y.reflexive(), x, x, y, &ydd)?;
    laws.push(Law::new("internal duality (4)", pull.after(&double)?, push));
    Ok(laws)
}

/// Identities for a single `f : S -> hom(X, Y)`: DefD_f, the adjunction
/// diagram of `iota_f`, and the first diagram relating `D_{iota_f}` to `phi_f`.
pub fn hom_valued_laws(f: &Mor, s: &Obj, x: &DualPair, y: &DualPair) -> Result<Vec<Law>, CatError> {
    let mut laws = Vec::new();
    let phi = phi_of(f, x, y)?;
    laws.push(Law::new("DefD_f", hom_valued(&phi, s, x)?, f.clone()));

    let iota = iota_of(f, x, y)?;
    let phi_iota = phi_of(&iota, &y.dual(), &x.dual())?;
    let yd = y.dual_obj();
    let left = y.ev_tau().after(&phi.tensor(&id(&yd)))?;
    let right = x
        .ev_tau()
        .after(&id(x.obj()).tensor(&phi_iota))?
        .after(&tau(s, x.obj()).tensor(&id(&yd)))?;
    laws.push(Law::new("iota adjunction", left, right));

    let ydd = y.dual().dual_obj();
    let factors = [x.dual_obj(), ydd, x.obj().clone()];
    let ev13 = contract(
        &factors,
        &[Contraction {
            left: 0,
            right: 2,
            variant: Phi,
            pairing: x,
        }],
    )?;
    let lhs = y.reflexive().after(&phi)?;
    let rhs = ev13.after(&iota.tensor(&id(x.obj())))?;
    laws.push(Law::new("D_iota against phi", lhs, rhs));
    Ok(laws)
}

/// Identities for `g : S -> hom(X^v, Y^v)` and `iota*_g : S -> hom(Y, X)`.
pub fn iota_star_laws(g: &Mor, s: &Obj, x: &DualPair, y: &DualPair) -> Result<Vec<Law>, CatError> {
    let mut laws = Vec::new();
    let (xd, yd) = (x.dual(), y.dual());
    let star = iota_star_of(g, x, y)?;
    let phi_star = phi_of(&star, y, x)?;
    let phi_g = phi_of(g, &xd, &yd)?;
    let (xo, yo) = (x.obj(), y.obj());
    let (xdo, ydo) = (x.dual_obj(), y.dual_obj());

    laws.push(Law::new("iota of iota* is g", iota_of(&star, y, x)?, g.clone()));

    let left = x.ev_tau().after(&phi_star.tensor(&id(&xdo)))?;
    let right = y
        .ev_tau()
        .after(&id(yo).tensor(&phi_g))?
        .after(&tau(s, yo).tensor(&id(&xdo)))?;
    laws.push(Law::new("iota* reflexivity (1) first", left, right));

    let left = x
        .ev()
        .after(&id(&xdo).tensor(&phi_star))?
        .after(&tau(s, &xdo).tensor(&id(yo)))?;
    let right = y.ev().after(&phi_g.tensor(&id(yo)))?;
    laws.push(Law::new("iota* reflexivity (1) second", left, right));

    let iota_g = iota_of(g, &xd, &yd)?;
    let phi_iota_g = phi_of(&iota_g, &yd.dual(), &xd.dual())?;
    let lhs = x.reflexive().after(&phi_star)?;
    let rhs = phi_iota_g.after(&id(s).tensor(&y.reflexive()))?;
    laws.push(Law::new("iota* reflexivity (2)", lhs, rhs));

    let factors = [xo.clone(), ydo, xdo];
    let ev13 = contract(
        &factors,
        &[Contraction {
            left: 0,
            right: 2,
            variant: Tau,
            pairing: x,
        }],
    )?;
    laws.push(Law::new(
        "D_iota* against phi_g",
        ev13.after(&star.tensor(&id(&x.dual_obj())))?,
        phi_g,
    ));
    Ok(laws)
}

/// One side of the tensor lemmas: `f_k : S_k -> hom(X_k, Y_k)`.
pub struct Factor<'a> {
    pub f: &'a Mor,
    pub s: &'a Obj,
    pub x: &'a DualPair,
    pub y: &'a DualPair,
}

/// The tensor lemmas for `f_1 (x)_eps f_2` and its twisted variant.
pub fn tensor_lemma_laws(a: &Factor<'_>, b: &Factor<'_>) -> Result<Vec<Law>, CatError> {
    let mut laws = Vec::new();
    let (x12, y12) = (a.x.tensor(b.x), a.y.tensor(b.y));
    let phi1 = phi_of(a.f, a.x, a.y)?;
    let phi2 = phi_of(b.f, b.x, b.y)?;
    let (x1, x2) = (a.x.obj(), b.x.obj());

    let glued = hom_tensor_eps(a.f, b.f, a.x, a.y, b.x, b.y)?;
    let lhs = phi_of(&glued, &x12, &y12)?;
    laws.push(Law::new("Ltensor1", lhs, tensor_eps(&phi1, &phi2, a.s, x1, b.s, x2)?));
    let glued_tau = hom_tensor_eps_tau(a.f, b.f, a.x, a.y, b.x, b.y)?;
    let lhs = phi_of(&glued_tau, &x12, &y12)?;
    laws.push(Law::new(
        "Ltensor1 twisted",
        lhs,
        tensor_eps_tau(&phi1, &phi2, a.s, x1, b.s, x2)?,
    ));

    let iota1 = phi_of(&iota_of(a.f, a.x, a.y)?, &a.y.dual(), &a.x.dual())?;
    let iota2 = phi_of(&iota_of(b.f, b.x, b.y)?, &b.y.dual(), &b.x.dual())?;
    let (y1d, y2d) = (a.y.dual_obj(), b.y.dual_obj());
    let ev_y = ev_pairs(
        &pair_spec((1, 3), (2, 4), Tau, Tau),
        [a.y.obj(), b.y.obj(), &y1d, &y2d],
        [a.y, b.y],
    )?;
    let (x1d, x2d) = (a.x.dual_obj(), b.x.dual_obj());
    let ev_x = ev_pairs(&pair_spec((1, 3), (2, 4), Tau, Tau), [x1, x2, &x1d, &x2d], [a.x, b.x])?;
    let yds = y1d.tensor(&y2d);
    let xs = x1.tensor(x2);
    for (twisted, name) in [(false, "Ltensor2"), (true, "Ltensor2 twisted")] {
        let (phi12, iota12, ss) = if twisted {
            (
                tensor_eps_tau(&phi1, &phi2, a.s, x1, b.s, x2)?,
                tensor_eps_tau(&iota1, &iota2, a.s, &y1d, b.s, &y2d)?,
                b.s.tensor(a.s),
            )
        } else {
            (
                tensor_eps(&phi1, &phi2, a.s, x1, b.s, x2)?,
                tensor_eps(&iota1, &iota2, a.s, &y1d, b.s, &y2d)?,
                a.s.tensor(b.s),
            )
        };
        let left = ev_y.after(&phi12.tensor(&id(&yds)))?;
        let right = Mor::chain(&[&tau(&ss, &xs).tensor(&id(&yds)), &id(&xs).tensor(&iota12), &ev_x])?;
        laws.push(Law::new(name, left, right));
    }
    Ok(laws)
}

/// Ltensor3 and Casimir P1 (1)-(3) for `f1 : S1 -> hom(X, Y)` and
/// `f2 : S2 -> hom(X^v, Y^v)`.
pub fn casimir_p1_laws(f1: &Mor, f2: &Mor, s1: &Obj, s2: &Obj, x: &DualPair, y: &DualPair) -> Result<Vec<Law>, CatError> {
    let mut laws = Vec::new();
    let (xd, yd) = (x.dual(), y.dual());

    let lt3 = ltensor3(f1, f2, s1, s2, x, y)?;
    laws.push(lt3);
    laws.push(casimir_p1_first(f1, f2, s1, s2, x, y, "casimir P1 (1)")?);

    let iota1 = iota_of(f1, x, y)?;
    let iota2 = iota_of(f2, &xd, &yd)?;
    laws.push(casimir_p1_first(&iota1, &iota2, s1, s2, &yd, &xd, "casimir P1 (2)")?);

    let phi1 = phi_of(f1, x, y)?;
    let phi2 = phi_of(f2, &xd, &yd)?;
    let xo = x.obj();
    let (xdo, ydo) = (x.dual_obj(), y.dual_obj());
    let xdd = xd.dual();
    let ydd = yd.dual();
    let yddd = ydd.dual();
    let lhs = ev_pairs(
        &pair_spec((1, 3), (2, 4), Tau, Tau),
        [&xdo, ydd.obj(), xdd.obj(), yddd.obj()],
        [&xd, &ydd],
    )?
    .after(&iota1.tensor(&iota2))?;
    let s12 = s1.tensor(s2);
    let expand = Mor::tensor_all(&[id(&s12), x.casimir(), yd.casimir()]);
    let glued = tensor_eps(&phi1, &phi2, s1, xo, s2, &xdo)?;
    let ev_y = ev_pairs(
        &pair_spec((1, 3), (2, 4), Tau, Tau),
        [y.obj(), &ydo, &ydo, ydd.obj()],
        [y, &yd],
    )?;
    let rhs = Mor::chain(&[&expand, &glued.tensor(&id(&ydo.tensor(ydd.obj()))), &ev_y])?;
    laws.push(Law::new("casimir P1 (3)", lhs, rhs));
    Ok(laws)
}

fn ltensor3(f1: &Mor, f2: &Mor, s1: &Obj, s2: &Obj, x: &DualPair, y: &DualPair) -> Result<Law, CatError> {
    let (xd, yd) = (x.dual(), y.dual());
    let (xo, yo) = (x.obj(), y.obj());
    let (xdo, ydo) = (x.dual_obj(), y.dual_obj());
    let phi1 = phi_of(f1, x, y)?;
    let phi2 = phi_of(f2, &xd, &yd)?;
    let glued = tensor_eps(&phi1, &phi2, s1, xo, s2, &xdo)?;
    let yy = yo.tensor(&ydo);
    let s12 = s1.tensor(s2);
    let top = Mor::chain(&[
        &Mor::tensor_all(&[y.casimir(), id(&s12), x.casimir()]),
        &id(&yy).tensor(&glued),
    ])?;
    let factors = [yo.clone(), xdo.clone(), ydo.clone(), xd.dual_obj()];
    let ev24 = contract(
        &factors,
        &[Contraction {
            left: 1,
            right: 3,
            variant: Tau,
            pairing: &xd,
        }],
    )?;
    let bottom = Mor::chain(&[&f1.tensor(f2), &ev24, &y.casimir().tensor(&id(&yy))])?;
    Ok(Law::new("Ltensor3", top, bottom))
}

fn casimir_p1_first(
    f1: &Mor,
    f2: &Mor,
    s1: &Obj,
    s2: &Obj,
    x: &DualPair,
    y: &DualPair,
    name: &str,
) -> Result<Law, CatError> {
    let (xd, yd) = (x.dual(), y.dual());
    let (xo, yo) = (x.obj(), y.obj());
    let (xdo, ydo) = (x.dual_obj(), y.dual_obj());
    let phi1 = phi_of(f1, x, y)?;
    let phi2 = phi_of(f2, &xd, &yd)?;
    let glued = tensor_eps(&phi1, &phi2, s1, xo, s2, &xdo)?;
    let s12 = s1.tensor(s2);
    let ev_1423 = ev_pairs(&pair_spec((1, 4), (2, 3), Tau, Phi), [yo, &ydo, yo, &ydo], [y, y])?;
    let top = Mor::chain(&[
        &Mor::tensor_all(&[y.casimir(), id(&s12), x.casimir()]),
        &id(&yo.tensor(&ydo)).tensor(&glued),
        &ev_1423,
    ])?;
    let ev_1324 = ev_pairs(
        &pair_spec((1, 3), (2, 4), Tau, Tau),
        [yo, &xdo, &ydo, &xd.dual_obj()],
        [y, &xd],
    )?;
    let bottom = ev_1324.after(&f1.tensor(f2))?;
    Ok(Law::new(name, top, bottom))
}

/// `tau_{X,Y}` reorders through [`permute_factors`] consistently with
/// repeated transpositions.
pub fn permutation_law(a: &Obj, b: &Obj, c: &Obj) -> Result<Law, CatError> {
    let cycle = permute_factors(&[a.clone(), b.clone(), c.clone()], &[2, 0, 1])?;
    let steps = id(b).tensor(&tau(a, c)).after(&tau(a, b).tensor(&id(c)))?;
    Ok(Law::new("cyclic reorder", cycle, steps))
}

/// For `f : S -> hom(X, Y)` and `g : T -> hom(Y, Z)`, `c o (g (x) f)`
/// corresponds to `phi_g o (1_T (x) phi_f)`.
pub fn composition_adjunction_law(
    f: &Mor,
    g: &Mor,
    t: &Obj,
    x: &DualPair,
    y: &DualPair,
    z: &DualPair,
) -> Result<Law, CatError> {
    let (c, _) = composition_law(x, y, z);
    let lhs = phi_of(&c.after(&g.tensor(f))?, x, z)?;
    let rhs = phi_of(g, y, z)?.after(&id(t).tensor(&phi_of(f, x, y)?))?;
    Ok(Law::new("composition adjunction", lhs, rhs))
}
