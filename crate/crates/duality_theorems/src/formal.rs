//! Formal Poincare duality for an arbitrary triple of dual pairs `S`, `X`,
//! `Y` with multiplications `S (x) X -> Y`, `X (x) S -> Y` and their duals.
//! Every Poincare morphism here is derived from the multiplications through
//! internal duality, so nothing depends on an explicit formula for the
//! internal multiplications.

use exact_linalg::Rat;
use power_algebras::PowerAlgebra;
use tensor_category::laws::Law;
use tensor_category::{
    contract, ev_pairs, hom_valued, iota_of, iota_star_of, phi_of, tau, tensor_eps, tensor_eps_tau, CatError,
    Contraction, DualPair, Mor, Obj, PairVariant, PairingSpec,
};

use crate::DualityError;

fn id(x: &Obj) -> Mor {
    Mor::id(x)
}

/// The data of a formal duality between `S` and `X` relative to `Y`.
#[derive(Clone, Debug)]
pub struct FormalDuality {
    pub s: DualPair,
    pub x: DualPair,
    pub y: DualPair,
    /// `S (x) X -> Y`.
    pub phi_sx: Mor,
    /// `X (x) S -> Y`.
    pub phi_xs: Mor,
    /// `S^v (x) X^v -> Y^v`.
    pub phi_sdxd: Mor,
    /// `X^v (x) S^v -> Y^v`.
    pub phi_xdsd: Mor,
}

/// The derived Poincare morphisms.
#[derive(Clone, Debug)]
pub struct Poincare {
    /// `D_{S,X^v} : S -> X^v (x) Y^vv`.
    pub s_xd: Mor,
    /// `D_{X,S^v} : X -> S^v (x) Y^vv`.
    pub x_sd: Mor,
    /// `D_{S^v,X} : S^v -> X (x) Y^v`.
    pub sd_x: Mor,
    /// `D_{X^v,S} : X^v -> S (x) Y^v`.
    pub xd_s: Mor,
}

impl FormalDuality {
    /// `S = A_i`, `X = A_{g-i}`, `Y = A_g` with the algebra multiplications.
    pub fn from_algebra(alg: &PowerAlgebra, i: usize, g: usize) -> Result<FormalDuality, DualityError> {
        Ok(FormalDuality {
            s: alg.pair(i)?.clone(),
            x: alg.pair(g - i)?.clone(),
            y: alg.pair(g)?.clone(),
            phi_sx: alg.phi(i, g - i)?,
            phi_xs: alg.phi(g - i, i)?,
            phi_sdxd: alg.phi_dual(i, g - i)?,
            phi_xdsd: alg.phi_dual(g - i, i)?,
        })
    }

    /// The same data with the roles of `S` and `X` exchanged.
    pub fn swapped(&self) -> FormalDuality {
        FormalDuality {
            s: self.x.clone(),
            x: self.s.clone(),
            y: self.y.clone(),
            phi_sx: self.phi_xs.clone(),
            phi_xs: self.phi_sx.clone(),
            phi_sdxd: self.phi_xdsd.clone(),
            phi_xdsd: self.phi_sdxd.clone(),
        }
    }

    fn objs(&self) -> Objects {
        Objects {
            s: self.s.obj().clone(),
            x: self.x.obj().clone(),
            y: self.y.obj().clone(),
            sd: self.s.dual_obj(),
            xd: self.x.dual_obj(),
            yd: self.y.dual_obj(),
            ydd: self.y.dual().dual_obj(),
        }
    }

    pub fn poincare(&self) -> Result<Poincare, CatError> {
        let o = self.objs();
        let f_sx = hom_valued(&self.phi_sx, &o.s, &self.x)?;
        let f_xs = hom_valued(&self.phi_xs, &o.x, &self.s)?;
        let g_sdxd = hom_valued(&self.phi_sdxd, &o.sd, &self.x.dual())?;
        let g_xdsd = hom_valued(&self.phi_xdsd, &o.xd, &self.s.dual())?;
        Ok(Poincare {
            s_xd: iota_of(&f_sx, &self.x, &self.y)?,
            x_sd: iota_of(&f_xs, &self.s, &self.y)?,
            sd_x: iota_star_of(&g_sdxd, &self.x, &self.y)?,
            xd_s: iota_star_of(&g_xdsd, &self.s, &self.y)?,
        })
    }

    /// The commutativity squares `phi_{W,V} o tau_{V,W} = lambda phi_{V,W}`
    /// for `(S,X)`, `(X,S)`, `(S^v,X^v)`, `(X^v,S^v)` and for the mixed
    /// products `[S] = S (x) S^v`, `[X] = X (x) X^v` with
    /// `lambda_{[S],[X]} = lambda^2`.
    pub fn commutativity_laws(&self, lambda: &Rat) -> Result<Vec<Law>, CatError> {
        let o = self.objs();
        let mut laws = Vec::new();
        let squares = [
            ("com S,X", &self.phi_xs, &self.phi_sx, &o.s, &o.x),
            ("com X,S", &self.phi_sx, &self.phi_xs, &o.x, &o.s),
            ("com S^v,X^v", &self.phi_xdsd, &self.phi_sdxd, &o.sd, &o.xd),
            ("com X^v,S^v", &self.phi_sdxd, &self.phi_xdsd, &o.xd, &o.sd),
        ];
        for (name, swapped, straight, v, w) in squares {
            laws.push(Law::new(name, swapped.after(&tau(v, w))?, straight.scale(lambda)));
        }
        let mixed_sx = tensor_eps(&self.phi_sx, &self.phi_sdxd, &o.s, &o.x, &o.sd, &o.xd)?;
        let mixed_xs = tensor_eps(&self.phi_xs, &self.phi_xdsd, &o.x, &o.s, &o.xd, &o.sd)?;
        let swap = tau(&o.s.tensor(&o.sd), &o.x.tensor(&o.xd));
        laws.push(Law::new(
            "com [S],[X]",
            mixed_xs.after(&swap)?,
            mixed_sx.scale(&(lambda * lambda)),
        ));
        Ok(laws)
    }

    /// `mu_{S,X} C_S = (phi_{iota*_{X^v,S^v}} (x)_eps^tau phi_{iota_{X,S}}) (C_X (x) C_Y)`
    /// and the same with `S` and `X` exchanged.
    pub fn casimir_laws(&self, mu_sx: &Rat, mu_xs: &Rat) -> Result<Vec<Law>, CatError> {
        let mut laws = Vec::new();
        for (name, data, mu) in [("cas mu_S,X", self.clone(), mu_sx), ("cas mu_X,S", self.swapped(), mu_xs)] {
            let o = data.objs();
            let d = data.poincare()?;
            let star = phi_of(&d.xd_s, &data.y, &data.s)?;
            let plain = phi_of(&d.x_sd, &data.y.dual(), &data.s.dual())?;
            let contraction = tensor_eps_tau(&star, &plain, &o.xd, &o.y, &o.x, &o.yd)?;
            let rhs = contraction.after(&data.x.casimir().tensor(&data.y.casimir()))?;
            laws.push(Law::new(name, data.s.casimir().scale(mu), rhs));
        }
        Ok(laws)
    }

    /// Both pairing identities between the Poincare morphisms of `S` and `S^v`.
    pub fn pairing_laws(&self, lambda_brackets: &Rat, mu_sx: &Rat) -> Result<Vec<Law>, CatError> {
        use PairVariant::{Phi, Tau};
        let o = self.objs();
        let d = self.poincare()?;
        let yd = self.y.dual();
        let ev_phi = ev_pairs(
            &PairingSpec::new((1, 3), (2, 4), (Phi, Phi)),
            [&o.xd, &o.ydd, &o.x, &o.yd],
            [&self.x, &yd],
        )?;
        let ev_tau = ev_pairs(
            &PairingSpec::new((1, 3), (2, 4), (Tau, Tau)),
            [&o.x, &o.yd, &o.xd, &o.ydd],
            [&self.x, &yd],
        )?;
        Ok(vec![
            Law::new(
                "pairing ev^phi,phi",
                ev_phi.after(&d.s_xd.tensor(&d.sd_x))?.scale(lambda_brackets),
                self.s.ev_tau().scale(mu_sx),
            ),
            Law::new(
                "pairing ev^tau,tau",
                ev_tau.after(&d.sd_x.tensor(&d.s_xd))?,
                self.s.ev().scale(mu_sx),
            ),
        ])
    }

    /// The four transposition squares relating `D_{S,.}` and `D_{X,.}`.
    pub fn transposition_laws(&self, lambda: &Rat) -> Result<Vec<Law>, CatError> {
        use PairVariant::{Phi, Tau};
        let o = self.objs();
        let d = self.poincare()?;
        let contract_13 = |factors: [&Obj; 3], variant: PairVariant, pairing: &DualPair| {
            contract(
                &factors.map(Obj::clone),
                &[Contraction {
                    left: 0,
                    right: 2,
                    variant,
                    pairing,
                }],
            )
        };
        let ev_tau_s = contract_13([&o.s, &o.yd, &o.sd], Tau, &self.s)?;
        let ev_tau_x = contract_13([&o.x, &o.yd, &o.xd], Tau, &self.x)?;
        let ev_phi_s = contract_13([&o.sd, &o.ydd, &o.s], Phi, &self.s)?;
        let ev_phi_x = contract_13([&o.xd, &o.ydd, &o.x], Phi, &self.x)?;
        Ok(vec![
            Law::new(
                "transpose on X^v (x) S^v",
                self.x.ev().tensor(&id(&o.yd)).after(&id(&o.xd).tensor(&d.sd_x))?,
                ev_tau_s.after(&d.xd_s.tensor(&id(&o.sd)))?.scale(lambda),
            ),
            Law::new(
                "transpose on S^v (x) X^v",
                ev_tau_x.after(&d.sd_x.tensor(&id(&o.xd)))?,
                self.s.ev().tensor(&id(&o.yd)).after(&id(&o.sd).tensor(&d.xd_s))?.scale(lambda),
            ),
            Law::new(
                "transpose on X (x) S",
                self.x.ev_tau().tensor(&id(&o.ydd)).after(&id(&o.x).tensor(&d.s_xd))?,
                ev_phi_s.after(&d.x_sd.tensor(&id(&o.s)))?.scale(lambda),
            ),
            Law::new(
                "transpose on S (x) X",
                ev_phi_x.after(&d.s_xd.tensor(&id(&o.x)))?,
                self.s.ev_tau().tensor(&id(&o.ydd)).after(&id(&o.s).tensor(&d.x_sd))?.scale(lambda),
            ),
        ])
    }

    /// `(1_S (x) ev^tau_{Y^v}) (D_{X^v,S} (x) 1) D_{S,X^v} : S -> S`.
    pub fn upper_round_trip(&self) -> Result<Mor, CatError> {
        let o = self.objs();
        let d = self.poincare()?;
        id(&o.s)
            .tensor(&self.y.dual().ev_tau())
            .after(&d.xd_s.tensor(&id(&o.ydd)))?
            .after(&d.s_xd)
    }

    /// `(1_{X^v} (x) ev_{Y^v}) (D_{S,X^v} (x) 1) D_{X^v,S} : X^v -> X^v`.
    pub fn lower_round_trip(&self) -> Result<Mor, CatError> {
        let o = self.objs();
        let d = self.poincare()?;
        id(&o.xd)
            .tensor(&self.y.dual().ev())
            .after(&d.s_xd.tensor(&id(&o.yd)))?
            .after(&d.xd_s)
    }

    /// The round trips are the scalars predicted by the constants:
    /// `lambda_{[S],[X]} lambda (round trip on S) = mu_{S,X}`, its variant
    /// with `lambda` moved to the right, and the same on `X^v` with `mu_{X,S}`.
    pub fn round_trip_laws(&self, lambda: &Rat, lambda_brackets: &Rat, mu_sx: &Rat, mu_xs: &Rat) -> Result<Vec<Law>, CatError> {
        let o = self.objs();
        let up = self.upper_round_trip()?;
        let down = self.lower_round_trip()?;
        Ok(vec![
            Law::new("round trip S", up.scale(&(lambda_brackets * lambda)), id(&o.s).scale(mu_sx)),
            Law::new("round trip S moved", up.scale(lambda_brackets), id(&o.s).scale(&(mu_sx * lambda))),
            Law::new("round trip X^v", down.scale(&(lambda_brackets * lambda)), id(&o.xd).scale(mu_xs)),
            Law::new("round trip X^v moved", down.scale(lambda_brackets), id(&o.xd).scale(&(mu_xs * lambda))),
        ])
    }

    /// `(phi^v_{X,S} (x) 1 (x) 1)(1 (x) tau (x) 1)` on
    /// `X^v (x) Y^vv (x) S^v (x) Y^vv -> Y^v (x) Y^vv (x) Y^vv`.
    fn dual_product_13(&self) -> Result<Mor, CatError> {
        let o = self.objs();
        self.phi_xdsd
            .tensor(&id(&o.ydd))
            .tensor(&id(&o.ydd))
            .after(&id(&o.xd).tensor(&tau(&o.ydd, &o.sd)).tensor(&id(&o.ydd)))
    }

    /// `(phi_{X,S} (x) 1 (x) 1)(1 (x) tau (x) 1)` on
    /// `X (x) Y^v (x) S (x) Y^v -> Y (x) Y^v (x) Y^v`.
    fn product_13(&self) -> Result<Mor, CatError> {
        let o = self.objs();
        self.phi_xs
            .tensor(&id(&o.yd))
            .tensor(&id(&o.yd))
            .after(&id(&o.x).tensor(&tau(&o.yd, &o.s)).tensor(&id(&o.yd)))
    }

    /// The products of Poincare morphisms recover the multiplications:
    /// `lambda phi^{13 -> Y^vv}(D_{S,X^v} (x) D_{X,S^v}) = mu i_Y phi_{S,X}` and
    /// `lambda phi^{13 -> Y^v}(D_{S^v,X} (x) D_{X^v,S}) = mu phi_{S^v,X^v}`.
    pub fn product_laws(&self, lambda: &Rat, mu: &Rat) -> Result<Vec<Law>, CatError> {
        let o = self.objs();
        let d = self.poincare()?;
        let upper = self.y.dual().ev_tau().tensor(&id(&o.ydd)).after(&self.dual_product_13()?)?;
        let lower = self.y.ev_tau().tensor(&id(&o.yd)).after(&self.product_13()?)?;
        Ok(vec![
            Law::new(
                "product upper",
                upper.after(&d.s_xd.tensor(&d.x_sd))?.scale(lambda),
                self.y.reflexive().after(&self.phi_sx)?.scale(mu),
            ),
            Law::new(
                "product lower",
                lower.after(&d.sd_x.tensor(&d.xd_s))?.scale(lambda),
                self.phi_sdxd.scale(mu),
            ),
        ])
    }

    /// For an invertible `Y` and `upper : A -> B (x) Y^vv`, `lower : C -> D (x) Y^v`:
    /// `mu (1 (x) i_Y)(upper (x) phi_{S,X}) = lambda r_Y (phi_upper (x) 1 (x) 1)(1 (x) phi^13)(1 (x) D (x) D)`
    /// and its analogue for `lower`.
    pub fn factorization_laws(
        &self,
        upper: (&Mor, &DualPair),
        lower: (&Mor, &DualPair),
        lambda: &Rat,
        mu: &Rat,
    ) -> Result<Vec<Law>, CatError> {
        let o = self.objs();
        let d = self.poincare()?;
        let scale = lambda * self.y.rank();
        let yd = self.y.dual();

        let (g, b) = upper;
        let a = g.dom().clone();
        let phi_g = phi_of(g, &yd, b)?;
        let d_g = hom_valued(&phi_g, &a, &yd)?;
        let lhs_up = id(b.obj())
            .tensor(&id(&o.ydd))
            .tensor(&self.y.reflexive())
            .after(&d_g.tensor(&self.phi_sx))?
            .scale(mu);
        let rhs_up = Mor::chain(&[
            &id(&a).tensor(&d.s_xd).tensor(&d.x_sd),
            &id(&a).tensor(&self.dual_product_13()?),
            &phi_g.tensor(&id(&o.ydd)).tensor(&id(&o.ydd)),
        ])?
        .scale(&scale);

        let (h, dd) = lower;
        let c = h.dom().clone();
        let phi_h = phi_of(h, &self.y, dd)?;
        let d_h = hom_valued(&phi_h, &c, &self.y)?;
        let lhs_down = d_h.tensor(&self.phi_sdxd).scale(mu);
        let rhs_down = Mor::chain(&[
            &id(&c).tensor(&d.sd_x).tensor(&d.xd_s),
            &id(&c).tensor(&self.product_13()?),
            &phi_h.tensor(&id(&o.yd)).tensor(&id(&o.yd)),
        ])?
        .scale(&scale);

        Ok(vec![
            Law::new("factorization upper", lhs_up, rhs_up),
            Law::new("factorization lower", lhs_down, rhs_down),
        ])
    }
}

struct Objects {
    s: Obj,
    x: Obj,
    y: Obj,
    sd: Obj,
    xd: Obj,
    yd: Obj,
    ydd: Obj,
}
