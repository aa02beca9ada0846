use exact_linalg::{binom_at, int, Rat};
use power_algebras::{IotaMethod, PowerAlgebra, PowerError};
use tensor_category::laws::Law;
use tensor_category::{contract, ev_pairs, hom_valued, tau, Contraction, DualPair, Mor, Obj, PairVariant, PairingSpec};

use crate::formal::FormalDuality;
use crate::result::{CheckId, CheckResult, Evaluation, Params};
use crate::subject::Subject;
use crate::DualityError;

fn id(x: &Obj) -> Mor {
    Mor::id(x)
}

fn nat(n: usize) -> Rat {
    int(n as i64)
}

/// Runs `body`, turning a degree beyond the cap into a skip and any other
/// evaluation error into a failure.
fn run(
    id: CheckId,
    params: Params,
    body: impl FnOnce(&mut Evaluation) -> Result<Option<String>, DualityError>,
) -> CheckResult {
    let mut eval = Evaluation::default();
    match body(&mut eval) {
        Ok(None) => eval.finish(id, params),
        Ok(Some(reason)) => CheckResult::skipped(id, params, reason),
        Err(DualityError::Power(PowerError::DegreeTooLarge { degree, max })) => {
            CheckResult::skipped(id, params, format!("degree {degree} exceeds cap {max}"))
        }
        Err(e) => CheckResult::errored(id, params, e),
    }
}

/// The carriers of `S = A_i`, `X = A_{g-i}`, `Y = A_g` and their duals.
struct Triple {
    s: Obj,
    x: Obj,
    sd: Obj,
    xd: Obj,
    yd: Obj,
    ydd: Obj,
    ps: DualPair,
    px: DualPair,
    py: DualPair,
}

impl Triple {
    fn new(alg: &PowerAlgebra, i: usize, g: usize) -> Result<Triple, DualityError> {
        let (ps, px, py) = (alg.pair(i)?.clone(), alg.pair(g - i)?.clone(), alg.pair(g)?.clone());
        Ok(Triple {
            s: ps.obj().clone(),
            x: px.obj().clone(),
            sd: ps.dual_obj(),
            xd: px.dual_obj(),
            yd: py.dual_obj(),
            ydd: py.dual().dual_obj(),
            ps,
            px,
            py,
        })
    }
}

/// `rank(A_k)` from the pairing agrees with `binom(r, k)` or `binom(r + k - 1, k)`.
pub fn check_rank_formula(subject: &Subject, k: usize) -> CheckResult {
    run(CheckId::RankFormula, subject.params().with("k", k), |eval| {
        let power = subject.algebra().power(k)?;
        let measured = power.rank();
        let predicted = subject.constants().power_rank(k);
        eval.witness("rank", measured.clone());
        eval.witness("predicted", predicted.clone());
        eval.law(Law::new("rank", Mor::unit_scalar(measured), Mor::unit_scalar(predicted)));
        Ok(None)
    })
}

/// `delta^{i,g}_{i,g} (C_i (x) C_g) = mu_{X,S} C_{g-i}`, with the scalar
/// extracted from the left side.
pub fn check_key_lemma(subject: &Subject, i: usize, g: usize) -> CheckResult {
    let params = subject.params().with("g", g).with("i", i);
    if i > g {
        return CheckResult::skipped(CheckId::KeyLemma, params, "needs i <= g");
    }
    run(CheckId::KeyLemma, params, |eval| {
        let alg = subject.algebra();
        let lhs = alg
            .delta_mixed(i, i, g, g)?
            .after(&alg.casimir(i)?.tensor(&alg.casimir(g)?))?;
        let target = alg.casimir(g - i)?;
        let predicted = subject.constants().mu_xs(i, g);
        if let Some(found) = scalar_ratio(&lhs, &target) {
            eval.witness("scalar", found);
        }
        eval.witness("predicted", predicted.clone());
        eval.law(Law::new("key lemma", lhs, target.scale(&predicted)));
        Ok(None)
    })
}

/// The `c` with `lhs = c * target`, when one exists and `target` is nonzero.
fn scalar_ratio(lhs: &Mor, target: &Mor) -> Option<Rat> {
    let (r, c, t) = target.mat().entries().next()?;
    let c0 = lhs.mat().get(r, c) / t;
    (target.scale(&c0) == *lhs).then_some(c0)
}

/// The five steps leading to the key lemma, at degree `m` and, for the
/// iterated contraction, `k <= m`.
pub fn check_key_steps(subject: &Subject, m: usize, k: usize) -> CheckResult {
    let params = subject.params().with("m", m).with("k", k);
    if m == 0 || k > m {
        return CheckResult::skipped(CheckId::KeySteps, params, "needs 1 <= m and k <= m");
    }
    run(CheckId::KeySteps, params, |eval| {
        let alg = subject.algebra();
        let consts = subject.constants();
        let c = |n: usize| alg.casimir(n);
        let up = alg.mixed(1, 0)?.carrier;
        let down = alg.mixed(0, 1)?.carrier;
        let both = alg.mixed(1, 1)?.carrier;

        let contract_up = alg.delta_mixed(1, 0, m, m)?.after(&id(&up).tensor(&c(m)?))?;
        let contract_down = alg.delta_mixed(0, 1, m, m)?.after(&id(&down).tensor(&c(m)?))?;

        let split_up = alg
            .phi_mixed(1, 0, m - 1, m - 1)?
            .after(&alg.delta_mixed(1, 0, 1, 1)?.tensor(&id(&alg.mixed(m - 1, m - 1)?.carrier)))?
            .after(&id(&up).tensor(&c(1)?).tensor(&c(m - 1)?))?;
        let split_down = alg
            .phi_mixed(0, 1, m - 1, m - 1)?
            .after(&alg.delta_mixed(0, 1, 1, 1)?.tensor(&id(&alg.mixed(m - 1, m - 1)?.carrier)))?
            .after(&id(&down).tensor(&c(1)?).tensor(&c(m - 1)?))?;
        eval.law(Law::new("contraction splits V", contract_up.clone(), split_up));
        eval.law(Law::new("contraction splits V^v", contract_down.clone(), split_down));

        let direct_up = alg.phi_mixed(1, 0, m - 1, m - 1)?.after(&id(&up).tensor(&c(m - 1)?))?;
        let direct_down = alg.phi_mixed(0, 1, m - 1, m - 1)?.after(&id(&down).tensor(&c(m - 1)?))?;
        eval.law(Law::new("contraction is multiplication V", contract_up, direct_up));
        eval.law(Law::new("contraction is multiplication V^v", contract_down, direct_down));

        if m >= 2 {
            let lhs = alg.delta_mixed(1, 1, m, m)?.after(&id(&both).tensor(&c(m)?))?.scale(&nat(m));
            let trace = alg.pair(1)?.ev_tau().tensor(&id(&alg.mixed(m - 1, m - 1)?.carrier));
            let first = trace.after(&id(&both).tensor(&c(m - 1)?))?;
            let second = alg
                .phi_mixed(1, 1, m - 2, m - 2)?
                .after(&id(&both).tensor(&c(m - 2)?))?
                .scale(&(consts.split_sign() * nat(m - 1)));
            eval.law(Law::new("contraction against A^1_1", lhs, first.add(&second)?));
        }

        let lhs = alg
            .delta_mixed(1, 1, m, m)?
            .after(&c(1)?.tensor(&c(m)?))?
            .scale(&nat(m));
        eval.law(Law::new(
            "contraction of C_1 (x) C_m",
            lhs,
            c(m - 1)?.scale(&consts.casimir_contraction(m)),
        ));

        let lhs = alg
            .delta_mixed(k, k, m, m)?
            .after(&c(k)?.tensor(&c(m)?))?
            .scale(&binom_at(&nat(m), k));
        let coefficient = consts.iterated_contraction(k, m);
        eval.witness("iterated", coefficient.clone());
        eval.law(Law::new("contraction of C_k (x) C_m", lhs, c(m - k)?.scale(&coefficient)));
        Ok(None)
    })
}

/// One part of the Poincare duality theorem for `S = A_i`, `X = A_{g-i}`,
/// `Y = A_g`, evaluated with the explicit internal multiplications.
pub fn check_theorem(subject: &Subject, g: usize, i: usize, part: u8) -> CheckResult {
    let params = subject.params().with("g", g).with("i", i).with("part", part as usize);
    if i > g || !(1..=4).contains(&part) {
        return CheckResult::skipped(CheckId::Theorem, params, "needs i <= g and part in 1..=4");
    }
    run(CheckId::Theorem, params, |eval| {
        let alg = subject.algebra();
        let consts = subject.constants();
        let t = Triple::new(alg, i, g)?;
        let lambda = consts.lambda(i, g);
        let (mu_sx, mu_xs) = (consts.mu_sx(i, g), consts.mu_xs(i, g));
        eval.witness("lambda", lambda.clone());
        eval.witness("mu_sx", mu_sx.clone());
        eval.witness("mu_xs", mu_xs.clone());
        let up_i = alg.poincare_upper(i, g)?;
        let lo_i = alg.poincare_lower(i, g)?;
        let up_gi = alg.poincare_upper(g - i, g)?;
        let lo_gi = alg.poincare_lower(g - i, g)?;
        let pyd = t.py.dual();
        match part {
            1 => {
                let ev = ev_pairs(
                    &PairingSpec::new((1, 3), (2, 4), (PairVariant::Phi, PairVariant::Phi)),
                    [&t.xd, &t.ydd, &t.x, &t.yd],
                    [&t.px, &pyd],
                )?;
                eval.law(Law::new(
                    "pairing of D^{i,g} and D_{i,g}",
                    ev.after(&up_i.tensor(&lo_i))?,
                    t.ps.ev_tau().scale(&mu_sx),
                ));
            }
            2 => {
                let contract_13 = |factors: [&Obj; 3], variant, pairing: &DualPair| {
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
                let lower = contract_13([&t.x, &t.yd, &t.xd], PairVariant::Tau, &t.px)?
                    .after(&lo_i.tensor(&id(&t.xd)))?;
                let lower_rhs = t
                    .ps
                    .ev()
                    .tensor(&id(&t.yd))
                    .after(&id(&t.sd).tensor(&lo_gi))?
                    .scale(&lambda);
                eval.law(Law::new("transpose D_{i,g}", lower, lower_rhs));
                let upper = contract_13([&t.xd, &t.ydd, &t.x], PairVariant::Phi, &t.px)?
                    .after(&up_i.tensor(&id(&t.x)))?;
                let upper_rhs = t
                    .ps
                    .ev_tau()
                    .tensor(&id(&t.ydd))
                    .after(&id(&t.s).tensor(&up_gi))?
                    .scale(&lambda);
                eval.law(Law::new("transpose D^{i,g}", upper, upper_rhs));
            }
            3 => {
                let on_s = id(&t.s)
                    .tensor(&pyd.ev_tau())
                    .after(&lo_gi.tensor(&id(&t.ydd)))?
                    .after(&up_i)?;
                let on_xd = id(&t.xd)
                    .tensor(&pyd.ev())
                    .after(&up_i.tensor(&id(&t.yd)))?
                    .after(&lo_gi)?;
                if let Some(c) = on_s.scalar_multiple_of_identity() {
                    eval.witness("round trip S", c);
                }
                if let Some(c) = on_xd.scalar_multiple_of_identity() {
                    eval.witness("round trip X^v", c);
                }
                eval.law(Law::new("round trip S", on_s, id(&t.s).scale(&(&lambda * &mu_sx))));
                eval.law(Law::new("round trip X^v", on_xd, id(&t.xd).scale(&(&lambda * &mu_xs))));
            }
            _ => {
                let upper = Mor::chain(&[
                    &up_i.tensor(&up_gi),
                    &id(&t.xd).tensor(&tau(&t.ydd, &t.sd)).tensor(&id(&t.ydd)),
                    &alg.phi_dual(g - i, i)?.tensor(&id(&t.ydd)).tensor(&id(&t.ydd)),
                    &pyd.ev_tau().tensor(&id(&t.ydd)),
                ])?;
                let upper_rhs = t.py.reflexive().after(&alg.phi(i, g - i)?)?.scale(&mu_sx);
                eval.law(Law::new("product of D^{.,g}", upper, upper_rhs));
                let lower = Mor::chain(&[
                    &lo_i.tensor(&lo_gi),
                    &id(&t.x).tensor(&tau(&t.yd, &t.s)).tensor(&id(&t.yd)),
                    &alg.phi(g - i, i)?.tensor(&id(&t.yd)).tensor(&id(&t.yd)),
                    &t.py.ev_tau().tensor(&id(&t.yd)),
                ])?;
                eval.law(Law::new("product of D_{.,g}", lower, alg.phi_dual(i, g - i)?.scale(&mu_sx)));
            }
        }
        Ok(None)
    })
}

/// When `A_g` is invertible and the constants do not vanish, every
/// Poincare morphism and every hom valued multiplication in degree `g` is
/// an isomorphism.
pub fn check_corollary_ct(subject: &Subject, g: usize) -> CheckResult {
    let mut result = run(CheckId::CorollaryCt, subject.params().with("g", g), |eval| {
        let alg = subject.algebra();
        let consts = subject.constants();
        if !alg.power(g)?.is_invertible() {
            return Ok(Some(format!("A_{g} is not invertible")));
        }
        for i in 0..=g {
            let (upper, lower) = (consts.upper_witness(i, g), consts.lower_witness(i, g));
            if num_traits::Zero::is_zero(&upper) || num_traits::Zero::is_zero(&lower) {
                return Ok(Some(format!("a duality constant vanishes at i = {i}")));
            }
            eval.witness(format!("upper[{i}]"), upper);
            eval.witness(format!("lower[{i}]"), lower);
        }
        for i in 0..=g {
            let t = Triple::new(alg, i, g)?;
            let (up, lo) = alg.poincare(i, g)?;
            eval.condition(format!("D^{{{i},{g}}} invertible"), up.is_iso());
            eval.condition(format!("D_{{{i},{g}}} invertible"), lo.is_iso());
            let f = hom_valued(&alg.phi(i, g - i)?, &t.s, &t.px)?;
            let f_dual = hom_valued(&alg.phi_dual(i, g - i)?, &t.sd, &t.px.dual())?;
            eval.condition(format!("hom valued phi_{{{i},{}}} invertible", g - i), f.is_iso());
            eval.condition(format!("hom valued phi^v_{{{i},{}}} invertible", g - i), f_dual.is_iso());
        }
        Ok(None)
    });
    if !result.is_skipped() {
        let reading = "rank hypothesis read as alternating (symmetric) rank, not weakly geometric rank";
        result.note = Some(match result.note.take() {
            Some(note) => format!("{note}; {reading}"),
            None => reading.to_string(),
        });
    }
    result
}

/// `(phi^v_{a,b} (x) 1 (x) 1)(1 (x) tau (x) 1)` on
/// `A_a^v (x) A_g^vv (x) A_b^v (x) A_g^vv`.
fn dual_product_13(alg: &PowerAlgebra, a: usize, b: usize, ydd: &Obj) -> Result<Mor, DualityError> {
    let (ad, bd) = (alg.dual_power(a)?.carrier(), alg.dual_power(b)?.carrier());
    Ok(alg
        .phi_dual(a, b)?
        .tensor(&id(ydd))
        .tensor(&id(ydd))
        .after(&id(ad).tensor(&tau(ydd, bd)).tensor(&id(ydd)))?)
}

/// `(phi_{a,b} (x) 1 (x) 1)(1 (x) tau (x) 1)` on `A_a (x) A_g^v (x) A_b (x) A_g^v`.
fn product_13(alg: &PowerAlgebra, a: usize, b: usize, yd: &Obj) -> Result<Mor, DualityError> {
    let (ao, bo) = (alg.power(a)?.carrier(), alg.power(b)?.carrier());
    Ok(alg
        .phi(a, b)?
        .tensor(&id(yd))
        .tensor(&id(yd))
        .after(&id(ao).tensor(&tau(yd, bo)).tensor(&id(yd)))?)
}

/// How the second term of the Leibniz rule is weighted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum P2Form {
    /// The diagrams exactly as displayed, with unit weight.
    Printed,
    /// The second term multiplied by `r_Y`, the sign of `tau_{Y^vv,Y^vv}`.
    RankTwisted,
}

/// Both Leibniz diagrams for `D^{.,g}` and `D_{.,g}`.
fn leibniz_laws(subject: &Subject, g: usize, i: usize, form: P2Form) -> Result<Vec<Law>, DualityError> {
    let alg = subject.algebra();
    let consts = subject.constants();
    let top = alg.power(g)?;
    let t = Triple::new(alg, i, g)?;
    let (v, vd) = (alg.power(1)?.carrier().clone(), alg.dual_power(1)?.carrier().clone());
    let r_y = top.rank();
    let scale = &r_y * nat(g) * consts.mu_sx(i, g);
    let first_sign = consts.sign(g - i) * nat(i);
    let mut second_sign = consts.sign(i * (g - i - 1)) * nat(g - i);
    if form == P2Form::RankTwisted {
        second_sign *= &r_y;
    }

    let first = Mor::chain(&[
        &id(&t.s).tensor(&alg.phi(g - i, 1)?),
        &alg.poincare_upper(i, g)?.tensor(&alg.poincare_upper(g - i + 1, g)?),
        &dual_product_13(alg, g - i, i - 1, &t.ydd)?,
    ])?
    .scale(&first_sign);
    let second = Mor::chain(&[
        &tau(&t.s, &t.x).tensor(&id(&v)),
        &id(&t.x).tensor(&alg.phi(i, 1)?),
        &alg.poincare_upper(g - i, g)?.tensor(&alg.poincare_upper(i + 1, g)?),
        &dual_product_13(alg, i, g - i - 1, &t.ydd)?,
    ])?
    .scale(&second_sign);
    let rhs = Mor::chain(&[
        &tau(&t.s.tensor(&t.x), &v),
        &alg.poincare_upper(1, g)?.tensor(&alg.phi(i, g - i)?),
        &id(alg.dual_power(g - 1)?.carrier())
            .tensor(&id(&t.ydd))
            .tensor(&t.py.reflexive()),
    ])?
    .scale(&scale);
    let upper = Law::new("Leibniz for D^{.,g}", first.add(&second)?, rhs);

    let first = Mor::chain(&[
        &id(&t.sd).tensor(&alg.phi_dual(g - i, 1)?),
        &alg.poincare_lower(i, g)?.tensor(&alg.poincare_lower(g - i + 1, g)?),
        &product_13(alg, g - i, i - 1, &t.yd)?,
    ])?
    .scale(&first_sign);
    let second = Mor::chain(&[
        &tau(&t.sd, &t.xd).tensor(&id(&vd)),
        &id(&t.xd).tensor(&alg.phi_dual(i, 1)?),
        &alg.poincare_lower(g - i, g)?.tensor(&alg.poincare_lower(i + 1, g)?),
        &product_13(alg, i, g - i - 1, &t.yd)?,
    ])?
    .scale(&second_sign);
    let rhs = Mor::chain(&[
        &tau(&t.sd.tensor(&t.xd), &vd),
        &alg.poincare_lower(1, g)?.tensor(&alg.phi_dual(i, g - i)?),
    ])?
    .scale(&scale);
    let lower = Law::new("Leibniz for D_{.,g}", first.add(&second)?, rhs);
    Ok(vec![upper, lower])
}

/// The Leibniz rule for Poincare morphisms as displayed: multiplying by
/// `V` before `D^{.,g}` splits into two terms, and likewise for `D_{.,g}`
/// and `V^v`. When it fails, the note records whether the
/// [`P2Form::RankTwisted`] form holds instead.
pub fn check_p2(subject: &Subject, g: usize, i: usize) -> CheckResult {
    check_p2_with(subject, g, i, P2Form::Printed)
}

pub fn check_p2_with(subject: &Subject, g: usize, i: usize, form: P2Form) -> CheckResult {
    let params = subject.params().with("g", g).with("i", i);
    if i == 0 || i >= g {
        return CheckResult::skipped(CheckId::P2, params, "needs 1 <= i <= g - 1");
    }
    let mut result = run(CheckId::P2, params, |eval| {
        let top = subject.algebra().power(g)?;
        if !top.is_invertible() {
            return Ok(Some(format!("A_{g} is not invertible")));
        }
        eval.witness("r_Y", top.rank());
        eval.witness("mu_sx", subject.constants().mu_sx(i, g));
        eval.laws(leibniz_laws(subject, g, i, form)?);
        Ok(None)
    });
    if result.is_fail() && form == P2Form::Printed {
        let twisted = leibniz_laws(subject, g, i, P2Form::RankTwisted)
            .map(|laws| laws.iter().all(Law::holds))
            .unwrap_or(false);
        if twisted {
            let note = result.note.take().unwrap_or_default();
            result.note = Some(format!("{note}; holds with the second term multiplied by r_Y"));
        }
    }
    result
}

/// The hypotheses of formal duality for `S = A_i`, `X = A_{g-i}`, `Y = A_g`:
/// the commutativity squares and both Casimir identities.
pub fn check_formal_hypotheses(subject: &Subject, g: usize, i: usize) -> CheckResult {
    let params = subject.params().with("g", g).with("i", i);
    if i > g {
        return CheckResult::skipped(CheckId::FormalHypotheses, params, "needs i <= g");
    }
    run(CheckId::FormalHypotheses, params, |eval| {
        let consts = subject.constants();
        let formal = FormalDuality::from_algebra(subject.algebra(), i, g)?;
        let lambda = consts.lambda(i, g);
        let (mu_sx, mu_xs) = (consts.mu_sx(i, g), consts.mu_xs(i, g));
        eval.witness("lambda", lambda.clone());
        eval.witness("lambda_brackets", consts.lambda_brackets(i, g));
        eval.witness("mu_sx", mu_sx.clone());
        eval.witness("mu_xs", mu_xs.clone());
        eval.laws(formal.commutativity_laws(&lambda)?);
        eval.laws(formal.casimir_laws(&mu_sx, &mu_xs)?);
        Ok(None)
    })
}

/// The consequences of formal duality, evaluated on the Poincare
/// morphisms derived from the multiplications alone.
pub fn check_fdp_corollaries(subject: &Subject, g: usize, i: usize) -> CheckResult {
    let params = subject.params().with("g", g).with("i", i);
    if i > g {
        return CheckResult::skipped(CheckId::FdpCorollaries, params, "needs i <= g");
    }
    run(CheckId::FdpCorollaries, params, |eval| {
        let alg = subject.algebra();
        let consts = subject.constants();
        let formal = FormalDuality::from_algebra(alg, i, g)?;
        let swapped = formal.swapped();
        let lambda = consts.lambda(i, g);
        let brackets = consts.lambda_brackets(i, g);
        let (mu_sx, mu_xs) = (consts.mu_sx(i, g), consts.mu_xs(i, g));
        let product_lambda = &brackets * &lambda * &lambda;
        eval.witness("lambda", lambda.clone());
        eval.witness("lambda_product", product_lambda.clone());
        eval.witness("mu_sx", mu_sx.clone());
        eval.witness("mu_xs", mu_xs.clone());

        eval.laws(formal.pairing_laws(&brackets, &mu_sx)?);
        eval.laws(formal.transposition_laws(&lambda)?);
        eval.laws(formal.round_trip_laws(&lambda, &brackets, &mu_sx, &mu_xs)?);
        eval.laws(swapped.round_trip_laws(&lambda, &brackets, &mu_xs, &mu_sx)?);
        eval.laws(formal.product_laws(&product_lambda, &mu_sx)?);

        if g >= 1 && alg.power(g)?.is_invertible() {
            eval.witness("r_Y", alg.power(g)?.rank());
            let upper = alg.iota(1, g, IotaMethod::Explicit)?;
            let lower = alg.iota_star(1, g, IotaMethod::Explicit)?;
            let b = alg.dual_pair(g - 1)?;
            let d = alg.pair(g - 1)?;
            eval.laws(formal.factorization_laws((&upper, b), (&lower, d), &product_lambda, &mu_sx)?);
        }
        Ok(None)
    })
}
