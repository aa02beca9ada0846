use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tensor_category::laws::{self, Factor, HomInputs, Law};
use tensor_category::{random_mor, random_obj, random_pair, CatError, DualPair, Model};

use crate::result::{CheckId, CheckResult, Evaluation, Params};

const MAX_DIM: usize = 2;

fn pair(rng: &mut ChaCha8Rng, model: Model) -> DualPair {
    let obj = random_obj(rng, model, MAX_DIM);
    random_pair(rng, &obj)
}

/// Every structural identity of the category on one batch of random
/// objects, pairings and morphisms drawn from `rng`.
pub fn structural_laws<R: Rng>(rng: &mut R, model: Model) -> Result<Vec<Law>, CatError> {
    let mut rng = ChaCha8Rng::from_rng(rng).expect("seeding from a generator never fails");
    let rng = &mut rng;
    let mut out = Vec::new();

    let (x, x2) = (pair(rng, model), pair(rng, model));
    out.extend(laws::casimir_laws(&x)?);
    out.push(laws::casimir_tensor_law(&x, &x2)?);
    out.extend(laws::casimir_biproduct_laws(&x, &x2)?);

    let objs: Vec<_> = (0..5).map(|_| random_obj(rng, model, MAX_DIM)).collect();
    let f = random_mor(rng, &objs[0], &objs[1]);
    let g = random_mor(rng, &objs[2], &objs[3]);
    out.extend(laws::symmetry_laws(&f, &g, &objs[4])?);
    out.push(laws::permutation_law(&objs[0], &objs[2], &objs[4])?);

    let xs: Vec<_> = (0..3).map(|_| pair(rng, model)).collect();
    let ys: Vec<_> = (0..3).map(|_| pair(rng, model)).collect();
    let f1 = random_mor(rng, xs[2].obj(), xs[1].obj());
    let f2 = random_mor(rng, xs[1].obj(), xs[0].obj());
    let g1 = random_mor(rng, ys[0].obj(), ys[1].obj());
    let g2 = random_mor(rng, ys[1].obj(), ys[2].obj());
    out.extend(laws::hom_functor_laws(&HomInputs {
        xs: [&xs[0], &xs[1], &xs[2]],
        ys: [&ys[0], &ys[1], &ys[2]],
        f1: &f1,
        f2: &f2,
        g1: &g1,
        g2: &g2,
    })?);
    out.extend(laws::composition_laws(&xs[0], &xs[1], &ys[0], &ys[1])?);

    let (x, y, z) = (pair(rng, model), pair(rng, model), pair(rng, model));
    let s = random_obj(rng, model, MAX_DIM);
    let t = random_obj(rng, model, MAX_DIM);
    let f = random_mor(rng, &s, &y.obj().tensor(&x.dual_obj()));
    let g = random_mor(rng, &t, &z.obj().tensor(&y.dual_obj()));
    out.extend(laws::hom_valued_laws(&f, &s, &x, &y)?);
    out.push(laws::composition_adjunction_law(&f, &g, &t, &x, &y, &z)?);
    let h = random_mor(rng, &s, &y.dual_obj().tensor(&x.dual().dual_obj()));
    out.extend(laws::iota_star_laws(&h, &s, &x, &y)?);

    let (x1, y1, x2, y2) = (pair(rng, model), pair(rng, model), pair(rng, model), pair(rng, model));
    let s1 = random_obj(rng, model, MAX_DIM);
    let s2 = random_obj(rng, model, MAX_DIM);
    let f1 = random_mor(rng, &s1, &y1.obj().tensor(&x1.dual_obj()));
    let f2 = random_mor(rng, &s2, &y2.obj().tensor(&x2.dual_obj()));
    out.extend(laws::tensor_lemma_laws(
        &Factor { f: &f1, s: &s1, x: &x1, y: &y1 },
        &Factor { f: &f2, s: &s2, x: &x2, y: &y2 },
    )?);

    let f2 = random_mor(rng, &s2, &y1.dual_obj().tensor(&x1.dual().dual_obj()));
    out.extend(laws::casimir_p1_laws(&f1, &f2, &s1, &s2, &x1, &y1)?);
    Ok(out)
}

/// Case number `case` of the seeded structural suite for `model`.
pub fn check_structural(model: Model, seed: u64, case: usize) -> CheckResult {
    let params = Params {
        model: model.name().to_string(),
        even: 0,
        odd: 0,
        flavor: None,
        degrees: Default::default(),
    }
    .with("case", case);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case as u64 * 2 + u64::from(model == Model::Super));
    match structural_laws(&mut rng, model) {
        Ok(laws) => {
            let mut eval = Evaluation::default();
            eval.laws(laws);
            eval.finish(CheckId::Structural, params)
        }
        Err(e) => CheckResult::errored(CheckId::Structural, params, e),
    }
}
