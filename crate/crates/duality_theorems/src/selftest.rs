use exact_linalg::{int, RatMat};
use tensor_category::laws::{self, Law};
use tensor_category::{DualPair, Mor, Obj};

use crate::result::{CheckId, CheckResult, Evaluation, Params};

/// A deliberately corrupted snake identity on `Q^2`: the right side is
/// the identity plus one off diagonal entry, so the check must fail with
/// residual 1.
pub fn check_self_test() -> CheckResult {
    let params = Params {
        model: "plain".into(),
        even: 2,
        odd: 0,
        flavor: None,
        degrees: Default::default(),
    };
    let pair = DualPair::canonical(&Obj::plain(2));
    let snake = match laws::casimir_laws(&pair) {
        Ok(found) => found.into_iter().find(|law| law.name == "snake X"),
        Err(e) => return CheckResult::errored(CheckId::SelfTest, params, e),
    };
    let Some(snake) = snake else {
        return CheckResult::errored(CheckId::SelfTest, params, "snake identity missing");
    };
    let bump = RatMat::from_triplets(2, 2, [(0, 1, int(1))]);
    let corrupted = Mor::new(pair.obj().clone(), pair.obj().clone(), bump)
        .and_then(|b| snake.rhs.add(&b));
    let mut eval = Evaluation::default();
    match corrupted {
        Ok(rhs) => eval.law(Law::new("corrupted snake X", snake.lhs, rhs)),
        Err(e) => return CheckResult::errored(CheckId::SelfTest, params, e),
    }
    eval.finish(CheckId::SelfTest, params)
}
