use duality_theorems::*;
use exact_linalg::{frac, int, Rat};
use power_algebras::Flavor;
use tensor_category::Model;

fn subject(model: Model, even: usize, odd: usize, flavor: Flavor, cap: usize) -> Subject {
    Subject::canonical(model, even, odd, flavor, cap).unwrap()
}

fn witness(r: &CheckResult, name: &str) -> Rat {
    r.witnesses
        .iter()
        .find(|w| w.name == name)
        .unwrap_or_else(|| panic!("no witness {name} in {r:?}"))
        .value
        .clone()
}

fn assert_pass(r: &CheckResult) {
    assert!(r.is_pass(), "{} {} failed: {:?} residual {}", r.id, r.params, r.note, r.residual);
}

#[test]
fn plane_round_trip_is_minus_half() {
    let s = subject(Model::Plain, 2, 0, Flavor::Alternating, 2);
    let r = check_theorem(&s, 2, 1, 3);
    assert_pass(&r);
    assert_eq!(witness(&r, "round trip S"), frac(-1, 2));
    assert_eq!(witness(&r, "mu_sx"), frac(1, 2));
}

#[test]
fn odd_plane_symmetric_key_lemma_scalar() {
    let s = subject(Model::Super, 0, 2, Flavor::Symmetric, 2);
    let r = check_key_lemma(&s, 1, 2);
    assert_pass(&r);
    assert_eq!(witness(&r, "scalar"), frac(-1, 2));
}

#[test]
fn corollary_skips_non_invertible_top() {
    let s = subject(Model::Plain, 3, 0, Flavor::Alternating, 3);
    let r = check_corollary_ct(&s, 2);
    assert!(r.is_skipped());
    let r = check_corollary_ct(&s, 3);
    assert_pass(&r);
    assert!(r.witnesses.iter().all(|w| w.value == int(1)));
}

#[test]
fn self_test_fails_with_unit_residual() {
    let r = check_self_test();
    assert!(r.is_fail());
    assert_eq!(r.residual, "1");
}

#[test]
fn plain_alternating_sweep() {
    for dim in 1..=3 {
        let s = subject(Model::Plain, dim, 0, Flavor::Alternating, dim);
        for g in 1..=dim {
            for i in 0..=g {
                for part in 1..=4 {
                    assert_pass(&check_theorem(&s, g, i, part));
                }
                assert_pass(&check_key_lemma(&s, i, g));
                assert_pass(&check_formal_hypotheses(&s, g, i));
                assert_pass(&check_fdp_corollaries(&s, g, i));
                if i >= 1 && i < g {
                    let r = check_p2(&s, g, i);
                    assert!(!r.is_fail(), "{r:?}");
                }
            }
            for k in 0..=g {
                assert_pass(&check_key_steps(&s, g, k));
            }
        }
    }
}

#[test]
fn odd_symmetric_sweep() {
    for odd in 1..=3 {
        let s = subject(Model::Super, 0, odd, Flavor::Symmetric, odd);
        for g in 1..=odd {
            for i in 0..=g {
                for part in 1..=4 {
                    assert_pass(&check_theorem(&s, g, i, part));
                }
                assert_pass(&check_key_lemma(&s, i, g));
                assert_pass(&check_formal_hypotheses(&s, g, i));
                assert_pass(&check_fdp_corollaries(&s, g, i));
                if i >= 1 && i < g {
                    assert!(!check_p2_with(&s, g, i, P2Form::RankTwisted).is_fail());
                }
            }
            for k in 0..=g {
                assert_pass(&check_key_steps(&s, g, k));
            }
        }
    }
}

#[test]
fn printed_leibniz_rule_needs_the_rank_twist_for_odd_top_powers() {
    let s = subject(Model::Super, 0, 3, Flavor::Symmetric, 3);
    let printed = check_p2(&s, 3, 1);
    assert!(printed.is_fail());
    assert_eq!(witness(&printed, "r_Y"), int(-1));
    assert!(printed.note.as_deref().unwrap().contains("multiplied by r_Y"));
    assert_pass(&check_p2_with(&s, 3, 1, P2Form::RankTwisted));

    let line = subject(Model::Super, 0, 1, Flavor::Alternating, 4);
    for g in 2..=4 {
        for i in 1..g {
            assert_pass(&check_p2_with(&line, g, i, P2Form::RankTwisted));
            assert_eq!(check_p2(&line, g, i).is_pass(), g % 2 == 0);
        }
    }
}

#[test]
fn plane_leibniz_rule_holds_as_printed() {
    let s = subject(Model::Plain, 2, 0, Flavor::Alternating, 2);
    let r = check_p2(&s, 2, 1);
    assert_pass(&r);
    assert_eq!(witness(&r, "r_Y"), int(1));
    let odd = subject(Model::Super, 0, 2, Flavor::Symmetric, 2);
    assert_pass(&check_p2(&odd, 2, 1));
    assert!(check_p2(&subject(Model::Plain, 3, 0, Flavor::Alternating, 2), 2, 1).is_skipped());
}
