use duality_theorems::*;
use exact_linalg::{int, Rat, RatMat};
use num_traits::One;
use power_algebras::Flavor;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tensor_category::{random_mor, DualPair, Model, Obj};

fn choose(n: i64, k: usize) -> Rat {
    let mut acc = Rat::one();
    for j in 0..k as i64 {
        acc = acc * int(n - j) / int(j + 1);
    }
    acc
}

#[test]
fn rank_formulas_on_small_grid() {
    let grid = [(Model::Plain, 3, 0), (Model::Super, 0, 2), (Model::Super, 1, 2), (Model::Super, 2, 1)];
    for (model, even, odd) in grid {
        let r = even as i64 - odd as i64;
        for flavor in [Flavor::Alternating, Flavor::Symmetric] {
            let s = Subject::canonical(model, even, odd, flavor, 3).unwrap();
            for k in 0..=3 {
                let result = check_rank_formula(&s, k);
                assert!(result.is_pass(), "{result:?}");
                let expected = match flavor {
                    Flavor::Alternating => choose(r, k),
                    Flavor::Symmetric => choose(r + k as i64 - 1, k),
                };
                assert_eq!(result.witnesses[0].value, expected);
            }
        }
    }
}

#[test]
fn odd_symmetric_perfect_pairings_have_sign_constants() {
    for g in 1..=3 {
        let s = Subject::canonical(Model::Super, 0, g, Flavor::Symmetric, g).unwrap();
        let r = check_corollary_ct(&s, g);
        assert!(r.is_pass(), "{r:?}");
        for i in 0..=g {
            let find = |name: String| r.witnesses.iter().find(|w| w.name == name).unwrap().value.clone();
            let parity = |n: usize| if n.is_multiple_of(2) { int(1) } else { int(-1) };
            assert_eq!(find(format!("upper[{i}]")), parity(g - i));
            assert_eq!(find(format!("lower[{i}]")), parity(i));
        }
    }
}

#[test]
fn theorem_constants_on_plain_spaces() {
    for g in 1..=3 {
        let s = Subject::canonical(Model::Plain, g, 0, Flavor::Alternating, g).unwrap();
        for i in 0..=g {
            let r = check_theorem(&s, g, i, 3);
            assert!(r.is_pass(), "{r:?}");
            let sign = if (i * (g - i)) % 2 == 0 { int(1) } else { int(-1) };
            let get = |name: &str| r.witnesses.iter().find(|w| w.name == name).unwrap().value.clone();
            assert_eq!(get("round trip S"), &sign / choose(g as i64, g - i));
            assert_eq!(get("round trip X^v"), &sign / choose(g as i64, i));
        }
    }
}

#[test]
fn formal_hypotheses_on_odd_plane() {
    let s = Subject::canonical(Model::Super, 0, 2, Flavor::Symmetric, 2).unwrap();
    let r = check_formal_hypotheses(&s, 2, 1);
    assert!(r.is_pass(), "{r:?}");
    assert_eq!(r.witnesses[0].value, int(1));
    let trivial = check_formal_hypotheses(&s, 2, 0);
    assert!(trivial.is_pass());
}

#[test]
fn structural_cases_pass_for_both_models() {
    for model in [Model::Plain, Model::Super] {
        for case in 0..20 {
            let r = check_structural(model, 7, case);
            assert!(r.is_pass(), "{r:?}");
        }
    }
}

#[test]
fn structural_cases_are_deterministic() {
    let a = check_structural(Model::Super, 11, 3);
    let b = check_structural(Model::Super, 11, 3);
    assert_eq!(a, b);
}

fn invertible_even(rng: &mut ChaCha8Rng, obj: &Obj) -> RatMat {
    loop {
        let m = random_mor(rng, obj, obj).mat().clone();
        if m.is_invertible() {
            return m;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    /// Every check reaches the same verdict after replacing the pairing of
    /// `V` by its conjugate under an even change of basis.
    #[test]
    fn verdicts_survive_conjugated_pairings(seed in any::<u64>(), odd in 0usize..=1, sym in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (model, even) = if odd == 0 { (Model::Plain, 2) } else { (Model::Super, 1) };
        let flavor = if sym { Flavor::Symmetric } else { Flavor::Alternating };
        let obj = if odd == 0 { Obj::plain(even) } else { Obj::superspace(even, odd) };
        let p = invertible_even(&mut rng, &obj);
        let gram = p.transpose().compose(&p).unwrap();
        let conjugated = DualPair::with_gram(&obj, gram).unwrap();
        let plain = Subject::canonical(model, even, odd, flavor, 2).unwrap();
        let twisted = Subject::with_pair(model, &conjugated, flavor, 2).unwrap();
        for g in 1..=2 {
            for i in 0..=g {
                for part in 1..=4 {
                    let (a, b) = (check_theorem(&plain, g, i, part), check_theorem(&twisted, g, i, part));
                    prop_assert_eq!(&a.status, &b.status);
                    prop_assert_eq!(&a.witnesses, &b.witnesses);
                }
                prop_assert_eq!(check_key_lemma(&plain, i, g).status, check_key_lemma(&twisted, i, g).status);
                prop_assert_eq!(check_fdp_corollaries(&plain, g, i).status, check_fdp_corollaries(&twisted, g, i).status);
            }
        }
    }
}
