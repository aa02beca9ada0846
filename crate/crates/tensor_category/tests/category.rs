use exact_linalg::{frac, int, Rat, RatMat};
use tensor_category::hom::{
    composition_law, ev_hom, hom_functor, hom_pair, hom_tensor_eps, internal_duality, phi_of, tensor_eps,
    tensor_eps_tau,
};
use tensor_category::laws;
use tensor_category::{
    ev_pairs, permute_factors, tau, CatError, DualPair, Mor, Obj, PairVariant, PairingSpec, Parity,
};

fn mat(rows: Vec<Vec<i64>>) -> RatMat {
    RatMat::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap()
}

fn odd_line() -> Obj {
    Obj::superspace(0, 1)
}

#[test]
fn unit_tensor_is_strict() {
    let x = Obj::superspace(1, 2);
    let ix = Obj::unit().tensor(&x);
    assert_eq!(ix, x);
    assert_eq!(Mor::id(&Obj::unit()).tensor(&Mor::id(&x)), Mor::id(&x));
}

#[test]
fn tensor_of_identities_is_identity() {
    let (x, y) = (Obj::plain(2), Obj::superspace(1, 1));
    assert_eq!(Mor::id(&x).tensor(&Mor::id(&y)), Mor::id(&x.tensor(&y)));
}

#[test]
fn odd_tensor_odd_is_even() {
    let both = odd_line().tensor(&odd_line());
    assert_eq!(both.parities(), &[Parity::Even]);
    let mixed = Obj::superspace(1, 1).tensor(&Obj::superspace(1, 1));
    assert_eq!(mixed.odd_count(), 2);
}

#[test]
fn tau_plain_is_the_shuffle() {
    let t = tau(&Obj::plain(2), &Obj::plain(3));
    for a in 0..2 {
        for b in 0..3 {
            for row in 0..6 {
                let expected = if row == b * 2 + a { int(1) } else { int(0) };
                assert_eq!(t.mat().get(row, a * 3 + b), expected);
            }
        }
    }
}

#[test]
fn tau_on_odd_lines_is_minus_one() {
    let t = tau(&odd_line(), &odd_line());
    assert_eq!(t.mat(), &mat(vec![vec![-1]]));
}

#[test]
fn tau_squares_to_identity() {
    let (x, y) = (Obj::superspace(1, 2), Obj::superspace(2, 1));
    assert_eq!(tau(&y, &x).after(&tau(&x, &y)).unwrap(), Mor::id(&x.tensor(&y)));
}

#[test]
fn snake_on_plain_three() {
    let x = DualPair::canonical(&Obj::plain(3));
    let snake = Mor::id(x.obj())
        .tensor(&x.ev())
        .after(&x.casimir().tensor(&Mor::id(x.obj())))
        .unwrap();
    assert_eq!(snake, Mor::id(x.obj()));
}

#[test]
fn ranks() {
    for n in 1..5 {
        assert_eq!(DualPair::canonical(&Obj::plain(n)).rank(), int(n as i64));
    }
    let mixed = Obj::new(vec![Parity::Even, Parity::Odd, Parity::Odd], "V");
    assert_eq!(DualPair::canonical(&mixed).rank(), int(-1));
    assert_eq!(DualPair::canonical(&Obj::superspace(1, 2)).rank(), int(-1));
    assert_eq!(DualPair::unit().rank(), int(1));
}

#[test]
fn rank_does_not_depend_on_the_pairing() {
    let x = Obj::superspace(2, 1);
    let gram = mat(vec![vec![1, 2, 0], vec![3, -1, 0], vec![0, 0, 5]]);
    let pair = DualPair::with_gram(&x, gram).unwrap();
    assert_eq!(pair.rank(), int(1));
}

#[test]
fn degenerate_or_odd_grams_are_rejected() {
    let x = Obj::superspace(1, 1);
    assert!(matches!(
        DualPair::with_gram(&x, mat(vec![vec![0, 1], vec![1, 0]])),
        Err(CatError::NotEven { .. })
    ));
    assert!(matches!(
        DualPair::with_gram(&x, mat(vec![vec![1, 0], vec![0, 0]])),
        Err(CatError::Degenerate(_))
    ));
}

#[test]
fn reflexive_matches_closed_form_for_canonical_pairing() {
    let x = Obj::superspace(2, 2);
    let pair = DualPair::canonical(&x);
    assert_eq!(pair.reflexive(), DualPair::reflexive_closed_form(&x));
    let d = pair.reflexive().mat().to_dense();
    assert_eq!(d[2][2], int(-1));
    assert_eq!(d[0][0], int(1));
}

#[test]
fn hom_from_unit_and_dimensions() {
    let y = DualPair::canonical(&Obj::superspace(1, 2));
    let unit = DualPair::unit();
    let h = hom_pair(&unit, &y);
    assert_eq!(h.h, *y.obj());
    assert_eq!(h.ev_xy, Mor::id(y.obj()));
    let x = DualPair::canonical(&Obj::plain(2));
    let h = hom_pair(&x, &y);
    assert_eq!(h.h.dim(), 6);
    let lhs = h.ev_xy.after(&h.alpha.tensor(&Mor::id(x.obj()))).unwrap();
    assert_eq!(lhs, Mor::id(y.obj()).tensor(&x.ev()));
}

#[test]
fn internal_duality_small_cases() {
    let unit = DualPair::unit();
    assert_eq!(internal_duality(&unit, &unit), Mor::id(&Obj::unit()));
    let (x, y) = (DualPair::canonical(&Obj::plain(2)), DualPair::canonical(&Obj::plain(3)));
    let d = internal_duality(&x, &y);
    let dense = d.mat().to_dense();
    for row in &dense {
        assert_eq!(row.iter().filter(|v| **v != int(0)).count(), 1);
        assert!(row.iter().all(|v| *v == int(0) || *v == int(1)));
    }
}

#[test]
fn internal_duality_twice_is_hom_of_reflexives() {
    let x = DualPair::with_gram(&Obj::superspace(1, 1), mat(vec![vec![2, 0], vec![0, 3]])).unwrap();
    let y = DualPair::canonical(&Obj::superspace(1, 2));
    let laws = laws::composition_laws(&x, &y, &x, &y).unwrap();
    let four = laws.iter().find(|l| l.name == "internal duality (4)").unwrap();
    assert!(four.holds());
}

#[test]
fn hom_functor_identities() {
    let x = DualPair::canonical(&Obj::superspace(1, 1));
    let y = DualPair::canonical(&Obj::plain(2));
    let h = hom_functor(&Mor::id(x.obj()), &Mor::id(y.obj()), &x, &x, &y, &y).unwrap();
    assert_eq!(h, Mor::id(&y.obj().tensor(&x.dual_obj())));
}

#[test]
fn hom_functor_rejects_mismatched_g() {
    let x = DualPair::canonical(&Obj::plain(2));
    let y = DualPair::canonical(&Obj::plain(3));
    let err = hom_functor(&Mor::id(x.obj()), &Mor::id(x.obj()), &x, &x, &y, &y);
    assert!(err.is_err());
}

#[test]
fn composition_on_unit_multiplies_scalars() {
    let unit = DualPair::unit();
    let (c, c_tau) = composition_law(&unit, &unit, &unit);
    let three = Mor::unit_scalar(int(3));
    let half = Mor::unit_scalar(frac(1, 2));
    let product = c.after(&three.tensor(&half)).unwrap();
    assert_eq!(product.as_scalar(), Some(frac(3, 2)));
    assert_eq!(c_tau, c);
}

#[test]
fn ev_pairs_unit_and_lines() {
    let unit = DualPair::unit();
    let i = Obj::unit();
    let spec = PairingSpec::new((1, 2), (3, 4), (PairVariant::Phi, PairVariant::Phi));
    let e = ev_pairs(&spec, [&i, &i, &i, &i], [&unit, &unit]).unwrap();
    assert_eq!(e.as_scalar(), Some(int(1)));

    let line = Obj::plain(1);
    let a = DualPair::with_gram(&line, mat(vec![vec![3]])).unwrap();
    let b = DualPair::with_gram(&line, mat(vec![vec![-2]])).unwrap();
    let spec = PairingSpec::new((1, 3), (2, 4), (PairVariant::Tau, PairVariant::Tau));
    let e = ev_pairs(&spec, [&line, &line, &line, &line], [&a, &b]).unwrap();
    assert_eq!(e.as_scalar(), Some(int(-6)));
}

#[test]
fn ev_pairs_rejects_bad_specs() {
    let x = DualPair::canonical(&Obj::plain(2));
    let o = x.obj();
    let bad = PairingSpec::new((1, 2), (2, 4), (PairVariant::Phi, PairVariant::Phi));
    assert!(matches!(ev_pairs(&bad, [o, o, o, o], [&x, &x]), Err(CatError::BadPairing(_))));
    let wrong_obj = Obj::plain(3);
    let spec = PairingSpec::new((1, 2), (3, 4), (PairVariant::Phi, PairVariant::Phi));
    assert!(ev_pairs(&spec, [o, o, &wrong_obj, &wrong_obj], [&x, &x]).is_err());
}

#[test]
fn casimir_characterization_on_a_superspace() {
    let x = DualPair::with_gram(
        &Obj::superspace(2, 1),
        mat(vec![vec![1, 1, 0], vec![0, 2, 0], vec![0, 0, -1]]),
    )
    .unwrap();
    for law in laws::casimir_laws(&x).unwrap() {
        assert!(law.holds(), "{}", law.name);
    }
}

#[test]
fn eps_combinator_of_identities_is_the_middle_shuffle() {
    let (s1, x1, s2, x2) = (Obj::plain(2), Obj::superspace(0, 1), Obj::superspace(1, 1), Obj::plain(1));
    let id1 = Mor::id(&s1.tensor(&x1));
    let id2 = Mor::id(&s2.tensor(&x2));
    let glued = tensor_eps(&id1, &id2, &s1, &x1, &s2, &x2).unwrap();
    let shuffle = permute_factors(&[s1.clone(), s2.clone(), x1.clone(), x2.clone()], &[0, 2, 1, 3]).unwrap();
    assert_eq!(glued, shuffle);
}

#[test]
fn twisted_combinator_is_eps_after_swap() {
    let s1 = Obj::superspace(1, 1);
    let x1 = Obj::superspace(1, 1);
    let s2 = Obj::superspace(0, 1);
    let x2 = Obj::plain(2);
    let y1 = Obj::superspace(1, 1);
    let y2 = Obj::plain(1);
    let phi1 = Mor::new(
        s1.tensor(&x1),
        y1.clone(),
        mat(vec![vec![1, 0, 0, 2], vec![0, -1, 3, 0]]),
    )
    .unwrap();
    let phi2 = Mor::new(s2.tensor(&x2), y2, RatMat::zeros(1, 2)).unwrap();
    let lhs = tensor_eps_tau(&phi1, &phi2, &s1, &x1, &s2, &x2).unwrap();
    let swap = tau(&s2, &s1).tensor(&Mor::id(&x1.tensor(&x2)));
    let rhs = tensor_eps(&phi1, &phi2, &s1, &x1, &s2, &x2).unwrap().after(&swap).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn hom_level_eps_matches_phi_combinator() {
    let x1 = DualPair::canonical(&Obj::superspace(1, 1));
    let y1 = DualPair::canonical(&Obj::plain(1));
    let x2 = DualPair::canonical(&Obj::superspace(0, 1));
    let y2 = DualPair::canonical(&Obj::superspace(0, 1));
    let s = Obj::unit();
    let f1 = Mor::new(s.clone(), y1.obj().tensor(&x1.dual_obj()), mat(vec![vec![1], vec![0]])).unwrap();
    let f2 = Mor::new(s.clone(), y2.obj().tensor(&x2.dual_obj()), mat(vec![vec![1]])).unwrap();
    let glued = hom_tensor_eps(&f1, &f2, &x1, &y1, &x2, &y2).unwrap();
    let lhs = phi_of(&glued, &x1.tensor(&x2), &y1.tensor(&y2)).unwrap();
    let phi1 = phi_of(&f1, &x1, &y1).unwrap();
    let phi2 = phi_of(&f2, &x2, &y2).unwrap();
    let rhs = tensor_eps(&phi1, &phi2, &s, x1.obj(), &s, x2.obj()).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn ev_hom_of_unit_target_is_ev() {
    let x = DualPair::canonical(&Obj::superspace(1, 2));
    assert_eq!(ev_hom(&x, &DualPair::unit()).mat(), x.ev().mat());
}

#[test]
fn unit_scalar_is_one_dimensional() {
    let s: Rat = frac(-7, 3);
    assert_eq!(Mor::unit_scalar(s.clone()).as_scalar(), Some(s));
}
