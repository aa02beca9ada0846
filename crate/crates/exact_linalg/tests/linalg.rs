use exact_linalg::{
    binom_at, frac, int, mat_ops, residual_fingerprint, split_idempotent, MatError, MatOp, Rat,
    RatMat, SplitError,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> RatMat {
    RatMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
}

#[test]
fn kron_of_identities_is_identity() {
    let i2 = RatMat::identity(2);
    assert_eq!(i2.kron(&i2), RatMat::identity(4));
}

#[test]
fn compose_with_identity() {
    let a = m(&[&[1, 2, 3], &[4, 5, 6]]);
    assert_eq!(RatMat::identity(2).compose(&a).unwrap(), a);
    assert_eq!(a.compose(&RatMat::identity(3)).unwrap(), a);
}

#[test]
fn kron_swap_with_scalar() {
    let swap = m(&[&[0, 1], &[1, 0]]);
    let two = m(&[&[2]]);
    assert_eq!(swap.kron(&two), m(&[&[0, 2], &[2, 0]]));
}

#[test]
fn kron_index_convention() {
    let a = m(&[&[1, 2], &[3, 4]]);
    let b = m(&[&[0, 5], &[6, 7]]);
    let k = a.kron(&b);
    for (ar, ac, br, bc) in [(0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 1, 1)] {
        assert_eq!(k.get(ar * 2 + br, ac * 2 + bc), a.get(ar, ac) * b.get(br, bc));
    }
}

#[test]
fn shape_errors_name_the_op() {
    let a = RatMat::zeros(2, 3);
    let b = RatMat::zeros(2, 3);
    let err = mat_ops(&a, &b, MatOp::Compose).unwrap_err();
    assert_eq!(
        err,
        MatError::Shape {
            op: "compose",
            left: (2, 3),
            right: (2, 3)
        }
    );
    assert!(err.to_string().contains("compose"));
    assert!(matches!(
        mat_ops(&a, &RatMat::zeros(3, 3), MatOp::Add),
        Err(MatError::Shape { op: "add", .. })
    ));
}

#[test]
fn mat_ops_dispatch() {
    let a = m(&[&[1, 2]]);
    let b = m(&[&[3]]);
    assert_eq!(mat_ops(&a, &b, MatOp::DirectSum).unwrap(), m(&[&[1, 2, 0], &[0, 0, 3]]));
    assert_eq!(mat_ops(&a, &a, MatOp::Add).unwrap(), m(&[&[2, 4]]));
    assert_eq!(mat_ops(&a, &a, MatOp::ScalarMul(int(-1))).unwrap(), m(&[&[-1, -2]]));
    assert_eq!(mat_ops(&a, &b, MatOp::Kron).unwrap(), m(&[&[3, 6]]));
}

#[test]
fn split_identity_and_zero() {
    let (i, p) = split_idempotent(&RatMat::identity(3)).unwrap();
    assert_eq!(i, RatMat::identity(3));
    assert_eq!(p, RatMat::identity(3));
    let (i, p) = split_idempotent(&RatMat::zeros(3, 3)).unwrap();
    assert_eq!(i.shape(), (3, 0));
    assert_eq!(p.shape(), (0, 3));
}

#[test]
fn split_antisymmetrizer_on_two_tensor_square() {
    let half = frac(1, 2);
    let swap = m(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let e = RatMat::identity(4).sub(&swap).unwrap().scale(&half);
    let (i, p) = split_idempotent(&e).unwrap();
    assert_eq!(i, m(&[&[0], &[1], &[-1], &[0]]));
    assert_eq!(p.shape(), (1, 4));
    assert_eq!(p.compose(&i).unwrap(), RatMat::identity(1));
    assert_eq!(i.compose(&p).unwrap(), e);
}

#[test]
fn split_rejects_non_idempotent() {
    let e = m(&[&[2]]);
    match split_idempotent(&e) {
        Err(SplitError::NotIdempotent { residual }) => assert_eq!(residual, m(&[&[2]])),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        split_idempotent(&RatMat::zeros(1, 2)),
        Err(SplitError::NotSquare((1, 2)))
    ));
}

#[test]
fn binomial_examples() {
    assert_eq!(binom_at(&int(3), 2), int(3));
    assert_eq!(binom_at(&int(-1), 2), int(1));
    assert_eq!(binom_at(&int(-2), 1), int(-2));
    assert_eq!(binom_at(&frac(7, 3), 0), Rat::one());
    assert_eq!(binom_at(&int(2), 3), Rat::zero());
}

#[test]
fn inverse_and_rank() {
    let a = m(&[&[2, 1], &[1, 1]]);
    let inv = a.inverse().unwrap();
    assert_eq!(a.compose(&inv).unwrap(), RatMat::identity(2));
    assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
}

#[test]
fn fingerprint_is_max_abs_numerator() {
    let r = RatMat::from_rows(vec![vec![frac(-7, 3), int(2)], vec![Rat::zero(), frac(5, 2)]]).unwrap();
    assert_eq!(residual_fingerprint(&r), "7");
    assert_eq!(residual_fingerprint(&RatMat::zeros(2, 2)), "0");
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn small_mat(rows: usize, cols: usize) -> impl Strategy<Value = RatMat> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
        .prop_map(|rows| RatMat::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect()).unwrap())
}

fn invertible(n: usize) -> impl Strategy<Value = RatMat> {
    small_mat(n, n).prop_filter("invertible", |m| m.is_invertible())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugated_projectors_split(q in invertible(4), rank in 0usize..=4) {
        let diag = RatMat::from_triplets(4, 4, (0..rank).map(|k| (k, k, Rat::one())));
        let e = q.compose(&diag).unwrap().compose(&q.inverse().unwrap()).unwrap();
        let (i, p) = split_idempotent(&e).unwrap();
        prop_assert_eq!(i.shape(), (4, rank));
        prop_assert_eq!(i.compose(&p).unwrap(), e);
        prop_assert_eq!(p.compose(&i).unwrap(), RatMat::identity(rank));
    }

    #[test]
    fn kron_associative(a in small_mat(2, 3), b in small_mat(1, 2), c in small_mat(2, 2)) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn kron_bilinear(a in small_mat(2, 2), a2 in small_mat(2, 2), b in small_mat(2, 3), s in small_rat()) {
        let lhs = a.scale(&s).add(&a2).unwrap().kron(&b);
        let rhs = a.kron(&b).scale(&s).add(&a2.kron(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = b.kron(&a.add(&a2).unwrap());
        let rhs = b.kron(&a).add(&b.kron(&a2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_mixed_product(a in small_mat(2, 2), b in small_mat(3, 2), c in small_mat(2, 3), d in small_mat(2, 2)) {
        let lhs = a.kron(&b).compose(&c.kron(&d)).unwrap();
        let rhs = a.compose(&c).unwrap().kron(&b.compose(&d).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binomial_recurrence(t in small_rat(), k in 1usize..=8) {
        let lhs = binom_at(&t, k);
        let rhs = binom_at(&(t.clone() - Rat::one()), k - 1) + binom_at(&(t - Rat::one()), k);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sparse_product_matches_dense(a in small_mat(3, 4), b in small_mat(4, 2)) {
        let prod = a.compose(&b).unwrap();
        let (ad, bd) = (a.to_dense(), b.to_dense());
        for (r, row) in ad.iter().enumerate() {
            for c in 0..2 {
                let expected = row.iter().zip(&bd).fold(Rat::zero(), |acc, (x, col)| acc + x.clone() * col[c].clone());
                prop_assert_eq!(prod.get(r, c), expected);
            }
        }
    }
}
