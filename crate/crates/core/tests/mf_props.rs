mod common;

use common::{
    config, constructed, koszul_leaf, naive_mul, poly, scalar_identity, squares_to_w, LEAF_VARS,
};
use mfhrr::ext::euler_char;
use mfhrr::groebner::PolyMatrix;
use mfhrr::mf::MatrixFactorization;
use mfhrr::poly::{MultiPoly, Ring};
use proptest::prelude::*;

fn elementary(n: usize, i: usize, j: usize, f: &MultiPoly) -> PolyMatrix {
    let mut m = scalar_identity(&MultiPoly::one(LEAF_VARS), n);
    if i != j {
        m[i][j] = f.clone();
    }
    m
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn delta_squares_to_w_after_constructors(p in constructed()) {
        prop_assert!(squares_to_w(&p));
        prop_assert!(p.validate().is_ok());
        let delta = p.delta();
        prop_assert_eq!(naive_mul(&delta, &delta, LEAF_VARS), scalar_identity(&p.w, p.rank()));
    }

    #[test]
    fn base_change_keeps_factorization(p in (koszul_leaf(), koszul_leaf()).prop_map(|(a, b)| a.tensor(&b).unwrap()), f in poly(LEAF_VARS, 2, 3), g in poly(LEAF_VARS, 2, 3)) {
        // d1' = U d1 V^{-1}, d0' = V d0 U^{-1} with elementary U, V
        let (u, u_inv) = (elementary(2, 0, 1, &f), elementary(2, 0, 1, &-&f));
        let (v, v_inv) = (elementary(2, 1, 0, &g), elementary(2, 1, 0, &-&g));
        let d1 = naive_mul(&naive_mul(&u, &p.d1, LEAF_VARS), &v_inv, LEAF_VARS);
        let d0 = naive_mul(&naive_mul(&v, &p.d0, LEAF_VARS), &u_inv, LEAF_VARS);
        let q = MatrixFactorization::explicit(p.w.clone(), d1, d0).unwrap();
        prop_assert!(squares_to_w(&q));
    }

    #[test]
    fn shift_is_an_involution(p in constructed()) {
        let back = p.shift().shift();
        prop_assert_eq!(&back.d1, &p.d1);
        prop_assert_eq!(&back.d0, &p.d0);
        prop_assert_eq!((back.r0, back.r1), (p.r0, p.r1));
    }

    #[test]
    fn dual_negates_potential(p in constructed()) {
        let d = p.dual();
        prop_assert_eq!(&d.w, &-&p.w);
        prop_assert!(squares_to_w(&d));
    }
}

fn parse(r: &Ring, s: &str) -> MultiPoly {
    r.parse(s).unwrap()
}

#[test]
fn tensor_is_associative_for_euler_characteristic() {
    let r = Ring::new(&["x", "y", "z"]);
    let k = |a: &str, b: &str| MatrixFactorization::koszul(&parse(&r, a), &parse(&r, b));
    let (a, b, c) = (k("x", "x"), k("y", "y^2"), k("z", "z"));
    let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
    let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
    assert!(squares_to_w(&left) && squares_to_w(&right));
    for q in [
        left.clone(),
        k("x", "x")
            .tensor(&k("y^2", "y"))
            .unwrap()
            .tensor(&k("z", "z"))
            .unwrap(),
    ] {
        assert_eq!(
            euler_char(&left, &q).unwrap(),
            euler_char(&right, &q).unwrap()
        );
    }
}

#[test]
fn euler_characteristic_is_additive_and_shift_odd() {
    let r = Ring::new(&["x", "y"]);
    let k = |a: &str, b: &str| MatrixFactorization::koszul(&parse(&r, a), &parse(&r, b));
    let p = k("x", "x^2").tensor(&k("y", "y^2")).unwrap();
    let p2 = k("x^2", "x").tensor(&k("y", "y^2")).unwrap();
    let q = k("x", "x^2").tensor(&k("y^2", "y")).unwrap();
    let chi = |a: &MatrixFactorization| euler_char(a, &q).unwrap();
    assert_eq!(chi(&p.sum(&p2).unwrap()), chi(&p) + chi(&p2));
    assert_eq!(chi(&p.shift()), -chi(&p));
    let c = MatrixFactorization::koszul(&MultiPoly::one(2), &p.w);
    assert_eq!(chi(&p.sum(&c).unwrap()), chi(&p));
    assert_eq!(euler_char(&p, &q.sum(&c).unwrap()).unwrap(), chi(&p));
}
