mod common;

use std::sync::OnceLock;

use common::{coeff, config, matrix, poly};
use mfhrr::chern::{boundary_bulk, chern_local, identity_matrix};
use mfhrr::ext::hom_differential;
use mfhrr::groebner::PolyMatrix;
use mfhrr::mf::MatrixFactorization;
use mfhrr::milnor::MilnorRing;
use mfhrr::poly::{MultiPoly, Rational, Ring};
use proptest::prelude::*;

struct Case {
    p: MatrixFactorization,
    mr: MilnorRing,
}

fn cases() -> &'static Vec<Case> {
    static C: OnceLock<Vec<Case>> = OnceLock::new();
    C.get_or_init(|| {
        let r1 = Ring::new(&["x"]);
        let r2 = Ring::new(&["x", "y"]);
        let r3 = Ring::new(&["x", "y", "z"]);
        let k = |r: &Ring, a: &str, b: &str| {
            MatrixFactorization::koszul(&r.parse(a).unwrap(), &r.parse(b).unwrap())
        };
        let mfs = vec![
            k(&r1, "x", "x^2"),
            k(&r1, "x^2", "x^2"),
            k(&r2, "x", "x^2").tensor(&k(&r2, "y", "y^2")).unwrap(),
            MatrixFactorization::explicit(
                r2.parse("x^3 + x*y^2").unwrap(),
                vec![
                    vec![r2.parse("x").unwrap(), r2.parse("y").unwrap()],
                    vec![r2.parse("-x*y").unwrap(), r2.parse("x^2").unwrap()],
                ],
                vec![
                    vec![r2.parse("x^2").unwrap(), r2.parse("-y").unwrap()],
                    vec![r2.parse("x*y").unwrap(), r2.parse("x").unwrap()],
                ],
            )
            .unwrap(),
            k(&r3, "x", "x")
                .tensor(&k(&r3, "y", "y"))
                .unwrap()
                .tensor(&k(&r3, "z", "z"))
                .unwrap(),
        ];
        mfs.into_iter()
            .map(|p| {
                let mr = MilnorRing::new(&p.w).unwrap();
                Case { p, mr }
            })
            .collect()
    })
}

fn scaled_identity(f: &MultiPoly, n: usize) -> PolyMatrix {
    identity_matrix(f.nvars(), n)
        .into_iter()
        .map(|row| row.into_iter().map(|e| &e * f).collect())
        .collect()
}

fn add(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
        .collect()
}

fn scale(a: &PolyMatrix, c: &Rational) -> PolyMatrix {
    a.iter()
        .map(|r| r.iter().map(|p| p.scale(c)).collect())
        .collect()
}

/// A case index with two random closed endomorphisms `f·id + D(h)` and a random `h`.
fn closed_pair() -> impl Strategy<Value = (usize, PolyMatrix, PolyMatrix, PolyMatrix)> {
    (0..5usize)
        .prop_flat_map(|k| {
            let c = &cases()[k];
            let (n, r) = (c.p.nvars(), c.p.rank());
            (
                Just(k),
                poly(n, 2, 3),
                matrix(r, r, n, 2, 2),
                poly(n, 2, 3),
                matrix(r, r, n, 2, 2),
                matrix(r, r, n, 2, 2),
            )
        })
        .prop_map(|(k, f1, h1, f2, h2, h)| {
            let p = &cases()[k].p;
            let r = p.rank();
            let a1 = add(&scaled_identity(&f1, r), &hom_differential(p, p, &h1));
            let a2 = add(&scaled_identity(&f2, r), &hom_differential(p, p, &h2));
            (k, a1, a2, h)
        })
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn tau_vanishes_on_exact_endomorphisms((k, _, _, h) in closed_pair()) {
        let c = &cases()[k];
        let exact = hom_differential(&c.p, &c.p, &h);
        let tau = boundary_bulk(&c.p, &exact, &c.mr).unwrap();
        prop_assert!(tau.milnor_class.is_zero());
    }

    #[test]
    fn tau_is_linear((k, a1, a2, _) in closed_pair(), s in coeff()) {
        let c = &cases()[k];
        let t1 = boundary_bulk(&c.p, &a1, &c.mr).unwrap().milnor_class;
        let t2 = boundary_bulk(&c.p, &a2, &c.mr).unwrap().milnor_class;
        let combo = add(&scale(&a1, &s), &a2);
        let t = boundary_bulk(&c.p, &combo, &c.mr).unwrap().milnor_class;
        prop_assert_eq!(t, &t1.scale(&s) + &t2);
    }
}

#[test]
fn chern_character_flips_under_shift() {
    for c in cases() {
        let ch = chern_local(&c.p, &c.mr).unwrap().milnor_class;
        let shifted = chern_local(&c.p.shift(), &c.mr).unwrap().milnor_class;
        assert_eq!(shifted, -&ch);
    }
}

#[test]
fn chern_character_is_additive() {
    for c in cases() {
        let ch = chern_local(&c.p, &c.mr).unwrap().milnor_class;
        let doubled = chern_local(&c.p.sum(&c.p).unwrap(), &c.mr)
            .unwrap()
            .milnor_class;
        assert_eq!(doubled, &ch + &ch);
        let contractible = MatrixFactorization::koszul(&MultiPoly::one(c.p.nvars()), &c.p.w);
        let padded = chern_local(&c.p.sum(&contractible).unwrap(), &c.mr)
            .unwrap()
            .milnor_class;
        assert_eq!(padded, ch);
    }
}
