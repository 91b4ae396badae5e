#![allow(dead_code)]

use mfhrr::groebner::{FreeModuleElement, PolyMatrix};
use mfhrr::mf::MatrixFactorization;
use mfhrr::poly::{frac, Monomial, MonomialOrder, MultiPoly, Rational};
use mfhrr::superforms::{FormPoly, SuperMatrixForm};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub const SEED: u64 = 0x6d66_6872_7231;

/// 256 cases per property with a fixed seed.
pub fn config() -> Config {
    Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_coeff() -> impl Strategy<Value = Rational> {
    coeff().prop_filter("nonzero", |c| *c != frac(0, 1))
}

pub fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, nvars), coeff()),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        MultiPoly::from_terms(
            nvars,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), c)),
        )
    })
}

pub fn element(
    rank: usize,
    nvars: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = FreeModuleElement> {
    prop::collection::vec(poly(nvars, max_deg, max_terms), rank).prop_map(FreeModuleElement)
}

pub fn matrix(
    rows: usize,
    cols: usize,
    nvars: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(
        prop::collection::vec(poly(nvars, max_deg, max_terms), cols),
        rows,
    )
}

/// Plain triple-loop product, kept separate from the library's `mat_mul`.
pub fn naive_mul(a: &PolyMatrix, b: &PolyMatrix, nvars: usize) -> PolyMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let mut acc = MultiPoly::zero(nvars);
                    for k in 0..inner {
                        acc += &(&row[k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn scalar_identity(w: &MultiPoly, n: usize) -> PolyMatrix {
    let nvars = w.nvars();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        w.clone()
                    } else {
                        MultiPoly::zero(nvars)
                    }
                })
                .collect()
        })
        .collect()
}

/// All exponent vectors of total degree `d` in `nvars` variables.
pub fn exponents_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponents_of_degree(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub const ORDER: MonomialOrder = MonomialOrder::DegRevLex;

/// Straightforward full reduction, independent of the library's division routine.
pub fn reduce(f: &FreeModuleElement, gens: &[FreeModuleElement]) -> FreeModuleElement {
    let leads: Vec<_> = gens
        .iter()
        .map(|g| g.lead(&ORDER).expect("nonzero generator"))
        .collect();
    let mut f = f.clone();
    let mut rem = FreeModuleElement::zero(f.rank(), f.0[0].nvars());
    while let Some(lt) = f.lead(&ORDER) {
        let hit = leads.iter().zip(gens).find_map(|(l, g)| {
            (l.pos == lt.pos).then(|| {
                l.mono
                    .quotient_of(&lt.mono)
                    .map(|q| (q, &lt.coeff / &l.coeff, g))
            })?
        });
        match hit {
            Some((q, c, g)) => {
                let shifted = FreeModuleElement(g.0.iter().map(|p| p.mul_term(&q, &c)).collect());
                f = f.sub(&shifted);
            }
            None => {
                let t = MultiPoly::term(lt.mono.clone(), lt.coeff.clone());
                f.0[lt.pos] -= &t;
                rem.0[lt.pos] += &t;
            }
        }
    }
    rem
}

pub fn s_vector(a: &FreeModuleElement, b: &FreeModuleElement) -> Option<FreeModuleElement> {
    let (la, lb) = (a.lead(&ORDER)?, b.lead(&ORDER)?);
    if la.pos != lb.pos {
        return None;
    }
    let l = la.mono.lcm(&lb.mono);
    let qa = la.mono.quotient_of(&l).unwrap();
    let qb = lb.mono.quotient_of(&l).unwrap();
    let ca = la.coeff.recip();
    let cb = lb.coeff.recip();
    let sa = FreeModuleElement(a.0.iter().map(|p| p.mul_term(&qa, &ca)).collect());
    let sb = FreeModuleElement(b.0.iter().map(|p| p.mul_term(&qb, &cb)).collect());
    Some(sa.sub(&sb))
}

pub const LEAF_VARS: usize = 2;

/// Independent check of `d1 d0 = w·I` and `d0 d1 = w·I`.
pub fn squares_to_w(p: &MatrixFactorization) -> bool {
    let n = p.nvars();
    naive_mul(&p.d1, &p.d0, n) == scalar_identity(&p.w, p.r0)
        && naive_mul(&p.d0, &p.d1, n) == scalar_identity(&p.w, p.r1)
}

pub fn koszul_leaf() -> impl Strategy<Value = MatrixFactorization> {
    (poly(LEAF_VARS, 2, 3), poly(LEAF_VARS, 2, 3))
        .prop_map(|(a, b)| MatrixFactorization::koszul(&a, &b))
}

/// Random constructor trees over Koszul leaves.
pub fn constructed() -> impl Strategy<Value = MatrixFactorization> {
    koszul_leaf().prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(p, q)| p.tensor(&q).unwrap()),
            inner.clone().prop_map(|p| p.shift()),
            inner.clone().prop_map(|p| p.dual()),
            inner.clone().prop_map(|p| p.sum(&p.shift()).unwrap()),
            inner.prop_map(|p| {
                let c = MatrixFactorization::koszul(&MultiPoly::one(LEAF_VARS), &p.w);
                p.sum(&c).unwrap()
            }),
        ]
    })
}

pub const FORM_VARS: usize = 3;

pub fn form(min_degree: u32) -> impl Strategy<Value = FormPoly> {
    prop::collection::vec((0u32..(1 << FORM_VARS), poly(FORM_VARS, 2, 2)), 0..=3).prop_map(
        move |terms| {
            let mut f = FormPoly::zero(FORM_VARS);
            for (idx, p) in terms {
                if idx.count_ones() >= min_degree {
                    f.add_term(idx, &p);
                }
            }
            f
        },
    )
}

pub fn shaped(r0: usize, r1: usize, min_degree: u32) -> impl Strategy<Value = SuperMatrixForm> {
    let n = r0 + r1;
    prop::collection::vec(form(min_degree), n * n).prop_map(move |entries| {
        let mut m = SuperMatrixForm::zero(FORM_VARS, r0, r1);
        for (k, f) in entries.into_iter().enumerate() {
            m.set(k / n, k % n, f);
        }
        m
    })
}

pub fn super_matrix(min_degree: u32) -> impl Strategy<Value = SuperMatrixForm> {
    (1usize..=2, 1usize..=2).prop_flat_map(move |(r0, r1)| shaped(r0, r1, min_degree))
}

/// Two elements of the same shape, each homogeneous of the given parity.
pub fn homogeneous_pair() -> impl Strategy<Value = (SuperMatrixForm, SuperMatrixForm, u32, u32)> {
    (1usize..=2, 1usize..=2, 0u32..2, 0u32..2)
        .prop_flat_map(|(r0, r1, pa, pb)| {
            (shaped(r0, r1, 0), shaped(r0, r1, 0), Just(pa), Just(pb))
        })
        .prop_map(|(a, b, pa, pb)| (a.parity_part(pa), b.parity_part(pb), pa, pb))
}
