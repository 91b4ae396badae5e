//! Matrix factorizations `(E_0 ⊕ E_1, δ)` with `δ² = w·id`.
//!
//! `d1: E_1 → E_0` is an `r0 x r1` matrix and `d0: E_0 → E_1` an `r1 x r0`
//! matrix, so `δ = [[0, d1], [d0, 0]]` in the basis (even, then odd).
//!
//! Sign conventions used throughout:
//! * tensor: `δ(e ⊗ f) = δe ⊗ f + (-1)^{|e|} e ⊗ δf`;
//! * shift: `d1' = -d0`, `d0' = -d1` with the blocks swapped;
//! * dual: `(δ^∨ φ) = -(-1)^{|φ|} φ∘δ`, i.e. `d1' = d0ᵀ`, `d0' = -d1ᵀ`,
//!   a factorization of `-w`.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::PolyMatrix;
use crate::poly::{frac, MultiPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFactorization {
    pub w: MultiPoly,
    pub r0: usize,
    pub r1: usize,
    /// `r0 x r1`, odd → even
    pub d1: PolyMatrix,
    /// `r1 x r0`, even → odd
    pub d0: PolyMatrix,
    /// Optional weighted degrees of the basis elements (even first).
    pub internal_degrees: Option<Vec<Rational>>,
}

/// First failing entry of `δ² = w·id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// `"d1*d0"` or `"d0*d1"`
    pub product: &'static str,
    pub row: usize,
    pub col: usize,
    pub expected: MultiPoly,
    pub got: MultiPoly,
}

/// `a * b` for an `a` with `inner` columns and a `b` with `ncols` columns.
pub fn mat_mul(
    a: &PolyMatrix,
    b: &PolyMatrix,
    inner: usize,
    ncols: usize,
    nvars: usize,
) -> PolyMatrix {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    let mut acc = MultiPoly::zero(nvars);
                    for k in 0..inner {
                        if !row[k].is_zero() && !b[k][j].is_zero() {
                            acc += &(&row[k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn transpose(m: &PolyMatrix, nrows: usize, ncols: usize, nvars: usize) -> PolyMatrix {
    (0..ncols)
        .map(|j| {
            (0..nrows)
                .map(|i| {
                    m.get(i)
                        .map_or_else(|| MultiPoly::zero(nvars), |r| r[j].clone())
                })
                .collect()
        })
        .collect()
}

fn negate(m: &PolyMatrix) -> PolyMatrix {
    m.iter().map(|r| r.iter().map(|p| -p).collect()).collect()
}

impl MatrixFactorization {
    /// Build from explicit blocks; shapes are checked, the factorization
    /// identity is not (see [`MatrixFactorization::validate`]).
    pub fn explicit(w: MultiPoly, d1: PolyMatrix, d0: PolyMatrix) -> Result<Self> {
        let r0 = d1.len();
        let r1 = d0.len();
        let nvars = w.nvars();
        if d1.iter().any(|row| row.len() != r1) || d0.iter().any(|row| row.len() != r0) {
            return Err(Error::ShapeMismatch(format!(
                "d1 must be {r0}x{r1} and d0 {r1}x{r0}"
            )));
        }
        if d1.iter().chain(&d0).flatten().any(|p| p.nvars() != nvars) {
            return Err(Error::ShapeMismatch("entries over a different ring".into()));
        }
        Ok(MatrixFactorization {
            w,
            r0,
            r1,
            d1,
            d0,
            internal_degrees: None,
        })
    }

    pub fn nvars(&self) -> usize {
        self.w.nvars()
    }

    pub fn rank(&self) -> usize {
        self.r0 + self.r1
    }

    pub fn parity(&self, i: usize) -> u32 {
        u32::from(i >= self.r0)
    }

    /// Full `δ` on `E_0 ⊕ E_1`.
    pub fn delta(&self) -> PolyMatrix {
        let n = self.rank();
        let nvars = self.nvars();
        let mut m = vec![vec![MultiPoly::zero(nvars); n]; n];
        for i in 0..self.r0 {
            for j in 0..self.r1 {
                m[i][self.r0 + j] = self.d1[i][j].clone();
            }
        }
        for i in 0..self.r1 {
            for j in 0..self.r0 {
                m[self.r0 + i][j] = self.d0[i][j].clone();
            }
        }
        m
    }

    /// Split a full `δ`-shaped matrix back into blocks.
    fn from_delta(w: MultiPoly, r0: usize, r1: usize, delta: &PolyMatrix) -> Self {
        let d1 = (0..r0)
            .map(|i| (0..r1).map(|j| delta[i][r0 + j].clone()).collect())
            .collect();
        let d0 = (0..r1)
            .map(|i| (0..r0).map(|j| delta[r0 + i][j].clone()).collect())
            .collect();
        MatrixFactorization {
            w,
            r0,
            r1,
            d1,
            d0,
            internal_degrees: None,
        }
    }

    /// Check `d1 d0 = w I` and `d0 d1 = w I` exactly.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let nvars = self.nvars();
        let checks = [
            (
                "d1*d0",
                mat_mul(&self.d1, &self.d0, self.r1, self.r0, nvars),
                self.r0,
            ),
            (
                "d0*d1",
                mat_mul(&self.d0, &self.d1, self.r0, self.r1, nvars),
                self.r1,
            ),
        ];
        for (name, prod, n) in checks {
            for i in 0..n {
                for j in 0..n {
                    let expected = if i == j {
                        self.w.clone()
                    } else {
                        MultiPoly::zero(nvars)
                    };
                    if prod[i][j] != expected {
                        return Err(Violation {
                            product: name,
                            row: i,
                            col: j,
                            expected,
                            got: prod[i][j].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Rank-1 factorization `(a, b)` of `a b`.
    pub fn koszul(a: &MultiPoly, b: &MultiPoly) -> Self {
        MatrixFactorization {
            w: a * b,
            r0: 1,
            r1: 1,
            d1: vec![vec![a.clone()]],
            d0: vec![vec![b.clone()]],
            internal_degrees: None,
        }
    }

    /// Factorization of `w_self + w_other` on `E ⊗ F`. Both factors must live
    /// in the same ring (embed first when the variable sets differ).
    ///
    /// Basis order: even part `E_0⊗F_0, E_1⊗F_1`, odd part `E_1⊗F_0, E_0⊗F_1`,
    /// each block ordered with the `E` index major.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let nvars = self.nvars();
        if other.nvars() != nvars {
            return Err(Error::ShapeMismatch(
                "tensor factors over different rings".into(),
            ));
        }
        let (p, q) = (self, other);
        let (dp, dq) = (p.delta(), q.delta());
        // combined index (a, b) -> position in the new basis
        let (order, r0) = tensor_basis(p, q);
        let n = order.len();
        let mut delta = vec![vec![MultiPoly::zero(nvars); n]; n];
        for (row, &(a, b)) in order.iter().enumerate() {
            for (col, &(a2, b2)) in order.iter().enumerate() {
                let mut e = MultiPoly::zero(nvars);
                if b == b2 {
                    e += &dp[a][a2];
                }
                if a == a2 {
                    if p.parity(a) == 0 {
                        e += &dq[b][b2];
                    } else {
                        e -= &dq[b][b2];
                    }
                }
                delta[row][col] = e;
            }
        }
        let mut out = Self::from_delta(&p.w + &q.w, r0, n - r0, &delta);
        if let (Some(qa), Some(qb)) = (&p.internal_degrees, &q.internal_degrees) {
            out.internal_degrees = Some(order.iter().map(|&(a, b)| &qa[a] + &qb[b]).collect());
        }
        Ok(out)
    }

    pub fn shift(&self) -> Self {
        MatrixFactorization {
            w: self.w.clone(),
            r0: self.r1,
            r1: self.r0,
            d1: negate(&self.d0),
            d0: negate(&self.d1),
            internal_degrees: self.internal_degrees.as_ref().map(|q| {
                let half = frac(1, 2);
                q[self.r0..]
                    .iter()
                    .chain(&q[..self.r0])
                    .map(|d| d + &half)
                    .collect()
            }),
        }
    }

    /// `Hom(E, R)` with the dual differential; a factorization of `-w`.
    pub fn dual(&self) -> Self {
        let nvars = self.nvars();
        MatrixFactorization {
            w: -&self.w,
            r0: self.r0,
            r1: self.r1,
            d1: transpose(&self.d0, self.r1, self.r0, nvars),
            d0: negate(&transpose(&self.d1, self.r0, self.r1, nvars)),
            internal_degrees: self
                .internal_degrees
                .as_ref()
                .map(|q| q.iter().map(|d| -d).collect()),
        }
    }

    /// Block-diagonal direct sum.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.w != other.w {
            return Err(Error::PotentialMismatch(
                "direct sum of factorizations of different potentials".into(),
            ));
        }
        let nvars = self.nvars();
        let block =
            |a: &PolyMatrix, b: &PolyMatrix, (ar, ac): (usize, usize), (br, bc): (usize, usize)| {
                let mut m = vec![vec![MultiPoly::zero(nvars); ac + bc]; ar + br];
                for i in 0..ar {
                    for j in 0..ac {
                        m[i][j] = a[i][j].clone();
                    }
                }
                for i in 0..br {
                    for j in 0..bc {
                        m[ar + i][ac + j] = b[i][j].clone();
                    }
                }
                m
            };
        let d1 = block(
            &self.d1,
            &other.d1,
            (self.r0, self.r1),
            (other.r0, other.r1),
        );
        let d0 = block(
            &self.d0,
            &other.d0,
            (self.r1, self.r0),
            (other.r1, other.r0),
        );
        let internal_degrees = match (&self.internal_degrees, &other.internal_degrees) {
            (Some(a), Some(b)) => Some(
                a[..self.r0]
                    .iter()
                    .chain(&b[..other.r0])
                    .chain(&a[self.r0..])
                    .chain(&b[other.r0..])
                    .cloned()
                    .collect(),
            ),
            _ => None,
        };
        Ok(MatrixFactorization {
            w: self.w.clone(),
            r0: self.r0 + other.r0,
            r1: self.r1 + other.r1,
            d1,
            d0,
            internal_degrees,
        })
    }

    /// Move to a ring with `nvars` variables, variable `i` going to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Self {
        let e = |m: &PolyMatrix| -> PolyMatrix {
            m.iter()
                .map(|r| r.iter().map(|p| p.embed(nvars, map)).collect())
                .collect()
        };
        MatrixFactorization {
            w: self.w.embed(nvars, map),
            r0: self.r0,
            r1: self.r1,
            d1: e(&self.d1),
            d0: e(&self.d0),
            internal_degrees: self.internal_degrees.clone(),
        }
    }

    /// Basis degrees `q` with `deg δ_ij + q_i = q_j + 1/2` for every nonzero
    /// entry, where `deg w = 1` under `weights`. Uses the stored degrees when
    /// present (after checking them), otherwise infers them component by
    /// component, anchoring each connected component at an even basis vector
    /// of degree 0 when it has one.
    pub fn internal_degrees(&self, weights: &[Rational]) -> Result<Vec<Rational>> {
        let delta = self.delta();
        let n = self.rank();
        let half = frac(1, 2);
        let mut entry_deg = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                if delta[i][j].is_zero() {
                    continue;
                }
                entry_deg[i][j] = Some(
                    delta[i][j]
                        .weighted_homogeneous_degree(weights)
                        .ok_or_else(|| {
                            Error::NotGradable(format!(
                                "entry ({i},{j}) of the differential is not weighted-homogeneous"
                            ))
                        })?,
                );
            }
        }
        let degrees = match &self.internal_degrees {
            Some(q) => {
                if q.len() != n {
                    return Err(Error::NotGradable(
                        "wrong number of internal degrees".into(),
                    ));
                }
                q.clone()
            }
            None => {
                let mut q: Vec<Option<Rational>> = vec![None; n];
                for start in 0..n {
                    if q[start].is_some() {
                        continue;
                    }
                    q[start] = Some(Rational::zero());
                    let mut queue = VecDeque::from([start]);
                    while let Some(k) = queue.pop_front() {
                        let qk = q[k].clone().unwrap();
                        for other in 0..n {
                            // δ_{k,other}: q_k = q_other + 1/2 - deg
                            if let Some(d) = &entry_deg[k][other] {
                                if q[other].is_none() {
                                    q[other] = Some(&qk - &half + d);
                                    queue.push_back(other);
                                }
                            }
                            if let Some(d) = &entry_deg[other][k] {
                                if q[other].is_none() {
                                    q[other] = Some(&qk + &half - d);
                                    queue.push_back(other);
                                }
                            }
                        }
                    }
                }
                q.into_iter().map(Option::unwrap).collect()
            }
        };
        for i in 0..n {
            for j in 0..n {
                if let Some(d) = &entry_deg[i][j] {
                    if d + &degrees[i] != &degrees[j] + &half {
                        return Err(Error::NotGradable(format!(
                            "entry ({i},{j}) has degree {d}, inconsistent with the basis degrees"
                        )));
                    }
                }
            }
        }
        Ok(degrees)
    }
}

/// Basis of `E ⊗ F` as pairs `(a, b)`, in the order used by
/// [`MatrixFactorization::tensor`], with the number of even elements.
pub fn tensor_basis(
    p: &MatrixFactorization,
    q: &MatrixFactorization,
) -> (Vec<(usize, usize)>, usize) {
    let mut out = Vec::new();
    let mut r0 = 0;
    for (pa, pb) in [(0, 0), (1, 1), (1, 0), (0, 1)] {
        for a in (0..p.rank()).filter(|&a| p.parity(a) == pa) {
            for b in (0..q.rank()).filter(|&b| q.parity(b) == pb) {
                out.push((a, b));
            }
        }
        if pb == 1 && pa == 1 {
            r0 = out.len();
        }
    }
    (out, r0)
}

/// `A ⊗ B` on `P ⊗ Q`: `(A ⊗ B)(e ⊗ f) = (−1)^{|B||e|} Ae ⊗ Bf`, entrywise.
pub fn tensor_morphism(
    p: &MatrixFactorization,
    q: &MatrixFactorization,
    a: &PolyMatrix,
    b: &PolyMatrix,
) -> PolyMatrix {
    let (order, _) = tensor_basis(p, q);
    let nvars = p.nvars();
    order
        .iter()
        .map(|&(i, k)| {
            order
                .iter()
                .map(|&(j, l)| {
                    let prod = &a[i][j] * &b[k][l];
                    if (q.parity(k) + q.parity(l)) * p.parity(j) % 2 == 1 {
                        -prod
                    } else if prod.is_zero() {
                        MultiPoly::zero(nvars)
                    } else {
                        prod
                    }
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn ring() -> Ring {
        Ring::new(&["x", "y", "u", "v"])
    }

    fn p(r: &Ring, s: &str) -> MultiPoly {
        r.parse(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        let r = ring();
        assert!(MatrixFactorization::koszul(&p(&r, "x"), &p(&r, "x^2"))
            .validate()
            .is_ok());
        let xy = p(&r, "x*y");
        let ok = MatrixFactorization::explicit(
            xy.clone(),
            vec![vec![p(&r, "x")]],
            vec![vec![p(&r, "y")]],
        )
        .unwrap();
        assert!(ok.validate().is_ok());
        let bad = MatrixFactorization::explicit(
            xy.clone(),
            vec![vec![p(&r, "x")]],
            vec![vec![p(&r, "x")]],
        )
        .unwrap();
        let v = bad.validate().unwrap_err();
        assert_eq!((v.row, v.col), (0, 0));
        assert_eq!(v.got, p(&r, "x^2"));
        assert_eq!(v.expected, xy);
    }

    #[test]
    fn explicit_shape_errors() {
        let r = ring();
        let e = MatrixFactorization::explicit(
            p(&r, "x*y"),
            vec![vec![p(&r, "x"), p(&r, "y")]],
            vec![vec![p(&r, "y")]],
        );
        assert!(matches!(e, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn koszul_contractible() {
        let r = ring();
        let w = p(&r, "x^3");
        let k = MatrixFactorization::koszul(&MultiPoly::one(4), &w);
        assert_eq!(k.w, w);
        assert!(k.validate().is_ok());
    }

    #[test]
    fn tensor_blocks() {
        let r = ring();
        let a = MatrixFactorization::koszul(&p(&r, "x"), &p(&r, "x"));
        let b = MatrixFactorization::koszul(&p(&r, "y"), &p(&r, "y"));
        let t = a.tensor(&b).unwrap();
        assert_eq!((t.r0, t.r1), (2, 2));
        assert_eq!(t.w, p(&r, "x^2 + y^2"));
        assert!(t.validate().is_ok());
        let k = MatrixFactorization::koszul(&p(&r, "u"), &p(&r, "v"));
        let kn = t.tensor(&k).unwrap();
        assert_eq!(kn.w, p(&r, "x^2 + y^2 + u*v"));
        assert!(kn.validate().is_ok());
    }

    #[test]
    fn shift_and_dual() {
        let r = ring();
        let m = MatrixFactorization::koszul(&p(&r, "x^2"), &p(&r, "x*y"))
            .tensor(&MatrixFactorization::koszul(&p(&r, "u"), &p(&r, "v")))
            .unwrap();
        let s = m.shift();
        assert!(s.validate().is_ok());
        assert_eq!(s.shift(), m);
        let d = m.dual();
        assert_eq!(d.w, -&m.w);
        assert!(d.validate().is_ok());
        let dk = MatrixFactorization::koszul(&p(&r, "x"), &p(&r, "y")).dual();
        assert_eq!(dk.d1, vec![vec![p(&r, "y")]]);
        assert_eq!(dk.d0, vec![vec![p(&r, "-x")]]);
    }

    #[test]
    fn sums() {
        let r = ring();
        let a = MatrixFactorization::koszul(&p(&r, "x"), &p(&r, "x^2"));
        let b = MatrixFactorization::koszul(&p(&r, "x^2"), &p(&r, "x"));
        let s = a.sum(&b).unwrap();
        assert_eq!((s.r0, s.r1), (2, 2));
        assert!(s.validate().is_ok());
        let c = MatrixFactorization::koszul(&p(&r, "x"), &p(&r, "y"));
        assert!(matches!(a.sum(&c), Err(Error::PotentialMismatch(_))));
    }

    #[test]
    fn degrees_inferred() {
        let r = Ring::new(&["x", "y"]);
        let w = r.parse("x^3 + y^3").unwrap();
        let u = w.quasi_homogeneous_weights().unwrap();
        let m = MatrixFactorization::koszul(&r.parse("x").unwrap(), &r.parse("x^2").unwrap())
            .tensor(&MatrixFactorization::koszul(
                &r.parse("y").unwrap(),
                &r.parse("y^2").unwrap(),
            ))
            .unwrap();
        let q = m.internal_degrees(&u).unwrap();
        assert_eq!(q.len(), 4);
        let nonhom =
            MatrixFactorization::koszul(&r.parse("x + x^2").unwrap(), &r.parse("y").unwrap());
        let wu = nonhom.w.quasi_homogeneous_weights();
        assert!(wu.is_none());
        assert!(matches!(
            nonhom.internal_degrees(&u),
            Err(Error::NotGradable(_))
        ));
    }

    #[test]
    fn tensor_morphisms() {
        let r = ring();
        let a = MatrixFactorization::koszul(&p(&r, "x"), &p(&r, "x^2"));
        let b = MatrixFactorization::koszul(&p(&r, "y^2"), &p(&r, "y*u"));
        let t = a.tensor(&b).unwrap();
        let ida = vec![
            vec![MultiPoly::one(4), MultiPoly::zero(4)],
            vec![MultiPoly::zero(4), MultiPoly::one(4)],
        ];
        let idb = ida.clone();
        let d1 = tensor_morphism(&a, &b, &a.delta(), &idb);
        let d2 = tensor_morphism(&a, &b, &ida, &b.delta());
        let sum: PolyMatrix = d1
            .iter()
            .zip(&d2)
            .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
            .collect();
        assert_eq!(sum, t.delta());
        let odd_a = vec![
            vec![MultiPoly::zero(4), MultiPoly::one(4)],
            vec![-p(&r, "x"), MultiPoly::zero(4)],
        ];
        let odd_b = vec![
            vec![MultiPoly::zero(4), p(&r, "y")],
            vec![-p(&r, "u"), MultiPoly::zero(4)],
        ];
        assert!(crate::ext::is_closed(&a, &a, &odd_a));
        assert!(crate::ext::is_closed(&b, &b, &odd_b));
        assert!(crate::ext::is_closed(
            &t,
            &t,
            &tensor_morphism(&a, &b, &odd_a, &odd_b)
        ));
        assert!(crate::ext::is_closed(
            &t,
            &t,
            &tensor_morphism(&a, &b, &odd_a, &idb)
        ));
    }
}
