//! The Hom complex between two matrix factorizations and its Z/2-graded
//! cohomology, computed two ways: by module Gröbner bases over `R`, and by
//! rank-nullity on weighted-degree slices over `Q`.
//!
//! A morphism `f: P → Q` is an `r_Q x r_P` matrix; entry `(i, j)` has parity
//! `p_Q(i) + p_P(j)` and the differential is `D f = δ_Q f − (−1)^{|f|} f δ_P`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleElement, GroebnerBasis, PolyMatrix, TrackedGroebner};
use crate::linalg::{sparse_rank, SparseVec};
use crate::mf::{mat_mul, MatrixFactorization};
use crate::poly::{frac, rat, Monomial, MonomialOrder, MultiPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtMethod {
    Groebner,
    Graded,
}

impl std::fmt::Display for ExtMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExtMethod::Groebner => "groebner",
            ExtMethod::Graded => "graded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtResult {
    pub dim_even: usize,
    pub dim_odd: usize,
    pub euler: i64,
    pub method: ExtMethod,
}

impl ExtResult {
    fn new(dim_even: usize, dim_odd: usize, method: ExtMethod) -> Self {
        ExtResult {
            dim_even,
            dim_odd,
            euler: dim_even as i64 - dim_odd as i64,
            method,
        }
    }
}

/// `Hom(P, Q)` as two free modules with `D_even: even → odd`, `D_odd: odd → even`.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub p: MatrixFactorization,
    pub q: MatrixFactorization,
    /// Matrix positions `(i, j)` of each parity, `i` major.
    pub positions: [Vec<(usize, usize)>; 2],
    /// `d[e]` has rows indexed by `positions[1 - e]`, columns by `positions[e]`.
    pub d: [PolyMatrix; 2],
}

/// Parity of entry `(i, j)` of a morphism `P → Q`.
fn entry_parity(p: &MatrixFactorization, q: &MatrixFactorization, i: usize, j: usize) -> usize {
    ((q.parity(i) + p.parity(j)) % 2) as usize
}

/// Differential of an arbitrary (not necessarily homogeneous) morphism.
pub fn hom_differential(
    p: &MatrixFactorization,
    q: &MatrixFactorization,
    f: &PolyMatrix,
) -> PolyMatrix {
    let nvars = p.nvars();
    let (rp, rq) = (p.rank(), q.rank());
    let mut out = vec![vec![MultiPoly::zero(nvars); rp]; rq];
    for e in 0..2 {
        let part = parity_part(p, q, f, e);
        let left = mat_mul(&q.delta(), &part, rq, rp, nvars);
        let right = mat_mul(&part, &p.delta(), rp, rp, nvars);
        for i in 0..rq {
            for j in 0..rp {
                out[i][j] += &left[i][j];
                if e == 0 {
                    out[i][j] -= &right[i][j];
                } else {
                    out[i][j] += &right[i][j];
                }
            }
        }
    }
    out
}

/// Entries of `f` of parity `e`, the rest zeroed.
pub fn parity_part(
    p: &MatrixFactorization,
    q: &MatrixFactorization,
    f: &PolyMatrix,
    e: usize,
) -> PolyMatrix {
    let nvars = p.nvars();
    (0..q.rank())
        .map(|i| {
            (0..p.rank())
                .map(|j| {
                    if entry_parity(p, q, i, j) == e {
                        f[i][j].clone()
                    } else {
                        MultiPoly::zero(nvars)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn is_closed(p: &MatrixFactorization, q: &MatrixFactorization, f: &PolyMatrix) -> bool {
    hom_differential(p, q, f)
        .iter()
        .flatten()
        .all(MultiPoly::is_zero)
}

impl HomComplex {
    pub fn new(p: &MatrixFactorization, q: &MatrixFactorization) -> Result<Self> {
        if p.w != q.w {
            return Err(Error::PotentialMismatch(
                "Hom between factorizations of different potentials".into(),
            ));
        }
        let nvars = p.nvars();
        let mut positions: [Vec<(usize, usize)>; 2] = [Vec::new(), Vec::new()];
        for i in 0..q.rank() {
            for j in 0..p.rank() {
                positions[entry_parity(p, q, i, j)].push((i, j));
            }
        }
        let index: [HashMap<(usize, usize), usize>; 2] = [0, 1].map(|e| {
            positions[e]
                .iter()
                .enumerate()
                .map(|(k, &ij)| (ij, k))
                .collect()
        });
        let (dp, dq) = (p.delta(), q.delta());
        let d = [0usize, 1].map(|e| {
            let mut m =
                vec![vec![MultiPoly::zero(nvars); positions[e].len()]; positions[1 - e].len()];
            for (col, &(i, j)) in positions[e].iter().enumerate() {
                // δ_Q E_ij = Σ_k δQ[k][i] E_kj
                for k in 0..q.rank() {
                    if !dq[k][i].is_zero() {
                        m[index[1 - e][&(k, j)]][col] += &dq[k][i];
                    }
                }
                // E_ij δ_P = Σ_l δP[j][l] E_il
                for l in 0..p.rank() {
                    if !dp[j][l].is_zero() {
                        let row = index[1 - e][&(i, l)];
                        if e == 0 {
                            m[row][col] -= &dp[j][l];
                        } else {
                            m[row][col] += &dp[j][l];
                        }
                    }
                }
            }
            m
        });
        let h = HomComplex {
            p: p.clone(),
            q: q.clone(),
            positions,
            d,
        };
        if !h.is_complex() {
            return Err(Error::Precondition(
                "Hom differential does not square to zero".into(),
            ));
        }
        Ok(h)
    }

    pub fn nvars(&self) -> usize {
        self.p.nvars()
    }

    pub fn even_rank(&self) -> usize {
        self.positions[0].len()
    }

    pub fn odd_rank(&self) -> usize {
        self.positions[1].len()
    }

    /// `D_odd D_even = 0` and `D_even D_odd = 0`.
    pub fn is_complex(&self) -> bool {
        let nvars = self.nvars();
        (0..2).all(|e| {
            let prod = mat_mul(
                &self.d[1 - e],
                &self.d[e],
                self.positions[1 - e].len(),
                self.positions[e].len(),
                nvars,
            );
            prod.iter().flatten().all(MultiPoly::is_zero)
        })
    }

    /// Flatten the parity-`e` part of a morphism matrix.
    pub fn to_vector(&self, f: &PolyMatrix, e: usize) -> FreeModuleElement {
        FreeModuleElement(
            self.positions[e]
                .iter()
                .map(|&(i, j)| f[i][j].clone())
                .collect(),
        )
    }

    pub fn to_matrix(&self, v: &FreeModuleElement, e: usize) -> PolyMatrix {
        let nvars = self.nvars();
        let mut m = vec![vec![MultiPoly::zero(nvars); self.p.rank()]; self.q.rank()];
        for (&(i, j), c) in self.positions[e].iter().zip(&v.0) {
            m[i][j] = c.clone();
        }
        m
    }

    fn columns(&self, e: usize) -> Vec<FreeModuleElement> {
        let nrows = self.positions[1 - e].len();
        (0..self.positions[e].len())
            .map(|j| FreeModuleElement((0..nrows).map(|i| self.d[e][i][j].clone()).collect()))
            .collect()
    }
}

/// Cohomology of one parity, presented as a quotient of the free module on
/// kernel generators.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub parity: usize,
    /// Generators `k_j` of `ker D_e`, with tracking for expressing cocycles.
    kernel: TrackedGroebner,
    kernel_gens: Vec<FreeModuleElement>,
    /// Gröbner basis of the relations among the `k_j` plus the image of `D_{1-e}`.
    relations: GroebnerBasis,
    /// Basis of `H_e`: standard monomials `m e_j`, representing `m k_j`.
    standard: Vec<(usize, Monomial)>,
}

impl ExtSpace {
    fn compute(h: &HomComplex, e: usize) -> Result<Self> {
        let nvars = h.nvars();
        let order = MonomialOrder::DegRevLex;
        let rank = h.positions[e].len();
        let target = h.positions[1 - e].len();
        let kernel_gens: Vec<FreeModuleElement> = if target == 0 {
            (0..rank)
                .map(|j| FreeModuleElement::unit(rank, nvars, j))
                .collect()
        } else {
            TrackedGroebner::compute(target, nvars, &h.columns(e), &order)?.syzygies
        };
        let kernel = TrackedGroebner::compute(rank, nvars, &kernel_gens, &order)?;
        let s = kernel_gens.len();
        let mut rels = kernel.syzygies.clone();
        for col in h.columns(1 - e) {
            if col.is_zero() {
                continue;
            }
            let v = kernel
                .express(&col)?
                .ok_or_else(|| Error::Precondition("image of D is not inside its kernel".into()))?;
            rels.push(v);
        }
        let relations = GroebnerBasis::compute(s, nvars, &rels, &order)?;
        let standard = relations
            .standard_monomials()
            .ok_or(Error::InfiniteDimensional)?;
        Ok(ExtSpace {
            parity: e,
            kernel,
            kernel_gens,
            relations,
            standard,
        })
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    /// Cocycle vectors (in the flattened parity-`e` module) spanning `H_e`.
    pub fn representatives(&self) -> Vec<FreeModuleElement> {
        self.standard
            .iter()
            .map(|(j, m)| {
                let poly = MultiPoly::term(m.clone(), Rational::one());
                self.kernel_gens[*j].mul_poly(&poly)
            })
            .collect()
    }

    /// Coordinates of the class of the cocycle `z` in the basis
    /// [`ExtSpace::representatives`].
    pub fn coordinates(&self, z: &FreeModuleElement) -> Result<Vec<Rational>> {
        let v = self
            .kernel
            .express(z)?
            .ok_or_else(|| Error::NotClosed("element is not a cocycle".into()))?;
        let nf = if self.relations.is_empty() {
            v
        } else {
            self.relations.normal_form(&v)
        };
        Ok(self
            .standard
            .iter()
            .map(|(j, m)| nf.0[*j].coeff(m))
            .collect())
    }
}

/// Explicit bases of `H_even` and `H_odd` with coordinate functionals.
#[derive(Clone, Debug)]
pub struct ExtBasis {
    pub hom: HomComplex,
    pub spaces: [ExtSpace; 2],
}

impl ExtBasis {
    pub fn compute(h: &HomComplex) -> Result<Self> {
        Ok(ExtBasis {
            hom: h.clone(),
            spaces: [ExtSpace::compute(h, 0)?, ExtSpace::compute(h, 1)?],
        })
    }

    pub fn dims(&self) -> ExtResult {
        ExtResult::new(
            self.spaces[0].dim(),
            self.spaces[1].dim(),
            ExtMethod::Groebner,
        )
    }

    /// Representative morphism matrices of parity `e`.
    pub fn representatives(&self, e: usize) -> Vec<PolyMatrix> {
        self.spaces[e]
            .representatives()
            .iter()
            .map(|v| self.hom.to_matrix(v, e))
            .collect()
    }

    /// Coordinates of a homogeneous cocycle of parity `e`.
    pub fn coordinates(&self, z: &PolyMatrix, e: usize) -> Result<Vec<Rational>> {
        let other = parity_part(&self.hom.p, &self.hom.q, z, 1 - e);
        if other.iter().flatten().any(|c| !c.is_zero()) {
            return Err(Error::Precondition(format!(
                "morphism is not homogeneous of parity {e}"
            )));
        }
        self.spaces[e].coordinates(&self.hom.to_vector(z, e))
    }
}

pub fn ext_dims_groebner(h: &HomComplex) -> Result<ExtResult> {
    Ok(ExtResult::new(
        ExtSpace::compute(h, 0)?.dim(),
        ExtSpace::compute(h, 1)?.dim(),
        ExtMethod::Groebner,
    ))
}

pub fn euler_char(p: &MatrixFactorization, q: &MatrixFactorization) -> Result<i64> {
    Ok(ext_dims_groebner(&HomComplex::new(p, q)?)?.euler)
}

/// Monomials in `nvars` variables of weighted degree exactly `d`.
fn monomials_of_degree(weights: &[Rational], d: &Rational) -> Vec<Monomial> {
    fn rec(
        weights: &[Rational],
        i: usize,
        left: &Rational,
        exps: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if i == weights.len() {
            if left.is_zero() {
                out.push(Monomial::from_exponents(exps));
            }
            return;
        }
        let mut rest = left.clone();
        let mut e = 0;
        while rest >= Rational::zero() {
            exps[i] = e;
            rec(weights, i + 1, &rest, exps, out);
            rest -= &weights[i];
            e += 1;
        }
        exps[i] = 0;
    }
    let mut out = Vec::new();
    if *d >= Rational::zero() {
        rec(weights, 0, d, &mut vec![0; weights.len()], &mut out);
    }
    out
}

struct GradedHom<'a> {
    weights: &'a [Rational],
    /// Degree of each generator `E_ij`, per parity.
    gen_deg: [Vec<Rational>; 2],
    /// Nonzero entries `(row, entry)` of each column of `D_e`.
    columns: [Vec<Vec<(usize, MultiPoly)>>; 2],
    ranks: HashMap<(usize, Rational), usize>,
    slices: HashMap<(usize, Rational), Rc<Vec<(usize, Monomial)>>>,
}

impl GradedHom<'_> {
    fn slice(&mut self, e: usize, t: &Rational) -> Rc<Vec<(usize, Monomial)>> {
        if let Some(s) = self.slices.get(&(e, t.clone())) {
            return s.clone();
        }
        let mut out = Vec::new();
        for (k, g) in self.gen_deg[e].iter().enumerate() {
            for m in monomials_of_degree(self.weights, &(t - g)) {
                out.push((k, m));
            }
        }
        let out = Rc::new(out);
        self.slices.insert((e, t.clone()), out.clone());
        out
    }

    /// Rank of `D_e` restricted to the degree-`t` slice of the parity-`e` module.
    fn rank(&mut self, e: usize, t: &Rational) -> usize {
        if let Some(&r) = self.ranks.get(&(e, t.clone())) {
            return r;
        }
        let src = self.slice(e, t);
        let dst = self.slice(1 - e, &(t + frac(1, 2)));
        let index: HashMap<&(usize, Monomial), usize> =
            dst.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let rows = src.iter().map(|(k, mono)| {
            let mut v: BTreeMap<usize, Rational> = BTreeMap::new();
            for (row_pos, entry) in &self.columns[e][*k] {
                for (tm, c) in entry.terms() {
                    *v.entry(index[&(*row_pos, tm.mul(mono))])
                        .or_insert_with(Rational::zero) += c;
                }
            }
            v.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect::<SparseVec>()
        });
        let r = sparse_rank(rows);
        self.ranks.insert((e, t.clone()), r);
        r
    }

    fn cohomology(&mut self, e: usize, t: &Rational) -> usize {
        let dim = self.slice(e, t).len();
        let half = frac(1, 2);
        dim - self.rank(e, t) - self.rank(1 - e, &(t - &half))
    }

    /// All degrees `t` in `(lo, hi]` where the parity-`e` module is nonzero.
    fn degrees(&self, e: usize, lo: &Rational, hi: &Rational) -> BTreeSet<Rational> {
        let mut out = BTreeSet::new();
        for g in &self.gen_deg[e] {
            let bound = hi - g;
            let mut reach = BTreeSet::from([Rational::zero()]);
            for u in self.weights {
                let mut next = BTreeSet::new();
                for d in &reach {
                    let mut x = d.clone();
                    while x <= bound {
                        next.insert(x.clone());
                        x += u;
                    }
                }
                reach = next;
            }
            out.extend(reach.into_iter().map(|d| g + d).filter(|t| t > lo));
        }
        out
    }
}

/// Dimensions by rank-nullity on weighted-degree slices. Requires positive
/// weights with `deg w = 1` and homogeneous differentials.
pub fn ext_dims_graded(h: &HomComplex, weights: &[Rational]) -> Result<ExtResult> {
    if weights.len() != h.nvars() || weights.iter().any(|u| *u <= Rational::zero()) {
        return Err(Error::NotGradable(
            "weights must be positive, one per variable".into(),
        ));
    }
    if h.p.w.weighted_homogeneous_degree(weights) != Some(Rational::one()) {
        return Err(Error::NotGradable("w is not of weighted degree 1".into()));
    }
    let qp = h.p.internal_degrees(weights)?;
    let qq = h.q.internal_degrees(weights)?;
    let gen_deg = [0, 1].map(|e| {
        h.positions[e]
            .iter()
            .map(|&(i, j)| &qq[i] - &qp[j])
            .collect::<Vec<_>>()
    });
    let all_gens = || gen_deg.iter().flatten();
    if all_gens().next().is_none() {
        return Ok(ExtResult::new(0, 0, ExtMethod::Graded));
    }
    let max_entry = [&h.p, &h.q]
        .iter()
        .flat_map(|m| m.delta().into_iter().flatten())
        .filter_map(|c| c.weighted_homogeneous_degree(weights))
        .max()
        .unwrap_or_else(Rational::zero);
    let socle: Rational = weights.iter().map(|u| rat(1) - u * rat(2)).sum();
    let lo = all_gens().min().unwrap() - rat(1);
    let mut hi = all_gens().max().unwrap() + &socle + &max_entry + rat(1);

    let mut g = GradedHom {
        weights,
        gen_deg,
        columns: [0, 1].map(|e| {
            (0..h.positions[e].len())
                .map(|k| {
                    h.d[e]
                        .iter()
                        .enumerate()
                        .filter(|(_, row)| !row[k].is_zero())
                        .map(|(r, row)| (r, row[k].clone()))
                        .collect()
                })
                .collect()
        }),
        ranks: HashMap::new(),
        slices: HashMap::new(),
    };
    let mut dims = [0usize; 2];
    for (e, dim) in dims.iter_mut().enumerate() {
        for t in g.degrees(e, &lo, &hi) {
            *dim += g.cohomology(e, &t);
        }
    }
    // guard: the next unit window must be acyclic
    for _ in 0..32 {
        let next = &hi + rat(1);
        let mut extra = [0usize; 2];
        for (e, x) in extra.iter_mut().enumerate() {
            for t in g.degrees(e, &hi, &next) {
                *x += g.cohomology(e, &t);
            }
        }
        hi = next;
        if extra == [0, 0] {
            return Ok(ExtResult::new(dims[0], dims[1], ExtMethod::Graded));
        }
        dims[0] += extra[0];
        dims[1] += extra[1];
    }
    Err(Error::NotGradable(
        "slice cohomology did not stabilise".into(),
    ))
}

/// Supertrace of `c ↦ (−1)^{|α||c|} β∘c∘α` on `Ext(P, Q)`.
pub fn cardy_lhs(basis: &ExtBasis, alpha: &PolyMatrix, beta: &PolyMatrix) -> Result<Rational> {
    let (p, q) = (&basis.hom.p, &basis.hom.q);
    if !is_closed(p, p, alpha) {
        return Err(Error::NotClosed("alpha is not a cocycle in End(P)".into()));
    }
    if !is_closed(q, q, beta) {
        return Err(Error::NotClosed("beta is not a cocycle in End(Q)".into()));
    }
    let nvars = p.nvars();
    let (rp, rq) = (p.rank(), q.rank());
    let alphas = [parity_part(p, p, alpha, 0), parity_part(p, p, alpha, 1)];
    let mut total = Rational::zero();
    for e in 0..2 {
        for (k, c) in basis.representatives(e).iter().enumerate() {
            let mut image = vec![vec![MultiPoly::zero(nvars); rp]; rq];
            for (a, alpha_a) in alphas.iter().enumerate() {
                let bc = mat_mul(beta, c, rq, rp, nvars);
                let bca = mat_mul(&bc, alpha_a, rp, rp, nvars);
                let negate = a * e % 2 == 1;
                for i in 0..rq {
                    for j in 0..rp {
                        if negate {
                            image[i][j] -= &bca[i][j];
                        } else {
                            image[i][j] += &bca[i][j];
                        }
                    }
                }
            }
            let same = parity_part(p, q, &image, e);
            let coords = basis.coordinates(&same, e)?;
            if e == 0 {
                total += &coords[k];
            } else {
                total -= &coords[k];
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn setup(vars: &[&str]) -> Ring {
        Ring::new(vars)
    }

    fn kz(r: &Ring, a: &str, b: &str) -> MatrixFactorization {
        MatrixFactorization::koszul(&r.parse(a).unwrap(), &r.parse(b).unwrap())
    }

    fn both(h: &HomComplex) -> (ExtResult, ExtResult) {
        let u = h.p.w.quasi_homogeneous_weights().unwrap();
        (
            ext_dims_groebner(h).unwrap(),
            ext_dims_graded(h, &u).unwrap(),
        )
    }

    fn dims(r: &ExtResult) -> (usize, usize) {
        (r.dim_even, r.dim_odd)
    }

    #[test]
    fn complex_shapes() {
        let r = setup(&["x", "y"]);
        let p = kz(&r, "x", "y");
        let h = HomComplex::new(&p, &p).unwrap();
        assert_eq!((h.even_rank(), h.odd_rank()), (2, 2));
        assert!(h.is_complex());
        let t = p.tensor(&kz(&r, "y", "x")).unwrap();
        let h2 = HomComplex::new(&t, &p.tensor(&p).unwrap()).unwrap();
        assert_eq!(h2.even_rank(), 2 * 2 + 2 * 2);
        assert!(HomComplex::new(&p, &kz(&r, "x", "x")).is_err());
    }

    #[test]
    fn ext_examples() {
        let r = setup(&["x", "y"]);
        let p = kz(&r, "x", "y");
        let (g, gr) = both(&HomComplex::new(&p, &p).unwrap());
        assert_eq!(dims(&g), (1, 0));
        assert_eq!(dims(&gr), (1, 0));

        let r1 = setup(&["x"]);
        let p = kz(&r1, "x", "x");
        let (g, gr) = both(&HomComplex::new(&p, &p).unwrap());
        assert_eq!(dims(&g), (1, 1));
        assert_eq!(dims(&gr), (1, 1));

        let p = kz(&r1, "x", "x^2");
        let (g, gr) = both(&HomComplex::new(&p, &p).unwrap());
        assert_eq!(g.euler, 0);
        assert_eq!(dims(&g), dims(&gr));
    }

    #[test]
    fn contractible_is_acyclic() {
        let r = setup(&["x"]);
        let c = kz(&r, "1", "x^3");
        let p = kz(&r, "x", "x^2");
        for h in [
            HomComplex::new(&c, &p).unwrap(),
            HomComplex::new(&p, &c).unwrap(),
        ] {
            let (g, gr) = both(&h);
            assert_eq!(dims(&g), (0, 0));
            assert_eq!(dims(&gr), (0, 0));
        }
    }

    #[test]
    fn bases_and_coordinates() {
        let r = setup(&["x", "y"]);
        let p = kz(&r, "x", "y");
        let b = ExtBasis::compute(&HomComplex::new(&p, &p).unwrap()).unwrap();
        assert_eq!(b.spaces[0].dim(), 1);
        let id = vec![
            vec![MultiPoly::one(2), MultiPoly::zero(2)],
            vec![MultiPoly::zero(2), MultiPoly::one(2)],
        ];
        assert_eq!(b.coordinates(&id, 0).unwrap(), vec![rat(1)]);

        let r1 = setup(&["x"]);
        let p = kz(&r1, "x", "x");
        let b = ExtBasis::compute(&HomComplex::new(&p, &p).unwrap()).unwrap();
        let odd = vec![
            vec![MultiPoly::zero(1), MultiPoly::one(1)],
            vec![-MultiPoly::one(1), MultiPoly::zero(1)],
        ];
        assert!(is_closed(&p, &p, &odd));
        let c = b.coordinates(&odd, 1).unwrap();
        assert_eq!(c.len(), 1);
        assert!(!c[0].is_zero());
        for rep in b.representatives(1) {
            assert!(is_closed(&p, &p, &rep));
        }
    }

    #[test]
    fn cardy_identity_is_euler() {
        let r = setup(&["x", "y"]);
        let p = kz(&r, "x", "y");
        let b = ExtBasis::compute(&HomComplex::new(&p, &p).unwrap()).unwrap();
        let id = vec![
            vec![MultiPoly::one(2), MultiPoly::zero(2)],
            vec![MultiPoly::zero(2), MultiPoly::one(2)],
        ];
        assert_eq!(cardy_lhs(&b, &id, &id).unwrap(), rat(1));
        let not_closed = vec![
            vec![MultiPoly::zero(2), MultiPoly::one(2)],
            vec![MultiPoly::zero(2), MultiPoly::zero(2)],
        ];
        assert!(matches!(
            cardy_lhs(&b, &not_closed, &id),
            Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn cardy_odd_class_on_x4() {
        // P = koszul(x^2, x^2): α = [[0,1],[-1,0]] is closed and odd.
        let r = setup(&["x"]);
        let p = kz(&r, "x^2", "x^2");
        let b = ExtBasis::compute(&HomComplex::new(&p, &p).unwrap()).unwrap();
        assert_eq!(dims(&b.dims()), (2, 2));
        let a = vec![
            vec![MultiPoly::zero(1), MultiPoly::one(1)],
            vec![-MultiPoly::one(1), MultiPoly::zero(1)],
        ];
        assert_eq!(cardy_lhs(&b, &a, &a).unwrap(), rat(-4));
    }
}
