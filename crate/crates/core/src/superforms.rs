//! Polynomial differential forms and Z/2-graded matrices over them.
//!
//! A [`SuperMatrixForm`] is an element of `Ω ⊗ End(E)` with `E = E_0 ⊕ E_1`.
//! Basis indices `< r0` are even, the rest odd. Multiplication follows the
//! Koszul rule
//!
//! ```text
//! (dx_I ⊗ A)(dx_J ⊗ B) = (-1)^{|A||J|} dx_I ∧ dx_J ⊗ AB
//! ```
//!
//! applied entrywise: the elementary matrix `E_ij` has parity `p(i) + p(j)`.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::groebner::PolyMatrix;
use crate::poly::{rat, MultiPoly, Rational};

/// Subset `I ⊆ {0..n-1}` of form indices, as a bit mask.
pub type FormIndex = u32;

/// Sign of `dx_I ∧ dx_J` relative to `dx_{I ∪ J}`, or `None` when they overlap.
pub fn wedge_sign(i: FormIndex, j: FormIndex) -> Option<i32> {
    if i & j != 0 {
        return None;
    }
    let mut swaps = 0u32;
    let mut rest = j;
    while rest != 0 {
        let b = rest.trailing_zeros();
        // elements of I that must move past dx_b
        swaps += (i >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

/// `Σ_I f_I dx_I` with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormPoly {
    nvars: usize,
    terms: BTreeMap<FormIndex, MultiPoly>,
}

impl FormPoly {
    pub fn zero(nvars: usize) -> Self {
        FormPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self::monomial(0, p)
    }

    pub fn monomial(index: FormIndex, p: MultiPoly) -> Self {
        let mut f = FormPoly::zero(p.nvars());
        f.add_term(index, &p);
        f
    }

    /// `dx_i`
    pub fn dx(nvars: usize, i: usize) -> Self {
        Self::monomial(1 << i, MultiPoly::one(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormIndex, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, index: FormIndex) -> MultiPoly {
        self.terms
            .get(&index)
            .cloned()
            .unwrap_or_else(|| MultiPoly::zero(self.nvars))
    }

    /// Coefficient of `dx_1 ∧ … ∧ dx_n`.
    pub fn top_coeff(&self) -> MultiPoly {
        self.coeff(top_index(self.nvars))
    }

    pub fn add_term(&mut self, index: FormIndex, p: &MultiPoly) {
        if p.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(index)
            .or_insert_with(|| MultiPoly::zero(p.nvars()));
        *e += p;
        if e.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|i| i.count_ones()).min()
    }

    /// Parity of a homogeneous form, `None` if mixed or zero.
    pub fn parity(&self) -> Option<u32> {
        let mut ps = self.terms.keys().map(|i| i.count_ones() % 2);
        let first = ps.next()?;
        ps.all(|p| p == first).then_some(first)
    }

    pub fn scale(&self, c: &Rational) -> FormPoly {
        let mut out = FormPoly::zero(self.nvars);
        for (i, p) in &self.terms {
            out.add_term(*i, &p.scale(c));
        }
        out
    }

    pub fn wedge(&self, other: &FormPoly) -> FormPoly {
        let mut out = FormPoly::zero(self.nvars);
        for (i, p) in &self.terms {
            for (j, q) in &other.terms {
                if let Some(s) = wedge_sign(*i, *j) {
                    let pq = p * q;
                    out.add_term(i | j, &if s > 0 { pq } else { -pq });
                }
            }
        }
        out
    }

    /// Exterior derivative.
    pub fn d(&self) -> FormPoly {
        let mut out = FormPoly::zero(self.nvars);
        for (i, p) in &self.terms {
            for k in 0..self.nvars {
                let dp = p.partial_derivative(k).expect("in range");
                if dp.is_zero() {
                    continue;
                }
                if let Some(s) = wedge_sign(1 << k, *i) {
                    out.add_term(i | (1 << k), &if s > 0 { dp } else { -dp });
                }
            }
        }
        out
    }
}

pub fn top_index(nvars: usize) -> FormIndex {
    if nvars == 0 {
        0
    } else {
        (1u32 << nvars) - 1
    }
}

impl Add for &FormPoly {
    type Output = FormPoly;
    fn add(self, rhs: &FormPoly) -> FormPoly {
        let mut out = self.clone();
        for (i, p) in &rhs.terms {
            out.add_term(*i, p);
        }
        out
    }
}

impl Neg for &FormPoly {
    type Output = FormPoly;
    fn neg(self) -> FormPoly {
        self.scale(&rat(-1))
    }
}

impl Sub for &FormPoly {
    type Output = FormPoly;
    fn sub(self, rhs: &FormPoly) -> FormPoly {
        self + &(-rhs)
    }
}

/// Square matrix of forms on `E_0 ⊕ E_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrixForm {
    nvars: usize,
    r0: usize,
    r1: usize,
    entries: Vec<FormPoly>,
}

impl SuperMatrixForm {
    pub fn zero(nvars: usize, r0: usize, r1: usize) -> Self {
        let r = r0 + r1;
        SuperMatrixForm {
            nvars,
            r0,
            r1,
            entries: vec![FormPoly::zero(nvars); r * r],
        }
    }

    pub fn identity(nvars: usize, r0: usize, r1: usize) -> Self {
        let mut m = Self::zero(nvars, r0, r1);
        for i in 0..r0 + r1 {
            m.entries[i * (r0 + r1) + i] = FormPoly::from_poly(MultiPoly::one(nvars));
        }
        m
    }

    /// Degree-0 forms from a full `(r0+r1) x (r0+r1)` polynomial matrix.
    pub fn from_poly_matrix(m: &PolyMatrix, nvars: usize, r0: usize, r1: usize) -> Self {
        let mut out = Self::zero(nvars, r0, r1);
        for (i, row) in m.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                out.set(i, j, FormPoly::from_poly(p.clone()));
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.r0 + self.r1
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.r0, self.r1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn index_parity(&self, i: usize) -> u32 {
        u32::from(i >= self.r0)
    }

    pub fn get(&self, i: usize, j: usize) -> &FormPoly {
        &self.entries[i * self.size() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, f: FormPoly) {
        let n = self.size();
        self.entries[i * n + j] = f;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FormPoly::is_zero)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.r0 != other.r0 || self.r1 != other.r1 {
            return Err(Error::ShapeMismatch(format!(
                "{}|{} vs {}|{}",
                self.r0, self.r1, other.r0, other.r1
            )));
        }
        Ok(())
    }

    /// Total parity (form degree + endomorphism parity) of a homogeneous
    /// element; `None` if mixed or zero.
    pub fn parity(&self) -> Option<u32> {
        let n = self.size();
        let mut found = None;
        for i in 0..n {
            for j in 0..n {
                for (idx, _) in self.get(i, j).terms() {
                    let p = (idx.count_ones() + self.index_parity(i) + self.index_parity(j)) % 2;
                    match found {
                        None => found = Some(p),
                        Some(q) if q != p => return None,
                        _ => {}
                    }
                }
            }
        }
        found
    }

    /// The component of total parity `p`.
    pub fn parity_part(&self, p: u32) -> SuperMatrixForm {
        let n = self.size();
        let mut out = Self::zero(self.nvars, self.r0, self.r1);
        for i in 0..n {
            for j in 0..n {
                let mut f = FormPoly::zero(self.nvars);
                for (idx, c) in self.get(i, j).terms() {
                    if (idx.count_ones() + self.index_parity(i) + self.index_parity(j)) % 2 == p {
                        f.add_term(*idx, c);
                    }
                }
                out.set(i, j, f);
            }
        }
        out
    }

    pub fn min_form_degree(&self) -> Option<u32> {
        self.entries.iter().filter_map(FormPoly::min_degree).min()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(SuperMatrixForm {
            nvars: self.nvars,
            r0: self.r0,
            r1: self.r1,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SuperMatrixForm {
            nvars: self.nvars,
            r0: self.r0,
            r1: self.r1,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Product in `Ω ⊗ End(E)` with the Koszul sign rule.
    pub fn wedge_mul(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let n = self.size();
        let mut out = Self::zero(self.nvars, self.r0, self.r1);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                let endo_parity = self.index_parity(i) + self.index_parity(j);
                for k in 0..n {
                    let b = other.get(j, k);
                    if b.is_zero() {
                        continue;
                    }
                    let mut acc = out.get(i, k).clone();
                    for (ia, pa) in a.terms() {
                        for (jb, pb) in b.terms() {
                            let Some(s) = wedge_sign(*ia, *jb) else {
                                continue;
                            };
                            let koszul = if (endo_parity * jb.count_ones()) % 2 == 0 {
                                1
                            } else {
                                -1
                            };
                            let prod = pa * pb;
                            acc.add_term(ia | jb, &if s * koszul > 0 { prod } else { -prod });
                        }
                    }
                    out.set(i, k, acc);
                }
            }
        }
        Ok(out)
    }

    /// `Σ_i (-1)^{p(i)} m_ii`.
    pub fn supertrace(&self) -> FormPoly {
        let mut out = FormPoly::zero(self.nvars);
        for i in 0..self.size() {
            let e = self.get(i, i);
            out = if self.index_parity(i) == 0 {
                &out + e
            } else {
                &out - e
            };
        }
        out
    }

    /// `Σ_{p=0}^{n} m^p / p!`; requires every entry to have positive form degree.
    pub fn exp_truncated(&self) -> Result<Self> {
        if self.entries.iter().any(|e| !e.coeff(0).is_zero()) {
            return Err(Error::Precondition(
                "exponential needs a nilpotent argument (no degree-0 part)".into(),
            ));
        }
        let mut out = Self::identity(self.nvars, self.r0, self.r1);
        let mut power = out.clone();
        let mut fact = Rational::from_integer(1.into());
        for p in 1..=self.nvars {
            power = power.wedge_mul(self)?;
            if power.is_zero() {
                break;
            }
            fact *= rat(p as i64);
            out = out.add(&power.scale(&fact.recip()))?;
        }
        Ok(out)
    }
}

/// Entrywise exterior derivative of a polynomial matrix:
/// `m_ij ↦ Σ_k ∂_k(m_ij) dx_k`.
pub fn entrywise_d(m: &PolyMatrix, nvars: usize, r0: usize, r1: usize) -> SuperMatrixForm {
    let mut out = SuperMatrixForm::zero(nvars, r0, r1);
    for (i, row) in m.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            out.set(i, j, FormPoly::from_poly(p.clone()).d());
        }
    }
    out
}

/// `a b - (-1)^{|a||b|} b a` for homogeneous `a`, `b`.
pub fn supercommutator(a: &SuperMatrixForm, b: &SuperMatrixForm) -> Result<SuperMatrixForm> {
    let ab = a.wedge_mul(b)?;
    let ba = b.wedge_mul(a)?;
    let sign = match (a.parity(), b.parity()) {
        (Some(1), Some(1)) => -1,
        _ => 1,
    };
    ab.sub(&ba.scale(&rat(sign)))
}
