//! Gröbner bases for submodules of free modules `R^r`, `R = Q[x_1..x_n]`.
//!
//! Module terms are compared position-over-term: the lower position wins,
//! then the ambient [`MonomialOrder`] decides. Ideals are the rank-1 case.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Rational};

/// Element of a free module `R^r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeModuleElement(pub Vec<MultiPoly>);

/// Leading term of a module element: `coeff * mono * e_pos`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadTerm {
    pub pos: usize,
    pub mono: Monomial,
    pub coeff: Rational,
}

impl FreeModuleElement {
    pub fn zero(rank: usize, nvars: usize) -> Self {
        FreeModuleElement(vec![MultiPoly::zero(nvars); rank])
    }

    pub fn unit(rank: usize, nvars: usize, pos: usize) -> Self {
        let mut v = Self::zero(rank, nvars);
        v.0[pos] = MultiPoly::one(nvars);
        v
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        FreeModuleElement(vec![p])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(MultiPoly::is_zero)
    }

    pub fn lead(&self, order: &MonomialOrder) -> Option<LeadTerm> {
        self.0.iter().enumerate().find_map(|(pos, p)| {
            p.leading_term(order).map(|(m, c)| LeadTerm {
                pos,
                mono: m.clone(),
                coeff: c.clone(),
            })
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FreeModuleElement(self.0.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul_poly(&self, f: &MultiPoly) -> Self {
        FreeModuleElement(self.0.iter().map(|p| p * f).collect())
    }

    /// `self += c * m * other`
    pub fn add_scaled_shifted(&mut self, other: &FreeModuleElement, m: &Monomial, c: &Rational) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            a.add_scaled_shifted(b, m, c);
        }
    }

    pub fn add(&self, other: &FreeModuleElement) -> Self {
        FreeModuleElement(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &FreeModuleElement) -> Self {
        FreeModuleElement(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn make_monic(&mut self, order: &MonomialOrder) {
        if let Some(lt) = self.lead(order) {
            if !lt.coeff.is_one() {
                *self = self.scale(&lt.coeff.recip());
            }
        }
    }
}

impl fmt::Display for FreeModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} components)", self.0.len())
    }
}

/// A polynomial matrix as a list of rows.
pub type PolyMatrix = Vec<Vec<MultiPoly>>;

/// Columns of a polynomial matrix as module elements.
pub fn columns(m: &PolyMatrix, ncols: usize) -> Vec<FreeModuleElement> {
    (0..ncols)
        .map(|j| FreeModuleElement(m.iter().map(|row| row[j].clone()).collect()))
        .collect()
}

pub fn mat_vec(m: &PolyMatrix, v: &FreeModuleElement, nvars: usize) -> FreeModuleElement {
    FreeModuleElement(
        m.iter()
            .map(|row| {
                let mut acc = MultiPoly::zero(nvars);
                for (a, b) in row.iter().zip(&v.0) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect(),
    )
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub generators: Vec<FreeModuleElement>,
    pub order: MonomialOrder,
    pub reduced: bool,
    rank: usize,
    nvars: usize,
    leads: Vec<LeadTerm>,
}

/// Result of dividing `f` by a Gröbner basis: `f = sum c_i g_i + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionRecord {
    pub remainder: FreeModuleElement,
    pub cofactors: Vec<MultiPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl GroebnerBasis {
    /// Reduced Gröbner basis of the submodule of `R^rank` spanned by `gens`.
    pub fn compute(
        rank: usize,
        nvars: usize,
        gens: &[FreeModuleElement],
        order: &MonomialOrder,
    ) -> Result<Self> {
        for g in gens {
            if g.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: g.rank(),
                });
            }
        }
        let gens = buchberger_loop(gens, order, rank);
        let mut gb = GroebnerBasis {
            generators: gens,
            order: order.clone(),
            reduced: false,
            rank,
            nvars,
            leads: Vec::new(),
        };
        gb.reduce();
        Ok(gb)
    }

    /// Ideal case: Gröbner basis of `(polys)` in `R`.
    pub fn ideal(nvars: usize, polys: &[MultiPoly], order: &MonomialOrder) -> Self {
        let gens: Vec<_> = polys
            .iter()
            .cloned()
            .map(FreeModuleElement::from_poly)
            .collect();
        Self::compute(1, nvars, &gens, order).expect("rank 1 throughout")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn leads(&self) -> &[LeadTerm] {
        &self.leads
    }

    fn refresh_leads(&mut self) {
        self.leads = self
            .generators
            .iter()
            .map(|g| g.lead(&self.order).expect("nonzero generator"))
            .collect();
    }

    fn reduce(&mut self) {
        let order = self.order.clone();
        let mut gens: Vec<FreeModuleElement> = std::mem::take(&mut self.generators);
        gens.retain(|g| !g.is_zero());
        for g in gens.iter_mut() {
            g.make_monic(&order);
        }
        // minimal basis: drop elements whose lead is divisible by another's
        let leads: Vec<LeadTerm> = gens.iter().map(|g| g.lead(&order).unwrap()).collect();
        let mut keep = vec![true; gens.len()];
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                if i == j || !keep[j] || leads[i].pos != leads[j].pos {
                    continue;
                }
                if leads[j].mono.divides(&leads[i].mono)
                    && (leads[j].mono != leads[i].mono || j < i)
                {
                    keep[i] = false;
                    break;
                }
            }
        }
        let mut minimal: Vec<FreeModuleElement> = gens
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| k.then_some(g))
            .collect();
        // interreduce
        for i in 0..minimal.len() {
            let g = std::mem::replace(&mut minimal[i], FreeModuleElement::zero(0, 0));
            let others: Vec<&FreeModuleElement> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h)
                .collect();
            let lead = g.lead(&order).unwrap();
            // the lead itself is irreducible by minimality; reduce the tail
            let mut tail = g.clone();
            tail.0[lead.pos].add_term(lead.mono.clone(), -lead.coeff.clone());
            let (mut r, _) = divide(&tail, &others, &order, false);
            r.0[lead.pos].add_term(lead.mono, lead.coeff);
            r.make_monic(&order);
            minimal[i] = r;
        }
        minimal
            .sort_by(|a, b| cmp_lead(&a.lead(&order).unwrap(), &b.lead(&order).unwrap(), &order));
        self.generators = minimal;
        self.reduced = true;
        self.refresh_leads();
    }

    /// Divide `f` by the basis, tracking cofactors.
    pub fn normal_form_with_cofactors(&self, f: &FreeModuleElement) -> Result<DivisionRecord> {
        if f.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: f.rank(),
            });
        }
        let refs: Vec<&FreeModuleElement> = self.generators.iter().collect();
        let (remainder, cofactors) = divide(f, &refs, &self.order, true);
        Ok(DivisionRecord {
            remainder,
            cofactors: cofactors.unwrap(),
        })
    }

    pub fn normal_form(&self, f: &FreeModuleElement) -> FreeModuleElement {
        assert_eq!(f.rank(), self.rank, "rank mismatch");
        let refs: Vec<&FreeModuleElement> = self.generators.iter().collect();
        divide(f, &refs, &self.order, false).0
    }

    pub fn reduce_poly(&self, f: &MultiPoly) -> MultiPoly {
        let mut r = self.normal_form(&FreeModuleElement::from_poly(f.clone()));
        r.0.pop().unwrap()
    }

    pub fn contains(&self, f: &FreeModuleElement) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Standard monomials `(position, monomial)`, or `None` if infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<(usize, Monomial)>> {
        let mut out = Vec::new();
        for pos in 0..self.rank {
            let leads: Vec<&Monomial> = self
                .leads
                .iter()
                .filter(|l| l.pos == pos)
                .map(|l| &l.mono)
                .collect();
            if leads.iter().any(|m| m.is_one()) {
                continue;
            }
            let mut bounds = vec![u32::MAX; self.nvars];
            for m in &leads {
                if let Some(i) = m.pure_power_var() {
                    bounds[i] = bounds[i].min(m.exponents()[i]);
                }
            }
            if bounds.contains(&u32::MAX) {
                return None;
            }
            let mut exps = vec![0u32; self.nvars];
            loop {
                let m = Monomial::from_exponents(&exps);
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push((pos, m));
                }
                let mut k = 0;
                loop {
                    if k == self.nvars {
                        break;
                    }
                    exps[k] += 1;
                    if exps[k] < bounds[k] {
                        break;
                    }
                    exps[k] = 0;
                    k += 1;
                }
                if k == self.nvars {
                    break;
                }
            }
        }
        Some(out)
    }

    pub fn quotient_dim(&self) -> QuotientDim {
        match self.standard_monomials() {
            Some(v) => QuotientDim::Finite(v.len()),
            None => QuotientDim::Infinite,
        }
    }

    /// Buchberger's criterion, checked directly: every S-element reduces to zero.
    pub fn s_elements_reduce_to_zero(&self) -> bool {
        let refs: Vec<&FreeModuleElement> = self.generators.iter().collect();
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if let Some(s) = s_element(&self.generators[i], &self.generators[j], &self.order) {
                    if !divide(&s, &refs, &self.order, false).0.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn cmp_lead(a: &LeadTerm, b: &LeadTerm, order: &MonomialOrder) -> Ordering {
    // lower position is the larger term
    b.pos.cmp(&a.pos).then_with(|| order.cmp(&a.mono, &b.mono))
}

fn s_element(
    f: &FreeModuleElement,
    g: &FreeModuleElement,
    order: &MonomialOrder,
) -> Option<FreeModuleElement> {
    let lf = f.lead(order)?;
    let lg = g.lead(order)?;
    if lf.pos != lg.pos {
        return None;
    }
    let lcm = lf.mono.lcm(&lg.mono);
    let mf = lf.mono.quotient_of(&lcm).unwrap();
    let mg = lg.mono.quotient_of(&lcm).unwrap();
    let mut s = FreeModuleElement::zero(f.rank(), lcm.nvars());
    s.add_scaled_shifted(f, &mf, &lf.coeff.recip());
    s.add_scaled_shifted(g, &mg, &-lg.coeff.recip());
    Some(s)
}

/// Full division of `f` by `divisors`. Cofactors are tracked when asked.
fn divide(
    f: &FreeModuleElement,
    divisors: &[&FreeModuleElement],
    order: &MonomialOrder,
    track: bool,
) -> (FreeModuleElement, Option<Vec<MultiPoly>>) {
    let nvars = f.0.iter().map(MultiPoly::nvars).next().unwrap_or(0);
    let leads: Vec<LeadTerm> = divisors
        .iter()
        .map(|d| d.lead(order).expect("nonzero divisor"))
        .collect();
    let mut cofactors = track.then(|| vec![MultiPoly::zero(nvars); divisors.len()]);
    let mut work = f.clone();
    let mut rem = FreeModuleElement::zero(f.rank(), nvars);
    while let Some(lt) = work.lead(order) {
        let hit = leads
            .iter()
            .enumerate()
            .find(|(_, l)| l.pos == lt.pos && l.mono.divides(&lt.mono));
        match hit {
            Some((k, l)) => {
                let q = l.mono.quotient_of(&lt.mono).unwrap();
                let c = &lt.coeff / &l.coeff;
                work.add_scaled_shifted(divisors[k], &q, &-c.clone());
                if let Some(cf) = cofactors.as_mut() {
                    cf[k].add_term(q, c);
                }
            }
            None => {
                work.0[lt.pos].add_term(lt.mono.clone(), -lt.coeff.clone());
                rem.0[lt.pos].add_term(lt.mono, lt.coeff);
            }
        }
    }
    (rem, cofactors)
}

fn buchberger_loop(
    gens: &[FreeModuleElement],
    order: &MonomialOrder,
    rank: usize,
) -> Vec<FreeModuleElement> {
    let mut basis: Vec<FreeModuleElement> = Vec::new();
    let mut leads: Vec<LeadTerm> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |g: FreeModuleElement,
                basis: &mut Vec<FreeModuleElement>,
                leads: &mut Vec<LeadTerm>,
                pending: &mut BTreeSet<(usize, usize)>| {
        let lt = g.lead(order).unwrap();
        let k = basis.len();
        for (i, l) in leads.iter().enumerate() {
            if l.pos == lt.pos {
                pending.insert((i, k));
            }
        }
        basis.push(g);
        leads.push(lt);
    };

    for g in gens {
        let refs: Vec<&FreeModuleElement> = basis.iter().collect();
        let (mut r, _) = divide(g, &refs, order, false);
        if !r.is_zero() {
            r.make_monic(order);
            push(r, &mut basis, &mut leads, &mut pending);
        }
    }

    let mut done: HashSet<(usize, usize)> = HashSet::new();
    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first
        let &(i, j) = pending
            .iter()
            .min_by(|a, b| {
                let la = leads[a.0].mono.lcm(&leads[a.1].mono);
                let lb = leads[b.0].mono.lcm(&leads[b.1].mono);
                order.cmp(&la, &lb).then_with(|| a.cmp(b))
            })
            .unwrap();
        pending.remove(&(i, j));
        done.insert((i, j));
        let (li, lj) = (&leads[i], &leads[j]);
        if rank == 1 && li.mono.is_coprime(&lj.mono) {
            continue;
        }
        let lcm = li.mono.lcm(&lj.mono);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].pos == li.pos
                && leads[k].mono.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_element(&basis[i], &basis[j], order).unwrap();
        let refs: Vec<&FreeModuleElement> = basis.iter().collect();
        let (mut r, _) = divide(&s, &refs, order, false);
        if !r.is_zero() {
            r.make_monic(order);
            push(r, &mut basis, &mut leads, &mut pending);
        }
    }
    basis
}

/// Gröbner data for the submodule spanned by a list of columns, with every
/// basis element expressed in terms of the original columns, plus the
/// syzygies among the columns. Computed from one Gröbner basis of the graph
/// module `{(sum v_j col_j, v)}` in `R^(rank + ncols)`.
#[derive(Clone, Debug)]
pub struct TrackedGroebner {
    /// Gröbner basis of the span of the columns (in `R^rank`).
    pub image: GroebnerBasis,
    /// `image.generators[k] = sum_j representations[k][j] * col_j`.
    pub representations: Vec<FreeModuleElement>,
    /// Generators of `{v : sum v_j col_j = 0}`.
    pub syzygies: Vec<FreeModuleElement>,
    ncols: usize,
}

impl TrackedGroebner {
    pub fn compute(
        rank: usize,
        nvars: usize,
        cols: &[FreeModuleElement],
        order: &MonomialOrder,
    ) -> Result<Self> {
        let ncols = cols.len();
        let mut graph = Vec::with_capacity(ncols);
        for (j, c) in cols.iter().enumerate() {
            if c.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: c.rank(),
                });
            }
            let mut comps = c.0.clone();
            comps.extend(FreeModuleElement::unit(ncols, nvars, j).0);
            graph.push(FreeModuleElement(comps));
        }
        let gb = GroebnerBasis::compute(rank + ncols, nvars, &graph, order)?;
        let mut image = Vec::new();
        let mut reps = Vec::new();
        let mut syzygies = Vec::new();
        for (g, lt) in gb.generators.into_iter().zip(gb.leads) {
            let mut comps = g.0;
            let bottom = FreeModuleElement(comps.split_off(rank));
            if lt.pos < rank {
                image.push(FreeModuleElement(comps));
                reps.push(bottom);
            } else {
                syzygies.push(bottom);
            }
        }
        let mut image_gb = GroebnerBasis {
            generators: image,
            order: order.clone(),
            reduced: true,
            rank,
            nvars,
            leads: Vec::new(),
        };
        image_gb.refresh_leads();
        Ok(TrackedGroebner {
            image: image_gb,
            representations: reps,
            syzygies,
            ncols,
        })
    }

    /// Coefficients `v` with `f = sum v_j col_j`, or `None` if `f` is not in the span.
    pub fn express(&self, f: &FreeModuleElement) -> Result<Option<FreeModuleElement>> {
        let rec = self.image.normal_form_with_cofactors(f)?;
        if !rec.remainder.is_zero() {
            return Ok(None);
        }
        let nvars = self.image.nvars;
        let mut v = FreeModuleElement::zero(self.ncols, nvars);
        for (c, rep) in rec.cofactors.iter().zip(&self.representations) {
            if !c.is_zero() {
                v = v.add(&rep.mul_poly(c));
            }
        }
        Ok(Some(v))
    }
}

/// Generators of the kernel `{v : m v = 0}` of an `nrows x ncols` polynomial matrix.
pub fn syzygy_basis(m: &PolyMatrix, ncols: usize, nvars: usize) -> Vec<FreeModuleElement> {
    let cols = columns(m, ncols);
    TrackedGroebner::compute(m.len(), nvars, &cols, &MonomialOrder::DegRevLex)
        .expect("consistent ranks")
        .syzygies
}
