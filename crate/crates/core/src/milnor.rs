//! Milnor rings `Q[x]/(∂_1 w, …, ∂_n w)` and the Grothendieck residue
//! `Res[g dx_1…dx_n / (∂_1 w, …, ∂_n w)]`.
//!
//! The residue is computed with the transformation law: find powers `N_i`
//! and a matrix `T` with `x_i^{N_i} = Σ_j T_ij ∂_j w`; then
//! `Res[g / ∂w] = Res[g det T / x^N]`, which is the coefficient of
//! `x_1^{N_1-1}…x_n^{N_n-1}` in `g det T`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{FreeModuleElement, GroebnerBasis, QuotientDim, TrackedGroebner};
use crate::linalg::RatMatrix;
use crate::poly::{poly_det, Monomial, MonomialOrder, MultiPoly, Rational};

#[derive(Clone, Debug)]
pub struct MilnorRing {
    pub w: MultiPoly,
    pub jacobian: Vec<MultiPoly>,
    pub jacobian_gb: GroebnerBasis,
    pub basis: Vec<Monomial>,
    pub mu: usize,
    /// Quasi-homogeneous weights of `w`, if any.
    pub weights: Option<Vec<Rational>>,
    pub residue_data: ResidueData,
    tracked: TrackedGroebner,
}

/// Transformation-law data: `x_i^{N_i} = Σ_j T_ij ∂_j w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueData {
    pub powers: Vec<u32>,
    pub cofactor_matrix: Vec<Vec<MultiPoly>>,
    pub det_t: MultiPoly,
}

impl ResidueData {
    /// The same data with `N_i` raised by one and row `i` of `T` multiplied by `x_i`.
    pub fn lifted(&self, i: usize) -> ResidueData {
        let nvars = self.det_t.nvars();
        let xi = MultiPoly::var(nvars, i);
        let mut powers = self.powers.clone();
        powers[i] += 1;
        let mut t = self.cofactor_matrix.clone();
        for e in t[i].iter_mut() {
            *e = &*e * &xi;
        }
        let det_t = poly_det(&t, nvars);
        ResidueData {
            powers,
            cofactor_matrix: t,
            det_t,
        }
    }

    pub fn residue(&self, g: &MultiPoly) -> Rational {
        let target: Vec<u32> = self.powers.iter().map(|n| n - 1).collect();
        let target = Monomial::from_exponents(&target);
        // coefficient of x^{N-1} in g * det_t, without forming the full product
        let mut acc = Rational::zero();
        for (m, c) in self.det_t.terms() {
            if let Some(q) = m.quotient_of(&target) {
                let gc = g.coeff(&q);
                if !gc.is_zero() {
                    acc += gc * c;
                }
            }
        }
        acc
    }
}

impl MilnorRing {
    pub fn new(w: &MultiPoly) -> Result<Self> {
        if w.is_constant() {
            return Err(Error::Precondition("w must be non-constant".into()));
        }
        let nvars = w.nvars();
        let order = MonomialOrder::DegRevLex;
        let jacobian = w.gradient();
        let cols: Vec<_> = jacobian
            .iter()
            .cloned()
            .map(FreeModuleElement::from_poly)
            .collect();
        let tracked = TrackedGroebner::compute(1, nvars, &cols, &order)?;
        let jacobian_gb = tracked.image.clone();
        let basis: Vec<Monomial> = match jacobian_gb.quotient_dim() {
            QuotientDim::Infinite => return Err(Error::NonIsolated),
            QuotientDim::Finite(_) => jacobian_gb
                .standard_monomials()
                .expect("finite")
                .into_iter()
                .map(|(_, m)| m)
                .collect(),
        };
        let mu = basis.len();
        let residue_data = variable_power_membership(&tracked, nvars, mu)?;
        Ok(MilnorRing {
            w: w.clone(),
            jacobian,
            jacobian_gb,
            basis,
            mu,
            weights: w.quasi_homogeneous_weights(),
            residue_data,
            tracked,
        })
    }

    pub fn nvars(&self) -> usize {
        self.w.nvars()
    }

    /// Non-fatal diagnostics about the input.
    pub fn warnings(&self) -> Vec<Error> {
        if self.weights.is_none() {
            vec![Error::NotQuasiHomogeneous]
        } else {
            Vec::new()
        }
    }

    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        self.jacobian_gb.reduce_poly(f)
    }

    /// Cofactors `c` with `f = Σ c_j ∂_j w`, if `f` is in the Jacobian ideal.
    pub fn jacobian_cofactors(&self, f: &MultiPoly) -> Option<Vec<MultiPoly>> {
        self.tracked
            .express(&FreeModuleElement::from_poly(f.clone()))
            .expect("rank 1")
            .map(|v| v.0)
    }

    pub fn residue(&self, g: &MultiPoly) -> Rational {
        self.residue_data.residue(g)
    }

    /// `M[a][b] = Res[basis_a * basis_b]`.
    pub fn residue_pairing_matrix(&self) -> RatMatrix {
        let mons: Vec<MultiPoly> = self
            .basis
            .iter()
            .map(|m| MultiPoly::term(m.clone(), crate::poly::rat(1)))
            .collect();
        RatMatrix::from_rows(
            mons.iter()
                .map(|a| mons.iter().map(|b| self.residue(&(a * b))).collect())
                .collect(),
        )
    }

    /// Maximal weighted degree of a standard monomial (the socle degree for
    /// quasi-homogeneous `w`).
    pub fn max_basis_weighted_degree(&self) -> Option<Rational> {
        let w = self.weights.as_ref()?;
        self.basis.iter().map(|m| m.weighted_degree(w)).max()
    }
}

fn variable_power_membership(
    tracked: &TrackedGroebner,
    nvars: usize,
    mu: usize,
) -> Result<ResidueData> {
    let mut powers = Vec::with_capacity(nvars);
    let mut t = Vec::with_capacity(nvars);
    for i in 0..nvars {
        let xi = MultiPoly::var(nvars, i);
        let mut p = xi.clone();
        let mut n = 1u32;
        loop {
            if let Some(v) = tracked.express(&FreeModuleElement::from_poly(p.clone()))? {
                powers.push(n);
                t.push(v.0);
                break;
            }
            // x_i is nilpotent in a local algebra of dimension mu
            if n as usize > mu {
                return Err(Error::Precondition(
                    "critical locus of w is not concentrated at the origin".into(),
                ));
            }
            p = &p * &xi;
            n += 1;
        }
    }
    let det_t = poly_det(&t, nvars);
    Ok(ResidueData {
        powers,
        cofactor_matrix: t,
        det_t,
    })
}

pub fn is_nonzero_det(m: &RatMatrix) -> bool {
    m.nrows() == 0 || !m.det().is_zero()
}
