//! The geometric side: boundary-bulk classes, Chern characters, the Todd
//! series, the residue formulas for both sides of Riemann-Roch and Cardy,
//! and a verifier that compares them with the Ext computations.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext::{
    cardy_lhs, ext_dims_graded, ext_dims_groebner, is_closed, ExtBasis, ExtResult, HomComplex,
};
use crate::groebner::PolyMatrix;
use crate::mf::MatrixFactorization;
use crate::milnor::MilnorRing;
use crate::poly::{rat, MultiPoly, Rational, Ring};
use crate::superforms::{entrywise_d, SuperMatrixForm};

/// `τ(α) = f dx_1 ∧ … ∧ dx_n`, stored as the Milnor normal form of `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernClass {
    pub milnor_class: MultiPoly,
    pub n: usize,
}

impl ChernClass {
    pub fn parity(&self) -> usize {
        self.n % 2
    }
}

/// `(−1)^{n(n+1)/2}`.
pub fn sign_constant(n: usize) -> i64 {
    if (n * (n + 1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn identity_matrix(nvars: usize, size: usize) -> PolyMatrix {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i == j {
                        MultiPoly::one(nvars)
                    } else {
                        MultiPoly::zero(nvars)
                    }
                })
                .collect()
        })
        .collect()
}

/// `str(exp(−dδ) α)`, top-degree coefficient, reduced modulo the Jacobian ideal.
pub fn boundary_bulk(
    p: &MatrixFactorization,
    alpha: &PolyMatrix,
    mr: &MilnorRing,
) -> Result<ChernClass> {
    if p.w != mr.w {
        return Err(Error::PotentialMismatch(
            "factorization and Milnor ring disagree on w".into(),
        ));
    }
    if alpha.len() != p.rank() || alpha.iter().any(|r| r.len() != p.rank()) {
        return Err(Error::ShapeMismatch(format!(
            "endomorphism must be {0}x{0}",
            p.rank()
        )));
    }
    if !is_closed(p, p, alpha) {
        return Err(Error::NotClosed(
            "endomorphism does not commute with δ".into(),
        ));
    }
    let n = p.nvars();
    let m = entrywise_d(&p.delta(), n, p.r0, p.r1)
        .scale(&rat(-1))
        .exp_truncated()?;
    let a = SuperMatrixForm::from_poly_matrix(alpha, n, p.r0, p.r1);
    let top = m.wedge_mul(&a)?.supertrace().top_coeff();
    Ok(ChernClass {
        milnor_class: mr.normal_form(&top),
        n,
    })
}

pub fn chern_local(p: &MatrixFactorization, mr: &MilnorRing) -> Result<ChernClass> {
    boundary_bulk(p, &identity_matrix(p.nvars(), p.rank()), mr)
}

/// Top-degree part of the involution `(−1)^p` on `p`-forms.
pub fn dual_class(c: &ChernClass) -> ChernClass {
    ChernClass {
        milnor_class: if c.n % 2 == 0 {
            c.milnor_class.clone()
        } else {
            -&c.milnor_class
        },
        n: c.n,
    }
}

/// `∏ x_i / (1 − e^{−x_i})` in the elementary symmetric functions `c_1..c_n`,
/// truncated at weighted degree `n` (`deg c_i = i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToddSeries {
    pub degree: usize,
    /// exponent vector `(a_1, …, a_n)` of `c_1^{a_1} ⋯ c_n^{a_n}` → coefficient
    pub coefficients: BTreeMap<Vec<u32>, Rational>,
}

impl ToddSeries {
    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.coefficients
            .get(exps)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn evaluate(&self, c: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .map(|(e, k)| {
                e.iter().zip(c).fold(k.clone(), |acc, (&a, ci)| {
                    acc * num_traits::pow(ci.clone(), a as usize)
                })
            })
            .sum()
    }
}

/// Coefficients of `log(x / (1 − e^{−x}))` up to `x^n`.
fn log_todd_coefficients(n: usize) -> Vec<Rational> {
    // g = (1 − e^{−x})/x, f = 1/g, h = log f
    let mut fact = Rational::one();
    let g: Vec<Rational> = (0..=n)
        .map(|k| {
            fact *= rat(k as i64 + 1);
            let s = if k % 2 == 0 { rat(1) } else { rat(-1) };
            s / &fact
        })
        .collect();
    let mut f = vec![Rational::one()];
    for k in 1..=n {
        let s: Rational = (1..=k).map(|j| &g[j] * &f[k - j]).sum();
        f.push(-s);
    }
    let mut h = vec![Rational::zero()];
    for k in 1..=n {
        let s: Rational = (1..k).map(|j| rat(j as i64) * &h[j] * &f[k - j]).sum();
        h.push(&f[k] - s / rat(k as i64));
    }
    h
}

pub fn todd_series(n: usize) -> ToddSeries {
    if n == 0 {
        return ToddSeries {
            degree: 0,
            coefficients: BTreeMap::from([(Vec::new(), Rational::one())]),
        };
    }
    let weights: Vec<Rational> = (1..=n).map(|i| rat(i as i64)).collect();
    let bound = rat(n as i64);
    let truncate = |p: MultiPoly| {
        MultiPoly::from_terms(
            n,
            p.terms()
                .filter(|(m, _)| m.weighted_degree(&weights) <= bound)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    };
    let c = |i: usize| MultiPoly::var(n, i - 1);
    // Newton: p_k = Σ_{i<k} (−1)^{i−1} c_i p_{k−i} + (−1)^{k−1} k c_k
    let mut power_sums: Vec<MultiPoly> = vec![MultiPoly::zero(n)];
    for k in 1..=n {
        let mut pk = c(k).scale(&rat(if k % 2 == 1 { k as i64 } else { -(k as i64) }));
        for i in 1..k {
            let term = &c(i) * &power_sums[k - i];
            if i % 2 == 1 {
                pk += &term;
            } else {
                pk -= &term;
            }
        }
        power_sums.push(pk);
    }
    let b = log_todd_coefficients(n);
    let mut log = MultiPoly::zero(n);
    for k in 1..=n {
        log += &power_sums[k].scale(&b[k]);
    }
    let mut total = MultiPoly::one(n);
    let mut power = MultiPoly::one(n);
    let mut fact = Rational::one();
    for m in 1..=n {
        power = truncate(&power * &log);
        fact *= rat(m as i64);
        total += &power.scale(&fact.recip());
    }
    ToddSeries {
        degree: n,
        coefficients: total
            .terms()
            .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
            .collect(),
    }
}

/// Where the `∨` sign of the pairing lives once the integral is replaced by
/// the residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualConvention {
    /// `∫ τ(β) ∧ τ(α)^∨ = Res[g f]`.
    ResidueAbsorbsDual,
    /// `∫ τ(β) ∧ τ(α)^∨ = (−1)^n Res[g f]`.
    ExplicitDualSign,
}

impl DualConvention {
    fn factor(self, n: usize) -> Rational {
        match self {
            DualConvention::ExplicitDualSign if n % 2 == 1 => rat(-1),
            _ => rat(1),
        }
    }
}

/// `(−1)^{n(n+1)/2} Res[ch(P)^∨ ch(Q)]` (the Todd class of affine space is 1).
pub fn hrr_rhs(
    p: &MatrixFactorization,
    q: &MatrixFactorization,
    mr: &MilnorRing,
    conv: DualConvention,
) -> Result<Rational> {
    let f = chern_local(p, mr)?;
    let g = chern_local(q, mr)?;
    Ok(pairing(&f, &g, mr, conv))
}

/// `(−1)^{n(n+1)/2} Res[τ(β) τ(α)^∨]`.
pub fn cardy_rhs(
    alpha: &PolyMatrix,
    beta: &PolyMatrix,
    p: &MatrixFactorization,
    q: &MatrixFactorization,
    mr: &MilnorRing,
    conv: DualConvention,
) -> Result<Rational> {
    let f = boundary_bulk(p, alpha, mr)?;
    let g = boundary_bulk(q, beta, mr)?;
    Ok(pairing(&f, &g, mr, conv))
}

fn pairing(
    dualized: &ChernClass,
    other: &ChernClass,
    mr: &MilnorRing,
    conv: DualConvention,
) -> Rational {
    let n = mr.nvars();
    let res = mr.residue(&(&other.milnor_class * &dualized.milnor_class));
    res * rat(sign_constant(n)) * conv.factor(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationCase {
    pub name: String,
    pub lhs: String,
    pub rhs_residue_absorbs_dual: String,
    pub rhs_explicit_dual_sign: String,
}

/// Outcome of fixing the `∨` convention against independently computed
/// left-hand sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Calibration {
    pub convention: DualConvention,
    /// Whether the cases ruled out the other convention.
    pub discriminating: bool,
    pub cases: Vec<CalibrationCase>,
    /// Identification used on the left-hand side.
    pub ext_model: String,
}

pub const EXT_MODEL: &str =
    "Ext computed as the cohomology of the Z/2-graded Hom complex of free matrix factorizations (homotopy category)";

fn odd_swap(nvars: usize) -> PolyMatrix {
    vec![
        vec![MultiPoly::zero(nvars), MultiPoly::one(nvars)],
        vec![-MultiPoly::one(nvars), MultiPoly::zero(nvars)],
    ]
}

/// Run the calibration cases: Riemann-Roch for `xy` and `x² + y²`, and a
/// Cardy case on `x⁴` with an odd class. Even `n` cannot tell the conventions
/// apart, so the odd case is the one that decides.
pub fn calibrate() -> Result<Calibration> {
    let r2 = Ring::new(&["x", "y"]);
    let r1 = Ring::new(&["x"]);
    let parse = |r: &Ring, s: &str| r.parse(s).expect("calibration polynomial");
    let kz = |r: &Ring, a: &str, b: &str| MatrixFactorization::koszul(&parse(r, a), &parse(r, b));

    let conventions = [
        DualConvention::ResidueAbsorbsDual,
        DualConvention::ExplicitDualSign,
    ];
    let mut cases = Vec::new();
    let mut fits = [true, true];
    let mut record = |name: &str, lhs: Rational, rhs: [Rational; 2]| {
        for k in 0..2 {
            fits[k] &= lhs == rhs[k];
        }
        cases.push(CalibrationCase {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs_residue_absorbs_dual: rhs[0].to_string(),
            rhs_explicit_dual_sign: rhs[1].to_string(),
        });
    };

    let hrr_cases = [
        ("hrr xy koszul(x,y)", kz(&r2, "x", "y")),
        (
            "hrr x^2+y^2 koszul(x,x)*koszul(y,y)",
            kz(&r2, "x", "x").tensor(&kz(&r2, "y", "y"))?,
        ),
    ];
    for (name, p) in hrr_cases {
        let mr = MilnorRing::new(&p.w)?;
        let lhs = Rational::from_integer(euler_groebner(&p, &p)?.into());
        let rhs = conventions.map(|c| hrr_rhs(&p, &p, &mr, c));
        record(name, lhs, [rhs[0].clone()?, rhs[1].clone()?]);
    }

    let p = kz(&r1, "x^2", "x^2");
    let mr = MilnorRing::new(&p.w)?;
    let a = odd_swap(1);
    let basis = ExtBasis::compute(&HomComplex::new(&p, &p)?)?;
    let lhs = cardy_lhs(&basis, &a, &a)?;
    let rhs = conventions.map(|c| cardy_rhs(&a, &a, &p, &p, &mr, c));
    record(
        "cardy x^4 koszul(x^2,x^2) odd swap",
        lhs,
        [rhs[0].clone()?, rhs[1].clone()?],
    );

    let convention = match fits {
        [true, _] => DualConvention::ResidueAbsorbsDual,
        [false, true] => DualConvention::ExplicitDualSign,
        [false, false] => {
            return Err(Error::ConventionInconsistent(
                cases
                    .iter()
                    .map(|c| {
                        format!(
                            "{}: lhs {} vs {} / {}",
                            c.name, c.lhs, c.rhs_residue_absorbs_dual, c.rhs_explicit_dual_sign
                        )
                    })
                    .collect::<Vec<_>>()
                    .join("; "),
            ))
        }
    };
    Ok(Calibration {
        convention,
        discriminating: fits[0] != fits[1],
        cases,
        ext_model: EXT_MODEL.to_string(),
    })
}

fn euler_groebner(p: &MatrixFactorization, q: &MatrixFactorization) -> Result<i64> {
    Ok(ext_dims_groebner(&HomComplex::new(p, q)?)?.euler)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    Groebner,
    Graded,
    Both,
}

#[derive(Clone, Debug)]
pub struct HrrCase {
    pub ring: Ring,
    pub p_label: String,
    pub p: MatrixFactorization,
    pub q_label: String,
    pub q: MatrixFactorization,
}

#[derive(Clone, Debug)]
pub struct CardyCase {
    pub ring: Ring,
    pub p_label: String,
    pub p: MatrixFactorization,
    pub q_label: String,
    pub q: MatrixFactorization,
    pub alpha_label: String,
    pub alpha: PolyMatrix,
    pub beta_label: String,
    pub beta: PolyMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub w: String,
    pub n: usize,
    pub mu: usize,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    pub lhs: i64,
    pub rhs_numerator: i64,
    pub rhs_denominator: i64,
    pub equal: bool,
    pub sign_constant: i64,
    #[serde(rename = "chern_P")]
    pub chern_p: String,
    #[serde(rename = "chern_Q")]
    pub chern_q: String,
    pub ext_even: usize,
    pub ext_odd: usize,
    pub method: String,
    pub calibration: Calibration,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CardyReport {
    pub w: String,
    pub n: usize,
    pub mu: usize,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "Q")]
    pub q: String,
    pub alpha: String,
    pub beta: String,
    pub lhs_numerator: i64,
    pub lhs_denominator: i64,
    pub rhs_numerator: i64,
    pub rhs_denominator: i64,
    pub equal: bool,
    pub sign_constant: i64,
    pub tau_alpha: String,
    pub tau_beta: String,
    pub method: String,
    pub calibration: Calibration,
    pub elapsed_ms: u64,
}

fn parts(r: &Rational) -> Result<(i64, i64)> {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Precondition(format!(
            "{r} does not fit the report format"
        ))),
    }
}

fn check_inputs(p: &MatrixFactorization, q: &MatrixFactorization) -> Result<MilnorRing> {
    for (name, m) in [("P", p), ("Q", q)] {
        if let Err(v) = m.validate() {
            return Err(Error::Precondition(format!(
                "{name} is not a matrix factorization: entry ({}, {}) of {} is {:?}",
                v.row, v.col, v.product, v.got
            )));
        }
    }
    if p.w != q.w {
        return Err(Error::PotentialMismatch(
            "P and Q factor different potentials".into(),
        ));
    }
    let mr = MilnorRing::new(&p.w)?;
    if mr.weights.is_none() {
        return Err(Error::NotQuasiHomogeneous);
    }
    Ok(mr)
}

/// Compares both sides of Riemann-Roch and Cardy under one calibrated
/// convention.
#[derive(Clone, Debug)]
pub struct Verifier {
    pub calibration: Calibration,
    pub method: MethodChoice,
}

impl Verifier {
    pub fn new(method: MethodChoice) -> Result<Self> {
        Ok(Verifier {
            calibration: calibrate()?,
            method,
        })
    }

    /// Ext dimensions by the requested method(s); a disagreement is an error.
    pub fn ext_dims(&self, h: &HomComplex, mr: &MilnorRing) -> Result<(ExtResult, String)> {
        let graded = || -> Result<ExtResult> {
            let weights = mr
                .weights
                .as_ref()
                .ok_or_else(|| Error::NotGradable("w has no weights".into()))?;
            ext_dims_graded(h, weights)
        };
        match self.method {
            MethodChoice::Groebner => Ok((ext_dims_groebner(h)?, "groebner".into())),
            MethodChoice::Graded => Ok((graded()?, "graded".into())),
            MethodChoice::Both => {
                let g = ext_dims_groebner(h)?;
                match graded() {
                    Ok(gr) if (gr.dim_even, gr.dim_odd) == (g.dim_even, g.dim_odd) => {
                        Ok((g, "groebner+graded".into()))
                    }
                    Ok(gr) => Err(Error::OracleMismatch(format!(
                        "groebner ({}, {}) vs graded ({}, {})",
                        g.dim_even, g.dim_odd, gr.dim_even, gr.dim_odd
                    ))),
                    Err(Error::NotGradable(why)) => {
                        Ok((g, format!("groebner (graded skipped: {why})")))
                    }
                    Err(e) => Err(e),
                }
            }
        }
    }

    pub fn verify_hrr(&self, case: &HrrCase) -> Result<VerificationReport> {
        let start = Instant::now();
        let mr = check_inputs(&case.p, &case.q)?;
        let h = HomComplex::new(&case.p, &case.q)?;
        let (ext, method) = self.ext_dims(&h, &mr)?;
        let chp = chern_local(&case.p, &mr)?;
        let chq = chern_local(&case.q, &mr)?;
        let rhs = pairing(&chp, &chq, &mr, self.calibration.convention);
        let (num, den) = parts(&rhs)?;
        let n = mr.nvars();
        Ok(VerificationReport {
            w: case.ring.display(&mr.w).to_string(),
            n,
            mu: mr.mu,
            p: case.p_label.clone(),
            q: case.q_label.clone(),
            lhs: ext.euler,
            rhs_numerator: num,
            rhs_denominator: den,
            equal: Rational::from_integer(ext.euler.into()) == rhs,
            sign_constant: sign_constant(n),
            chern_p: case.ring.display(&chp.milnor_class).to_string(),
            chern_q: case.ring.display(&chq.milnor_class).to_string(),
            ext_even: ext.dim_even,
            ext_odd: ext.dim_odd,
            method,
            calibration: self.calibration.clone(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }

    pub fn verify_cardy(&self, case: &CardyCase) -> Result<CardyReport> {
        let start = Instant::now();
        let mr = check_inputs(&case.p, &case.q)?;
        let basis = ExtBasis::compute(&HomComplex::new(&case.p, &case.q)?)?;
        let lhs = cardy_lhs(&basis, &case.alpha, &case.beta)?;
        let ta = boundary_bulk(&case.p, &case.alpha, &mr)?;
        let tb = boundary_bulk(&case.q, &case.beta, &mr)?;
        let rhs = pairing(&ta, &tb, &mr, self.calibration.convention);
        let (ln, ld) = parts(&lhs)?;
        let (rn, rd) = parts(&rhs)?;
        let n = mr.nvars();
        Ok(CardyReport {
            w: case.ring.display(&mr.w).to_string(),
            n,
            mu: mr.mu,
            p: case.p_label.clone(),
            q: case.q_label.clone(),
            alpha: case.alpha_label.clone(),
            beta: case.beta_label.clone(),
            lhs_numerator: ln,
            lhs_denominator: ld,
            rhs_numerator: rn,
            rhs_denominator: rd,
            equal: lhs == rhs,
            sign_constant: sign_constant(n),
            tau_alpha: case.ring.display(&ta.milnor_class).to_string(),
            tau_beta: case.ring.display(&tb.milnor_class).to_string(),
            method: "groebner".into(),
            calibration: self.calibration.clone(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::frac;

    fn kz(r: &Ring, a: &str, b: &str) -> MatrixFactorization {
        MatrixFactorization::koszul(&r.parse(a).unwrap(), &r.parse(b).unwrap())
    }

    #[test]
    fn chern_examples() {
        let r = Ring::new(&["x", "y"]);
        let p = kz(&r, "x", "y");
        let mr = MilnorRing::new(&p.w).unwrap();
        // Koszul signs give -1 here; only the product of two classes enters.
        assert_eq!(
            chern_local(&p, &mr).unwrap().milnor_class,
            MultiPoly::constant(2, rat(-1))
        );
        assert_eq!(
            chern_local(&p.shift(), &mr).unwrap().milnor_class,
            MultiPoly::constant(2, rat(1))
        );
        let zero = vec![vec![MultiPoly::zero(2); 2]; 2];
        assert!(boundary_bulk(&p, &zero, &mr)
            .unwrap()
            .milnor_class
            .is_zero());

        let r1 = Ring::new(&["x"]);
        let p = kz(&r1, "x", "x");
        let mr = MilnorRing::new(&p.w).unwrap();
        assert!(chern_local(&p, &mr).unwrap().milnor_class.is_zero());
    }

    #[test]
    fn dual_class_sign() {
        let c = ChernClass {
            milnor_class: MultiPoly::var(1, 0),
            n: 1,
        };
        assert_eq!(dual_class(&c).milnor_class, -MultiPoly::var(1, 0));
        assert_eq!(dual_class(&dual_class(&c)), c);
        let e = ChernClass {
            milnor_class: MultiPoly::var(2, 0),
            n: 2,
        };
        assert_eq!(dual_class(&e), e);
    }

    #[test]
    fn sign_constants() {
        assert_eq!([1, 2, 3, 4].map(sign_constant), [-1, -1, 1, 1]);
    }

    #[test]
    fn todd_low_degrees() {
        let t1 = todd_series(1);
        assert_eq!(t1.coefficient(&[0]), rat(1));
        assert_eq!(t1.coefficient(&[1]), frac(1, 2));
        let t3 = todd_series(3);
        assert_eq!(t3.coefficient(&[2, 0, 0]), frac(1, 12));
        assert_eq!(t3.coefficient(&[0, 1, 0]), frac(1, 12));
        assert_eq!(t3.coefficient(&[1, 1, 0]), frac(1, 24));
        assert_eq!(t3.coefficient(&[3, 0, 0]), rat(0));
        assert_eq!(t3.coefficient(&[0, 0, 1]), rat(0));
        assert_eq!(t3.evaluate(&[rat(0), rat(0), rat(0)]), rat(1));
    }

    #[test]
    fn hrr_examples() {
        let r = Ring::new(&["x", "y"]);
        let p = kz(&r, "x", "y");
        let mr = MilnorRing::new(&p.w).unwrap();
        assert_eq!(
            hrr_rhs(&p, &p, &mr, DualConvention::ResidueAbsorbsDual).unwrap(),
            rat(1)
        );
        let r1 = Ring::new(&["x"]);
        let p = kz(&r1, "x", "x");
        let mr = MilnorRing::new(&p.w).unwrap();
        assert_eq!(
            hrr_rhs(&p, &p, &mr, DualConvention::ResidueAbsorbsDual).unwrap(),
            rat(0)
        );
    }

    #[test]
    fn calibration_discriminates() {
        let c = calibrate().unwrap();
        assert_eq!(c.convention, DualConvention::ResidueAbsorbsDual);
        assert!(c.discriminating);
        assert_eq!(c.cases.len(), 3);
    }

    #[test]
    fn verifier_reports() {
        let v = Verifier::new(MethodChoice::Both).unwrap();
        let r = Ring::new(&["x", "y"]);
        let p = kz(&r, "x^2", "x").tensor(&kz(&r, "y", "y^2")).unwrap();
        let case = HrrCase {
            ring: r.clone(),
            p_label: "P".into(),
            p: p.clone(),
            q_label: "P".into(),
            q: p,
        };
        let rep = v.verify_hrr(&case).unwrap();
        assert!(rep.equal, "{rep:?}");
        assert_eq!(rep.method, "groebner+graded");
        let json = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            serde_json::from_str::<VerificationReport>(&json).unwrap(),
            rep
        );
    }
}
