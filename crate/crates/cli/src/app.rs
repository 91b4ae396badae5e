//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use mfhrr::chern::{
    chern_local, CardyCase, CardyReport, HrrCase, MethodChoice, VerificationReport, Verifier,
};
use mfhrr::ext::{ext_dims_graded, ext_dims_groebner, ExtBasis, HomComplex};
use mfhrr::milnor::{is_nonzero_det, MilnorRing};
use mfhrr::poly::Rational;
use mfhrr::Error;

use crate::battery::builtin_battery;
use crate::problem::ProblemFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "mfhrr",
    version,
    about = "Exact Riemann-Roch and Cardy checks for matrix factorizations"
)]
struct Cli {
    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for independent cases.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Algorithm for Ext dimensions.
    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    /// Print the sign calibration record before the results.
    #[arg(long, global = true)]
    calibration_report: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Groebner,
    Graded,
    Both,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Groebner => MethodChoice::Groebner,
            MethodArg::Graded => MethodChoice::Graded,
            MethodArg::Both => MethodChoice::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Riemann-Roch for the `verify` lines of a problem file.
    Verify { file: PathBuf },
    /// Cardy condition for the `cardy` lines of a problem file.
    Cardy { file: PathBuf },
    /// Chern character of one factorization.
    Chern { file: PathBuf, mf: String },
    /// Ext dimensions and basis between two factorizations.
    Ext { file: PathBuf, p: String, q: String },
    /// Milnor ring, weights and residue pairing of w.
    Milnor { file: PathBuf },
    /// Grothendieck residue of a polynomial.
    Residue { file: PathBuf, poly: String },
    /// Run the built-in battery.
    Battery,
}

/// A failure that maps to an exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleMismatch(_) | Error::ConventionInconsistent(_) => EXIT_FAILED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        msg: msg.into(),
    }
}

enum Outcome {
    Hrr(VerificationReport),
    Cardy(CardyReport),
}

impl Outcome {
    fn equal(&self) -> bool {
        match self {
            Outcome::Hrr(r) => r.equal,
            Outcome::Cardy(r) => r.equal,
        }
    }
}

enum Job {
    Hrr(HrrCase),
    Cardy(CardyCase),
}

/// Exit code contributed by one case.
fn outcome_code(r: &Result<Outcome, Error>) -> i32 {
    match r {
        Ok(o) if o.equal() => EXIT_OK,
        Ok(_) => EXIT_FAILED,
        Err(e) => Failure::from(e.clone()).code,
    }
}

fn fmt_rat(n: i64, d: i64) -> String {
    if d == 1 {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

fn print_outcome(out: &mut dyn Write, json: bool, o: &Outcome) -> std::io::Result<()> {
    if json {
        let s = match o {
            Outcome::Hrr(r) => serde_json::to_string(r),
            Outcome::Cardy(r) => serde_json::to_string(r),
        }
        .expect("reports serialize");
        return writeln!(out, "{s}");
    }
    let tag = if o.equal() { "PASS" } else { "FAIL" };
    match o {
        Outcome::Hrr(r) => writeln!(
            out,
            "{tag} hrr   w = {} | {} | {} | chi = {} (ext {}|{}) | rhs = {} | ch(P) = {}, ch(Q) = {} | {} | {} ms",
            r.w,
            r.p,
            r.q,
            r.lhs,
            r.ext_even,
            r.ext_odd,
            fmt_rat(r.rhs_numerator, r.rhs_denominator),
            r.chern_p,
            r.chern_q,
            r.method,
            r.elapsed_ms
        ),
        Outcome::Cardy(r) => writeln!(
            out,
            "{tag} cardy w = {} | {} | {} | {} | {} | str = {} | rhs = {} | tau = {}, {} | {} ms",
            r.w,
            r.p,
            r.q,
            r.alpha,
            r.beta,
            fmt_rat(r.lhs_numerator, r.lhs_denominator),
            fmt_rat(r.rhs_numerator, r.rhs_denominator),
            r.tau_alpha,
            r.tau_beta,
            r.elapsed_ms
        ),
    }
}

fn load(path: &Path) -> Result<ProblemFile, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&path.display().to_string(), &text)
        .map_err(|e| input_error(format!("{}: {e}", path.display())))
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn verifier(&mut self) -> Result<Verifier, Failure> {
        let v = Verifier::new(self.cli.method.into())?;
        if self.cli.calibration_report {
            if self.cli.json {
                writeln!(
                    self.out,
                    "{}",
                    serde_json::to_string(&v.calibration).expect("serializes")
                )
                .ok();
            } else {
                writeln!(
                    self.out,
                    "calibration: convention {:?} (discriminating: {})",
                    v.calibration.convention, v.calibration.discriminating
                )
                .ok();
                for c in &v.calibration.cases {
                    writeln!(
                        self.out,
                        "  {}: lhs {} | residue absorbs dual {} | explicit dual sign {}",
                        c.name, c.lhs, c.rhs_residue_absorbs_dual, c.rhs_explicit_dual_sign
                    )
                    .ok();
                }
                writeln!(self.out, "  model: {}", v.calibration.ext_model).ok();
            }
        }
        Ok(v)
    }

    /// Run jobs on a pool, print in input order, and fold into an exit code.
    fn run_jobs(&mut self, jobs: Vec<Job>) -> Result<i32, Failure> {
        let verifier = self.verifier()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.cli.jobs.max(1))
            .build()
            .map_err(|e| input_error(e.to_string()))?;
        let results: Vec<Result<Outcome, Error>> = pool.install(|| {
            jobs.par_iter()
                .map(|j| match j {
                    Job::Hrr(c) => verifier.verify_hrr(c).map(Outcome::Hrr),
                    Job::Cardy(c) => verifier.verify_cardy(c).map(Outcome::Cardy),
                })
                .collect()
        });
        let mut code = EXIT_OK;
        for (job, r) in jobs.iter().zip(results) {
            code = code.max(outcome_code(&r));
            match r {
                Ok(o) => {
                    print_outcome(self.out, self.cli.json, &o).ok();
                }
                Err(e) => {
                    let (p, q) = match job {
                        Job::Hrr(c) => (&c.p_label, &c.q_label),
                        Job::Cardy(c) => (&c.p_label, &c.q_label),
                    };
                    let f = Failure::from(e);
                    if self.cli.json {
                        let v = serde_json::json!({"P": p, "Q": q, "error": f.msg});
                        writeln!(self.out, "{v}").ok();
                    } else {
                        writeln!(self.out, "ERROR {p} | {q} | {}", f.msg).ok();
                    }
                }
            }
        }
        Ok(code)
    }

    fn run(&mut self) -> Result<i32, Failure> {
        match &self.cli.command {
            Command::Verify { file } => {
                let f = load(file)?;
                let jobs: Vec<Job> = f.hrr_cases().into_iter().map(Job::Hrr).collect();
                if jobs.is_empty() {
                    return Err(input_error("no factorizations of w to verify"));
                }
                self.run_jobs(jobs)
            }
            Command::Cardy { file } => {
                let f = load(file)?;
                let jobs: Vec<Job> = f.cardy_cases().into_iter().map(Job::Cardy).collect();
                if jobs.is_empty() {
                    return Err(input_error("no `cardy` lines in the problem file"));
                }
                self.run_jobs(jobs)
            }
            Command::Battery => {
                let mut jobs = Vec::new();
                for f in builtin_battery() {
                    jobs.extend(f.hrr_cases().into_iter().map(Job::Hrr));
                    jobs.extend(f.cardy_cases().into_iter().map(Job::Cardy));
                }
                self.run_jobs(jobs)
            }
            Command::Chern { file, mf } => {
                let f = load(file)?;
                let m = f.resolve_mf(mf).map_err(|e| input_error(e.to_string()))?;
                let mr = MilnorRing::new(&m.mf.w)?;
                let ch = chern_local(&m.mf, &mr)?;
                let shown = f.ring.display(&ch.milnor_class).to_string();
                if self.cli.json {
                    let v = serde_json::json!({"mf": m.label(), "w": f.ring.display(&m.mf.w).to_string(), "chern": shown});
                    writeln!(self.out, "{v}").ok();
                } else {
                    writeln!(
                        self.out,
                        "ch({}) = {} dx_1...dx_n  (mod Jacobian ideal)",
                        m.label(),
                        shown
                    )
                    .ok();
                }
                Ok(EXIT_OK)
            }
            Command::Ext { file, p, q } => {
                let f = load(file)?;
                let (p, q) = (
                    f.resolve_mf(p).map_err(|e| input_error(e.to_string()))?,
                    f.resolve_mf(q).map_err(|e| input_error(e.to_string()))?,
                );
                let h = HomComplex::new(&p.mf, &q.mf)?;
                let g = ext_dims_groebner(&h)?;
                let graded = match p.mf.w.quasi_homogeneous_weights() {
                    Some(u) => match ext_dims_graded(&h, &u) {
                        Ok(r) => Some(r),
                        Err(Error::NotGradable(_)) => None,
                        Err(e) => return Err(e.into()),
                    },
                    None => None,
                };
                let agree = graded
                    .as_ref()
                    .map_or(true, |r| (r.dim_even, r.dim_odd) == (g.dim_even, g.dim_odd));
                let basis = ExtBasis::compute(&h)?;
                let show = |m: &mfhrr::groebner::PolyMatrix| {
                    let rows: Vec<String> = m
                        .iter()
                        .map(|r| {
                            format!(
                                "[{}]",
                                r.iter()
                                    .map(|c| f.ring.display(c).to_string())
                                    .collect::<Vec<_>>()
                                    .join(", ")
                            )
                        })
                        .collect();
                    format!("[{}]", rows.join(", "))
                };
                if self.cli.json {
                    let v = serde_json::json!({
                        "P": p.label(), "Q": q.label(),
                        "dim_even": g.dim_even, "dim_odd": g.dim_odd, "euler": g.euler,
                        "graded": graded.as_ref().map(|r| [r.dim_even, r.dim_odd]),
                        "basis_even": basis.representatives(0).iter().map(show).collect::<Vec<_>>(),
                        "basis_odd": basis.representatives(1).iter().map(show).collect::<Vec<_>>(),
                    });
                    writeln!(self.out, "{v}").ok();
                } else {
                    writeln!(
                        self.out,
                        "Ext({}, {}): even {} odd {} chi {}",
                        p.label(),
                        q.label(),
                        g.dim_even,
                        g.dim_odd,
                        g.euler
                    )
                    .ok();
                    match &graded {
                        Some(r) => writeln!(
                            self.out,
                            "graded oracle: even {} odd {}",
                            r.dim_even, r.dim_odd
                        )
                        .ok(),
                        None => writeln!(self.out, "graded oracle: not applicable").ok(),
                    };
                    for e in 0..2 {
                        for m in basis.representatives(e) {
                            writeln!(
                                self.out,
                                "  {} {}",
                                if e == 0 { "even" } else { "odd " },
                                show(&m)
                            )
                            .ok();
                        }
                    }
                }
                Ok(if agree { EXIT_OK } else { EXIT_FAILED })
            }
            Command::Milnor { file } => {
                let f = load(file)?;
                let mr = MilnorRing::new(&f.w)?;
                let hess = mr.residue(&f.w.hessian_det());
                let nondeg = is_nonzero_det(&mr.residue_pairing_matrix());
                let basis: Vec<String> = mr
                    .basis
                    .iter()
                    .map(|m| {
                        f.ring
                            .display(&mfhrr::poly::MultiPoly::term(
                                m.clone(),
                                Rational::from_integer(1.into()),
                            ))
                            .to_string()
                    })
                    .collect();
                let weights: Option<Vec<String>> = mr
                    .weights
                    .as_ref()
                    .map(|u| u.iter().map(ToString::to_string).collect());
                let ok = hess == Rational::from_integer((mr.mu as i64).into()) && nondeg;
                if self.cli.json {
                    let v = serde_json::json!({
                        "w": f.ring.display(&f.w).to_string(), "mu": mr.mu, "basis": basis,
                        "weights": weights, "residue_hessian": hess.to_string(), "pairing_nondegenerate": nondeg,
                    });
                    writeln!(self.out, "{v}").ok();
                } else {
                    writeln!(self.out, "w = {}", f.ring.display(&f.w)).ok();
                    writeln!(self.out, "mu = {}", mr.mu).ok();
                    writeln!(self.out, "basis: {}", basis.join(", ")).ok();
                    match &weights {
                        Some(u) => writeln!(self.out, "weights: {}", u.join(", ")).ok(),
                        None => writeln!(self.out, "warning: w is not quasi-homogeneous").ok(),
                    };
                    writeln!(self.out, "Res[hess w] = {hess}").ok();
                    writeln!(self.out, "residue pairing nondegenerate: {nondeg}").ok();
                }
                Ok(if ok { EXIT_OK } else { EXIT_FAILED })
            }
            Command::Residue { file, poly } => {
                let f = load(file)?;
                let g = f.ring.parse(poly)?;
                let mr = MilnorRing::new(&f.w)?;
                let r = mr.residue(&g);
                if self.cli.json {
                    let v = serde_json::json!({"w": f.ring.display(&f.w).to_string(), "g": f.ring.display(&g).to_string(), "residue": r.to_string()});
                    writeln!(self.out, "{v}").ok();
                } else {
                    writeln!(self.out, "Res[{} / dw] = {r}", f.ring.display(&g)).ok();
                }
                Ok(EXIT_OK)
            }
        }
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            write!(target, "{}", e.render()).ok();
            return code;
        }
    };
    let mut ctx = Ctx { cli: &cli, out };
    match ctx.run() {
        Ok(code) => code,
        Err(f) => {
            writeln!(err, "error: {}", f.msg).ok();
            f.code
        }
    }
}
