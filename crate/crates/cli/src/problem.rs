//! Problem files: one ring, one potential, named factorizations and
//! endomorphisms, and the checks to run.
//!
//! ```text
//! # comment
//! ring x, y
//! w = x^3 + y^3
//! mf P = tensor(koszul(x, x^2), koszul(y, y^2))
//! mf Q = shift(P)
//! mf D = explicit{d1 = [[x, y], [-x*y, x^2]], d0 = [[x^2, -y], [x*y, x]]}
//! endo a on P = [[x, 0, 0, 0], [0, x, 0, 0], [0, 0, x, 0], [0, 0, 0, x]]
//! endo b on P = id
//! verify P Q
//! cardy P P a b
//! ```
//!
//! Endomorphism expressions: `id`, a matrix literal, a name, `compose(a, b)`,
//! `scale(poly, a)` and `tensor(a, b)` for `a` on `M`, `b` on `N` giving an
//! endomorphism of `tensor(M, N)`. Brackets may span several lines.

use std::fmt;

use mfhrr::chern::{identity_matrix, CardyCase, HrrCase};
use mfhrr::groebner::PolyMatrix;
use mfhrr::mf::{mat_mul, tensor_morphism, MatrixFactorization};
use mfhrr::poly::{MultiPoly, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ProblemError {}

type PResult<T> = Result<T, String>;

#[derive(Clone, Debug)]
pub struct NamedMf {
    pub name: String,
    pub expr: String,
    pub mf: MatrixFactorization,
}

impl NamedMf {
    pub fn label(&self) -> String {
        format!("{} = {}", self.name, self.expr)
    }
}

#[derive(Clone, Debug)]
pub struct Endo {
    pub name: String,
    pub on: String,
    pub expr: String,
    pub matrix: PolyMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Verify {
        p: String,
        q: String,
    },
    Cardy {
        p: String,
        q: String,
        alpha: String,
        beta: String,
    },
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub name: String,
    pub ring: Ring,
    pub w: MultiPoly,
    pub mfs: Vec<NamedMf>,
    pub endos: Vec<Endo>,
    pub checks: Vec<Check>,
}

/// Join physical lines into statements, keeping the first line number.
fn statements(text: &str) -> PResult<Vec<(usize, String)>> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    let mut depth: i64 = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if current.is_empty() {
            if line.trim().is_empty() {
                continue;
            }
            start = k + 1;
        } else {
            current.push(' ');
        }
        current.push_str(line.trim());
        for c in line.chars() {
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => depth -= 1,
                _ => {}
            }
        }
        if depth < 0 {
            return Err(format!("line {}: unbalanced closing bracket", k + 1));
        }
        if depth == 0 {
            out.push((start, std::mem::take(&mut current)));
        }
    }
    if !current.is_empty() {
        return Err(format!("line {start}: unclosed bracket"));
    }
    Ok(out)
}

/// Split at top-level occurrences of `sep`.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i64;
    let mut last = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[last..i]);
                last = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[last..]);
    out
}

/// `name(args)` → `(name, args)`.
fn call(s: &str) -> Option<(&str, Vec<&str>)> {
    let s = s.trim();
    let open = s.find('(')?;
    if !s.ends_with(')') {
        return None;
    }
    let name = s[..open].trim();
    let inner = &s[open + 1..s.len() - 1];
    Some((
        name,
        split_top(inner, ',').into_iter().map(str::trim).collect(),
    ))
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_alphabetic() || c == '_')
        && cs.all(|c| c.is_alphanumeric() || c == '_')
}

struct Parser {
    ring: Option<Ring>,
    w: Option<MultiPoly>,
    mfs: Vec<NamedMf>,
    endos: Vec<Endo>,
    checks: Vec<Check>,
}

impl Parser {
    fn ring(&self) -> PResult<&Ring> {
        self.ring
            .as_ref()
            .ok_or_else(|| "`ring` must come first".to_string())
    }

    fn poly(&self, s: &str) -> PResult<MultiPoly> {
        self.ring()?
            .parse(s.trim())
            .map_err(|e| format!("in `{}`: {e}", s.trim()))
    }

    fn mf(&self, name: &str) -> PResult<&NamedMf> {
        self.mfs
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| format!("unknown factorization `{name}`"))
    }

    fn endo(&self, name: &str) -> PResult<&Endo> {
        self.endos
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| format!("unknown endomorphism `{name}`"))
    }

    fn matrix(&self, s: &str) -> PResult<PolyMatrix> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| format!("expected a matrix `[[...], ...]`, found `{s}`"))?;
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        let rows = split_top(inner, ',')
            .into_iter()
            .map(|row| {
                let row = row.trim();
                let cells = row
                    .strip_prefix('[')
                    .and_then(|t| t.strip_suffix(']'))
                    .ok_or_else(|| format!("expected a row `[...]`, found `{row}`"))?;
                split_top(cells, ',')
                    .into_iter()
                    .map(|c| self.poly(c))
                    .collect::<PResult<Vec<_>>>()
            })
            .collect::<PResult<Vec<_>>>()?;
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err("ragged matrix".into());
        }
        Ok(rows)
    }

    fn mf_expr(&self, s: &str) -> PResult<MatrixFactorization> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("explicit") {
            let body = rest
                .trim()
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or("expected `explicit{d1 = [[...]], d0 = [[...]]}`")?;
            let mut d1 = None;
            let mut d0 = None;
            for part in split_top(body, ',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or("expected `d1 = ...` and `d0 = ...`")?;
                match key.trim() {
                    "d1" => d1 = Some(self.matrix(value)?),
                    "d0" => d0 = Some(self.matrix(value)?),
                    k => return Err(format!("unknown block `{k}` (expected d1 or d0)")),
                }
            }
            let (d1, d0) = (d1.ok_or("missing d1")?, d0.ok_or("missing d0")?);
            let nvars = self.ring()?.nvars();
            let w = match (d1.first(), d0.first()) {
                (Some(_), Some(_)) => mat_mul(&d1, &d0, d0.len(), d1.len(), nvars)[0][0].clone(),
                _ => self
                    .w
                    .clone()
                    .ok_or("`w` must be declared before an empty explicit factorization")?,
            };
            return MatrixFactorization::explicit(w, d1, d0).map_err(|e| e.to_string());
        }
        if let Some((name, args)) = call(s) {
            let arity = |n: usize| {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(format!(
                        "`{name}` takes {n} argument(s), got {}",
                        args.len()
                    ))
                }
            };
            return match name {
                "koszul" => {
                    arity(2)?;
                    Ok(MatrixFactorization::koszul(
                        &self.poly(args[0])?,
                        &self.poly(args[1])?,
                    ))
                }
                "tensor" => {
                    arity(2)?;
                    self.mf_expr(args[0])?
                        .tensor(&self.mf_expr(args[1])?)
                        .map_err(|e| e.to_string())
                }
                "sum" => {
                    arity(2)?;
                    self.mf_expr(args[0])?
                        .sum(&self.mf_expr(args[1])?)
                        .map_err(|e| e.to_string())
                }
                "shift" => {
                    arity(1)?;
                    Ok(self.mf_expr(args[0])?.shift())
                }
                "dual" => {
                    arity(1)?;
                    Ok(self.mf_expr(args[0])?.dual())
                }
                other => Err(format!("unknown constructor `{other}`")),
            };
        }
        if is_ident(s) {
            return Ok(self.mf(s)?.mf.clone());
        }
        Err(format!("cannot parse factorization expression `{s}`"))
    }

    /// Endomorphism expression of the factorization `on`.
    fn endo_expr(&self, s: &str, on: &MatrixFactorization) -> PResult<PolyMatrix> {
        let s = s.trim();
        let nvars = on.nvars();
        if s == "id" {
            return Ok(identity_matrix(nvars, on.rank()));
        }
        if s.starts_with('[') {
            return self.matrix(s);
        }
        if let Some((name, args)) = call(s) {
            return match (name, args.as_slice()) {
                ("compose", [a, b]) => {
                    let (a, b) = (self.endo_expr(a, on)?, self.endo_expr(b, on)?);
                    check_size(&a, on)?;
                    check_size(&b, on)?;
                    Ok(mat_mul(&a, &b, on.rank(), on.rank(), nvars))
                }
                ("scale", [c, a]) => {
                    let c = self.poly(c)?;
                    Ok(self
                        .endo_expr(a, on)?
                        .iter()
                        .map(|r| r.iter().map(|x| &c * x).collect())
                        .collect())
                }
                ("tensor", [a, b]) => {
                    let (ea, eb) = (self.endo(a)?, self.endo(b)?);
                    let (ma, mb) = (&self.mf(&ea.on)?.mf, &self.mf(&eb.on)?.mf);
                    let t = ma.tensor(mb).map_err(|e| e.to_string())?;
                    if t.delta() != on.delta() {
                        return Err(format!(
                            "tensor({a}, {b}) acts on tensor({}, {}), which is not this factorization",
                            ea.on, eb.on
                        ));
                    }
                    Ok(tensor_morphism(ma, mb, &ea.matrix, &eb.matrix))
                }
                _ => Err(format!("cannot parse endomorphism expression `{s}`")),
            };
        }
        if is_ident(s) {
            return Ok(self.endo(s)?.matrix.clone());
        }
        Err(format!("cannot parse endomorphism expression `{s}`"))
    }

    fn statement(&mut self, stmt: &str) -> PResult<()> {
        let (head, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt, ""));
        let rest = rest.trim();
        match head {
            "ring" => {
                if self.ring.is_some() {
                    return Err("ring declared twice".into());
                }
                let names: Vec<&str> = rest
                    .split([',', ' '])
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .collect();
                if names.is_empty() || !names.iter().all(|n| is_ident(n)) {
                    return Err("expected `ring x, y, ...`".into());
                }
                self.ring = Some(Ring::new(&names));
            }
            "mf" => {
                let (name, expr) = rest
                    .split_once('=')
                    .ok_or("expected `mf NAME = expression`")?;
                let name = name.trim();
                if !is_ident(name) || self.mfs.iter().any(|m| m.name == name) {
                    return Err(format!("bad or duplicate factorization name `{name}`"));
                }
                let mf = self.mf_expr(expr)?;
                if let Err(v) = mf.validate() {
                    let ring = self.ring()?;
                    return Err(format!(
                        "`{name}` is not a matrix factorization: entry ({}, {}) of {} is {}, expected {}",
                        v.row,
                        v.col,
                        v.product,
                        ring.display(&v.got),
                        ring.display(&v.expected)
                    ));
                }
                self.mfs.push(NamedMf {
                    name: name.to_string(),
                    expr: expr.trim().to_string(),
                    mf,
                });
            }
            "endo" => {
                let (lhs, expr) = rest
                    .split_once('=')
                    .ok_or("expected `endo NAME on MF = expression`")?;
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                let [name, "on", on] = parts.as_slice() else {
                    return Err("expected `endo NAME on MF = expression`".into());
                };
                if !is_ident(name) || self.endos.iter().any(|e| e.name == *name) {
                    return Err(format!("bad or duplicate endomorphism name `{name}`"));
                }
                let target = self.mf(on)?.mf.clone();
                let matrix = self.endo_expr(expr, &target)?;
                check_size(&matrix, &target)?;
                self.endos.push(Endo {
                    name: name.to_string(),
                    on: on.to_string(),
                    expr: expr.trim().to_string(),
                    matrix,
                });
            }
            "verify" => {
                let args: Vec<&str> = rest.split_whitespace().collect();
                let [p, q] = args.as_slice() else {
                    return Err("expected `verify P Q`".into());
                };
                self.checks.push(Check::Verify {
                    p: p.to_string(),
                    q: q.to_string(),
                });
            }
            "cardy" => {
                let args: Vec<&str> = rest.split_whitespace().collect();
                let [p, q, a, b] = args.as_slice() else {
                    return Err("expected `cardy P Q alpha beta`".into());
                };
                self.checks.push(Check::Cardy {
                    p: p.to_string(),
                    q: q.to_string(),
                    alpha: a.to_string(),
                    beta: b.to_string(),
                });
            }
            _ => {
                let Some((lhs, rhs)) = stmt.split_once('=') else {
                    return Err(format!("unknown statement `{head}`"));
                };
                if lhs.trim() != "w" {
                    return Err(format!("unknown statement `{}`", lhs.trim()));
                }
                if self.w.is_some() {
                    return Err("w declared twice".into());
                }
                self.w = Some(self.poly(rhs)?);
            }
        }
        Ok(())
    }
}

fn check_size(m: &PolyMatrix, on: &MatrixFactorization) -> PResult<()> {
    let r = on.rank();
    if m.len() != r || m.iter().any(|row| row.len() != r) {
        return Err(format!("endomorphism must be a {r}x{r} matrix"));
    }
    Ok(())
}

impl ProblemFile {
    pub fn parse(name: &str, text: &str) -> Result<ProblemFile, ProblemError> {
        let stmts = statements(text).map_err(|msg| ProblemError { line: 0, msg })?;
        let mut p = Parser {
            ring: None,
            w: None,
            mfs: Vec::new(),
            endos: Vec::new(),
            checks: Vec::new(),
        };
        for (line, stmt) in &stmts {
            p.statement(stmt)
                .map_err(|msg| ProblemError { line: *line, msg })?;
        }
        let last = stmts.last().map_or(0, |s| s.0);
        let err = |msg: &str| ProblemError {
            line: last,
            msg: msg.to_string(),
        };
        let ring = p.ring.ok_or_else(|| err("missing `ring` declaration"))?;
        let w = p.w.ok_or_else(|| err("missing `w = ...`"))?;
        let file = ProblemFile {
            name: name.to_string(),
            ring,
            w,
            mfs: p.mfs,
            endos: p.endos,
            checks: p.checks,
        };
        file.check_references().map_err(|msg| err(&msg))?;
        Ok(file)
    }

    pub fn mf(&self, name: &str) -> Option<&NamedMf> {
        self.mfs.iter().find(|m| m.name == name)
    }

    pub fn endo(&self, name: &str) -> Option<&Endo> {
        self.endos.iter().find(|e| e.name == name)
    }

    fn factorization_of_w(&self, name: &str) -> PResult<&NamedMf> {
        let m = self
            .mf(name)
            .ok_or_else(|| format!("unknown factorization `{name}`"))?;
        if m.mf.w != self.w {
            return Err(format!(
                "`{name}` factors {}, not w = {}",
                self.ring.display(&m.mf.w),
                self.ring.display(&self.w)
            ));
        }
        Ok(m)
    }

    fn check_references(&self) -> PResult<()> {
        for c in &self.checks {
            match c {
                Check::Verify { p, q } => {
                    self.factorization_of_w(p)?;
                    self.factorization_of_w(q)?;
                }
                Check::Cardy { p, q, alpha, beta } => {
                    self.factorization_of_w(p)?;
                    self.factorization_of_w(q)?;
                    for (e, m) in [(alpha, p), (beta, q)] {
                        let endo = self
                            .endo(e)
                            .ok_or_else(|| format!("unknown endomorphism `{e}`"))?;
                        if &endo.on != m {
                            return Err(format!("`{e}` is declared on `{}`, not `{m}`", endo.on));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Riemann-Roch cases: the `verify` lines, or every ordered pair of
    /// factorizations of `w` when there are none.
    pub fn hrr_cases(&self) -> Vec<HrrCase> {
        let pairs: Vec<(String, String)> = if self
            .checks
            .iter()
            .any(|c| matches!(c, Check::Verify { .. }))
        {
            self.checks
                .iter()
                .filter_map(|c| match c {
                    Check::Verify { p, q } => Some((p.clone(), q.clone())),
                    _ => None,
                })
                .collect()
        } else {
            let names: Vec<&String> = self
                .mfs
                .iter()
                .filter(|m| m.mf.w == self.w)
                .map(|m| &m.name)
                .collect();
            names
                .iter()
                .flat_map(|p| names.iter().map(move |q| ((*p).clone(), (*q).clone())))
                .collect()
        };
        pairs
            .into_iter()
            .map(|(p, q)| {
                let (p, q) = (self.mf(&p).unwrap(), self.mf(&q).unwrap());
                HrrCase {
                    ring: self.ring.clone(),
                    p_label: p.label(),
                    p: p.mf.clone(),
                    q_label: q.label(),
                    q: q.mf.clone(),
                }
            })
            .collect()
    }

    pub fn cardy_cases(&self) -> Vec<CardyCase> {
        self.checks
            .iter()
            .filter_map(|c| match c {
                Check::Cardy { p, q, alpha, beta } => {
                    let (p, q) = (self.mf(p).unwrap(), self.mf(q).unwrap());
                    let (a, b) = (self.endo(alpha).unwrap(), self.endo(beta).unwrap());
                    Some(CardyCase {
                        ring: self.ring.clone(),
                        p_label: p.label(),
                        p: p.mf.clone(),
                        q_label: q.label(),
                        q: q.mf.clone(),
                        alpha_label: format!("{} = {}", a.name, a.expr),
                        alpha: a.matrix.clone(),
                        beta_label: format!("{} = {}", b.name, b.expr),
                        beta: b.matrix.clone(),
                    })
                }
                _ => None,
            })
            .collect()
    }

    /// Look up a factorization by name, or parse an expression in this file's context.
    pub fn resolve_mf(&self, expr: &str) -> Result<NamedMf, ProblemError> {
        if let Some(m) = self.mf(expr.trim()) {
            return Ok(m.clone());
        }
        let p = Parser {
            ring: Some(self.ring.clone()),
            w: Some(self.w.clone()),
            mfs: self.mfs.clone(),
            endos: Vec::new(),
            checks: Vec::new(),
        };
        let mf = p
            .mf_expr(expr)
            .map_err(|msg| ProblemError { line: 0, msg })?;
        Ok(NamedMf {
            name: expr.trim().to_string(),
            expr: expr.trim().to_string(),
            mf,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "
        # a Fermat cubic
        ring x, y
        w = x^3 + y^3
        mf P = tensor(koszul(x, x^2), koszul(y, y^2))
        mf Q = shift(P)
        mf D = explicit{d1 = [[x]], d0 = [[x^2]]}
        mf Kx = koszul(x, x^2)
        mf Ky = koszul(y, y^2)
        endo a on Kx = [[0, 1],
                        [-x, 0]]
        endo b on Ky = id
        endo t on P = tensor(a, b)
        endo s on P = scale(x + y, id)
        verify P Q
        cardy P P t s
    ";

    #[test]
    fn parses_sample() {
        let f = ProblemFile::parse("sample", SAMPLE).unwrap();
        assert_eq!(f.mfs.len(), 5);
        assert_eq!(f.endos.len(), 4);
        assert_eq!(f.hrr_cases().len(), 1);
        assert_eq!(f.cardy_cases().len(), 1);
        assert_eq!(f.mf("Q").unwrap().mf.r0, 2);
        assert_eq!(f.mf("D").unwrap().mf.w, f.ring.parse("x^3").unwrap());
    }

    #[test]
    fn reports_line_numbers() {
        let e = ProblemFile::parse("bad", "ring x\nw = x^2\nmf P = koszul(x, x\n").unwrap_err();
        assert!(e.msg.contains("unclosed"));
        let e = ProblemFile::parse("bad", "ring x\nw = x^2\nmf P = koszul(x, z)\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = ProblemFile::parse(
            "bad",
            "ring x, y\nw = x*y\nmf P = explicit{d1 = [[x]], d0 = [[x]]}\nverify P P\n",
        )
        .unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.msg.contains("factors"), "{}", e.msg);
        let e = ProblemFile::parse("bad", "ring x\nw = x^2\nmf P = frobnicate(x)\n").unwrap_err();
        assert!(e.msg.contains("unknown constructor"));
    }

    #[test]
    fn default_pairs() {
        let f = ProblemFile::parse(
            "pairs",
            "ring x\nw = x^3\nmf A = koszul(x, x^2)\nmf B = koszul(x^2, x)\nmf N = dual(A)\n",
        )
        .unwrap();
        assert_eq!(f.hrr_cases().len(), 4);
    }
}
