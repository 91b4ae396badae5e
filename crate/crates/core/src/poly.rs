//! Exact multivariate polynomials over the rationals.
//!
//! A [`MultiPoly`] is a sparse map from dense exponent vectors to nonzero
//! rational coefficients. Variable names live in a separate [`Ring`], which
//! is only needed for parsing and printing.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn weighted_degree(&self, weights: &[Rational]) -> Rational {
        self.0
            .iter()
            .zip(weights)
            .filter(|(&e, _)| e != 0)
            .map(|(&e, u)| u * rat(e as i64))
            .fold(Rational::zero(), |a, b| a + b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(
                other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect(),
            ))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Index of the variable if this monomial is a pure power `x_i^k`, `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    fn set(&mut self, i: usize, e: u32) {
        self.0[i] = e;
    }
}

/// Global monomial orders. All are multiplicative with `1` minimal.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Positive weights; ties broken by reverse lexicographic comparison.
    WeightedDegRevLex(Vec<Rational>),
}

fn revlex_tiebreak(a: &Monomial, b: &Monomial) -> Ordering {
    for (ea, eb) in a.0.iter().zip(&b.0).rev() {
        if ea != eb {
            // smaller exponent in the last differing variable is larger
            return eb.cmp(ea);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex_tiebreak(a, b)),
            MonomialOrder::WeightedDegRevLex(w) => a
                .weighted_degree(w)
                .cmp(&b.weighted_degree(w))
                .then_with(|| revlex_tiebreak(a, b)),
        }
    }
}

/// Variable names for parsing and printing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Union of variable lists, keeping `self`'s order first.
    pub fn union(&self, other: &Ring) -> Ring {
        let mut names = self.names.clone();
        for n in &other.names {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        Ring { names }
    }

    pub fn parse(&self, text: &str) -> Result<MultiPoly> {
        parse_poly(text, self)
    }

    pub fn display<'a>(&'a self, p: &'a MultiPoly) -> PolyDisplay<'a> {
        PolyDisplay {
            ring: self,
            poly: p,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(Monomial::var(nvars, i), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(
        nvars: usize,
        terms: I,
    ) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        match order {
            MonomialOrder::Lex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `self + c * m * other`, in place.
    pub fn add_scaled_shifted(&mut self, other: &MultiPoly, m: &Monomial, c: &Rational) {
        for (k, a) in &other.terms {
            self.add_term(k.mul(m), a * c);
        }
    }

    /// Formal partial derivative with respect to variable `i` (0-based).
    pub fn partial_derivative(&self, i: usize) -> Result<MultiPoly> {
        if i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                nvars: self.nvars,
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.set(i, e - 1);
            out.add_term(dm, c * rat(e as i64));
        }
        Ok(out)
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars)
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    /// Determinant of the matrix of second partial derivatives.
    pub fn hessian_det(&self) -> MultiPoly {
        let grad = self.gradient();
        let hess: Vec<Vec<MultiPoly>> = grad.iter().map(MultiPoly::gradient).collect();
        poly_det(&hess, self.nvars)
    }

    /// Re-express in a ring with `nvars` variables; variable `i` goes to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        let mut out = MultiPoly::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(nvars);
            for (i, &k) in m.exponents().iter().enumerate() {
                e.set(map[i], k);
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Drop every term with some exponent `>= bounds[i]`.
    pub fn truncate_box(&self, bounds: &[u32]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponents().iter().zip(bounds).all(|(e, b)| e < b))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Weighted degree if every term has the same one.
    pub fn weighted_homogeneous_degree(&self, weights: &[Rational]) -> Option<Rational> {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Positive rational weights `u` with `sum_i u_i a_i = 1` for every exponent
    /// vector `a` of `self`, or `None` if there are none.
    ///
    /// When the weights are not unique the minimum-norm solution is returned
    /// (for `xy` that is `(1/2, 1/2)`); if it is not positive, free parameters
    /// are tried on a small grid of unit fractions.
    pub fn quasi_homogeneous_weights(&self) -> Option<Vec<Rational>> {
        if self.is_zero() || !self.constant_term().is_zero() {
            return None;
        }
        let rows: Vec<Vec<Rational>> = self
            .terms
            .keys()
            .map(|m| m.exponents().iter().map(|&e| rat(e as i64)).collect())
            .collect();
        let a = crate::linalg::RatMatrix::from_rows(rows);
        let ones = vec![Rational::one(); a.nrows()];
        let positive = |u: &[Rational]| u.iter().all(Rational::is_positive);
        if let Some(u) = a.min_norm_solution(&ones) {
            if positive(&u) {
                return Some(u);
            }
        }
        let (particular, null) = a.solve_affine(&ones)?;
        if null.is_empty() {
            return None;
        }
        let grid: Vec<Rational> = (2..=12).map(|d| frac(1, d)).collect();
        let mut idx = vec![0usize; null.len()];
        loop {
            let mut u = particular.clone();
            for (k, v) in null.iter().enumerate() {
                for (ui, vi) in u.iter_mut().zip(v) {
                    *ui += &grid[idx[k]] * vi;
                }
            }
            if positive(&u) {
                return Some(u);
            }
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return None;
                }
                idx[k] += 1;
                if idx[k] < grid.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub fn poly_det(m: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols, nvars)
}

fn det_rec(m: &[Vec<MultiPoly>], row: usize, cols: &[usize], nvars: usize) -> MultiPoly {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = det_rec(m, row + 1, &rest, nvars);
        let t = &m[row][c] * &minor;
        if k % 2 == 0 {
            acc += &t;
        } else {
            acc -= &t;
        }
    }
    acc
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &rhs.terms {
            out.add_scaled_shifted(self, m, c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += &rhs;
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        self -= &rhs;
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    ring: &'a Ring,
    poly: &'a MultiPoly,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let order = MonomialOrder::DegRevLex;
        let mut terms: Vec<_> = self.poly.terms().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Parse a polynomial: signed terms, each an optional rational coefficient
/// (`3`, `3/4`) joined by `*` to variable powers `x^k`. Whitespace is ignored.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<MultiPoly> {
    let mut p = Parser::new(text, ring);
    let out = p.poly()?;
    p.skip_ws();
    if let Some((pos, c)) = p.peek() {
        return Err(Error::Syntax {
            pos,
            msg: format!("unexpected `{c}`"),
        });
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    end: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn new(text: &str, ring: &'a Ring) -> Self {
        Parser {
            chars: text.char_indices().collect(),
            i: 0,
            end: text.len(),
            ring,
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.get(self.i), Some((_, c)) if c.is_whitespace()) {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.i).copied()
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |(p, _)| p)
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some((_, '+')) => {
                self.i += 1;
                Some(false)
            }
            Some((_, '-')) | Some((_, '\u{2212}')) => {
                self.i += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.ring.nvars());
        let mut negate = self.sign().unwrap_or(false);
        loop {
            let t = self.term()?;
            if negate {
                out -= &t;
            } else {
                out += &t;
            }
            match self.sign() {
                Some(n) => negate = n,
                None => return Ok(out),
            }
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.i;
        while matches!(self.peek(), Some((_, c)) if c.is_ascii_digit()) {
            self.i += 1;
        }
        if start == self.i {
            return Err(Error::Syntax {
                pos: self.pos(),
                msg: "expected a number".into(),
            });
        }
        let s: String = self.chars[start..self.i].iter().map(|(_, c)| c).collect();
        Ok(s.parse().expect("digits"))
    }

    fn factor(&mut self, nvars: usize) -> Result<(Monomial, Rational)> {
        self.skip_ws();
        match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => {
                let num = self.number()?;
                self.skip_ws();
                let mut coeff = Rational::from_integer(num);
                if let Some((_, '/')) = self.peek() {
                    self.i += 1;
                    let pos = self.pos();
                    let den = self.number()?;
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            pos,
                            msg: "zero denominator".into(),
                        });
                    }
                    coeff /= Rational::from_integer(den);
                }
                Ok((Monomial::one(nvars), coeff))
            }
            Some((pos, c)) if c.is_alphabetic() || c == '_' => {
                let start = self.i;
                while matches!(self.peek(), Some((_, c)) if c.is_alphanumeric() || c == '_') {
                    self.i += 1;
                }
                let name: String = self.chars[start..self.i].iter().map(|(_, c)| c).collect();
                let idx = self
                    .ring
                    .index_of(&name)
                    .ok_or(Error::UnknownVariable { name, pos })?;
                self.skip_ws();
                let mut e = 1u32;
                if let Some((_, '^')) = self.peek() {
                    self.i += 1;
                    let pos = self.pos();
                    e = self.number()?.try_into().map_err(|_| Error::Syntax {
                        pos,
                        msg: "exponent too large".into(),
                    })?;
                }
                let mut m = Monomial::one(nvars);
                m.set(idx, e);
                Ok((m, Rational::one()))
            }
            Some((pos, c)) => Err(Error::Syntax {
                pos,
                msg: format!("unexpected `{c}`"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let nvars = self.ring.nvars();
        let (mut m, mut c) = self.factor(nvars)?;
        loop {
            self.skip_ws();
            if let Some((_, '*')) = self.peek() {
                self.i += 1;
                let (m2, c2) = self.factor(nvars)?;
                m = m.mul(&m2);
                c *= c2;
            } else {
                return Ok(MultiPoly::term(m, c));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(&["x", "y"])
    }

    #[test]
    fn parse_examples() {
        let r = xy();
        let p = r.parse("x^3 + y^3").unwrap();
        assert_eq!(p.num_terms(), 2);
        assert!(r.parse("0").unwrap().is_zero());
        let q = r.parse("2*x*y - x*y").unwrap();
        assert_eq!(
            q,
            MultiPoly::term(Monomial::from_exponents(&[1, 1]), rat(1))
        );
        let s = r.parse(" -3/4*x^2*y + 1/2 ").unwrap();
        assert_eq!(s.coeff(&Monomial::from_exponents(&[2, 1])), frac(-3, 4));
        assert_eq!(s.constant_term(), frac(1, 2));
    }

    #[test]
    fn parse_errors() {
        let r = xy();
        assert!(matches!(
            r.parse("x + z"),
            Err(Error::UnknownVariable { pos: 4, .. })
        ));
        assert!(matches!(r.parse("x + "), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(r.parse("x y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(r.parse("1/0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn print_round_trip() {
        let r = xy();
        for s in ["x^3 + y^3", "-x*y + 3/2", "0", "-1", "x^2 - 2*x*y + y^2"] {
            let p = r.parse(s).unwrap();
            let printed = r.display(&p).to_string();
            assert_eq!(r.parse(&printed).unwrap(), p, "{s} -> {printed}");
        }
        assert_eq!(
            r.display(&r.parse("y^3 + x^3 - 1").unwrap()).to_string(),
            "x^3 + y^3 - 1"
        );
    }

    #[test]
    fn partials() {
        let r = xy();
        let w = r.parse("x^3 + y^3").unwrap();
        assert_eq!(w.partial_derivative(0).unwrap(), r.parse("3*x^2").unwrap());
        assert_eq!(
            r.parse("x*y").unwrap().partial_derivative(1).unwrap(),
            r.parse("x").unwrap()
        );
        assert!(r
            .parse("7")
            .unwrap()
            .partial_derivative(0)
            .unwrap()
            .is_zero());
        assert!(matches!(
            w.partial_derivative(2),
            Err(Error::IndexOutOfRange { index: 2, nvars: 2 })
        ));
    }

    #[test]
    fn hessians() {
        let r = xy();
        assert_eq!(
            r.parse("x*y").unwrap().hessian_det(),
            r.parse("-1").unwrap()
        );
        assert_eq!(
            r.parse("x^3 + y^3").unwrap().hessian_det(),
            r.parse("36*x*y").unwrap()
        );
        let one = Ring::new(&["x"]);
        assert_eq!(
            one.parse("x^2").unwrap().hessian_det(),
            one.parse("2").unwrap()
        );
    }

    #[test]
    fn weights() {
        let r = xy();
        assert_eq!(
            r.parse("x^3 + y^3").unwrap().quasi_homogeneous_weights(),
            Some(vec![frac(1, 3), frac(1, 3)])
        );
        assert_eq!(
            r.parse("x*y").unwrap().quasi_homogeneous_weights(),
            Some(vec![frac(1, 2), frac(1, 2)])
        );
        assert_eq!(
            r.parse("x^2 + x^3").unwrap().quasi_homogeneous_weights(),
            None
        );
        assert_eq!(
            r.parse("x^3 + x*y^2").unwrap().quasi_homogeneous_weights(),
            Some(vec![frac(1, 3), frac(1, 3)])
        );
        assert_eq!(
            r.parse("x^2 + 1").unwrap().quasi_homogeneous_weights(),
            None
        );
    }

    #[test]
    fn degrevlex_order() {
        let o = MonomialOrder::DegRevLex;
        let m = |a: &[u32]| Monomial::from_exponents(a);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Greater
        );
    }
}
