use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::rational::Rational;
use super::scalar::Scalar;
use super::upoly::UPoly;
use crate::error::{Error, Result};

pub const NVARS: usize = 10;

/// The variables the library works with, in term-order precedence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// `X`, the cover variable.
    X,
    /// `x`, the curve variable.
    Lx,
    /// `t`, the target of the cover.
    Lt,
    Z,
    A,
    B,
    U,
    V,
    W,
    /// `T`, the case I/II locus parameter.
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::X,
        Var::Lx,
        Var::Lt,
        Var::Z,
        Var::A,
        Var::B,
        Var::U,
        Var::V,
        Var::W,
        Var::T,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["X", "x", "t", "z", "a", "b", "u", "v", "w", "T"][self.index()]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector. Ordered graded-lexicographically with `X` the most
/// significant variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = [0; NVARS];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0.iter()) {
            *x += *y;
        }
        Monomial(m)
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(o.0.iter()) {
            if *x < *y {
                return None;
            }
            *x -= *y;
        }
        Some(Monomial(m))
    }

    pub fn with_exp(&self, v: Var, e: u16) -> Monomial {
        let mut m = self.0;
        m[v.index()] = e;
        Monomial(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial over ℚ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn int(n: i64) -> Self {
        MultiPoly::constant(Rational::from(n))
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(Monomial::var(v, 1), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in it {
            let e = terms.entry(m).or_insert_with(Rational::zero);
            *e = &*e + &c;
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { terms }
    }

    /// Builds `Σ coeffs[i]·v^i`.
    pub fn from_univariate(v: Var, coeffs: &[MultiPoly]) -> Self {
        let mut out = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, r) in &c.terms {
                debug_assert_eq!(m.exp(v), 0);
                out.insert(m.with_exp(v, m.exp(v) + i as u16), r.clone());
            }
        }
        MultiPoly { terms: out }
    }

    pub fn from_upoly(v: Var, p: &UPoly<Rational>) -> Self {
        MultiPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u16), c.clone())),
        )
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    /// Coefficient of the monomial 1.
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one())
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Variables that occur, in declaration order.
    pub fn vars(&self) -> Vec<Var> {
        let mut seen = [false; NVARS];
        for m in self.terms.keys() {
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    seen[i] = true;
                }
            }
        }
        Var::ALL.iter().copied().filter(|v| seen[v.index()]).collect()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v) as u32).max()
    }

    /// Coefficients with respect to `v`, indexed by power.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let d = match self.degree_in(v) {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let mut out = vec![BTreeMap::new(); d + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].insert(m.with_exp(v, 0), c.clone());
        }
        out.into_iter().map(|terms| MultiPoly { terms }).collect()
    }

    pub fn coefficient_in(&self, v: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) as u32 == k)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    pub fn leading_coeff_in(&self, v: Var) -> MultiPoly {
        match self.degree_in(v) {
            None => MultiPoly::zero(),
            Some(d) => self.coefficient_in(v, d),
        }
    }

    /// Dense univariate view, when `v` is the only variable.
    pub fn to_upoly(&self, v: Var) -> Option<UPoly<Rational>> {
        if self.vars().iter().any(|&w| w != v) {
            return None;
        }
        Some(UPoly::new(
            self.coefficients_in(v)
                .iter()
                .map(|c| c.constant_term())
                .collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mm: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, x)| (m.mul(mm), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        MultiPoly::from_terms(self.terms.iter().filter(|(m, _)| m.exp(v) > 0).map(|(m, c)| {
            let e = m.exp(v);
            (m.with_exp(v, e - 1), c * Rational::from(e as i64))
        }))
    }

    /// Substitutes `v := r` for a polynomial `r`.
    pub fn subs(&self, v: Var, r: &MultiPoly) -> Self {
        let coeffs = self.coefficients_in(v);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * r) + c;
        }
        acc
    }

    /// Substitutes rational values for several variables at once.
    pub fn eval_partial(&self, point: &[(Var, Rational)]) -> Self {
        let mut powers: HashMap<(usize, u16), Rational> = HashMap::new();
        let mut out: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut mm = *m;
            let mut coef = c.clone();
            for (v, val) in point {
                let e = m.exp(*v);
                if e > 0 {
                    let p = powers
                        .entry((v.index(), e))
                        .or_insert_with(|| val.pow(e as i32));
                    coef = coef * &*p;
                    mm = mm.with_exp(*v, 0);
                }
            }
            let ent = out.entry(mm).or_insert_with(Rational::zero);
            *ent = &*ent + &coef;
        }
        MultiPoly {
            terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Full evaluation; errors if a variable is left unassigned.
    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let r = self.eval_partial(point);
        r.constant_value().ok_or_else(|| {
            Error::InvalidInput(format!("unassigned variables {:?}", r.vars()))
        })
    }

    /// Evaluates at scalar values; `None` if some variable is unassigned.
    pub fn eval_scalar<F: Scalar>(&self, point: &[(Var, F)]) -> Option<F> {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = F::from_rational(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let (_, x) = point.iter().find(|(v, _)| v.index() == i)?;
                t = t.times(&x.powi(e as u32));
            }
            acc = acc.plus(&t);
        }
        Some(acc)
    }

    pub fn eval1(&self, v: Var, x: &Rational) -> Self {
        self.eval_partial(&[(v, x.clone())])
    }

    /// Exact quotient `self / d`, `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = d.constant_value() {
            return Some(self.scale(&c.recip()?));
        }
        let (dm, dc) = d.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let dc_inv = dc.recip()?;
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let qm = m.div(&dm)?;
            let qc = &c * &dc_inv;
            rem = &rem - &d.mul_monomial(&qm, &qc);
            quot.insert(qm, qc);
        }
        Some(MultiPoly { terms: quot })
    }

    /// gcd of the rational coefficients, made positive, so that
    /// `self / content` has coprime integer coefficients.
    pub fn content(&self) -> Rational {
        use num_integer::Integer;
        let mut num = num_bigint::BigInt::from(0);
        let mut den = num_bigint::BigInt::from(1);
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if self.is_zero() {
            return Rational::one();
        }
        Rational::new(num, den)
    }

    /// Integer-coefficient primitive form with positive leading coefficient.
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        self.scale(&c.recip().expect("nonzero content"))
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_coeff().recip() {
            Some(r) => self.scale(&r),
            None => self.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<MultiPoly> {
        parse::Parser::new(s).parse_all()
    }
}

impl FromStr for MultiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MultiPoly::parse(s)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m:?}")?;
            } else if a.is_integer() {
                write!(f, "{a}*{m:?}")?;
            } else {
                write!(f, "({a})*{m:?}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `{"vars": [...], "terms": [[exps, "p/q"], ...]}`, leading term first,
/// exponent vectors restricted to the variables that occur.
impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let vars = self.vars();
        let names: Vec<&str> = vars.iter().map(|v| v.name()).collect();
        let terms: Vec<(Vec<u16>, &Rational)> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (vars.iter().map(|&v| m.exp(v)).collect(), c))
            .collect();
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("terms", &terms)?;
        map.serialize_entry("vars", &names)?;
        map.end()
    }
}

fn add_into(acc: &mut BTreeMap<Monomial, Rational>, rhs: &MultiPoly, negate: bool) {
    for (m, c) in &rhs.terms {
        match acc.get_mut(m) {
            Some(x) => {
                *x = if negate { &*x - c } else { &*x + c };
                if x.is_zero() {
                    acc.remove(m);
                }
            }
            None => {
                acc.insert(*m, if negate { -c } else { c.clone() });
            }
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        add_into(&mut terms, small, false);
        MultiPoly { terms }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        add_into(&mut terms, rhs, true);
        MultiPoly { terms }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let p = c1 * c2;
                match acc.get_mut(&m1.mul(m2)) {
                    Some(x) => *x = &*x + &p,
                    None => {
                        acc.insert(m1.mul(m2), p);
                    }
                }
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::int(n)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

mod parse {
    //! Recursive-descent parser for transcribed displays. Accepts `+ - * / ^`,
    //! parentheses, integer literals and single-letter variables; juxtaposition
    //! (`12za`, `2b^3a`, `(a+1)(a-1)`) means multiplication. Division is only
    //! allowed by a nonzero constant.

    use super::*;

    pub struct Parser<'a> {
        src: &'a str,
        chars: Vec<char>,
        pos: usize,
    }

    impl<'a> Parser<'a> {
        pub fn new(src: &'a str) -> Self {
            Parser {
                src,
                chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
                pos: 0,
            }
        }

        fn err(&self, msg: &str) -> Error {
            Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
        }

        fn peek(&self) -> Option<char> {
            self.chars.get(self.pos).copied()
        }

        pub fn parse_all(mut self) -> Result<MultiPoly> {
            let p = self.expr()?;
            if self.pos != self.chars.len() {
                return Err(self.err("trailing input"));
            }
            Ok(p)
        }

        fn expr(&mut self) -> Result<MultiPoly> {
            let mut acc = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    -self.term()?
                }
                Some('+') => {
                    self.pos += 1;
                    self.term()?
                }
                _ => self.term()?,
            };
            loop {
                match self.peek() {
                    Some('+') => {
                        self.pos += 1;
                        acc = acc + self.term()?;
                    }
                    Some('-') => {
                        self.pos += 1;
                        acc = acc - self.term()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }

        fn starts_factor(c: char) -> bool {
            c.is_ascii_alphanumeric() || c == '('
        }

        fn term(&mut self) -> Result<MultiPoly> {
            let mut acc = self.power()?;
            loop {
                match self.peek() {
                    Some('*') => {
                        self.pos += 1;
                        acc = acc * self.power()?;
                    }
                    Some('/') => {
                        self.pos += 1;
                        let d = self.power()?;
                        let c = d
                            .constant_value()
                            .filter(|c| !c.is_zero())
                            .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                        acc = acc.scale(&c.recip().unwrap());
                    }
                    Some(c) if Self::starts_factor(c) => {
                        acc = acc * self.power()?;
                    }
                    _ => return Ok(acc),
                }
            }
        }

        fn power(&mut self) -> Result<MultiPoly> {
            let base = self.atom()?;
            if self.peek() == Some('^') {
                self.pos += 1;
                let start = self.pos;
                while self.peek().map_or(false, |c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let e: u32 = self.chars[start..self.pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| self.err("bad exponent"))?;
                return Ok(base.pow(e));
            }
            Ok(base)
        }

        fn atom(&mut self) -> Result<MultiPoly> {
            match self.peek() {
                Some('(') => {
                    self.pos += 1;
                    let e = self.expr()?;
                    if self.peek() != Some(')') {
                        return Err(self.err("expected ')'"));
                    }
                    self.pos += 1;
                    Ok(e)
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = self.pos;
                    while self.peek().map_or(false, |c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                    let s: String = self.chars[start..self.pos].iter().collect();
                    let r: Rational = s.parse()?;
                    Ok(MultiPoly::constant(r))
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let v = Var::from_name(&c.to_string())
                        .ok_or_else(|| self.err(&format!("unknown variable {c:?}")))?;
                    self.pos += 1;
                    Ok(MultiPoly::var(v))
                }
                _ => Err(self.err("unexpected token")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let f = p("x^2 + (2a + 2b + a^2)x + 2ab + b^2");
        assert_eq!(f.degree_in(Var::Lx), Some(2));
        assert_eq!(f.coefficient_in(Var::Lx, 1), p("a^2+2a+2b"));
        assert_eq!(p("(a+1)(a-1)"), p("a^2-1"));
        assert_eq!(p("3/4*a - a/4"), p("a/2"));
        assert!(MultiPoly::parse("12ya").is_err());
        assert!(MultiPoly::parse("a/(b)").is_err());
        assert_eq!(p("-2X^2*z"), p("-(2*z*X^2)"));
    }

    #[test]
    fn grlex_leading_term() {
        let f = p("a^3 + X^2 + b^4");
        let (m, _) = f.leading_term().unwrap();
        assert_eq!(m.exp(Var::B), 4);
        let g = p("a*b + X^2");
        assert_eq!(g.leading_term().unwrap().0.exp(Var::X), 2);
    }

    #[test]
    fn arithmetic_and_division() {
        let a = p("a^2 + 3ab - b + 7");
        let b = p("a - 2b^2 + 1/3");
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        assert_eq!((&prod + &MultiPoly::one()).exact_div(&a), None);
        assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn substitution() {
        let f = p("X^2 + a*X + b");
        let g = f.subs(Var::X, &p("a+1"));
        assert_eq!(g, p("(a+1)^2 + a(a+1) + b"));
        let v = f
            .eval(&[(Var::X, q(2, 1)), (Var::A, q(1, 2)), (Var::B, q(-3, 1))])
            .unwrap();
        assert_eq!(v, q(2, 1));
        assert!(f.eval(&[(Var::X, q(2, 1))]).is_err());
    }

    #[test]
    fn serialization_shape() {
        let s = serde_json::to_string(&p("2a^2 - b/3")).unwrap();
        assert_eq!(s, r#"{"terms":[[[2,0],"2"],[[0,1],"-1/3"]],"vars":["a","b"]}"#);
    }
}
