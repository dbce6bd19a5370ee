use std::fmt;

use serde::Serialize;

use super::multipoly::{MultiPoly, Var};
use super::rational::Rational;
use super::resultant::gcd;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Quotient of polynomials in lowest terms, denominator with leading
/// coefficient 1 (grlex), zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidInput("zero denominator".into()));
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(),
            };
        }
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.exact_div(&g).expect("gcd divides"),
                    den.exact_div(&g).expect("gcd divides"),
                )
            }
        };
        let k = den.leading_coeff().recip().expect("nonzero denominator");
        RatFunc {
            num: num.scale(&k),
            den: den.scale(&k),
        }
    }

    pub fn poly(p: MultiPoly) -> Self {
        RatFunc {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        RatFunc::poly(MultiPoly::var(v))
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::poly(MultiPoly::constant(c))
    }

    pub fn parse(num: &str, den: &str) -> Result<Self> {
        RatFunc::new(MultiPoly::parse(num)?, MultiPoly::parse(den)?)
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_constant() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalize(&self.num + &o.num, self.den.clone());
        }
        Self::normalize(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::normalize(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalize(self.den.clone(), self.num.clone()))
        }
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    pub fn pow(&self, e: i32) -> Option<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        Some(RatFunc {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        })
    }

    /// Substitutes `v := r` for a rational function `r`.
    pub fn subs(&self, v: Var, r: &RatFunc) -> Option<Self> {
        self.subs_many(&[(v, r.clone())])
    }

    /// Simultaneous substitution; `None` if the result has a zero denominator.
    pub fn subs_many(&self, map: &[(Var, RatFunc)]) -> Option<Self> {
        let n = subs_poly(&self.num, map);
        let d = subs_poly(&self.den, map);
        n.div(&d)
    }

    /// Evaluates at rational values for some variables.
    pub fn eval_partial(&self, point: &[(Var, Rational)]) -> Option<Self> {
        let d = self.den.eval_partial(point);
        if d.is_zero() {
            return None;
        }
        Some(Self::normalize(self.num.eval_partial(point), d))
    }

    pub fn eval(&self, point: &[(Var, Rational)]) -> Result<Rational> {
        let d = self.den.eval(point)?;
        let n = self.num.eval(point)?;
        if d.is_zero() {
            return Err(Error::InvalidInput("denominator vanishes".into()));
        }
        Ok(n / d)
    }

    pub fn derivative(&self, v: Var) -> Self {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::normalize(n, self.den.pow(2))
    }
}

/// Substitutes into a polynomial, term by term, with power caching.
fn subs_poly(p: &MultiPoly, map: &[(Var, RatFunc)]) -> RatFunc {
    let mut acc = RatFunc::constant(Rational::zero());
    // Horner in the first substituted variable, recursing on the rest.
    match map.split_first() {
        None => RatFunc::poly(p.clone()),
        Some(((v, r), rest)) => {
            for c in p.coefficients_in(*v).iter().rev() {
                acc = acc.mul(r).add(&subs_poly(c, rest));
            }
            acc
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::poly(p)
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::constant(Rational::zero())
    }
    fn one() -> Self {
        RatFunc::constant(Rational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negate(&self) -> Self {
        self.neg()
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    #[test]
    fn normal_form_is_unique() {
        let r = RatFunc::parse("2a^2 - 2", "4a + 4").unwrap();
        assert_eq!(r, RatFunc::parse("a - 1", "2").unwrap());
        assert_eq!(r.den(), &MultiPoly::one());
        let s = RatFunc::parse("a*b", "-2b^2").unwrap();
        assert_eq!(s, RatFunc::parse("-a", "2b").unwrap());
        assert!(RatFunc::parse("1", "0").is_err());
    }

    #[test]
    fn field_ops() {
        let x = RatFunc::parse("a", "a+1").unwrap();
        let y = RatFunc::parse("1", "a+1").unwrap();
        assert_eq!(x.add(&y), RatFunc::constant(q(1, 1)));
        assert_eq!(x.mul(&x.inv().unwrap()), RatFunc::one());
    }

    #[test]
    fn substitution() {
        // w(z) is invariant under z -> 1/z
        let w = RatFunc::parse("(z^2-z+1)^3", "z^2(z-1)^2").unwrap();
        let inv = RatFunc::parse("1", "z").unwrap();
        assert_eq!(w.subs(Var::Z, &inv).unwrap(), w);
        assert_eq!(
            w.eval(&[(Var::Z, q(-1, 1))]).unwrap(),
            q(27, 4)
        );
    }
}
