use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::rational::Rational;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// An element `p + q·√d` of a quadratic extension of ℚ.
///
/// `d` is `None` for elements created without a context (plain rationals);
/// such elements combine with any context. Two elements with different
/// irrational contexts never combine: the checked operations return
/// [`Error::ContextMismatch`] and the [`Scalar`] operations panic.
#[derive(Clone)]
pub struct QuadExt {
    p: Rational,
    q: Rational,
    d: Option<Rational>,
}

impl QuadExt {
    /// Builds `p + q√d`. `d` must not be a rational square.
    pub fn new(p: Rational, q: Rational, d: Rational) -> Result<Self> {
        if d.sqrt_exact().is_some() {
            return Err(Error::InvalidInput(format!("{d} is a square in Q")));
        }
        Ok(QuadExt { p, q, d: Some(d) }.tidy())
    }

    pub fn rational(p: Rational) -> Self {
        QuadExt {
            p,
            q: Rational::zero(),
            d: None,
        }
    }

    /// `√d` itself, with `d` reduced to a squarefree integer.
    pub fn sqrt_of(r: &Rational) -> QuadExt {
        if let Some(s) = r.sqrt_exact() {
            return QuadExt::rational(s);
        }
        let (s, d) = r.squarefree_decomposition();
        QuadExt {
            p: Rational::zero(),
            q: s,
            d: Some(Rational::from(d)),
        }
    }

    fn tidy(mut self) -> Self {
        if self.q.is_zero() {
            self.d = None;
        }
        self
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn d(&self) -> Option<&Rational> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.p)
        } else {
            None
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            p: self.p.clone(),
            q: -&self.q,
            d: self.d.clone(),
        }
    }

    /// `(p+q√d)(p−q√d) = p² − q²d`.
    pub fn norm(&self) -> Rational {
        match &self.d {
            None => &self.p * &self.p,
            Some(d) => &self.p * &self.p - &self.q * &self.q * d,
        }
    }

    pub fn trace(&self) -> Rational {
        &self.p + &self.p
    }

    fn context(&self, other: &Self) -> Result<Option<Rational>> {
        match (&self.d, &other.d) {
            (Some(x), Some(y)) if x != y => {
                Err(Error::ContextMismatch(x.to_string(), y.to_string()))
            }
            (Some(x), _) => Ok(Some(x.clone())),
            (None, y) => Ok(y.clone()),
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        let d = self.context(rhs)?;
        Ok(QuadExt {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
            d,
        }
        .tidy())
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.try_add(&rhs.negate())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        let d = self.context(rhs)?;
        let qq = &self.q * &rhs.q;
        let p = match &d {
            Some(d) => &self.p * &rhs.p + &qq * d,
            None => &self.p * &rhs.p,
        };
        let q = &self.p * &rhs.q + &self.q * &rhs.p;
        Ok(QuadExt { p, q, d }.tidy())
    }

    pub fn try_inv(&self) -> Result<Self> {
        let n = self.norm();
        let ni = n
            .recip()
            .ok_or_else(|| Error::InvalidInput("inverse of zero".into()))?;
        Ok(QuadExt {
            p: &self.p * &ni,
            q: -(&self.q * &ni),
            d: self.d.clone(),
        }
        .tidy())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        // returns (re, im) of p + q*sqrt(d) as a complex number
        let p = self.p.to_f64();
        match &self.d {
            None => (p, 0.0),
            Some(d) => {
                let df = d.to_f64();
                let qf = self.q.to_f64();
                if df >= 0.0 {
                    (p + qf * df.sqrt(), 0.0)
                } else {
                    (p, qf * (-df).sqrt())
                }
            }
        }
    }

    pub fn d_as_int(&self) -> Option<BigInt> {
        self.d.as_ref().map(|d| d.numer().clone())
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p || self.q != other.q {
            return false;
        }
        self.q.is_zero() || self.d == other.d
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.d {
            None => write!(f, "{}", self.p),
            Some(d) => write!(f, "{} + ({})*sqrt({})", self.p, self.q, d),
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rational elements serialize as `"p/q"`; irrational ones as `["p", "q"]`
/// meaning `p + q√d`, with `d` carried by the enclosing object.
impl Serialize for QuadExt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_rational() {
            self.p.serialize(serializer)
        } else {
            let mut seq = serializer.serialize_seq(Some(2))?;
            seq.serialize_element(&self.p)?;
            seq.serialize_element(&self.q)?;
            seq.end()
        }
    }
}

impl Scalar for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        QuadExt::rational(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("mixed quadratic extensions")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("mixed quadratic extensions")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("mixed quadratic extensions")
    }
    fn negate(&self) -> Self {
        QuadExt {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    #[test]
    fn norm_and_inverse() {
        let x = QuadExt::new(q(3, 6), q(1, 6), q(-87, 1)).unwrap();
        assert_eq!(x.norm(), q(1, 4) + q(87, 36));
        let inv = x.inverse().unwrap();
        assert_eq!(x.times(&inv), QuadExt::one());
        assert_eq!(x.times(&x.conjugate()), QuadExt::rational(x.norm()));
    }

    #[test]
    fn mixing_contexts_is_an_error() {
        let s2 = QuadExt::sqrt_of(&q(2, 1));
        let s3 = QuadExt::sqrt_of(&q(3, 1));
        assert!(matches!(s2.try_add(&s3), Err(Error::ContextMismatch(..))));
        // rationals embed into every context
        assert!(s2.try_add(&QuadExt::one()).is_ok());
        assert_eq!(s2.times(&s2), QuadExt::from_int(2));
    }

    #[test]
    fn square_d_rejected() {
        assert!(QuadExt::new(q(1, 1), q(1, 1), q(4, 9)).is_err());
        assert!(QuadExt::sqrt_of(&q(4, 9)).is_rational());
    }
}
