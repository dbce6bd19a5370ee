use std::fmt;

use super::rational::Rational;
use super::scalar::Scalar;

/// Dense univariate polynomial over a field, coefficients in ascending order.
/// The coefficient vector never ends with a zero.
#[derive(Clone, PartialEq)]
pub struct UPoly<F: Scalar> {
    coeffs: Vec<F>,
}

impl<F: Scalar> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        UPoly::new(vec![c])
    }

    /// `X − r`.
    pub fn linear_root(r: &F) -> Self {
        UPoly::new(vec![r.negate(), F::one()])
    }

    pub fn from_rationals(cs: &[Rational]) -> Self {
        UPoly::new(cs.iter().map(F::from_rational).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly::new(self.coeffs.iter().map(|c| c.negate()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&x.times(y));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        UPoly::new(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = UPoly::constant(F::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&F::from_int(i as i64)))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.leading().inverse().expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut qv = vec![F::zero(); r.len() - dd];
        for k in (0..qv.len()).rev() {
            let c = r[k + dd].times(&lc_inv);
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].minus(&c.times(dc));
                }
            }
            r[k + dd] = F::zero();
            qv[k] = c;
        }
        r.truncate(dd);
        (UPoly::new(qv), UPoly::new(r))
    }

    /// Quotient when the division is exact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading().inverse() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Scalar + fmt::Display> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    fn p(cs: &[i64]) -> UPoly<Rational> {
        UPoly::new(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // X^2 - 1
        let b = p(&[-1, 1]);
        let (qq, r) = a.divrem(&b);
        assert_eq!(qq, p(&[1, 1]));
        assert!(r.is_zero());
        let g = a.mul(&p(&[2, 1])).gcd(&p(&[3, 1]).mul(&p(&[-1, 1])).scale(&q(5, 1)));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn eval_and_derivative() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.eval(&q(2, 1)), q(17, 1));
        assert_eq!(f.derivative(), p(&[2, 6]));
        assert_eq!(p(&[0, 0]).degree(), None);
    }
}
