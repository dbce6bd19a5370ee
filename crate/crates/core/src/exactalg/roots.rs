use super::multipoly::{MultiPoly, Var};
use super::quadext::QuadExt;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Both roots of a polynomial that is quadratic in `v` after substituting
/// `point`. Rational when the discriminant is a square, otherwise a conjugate
/// pair in ℚ(√d) with `d` the squarefree part of the discriminant. The root
/// with `+√` comes first.
pub fn quadratic_roots(
    p: &MultiPoly,
    v: Var,
    point: &[(Var, Rational)],
) -> Result<(QuadExt, QuadExt)> {
    let sp = p.eval_partial(point);
    if sp.vars().iter().any(|&w| w != v) {
        return Err(Error::InvalidInput(format!(
            "not univariate in {v} after substitution: {sp}"
        )));
    }
    let deg = sp.degree_in(v).unwrap_or(0);
    if deg > 2 {
        return Err(Error::InvalidInput(format!("degree {deg} > 2 in {v}")));
    }
    let c = |k| sp.coefficient_in(v, k).constant_term();
    let (qa, qb, qc) = (c(2), c(1), c(0));
    if qa.is_zero() {
        return Err(Error::DegenerateQuadratic);
    }
    let disc = &qb * &qb - Rational::from(4) * &qa * &qc;
    let two_a_inv = (Rational::from(2) * &qa).recip().expect("nonzero");
    let sq = QuadExt::sqrt_of(&disc);
    let base = QuadExt::rational(-&qb * &two_a_inv);
    let off = sq.try_mul(&QuadExt::rational(two_a_inv))?;
    Ok((base.try_add(&off)?, base.try_sub(&off)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;
    use crate::exactalg::scalar::Scalar;

    #[test]
    fn rational_and_irrational() {
        let f = MultiPoly::parse("X^2 - X + 1").unwrap();
        let (r1, r2) = quadratic_roots(&f, Var::X, &[]).unwrap();
        assert_eq!(r1.d(), Some(&q(-3, 1)));
        assert_eq!(r1.conjugate(), r2);
        assert_eq!(r1.p(), &q(1, 2));
        assert!(r1.times(&r1).minus(&r1).plus(&QuadExt::one()).is_zero());

        let g = MultiPoly::parse("3X^2 - 3X + 8").unwrap();
        let (r1, _) = quadratic_roots(&g, Var::X, &[]).unwrap();
        assert_eq!(r1.d(), Some(&q(-87, 1)));
        assert_eq!(r1.p(), &q(1, 2));
        assert_eq!(r1.q(), &q(1, 6));

        let h = MultiPoly::parse("a*X^2 - 1").unwrap();
        assert!(matches!(
            quadratic_roots(&h, Var::X, &[(Var::A, q(0, 1))]),
            Err(Error::DegenerateQuadratic)
        ));
        let (r1, r2) = quadratic_roots(&h, Var::X, &[(Var::A, q(4, 1))]).unwrap();
        assert_eq!((r1.as_rational(), r2.as_rational()), (Some(&q(1, 2)), Some(&q(-1, 2))));
    }
}
