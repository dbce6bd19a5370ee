use serde::Serialize;

use super::{curve_at, quad, subcover_at, EllipticSubcover, Genus2Curve};
use crate::cover::{check_case_factors, RamificationCase};
use crate::error::{Error, Result};
use crate::exactalg::{quadratic_roots, MultiPoly, QuadExt, Rational, Scalar, UPoly, Var};
use crate::transcription as tr;

/// A specialized model on one of the degenerate lines.
#[derive(Debug, Clone, Serialize)]
pub struct CaseModel {
    pub case: RamificationCase,
    pub a: Rational,
    pub b: QuadExt,
    pub z: QuadExt,
    pub curve: Genus2Curve,
    pub subcover: EllipticSubcover,
}

fn at_a(num: &tr::Display, den: &tr::Display, a: &Rational) -> Result<Rational> {
    let pt = [(Var::A, a.clone())];
    let n = num.poly()?.eval(&pt)?;
    let d = den.poly()?.eval(&pt)?;
    d.recip()
        .map(|d| n * d)
        .ok_or_else(|| Error::excluded(den.text))
}

/// `4b = a²`, `z = a(8+a)/(4(2a+1))`; curve from the division route.
pub fn case1_curve(a: &Rational) -> Result<CaseModel> {
    check_case_factors(RamificationCase::I, a)?;
    let b = quad(&(a * a * Rational::new(1, 4)));
    let z = quad(&at_a(&tr::CASE1_Z_NUM, &tr::CASE1_Z_DEN, a)?);
    let aq = quad(a);
    Ok(CaseModel {
        case: RamificationCase::I,
        a: a.clone(),
        curve: curve_at(&aq, &b, &z)?,
        subcover: subcover_at(&aq, &b, &z)?,
        b,
        z,
    })
}

/// The displayed case I value of λ, `4(2a+1)³(a²+4a+8)²/((2−a)⁵(a+2)³)`.
pub fn case1_lambda_display(a: &Rational) -> Result<Rational> {
    at_a(&tr::CASE1_LAMBDA_NUM, &tr::CASE1_LAMBDA_DEN, a)
}

/// The displayed case II value of λ, `(3a−1)³(a+8)²(a−1)/(27a(a−2)⁵)`.
pub fn case2_lambda_display(a: &Rational) -> Result<Rational> {
    at_a(&tr::CASE2_LAMBDA_NUM, &tr::CASE2_LAMBDA_DEN, a)
}

/// `[b0, b1, b2, b3]` exactly as displayed.
pub fn case2_table_verbatim(a: &Rational) -> [Rational; 4] {
    [tr::CASE2_B0, tr::CASE2_B1, tr::CASE2_B2, tr::CASE2_B3]
        .map(|d| d.poly().expect("parses").eval(&[(Var::A, a.clone())]).expect("in a"))
}

/// `y² = x(x−1)(b3x³ + b2x² + b1x + b0)` with the sign of `b0` flipped so
/// that the model lies on the case II locus.
pub fn case2_table_model(a: &Rational) -> Result<Genus2Curve> {
    let [b0, b1, b2, b3] = case2_table_verbatim(a);
    let g = UPoly::new(vec![quad(&-b0), quad(&b1), quad(&b2), quad(&b3)]);
    Genus2Curve::from_g3(&g)
}

/// `b = a − 1`, `z = (3a−1)(a−1)/(2a+1)`; curve from the corrected table.
pub fn case2_curve(a: &Rational) -> Result<CaseModel> {
    check_case_factors(RamificationCase::II, a)?;
    let b = quad(&(a - Rational::one()));
    let z = quad(&at_a(&tr::CASE2_Z_NUM, &tr::CASE2_Z_DEN, a)?);
    Ok(CaseModel {
        case: RamificationCase::II,
        a: a.clone(),
        curve: case2_table_model(a)?,
        subcover: subcover_at(&quad(a), &b, &z)?,
        b,
        z,
    })
}

/// The root `b` of the case III condition at `a`, `+√` branch first.
pub fn case3_b(a: &Rational) -> Result<QuadExt> {
    let cond = tr::CASE3_CONDITION.poly()?;
    let (r, _) = quadratic_roots(&cond, Var::B, &[(Var::A, a.clone())])?;
    Ok(r)
}

/// Case III model taken directly from the display
/// `y² = x(x−1)(x − z)(x² − x − k)`, with `b` from [`case3_b`].
pub fn case3_curve(a: &Rational) -> Result<CaseModel> {
    check_case_factors(RamificationCase::III, a)?;
    let b = case3_b(a)?;
    let aq = quad(a);
    let pt = [(Var::A, aq.clone()), (Var::B, b.clone())];
    let eval = |d: &tr::Display| -> Result<QuadExt> {
        Ok(d.poly()?.eval_scalar(&pt).expect("a, b assigned"))
    };
    let z = eval(&tr::CASE3_Z_NUM)?
        .divide(&eval(&tr::CASE3_Z_DEN)?)
        .ok_or_else(|| Error::excluded("2a + 1"))?;
    let k = eval(&tr::CASE3_CONST_NUM)?
        .divide(&eval(&tr::CASE3_CONST_DEN)?)
        .ok_or_else(|| Error::excluded("(2a + 1)(a - 4)"))?;
    let one = QuadExt::one();
    let lin = UPoly::new(vec![z.negate(), one.clone()]);
    let quadratic = UPoly::new(vec![k.negate(), one.negate(), one]);
    let curve = Genus2Curve::from_g3(&lin.mul(&quadratic))?;
    Ok(CaseModel {
        case: RamificationCase::III,
        a: a.clone(),
        subcover: subcover_at(&aq, &b, &z)?,
        curve,
        b,
        z,
    })
}

/// The discriminant in `b` of the case III condition, a polynomial in `a`.
fn case3_b_discriminant() -> MultiPoly {
    let cond = tr::CASE3_CONDITION.poly().expect("parses");
    let c = cond.coefficients_in(Var::B);
    &c[1].pow(2) - &(&c[2] * &c[0]).scale(&Rational::from(4))
}

/// Quartic-invariant route: `s² = D(a)` read as a binary quartic
/// `A a⁴ + B a³ + C a² + D a + E`, `I = 12AE − 3BD + C²`,
/// `J = 72ACE + 9BCD − 27AD² − 27EB² − 2C³`, `j = 6912 I³/(4I³ − J²)`.
pub fn y3bar_j_quartic() -> Rational {
    let d = case3_b_discriminant();
    let c = |i: u32| d.coefficient_in(Var::A, i).constant_value().expect("univariate");
    let (qa, qb, qc, qd, qe) = (c(4), c(3), c(2), c(1), c(0));
    let r = Rational::from;
    let i = r(12) * &qa * &qe - r(3) * &qb * &qd + &qc * &qc;
    let j = r(72) * &qa * &qc * &qe + r(9) * &qb * &qc * &qd
        - r(27) * &qa * &qd * &qd
        - r(27) * &qe * &qb * &qb
        - r(2) * qc.pow(3);
    let i3 = i.pow(3);
    r(6912) * &i3 / (r(4) * &i3 - &j * &j)
}

/// Weierstrass route: `D(a)` has degree 3, so `s² = c3a³ + c2a² + c1a + c0`
/// becomes `Y² = X³ + c2X² + c1c3X + c0c3²` and `j = c4³/Δ`.
pub fn y3bar_j_weierstrass() -> Rational {
    let d = case3_b_discriminant();
    assert_eq!(d.degree_in(Var::A), Some(3), "a^4 terms cancel");
    let c = |i: u32| d.coefficient_in(Var::A, i).constant_value().expect("univariate");
    let (c3, c2, c1, c0) = (c(3), c(2), c(1), c(0));
    let r = Rational::from;
    let (a2, a4, a6) = (c2, &c1 * &c3, &c0 * &c3 * &c3);
    let b2 = r(4) * &a2;
    let b4 = r(2) * &a4;
    let b6 = r(4) * &a6;
    let b8 = r(4) * &a2 * &a6 - &a4 * &a4;
    let c4 = &b2 * &b2 - r(24) * &b4;
    let disc = -(&b2 * &b2 * &b8) - r(8) * b4.pow(3) - r(27) * &b6 * &b6 + r(9) * &b2 * &b4 * &b6;
    c4.pow(3) / disc
}

/// j-invariant of the genus-1 curve defined by the case III condition.
pub fn y3bar_j() -> Rational {
    y3bar_j_quartic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{f4_roots, CoverParams};
    use crate::exactalg::q;

    #[test]
    fn y3bar_two_routes() {
        let expect: Rational = tr::Y3BAR_J.text.parse().unwrap();
        assert_eq!(y3bar_j_quartic(), expect);
        assert_eq!(y3bar_j_weierstrass(), expect);
        assert_eq!(y3bar_j(), q(702595369, 72900));
        let cond = tr::CASE3_CONDITION.poly().unwrap();
        for (a, b) in [(-2, 1), (2, 1)] {
            assert!(cond.eval(&[(Var::A, q(a, 1)), (Var::B, q(b, 1))]).unwrap().is_zero());
        }
    }

    #[test]
    fn case_one_z_is_an_f4_root() {
        let m = case1_curve(&q(6, 1)).unwrap();
        assert_eq!(m.z, quad(&q(21, 13)));
        assert_eq!(m.b, quad(&q(9, 1)));
        assert_eq!(m.curve.degree(), 5);
        assert_eq!(case1_curve(&q(2, 1)).unwrap_err(), Error::excluded("a - 2"));
        assert_eq!(case1_curve(&q(-8, 1)).unwrap_err(), Error::excluded("a + 8"));
    }

    #[test]
    fn case1_lambda_display_is_in_the_legendre_orbit() {
        for a in [q(6, 1), q(3, 1), q(-7, 5)] {
            let m = case1_curve(&a).unwrap();
            let lam = m.subcover.lambda.as_rational().unwrap().clone();
            let shown = case1_lambda_display(&a).unwrap();
            assert_ne!(lam, shown);
            assert_eq!(shown, (Rational::one() - &lam).recip().unwrap());
        }
        assert_eq!(
            case1_lambda_display(&q(6, 1)).unwrap(),
            q(4 * 13 * 13 * 13 * 68 * 68, 1) / q(-1024 * 512, 1)
        );
    }

    #[test]
    fn case_two_tables() {
        let [b0, _, _, b3] = case2_table_verbatim(&q(3, 1));
        assert_eq!(b3, q(2527, 1));
        assert_eq!(b0, q(7744, 1));
        assert_eq!(case2_curve(&q(2, 1)).unwrap_err(), Error::excluded("a - 2"));
        let m = case2_curve(&q(3, 1)).unwrap();
        assert_eq!(m.z, quad(&q(16, 7)));
        assert_eq!(case2_lambda_display(&q(3, 1)).unwrap(), q(123904, 81));
        let lam = m.subcover.lambda.as_rational().unwrap().clone();
        assert_eq!(lam, q(123904, 123823));
        assert_eq!(case2_lambda_display(&q(3, 1)).unwrap(), &lam / (&lam - Rational::one()));
    }

    #[test]
    fn case_two_z_is_a_root() {
        let p = CoverParams::from_ints(3, 2).unwrap();
        assert!(f4_roots(&p).unwrap().iter().any(|r| r.z == quad(&q(16, 7))));
    }

    #[test]
    fn case_three_display() {
        let m = case3_curve(&q(1, 1)).unwrap();
        assert_eq!(m.curve.degree(), 5);
        assert_eq!(m.b.d(), Some(&q(7, 1)));
        let prod: Rational = tr::CASE3_NONVANISHING.poly().unwrap().eval(&[(Var::A, q(1, 1))]).unwrap();
        assert_eq!(prod, q(-3 * 3 * -10 * -3 * 71, 1));
        // quadratic factor x^2 - x - 3(-3)/(4·3·(-3))
        let k = q(3 * -3, 4 * 3 * -3);
        let one = QuadExt::one();
        let quadf = UPoly::new(vec![quad(&-k), one.negate(), one]);
        assert!(m.curve.f().divrem(&quadf).1.is_zero());
        assert!(case3_curve(&q(4, 1)).is_err());
        assert!(case3_curve(&q(2, 1)).is_err());
    }
}
