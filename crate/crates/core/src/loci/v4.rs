//! Numeric check of the extra involution at roots of the classification
//! polynomials in `T`.

use serde::Serialize;

use crate::cover::RamificationCase;
use crate::curve::g3_quotient;
use crate::error::{Error, Result};
use crate::exactalg::{Rational, Scalar, UPoly, Var};
use crate::igusa::numeric::{aut_group_of_coeffs, poly_roots};
use crate::igusa::{AutGroupReport, ComplexField, Cx};
use crate::transcription::{self as tr, Display};

use super::classification_factors;

/// `a` from `s = √T`: `2(1+5s)/(1−5s)` in case I, `2s/(s−1)` in case II.
pub fn a_from_sqrt_t<F: ComplexField>(case: RamificationCase, s: &F) -> Option<F> {
    let one = F::one();
    let two = Rational::from(2);
    match case {
        RamificationCase::I => {
            let five_s = s.scale(&Rational::from(5));
            one.plus(&five_s).scale(&two).divide(&one.minus(&five_s))
        }
        RamificationCase::II => s.scale(&two).divide(&s.minus(&one)),
        _ => None,
    }
}

fn at<F: Scalar>(num: &Display, den: &Display, a: &F) -> Option<F> {
    let pt = [(Var::A, a.clone())];
    let n = num.poly().ok()?.eval_scalar(&pt)?;
    n.divide(&den.poly().ok()?.eval_scalar(&pt)?)
}

/// Coefficients of `x(x−1)g3(x)` for the case I or II line at `a`,
/// trimmed to the true degree.
pub fn case_coeffs_numeric<F: ComplexField>(case: RamificationCase, a: &F) -> Result<Vec<F>> {
    let undefined = || Error::ConstructionFailure("curve undefined at this a".into());
    let (b, z) = match case {
        RamificationCase::I => (
            a.times(a).scale(&Rational::new(1, 4)),
            at(&tr::CASE1_Z_NUM, &tr::CASE1_Z_DEN, a).ok_or_else(undefined)?,
        ),
        RamificationCase::II => (
            a.minus(&F::one()),
            at(&tr::CASE2_Z_NUM, &tr::CASE2_Z_DEN, a).ok_or_else(undefined)?,
        ),
        c => return Err(Error::InvalidInput(format!("no T-line for case {c}"))),
    };
    let (g3, _) = g3_quotient(a, &b, &z);
    let x = UPoly::new(vec![F::zero(), F::one().negate(), F::one()]);
    Ok(x.mul(&g3).into_coeffs())
}

#[derive(Debug, Clone, Serialize)]
pub struct V4Point {
    /// The factor (as displayed) whose root was used.
    pub factor: String,
    #[serde(rename = "T")]
    pub t: [f64; 2],
    pub a: [f64; 2],
    pub aut: AutGroupReport,
}

/// Runs the automorphism oracle at `count` roots of the lowest-degree
/// classification factors, at 128 bits.
pub fn v4_points_numeric(case: RamificationCase, count: usize, tol: f64) -> Result<Vec<V4Point>> {
    if !matches!(case, RamificationCase::I | RamificationCase::II) {
        return Err(Error::InvalidInput(format!("no T-line for case {case}")));
    }
    let mut factors = classification_factors(case)?;
    factors.sort_by_key(|(f, _)| f.total_degree());
    let mut out = Vec::with_capacity(count);
    for (f, _) in factors {
        let u = f.to_upoly(Var::T).expect("univariate in T");
        let cs: Vec<Cx<128>> = u.coeffs().iter().map(Cx::from_rational).collect();
        for t in poly_roots(&cs)? {
            if out.len() == count {
                return Ok(out);
            }
            let a = a_from_sqrt_t(case, &t.csqrt())
                .ok_or_else(|| Error::Precision("sqrt(T) hits the pole of a(T)".into()))?;
            let coeffs = case_coeffs_numeric(case, &a)?;
            out.push(V4Point {
                factor: f.to_string(),
                t: [t.to_c64().re, t.to_c64().im],
                a: [a.to_c64().re, a.to_c64().im],
                aut: aut_group_of_coeffs(&coeffs, tol)?,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::loci::t_of_a;

    #[test]
    fn a_inverts_t() {
        for (a, case) in [(q(6, 1), RamificationCase::I), (q(3, 1), RamificationCase::II)] {
            let t = t_of_a(&a, case).unwrap().t;
            let s = Cx::<128>::from_rational(&t).csqrt();
            let back = a_from_sqrt_t(case, &s).unwrap();
            let other = a_from_sqrt_t(case, &s.negate()).unwrap();
            let hit = |x: &Cx<128>| x.minus(&Cx::from_rational(&a)).abs_f64() < 1e-30;
            assert!(hit(&back) || hit(&other));
        }
    }

    #[test]
    fn generic_case_point_has_no_extra_involution() {
        let a = Cx::<128>::from_rational(&q(6, 1));
        let cs = case_coeffs_numeric(RamificationCase::I, &a).unwrap();
        assert_eq!(aut_group_of_coeffs(&cs, 1e-20).unwrap().order, 1);
    }

    #[test]
    fn roots_of_classification_factors_are_v4() {
        for case in [RamificationCase::I, RamificationCase::II] {
            let pts = v4_points_numeric(case, 3, 1e-20).unwrap();
            assert_eq!(pts.len(), 3);
            for p in pts {
                assert_eq!(p.aut.label, "V4", "{case} {p:?}");
            }
        }
    }
}
