//! Moduli-side data of the degenerate loci: T-parametrizations, invariant
//! formulas, the w-tower, automorphism classification and Nielsen classes.

mod case3;
mod nielsen;
mod tower;
mod v4;

pub use case3::{case3_invariants_at, recover_case3_numeric, Case3Recovery};
pub use nielsen::{nielsen_count, parse_types, CycleType, Group, NielsenReport};
pub use v4::{a_from_sqrt_t, case_coeffs_numeric, v4_points_numeric, V4Point};
pub use tower::{
    delta_w_check, y3_line_pullback, verify_theorem3, w_of_z, w_relation, w_symbolic, y3_membership,
    y3_uv_constraint, WRelation,
};

use serde::Serialize;

use crate::cover::RamificationCase;
use crate::error::{Error, Result};
use crate::exactalg::{common_root_modular, CommonRoot, MultiPoly, Rational, Var};
use crate::transcription::{self as tr, Display};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TParam {
    #[serde(rename = "T")]
    pub t: Rational,
    pub case: RamificationCase,
    /// Set when the `a` that produced `T` is itself degenerate for the cover.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocusFormulas {
    pub i1: Rational,
    pub i2: Rational,
    pub i3: Rational,
    /// `None` where the displayed j has a pole.
    pub j: Option<Rational>,
}

struct Displays {
    j2: Display,
    i: [Display; 3],
    j_num: Display,
    j_den: Display,
}

fn displays(case: RamificationCase) -> Result<Displays> {
    match case {
        RamificationCase::I => Ok(Displays {
            j2: tr::CASE1_J2,
            i: [tr::CASE1_I1, tr::CASE1_I2, tr::CASE1_I3],
            j_num: tr::CASE1_J_NUM,
            j_den: tr::CASE1_J_DEN,
        }),
        RamificationCase::II => Ok(Displays {
            j2: tr::CASE2_J2,
            i: [tr::CASE2_I1, tr::CASE2_I2, tr::CASE2_I3],
            j_num: tr::CASE2_J_NUM,
            j_den: tr::CASE2_J_DEN,
        }),
        c => Err(Error::InvalidInput(format!("no T-formulas for case {c}"))),
    }
}

/// Powers of `J2` dividing the displayed `i1, i2, i3`.
const J2_POWERS: [u32; 3] = [2, 3, 5];

fn formulas(case: RamificationCase, t: &Rational) -> Result<LocusFormulas> {
    let d = displays(case)?;
    let pt = [(Var::T, t.clone())];
    let j2 = d.j2.poly()?.eval(&pt)?;
    if j2.is_zero() {
        return Err(Error::J2Zero);
    }
    let mut i = Vec::with_capacity(3);
    for (disp, k) in d.i.iter().zip(J2_POWERS) {
        i.push(disp.poly()?.eval(&pt)? / j2.pow(k as i32));
    }
    let jd = d.j_den.poly()?.eval(&pt)?;
    let j = jd.recip().map(|r| d.j_num.poly().and_then(|n| n.eval(&pt)).map(|n| n * r)).transpose()?;
    let [i1, i2, i3]: [Rational; 3] = i.try_into().expect("three");
    Ok(LocusFormulas { i1, i2, i3, j })
}

/// The case I display of `(i1, i2, i3, j)` at `T`.
pub fn y1_formulas(t: &Rational) -> Result<LocusFormulas> {
    formulas(RamificationCase::I, t)
}

/// The case II display of `(i1, i2, i3, j)` at `T`.
pub fn y2_formulas(t: &Rational) -> Result<LocusFormulas> {
    formulas(RamificationCase::II, t)
}

/// `T = ((a−2)/(5(a+2)))²` in case I, `T = (a/(a−2))²` in case II.
pub fn t_of_a(a: &Rational, case: RamificationCase) -> Result<TParam> {
    let two = Rational::from(2);
    let (r, degenerate) = match case {
        RamificationCase::I => {
            let den = Rational::from(5) * (a + &two);
            if den.is_zero() {
                return Err(Error::excluded("a + 2"));
            }
            ((a - &two) / &den, (a - &two).is_zero())
        }
        RamificationCase::II => {
            let den = a - &two;
            if den.is_zero() {
                return Err(Error::excluded("a - 2"));
            }
            (a / &den, a.is_zero())
        }
        c => return Err(Error::InvalidInput(format!("no T-parameter for case {c}"))),
    };
    Ok(TParam {
        t: &r * &r,
        case,
        degenerate,
    })
}

/// Product of the displayed factors: polynomials in `T` for I and II, and a
/// product with multiplicities in `a` for III.
pub fn classification_poly(case: RamificationCase) -> Result<MultiPoly> {
    Ok(classification_factors(case)?
        .iter()
        .fold(MultiPoly::one(), |acc, (f, e)| &acc * &f.pow(*e)))
}

/// The displayed factors with their exponents.
pub fn classification_factors(case: RamificationCase) -> Result<Vec<(MultiPoly, u32)>> {
    let single = |ds: &[Display]| -> Result<Vec<(MultiPoly, u32)>> {
        ds.iter().map(|d| Ok((d.poly()?, 1))).collect()
    };
    match case {
        RamificationCase::I => single(&tr::CASE1_V4_FACTORS),
        RamificationCase::II => single(&tr::CASE2_V4_FACTORS),
        RamificationCase::III => tr::CASE3_V4_FACTORS.iter().map(|(d, e)| Ok((d.poly()?, *e))).collect(),
        c => Err(Error::InvalidInput(format!("no classification for case {c}"))),
    }
}

pub fn is_v4_point(param: &Rational, case: RamificationCase) -> Result<bool> {
    let v = match case {
        RamificationCase::III => Var::A,
        _ => Var::T,
    };
    Ok(classification_poly(case)?.eval(&[(v, param.clone())])?.is_zero())
}

/// Recovers `T` from `(i1, i2, i3)` as the common root of the three
/// cleared-denominator equations.
pub fn recover_parameter(i: &[Rational; 3], case: RamificationCase) -> Result<TParam> {
    let d = displays(case)?;
    let j2 = d.j2.poly()?;
    let mut eqs = Vec::with_capacity(3);
    for ((disp, k), target) in d.i.iter().zip(J2_POWERS).zip(i) {
        let eq = &j2.pow(k).scale(target) - &disp.poly()?;
        eqs.push(eq.to_upoly(Var::T).expect("univariate in T"));
    }
    let t = match common_root_modular(&eqs) {
        CommonRoot::Unique(t) => t,
        CommonRoot::None => return Err(Error::NotOnLocus(format!("no common root in case {case}"))),
        CommonRoot::Unknown => {
            let g = eqs.iter().skip(1).fold(eqs[0].clone(), |g, u| g.gcd(u));
            match g.degree() {
                Some(1) => g.coeff(0) * g.leading().recip().expect("monic") * Rational::from(-1),
                Some(0) | None => return Err(Error::NotOnLocus(format!("no common root in case {case}"))),
                Some(n) => return Err(Error::Ambiguous(n)),
            }
        }
    };
    if j2.eval(&[(Var::T, t.clone())])?.is_zero() {
        return Err(Error::NotOnLocus("common root is a zero of J2".into()));
    }
    Ok(TParam {
        t,
        case,
        degenerate: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{case1_curve, case2_curve};
    use crate::exactalg::q;
    use crate::igusa::absolute_of_curve;

    #[test]
    fn t_parameters() {
        assert_eq!(t_of_a(&q(6, 1), RamificationCase::I).unwrap().t, q(1, 100));
        assert_eq!(t_of_a(&q(3, 1), RamificationCase::II).unwrap().t, q(9, 1));
        let t = t_of_a(&q(2, 1), RamificationCase::I).unwrap();
        assert!(t.t.is_zero() && t.degenerate);
        assert_eq!(t_of_a(&q(-2, 1), RamificationCase::I).unwrap_err(), Error::excluded("a + 2"));
        assert_eq!(t_of_a(&q(2, 1), RamificationCase::II).unwrap_err(), Error::excluded("a - 2"));
        // a = 6 and a = 2/3 give r = ±1/10
        assert_eq!(t_of_a(&q(2, 3), RamificationCase::I).unwrap().t, q(1, 100));
        assert_eq!(t_of_a(&q(3, 2), RamificationCase::II).unwrap().t, q(9, 1));
    }

    #[test]
    fn formula_zeros() {
        assert!(y1_formulas(&q(1, 25)).unwrap().i3.is_zero());
        assert!(y1_formulas(&q(1, 25)).unwrap().j.is_none());
        assert!(y2_formulas(&q(16, 25)).unwrap().i3.is_zero());
    }

    #[test]
    fn pipelines_match_displays() {
        let m = case2_curve(&q(3, 1)).unwrap();
        let abs = absolute_of_curve(&m.curve).unwrap().as_rational().unwrap();
        let f = y2_formulas(&q(9, 1)).unwrap();
        assert_eq!(abs, [f.i1, f.i2, f.i3]);
        assert_eq!(m.subcover.j.as_rational(), f.j.as_ref());
        let m = case1_curve(&q(6, 1)).unwrap();
        let abs = absolute_of_curve(&m.curve).unwrap().as_rational().unwrap();
        let f = y1_formulas(&q(1, 100)).unwrap();
        assert_eq!(abs, [f.i1, f.i2, f.i3]);
        assert_eq!(m.subcover.j.as_rational(), f.j.as_ref());
    }

    #[test]
    fn classification_degrees() {
        let deg = |c| classification_poly(c).unwrap().total_degree().unwrap();
        assert_eq!(deg(RamificationCase::I), 36);
        assert_eq!(deg(RamificationCase::II), 25);
        assert_eq!(deg(RamificationCase::III), 79);
        let squarefree: u32 = classification_factors(RamificationCase::III)
            .unwrap()
            .iter()
            .map(|(f, _)| f.total_degree().unwrap())
            .sum();
        assert_eq!(squarefree, 69);
        assert!(!is_v4_point(&q(1, 1), RamificationCase::I).unwrap());
    }

    #[test]
    fn recovery_round_trip() {
        for (t, case) in [(q(9, 1), RamificationCase::II), (q(1, 100), RamificationCase::I), (q(-3, 7), RamificationCase::I)] {
            let f = formulas(case, &t).unwrap();
            let r = recover_parameter(&[f.i1.clone(), f.i2.clone(), f.i3.clone()], case).unwrap();
            assert_eq!(r.t, t);
            let bad = [f.i1 + q(1, 1000), f.i2, f.i3];
            assert_eq!(recover_parameter(&bad, case).unwrap_err().name(), "not-on-locus");
        }
    }
}
