//! Genus-2 curves `y² = x(x−1)g₃(x)` attached to the cover, and their elliptic
//! subcovers.

mod cases;
mod g3;

pub use cases::{
    case1_curve, case2_curve, case3_curve, case3_b, case2_table_model, case2_table_verbatim, case2_lambda_display,
    case1_lambda_display, y3bar_j, y3bar_j_quartic, y3bar_j_weierstrass, CaseModel,
};
pub use g3::{
    g3_from_paper, g3_oracle, g3_oracle_symbolic, g3_table_symbolic, g3_table_vs_oracle, g3_quotient,
    SymbolicG3,
};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cover::{symbolic_f, CoverParams};
use crate::error::{Error, Result};
use crate::exactalg::{QuadExt, Rational, Scalar, UPoly, Var};

/// `y² = f(x)` with `deg f ∈ {5, 6}` and `f` squarefree.
#[derive(Debug, Clone, PartialEq)]
pub struct Genus2Curve {
    f: UPoly<QuadExt>,
}

impl Genus2Curve {
    pub fn new(f: UPoly<QuadExt>) -> Result<Self> {
        match f.degree() {
            Some(5) | Some(6) => {}
            d => {
                return Err(Error::InvalidInput(format!(
                    "degree {d:?} is not 5 or 6"
                )))
            }
        }
        if f.gcd(&f.derivative()).degree() != Some(0) {
            return Err(Error::SingularModel);
        }
        Ok(Genus2Curve { f })
    }

    pub fn from_rationals(coeffs: &[Rational]) -> Result<Self> {
        Genus2Curve::new(UPoly::from_rationals(coeffs).map(|c: &Rational| QuadExt::rational(c.clone())))
    }

    /// `x(x−1)·g`.
    pub fn from_g3(g: &UPoly<QuadExt>) -> Result<Self> {
        let xx1 = UPoly::from_rationals(&[Rational::zero(), Rational::from(-1), Rational::one()])
            .map(|c: &Rational| QuadExt::rational(c.clone()));
        Genus2Curve::new(xx1.mul(g))
    }

    pub fn f(&self) -> &UPoly<QuadExt> {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("nonzero")
    }

    /// Coefficients `f0..f6`, padded with zero for quintics.
    pub fn sextic_coeffs(&self) -> [QuadExt; 7] {
        std::array::from_fn(|i| self.f.coeff(i))
    }

    /// The `d` of the quadratic field holding the coefficients, if not ℚ.
    pub fn field(&self) -> Option<Rational> {
        self.f.coeffs().iter().find_map(|c| c.d().cloned())
    }

    pub fn is_rational(&self) -> bool {
        self.field().is_none()
    }

    pub fn conjugate(&self) -> Genus2Curve {
        Genus2Curve {
            f: self.f.map(QuadExt::conjugate),
        }
    }
}

impl Serialize for Genus2Curve {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("degree", &self.degree())?;
        m.serialize_entry("coeffs", self.f.coeffs())?;
        match self.field() {
            None => m.serialize_entry("field", "Q")?,
            Some(d) => m.serialize_entry("field", &serde_json::json!({ "quad_ext_d": d }))?,
        }
        m.end()
    }
}

/// Legendre model `s² = t(t−1)(t−λ)` and its j-invariant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EllipticSubcover {
    pub lambda: QuadExt,
    pub j: QuadExt,
}

impl EllipticSubcover {
    pub fn from_lambda(lambda: QuadExt) -> Result<Self> {
        let j = legendre_j(&lambda)
            .ok_or_else(|| Error::DegenerateSubcover(lambda.to_string()))?;
        Ok(EllipticSubcover { lambda, j })
    }
}

/// `j = 2⁸(λ²−λ+1)³ / (λ²(λ−1)²)`, `None` for `λ ∈ {0, 1}`.
pub fn legendre_j<F: Scalar>(lambda: &F) -> Option<F> {
    let one = F::one();
    let l2 = lambda.times(lambda);
    let num = l2.minus(lambda).plus(&one).powi(3).scale(&Rational::from(256));
    let den = l2.times(&lambda.minus(&one).powi(2));
    num.divide(&den)
}

/// `F1..F4` as univariate polynomials at scalar `(a, b)`.
pub fn f_polys_at<F: Scalar>(a: &F, b: &F) -> [UPoly<F>; 4] {
    let pt = [(Var::A, a.clone()), (Var::B, b.clone())];
    symbolic_f().map(|f| {
        UPoly::new(
            f.coefficients_in(Var::X)
                .iter()
                .map(|c| c.eval_scalar(&pt).expect("only a, b remain"))
                .collect(),
        )
    })
}

pub(crate) fn quad(r: &Rational) -> QuadExt {
    QuadExt::rational(r.clone())
}

fn check_f4_root<F: Scalar>(a: &F, b: &F, z: &F) -> Result<()> {
    let [.., f4] = f_polys_at(a, b);
    if !f4.eval(z).is_zero() {
        return Err(Error::InvalidRoot(format!("F4({z:?}) != 0")));
    }
    if z.is_one() {
        return Err(Error::InvalidRoot("z = 1".into()));
    }
    Ok(())
}

/// `y² = x(x−1)g₃(x)` with `g₃` from the division route.
pub fn curve_from_cover(params: &CoverParams, z: &QuadExt) -> Result<Genus2Curve> {
    curve_at(&quad(&params.a), &quad(&params.b), z)
}

pub(crate) fn curve_at(a: &QuadExt, b: &QuadExt, z: &QuadExt) -> Result<Genus2Curve> {
    let g = g3::g3_at(a, b, z)?;
    if g.degree() != Some(3) {
        return Err(Error::SingularModel);
    }
    Genus2Curve::from_g3(&g)
}

/// `λ = φ(z)` and its Legendre j-invariant.
pub fn subcover(params: &CoverParams, z: &QuadExt) -> Result<EllipticSubcover> {
    subcover_at(&quad(&params.a), &quad(&params.b), z)
}

pub(crate) fn subcover_at(a: &QuadExt, b: &QuadExt, z: &QuadExt) -> Result<EllipticSubcover> {
    check_f4_root(a, b, z)?;
    let lambda = phi_value(a, b, z).ok_or_else(|| Error::DegenerateSubcover("infinity".into()))?;
    EllipticSubcover::from_lambda(lambda)
}

/// `φ(x) = x·F1(x)²/F2(x)²` at scalar arguments.
pub fn phi_value<F: Scalar>(a: &F, b: &F, x: &F) -> Option<F> {
    let [f1, f2, ..] = f_polys_at(a, b);
    x.times(&f1.eval(x).powi(2)).divide(&f2.eval(x).powi(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{f4_roots, S3Word};
    use crate::exactalg::q;

    fn cp(a: i64, b: i64) -> CoverParams {
        CoverParams::from_ints(a, b).unwrap()
    }

    #[test]
    fn legendre_orbit() {
        let j = |l: Rational| legendre_j(&l).unwrap();
        assert_eq!(j(q(1, 2)), j(q(2, 1)));
        assert_eq!(j(q(1, 2)), j(q(-1, 1)));
        assert_eq!(j(q(1, 2)), q(1728, 1));
        assert!(legendre_j(&q(1, 1)).is_none());
        assert!(legendre_j(&q(0, 1)).is_none());
    }

    #[test]
    fn case_one_curve_is_quintic() {
        let p = cp(6, 9);
        let z = quad(&q(21, 13));
        let c = curve_from_cover(&p, &z).unwrap();
        assert_eq!(c.degree(), 5);
        assert!(c.is_rational());
        let e = subcover(&p, &z).unwrap();
        assert!(e.lambda.is_rational());
    }

    #[test]
    fn wrong_root_rejected() {
        let err = curve_from_cover(&cp(6, 9), &quad(&q(2, 1))).unwrap_err();
        assert_eq!(err.name(), "invalid-root");
        assert_eq!(subcover(&cp(6, 9), &quad(&q(2, 1))).unwrap_err().name(), "invalid-root");
    }

    #[test]
    fn conjugate_root_gives_conjugate_curve() {
        let p = cp(1, 2);
        let [r1, r2] = f4_roots(&p).unwrap();
        let c1 = curve_from_cover(&p, &r1.z).unwrap();
        let c2 = curve_from_cover(&p, &r2.z).unwrap();
        assert_eq!(c1.conjugate(), c2);
        assert_eq!(c1.field(), Some(q(-87, 1)));
        let e1 = subcover(&p, &r1.z).unwrap();
        let e2 = subcover(&p, &r2.z).unwrap();
        assert_eq!(e1.lambda.conjugate(), e2.lambda);
        assert_ne!(e1.lambda, e2.lambda);
    }

    #[test]
    fn sigma_moves_z_to_a_root() {
        let p = cp(1, 2);
        let z = f4_roots(&p).unwrap()[0].z.clone();
        for w in ["s", "t", "st"] {
            let g = S3Word::parse(w).unwrap();
            let (p2, z2) = crate::cover::s3_on_triple(&p, &z, &g).unwrap();
            assert!(curve_from_cover(&p2, &z2).is_ok(), "{w}");
        }
    }

    #[test]
    fn serializes() {
        let c = Genus2Curve::from_rationals(&[q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)])
            .unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["degree"], 5);
        assert_eq!(v["field"], "Q");
        assert_eq!(v["coeffs"][0], "1");
    }

    #[test]
    fn singular_rejected() {
        // x^5 has a repeated root
        let c = Genus2Curve::from_rationals(&[q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(c.unwrap_err(), Error::SingularModel);
    }
}
