use serde::Serialize;

use crate::cover::{f4_roots, uv_invariants, uv_symbolic, CoverParams};
use crate::error::{Error, Result};
use crate::exactalg::{poly_sqrt, MultiPoly, QuadExt, RatFunc, Rational, Scalar, Var};
use crate::report::CheckReport;
use crate::transcription as tr;

/// `c2 w² + c1 w + c0 = 0` over `ℚ[u, v]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WRelation {
    pub c0: MultiPoly,
    pub c1: MultiPoly,
    pub c2: MultiPoly,
}

impl WRelation {
    pub fn at(&self, u: &Rational, v: &Rational) -> Result<[Rational; 3]> {
        let pt = [(Var::U, u.clone()), (Var::V, v.clone())];
        Ok([self.c0.eval(&pt)?, self.c1.eval(&pt)?, self.c2.eval(&pt)?])
    }

    pub fn discriminant(&self) -> MultiPoly {
        &self.c1.pow(2) - &(&self.c0 * &self.c2).scale(&Rational::from(4))
    }
}

pub fn w_relation() -> WRelation {
    let p = |d: tr::Display| d.poly().expect("parses");
    WRelation {
        c0: p(tr::C0),
        c1: p(tr::C1),
        c2: p(tr::C2),
    }
}

/// `w = (z² − z + 1)³ / (z²(z − 1)²)` as a rational function of `z`.
pub fn w_symbolic() -> RatFunc {
    RatFunc::new(tr::W_NUM.poly().expect("parses"), tr::W_DEN.poly().expect("parses"))
        .expect("nonzero denominator")
}

pub fn w_of_z<F: Scalar>(z: &F) -> Result<F> {
    let z1 = z.minus(&F::one());
    let den = z.times(z).times(&z1).times(&z1);
    let q = z.times(&z1).plus(&F::one());
    q.powi(3)
        .divide(&den)
        .ok_or_else(|| Error::InvalidRoot("w is undefined at z = 0, 1".into()))
}

/// Checks that `w(z±)` are exactly the two roots of the relation at
/// `(u(a,b), v(a,b))`.
pub fn verify_theorem3(params: &CoverParams) -> Result<CheckReport> {
    let params = CoverParams::new(params.a.clone(), params.b.clone())?;
    let (u, v) = uv_invariants(&params)?;
    let [c0, c1, c2] = w_relation().at(&u, &v)?;
    let roots = f4_roots(&params)?;
    let mut ws = Vec::with_capacity(2);
    let mut residuals = Vec::with_capacity(2);
    for r in &roots {
        let w = w_of_z(&r.z)?;
        let (cq0, cq1, cq2) = (QuadExt::rational(c0.clone()), QuadExt::rational(c1.clone()), QuadExt::rational(c2.clone()));
        let res = cq2.times(&w).times(&w).plus(&cq1.times(&w)).plus(&cq0);
        residuals.push(res);
        ws.push(w);
    }
    let sum = ws[0].plus(&ws[1]);
    let prod = ws[0].times(&ws[1]);
    let vieta = match c2.recip() {
        Some(inv) => {
            sum == QuadExt::rational(-(&c1 * &inv)) && prod == QuadExt::rational(&c0 * &inv)
        }
        None => false,
    };
    let ok = residuals.iter().all(Scalar::is_zero) && vieta;
    let show = |x: &QuadExt| x.to_string();
    Ok(CheckReport::new("w_relation_at_point", ok)
        .residual(residuals.iter().map(show).collect::<Vec<_>>())
        .constant("u", u.to_string())
        .constant("v", v.to_string())
        .constant("z", roots.iter().map(|r| show(&r.z)).collect::<Vec<_>>())
        .constant("w", ws.iter().map(show).collect::<Vec<_>>())
        .constant("vieta", vieta))
}

/// Divides `c1² − 4c0c2` by the displayed `Δ_w` and checks that the quotient
/// is a rational constant times a square.
pub fn delta_w_check() -> Result<CheckReport> {
    let rel = w_relation();
    let disc = rel.discriminant();
    let dw = tr::DELTA_W.poly()?;
    let Some(quot) = disc.exact_div(&dw) else {
        let (_, r) = crate::exactalg::pseudo_rem(&disc, &dw, Var::U);
        return Ok(CheckReport::new("delta_w", false)
            .residual(r.to_string())
            .constant("division", "inexact"));
    };
    let constant = quot.leading_coeff();
    let root = poly_sqrt(&quot.scale(&constant.recip().expect("nonzero quotient")));
    let on_eq24 = disc
        .subs(Var::V, &(&MultiPoly::int(16) - &MultiPoly::var(Var::U).scale(&Rational::from(2))))
        .is_zero();
    let samples: [(i64, i64); 4] = [(3, 5), (-7, 2), (11, -13), (1, 17)];
    let spot = samples.iter().all(|&(u, v)| {
        let pt = [(Var::U, Rational::from(u)), (Var::V, Rational::from(v))];
        let lhs = disc.eval(&pt).expect("u, v assigned");
        let rhs = dw.eval(&pt).expect("u, v assigned") * quot.eval(&pt).expect("u, v assigned");
        lhs == rhs
    });
    let ok = root.is_some() && on_eq24 && spot;
    Ok(CheckReport::new("delta_w", ok)
        .constant("quotient", quot.to_string())
        .constant("square_constant", constant.to_string())
        .constant("square_root", root.map(|r| r.to_string()))
        .constant("vanishes_on_2u+v-16", on_eq24)
        .constant("spot_checks", spot))
}

/// The case III condition in `(a, b)`.
pub fn y3_membership(a: &Rational, b: &Rational) -> bool {
    tr::CASE3_CONDITION
        .poly()
        .expect("parses")
        .eval(&[(Var::A, a.clone()), (Var::B, b.clone())])
        .expect("a, b assigned")
        .is_zero()
}

/// `2u + v − 16 = 0`.
pub fn y3_uv_constraint(u: &Rational, v: &Rational) -> bool {
    (Rational::from(2) * u + v - Rational::from(16)).is_zero()
}

/// Numerator of `2u + v − 16` after substituting `u(a, b)`, `v(a, b)`.
pub fn y3_line_pullback() -> MultiPoly {
    let (u, v) = uv_symbolic();
    let e = tr::Y3_UV_LINE.poly().expect("parses");
    let r = RatFunc::poly(e)
        .subs_many(&[(Var::U, u), (Var::V, v)])
        .expect("defined");
    r.num().clone()
}
