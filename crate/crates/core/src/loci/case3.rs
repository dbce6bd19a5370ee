//! Numeric recovery of `(u, v)` on the case III locus from `(i1, i2, i3)`.
//!
//! The locus is parametrized by `a` together with a branch of the quadratic
//! condition in `b`. A secant search in `a` on `i1` runs in double precision
//! and the survivors are polished at 128 bits and filtered on `i2, i3`.

use num_complex::Complex64;
use serde::Serialize;

use crate::curve::g3_quotient;
use crate::error::{Error, Result};
use crate::exactalg::{MultiPoly, Rational, Scalar, UPoly, Var};
use crate::igusa::{absolute, igusa_clebsch, ComplexField, Cx};
use crate::transcription as tr;

#[derive(Debug, Clone, Serialize)]
pub struct Case3Recovery {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub u: [f64; 2],
    pub v: [f64; 2],
    /// Largest relative error over `i1, i2, i3` at 128 bits.
    pub residual: f64,
}

struct Polys {
    b_coeffs: Vec<MultiPoly>,
    z: (MultiPoly, MultiPoly),
    u: (MultiPoly, MultiPoly),
    v: (MultiPoly, MultiPoly),
}

fn polys() -> Polys {
    let p = |d: tr::Display| d.poly().expect("parses");
    Polys {
        b_coeffs: p(tr::CASE3_CONDITION).coefficients_in(Var::B),
        z: (p(tr::CASE3_Z_NUM), p(tr::CASE3_Z_DEN)),
        u: (p(tr::U_NUM), p(tr::U_DEN)),
        v: (p(tr::V_NUM), p(tr::V_DEN)),
    }
}

fn ratio<F: Scalar>(nd: &(MultiPoly, MultiPoly), pt: &[(Var, F)]) -> Option<F> {
    let n = nd.0.eval_scalar(pt)?;
    n.divide(&nd.1.eval_scalar(pt)?)
}

struct Point<F> {
    b: F,
    /// Igusa-Clebsch invariants of the monic model.
    j: [F; 4],
    inv: [F; 3],
}

fn point_at<F: ComplexField>(p: &Polys, a: &F, branch: bool) -> Option<Point<F>> {
    let pa = [(Var::A, a.clone())];
    let c: Vec<F> = p.b_coeffs.iter().map(|c| c.eval_scalar(&pa)).collect::<Option<_>>()?;
    let disc = c[1].times(&c[1]).minus(&c[0].times(&c[2]).scale(&Rational::from(4)));
    let s = disc.csqrt();
    let s = if branch { s } else { s.negate() };
    let b = c[1].negate().plus(&s).divide(&c[2].scale(&Rational::from(2)))?;
    let pt = [(Var::A, a.clone()), (Var::B, b.clone())];
    let z = ratio(&p.z, &pt)?;
    let (g3, _) = g3_quotient(a, &b, &z);
    if g3.degree() != Some(3) {
        return None;
    }
    let x = UPoly::new(vec![F::zero(), F::one().negate(), F::one()]);
    let f = x.mul(&g3.scale(&g3.leading().inverse()?));
    let coeffs: [F; 7] = std::array::from_fn(|i| f.coeff(i));
    let j = igusa_clebsch(&coeffs);
    let inv = absolute(&j).ok()?;
    Some(Point { b, j, inv })
}

/// `(i1, i2, i3)` at `a` on the chosen branch of `b`.
pub fn case3_invariants_at<const P: usize>(a: &Cx<P>, branch: bool) -> Result<[Cx<P>; 3]> {
    point_at(&polys(), a, branch)
        .map(|p| p.inv)
        .ok_or_else(|| Error::ConstructionFailure("degenerate point on the case III locus".into()))
}

fn rel_err<F: ComplexField>(x: &F, t: &F) -> f64 {
    x.minus(t).abs_f64() / (1.0 + t.abs_f64())
}

const SEEDS_RE: usize = 21;
const SEEDS_IM: usize = 9;

/// Damping for the secant search, and the region it may explore.
const MAX_STEP: f64 = 0.3;
const MAX_ABS: f64 = 50.0;

fn secant<F: ComplexField>(
    p: &Polys,
    target: &F,
    branch: bool,
    start: F,
    step: F,
    tol: f64,
    max_iter: usize,
) -> Option<F> {
    // i1 = 144 J4 / J2², with the pole at J2 = 0 cleared
    let h = |a: &F| {
        point_at(p, a, branch).map(|pt| pt.j[1].scale(&Rational::from(144)).minus(&target.times(&pt.j[0].powi(2))))
    };
    let mut x0 = start;
    let mut x1 = x0.plus(&step);
    let mut h0 = h(&x0)?;
    for _ in 0..max_iter {
        let h1 = h(&x1)?;
        let mut dx = h1.times(&x1.minus(&x0)).divide(&h1.minus(&h0))?;
        let size = dx.abs_f64();
        if !size.is_finite() {
            return None;
        }
        if size > MAX_STEP {
            dx = dx.times(&F::from_c64(Complex64::new(MAX_STEP / size, 0.0)));
        }
        let x2 = x1.minus(&dx);
        if x2.abs_f64() > MAX_ABS {
            return None;
        }
        if dx.abs_f64() <= tol * (1.0 + x2.abs_f64()) {
            return Some(x2);
        }
        x0 = x1;
        h0 = h1;
        x1 = x2;
    }
    None
}

/// Finds points of the case III locus with the given absolute invariants.
/// Distinct `(u, v)` are returned; `tol` bounds the relative error at 128 bits.
pub fn recover_case3_numeric(target: &[Cx<128>; 3], tol: f64) -> Result<Vec<Case3Recovery>> {
    let p = polys();
    let t64: [Complex64; 3] = std::array::from_fn(|k| target[k].to_c64());
    let t128 = target;
    let mut out: Vec<Case3Recovery> = Vec::new();
    for branch in [true, false] {
        for i in 0..SEEDS_RE {
            for j in 0..SEEDS_IM {
                let seed = Complex64::new(-5.05 + 0.5 * i as f64, -2.05 + 0.5 * j as f64);
                let Some(a) = secant(&p, &t64[0], branch, seed, Complex64::new(1e-3, 1e-3), 1e-9, 200) else {
                    continue;
                };
                let Some(pt) = point_at(&p, &a, branch) else { continue };
                if (1..3).any(|k| rel_err(&pt.inv[k], &t64[k]) > 1e-5) {
                    continue;
                }
                let step = Cx::from_f64(1e-12, 1e-12);
                let Some(a) = secant(&p, &t128[0], branch, Cx::<128>::from_c64(a), step, 1e-34, 40) else {
                    continue;
                };
                let Some(pt) = point_at(&p, &a, branch) else { continue };
                let residual = (0..3).map(|k| rel_err(&pt.inv[k], &t128[k])).fold(0.0, f64::max);
                if residual > tol {
                    continue;
                }
                let xy = [(Var::A, a.clone()), (Var::B, pt.b.clone())];
                let (Some(u), Some(v)) = (ratio(&p.u, &xy), ratio(&p.v, &xy)) else {
                    continue;
                };
                let c = |z: &Cx<128>| {
                    let z = z.to_c64();
                    [z.re, z.im]
                };
                let rec = Case3Recovery {
                    a: c(&a),
                    b: c(&pt.b),
                    u: c(&u),
                    v: c(&v),
                    residual,
                };
                let close = |x: [f64; 2], y: [f64; 2]| Complex64::new(x[0] - y[0], x[1] - y[1]).norm() < 1e-8;
                if !out.iter().any(|r| close(r.u, rec.u) && close(r.v, rec.v)) {
                    out.push(rec);
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::NotOnLocus("no case III point matches the invariants".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_a_sampled_point() {
        let a = Cx::<128>::from_f64(1.0, 0.0);
        let inv = case3_invariants_at(&a, true).unwrap();
        let found = recover_case3_numeric(&inv, 1e-25).unwrap();
        // every recovered point satisfies 2u + v = 16
        for r in &found {
            let lhs = Complex64::new(2.0 * r.u[0] + r.v[0] - 16.0, 2.0 * r.u[1] + r.v[1]);
            assert!(lhs.norm() < 1e-8, "{r:?}");
        }
        let p = polys();
        let pt = point_at(&p, &Complex64::new(1.0, 0.0), true).unwrap();
        let xy = [(Var::A, Complex64::new(1.0, 0.0)), (Var::B, pt.b)];
        let u0 = ratio(&p.u, &xy).unwrap();
        assert!(found.iter().any(|r| (Complex64::new(r.u[0], r.u[1]) - u0).norm() < 1e-8));
    }
}
