//! Invariants of binary sextics: Igusa–Clebsch `J2, J4, J6, J10` through
//! Clebsch's transvectant invariants, and the absolute invariants `i1, i2, i3`.
//!
//! Normalization: `J2 = −120A`, `J4 = −720A² + 6750B`, … so that `J10` equals
//! the discriminant `a6^10 ∏(ri − rj)²` and `J2 = a6² Σ ∏(ri − rj)²` over the
//! fifteen pairings of the six roots. Under `f ↦ r·f`, `Jn ↦ rⁿ·Jn`.

pub mod numeric;

pub use numeric::{reduced_aut_group_numeric, AutGroupReport, ComplexField, Cx};

use serde::Serialize;

use crate::curve::Genus2Curve;
use crate::error::{Error, Result};
use crate::exactalg::{QuadExt, Rational, Scalar};

/// Binary form of degree `n`: `c[i]` multiplies `x^i y^(n−i)`.
#[derive(Debug, Clone, PartialEq)]
struct Form<F> {
    c: Vec<F>,
}

impl<F: Scalar> Form<F> {
    fn deg(&self) -> usize {
        self.c.len() - 1
    }

    fn dx(&self) -> Self {
        Form {
            c: (1..self.c.len())
                .map(|i| self.c[i].scale(&Rational::from(i as i64)))
                .collect(),
        }
    }

    fn dy(&self) -> Self {
        let n = self.deg();
        Form {
            c: (0..n)
                .map(|i| self.c[i].scale(&Rational::from((n - i) as i64)))
                .collect(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let mut c = vec![F::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].plus(&x.times(y));
            }
        }
        Form { c }
    }

    fn add_assign(&mut self, o: &Self, sign: i64) {
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            *x = x.plus(&y.scale(&Rational::from(sign)));
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        Form {
            c: self.c.iter().map(|x| x.scale(r)).collect(),
        }
    }

    fn constant(&self) -> F {
        debug_assert_eq!(self.deg(), 0);
        self.c[0].clone()
    }
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(Rational::from).product()
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

fn nth<F: Scalar>(f: &Form<F>, dx: usize, dy: usize) -> Form<F> {
    let mut g = f.clone();
    for _ in 0..dx {
        g = g.dx();
    }
    for _ in 0..dy {
        g = g.dy();
    }
    g
}

/// `k`-th transvectant with the `(n−k)!(m−k)!/(n!m!)` normalization.
fn transvectant<F: Scalar>(f: &Form<F>, g: &Form<F>, k: usize) -> Form<F> {
    let (n, m) = (f.deg(), g.deg());
    let mut h = Form {
        c: vec![F::zero(); n + m - 2 * k + 1],
    };
    for j in 0..=k {
        let t = nth(f, k - j, j).mul(&nth(g, j, k - j));
        let s = binom(k, j) * if j % 2 == 0 { 1 } else { -1 };
        h.add_assign(&t, s);
    }
    h.scale(&(factorial(n - k) * factorial(m - k) / (factorial(n) * factorial(m))))
}

/// Clebsch invariants `A, B, C, D` of a sextic given by `f0..f6`.
fn clebsch<F: Scalar>(coeffs: &[F; 7]) -> [F; 4] {
    let f = Form { c: coeffs.to_vec() };
    let i = transvectant(&f, &f, 4);
    let delta = transvectant(&i, &i, 2);
    let a = transvectant(&f, &f, 6).constant();
    let b = transvectant(&i, &i, 4).constant();
    let c = transvectant(&i, &delta, 4).constant();
    let y1 = transvectant(&f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let d = transvectant(&y3, &y1, 2).constant();
    [a, b, c, d]
}

/// `[J2, J4, J6, J10]` of the sextic `f0..f6` over any scalar field.
pub fn igusa_clebsch<F: Scalar>(coeffs: &[F; 7]) -> [F; 4] {
    let [a, b, c, d] = clebsch(coeffs);
    let r = |n: i64| Rational::from(n);
    let a2 = a.times(&a);
    let a3 = a2.times(&a);
    let j2 = a.scale(&r(-120));
    let j4 = a2.scale(&r(-720)).plus(&b.scale(&r(6750)));
    let j6 = a3
        .scale(&r(8640))
        .minus(&a.times(&b).scale(&r(108000)))
        .plus(&c.scale(&r(202500)));
    let j10 = a3
        .times(&a2)
        .scale(&r(-62208))
        .plus(&a3.times(&b).scale(&r(972000)))
        .plus(&a2.times(&c).scale(&r(1620000)))
        .minus(&a.times(&b).times(&b).scale(&r(3037500)))
        .minus(&b.times(&c).scale(&r(6075000)))
        .minus(&d.scale(&r(4556250)));
    [j2, j4, j6, j10]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IgusaInvariants {
    #[serde(rename = "J2")]
    pub j2: QuadExt,
    #[serde(rename = "J4")]
    pub j4: QuadExt,
    #[serde(rename = "J6")]
    pub j6: QuadExt,
    #[serde(rename = "J10")]
    pub j10: QuadExt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbsoluteInvariants {
    pub i1: QuadExt,
    pub i2: QuadExt,
    pub i3: QuadExt,
}

impl AbsoluteInvariants {
    pub fn as_rational(&self) -> Option<[Rational; 3]> {
        Some([
            self.i1.as_rational()?.clone(),
            self.i2.as_rational()?.clone(),
            self.i3.as_rational()?.clone(),
        ])
    }
}

pub fn igusa_from_curve(c: &Genus2Curve) -> IgusaInvariants {
    igusa_from_coeffs(&c.sextic_coeffs()).expect("curve is nonzero")
}

/// Invariants of any nonzero sextic or quintic `f0..f6`, squarefree or not.
pub fn igusa_from_coeffs(coeffs: &[QuadExt; 7]) -> Result<IgusaInvariants> {
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    let [j2, j4, j6, j10] = igusa_clebsch(coeffs);
    Ok(IgusaInvariants { j2, j4, j6, j10 })
}

/// `i1 = 144J4/J2²`, `i2 = −1728(J2J4 − 3J6)/J2³`, `i3 = 486J10/J2⁵`.
pub fn absolute<F: Scalar>(j: &[F; 4]) -> Result<[F; 3]> {
    let [j2, j4, j6, j10] = j;
    if j2.is_zero() {
        return Err(Error::J2Zero);
    }
    let r = |n: i64| Rational::from(n);
    let i1 = j4.scale(&r(144)).divide(&j2.powi(2)).expect("J2 != 0");
    let i2 = j2
        .times(j4)
        .minus(&j6.scale(&r(3)))
        .scale(&r(-1728))
        .divide(&j2.powi(3))
        .expect("J2 != 0");
    let i3 = j10.scale(&r(486)).divide(&j2.powi(5)).expect("J2 != 0");
    Ok([i1, i2, i3])
}

impl IgusaInvariants {
    pub fn absolute(&self) -> Result<AbsoluteInvariants> {
        let [i1, i2, i3] = absolute(&[
            self.j2.clone(),
            self.j4.clone(),
            self.j6.clone(),
            self.j10.clone(),
        ])?;
        Ok(AbsoluteInvariants { i1, i2, i3 })
    }
}

pub fn absolute_of_curve(c: &Genus2Curve) -> Result<AbsoluteInvariants> {
    igusa_from_curve(c).absolute()
}

/// Whether two curves have equal absolute invariants.
pub fn same_point(c1: &Genus2Curve, c2: &Genus2Curve) -> Result<bool> {
    Ok(absolute_of_curve(c1)? == absolute_of_curve(c2)?)
}

/// `(rx+s)^6 f((px+q)/(rx+s))` as coefficients `f0..f6`.
pub fn mobius_substitute<F: Scalar>(f: &[F; 7], m: [&F; 4]) -> [F; 7] {
    let [p, q, r, s] = m;
    let num = Form { c: vec![q.clone(), p.clone()] };
    let den = Form { c: vec![s.clone(), r.clone()] };
    let mut out = vec![F::zero(); 7];
    for (i, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut t = Form { c: vec![c.clone()] };
        for _ in 0..i {
            t = t.mul(&num);
        }
        for _ in i..6 {
            t = t.mul(&den);
        }
        for (k, x) in t.c.into_iter().enumerate() {
            out[k] = out[k].plus(&x);
        }
    }
    out.try_into().expect("length 7")
}
