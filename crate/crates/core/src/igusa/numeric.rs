//! Numeric reduced-automorphism oracle: the stabilizer in PGL₂(ℂ) of the six
//! branch points, found by matching one ordered triple against all others.

use std::fmt;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::curve::Genus2Curve;
use crate::error::{Error, Result};
use crate::exactalg::{QuadExt, Rational, Scalar, UPoly};

pub type Float = FBig<HalfEven>;

fn fl<const P: usize>(n: i64) -> Float {
    Float::from(IBig::from(n)).with_precision(P).value()
}

fn fl_f64<const P: usize>(x: f64) -> Float {
    Float::try_from(x)
        .expect("finite")
        .with_precision(P)
        .value()
}

fn fl_rational<const P: usize>(r: &Rational) -> Float {
    let n: IBig = r.numer().to_string().parse().expect("integer");
    let d: IBig = r.denom().to_string().parse().expect("integer");
    Float::from(n).with_precision(P).value() / Float::from(d).with_precision(P).value()
}

fn to_f64(x: &Float) -> f64 {
    x.to_f64().value()
}

/// Complex number with `P`-bit binary floating-point parts.
#[derive(Clone, PartialEq)]
pub struct Cx<const P: usize> {
    pub re: Float,
    pub im: Float,
}

impl<const P: usize> Cx<P> {
    pub fn new(re: Float, im: Float) -> Self {
        Cx {
            re: re.with_precision(P).value(),
            im: im.with_precision(P).value(),
        }
    }

    pub fn from_f64(re: f64, im: f64) -> Self {
        Cx {
            re: fl_f64::<P>(re),
            im: fl_f64::<P>(im),
        }
    }

    pub fn i() -> Self {
        Cx {
            re: fl::<P>(0),
            im: fl::<P>(1),
        }
    }

    /// `|z|²`.
    pub fn norm_sqr(&self) -> Float {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Cx {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let zero = fl::<P>(0);
        if self.re == zero && self.im == zero {
            return self.clone();
        }
        let m = self.norm_sqr().sqrt();
        let two = fl::<P>(2);
        let re = ((&m + &self.re) / &two).sqrt();
        let mut im = ((&m - &self.re) / &two).sqrt();
        if self.im < zero {
            im = -im;
        }
        Cx { re, im }
    }

    pub fn from_quad(x: &QuadExt) -> Self {
        let p = fl_rational::<P>(x.p());
        match x.d() {
            None => Cx {
                re: p,
                im: fl::<P>(0),
            },
            Some(d) => {
                let q = fl_rational::<P>(x.q());
                let s = fl_rational::<P>(&d.abs()).sqrt();
                if d.is_negative() {
                    Cx { re: p, im: q * s }
                } else {
                    Cx {
                        re: p + q * s,
                        im: fl::<P>(0),
                    }
                }
            }
        }
    }
}

impl<const P: usize> fmt::Debug for Cx<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.to_c64();
        write!(f, "({:e} {:+e}i)", c.re, c.im)
    }
}

impl<const P: usize> Scalar for Cx<P> {
    fn zero() -> Self {
        Cx {
            re: fl::<P>(0),
            im: fl::<P>(0),
        }
    }
    fn one() -> Self {
        Cx {
            re: fl::<P>(1),
            im: fl::<P>(0),
        }
    }
    fn from_rational(r: &Rational) -> Self {
        Cx {
            re: fl_rational::<P>(r),
            im: fl::<P>(0),
        }
    }
    fn is_zero(&self) -> bool {
        let z = fl::<P>(0);
        self.re == z && self.im == z
    }
    fn plus(&self, rhs: &Self) -> Self {
        Cx {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Cx {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        Cx {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
    fn negate(&self) -> Self {
        Cx {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Cx {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }
}

/// Double-precision complex arithmetic, for fast searches before polishing.
impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex64::new(r.to_f64(), 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| self.inv())
    }
}

/// Complex scalars with a principal square root.
pub trait ComplexField: Scalar {
    fn csqrt(&self) -> Self;
    fn abs_f64(&self) -> f64;
    fn from_c64(z: Complex64) -> Self;
}

impl ComplexField for Complex64 {
    fn csqrt(&self) -> Self {
        self.sqrt()
    }
    fn abs_f64(&self) -> f64 {
        self.norm()
    }
    fn from_c64(z: Complex64) -> Self {
        z
    }
}

impl<const P: usize> ComplexField for Cx<P> {
    fn csqrt(&self) -> Self {
        self.sqrt()
    }
    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }
    fn from_c64(z: Complex64) -> Self {
        Cx::from_f64(z.re, z.im)
    }
}

/// Aberth iteration in double precision for starting values.
fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm() / (1.0 + z[i].norm()));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Roots of `Σ coeffs[i] x^i` to `P` bits: double-precision Aberth, then
/// Newton at full precision.
pub fn poly_roots<const P: usize>(coeffs: &[Cx<P>]) -> Result<Vec<Cx<P>>> {
    let f = UPoly::new(coeffs.to_vec());
    let n = f.degree().ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
    if n == 0 {
        return Ok(vec![]);
    }
    let df = f.derivative();
    let start = aberth(&f.coeffs().iter().map(Cx::to_c64).collect::<Vec<_>>());
    let eps = fl_f64::<P>(2f64.powi(-(P as i32) + 16)).powi(2.into());
    let mut roots = Vec::with_capacity(n);
    for s in start {
        let mut x = Cx::<P>::from_f64(s.re, s.im);
        let mut done = false;
        for _ in 0..(20 + P / 4) {
            let d = df.eval(&x);
            let step = f
                .eval(&x)
                .divide(&d)
                .ok_or_else(|| Error::Precision("vanishing derivative".into()))?;
            x = x.minus(&step);
            let scale = Float::ONE + x.norm_sqr();
            if step.norm_sqr() <= &eps * &scale {
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::Precision(format!("Newton did not converge at {}", P)));
        }
        roots.push(x);
    }
    for i in 0..n {
        for j in 0..i {
            if roots[i].minus(&roots[j]).norm_sqr() <= &eps * (Float::ONE + roots[i].norm_sqr()) {
                return Err(Error::Precision("roots did not separate".into()));
            }
        }
    }
    Ok(roots)
}

/// Point of ℙ¹ in homogeneous coordinates `(x : y)`.
#[derive(Clone, Debug)]
struct Pt<const P: usize>(Cx<P>, Cx<P>);

type Mat<const P: usize> = [Cx<P>; 4];

fn chordal_sqr<const P: usize>(u: &Pt<P>, v: &Pt<P>) -> Float {
    let cross = u.0.times(&v.1).minus(&v.0.times(&u.1)).norm_sqr();
    cross / ((u.0.norm_sqr() + u.1.norm_sqr()) * (v.0.norm_sqr() + v.1.norm_sqr()))
}

/// Matrix sending `∞, 0, 1` to `v2, v0, v1`.
fn frame<const P: usize>(v0: &Pt<P>, v1: &Pt<P>, v2: &Pt<P>) -> Option<Mat<P>> {
    let det = v2.0.times(&v0.1).minus(&v0.0.times(&v2.1));
    let alpha = v1.0.times(&v0.1).minus(&v0.0.times(&v1.1)).divide(&det)?;
    let beta = v2.0.times(&v1.1).minus(&v1.0.times(&v2.1)).divide(&det)?;
    Some([
        alpha.times(&v2.0),
        beta.times(&v0.0),
        alpha.times(&v2.1),
        beta.times(&v0.1),
    ])
}

fn adjugate<const P: usize>(m: &Mat<P>) -> Mat<P> {
    [m[3].clone(), m[1].negate(), m[2].negate(), m[0].clone()]
}

fn matmul<const P: usize>(a: &Mat<P>, b: &Mat<P>) -> Mat<P> {
    [
        a[0].times(&b[0]).plus(&a[1].times(&b[2])),
        a[0].times(&b[1]).plus(&a[1].times(&b[3])),
        a[2].times(&b[0]).plus(&a[3].times(&b[2])),
        a[2].times(&b[1]).plus(&a[3].times(&b[3])),
    ]
}

fn apply<const P: usize>(m: &Mat<P>, u: &Pt<P>) -> Pt<P> {
    Pt(
        m[0].times(&u.0).plus(&m[1].times(&u.1)),
        m[2].times(&u.0).plus(&m[3].times(&u.1)),
    )
}

#[derive(Debug, Clone, Serialize)]
pub struct AutGroupReport {
    /// Order of the stabilizer of the branch set in PGL₂.
    pub order: usize,
    pub label: String,
    /// Each element as a permutation of the branch points.
    pub permutations: Vec<Vec<usize>>,
    pub closed: bool,
    pub precision_bits: usize,
    pub needs_review: bool,
}

fn label(order: usize) -> (&'static str, bool) {
    match order {
        1 => ("Z2", false),
        2 => ("V4", false),
        _ => ("special", true),
    }
}

/// Branch points of `y² = f` on ℙ¹; a quintic adds `∞`.
fn branch_points<const P: usize>(coeffs: &[Cx<P>]) -> Result<Vec<Pt<P>>> {
    let roots = poly_roots(coeffs)?;
    let mut pts: Vec<Pt<P>> = roots.into_iter().map(|r| Pt(r, Cx::one())).collect();
    match pts.len() {
        6 => {}
        5 => pts.push(Pt(Cx::one(), Cx::zero())),
        n => return Err(Error::InvalidInput(format!("degree {n} is not 5 or 6"))),
    }
    Ok(pts)
}

/// Stabilizer of the branch set of `y² = Σ coeffs[i] x^i`, matching points
/// within chordal distance `tol`.
pub fn aut_group_of_coeffs<const P: usize>(coeffs: &[Cx<P>], tol: f64) -> Result<AutGroupReport> {
    let pts = branch_points(coeffs)?;
    let tol2 = fl_f64::<P>(tol).powi(2.into());
    let base = frame(&pts[0], &pts[1], &pts[2])
        .ok_or_else(|| Error::Precision("coincident branch points".into()))?;
    let base_inv = adjugate(&base);
    let n = pts.len();
    let triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| [i, j, k])))
        .filter(|[i, j, k]| i != j && j != k && i != k)
        .collect();
    let perms: Vec<Option<Vec<usize>>> = triples
        .par_iter()
        .map(|t| {
            let target = frame(&pts[t[0]], &pts[t[1]], &pts[t[2]])?;
            let m = matmul(&target, &base_inv);
            let mut perm = Vec::with_capacity(n);
            for u in &pts {
                let img = apply(&m, u);
                let hit = (0..n).find(|&k| chordal_sqr(&img, &pts[k]) <= tol2)?;
                perm.push(hit);
            }
            let mut seen = perm.clone();
            seen.sort();
            seen.dedup();
            (seen.len() == n).then_some(perm)
        })
        .collect();
    let permutations: Vec<Vec<usize>> = perms.into_iter().flatten().collect();
    let closed = permutations.iter().all(|p| {
        permutations.iter().all(|q| {
            let comp: Vec<usize> = q.iter().map(|&i| p[i]).collect();
            permutations.contains(&comp)
        })
    });
    let order = permutations.len();
    let (name, review) = label(order);
    Ok(AutGroupReport {
        order,
        label: name.into(),
        permutations,
        closed,
        precision_bits: P,
        needs_review: review || !closed,
    })
}

/// Runs the oracle at the smallest supported precision `≥ precision_bits`.
pub fn reduced_aut_group_numeric(
    c: &Genus2Curve,
    precision_bits: usize,
    tol: f64,
) -> Result<AutGroupReport> {
    fn run<const P: usize>(c: &Genus2Curve, tol: f64) -> Result<AutGroupReport> {
        let cs: Vec<Cx<P>> = c.f().coeffs().iter().map(Cx::from_quad).collect();
        aut_group_of_coeffs(&cs, tol)
    }
    match precision_bits {
        0..=64 => run::<64>(c, tol),
        65..=128 => run::<128>(c, tol),
        129..=256 => run::<256>(c, tol),
        257..=512 => run::<512>(c, tol),
        513..=1024 => run::<1024>(c, tol),
        _ => Err(Error::InvalidInput(format!(
            "precision {precision_bits} exceeds 1024 bits"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    fn curve(v: &[i64]) -> Genus2Curve {
        Genus2Curve::from_rationals(&v.iter().map(|&n| q(n, 1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn complex_arithmetic() {
        let i = Cx::<128>::i();
        assert!(i.times(&i).plus(&Cx::one()).is_zero());
        let z = Cx::<128>::from_quad(&QuadExt::new(q(1, 2), q(1, 6), q(-87, 1)).unwrap());
        let w = z.inverse().unwrap().times(&z);
        assert!(w.minus(&Cx::one()).norm_sqr() < fl_f64::<128>(1e-70));
        let s = Cx::<128>::from_f64(-4.0, 0.0).sqrt();
        assert!(s.minus(&Cx::from_f64(0.0, 2.0)).norm_sqr() < fl_f64::<128>(1e-70));
    }

    #[test]
    fn roots_of_unity() {
        let cs: Vec<Cx<128>> = [-1, 0, 0, 0, 0, 0, 1].iter().map(|&n| Cx::from_rational(&q(n, 1))).collect();
        let r = poly_roots(&cs).unwrap();
        for x in &r {
            let p = x.powi(6).minus(&Cx::one());
            assert!(p.norm_sqr() < fl_f64::<128>(1e-70));
        }
    }

    #[test]
    fn x6_minus_1_has_twelve() {
        let rep = reduced_aut_group_numeric(&curve(&[-1, 0, 0, 0, 0, 0, 1]), 128, 1e-20).unwrap();
        assert_eq!(rep.order, 12);
        assert!(rep.closed);
        assert!(rep.needs_review);
    }

    #[test]
    fn generic_sextic_is_trivial() {
        let rep = reduced_aut_group_numeric(&curve(&[3, -1, 4, 1, -5, 9, 2]), 128, 1e-20).unwrap();
        assert_eq!(rep.order, 1);
        assert_eq!(rep.label, "Z2");
    }

    #[test]
    fn quintic_with_involution() {
        // x(x^2 - 1)(x^2 - 4): x -> -x fixes 0 and infinity
        let rep = reduced_aut_group_numeric(&curve(&[0, 4, 0, -5, 0, 1]), 128, 1e-20).unwrap();
        assert!(rep.order >= 2);
        assert!(rep.closed);
    }

    #[test]
    fn more_precision_never_shrinks() {
        let c = curve(&[0, 4, 0, -5, 0, 1]);
        let a = reduced_aut_group_numeric(&c, 128, 1e-20).unwrap().order;
        let b = reduced_aut_group_numeric(&c, 256, 1e-20).unwrap().order;
        assert!(b >= a);
    }
}
