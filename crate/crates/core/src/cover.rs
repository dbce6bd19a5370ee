//! The normalized degree-5 cover `φ(X) = X·F1²/F2²` and its ramification data.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{
    poly, quadratic_roots, resultant::constant_ratio, MultiPoly, QuadExt, RatFunc, Rational,
    Scalar, Var,
};
use crate::report::CheckReport;
use crate::transcription as tr;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverParams {
    pub a: Rational,
    pub b: Rational,
}

impl CoverParams {
    /// Validates `a ≠ 0`, `b ≠ 0`, `a+b+1 ≠ 0`, `2a+1 ≠ 0`.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let p = CoverParams { a, b };
        p.check()?;
        Ok(p)
    }

    /// Unvalidated parameters, for operations that accept excluded points.
    pub fn raw(a: Rational, b: Rational) -> Self {
        CoverParams { a, b }
    }

    pub fn is_admissible(&self) -> bool {
        self.check().is_ok()
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        CoverParams::new(Rational::from(a), Rational::from(b))
    }

    fn check(&self) -> Result<()> {
        let one = Rational::one();
        if self.a.is_zero() {
            return Err(Error::excluded("a"));
        }
        if self.b.is_zero() {
            return Err(Error::excluded("b"));
        }
        if (&self.a + &self.b + &one).is_zero() {
            return Err(Error::excluded("a + b + 1"));
        }
        if (Rational::from(2) * &self.a + one).is_zero() {
            return Err(Error::excluded("2a + 1"));
        }
        Ok(())
    }

    pub fn point(&self) -> [(Var, Rational); 2] {
        [(Var::A, self.a.clone()), (Var::B, self.b.clone())]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RamificationCase {
    NonDegenerate,
    I,
    II,
    III,
}

impl fmt::Display for RamificationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RamificationCase::NonDegenerate => "NonDegenerate",
            RamificationCase::I => "I",
            RamificationCase::II => "II",
            RamificationCase::III => "III",
        })
    }
}

impl std::str::FromStr for RamificationCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "1" => Ok(RamificationCase::I),
            "II" | "2" => Ok(RamificationCase::II),
            "III" | "3" => Ok(RamificationCase::III),
            "NonDegenerate" => Ok(RamificationCase::NonDegenerate),
            _ => Err(Error::InvalidInput(format!("unknown case {s:?}"))),
        }
    }
}

/// `F1..F4` over ℚ[X, a, b].
pub fn symbolic_f() -> [MultiPoly; 4] {
    let x = MultiPoly::var(Var::X);
    [tr::F1, tr::F2, tr::F3, tr::F4].map(|d| d.poly().expect("transcription parses").subs(Var::Lx, &x))
}

/// `φ = X·F1²/F2²` over ℚ(X, a, b).
pub fn symbolic_phi() -> RatFunc {
    let [f1, f2, ..] = symbolic_f();
    let num = &MultiPoly::var(Var::X) * &f1.pow(2);
    RatFunc::new(num, f2.pow(2)).expect("F2 is nonzero")
}

/// The discriminant product Δ(a, b) as a polynomial.
pub fn delta_poly() -> MultiPoly {
    tr::DELTA_FACTORS
        .iter()
        .fold(MultiPoly::one(), |acc, d| &acc * &d.poly().expect("parses"))
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverData {
    pub params: CoverParams,
    #[serde(rename = "F1")]
    pub f1: MultiPoly,
    #[serde(rename = "F2")]
    pub f2: MultiPoly,
    #[serde(rename = "F3")]
    pub f3: MultiPoly,
    #[serde(rename = "F4")]
    pub f4: MultiPoly,
    pub phi: RatFunc,
    pub case: RamificationCase,
}

impl CoverData {
    /// Flat JSON form `{a, b, F1..F4, phi_num, phi_den, case}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "a": self.params.a,
            "b": self.params.b,
            "F1": self.f1,
            "F2": self.f2,
            "F3": self.f3,
            "F4": self.f4,
            "phi_num": self.phi.num(),
            "phi_den": self.phi.den(),
            "case": self.case.to_string(),
        })
    }
}

/// Builds `F1..F4` and `φ` at admissible parameters.
pub fn build_cover(params: &CoverParams) -> Result<CoverData> {
    params.check()?;
    let pt = params.point();
    let [f1, f2, f3, f4] = symbolic_f().map(|f| f.eval_partial(&pt));
    let phi = RatFunc::new(&MultiPoly::var(Var::X) * &f1.pow(2), f2.pow(2))?;
    let case = classify_case(params).case;
    Ok(CoverData {
        params: params.clone(),
        f1,
        f2,
        f3,
        f4,
        phi,
        case,
    })
}

/// `φ` at arbitrary (possibly excluded) parameters, reduced. Used to watch the
/// degree collapse when an excluded factor vanishes.
pub fn raw_phi(a: &Rational, b: &Rational) -> Result<RatFunc> {
    let pt = [(Var::A, a.clone()), (Var::B, b.clone())];
    let [f1, f2, ..] = symbolic_f().map(|f| f.eval_partial(&pt));
    RatFunc::new(&MultiPoly::var(Var::X) * &f1.pow(2), f2.pow(2))
}

pub fn phi_degree(phi: &RatFunc) -> u32 {
    let dn = phi.num().degree_in(Var::X).unwrap_or(0);
    let dd = phi.den().degree_in(Var::X).unwrap_or(0);
    dn.max(dd)
}

fn square_residual(f: &[MultiPoly; 4]) -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let xm1 = &x - &MultiPoly::one();
    &(&(&x * &f[0].pow(2)) - &(&xm1 * &f[2].pow(2))) - &f[1].pow(2)
}

/// Checks `X·F1² − (X−1)·F3² = F2²` for a numeric cover.
pub fn verify_square_identity(c: &CoverData) -> Result<CheckReport> {
    let r = square_residual(&[c.f1.clone(), c.f2.clone(), c.f3.clone(), c.f4.clone()]);
    identity_report("square-identity", r)
}

/// The same identity over ℚ[X, a, b].
pub fn verify_square_identity_symbolic() -> Result<CheckReport> {
    identity_report("square-identity-symbolic", square_residual(&symbolic_f()))
}

fn identity_report(name: &str, residual: MultiPoly) -> Result<CheckReport> {
    if residual.is_zero() {
        Ok(CheckReport::new(name, true).residual(&residual))
    } else {
        Err(Error::IdentityViolation {
            check: name.into(),
            residual: residual.to_string(),
        })
    }
}

/// Numerator and denominator of `φ′` before any cancellation:
/// `((F1² + 2X·F1·F1′)·F2 − 2X·F1²·F2′) / F2³`.
fn phi_prime_parts(f: &[MultiPoly; 4]) -> (MultiPoly, MultiPoly) {
    let x = MultiPoly::var(Var::X);
    let two = Rational::from(2);
    let (f1, f2) = (&f[0], &f[1]);
    let d1 = f1.derivative(Var::X);
    let d2 = f2.derivative(Var::X);
    let left = &(&f1.pow(2) + &(&(&x * f1) * &d1).scale(&two)) * f2;
    let right = (&(&x * &f1.pow(2)) * &d2).scale(&two);
    (&left - &right, f2.pow(3))
}

fn factorization_report(name: &str, f: &[MultiPoly; 4]) -> Result<CheckReport> {
    let (num, den) = phi_prime_parts(f);
    let target = &(&f[0] * &f[2]) * &f[3];
    match constant_ratio(&num, &target) {
        Some(k) if !k.is_zero() => Ok(CheckReport::new(name, true)
            .constant("numerator_constant", &k)
            .constant("denominator", "F2^3")
            .constant("denominator_degree", den.degree_in(Var::X))),
        _ => Err(Error::IdentityViolation {
            check: name.into(),
            residual: (&num - &target).to_string(),
        }),
    }
}

/// Checks `φ′ = k·F1·F3·F4 / F2³` and records `k`.
pub fn derivative_factorization(c: &CoverData) -> Result<CheckReport> {
    factorization_report(
        "derivative-factorization",
        &[c.f1.clone(), c.f2.clone(), c.f3.clone(), c.f4.clone()],
    )
}

pub fn derivative_factorization_symbolic() -> Result<CheckReport> {
    factorization_report("derivative-factorization-symbolic", &symbolic_f())
}

/// `φ′` evaluated at a scalar point (numerator over denominator).
pub fn phi_prime_at<F: Scalar>(c: &CoverData, x: &F) -> Option<F> {
    let (num, den) = phi_prime_parts(&[c.f1.clone(), c.f2.clone(), c.f3.clone(), c.f4.clone()]);
    let ev = |p: &MultiPoly| {
        let up = p.to_upoly(Var::X).expect("univariate in X");
        up.map(F::from_rational).eval(x)
    };
    ev(&num).divide(&ev(&den))
}

/// `φ` evaluated at a scalar point.
pub fn phi_at<F: Scalar>(c: &CoverData, x: &F) -> Option<F> {
    let ev = |p: &MultiPoly| {
        let up = p.to_upoly(Var::X).expect("univariate in X");
        up.map(F::from_rational).eval(x)
    };
    ev(c.phi.num()).divide(&ev(c.phi.den()))
}

/// The case-specific nonvanishing factors, each a polynomial in `a`.
pub fn case_factors(case: RamificationCase) -> &'static [&'static str] {
    match case {
        RamificationCase::I => &["a", "a + 2", "2a + 1", "a - 2", "a + 8", "a^2 + 2a + 2", "a^2 + 4a + 8"],
        RamificationCase::II => &["a", "9a - 8", "a + 8", "2a + 1", "3a - 1", "a - 1", "a - 2"],
        RamificationCase::III => &[
            "a",
            "a^2 - 4",
            "2a + 1",
            "3a^3 - 12a - 1",
            "a - 4",
            "96a^5 - 400a^4 - 128a^3 + 800a^2 - 72a - 225",
        ],
        RamificationCase::NonDegenerate => &[],
    }
}

/// Fails with the first case factor that vanishes at `a`.
pub fn check_case_factors(case: RamificationCase, a: &Rational) -> Result<()> {
    for f in case_factors(case) {
        if poly(f).eval(&[(Var::A, a.clone())])?.is_zero() {
            return Err(Error::excluded(*f));
        }
    }
    Ok(())
}

/// Case condition polynomial in a, b.
pub fn case_condition(case: RamificationCase) -> Option<MultiPoly> {
    match case {
        RamificationCase::I => Some(poly("4b - a^2")),
        RamificationCase::II => Some(poly("b - a + 1")),
        RamificationCase::III => Some(tr::CASE3_CONDITION.poly().expect("parses")),
        RamificationCase::NonDegenerate => None,
    }
}

/// Whether the case-specific nonvanishing list holds at the parameters.
pub fn case_admissible(case: RamificationCase, a: &Rational) -> bool {
    check_case_factors(case, a).is_ok()
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: RamificationCase,
    /// Every case condition that holds, in the order I, II, III.
    pub satisfied: Vec<RamificationCase>,
    /// Satisfied conditions whose case-specific nonvanishing list fails.
    pub excluded: Vec<RamificationCase>,
    pub delta: Rational,
    pub vanishing_delta_factors: Vec<String>,
    /// Whether `(a, b)` passes the cover's own exclusions.
    pub cover_admissible: bool,
}

/// Accepts unvalidated parameters. Tests I, then II, then III. The tag is the first satisfied condition whose
/// nonvanishing list holds. If every satisfied condition is excluded, III wins
/// when it holds with `a ≠ 0`, else the first one; `excluded` says so.
pub fn classify_case(params: &CoverParams) -> CaseReport {
    let pt = params.point();
    let mut satisfied = Vec::new();
    let mut excluded = Vec::new();
    for case in [RamificationCase::I, RamificationCase::II, RamificationCase::III] {
        let cond = case_condition(case).expect("degenerate case");
        if cond.eval(&pt).expect("a, b assigned").is_zero() {
            satisfied.push(case);
            if !case_admissible(case, &params.a) {
                excluded.push(case);
            }
        }
    }
    let case = satisfied
        .iter()
        .find(|c| !excluded.contains(c))
        .or_else(|| {
            // nothing admissible: III needs only Disc(F4) = 0 with a != 0
            let iii = &RamificationCase::III;
            satisfied
                .contains(iii)
                .then_some(iii)
                .filter(|_| !params.a.is_zero())
                .or(satisfied.first())
        })
        .copied()
        .unwrap_or(RamificationCase::NonDegenerate);
    if satisfied.len() > 1 {
        // overlapping conditions only meet at parameters some case excludes
        debug_assert!(!excluded.is_empty(), "unexpected overlap at {params:?}");
    }
    let vanishing_delta_factors = tr::DELTA_FACTORS
        .iter()
        .filter(|d| d.poly().expect("parses").eval(&pt).expect("assigned").is_zero())
        .map(|d| d.text.to_string())
        .collect();
    CaseReport {
        case,
        satisfied,
        excluded,
        delta: delta(params),
        vanishing_delta_factors,
        cover_admissible: params.is_admissible(),
    }
}

/// Value of Δ at `(a, b)`.
pub fn delta(params: &CoverParams) -> Rational {
    tr::DELTA_FACTORS
        .iter()
        .map(|d| d.poly().expect("parses").eval(&params.point()).expect("assigned"))
        .product()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum S3Gen {
    /// `(a, b, z) ↦ (a/b, 1/b, 1/z)`
    Sigma,
    /// `(a, b, z) ↦ (a, −a−b−1, 1−z)`
    Tau,
}

/// A word in the generators, applied left to right.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct S3Word(pub Vec<S3Gen>);

impl S3Word {
    pub fn identity() -> Self {
        S3Word(vec![])
    }

    /// One word for each of the six group elements.
    pub fn elements() -> Vec<S3Word> {
        use S3Gen::*;
        vec![
            S3Word(vec![]),
            S3Word(vec![Sigma]),
            S3Word(vec![Tau]),
            S3Word(vec![Sigma, Tau]),
            S3Word(vec![Tau, Sigma]),
            S3Word(vec![Sigma, Tau, Sigma]),
        ]
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for c in s.chars() {
            match c {
                's' | 'σ' => out.push(S3Gen::Sigma),
                't' | 'τ' => out.push(S3Gen::Tau),
                'e' | '1' => {}
                _ => return Err(Error::InvalidInput(format!("bad S3 word {s:?}"))),
            }
        }
        Ok(S3Word(out))
    }
}

/// Applies a word to `(a, b)`.
pub fn s3_on_params(params: &CoverParams, g: &S3Word) -> Result<CoverParams> {
    let (mut a, mut b) = (params.a.clone(), params.b.clone());
    for gen in &g.0 {
        match gen {
            S3Gen::Sigma => {
                let bi = b.recip().ok_or_else(|| Error::excluded("b"))?;
                a = &a * &bi;
                b = bi;
            }
            S3Gen::Tau => {
                b = -(&a + &b + Rational::one());
            }
        }
    }
    CoverParams::new(a, b)
}

/// Applies a word to `(a, b, z)`.
pub fn s3_on_triple(
    params: &CoverParams,
    z: &QuadExt,
    g: &S3Word,
) -> Result<(CoverParams, QuadExt)> {
    let mut z = z.clone();
    let mut cur = params.clone();
    for gen in &g.0 {
        cur = s3_on_params(&cur, &S3Word(vec![*gen]))?;
        z = match gen {
            S3Gen::Sigma => z.inverse().ok_or_else(|| Error::InvalidRoot("z = 0".into()))?,
            S3Gen::Tau => QuadExt::one().minus(&z),
        };
    }
    Ok((cur, z))
}

/// The coordinates `u`, `v` as rational functions of a, b.
pub fn uv_symbolic() -> (RatFunc, RatFunc) {
    let u = RatFunc::new(tr::U_NUM.poly().expect("parses"), tr::U_DEN.poly().expect("parses"))
        .expect("nonzero");
    let v = RatFunc::new(tr::V_NUM.poly().expect("parses"), tr::V_DEN.poly().expect("parses"))
        .expect("nonzero");
    (u, v)
}

pub fn uv_invariants(params: &CoverParams) -> Result<(Rational, Rational)> {
    let den = &params.b * &(&params.a + &params.b + Rational::one());
    if den.is_zero() {
        return Err(Error::excluded("b(a + b + 1)"));
    }
    let (u, v) = uv_symbolic();
    Ok((u.eval(&params.point())?, v.eval(&params.point())?))
}

#[derive(Debug, Clone, Serialize)]
pub struct F4Root {
    pub z: QuadExt,
    pub is_one: bool,
}

/// Both roots of `F4`, with the `+√` root first.
pub fn f4_roots(params: &CoverParams) -> Result<[F4Root; 2]> {
    if (Rational::from(2) * &params.a + Rational::one()).is_zero() {
        return Err(Error::excluded("2a + 1"));
    }
    let f4 = &symbolic_f()[3];
    let (r1, r2) = quadratic_roots(f4, Var::X, &params.point())?;
    let tag = |z: QuadExt| F4Root {
        is_one: z == QuadExt::one(),
        z,
    };
    Ok([tag(r1), tag(r2)])
}

/// The root `z ≠ 1` used to build the curve: the first root unless it is 1.
pub fn preferred_root(params: &CoverParams) -> Result<QuadExt> {
    let [r1, r2] = f4_roots(params)?;
    if !r1.is_one {
        Ok(r1.z)
    } else if !r2.is_one {
        Ok(r2.z)
    } else {
        Err(Error::InvalidRoot("both roots of F4 equal 1".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{q, resultant};

    fn cp(a: i64, b: i64) -> CoverParams {
        CoverParams::from_ints(a, b).unwrap()
    }

    #[test]
    fn cover_at_one_one() {
        let c = build_cover(&cp(1, 1)).unwrap();
        assert_eq!(c.f1, poly("X^2+5X+3"));
        assert_eq!(c.f2, poly("3X^2+5X+1"));
        assert_eq!(c.f3, poly("X^2+X+1"));
        assert_eq!(c.f4, poly("3X^2-3X+3"));
        assert_eq!(phi_degree(&c.phi), 5);
        assert!(verify_square_identity(&c).unwrap().passed());
        let one = q(1, 1);
        assert_eq!(c.f1.eval(&[(Var::X, one.clone())]).unwrap().pow(2), q(81, 1));
    }

    #[test]
    fn exclusions() {
        assert!(matches!(
            CoverParams::from_ints(1, -2),
            Err(Error::ExcludedParameter { ref factor }) if factor == "a + b + 1"
        ));
        assert!(CoverParams::from_ints(0, 1).is_err());
        assert!(CoverParams::new(q(-1, 2), q(1, 1)).is_err());
        // the degree collapses on the excluded lines
        assert!(phi_degree(&raw_phi(&q(1, 1), &q(-2, 1)).unwrap()) <= 3);
        assert!(phi_degree(&raw_phi(&q(1, 1), &q(0, 1)).unwrap()) <= 3);
    }

    #[test]
    fn symbolic_identities() {
        assert!(verify_square_identity_symbolic().unwrap().passed());
        let r = derivative_factorization_symbolic().unwrap();
        assert_eq!(r.constants["numerator_constant"], "1");
    }

    #[test]
    fn phi_prime_vanishes_at_f4_roots() {
        for (a, b) in [(1, 1), (6, 9), (1, 2)] {
            let p = cp(a, b);
            let c = build_cover(&p).unwrap();
            for r in f4_roots(&p).unwrap() {
                assert!(phi_prime_at(&c, &r.z).unwrap().is_zero());
            }
        }
        let c = build_cover(&cp(6, 9)).unwrap();
        assert!(phi_prime_at(&c, &q(21, 13)).unwrap().is_zero());
    }

    #[test]
    fn cases() {
        assert_eq!(classify_case(&cp(6, 9)).case, RamificationCase::I);
        assert_eq!(classify_case(&cp(3, 2)).case, RamificationCase::II);
        let r = classify_case(&CoverParams::raw(q(-2, 1), q(1, 1)));
        assert!(!r.cover_admissible);
        assert_eq!(r.case, RamificationCase::III);
        assert_eq!(r.satisfied, vec![RamificationCase::I, RamificationCase::III]);
        assert_eq!(r.excluded, vec![RamificationCase::I, RamificationCase::III]);
        let r = classify_case(&cp(1, 2));
        assert_eq!(r.case, RamificationCase::NonDegenerate);
        assert!(!r.delta.is_zero());
        assert!(delta(&cp(6, 9)).is_zero());
        assert!(delta(&cp(3, 2)).is_zero());
        assert_eq!(delta(&cp(1, 1)), q(3 * 1 * 3 * -1 * -3 * 13 * 13 * -5 * 3, 1));
    }

    #[test]
    fn case_factor_lists_match_displays() {
        let prod = |c| case_factors(c).iter().fold(MultiPoly::one(), |acc, f| &acc * &poly(f));
        assert_eq!(prod(RamificationCase::II), tr::CASE2_NONVANISHING.poly().unwrap());
        assert_eq!(prod(RamificationCase::III), tr::CASE3_NONVANISHING.poly().unwrap());
        // case I: the nonvanishing part of delta on b = a^2/4
        let on_line: MultiPoly = tr::DELTA_FACTORS
            .iter()
            .map(|d| d.poly().unwrap().subs(Var::B, &poly("a^2/4")))
            .filter(|f| !f.is_zero())
            .fold(MultiPoly::one(), |acc, f| &acc * &f);
        let radical = resultant::squarefree_factors(&on_line, Var::A)
            .into_iter()
            .fold(MultiPoly::one(), |acc, (f, _)| &acc * &f);
        assert!(resultant::constant_ratio(&radical, &prod(RamificationCase::I)).is_some());
        assert_eq!(check_case_factors(RamificationCase::II, &q(2, 1)).unwrap_err(), Error::excluded("a - 2"));
    }

    #[test]
    fn case_conditions_meet_only_at_a_equal_two() {
        let r = resultant::resultant(
            &case_condition(RamificationCase::I).unwrap(),
            &case_condition(RamificationCase::II).unwrap(),
            Var::B,
        )
        .unwrap();
        assert_eq!(r.primitive(), poly("(a-2)^2"));
    }

    #[test]
    fn s3_action() {
        let p = cp(1, 2);
        let s = S3Word::parse("s").unwrap();
        let t = S3Word::parse("t").unwrap();
        assert_eq!(s3_on_params(&p, &s).unwrap(), CoverParams::new(q(1, 2), q(1, 2)).unwrap());
        assert_eq!(s3_on_params(&p, &t).unwrap(), cp(1, -4));
        // involutions, and στ has order 3
        for w in ["ss", "tt", "ststst"] {
            assert_eq!(s3_on_params(&p, &S3Word::parse(w).unwrap()).unwrap(), p);
        }
        assert_ne!(s3_on_params(&p, &S3Word::parse("st").unwrap()).unwrap(), p);
        // orbit has six distinct points at a generic parameter
        let mut orbit: Vec<_> = S3Word::elements()
            .iter()
            .map(|g| s3_on_params(&p, g).unwrap())
            .map(|c| (c.a, c.b))
            .collect();
        orbit.sort();
        orbit.dedup();
        assert_eq!(orbit.len(), 6);
        // b = -1 - a maps through tau to b = 0
        assert!(s3_on_params(&CoverParams::new(q(1, 1), q(-1, 2)).unwrap(), &S3Word::parse("ts").unwrap()).is_ok());
    }

    #[test]
    fn uv_values_and_invariance() {
        assert_eq!(uv_invariants(&cp(1, 1)).unwrap(), (q(10, 3), q(1, 3)));
        assert_eq!(uv_invariants(&cp(1, 2)).unwrap(), (q(5, 2), q(1, 8)));
        let sig = s3_on_params(&cp(1, 2), &S3Word::parse("s").unwrap()).unwrap();
        assert_eq!(uv_invariants(&sig).unwrap(), (q(5, 2), q(1, 8)));
        let (u, v) = uv_symbolic();
        let a = RatFunc::var(Var::A);
        let b = RatFunc::var(Var::B);
        let tau_b = a.neg().sub(&b).sub(&RatFunc::one());
        let sigma = [(Var::A, a.div(&b).unwrap()), (Var::B, b.inv().unwrap())];
        let tau = [(Var::A, a.clone()), (Var::B, tau_b)];
        for f in [&u, &v] {
            assert_eq!(&f.subs_many(&sigma).unwrap(), f);
            assert_eq!(&f.subs_many(&tau).unwrap(), f);
        }
    }

    /// Unreduced fraction, compared by cross-multiplication.
    #[derive(Clone)]
    struct Frac(MultiPoly, MultiPoly);

    impl Frac {
        fn p(p: MultiPoly) -> Self {
            Frac(p, MultiPoly::one())
        }
        fn add(&self, o: &Frac) -> Frac {
            Frac(&(&self.0 * &o.1) + &(&o.0 * &self.1), &self.1 * &o.1)
        }
        fn mul(&self, o: &Frac) -> Frac {
            Frac(&self.0 * &o.0, &self.1 * &o.1)
        }
        fn inv(&self) -> Frac {
            Frac(self.1.clone(), self.0.clone())
        }
        fn same(&self, o: &Frac) -> bool {
            &self.0 * &o.1 == &o.0 * &self.1
        }
    }

    fn subs(p: &MultiPoly, map: &[(Var, Frac)]) -> Frac {
        match map.split_first() {
            None => Frac::p(p.clone()),
            Some(((v, r), rest)) => {
                let mut acc = Frac::p(MultiPoly::zero());
                for c in p.coefficients_in(*v).iter().rev() {
                    acc = acc.mul(r).add(&subs(c, rest));
                }
                acc
            }
        }
    }

    #[test]
    fn phi_equivariance() {
        let phi = symbolic_phi();
        let v = |x| Frac::p(MultiPoly::var(x));
        let one = Frac::p(MultiPoly::one());
        let neg = |f: &Frac| Frac(-&f.0, f.1.clone());
        let at = |map: &[(Var, Frac)]| subs(phi.num(), map).mul(&subs(phi.den(), map).inv());
        // sigma: phi_{σ(a,b)}(X) = 1/phi(1/X)
        let lhs = at(&[(Var::A, v(Var::A).mul(&v(Var::B).inv())), (Var::B, v(Var::B).inv())]);
        let rhs = at(&[(Var::X, v(Var::X).inv())]).inv();
        assert!(lhs.same(&rhs));
        // tau: phi_{τ(a,b)}(X) = 1 - phi(1 - X)
        let tb = neg(&v(Var::A).add(&v(Var::B)).add(&one));
        let lhs = at(&[(Var::B, tb)]);
        let rhs = one.add(&neg(&at(&[(Var::X, one.add(&neg(&v(Var::X))))])));
        assert!(lhs.same(&rhs));
        // and sigma is not a symmetry of phi itself
        assert!(!lhs.same(&at(&[])));
    }

    #[test]
    fn roots_of_f4() {
        let [r1, r2] = f4_roots(&cp(6, 9)).unwrap();
        assert!(r1.z == QuadExt::rational(q(21, 13)) || r2.z == QuadExt::rational(q(21, 13)));
        let [r1, r2] = f4_roots(&cp(3, 2)).unwrap();
        assert!(r1.z == QuadExt::rational(q(16, 7)) || r2.z == QuadExt::rational(q(16, 7)));
        assert!(r1.is_one || r2.is_one);
        let [r1, _] = f4_roots(&cp(1, 2)).unwrap();
        assert_eq!(r1.z.d(), Some(&q(-87, 1)));
        assert_ne!(preferred_root(&cp(3, 2)).unwrap(), QuadExt::one());
    }
}
