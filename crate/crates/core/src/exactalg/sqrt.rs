use super::multipoly::{MultiPoly, Var};
use super::rational::Rational;

/// Square root of a polynomial, `None` when it is not a perfect square.
/// The root returned has a positive leading coefficient.
pub fn poly_sqrt(p: &MultiPoly) -> Option<MultiPoly> {
    if p.is_zero() {
        return Some(MultiPoly::zero());
    }
    let (lm, lc) = p.leading_term()?;
    let mut half = *lm;
    for e in half.0.iter_mut() {
        if *e % 2 == 1 {
            return None;
        }
        *e /= 2;
    }
    let head = MultiPoly::monomial(half, lc.sqrt_exact()?);
    let two_head = head.scale(&Rational::from(2));
    let (hm, hc) = two_head.leading_term().map(|(m, c)| (*m, c.clone()))?;
    let mut s = head.clone();
    let mut last = half;
    let mut r = p - &(&s * &s);
    while let Some((rm, rc)) = r.leading_term().map(|(m, c)| (*m, c.clone())) {
        let tm = rm.div(&hm)?;
        if tm >= last {
            return None;
        }
        let t = MultiPoly::monomial(tm, &rc / &hc);
        // (s + t)^2 - s^2 = 2st + t^2
        r = &r - &(&(&s.scale(&Rational::from(2)) * &t) + &(&t * &t));
        s = &s + &t;
        last = tm;
    }
    Some(s)
}

/// The square criterion for monic quartics in `v`:
/// `X⁴+αX³+βX²+γX+δ` is a square iff `8γ = α(4β−α²)` and `64δ = (4β−α²)²`,
/// in which case the root is `X² + (α/2)X + (4β−α²)/8`.
/// Returns `None` when `p` is not a monic quartic in `v`.
pub fn quartic_square_criterion(p: &MultiPoly, v: Var) -> Option<Option<MultiPoly>> {
    if p.degree_in(v) != Some(4) {
        return None;
    }
    let c = p.coefficients_in(v);
    if c[4] != MultiPoly::one() {
        return None;
    }
    let (alpha, beta, gamma, delta) = (&c[3], &c[2], &c[1], &c[0]);
    let k = &beta.scale(&Rational::from(4)) - &(alpha * alpha);
    let cond1 = gamma.scale(&Rational::from(8)) == alpha * &k;
    let cond2 = delta.scale(&Rational::from(64)) == &k * &k;
    if !(cond1 && cond2) {
        return Some(None);
    }
    let s = MultiPoly::from_univariate(
        v,
        &[
            k.scale(&Rational::new(1, 8)),
            alpha.scale(&Rational::new(1, 2)),
            MultiPoly::one(),
        ],
    );
    Some(Some(s))
}

/// `poly_sqrt` with the quartic criterion as a fast path for monic quartics
/// in their only variable. Both routes must agree; a debug assertion checks it.
pub fn sqrt_univariate(p: &MultiPoly) -> Option<MultiPoly> {
    let vars = p.vars();
    if vars.len() == 1 {
        if let Some(fast) = quartic_square_criterion(p, vars[0]) {
            debug_assert_eq!(fast, poly_sqrt(p));
            return fast;
        }
    }
    poly_sqrt(p)
}
