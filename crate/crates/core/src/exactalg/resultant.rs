//! Resultants, discriminants and gcds over ℚ[vars].
//!
//! Polynomials are viewed as univariate in a chosen variable with
//! coefficients in ℚ[other vars]. All elimination is fraction-free.

use super::multipoly::{MultiPoly, Var};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficient vector in ascending powers, no trailing zeros.
type Dense = Vec<MultiPoly>;

fn trim(mut p: Dense) -> Dense {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    p
}

fn deg(p: &Dense) -> usize {
    p.len() - 1
}

fn lc(p: &Dense) -> &MultiPoly {
    p.last().expect("nonzero polynomial")
}

fn scale(p: &Dense, c: &MultiPoly) -> Dense {
    trim(p.iter().map(|x| x * c).collect())
}

fn div_all(p: &Dense, c: &MultiPoly) -> Dense {
    p.iter()
        .map(|x| {
            x.exact_div(c)
                .expect("inexact division in subresultant sequence")
        })
        .collect()
}

/// Pseudo-remainder: `lc(b)^(deg a − deg b + 1)·a mod b`.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = deg(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    if r.len() <= db {
        return r;
    }
    let mut e = (deg(a) - db + 1) as u32;
    while !r.is_empty() && r.len() > db {
        let dr = deg(&r);
        let lr = lc(&r).clone();
        let shift = dr - db;
        let mut next: Dense = r.iter().map(|x| x * &lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[i + shift] = &next[i + shift] - &(bc * &lr);
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        r = scale(&r, &lb.pow(e));
    }
    r
}

/// Pseudo-remainder in `v`: returns `(r, k)` with `lc(f)^k · p ≡ r` modulo `f`
/// and `deg_v r < deg_v f`. `k` is as small as the reduction allows.
pub fn pseudo_rem(p: &MultiPoly, f: &MultiPoly, v: Var) -> (MultiPoly, u32) {
    let df = f.degree_in(v).expect("nonzero divisor");
    let lf = f.leading_coeff_in(v);
    let mut r = p.clone();
    let mut k = 0;
    while let Some(dr) = r.degree_in(v) {
        if dr < df || r.is_zero() {
            break;
        }
        let lr = r.leading_coeff_in(v);
        let shift = MultiPoly::var(v).pow(dr - df);
        r = &(&r * &lf) - &(&(&lr * &shift) * f);
        k += 1;
    }
    (r, k)
}

fn dense(p: &MultiPoly, v: Var) -> Dense {
    trim(p.coefficients_in(v))
}

/// Resultant of `p` and `q` with respect to `v`, via the subresultant
/// algorithm. Convention: `Res(p, q) = lc(p)^deg q · Π q(α)` over the roots of
/// `p`, equal to the Sylvester determinant.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidInput("resultant of two zero polynomials".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let mut a = dense(p, v);
    let mut b = dense(q, v);
    let mut sign_neg = false;
    if deg(&a) < deg(&b) {
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign_neg = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if deg(&b) == 0 {
        let r = lc(&b).pow(deg(&a) as u32);
        return Ok(if sign_neg { -r } else { r });
    }
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let da = deg(&a);
        let db = deg(&b);
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return Ok(MultiPoly::zero());
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = div_all(&r, &divisor);
        g = lc(&a).clone();
        // h <- g^delta / h^(delta-1)
        h = if delta == 0 {
            h.clone()
        } else {
            g.pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("inexact h update")
        };
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let num = lc(&b).pow(da);
            let res = if da == 0 {
                num
            } else {
                num.exact_div(&h.pow(da - 1)).expect("inexact final step")
            };
            return Ok(if sign_neg { -res } else { res });
        }
    }
}

/// Resultant as the determinant of the Sylvester matrix, computed with
/// Bareiss elimination. Slower; used as an independent check.
pub fn resultant_sylvester(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::InvalidInput("resultant of two zero polynomials".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let a = dense(p, v);
    let b = dense(q, v);
    let (m, n) = (deg(&a), deg(&b));
    let size = m + n;
    if size == 0 {
        return Ok(MultiPoly::one());
    }
    let mut mat = vec![vec![MultiPoly::zero(); size]; size];
    for i in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            mat[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            mat[n + i][i + k] = c.clone();
        }
    }
    Ok(bareiss_det(mat))
}

/// Fraction-free determinant.
pub fn bareiss_det(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("inexact Bareiss step");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `Disc(p) = (−1)^(n(n−1)/2) · Res(p, p′) / lc(p)`.
pub fn discriminant(p: &MultiPoly, v: Var) -> Result<MultiPoly> {
    let n = p.degree_in(v).unwrap_or(0);
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "discriminant needs degree >= 2 in {v}, got {n}"
        )));
    }
    let r = resultant(p, &p.derivative(v), v)?;
    let lcp = p.leading_coeff_in(v);
    let d = r
        .exact_div(&lcp)
        .ok_or_else(|| Error::ConstructionFailure("Res(p,p') not divisible by lc(p)".into()))?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Content of `p` viewed as a polynomial in `v` (gcd of its coefficients).
pub fn content_in(p: &MultiPoly, v: Var) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for c in p.coefficients_in(v) {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, &c);
        if g.is_constant() {
            return MultiPoly::one();
        }
    }
    g
}

/// Specializes every variable except `v` at a point where both leading
/// coefficients in `v` survive. A constant univariate gcd there bounds
/// `deg_v gcd(p, q)` by zero.
fn coprime_in(p: &MultiPoly, q: &MultiPoly, v: Var) -> bool {
    let mut others: Vec<Var> = p.vars().into_iter().chain(q.vars()).filter(|&w| w != v).collect();
    others.sort();
    others.dedup();
    let lp = p.leading_coeff_in(v);
    let lq = q.leading_coeff_in(v);
    for shift in [0i64, 7, 31] {
        let pt: Vec<(Var, Rational)> = others
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, Rational::from(3 + 2 * i as i64 + shift)))
            .collect();
        let alive = |l: &MultiPoly| !l.eval_partial(&pt).is_zero();
        if !alive(&lp) || !alive(&lq) {
            continue;
        }
        let up = p.eval_partial(&pt).to_upoly(v);
        let uq = q.eval_partial(&pt).to_upoly(v);
        if let (Some(up), Some(uq)) = (up, uq) {
            return up.gcd(&uq).degree() == Some(0);
        }
    }
    false
}

/// Greatest common divisor in ℚ[vars], normalized to integer coefficients
/// with positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.primitive();
    }
    if q.is_zero() {
        return p.primitive();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    let pv = p.vars();
    let qv = q.vars();
    let v = match pv.iter().find(|v| qv.contains(v)) {
        Some(&v) => v,
        None => {
            // no shared variable: only content-level factors can be common
            let v = pv[0];
            return gcd(&content_in(p, v), q);
        }
    };
    let coprime = coprime_in(p, q, v);
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let c = gcd(&cp, &cq);
    if coprime {
        return c.primitive();
    }
    let mut a = dense(&p.exact_div(&cp).expect("content divides"), v);
    let mut b = dense(&q.exact_div(&cq).expect("content divides"), v);
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if deg(&b) == 0 {
            return c.primitive();
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        a = b;
        let rp = MultiPoly::from_univariate(v, &r);
        let rc = content_in(&rp, v);
        b = dense(&rp.exact_div(&rc).expect("content divides"), v);
    }
    let g = MultiPoly::from_univariate(v, &b);
    let g = g.exact_div(&content_in(&g, v)).expect("content divides");
    (&g * &c).primitive()
}

/// Repeatedly divides `p` by `f`, returning the multiplicity and cofactor.
pub fn multiplicity(p: &MultiPoly, f: &MultiPoly) -> (u32, MultiPoly) {
    let mut k = 0;
    let mut cur = p.clone();
    if f.is_constant() || p.is_zero() {
        return (0, cur);
    }
    while let Some(qt) = cur.exact_div(f) {
        cur = qt;
        k += 1;
    }
    (k, cur)
}

/// Squarefree decomposition by Yun's algorithm in one variable over ℚ;
/// returns `(factor, multiplicity)` pairs with nonconstant factors.
pub fn squarefree_factors(p: &MultiPoly, v: Var) -> Vec<(MultiPoly, u32)> {
    let mut out = Vec::new();
    let dp = p.derivative(v);
    let mut a = gcd(p, &dp);
    let mut b = p.exact_div(&a).expect("gcd divides");
    let mut c = dp.exact_div(&a).expect("gcd divides");
    let mut d = &c - &b.derivative(v);
    let mut i = 1;
    while !b.is_constant() {
        a = gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative(v);
        i += 1;
    }
    out
}

/// Rational constant `k` with `p = k·q`, if any.
pub fn constant_ratio(p: &MultiPoly, q: &MultiPoly) -> Option<Rational> {
    if q.is_zero() {
        return None;
    }
    let (m, c) = q.leading_term()?;
    let pc = p.terms().find(|(pm, _)| *pm == m).map(|(_, c)| c.clone())?;
    let k = &pc / c;
    if &q.scale(&k) == p {
        Some(k)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::q;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&p("X^2-1"), &p("X-2"), Var::X).unwrap(), MultiPoly::int(3));
        let r = resultant(&p("X-a"), &p("X-b"), Var::X).unwrap();
        assert_eq!(r, p("a-b"));
        assert_eq!(resultant_sylvester(&p("X-a"), &p("X-b"), Var::X).unwrap(), r);
        assert!(resultant(&MultiPoly::zero(), &MultiPoly::zero(), Var::X).is_err());
    }

    #[test]
    fn subresultant_matches_sylvester() {
        let cases = [
            ("X^4 + a*X^3 - b*X + 1", "2X^3 - a^2*X + b"),
            ("(a+1)X^3 + b*X^2 - X + a", "b*X^2 + X - a*b"),
            ("X^5 - a*X^2 + b", "X^2 - a"),
            ("X^2 + b", "X^5 + a*X + 1"),
        ];
        for (x, y) in cases {
            let (x, y) = (p(x), p(y));
            assert_eq!(
                resultant(&x, &y, Var::X).unwrap(),
                resultant_sylvester(&x, &y, Var::X).unwrap(),
                "{x} / {y}"
            );
        }
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&p("X^2+b*X+a"), Var::X).unwrap(), p("b^2-4a"));
        assert_eq!(
            discriminant(&p("X^3+a*X+b"), Var::X).unwrap(),
            p("-4a^3-27b^2")
        );
        assert!(discriminant(&p("X+1"), Var::X).is_err());
    }

    #[test]
    fn gcd_planted() {
        let f = p("a*b + X - 1");
        let g = p("X^2 + a");
        let h = p("b^2 - a*X");
        let got = gcd(&(&f * &g), &(&f * &h));
        assert_eq!(got, f.primitive());
        assert_eq!(gcd(&p("2a+2"), &p("3a+3")), p("a+1"));
        assert_eq!(gcd(&p("a+1"), &p("b")), MultiPoly::one());
    }

    #[test]
    fn yun() {
        let f = &p("a-1").pow(3) * &p("a+2");
        let sf = squarefree_factors(&f, Var::A);
        assert_eq!(sf, vec![(p("a+2"), 1), (p("a-1"), 3)]);
        assert_eq!(constant_ratio(&p("2a+4"), &p("a+2")), Some(q(2, 1)));
    }
}
