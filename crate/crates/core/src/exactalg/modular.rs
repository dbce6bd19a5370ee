//! Common rational roots of univariate polynomials by gcds modulo word-size
//! primes, with exact verification.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::upoly::UPoly;

/// Outcome of [`common_root_modular`].
#[derive(Debug, Clone, PartialEq)]
pub enum CommonRoot {
    /// The gcd is constant.
    None,
    /// The gcd is `x − r`.
    Unique(Rational),
    /// The modular image did not settle the question.
    Unknown,
}

const MAX_PRIMES: usize = 64;

/// Miller-Rabin with bases 2, 7, 61: deterministic below 4.7e9.
fn is_prime(n: u64) -> bool {
    if n < 2 || n % 2 == 0 {
        return n == 2;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    [2u64, 7, 61].iter().all(|&a| {
        if a % n == 0 {
            return true;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            return true;
        }
        (1..s).any(|_| {
            x = x * x % n;
            x == n - 1
        })
    })
}

/// Primes below 2³¹, descending, so products fit in `u64`.
fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(x: u64, p: u64) -> u64 {
    pow_mod(x, p - 2, p)
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("below p")
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while r.len() > db {
        let k = r.len() - 1 - db;
        let f = r[r.len() - 1] * inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - f * bi % p) % p;
        }
        trim(&mut r);
    }
    r
}

fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Integer multiple of `u` with coprime coefficients.
fn integer_coeffs(u: &UPoly<Rational>) -> Vec<BigInt> {
    let l = u.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    u.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// `n/d ≡ a (mod m)` with `|n|, d ≤ √(m/2)`.
fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        (r0, r1) = (r1.clone(), &r0 - &q * &r1);
        (t0, t1) = (t1.clone(), &t0 - &q * &t1);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

/// Decides whether the nonzero polynomials `polys` share exactly one root,
/// and finds it when it is rational. `Unique` is verified exactly.
pub fn common_root_modular(polys: &[UPoly<Rational>]) -> CommonRoot {
    let ints: Vec<Vec<BigInt>> = polys.iter().filter(|u| !u.is_zero()).map(integer_coeffs).collect();
    if ints.is_empty() {
        return CommonRoot::Unknown;
    }
    let mut residue = BigInt::zero();
    let mut modulus = BigInt::one();
    let mut last: Option<Rational> = None;
    for p in primes().take(MAX_PRIMES) {
        if ints.iter().any(|c| reduce(c.last().expect("nonzero"), p) == 0) {
            continue;
        }
        let g = ints
            .iter()
            .map(|c| {
                let mut v: Vec<u64> = c.iter().map(|x| reduce(x, p)).collect();
                trim(&mut v);
                v
            })
            .reduce(|g, v| gcd_mod(&g, &v, p))
            .expect("nonempty");
        // with p not dividing a leading coefficient, deg gcd mod p ≥ deg gcd
        match g.len() {
            1 => return CommonRoot::None,
            2 => {}
            _ => return CommonRoot::Unknown,
        }
        let root = (p - g[0]) * inv_mod(g[1], p) % p;
        // CRT: x ≡ residue (mod modulus), x ≡ root (mod p)
        let pb = BigInt::from(p);
        let m_inv = BigInt::from(inv_mod(reduce(&modulus, p), p));
        let k = ((BigInt::from(root) - &residue) * m_inv).mod_floor(&pb);
        residue += &modulus * k;
        modulus *= &pb;
        let Some(r) = rational_reconstruction(&residue, &modulus) else { continue };
        if last.as_ref() == Some(&r) && polys.iter().all(|u| u.eval(&r).is_zero()) {
            return CommonRoot::Unique(r);
        }
        last = Some(r);
    }
    CommonRoot::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    fn up(cs: &[Rational]) -> UPoly<Rational> {
        UPoly::new(cs.to_vec())
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        let x = q(-355, 113);
        let a = (x.numer() * inv_big(x.denom(), &m)).mod_floor(&m);
        assert_eq!(rational_reconstruction(&a, &m), Some(x));
    }

    fn inv_big(d: &BigInt, m: &BigInt) -> BigInt {
        d.extended_gcd(m).x.mod_floor(m)
    }

    #[test]
    fn common_roots() {
        // (x − 7/3)(x + 1) and (x − 7/3)(2x − 5)
        let a = up(&[q(-7, 3), q(-4, 3), q(1, 1)]);
        let b = up(&[q(35, 3), q(-29, 3), q(2, 1)]);
        assert_eq!(common_root_modular(&[a.clone(), b.clone()]), CommonRoot::Unique(q(7, 3)));
        let c = up(&[q(1, 1), q(0, 1), q(1, 1)]);
        assert_eq!(common_root_modular(&[a.clone(), c]), CommonRoot::None);
        // a shared quadratic factor is left to the exact gcd
        assert_eq!(common_root_modular(&[a.clone(), a]), CommonRoot::Unknown);
    }
}
