use serde::Serialize;

use super::{check_f4_root, f_polys_at, quad};
use crate::cover::{symbolic_f, CoverParams};
use crate::error::{Error, Result};
use crate::exactalg::{pseudo_rem, MultiPoly, QuadExt, RatFunc, Rational, Scalar, UPoly, Var};
use crate::report::CheckReport;
use crate::transcription as tr;

/// Edits applied before parsing the table: the stray `12ya` term is dropped
/// rather than guessed, and `a2` loses its unmatched closing parenthesis.
const A0_STRAY: &str = " + 12ya";

/// The four table coefficients `a0..a3` over ℚ[a, b, z], plus the edits made.
pub fn g3_table_symbolic() -> ([MultiPoly; 4], Vec<String>) {
    let mut notes = Vec::new();
    let a0 = tr::G3_A0.text.replace(A0_STRAY, "");
    notes.push(format!("a0: dropped term {:?}", A0_STRAY.trim_start_matches(" + ")));
    let a2 = tr::G3_A2.text.strip_suffix(')').expect("trailing paren");
    notes.push("a2: removed unmatched ')'".into());
    let parse = |s: &str| MultiPoly::parse(s).expect("repaired table parses");
    (
        [parse(&a0), parse(tr::G3_A1.text), parse(a2), parse(tr::G3_A3.text)],
        notes,
    )
}

/// The table cubic at `(a, b, z)`, with `z` checked against `F4`.
pub fn g3_from_paper(params: &CoverParams, z: &QuadExt) -> Result<UPoly<QuadExt>> {
    let (a, b) = (quad(&params.a), quad(&params.b));
    check_f4_root(&a, &b, z)?;
    let f4z = f4_in_z();
    let pt = [(Var::A, a), (Var::B, b), (Var::Z, z.clone())];
    let (coeffs, _) = g3_table_symbolic();
    Ok(UPoly::new(
        coeffs
            .iter()
            .map(|c| {
                let (r, _) = pseudo_rem(c, &f4z, Var::Z);
                debug_assert_eq!(&r, c, "table is already linear in z");
                c.eval_scalar(&pt).expect("a, b, z assigned")
            })
            .collect(),
    ))
}

fn f4_in_z() -> MultiPoly {
    symbolic_f()[3].subs(Var::X, &MultiPoly::var(Var::Z))
}

/// Quotient and remainder of `x·F1(x)²·F2(z)² − z·F1(z)²·F2(x)²` by `(x−z)²`.
pub fn g3_quotient<F: Scalar>(a: &F, b: &F, z: &F) -> (UPoly<F>, UPoly<F>) {
    let [f1, f2, ..] = f_polys_at(a, b);
    let x = UPoly::new(vec![F::zero(), F::one()]);
    let f1z = f1.eval(z).powi(2);
    let f2z = f2.eval(z).powi(2);
    let g = x
        .mul(&f1.pow(2))
        .scale(&f2z)
        .sub(&f2.pow(2).scale(&z.times(&f1z)));
    let d = UPoly::new(vec![z.times(z), z.scale(&Rational::from(-2)), F::one()]);
    g.divrem(&d)
}

pub(crate) fn g3_at(a: &QuadExt, b: &QuadExt, z: &QuadExt) -> Result<UPoly<QuadExt>> {
    check_f4_root(a, b, z)?;
    let (q, r) = g3_quotient(a, b, z);
    if !r.is_zero() {
        return Err(Error::ConstructionFailure(format!("remainder {r:?}")));
    }
    Ok(q)
}

/// The division-route cubic at `(a, b, z)`.
pub fn g3_oracle(params: &CoverParams, z: &QuadExt) -> Result<UPoly<QuadExt>> {
    g3_at(&quad(&params.a), &quad(&params.b), z)
}

/// `g3 ≡ (z_coeff·z + const_coeff) / scale` modulo `F4(z)`, polynomials in
/// `X` (and `a`, `b` when symbolic).
#[derive(Debug, Clone, Serialize)]
pub struct SymbolicG3 {
    pub z_coeff: MultiPoly,
    pub const_coeff: MultiPoly,
    pub scale: MultiPoly,
}

impl SymbolicG3 {
    /// Coefficient of `X^i` as a polynomial linear in `z`, over `scale`.
    pub fn coefficient(&self, i: u32) -> MultiPoly {
        let z = MultiPoly::var(Var::Z);
        &(&self.z_coeff.coefficient_in(Var::X, i) * &z) + &self.const_coeff.coefficient_in(Var::X, i)
    }

    pub fn as_poly(&self) -> MultiPoly {
        &(&self.z_coeff * &MultiPoly::var(Var::Z)) + &self.const_coeff
    }
}

/// Division route over ℚ[X, z] (or ℚ[X, z, a, b] with `params = None`):
/// divides `G` by `X − z` exactly, then by `X − z` again modulo `F4(z)`,
/// and reduces the quotient to degree 1 in `z`.
pub fn g3_oracle_symbolic(params: Option<&CoverParams>) -> Result<SymbolicG3> {
    let pt: Vec<(Var, Rational)> = params.map(|p| p.point().to_vec()).unwrap_or_default();
    let [f1, f2, _, f4] = symbolic_f().map(|f| f.eval_partial(&pt));
    let x = MultiPoly::var(Var::X);
    let z = MultiPoly::var(Var::Z);
    let at_z = |f: &MultiPoly| f.subs(Var::X, &z);
    let g = &(&(&x * &f1.pow(2)) * &at_z(&f2).pow(2)) - &(&(&z * &at_z(&f1).pow(2)) * &f2.pow(2));
    let xz = &x - &z;
    let fail = |m: &str| Error::ConstructionFailure(m.into());
    let q1 = g.exact_div(&xz).ok_or_else(|| fail("G not divisible by X - z"))?;
    let rest = q1.subs(Var::X, &z);
    let q2 = (&q1 - &rest).exact_div(&xz).expect("vanishes at X = z");
    let f4z = at_z(&f4);
    if !pseudo_rem(&rest, &f4z, Var::Z).0.is_zero() {
        return Err(fail("X = z is not a double root modulo F4"));
    }
    let (mut r, mut k) = pseudo_rem(&q2, &f4z, Var::Z);
    let lc = f4z.leading_coeff_in(Var::Z);
    while k > 0 {
        match r.exact_div(&lc) {
            Some(s) => {
                r = s;
                k -= 1;
            }
            None => break,
        }
    }
    debug_assert!(r.degree_in(Var::Z).unwrap_or(0) <= 1);
    Ok(SymbolicG3 {
        z_coeff: r.coefficient_in(Var::Z, 1),
        const_coeff: r.coefficient_in(Var::Z, 0),
        scale: lc.pow(k),
    })
}

/// Compares the table against the division route over ℚ(a, b)[z]/F4.
/// The scalar is fixed by `a3`; each coefficient's delta is reported.
pub fn g3_table_vs_oracle() -> Result<CheckReport> {
    let (table, notes) = g3_table_symbolic();
    let oracle = g3_oracle_symbolic(None)?;
    let f4z = f4_in_z();
    let zc = |p: &MultiPoly| p.coefficient_in(Var::Z, 1);
    let scalar = RatFunc::new(&zc(&table[3]) * &oracle.scale, zc(&oracle.coefficient(3)))?;
    let mut deltas = Vec::new();
    for (i, p) in table.iter().enumerate() {
        let o = RatFunc::new(oracle.coefficient(i as u32), oracle.scale.clone())?;
        let d = RatFunc::poly(p.clone()).sub(&scalar.mul(&o));
        // reduce the numerator modulo F4 so that only a z-linear residue remains
        let (n, k) = pseudo_rem(d.num(), &f4z, Var::Z);
        let lc = f4z.leading_coeff_in(Var::Z).pow(k);
        deltas.push(RatFunc::new(n, d.den() * &lc)?);
    }
    let consistent = deltas[1..].iter().all(|d| d.as_constant().is_some_and(|c| c.is_zero()));
    let mut rep = CheckReport::new("g3-table-vs-division", consistent)
        .residual(deltas.iter().map(|d| d.to_string()).collect::<Vec<_>>())
        .constant("scalar", scalar.to_string())
        .constant("edits", &notes);
    for (i, d) in deltas.iter().enumerate() {
        rep = rep.constant(&format!("delta_a{i}"), d.to_string());
    }
    Ok(rep)
}
