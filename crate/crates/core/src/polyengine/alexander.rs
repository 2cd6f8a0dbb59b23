//! Alexander polynomial of a knot from the Fox Jacobian of its Wirtinger
//! presentation, abelianized at `x -> t`.
//!
//! Each relation row is multiplied by `t` where needed so that all entries
//! are polynomials of degree at most one. Deleting the first column and the
//! last row leaves a square minor whose determinant is `±t^k Δ(t)`.

use super::laurent::LaurentPolynomial;
use super::wirtinger::{wirtinger, WirtingerPresentation};
use crate::codec::{Diagram, Kind};
use crate::error::{Error, Result};

/// Entry `c0 + c1 t` of the Fox Jacobian.
type Linear = (i64, i64);

/// Sparse minor rows: `(column, entry)` pairs, columns already shifted past
/// the deleted meridian column.
fn fox_minor(w: &WirtingerPresentation) -> Vec<Vec<(usize, Linear)>> {
    let m = w.relations.len().saturating_sub(1);
    let mut rows = Vec::with_capacity(m);
    for r in w.relations.iter().take(m) {
        // Relator over^e in over^-e out^-1, scaled by t when e = -1.
        let (in_e, over_e, out_e) = if r.sign > 0 {
            ((0, 1), (1, -1), (-1, 0))
        } else {
            ((1, 0), (-1, 1), (0, -1))
        };
        let mut row: Vec<(usize, Linear)> = Vec::with_capacity(3);
        for (col, e) in [(r.under_in, in_e), (r.over, over_e), (r.under_out, out_e)] {
            if col == 0 {
                continue;
            }
            match row.iter_mut().find(|(c, _)| *c == col - 1) {
                Some((_, acc)) => {
                    acc.0 += e.0;
                    acc.1 += e.1;
                }
                None => row.push((col - 1, e)),
            }
        }
        rows.push(row);
    }
    rows
}

fn knot_presentation(k: &Diagram) -> Result<WirtingerPresentation> {
    if k.kind != Kind::Link {
        return Err(Error::KindMismatch { expected: "link" });
    }
    if k.n() != 1 {
        return Err(Error::NotAKnot(k.n()));
    }
    wirtinger(k)
}

// ---------------------------------------------------------------------------
// Second-order jet of the determinant at t = 1
// ---------------------------------------------------------------------------

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn from_i64(v: i64) -> u64 {
    v.rem_euclid(P as i64) as u64
}

fn lift(v: u64) -> i64 {
    if v > P / 2 {
        -((P - v) as i64)
    } else {
        v as i64
    }
}

/// Element `a + b h + c h^2` of `Z_P[h] / (h^3)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Jet([u64; 3]);

impl Jet {
    const ZERO: Jet = Jet([0, 0, 0]);
    const ONE: Jet = Jet([1, 0, 0]);

    /// `c0 + c1 t` at `t = 1 + h`.
    fn from_linear((c0, c1): Linear) -> Jet {
        Jet([from_i64(c0 + c1), from_i64(c1), 0])
    }

    fn is_zero(self) -> bool {
        self.0 == [0, 0, 0]
    }

    fn mul(self, o: Jet) -> Jet {
        let [a0, a1, a2] = self.0;
        let [b0, b1, b2] = o.0;
        Jet([
            mulmod(a0, b0),
            addmod(mulmod(a0, b1), mulmod(a1, b0)),
            addmod(addmod(mulmod(a0, b2), mulmod(a1, b1)), mulmod(a2, b0)),
        ])
    }

    fn sub(self, o: Jet) -> Jet {
        Jet([submod(self.0[0], o.0[0]), submod(self.0[1], o.0[1]), submod(self.0[2], o.0[2])])
    }

    fn neg(self) -> Jet {
        Jet::ZERO.sub(self)
    }

    /// Inverse of a jet with invertible constant term.
    fn inv(self) -> Jet {
        let [a, b, c] = self.0;
        let ai = powmod(a, P - 2);
        let u = mulmod(b, ai);
        let v = mulmod(c, ai);
        // (1 + u h + v h^2)^-1 = 1 - u h + (u^2 - v) h^2
        Jet([1, submod(0, u), submod(mulmod(u, u), v)]).mul(Jet([ai, 0, 0]))
    }
}

/// Determinant of the Fox minor as a jet in `h = t - 1`.
fn determinant_jet(rows: &[Vec<(usize, Linear)>]) -> Jet {
    let m = rows.len();
    let mut a = vec![Jet::ZERO; m * m];
    for (r, row) in rows.iter().enumerate() {
        for &(c, e) in row {
            a[r * m + c] = Jet::from_linear(e);
        }
    }
    let mut det = Jet::ONE;
    for col in 0..m {
        let Some(piv) = (col..m).find(|&r| a[r * m + col].0[0] != 0) else {
            return Jet::ZERO;
        };
        if piv != col {
            for c in 0..m {
                a.swap(piv * m + c, col * m + c);
            }
            det = det.neg();
        }
        let p = a[col * m + col];
        det = det.mul(p);
        let pinv = p.inv();
        for r in (col + 1)..m {
            let f = a[r * m + col];
            if f.is_zero() {
                continue;
            }
            let f = f.mul(pinv);
            for c in (col + 1)..m {
                let x = a[col * m + c];
                if !x.is_zero() {
                    a[r * m + c] = a[r * m + c].sub(f.mul(x));
                }
            }
            a[r * m + col] = Jet::ZERO;
        }
    }
    det
}

/// Casson knot invariant: the coefficient of `z^2` in the Conway polynomial,
/// equal to `Δ''(1) / 2` for the symmetric normalization of `Δ`.
///
/// Only the second-order jet of the determinant at `t = 1` is computed, in
/// modular arithmetic; the lifted values are checked against a priori bounds
/// in the crossing count, so the result is exact.
pub fn alexander_a2(k: &Diagram) -> Result<i64> {
    let w = knot_presentation(k)?;
    let c = w.relations.len() as i64;
    if c == 0 {
        return Ok(0);
    }
    let Jet([d0, d1, d2]) = determinant_jet(&fox_minor(&w));
    let s = match lift(d0) {
        1 => 1,
        -1 => -1,
        other => return Err(Error::AlexanderNotUnit(other as i128)),
    };
    // det = s t^k Δ(t): derivatives at 1 give the shift k and Δ''(1).
    let (k_shift, f2) = (s * lift(d1), 2 * lift(d2));
    if k_shift.abs() > c || f2.abs() > 4 * c * c + 4 {
        return Err(Error::Overflow("Alexander jet"));
    }
    let second = s * f2 - k_shift * (k_shift - 1);
    if second % 2 != 0 {
        return Err(Error::AlexanderAsymmetric(format!("Δ''(1) = {second} is odd")));
    }
    Ok(second / 2)
}

// ---------------------------------------------------------------------------
// Full polynomial (fraction-free elimination)
// ---------------------------------------------------------------------------

type Poly = Vec<i128>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn pmul(a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            let t = x.checked_mul(y).ok_or(Error::Overflow("Alexander polynomial"))?;
            out[i + j] = out[i + j].checked_add(t).ok_or(Error::Overflow("Alexander polynomial"))?;
        }
    }
    Ok(trim(out))
}

fn psub(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut out = vec![0i128; a.len().max(b.len())];
    for (k, o) in out.iter_mut().enumerate() {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        *o = x.checked_sub(y).ok_or(Error::Overflow("Alexander polynomial"))?;
    }
    Ok(trim(out))
}

/// Exact quotient `a / b`; errors if the division leaves a remainder.
fn pdiv_exact(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut rem = a.clone();
    if rem.is_empty() {
        return Ok(Vec::new());
    }
    let lead = *b.last().expect("nonzero divisor");
    let mut q = vec![0i128; rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let top = *rem.last().unwrap();
        if top % lead != 0 {
            return Err(Error::Shape("inexact division in elimination".into()));
        }
        let coef = top / lead;
        let shift = rem.len() - b.len();
        q[shift] = coef;
        for (k, &bk) in b.iter().enumerate() {
            let t = coef.checked_mul(bk).ok_or(Error::Overflow("Alexander polynomial"))?;
            rem[shift + k] -= t;
        }
        rem = trim(rem);
    }
    if !rem.is_empty() {
        return Err(Error::Shape("inexact division in elimination".into()));
    }
    Ok(trim(q))
}

fn determinant_poly(rows: &[Vec<(usize, Linear)>]) -> Result<Poly> {
    let m = rows.len();
    let mut a: Vec<Vec<Poly>> = vec![vec![Vec::new(); m]; m];
    for (r, row) in rows.iter().enumerate() {
        for &(c, (c0, c1)) in row {
            a[r][c] = trim(vec![c0 as i128, c1 as i128]);
        }
    }
    let mut sign = 1i128;
    let mut prev: Poly = vec![1];
    for k in 0..m {
        let Some(piv) = (k..m).find(|&r| !a[r][k].is_empty()) else {
            return Ok(Vec::new());
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in (k + 1)..m {
            for j in (k + 1)..m {
                let num = psub(&pmul(&a[i][j], &a[k][k])?, &pmul(&a[i][k], &a[k][j])?)?;
                a[i][j] = pdiv_exact(&num, &prev)?;
            }
            a[i][k] = Vec::new();
        }
        prev = a[k][k].clone();
    }
    let det = if m == 0 { vec![1] } else { a[m - 1][m - 1].clone() };
    Ok(det.into_iter().map(|c| c * sign).collect())
}

/// Alexander polynomial normalized so that `Δ(1) = 1` and `Δ(t) = Δ(t^-1)`.
///
/// Uses exact fraction-free elimination over `Z[t]`; intended for diagrams of
/// moderate size. [`alexander_a2`] is the fast route to `a_2`.
pub fn alexander_polynomial(k: &Diagram) -> Result<LaurentPolynomial> {
    let w = knot_presentation(k)?;
    if w.relations.is_empty() {
        return Ok(LaurentPolynomial::one());
    }
    let det = determinant_poly(&fox_minor(&w))?;
    let s: i128 = det.iter().sum();
    if s != 1 && s != -1 {
        return Err(Error::AlexanderNotUnit(s));
    }
    let lo = det.iter().position(|&c| c != 0).unwrap() as i64;
    let hi = det.len() as i64 - 1;
    if (lo + hi) % 2 != 0 {
        return Err(Error::AlexanderAsymmetric(format!("span {lo}..{hi} has no centre")));
    }
    let centre = (lo + hi) / 2;
    let mut delta = LaurentPolynomial::zero();
    for (e, &c) in det.iter().enumerate() {
        let c = i64::try_from(c * s).map_err(|_| Error::Overflow("Alexander polynomial"))?;
        delta.add_term(c, e as i64 - centre);
    }
    if delta.mirror() != delta {
        return Err(Error::AlexanderAsymmetric(delta.format("t")));
    }
    Ok(delta)
}
