//! Generator string links as pure braids on `2n` strands, and the stacking
//! products built from them.
//!
//! Component `i` of the bottom tangle above owns the strands `2i-1` (running
//! up) and `2i` (running down); together they form its band.

use crate::braid::{self, commutator, inverse, pure_generator};
use crate::codec::Diagram;
use crate::error::{Error, Result};
use crate::tangle_ops::{stack, StrandTemplate};

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    for k in [i, j] {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
    }
    if i == j {
        return Err(Error::EqualIndices);
    }
    Ok(())
}

fn signed(word: Vec<i32>, sign: i64) -> Vec<i32> {
    if sign < 0 {
        inverse(&word)
    } else {
        word
    }
}

/// Word in which the strand of component `i` nearest to the band of
/// component `j` makes one loop around that band. On its way to and from the
/// band the strand passes over everything in between.
pub fn tau_word(n: usize, i: usize, j: usize) -> Result<Vec<i32>> {
    loop_word(n, i, j, false)
}

/// Like [`tau_word`] but looping the strand of `i` farther from band `j`.
/// Kept as a negative control: it breaks the exact triple-linking law.
pub fn misrouted_tau_word(n: usize, i: usize, j: usize) -> Result<Vec<i32>> {
    loop_word(n, i, j, true)
}

fn loop_word(n: usize, i: usize, j: usize, far: bool) -> Result<Vec<i32>> {
    check_pair(n, i, j)?;
    let b = 2 * j - 1;
    let mut conj = Vec::new();
    let core: Vec<i32>;
    if i < j {
        let s = if far { 2 * i - 1 } else { 2 * i };
        conj.extend((s..b - 1).map(|k| k as i32));
        core = [b - 1, b, b, b - 1].iter().map(|&k| k as i32).collect();
    } else {
        let s = if far { 2 * i } else { 2 * i - 1 };
        conj.extend(((b + 2)..s).rev().map(|k| -(k as i32)));
        core = [b + 1, b, b, b + 1].iter().map(|&k| -(k as i32)).collect();
    }
    let mut w = conj.clone();
    w.extend(core);
    w.extend(inverse(&conj));
    Ok(w)
}

/// Simple tree with two leaves on component `i` and one on component `j`:
/// the commutator of the clasps of strand `2j-1` with the two strands of `i`.
/// Raises `a_2(ij)` by one.
pub fn whitehead_word(n: usize, i: usize, j: usize) -> Result<Vec<i32>> {
    check_pair(n, i, j)?;
    let (a, b, t) = (2 * i - 1, 2 * i, 2 * j - 1);
    let clasp = |p: usize, q: usize| if p < q { pure_generator(p, q) } else { pure_generator(q, p) };
    Ok(commutator(&clasp(b, t), &clasp(a, t)))
}

/// Double of [`whitehead_word`]: shifts `a_2(ij)` by 2 and nothing else up
/// to the invariants considered here.
pub fn nu_word(n: usize, i: usize, j: usize) -> Result<Vec<i32>> {
    let w = whitehead_word(n, i, j)?;
    let mut out = w.clone();
    out.extend(w);
    Ok(out)
}

/// Clasp between the bands of `i` and `j` changing `lk(i, j)` by +1.
pub fn clasp_word(n: usize, i: usize, j: usize) -> Result<Vec<i32>> {
    check_pair(n, i, j)?;
    let (i, j) = (i.min(j), i.max(j));
    Ok(inverse(&pure_generator(2 * i, 2 * j - 1)))
}

/// Borromean-type commutator on components `i < j < k` with `μ(ijk) = +1`.
pub fn borromean_word(n: usize, i: usize, j: usize, k: usize) -> Result<Vec<i32>> {
    check_pair(n, i, j)?;
    check_pair(n, j, k)?;
    if !(i < j && j < k) {
        return Err(Error::IndexOrder(i, k));
    }
    Ok(commutator(&pure_generator(2 * i - 1, 2 * j - 1), &pure_generator(2 * j - 1, 2 * k - 1)))
}

pub fn template_tau(n: usize, i: usize, j: usize, sign: i64) -> Result<StrandTemplate> {
    braid::template(2 * n, &signed(tau_word(n, i, j)?, sign))
}

/// `ν_ij` for `i < j`.
pub fn template_nu(n: usize, i: usize, j: usize, sign: i64) -> Result<StrandTemplate> {
    if i >= j {
        return Err(Error::IndexOrder(i, j));
    }
    braid::template(2 * n, &signed(nu_word(n, i, j)?, sign))
}

/// `ν_ji` for `i < j`: the same double tree with two leaves on `j`.
pub fn template_nu_swapped(n: usize, i: usize, j: usize, sign: i64) -> Result<StrandTemplate> {
    if i >= j {
        return Err(Error::IndexOrder(i, j));
    }
    braid::template(2 * n, &signed(nu_word(n, j, i)?, sign))
}

pub fn template_whitehead(n: usize, i: usize, j: usize, sign: i64) -> Result<StrandTemplate> {
    braid::template(2 * n, &signed(whitehead_word(n, i, j)?, sign))
}

pub fn template_clasp(n: usize, i: usize, j: usize, sign: i64) -> Result<StrandTemplate> {
    braid::template(2 * n, &signed(clasp_word(n, i, j)?, sign))
}

pub fn template_borromean(n: usize, i: usize, j: usize, k: usize, sign: i64) -> Result<StrandTemplate> {
    braid::template(2 * n, &signed(borromean_word(n, i, j, k)?, sign))
}

/// Integer matrices indexed from 1 in the API, stored 0-based.
pub type Matrix = Vec<Vec<i64>>;

pub fn zero_matrix(n: usize) -> Matrix {
    vec![vec![0; n]; n]
}

fn check_shapes(n: usize, omega: &Matrix, v: &Matrix) -> Result<()> {
    for (name, m) in [("omega", omega), ("v", v)] {
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("{name} must be {n}x{n}")));
        }
    }
    if (0..n).any(|i| omega[i][i] != 0) {
        return Err(Error::Shape("omega must have zero diagonal".into()));
    }
    if (0..n).any(|i| (0..=i).any(|j| v[i][j] != 0)) {
        return Err(Error::Shape("v must be strictly upper triangular".into()));
    }
    Ok(())
}

/// Word of the template stacked by [`build_sigma`]: `τ_ij^{ω_ij}` over all
/// `i != j`, then `ν_ij^{v_ij}` over `i < j`, each in lexicographic order.
pub fn sigma_word(n: usize, omega: &Matrix, v: &Matrix) -> Result<Vec<i32>> {
    sigma_word_with(n, omega, v, tau_word)
}

/// Word builder for one generator string link, `(n, i, j) -> word`.
pub type WordFn = fn(usize, usize, usize) -> Result<Vec<i32>>;

/// [`sigma_word`] with a replacement for the `τ` generator.
pub fn sigma_word_with(n: usize, omega: &Matrix, v: &Matrix, tau: WordFn) -> Result<Vec<i32>> {
    check_shapes(n, omega, v)?;
    let mut factors = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && omega[i - 1][j - 1] != 0 {
                factors.push((tau(n, i, j)?, omega[i - 1][j - 1]));
            }
        }
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            if v[i - 1][j - 1] != 0 {
                factors.push((nu_word(n, i, j)?, v[i - 1][j - 1]));
            }
        }
    }
    // Factors listed left to right are stacked top to bottom, so the first
    // factor sits nearest the tangle: it comes last in the bottom-up word.
    let mut word = Vec::new();
    for (w, e) in factors.iter().rev() {
        word.extend(braid::power(w, *e));
    }
    Ok(word)
}

/// `σ_{ω,v}`: `σ` stacked over the products of `τ` and `ν` templates.
pub fn build_sigma(sigma: &Diagram, omega: &Matrix, v: &Matrix) -> Result<Diagram> {
    build_sigma_with(sigma, omega, v, tau_word)
}

pub fn build_sigma_with(sigma: &Diagram, omega: &Matrix, v: &Matrix, tau: WordFn) -> Result<Diagram> {
    let n = sigma.n();
    let word = sigma_word_with(n, omega, v, tau)?;
    if word.is_empty() {
        return Ok(sigma.clone());
    }
    stack(sigma, &braid::template(2 * n, &word)?)
}
