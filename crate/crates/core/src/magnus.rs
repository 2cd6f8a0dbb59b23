//! Magnus expansion of longitudes and Milnor invariants of bottom tangles.
//!
//! The group of a bottom tangle modulo any term of its lower central series
//! is free on the meridians, so each Wirtinger generator has a well-defined
//! expansion in `Z<<X_1, ..., X_n>>` truncated at degree `D`. The expansions
//! are found by sweeping the crossing relations until they stop changing.

use std::fmt;

use crate::codec::{self_writhe, validate, Diagram, Kind};
use crate::error::{Error, Result};
use crate::polyengine::{wirtinger, WirtingerPresentation};

pub const DEFAULT_DEGREE: usize = 4;
pub const MAX_DEGREE: usize = 6;

/// Noncommutative power series truncated above degree `D`.
///
/// Coefficients are stored densely per degree: the word `X_{w_1} ... X_{w_d}`
/// (0-based letters) lives at index `sum w_k n^(d-k)` of `terms[d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    n: usize,
    degree: usize,
    terms: Vec<Vec<i64>>,
}

impl TruncatedSeries {
    pub fn zero(n: usize, degree: usize) -> Self {
        let terms = (0..=degree).map(|d| vec![0; n.pow(d as u32)]).collect();
        TruncatedSeries { n, degree, terms }
    }

    pub fn one(n: usize, degree: usize) -> Self {
        let mut s = Self::zero(n, degree);
        s.terms[0][0] = 1;
        s
    }

    /// Expansion `1 + X_i` of the `i`-th meridian (1-based).
    pub fn meridian(n: usize, i: usize, degree: usize) -> Self {
        assert!(1 <= i && i <= n, "generator {i} out of range 1..={n}");
        let mut s = Self::one(n, degree);
        if degree >= 1 {
            s.terms[1][i - 1] = 1;
        }
        s
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    pub fn constant(&self) -> i64 {
        self.terms[0][0]
    }

    fn index(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &w| acc * self.n + (w - 1))
    }

    /// Coefficient of `X_{w_1} ... X_{w_k}` (1-based letters); zero beyond
    /// the degree bound.
    pub fn coeff(&self, word: &[usize]) -> i64 {
        if word.len() > self.degree {
            return 0;
        }
        assert!(word.iter().all(|&w| 1 <= w && w <= self.n), "letter out of range");
        self.terms[word.len()][self.index(word)]
    }

    pub fn set_coeff(&mut self, word: &[usize], c: i64) {
        assert!(word.len() <= self.degree, "word longer than degree bound");
        let k = self.index(word);
        self.terms[word.len()][k] = c;
    }

    fn check_compatible(&self, o: &Self) {
        assert!(self.n == o.n && self.degree == o.degree, "series shapes differ");
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_compatible(o);
        let mut out = Self::zero(self.n, self.degree);
        for da in 0..=self.degree {
            for (ia, &ca) in self.terms[da].iter().enumerate() {
                if ca == 0 {
                    continue;
                }
                for db in 0..=(self.degree - da) {
                    let stride = self.n.pow(db as u32);
                    let base = ia * stride;
                    let target = &mut out.terms[da + db][base..base + stride];
                    for (t, &cb) in target.iter_mut().zip(&o.terms[db]) {
                        *t += ca * cb;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_compatible(o);
        let mut out = self.clone();
        for (a, b) in out.terms.iter_mut().zip(&o.terms) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = self.clone();
        for x in out.terms.iter_mut().flatten() {
            *x *= s;
        }
        out
    }

    /// Inverse by the truncated geometric series; only series with constant
    /// term 1 are inverted.
    pub fn inv(&self) -> Result<Self> {
        if self.constant() != 1 {
            return Err(Error::NonUnitSeries(self.constant()));
        }
        let one = Self::one(self.n, self.degree);
        let x = self.sub(&one);
        // 1 - x + x^2 - ... ; x has no constant term, so D steps suffice.
        let mut acc = one.clone();
        for _ in 0..self.degree {
            acc = one.sub(&x.mul(&acc));
        }
        Ok(acc)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.n, self.degree);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Nonzero terms as (1-based word, coefficient), by degree then word.
    pub fn nonzero_terms(&self) -> Vec<(Vec<usize>, i64)> {
        let mut out = Vec::new();
        for d in 0..=self.degree {
            for (k, &c) in self.terms[d].iter().enumerate() {
                if c != 0 {
                    let mut word = vec![0; d];
                    let mut r = k;
                    for slot in word.iter_mut().rev() {
                        *slot = r % self.n + 1;
                        r /= self.n;
                    }
                    out.push((word, c));
                }
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.nonzero_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (word, c)) in terms.iter().enumerate() {
            let sep = match (k, *c < 0) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}")?;
            let a = c.abs();
            if word.is_empty() {
                write!(f, "{a}")?;
                continue;
            }
            if a != 1 {
                write!(f, "{a}")?;
            }
            for w in word {
                write!(f, "X{w}")?;
            }
        }
        Ok(())
    }
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul(b)
}

pub fn series_inv(a: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.inv()
}

pub fn meridian_series(n: usize, i: usize, degree: usize) -> TruncatedSeries {
    TruncatedSeries::meridian(n, i, degree)
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        return Err(Error::Shape(format!("degree bound must lie in 1..={MAX_DEGREE}, got {degree}")));
    }
    Ok(())
}

/// Expansion of every Wirtinger generator of a bottom tangle.
pub fn arc_series(w: &WirtingerPresentation, degree: usize) -> Result<Vec<TruncatedSeries>> {
    check_degree(degree)?;
    let n = w.meridians.len();
    let mut arcs: Vec<TruncatedSeries> = w
        .arcs
        .iter()
        .map(|a| TruncatedSeries::meridian(n, a.component + 1, degree))
        .collect();
    // Each pass fixes one more degree; pass D + 1 must change nothing.
    for _ in 0..=degree + 1 {
        let mut changed = false;
        for r in &w.relations {
            let over = &arcs[r.over];
            let over_inv = over.inv()?;
            let (left, right) = if r.sign > 0 { (over, &over_inv) } else { (&over_inv, over) };
            let out = left.mul(&arcs[r.under_in]).mul(right);
            if out != arcs[r.under_out] {
                arcs[r.under_out] = out;
                changed = true;
            }
        }
        if !changed {
            return Ok(arcs);
        }
    }
    Err(Error::NoConvergence(degree + 2))
}

/// Longitudes of all components of a bottom tangle, computed once.
#[derive(Clone, Debug)]
pub struct MilnorEngine {
    degree: usize,
    longitudes: Vec<TruncatedSeries>,
}

impl MilnorEngine {
    pub fn new(d: &Diagram, degree: usize) -> Result<Self> {
        if d.kind != Kind::BottomTangle {
            return Err(Error::KindMismatch { expected: "bottom tangle" });
        }
        validate(d).into_result()?;
        let w = wirtinger(d)?;
        let arcs = arc_series(&w, degree)?;
        let n = d.n();
        let signs = d.sign_map();
        let over_arc: std::collections::HashMap<u32, usize> =
            w.relations.iter().map(|r| (r.crossing, r.over)).collect();
        let mut longitudes = Vec::with_capacity(n);
        for i in 1..=n {
            // Traversal order is right to left: each Under passage multiplies
            // on the left. The framing correction then sits at the start.
            let mut l = TruncatedSeries::one(n, degree);
            for p in &d.components[i - 1] {
                if p.role == crate::codec::Role::Under {
                    let o = arcs[over_arc[&p.crossing]].pow(signs[&p.crossing].value())?;
                    l = o.mul(&l);
                }
            }
            let framing = TruncatedSeries::meridian(n, i, degree).pow(-self_writhe(d, i)?)?;
            longitudes.push(l.mul(&framing));
        }
        Ok(MilnorEngine { degree, longitudes })
    }

    pub fn n(&self) -> usize {
        self.longitudes.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Magnus expansion of the preferred longitude of component `i`.
    pub fn longitude(&self, i: usize) -> Result<&TruncatedSeries> {
        if i == 0 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        Ok(&self.longitudes[i - 1])
    }

    /// `μ(i_1 ... i_k)`: coefficient of `X_{i_1} ... X_{i_{k-1}}` in the
    /// expansion of the `i_k`-th longitude.
    pub fn mu(&self, seq: &[usize]) -> Result<i64> {
        if seq.len() < 2 {
            return Err(Error::SequenceTooShort);
        }
        if seq.len() > self.degree {
            return Err(Error::SequenceTooLong { len: seq.len(), degree: self.degree });
        }
        for &i in seq {
            if i == 0 || i > self.n() {
                return Err(Error::IndexOutOfRange { index: i, n: self.n() });
            }
        }
        let (last, word) = seq.split_last().unwrap();
        Ok(self.longitudes[last - 1].coeff(word))
    }
}

/// Magnus expansion of the preferred `i`-th longitude, truncated at `degree`.
pub fn longitude_series(d: &Diagram, i: usize, degree: usize) -> Result<TruncatedSeries> {
    d.check_index(i)?;
    Ok(MilnorEngine::new(d, degree)?.longitude(i)?.clone())
}

/// Milnor invariant `μ(I)` of a bottom tangle, `2 <= |I| <= degree`.
pub fn milnor(d: &Diagram, seq: &[usize], degree: usize) -> Result<i64> {
    if seq.len() > degree {
        return Err(Error::SequenceTooLong { len: seq.len(), degree });
    }
    MilnorEngine::new(d, degree)?.mu(seq)
}
