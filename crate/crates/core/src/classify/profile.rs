use serde::Serialize;

use crate::codec::{Diagram, Kind};
use crate::error::{Error, Result};
use crate::magnus::{MilnorEngine, DEFAULT_DEGREE};
use crate::polyengine::{a2_i, a2_ij};

/// Every invariant the deciders use, for one bottom tangle.
///
/// Pair and triple tables are stored in lexicographic order of `i < j` and
/// `i < j < k`; use the accessors rather than raw indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantProfile {
    pub n: usize,
    pub a2_i: Vec<i64>,
    pub a2_ij: Vec<i64>,
    pub mu_ij: Vec<i64>,
    pub mu_ijk: Vec<i64>,
    /// `μ(jiij)` for each pair `i < j`.
    pub mu_jiij: Vec<i64>,
    /// `4 μ(jiij) + μ(ij) mod 8`, in `0..8`.
    pub phi_ij: Vec<i64>,
}

/// Position of the pair `i < j` (1-based) in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| ((i + 1)..=n).map(move |j| (i, j)))
}

pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=n).flat_map(move |i| {
        ((i + 1)..=n).flat_map(move |j| ((j + 1)..=n).map(move |k| (i, j, k)))
    })
}

pub fn phi(mu_jiij: i64, mu_ij: i64) -> i64 {
    (4 * mu_jiij + mu_ij).rem_euclid(8)
}

impl InvariantProfile {
    /// Profile computed with the default degree bound.
    pub fn of(d: &Diagram) -> Result<Self> {
        Self::with_degree(d, DEFAULT_DEGREE)
    }

    pub fn with_degree(d: &Diagram, degree: usize) -> Result<Self> {
        if d.kind != Kind::BottomTangle {
            return Err(Error::KindMismatch { expected: "bottom tangle" });
        }
        if degree < 4 {
            return Err(Error::SequenceTooLong { len: 4, degree });
        }
        let n = d.n();
        let e = MilnorEngine::new(d, degree)?;
        let a2_i = (1..=n).map(|i| a2_i(d, i)).collect::<Result<Vec<_>>>()?;
        let mut p = InvariantProfile {
            n,
            a2_i,
            a2_ij: Vec::new(),
            mu_ij: Vec::new(),
            mu_ijk: Vec::new(),
            mu_jiij: Vec::new(),
            phi_ij: Vec::new(),
        };
        for (i, j) in pairs(n) {
            let mu = e.mu(&[i, j])?;
            let sl = e.mu(&[j, i, i, j])?;
            p.a2_ij.push(a2_ij(d, i, j)?);
            p.mu_ij.push(mu);
            p.mu_jiij.push(sl);
            p.phi_ij.push(phi(sl, mu));
        }
        for (i, j, k) in triples(n) {
            p.mu_ijk.push(e.mu(&[i, j, k])?);
        }
        Ok(p)
    }

    /// `a_2(ij)` for distinct `i, j` in either order.
    pub fn a2(&self, i: usize, j: usize) -> i64 {
        self.a2_ij[pair_index(self.n, i.min(j), i.max(j))]
    }

    /// Linking number, symmetric in its arguments.
    pub fn lk(&self, i: usize, j: usize) -> i64 {
        self.mu_ij[pair_index(self.n, i.min(j), i.max(j))]
    }

    /// `μ(jiij)` for the pair `i < j`.
    pub fn sato_levine(&self, i: usize, j: usize) -> i64 {
        self.mu_jiij[pair_index(self.n, i, j)]
    }

    pub fn phi(&self, i: usize, j: usize) -> i64 {
        self.phi_ij[pair_index(self.n, i, j)]
    }

    /// `μ(ijk)` for `i < j < k`.
    pub fn triple(&self, i: usize, j: usize, k: usize) -> i64 {
        let idx = triples(self.n).position(|t| t == (i, j, k)).expect("indices i < j < k in range");
        self.mu_ijk[idx]
    }
}
