use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `coefficients · x ≡ rhs (mod modulus)`; modulus 0 means equality over ℤ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub coefficients: Vec<i64>,
    pub rhs: i64,
    pub modulus: i64,
}

impl Row {
    pub fn new(coefficients: Vec<i64>, rhs: i64, modulus: i64) -> Self {
        Row { coefficients, rhs, modulus }
    }

    pub fn is_satisfied_by(&self, x: &[i64]) -> bool {
        let lhs: i128 = self.coefficients.iter().zip(x).map(|(&c, &v)| c as i128 * v as i128).sum();
        let diff = lhs - self.rhs as i128;
        if self.modulus == 0 {
            diff == 0
        } else {
            diff.rem_euclid(self.modulus as i128) == 0
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceSystem {
    /// Variable names; when deserialized without them, `x1, x2, …` are used.
    #[serde(default)]
    pub variables: Vec<String>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub solvable: bool,
    /// One assignment to the variables, present exactly when solvable.
    pub witness: Option<Vec<i64>>,
}

/// Names `x_ij` for `i != j` in lexicographic order.
pub fn pair_variables(n: usize) -> Vec<String> {
    let mut v = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                v.push(format!("x{i}{j}"));
            }
        }
    }
    v
}

/// Position of `x_ij` in [`pair_variables`].
pub fn variable_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i >= 1 && j >= 1 && i <= n && j <= n);
    (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 }
}

impl CongruenceSystem {
    pub fn new(variables: Vec<String>) -> Self {
        CongruenceSystem { variables, rows: Vec::new() }
    }

    /// Fills in default variable names and checks row lengths and moduli.
    pub fn normalized(mut self) -> Result<Self> {
        if self.variables.is_empty() {
            let k = self.rows.first().map_or(0, |r| r.coefficients.len());
            self.variables = (1..=k).map(|i| format!("x{i}")).collect();
        }
        let k = self.variables.len();
        for (r, row) in self.rows.iter().enumerate() {
            if row.coefficients.len() != k {
                return Err(Error::Shape(format!(
                    "row {} has {} coefficients, expected {k}",
                    r + 1,
                    row.coefficients.len()
                )));
            }
            if row.modulus < 0 {
                return Err(Error::Shape(format!("row {} has negative modulus", r + 1)));
            }
        }
        Ok(self)
    }

    pub fn is_satisfied_by(&self, x: &[i64]) -> bool {
        x.len() == self.variables.len() && self.rows.iter().all(|r| r.is_satisfied_by(x))
    }
}

fn checked(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow("congruence solver"))
}

/// Decides integer solvability.
///
/// Each modular row gets a slack column carrying its modulus, turning the
/// system into `A y = b` over ℤ. Row and column operations bring `A` to
/// diagonal form `U A V = D`; then `D z = U b` is solved entrywise and
/// `y = V z`. The returned witness is checked against every row.
pub fn solve_congruence(s: &CongruenceSystem) -> Result<Solution> {
    let k = s.variables.len();
    let slack: Vec<usize> = (0..s.rows.len()).filter(|&r| s.rows[r].modulus != 0).collect();
    let rows = s.rows.len();
    let cols = k + slack.len();

    let mut a = vec![vec![0i128; cols]; rows];
    let mut b: Vec<i128> = s.rows.iter().map(|r| r.rhs as i128).collect();
    for (r, row) in s.rows.iter().enumerate() {
        if row.coefficients.len() != k {
            return Err(Error::Shape(format!("row {} has the wrong length", r + 1)));
        }
        for (c, &v) in row.coefficients.iter().enumerate() {
            a[r][c] = v as i128;
        }
    }
    for (t, &r) in slack.iter().enumerate() {
        a[r][k + t] = s.rows[r].modulus as i128;
    }
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| (i == j) as i128).collect()).collect();

    let mut rank = 0;
    while rank < rows.min(cols) {
        let t = rank;
        let Some((pr, pc)) = smallest(&a, t..rows, t..cols) else { break };
        a.swap(t, pr);
        b.swap(t, pr);
        swap_cols(&mut a, t, pc);
        swap_cols(&mut v, t, pc);
        loop {
            let p = a[t][t];
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for c in t..cols {
                        a[i][c] = checked(a[i][c].checked_sub(checked(q.checked_mul(a[t][c]))?))?;
                    }
                    b[i] = checked(b[i].checked_sub(checked(q.checked_mul(b[t]))?))?;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for r in t..rows {
                        a[r][j] = checked(a[r][j].checked_sub(checked(q.checked_mul(a[r][t]))?))?;
                    }
                    for row in v.iter_mut() {
                        row[j] = checked(row[j].checked_sub(checked(q.checked_mul(row[t]))?))?;
                    }
                }
            }
            // Remainders smaller than the pivot become the next pivot.
            if let Some((i, _)) = smallest(&a, t + 1..rows, t..t + 1) {
                a.swap(t, i);
                b.swap(t, i);
            } else if let Some((_, j)) = smallest(&a, t..t + 1, t + 1..cols) {
                swap_cols(&mut a, t, j);
                swap_cols(&mut v, t, j);
            } else {
                break;
            }
        }
        rank += 1;
    }

    let mut z = vec![0i128; cols];
    for t in 0..rank {
        if b[t] % a[t][t] != 0 {
            return Ok(Solution { solvable: false, witness: None });
        }
        z[t] = b[t] / a[t][t];
    }
    if b[rank..].iter().any(|&x| x != 0) {
        return Ok(Solution { solvable: false, witness: None });
    }
    let mut x = Vec::with_capacity(k);
    for row in v.iter().take(k) {
        let mut acc: i128 = 0;
        for (c, &zc) in row.iter().zip(&z) {
            acc = checked(acc.checked_add(checked(c.checked_mul(zc))?))?;
        }
        x.push(i64::try_from(acc).map_err(|_| Error::Overflow("congruence witness"))?);
    }
    if !s.rows.iter().all(|r| r.is_satisfied_by(&x)) {
        // Unreachable for a correct reduction; treated as a hard failure.
        return Err(Error::Overflow("congruence witness verification"));
    }
    Ok(Solution { solvable: true, witness: Some(x) })
}

/// Nonzero entry of least absolute value in the given block.
fn smallest(
    a: &[Vec<i128>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let m = a[i][j].abs();
            if m != 0 && best.map_or(true, |(b, _, _)| m < b) {
                best = Some((m, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

fn swap_cols(m: &mut [Vec<i128>], i: usize, j: usize) {
    if i != j {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
}
