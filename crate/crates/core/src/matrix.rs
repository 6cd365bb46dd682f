//! Log matrices and exact integer determinants.

use crate::error::Error;
use crate::mask::MAX_VARS;

/// An n-by-n matrix of natural numbers whose columns all sum to the same
/// degree `d` (the matrix is d-stochastic). Rows index variables, columns
/// index monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogMatrix {
    n: usize,
    d: usize,
    entries: Vec<u8>,
}

impl LogMatrix {
    /// Row-major entries; every column must sum to the same value.
    pub fn new(n: usize, entries: Vec<u8>) -> Result<Self, Error> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::IllFormed(format!(
                "matrix size must be between 1 and {MAX_VARS}, got {n}"
            )));
        }
        if entries.len() != n * n {
            return Err(Error::IllFormed(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        if let Some(&e) = entries.iter().find(|&&e| e as usize > MAX_VARS) {
            return Err(Error::IllFormed(format!(
                "entry {e} exceeds the supported maximum {MAX_VARS}"
            )));
        }
        let column_sum = |j: usize| -> usize { (0..n).map(|i| entries[i * n + j] as usize).sum() };
        let d = column_sum(0);
        for j in 1..n {
            if column_sum(j) != d {
                return Err(Error::IllFormed(format!(
                    "column {j} sums to {}, expected {d}: the log matrix must be d-stochastic",
                    column_sum(j)
                )));
            }
        }
        Ok(LogMatrix { n, d, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// The common column sum.
    pub fn degree(&self) -> usize {
        self.d
    }

    /// Entry at row `i`, column `j` (0-based).
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }
}

/// Vertex-edge incidence matrix of the n-cycle with edges
/// {1,2}, {2,3}, ..., {n-1,n}, {n,1} as columns, in that order.
/// Its determinant is `1 - (-1)^n`.
pub fn cycle_incidence_matrix(n: usize) -> LogMatrix {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut entries = vec![0u8; n * n];
    for j in 0..n {
        entries[j * n + j] = 1;
        entries[((j + 1) % n) * n + j] = 1;
    }
    LogMatrix::new(n, entries).expect("cycle incidence matrix is 2-stochastic")
}

/// Exact integer determinant by fraction-free (Bareiss) elimination.
/// No floating point; 128-bit intermediates cover n <= 16 with entries <= 16.
pub fn exact_determinant(a: &LogMatrix) -> i128 {
    let n = a.size();
    let mut m: Vec<i128> = a.entries.iter().map(|&e| e as i128).collect();
    bareiss(n, &mut m)
}

/// Elimination on a caller-owned row-major buffer, destroying it. The hot
/// census path reuses one buffer per shard instead of building a validated
/// [`LogMatrix`] per candidate.
pub(crate) fn bareiss(n: usize, m: &mut [i128]) -> i128 {
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k * n + k] == 0 {
            match (k + 1..n).find(|&r| m[r * n + k] != 0) {
                Some(r) => {
                    for j in 0..n {
                        m.swap(k * n + j, r * n + j);
                    }
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            for j in k + 1..n {
                // every intermediate here is a minor of the input, so the
                // division is exact
                m[i * n + j] = (m[i * n + j] * pivot - m[i * n + k] * m[k * n + j]) / prev;
            }
            m[i * n + k] = 0;
        }
        prev = pivot;
    }
    sign * m[n * n - 1]
}
