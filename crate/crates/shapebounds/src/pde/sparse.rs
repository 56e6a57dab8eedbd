//! Minimal compressed-sparse-row matrices for P1 finite-element systems.

/// Square sparse matrix in CSR layout with per-row sorted column indices.
#[derive(Clone, Debug)]
pub struct CsrMatrix {
    n: usize,
    row_ptr: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<f64>,
}

impl CsrMatrix {
    /// Builds an `n x n` matrix from (row, col, value) triplets, summing
    /// duplicates. Triplet order does not affect the result.
    #[must_use]
    pub fn from_triplets(n: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_unstable_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let mut cols = Vec::with_capacity(triplets.len());
        let mut vals: Vec<f64> = Vec::with_capacity(triplets.len());
        let mut row_of = Vec::with_capacity(triplets.len());
        for (r, c, v) in triplets {
            debug_assert!(r < n && c < n);
            if row_of.last() == Some(&r) && cols.last() == Some(&c) {
                *vals.last_mut().expect("parallel arrays") += v;
            } else {
                row_of.push(r);
                cols.push(c);
                vals.push(v);
            }
        }
        let mut row_ptr = vec![0usize; n + 1];
        for &r in &row_of {
            row_ptr[r + 1] += 1;
        }
        for r in 0..n {
            row_ptr[r + 1] += row_ptr[r];
        }
        Self {
            n,
            row_ptr,
            cols,
            vals,
        }
    }

    /// Matrix dimension.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `y = A x`.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.n);
        debug_assert_eq!(y.len(), self.n);
        for r in 0..self.n {
            let mut acc = 0.0;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.vals[k] * x[self.cols[k]];
            }
            y[r] = acc;
        }
    }

    /// `x^T A x` (for Rayleigh quotients).
    #[must_use]
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let mut total = 0.0;
        for r in 0..self.n {
            let mut acc = 0.0;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.vals[k] * x[self.cols[k]];
            }
            total += x[r] * acc;
        }
        total
    }

    /// The diagonal entries (zeros where absent).
    #[must_use]
    pub fn diagonal(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.n];
        for r in 0..self.n {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                if self.cols[k] == r {
                    d[r] += self.vals[k];
                }
            }
        }
        d
    }

    /// `A + s B` for equally sized matrices (used to shift stiffness by a
    /// multiple of the mass matrix).
    #[must_use]
    pub fn add_scaled(&self, other: &CsrMatrix, s: f64) -> CsrMatrix {
        debug_assert_eq!(self.n, other.n);
        let mut triplets = Vec::with_capacity(self.vals.len() + other.vals.len());
        for r in 0..self.n {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                triplets.push((r, self.cols[k], self.vals[k]));
            }
            for k in other.row_ptr[r]..other.row_ptr[r + 1] {
                triplets.push((r, other.cols[k], s * other.vals[k]));
            }
        }
        CsrMatrix::from_triplets(self.n, triplets)
    }
}
