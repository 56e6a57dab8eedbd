//! Jacobi-preconditioned conjugate gradients for symmetric positive
//! definite sparse systems.

use super::sparse::CsrMatrix;

/// Iteration cap before the solve is declared divergent.
pub const MAX_CG_ITERATIONS: usize = 100_000;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solves `A x = b` with A symmetric positive definite, stopping when the
/// residual norm drops below `rel_tol * ||b||`. `x0` seeds the iteration
/// (zeros otherwise). Returns the solution and the iteration count, or
/// `None` if the iteration cap is reached without convergence.
pub fn pcg(
    a: &CsrMatrix,
    b: &[f64],
    x0: Option<&[f64]>,
    rel_tol: f64,
) -> Option<(Vec<f64>, usize)> {
    let n = a.n();
    debug_assert_eq!(b.len(), n);
    let b_norm = norm(b);
    if b_norm == 0.0 {
        return Some((vec![0.0; n], 0));
    }
    let target = rel_tol * b_norm;

    let inv_diag: Vec<f64> = a
        .diagonal()
        .iter()
        .map(|&d| if d.abs() > 0.0 { 1.0 / d } else { 1.0 })
        .collect();

    let mut x = match x0 {
        Some(seed) => {
            debug_assert_eq!(seed.len(), n);
            seed.to_vec()
        }
        None => vec![0.0; n],
    };
    let mut r = vec![0.0; n];
    a.mul_vec(&x, &mut r);
    for i in 0..n {
        r[i] = b[i] - r[i];
    }
    if norm(&r) <= target {
        return Some((x, 0));
    }

    let mut z: Vec<f64> = r.iter().zip(&inv_diag).map(|(ri, di)| ri * di).collect();
    let mut p = z.clone();
    let mut rz = dot(&r, &z);
    let mut ap = vec![0.0; n];

    for iter in 1..=MAX_CG_ITERATIONS {
        a.mul_vec(&p, &mut ap);
        let pap = dot(&p, &ap);
        if !(pap.is_finite() && pap > 0.0) {
            // Indefinite or broken system; treat as non-convergence.
            return None;
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        if norm(&r) <= target {
            return Some((x, iter));
        }
        for i in 0..n {
            z[i] = r[i] * inv_diag[i];
        }
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_spd_system() {
        // Tridiagonal 1D Laplacian, n = 50, b = ones.
        let n = 50;
        let mut trip = Vec::new();
        for i in 0..n {
            trip.push((i, i, 2.0));
            if i + 1 < n {
                trip.push((i, i + 1, -1.0));
                trip.push((i + 1, i, -1.0));
            }
        }
        let a = CsrMatrix::from_triplets(n, trip);
        let b = vec![1.0; n];
        let (x, iters) = pcg(&a, &b, None, 1e-12).expect("converges");
        assert!(iters <= n + 1, "CG should finish in at most n steps, took {iters}");
        // Residual check.
        let mut ax = vec![0.0; n];
        a.mul_vec(&x, &mut ax);
        let res: f64 = ax
            .iter()
            .zip(&b)
            .map(|(ai, bi)| (ai - bi) * (ai - bi))
            .sum::<f64>()
            .sqrt();
        assert!(res <= 1e-10, "residual {res}");
        // Known closed form: x_i = (i+1)(n-i)/2.
        for (i, &xi) in x.iter().enumerate() {
            let exact = (i as f64 + 1.0) * (n as f64 - i as f64) / 2.0;
            assert!((xi - exact).abs() < 1e-8, "x[{i}] = {xi}, exact {exact}");
        }
    }

    #[test]
    fn zero_rhs_returns_zero() {
        let a = CsrMatrix::from_triplets(3, vec![(0, 0, 1.0), (1, 1, 1.0), (2, 2, 1.0)]);
        let (x, iters) = pcg(&a, &[0.0; 3], None, 1e-10).unwrap();
        assert_eq!(x, vec![0.0; 3]);
        assert_eq!(iters, 0);
    }

    #[test]
    fn warm_start_reduces_iterations() {
        let n = 200;
        let mut trip = Vec::new();
        for i in 0..n {
            trip.push((i, i, 2.0));
            if i + 1 < n {
                trip.push((i, i + 1, -1.0));
                trip.push((i + 1, i, -1.0));
            }
        }
        let a = CsrMatrix::from_triplets(n, trip);
        let b = vec![1.0; n];
        let (x, cold_iters) = pcg(&a, &b, None, 1e-10).expect("cold converges");
        let (_, warm_iters) = pcg(&a, &b, Some(&x), 1e-10).expect("warm converges");
        assert!(warm_iters <= 1, "warm start from the solution should be instant");
        assert!(cold_iters > warm_iters);
    }
}
