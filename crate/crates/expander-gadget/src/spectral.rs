//! Second eigenvalue / singular value estimates with explicit residuals.

use crate::graph::Graph;
use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Largest matrix dimension handled by the dense symmetric eigensolver.
pub const DENSE_LIMIT: usize = 2048;

const POWER_MAX_ITERS: usize = 20_000;
const POWER_TOL: f64 = 1e-10;

/// An eigenvalue estimate and the norm of its eigenpair residual.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: f64,
    pub residual: f64,
}

/// λ₂ of the normalized Laplacian `I − D^{-1/2} A D^{-1/2}`. Requires min degree ≥ 1.
pub fn normalized_laplacian_lambda2(g: &Graph) -> Estimate {
    let n = g.vertex_count();
    let inv_sqrt: Vec<f64> = (0..n).map(|v| 1.0 / (g.degree(v) as f64).sqrt()).collect();
    if n <= DENSE_LIMIT {
        let mut l = DMatrix::<f64>::identity(n, n);
        for (u, v) in g.edges() {
            let w = -inv_sqrt[u] * inv_sqrt[v];
            l[(u, v)] = w;
            l[(v, u)] = w;
        }
        let eig = SymmetricEigen::new(l.clone());
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
        let i = order[1];
        let lambda = eig.eigenvalues[i];
        let x = eig.eigenvectors.column(i).into_owned();
        let residual = (&l * &x - &x * lambda).norm() / x.norm();
        // backward error of the dense solver, ‖L‖ ≤ 2
        let slack = 16.0 * n as f64 * f64::EPSILON;
        return Estimate { value: lambda, residual: residual + slack };
    }
    // M = 2I − L has top eigenvector D^{1/2}·1 (eigenvalue 2); deflate it.
    let top: DVector<f64> = DVector::from_iterator(n, (0..n).map(|v| (g.degree(v) as f64).sqrt())).normalize();
    let apply = |x: &DVector<f64>| -> DVector<f64> {
        let mut y = x * 1.0;
        for (u, v) in g.edges() {
            let w = inv_sqrt[u] * inv_sqrt[v];
            y[u] += w * x[v];
            y[v] += w * x[u];
        }
        y
    };
    let (theta, residual) = deflated_power(n, &top, apply);
    Estimate { value: 2.0 - theta, residual }
}

/// σ₂ of a d-regular biadjacency matrix `b` (rows = left side). Returns an upper estimate
/// `sqrt(μ₂ + residual)` where μ₂ is the second eigenvalue of `BᵀB`.
pub fn biadjacency_sigma2(b: &[Vec<usize>], n_side: usize, d: usize) -> Estimate {
    if n_side <= DENSE_LIMIT {
        let mut m = DMatrix::<f64>::zeros(n_side, n_side);
        for (x, row) in b.iter().enumerate() {
            for &y in row {
                m[(x, y)] += 1.0;
            }
        }
        let btb = m.transpose() * &m;
        let eig = SymmetricEigen::new(btb.clone());
        let mut order: Vec<usize> = (0..n_side).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
        let i = order[1];
        let mu = eig.eigenvalues[i];
        let x = eig.eigenvectors.column(i).into_owned();
        let residual = (&btb * &x - &x * mu).norm() / x.norm();
        let slack = 16.0 * n_side as f64 * f64::EPSILON * (d * d) as f64;
        let r = residual + slack;
        return Estimate { value: (mu.max(0.0) + r).sqrt(), residual: r };
    }
    let top = DVector::from_element(n_side, 1.0).normalize();
    let apply = |x: &DVector<f64>| -> DVector<f64> {
        let mut bx = DVector::<f64>::zeros(n_side);
        for (r, row) in b.iter().enumerate() {
            for &c in row {
                bx[r] += x[c];
            }
        }
        let mut y = DVector::<f64>::zeros(n_side);
        for (r, row) in b.iter().enumerate() {
            for &c in row {
                y[c] += bx[r];
            }
        }
        y
    };
    let (mu, residual) = deflated_power(n_side, &top, apply);
    Estimate { value: (mu.max(0.0) + residual).sqrt(), residual }
}

/// Power iteration orthogonal to `top`; returns the Rayleigh quotient and its residual.
fn deflated_power<F: Fn(&DVector<f64>) -> DVector<f64>>(n: usize, top: &DVector<f64>, apply: F) -> (f64, f64) {
    // deterministic start vector with no symmetry
    let mut x = DVector::from_iterator(n, (0..n).map(|i| ((i as f64 + 1.0) * 0.754_877_666).fract() - 0.5));
    let mut theta = 0.0;
    let mut residual = f64::INFINITY;
    for _ in 0..POWER_MAX_ITERS {
        let c = top.dot(&x);
        x -= top * c;
        let norm = x.norm();
        if norm == 0.0 {
            break;
        }
        x /= norm;
        let y = apply(&x);
        theta = x.dot(&y);
        residual = (&y - &x * theta).norm();
        if residual < POWER_TOL {
            break;
        }
        x = y;
    }
    (theta, residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_lambda2() {
        // K_n normalized Laplacian has λ₂ = n/(n−1)
        let e = normalized_laplacian_lambda2(&Graph::complete(4));
        assert!((e.value - 4.0 / 3.0).abs() < 1e-12);
        assert!(e.residual < 1e-9);
    }

    #[test]
    fn complete_bipartite_sigma2_zero() {
        let b: Vec<Vec<usize>> = (0..5).map(|_| (0..5).collect()).collect();
        let e = biadjacency_sigma2(&b, 5, 5);
        assert!(e.value < 1e-6);
    }

    #[test]
    fn matching_sigma2_is_one() {
        let b: Vec<Vec<usize>> = (0..6).map(|i| vec![i]).collect();
        let e = biadjacency_sigma2(&b, 6, 1);
        assert!((e.value - 1.0).abs() < 1e-6);
    }
}
