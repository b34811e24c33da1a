//! Tiny dense linear algebra for the fixed-size matrices this crate builds:
//! LU determinants with first-order perturbation budgets, and a cyclic
//! Jacobi eigensolver for symmetric matrices. Dimensions never exceed
//! [`MAX_DIM`], so no external dependency is warranted.

use crate::error::{Error, Result};

/// Largest matrix dimension any caller constructs.
pub(crate) const MAX_DIM: usize = 8;

fn assert_square(m: &[Vec<f64>]) -> usize {
    let n = m.len();
    debug_assert!(n >= 1 && n <= MAX_DIM, "dimension {n} out of range");
    debug_assert!(m.iter().all(|row| row.len() == n), "matrix not square");
    n
}

/// Determinant via LU with partial pivoting (exact zero on pivot breakdown —
/// the matrix is singular to working precision).
pub(crate) fn det(m: &[Vec<f64>]) -> f64 {
    let n = assert_square(m);
    let mut a = m.to_vec();
    let mut sign = 1.0_f64;
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| a[r1][col].abs().total_cmp(&a[r2][col].abs()))
            .expect("non-empty pivot range");
        if a[pivot_row][col] == 0.0 {
            return 0.0;
        }
        if pivot_row != col {
            a.swap(pivot_row, col);
            sign = -sign;
        }
        let pivot = a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / pivot;
            a[row][col] = 0.0;
            for c in col + 1..n {
                let upper = a[col][c];
                a[row][c] -= factor * upper;
            }
        }
    }
    sign * (0..n).map(|i| a[i][i]).product::<f64>()
}

/// The (j,k) minor: `m` with row `j` and column `k` removed.
fn minor(m: &[Vec<f64>], skip_row: usize, skip_col: usize) -> Vec<Vec<f64>> {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != skip_col)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Exact first-order sensitivity of the determinant to independent entry
/// perturbations: `Σ_{j,k} |cofactor_{jk}| · entry_err_{jk}`
/// (since `∂det/∂m_{jk} = cofactor_{jk}`).
pub(crate) fn det_perturbation_budget(m: &[Vec<f64>], entry_err: &[Vec<f64>]) -> f64 {
    let n = assert_square(m);
    debug_assert_eq!(entry_err.len(), n);
    if n == 1 {
        return entry_err[0][0];
    }
    let mut budget = 0.0;
    for j in 0..n {
        for k in 0..n {
            let err = entry_err[j][k];
            if err != 0.0 {
                budget += det(&minor(m, j, k)).abs() * err;
            }
        }
    }
    budget
}

/// Eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi sweeps.
/// The input is symmetrized (averaged with its transpose) before iterating,
/// so tiny asymmetries from separately-evaluated entries are harmless.
pub(crate) fn symmetric_eigenvalues(m: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = m.len();
    if n == 0 || n > MAX_DIM {
        return Err(Error::Config(format!(
            "eigensolver handles 1..={MAX_DIM} dimensions, got {n}"
        )));
    }
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Config("eigensolver needs a square matrix".into()));
    }
    if m.iter().flatten().any(|v| !v.is_finite()) {
        return Err(Error::Config("eigensolver needs finite entries".into()));
    }

    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|k| 0.5 * (m[j][k] + m[k][j])).collect())
        .collect();

    let frobenius = a
        .iter()
        .flatten()
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    let target = 1e-15 * frobenius;

    for _sweep in 0..64 {
        let off = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p][q] * a[p][q])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            let mut eigen: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            eigen.sort_by(f64::total_cmp);
            return Ok(eigen);
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let app = a[p][p];
                let aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let arp = a[r][p];
                    let arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[p][r] = a[r][p];
                    a[r][q] = s * arp + c * arq;
                    a[q][r] = a[r][q];
                }
            }
        }
    }
    Err(Error::Convergence {
        partial: a[0][0],
        err_est: frobenius,
    })
}
