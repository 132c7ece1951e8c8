//! Cyclic Jacobi diagonalization of complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with
//! `diag(1, e^{-iφ})`, then applies the real symmetric Jacobi rotation to the
//! resulting real 2×2 block. Sweeps repeat until the off-diagonal mass is
//! negligible against the Frobenius norm.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repr::{CMatrix, RepresentedMatrix};

pub const HERMITIAN_TOL: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100;

/// Ascending real eigenvalues.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Group id per eigenvalue: consecutive values within `tol` share an id.
    pub fn multiplicity_groups(&self, tol: f64) -> Vec<usize> {
        let mut ids = Vec::with_capacity(self.len());
        let mut id = 0;
        for (i, &x) in self.eigenvalues.iter().enumerate() {
            if i > 0 && x - self.eigenvalues[i - 1] > tol {
                id += 1;
            }
            ids.push(id);
        }
        ids
    }
}

/// Eigenvalues ascending, with eigenvectors as matching columns.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: CMatrix,
}

fn frobenius(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn check_hermitian(m: &CMatrix, tol: f64) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", m.nrows(), m.ncols())));
    }
    let dev = m
        .iter()
        .zip(m.adjoint().iter())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if dev > tol {
        return Err(Error::NotHermitian(dev));
    }
    Ok(())
}

pub fn hermitian_eigen(m: &CMatrix) -> Result<EigenDecomposition> {
    check_hermitian(m, HERMITIAN_TOL)?;
    let n = m.nrows();
    // Symmetrize so tiny input asymmetry cannot bias the sweep.
    let mut a: CMatrix = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let mut v = CMatrix::identity(n, n);
    let scale = frobenius(&a);
    let target = f64::EPSILON * scale;

    let off = |a: &CMatrix| {
        let mut s = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                s += a[(p, q)].norm_sqr();
            }
        }
        (2.0 * s).sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let b = apq.norm();
                if b <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = (apq / b).conj();
                let tau = (a[(q, q)].re - a[(p, p)].re) / (2.0 * b);
                let t = if tau >= 0.0 { 1.0 } else { -1.0 } / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // U = diag(1, e^{-iφ})·[[c, s], [-s, c]] on the (p, q) plane
                let (upp, upq): (Complex64, Complex64) = (c.into(), s.into());
                let (uqp, uqq) = (phase * -s, phase * c);

                for k in 0..n {
                    let (x, y) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = x * upp + y * uqp;
                    a[(k, q)] = x * upq + y * uqq;
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = x * upp + y * uqp;
                    v[(k, q)] = x * upq + y * uqq;
                }
                for k in 0..n {
                    let (x, y) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = upp.conj() * x + uqp.conj() * y;
                    a[(q, k)] = upq.conj() * x + uqq.conj() * y;
                }
                a[(p, q)] = 0.0.into();
                a[(q, p)] = 0.0.into();
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = CMatrix::from_fn(n, n, |r, col| v[(r, order[col])]);
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

pub fn hermitian_spectrum(m: &RepresentedMatrix) -> Result<Spectrum> {
    hermitian_eigen(&m.data).map(|d| Spectrum {
        eigenvalues: d.eigenvalues,
    })
}
