//! Symmetric/Hermitian eigensolving for small dense matrices: cyclic Jacobi
//! rotations on the real matrix, with Hermitian input handled through the
//! real 2n×2n embedding [[X, -Y], [Y, X]] of H = X + iY (every eigenvalue
//! of H appears twice in the embedding).

use num_complex::Complex64;
use thiserror::Error;

use crate::cmatrix::CMatrix;

/// Hermiticity gate for [`hermitian_eigenvalues`].
pub const HERMITICITY_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, Copy, PartialEq)]
pub enum EigenError {
    #[error("matrix is not Hermitian (defect {0:e})")]
    NotHermitian(f64),
}

/// Cyclic Jacobi on a symmetric matrix stored row-major in `a`. Returns the
/// eigenvalues ascending; if `vectors` is given it receives the eigenvector
/// matrix (column j is the eigenvector of the j-th returned eigenvalue).
pub fn symmetric_eigenvalues(a: &[f64], n: usize, vectors: Option<&mut Vec<f64>>) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let mut a = a.to_vec();
    let mut v = if vectors.is_some() {
        let mut id = vec![0.0; n * n];
        for i in 0..n {
            id[i * n + i] = 1.0;
        }
        id
    } else {
        Vec::new()
    };

    let frob: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let tol = 1e-14 * frob.max(1.0);

    let mut sweeps = 0;
    loop {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    s += a[p * n + q] * a[p * n + q];
                }
            }
            s.sqrt()
        };
        if off <= tol {
            break;
        }
        sweeps += 1;
        assert!(sweeps <= 100, "Jacobi failed to converge");

        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= tol / (n as f64) {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    1.0 / (2.0 * theta)
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // A <- Gᵀ A G with G the (p,q) rotation
                for k in 0..n {
                    let rp = a[p * n + k];
                    let rq = a[q * n + k];
                    a[p * n + k] = c * rp - s * rq;
                    a[q * n + k] = s * rp + c * rq;
                }
                for k in 0..n {
                    let cp = a[k * n + p];
                    let cq = a[k * n + q];
                    a[k * n + p] = c * cp - s * cq;
                    a[k * n + q] = s * cp + c * cq;
                }
                if vectors.is_some() {
                    for k in 0..n {
                        let vp = v[k * n + p];
                        let vq = v[k * n + q];
                        v[k * n + p] = c * vp - s * vq;
                        v[k * n + q] = s * vp + c * vq;
                    }
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].partial_cmp(&a[j * n + j]).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[i * n + i]).collect();
    if let Some(out) = vectors {
        out.clear();
        out.resize(n * n, 0.0);
        for (col, &src) in order.iter().enumerate() {
            for k in 0..n {
                out[k * n + col] = v[k * n + src];
            }
        }
    }
    eigenvalues
}

/// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
/// hermiticity defect exceeds [`HERMITICITY_TOL`].
pub fn hermitian_eigenvalues(h: &CMatrix) -> Result<Vec<f64>, EigenError> {
    let defect = h.hermiticity_defect();
    if defect >= HERMITICITY_TOL {
        return Err(EigenError::NotHermitian(defect));
    }
    let embedding = embed(h);
    let n = h.dim();
    let doubled = symmetric_eigenvalues(&embedding, 2 * n, None);
    // each eigenvalue of H appears twice; sorted, the even positions give
    // the spectrum once
    Ok(doubled.iter().step_by(2).copied().collect())
}

/// Eigenvalue/eigenvector pairs of a Hermitian matrix, ascending.
pub fn hermitian_eigenpairs(h: &CMatrix) -> Result<Vec<(f64, Vec<Complex64>)>, EigenError> {
    let defect = h.hermiticity_defect();
    if defect >= HERMITICITY_TOL {
        return Err(EigenError::NotHermitian(defect));
    }
    let n = h.dim();
    let embedding = embed(h);
    let mut vecs = Vec::new();
    let vals = symmetric_eigenvalues(&embedding, 2 * n, Some(&mut vecs));
    let pairs = (0..n)
        .map(|i| {
            let col = 2 * i;
            let mut v: Vec<Complex64> = (0..n)
                .map(|k| Complex64::new(vecs[k * 2 * n + col], vecs[(k + n) * 2 * n + col]))
                .collect();
            let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for z in &mut v {
                *z /= norm;
            }
            (vals[col], v)
        })
        .collect();
    Ok(pairs)
}

fn embed(h: &CMatrix) -> Vec<f64> {
    let n = h.dim();
    let m = 2 * n;
    let mut b = vec![0.0; m * m];
    for i in 0..n {
        for j in 0..n {
            // average against the adjoint so the embedding is exactly
            // symmetric even when the input only meets the tolerance gate
            let z = (h.get(i, j) + h.get(j, i).conj()) * 0.5;
            b[i * m + j] = z.re;
            b[(i + n) * m + (j + n)] = z.re;
            b[i * m + (j + n)] = -z.im;
            b[(i + n) * m + j] = z.im;
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    #[test]
    fn diagonal_matrix() {
        let a = vec![3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0];
        let vals = symmetric_eigenvalues(&a, 3, None);
        assert_eq!(vals, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn two_by_two_swap() {
        let a = vec![0.0, 1.0, 1.0, 0.0];
        let vals = symmetric_eigenvalues(&a, 2, None);
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn hermitian_two_by_two() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3
        let mut h = CMatrix::zeros(2);
        h.set(0, 0, Complex64::new(2.0, 0.0));
        h.set(0, 1, Complex64::new(0.0, 1.0));
        h.set(1, 0, Complex64::new(0.0, -1.0));
        h.set(1, 1, Complex64::new(2.0, 0.0));
        let vals = hermitian_eigenvalues(&h).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn identity_spectrum() {
        let id = CMatrix::identity(3);
        let vals = hermitian_eigenvalues(&id).unwrap();
        for v in vals {
            assert!((v - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = CMatrix::zeros(2);
        m.set(0, 1, Complex64::new(1.0, 0.0));
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(EigenError::NotHermitian(_))
        ));
    }

    fn random_hermitian(n: usize, rng: &mut SplitMix64) -> CMatrix {
        let mut h = CMatrix::zeros(n);
        let unit = |r: u64| (r % 2000) as f64 / 1000.0 - 1.0;
        for i in 0..n {
            h.set(i, i, Complex64::new(unit(rng.next()), 0.0));
            for j in i + 1..n {
                let z = Complex64::new(unit(rng.next()), unit(rng.next()));
                h.set(i, j, z);
                h.set(j, i, z.conj());
            }
        }
        h
    }

    #[test]
    fn residuals_and_trace_random() {
        let mut rng = SplitMix64::new(11);
        for n in [2usize, 3, 5, 7] {
            for _ in 0..20 {
                let h = random_hermitian(n, &mut rng);
                let pairs = hermitian_eigenpairs(&h).unwrap();
                let tr: f64 = pairs.iter().map(|(l, _)| l).sum();
                assert!((tr - h.trace().re).abs() < 1e-10);
                for (lambda, v) in &pairs {
                    let hv = h.apply(v);
                    let resid: f64 = hv
                        .iter()
                        .zip(v)
                        .map(|(a, b)| (a - lambda * b).norm_sqr())
                        .sum::<f64>()
                        .sqrt();
                    assert!(resid < 1e-8, "n={n} λ={lambda} residual {resid:e}");
                }
            }
        }
    }

    #[test]
    fn moment_identities_random() {
        // Σλ^k = Tr(A^k) for k = 1, 2, 3 pins both the values and the
        // de-doubling of the embedded spectrum
        let mut rng = SplitMix64::new(29);
        for n in [3usize, 5, 7] {
            for _ in 0..10 {
                let h = random_hermitian(n, &mut rng);
                let vals = hermitian_eigenvalues(&h).unwrap();
                let h2 = h.mul(&h);
                let h3 = h2.mul(&h);
                let m1: f64 = vals.iter().sum();
                let m2: f64 = vals.iter().map(|x| x * x).sum();
                let m3: f64 = vals.iter().map(|x| x * x * x).sum();
                assert!((m1 - h.trace().re).abs() < 1e-10);
                assert!((m2 - h2.trace().re).abs() < 1e-9);
                assert!((m3 - h3.trace().re).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn degenerate_spectrum() {
        // projector onto a 2-dim subspace of C³ has spectrum (0, 1, 1)
        let mut h = CMatrix::identity(3);
        h.set(2, 2, Complex64::new(0.0, 0.0));
        let vals = hermitian_eigenvalues(&h).unwrap();
        assert!((vals[0]).abs() < 1e-13);
        assert!((vals[1] - 1.0).abs() < 1e-13);
        assert!((vals[2] - 1.0).abs() < 1e-13);
    }
}
