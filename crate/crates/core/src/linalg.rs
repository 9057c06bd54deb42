//! Dense complex linear algebra kernel.
//!
//! Everything here works on small dense matrices (dimensions up to a few
//! dozen). The only decomposition is a cyclic Jacobi eigensolver for
//! Hermitian matrices; singular values, ranks, pseudo-inverses and range
//! bases are all derived from it.

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type ComplexMatrix = DMatrix<C64>;
pub type ComplexVector = DVector<C64>;

/// Relative tolerance on `‖M − M†‖ / ‖M‖` accepted as Hermitian.
pub const TOL_HERM: f64 = 1e-10;
/// Relative accuracy target of the eigensolver.
pub const TOL_EIG: f64 = 1e-11;
/// Default rank cut-off, relative to the largest singular value.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

const JACOBI_STOP: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

pub fn c64(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// Builds a complex matrix from real row-major data.
pub fn real_matrix(rows: usize, cols: usize, data: &[f64]) -> ComplexMatrix {
    assert_eq!(data.len(), rows * cols);
    ComplexMatrix::from_fn(rows, cols, |i, j| c64(data[i * cols + j], 0.0))
}

pub fn real_vector(data: &[f64]) -> ComplexVector {
    ComplexVector::from_iterator(data.len(), data.iter().map(|&x| c64(x, 0.0)))
}

pub fn diag_real(values: &[f64]) -> ComplexMatrix {
    let n = values.len();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            c64(values[i], 0.0)
        } else {
            C64::default()
        }
    })
}

pub fn ensure_finite(m: &ComplexMatrix) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

pub fn ensure_finite_vector(v: &ComplexVector) -> Result<()> {
    if v.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite)
    }
}

/// Frobenius norm.
pub fn fro(m: &ComplexMatrix) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Relative Hermitian defect `‖M − M†‖_F / ‖M‖_F` (0 for the zero matrix).
pub fn hermitian_defect(m: &ComplexMatrix) -> f64 {
    let scale = fro(m);
    if scale == 0.0 {
        return 0.0;
    }
    fro(&(m - m.adjoint())) / scale
}

fn ensure_square(m: &ComplexMatrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

/// Checks finiteness, squareness and Hermitian symmetry within [`TOL_HERM`].
pub fn ensure_hermitian(m: &ComplexMatrix) -> Result<()> {
    ensure_finite(m)?;
    ensure_square(m)?;
    let defect = hermitian_defect(m);
    if defect > TOL_HERM {
        return Err(Error::NotHermitian { defect });
    }
    Ok(())
}

/// Eigendecomposition `M = V·diag(values)·V†` of a Hermitian matrix,
/// eigenvalues sorted descending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> ComplexMatrix {
        &self.vectors * diag_real(&self.values) * self.vectors.adjoint()
    }
}

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation first removes the phase of the pivot `a_pq` with a diagonal
/// unitary and then applies a real plane rotation, so the accumulated
/// transform stays unitary. Sweeps stop once the off-diagonal Frobenius mass
/// drops below `1e-13·‖M‖_F`.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianEigen> {
    ensure_hermitian(m)?;
    let n = m.nrows();
    let mut a = (m + m.adjoint()).scale(0.5);
    let mut v = ComplexMatrix::identity(n, n);
    let scale = fro(&a);
    let stop = JACOBI_STOP * scale;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= f64::MIN_POSITIVE || mag <= 1e-3 * stop / (n as f64) {
                    continue;
                }
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // V = diag(1, conj(phase)) · [[c, s], [-s, c]]
                let vpp = c64(c, 0.0);
                let vpq = c64(s, 0.0);
                let vqp = phase.conj() * (-s);
                let vqq = phase.conj() * c;
                rotate(&mut a, &mut v, p, q, [vpp, vpq, vqp, vqq]);
                a[(p, q)] = C64::default();
                a[(q, p)] = C64::default();
            }
        }
    }

    let mut pairs: Vec<(f64, usize)> = (0..n).map(|i| (a[(i, i)].re, i)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let values = pairs.iter().map(|&(l, _)| l).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, pairs[j].1)]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.nrows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// `A ← R†·A·R`, `V ← V·R` for the 2×2 unitary `R` acting on indices `p, q`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, r: [C64; 4]) {
    let [rpp, rpq, rqp, rqq] = r;
    let n = a.nrows();
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * rpp + aiq * rqp;
        a[(i, q)] = aip * rpq + aiq * rqq;
    }
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = rpp.conj() * apj + rqp.conj() * aqj;
        a[(q, j)] = rpq.conj() * apj + rqq.conj() * aqj;
    }
    for i in 0..v.nrows() {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * rpp + viq * rqp;
        v[(i, q)] = vip * rpq + viq * rqq;
    }
}

/// Thin singular value decomposition restricted to the numerically nonzero
/// part: `M ≈ U·diag(σ)·V†` with `σ_i > tol·σ_max`.
#[derive(Debug, Clone)]
pub struct CompactSvd {
    pub u: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
    /// Largest singular value (0 for an empty or zero matrix).
    pub sigma_max: f64,
}

/// All `min(rows, cols)` singular values, descending.
///
/// Computed from the eigenvalues of the Hermitian dilation
/// `[[0, M], [M†, 0]]`, whose spectrum is `±σ_i` padded with zeros. Working on
/// the dilation rather than `M†M` keeps small singular values accurate to
/// `ε·σ_max` instead of `√ε·σ_max`.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    ensure_finite(m)?;
    let r = m.nrows().min(m.ncols());
    let eig = hermitian_eig(&jordan_wielandt(m))?;
    Ok(eig.values.iter().take(r).map(|&s| s.max(0.0)).collect())
}

fn jordan_wielandt(m: &ComplexMatrix) -> ComplexMatrix {
    let (rows, cols) = m.shape();
    let mut h = ComplexMatrix::zeros(rows + cols, rows + cols);
    h.view_mut((0, rows), (rows, cols)).copy_from(m);
    h.view_mut((rows, 0), (cols, rows)).copy_from(&m.adjoint());
    h
}

pub fn compact_svd(m: &ComplexMatrix, tol: f64) -> Result<CompactSvd> {
    ensure_finite(m)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidSpec(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (rows, cols) = m.shape();
    let eig = hermitian_eig(&jordan_wielandt(m))?;
    let sigma_max = eig.values.first().copied().unwrap_or(0.0).max(0.0);
    let cut = tol * sigma_max;
    let keep: Vec<usize> = (0..rows.min(cols))
        .filter(|&i| eig.values[i] > cut && eig.values[i] > 0.0)
        .collect();
    let sqrt2 = std::f64::consts::SQRT_2;
    let u = ComplexMatrix::from_fn(rows, keep.len(), |i, j| eig.vectors[(i, keep[j])] * sqrt2);
    let v = ComplexMatrix::from_fn(cols, keep.len(), |i, j| {
        eig.vectors[(rows + i, keep[j])] * sqrt2
    });
    let singular_values = keep.iter().map(|&i| eig.values[i]).collect();
    Ok(CompactSvd {
        u: orthonormalize(u),
        singular_values,
        v: orthonormalize(v),
        sigma_max,
    })
}

/// Two passes of modified Gram–Schmidt over the columns (assumed already
/// nearly orthonormal and independent).
fn orthonormalize(mut q: ComplexMatrix) -> ComplexMatrix {
    for _ in 0..2 {
        for j in 0..q.ncols() {
            for i in 0..j {
                let proj = q.column(i).dotc(&q.column(j));
                let ci = q.column(i).clone_owned();
                q.column_mut(j).axpy(-proj, &ci, C64::new(1.0, 0.0));
            }
            let norm = q.column(j).norm();
            if norm > 0.0 {
                q.column_mut(j).unscale_mut(norm);
            }
        }
    }
    q
}

/// Number of singular values exceeding `tol·σ_max`.
pub fn rank(m: &ComplexMatrix, tol: f64) -> Result<usize> {
    Ok(compact_svd(m, tol)?.singular_values.len())
}

/// Moore–Penrose pseudo-inverse, discarding singular values below `tol·σ_max`.
pub fn pseudo_inverse(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    let svd = compact_svd(m, tol)?;
    let inv: Vec<f64> = svd.singular_values.iter().map(|s| 1.0 / s).collect();
    Ok(&svd.v * diag_real(&inv) * svd.u.adjoint())
}

/// Orthonormal basis (columns) of the column space of `m`.
pub fn column_space_basis(m: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix> {
    Ok(compact_svd(m, tol)?.u)
}

/// Orthonormal basis of the Hilbert orthogonal complement of `span(basis)`
/// in `C^n`, where `basis` has orthonormal columns.
///
/// Read off from the eigenvectors of `I − B·B†` with eigenvalue near 1, so
/// the split does not depend on a relative cut-off.
pub fn orthogonal_complement_basis(basis: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = basis.nrows();
    let projector = ComplexMatrix::identity(n, n) - basis * basis.adjoint();
    let eig = hermitian_eig(&projector)?;
    let keep = eig.values.iter().take_while(|&&l| l > 0.5).count();
    Ok(orthonormalize(eig.vectors.columns(0, keep).into_owned()))
}

/// Hilbert-orthogonal projector onto `span(basis)` for orthonormal columns.
pub fn orthogonal_projector(basis: &ComplexMatrix) -> ComplexMatrix {
    basis * basis.adjoint()
}

/// Block-diagonal concatenation `a ⊕ b`.
pub fn direct_sum(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = ComplexMatrix::zeros(ar + br, ac + bc);
    out.view_mut((0, 0), (ar, ac)).copy_from(a);
    out.view_mut((ar, ac), (br, bc)).copy_from(b);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |_, _| {
            c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        let a = random_matrix(rng, n, n);
        (&a + a.adjoint()).scale(0.5)
    }

    #[test]
    fn eig_of_diagonal() {
        let e = hermitian_eig(&diag_real(&[3.0, 1.0])).unwrap();
        assert_eq!(e.values, vec![3.0, 1.0]);
        assert!(fro(&(e.vectors - ComplexMatrix::identity(2, 2))) < 1e-15);
    }

    #[test]
    fn eig_of_swap() {
        let e = hermitian_eig(&real_matrix(2, 2, &[0.0, 1.0, 1.0, 0.0])).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-15);
        assert!((e.values[1] + 1.0).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        // eigenvectors are unique up to phase
        let v0 = e.vectors.column(0);
        let v1 = e.vectors.column(1);
        assert!((v0.dotc(&real_vector(&[h, h])).norm() - 1.0).abs() < 1e-14);
        assert!((v1.dotc(&real_vector(&[h, -h])).norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eig_random_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 2, 5, 9, 16] {
            let h = random_hermitian(&mut rng, n);
            let e = hermitian_eig(&h).unwrap();
            assert!(fro(&(e.reconstruct() - &h)) <= 1e-12 * fro(&h).max(1.0));
            let gram = e.vectors.adjoint() * &e.vectors;
            assert!(fro(&(gram - ComplexMatrix::identity(n, n))) < TOL_EIG);
            assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn eig_positive_definite() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 6, 6);
            let s = a.adjoint() * &a + ComplexMatrix::identity(6, 6).scale(1e-3);
            let e = hermitian_eig(&s).unwrap();
            assert!(e.values.iter().all(|&l| l > 0.0));
        }
    }

    #[test]
    fn eig_rejects_non_hermitian_and_nan() {
        let m = real_matrix(2, 2, &[1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(hermitian_eig(&m), Err(Error::NotHermitian { .. })));
        let mut bad = ComplexMatrix::identity(2, 2);
        bad[(0, 1)] = c64(f64::NAN, 0.0);
        assert_eq!(hermitian_eig(&bad).unwrap_err(), Error::NonFinite);
    }

    #[test]
    fn empty_matrices() {
        let z = ComplexMatrix::zeros(0, 0);
        assert!(hermitian_eig(&z).unwrap().values.is_empty());
        assert_eq!(rank(&z, 1e-10).unwrap(), 0);
        assert_eq!(
            pseudo_inverse(&ComplexMatrix::zeros(0, 3), 1e-10)
                .unwrap()
                .shape(),
            (3, 0)
        );
        assert_eq!(
            column_space_basis(&ComplexMatrix::zeros(3, 0), 1e-10)
                .unwrap()
                .shape(),
            (3, 0)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&ComplexMatrix::identity(3, 3), 1e-10).unwrap(), 3);
        assert_eq!(rank(&ComplexMatrix::zeros(3, 3), 1e-10).unwrap(), 0);
        let m = real_matrix(2, 3, &[1.0, 1.0, 0.0, 0.0, 0.0, 1.0]);
        assert_eq!(rank(&m, 1e-10).unwrap(), 2);
        // rank-deficient 3×3: noise-level singular values must stay below the cut
        let d = real_matrix(3, 3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0, 1.0, 0.0, 1.0]);
        assert_eq!(rank(&d, 1e-10).unwrap(), 2);
    }

    #[test]
    fn rank_invariant_under_invertible_maps() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for r in 0..=4 {
            let m = random_matrix(&mut rng, 5, r) * random_matrix(&mut rng, r, 6);
            let left = random_matrix(&mut rng, 5, 5);
            let right = random_matrix(&mut rng, 6, 6);
            assert_eq!(rank(&m, 1e-10).unwrap(), r);
            assert_eq!(rank(&(left * &m * right), 1e-10).unwrap(), r);
        }
    }

    #[test]
    fn pinv_examples() {
        let i = ComplexMatrix::identity(3, 3);
        assert!(fro(&(pseudo_inverse(&i, 1e-10).unwrap() - &i)) < 1e-14);
        let p = pseudo_inverse(&diag_real(&[2.0, 0.0]), 1e-10).unwrap();
        assert!(fro(&(p - diag_real(&[0.5, 0.0]))) < 1e-15);
    }

    #[test]
    fn pinv_matches_normal_equations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 4, 2);
        let oracle = (m.adjoint() * &m).try_inverse().unwrap() * m.adjoint();
        let p = pseudo_inverse(&m, 1e-10).unwrap();
        assert!(fro(&(p - oracle)) < 1e-10);
    }

    #[test]
    fn pinv_penrose_conditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = random_matrix(&mut rng, 5, 2) * random_matrix(&mut rng, 2, 4);
        let p = pseudo_inverse(&m, 1e-10).unwrap();
        let mp = &m * &p;
        let pm = &p * &m;
        assert!(fro(&(&mp * &m - &m)) < 1e-10);
        assert!(fro(&(&pm * &p - &p)) < 1e-10);
        assert!(fro(&(&mp - mp.adjoint())) < 1e-10);
        assert!(fro(&(&pm - pm.adjoint())) < 1e-10);
    }

    #[test]
    fn pinv_of_invertible_is_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let m = random_matrix(&mut rng, 4, 4);
        let inv = m.clone().try_inverse().unwrap();
        assert!(fro(&(pseudo_inverse(&m, 1e-10).unwrap() - &inv)) <= 1e-10 * fro(&inv));
    }

    #[test]
    fn column_space_examples() {
        let b = column_space_basis(&ComplexMatrix::identity(2, 2), 1e-10).unwrap();
        assert_eq!(b.ncols(), 2);
        assert!(fro(&(b.adjoint() * &b - ComplexMatrix::identity(2, 2))) < 1e-14);
        assert_eq!(
            column_space_basis(&ComplexMatrix::zeros(2, 2), 1e-10)
                .unwrap()
                .ncols(),
            0
        );
        let b = column_space_basis(&real_matrix(2, 2, &[1.0, 2.0, 1.0, 2.0]), 1e-10).unwrap();
        assert_eq!(b.ncols(), 1);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((b.column(0).dotc(&real_vector(&[h, h])).norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn svd_reconstructs() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let m = random_matrix(&mut rng, 3, 7);
        let svd = compact_svd(&m, 1e-10).unwrap();
        let back = &svd.u * diag_real(&svd.singular_values) * svd.v.adjoint();
        assert!(fro(&(back - &m)) < 1e-12);
    }
}
