//! Frames with a prescribed frame operator and prescribed vector norms.
//!
//! Given a positive definite `S0` with eigenvalues `λ_1 ≥ … ≥ λ_N > 0` and
//! norms `a_1 ≥ … ≥ a_k > 0`, a family `{x_n}` with `X·X† = S0` and
//! `‖x_n‖_J = a_n` exists exactly when `(a_n²)` is majorized by `λ` padded
//! with zeros. The construction builds a real symmetric matrix with spectrum
//! `(λ, 0, …, 0)` and diagonal `(a_n²)` by a chain of plane rotations and
//! reads the frame off its factorisation.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::frames::{frame_operator, hilbert_frame_operator, VectorFamily};
use crate::linalg::{self, c64, ComplexMatrix};
use crate::space::PontryaginSpace;

/// Partial-sum slack, relative to the trace.
pub const PARTIAL_SUM_TOL: f64 = 1e-12;
/// Trace balance tolerance, relative to the trace.
pub const TRACE_TOL: f64 = 1e-10;
/// `λ_min > POSITIVITY_TOL·λ_max` is required of the target operator.
pub const POSITIVITY_TOL: f64 = 1e-12;

/// Eigenvalues sorted descending, all positive.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumSpec(Vec<f64>);

impl SpectrumSpec {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        check_sorted_positive(&values, "spectrum")?;
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

/// Vector norms `a_n` (not squared), sorted descending, all positive.
#[derive(Debug, Clone, PartialEq)]
pub struct NormSpec(Vec<f64>);

impl NormSpec {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        check_sorted_positive(&values, "norms")?;
        Ok(Self(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn squares(&self) -> Vec<f64> {
        self.0.iter().map(|a| a * a).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_sorted_positive(values: &[f64], what: &str) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidSpec(format!("{what} must not be empty")));
    }
    if values.iter().any(|v| !v.is_finite() || *v <= 0.0) {
        return Err(Error::InvalidSpec(format!(
            "{what} must be finite and positive"
        )));
    }
    if values.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidSpec(format!(
            "{what} must be sorted in descending order"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationReport {
    /// `Σ_{n≤j} a_n² ≤ Σ_{n≤j} λ_n` for `j = 1..N`.
    pub partial_ok: Vec<bool>,
    /// `Σ a_n²`.
    pub trace_lhs: f64,
    /// `Σ λ_n`.
    pub trace_rhs: f64,
    /// Totals agree within [`TRACE_TOL`].
    pub trace_balanced: bool,
    /// The weaker total condition `Σ a_n² ≤ Σ λ_n`.
    pub trace_within_bound: bool,
    pub feasible: bool,
}

pub fn check_majorization(spectrum: &SpectrumSpec, norms: &NormSpec) -> MajorizationReport {
    let lambda = spectrum.values();
    let squares = norms.squares();
    let trace_rhs: f64 = lambda.iter().sum();
    let trace_lhs: f64 = squares.iter().sum();
    let scale = trace_rhs.max(trace_lhs);

    let mut partial_ok = Vec::with_capacity(lambda.len());
    let (mut lhs, mut rhs) = (0.0, 0.0);
    for (j, l) in lambda.iter().enumerate() {
        rhs += l;
        lhs += squares.get(j).copied().unwrap_or(0.0);
        partial_ok.push(lhs <= rhs + PARTIAL_SUM_TOL * scale);
    }
    let trace_balanced = (trace_lhs - trace_rhs).abs() <= TRACE_TOL * scale;
    let trace_within_bound = trace_lhs <= trace_rhs + TRACE_TOL * scale;
    let feasible = trace_balanced && partial_ok.iter().all(|&ok| ok);
    MajorizationReport {
        partial_ok,
        trace_lhs,
        trace_rhs,
        trace_balanced,
        trace_within_bound,
        feasible,
    }
}

/// `d` (any order) majorized by `mu` (descending), with equal totals.
fn is_majorized(mu: &[f64], d: &[f64]) -> bool {
    if mu.len() != d.len() {
        return false;
    }
    let mut sorted = d.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let total: f64 = mu.iter().map(|x| x.abs()).sum();
    let scale = total.max(f64::MIN_POSITIVE);
    let (mut sm, mut sd) = (0.0, 0.0);
    for (m, x) in mu.iter().zip(&sorted) {
        sm += m;
        sd += x;
        if sd > sm + PARTIAL_SUM_TOL * scale {
            return false;
        }
    }
    (sm - sd).abs() <= TRACE_TOL * scale
}

/// Real symmetric `G = Qᵀ·diag(μ)·Q` with prescribed diagonal, together with
/// the orthogonal factor `Q`.
#[derive(Debug, Clone)]
pub struct SchurHorn {
    pub matrix: DMatrix<f64>,
    pub rotation: DMatrix<f64>,
}

/// Builds `G` with spectrum `mu` (sorted descending) and diagonal `d`.
///
/// Starting from `diag(μ)`, each step picks the largest index `j` whose
/// current diagonal exceeds its target and the first later index `i` whose
/// diagonal falls short of its target (targets sorted descending), and moves
/// `min(surplus_j, deficit_i)` between them with a plane rotation. Each step
/// pins at least one entry, unpinned entries stay mutually decoupled, and
/// the current diagonal keeps majorizing the targets, so at most `k − 1`
/// rotations are needed.
pub fn schur_horn(mu: &[f64], d: &[f64]) -> Result<SchurHorn> {
    let k = mu.len();
    if d.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: d.len(),
        });
    }
    if mu.iter().chain(d).any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidSpec(
            "spectrum must be sorted in descending order".into(),
        ));
    }
    if !is_majorized(mu, d) {
        return Err(Error::NotMajorized);
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| d[b].total_cmp(&d[a]));
    let target: Vec<f64> = order.iter().map(|&i| d[i]).collect();

    let scale = mu
        .iter()
        .map(|x| x.abs())
        .sum::<f64>()
        .max(f64::MIN_POSITIVE);
    let eps = 1e-14 * scale;
    let mut g = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(mu));
    let mut q = DMatrix::<f64>::identity(k, k);
    let mut diag = mu.to_vec();

    for _ in 0..k {
        let Some(j) = (0..k).rev().find(|&j| diag[j] - target[j] > eps) else {
            break;
        };
        let Some(i) = (j + 1..k).find(|&i| target[i] - diag[i] > eps) else {
            break;
        };
        let surplus = diag[j] - target[j];
        let deficit = target[i] - diag[i];
        let delta = surplus.min(deficit);
        let (hi, lo) = (diag[j], diag[i]);
        let sin2 = (delta / (hi - lo)).clamp(0.0, 1.0);
        let (s, c) = (sin2.sqrt(), (1.0 - sin2).sqrt());
        plane_rotation(&mut g, &mut q, j, i, c, s);
        diag[j] = hi - delta;
        diag[i] = lo + delta;
        if surplus <= deficit {
            diag[j] = target[j];
        }
        if deficit <= surplus {
            diag[i] = target[i];
        }
    }
    // remaining gaps are rounding-level; pin them exactly
    for (idx, t) in target.iter().enumerate() {
        g[(idx, idx)] = *t;
    }

    // undo the sorting of the targets
    let matrix = DMatrix::from_fn(k, k, |a, b| {
        let (ia, ib) = (position(&order, a), position(&order, b));
        g[(ia, ib)]
    });
    let rotation = DMatrix::from_fn(k, k, |r, col| q[(r, position(&order, col))]);
    Ok(SchurHorn { matrix, rotation })
}

fn position(order: &[usize], original: usize) -> usize {
    order
        .iter()
        .position(|&o| o == original)
        .expect("permutation")
}

/// `G ← Rᵀ·G·R`, `Q ← Q·R` for the rotation `R` acting on indices `(j, i)`
/// with `R_jj = R_ii = c`, `R_ji = s`, `R_ij = −s`.
fn plane_rotation(g: &mut DMatrix<f64>, q: &mut DMatrix<f64>, j: usize, i: usize, c: f64, s: f64) {
    let n = g.nrows();
    for r in 0..n {
        let (gj, gi) = (g[(r, j)], g[(r, i)]);
        g[(r, j)] = c * gj - s * gi;
        g[(r, i)] = s * gj + c * gi;
    }
    for col in 0..n {
        let (gj, gi) = (g[(j, col)], g[(i, col)]);
        g[(j, col)] = c * gj - s * gi;
        g[(i, col)] = s * gj + c * gi;
    }
    for r in 0..q.nrows() {
        let (qj, qi) = (q[(r, j)], q[(r, i)]);
        q[(r, j)] = c * qj - s * qi;
        q[(r, i)] = s * qj + c * qi;
    }
}

/// Hermitian (real symmetric) matrix with spectrum `mu` and diagonal `d`.
pub fn schur_horn_hermitian(mu: &[f64], d: &[f64]) -> Result<ComplexMatrix> {
    let sh = schur_horn(mu, d)?;
    Ok(sh.matrix.map(|x| c64(x, 0.0)))
}

/// Which of the four equivalent prescriptions to realise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `{x_n}` with Hilbert frame operator `S0`.
    HilbertFrame,
    /// `{x_n}` with (Pontryagin) frame operator `S0·J`.
    PontryaginFrame,
    /// `{J x_n}` with frame operator `J·S0`.
    JFamilyPontryagin,
    /// `{J x_n}` with Hilbert frame operator `J·S0·J`.
    JFamilyHilbert,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [
        Flavor::HilbertFrame,
        Flavor::PontryaginFrame,
        Flavor::JFamilyPontryagin,
        Flavor::JFamilyHilbert,
    ];

    pub fn uses_j_family(self) -> bool {
        matches!(self, Flavor::JFamilyPontryagin | Flavor::JFamilyHilbert)
    }

    /// The operator the constructed family is expected to have.
    pub fn target_operator(self, space: &PontryaginSpace, s0: &ComplexMatrix) -> ComplexMatrix {
        match self {
            Flavor::HilbertFrame => s0.clone(),
            Flavor::PontryaginFrame => space.j_right(s0),
            Flavor::JFamilyPontryagin => space.j_left(s0),
            Flavor::JFamilyHilbert => space.j_left(&space.j_right(s0)),
        }
    }

    /// The operator of `family` that this flavor prescribes.
    pub fn operator_of(self, family: &VectorFamily) -> ComplexMatrix {
        match self {
            Flavor::HilbertFrame | Flavor::JFamilyHilbert => hilbert_frame_operator(family),
            Flavor::PontryaginFrame | Flavor::JFamilyPontryagin => frame_operator(family),
        }
    }
}

/// Builds a family with `‖x_n‖_J = a_n` realising `s0` as prescribed by
/// `flavor`. `s0` must be Hermitian positive definite in the Hilbert sense.
pub fn construct_frame(
    space: &PontryaginSpace,
    s0: &ComplexMatrix,
    norms: &NormSpec,
    flavor: Flavor,
) -> Result<VectorFamily> {
    let n = space.dim();
    if s0.nrows() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s0.nrows(),
        });
    }
    let eig = linalg::hermitian_eig(s0)?;
    let lambda = &eig.values;
    let max = lambda.first().copied().unwrap_or(0.0);
    let min = lambda.last().copied().unwrap_or(0.0);
    if n == 0 || min <= 0.0 || min <= POSITIVITY_TOL * max {
        return Err(Error::NotPositiveDefinite {
            min_eigenvalue: min,
        });
    }
    let k = norms.len();
    if k < n {
        return Err(Error::InvalidSpec(format!(
            "need at least {n} norms, got {k}"
        )));
    }
    let spectrum = SpectrumSpec::new(lambda.clone())?;
    if !check_majorization(&spectrum, norms).feasible {
        return Err(Error::NotMajorized);
    }

    let mut mu = lambda.clone();
    mu.resize(k, 0.0);
    let sh = schur_horn(&mu, &norms.squares())?;

    // X = U·diag(√λ)·Q[..N, :] so that X·X† = S0 and X†·X = G
    let top = sh.rotation.rows(0, n).map(|x| c64(x, 0.0));
    let sqrt_lambda: Vec<f64> = lambda.iter().map(|l| l.sqrt()).collect();
    let x = &eig.vectors * linalg::diag_real(&sqrt_lambda) * top;
    let x = if flavor.uses_j_family() {
        space.j_left(&x)
    } else {
        x
    };
    VectorFamily::new(space.clone(), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::validate;
    use crate::linalg::{diag_real, fro, hermitian_eig};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn report(lambda: &[f64], a2: &[f64]) -> MajorizationReport {
        let norms = NormSpec::new(a2.iter().map(|x| x.sqrt()).collect()).unwrap();
        check_majorization(&SpectrumSpec::new(lambda.to_vec()).unwrap(), &norms)
    }

    #[test]
    fn spec_validation() {
        assert!(SpectrumSpec::new(vec![1.0, 2.0]).is_err());
        assert!(SpectrumSpec::new(vec![1.0, 0.0]).is_err());
        assert!(SpectrumSpec::new(vec![]).is_err());
        assert!(NormSpec::new(vec![2.0, 1.0, 1.0]).is_ok());
        assert!(NormSpec::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn majorization_examples() {
        let r = report(&[2.0, 1.0], &[1.0, 1.0, 1.0]);
        assert_eq!(r.partial_ok, vec![true, true]);
        assert_eq!((r.trace_lhs, r.trace_rhs), (3.0, 3.0));
        assert!(r.trace_balanced && r.feasible);

        let r = report(&[1.0, 1.0], &[3.0]);
        assert!(!r.partial_ok[0]);
        assert!(!r.feasible);

        assert!(report(&[1.0], &[0.5, 0.5]).feasible);
    }

    #[test]
    fn strict_total_is_reported_separately() {
        let r = report(&[2.0, 1.0], &[1.0, 1.0]);
        assert!(r.partial_ok.iter().all(|&ok| ok));
        assert!(r.trace_within_bound);
        assert!(!r.trace_balanced);
        assert!(!r.feasible);
    }

    #[test]
    fn schur_horn_examples() {
        let g = schur_horn_hermitian(&[3.0, 1.0], &[3.0, 1.0]).unwrap();
        assert!(fro(&(g - diag_real(&[3.0, 1.0]))) < 1e-15);

        let g = schur_horn_hermitian(&[2.0, 0.0], &[1.0, 1.0]).unwrap();
        // [[1, ±1], [±1, 1]]; eigenvalues from the eigensolver
        assert!((g[(0, 0)].re - 1.0).abs() < 1e-12 && (g[(1, 1)].re - 1.0).abs() < 1e-12);
        assert!((g[(0, 1)].re.abs() - 1.0).abs() < 1e-12);
        let e = hermitian_eig(&g).unwrap();
        assert!((e.values[0] - 2.0).abs() < 1e-9 && e.values[1].abs() < 1e-9);

        let g = schur_horn_hermitian(&[2.0, 1.0, 0.0], &[1.0, 1.0, 1.0]).unwrap();
        let e = hermitian_eig(&g).unwrap();
        for (got, want) in e.values.iter().zip([2.0, 1.0, 0.0]) {
            assert!((got - want).abs() < 1e-9);
        }
        for i in 0..3 {
            assert!((g[(i, i)].re - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn schur_horn_rejects_unmajorized() {
        assert_eq!(
            schur_horn_hermitian(&[1.0, 1.0], &[1.5, 0.4]).unwrap_err(),
            Error::NotMajorized
        );
        assert_eq!(
            schur_horn_hermitian(&[1.0, 1.0], &[2.5, -0.5]).unwrap_err(),
            Error::NotMajorized
        );
        assert!(matches!(
            schur_horn_hermitian(&[1.0], &[0.5, 0.5]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn schur_horn_unsorted_targets() {
        let d = [0.5, 2.0, 1.5, 1.0];
        let mu = [3.0, 2.0, 0.0, 0.0];
        let sh = schur_horn(&mu, &d).unwrap();
        for (i, t) in d.iter().enumerate() {
            assert!((sh.matrix[(i, i)] - t).abs() < 1e-12);
        }
        let back = sh.rotation.transpose()
            * DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(&mu))
            * &sh.rotation;
        assert!((back - &sh.matrix).norm() < 1e-12);
    }

    /// Random positive spectrum and a norm profile majorized by it, built by
    /// Robin-Hood transfers from the zero-padded spectrum.
    pub(crate) fn random_feasible(
        rng: &mut ChaCha8Rng,
        n: usize,
        k: usize,
    ) -> (Vec<f64>, Vec<f64>) {
        loop {
            let mut lambda: Vec<f64> = (0..n).map(|_| rng.random_range(0.2..3.0)).collect();
            lambda.sort_by(|a, b| b.total_cmp(a));
            let mut c = lambda.clone();
            c.resize(k, 0.0);
            for _ in 0..4 * k {
                let i = rng.random_range(0..k);
                let j = rng.random_range(0..k);
                let (hi, lo) = if c[i] >= c[j] { (i, j) } else { (j, i) };
                let t = rng.random_range(0.0..0.5) * (c[hi] - c[lo]);
                c[hi] -= t;
                c[lo] += t;
            }
            c.sort_by(|a, b| b.total_cmp(a));
            if c.iter().all(|&x| x > 1e-3) {
                let total_l: f64 = lambda.iter().sum();
                let total_c: f64 = c.iter().sum();
                // restore the exact total lost to rounding
                let fix = total_l - total_c;
                c[0] += fix;
                return (lambda, c.iter().map(|x| x.sqrt()).collect());
            }
        }
    }

    fn random_unitary(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        let a = ComplexMatrix::from_fn(n, n, |_, _| {
            c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        hermitian_eig(&(&a + a.adjoint())).unwrap().vectors
    }

    #[test]
    fn schur_horn_random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..50 {
            let n = rng.random_range(1..6);
            let k = rng.random_range(n..12);
            let (lambda, a) = random_feasible(&mut rng, n, k);
            let mut mu = lambda.clone();
            mu.resize(k, 0.0);
            let d: Vec<f64> = a.iter().map(|x| x * x).collect();
            let g = schur_horn_hermitian(&mu, &d).unwrap();
            for i in 0..k {
                assert!((g[(i, i)].re - d[i]).abs() < 1e-12);
            }
            let e = hermitian_eig(&g).unwrap();
            for (got, want) in e.values.iter().zip(&mu) {
                assert!((got - want).abs() < 1e-9);
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn schur_horn_diagonal_and_spectrum(
            lambda in proptest::collection::vec(0.1f64..5.0, 1..6),
            extra in 0usize..5,
            moves in proptest::collection::vec((0usize..16, 0usize..16, 0.0f64..0.5), 0..30),
        ) {
            let mut mu = lambda.clone();
            mu.sort_by(|a, b| b.total_cmp(a));
            let k = mu.len() + extra;
            mu.resize(k, 0.0);
            let mut d = mu.clone();
            for (i, j, t) in moves {
                let (i, j) = (i % k, j % k);
                let (hi, lo) = if d[i] >= d[j] { (i, j) } else { (j, i) };
                let step = t * (d[hi] - d[lo]);
                d[hi] -= step;
                d[lo] += step;
            }
            let sh = schur_horn(&mu, &d).unwrap();
            for (i, t) in d.iter().enumerate() {
                proptest::prop_assert!((sh.matrix[(i, i)] - t).abs() < 1e-12);
            }
            let diag_mu = DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(&mu));
            let back = sh.rotation.transpose() * diag_mu * &sh.rotation;
            proptest::prop_assert!((back - &sh.matrix).norm() < 1e-11);
            let orth = sh.rotation.transpose() * &sh.rotation - DMatrix::<f64>::identity(k, k);
            proptest::prop_assert!(orth.norm() < 1e-12);
        }
    }

    #[test]
    fn construct_identity_gives_orthonormal_basis() {
        let space = PontryaginSpace::hilbert(3);
        let f = construct_frame(
            &space,
            &ComplexMatrix::identity(3, 3),
            &NormSpec::new(vec![1.0; 3]).unwrap(),
            Flavor::HilbertFrame,
        )
        .unwrap();
        let gram = f.synthesis().adjoint() * f.synthesis();
        assert!(fro(&(gram - ComplexMatrix::identity(3, 3))) < 1e-12);
        assert!(fro(&(crate::frames::frame_operator(&f) - ComplexMatrix::identity(3, 3))) < 1e-12);
    }

    #[test]
    fn construct_diag_example() {
        let space = PontryaginSpace::standard(2).unwrap();
        let s0 = diag_real(&[2.0, 1.0]);
        let norms = NormSpec::new(vec![1.0; 3]).unwrap();
        let f = construct_frame(&space, &s0, &norms, Flavor::HilbertFrame).unwrap();
        assert_eq!(f.k(), 3);
        assert!(fro(&(hilbert_frame_operator(&f) - &s0)) < 1e-12);
        for x in f.vectors() {
            assert!((space.j_norm(&x).unwrap() - 1.0).abs() < 1e-12);
        }
        let p = construct_frame(&space, &s0, &norms, Flavor::PontryaginFrame).unwrap();
        // Σ [x, x_n] x_n evaluated termwise on the coordinate vectors
        let mut summed = ComplexMatrix::zeros(2, 2);
        for col in 0..2 {
            let e = ComplexMatrix::identity(2, 2).column(col).into_owned();
            let mut acc = crate::linalg::ComplexVector::zeros(2);
            for xn in p.vectors() {
                acc += &xn * space.inner(&e, &xn).unwrap();
            }
            summed.set_column(col, &acc);
        }
        assert!(fro(&(summed - diag_real(&[2.0, -1.0]))) < 1e-12);
    }

    #[test]
    fn construct_errors() {
        let space = PontryaginSpace::standard(2).unwrap();
        let ones = NormSpec::new(vec![1.0; 3]).unwrap();
        assert_eq!(
            construct_frame(
                &space,
                &diag_real(&[2.0, 1.0]),
                &NormSpec::new(vec![2.0, 0.5, 0.5]).unwrap(),
                Flavor::HilbertFrame
            )
            .unwrap_err(),
            Error::NotMajorized
        );
        assert!(matches!(
            construct_frame(
                &space,
                &diag_real(&[2.0, -1.0]),
                &ones,
                Flavor::HilbertFrame
            ),
            Err(Error::NotPositiveDefinite { .. })
        ));
        assert!(matches!(
            construct_frame(
                &space,
                &crate::linalg::real_matrix(2, 2, &[1.0, 1.0, 0.0, 1.0]),
                &ones,
                Flavor::HilbertFrame
            ),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(
            construct_frame(
                &space,
                &diag_real(&[1.0, 1.0]),
                &NormSpec::new(vec![1.2]).unwrap(),
                Flavor::HilbertFrame
            ),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn construct_random_all_flavors() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.random_range(1..6);
            let k = rng.random_range(n..10);
            let (lambda, a) = random_feasible(&mut rng, n, k);
            let signature = (0..n)
                .map(|_| if rng.random_bool(0.5) { 1 } else { -1 })
                .collect();
            let space = PontryaginSpace::new(signature).unwrap();
            let u = random_unitary(&mut rng, n);
            let s0 = &u * diag_real(&lambda) * u.adjoint();
            let norms = NormSpec::new(a.clone()).unwrap();
            let mut families = Vec::new();
            for flavor in Flavor::ALL {
                let f = construct_frame(&space, &s0, &norms, flavor).unwrap();
                let target = flavor.target_operator(&space, &s0);
                assert!(fro(&(flavor.operator_of(&f) - &target)) <= 1e-9 * fro(&s0));
                for (x, want) in f.vectors().iter().zip(&a) {
                    assert!((x.norm() - want).abs() < 1e-10);
                }
                assert!(validate(&f).unwrap().is_frame());
                families.push(f);
            }
            // necessity: the output's own spectrum and norms pass the gate
            let spec = SpectrumSpec::new(
                hermitian_eig(&hilbert_frame_operator(&families[0]))
                    .unwrap()
                    .values,
            )
            .unwrap();
            assert!(check_majorization(&spec, &norms).feasible);
            // flavor consistency
            let j = space.j_matrix();
            let s_h = hilbert_frame_operator(&families[0]);
            assert!(fro(&(frame_operator(&families[1]) - &s_h * &j)) < 1e-9 * fro(&s0));
            assert!(fro(&(frame_operator(&families[2]) - &j * &s_h)) < 1e-9 * fro(&s0));
            assert!(
                fro(&(hilbert_frame_operator(&families[3]) - &j * &s_h * &j)) < 1e-9 * fro(&s0)
            );
        }
    }
}
