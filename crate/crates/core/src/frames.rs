//! Finite vector families as candidate frames.
//!
//! A family `{x_1, …, x_k}` in a space `K` is stored through its synthesis
//! matrix `X` (column `n` is `x_n`). Coefficients live in `C^k` with the
//! alternating signature `J̃`, so that
//!
//! * synthesis `T α = X α`,
//! * analysis `T^[*] x = J̃·X†·J·x`, the J-adjoint of `T`,
//! * frame operator `S = T·J̃·T^[*] = X·X†·J`, i.e. `S x = Σ [x, x_n] x_n`.
//!
//! The inner product is linear in its first argument, so the `n`-th analysis
//! coefficient is `±[x, x_n]`.

use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, ComplexVector, DEFAULT_RANK_TOL};
use crate::space::{j_adjoint, PontryaginSpace};

/// `|A − B| ≤ TIGHT_TOL·B` counts as tight.
pub const TIGHT_TOL: f64 = 1e-9;

/// Largest condition number of the frame operator accepted by [`reconstruct`].
pub const MAX_CONDITION: f64 = 1e12;

#[derive(Debug, Clone, PartialEq)]
pub struct VectorFamily {
    space: PontryaginSpace,
    synthesis: ComplexMatrix,
}

impl VectorFamily {
    /// Family whose `n`-th vector is column `n` of `synthesis`.
    pub fn new(space: PontryaginSpace, synthesis: ComplexMatrix) -> Result<Self> {
        if space.dim() == 0 {
            return Err(Error::InvalidDimension(
                "families need a space of dimension >= 1".into(),
            ));
        }
        if synthesis.nrows() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: synthesis.nrows(),
            });
        }
        if synthesis.ncols() == 0 {
            return Err(Error::InvalidDimension(
                "a family needs at least one vector".into(),
            ));
        }
        linalg::ensure_finite(&synthesis)?;
        Ok(Self { space, synthesis })
    }

    pub fn from_vectors(space: PontryaginSpace, vectors: &[ComplexVector]) -> Result<Self> {
        for v in vectors {
            if v.len() != space.dim() {
                return Err(Error::DimensionMismatch {
                    expected: space.dim(),
                    found: v.len(),
                });
            }
        }
        let synthesis = ComplexMatrix::from_fn(space.dim(), vectors.len(), |i, j| vectors[j][i]);
        Self::new(space, synthesis)
    }

    pub fn space(&self) -> &PontryaginSpace {
        &self.space
    }

    pub fn synthesis(&self) -> &ComplexMatrix {
        &self.synthesis
    }

    /// Number of vectors.
    pub fn k(&self) -> usize {
        self.synthesis.ncols()
    }

    pub fn vector(&self, n: usize) -> ComplexVector {
        self.synthesis.column(n).into_owned()
    }

    pub fn vectors(&self) -> Vec<ComplexVector> {
        (0..self.k()).map(|n| self.vector(n)).collect()
    }

    /// `C^k` with the alternating signature.
    pub fn coefficient_space(&self) -> PontryaginSpace {
        PontryaginSpace::alternating(self.k())
    }

    /// The family `{J x_n}`.
    pub fn j_family(&self) -> VectorFamily {
        Self {
            space: self.space.clone(),
            synthesis: self.space.j_left(&self.synthesis),
        }
    }

    /// Appends zero vectors until the family has `k` elements.
    pub fn padded(&self, k: usize) -> VectorFamily {
        let extra = k.saturating_sub(self.k());
        if extra == 0 {
            return self.clone();
        }
        let synthesis = self
            .synthesis
            .clone()
            .insert_columns(self.k(), extra, Default::default());
        Self {
            space: self.space.clone(),
            synthesis,
        }
    }

    /// Matrix of the analysis operator, `J̃·X†·J`.
    pub fn analysis_matrix(&self) -> ComplexMatrix {
        j_adjoint(&self.coefficient_space(), &self.space, &self.synthesis)
            .expect("synthesis shape matches its spaces")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameBounds {
    pub lower: f64,
    pub upper: f64,
    pub tight: bool,
    pub exact: bool,
}

impl FrameBounds {
    fn from_extremes(lower: f64, upper: f64, exact: bool) -> Self {
        Self {
            lower,
            upper,
            tight: (upper - lower).abs() <= TIGHT_TOL * upper,
            exact,
        }
    }
}

/// Outcome of [`validate`]: not being a frame is an answer, not an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Validation {
    Frame(FrameBounds),
    NotFrame { rank: usize, dim: usize },
}

impl Validation {
    pub fn is_frame(&self) -> bool {
        matches!(self, Validation::Frame(_))
    }

    pub fn bounds(&self) -> Option<FrameBounds> {
        match *self {
            Validation::Frame(b) => Some(b),
            Validation::NotFrame { .. } => None,
        }
    }

    /// The bounds, or `NotFrame` as an error for callers that need a frame.
    pub fn require(self) -> Result<FrameBounds> {
        match self {
            Validation::Frame(b) => Ok(b),
            Validation::NotFrame { rank, dim } => Err(Error::NotFrame { rank, dim }),
        }
    }
}

/// `T α = Σ α_n x_n`.
pub fn synthesize(f: &VectorFamily, alpha: &ComplexVector) -> Result<ComplexVector> {
    if alpha.len() != f.k() {
        return Err(Error::DimensionMismatch {
            expected: f.k(),
            found: alpha.len(),
        });
    }
    linalg::ensure_finite_vector(alpha)?;
    Ok(&f.synthesis * alpha)
}

/// `T^[*] x`, an element of `C^k` with the alternating signature.
pub fn analyze(f: &VectorFamily, x: &ComplexVector) -> Result<ComplexVector> {
    if x.len() != f.space.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.space.dim(),
            found: x.len(),
        });
    }
    linalg::ensure_finite_vector(x)?;
    Ok(f.analysis_matrix() * x)
}

/// `Σ_n |[x_n, x]|²`, the middle term of the frame inequality.
pub fn analysis_energy(f: &VectorFamily, x: &ComplexVector) -> Result<f64> {
    Ok(analyze(f, x)?.norm_squared())
}

/// `S = X·X†·J`.
pub fn frame_operator(f: &VectorFamily) -> ComplexMatrix {
    f.space.j_right(&hilbert_frame_operator(f))
}

/// `S_J = X·X†`, the frame operator of the family in the Hilbert space
/// `(K, [J·, ·])`.
pub fn hilbert_frame_operator(f: &VectorFamily) -> ComplexMatrix {
    &f.synthesis * f.synthesis.adjoint()
}

pub fn validate(f: &VectorFamily) -> Result<Validation> {
    validate_with_tol(f, DEFAULT_RANK_TOL)
}

/// Decides the frame property by rank and, for frames, reports the optimal
/// bounds as the extreme eigenvalues of `X·X†`.
pub fn validate_with_tol(f: &VectorFamily, tol: f64) -> Result<Validation> {
    let dim = f.space.dim();
    let rank = linalg::rank(&f.synthesis, tol)?;
    if rank < dim {
        return Ok(Validation::NotFrame { rank, dim });
    }
    let (lower, upper) = extreme_eigenvalues(&hilbert_frame_operator(f))?;
    let exact = is_exact(f);
    Ok(Validation::Frame(FrameBounds::from_extremes(
        lower, upper, exact,
    )))
}

/// Every leave-one-out subfamily loses the spanning property. For a
/// spanning family that happens exactly when the vectors are independent,
/// so the count decides it.
fn is_exact(f: &VectorFamily) -> bool {
    f.k() == f.space.dim()
}

fn extreme_eigenvalues(form: &ComplexMatrix) -> Result<(f64, f64)> {
    let eig = linalg::hermitian_eig(form)?;
    let upper = eig.values[0];
    let lower = *eig.values.last().expect("nonempty");
    Ok((lower, upper))
}

/// Optimal bounds of the four equivalent formulations, each from the
/// quadratic form of its own defining inequality:
///
/// 0. `{x_n}` in the Pontryagin space: `Σ |[x_n, x]|²  = x†·(J X X† J)·x`
/// 1. `{J x_n}` in the Pontryagin space: `Σ |[J x_n, x]|²`
/// 2. `{x_n}` in the Hilbert space: `Σ |(x_n, x)|² = x†·(X X†)·x`
/// 3. `{J x_n}` in the Hilbert space: `Σ |(J x_n, x)|²`
pub fn four_formulations_bounds(f: &VectorFamily) -> Result<[FrameBounds; 4]> {
    let exact = validate(f)?.require()?.exact;
    let space = &f.space;
    let pontryagin_form = |x: &ComplexMatrix| space.j_left(&space.j_right(&(x * x.adjoint())));
    let hilbert_form = |x: &ComplexMatrix| x * x.adjoint();
    let jx = space.j_left(&f.synthesis);
    let forms = [
        pontryagin_form(&f.synthesis),
        pontryagin_form(&jx),
        hilbert_form(&f.synthesis),
        hilbert_form(&jx),
    ];
    let mut out = [FrameBounds::from_extremes(0.0, 0.0, exact); 4];
    for (slot, form) in out.iter_mut().zip(forms.iter()) {
        let (lower, upper) = extreme_eigenvalues(form)?;
        *slot = FrameBounds::from_extremes(lower, upper, exact);
    }
    Ok(out)
}

/// Canonical-dual reconstruction: `x = Σ c_n x_n` with
/// `c = J̃·T^[*]·S^{-1}·x`.
pub fn reconstruct(f: &VectorFamily, x: &ComplexVector) -> Result<ComplexVector> {
    validate(f)?.require()?;
    if x.len() != f.space.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.space.dim(),
            found: x.len(),
        });
    }
    // S = S_J·J, so S^{-1} = J·S_J^{-1}
    let eig = linalg::hermitian_eig(&hilbert_frame_operator(f))?;
    let max = eig.values[0];
    let min = *eig.values.last().expect("nonempty");
    let condition = if min > 0.0 { max / min } else { f64::INFINITY };
    if condition > MAX_CONDITION {
        return Err(Error::SingularFrameOperator { condition });
    }
    let inv: Vec<f64> = eig.values.iter().map(|l| 1.0 / l).collect();
    let s_j_inv = &eig.vectors * linalg::diag_real(&inv) * eig.vectors.adjoint();
    let y = f.space.apply_j(&(s_j_inv * x));
    let coefficients = f.coefficient_space().apply_j(&analyze(f, &y)?);
    synthesize(f, &coefficients)
}
