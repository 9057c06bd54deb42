//! Similarity of frames and dilation of a frame to a larger space.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::frames::{validate_with_tol, VectorFamily};
use crate::linalg::{self, ComplexMatrix, DEFAULT_RANK_TOL};
use crate::space::{j_orthogonal_complement, j_orthogonal_projection, PontryaginSpace, Subspace};

/// Projector distance below which two analysis ranges count as equal.
pub const SAME_RANGE_TOL: f64 = 1e-10;
/// Relative residual allowed for `U·x_n = y_n`.
pub const INTERTWINER_TOL: f64 = 1e-9;

/// Column space of the analysis matrix, inside `C^k` with the alternating
/// signature.
pub fn analysis_range(f: &VectorFamily) -> Result<Subspace> {
    analysis_range_with_tol(f, DEFAULT_RANK_TOL)
}

pub fn analysis_range_with_tol(f: &VectorFamily, tol: f64) -> Result<Subspace> {
    Subspace::span_with_tol(&f.coefficient_space(), &f.analysis_matrix(), tol)
}

#[derive(Debug, Clone)]
pub struct SimilarityResult {
    pub similar: bool,
    /// `U` with `U·x_n = y_n`, present iff `similar`.
    pub intertwiner: Option<ComplexMatrix>,
    pub range_dim_f: usize,
    pub range_dim_g: usize,
}

pub fn are_similar(f: &VectorFamily, g: &VectorFamily) -> Result<SimilarityResult> {
    are_similar_with_tol(f, g, DEFAULT_RANK_TOL)
}

/// Two frames with the same number of vectors are similar exactly when
/// their analysis operators share a range. The intertwiner is
/// `T_G·(T_F^[*]·T_F)⁺·T_F^[*]`.
pub fn are_similar_with_tol(
    f: &VectorFamily,
    g: &VectorFamily,
    tol: f64,
) -> Result<SimilarityResult> {
    if f.k() != g.k() {
        return Err(Error::KMismatch {
            left: f.k(),
            right: g.k(),
        });
    }
    validate_with_tol(f, tol)?.require()?;
    validate_with_tol(g, tol)?.require()?;

    let range_f = analysis_range_with_tol(f, tol)?;
    let range_g = analysis_range_with_tol(g, tol)?;
    let mut result = SimilarityResult {
        similar: false,
        intertwiner: None,
        range_dim_f: range_f.dim(),
        range_dim_g: range_g.dim(),
    };
    if !range_f.same_span(&range_g, SAME_RANGE_TOL) {
        return Ok(result);
    }

    let t_f_star = f.analysis_matrix();
    let inner = &t_f_star * f.synthesis();
    let u = g.synthesis() * linalg::pseudo_inverse(&inner, tol)? * &t_f_star;

    let residual = (&u * f.synthesis() - g.synthesis())
        .column_iter()
        .map(|c| g.space().j_norm(&c.into_owned()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0f64, f64::max);
    let scale = g.vectors().iter().map(|y| y.norm()).fold(0.0f64, f64::max);
    if residual <= INTERTWINER_TOL * scale.max(f64::MIN_POSITIVE) {
        result.similar = true;
        result.intertwiner = Some(u);
    }
    Ok(result)
}

/// A frame `{u_n}` on a larger space whose J-orthogonal projection onto the
/// embedded original space gives back `{x_n}`.
#[derive(Debug, Clone)]
pub struct Dilation {
    pub big_space: PontryaginSpace,
    pub big_frame: VectorFamily,
    /// J-orthogonal projection of `big_space` onto the embedded original.
    pub projector: ComplexMatrix,
    /// Coordinates of the original space inside `big_space`.
    pub embedding: Range<usize>,
    /// J-orthogonal projection of `C^k` onto the analysis range.
    pub q: ComplexMatrix,
}

impl Dilation {
    /// The original vectors, projected and restricted to the embedding.
    pub fn projected(&self) -> ComplexMatrix {
        let p = &self.projector * self.big_frame.synthesis();
        p.rows(self.embedding.start, self.embedding.len())
            .into_owned()
    }

    pub fn is_trivial(&self) -> bool {
        self.big_space.dim() == self.embedding.len()
    }
}

pub fn dilate(f: &VectorFamily) -> Result<Dilation> {
    dilate_with_tol(f, DEFAULT_RANK_TOL)
}

/// Dilation `u_n = x_n ⊕ (I − Q)e_n`, where `Q` projects `C^k` onto the
/// analysis range and the second factor is `V`, its J-orthogonal complement,
/// written in coordinates that diagonalise the restricted product.
pub fn dilate_with_tol(f: &VectorFamily, tol: f64) -> Result<Dilation> {
    validate_with_tol(f, tol)?.require()?;
    let coeff = f.coefficient_space();
    let k = f.k();
    let n = f.space().dim();
    if k == n {
        // the analysis range is all of C^k, nothing to add
        return Ok(Dilation {
            big_space: f.space().clone(),
            big_frame: f.clone(),
            projector: ComplexMatrix::identity(n, n),
            embedding: 0..n,
            q: ComplexMatrix::identity(k, k),
        });
    }

    let range = analysis_range_with_tol(f, tol)?;
    let q = j_orthogonal_projection(&range)?;
    let v = j_orthogonal_complement(&range)?;

    // C with C†·J̃·C = diag(signs), via the eigenvectors of V's Gram
    let (signs, coords) = if v.dim() == 0 {
        (Vec::new(), ComplexMatrix::zeros(0, k))
    } else {
        let basis = linalg::column_space_basis(v.basis(), tol)?;
        let gram = basis.adjoint() * coeff.j_left(&basis);
        let eig = linalg::hermitian_eig(&gram)?;
        if eig.values.iter().any(|g| g.abs() < crate::space::GRAM_TOL) {
            return Err(Error::DegenerateSubspace);
        }
        let scale: Vec<f64> = eig.values.iter().map(|g| 1.0 / g.abs().sqrt()).collect();
        let signs: Vec<i8> = eig
            .values
            .iter()
            .map(|g| if *g > 0.0 { 1 } else { -1 })
            .collect();
        let c = basis * &eig.vectors * linalg::diag_real(&scale);
        let d: Vec<f64> = signs.iter().map(|&s| f64::from(s)).collect();
        // coordinates of v ∈ V: D·C†·J̃·v
        (signs, linalg::diag_real(&d) * coeff.j_right(&c.adjoint()))
    };

    let mut signature = f.space().signature().to_vec();
    signature.extend(&signs);
    let big_space = PontryaginSpace::new(signature)?;
    let tail = coords * (ComplexMatrix::identity(k, k) - &q);
    let mut synthesis = ComplexMatrix::zeros(big_space.dim(), k);
    synthesis.view_mut((0, 0), (n, k)).copy_from(f.synthesis());
    synthesis
        .view_mut((n, 0), (tail.nrows(), k))
        .copy_from(&tail);
    let big_frame = VectorFamily::new(big_space.clone(), synthesis)?;
    validate_with_tol(&big_frame, tol)?.require()?;

    let mut projector = ComplexMatrix::zeros(big_space.dim(), big_space.dim());
    projector.view_mut((0, 0), (n, n)).fill_with_identity();
    Ok(Dilation {
        big_space,
        big_frame,
        projector,
        embedding: 0..n,
        q,
    })
}
