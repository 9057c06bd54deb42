//! Coupling two frames, or two frame operators, on a product space.

use std::ops::Range;

use crate::construction::{construct_frame, Flavor, NormSpec, POSITIVITY_TOL};
use crate::dilation::{dilate_with_tol, Dilation};
use crate::error::{Error, Result};
use crate::frames::{validate_with_tol, Validation, VectorFamily};
use crate::linalg::{self, ComplexMatrix, DEFAULT_RANK_TOL};
use crate::space::{product_space, PontryaginSpace, ProductSpace};

#[derive(Debug, Clone)]
pub struct Coupling {
    /// `ℜ_K × ℜ_H`, the product of the two dilation spaces.
    pub product: ProductSpace,
    /// `z_n = (u_n, v_n)`.
    pub coupled_frame: VectorFamily,
    /// `(x, y) ↦ (P₁x, 0)`.
    pub p_k: ComplexMatrix,
    /// `(x, y) ↦ (0, P₂y)`.
    pub p_h: ComplexMatrix,
    pub dilation_k: Dilation,
    pub dilation_h: Dilation,
    /// Frame check of `{z_n}` in the whole product space. The vectors span
    /// at most `k` dimensions of a space of dimension `dim ℜ_K + dim ℜ_H`,
    /// so this is only a frame when one factor is `{0}`-dimensional.
    pub validation: Validation,
}

impl Coupling {
    pub fn big_space(&self) -> &PontryaginSpace {
        &self.product.space
    }

    /// Coordinates of `K` inside the product space.
    pub fn embedding_k(&self) -> Range<usize> {
        let e = &self.dilation_k.embedding;
        self.product.left.start + e.start..self.product.left.start + e.end
    }

    /// Coordinates of `H` inside the product space.
    pub fn embedding_h(&self) -> Range<usize> {
        let e = &self.dilation_h.embedding;
        self.product.right.start + e.start..self.product.right.start + e.end
    }

    /// `P_K z_n` restricted to the coordinates of `K`.
    pub fn recovered_k(&self) -> ComplexMatrix {
        let r = self.embedding_k();
        (&self.p_k * self.coupled_frame.synthesis())
            .rows(r.start, r.len())
            .into_owned()
    }

    /// `P_H z_n` restricted to the coordinates of `H`.
    pub fn recovered_h(&self) -> ComplexMatrix {
        let r = self.embedding_h();
        (&self.p_h * self.coupled_frame.synthesis())
            .rows(r.start, r.len())
            .into_owned()
    }
}

pub fn couple_frames(f: &VectorFamily, g: &VectorFamily) -> Result<Coupling> {
    couple_frames_with_tol(f, g, DEFAULT_RANK_TOL)
}

/// Pads the shorter family with zero vectors, dilates both and pairs the
/// dilated vectors. Frames that are already bases are used as they are.
pub fn couple_frames_with_tol(f: &VectorFamily, g: &VectorFamily, tol: f64) -> Result<Coupling> {
    let k = f.k().max(g.k());
    let dilation_k = dilate_with_tol(&f.padded(k), tol)?;
    let dilation_h = dilate_with_tol(&g.padded(k), tol)?;

    let product = product_space(&dilation_k.big_space, &dilation_h.big_space);
    let u = dilation_k.big_frame.synthesis();
    let v = dilation_h.big_frame.synthesis();
    let mut z = ComplexMatrix::zeros(product.space.dim(), k);
    z.view_mut((product.left.start, 0), (u.nrows(), k))
        .copy_from(u);
    z.view_mut((product.right.start, 0), (v.nrows(), k))
        .copy_from(v);
    let coupled_frame = VectorFamily::new(product.space.clone(), z)?;

    let zero_k = ComplexMatrix::zeros(product.left.len(), product.left.len());
    let zero_h = ComplexMatrix::zeros(product.right.len(), product.right.len());
    let p_k = linalg::direct_sum(&dilation_k.projector, &zero_h);
    let p_h = linalg::direct_sum(&zero_k, &dilation_h.projector);
    let validation = validate_with_tol(&coupled_frame, tol)?;

    Ok(Coupling {
        product,
        coupled_frame,
        p_k,
        p_h,
        dilation_k,
        dilation_h,
        validation,
    })
}

/// Block-diagonal `S_ℜ(x, y) = (S_K x, S_H y)` of two positive definite
/// Hermitian operators.
pub fn couple_operators(s_k: &ComplexMatrix, s_h: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_positive(s_k)?;
    check_positive(s_h)?;
    Ok(linalg::direct_sum(s_k, s_h))
}

fn check_positive(s: &ComplexMatrix) -> Result<()> {
    let eig = linalg::hermitian_eig(s)?;
    let max = eig.values.first().copied().unwrap_or(0.0);
    let min = eig.values.last().copied().unwrap_or(0.0);
    if s.nrows() == 0 || min <= 0.0 || min <= POSITIVITY_TOL * max {
        return Err(Error::NotPositiveDefinite {
            min_eigenvalue: min,
        });
    }
    Ok(())
}

/// A frame on `K × H` with norms `a` realising the coupled operator as
/// prescribed by `flavor`.
pub fn coupled_operator_frame(
    k: &PontryaginSpace,
    s_k: &ComplexMatrix,
    h: &PontryaginSpace,
    s_h: &ComplexMatrix,
    norms: &NormSpec,
    flavor: Flavor,
) -> Result<VectorFamily> {
    if s_k.nrows() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: k.dim(),
            found: s_k.nrows(),
        });
    }
    if s_h.nrows() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: s_h.nrows(),
        });
    }
    let s = couple_operators(s_k, s_h)?;
    construct_frame(&product_space(k, h).space, &s, norms, flavor)
}
