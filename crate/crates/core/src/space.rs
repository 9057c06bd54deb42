//! Pontryagin spaces with a diagonal fundamental symmetry.
//!
//! A space is `C^N` with the indefinite product `[x, y] = Σ s_n·x_n·conj(y_n)`
//! for a signature `s ∈ {+1, −1}^N`; the fundamental symmetry `J` is
//! `diag(s)` and the associated Hilbert product is `[Jx, y] = (x, y)`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::linalg::{self, c64, ComplexMatrix, ComplexVector, C64, DEFAULT_RANK_TOL};

/// Smallest-to-largest singular value ratio below which an indefinite Gram
/// matrix is treated as singular.
pub const GRAM_TOL: f64 = 1e-10;

/// Maximum entrywise Gram defect accepted for a J-orthonormal system.
pub const J_ORTHONORMAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PontryaginSpace {
    signature: Vec<i8>,
}

impl PontryaginSpace {
    /// A space with the given diagonal signature. Dimension 0 and pure
    /// Hilbert signatures (no −1 entries) are accepted.
    pub fn new(signature: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = signature.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidSignature(bad as i32));
        }
        Ok(Self { signature })
    }

    /// Like [`PontryaginSpace::new`], but requires both a positive and a
    /// negative direction.
    pub fn strict(signature: Vec<i8>) -> Result<Self> {
        let space = Self::new(signature)?;
        if space.p() == 0 || space.q() == 0 {
            return Err(Error::NotPontryagin {
                p: space.p(),
                q: space.q(),
            });
        }
        Ok(space)
    }

    /// `C^k` with the alternating signature `(+1, −1, +1, …)`.
    pub fn standard(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidDimension(
                "standard space needs k >= 1".into(),
            ));
        }
        Ok(Self::alternating(k))
    }

    pub(crate) fn alternating(k: usize) -> Self {
        Self {
            signature: (0..k).map(|n| if n % 2 == 0 { 1 } else { -1 }).collect(),
        }
    }

    /// `C^n` with the definite signature (all +1).
    pub fn hilbert(n: usize) -> Self {
        Self {
            signature: vec![1; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.signature.len()
    }

    pub fn signature(&self) -> &[i8] {
        &self.signature
    }

    /// Number of positive directions.
    pub fn p(&self) -> usize {
        self.signature.iter().filter(|&&s| s > 0).count()
    }

    /// Number of negative directions.
    pub fn q(&self) -> usize {
        self.dim() - self.p()
    }

    /// `min(p, q)`, the rank of indefiniteness.
    pub fn index(&self) -> usize {
        self.p().min(self.q())
    }

    pub fn is_strict(&self) -> bool {
        self.index() > 0
    }

    pub fn j_matrix(&self) -> ComplexMatrix {
        let n = self.dim();
        ComplexMatrix::from_fn(
            n,
            n,
            |i, j| if i == j { self.sign(i) } else { C64::default() },
        )
    }

    fn sign(&self, i: usize) -> C64 {
        c64(self.signature[i] as f64, 0.0)
    }

    /// `J·x`.
    pub fn apply_j(&self, x: &ComplexVector) -> ComplexVector {
        ComplexVector::from_fn(x.len(), |i, _| x[i] * self.sign(i))
    }

    /// `J·M` (rows scaled by the signature).
    pub fn j_left(&self, m: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)] * self.sign(i))
    }

    /// `M·J` (columns scaled by the signature).
    pub fn j_right(&self, m: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix::from_fn(m.nrows(), m.ncols(), |i, j| m[(i, j)] * self.sign(j))
    }

    fn check_vector(&self, x: &ComplexVector) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `[x, y] = Σ s_n·x_n·conj(y_n)`.
    pub fn inner(&self, x: &ComplexVector, y: &ComplexVector) -> Result<C64> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok((0..self.dim())
            .map(|i| self.sign(i) * x[i] * y[i].conj())
            .sum())
    }

    /// `(x, y) = [Jx, y] = Σ x_n·conj(y_n)`.
    pub fn hilbert_inner(&self, x: &ComplexVector, y: &ComplexVector) -> Result<C64> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(y.dotc(x))
    }

    /// `‖x‖_J = sqrt((x, x))`.
    pub fn j_norm(&self, x: &ComplexVector) -> Result<f64> {
        self.check_vector(x)?;
        Ok(x.norm())
    }

    /// J-adjoint of `m: self → codomain`, i.e. `J_self·M†·J_codomain`.
    pub fn j_adjoint(
        &self,
        codomain: &PontryaginSpace,
        m: &ComplexMatrix,
    ) -> Result<ComplexMatrix> {
        j_adjoint(self, codomain, m)
    }
}

/// J-adjoint of `m: domain → codomain`: the matrix `J_domain·M†·J_codomain`,
/// characterised by `[Mx, y]_codomain = [x, M^[*] y]_domain`.
pub fn j_adjoint(
    domain: &PontryaginSpace,
    codomain: &PontryaginSpace,
    m: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    if m.ncols() != domain.dim() {
        return Err(Error::DimensionMismatch {
            expected: domain.dim(),
            found: m.ncols(),
        });
    }
    if m.nrows() != codomain.dim() {
        return Err(Error::DimensionMismatch {
            expected: codomain.dim(),
            found: m.nrows(),
        });
    }
    Ok(domain.j_left(&codomain.j_right(&m.adjoint())))
}

/// A linear subspace, stored as a Hilbert-orthonormal basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: PontryaginSpace,
    basis: ComplexMatrix,
}

impl Subspace {
    /// The span of the columns of `vectors`.
    pub fn span(ambient: &PontryaginSpace, vectors: &ComplexMatrix) -> Result<Self> {
        Self::span_with_tol(ambient, vectors, DEFAULT_RANK_TOL)
    }

    pub fn span_with_tol(
        ambient: &PontryaginSpace,
        vectors: &ComplexMatrix,
        tol: f64,
    ) -> Result<Self> {
        if vectors.nrows() != ambient.dim() {
            return Err(Error::DimensionMismatch {
                expected: ambient.dim(),
                found: vectors.nrows(),
            });
        }
        let basis = linalg::column_space_basis(vectors, tol)?;
        Ok(Self {
            ambient: ambient.clone(),
            basis,
        })
    }

    pub fn whole(ambient: &PontryaginSpace) -> Self {
        let n = ambient.dim();
        Self {
            ambient: ambient.clone(),
            basis: ComplexMatrix::identity(n, n),
        }
    }

    pub fn zero(ambient: &PontryaginSpace) -> Self {
        Self {
            ambient: ambient.clone(),
            basis: ComplexMatrix::zeros(ambient.dim(), 0),
        }
    }

    pub fn ambient(&self) -> &PontryaginSpace {
        &self.ambient
    }

    /// Orthonormal (Hilbert sense) spanning columns.
    pub fn basis(&self) -> &ComplexMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Indefinite Gram matrix `B†·J·B` of the stored basis.
    pub fn gram(&self) -> ComplexMatrix {
        self.basis.adjoint() * self.ambient.j_left(&self.basis)
    }

    /// Hilbert-orthogonal projector onto the subspace.
    pub fn hilbert_projector(&self) -> ComplexMatrix {
        linalg::orthogonal_projector(&self.basis)
    }

    /// Whether the indefinite product restricted to the subspace is
    /// nondegenerate.
    pub fn is_nondegenerate(&self) -> Result<bool> {
        Ok(gram_inverse(&self.gram()).is_ok())
    }

    /// Same span, decided by ranks and projector distance.
    pub fn same_span(&self, other: &Subspace, tol: f64) -> bool {
        self.ambient.dim() == other.ambient.dim()
            && self.dim() == other.dim()
            && linalg::fro(&(self.hilbert_projector() - other.hilbert_projector())) < tol
    }
}

/// `V^[⊥] = J·V^⊥`.
pub fn j_orthogonal_complement(v: &Subspace) -> Result<Subspace> {
    let perp = linalg::orthogonal_complement_basis(&v.basis)?;
    Ok(Subspace {
        ambient: v.ambient.clone(),
        basis: v.ambient.j_left(&perp),
    })
}

/// Inverse of the indefinite Gram matrix of a Hilbert-orthonormal basis, or
/// `DegenerateSubspace` when its smallest singular value is below `GRAM_TOL`
/// times the largest. The scale never drops below 1, the norm of `J`, so a
/// numerically neutral line is not mistaken for a well-conditioned one.
pub(crate) fn gram_inverse(gram: &ComplexMatrix) -> Result<ComplexMatrix> {
    if gram.nrows() == 0 {
        return Ok(gram.clone());
    }
    let eig = linalg::hermitian_eig(gram)?;
    let max = eig.values.iter().fold(1.0f64, |m, l| m.max(l.abs()));
    let min = eig.values.iter().fold(f64::INFINITY, |m, l| m.min(l.abs()));
    if min < GRAM_TOL * max {
        return Err(Error::DegenerateSubspace);
    }
    let inv: Vec<f64> = eig.values.iter().map(|l| 1.0 / l).collect();
    Ok(&eig.vectors * linalg::diag_real(&inv) * eig.vectors.adjoint())
}

/// The J-orthogonal projection `Q = B·(B†JB)^{-1}·B†·J` onto a
/// nondegenerate subspace.
pub fn j_orthogonal_projection(v: &Subspace) -> Result<ComplexMatrix> {
    let g_inv = gram_inverse(&v.gram())?;
    Ok(&v.basis * g_inv * v.ambient.j_right(&v.basis.adjoint()))
}

/// Coefficients `c_n = [e_n, e_n]·[x, e_n]` of `x` in a J-orthonormal basis.
pub fn j_orthonormal_expansion(
    space: &PontryaginSpace,
    basis: &[ComplexVector],
    x: &ComplexVector,
) -> Result<Vec<C64>> {
    if basis.len() != space.dim() {
        return Err(Error::DimensionMismatch {
            expected: space.dim(),
            found: basis.len(),
        });
    }
    for e in basis {
        if e.len() != space.dim() {
            return Err(Error::DimensionMismatch {
                expected: space.dim(),
                found: e.len(),
            });
        }
    }
    let mut defect = 0.0f64;
    let mut squares = Vec::with_capacity(basis.len());
    for (i, ei) in basis.iter().enumerate() {
        let d = space.inner(ei, ei)?;
        let sign = if d.re >= 0.0 { 1.0 } else { -1.0 };
        defect = defect.max((d - c64(sign, 0.0)).norm());
        squares.push(sign);
        for ej in &basis[i + 1..] {
            defect = defect.max(space.inner(ei, ej)?.norm());
        }
    }
    if defect > J_ORTHONORMAL_TOL {
        return Err(Error::NotJOrthonormal { defect });
    }
    basis
        .iter()
        .zip(squares)
        .map(|(e, s)| Ok(space.inner(x, e)? * s))
        .collect()
}

/// `K × H` with `[(x, y), (a, b)] = [x, a]_K + [y, b]_H`; coordinates of `K`
/// come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSpace {
    pub space: PontryaginSpace,
    pub left: Range<usize>,
    pub right: Range<usize>,
}

impl ProductSpace {
    pub fn embed(&self, x: &ComplexVector, y: &ComplexVector) -> Result<ComplexVector> {
        if x.len() != self.left.len() {
            return Err(Error::DimensionMismatch {
                expected: self.left.len(),
                found: x.len(),
            });
        }
        if y.len() != self.right.len() {
            return Err(Error::DimensionMismatch {
                expected: self.right.len(),
                found: y.len(),
            });
        }
        Ok(ComplexVector::from_iterator(
            self.space.dim(),
            x.iter().chain(y.iter()).copied(),
        ))
    }

    pub fn embed_left(&self, x: &ComplexVector) -> Result<ComplexVector> {
        self.embed(x, &ComplexVector::zeros(self.right.len()))
    }

    pub fn embed_right(&self, y: &ComplexVector) -> Result<ComplexVector> {
        self.embed(&ComplexVector::zeros(self.left.len()), y)
    }

    pub fn split(&self, z: &ComplexVector) -> Result<(ComplexVector, ComplexVector)> {
        if z.len() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                found: z.len(),
            });
        }
        Ok((
            z.rows(self.left.start, self.left.len()).into(),
            z.rows(self.right.start, self.right.len()).into(),
        ))
    }
}

pub fn product_space(k: &PontryaginSpace, h: &PontryaginSpace) -> ProductSpace {
    let mut signature = k.signature.clone();
    signature.extend_from_slice(&h.signature);
    ProductSpace {
        space: PontryaginSpace { signature },
        left: 0..k.dim(),
        right: k.dim()..k.dim() + h.dim(),
    }
}
