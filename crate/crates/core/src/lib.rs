//! Finite frames on finite-dimensional Pontryagin spaces.
//!
//! The crate covers validation and optimal bounds of frames for indefinite
//! inner-product spaces, construction of frames with a prescribed frame
//! operator and prescribed vector norms, similarity of frames, dilation of a
//! frame to a larger space and coupling of two frames into a product space.

pub mod construction;
pub mod coupling;
pub mod dilation;
pub mod error;
pub mod frames;
pub mod linalg;
pub mod space;

pub use construction::{Flavor, MajorizationReport, NormSpec, SpectrumSpec};
pub use coupling::Coupling;
pub use dilation::{Dilation, SimilarityResult};
pub use error::{Error, Result};
pub use frames::{FrameBounds, Validation, VectorFamily};
pub use linalg::{ComplexMatrix, ComplexVector, C64};
pub use space::{PontryaginSpace, ProductSpace, Subspace};
