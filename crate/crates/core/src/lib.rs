//! Grassmann angles between real and complex subspaces.

pub mod error;
pub mod exterior;
pub mod gram;
pub mod grassmann;
pub mod identities;
pub mod io;
pub mod linalg;
pub mod mat;
pub mod metrics;
pub mod principal;
pub mod random;
pub mod scalar;
pub mod subspace;
pub mod tolerance;
pub mod verify;

pub use error::{Error, Result};
pub use mat::Mat;
pub use num_complex::{Complex32, Complex64};
pub use principal::{PrincipalDecomposition, Partition};
pub use scalar::{Field, RealScalar, Scalar};
pub use subspace::Subspace;
pub use tolerance::ToleranceConfig;

pub type RealSubspace = Subspace<f64>;
pub type ComplexSubspace = Subspace<Complex64>;
pub type RealMat = Mat<f64>;
pub type ComplexMat = Mat<Complex64>;
