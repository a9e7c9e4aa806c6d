//! Exact Hochschild cohomology with trivial coefficients for graded braided Hopf
//! algebras over kZ, with verification of braided commutativity of the cup product,
//! the cocommutativity of the bar construction and the coduoid structure on small
//! resolutions.

pub mod algebra;
pub mod braided;
pub mod bar;
pub mod complex;
pub mod cup;
pub mod duoidal;
pub mod error;
pub mod linalg;
pub mod lifting;
pub mod linear;
pub mod resolution;
pub mod scalar;

pub use algebra::{Algebra, AlgebraElement, Presentation, Word};
pub use error::{Error, Result};
pub use linear::LinComb;
pub use scalar::Scalar;
