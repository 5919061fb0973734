use thiserror::Error;

/// Errors raised by the geometric and arithmetic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric: off-diagonal entries {0} and {1} differ")]
    NonSymmetric(String, String),

    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,

    /// The Voronoi cell is a rectangle, so the surface splits as a product of
    /// elliptic curves and the operation has no meaning.
    #[error("surface is of product type (rectangular Voronoi cell)")]
    ProductType,

    #[error("enumeration radius {radius} does not certify a global minimum")]
    RadiusTooSmall { radius: u64 },

    /// The four theta differences disagree with the `±y + p` criterion.
    /// Never expected for an irreducible surface.
    #[error("injectivity criterion violated at y = {y}, y' = {y_prime}: {detail}")]
    InternalInconsistency {
        y: String,
        y_prime: String,
        detail: String,
    },

    #[error("theta map is not affine on cell {cell}: {detail}")]
    NotAffineOnCell { cell: String, detail: String },

    #[error("formal theta series has empty support")]
    EmptySupport,

    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
