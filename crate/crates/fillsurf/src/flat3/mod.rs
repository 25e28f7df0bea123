//! The closed orientable flat 3-manifolds as Bieberbach groups over exact
//! arithmetic, periodic plane families and their group orbits, the rank-3
//! filling criterion with escaping-geodesic witnesses, and a grid
//! flood-fill analysis of complement cells.
//!
//! Group and lattice arithmetic is exact (rationals extended by sqrt 3, so
//! the hexagonal lattices are exact too); floats only appear in the grid
//! geometry of [`complement_cells`].

mod cells;
mod family;
mod manifold;
mod scalar;

pub use cells::{complement_cells, complement_cells_auto, CellReport};
pub use family::{
    construct_filling, filling_flat, find_escaping_geodesic, lattice_period, orbit_families,
    EscapingGeodesic, EuclideanPlaneFamily, SurfaceSpec,
};
pub use manifold::{flat_manifold, FlatManifold, FlatManifoldId, Isometry};
pub use scalar::{null_space, rank, rational_gcd, Mat3K, QSqrt3, Rational, Vec3K, SQRT3};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlatError {
    #[error("ZeroNormal")]
    ZeroNormal,
    #[error("EmptyInput")]
    EmptyInput,
    #[error("ResolutionTooLow")]
    ResolutionTooLow,
    /// The normal pairs with the lattice in a non-discrete set, so no
    /// periodic plane family exists along it.
    #[error("IncommensurableNormal")]
    IncommensurableNormal,
    #[error("InvalidFamily: {0}")]
    InvalidFamily(String),
    #[error("InvalidManifold: {0}")]
    InvalidManifold(String),
}

impl FlatError {
    /// Stable error name for the JSON surface.
    pub fn name(&self) -> &'static str {
        match self {
            FlatError::ZeroNormal => "ZeroNormal",
            FlatError::EmptyInput => "EmptyInput",
            FlatError::ResolutionTooLow => "ResolutionTooLow",
            FlatError::IncommensurableNormal => "IncommensurableNormal",
            FlatError::InvalidFamily(_) => "InvalidFamily",
            FlatError::InvalidManifold(_) => "InvalidManifold",
        }
    }
}
