//! Numeric tolerances, kept in one place so every predicate stays
//! reproducible. All are absolute unless noted.

/// Incidence cutoff: circle membership, point coincidence, and matrix
/// normalization share this tolerance.
pub const INCIDENCE: f64 = 1e-9;

/// Looser cutoff for derived identities (intersection points lying on both
/// surfaces, equidistance of bisector planes, chordal homomorphism checks).
pub const GEOMETRIC: f64 = 1e-8;

/// Relative tolerance on the fiber volume of the Grassmann bundle.
pub const FIBER_VOLUME: f64 = 1e-6;

/// Polar-cap half-width that keeps sampled plane normals off the equator.
pub const EQUATOR_CAP: f64 = 1e-6;

/// Cutoff for the scaled eigenbasis commutation residuals.
pub const EIGEN_RESIDUAL: f64 = 1e-9;

/// Total-mass tolerance for induced measures.
pub const MEASURE_MASS: f64 = 1e-9;

/// Radius below which the hyperbolic ball formulas switch to series
/// expansions; the exponential forms cancel catastrophically near zero.
pub const BALL_SERIES_SWITCH: f64 = 1e-4;

/// Relative tolerance for inverting the ball-volume function by bisection.
pub const VOLUME_INVERSION: f64 = 1e-12;

/// Tolerance on measured polygon vertex angles.
pub const POLYGON_ANGLE: f64 = 1e-9;
