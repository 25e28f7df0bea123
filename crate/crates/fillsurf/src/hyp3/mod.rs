//! Upper half-space model of hyperbolic 3-space.
//!
//! The conformal boundary is the extended complex plane; isometries act as
//! Möbius transformations of the boundary, geodesic planes are hemispheres
//! or vertical half-planes recorded by their boundary circle, and geodesics
//! are recorded by their unordered pair of ideal endpoints. Everything here
//! is an immutable value and every operation is pure.

mod interior;
mod mobius;
mod plane;

pub use interior::{
    bisector_plane, geodesic_between, hyp_distance, plane_with_normal, point_along, tangent_along,
    UhsPoint,
};
pub use mobius::{mobius_apply, mobius_compose, MobiusMap};
pub use plane::{plane_through, separates, transform_plane, GeodesicPlane};

use num_complex::Complex64;
use thiserror::Error;

use crate::tol;

#[derive(Debug, Error, PartialEq)]
pub enum Hyp3Error {
    /// Two of the defining points coincide (or the input is otherwise
    /// collapsed below the incidence tolerance).
    #[error("DegenerateInput")]
    DegenerateInput,
    /// A point given to the separation predicate lies on the plane's
    /// boundary circle.
    #[error("OnCircle")]
    OnCircle,
    /// The two interior points of a bisector query coincide.
    #[error("CoincidentPoints")]
    CoincidentPoints,
}

/// A point of the sphere at infinity: the extended complex plane.
///
/// Infinity is an explicit variant, never a large float; operations branch
/// on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryPoint {
    Finite(Complex64),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(re: f64, im: f64) -> Self {
        BoundaryPoint::Finite(Complex64::new(re, im))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }
}

impl From<Complex64> for BoundaryPoint {
    fn from(z: Complex64) -> Self {
        BoundaryPoint::Finite(z)
    }
}

/// Chordal distance on the Riemann sphere, so that infinity is an ordinary
/// point: `2|z-w| / sqrt((1+|z|^2)(1+|w|^2))`, with the usual limits at
/// infinity.
pub fn chordal_distance(p: BoundaryPoint, q: BoundaryPoint) -> f64 {
    use BoundaryPoint::*;
    match (p, q) {
        (Infinity, Infinity) => 0.0,
        (Finite(z), Infinity) | (Infinity, Finite(z)) => 2.0 / (1.0 + z.norm_sqr()).sqrt(),
        (Finite(z), Finite(w)) => {
            2.0 * (z - w).norm() / ((1.0 + z.norm_sqr()) * (1.0 + w.norm_sqr())).sqrt()
        }
    }
}

/// A geodesic recorded by its two ideal endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicLine {
    endpoints: (BoundaryPoint, BoundaryPoint),
}

impl GeodesicLine {
    /// The endpoints must be distinct (chordal distance above the incidence
    /// tolerance).
    pub fn new(a: BoundaryPoint, b: BoundaryPoint) -> Result<Self, Hyp3Error> {
        if chordal_distance(a, b) <= tol::INCIDENCE {
            return Err(Hyp3Error::DegenerateInput);
        }
        Ok(GeodesicLine { endpoints: (a, b) })
    }

    pub fn endpoints(&self) -> (BoundaryPoint, BoundaryPoint) {
        self.endpoints
    }
}

/// How a geodesic plane and a geodesic sit relative to one another.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Classification {
    /// One transverse interior intersection, returned explicitly.
    Transverse(UhsPoint),
    /// The geodesic lies inside the plane (both endpoints on the circle).
    Contained,
    /// Exactly one endpoint on the circle: the two meet only at infinity.
    Asymptotic,
    Disjoint,
}

/// Classify the position of a geodesic relative to a plane.
///
/// The four cases are exhaustive and mutually exclusive; the transverse
/// case holds exactly when the plane's circle separates the endpoints.
pub fn classify_plane_geodesic(plane: &GeodesicPlane, geodesic: &GeodesicLine) -> Classification {
    let (a, b) = geodesic.endpoints();
    let on_a = plane.is_on_circle(a);
    let on_b = plane.is_on_circle(b);
    match (on_a, on_b) {
        (true, true) => Classification::Contained,
        (true, false) | (false, true) => Classification::Asymptotic,
        (false, false) => {
            // Neither endpoint is on the circle, so the predicate cannot fail.
            let sep = separates(plane, a, b).expect("endpoints checked off circle");
            if sep {
                Classification::Transverse(interior::transverse_point(plane, geodesic))
            } else {
                Classification::Disjoint
            }
        }
    }
}
