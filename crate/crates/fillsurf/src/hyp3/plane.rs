//! Geodesic planes recorded by their boundary circles, the separation
//! predicate, and the circumcircle construction.

use num_complex::Complex64;

use super::mobius::{mobius_apply, MobiusMap};
use super::{BoundaryPoint, Hyp3Error};
use crate::tol;

/// A totally geodesic plane, as its boundary circle on the extended plane.
///
/// `Line` is a circle through infinity. Lines carry a canonical orientation
/// (direction with nonnegative imaginary part, ties broken by positive real
/// part) and a canonical base point (the foot of the perpendicular from the
/// origin), so equal planes compare equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicPlane {
    Circle { center: Complex64, radius: f64 },
    Line { point: Complex64, direction: Complex64 },
}

impl GeodesicPlane {
    pub fn circle(center: Complex64, radius: f64) -> Result<Self, Hyp3Error> {
        if !(radius > 0.0) || !center.is_finite() {
            return Err(Hyp3Error::DegenerateInput);
        }
        Ok(GeodesicPlane::Circle { center, radius })
    }

    pub fn line(point: Complex64, direction: Complex64) -> Result<Self, Hyp3Error> {
        if direction.norm() <= tol::INCIDENCE || !point.is_finite() {
            return Err(Hyp3Error::DegenerateInput);
        }
        let mut dir = direction / direction.norm();
        if dir.im < -tol::INCIDENCE || (dir.im.abs() <= tol::INCIDENCE && dir.re < 0.0) {
            dir = -dir;
        }
        // Base the line at the foot of the perpendicular from the origin.
        let foot = point - dir * (dir.conj() * point).re;
        Ok(GeodesicPlane::Line { point: foot, direction: dir })
    }

    /// Signed offset of a finite point from the boundary circle: positive
    /// outside a `Circle` (infinity is outside every circle), zero on the
    /// circle; for a `Line`, the signed cross product with the direction
    /// (infinity lies on every line's circle).
    pub fn side(&self, p: BoundaryPoint) -> f64 {
        match (self, p) {
            (GeodesicPlane::Circle { .. }, BoundaryPoint::Infinity) => f64::INFINITY,
            (GeodesicPlane::Circle { center, radius }, BoundaryPoint::Finite(z)) => {
                (z - center).norm() - radius
            }
            (GeodesicPlane::Line { .. }, BoundaryPoint::Infinity) => 0.0,
            (GeodesicPlane::Line { point, direction }, BoundaryPoint::Finite(z)) => {
                (direction.conj() * (z - point)).im
            }
        }
    }

    pub fn is_on_circle(&self, p: BoundaryPoint) -> bool {
        let s = self.side(p);
        s.is_finite() && s.abs() <= tol::INCIDENCE
    }
}

/// True when the two boundary points lie in different components of the
/// complement of the plane's boundary circle.
///
/// Errors with [`Hyp3Error::OnCircle`] when either point is within the
/// incidence tolerance of the circle; in particular a `Line` rejects
/// infinity, which sits on its circle.
pub fn separates(
    plane: &GeodesicPlane,
    p: BoundaryPoint,
    q: BoundaryPoint,
) -> Result<bool, Hyp3Error> {
    let sp = plane.side(p);
    let sq = plane.side(q);
    if (sp.is_finite() && sp.abs() <= tol::INCIDENCE) || (sq.is_finite() && sq.abs() <= tol::INCIDENCE)
    {
        return Err(Hyp3Error::OnCircle);
    }
    Ok(sp.signum() != sq.signum())
}

/// The geodesic plane whose boundary circle passes through three pairwise
/// distinct boundary points.
pub fn plane_through(
    p1: BoundaryPoint,
    p2: BoundaryPoint,
    p3: BoundaryPoint,
) -> Result<GeodesicPlane, Hyp3Error> {
    use super::chordal_distance;
    if chordal_distance(p1, p2) <= tol::INCIDENCE
        || chordal_distance(p1, p3) <= tol::INCIDENCE
        || chordal_distance(p2, p3) <= tol::INCIDENCE
    {
        return Err(Hyp3Error::DegenerateInput);
    }
    // A point at infinity forces a line through the two finite points.
    let finite = |p: BoundaryPoint| match p {
        BoundaryPoint::Finite(z) => Some(z),
        BoundaryPoint::Infinity => None,
    };
    match (finite(p1), finite(p2), finite(p3)) {
        (None, Some(a), Some(b)) | (Some(a), None, Some(b)) | (Some(a), Some(b), None) => {
            GeodesicPlane::line(a, b - a)
        }
        (Some(a), Some(b), Some(c)) => circumcircle(a, b, c),
        _ => unreachable!("at most one point can be infinity after the distinctness check"),
    }
}

fn circumcircle(a: Complex64, b: Complex64, c: Complex64) -> Result<GeodesicPlane, Hyp3Error> {
    let u = b - a;
    let v = c - a;
    let cross = (u.conj() * v).im;
    let scale = u.norm().max(v.norm());
    if cross.abs() <= tol::INCIDENCE * scale * scale {
        // Collinear: the circle degenerates to a line.
        return GeodesicPlane::line(a, u);
    }
    let d = 2.0 * (a.re * (b.im - c.im) + b.re * (c.im - a.im) + c.re * (a.im - b.im));
    let na = a.norm_sqr();
    let nb = b.norm_sqr();
    let nc = c.norm_sqr();
    let ux = (na * (b.im - c.im) + nb * (c.im - a.im) + nc * (a.im - b.im)) / d;
    let uy = (na * (c.re - b.re) + nb * (a.re - c.re) + nc * (b.re - a.re)) / d;
    let center = Complex64::new(ux, uy);
    GeodesicPlane::circle(center, (a - center).norm())
}

/// Image of a plane under a Möbius map, computed by transporting three
/// sample points of the boundary circle.
pub fn transform_plane(g: &MobiusMap, plane: &GeodesicPlane) -> Result<GeodesicPlane, Hyp3Error> {
    let samples: [BoundaryPoint; 3] = match plane {
        GeodesicPlane::Circle { center, radius } => [
            BoundaryPoint::Finite(center + Complex64::new(*radius, 0.0)),
            BoundaryPoint::Finite(center + Complex64::new(0.0, *radius)),
            BoundaryPoint::Finite(center - Complex64::new(*radius, 0.0)),
        ],
        GeodesicPlane::Line { point, direction } => [
            BoundaryPoint::Finite(*point),
            BoundaryPoint::Finite(point + direction),
            BoundaryPoint::Infinity,
        ],
    };
    plane_through(
        mobius_apply(g, samples[0]),
        mobius_apply(g, samples[1]),
        mobius_apply(g, samples[2]),
    )
}
