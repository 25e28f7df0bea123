//! Interior points of the upper half space, the distance formula, Dirichlet
//! bisector planes, and geodesic parametrization between interior points.

use num_complex::Complex64;

use super::{BoundaryPoint, GeodesicLine, GeodesicPlane, Hyp3Error};
use crate::tol;

/// A point of the upper half space: horizontal coordinate `z`, height `t > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UhsPoint {
    z: Complex64,
    t: f64,
}

impl UhsPoint {
    pub fn new(z: Complex64, t: f64) -> Result<Self, Hyp3Error> {
        if !(t > 0.0) || !z.is_finite() || !t.is_finite() {
            return Err(Hyp3Error::DegenerateInput);
        }
        Ok(UhsPoint { z, t })
    }

    pub fn from_coords(x: f64, y: f64, t: f64) -> Result<Self, Hyp3Error> {
        Self::new(Complex64::new(x, y), t)
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

/// Hyperbolic distance via `cosh d = 1 + (|dz|^2 + dt^2) / (2 t1 t2)`.
pub fn hyp_distance(p: &UhsPoint, q: &UhsPoint) -> f64 {
    let dz = p.z - q.z;
    let dt = p.t - q.t;
    let cosh_d = 1.0 + (dz.norm_sqr() + dt * dt) / (2.0 * p.t * q.t);
    cosh_d.acosh()
}

/// The equidistant plane between two distinct interior points, the face
/// construction for Dirichlet domains.
///
/// Setting the two distance expressions equal and clearing denominators
/// leaves `|z - c|^2 + t^2 = r^2` (a hemisphere) when the heights differ,
/// and the Euclidean perpendicular bisector (a vertical plane) when they
/// agree.
pub fn bisector_plane(p: &UhsPoint, q: &UhsPoint) -> Result<GeodesicPlane, Hyp3Error> {
    if hyp_distance(p, q) <= tol::INCIDENCE {
        return Err(Hyp3Error::CoincidentPoints);
    }
    let dt = q.t - p.t;
    if dt.abs() <= f64::EPSILON * (p.t + q.t) {
        let mid = (p.z + q.z) / 2.0;
        let dir = Complex64::new(0.0, 1.0) * (q.z - p.z);
        return GeodesicPlane::line(mid, dir);
    }
    let center = (q.t * p.z - p.t * q.z) / dt;
    let e = (q.t * p.z.norm_sqr() - p.t * q.z.norm_sqr() - p.t * q.t * dt) / dt;
    let r2 = center.norm_sqr() - e;
    if !(r2 > 0.0) {
        return Err(Hyp3Error::DegenerateInput);
    }
    GeodesicPlane::circle(center, r2.sqrt())
}

/// Horizontal direction and section coordinates for the geodesic through
/// two interior points with distinct horizontal positions: the semicircle
/// sits in the vertical plane through both, over the real axis coordinate
/// `x` with `x = 0` at `p`.
struct Section {
    origin: Complex64,
    dir: Complex64,
    center_x: f64,
    radius: f64,
}

fn section(p: &UhsPoint, q: &UhsPoint) -> Option<Section> {
    let d = q.z - p.z;
    let len = d.norm();
    if len <= tol::INCIDENCE * (1.0 + p.z.norm().max(q.z.norm())) {
        return None; // vertical geodesic
    }
    let dir = d / len;
    let xq = len;
    let center_x = (xq * xq + q.t * q.t - p.t * p.t) / (2.0 * xq);
    let radius = (center_x * center_x + p.t * p.t).sqrt();
    Some(Section { origin: p.z, dir, center_x, radius })
}

/// The full geodesic through two distinct interior points, by its ideal
/// endpoints.
pub fn geodesic_between(p: &UhsPoint, q: &UhsPoint) -> Result<GeodesicLine, Hyp3Error> {
    if hyp_distance(p, q) <= tol::INCIDENCE {
        return Err(Hyp3Error::DegenerateInput);
    }
    match section(p, q) {
        None => GeodesicLine::new(BoundaryPoint::Finite(p.z), BoundaryPoint::Infinity),
        Some(s) => {
            let e1 = s.origin + s.dir * (s.center_x - s.radius);
            let e2 = s.origin + s.dir * (s.center_x + s.radius);
            GeodesicLine::new(BoundaryPoint::Finite(e1), BoundaryPoint::Finite(e2))
        }
    }
}

/// Point at arclength fraction `u` in `[0, 1]` along the geodesic segment
/// from `p` to `q`.
pub fn point_along(p: &UhsPoint, q: &UhsPoint, u: f64) -> UhsPoint {
    match section(p, q) {
        None => {
            // Vertical segment: heights interpolate geometrically.
            let t = p.t.powf(1.0 - u) * q.t.powf(u);
            UhsPoint { z: p.z, t }
        }
        Some(s) => {
            let theta_p = p.t.atan2(-s.center_x);
            let theta_q = q.t.atan2(s.dir.norm() * (q.z - p.z).norm() - s.center_x);
            // Arclength along the semicircle is log tan(theta/2).
            let sig_p = (theta_p / 2.0).tan().ln();
            let sig_q = (theta_q / 2.0).tan().ln();
            let sig = sig_p + u * (sig_q - sig_p);
            let theta = 2.0 * sig.exp().atan();
            let x = s.center_x + s.radius * theta.cos();
            let t = s.radius * theta.sin();
            UhsPoint { z: s.origin + s.dir * x, t }
        }
    }
}

/// Euclidean tangent 3-vector `(vx, vy, vt)` of the oriented segment at the
/// point `point_along(p, q, u)`. Not unit length in the hyperbolic metric;
/// callers only use its direction.
pub fn tangent_along(p: &UhsPoint, q: &UhsPoint, u: f64) -> [f64; 3] {
    match section(p, q) {
        None => [0.0, 0.0, (q.t - p.t).signum()],
        Some(s) => {
            let theta_p = p.t.atan2(-s.center_x);
            let theta_q = q.t.atan2((q.z - p.z).norm() - s.center_x);
            let sig_p = (theta_p / 2.0).tan().ln();
            let sig_q = (theta_q / 2.0).tan().ln();
            let sig = sig_p + u * (sig_q - sig_p);
            let theta = 2.0 * sig.exp().atan();
            let sign = (sig_q - sig_p).signum();
            let horiz = s.dir * (-theta.sin()) * sign;
            [horiz.re, horiz.im, theta.cos() * sign]
        }
    }
}

/// The geodesic plane through an interior point with prescribed Euclidean
/// unit normal. The metric is conformal, so Euclidean orthogonality at the
/// point is hyperbolic orthogonality.
pub fn plane_with_normal(at: &UhsPoint, normal: [f64; 3]) -> Result<GeodesicPlane, Hyp3Error> {
    let n = (normal[0] * normal[0] + normal[1] * normal[1] + normal[2] * normal[2]).sqrt();
    if n <= tol::INCIDENCE {
        return Err(Hyp3Error::DegenerateInput);
    }
    let h = Complex64::new(normal[0] / n, normal[1] / n);
    let vt = normal[2] / n;
    if vt.abs() <= tol::INCIDENCE {
        // Vertical plane: boundary line through z perpendicular to the
        // horizontal normal.
        return GeodesicPlane::line(at.z, h * Complex64::new(0.0, 1.0));
    }
    // Hemisphere whose Euclidean normal (z - c, t) at the point is parallel
    // to the requested normal.
    let center = at.z - h * (at.t / vt);
    let radius = at.t / vt.abs() * (h.norm_sqr() + vt * vt).sqrt();
    GeodesicPlane::circle(center, radius)
}

/// Interior intersection point of a plane and a geodesic known to be
/// transverse (the boundary circle separates the endpoints).
pub(super) fn transverse_point(plane: &GeodesicPlane, geodesic: &GeodesicLine) -> UhsPoint {
    let (a, b) = geodesic.endpoints();
    match (a, b) {
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(z0))
        | (BoundaryPoint::Finite(z0), BoundaryPoint::Infinity) => match plane {
            GeodesicPlane::Circle { center, radius } => {
                let d2 = (z0 - center).norm_sqr();
                UhsPoint { z: z0, t: (radius * radius - d2).sqrt() }
            }
            // A vertical geodesic and a vertical plane share the endpoint
            // at infinity, so they are never transverse.
            GeodesicPlane::Line { .. } => unreachable!("line plane has infinity on its circle"),
        },
        (BoundaryPoint::Finite(e1), BoundaryPoint::Finite(e2)) => {
            let m = (e1 + e2) / 2.0;
            let rho = (e1 - e2).norm() / 2.0;
            let u = (e1 - m) / rho;
            let cos_s = match plane {
                GeodesicPlane::Circle { center, radius } => {
                    let w = m - center;
                    let denom = 2.0 * rho * (w.conj() * u).re;
                    (radius * radius - w.norm_sqr() - rho * rho) / denom
                }
                GeodesicPlane::Line { point, direction } => {
                    let cross_m = (direction.conj() * (m - point)).im;
                    let cross_u = (direction.conj() * u).im;
                    -cross_m / (rho * cross_u)
                }
            };
            let sin_s = (1.0 - cos_s * cos_s).max(0.0).sqrt();
            UhsPoint { z: m + u * (rho * cos_s), t: rho * sin_s }
        }
        _ => unreachable!("geodesic endpoints are distinct"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64, t: f64) -> UhsPoint {
        UhsPoint::from_coords(x, y, t).unwrap()
    }

    #[test]
    fn vertical_distance_is_log_of_height_ratio() {
        let d = hyp_distance(&pt(0.0, 0.0, 1.0), &pt(0.0, 0.0, std::f64::consts::E));
        assert!((d - 1.0).abs() < 1e-12);
    }

    #[test]
    fn distance_vanishes_on_equal_points() {
        assert_eq!(hyp_distance(&pt(0.0, 0.0, 1.0), &pt(0.0, 0.0, 1.0)), 0.0);
    }

    #[test]
    fn unit_horizontal_step_matches_arccosh() {
        // cosh d = 1.5, cross-checked against Mobius invariance under
        // z -> z + 1.
        let d = hyp_distance(&pt(1.0, 0.0, 1.0), &pt(0.0, 0.0, 1.0));
        assert!((d - 1.5f64.acosh()).abs() < 1e-12);
        assert!((d - 0.9624236501192069).abs() < 1e-10);
        let d2 = hyp_distance(&pt(2.0, 0.0, 1.0), &pt(1.0, 0.0, 1.0));
        assert!((d - d2).abs() < 1e-12);
    }

    #[test]
    fn bisector_of_vertical_pair_is_hemisphere_at_geometric_mean() {
        let p = bisector_plane(&pt(0.0, 0.0, 1.0), &pt(0.0, 0.0, 4.0)).unwrap();
        match p {
            GeodesicPlane::Circle { center, radius } => {
                assert!(center.norm() < 1e-12);
                assert!((radius - 2.0).abs() < 1e-12);
            }
            _ => panic!("expected circle"),
        }
    }

    #[test]
    fn bisector_of_equal_heights_is_vertical_plane() {
        let p = bisector_plane(&pt(0.0, 0.0, 1.0), &pt(2.0, 0.0, 1.0)).unwrap();
        assert_eq!(
            p,
            GeodesicPlane::line(Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)).unwrap()
        );
    }

    #[test]
    fn bisector_rejects_coincident_points() {
        let e = bisector_plane(&pt(0.0, 0.0, 1.0), &pt(0.0, 0.0, 1.0 + 1e-12));
        assert_eq!(e, Err(Hyp3Error::CoincidentPoints));
    }

    #[test]
    fn bisector_is_symmetric() {
        let a = pt(0.3, -0.4, 0.7);
        let b = pt(-1.1, 0.2, 2.3);
        assert_eq!(bisector_plane(&a, &b).unwrap(), bisector_plane(&b, &a).unwrap());
    }

    #[test]
    fn bisector_is_equidistant_on_sampled_points() {
        // Sample 20 points on the returned plane and compare distances.
        let p = pt(0.2, 0.1, 1.0);
        let q = pt(-0.5, 0.8, 2.5);
        let plane = bisector_plane(&p, &q).unwrap();
        for i in 0..20 {
            let x = sample_on_plane(&plane, i);
            let dp = hyp_distance(&x, &p);
            let dq = hyp_distance(&x, &q);
            assert!(
                (dp - dq).abs() < 1e-8,
                "sample {i}: |{dp} - {dq}| too large"
            );
        }
    }

    fn sample_on_plane(plane: &GeodesicPlane, i: usize) -> UhsPoint {
        match plane {
            GeodesicPlane::Circle { center, radius } => {
                let ang = 0.3 + 0.25 * i as f64;
                let frac = 0.15 + 0.04 * (i % 17) as f64;
                let rho = radius * frac;
                let z = center + Complex64::from_polar(rho, ang);
                UhsPoint { z, t: (radius * radius - rho * rho).sqrt() }
            }
            GeodesicPlane::Line { point, direction } => {
                let s = -2.0 + 0.21 * i as f64;
                UhsPoint { z: point + direction * s, t: 0.5 + 0.1 * i as f64 }
            }
        }
    }

    #[test]
    fn point_along_interpolates_endpoints_and_distance() {
        let p = pt(1.0, -0.5, 0.8);
        let q = pt(-2.0, 1.5, 1.7);
        let a = point_along(&p, &q, 0.0);
        let b = point_along(&p, &q, 1.0);
        assert!(hyp_distance(&a, &p) < 1e-9);
        assert!(hyp_distance(&b, &q) < 1e-9);
        let mid = point_along(&p, &q, 0.5);
        let total = hyp_distance(&p, &q);
        assert!((hyp_distance(&p, &mid) - total / 2.0).abs() < 1e-9);
        assert!((hyp_distance(&mid, &q) - total / 2.0).abs() < 1e-9);
    }

    #[test]
    fn geodesic_between_vertical_points() {
        let g = geodesic_between(&pt(0.0, 0.0, 1.0), &pt(0.0, 0.0, 2.0)).unwrap();
        let (a, b) = g.endpoints();
        assert!(a.is_infinity() || b.is_infinity());
    }

    #[test]
    fn plane_with_vertical_normal_is_horizontal_hemisphere() {
        // Normal straight up at (0, 0, 2): hemisphere centered at 0 with
        // radius 2.
        let plane = plane_with_normal(&pt(0.0, 0.0, 2.0), [0.0, 0.0, 1.0]).unwrap();
        match plane {
            GeodesicPlane::Circle { center, radius } => {
                assert!(center.norm() < 1e-12);
                assert!((radius - 2.0).abs() < 1e-12);
            }
            _ => panic!("expected circle"),
        }
    }

    #[test]
    fn plane_with_horizontal_normal_is_vertical() {
        let plane = plane_with_normal(&pt(1.0, 2.0, 0.5), [1.0, 0.0, 0.0]).unwrap();
        match plane {
            GeodesicPlane::Line { .. } => {}
            _ => panic!("expected line"),
        }
    }
}
