//! Closed-form quantitative bounds: hyperbolic ball volume and sphere area,
//! the isoperimetric chain behind the filling-area inequality, the rank
//! constant, plane-ball area, curvature conversions, and the 2-dimensional
//! motivating formulas.

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::tol;

/// Margulis-constant estimate used as the default rank-constant input.
pub const MEYERHOFF_EPSILON: f64 = 0.104 / 10.0;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("NegativeRadius")]
    NegativeRadius,
    #[error("NonpositiveVolume")]
    NonpositiveVolume,
    #[error("NonpositiveEpsilon")]
    NonpositiveEpsilon,
    #[error("LambdaOutOfRange")]
    LambdaOutOfRange,
    #[error("GenusTooSmall")]
    GenusTooSmall,
    #[error("NonpositiveConstant")]
    NonpositiveConstant,
}

/// Volume of the hyperbolic ball of radius `r`:
/// `pi/2 (e^{2r} - e^{-2r} - 4r)`.
///
/// Below the series switch the exponential form cancels catastrophically,
/// so small radii use the expansion `pi [ (2r)^3/3! + (2r)^5/5! + (2r)^7/7! ]`
/// (relative truncation error below 1e-24 at the switch point).
pub fn ball_volume(r: f64) -> Result<f64, BoundsError> {
    if !(r >= 0.0) {
        return Err(BoundsError::NegativeRadius);
    }
    if r < tol::BALL_SERIES_SWITCH {
        let x = 2.0 * r;
        let x2 = x * x;
        return Ok(PI * (x * x2 / 6.0) * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0)));
    }
    // e^{2r} - e^{-2r} = 2 sinh 2r, evaluated through sinh to keep the
    // subtraction of 4r well conditioned at moderate radii.
    Ok(PI / 2.0 * (2.0 * (2.0 * r).sinh() - 4.0 * r))
}

/// Area of the sphere bounding that ball: `pi (e^{2r} + e^{-2r} - 2)`,
/// identically `4 pi sinh^2 r`.
pub fn sphere_area(r: f64) -> Result<f64, BoundsError> {
    if !(r >= 0.0) {
        return Err(BoundsError::NegativeRadius);
    }
    if r < tol::BALL_SERIES_SWITCH {
        // 2 cosh(2r) - 2 = (2r)^2 + (2r)^4/12 + (2r)^6/360 + ...
        let x2 = 4.0 * r * r;
        return Ok(PI * x2 * (1.0 + x2 / 12.0 * (1.0 + x2 / 30.0)));
    }
    Ok(PI * (2.0 * (2.0 * r).cosh() - 2.0))
}

/// Radius, volume and boundary area of a hyperbolic ball, bundled.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct BallGeometry {
    pub r: f64,
    pub volume: f64,
    pub boundary_area: f64,
}

impl BallGeometry {
    pub fn new(r: f64) -> Result<Self, BoundsError> {
        Ok(BallGeometry { r, volume: ball_volume(r)?, boundary_area: sphere_area(r)? })
    }
}

/// Invert the (strictly increasing) ball volume by bisection.
pub fn radius_for_volume(volume: f64) -> Result<f64, BoundsError> {
    if !(volume > 0.0) {
        return Err(BoundsError::NonpositiveVolume);
    }
    let mut hi = 1.0f64;
    while ball_volume(hi)? < volume {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(BoundsError::NonpositiveVolume);
        }
    }
    let mut lo = 0.0f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if ball_volume(mid)? < volume {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= tol::VOLUME_INVERSION * hi.max(1e-300) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The claimed strict lower bound on the area of a filling surface,
/// together with the evaluated comparison chain
/// `2 Area(S) >= Area(dB(r)) >= 2 Vol(B(r)) = 2 Vol(M)` at the radius with
/// `Vol(B(r)) = Vol(M)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AreaBoundReport {
    /// The bound itself: the manifold volume.
    pub bound: f64,
    pub ball_radius: f64,
    pub sphere_area_at_radius: f64,
    pub twice_volume: f64,
}

pub fn filling_area_bound(vol_m: f64) -> Result<AreaBoundReport, BoundsError> {
    if !(vol_m > 0.0) {
        return Err(BoundsError::NonpositiveVolume);
    }
    let r = radius_for_volume(vol_m)?;
    Ok(AreaBoundReport {
        bound: vol_m,
        ball_radius: r,
        sphere_area_at_radius: sphere_area(r)?,
        twice_volume: 2.0 * vol_m,
    })
}

/// The rank-inequality constant `V(1.25 eps) / V(0.25 eps)^2`.
pub fn rank_constant(epsilon: f64) -> Result<f64, BoundsError> {
    if !(epsilon > 0.0) {
        return Err(BoundsError::NonpositiveEpsilon);
    }
    let num = ball_volume(1.25 * epsilon)?;
    let den = ball_volume(0.25 * epsilon)?;
    Ok(num / (den * den))
}

/// Area bound for the intersection of a geodesic plane with a ball of
/// radius `d`: `4 pi sinh^2 d`.
pub fn plane_ball_area(d: f64) -> Result<f64, BoundsError> {
    if !(d >= 0.0) {
        return Err(BoundsError::NegativeRadius);
    }
    let s = d.sinh();
    Ok(4.0 * PI * s * s)
}

/// Quasi-Fuchsian distortion bound from the supremum principal curvature:
/// `1 + eps < (1 + lambda0) / (1 - lambda0)`, valid for `lambda0` in `[0, 1)`.
pub fn qf_from_curvature(lambda0: f64) -> Result<f64, BoundsError> {
    if !(0.0..1.0).contains(&lambda0) {
        return Err(BoundsError::LambdaOutOfRange);
    }
    Ok((1.0 + lambda0) / (1.0 - lambda0))
}

/// Principal curvature bound from the quasi-Fuchsian excess:
/// `C log(1 + eps)` (which is at most `C eps`).
pub fn curvature_bound(epsilon: f64, c: f64) -> Result<f64, BoundsError> {
    if !(epsilon >= 0.0) {
        return Err(BoundsError::NonpositiveEpsilon);
    }
    if !(c > 0.0) {
        return Err(BoundsError::NonpositiveConstant);
    }
    Ok(c * (1.0 + epsilon).ln())
}

/// Quasi-Fuchsian excess and curvature data for the conversions above.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QfCurvature {
    pub epsilon: f64,
    pub lambda0: f64,
    /// Universal constant of the curvature estimate; supplied by the
    /// caller, no default is known.
    pub c: f64,
}

/// Area and minimal filling-geodesic length of a closed genus-`g`
/// hyperbolic surface: `(4 pi (g-1), 2 pi (g-1))`.
pub fn surface_formulas(genus: u32) -> Result<(f64, f64), BoundsError> {
    if genus < 2 {
        return Err(BoundsError::GenusTooSmall);
    }
    let gm1 = f64::from(genus - 1);
    Ok((4.0 * PI * gm1, 2.0 * PI * gm1))
}

/// Area and perimeter of the hyperbolic disk of radius `r`:
/// `(2 pi (cosh r - 1), 2 pi sinh r)`.
pub fn disk2d(r: f64) -> Result<(f64, f64), BoundsError> {
    if !(r >= 0.0) {
        return Err(BoundsError::NegativeRadius);
    }
    // cosh r - 1 = 2 sinh^2(r/2) avoids cancellation near zero.
    let h = (r / 2.0).sinh();
    Ok((4.0 * PI * h * h, 2.0 * PI * r.sinh()))
}
