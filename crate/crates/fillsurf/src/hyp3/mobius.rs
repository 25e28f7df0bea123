//! Möbius transformations of the extended complex plane, i.e. the boundary
//! action of orientation-preserving isometries of hyperbolic 3-space.

use num_complex::Complex64;

use super::{BoundaryPoint, Hyp3Error};
use crate::tol;

/// A 2x2 complex matrix acting by `z -> (az+b)/(cz+d)`.
///
/// Stored normalized to determinant one with a canonical sign (the first
/// entry of `(a, b, c, d)` that is nonzero has nonnegative real part, with
/// positive imaginary part breaking ties), so maps identified up to a
/// global sign compare equal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MobiusMap {
    /// Normalize a matrix with nonzero determinant.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self, Hyp3Error> {
        let det = a * d - b * c;
        if det.norm() <= tol::INCIDENCE {
            return Err(Hyp3Error::DegenerateInput);
        }
        let s = det.sqrt();
        let mut m = MobiusMap { a: a / s, b: b / s, c: c / s, d: d / s };
        m.canonicalize_sign();
        Ok(m)
    }

    pub fn from_reals(a: f64, b: f64, c: f64, d: f64) -> Result<Self, Hyp3Error> {
        Self::new(
            Complex64::new(a, 0.0),
            Complex64::new(b, 0.0),
            Complex64::new(c, 0.0),
            Complex64::new(d, 0.0),
        )
    }

    pub fn identity() -> Self {
        MobiusMap {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn entries(&self) -> (Complex64, Complex64, Complex64, Complex64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    fn canonicalize_sign(&mut self) {
        for w in [self.a, self.b, self.c, self.d] {
            if w.norm() > tol::INCIDENCE {
                let flip = w.re < -tol::INCIDENCE
                    || (w.re.abs() <= tol::INCIDENCE && w.im < 0.0);
                if flip {
                    self.a = -self.a;
                    self.b = -self.b;
                    self.c = -self.c;
                    self.d = -self.d;
                }
                return;
            }
        }
    }

    pub fn inverse(&self) -> Self {
        // det is 1, so the adjugate is the inverse; renormalize the sign.
        let mut m = MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a };
        m.canonicalize_sign();
        m
    }
}

/// Apply a Möbius map to a boundary point. Total on the extended plane:
/// infinity maps to `a/c`, and a pole of the denominator maps to infinity.
pub fn mobius_apply(g: &MobiusMap, p: BoundaryPoint) -> BoundaryPoint {
    let (a, b, c, d) = g.entries();
    match p {
        BoundaryPoint::Infinity => {
            if c.norm() == 0.0 {
                BoundaryPoint::Infinity
            } else {
                BoundaryPoint::Finite(a / c)
            }
        }
        BoundaryPoint::Finite(z) => {
            let den = c * z + d;
            if den.norm() == 0.0 {
                BoundaryPoint::Infinity
            } else {
                BoundaryPoint::Finite((a * z + b) / den)
            }
        }
    }
}

/// Matrix product, renormalized.
pub fn mobius_compose(g: &MobiusMap, h: &MobiusMap) -> MobiusMap {
    let (a, b, c, d) = g.entries();
    let (p, q, r, s) = h.entries();
    MobiusMap::new(a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s)
        .expect("product of unimodular matrices is unimodular")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyp3::chordal_distance;
    use rand::Rng;

    fn z(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_fixes_points() {
        let g = MobiusMap::identity();
        let p = BoundaryPoint::finite(3.0, 4.0);
        assert_eq!(mobius_apply(&g, p), p);
    }

    #[test]
    fn inversion_evaluates_by_hand() {
        // z -> -1/z, hand evaluation at z = 2 gives -1/2.
        let g = MobiusMap::from_reals(0.0, -1.0, 1.0, 0.0).unwrap();
        match mobius_apply(&g, BoundaryPoint::finite(2.0, 0.0)) {
            BoundaryPoint::Finite(w) => assert!((w - z(-0.5, 0.0)).norm() < 1e-12),
            _ => panic!(),
        }
        assert!(mobius_apply(&g, BoundaryPoint::finite(0.0, 0.0)).is_infinity());
        assert_eq!(
            mobius_apply(&g, BoundaryPoint::Infinity),
            BoundaryPoint::finite(0.0, 0.0)
        );
    }

    #[test]
    fn inversion_is_an_involution() {
        let g = MobiusMap::from_reals(0.0, -1.0, 1.0, 0.0).unwrap();
        assert_eq!(mobius_compose(&g, &g), MobiusMap::identity());
    }

    fn close(g: &MobiusMap, h: &MobiusMap) -> bool {
        let (a, b, c, d) = g.entries();
        let (p, q, r, s) = h.entries();
        (a - p).norm() < 1e-12 && (b - q).norm() < 1e-12 && (c - r).norm() < 1e-12
            && (d - s).norm() < 1e-12
    }

    #[test]
    fn compose_with_identity() {
        let g = MobiusMap::new(z(1.0, 2.0), z(0.5, 0.0), z(0.0, 1.0), z(2.0, -1.0)).unwrap();
        assert!(close(&mobius_compose(&g, &MobiusMap::identity()), &g));
        assert!(close(&mobius_compose(&MobiusMap::identity(), &g), &g));
    }

    #[test]
    fn normalization_has_unit_determinant() {
        let g = MobiusMap::new(z(3.0, 1.0), z(-2.0, 0.4), z(0.1, 0.0), z(1.0, 1.0)).unwrap();
        assert!((g.det() - z(1.0, 0.0)).norm() <= 1e-9);
    }

    #[test]
    fn sign_canonicalization_identifies_plus_minus() {
        let g = MobiusMap::new(z(1.0, 2.0), z(0.5, 0.0), z(0.0, 1.0), z(2.0, -1.0)).unwrap();
        let h = MobiusMap::new(z(-1.0, -2.0), z(-0.5, 0.0), z(0.0, -1.0), z(-2.0, 1.0)).unwrap();
        let (ga, gb, gc, gd) = g.entries();
        let (ha, hb, hc, hd) = h.entries();
        assert!((ga - ha).norm() < 1e-12);
        assert!((gb - hb).norm() < 1e-12);
        assert!((gc - hc).norm() < 1e-12);
        assert!((gd - hd).norm() < 1e-12);
    }

    #[test]
    fn composition_acts_as_homomorphism_on_samples() {
        // apply(compose(g,h), p) = apply(g, apply(h,p)) on random points.
        let mut rng = crate::rngs::trial_rng(11, 0);
        for _ in 0..100 {
            let mut c = || z(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let (g, h) = loop {
                let (g, h) = (MobiusMap::new(c(), c(), c(), c()), MobiusMap::new(c(), c(), c(), c()));
                if let (Ok(g), Ok(h)) = (g, h) {
                    break (g, h);
                }
            };
            let p = BoundaryPoint::Finite(c());
            let lhs = mobius_apply(&mobius_compose(&g, &h), p);
            let rhs = mobius_apply(&g, mobius_apply(&h, p));
            assert!(chordal_distance(lhs, rhs) < 1e-8);
        }
    }
}
