//! The six closed orientable flat 3-manifolds as Bieberbach groups, plus
//! the hexagonal torus that covers the twisted hexagonal ones.

use serde::{Deserialize, Serialize};

use super::scalar::{Mat3K, QSqrt3, Rational, Vec3K};
use super::FlatError;

/// Euclidean isometry `x -> R x + t` with exact entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Isometry {
    pub rotation: Mat3K,
    pub translation: Vec3K,
}

impl Isometry {
    pub fn new(rotation: Mat3K, translation: Vec3K) -> Self {
        Isometry { rotation, translation }
    }

    pub fn translation_only(t: Vec3K) -> Self {
        Isometry { rotation: Mat3K::identity(), translation: t }
    }

    pub fn apply(&self, x: &Vec3K) -> Vec3K {
        self.rotation.mul_vec(x) + self.translation
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            rotation: self.rotation.mul_mat(&other.rotation),
            translation: self.rotation.mul_vec(&other.translation) + self.translation,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FlatManifoldId {
    /// The 3-torus: opposite faces of a cube glued by translations.
    M1,
    /// Cube with a half twist on one pair of faces.
    M2,
    /// Cube with a quarter twist on one pair of faces.
    M3,
    /// Hexagonal prism with a one-third twist on the hexagonal faces.
    M4,
    /// Hexagonal prism with a one-sixth twist on the hexagonal faces.
    M5,
    /// The Hantzsche-Wendt manifold.
    M6,
    /// The hexagonal 3-torus covering M4 and M5.
    HexTorus,
}

impl FlatManifoldId {
    pub const ALL: [FlatManifoldId; 7] = [
        FlatManifoldId::M1,
        FlatManifoldId::M2,
        FlatManifoldId::M3,
        FlatManifoldId::M4,
        FlatManifoldId::M5,
        FlatManifoldId::M6,
        FlatManifoldId::HexTorus,
    ];

    pub fn parse(s: &str) -> Option<FlatManifoldId> {
        match s {
            "M1" | "m1" => Some(FlatManifoldId::M1),
            "M2" | "m2" => Some(FlatManifoldId::M2),
            "M3" | "m3" => Some(FlatManifoldId::M3),
            "M4" | "m4" => Some(FlatManifoldId::M4),
            "M5" | "m5" => Some(FlatManifoldId::M5),
            "M6" | "m6" => Some(FlatManifoldId::M6),
            "HexTorus" | "hextorus" | "hex" => Some(FlatManifoldId::HexTorus),
            _ => None,
        }
    }
}

/// A Bieberbach group: a full-rank translation lattice together with
/// generating isometries whose rotation parts close into a finite point
/// group preserving the lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatManifold {
    pub id: FlatManifoldId,
    /// Basis vectors of the translation lattice.
    pub lattice: [Vec3K; 3],
    pub generators: Vec<Isometry>,
}

impl FlatManifold {
    pub fn new(
        id: FlatManifoldId,
        lattice: [Vec3K; 3],
        generators: Vec<Isometry>,
    ) -> Result<Self, FlatError> {
        let m = FlatManifold { id, lattice, generators };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), FlatError> {
        let basis = self.basis_matrix();
        if basis.det().is_zero() {
            return Err(FlatError::InvalidManifold("degenerate lattice".into()));
        }
        let basis_inv = basis.inverse();
        for g in &self.generators {
            if !g.rotation.is_orthogonal() || g.rotation.det() != QSqrt3::one() {
                return Err(FlatError::InvalidManifold(
                    "generator rotation is not special orthogonal".into(),
                ));
            }
            // The rotation must permute the lattice: B^-1 R B integral.
            let coords = basis_inv.mul_mat(&g.rotation.mul_mat(&basis));
            for row in coords.0 {
                for e in row {
                    let Some(r) = e.as_rational() else {
                        return Err(FlatError::InvalidManifold(
                            "rotation does not preserve the lattice".into(),
                        ));
                    };
                    if !r.is_integer() {
                        return Err(FlatError::InvalidManifold(
                            "rotation does not preserve the lattice".into(),
                        ));
                    }
                }
            }
        }
        // The point group must close; coset_reps errors if it does not.
        self.coset_reps()?;
        Ok(())
    }

    /// Lattice basis as the columns of a matrix.
    pub fn basis_matrix(&self) -> Mat3K {
        Mat3K::from_rows(self.lattice[0], self.lattice[1], self.lattice[2]).transpose()
    }

    /// Reduce a translation into the fundamental cell `[0,1)^3` of lattice
    /// coordinates.
    fn reduce_translation(&self, t: &Vec3K) -> Vec3K {
        let coords = self.basis_matrix().inverse().mul_vec(t);
        let mut frac = [QSqrt3::zero(); 3];
        for (i, c) in coords.0.iter().enumerate() {
            frac[i] = *c - QSqrt3::from_int(c.floor());
        }
        self.basis_matrix().mul_vec(&Vec3K(frac))
    }

    /// Coset representatives of the group modulo its translation lattice,
    /// one isometry per point-group element. Breadth-first closure over the
    /// generators; errors if more than 24 cosets appear (the point group of
    /// a Bieberbach group here is tiny, so that means invalid input).
    pub fn coset_reps(&self) -> Result<Vec<Isometry>, FlatError> {
        let mut reps: Vec<Isometry> =
            vec![Isometry::translation_only(Vec3K::zero())];
        let mut frontier = reps.clone();
        while let Some(g) = frontier.pop() {
            for gen in &self.generators {
                let h = gen.compose(&g);
                let h = Isometry::new(h.rotation, self.reduce_translation(&h.translation));
                if !reps.contains(&h) {
                    if reps.len() >= 24 {
                        return Err(FlatError::InvalidManifold(
                            "point group does not close".into(),
                        ));
                    }
                    reps.push(h);
                    frontier.push(h);
                }
            }
        }
        Ok(reps)
    }

    pub fn point_group_order(&self) -> usize {
        let mut rotations: Vec<Mat3K> = Vec::new();
        for rep in self.coset_reps().expect("validated on construction") {
            if !rotations.contains(&rep.rotation) {
                rotations.push(rep.rotation);
            }
        }
        rotations.len()
    }
}

fn q(n: i64, d: i64) -> QSqrt3 {
    QSqrt3::new(Rational::new(n, d), Rational::zero())
}

fn s3(n: i64, d: i64) -> QSqrt3 {
    QSqrt3::new(Rational::zero(), Rational::new(n, d))
}

fn vec_q(x: QSqrt3, y: QSqrt3, z: QSqrt3) -> Vec3K {
    Vec3K([x, y, z])
}

/// Rotation by `angle` around the z axis, for the angles exact in
/// `Q[sqrt 3]`: multiples of 30 degrees with rational cosine/sine pairs.
fn rot_z(cos: QSqrt3, sin: QSqrt3) -> Mat3K {
    Mat3K([
        [cos, -sin, QSqrt3::zero()],
        [sin, cos, QSqrt3::zero()],
        [QSqrt3::zero(), QSqrt3::zero(), QSqrt3::one()],
    ])
}

fn diag(x: i64, y: i64, z: i64) -> Mat3K {
    Mat3K([
        [QSqrt3::from_int(x), QSqrt3::zero(), QSqrt3::zero()],
        [QSqrt3::zero(), QSqrt3::from_int(y), QSqrt3::zero()],
        [QSqrt3::zero(), QSqrt3::zero(), QSqrt3::from_int(z)],
    ])
}

/// Hexagonal lattice basis in the plane: `(1,0,0)` and `(1/2, sqrt3/2, 0)`.
fn hex_basis() -> (Vec3K, Vec3K) {
    (
        Vec3K::from_ints(1, 0, 0),
        vec_q(q(1, 2), s3(1, 2), QSqrt3::zero()),
    )
}

/// Build one of the standard flat manifolds.
pub fn flat_manifold(id: FlatManifoldId) -> FlatManifold {
    use FlatManifoldId::*;
    let e1 = Vec3K::from_ints(1, 0, 0);
    let e2 = Vec3K::from_ints(0, 1, 0);
    let e3 = Vec3K::from_ints(0, 0, 1);
    let t = Isometry::translation_only;
    let m = match id {
        M1 => FlatManifold::new(id, [e1, e2, e3], vec![t(e1), t(e2), t(e3)]),
        M2 => {
            // Half twist: the screw motion squares to the vertical period.
            let screw = Isometry::new(rot_z(q(-1, 1), q(0, 1)), e3);
            FlatManifold::new(id, [e1, e2, Vec3K::from_ints(0, 0, 2)], vec![t(e1), t(e2), screw])
        }
        M3 => {
            let screw = Isometry::new(rot_z(q(0, 1), q(1, 1)), e3);
            FlatManifold::new(id, [e1, e2, Vec3K::from_ints(0, 0, 4)], vec![t(e1), t(e2), screw])
        }
        M4 => {
            let (a1, a2) = hex_basis();
            // 120-degree rotation: cos = -1/2, sin = sqrt3/2.
            let screw = Isometry::new(rot_z(q(-1, 2), s3(1, 2)), e3);
            FlatManifold::new(id, [a1, a2, Vec3K::from_ints(0, 0, 3)], vec![t(a1), t(a2), screw])
        }
        M5 => {
            let (a1, a2) = hex_basis();
            // 60-degree rotation: cos = 1/2, sin = sqrt3/2.
            let screw = Isometry::new(rot_z(q(1, 2), s3(1, 2)), e3);
            FlatManifold::new(id, [a1, a2, Vec3K::from_ints(0, 0, 6)], vec![t(a1), t(a2), screw])
        }
        M6 => {
            // Standard Hantzsche-Wendt screws: diagonal rotations with
            // half-lattice translations; their squares give the unit
            // lattice and the holonomy is Z/2 x Z/2.
            let ga = Isometry::new(diag(1, -1, -1), vec_q(q(1, 2), q(1, 2), QSqrt3::zero()));
            let gb = Isometry::new(diag(-1, 1, -1), vec_q(QSqrt3::zero(), q(1, 2), q(1, 2)));
            FlatManifold::new(id, [e1, e2, e3], vec![ga, gb])
        }
        HexTorus => {
            let (a1, a2) = hex_basis();
            FlatManifold::new(id, [a1, a2, e3], vec![t(a1), t(a2), t(e3)])
        }
    };
    m.expect("built-in manifolds are valid")
}
