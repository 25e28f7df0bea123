//! Periodic plane families in Euclidean 3-space, their orbits under a
//! Bieberbach group, the rank-3 filling criterion, and escaping-geodesic
//! witnesses for the non-filling case.
//!
//! A family is the set of planes `{ x : <n,x>/<n,n> = o + k p, k integer }`
//! for the offsets `o` of the family; positions along the normal are
//! measured in units of the normal vector itself so that rational data
//! stays rational.

use serde::{Deserialize, Serialize};

use super::manifold::{flat_manifold, FlatManifold, FlatManifoldId};
use super::scalar::{null_space, rank, rational_gcd, QSqrt3, Rational, Vec3K};
use super::FlatError;

/// A lattice-periodic family of parallel planes. Normals are canonical up
/// to sign (first nonzero coordinate positive), offsets are reduced into
/// `[0, period)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EuclideanPlaneFamily {
    normal: Vec3K,
    period: QSqrt3,
    offsets: Vec<QSqrt3>,
}

impl EuclideanPlaneFamily {
    pub fn new(normal: Vec3K, period: QSqrt3, offsets: Vec<QSqrt3>) -> Result<Self, FlatError> {
        if normal.is_zero() {
            return Err(FlatError::ZeroNormal);
        }
        if period.sign() <= 0 {
            return Err(FlatError::InvalidFamily("period must be positive".into()));
        }
        let (normal, flipped) = normal.canonical_sign();
        let mut reduced: Vec<QSqrt3> = offsets
            .into_iter()
            .map(|o| (if flipped { -o } else { o }).rem_euclid(&period))
            .collect();
        reduced.sort();
        reduced.dedup();
        if reduced.is_empty() {
            return Err(FlatError::InvalidFamily("at least one offset required".into()));
        }
        Ok(EuclideanPlaneFamily { normal, period, offsets: reduced })
    }

    pub fn normal(&self) -> &Vec3K {
        &self.normal
    }

    pub fn period(&self) -> QSqrt3 {
        self.period
    }

    pub fn offsets(&self) -> &[QSqrt3] {
        &self.offsets
    }

    /// Position of a point along the normal, in units of the normal:
    /// `<n,x>/<n,n>`.
    pub fn position(&self, x: &Vec3K) -> QSqrt3 {
        self.normal.dot(x) / self.normal.dot(&self.normal)
    }

    /// Exact test: does the point lie on one of the planes of the family?
    pub fn contains(&self, x: &Vec3K) -> bool {
        let v = self.position(x).rem_euclid(&self.period);
        self.offsets.contains(&v)
    }

    /// Euclidean distance from a point to the nearest plane of the family.
    pub fn distance(&self, x: &[f64; 3]) -> f64 {
        let n = self.normal.to_f64();
        let nn = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
        let nu = (n[0] * x[0] + n[1] * x[1] + n[2] * x[2]) / nn;
        let p = self.period.to_f64();
        let mut best = f64::INFINITY;
        for o in &self.offsets {
            let d = (nu - o.to_f64()).rem_euclid(p);
            best = best.min(d.min(p - d));
        }
        best * nn.sqrt()
    }
}

/// Orbit of a seed plane under the manifold's group, grouped into plane
/// families by (unsigned) normal direction.
///
/// The offsets of each family account for the translation parts of the
/// group elements; the family count is at most the point-group order.
pub fn orbit_families(
    manifold: &FlatManifold,
    normal: &Vec3K,
    offset: QSqrt3,
) -> Result<Vec<EuclideanPlaneFamily>, FlatError> {
    if normal.is_zero() {
        return Err(FlatError::ZeroNormal);
    }
    let period = lattice_period(manifold, normal)?;
    let nn = normal.dot(normal);
    let mut planes: Vec<(Vec3K, QSqrt3)> = Vec::new();
    for rep in manifold.coset_reps()? {
        // The image of { <n,x> = c <n,n> } under x -> Rx + t is
        // { <Rn, y> = c <n,n> + <Rn, t> }.
        let n2 = rep.rotation.mul_vec(normal);
        let c2 = offset + n2.dot(&rep.translation) / nn;
        let (n2, flipped) = n2.canonical_sign();
        let c2 = (if flipped { -c2 } else { c2 }).rem_euclid(&period);
        if !planes.contains(&(n2, c2)) {
            planes.push((n2, c2));
        }
    }
    // Group planes that share a normal direction into one family.
    let mut families: Vec<EuclideanPlaneFamily> = Vec::new();
    for (n, c) in planes {
        if let Some(f) = families.iter_mut().find(|f| f.normal == n) {
            if !f.offsets.contains(&c) {
                f.offsets.push(c);
                f.offsets.sort();
            }
        } else {
            families.push(EuclideanPlaneFamily { normal: n, period, offsets: vec![c] });
        }
    }
    Ok(families)
}

/// Minimal positive plane spacing (in normal units) induced by the
/// translation lattice: the generator of `{ <n, lambda> : lambda in L }`
/// divided by `<n,n>`. Errors when that pairing group is not discrete,
/// which happens for hexagonal lattices and incompatible normals.
pub fn lattice_period(manifold: &FlatManifold, normal: &Vec3K) -> Result<QSqrt3, FlatError> {
    let pairings: Vec<QSqrt3> = manifold.lattice.iter().map(|b| normal.dot(b)).collect();
    let reference = pairings
        .iter()
        .copied()
        .find(|v| !v.is_zero())
        .ok_or(FlatError::ZeroNormal)?;
    let mut g = Rational::from_integer(0);
    for v in &pairings {
        let ratio = *v / reference;
        let Some(r) = ratio.as_rational() else {
            return Err(FlatError::IncommensurableNormal);
        };
        g = rational_gcd(g, r);
    }
    let generator = (reference * QSqrt3::new(g, Rational::from_integer(0))).abs();
    Ok(generator / normal.dot(normal))
}

/// The filling criterion for plane-family surfaces: the normals span rank 3.
pub fn filling_flat(families: &[EuclideanPlaneFamily]) -> Result<bool, FlatError> {
    if families.is_empty() {
        return Err(FlatError::EmptyInput);
    }
    let normals: Vec<Vec3K> = families.iter().map(|f| f.normal).collect();
    Ok(rank(&normals) == 3)
}

/// A straight line disjoint from every plane: direction plus base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscapingGeodesic {
    pub direction: Vec3K,
    pub basepoint: Vec3K,
}

/// Witness for the non-filling case: a geodesic parallel to every family
/// (direction orthogonal to every normal) based strictly off every plane.
/// Returns `None` exactly when the normals have rank 3.
pub fn find_escaping_geodesic(
    families: &[EuclideanPlaneFamily],
) -> Result<Option<EscapingGeodesic>, FlatError> {
    if families.is_empty() {
        return Err(FlatError::EmptyInput);
    }
    let normals: Vec<Vec3K> = families.iter().map(|f| f.normal).collect();
    let kernel = null_space(&normals);
    let Some(direction) = kernel.first().copied() else {
        return Ok(None);
    };
    // Pick a probe vector pairing nontrivially with every normal, then walk
    // it by exact rational steps until the base point misses every plane.
    // The forbidden parameters form a discrete set, so the scan terminates.
    let mut candidates: Vec<Vec3K> = vec![
        Vec3K([q(1, 1), q(1, 3), q(1, 7)]),
        Vec3K([q(1, 7), q(1, 1), q(1, 3)]),
        Vec3K([q(1, 3), q(1, 7), q(1, 1)]),
        Vec3K([q(1, 1), q(1, 1), q(1, 1)]),
    ];
    let mut weighted = Vec3K::zero();
    for (i, n) in normals.iter().enumerate() {
        weighted = weighted + n.scale(QSqrt3::from_int(3i64.pow(i.min(20) as u32)));
    }
    candidates.push(weighted);
    let probe = candidates
        .into_iter()
        .find(|w| normals.iter().all(|n| !n.dot(w).is_zero()))
        .ok_or_else(|| FlatError::InvalidFamily("no probe direction found".into()))?;
    for j in 1..=4096i64 {
        let basepoint = probe.scale(QSqrt3::from_ratio(j, 256));
        if families.iter().all(|f| !f.contains(&basepoint)) {
            return Ok(Some(EscapingGeodesic { direction, basepoint }));
        }
    }
    Err(FlatError::InvalidFamily("base point scan exhausted".into()))
}

fn q(n: i64, d: i64) -> QSqrt3 {
    QSqrt3::from_ratio(n, d)
}

/// A seed plane and the plane families it generates in one of the standard
/// flat manifolds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub schema: u32,
    pub manifold: FlatManifoldId,
    pub seed_normal: Vec3K,
    pub seed_offset: QSqrt3,
    pub families: Vec<EuclideanPlaneFamily>,
}

impl SurfaceSpec {
    pub fn from_seed(
        manifold: &FlatManifold,
        normal: Vec3K,
        offset: QSqrt3,
    ) -> Result<Self, FlatError> {
        let families = orbit_families(manifold, &normal, offset)?;
        Ok(SurfaceSpec {
            schema: 1,
            manifold: manifold.id,
            seed_normal: normal,
            seed_offset: offset,
            families,
        })
    }
}

/// The explicit filling constructions: a diagonal torus for the quarter
/// twist, slanted annuli for the hexagonal twists, and the four diagonal
/// tori of the Hantzsche-Wendt manifold. The untwisted tori and the half
/// twist admit no filling plane surface (their orbits span rank at most 2),
/// so those ids return `None`.
pub fn construct_filling(id: FlatManifoldId) -> Option<SurfaceSpec> {
    use FlatManifoldId::*;
    let (normal, offset) = match id {
        M1 | M2 | HexTorus => return None,
        // Diagonal plane through the square faces; the quarter twist
        // rotates it onto four families of rank 3.
        M3 => (Vec3K::from_ints(1, 0, 1), QSqrt3::zero()),
        // Slanted plane over a hexagon diagonal: normal in the dual
        // lattice with both a horizontal and a vertical part.
        M4 | M5 => (
            Vec3K([QSqrt3::zero(), QSqrt3::sqrt3_times(2, 1), QSqrt3::one()]),
            QSqrt3::zero(),
        ),
        // Torus with normal (1,1,1); the holonomy produces the three other
        // diagonal families.
        M6 => (Vec3K::from_ints(1, 1, 1), QSqrt3::zero()),
    };
    let spec = SurfaceSpec::from_seed(&flat_manifold(id), normal, offset)
        .expect("built-in seeds are valid");
    debug_assert_eq!(filling_flat(&spec.families), Ok(true));
    Some(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(n: [i64; 3]) -> EuclideanPlaneFamily {
        EuclideanPlaneFamily::new(
            Vec3K::from_ints(n[0], n[1], n[2]),
            QSqrt3::one(),
            vec![QSqrt3::zero()],
        )
        .unwrap()
    }

    #[test]
    fn hantzsche_wendt_orbit_has_the_four_diagonal_normals() {
        let m = flat_manifold(FlatManifoldId::M6);
        let fams = orbit_families(&m, &Vec3K::from_ints(1, 1, 1), QSqrt3::zero()).unwrap();
        assert_eq!(fams.len(), 4);
        let mut normals: Vec<[i64; 3]> = fams
            .iter()
            .map(|f| {
                let v = f.normal().to_f64();
                [v[0] as i64, v[1] as i64, v[2] as i64]
            })
            .collect();
        normals.sort();
        // (1,1,1), (-1,-1,1), (-1,1,-1), (1,-1,-1) up to sign.
        assert_eq!(normals, vec![[1, -1, -1], [1, -1, 1], [1, 1, -1], [1, 1, 1]]);
        assert_eq!(filling_flat(&fams), Ok(true));
    }

    #[test]
    fn torus_orbit_is_a_single_family() {
        let m = flat_manifold(FlatManifoldId::M1);
        let fams = orbit_families(&m, &Vec3K::from_ints(0, 0, 1), QSqrt3::zero()).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].period(), QSqrt3::one());
    }

    #[test]
    fn quarter_twist_pairs_the_diagonal_normals() {
        // Applying the 90-degree rotation by hand sends (1,1,0) to
        // (-1,1,0) ~ (1,-1,0).
        let m = flat_manifold(FlatManifoldId::M3);
        let fams = orbit_families(&m, &Vec3K::from_ints(1, 1, 0), QSqrt3::zero()).unwrap();
        assert_eq!(fams.len(), 2);
        let normals: Vec<Vec3K> = fams.iter().map(|f| *f.normal()).collect();
        assert!(normals.contains(&Vec3K::from_ints(1, 1, 0)));
        assert!(normals.contains(&Vec3K::from_ints(1, -1, 0)));
    }

    #[test]
    fn filling_criterion_on_hand_picked_sets() {
        let hw = vec![family([1, 1, 1]), family([-1, -1, 1]), family([-1, 1, -1]), family([1, -1, -1])];
        assert_eq!(filling_flat(&hw), Ok(true));
        assert_eq!(filling_flat(&[family([0, 0, 1])]), Ok(false));
        let axes = vec![family([1, 0, 0]), family([0, 1, 0]), family([0, 0, 1])];
        assert_eq!(filling_flat(&axes), Ok(true));
        assert_eq!(filling_flat(&[]), Err(FlatError::EmptyInput));
    }

    #[test]
    fn escaping_geodesic_exists_exactly_when_rank_drops() {
        let two = vec![family([1, 0, 0]), family([0, 1, 0])];
        let esc = find_escaping_geodesic(&two).unwrap().expect("rank 2 escapes");
        // The only common orthogonal direction is the z axis.
        assert!(esc.direction.0[0].is_zero() && esc.direction.0[1].is_zero());
        assert!(!esc.direction.0[2].is_zero());
        for f in &two {
            assert!(!f.contains(&esc.basepoint));
            assert!(f.distance(&esc.basepoint.to_f64()) > 0.0);
        }
        let hw = construct_filling(FlatManifoldId::M6).unwrap();
        assert_eq!(find_escaping_geodesic(&hw.families).unwrap(), None);
    }

    #[test]
    fn single_diagonal_family_escapes_in_its_plane() {
        let one = vec![family([1, 1, 0])];
        let esc = find_escaping_geodesic(&one).unwrap().unwrap();
        assert!(esc.direction.dot(&Vec3K::from_ints(1, 1, 0)).is_zero());
    }

    #[test]
    fn construct_filling_dichotomy() {
        use FlatManifoldId::*;
        assert!(construct_filling(M1).is_none());
        assert!(construct_filling(M2).is_none());
        assert!(construct_filling(HexTorus).is_none());
        for id in [M3, M4, M5, M6] {
            let spec = construct_filling(id).expect("filling construction");
            assert_eq!(filling_flat(&spec.families), Ok(true), "{id:?}");
            assert_eq!(find_escaping_geodesic(&spec.families).unwrap(), None, "{id:?}");
        }
    }

    #[test]
    fn hex_manifold_family_counts() {
        let m4 = construct_filling(FlatManifoldId::M4).unwrap();
        assert_eq!(m4.families.len(), 3);
        let m5 = construct_filling(FlatManifoldId::M5).unwrap();
        assert_eq!(m5.families.len(), 6);
    }

    #[test]
    fn orbit_closure_under_generators() {
        // Applying any generator to any family of the orbit lands back in
        // the orbit.
        for id in [FlatManifoldId::M3, FlatManifoldId::M4, FlatManifoldId::M6] {
            let m = flat_manifold(id);
            let spec = construct_filling(id).unwrap();
            for fam in &spec.families {
                for g in &m.generators {
                    let n2 = g.rotation.mul_vec(fam.normal());
                    let nn = fam.normal().dot(fam.normal());
                    for o in fam.offsets() {
                        let c2 = *o + n2.dot(&g.translation) / nn;
                        let (n2c, flipped) = n2.canonical_sign();
                        let c2 = (if flipped { -c2 } else { c2 }).rem_euclid(&fam.period());
                        let host = spec
                            .families
                            .iter()
                            .find(|f| *f.normal() == n2c)
                            .expect("image normal in orbit");
                        assert!(host.offsets().contains(&c2), "{id:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn monotonicity_of_filling() {
        let mut fams = vec![family([1, 0, 0]), family([0, 1, 0]), family([0, 0, 1])];
        assert_eq!(filling_flat(&fams), Ok(true));
        fams.push(family([1, 1, 1]));
        assert_eq!(filling_flat(&fams), Ok(true));
    }

    #[test]
    fn incommensurable_normal_rejected_on_hex_lattice() {
        let m = flat_manifold(FlatManifoldId::M5);
        let err = orbit_families(&m, &Vec3K::from_ints(1, 1, 0), QSqrt3::zero());
        assert_eq!(err, Err(FlatError::IncommensurableNormal));
    }

    #[test]
    fn surface_spec_serde_round_trip() {
        let spec = construct_filling(FlatManifoldId::M6).unwrap();
        let s = serde_json::to_string(&spec).unwrap();
        let back: SurfaceSpec = serde_json::from_str(&s).unwrap();
        assert_eq!(spec, back);
    }
}
