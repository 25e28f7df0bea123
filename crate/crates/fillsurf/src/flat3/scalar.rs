//! Exact scalars for flat-manifold arithmetic: the ring `Q[sqrt(3)]`,
//! handled as symbolic pairs `a + b*sqrt(3)` of rationals, and small exact
//! vectors and matrices over it.
//!
//! Plain rationals embed with `b = 0`; the hexagonal lattices need the
//! irrational part because 60- and 120-degree rotations are exact in this
//! ring and nowhere smaller.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = Ratio<i64>;

/// `a + b*sqrt(3)` with rational `a`, `b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QSqrt3 {
    pub a: Rational,
    pub b: Rational,
}

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

impl QSqrt3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        QSqrt3 { a: Rational::from_integer(n), b: Rational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        QSqrt3 { a: Rational::new(num, den), b: Rational::zero() }
    }

    /// `(num/den) * sqrt(3)`.
    pub fn sqrt3_times(num: i64, den: i64) -> Self {
        QSqrt3 { a: Rational::zero(), b: Rational::new(num, den) }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.a)
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(self.a) + ratio_to_f64(self.b) * SQRT3
    }

    /// Exact sign of `a + b*sqrt(3)`.
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(self.a);
        let sb = rational_sign(self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) | (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            // Mixed signs: compare a^2 with 3 b^2; the larger magnitude wins.
            (1, -1) => {
                let d = self.a * self.a - Rational::from_integer(3) * self.b * self.b;
                rational_sign(d)
            }
            (-1, 1) => {
                let d = Rational::from_integer(3) * self.b * self.b - self.a * self.a;
                rational_sign(d)
            }
            _ => unreachable!(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -*self
        } else {
            *self
        }
    }

    pub fn recip(&self) -> Self {
        // 1/(a + b sqrt 3) = (a - b sqrt 3) / (a^2 - 3 b^2); the norm is
        // nonzero because sqrt(3) is irrational.
        let norm = self.a * self.a - Rational::from_integer(3) * self.b * self.b;
        assert!(!norm.is_zero(), "division by zero in Q[sqrt 3]");
        QSqrt3 { a: self.a / norm, b: -self.b / norm }
    }

    /// Exact floor.
    pub fn floor(&self) -> i64 {
        if self.b.is_zero() {
            return self.a.floor().to_integer();
        }
        let mut n = self.to_f64().floor() as i64;
        // Verify the float guess exactly, nudging if it was off.
        while (*self - QSqrt3::from_int(n)).sign() < 0 {
            n -= 1;
        }
        while (*self - QSqrt3::from_int(n + 1)).sign() >= 0 {
            n += 1;
        }
        n
    }

    /// Reduce into `[0, modulus)` for a positive modulus.
    pub fn rem_euclid(&self, modulus: &QSqrt3) -> QSqrt3 {
        debug_assert!(modulus.sign() > 0);
        let q = (*self / *modulus).floor();
        *self - *modulus * QSqrt3::from_int(q)
    }
}

fn rational_sign(r: Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn ratio_to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl fmt::Debug for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*s3", self.b)
        } else {
            write!(f, "{}+{}*s3", self.a, self.b)
        }
    }
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3 { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3 { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3 { a: -self.a, b: -self.b }
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, o: QSqrt3) -> QSqrt3 {
        QSqrt3 {
            a: self.a * o.a + Rational::from_integer(3) * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl Div for QSqrt3 {
    type Output = QSqrt3;
    fn div(self, o: QSqrt3) -> QSqrt3 {
        self * o.recip()
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self - *other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

// Wire format: a scalar is [[a_num, a_den], [b_num, b_den]], the exact
// numerator/denominator pairs of the rational and sqrt(3) parts.
impl Serialize for QSqrt3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[*self.a.numer(), *self.a.denom()], [*self.b.numer(), *self.b.denom()]].serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSqrt3 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = <[[i64; 2]; 2]>::deserialize(d)?;
        if raw[0][1] == 0 || raw[1][1] == 0 {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(QSqrt3 {
            a: Rational::new(raw[0][0], raw[0][1]),
            b: Rational::new(raw[1][0], raw[1][1]),
        })
    }
}

/// Exact 3-vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vec3K(pub [QSqrt3; 3]);

impl fmt::Debug for Vec3K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.0[0], self.0[1], self.0[2])
    }
}

impl Vec3K {
    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3K([QSqrt3::from_int(x), QSqrt3::from_int(y), QSqrt3::from_int(z)])
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(QSqrt3::is_zero)
    }

    pub fn dot(&self, o: &Vec3K) -> QSqrt3 {
        self.0[0] * o.0[0] + self.0[1] * o.0[1] + self.0[2] * o.0[2]
    }

    pub fn cross(&self, o: &Vec3K) -> Vec3K {
        Vec3K([
            self.0[1] * o.0[2] - self.0[2] * o.0[1],
            self.0[2] * o.0[0] - self.0[0] * o.0[2],
            self.0[0] * o.0[1] - self.0[1] * o.0[0],
        ])
    }

    pub fn scale(&self, s: QSqrt3) -> Vec3K {
        Vec3K([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.0[0].to_f64(), self.0[1].to_f64(), self.0[2].to_f64()]
    }

    /// Flip the sign so the first nonzero coordinate is positive. Returns
    /// the canonical vector and whether a flip happened.
    pub fn canonical_sign(&self) -> (Vec3K, bool) {
        for c in &self.0 {
            match c.sign() {
                0 => continue,
                1 => return (*self, false),
                _ => return (-*self, true),
            }
        }
        (*self, false)
    }
}

impl Add for Vec3K {
    type Output = Vec3K;
    fn add(self, o: Vec3K) -> Vec3K {
        Vec3K([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Vec3K {
    type Output = Vec3K;
    fn sub(self, o: Vec3K) -> Vec3K {
        Vec3K([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Neg for Vec3K {
    type Output = Vec3K;
    fn neg(self) -> Vec3K {
        Vec3K([-self.0[0], -self.0[1], -self.0[2]])
    }
}

/// Exact 3x3 matrix, row major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat3K(pub [[QSqrt3; 3]; 3]);

impl fmt::Debug for Mat3K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}; {:?}; {:?}]", self.row(0), self.row(1), self.row(2))
    }
}

impl Mat3K {
    pub fn identity() -> Self {
        let mut m = [[QSqrt3::zero(); 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = QSqrt3::one();
        }
        Mat3K(m)
    }

    pub fn from_rows(r0: Vec3K, r1: Vec3K, r2: Vec3K) -> Self {
        Mat3K([r0.0, r1.0, r2.0])
    }

    pub fn row(&self, i: usize) -> Vec3K {
        Vec3K(self.0[i])
    }

    pub fn col(&self, j: usize) -> Vec3K {
        Vec3K([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn mul_vec(&self, v: &Vec3K) -> Vec3K {
        Vec3K([self.row(0).dot(v), self.row(1).dot(v), self.row(2).dot(v)])
    }

    pub fn mul_mat(&self, o: &Mat3K) -> Mat3K {
        let mut out = [[QSqrt3::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                *e = self.row(i).dot(&o.col(j));
            }
        }
        Mat3K(out)
    }

    pub fn transpose(&self) -> Mat3K {
        Mat3K::from_rows(self.col(0), self.col(1), self.col(2))
    }

    pub fn det(&self) -> QSqrt3 {
        self.row(0).dot(&self.row(1).cross(&self.row(2)))
    }

    pub fn is_orthogonal(&self) -> bool {
        self.mul_mat(&self.transpose()) == Mat3K::identity()
    }

    /// Exact inverse; panics on singular input.
    pub fn inverse(&self) -> Mat3K {
        let d = self.det();
        assert!(!d.is_zero(), "singular matrix");
        let inv_d = d.recip();
        let c = |r: usize, s: usize| -> QSqrt3 {
            let (r1, r2) = ((r + 1) % 3, (r + 2) % 3);
            let (s1, s2) = ((s + 1) % 3, (s + 2) % 3);
            self.0[r1][s1] * self.0[r2][s2] - self.0[r1][s2] * self.0[r2][s1]
        };
        let mut out = [[QSqrt3::zero(); 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                // Adjugate transposes the cofactors.
                *e = c(j, i) * inv_d;
            }
        }
        Mat3K(out)
    }
}

/// Rank over the field `Q(sqrt 3)` by Gaussian elimination (equal to the
/// rank over the reals).
pub fn rank(rows: &[Vec3K]) -> usize {
    let mut m: Vec<[QSqrt3; 3]> = rows.iter().map(|v| v.0).collect();
    let mut rk = 0;
    for col in 0..3 {
        let Some(pivot) = (rk..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rk, pivot);
        let p = m[rk][col];
        for r in 0..m.len() {
            if r != rk && !m[r][col].is_zero() {
                let f = m[r][col] / p;
                for c in 0..3 {
                    m[r][c] = m[r][c] - f * m[rk][c];
                }
            }
        }
        rk += 1;
        if rk == m.len() {
            break;
        }
    }
    rk
}

/// A basis of the joint null space `{ d : <row, d> = 0 for all rows }`.
pub fn null_space(rows: &[Vec3K]) -> Vec<Vec3K> {
    // Row reduce and read off the free columns.
    let mut m: Vec<[QSqrt3; 3]> = rows.iter().map(|v| v.0).collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rk = 0;
    for col in 0..3 {
        let Some(pivot) = (rk..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rk, pivot);
        let p = m[rk][col];
        for c in 0..3 {
            m[rk][c] = m[rk][c] / p;
        }
        for r in 0..m.len() {
            if r != rk && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..3 {
                    m[r][c] = m[r][c] - f * m[rk][c];
                }
            }
        }
        pivots.push((rk, col));
        rk += 1;
        if rk == m.len() {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..3 {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = [QSqrt3::zero(); 3];
        v[free] = QSqrt3::one();
        for &(r, c) in &pivots {
            v[c] = -m[r][free];
        }
        basis.push(Vec3K(v));
    }
    basis
}

/// Greatest common measure of two rationals, generating the group of their
/// integer combinations.
pub fn rational_gcd(x: Rational, y: Rational) -> Rational {
    if x.is_zero() {
        return y.abs();
    }
    if y.is_zero() {
        return x.abs();
    }
    let den = x.denom() * y.denom();
    let a = (x.numer() * y.denom()).abs();
    let b = (y.numer() * x.denom()).abs();
    Rational::new(num_integer::gcd(a, b), den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> QSqrt3 {
        QSqrt3::from_ratio(n, d)
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 2 - sqrt(3) > 0, 1 - sqrt(3) < 0.
        let x = QSqrt3::new(Rational::from_integer(2), Rational::from_integer(-1));
        assert_eq!(x.sign(), 1);
        let y = QSqrt3::new(Rational::from_integer(1), Rational::from_integer(-1));
        assert_eq!(y.sign(), -1);
        assert_eq!(QSqrt3::zero().sign(), 0);
    }

    #[test]
    fn field_operations_round_trip() {
        let x = QSqrt3::new(Rational::new(3, 7), Rational::new(-2, 5));
        let y = x.recip();
        assert_eq!(x * y, QSqrt3::one());
        assert_eq!(x / x, QSqrt3::one());
    }

    #[test]
    fn floor_and_rem() {
        let s3 = QSqrt3::sqrt3_times(1, 1);
        assert_eq!(s3.floor(), 1);
        assert_eq!((-s3).floor(), -2);
        assert_eq!(q(7, 2).floor(), 3);
        assert_eq!(q(-7, 2).floor(), -4);
        let m = q(1, 3);
        let r = q(7, 6).rem_euclid(&m);
        assert_eq!(r, q(1, 6));
    }

    #[test]
    fn rank_and_null_space() {
        let e1 = Vec3K::from_ints(1, 0, 0);
        let e2 = Vec3K::from_ints(0, 1, 0);
        let e3 = Vec3K::from_ints(0, 0, 1);
        assert_eq!(rank(&[e1, e2, e3]), 3);
        assert_eq!(rank(&[e1, e2]), 2);
        let ns = null_space(&[e1, e2]);
        assert_eq!(ns.len(), 1);
        assert!(ns[0].dot(&e1).is_zero() && ns[0].dot(&e2).is_zero());
        // Hantzsche-Wendt normals have rank 3.
        let hw = [
            Vec3K::from_ints(1, 1, 1),
            Vec3K::from_ints(-1, -1, 1),
            Vec3K::from_ints(-1, 1, -1),
            Vec3K::from_ints(1, -1, -1),
        ];
        assert_eq!(rank(&hw), 3);
    }

    #[test]
    fn matrix_inverse_is_exact() {
        let m = Mat3K::from_rows(
            Vec3K::from_ints(1, 2, 0),
            Vec3K::from_ints(0, 1, 3),
            Vec3K::from_ints(4, 0, 1),
        );
        assert_eq!(m.mul_mat(&m.inverse()), Mat3K::identity());
    }

    #[test]
    fn scalar_serde_round_trip() {
        let x = QSqrt3::new(Rational::new(-5, 6), Rational::new(7, 11));
        let s = serde_json::to_string(&x).unwrap();
        let y: QSqrt3 = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn gcd_of_rationals() {
        assert_eq!(rational_gcd(Rational::new(1, 2), Rational::new(1, 3)), Rational::new(1, 6));
        assert_eq!(rational_gcd(Rational::new(3, 1), Rational::new(3, 1)), Rational::new(3, 1));
        assert_eq!(rational_gcd(Rational::zero(), Rational::new(-2, 5)), Rational::new(2, 5));
    }
}
