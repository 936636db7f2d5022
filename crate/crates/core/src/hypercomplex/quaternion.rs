//! Quaternions, imaginary units of the sphere `S`, and the slice
//! decomposition `q = x + yI`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Algebra, AlgebraTag};
use crate::{Error, Result};

/// A quaternion `x0 + x1·i + x2·j + x3·k` with the multiplication rules
/// `i² = j² = k² = ijk = −1`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(x0: f64, x1: f64, x2: f64, x3: f64) -> Self {
        Quaternion { x0, x1, x2, x3 }
    }

    pub const fn from_real(r: f64) -> Self {
        Quaternion::new(r, 0.0, 0.0, 0.0)
    }

    pub fn components(&self) -> [f64; 4] {
        [self.x0, self.x1, self.x2, self.x3]
    }

    pub fn from_components(c: [f64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    /// The imaginary part as a vector in `R³`.
    pub fn imaginary(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn imaginary_norm(&self) -> f64 {
        (self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.x0 == 0.0 && self.x1 == 0.0 && self.x2 == 0.0 && self.x3 == 0.0
    }

    /// The complex number `u + v·unit` embedded in the slice of `unit`.
    pub fn from_slice_coords(u: f64, v: f64, unit: &ImaginaryUnit) -> Self {
        unit.as_quaternion().scale(v).add(&Quaternion::from_real(u))
    }
}

impl Algebra for Quaternion {
    fn tag(&self) -> AlgebraTag {
        AlgebraTag::Quaternion
    }

    fn real_like(&self, r: f64) -> Self {
        Quaternion::from_real(r)
    }

    fn add(&self, rhs: &Self) -> Self {
        Quaternion::new(
            self.x0 + rhs.x0,
            self.x1 + rhs.x1,
            self.x2 + rhs.x2,
            self.x3 + rhs.x3,
        )
    }

    fn sub(&self, rhs: &Self) -> Self {
        Quaternion::new(
            self.x0 - rhs.x0,
            self.x1 - rhs.x1,
            self.x2 - rhs.x2,
            self.x3 - rhs.x3,
        )
    }

    fn neg(&self) -> Self {
        Quaternion::new(-self.x0, -self.x1, -self.x2, -self.x3)
    }

    fn scale(&self, s: f64) -> Self {
        Quaternion::new(self.x0 * s, self.x1 * s, self.x2 * s, self.x3 * s)
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (a0, a1, a2, a3) = (self.x0, self.x1, self.x2, self.x3);
        let (b0, b1, b2, b3) = (rhs.x0, rhs.x1, rhs.x2, rhs.x3);
        Quaternion::new(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
    }

    fn conj(&self) -> Self {
        Quaternion::new(self.x0, -self.x1, -self.x2, -self.x3)
    }

    fn real_part(&self) -> f64 {
        self.x0
    }

    fn dot(&self, rhs: &Self) -> f64 {
        self.x0 * rhs.x0 + self.x1 * rhs.x1 + self.x2 * rhs.x2 + self.x3 * rhs.x3
    }

    fn inverse(&self) -> Result<Self> {
        let norm_sq = self.modulus_sq();
        if norm_sq == 0.0 {
            return Err(Error::NonInvertible);
        }
        Ok(self.conj().scale(1.0 / norm_sq))
    }

    fn default_slice_unit_like(&self) -> Self {
        Quaternion::I
    }

    fn imaginary_basis_like(&self) -> Vec<Self> {
        vec![Quaternion::I, Quaternion::J, Quaternion::K]
    }

    fn json_value(&self) -> serde_json::Value {
        serde_json::json!([self.x0, self.x1, self.x2, self.x3])
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.components().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let c = <[f64; 4]>::deserialize(deserializer)?;
        Ok(Quaternion::from_components(c))
    }
}

/// A point of the unit 2-sphere `S` of purely imaginary quaternions,
/// stored as a unit direction in `R³`. Satisfies `I² = −1` and `|I| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImaginaryUnit {
    dir: [f64; 3],
}

impl ImaginaryUnit {
    pub const I: ImaginaryUnit = ImaginaryUnit { dir: [1.0, 0.0, 0.0] };
    pub const J: ImaginaryUnit = ImaginaryUnit { dir: [0.0, 1.0, 0.0] };
    pub const K: ImaginaryUnit = ImaginaryUnit { dir: [0.0, 0.0, 1.0] };

    /// Normalizes `dir`; errors on the zero vector.
    pub fn new(dir: [f64; 3]) -> Result<Self> {
        let norm = (dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::ZeroDirection);
        }
        Ok(ImaginaryUnit {
            dir: [dir[0] / norm, dir[1] / norm, dir[2] / norm],
        })
    }

    /// The direction of the imaginary part of `q`, or `None` for real `q`.
    pub fn from_imaginary_of(q: &Quaternion) -> Option<Self> {
        ImaginaryUnit::new(q.imaginary()).ok()
    }

    pub fn direction(&self) -> [f64; 3] {
        self.dir
    }

    pub fn as_quaternion(&self) -> Quaternion {
        Quaternion::new(0.0, self.dir[0], self.dir[1], self.dir[2])
    }

    pub fn dot(&self, other: &ImaginaryUnit) -> f64 {
        self.dir[0] * other.dir[0] + self.dir[1] * other.dir[1] + self.dir[2] * other.dir[2]
    }

    pub fn neg(&self) -> ImaginaryUnit {
        ImaginaryUnit {
            dir: [-self.dir[0], -self.dir[1], -self.dir[2]],
        }
    }
}

/// Euclidean inner product `⟨J, I⟩` of two points of `S`, in `[−1, 1]`.
pub fn inner_product_s(j: &ImaginaryUnit, i: &ImaginaryUnit) -> f64 {
    j.dot(i)
}

/// The decomposition `q = x + yI` of a quaternion: real part `x`, imaginary
/// magnitude `y ≥ 0` and unit `I ∈ S` (a fixed default for real points).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlicePoint {
    pub x: f64,
    pub y: f64,
    pub unit: ImaginaryUnit,
}

impl SlicePoint {
    pub fn recompose(&self) -> Quaternion {
        Quaternion::slice_point(self.x, self.y, &self.unit.as_quaternion())
    }
}

/// Splits `q` into `x + yI` with `y ≥ 0`. Real points get the default unit
/// `I = i` so that outputs are reproducible.
pub fn slice_decompose(q: &Quaternion) -> SlicePoint {
    let y = q.imaginary_norm();
    match ImaginaryUnit::from_imaginary_of(q) {
        Some(unit) => SlicePoint { x: q.x0, y, unit },
        None => SlicePoint {
            x: q.x0,
            y: 0.0,
            unit: ImaginaryUnit::I,
        },
    }
}
