//! Octonions via the Cayley–Dickson doubling of the quaternions.
//!
//! Basis `{e0 = 1, e1 = i, e2 = j, e3 = k, e4, .., e7}` where `e4 = (0, 1)`
//! in quaternion pairs and `(a, b)(c, d) = (ac − d̄b, da + bc̄)`. The algebra
//! is alternative and a composition algebra (`|ab| = |a||b|`) but not
//! associative.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Algebra, AlgebraTag, Quaternion};
use crate::{Error, Result};

/// An octonion `Σ cᵢ·eᵢ` in the Cayley–Dickson basis over `H`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub c: [f64; 8],
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { c: [0.0; 8] };

    pub fn new(c: [f64; 8]) -> Self {
        Octonion { c }
    }

    pub const fn from_real(r: f64) -> Self {
        Octonion {
            c: [r, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        }
    }

    /// Basis unit `eᵢ`, `i` in `0..8`.
    pub fn basis(i: usize) -> Self {
        let mut c = [0.0; 8];
        c[i] = 1.0;
        Octonion { c }
    }

    pub fn components(&self) -> [f64; 8] {
        self.c
    }

    fn split(&self) -> (Quaternion, Quaternion) {
        (
            Quaternion::new(self.c[0], self.c[1], self.c[2], self.c[3]),
            Quaternion::new(self.c[4], self.c[5], self.c[6], self.c[7]),
        )
    }

    fn join(a: Quaternion, b: Quaternion) -> Self {
        Octonion {
            c: [a.x0, a.x1, a.x2, a.x3, b.x0, b.x1, b.x2, b.x3],
        }
    }
}

impl Algebra for Octonion {
    fn tag(&self) -> AlgebraTag {
        AlgebraTag::Octonion
    }

    fn real_like(&self, r: f64) -> Self {
        Octonion::from_real(r)
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut c = [0.0; 8];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = self.c[i] + rhs.c[i];
        }
        Octonion { c }
    }

    fn sub(&self, rhs: &Self) -> Self {
        let mut c = [0.0; 8];
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = self.c[i] - rhs.c[i];
        }
        Octonion { c }
    }

    fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    fn scale(&self, s: f64) -> Self {
        let mut c = self.c;
        for slot in c.iter_mut() {
            *slot *= s;
        }
        Octonion { c }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = self.split();
        let (c, d) = rhs.split();
        // (a, b)(c, d) = (ac − d̄b, da + bc̄)
        let first = a.mul(&c).sub(&d.conj().mul(&b));
        let second = d.mul(&a).add(&b.mul(&c.conj()));
        Octonion::join(first, second)
    }

    fn conj(&self) -> Self {
        let mut c = self.c;
        for slot in c.iter_mut().skip(1) {
            *slot = -*slot;
        }
        Octonion { c }
    }

    fn real_part(&self) -> f64 {
        self.c[0]
    }

    fn dot(&self, rhs: &Self) -> f64 {
        self.c
            .iter()
            .zip(rhs.c.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    fn inverse(&self) -> Result<Self> {
        let norm_sq = self.modulus_sq();
        if norm_sq == 0.0 {
            return Err(Error::NonInvertible);
        }
        Ok(self.conj().scale(1.0 / norm_sq))
    }

    fn default_slice_unit_like(&self) -> Self {
        Octonion::basis(1)
    }

    fn imaginary_basis_like(&self) -> Vec<Self> {
        (1..8).map(Octonion::basis).collect()
    }

    fn json_value(&self) -> serde_json::Value {
        serde_json::json!(self.c)
    }
}

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let c = <[f64; 8]>::deserialize(deserializer)?;
        Ok(Octonion::new(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeds_quaternions() {
        // e1·e2 = e3 reproduces ij = k on the quaternion subalgebra.
        assert_eq!(
            Octonion::basis(1).mul(&Octonion::basis(2)),
            Octonion::basis(3)
        );
        let one = Octonion::from_real(1.0);
        let x = Octonion::new([0.5, -1.0, 2.0, 0.0, 3.0, 0.25, -0.5, 1.0]);
        assert_eq!(x.mul(&one), x);
    }

    #[test]
    fn basis_units_square_to_minus_one() {
        for i in 1..8 {
            let e = Octonion::basis(i);
            assert_eq!(e.mul(&e), Octonion::from_real(-1.0));
            assert!(e.is_slice_unit());
        }
    }

    #[test]
    fn modulus_is_multiplicative() {
        let a = Octonion::new([0.3, -1.0, 0.7, 2.0, -0.4, 0.9, -1.2, 0.1]);
        let b = Octonion::new([-0.8, 0.2, 1.4, -0.6, 0.5, -1.7, 0.3, 0.9]);
        let prod = a.mul(&b);
        assert!(
            (prod.modulus() - a.modulus() * b.modulus()).abs()
                <= 1e-12 * a.modulus() * b.modulus()
        );
    }

    #[test]
    fn alternative_but_not_associative() {
        let a = Octonion::new([0.1, 0.9, -0.3, 0.7, 1.1, -0.5, 0.2, -0.8]);
        let b = Octonion::new([-1.0, 0.4, 0.6, -0.2, 0.3, 0.8, -0.9, 0.5]);
        let left = a.mul(&a).mul(&b);
        let right = a.mul(&a.mul(&b));
        assert!(left.sub(&right).modulus() <= 1e-12 * a.modulus_sq() * b.modulus());
        let left = a.mul(&b).mul(&b);
        let right = a.mul(&b.mul(&b));
        assert!(left.sub(&right).modulus() <= 1e-12 * a.modulus() * b.modulus_sq());

        // A fixed witness of non-associativity: (e1·e2)·e4 = −e1·(e2·e4).
        let e1 = Octonion::basis(1);
        let e2 = Octonion::basis(2);
        let e4 = Octonion::basis(4);
        let assoc_gap = e1.mul(&e2).mul(&e4).sub(&e1.mul(&e2.mul(&e4)));
        assert!(assoc_gap.modulus() > 0.5);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Octonion::new([1.0, -0.5, 0.25, 0.0, 2.0, -1.5, 0.75, 0.1]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).sub(&Octonion::from_real(1.0)).modulus() < 1e-14);
        assert_eq!(Octonion::ZERO.inverse(), Err(Error::NonInvertible));
    }
}
