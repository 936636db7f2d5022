//! The Clifford algebras `R_{0,m}`: generators `e1..em` with `eᵢ² = −1`,
//! `eᵢeⱼ = −eⱼeᵢ`, blades indexed by subset bitmask (bit `i` ↔ `e_{i+1}`).
//!
//! Conjugation is the bar conjugation (reversion composed with grade
//! involution), so paravectors `x = x0 + x1·e1 + … + xm·em` satisfy
//! `x·conj(x) = |x|²` and `|xb| = |x||b|` for every `b`.

use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraTag};
use crate::{Error, Result};

/// Construction-time cap on the signature parameter, bounding the `2^m`
/// blade table.
pub const MAX_SIGNATURE: usize = 6;

/// An element of `R_{0,m}` as `2^m` blade coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordElement {
    m: usize,
    coeffs: Vec<f64>,
}

/// Sign from reordering the product of two basis blades into canonical
/// order (bitmask representation).
fn reorder_sign(a: usize, b: usize) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Full sign of the blade product `e_A · e_B` in `R_{0,m}`: reordering sign
/// times `(−1)` for every shared generator (`eᵢ² = −1`).
fn blade_sign(a: usize, b: usize) -> f64 {
    let metric = if (a & b).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
    reorder_sign(a, b) * metric
}

/// Bar conjugation sign for a grade-`k` blade: `(−1)^{k(k+1)/2}`.
fn conj_sign(grade: u32) -> f64 {
    if (grade * (grade + 1) / 2) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

impl CliffordElement {
    pub fn new(m: usize, coeffs: Vec<f64>) -> Result<Self> {
        if m > MAX_SIGNATURE {
            return Err(Error::SignatureTooLarge(m));
        }
        let expected = 1usize << m;
        if coeffs.len() != expected {
            return Err(Error::BladeCount {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(CliffordElement { m, coeffs })
    }

    pub fn zero(m: usize) -> Result<Self> {
        CliffordElement::new(m, vec![0.0; 1 << m])
    }

    pub fn from_real(m: usize, r: f64) -> Result<Self> {
        let mut e = CliffordElement::zero(m)?;
        e.coeffs[0] = r;
        Ok(e)
    }

    /// The generator `e_{i+1}` (so `basis_vector(m, 0)` is `e1`).
    pub fn basis_vector(m: usize, i: usize) -> Result<Self> {
        if i >= m {
            return Err(Error::invalid(format!(
                "generator index {i} out of range for R_0,{m}"
            )));
        }
        let mut e = CliffordElement::zero(m)?;
        e.coeffs[1 << i] = 1.0;
        Ok(e)
    }

    /// The paravector `c[0] + c[1]·e1 + … + c[m]·em` from `m + 1` components.
    pub fn paravector(m: usize, components: &[f64]) -> Result<Self> {
        if components.len() != m + 1 {
            return Err(Error::invalid(format!(
                "paravector needs {} components for R_0,{m}, got {}",
                m + 1,
                components.len()
            )));
        }
        let mut e = CliffordElement::zero(m)?;
        e.coeffs[0] = components[0];
        for i in 0..m {
            e.coeffs[1 << i] = components[i + 1];
        }
        Ok(e)
    }

    pub fn signature(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, blade: usize) -> f64 {
        self.coeffs[blade]
    }

    /// True when only the scalar and grade-1 blades are populated.
    pub fn is_paravector(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(blade, &c)| blade.count_ones() <= 1 || c == 0.0)
    }

    fn assert_same_signature(&self, rhs: &Self) {
        assert_eq!(
            self.m, rhs.m,
            "mixed Clifford signatures: R_0,{} vs R_0,{}",
            self.m, rhs.m
        );
    }
}

impl Algebra for CliffordElement {
    fn tag(&self) -> AlgebraTag {
        AlgebraTag::Clifford(self.m)
    }

    fn real_like(&self, r: f64) -> Self {
        CliffordElement::from_real(self.m, r).expect("signature already validated")
    }

    fn add(&self, rhs: &Self) -> Self {
        self.assert_same_signature(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .map(|(a, b)| a + b)
            .collect();
        CliffordElement { m: self.m, coeffs }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.assert_same_signature(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .map(|(a, b)| a - b)
            .collect();
        CliffordElement { m: self.m, coeffs }
    }

    fn neg(&self) -> Self {
        self.scale(-1.0)
    }

    fn scale(&self, s: f64) -> Self {
        CliffordElement {
            m: self.m,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.assert_same_signature(rhs);
        let mut out = vec![0.0; self.coeffs.len()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            for (b, &cb) in rhs.coeffs.iter().enumerate() {
                if cb == 0.0 {
                    continue;
                }
                out[a ^ b] += blade_sign(a, b) * ca * cb;
            }
        }
        CliffordElement {
            m: self.m,
            coeffs: out,
        }
    }

    fn conj(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(blade, &c)| conj_sign(blade.count_ones()) * c)
            .collect();
        CliffordElement { m: self.m, coeffs }
    }

    fn real_part(&self) -> f64 {
        self.coeffs[0]
    }

    fn dot(&self, rhs: &Self) -> f64 {
        self.assert_same_signature(rhs);
        self.coeffs
            .iter()
            .zip(rhs.coeffs.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    fn inverse(&self) -> Result<Self> {
        let norm_sq = self.modulus_sq();
        if norm_sq == 0.0 {
            return Err(Error::NonInvertible);
        }
        let candidate = self.conj().scale(1.0 / norm_sq);
        // Bar conjugation only inverts elements with a·conj(a) real; verify.
        let residual = self
            .mul(&candidate)
            .sub(&self.one_like())
            .modulus();
        if residual > 1e-9 {
            return Err(Error::NonInvertible);
        }
        Ok(candidate)
    }

    fn default_slice_unit_like(&self) -> Self {
        CliffordElement::basis_vector(self.m.max(1), 0).expect("e1 exists for m >= 1")
    }

    fn imaginary_basis_like(&self) -> Vec<Self> {
        (0..self.m)
            .map(|i| CliffordElement::basis_vector(self.m, i).expect("validated"))
            .collect()
    }

    fn is_evaluation_point(&self) -> bool {
        self.is_paravector()
    }

    fn json_value(&self) -> serde_json::Value {
        serde_json::json!({ "m": self.m, "coeffs": self.coeffs })
    }
}

#[derive(Serialize, Deserialize)]
struct CliffordJson {
    m: usize,
    coeffs: Vec<f64>,
}

impl Serialize for CliffordElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CliffordJson {
            m: self.m,
            coeffs: self.coeffs.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CliffordElement {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let raw = CliffordJson::deserialize(deserializer)?;
        CliffordElement::new(raw.m, raw.coeffs).map_err(serde::de::Error::custom)
    }
}
