//! Arithmetic for the three coefficient algebras — quaternions `H`, octonions
//! `O` and Clifford algebras `R_{0,m}` — plus slice decomposition of
//! evaluation points `q = x + yI`.
//!
//! All types are immutable values and every operation is safe to call from
//! multiple threads. Mixing algebras is a type error; mixing Clifford
//! signatures is rejected at construction time.

mod clifford;
mod octonion;
mod quaternion;

pub use clifford::{CliffordElement, MAX_SIGNATURE};
pub use octonion::Octonion;
pub use quaternion::{inner_product_s, slice_decompose, ImaginaryUnit, Quaternion, SlicePoint};

use crate::Result;

/// Identifies the coefficient algebra an element belongs to. For Clifford
/// elements the signature parameter `m` of `R_{0,m}` is part of the tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    Quaternion,
    Octonion,
    Clifford(usize),
}

impl std::fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraTag::Quaternion => write!(f, "quaternion"),
            AlgebraTag::Octonion => write!(f, "octonion"),
            AlgebraTag::Clifford(m) => write!(f, "clifford(m={m})"),
        }
    }
}

/// Common interface of the coefficient algebras.
///
/// Constructors are exposed as `*_like` methods so that context a bare type
/// cannot carry (the Clifford signature `m`) travels with a prototype
/// element.
pub trait Algebra: Clone + PartialEq + std::fmt::Debug + Send + Sync + 'static {
    fn tag(&self) -> AlgebraTag;

    /// The real scalar `r` embedded in the same algebra (and signature).
    fn real_like(&self, r: f64) -> Self;

    fn zero_like(&self) -> Self {
        self.real_like(0.0)
    }

    fn one_like(&self) -> Self {
        self.real_like(1.0)
    }

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, s: f64) -> Self;

    /// The algebra product. Associative for `H` and `R_{0,m}`, alternative
    /// (not associative) for `O`.
    fn mul(&self, rhs: &Self) -> Self;

    /// Conjugation: negates the imaginary part for `H`/`O`, bar conjugation
    /// (reversion composed with grade involution) for `R_{0,m}`.
    fn conj(&self) -> Self;

    fn real_part(&self) -> f64;

    /// Euclidean inner product of the component vectors; equals the real
    /// part of `a · conj(b)` in all three algebras.
    fn dot(&self, rhs: &Self) -> f64;

    fn modulus_sq(&self) -> f64 {
        self.dot(self)
    }

    fn modulus(&self) -> f64 {
        self.modulus_sq().sqrt()
    }

    /// `conj(a) / |a|²`, verified to be a two-sided inverse. Errors with
    /// [`crate::Error::NonInvertible`] for zero and for Clifford elements
    /// whose bar conjugate does not invert them.
    fn inverse(&self) -> Result<Self>;

    /// The point `x + y·unit` of the slice spanned by `1` and `unit`.
    fn slice_point(x: f64, y: f64, unit: &Self) -> Self {
        unit.scale(y).add(&unit.real_like(x))
    }

    /// Fixed slice unit used when a canonical choice is needed: `i` for
    /// quaternions and octonions, `e1` for Clifford algebras.
    fn default_slice_unit_like(&self) -> Self;

    /// Orthonormal basis of the directions a slice unit may point in:
    /// `{i, j, k}`, `{e1..e7}`, or the grade-1 vectors `{e1..em}`.
    fn imaginary_basis_like(&self) -> Vec<Self>;

    /// Whether the element is a valid polynomial evaluation point
    /// (everything for `H`/`O`; paravectors only for `R_{0,m}`).
    fn is_evaluation_point(&self) -> bool {
        true
    }

    /// Whether the element squares to −1, has unit modulus, zero real part,
    /// and spans a valid slice of evaluation points.
    fn is_slice_unit(&self) -> bool {
        let sq = self.mul(self);
        (self.modulus() - 1.0).abs() <= 1e-9
            && self.real_part().abs() <= 1e-9
            && sq.add(&self.one_like()).modulus() <= 1e-9
            && Self::slice_point(0.0, 1.0, self).is_evaluation_point()
    }

    /// JSON encoding of the element: `[x0..x3]` for quaternions, a length-8
    /// array for octonions, `{"m": m, "coeffs": [..]}` for Clifford.
    fn json_value(&self) -> serde_json::Value;
}

/// Deterministic pairwise (tree) summation of algebra elements. Error grows
/// like `log n · eps` instead of `n · eps`, which the quadrature tolerances
/// rely on.
pub(crate) fn pairwise_sum<A: Algebra>(mut terms: Vec<A>, zero: A) -> A {
    if terms.is_empty() {
        return zero;
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        for pair in terms.chunks(2) {
            next.push(if pair.len() == 2 {
                pair[0].add(&pair[1])
            } else {
                pair[0].clone()
            });
        }
        terms = next;
    }
    terms.pop().unwrap()
}

/// Neumaier compensated summation for plain floats.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
