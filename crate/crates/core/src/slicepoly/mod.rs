//! Slice regular polynomials `P(q) = Σ qʲ·aⱼ` with right-hand coefficients
//! in one of the three algebras: construction, evaluation, derivative,
//! *-product, regular conjugate, symmetrization, slice restriction and
//! coefficient-slice detection.

mod complex;
mod json;

pub use complex::ComplexSlicePolynomial;
pub use json::AnyPolynomial;

use crate::hypercomplex::{Algebra, AlgebraTag, ImaginaryUnit, Quaternion};
use crate::{Error, Result};

/// Relative tolerance for rejecting non-parallel imaginary parts in the
/// coefficient-slice tests. Zero imaginary parts are parallel to everything.
const SLICE_PARALLEL_TOL: f64 = 1e-10;

/// A polynomial with right coefficients `a_0..a_n`. Trailing exact-zero
/// coefficients are trimmed on construction; the coefficient list is never
/// empty (the zero polynomial keeps a single zero coefficient and has
/// degree `None`, the `−∞` sentinel).
#[derive(Debug, Clone, PartialEq)]
pub struct SlicePolynomial<A: Algebra> {
    coeffs: Vec<A>,
}

impl<A: Algebra> SlicePolynomial<A> {
    /// Builds a polynomial from `a_0..a_n`. Rejects an empty list and mixed
    /// Clifford signatures.
    pub fn new(coeffs: Vec<A>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("empty coefficient list"));
        }
        let tag = coeffs[0].tag();
        for c in &coeffs[1..] {
            if c.tag() != tag {
                return Err(Error::AlgebraMismatch(tag, c.tag()));
            }
        }
        let mut p = SlicePolynomial { coeffs };
        p.trim();
        Ok(p)
    }

    pub fn constant(a: A) -> Self {
        SlicePolynomial { coeffs: vec![a] }
    }

    pub fn zero_like(proto: &A) -> Self {
        SlicePolynomial::constant(proto.zero_like())
    }

    /// The monomial `qⁿ·a`.
    pub fn monomial(n: usize, a: A) -> Self {
        let mut coeffs = vec![a.zero_like(); n + 1];
        coeffs[n] = a;
        let mut p = SlicePolynomial { coeffs };
        p.trim();
        p
    }

    /// The linear factor `q − c`.
    pub fn linear_factor(c: A) -> Self {
        let one = c.one_like();
        SlicePolynomial {
            coeffs: vec![c.neg(), one],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().unwrap().modulus() == 0.0 {
            self.coeffs.pop();
        }
    }

    /// Largest index with nonzero coefficient; `None` is the `−∞` sentinel
    /// of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.len() == 1 && self.coeffs[0].modulus() == 0.0 {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    /// Coefficient of `qʲ` (zero beyond the stored degree).
    pub fn coeff(&self, j: usize) -> A {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn leading(&self) -> &A {
        self.coeffs.last().unwrap()
    }

    pub fn tag(&self) -> AlgebraTag {
        self.coeffs[0].tag()
    }

    pub(crate) fn proto(&self) -> &A {
        &self.coeffs[0]
    }

    /// Euclidean norm of the coefficient vector, `sqrt(Σ |aⱼ|²)`.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs
            .iter()
            .map(|c| c.modulus_sq())
            .sum::<f64>()
            .sqrt()
    }

    /// Evaluates `Σ qʲaⱼ` by right-coefficient Horner, accumulating
    /// `r ← q·r + aⱼ` from the top so powers stay on the left of the
    /// coefficients. Errors when `q` is not a valid evaluation point
    /// (non-paravector in the Clifford case) or belongs to a different
    /// signature.
    pub fn eval(&self, q: &A) -> Result<A> {
        if q.tag() != self.tag() {
            return Err(Error::AlgebraMismatch(self.tag(), q.tag()));
        }
        if !q.is_evaluation_point() {
            return Err(Error::NotParavector);
        }
        Ok(self.eval_unchecked(q))
    }

    pub(crate) fn eval_unchecked(&self, q: &A) -> A {
        let mut r = self.coeffs[0].zero_like();
        for a in self.coeffs.iter().rev() {
            r = q.mul(&r).add(a);
        }
        r
    }

    /// Term-by-term derivative `P′(q) = Σ q^{j−1}·j·aⱼ`.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return SlicePolynomial::zero_like(&self.coeffs[0]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, a)| a.scale(j as f64))
            .collect();
        let mut p = SlicePolynomial { coeffs };
        p.trim();
        p
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.tag(), rhs.tag(), "mixed algebras in polynomial add");
        let zero = self.coeffs[0].zero_like();
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|j| {
                let a = self.coeffs.get(j).unwrap_or(&zero);
                let b = rhs.coeffs.get(j).unwrap_or(&zero);
                a.add(b)
            })
            .collect();
        let mut p = SlicePolynomial { coeffs };
        p.trim();
        p
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        SlicePolynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut p = SlicePolynomial {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        };
        p.trim();
        p
    }

    /// Right-multiplies every coefficient by the constant `c`, i.e. the
    /// *-product with the constant polynomial `c`. Pointwise this is
    /// `q ↦ P(q)·c`, so zeros of `P` are preserved.
    pub fn mul_const_right(&self, c: &A) -> Self {
        let mut p = SlicePolynomial {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        };
        p.trim();
        p
    }

    /// The regular (Cauchy/convolution) product
    /// `f∗g = Σ qⁿ (Σₖ aₖ·b_{n−k})`. Associative, distributive, and not
    /// commutative in general.
    pub fn star(&self, rhs: &Self) -> Self {
        assert_eq!(self.tag(), rhs.tag(), "mixed algebras in *-product");
        let zero = self.coeffs[0].zero_like();
        if self.is_zero() || rhs.is_zero() {
            return SlicePolynomial::zero_like(&zero);
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![zero; n];
        for (j, a) in self.coeffs.iter().enumerate() {
            for (k, b) in rhs.coeffs.iter().enumerate() {
                out[j + k] = out[j + k].add(&a.mul(b));
            }
        }
        let mut p = SlicePolynomial { coeffs: out };
        p.trim();
        p
    }

    /// The regular conjugate `f^c(q) = Σ qⁿ·conj(aₙ)`; an involution.
    pub fn regular_conjugate(&self) -> Self {
        SlicePolynomial {
            coeffs: self.coeffs.iter().map(|c| c.conj()).collect(),
        }
    }
}

impl SlicePolynomial<Quaternion> {
    /// The symmetrization `f^s = f ∗ f^c = f^c ∗ f`; its coefficients
    /// `Σₖ aₖ·conj(a_{n−k})` are real.
    pub fn symmetrization(&self) -> Self {
        self.star(&self.regular_conjugate())
    }

    /// Real parts of the symmetrized coefficients (the imaginary parts
    /// vanish up to rounding).
    pub fn symmetrization_real_coeffs(&self) -> Vec<f64> {
        self.symmetrization()
            .coeffs()
            .iter()
            .map(|c| c.real_part())
            .collect()
    }

    /// Pointwise value of the *-product:
    /// `f∗g(q) = f(q)·g(f(q)⁻¹ q f(q))` when `f(q) ≠ 0`, else `0`.
    pub fn star_value_at(&self, rhs: &Self, q: &Quaternion) -> Quaternion {
        let fq = self.eval_unchecked(q);
        if fq.is_zero() {
            return Quaternion::ZERO;
        }
        let inv = fq.inverse().expect("nonzero quaternion inverts");
        let conjugated = inv.mul(q).mul(&fq);
        fq.mul(&rhs.eval_unchecked(&conjugated))
    }

    /// Direction of the common coefficient slice: `Some(I)` when every
    /// coefficient lies in `C_I` (nonreal imaginary parts pairwise
    /// parallel), the default unit `i` when all coefficients are real,
    /// `None` otherwise.
    pub fn common_coefficient_slice(&self) -> Option<ImaginaryUnit> {
        let mut slice_unit: Option<ImaginaryUnit> = None;
        for c in &self.coeffs {
            let im = c.imaginary();
            let im_norm = c.imaginary_norm();
            if im_norm == 0.0 {
                continue;
            }
            match slice_unit {
                None => slice_unit = ImaginaryUnit::new(im).ok(),
                Some(unit) => {
                    let d = unit.direction();
                    let cross = [
                        im[1] * d[2] - im[2] * d[1],
                        im[2] * d[0] - im[0] * d[2],
                        im[0] * d[1] - im[1] * d[0],
                    ];
                    let cross_norm =
                        (cross[0] * cross[0] + cross[1] * cross[1] + cross[2] * cross[2]).sqrt();
                    if cross_norm > SLICE_PARALLEL_TOL * im_norm {
                        return None;
                    }
                }
            }
        }
        Some(slice_unit.unwrap_or(ImaginaryUnit::I))
    }

    /// Views the polynomial as a genuinely complex polynomial over `C_I`.
    /// Succeeds iff every coefficient lies in the slice of `unit`.
    pub fn restrict_to_slice(&self, unit: &ImaginaryUnit) -> Result<ComplexSlicePolynomial> {
        let d = unit.direction();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let im = c.imaginary();
            let v = im[0] * d[0] + im[1] * d[1] + im[2] * d[2];
            let residual = [im[0] - v * d[0], im[1] - v * d[1], im[2] - v * d[2]];
            let residual_norm =
                (residual[0] * residual[0] + residual[1] * residual[1] + residual[2] * residual[2])
                    .sqrt();
            let im_norm = c.imaginary_norm();
            if im_norm > 0.0 && residual_norm > SLICE_PARALLEL_TOL * im_norm {
                return Err(Error::CoefficientsLeaveSlice);
            }
            coeffs.push(num_complex::Complex64::new(c.real_part(), v));
        }
        Ok(ComplexSlicePolynomial::new(*unit, coeffs))
    }

    /// Fraction of coefficient mass below the leading term,
    /// `max_{j<n} |aⱼ|` — the monomial detector input.
    pub fn max_subleading_modulus(&self) -> f64 {
        match self.degree() {
            Some(n) if n >= 1 => self.coeffs[..n]
                .iter()
                .map(|c| c.modulus())
                .fold(0.0, f64::max),
            _ => 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::{CliffordElement, Octonion};
    use num_complex::Complex64;

    fn q(x0: f64, x1: f64, x2: f64, x3: f64) -> Quaternion {
        Quaternion::new(x0, x1, x2, x3)
    }

    /// The running counterexample `(q − i) ∗ (q − j) = q² − q(i+j) + k`.
    fn counterexample() -> SlicePolynomial<Quaternion> {
        SlicePolynomial::linear_factor(Quaternion::I)
            .star(&SlicePolynomial::linear_factor(Quaternion::J))
    }

    #[test]
    fn star_product_examples() {
        let p = counterexample();
        assert_eq!(
            p.coeffs(),
            &[
                Quaternion::K,
                Quaternion::I.add(&Quaternion::J).neg(),
                Quaternion::ONE
            ]
        );
        // reversed order flips the sign of the constant term: ji = −k
        let r = SlicePolynomial::linear_factor(Quaternion::J)
            .star(&SlicePolynomial::linear_factor(Quaternion::I));
        assert_eq!(
            r.coeffs(),
            &[
                Quaternion::K.neg(),
                Quaternion::I.add(&Quaternion::J).neg(),
                Quaternion::ONE
            ]
        );
        // f ∗ 1 = f
        let one = SlicePolynomial::constant(Quaternion::ONE);
        assert_eq!(p.star(&one), p);
    }

    #[test]
    fn eval_examples() {
        let p = counterexample();
        assert_eq!(p.eval(&Quaternion::I).unwrap(), Quaternion::ZERO);
        assert_eq!(p.eval(&Quaternion::ZERO).unwrap(), Quaternion::K);
        let m = SlicePolynomial::monomial(5, q(0.0, 0.0, 2.0, 0.0));
        assert_eq!(m.eval(&Quaternion::ONE).unwrap(), q(0.0, 0.0, 2.0, 0.0));
    }

    #[test]
    fn derivative_examples() {
        let p = counterexample();
        let dp = p.derivative();
        assert_eq!(
            dp.coeffs(),
            &[Quaternion::I.add(&Quaternion::J).neg(), Quaternion::from_real(2.0)]
        );
        let m = SlicePolynomial::monomial(4, Quaternion::K);
        assert_eq!(m.derivative(), SlicePolynomial::monomial(3, Quaternion::K.scale(4.0)));
        let c = SlicePolynomial::constant(Quaternion::J);
        assert!(c.derivative().is_zero());
        assert_eq!(c.derivative().degree(), None);
    }

    #[test]
    fn zero_polynomial_sentinel() {
        let z = SlicePolynomial::new(vec![Quaternion::ZERO, Quaternion::ZERO]).unwrap();
        assert_eq!(z.degree(), None);
        assert!(z.is_zero());
        assert_eq!(z.coeffs().len(), 1);
        // degree arithmetic in star never underflows
        let p = counterexample();
        assert!(p.star(&z).is_zero());
    }

    #[test]
    fn regular_conjugate_involution() {
        let p = counterexample();
        assert_eq!(p.regular_conjugate().regular_conjugate(), p);
        let lin = SlicePolynomial::linear_factor(Quaternion::I);
        assert_eq!(
            lin.regular_conjugate().coeffs(),
            &[Quaternion::I, Quaternion::ONE]
        );
    }

    #[test]
    fn symmetrization_examples() {
        // (q − i)^s = q² + 1
        let f = SlicePolynomial::linear_factor(Quaternion::I);
        let fs = f.symmetrization();
        assert_eq!(
            fs.coeffs(),
            &[Quaternion::ONE, Quaternion::ZERO, Quaternion::ONE]
        );
        // counterexample symmetrizes to (q² + 1)²
        let ps = counterexample().symmetrization();
        assert_eq!(counterexample().symmetrization_real_coeffs().len(), 5);
        let expect = [1.0, 0.0, 2.0, 0.0, 1.0];
        for (c, e) in ps.coeffs().iter().zip(expect) {
            assert!(c.sub(&Quaternion::from_real(e)).modulus() < 1e-14);
        }
        // f ∗ f^c = f^c ∗ f
        let p = counterexample();
        let lhs = p.star(&p.regular_conjugate());
        let rhs = p.regular_conjugate().star(&p);
        for (a, b) in lhs.coeffs().iter().zip(rhs.coeffs()) {
            assert!(a.sub(b).modulus() < 1e-14);
        }
    }

    #[test]
    fn pointwise_star_matches_cauchy() {
        let f = SlicePolynomial::linear_factor(Quaternion::I);
        let g = SlicePolynomial::linear_factor(Quaternion::J);
        // f(i) = 0 ⇒ pointwise value 0
        assert_eq!(f.star_value_at(&g, &Quaternion::I), Quaternion::ZERO);
        // constant c: f∗g(q) = c·g(c⁻¹qc)
        let c = q(0.4, 1.0, -0.3, 0.8);
        let fc = SlicePolynomial::constant(c);
        let point = q(0.2, -0.5, 0.9, 0.1);
        let direct = {
            let inv = c.inverse().unwrap();
            c.mul(&g.eval(&inv.mul(&point).mul(&c)).unwrap())
        };
        assert!(fc.star_value_at(&g, &point).sub(&direct).modulus() < 1e-13);
    }

    #[test]
    fn common_slice_detection() {
        let in_slice = SlicePolynomial::new(vec![
            Quaternion::ONE,
            q(2.0, 1.0, 0.0, 0.0),
            q(0.0, 3.0, 0.0, 0.0),
        ])
        .unwrap();
        assert_eq!(in_slice.common_coefficient_slice(), Some(ImaginaryUnit::I));

        let mixed = SlicePolynomial::new(vec![Quaternion::I, Quaternion::J]).unwrap();
        assert_eq!(mixed.common_coefficient_slice(), None);

        let real = SlicePolynomial::new(vec![
            Quaternion::from_real(1.0),
            Quaternion::from_real(2.0),
            Quaternion::from_real(3.0),
        ])
        .unwrap();
        assert_eq!(real.common_coefficient_slice(), Some(ImaginaryUnit::I));
    }

    #[test]
    fn restriction_examples() {
        let p = SlicePolynomial::new(vec![
            q(2.0, 3.0, 0.0, 0.0),
            Quaternion::I,
            Quaternion::ONE,
        ])
        .unwrap();
        let r = p.restrict_to_slice(&ImaginaryUnit::I).unwrap();
        assert_eq!(r.coeffs()[0], Complex64::new(2.0, 3.0));
        assert_eq!(r.coeffs()[1], Complex64::new(0.0, 1.0));
        assert_eq!(r.coeffs()[2], Complex64::new(1.0, 0.0));

        // real coefficients restrict to any slice
        let real = SlicePolynomial::new(vec![Quaternion::ONE, Quaternion::from_real(-2.0)]).unwrap();
        assert!(real.restrict_to_slice(&ImaginaryUnit::K).is_ok());

        assert_eq!(
            counterexample().restrict_to_slice(&ImaginaryUnit::I),
            Err(Error::CoefficientsLeaveSlice)
        );
    }

    #[test]
    fn octonion_and_clifford_polynomials_evaluate() {
        let a = Octonion::basis(5);
        let p = SlicePolynomial::new(vec![Octonion::from_real(1.0), a]).unwrap();
        let x = Octonion::basis(2).scale(0.5);
        let v = p.eval(&x).unwrap();
        assert!(v.sub(&Octonion::from_real(1.0).add(&x.mul(&a))).modulus() < 1e-15);

        let e1 = CliffordElement::basis_vector(2, 0).unwrap();
        let c = SlicePolynomial::new(vec![e1.one_like(), e1.clone()]).unwrap();
        let pt = CliffordElement::paravector(2, &[0.3, 0.4, -0.2]).unwrap();
        assert!(c.eval(&pt).is_ok());
        let bivector = e1.mul(&CliffordElement::basis_vector(2, 1).unwrap());
        assert_eq!(c.eval(&bivector), Err(Error::NotParavector));
        let wrong_m = CliffordElement::paravector(3, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(c.eval(&wrong_m), Err(Error::AlgebraMismatch(_, _))));
    }
}
