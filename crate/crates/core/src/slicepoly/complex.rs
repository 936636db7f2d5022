//! Restriction of a slice polynomial to a single slice `C_I`, viewed as a
//! genuinely complex polynomial.

use num_complex::Complex64;

use crate::hypercomplex::{ImaginaryUnit, Quaternion};
use crate::slicepoly::SlicePolynomial;

/// A polynomial with coefficients in the plane `C_unit`, stored as complex
/// numbers `u + v·unit`. Evaluation at points of `C_unit` stays in `C_unit`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSlicePolynomial {
    unit: ImaginaryUnit,
    coeffs: Vec<Complex64>,
}

impl ComplexSlicePolynomial {
    pub fn new(unit: ImaginaryUnit, mut coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        while coeffs.len() > 1 && coeffs.last().unwrap().norm() == 0.0 {
            coeffs.pop();
        }
        ComplexSlicePolynomial { unit, coeffs }
    }

    pub fn unit(&self) -> &ImaginaryUnit {
        &self.unit
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0 {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut r = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            r = z * r + c;
        }
        r
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return ComplexSlicePolynomial::new(self.unit, vec![]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as f64)
            .collect();
        ComplexSlicePolynomial::new(self.unit, coeffs)
    }

    /// Lifts the complex polynomial back to quaternion coefficients
    /// `u + v·unit`.
    pub fn to_slice_polynomial(&self) -> SlicePolynomial<Quaternion> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| Quaternion::from_slice_coords(c.re, c.im, &self.unit))
            .collect();
        SlicePolynomial::new(coeffs).expect("nonempty by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercomplex::Algebra;

    #[test]
    fn restriction_round_trip() {
        let unit = ImaginaryUnit::new([1.0, 2.0, -0.5]).unwrap();
        let p = ComplexSlicePolynomial::new(
            unit,
            vec![
                Complex64::new(1.0, -2.0),
                Complex64::new(0.0, 3.0),
                Complex64::new(0.5, 0.0),
            ],
        );
        let lifted = p.to_slice_polynomial();
        let back = lifted.restrict_to_slice(&unit).unwrap();
        for (a, b) in p.coeffs().iter().zip(back.coeffs()) {
            assert!((a - b).norm() < 1e-14);
        }
        // evaluation agrees with the quaternion evaluation on the slice
        let z = Complex64::new(0.3, 0.7);
        let qz = Quaternion::from_slice_coords(z.re, z.im, &unit);
        let via_complex = p.eval(z);
        let via_quat = lifted.eval(&qz).unwrap();
        let expect = Quaternion::from_slice_coords(via_complex.re, via_complex.im, &unit);
        assert!(via_quat.sub(&expect).modulus() < 1e-13);
    }

    #[test]
    fn derivative_drops_degree() {
        let unit = ImaginaryUnit::I;
        let p = ComplexSlicePolynomial::new(
            unit,
            vec![
                Complex64::new(2.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(1.0, 0.0),
            ],
        );
        let dp = p.derivative();
        assert_eq!(dp.degree(), Some(1));
        assert_eq!(dp.coeffs()[0], Complex64::new(0.0, 1.0));
        assert_eq!(dp.coeffs()[1], Complex64::new(2.0, 0.0));
    }
}
