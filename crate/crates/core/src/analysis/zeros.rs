//! Classified zero sets of quaternionic slice polynomials.
//!
//! Zeros of a slice regular polynomial are real points, isolated
//! nonreal points, or whole spheres `x + yS`; spheres carrying zeros are the
//! root spheres of the real-coefficient symmetrization `P^s`. On a sphere
//! where `P` does not vanish identically the value `P(x + yJ) = A + J·B` is
//! affine in `J`, so the unique zero is located by solving `J = −A·B⁻¹`.

use serde::Serialize;

use super::roots::{roots_real_poly, PolyRoot};
use super::sphere_affine_parts;
use crate::hypercomplex::{Algebra, Quaternion};
use crate::slicepoly::SlicePolynomial;
use crate::{Error, Result};

/// Residual threshold (relative to `1 + ‖coeffs‖`) below which a candidate
/// is accepted as a zero.
const ACCEPT_REL: f64 = 1e-8;

/// Residual threshold above which sphericity is confidently rejected;
/// residuals in the gap raise [`Error::AmbiguousClassification`].
const REJECT_REL: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RealZero {
    pub location: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IsolatedZero {
    pub location: Quaternion,
    pub multiplicity: usize,
}

/// The sphere `x + yS`, `y > 0`, on which the polynomial vanishes
/// identically. Counts twice in degree bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphericalZero {
    pub x: f64,
    pub y: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ZeroSet {
    pub real_zeros: Vec<RealZero>,
    pub isolated_zeros: Vec<IsolatedZero>,
    pub spherical_zeros: Vec<SphericalZero>,
}

impl ZeroSet {
    /// Sum of multiplicities with spheres counted twice; equals the degree
    /// when the leading coefficient is nonzero.
    pub fn total_multiplicity(&self) -> usize {
        self.real_zeros.iter().map(|z| z.multiplicity).sum::<usize>()
            + self.isolated_zeros.iter().map(|z| z.multiplicity).sum::<usize>()
            + 2 * self.spherical_zeros.iter().map(|z| z.multiplicity).sum::<usize>()
    }

    /// Moduli of all zeros (one entry per distinct zero locus).
    pub fn moduli(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.real_zeros.iter().map(|z| z.location.abs()).collect();
        out.extend(self.isolated_zeros.iter().map(|z| z.location.modulus()));
        out.extend(self.spherical_zeros.iter().map(|z| (z.x * z.x + z.y * z.y).sqrt()));
        out
    }

    /// Whether any zero lies strictly inside the open unit ball, with
    /// boundary margin `tol`.
    pub fn has_zero_in_open_ball(&self, tol: f64) -> bool {
        self.moduli().iter().any(|&m| m < 1.0 - tol)
    }

    pub fn max_modulus(&self) -> Option<f64> {
        self.moduli().into_iter().reduce(f64::max)
    }

    pub fn is_empty(&self) -> bool {
        self.real_zeros.is_empty()
            && self.isolated_zeros.is_empty()
            && self.spherical_zeros.is_empty()
    }
}

/// Gauss–Newton refinement of a zero of `P` along the slice `C_i`: steps
/// `δ ∈ C_i` minimize `|P(z) + δ·P′(z)|²`. Returns the refined point and its
/// residual. Linear rate at multiple slice zeros, hence the generous
/// iteration budget.
fn slice_gauss_newton(
    p: &SlicePolynomial<Quaternion>,
    dp: &SlicePolynomial<Quaternion>,
    z0: num_complex::Complex64,
) -> (num_complex::Complex64, f64) {
    let i_q = Quaternion::I;
    let mut z = z0;
    let mut best = z0;
    let mut best_res = p
        .eval_unchecked(&Quaternion::slice_point(z0.re, z0.im, &i_q))
        .modulus();
    for _ in 0..30 {
        let point = Quaternion::slice_point(z.re, z.im, &i_q);
        let v = p.eval_unchecked(&point);
        let w = dp.eval_unchecked(&point);
        let w_sq = w.modulus_sq();
        if w_sq == 0.0 {
            break;
        }
        let iw = i_q.mul(&w);
        let step = num_complex::Complex64::new(-v.dot(&w) / w_sq, -v.dot(&iw) / w_sq);
        if !step.is_finite() {
            break;
        }
        z += step;
        let res = p
            .eval_unchecked(&Quaternion::slice_point(z.re, z.im, &i_q))
            .modulus();
        if res < best_res {
            best_res = res;
            best = z;
        }
        if step.norm() <= 1e-14 * (1.0 + z.norm()) {
            break;
        }
    }
    (best, best_res)
}

/// Refines sphere coordinates `(x, y)` against `P` itself: root locations
/// inherited from a multiple root of `P^s` are only `eps^(1/m)` accurate,
/// while a slice zero of `P` on either side of the sphere pins the sphere
/// to machine precision. Falls back to the input when no nearby slice zero
/// improves the residual.
fn polish_sphere(p: &SlicePolynomial<Quaternion>, x: f64, y: f64) -> (f64, f64) {
    let dp = p.derivative();
    let start_res = {
        let i_q = Quaternion::I;
        let plus = p
            .eval_unchecked(&Quaternion::slice_point(x, y, &i_q))
            .modulus();
        let minus = p
            .eval_unchecked(&Quaternion::slice_point(x, -y, &i_q))
            .modulus();
        plus.min(minus)
    };
    let mut best: Option<(num_complex::Complex64, f64)> = None;
    for z0 in [
        num_complex::Complex64::new(x, y),
        num_complex::Complex64::new(x, -y),
    ] {
        let (z, res) = slice_gauss_newton(p, &dp, z0);
        if (z - z0).norm() <= 1e-3 && res < start_res {
            if best.as_ref().map_or(true, |(_, r)| res < *r) {
                best = Some((z, res));
            }
        }
    }
    match best {
        Some((z, _)) => (z.re, z.im.abs()),
        None => (x, y),
    }
}

/// Divides `P` by the real central quadratic `q² − 2xq + (x² + y²)` of the
/// sphere `x + yS`, returning the quotient and the remainder norm.
fn divide_by_sphere_factor(
    coeffs: &[Quaternion],
    x: f64,
    y: f64,
) -> (Vec<Quaternion>, f64) {
    let n = coeffs.len() - 1;
    if n < 2 {
        let rem = coeffs.iter().map(|c| c.modulus_sq()).sum::<f64>().sqrt();
        return (vec![Quaternion::ZERO], rem);
    }
    let c1 = -2.0 * x;
    let c0 = x * x + y * y;
    let mut work = coeffs.to_vec();
    let mut quotient = vec![Quaternion::ZERO; n - 1];
    for k in (2..=n).rev() {
        let lead = work[k];
        quotient[k - 2] = lead;
        work[k - 1] = work[k - 1].sub(&lead.scale(c1));
        work[k - 2] = work[k - 2].sub(&lead.scale(c0));
        work[k] = Quaternion::ZERO;
    }
    let rem = (work[0].modulus_sq() + work[1].modulus_sq()).sqrt();
    (quotient, rem)
}

/// Locates the unique zero of `p` on the sphere `x + yS` through the affine
/// representation `P(x + yJ) = A + J·B`, accepting it only when the solved
/// `J` lands on `S` within 1e−8 and the value residual is below `accept`.
fn isolated_on_sphere(
    p: &SlicePolynomial<Quaternion>,
    x: f64,
    y: f64,
    accept: f64,
) -> Result<Quaternion> {
    let (part_a, part_b) = sphere_affine_parts(p, x, y);
    if part_b.modulus() <= accept {
        // P is (numerically) constant and nonzero on the sphere — no zero
        return Err(Error::AmbiguousClassification(part_b.modulus()));
    }
    let j = part_a.neg().mul(&part_b.inverse().expect("checked nonzero"));
    if (j.modulus() - 1.0).abs() > 1e-8 || j.real_part().abs() > 1e-8 {
        return Err(Error::AmbiguousClassification(
            (j.modulus() - 1.0).abs().max(j.real_part().abs()),
        ));
    }
    // snap exactly onto S and re-verify the value there
    let im_norm = j.imaginary_norm();
    let j = Quaternion::new(0.0, j.x1 / im_norm, j.x2 / im_norm, j.x3 / im_norm);
    let zero = Quaternion::slice_point(x, y, &j);
    let residual = p.eval_unchecked(&zero).modulus();
    if residual > accept {
        return Err(Error::AmbiguousClassification(residual));
    }
    Ok(zero)
}

/// Classifies all zeros of a quaternionic slice polynomial as real points,
/// isolated points, or spheres, with multiplicities read off the
/// symmetrization. Requires a nonzero polynomial; the zero set of a nonzero
/// constant is empty.
pub fn zero_set(p: &SlicePolynomial<Quaternion>) -> Result<ZeroSet> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut zs = ZeroSet::default();
    if n == 0 {
        return Ok(zs);
    }
    let scale = 1.0 + p.coeff_norm();
    let accept = ACCEPT_REL * scale;
    let reject = REJECT_REL * scale;

    let sym_coeffs = p.symmetrization_real_coeffs();
    let roots = roots_real_poly(&sym_coeffs)?;

    for PolyRoot { x, y, multiplicity } in roots {
        if y == 0.0 {
            // a real root r of P^s always satisfies P^s(r) = |P(r)|²;
            // refine against P itself before accepting
            let (z, _) = slice_gauss_newton(p, &p.derivative(), num_complex::Complex64::new(x, 0.0));
            let x = if (z.re - x).abs() <= 1e-3 && z.im.abs() <= 1e-7 {
                z.re
            } else {
                x
            };
            let val = p.eval_unchecked(&Quaternion::from_real(x)).modulus();
            if val > accept {
                return Err(Error::AmbiguousClassification(val / scale));
            }
            zs.real_zeros.push(RealZero {
                location: x,
                multiplicity: multiplicity.div_ceil(2),
            });
            continue;
        }

        let nu = multiplicity; // multiplicity of the sphere in P^s
        let (x, y) = polish_sphere(p, x, y);
        let i_q = Quaternion::I;
        let v_plus = p
            .eval_unchecked(&Quaternion::slice_point(x, y, &i_q))
            .modulus();
        let v_minus = p
            .eval_unchecked(&Quaternion::slice_point(x, -y, &i_q))
            .modulus();
        let vmax = v_plus.max(v_minus);

        if vmax <= accept {
            // spherical: peel off the central factor as often as it divides
            let mut work = p.clone();
            let mut sphere_mult = 0usize;
            while 2 * (sphere_mult + 1) <= nu + 1 {
                let (quot, rem) = divide_by_sphere_factor(work.coeffs(), x, y);
                if rem > accept {
                    break;
                }
                work = SlicePolynomial::new(quot)?;
                sphere_mult += 1;
            }
            if sphere_mult == 0 {
                return Err(Error::AmbiguousClassification(vmax / scale));
            }
            zs.spherical_zeros.push(SphericalZero {
                x,
                y,
                multiplicity: sphere_mult,
            });
            let leftover = nu.saturating_sub(2 * sphere_mult);
            if leftover > 0 {
                let zero = isolated_on_sphere(&work, x, y, accept)?;
                zs.isolated_zeros.push(IsolatedZero {
                    location: zero,
                    multiplicity: leftover,
                });
            }
        } else if vmax >= reject {
            let zero = isolated_on_sphere(p, x, y, accept)?;
            zs.isolated_zeros.push(IsolatedZero {
                location: zero,
                multiplicity: nu,
            });
        } else {
            return Err(Error::AmbiguousClassification(vmax / scale));
        }
    }
    Ok(zs)
}
