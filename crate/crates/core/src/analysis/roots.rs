//! Simultaneous root refinement for complex polynomials (Aberth–Ehrlich)
//! with multiplicity recovery by root clustering.

use num_complex::Complex64;

use crate::{Error, Result};

/// Iteration cap for the simultaneous refinement.
pub const ABERTH_MAX_SWEEPS: usize = 200;

/// Roots closer than this are clustered into one root with multiplicity.
pub const CLUSTER_RADIUS: f64 = 1e-6;

/// Imaginary parts below this are treated as real when folding conjugate
/// pairs of a real-coefficient polynomial.
const REAL_AXIS_TOL: f64 = 1e-7;

/// A root of a real-coefficient polynomial: a real root when `y == 0`, the
/// conjugate pair `x ± iy` (reported once, `y > 0`) otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyRoot {
    pub x: f64,
    pub y: f64,
    pub multiplicity: usize,
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// Scale of `p` at `z` for a backward-stable residual test.
fn eval_scale(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut scale = 0.0;
    let mut power = 1.0;
    for c in coeffs {
        scale += c.norm() * power;
        power *= r;
    }
    scale.max(f64::MIN_POSITIVE)
}

/// All complex roots of `Σ cⱼ zʲ` (coefficients low to high, leading
/// nonzero) by Aberth–Ehrlich iteration from a circular initialization.
/// Errors with [`Error::NoConvergence`] at the sweep cap.
pub fn aberth_roots(coeffs: &[Complex64], max_sweeps: usize) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() || coeffs.last().unwrap().norm() == 0.0 {
        return Err(Error::invalid("leading coefficient must be nonzero"));
    }
    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(Vec::new());
    }

    // monic normalization
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();

    // circular initial guesses of radius 1 + max |cⱼ| (Cauchy bound),
    // angles offset to break symmetry
    let radius = 1.0
        + monic[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = std::f64::consts::TAU * (k as f64 + 0.35) / degree as f64 + 0.42;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    for _ in 0..max_sweeps {
        let mut all_settled = true;
        for i in 0..degree {
            let (p, dp) = horner(&monic, z[i]);
            if !p.is_finite() || !dp.is_finite() {
                return Err(Error::NoConvergence(max_sweeps));
            }
            // backward-stable residual: already a root to within rounding
            if p.norm() <= 8.0 * f64::EPSILON * eval_scale(&monic, z[i]) {
                continue;
            }
            let newton = if dp.norm() > 0.0 {
                p / dp
            } else {
                Complex64::new(1e-8, 1e-8)
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, other) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - other;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 0.0 {
                newton / denom
            } else {
                newton
            };
            z[i] -= step;
            if step.norm() > 1e-13 * (1.0 + z[i].norm()) {
                all_settled = false;
            }
        }
        if all_settled {
            return Ok(z);
        }
    }
    // settled enough if every approximation has a tiny backward residual
    let residual_ok = z
        .iter()
        .all(|&zi| horner(&monic, zi).0.norm() <= 1e-10 * eval_scale(&monic, zi));
    if residual_ok {
        Ok(z)
    } else {
        Err(Error::NoConvergence(max_sweeps))
    }
}

/// Newton iteration on `u = p/p′`, which has a simple root at every root of
/// `p` regardless of multiplicity; polishes cluster centers (which are only
/// `√eps`-accurate for multiple roots) to machine precision.
fn polish_root(coeffs: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..6 {
        let (p, dp) = horner(coeffs, z);
        if p.norm() == 0.0 || dp.norm() == 0.0 {
            break;
        }
        // p″ by Horner on the derivative coefficients
        let dcoeffs: Vec<Complex64> = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as f64)
            .collect();
        let (_, ddp) = horner(&dcoeffs, z);
        let u = p / dp;
        let du = Complex64::new(1.0, 0.0) - p * ddp / (dp * dp);
        if du.norm() == 0.0 {
            break;
        }
        let step = u / du;
        if !step.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= f64::EPSILON * (1.0 + z.norm()) {
            break;
        }
    }
    z
}

/// Greedy transitive clustering at [`CLUSTER_RADIUS`], deterministic under
/// the sorted processing order. Returns cluster centers with sizes.
fn cluster(mut roots: Vec<Complex64>) -> Vec<(Complex64, usize)> {
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let mut clusters: Vec<Vec<Complex64>> = Vec::new();
    for r in roots {
        let mut placed = false;
        for c in clusters.iter_mut() {
            if c.iter().any(|m| (m - r).norm() <= CLUSTER_RADIUS) {
                c.push(r);
                placed = true;
                break;
            }
        }
        if !placed {
            clusters.push(vec![r]);
        }
    }
    clusters
        .into_iter()
        .map(|c| {
            let n = c.len();
            let sum: Complex64 = c.into_iter().sum();
            (sum / n as f64, n)
        })
        .collect()
}

fn clustered_polished(coeffs: &[Complex64]) -> Result<Vec<(Complex64, usize)>> {
    let raw = aberth_roots(coeffs, ABERTH_MAX_SWEEPS)?;
    Ok(cluster(raw)
        .into_iter()
        .map(|(center, size)| (polish_root(coeffs, center), size))
        .collect())
}

/// All roots of a complex-coefficient polynomial, clustered into
/// (root, multiplicity) pairs.
pub fn roots_complex_poly(coeffs: &[Complex64]) -> Result<Vec<(Complex64, usize)>> {
    clustered_polished(coeffs)
}

/// All roots of a real-coefficient polynomial: conjugate pairs matched and
/// reported once with `y > 0`, real roots with `y = 0`, multiplicities by
/// clustering.
pub fn roots_real_poly(coeffs: &[f64]) -> Result<Vec<PolyRoot>> {
    let complex: Vec<Complex64> = coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let clusters = clustered_polished(&complex)?;

    let mut out: Vec<PolyRoot> = Vec::new();
    let mut used = vec![false; clusters.len()];
    for (i, &(center, size)) in clusters.iter().enumerate() {
        if used[i] {
            continue;
        }
        used[i] = true;
        if center.im.abs() <= REAL_AXIS_TOL {
            out.push(PolyRoot {
                x: center.re,
                y: 0.0,
                multiplicity: size,
            });
            continue;
        }
        // find the conjugate partner
        let target = center.conj();
        let match_tol = CLUSTER_RADIUS * (1.0 + center.norm());
        let partner = clusters
            .iter()
            .enumerate()
            .find(|(j, (c, _))| !used[*j] && (c - target).norm() <= match_tol);
        if let Some((j, _)) = partner {
            used[j] = true;
        }
        out.push(PolyRoot {
            x: center.re,
            y: center.im.abs(),
            multiplicity: size,
        });
    }

    // merge real roots that straddled the cluster radius
    out.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
    let mut merged: Vec<PolyRoot> = Vec::new();
    for r in out {
        if let Some(last) = merged.last_mut() {
            if last.y == 0.0 && r.y == 0.0 && (last.x - r.x).abs() <= CLUSTER_RADIUS {
                last.multiplicity += r.multiplicity;
                continue;
            }
        }
        merged.push(r);
    }
    Ok(merged)
}
