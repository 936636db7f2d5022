use num_complex::Complex64;
fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}
fn main() {
    let coeffs: Vec<Complex64> = [1.0, 0.0, 2.0, 0.0, 1.0].iter().map(|&c| Complex64::new(c, 0.0)).collect();
    let mut z = Complex64::new(-1.1292283925221054e-9, 1.0);
    for it in 0..6 {
        let (p, dp) = horner(&coeffs, z);
        println!("it {it}: z = {z}, |p| = {:.3e}, |dp| = {:.3e}", p.norm(), dp.norm());
        if p.norm() == 0.0 || dp.norm() == 0.0 { println!("break p/dp"); break; }
        let dcoeffs: Vec<Complex64> = coeffs.iter().enumerate().skip(1).map(|(j, c)| c * j as f64).collect();
        let (_, ddp) = horner(&dcoeffs, z);
        let u = p / dp;
        let du = Complex64::new(1.0, 0.0) - p * ddp / (dp * dp);
        if du.norm() == 0.0 { println!("break du"); break; }
        let step = u / du;
        if !step.is_finite() { println!("break finite"); break; }
        z -= step;
        if step.norm() <= f64::EPSILON * (1.0 + z.norm()) { println!("converged, step {:.3e}", step.norm()); break; }
    }
    println!("final z = {z}");
}
