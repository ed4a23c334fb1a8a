//! `ζ` with certified tails, and the three-four-one inequality approaching
//! the line `Re s = 1`.

use num_complex::Complex64;
use pnt_lab::dirichlet::{euler_product_zeta, three_four_one, zeta, zeta_log_deriv, zeta_reference};
use pnt_lab::sieve::build_prime_table;

fn main() -> pnt_lab::Result<()> {
    let z2 = zeta(Complex64::new(2.0, 0.0), 1e-14)?;
    println!("zeta(2)     = {:.15}  tail {:.1e}  pi^2/6 = {:.15}", z2.value.re, z2.tail_bound, std::f64::consts::PI.powi(2) / 6.0);
    let half = zeta_reference(Complex64::new(0.5, 0.0), 1e-12)?;
    println!("zeta(1/2)   = {:.12}", half.value.re);
    let rho = zeta_reference(Complex64::new(0.5, 14.134_725_141_734_69), 1e-12)?;
    println!("|zeta(rho1)| = {:.2e}", rho.value.norm());

    let table = build_prime_table(1_000_000)?;
    let ep = euler_product_zeta(Complex64::new(2.0, 0.0), &table)?;
    println!("Euler product over p <= 1e6: {:.12}  tail {:.1e}", ep.value.re, ep.tail_bound);
    let ld = zeta_log_deriv(Complex64::new(3.0, 0.0), 1e-10)?;
    println!("-zeta'/zeta(3) = {:.10}  ({} terms)", ld.value.re, ld.terms_used);

    println!("\n{:>6} {:>6} {:>12} {:>12}", "sigma", "t", "ln Theta", "tail");
    for sigma in [1.5, 1.2, 1.1, 1.05] {
        for t in [1.0, 14.134725, 21.022] {
            let f = three_four_one(sigma, t, &table)?;
            println!("{sigma:>6} {t:>6.2} {:>12.6} {:>12.2e}", f.log_theta, 8.0 * f.component_tail);
        }
    }
    Ok(())
}
