//! Chebyshev's functions against `x`, and `π(x)` against `x/ln x` and `li(x)`.

use pnt_lab::rational::{chebyshev, factorial_identities, log_integral, EpsSchedule, Tables};

fn main() -> pnt_lab::Result<()> {
    let tables = Tables::new(10_000_000)?;
    println!("{:>10} {:>8} {:>14} {:>10} {:>10} {:>10}", "x", "pi", "li", "psi/x", "theta/x", "pi/li");
    for k in 1..=7 {
        let x = 10f64.powi(k);
        let c = chebyshev(x, &tables)?;
        let li = log_integral(x, EpsSchedule::default())?;
        println!(
            "{:>10} {:>8} {:>14.3} {:>10.6} {:>10.6} {:>10.6}",
            x,
            c.pi_x,
            li,
            c.ratio_psi,
            c.theta / x,
            c.pi_x as f64 / li
        );
    }

    let f = factorial_identities(1e5, &tables)?;
    println!("\nsum Lambda(n) floor(x/n) = {:.6}", f.lhs_a);
    println!("ln floor(x)!             = {:.6}", f.rhs_a_exact);
    println!("central binomial sum     = {:.3}  (x ln 2 = {:.3})", f.lhs_b, f.x_ln2);
    Ok(())
}
