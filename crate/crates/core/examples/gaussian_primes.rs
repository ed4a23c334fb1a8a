//! Gaussian integers: classification, canonical representatives, the lattice
//! count in a disc and the Gaussian Chebyshev function.

use pnt_lab::gaussian::{
    canonical_rep, circle_remainder, classify, enumerate_ball, gaussian_primes_upto, lattice_count,
    mangoldt_i, psi_i, r_count, GaussianInt,
};

fn main() -> pnt_lab::Result<()> {
    for (a, b) in [(1, 1), (3, 0), (2, 1), (-1, 2), (5, 0), (0, -7), (4, 4)] {
        let w = GaussianInt::new(a, b)?;
        println!(
            "{:>6}  norm {:>3}  {:?}  canonical {}  Lambda_i = {:.4}",
            w.to_string(),
            w.norm(),
            classify(w),
            canonical_rep(w)?,
            mangoldt_i(w)?
        );
    }

    let small: Vec<String> = enumerate_ball(2.0)?.map(|w| w.to_string()).collect();
    println!("\nnorm <= 2: {}", small.join(" "));

    let primes = gaussian_primes_upto(50.0)?;
    let reps: Vec<String> = primes.iter().map(|p| p.rep.to_string()).collect();
    println!("canonical primes of norm <= 50: {}", reps.join(" "));

    println!("\nr(25) = {}, r(65) = {}", r_count(25)?, r_count(65)?);
    println!("{:>9} {:>12} {:>12} {:>10}", "x", "lattice", "remainder", "psi_i/2x");
    for k in 2..=6 {
        let n = 10u64.pow(k);
        println!(
            "{n:>9} {:>12} {:>12.3} {:>10.6}",
            lattice_count(n),
            circle_remainder(n)?,
            psi_i(n as f64)? / (2.0 * n as f64)
        );
    }
    Ok(())
}
