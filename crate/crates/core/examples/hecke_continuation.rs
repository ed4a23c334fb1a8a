//! Hecke's angular series `Ξ(h, s)`: direct and continued evaluation, the
//! pole of `ζ_i` at `s = 1`, and the three-four-one functional.

use num_complex::Complex64;
use pnt_lab::hecke::{HeckeContext, Mode};

fn main() -> pnt_lab::Result<()> {
    let ctx = HeckeContext::new(1_000_000)?;

    let z = Complex64::new(2.0, 1.0);
    let d = ctx.zeta_i(z, Mode::Direct)?;
    let c = ctx.zeta_i(z, Mode::Continued)?;
    println!("zeta_i({z}): direct {:.8}  continued {:.8}", d.value, c.value);
    for h in 1..=2 {
        let d = ctx.xi(h, z, Mode::Direct)?;
        let c = ctx.xi(h, z, Mode::Continued)?;
        println!(
            "Xi({h}, {z}): direct {:.8} (tail {:.1e})  continued {:.8} (tail {:.1e})",
            d.value, d.tail_bound, c.value, c.tail_bound
        );
    }

    let inside = ctx.xi(1, Complex64::new(0.8, 0.0), Mode::Continued)?;
    println!("\nXi(1, 0.8) continued: {:.6}  tail {:.2e}", inside.value, inside.tail_bound);

    let probes: Vec<Complex64> = [1.2, 1.1, 1.05].iter().map(|&s| Complex64::new(s, 0.0)).collect();
    println!("\n(s - 1) zeta_i(s), expected to approach pi:");
    for (s, v) in ctx.residue_probe(&probes)? {
        println!("  s = {}: {:.6}", s.re, v.re);
    }

    println!("\n{:>2} {:>6} {:>6} {:>12}", "h", "sigma", "t", "functional");
    for h in 1..=3 {
        for (sigma, t) in [(1.5, 0.7), (1.2, 3.0), (1.1, 0.0)] {
            let f = ctx.three_four_one(h, sigma, t)?;
            println!("{h:>2} {sigma:>6} {t:>6} {:>12.6}", f.value);
        }
    }
    Ok(())
}
