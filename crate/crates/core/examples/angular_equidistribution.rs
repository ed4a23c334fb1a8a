//! Arguments of Gaussian primes spread evenly around the circle.

use std::f64::consts::PI;

use pnt_lab::hecke::{HeckeContext, SectorQuery};

fn main() -> pnt_lab::Result<()> {
    let x = 10_000_000.0;
    let ctx = HeckeContext::new(x as u64)?;

    let r = ctx.equidist_report(x, 16, 4)?;
    let total: u64 = r.counts.iter().sum();
    println!("{total} prime elements of norm <= {x} in 16 bins");
    for (b, c) in r.counts.iter().enumerate() {
        println!("  bin {b:>2}: {c}");
    }
    println!("max relative deviation {:.2e}", r.max_rel_dev);
    for (h, w) in r.weyl_ratios.iter().enumerate() {
        println!("  |sum_p (p/|p|)^{} ln N(p)| / psi_i = {w:.2e}", 4 * (h + 1));
    }

    let q = SectorQuery::new(x, 0.0, PI / 8.0)?;
    let sector = ctx.sector_count(&q)?;
    println!("\nprimes in [0, pi/8): {sector}, {:.4} of the total", sector as f64 / total as f64);
    Ok(())
}
