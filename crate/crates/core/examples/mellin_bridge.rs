//! `−ζ′/ζ(z) = z ∫ ψ(x) x^{−z−1} dx`, checked numerically, and the Tauberian
//! trace `∫ (ψ(x) − x)/x² dx`.

use num_complex::Complex64;
use pnt_lab::dirichlet::{mellin_check_rational, tauberian_trace};
use pnt_lab::rational::Tables;

fn main() -> pnt_lab::Result<()> {
    let tables = Tables::new(10_000_000)?;
    for z in [Complex64::new(2.0, 0.0), Complex64::new(2.0, 3.0), Complex64::new(3.0, -1.0)] {
        let m = mellin_check_rational(z, 1e7, &tables)?;
        println!(
            "z = {z}: series {:.8}  integral {:.8}  gap {:.2e}  bound {:.2e}  holds {}",
            m.series,
            m.integral,
            m.gap,
            m.combined_bound,
            m.holds()
        );
    }

    let grid: Vec<f64> = (1..=7).map(|k| 10f64.powi(k)).collect();
    println!("\n{:>10} {:>14}", "x", "integral");
    for (x, v) in tauberian_trace(&grid, &tables)? {
        println!("{x:>10} {v:>14.8}");
    }
    Ok(())
}
