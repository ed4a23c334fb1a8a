//! Mertens' three estimates converging to their constants.

use pnt_lab::rational::{mertens_report, Tables};

fn main() -> pnt_lab::Result<()> {
    let tables = Tables::new(10_000_000)?;
    let euler_gamma = 0.577_215_664_901_532_9_f64;
    println!("{:>10} {:>12} {:>12} {:>12} {:>12}", "x", "A", "B", "P", "c5");
    for k in 2..=7 {
        let m = mertens_report(10f64.powi(k), &tables)?;
        println!("{:>10} {:>12.8} {:>12.8} {:>12.8} {:>12.8}", m.x, m.a, m.b, m.p, m.c5_partial);
    }
    println!("\nexp(-gamma) = {:.8}", (-euler_gamma).exp());
    Ok(())
}
