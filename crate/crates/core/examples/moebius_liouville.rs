//! Summatory Möbius and Liouville functions, square-free counts and the
//! elementary lower bounds on `π(x)`.

use pnt_lab::rational::{lower_bound_checks, summatory, ArithFn, Tables};

fn main() -> pnt_lab::Result<()> {
    let tables = Tables::new(1_000_000)?;
    println!("{:>8} {:>6} {:>6} {:>8} {:>9} {:>6} {:>6}", "x", "M(x)", "L(x)", "Q(x)", "Q(x)/x", "euclid", "sqfree");
    for k in 1..=6 {
        let x = 10f64.powi(k);
        let m = summatory(ArithFn::Moebius, x, &tables)?;
        let l = summatory(ArithFn::Liouville, x, &tables)?;
        let b = lower_bound_checks(x, &tables)?;
        println!(
            "{:>8} {:>6} {:>6} {:>8} {:>9.6} {:>6} {:>6}",
            x,
            m,
            l,
            b.q_x,
            b.q_x as f64 / x,
            b.euclid_ok,
            b.squarefree_ok
        );
    }
    println!("\n6/pi^2 = {:.6}", 6.0 / std::f64::consts::PI.powi(2));
    Ok(())
}
