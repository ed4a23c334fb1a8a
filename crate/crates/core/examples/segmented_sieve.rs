//! Streaming primes segment by segment, and the arithmetic-function table.

use pnt_lab::sieve::{build_arith_table, build_prime_table, factorize, for_each_prime, prime_count};

fn main() -> pnt_lab::Result<()> {
    let mut count = 0u64;
    let mut last = 0u64;
    for_each_prime(100_000_000, |p| {
        count += 1;
        last = p;
    });
    println!("primes up to 1e8: {count}, largest {last}");

    let table = build_prime_table(1_000_000)?;
    for x in [10.0, 1e3, 1e6, 123_456.7] {
        println!("pi({x}) = {}", prime_count(&table, x)?);
    }

    let arith = build_arith_table(100)?;
    for n in [12u64, 30, 49, 64, 97] {
        println!(
            "n = {n:>2}  factors {:?}  mu = {:>2}  lambda = {:>2}  Lambda = {:.4}",
            factorize(n),
            arith.moebius(n),
            arith.liouville(n),
            arith.mangoldt(n)
        );
    }
    Ok(())
}
