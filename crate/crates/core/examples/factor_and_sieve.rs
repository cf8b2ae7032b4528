//! Sieve, factorization, Legendre valuations and interval prime factors.
//!
//! cargo run --example factor_and_sieve -- 360

use binomeq::{build_sieve, greatest_prime_factor_of_interval, legendre_valuation, IntervalProductSpec};

fn main() -> binomeq::Result<()> {
    let n: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(360);
    let sieve = build_sieve(n.max(100))?;

    println!("{n} = {}", sieve.factorize(n)?);
    println!("primes up to 30: {:?}", sieve.primes_up_to(30));
    for p in [2, 3, 5, 7] {
        println!("v_{p}({n}!) = {}", legendre_valuation(p, n)?);
    }
    for (start, len) in [(3, 2), (8, 2), (6, 5), (20, 4)] {
        let spec = IntervalProductSpec::new(start, len)?;
        let g = greatest_prime_factor_of_interval(spec, &sieve)?;
        println!("gpf({}) = {g}", spec.display_product());
    }
    Ok(())
}
