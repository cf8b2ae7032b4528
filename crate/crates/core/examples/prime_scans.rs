//! Scans for products of consecutive integers lacking a large prime factor.
//!
//! cargo run --release --example prime_scans -- 10000

use binomeq::lemmas::{prime_divisor_scan, PrimeLemma};
use binomeq::SieveTable;

fn main() -> binomeq::Result<()> {
    let bound: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2000);
    let sieve = SieveTable::new(bound)?;
    for lemma in [PrimeLemma::Hanson, PrimeLemma::Shorey, PrimeLemma::NairShorey] {
        let s = prime_divisor_scan(&lemma.constraints(bound), &sieve)?;
        println!("{lemma} (p > {}m): {} products, {} violations", lemma.multiplier(), s.checked, s.violations.len());
        for v in &s.violations {
            println!("  {} has greatest prime {}", v.spec().display_product(), v.greatest_prime);
        }
    }
    Ok(())
}
