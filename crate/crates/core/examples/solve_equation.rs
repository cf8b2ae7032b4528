//! Solve for x at one (k, a), then search a whole range of k.
//!
//! cargo run --release --example solve_equation -- 150

use binomeq::equation::sieve_for;
use binomeq::{exhaustive_search, solve_x, verify_a1_identity, Mode};

fn main() -> binomeq::Result<()> {
    let k_max: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(60);
    let sieve = sieve_for(k_max.max(12))?;

    for (k, a) in [(7, 1), (12, 5), (12, 8)] {
        println!("k={k} a={a}: {:?}", solve_x(k, a, &sieve)?);
    }
    println!("C(2k,k)/C(2k-1,k-1) at k=9: {}", verify_a1_identity(9, &sieve)?);

    for mode in [Mode::Standard, Mode::Moser] {
        let r = exhaustive_search(1, k_max, mode)?;
        println!(
            "{} k<={k_max}: {} solutions, {} pairs ({} pruned, {} without x), matches expected: {}",
            mode.as_str(),
            r.solutions.len(),
            r.pairs_checked,
            r.non_integral,
            r.no_matching_x,
            r.matches_expected()
        );
    }
    Ok(())
}
