//! Two-sided bound on C(mn, rn) over a small grid.

use binomeq::lemmas::{stanica_bounds, stanica_grid, StanicaParams};

fn main() -> binomeq::Result<()> {
    let sieve = binomeq::build_sieve(400)?;
    for (m, n, r) in [(2, 3, 1), (3, 3, 1), (5, 10, 2)] {
        let (lo, hi) = stanica_bounds(StanicaParams::new(m, n, r)?, &sieve)?;
        println!("m={m} n={n} r={r}: {} < {} < {}", lo.lhs, lo.rhs, hi.rhs);
    }
    let grid = stanica_grid(8, 40, &sieve)?;
    let tightest = grid.iter().min_by(|a, b| a.margin.total_cmp(&b.margin)).expect("non-empty grid");
    println!(
        "{} checks, all hold: {}; smallest margin {:.3e} at {} ({})",
        grid.len(),
        grid.iter().all(|r| r.holds),
        tightest.margin,
        tightest.params,
        tightest.check
    );
    Ok(())
}
