//! The factored search against a plain big-integer enumeration.

use binomeq::{brute_force_oracle, exhaustive_search, Mode};

fn main() -> binomeq::Result<()> {
    let k_max = 40;
    for mode in [Mode::Standard, Mode::Moser] {
        let fast = exhaustive_search(1, k_max, mode)?.solutions;
        let mut slow = brute_force_oracle(k_max, mode);
        slow.sort();
        println!("{}: search {} / oracle {} / equal {}", mode.as_str(), fast.len(), slow.len(), fast == slow);
    }
    Ok(())
}
