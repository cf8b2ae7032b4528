//! Ratio identities, the 4^b bounds, case certificates and the crossover.

use binomeq::equation::sieve_for;
use binomeq::lemmas::{
    case_certificates, lemma2345_scan, lemma28_sweep, lemma29_checks, prop215_crossover, prop21_ratio,
    prop21_trichotomy, three_b_binomial_exceptions,
};

fn main() -> binomeq::Result<()> {
    let sieve = sieve_for(300)?;

    println!("ratio(10, 4) = {}", prop21_ratio(10, 4, &sieve)?);
    println!("trichotomy breaks for k <= 100: {:?}", prop21_trichotomy(100, &sieve)?);

    let (checked, bad) = lemma28_sweep(120, &sieve)?;
    println!("4^b bound: {checked} pairs, {} failures", bad.len());
    println!("C(3b,b) <= 4^b for 3 <= b <= 100: {:?}", three_b_binomial_exceptions(100, &sieve)?);

    for c in case_certificates()? {
        println!("{}: {} = 0, disc {}, roots {:?}", c.case, c.polynomial, c.discriminant, c.roots);
    }
    let small_b = lemma29_checks(100, &sieve)?;
    println!("b = 1, 2 records: {}, all hold: {}", small_b.len(), small_b.iter().all(|r| r.holds));

    let s = lemma2345_scan(120, &sieve)?;
    println!("a - x in {{1,2,3}}: {} comparisons, {} violations", s.checked, s.violations.len());

    let x = prop215_crossover(50)?;
    println!("crossover: passes {}, fails at x=2: {}", x.passes(), !x.inequality[0].holds);
    Ok(())
}
