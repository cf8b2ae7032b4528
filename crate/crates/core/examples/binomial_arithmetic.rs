//! Binomials in factored form: exact value, division, comparison, rationals.

use binomeq::factored::central_binomial;
use binomeq::{binomial_factored, compare, divide_exact, log_value, to_exact, ExactRational, Quotient};

fn main() -> binomeq::Result<()> {
    let sieve = binomeq::build_sieve(1000)?;

    let c = central_binomial(10, &sieve)?;
    println!("C(20,10) = {c} = {}", to_exact(&c));

    let big = central_binomial(150, &sieve)?;
    let li = log_value(&big);
    println!("ln C(300,150) in [{:.6}, {:.6}]", li.lo, li.hi);

    match divide_exact(&central_binomial(12, &sieve)?, &central_binomial(7, &sieve)?) {
        Quotient::Exact(q) => println!("C(24,12)/C(14,7) = {}", to_exact(&q)),
        Quotient::NotDivisible { witness } => println!("C(14,7) does not divide C(24,12) (prime {witness})"),
    }

    let a = binomial_factored(100, 50, &sieve)?;
    let b = binomial_factored(101, 49, &sieve)?;
    println!("C(100,50) vs C(101,49): {:?}", compare(&a, &b));

    let r = ExactRational::new(&a, &b);
    println!("C(100,50)/C(101,49) = {r} ~ {:.6}", r.to_f64());
    Ok(())
}
