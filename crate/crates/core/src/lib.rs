//! Exact verification engine for `C(2k,k) = C(2a,a)·C(x+2b,b)` with `k = a + b`.
//!
//! The crate confirms by exhaustive search that the only solutions in a
//! finite range are `x = a = 1`, and checks each supporting statement the
//! argument relies on: prime divisors of products of consecutive integers,
//! bounds on `C(mn, rn)`, ratio identities and polynomial case certificates.
//!
//! * [`sieve`]: smallest-prime-factor sieve, factorization, valuations.
//! * [`factored`]: binomials and rationals in prime-exponent form.
//! * [`equation`]: the solver, the exhaustive search and its brute-force oracle.
//! * [`lemmas`]: prime-divisor scans and inequality checks.
//! * [`report`] / [`cli`]: report envelopes and the command-line front end.

pub mod cli;
pub mod equation;
mod error;
pub mod factored;
mod hp;
pub mod lemmas;
pub mod poly;
pub mod report;
pub mod sieve;

pub use equation::{
    brute_force_oracle, exhaustive_search, solve_x, verify_a1_identity, EquationInstance, Mode, SearchReport,
    SolveOutcome,
};
pub use error::{Error, Result};
pub use factored::{
    binomial_factored, compare, divide_exact, log_value, to_exact, ExactRational, FactoredNatural, LogInterval,
    Quotient,
};
pub use poly::{quadratic_integer_roots, IntPoly};
pub use sieve::{build_sieve, greatest_prime_factor_of_interval, legendre_valuation, IntervalProductSpec, SieveTable};
