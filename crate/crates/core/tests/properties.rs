use std::cmp::Ordering;

use binomeq::equation::{erdos_divisibility_exceptions, sieve_for, solve_x_in_mode};
use binomeq::lemmas::{lemma2345_scan, threshold_constant_mismatches};
use binomeq::sieve::build_sieve;
use binomeq::{
    binomial_factored, brute_force_oracle, compare, divide_exact, greatest_prime_factor_of_interval,
    legendre_valuation, to_exact, FactoredNatural, IntervalProductSpec, Mode, Quotient, SieveTable, SolveOutcome,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::sync::OnceLock;

const SMALL_PRIMES: [u64; 25] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

fn sieve() -> &'static SieveTable {
    static S: OnceLock<SieveTable> = OnceLock::new();
    S.get_or_init(|| build_sieve(20_000).unwrap())
}

fn product_binomial(n: u64, r: u64) -> BigUint {
    (1..=r).fold(BigUint::from(1u8), |acc, i| acc * BigUint::from(n - r + i) / BigUint::from(i))
}

fn carries(mut r: u64, mut s: u64, p: u64) -> u32 {
    let (mut carry, mut count) = (0, 0);
    while r > 0 || s > 0 || carry > 0 {
        let d = r % p + s % p + carry;
        carry = u64::from(d >= p);
        count += carry as u32;
        r /= p;
        s /= p;
    }
    count
}

fn factored() -> impl Strategy<Value = FactoredNatural> {
    prop::collection::vec((0..SMALL_PRIMES.len(), 0u32..12), 0..10)
        .prop_map(|v| FactoredNatural::from_pairs(v.into_iter().map(|(i, e)| (SMALL_PRIMES[i], e))))
}

/// Random naturals up to `10^80`: prime powers are kept while the running
/// product stays in range.
fn factored_below_1e80() -> impl Strategy<Value = FactoredNatural> {
    prop::collection::vec((0..SMALL_PRIMES.len(), 0u32..12), 0..14).prop_map(|v| {
        let cap = BigUint::from(10u8).pow(80);
        let mut acc = FactoredNatural::one();
        for (i, e) in v {
            let next = acc.mul(&FactoredNatural::prime_power(SMALL_PRIMES[i], e));
            if to_exact(&next) <= cap {
                acc = next;
            }
        }
        acc
    })
}

#[test]
fn factorize_recomposes() {
    let s = sieve();
    for n in 1..=s.limit() {
        assert_eq!(to_exact(&s.factorize(n).unwrap()), BigUint::from(n), "n={n}");
    }
}

#[test]
fn legendre_matches_termwise_factorization() {
    for p in [2, 3, 5, 7, 11, 13, 17, 19] {
        let mut running = 0u64;
        for n in 1..=1000u64 {
            let mut v = n;
            while v % p == 0 {
                running += 1;
                v /= p;
            }
            assert_eq!(legendre_valuation(p, n).unwrap(), running, "p={p} n={n}");
        }
    }
}

#[test]
fn binomial_round_trip() {
    let s = sieve();
    for n in 0..=400u64 {
        for r in 0..=n {
            assert_eq!(to_exact(&binomial_factored(n, r, s).unwrap()), product_binomial(n, r), "C({n},{r})");
        }
    }
}

#[test]
fn kummer_carries() {
    let s = sieve();
    for n in 1..=200u64 {
        for r in 0..=n {
            let c = binomial_factored(n, r, s).unwrap();
            for &p in s.primes_up_to(n) {
                assert_eq!(c.exponent(p), carries(r, n - r, p), "C({n},{r}) at {p}");
            }
        }
    }
}

#[test]
fn search_monotonicity() {
    // C(x+2b, b) strictly increases in x.
    let s = sieve();
    for b in 1..=50u64 {
        let mut prev = binomial_factored(2 * b, b, s).unwrap();
        for x in 1..=200u64 {
            let next = binomial_factored(x + 2 * b, b, s).unwrap();
            assert_eq!(compare(&prev, &next), Ordering::Less, "b={b} x={x}");
            prev = next;
        }
    }
}

#[test]
fn erdos_spot_check() {
    let s = sieve_for(100).unwrap();
    assert!(erdos_divisibility_exceptions(100, &s).unwrap().is_empty());
}

#[test]
fn solver_agrees_with_oracle_per_pair() {
    let s = sieve_for(40).unwrap();
    for mode in [Mode::Standard, Mode::Moser] {
        let oracle = brute_force_oracle(40, mode);
        for k in 1..=40u64 {
            for a in mode.a_range(k) {
                let hit = oracle.iter().find(|e| e.k == k && e.a == a).map(|e| e.x);
                let got = match solve_x_in_mode(k, a, mode, &s).unwrap() {
                    SolveOutcome::Solution { x } => Some(x),
                    _ => None,
                };
                assert_eq!(got, hit, "{mode:?} k={k} a={a}");
            }
        }
    }
}

#[test]
fn small_case_scan_at_300() {
    let s = sieve_for(300).unwrap();
    let summary = lemma2345_scan(300, &s).unwrap();
    assert!(summary.violations.is_empty(), "{:?}", summary.violations.first());
    assert!(summary.certificates.iter().all(|c| c.holds()));
}

#[test]
fn strict_form_breaks_only_at_a5_d3() {
    // a = 5, x = 2: the quotient C(2k,k)/C(x+2b,b) tends to 2^8 = 256 > 252 = C(10,5).
    let first = (10..=300u64)
        .find(|&k| product_binomial(2 * k, k) >= product_binomial(10, 5) * product_binomial(2 + 2 * (k - 5), k - 5));
    assert_eq!(first, Some(64));
}

#[test]
fn threshold_constant_identity() {
    assert!(threshold_constant_mismatches(500).is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn compare_matches_exact(a in factored_below_1e80(), b in factored_below_1e80()) {
        prop_assert_eq!(compare(&a, &b), to_exact(&a).cmp(&to_exact(&b)));
    }

    #[test]
    fn compare_near_ties(a in factored(), p in 0..SMALL_PRIMES.len(), q in 0..SMALL_PRIMES.len()) {
        // a·p against a·q shares almost everything, so the log intervals are tight.
        let ap = a.mul(&FactoredNatural::prime_power(SMALL_PRIMES[p], 1));
        let aq = a.mul(&FactoredNatural::prime_power(SMALL_PRIMES[q], 1));
        prop_assert_eq!(compare(&ap, &aq), SMALL_PRIMES[p].cmp(&SMALL_PRIMES[q]));
    }
}

proptest! {
    #[test]
    fn pascal(n in 2u64..400, r_seed in any::<u64>()) {
        let r = 1 + r_seed % (n - 1);
        let s = sieve();
        let lhs = to_exact(&binomial_factored(n, r, s).unwrap());
        let left = binomial_factored(n - 1, r - 1, s).unwrap();
        let right = binomial_factored(n - 1, r, s).unwrap();
        prop_assert_eq!(lhs, to_exact(&left) + to_exact(&right));
    }

    #[test]
    fn divide_exact_recomposes(b in factored(), c in factored()) {
        let a = b.mul(&c);
        match divide_exact(&a, &b) {
            Quotient::Exact(q) => {
                prop_assert_eq!(&q, &c);
                prop_assert_eq!(b.mul(&q), a);
            }
            Quotient::NotDivisible { .. } => prop_assert!(false, "b divides b·c"),
        }
    }

    #[test]
    fn divide_exact_witness(a in factored(), b in factored()) {
        match divide_exact(&a, &b) {
            Quotient::Exact(q) => prop_assert_eq!(b.mul(&q), a),
            Quotient::NotDivisible { witness } => prop_assert!(b.exponent(witness) > a.exponent(witness)),
        }
    }

    #[test]
    fn gpf_monotone_in_m(n in 2u64..15_000, m in 1u64..60) {
        let s = sieve();
        let g = greatest_prime_factor_of_interval(IntervalProductSpec::new(n, m).unwrap(), s).unwrap();
        let g_next = greatest_prime_factor_of_interval(IntervalProductSpec::new(n, m + 1).unwrap(), s).unwrap();
        prop_assert!(g <= g_next);
        if m == 1 {
            prop_assert_eq!(g, s.greatest_prime_factor(n).unwrap());
        }
    }

    #[test]
    fn gpf_single_term(n in 2u64..20_000) {
        let s = sieve();
        let g = greatest_prime_factor_of_interval(IntervalProductSpec::new(n, 1).unwrap(), s).unwrap();
        let brute = (2..=n).rev().find(|&p| n % p == 0 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
        prop_assert_eq!(Some(g), brute);
    }
}
