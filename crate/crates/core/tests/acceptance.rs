//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
//! test fails if any criterion does.
//!
//! Run with `cargo test -p binomeq --test acceptance -- --nocapture`.

use std::collections::BTreeSet;

use binomeq::equation::{exhaustive_search, sieve_for};
use binomeq::lemmas::{
    case_certificates, lemma28_sweep, prime_divisor_scan, prop215_crossover, prop21_trichotomy, stanica_grid,
    three_b_binomial_exceptions, PrimeLemma, GUARD_BAND,
};
use binomeq::report::{ReportEnvelope, Verdict};
use binomeq::sieve::{IntervalProductSpec, SieveTable};
use binomeq::{brute_force_oracle, EquationInstance, Mode};
use serde_json::json;

type Check = Result<String, String>;

fn ensure(ok: bool, pass: String, fail: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(pass)
    } else {
        Err(fail())
    }
}

fn run_cli(args: &[&str]) -> (i32, ReportEnvelope) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["binomeq"];
    full.extend_from_slice(args);
    let code = binomeq::cli::main_with_args(full, &mut out, &mut err);
    let text = String::from_utf8(out).unwrap();
    let env = ReportEnvelope::from_json(&text)
        .unwrap_or_else(|e| panic!("bad report ({e}); stderr: {}", String::from_utf8_lossy(&err)));
    (code, env)
}

fn theorem_reproduction() -> Check {
    let (code, env) = run_cli(&["verify-theorem", "--k-max", "150"]);
    let want: Vec<_> = (2..=150u64).map(|k| json!({"k": k, "a": 1, "b": k - 1, "x": 1})).collect();
    ensure(
        code == 0 && env.verdict == Verdict::Pass && env.findings == want,
        format!("{} solutions, all x = a = 1, {} pairs", env.findings.len(), env.counts["pairs_checked"]),
        || format!("exit {code}, {} findings: {:?}", env.findings.len(), env.findings.iter().take(5).collect::<Vec<_>>()),
    )
}

fn oracle_equivalence() -> Check {
    let mut notes = Vec::new();
    for mode in [Mode::Standard, Mode::Moser] {
        let fast = exhaustive_search(1, 60, mode).map_err(|e| e.to_string())?.solutions;
        let mut slow = brute_force_oracle(60, mode);
        slow.sort();
        if fast != slow {
            return Err(format!("{mode:?}: search {} vs oracle {}", fast.len(), slow.len()));
        }
        notes.push(format!("{} {}", mode.as_str(), fast.len()));
    }
    Ok(notes.join(", "))
}

fn moser_empty() -> Check {
    let r = exhaustive_search(1, 150, Mode::Moser).map_err(|e| e.to_string())?;
    let want: u64 = (1..=150u64).map(|k| k - 1).sum();
    ensure(
        r.solutions.is_empty() && r.pairs_checked == want,
        format!("0 solutions over {} pairs", r.pairs_checked),
        || format!("{:?} over {} pairs", r.solutions, r.pairs_checked),
    )
}

fn hanson_exceptions(sieve: &SieveTable) -> Check {
    let s = prime_divisor_scan(&PrimeLemma::Hanson.constraints(10_000), sieve).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> =
        s.violations.iter().map(|v| IntervalProductSpec::new(v.n, v.m).unwrap().display_product()).collect();
    let want: BTreeSet<String> = ["3·4", "8·9", "6·7·8·9·10"].iter().map(|s| s.to_string()).collect();
    ensure(got == want, format!("{got:?} out of {} products", s.checked), || format!("{got:?}"))
}

fn shorey_nair_empty(sieve: &SieveTable) -> Check {
    let mut notes = Vec::new();
    for lemma in [PrimeLemma::Shorey, PrimeLemma::NairShorey] {
        let c = lemma.constraints(10_000);
        let s = prime_divisor_scan(&c, sieve).map_err(|e| e.to_string())?;
        if !s.violations.is_empty() || s.checked == 0 || c.sum_min != 150 {
            return Err(format!("{lemma}: {} violations, first {:?}", s.violations.len(), s.violations.first()));
        }
        notes.push(format!("{lemma} 0/{}", s.checked));
    }
    Ok(notes.join(", "))
}

fn stanica_strict(sieve: &SieveTable) -> Check {
    let recs = stanica_grid(8, 40, sieve).map_err(|e| e.to_string())?;
    let expected = 2 * 40 * (1..=7).sum::<usize>();
    let bad: Vec<_> = recs.iter().filter(|r| !r.holds || !(r.margin > GUARD_BAND || r.rechecked)).collect();
    let rechecked = recs.iter().filter(|r| r.rechecked).count();
    ensure(
        bad.is_empty() && recs.len() == expected,
        format!("{} strict, {rechecked} re-evaluated", recs.len()),
        || format!("{} of {} fail, first {:?}", bad.len(), recs.len(), bad.first()),
    )
}

fn prop21(sieve: &SieveTable) -> Check {
    // prop21_ratio errors if the telescoped and direct paths disagree.
    let bad = prop21_trichotomy(200, sieve).map_err(|e| e.to_string())?;
    ensure(bad.is_empty(), "k <= 200, both paths agree".into(), || format!("{bad:?}"))
}

fn lemma28(sieve: &SieveTable) -> Check {
    let small = three_b_binomial_exceptions(100, sieve).map_err(|e| e.to_string())?;
    let (checked, bad) = lemma28_sweep(300, sieve).map_err(|e| e.to_string())?;
    let want: u64 = (6..=300u64).map(|k| k - 3 + 1 - k.div_ceil(2)).sum();
    ensure(
        small.is_empty() && bad.is_empty() && checked == want,
        format!("C(3b,b) > 4^b for b <= 100; {checked} (k, a) pairs"),
        || format!("b: {small:?}; {} bad of {checked}, first {:?}", bad.len(), bad.first()),
    )
}

fn certificates() -> Check {
    let certs = case_certificates().map_err(|e| e.to_string())?;
    let roots: Vec<Vec<i128>> = certs.iter().map(|c| c.roots.clone()).collect();
    let want: Vec<Vec<i128>> = vec![vec![4], vec![-1, 3], vec![2], vec![]];
    let last = &certs[3];
    ensure(
        roots == want && last.discriminant == 241 && !last.discriminant_is_square && certs.iter().all(|c| c.holds()),
        format!("roots {:?}, discriminant {}", &roots[..3], last.discriminant),
        || format!("{certs:?}"),
    )
}

fn crossover() -> Check {
    let s = prop215_crossover(50).map_err(|e| e.to_string())?;
    let at_two = s.inequality.iter().find(|r| r.params == "x=2").map(|r| r.holds);
    let rest = s.inequality.iter().filter(|r| r.params != "x=2").all(|r| r.holds);
    let inc = s.increasing.iter().all(|r| r.holds) && s.increasing.len() == 48;
    ensure(
        at_two == Some(false) && rest && inc && s.passes(),
        "holds for 3 <= x <= 50, fails at x = 2, difference increasing".into(),
        || format!("x=2 {at_two:?}, rest {rest}, increasing {inc}"),
    )
}

#[test]
fn acceptance_criteria() {
    let scan_sieve = SieveTable::new(10_000).unwrap();
    let lemma_sieve = sieve_for(300).unwrap();
    let results: Vec<(&str, Check)> = vec![
        ("theorem reproduction, k <= 150", theorem_reproduction()),
        ("search equals brute-force oracle, k <= 60", oracle_equivalence()),
        ("no x = 0 solutions, k <= 150", moser_empty()),
        ("1.5m exceptions, n+m-1 <= 10^4", hanson_exceptions(&scan_sieve)),
        ("1.8m and 4.42m scans, 150 <= n+m <= 10^4", shorey_nair_empty(&scan_sieve)),
        ("C(mn,rn) bounds, m <= 8, n <= 40", stanica_strict(&lemma_sieve)),
        ("ratio trichotomy, k <= 200", prop21(&lemma_sieve)),
        ("4^b bounds, b <= 100 and k <= 300", lemma28(&lemma_sieve)),
        ("polynomial case certificates", certificates()),
        ("(9/5)^x crossover, x <= 50", crossover()),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}

#[test]
fn solutions_satisfy_the_equation() {
    // Independent of the factored arithmetic: plain big-integer binomials.
    use num_bigint::BigUint;
    let binom = |n: u64, r: u64| -> BigUint {
        (1..=r).fold(BigUint::from(1u8), |acc, i| acc * BigUint::from(n - r + i) / BigUint::from(i))
    };
    for k in 2..=150u64 {
        let e = EquationInstance { k, a: 1, b: k - 1, x: 1 };
        assert_eq!(binom(2 * k, k), binom(2, 1) * binom(1 + 2 * e.b, e.b), "k={k}");
        assert!(e.holds_exactly());
    }
}
