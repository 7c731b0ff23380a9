//! Acceptance suite: one line per criterion, exit status 1 on any
//! unexplained failure.
//!
//! A criterion can also end as a documented discrepancy: it fails against the
//! printed reference data, and the mismatch is exactly the one recorded in
//! `common` as a misprint in that data. Any other mismatch is a failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use circulant_core::circulant::*;
use circulant_core::exactnum::{binomial, is_prime_power};
use circulant_core::gtsys::*;
use circulant_core::{BigScalar, MultisetIndex, DEFAULT_TERM_BUDGET};
use common::*;

enum Outcome {
    Pass(String),
    Fail(String),
    /// Fails against the printed data for the documented reason only.
    Documented(String),
}

type Check = fn() -> Outcome;

fn ms(v: &[u16]) -> MultisetIndex {
    MultisetIndex::new(v.to_vec())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($msg)+));
        }
    };
}

macro_rules! tryo {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::Fail(format!("{}: {err}", stringify!($e))),
        }
    };
}

fn all_multisets(n: usize) -> Vec<Vec<u16>> {
    fn rec(n: usize, start: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in start..n as u16 {
            cur.push(i);
            rec(n, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, &mut Vec::new(), &mut out);
    out
}

fn c1_small_counts() -> Outcome {
    let d: Vec<usize> = tryo!((3..=6)
        .map(|n| det_expand(n).map(|r| r.count))
        .collect::<Result<Vec<_>, _>>());
    let p: Vec<BigScalar> = tryo!((3..=6).map(p_count_formula).collect::<Result<Vec<_>, _>>());
    let p_enum: Vec<u64> = (3..=6).map(per_support_count).collect();
    ensure!(d == [4, 10, 26, 68], "d(3..6) = {d:?}");
    ensure!(p == [4, 10, 26, 80].map(BigScalar::from), "p(3..6) = {p:?}");
    ensure!(p_enum == [4, 10, 26, 80], "|per_support(3..6)| = {p_enum:?}");
    Outcome::Pass(format!("d = {d:?}, p = [4, 10, 26, 80]"))
}

fn c2_displayed_polynomials() -> Outcome {
    let mut matched = Vec::new();
    for (n, det, per) in [(3, DET3, PER3), (4, DET4, PER4), (5, DET5, PER5)] {
        let vars = &VARS[..n];
        let per_actual = report_map(&tryo!(per_expand(n)));
        ensure!(
            per_actual == parse_display(per, vars),
            "per N={n} differs: {:?}",
            diff(&parse_display(per, vars), &per_actual)
        );
        matched.push(format!("per{n}"));
        let det_actual = report_map(&tryo!(det_expand(n)));
        let brute = report_map(&tryo!(det_brute_force(n)));
        ensure!(
            det_actual == brute,
            "det N={n}: eigenvalue product and permutation sum disagree"
        );
        let printed = parse_display(det, vars);
        if n < 5 {
            ensure!(
                det_actual == printed,
                "det N={n} differs: {:?}",
                diff(&printed, &det_actual)
            );
            matched.push(format!("det{n}"));
            continue;
        }
        let found = diff(&printed, &det_actual);
        let mut expected = Vec::new();
        for (bad, good) in DET5_MISPRINTS {
            ensure!(
                !support_congruence_check(5, &ms(bad)),
                "printed {bad:?} satisfies the congruence"
            );
            expected.push((bad.to_vec(), printed.get(bad).copied().unwrap_or(0), 0));
            expected.push((good.to_vec(), 0, det_actual.get(good).copied().unwrap_or(0)));
        }
        expected.sort();
        ensure!(
            found == expected,
            "det N=5 differs beyond the known misprints: {found:?}"
        );
        return Outcome::Documented(format!(
            "{} match termwise; det N=5 matches 24 of 26 printed terms. The printed -5zy^3u and +5y^2tu^2 \
             have index sums 9 and 13 (not divisible by 5) so cannot occur; the expansion has -5zt^3u and \
             +5y^2t^2z instead, confirmed by the permutation sum",
            matched.join(", ")
        ));
    }
    Outcome::Pass("all six displays match".into())
}

fn c3_zero_list() -> Outcome {
    let det = tryo!(det_expand(6));
    let zeros: BTreeSet<Vec<u16>> = per_support(6)
        .into_iter()
        .filter(|m| det.coefficient(m).is_zero())
        .map(|m| m.as_slice().to_vec())
        .collect();
    let c10 = tryo!(coefficient_oracle(10, &ms(&ZERO_10)));
    ensure!(c10.is_zero(), "c(10; {ZERO_10:?}) = {c10}");
    let printed: BTreeSet<Vec<u16>> = ZERO_LIST_6.iter().map(|t| t.to_vec()).collect();
    if zeros == printed {
        return Outcome::Pass("N=6 zero set equals the 12 listed tuples; N=10 coefficient is 0".into());
    }
    let (bad, good) = ZERO_LIST_6_MISPRINT;
    let missing: Vec<_> = printed.difference(&zeros).cloned().collect();
    let extra: Vec<_> = zeros.difference(&printed).cloned().collect();
    ensure!(
        missing == [bad.to_vec()] && extra == [good.to_vec()] && !support_congruence_check(6, &ms(&bad)),
        "N=6 zero set differs from the list: missing {missing:?}, extra {extra:?}"
    );
    Outcome::Documented(format!(
        "N=10 coefficient is 0; N=6 has exactly 12 zeros, 11 of them as listed. The listed {bad:?} has index \
         sum 17, so it is not a permanent monomial; the 12th zero is {good:?}"
    ))
}

fn c4_theorem() -> Outcome {
    let mut rows = Vec::new();
    for n in [3usize, 4, 5, 7, 8, 9, 6, 10, 12] {
        let c = tryo!(compare_dp(n, DEFAULT_TERM_BUDGET));
        let pp = is_prime_power(n as u64).is_some();
        ensure!(
            c.equal == pp && c.prime_power == pp,
            "N={n}: d={} p={} prime power {pp}",
            c.d,
            c.p
        );
        ensure!(c.d <= c.p, "N={n}: d > p");
        rows.push(format!("{n}:{}{}{}", c.d, if c.equal { "=" } else { "<" }, c.p));
    }
    Outcome::Pass(rows.join(" "))
}

fn c5_formula() -> Outcome {
    for n in 1..=16 {
        let f = tryo!(p_count_formula(n));
        let e = per_support_count(n);
        ensure!(f == BigScalar::from(e), "N={n}: formula {f}, enumeration {e}");
    }
    let anchors: Vec<u64> = [8, 9, 10].map(per_support_count).to_vec();
    ensure!(anchors == [810, 2704, 9252], "p(8), p(9), p(10) = {anchors:?}");
    Outcome::Pass(format!("N = 1..16 agree; p(16) = {}", per_support_count(16)))
}

fn c6_witness() -> Outcome {
    let mut shown = Vec::new();
    for n in non_prime_powers(14) {
        let (params, m) = tryo!(theorem_witness(n));
        let nn = n as usize;
        ensure!(
            in_permanent_support(nn, &m),
            "N={n}: {m:?} not in the permanent support"
        );
        ensure!(vanishing_predicate(nn, &m), "N={n}: predicate false");
        let c = tryo!(coefficient_oracle(nn, &m));
        ensure!(c.is_zero(), "N={n}: coefficient {c}");
        ensure!(params.n * params.m == n, "N={n}: bad split");
        shown.push(n.to_string());
    }
    let (_, m6) = tryo!(theorem_witness(6));
    let (_, m10) = tryo!(theorem_witness(10));
    ensure!(
        ZERO_LIST_6.iter().any(|t| t.as_slice() == m6.as_slice()),
        "N=6 witness {m6:?} is not listed"
    );
    ensure!(m10.as_slice() == ZERO_10, "N=10 witness {m10:?}");
    Outcome::Pass(format!(
        "N = {} verified; N=6 gives {:?}",
        shown.join(","),
        m6.as_slice()
    ))
}

fn c7_oracles() -> Outcome {
    for n in 1..=6 {
        ensure!(
            tryo!(det_brute_force(n)) == tryo!(det_expand(n)),
            "N={n}: permutation sum differs"
        );
    }
    let mut checked = 0;
    for n in 1..=7 {
        let det = tryo!(det_expand(n));
        for m in all_multisets(n) {
            let m = ms(&m);
            let c = tryo!(coefficient_oracle(n, &m));
            ensure!(
                c == det.coefficient(&m),
                "N={n} {m:?}: oracle {c}, expansion {}",
                det.coefficient(&m)
            );
            checked += 1;
        }
    }
    Outcome::Pass(format!(
        "brute force N<=6 equal; {checked} oracle coefficients N<=7 equal"
    ))
}

fn c8_gt_systems() -> Outcome {
    let r = tryo!(minimality_check(&tryo!(GroupAction::new(3, &[0, 1, 2]))));
    let gens: Vec<Vec<u16>> = r.generators.iter().map(|m| m.as_slice().to_vec()).collect();
    ensure!(
        gens == [vec![0, 0, 0], vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]],
        "generators {gens:?}"
    );
    ensure!(
        r.rank == 5 && r.source_dim == 6 && !r.injective && r.minimal,
        "cubic report {r:?}"
    );
    let rows = tryo!(theorem49_scan(9, DEFAULT_TERM_BUDGET));
    ensure!(
        rows.len() == 7 && rows.iter().all(|r| r.consistent),
        "theorem scan rows {rows:?}"
    );
    let minimal: Vec<usize> = rows.iter().filter(|r| r.minimal).map(|r| r.n).collect();
    Outcome::Pass(format!(
        "cubic: 4 generators, rank 5/6, minimal; N=3..9 consistent, minimal for {minimal:?}"
    ))
}

fn c9_bounds() -> Outcome {
    for n in 3..=20usize {
        let a = tryo!(GroupAction::standard(n));
        let t = tryo!(togliatti_bound_check(&a));
        let p = tryo!(p_count_formula(n));
        ensure!(t.mu == p, "N={n}: μ = {} but p(N) = {p}", t.mu);
        ensure!(
            t.bound == tryo!(binomial(2 * n as u64 - 2, n as u64 - 2)),
            "N={n}: bound {}",
            t.bound
        );
        ensure!(t.ok, "N={n}: μ = {} exceeds {}", t.mu, t.bound);
        ensure!(
            p <= tryo!(binomial(2 * n as u64 - 2, n as u64)),
            "N={n}: p(N) exceeds C(2N-2, N)"
        );
        ensure!(t.count_inequality == Some(true), "N={n}: count inequality");
    }
    Outcome::Pass("3 <= N <= 20: μ = p(N) <= C(2N-2, N-2) and p(N) <= C(2N-2, N)".into())
}

fn c10_conjecture() -> Outcome {
    let rows = tryo!(conjecture_scan(8, DEFAULT_TERM_BUDGET));
    let flagged: Vec<_> = rows.iter().filter(|r| r.missing_count != 0).collect();
    if !flagged.is_empty() {
        for r in &flagged {
            println!(
                "    FINDING: I^{}_(0,{},{}) is not minimal, {} invariant monomials missing",
                r.d, r.n, r.m, r.missing_count
            );
        }
    }
    Outcome::Pass(format!(
        "{} systems with d <= 8 scanned, {} not minimal",
        rows.len(),
        flagged.len()
    ))
}

fn c11_properties() -> Outcome {
    for n in 1..=12 {
        let det = tryo!(det_expand(n));
        ensure!(
            det.support().all(|m| support_congruence_check(n, m)),
            "N={n}: congruence fails"
        );
        if n >= 2 {
            ensure!(
                det.coefficient_sum().is_zero(),
                "N={n}: det coefficient sum {}",
                det.coefficient_sum()
            );
        }
        if n <= 9 {
            let per = tryo!(per_expand(n));
            let fact: BigScalar = (1..=n as u64).map(BigScalar::from).product();
            ensure!(per.coefficient_sum() == fact, "N={n}: per coefficient sum");
        }
        if [3, 4, 5, 7, 8, 9, 11].contains(&n) {
            let admissible = all_multisets(n)
                .into_iter()
                .filter(|m| support_congruence_check(n, &ms(m)))
                .count();
            ensure!(
                det.count == admissible,
                "N={n}: {} terms, {admissible} admissible",
                det.count
            );
        }
    }
    let r = tryo!(det_expand(7));
    let s1 = tryo!(serde_json::to_string(&r));
    let back: ExpansionReport = tryo!(serde_json::from_str(&s1));
    ensure!(
        back == r && tryo!(serde_json::to_string(&back)) == s1,
        "JSON round trip"
    );
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| conjecture_scan(6, DEFAULT_TERM_BUDGET).map(|r| serde_json::to_string(&r).unwrap()))
    };
    ensure!(tryo!(run(1)) == tryo!(run(3)), "scan output depends on worker count");
    Outcome::Pass("congruence N<=12, fullness, coefficient sums, JSON round trip and determinism".into())
}

fn main() {
    let criteria: [(u32, &str, Check, Option<Duration>); 11] = [
        (
            1,
            "small d(N), p(N) values",
            c1_small_counts,
            Some(Duration::from_secs(1)),
        ),
        (
            2,
            "displayed expansions N=3,4,5",
            c2_displayed_polynomials,
            Some(Duration::from_secs(1)),
        ),
        (
            3,
            "N=6 zero list and N=10 zero",
            c3_zero_list,
            Some(Duration::from_secs(30)),
        ),
        (
            4,
            "d(N)=p(N) iff prime power",
            c4_theorem,
            Some(Duration::from_secs(300)),
        ),
        (
            5,
            "p(N) formula vs enumeration",
            c5_formula,
            Some(Duration::from_secs(60)),
        ),
        (6, "constructive witnesses", c6_witness, Some(Duration::from_secs(120))),
        (7, "oracle equivalence", c7_oracles, None),
        (
            8,
            "GT-systems and minimality scan",
            c8_gt_systems,
            Some(Duration::from_secs(300)),
        ),
        (
            9,
            "generator bound and count inequality",
            c9_bounds,
            Some(Duration::from_secs(1)),
        ),
        (
            10,
            "three-variable minimality scan",
            c10_conjecture,
            Some(Duration::from_secs(300)),
        ),
        (11, "property suites", c11_properties, None),
    ];
    let (mut passed, mut documented, mut failed) = (0, 0, 0);
    for (id, name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let over = limit.filter(|&l| elapsed > l);
        let (tag, detail) = match (outcome, over) {
            (Outcome::Fail(d), _) => {
                failed += 1;
                ("FAIL", d)
            }
            (_, Some(l)) => {
                failed += 1;
                ("FAIL", format!("took {elapsed:.2?}, limit {l:?}"))
            }
            (Outcome::Documented(d), None) => {
                documented += 1;
                ("FAIL (documented)", d)
            }
            (Outcome::Pass(d), None) => {
                passed += 1;
                ("PASS", d)
            }
        };
        println!("[{tag}] {id:>2}. {name} ({elapsed:.2?}): {detail}");
    }
    println!("acceptance: {passed} passed, {documented} failed against misprinted reference data, {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
