//! Acceptance checks. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line regardless of output capture.
//!
//! Tolerances: every comparison below is exact (integers or reduced
//! rationals). Nothing is compared through floating point. Runtime budgets
//! are printed for information and do not affect the verdict.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use domforge_core::dompoly::brute_force;
use domforge_core::enumerate::{forests_no_isolated, trees};
use domforge_core::verify::{
    edge_removal_sweep, general_bound_sweep, kn_min_sweep, run_lemma_suites, star_min_sweep,
    sweep_forests, EdgeMode,
};
use domforge_core::{avd, compute, DomPolynomial, Graph, Rational};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const WORKERS: usize = 4;
const RANDOM_GRAPHS: usize = 1200;
const RANDOM_SEED: u64 = 0x5eed_d0e5;

type Outcome = Result<String, String>;

/// Name, check, and runtime budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

/// Subset enumeration straight from adjacency, kept apart from the library.
fn naive_poly(g: &Graph) -> DomPolynomial {
    let n = g.order();
    let mut counts = vec![0u64; n + 1];
    for s in 0u32..(1 << n) {
        let ok = (0..n).all(|v| s >> v & 1 == 1 || g.neighbors(v).iter().any(|&w| s >> w & 1 == 1));
        if ok {
            counts[s.count_ones() as usize] += 1;
        }
    }
    DomPolynomial::from_counts(counts)
}

fn criterion_1() -> Outcome {
    let reports = sweep_forests(13, WORKERS).map_err(|e| e.to_string())?;
    let total: u64 = reports.iter().map(|r| r.total).sum();
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| {
            format!(
                "n={} violations={:?} mismatches={:?}",
                r.n, r.violations, r.mismatches
            )
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{total} forests, 0 violations, 0 mismatches"))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_2() -> Outcome {
    for n in 2u32..=64 {
        let k = (n - 1) as usize;
        let got = avd(&Graph::star(k)).map_err(|e| e.to_string())?;
        let two = |e: u32| BigUint::from(1u8) << e;
        let num = BigUint::from(n - 1) + two(n - 2) * (n + 1);
        let den = two(n - 1) + 1u32;
        let want = Rational::new(num, den);
        if got != want {
            return Err(format!("n={n}: got {got}, closed form {want}"));
        }
    }
    Ok("n = 2..=64 exact".into())
}

fn criterion_3() -> Outcome {
    let reports = star_min_sweep(12, WORKERS).map_err(|e| e.to_string())?;
    let bad: Vec<_> = reports
        .iter()
        .filter(|r| !r.violations.is_empty())
        .collect();
    if bad.is_empty() {
        let total: u64 = reports.iter().map(|r| r.total).sum();
        Ok(format!("{total} trees, 0 counterexamples"))
    } else {
        Err(format!("{bad:?}"))
    }
}

fn criterion_4() -> Outcome {
    let check = |g: &Graph, what: &str| -> Result<(), String> {
        let fast = compute(g).map_err(|e| e.to_string())?;
        let slow = brute_force(g).map_err(|e| e.to_string())?;
        if fast != slow {
            return Err(format!("{what}: compute {fast} vs brute force {slow}"));
        }
        if g.order() <= 10 && slow != naive_poly(g) {
            return Err(format!(
                "{what}: brute force disagrees with subset enumeration"
            ));
        }
        Ok(())
    };
    let mut checked = 0usize;
    for n in 1..=12 {
        for (i, t) in trees(n).map_err(|e| e.to_string())?.iter().enumerate() {
            check(t, &format!("tree n={n} #{i}"))?;
            checked += 1;
        }
    }
    for n in 2..=10 {
        for (i, f) in forests_no_isolated(n)
            .map_err(|e| e.to_string())?
            .iter()
            .enumerate()
        {
            check(f, &format!("forest n={n} #{i}"))?;
            checked += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    for i in 0..RANDOM_GRAPHS {
        let n = rng.gen_range(1..=10);
        let p: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edge_list(n, &edges).map_err(|e| e.to_string())?;
        check(&g, &format!("random #{i} edges={edges:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} graphs agree coefficientwise"))
}

fn criterion_5() -> Outcome {
    let reports = run_lemma_suites(12, WORKERS).map_err(|e| e.to_string())?;
    let mut summary = Vec::new();
    for r in &reports {
        if !r.passed() {
            return Err(format!("{}: {:?}", r.suite, r.failures));
        }
        if r.checked == 0 {
            return Err(format!("{}: nothing checked", r.suite));
        }
        summary.push(format!("{} {}", r.suite, r.checked));
    }
    Ok(summary.join(", "))
}

fn criterion_6() -> Outcome {
    let mut tested = 0;
    for n in 2..=7 {
        let r = edge_removal_sweep(n, EdgeMode::AnyEdge, WORKERS).map_err(|e| e.to_string())?;
        if !r.counterexamples.is_empty() {
            return Err(format!("n={n}: {:?}", r.counterexamples));
        }
        tested += r.tested;
    }
    Ok(format!("{tested} labeled graphs, 0 counterexamples"))
}

fn criterion_7() -> Outcome {
    let mut total = 0;
    for n in 2..=7 {
        let r = general_bound_sweep(n, WORKERS, false).map_err(|e| e.to_string())?;
        if !r.violations.is_empty() {
            return Err(format!("n={n}: {:?}", r.violations));
        }
        total += r.total;
    }
    Ok(format!(
        "{total} labeled graphs without isolated vertices, 0 violations"
    ))
}

fn criterion_8() -> Outcome {
    for n in 1..=7 {
        let r = kn_min_sweep(n, WORKERS).map_err(|e| e.to_string())?;
        let complete =
            domforge_core::canonical_code(&Graph::complete(n)).map_err(|e| e.to_string())?;
        if !r.violations.is_empty() || r.equality_cases != vec![complete] {
            return Err(format!(
                "n={n}: violations {:?}, minima {:?}",
                r.violations, r.equality_cases
            ));
        }
    }
    Ok("unique minimum at K_n for n = 1..=7".into())
}

fn criterion_9() -> Outcome {
    let avd_of = |g: &Graph| avd(g).map_err(|e| e.to_string());
    let expect = |what: &str, got: Rational, want: Rational| {
        if got == want {
            Ok(())
        } else {
            Err(format!("{what}: got {got}, expected {want}"))
        }
    };
    expect(
        "avd(K_2)",
        avd_of(&Graph::complete(2))?,
        Rational::new(4, 3),
    )?;
    expect(
        "avd(K_{1,2})",
        avd_of(&Graph::star(2))?,
        Rational::integer(2),
    )?;
    for n in 1..=6 {
        expect(
            &format!("avd(empty {n})"),
            avd_of(&Graph::empty(n))?,
            Rational::integer(n),
        )?;
    }
    let p4 = compute(&Graph::path(4)).map_err(|e| e.to_string())?;
    if p4 != DomPolynomial::from_counts([0, 0, 4, 4, 1]) || p4 != naive_poly(&Graph::path(4)) {
        return Err(format!("D(P_4) = {p4}"));
    }
    expect("avd(P_4)", avd_of(&Graph::path(4))?, Rational::new(8, 3))?;
    Ok("all spot values exact".into())
}

fn criterion_10() -> Outcome {
    let run = |w: usize| -> Result<String, String> {
        let e = |e: domforge_core::Error| e.to_string();
        let mut parts = Vec::new();
        for r in sweep_forests(11, w).map_err(e)? {
            parts.push(serde_json::to_string(&r.without_timing()).unwrap());
        }
        for r in star_min_sweep(10, w).map_err(e)? {
            parts.push(serde_json::to_string(&r.without_timing()).unwrap());
        }
        for mode in [EdgeMode::AnyEdge, EdgeMode::NonPendantEdge] {
            let r = edge_removal_sweep(6, mode, w).map_err(e)?;
            parts.push(serde_json::to_string(&r.without_timing()).unwrap());
        }
        let r = general_bound_sweep(6, w, false).map_err(e)?;
        parts.push(serde_json::to_string(&r.without_timing()).unwrap());
        let r = kn_min_sweep(6, w).map_err(e)?;
        parts.push(serde_json::to_string(&r.without_timing()).unwrap());
        parts.push(serde_json::to_string(&run_lemma_suites(8, w).map_err(e)?).unwrap());
        Ok(parts.join("\n"))
    };
    let base = run(1)?;
    for w in [2, 8] {
        if run(w)? != base {
            return Err(format!("reports differ between 1 and {w} workers"));
        }
    }
    Ok(format!(
        "{} bytes identical across 1, 2, 8 workers",
        base.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("forest bound and equality shape, n <= 13", criterion_1, 60),
        ("star avd closed form, n <= 64", criterion_2, 1),
        ("star minimality among trees, n <= 12", criterion_3, 60),
        ("compute matches brute force", criterion_4, 120),
        ("identity and inequality suites", criterion_5, 300),
        ("edge removal, any edge, n <= 7", criterion_6, 600),
        ("general bound, labeled, n <= 7", criterion_7, 300),
        ("complete graph minimality, n <= 7", criterion_8, 600),
        ("spot values", criterion_9, 1),
        ("determinism across worker counts", criterion_10, 600),
    ];
    let mut failed = 0;
    for (i, &(name, f, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let over = if took > Duration::from_secs(budget) {
            " (over budget)"
        } else {
            ""
        };
        match outcome {
            Ok(msg) => println!(
                "criterion {:>2} PASS  {name}: {msg} [{took:.2?}{over}]",
                i + 1
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "criterion {:>2} FAIL  {name}: {msg} [{took:.2?}{over}]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
