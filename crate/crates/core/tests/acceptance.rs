//! The acceptance suite: one line per criterion, then a single assertion
//! over all of them.

use std::time::{Duration, Instant};

use polymon::analysis::{
    assoc_exhaustive, assoc_p_sampled, assoc_s_sampled, axioms_suite, chain_report,
    coarseness_report, congruence_saturate, congruence_suite, hausdorff_report, isomorphism_report,
    limit_consistency_report, mul_continuity_report, omega_chain_report, oracle_suite,
    product_report, recorded_counterexample_report, rule_disjointness_report, translation_report,
    CongruenceStatus, DEFAULT_SEED,
};
use polymon::green::ChainSpec;
use polymon::report::{CheckReport, SuiteReport};
use polymon::{Exec, PElement, Word};

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn timed(name: &'static str, run: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = run();
    Outcome {
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn describe_checks(parts: &[(&str, &CheckReport)]) -> (bool, String) {
    let passed = parts.iter().all(|(_, r)| r.ok);
    let detail = parts
        .iter()
        .map(|(label, r)| match &r.counterexample {
            None => format!("{label}: {} cases ok", r.cases),
            Some(c) => format!("{label}: FAILED {} {:?}", c.law, c.elements),
        })
        .collect::<Vec<_>>()
        .join("; ");
    (passed, detail)
}

fn describe_suites(parts: &[&SuiteReport]) -> (bool, String) {
    let passed = parts.iter().all(|r| r.passed());
    let detail = parts
        .iter()
        .map(|r| match r.failures.first() {
            None => format!("{}: {} cases ok", r.suite, r.cases),
            Some(c) => format!("{}: FAILED {} {:?}", r.suite, c.law, c.elements),
        })
        .collect::<Vec<_>>()
        .join("; ");
    (passed, detail)
}

fn spec(pre: &str, per: &str) -> ChainSpec {
    ChainSpec::new(Word::parse(pre, 2).unwrap(), Word::parse(per, 2).unwrap()).unwrap()
}

#[test]
fn acceptance() {
    let exec = Exec::default();
    let start = Instant::now();
    let mut outcomes = Vec::new();

    outcomes.push(timed("1 oracle equivalence", || {
        let t = Instant::now();
        let report = oracle_suite(3, exec);
        let fast = t.elapsed() < Duration::from_secs(10);
        let (ok, detail) = describe_suites(&[&report]);
        (ok && fast && report.cases == 226 * 226, detail)
    }));

    outcomes.push(timed("2 inverse-semigroup axioms", || {
        describe_suites(&[&axioms_suite(3, exec)])
    }));

    outcomes.push(timed("3 associativity", || {
        describe_suites(&[
            &assoc_exhaustive(2, exec),
            &assoc_p_sampled(6, 100_000, DEFAULT_SEED, exec),
            &assoc_s_sampled(100_000, DEFAULT_SEED, exec),
        ])
    }));

    outcomes.push(timed("4 topology witnesses", || {
        describe_checks(&[
            ("translations", &translation_report(6, exec)),
            ("products", &product_report(6, exec)),
            (
                "recorded counterexample",
                &recorded_counterexample_report(6),
            ),
        ])
    }));

    outcomes.push(timed("5 coarseness identity", || {
        describe_checks(&[("coarseness", &coarseness_report(6, exec))])
    }));

    outcomes.push(timed("6 chain intersection", || {
        describe_checks(&[("chains", &chain_report(50, exec))])
    }));

    outcomes.push(timed("7 extension semigroup", || {
        let ns = [1, 2, 3];
        describe_checks(&[
            ("rule disjointness", &rule_disjointness_report(6)),
            ("limits", &limit_consistency_report(4, &[1], 10, exec)),
            ("multiplication", &mul_continuity_report(2, &ns, 10, exec)),
            ("hausdorff", &hausdorff_report(3, &ns, 10, exec)),
        ])
    }));

    outcomes.push(timed("8 T isomorphic to B_omega", || {
        describe_checks(&[("isomorphism", &isomorphism_report(50, exec))])
    }));

    outcomes.push(timed("9 congruence collapse", || {
        let report = congruence_suite(2, 10, 4, exec);
        let one = PElement::one(2).unwrap();
        let state = congruence_saturate(&one, &PElement::Zero, 10, 4).unwrap();
        let unit_pair = state.status == CongruenceStatus::Collapsed && state.multiplier_depth == 1;
        let (ok, detail) = describe_suites(&[&report]);
        (ok && unit_pair && report.cases == 1176 + 1, detail)
    }));

    outcomes.push(timed("10 omega chains", || {
        let specs = [spec("e", "p1"), spec("p2", "p1"), spec("p1p2", "p2p1")];
        describe_checks(&[("omega", &omega_chain_report(&specs, 20))])
    }));

    for o in &outcomes {
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("{verdict} {} ({:.2?}): {}", o.name, o.elapsed, o.detail);
    }
    let total = start.elapsed();
    println!("total {total:.2?}");

    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.name)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
