//! Acceptance criteria 1-10, each evaluated at exact equality and reported
//! as one PASS/FAIL line.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::process::Command;
use std::time::{Duration, Instant};

use duality_theorems::{check_p2_with, CheckId, CheckResult, P2Form, Subject};
use exact_linalg::{int, Rat};
use num_traits::One;
use power_algebras::identities::antiderivation_laws;
use power_algebras::{Flavor, PowerAlgebra};
use tensor_category::{DualPair, Model, Obj};
use verifier_cli::{run, Config, Report};

const SUPER_GRID: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 1), (2, 1), (1, 2)];
const BOTH: [Flavor; 2] = [Flavor::Alternating, Flavor::Symmetric];

fn config(model: Model, even: RangeInclusive<usize>, odd: RangeInclusive<usize>, flavors: &[Flavor], g_max: usize, suites: &[CheckId]) -> Config {
    Config {
        model,
        even,
        odd,
        flavors: flavors.to_vec(),
        g_max,
        suites: suites.to_vec(),
        seed: 0,
        cap: 5,
        jobs: 0,
        self_test: false,
        timings: false,
    }
}

/// `binom(n, k)` for integer `n`, by the falling factorial.
fn choose(n: i64, k: usize) -> Rat {
    (0..k as i64).fold(Rat::one(), |acc, j| acc * int(n - j) / int(j + 1))
}

fn parity(n: usize) -> Rat {
    if n.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn witness(r: &CheckResult, name: &str) -> Option<Rat> {
    r.witnesses.iter().find(|w| w.name == name).map(|w| w.value.clone())
}

fn degree(r: &CheckResult, name: &str) -> usize {
    r.params.degrees[name]
}

/// Every non-skipped result passed, and at least one ran.
fn all_pass<'a>(results: impl IntoIterator<Item = &'a CheckResult>, problems: &mut Vec<String>) -> usize {
    let mut ran = 0;
    for r in results {
        if r.is_skipped() {
            continue;
        }
        ran += 1;
        if !r.is_pass() {
            problems.push(format!("{} {} residual {} {:?}", r.id, r.params, r.residual, r.note));
        }
    }
    if ran == 0 {
        problems.push("no checks ran".into());
    }
    ran
}

/// Runs the plain grid with `g_max = dim` per dimension.
fn plain_by_dim(dims: RangeInclusive<usize>, flavors: &[Flavor], suites: &[CheckId]) -> Vec<Report> {
    dims.map(|d| run(&config(Model::Plain, d..=d, 0..=0, flavors, d, suites))).collect()
}

fn super_by_pair(g_max: impl Fn(usize, usize) -> usize, flavors: &[Flavor], suites: &[CheckId]) -> Vec<Report> {
    SUPER_GRID
        .iter()
        .map(|&(e, o)| run(&config(Model::Super, e..=e, o..=o, flavors, g_max(e, o), suites)))
        .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, summary: String) -> Outcome {
    Outcome {
        pass: problems.is_empty(),
        detail: if problems.is_empty() {
            summary
        } else {
            format!("{summary}; {}", problems.join("; "))
        },
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut reports: Vec<Report> = (1..=4)
        .map(|d| run(&config(Model::Plain, d..=d, 0..=0, &BOTH, 4, &[CheckId::RankFormula])))
        .collect();
    reports.extend(super_by_pair(|_, _| 3, &BOTH, &[CheckId::RankFormula]));
    let mut ran = 0;
    for report in &reports {
        ran += all_pass(report.results(), &mut problems);
        for r in report.results() {
            let rank = r.params.even as i64 - r.params.odd as i64;
            let k = degree(r, "k");
            let expected = match r.params.flavor.as_deref() {
                Some("alt") => choose(rank, k),
                _ => choose(rank + k as i64 - 1, k),
            };
            if witness(r, "rank") != Some(expected.clone()) {
                problems.push(format!("{} rank {:?} expected {expected}", r.params, witness(r, "rank")));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(10) {
        problems.push(format!("took {elapsed:.1?}"));
    }
    outcome(problems, format!("{ran} rank formulas in {elapsed:.2?}"))
}

fn criterion_2() -> Outcome {
    let mut problems = Vec::new();
    let mut ran = 0;
    for report in plain_by_dim(1..=4, &[Flavor::Alternating], &[CheckId::Theorem]) {
        let g = report.config.g_max;
        for r in report.results().filter(|r| degree(r, "part") == 3 && degree(r, "g") == g) {
            ran += all_pass([r], &mut problems);
            let i = degree(r, "i");
            let sign = parity(i * (g - i));
            let on_s = &sign / choose(g as i64, g - i);
            let on_xd = &sign / choose(g as i64, i);
            if witness(r, "round trip S") != Some(on_s.clone()) || witness(r, "round trip X^v") != Some(on_xd.clone()) {
                problems.push(format!("{} constants differ from {on_s}, {on_xd}", r.params));
            }
        }
    }
    outcome(problems, format!("{ran} round trips on Q^g match the predicted constants"))
}

fn criterion_3() -> Outcome {
    let mut problems = Vec::new();
    let mut ran = 0;
    let mut reports = plain_by_dim(1..=4, &BOTH, &[CheckId::KeyLemma]);
    reports.extend(super_by_pair(|e, o| e + o, &BOTH, &[CheckId::KeyLemma]));
    reports.extend((1..=4).map(|d| run(&config(Model::Plain, d..=d, 0..=0, &BOTH, 3, &[CheckId::KeySteps]))));
    reports.extend(super_by_pair(|_, _| 3, &BOTH, &[CheckId::KeySteps]));
    for report in &reports {
        ran += all_pass(report.results(), &mut problems);
    }
    outcome(problems, format!("{ran} key lemma and key step checks"))
}

fn criterion_4() -> Outcome {
    let mut problems = Vec::new();
    let mut ran = 0;
    let cases = (1..=3)
        .map(|d| (Obj::plain(d), Flavor::Alternating))
        .chain((1..=3).map(|d| (Obj::superspace(0, d), Flavor::Symmetric)));
    for (obj, flavor) in cases {
        let alg = match PowerAlgebra::new(&DualPair::canonical(&obj), flavor, 4) {
            Ok(alg) => alg,
            Err(e) => {
                problems.push(format!("{obj}: {e}"));
                continue;
            }
        };
        match antiderivation_laws(&alg) {
            Ok(laws) => {
                for law in laws {
                    ran += 1;
                    if !law.holds() {
                        problems.push(format!("{obj} {}: {}", flavor.name(), law.name));
                    }
                }
            }
            Err(e) => problems.push(format!("{obj}: {e}")),
        }
    }
    outcome(problems, format!("{ran} (anti)derivation diagrams with j + l <= 4"))
}

fn criterion_5() -> Outcome {
    let mut problems = Vec::new();
    let mut ran = 0;
    for report in plain_by_dim(1..=4, &[Flavor::Alternating], &[CheckId::Theorem]) {
        ran += all_pass(report.results(), &mut problems);
    }
    for report in super_by_pair(|_, o| o, &[Flavor::Symmetric], &[CheckId::Theorem]) {
        ran += all_pass(report.results(), &mut problems);
    }
    outcome(problems, format!("{ran} theorem parts"))
}

fn criterion_6() -> Outcome {
    let mut problems = Vec::new();
    let mut ran = 0;
    for g in 1..=3 {
        let cases = [(Model::Plain, g, 0, Flavor::Alternating), (Model::Super, 0, g, Flavor::Symmetric)];
        for (model, e, o, flavor) in cases {
            let report = run(&config(model, e..=e, o..=o, &[flavor], g, &[CheckId::CorollaryCt]));
            let Some(r) = report.results().find(|r| degree(r, "g") == g) else {
                problems.push(format!("no result for g = {g}"));
                continue;
            };
            if !r.is_pass() {
                problems.push(format!("{} {:?} {:?}", r.params, r.status, r.note));
                continue;
            }
            ran += 1;
            for i in 0..=g {
                let (upper, lower) = match flavor {
                    Flavor::Alternating => (int(1), int(1)),
                    Flavor::Symmetric => (parity(g - i), parity(i)),
                };
                if witness(r, &format!("upper[{i}]")) != Some(upper) || witness(r, &format!("lower[{i}]")) != Some(lower) {
                    problems.push(format!("{} constants at i = {i}", r.params));
                }
            }
        }
    }
    outcome(problems, format!("{ran} perfect pairing corollaries"))
}

/// The displayed Leibniz diagrams, and whether every failure is the known
/// gap: a top power of rank -1 where the rank-twisted form holds.
fn criterion_7() -> (Outcome, bool) {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut only_known_gap = true;
    let mut ran = 0;
    for g in [2, 3] {
        let cases = [(Model::Plain, g, 0, Flavor::Alternating), (Model::Super, 0, g, Flavor::Symmetric)];
        for (model, e, o, flavor) in cases {
            let report = run(&config(model, e..=e, o..=o, &[flavor], g, &[CheckId::P2]));
            let subject = Subject::canonical(model, e, o, flavor, g).expect("subject builds");
            for r in report.results().filter(|r| degree(r, "g") == g) {
                ran += 1;
                if r.is_pass() {
                    continue;
                }
                problems.push(format!("{} residual {} ({})", r.params, r.residual, r.note.clone().unwrap_or_default()));
                let twisted = check_p2_with(&subject, g, degree(r, "i"), P2Form::RankTwisted);
                only_known_gap &= r.is_fail() && witness(r, "r_Y") == Some(int(-1)) && twisted.is_pass();
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        problems.push(format!("took {elapsed:.1?}"));
        only_known_gap = false;
    }
    (outcome(problems, format!("{ran} Leibniz checks in {elapsed:.2?}")), only_known_gap)
}

fn criterion_8() -> Outcome {
    let mut problems = Vec::new();
    let mut ran = 0;
    for model in [Model::Plain, Model::Super] {
        let report = run(&config(model, 1..=1, 0..=0, &BOTH, 1, &[CheckId::Structural]));
        let count = all_pass(report.results(), &mut problems);
        if count != 20 {
            problems.push(format!("{} ran {count} structural cases", model.name()));
        }
        ran += count;
    }
    outcome(problems, format!("{ran} seeded structural cases"))
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verify-duality"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf8 output"))
}

fn criterion_9() -> Outcome {
    let (code, json) = binary(&["--self-test", "--format", "json"]);
    let mut problems = Vec::new();
    let parsed: serde_json::Value = serde_json::from_str(&json).expect("json report");
    let fails = parsed["summary"]["fail"].as_u64();
    if code != 1 {
        problems.push(format!("exit status {code}"));
    }
    if fails != Some(1) {
        problems.push(format!("{fails:?} failures"));
    }
    outcome(problems, format!("exit status {code}, {} failure(s)", fails.unwrap_or(0)))
}

fn criterion_10() -> Outcome {
    let args = [
        "--model", "super", "--even-dim", "0..1", "--odd-dim", "1..2", "--g-max", "2", "--seed", "17", "--format", "json",
    ];
    let (_, first) = binary(&args);
    let (_, second) = binary(&args);
    let mut threaded = args.to_vec();
    threaded.extend(["--jobs", "3"]);
    let (_, third) = binary(&threaded);
    let mut problems = Vec::new();
    if first != second {
        problems.push("two runs differ".into());
    }
    if first != third {
        problems.push("runs with different thread counts differ".into());
    }
    outcome(problems, format!("{} identical bytes across three runs", first.len()))
}

#[test]
fn acceptance_criteria() {
    let mut outcomes: BTreeMap<usize, Outcome> = BTreeMap::new();
    outcomes.insert(1, criterion_1());
    outcomes.insert(2, criterion_2());
    outcomes.insert(3, criterion_3());
    outcomes.insert(4, criterion_4());
    outcomes.insert(5, criterion_5());
    outcomes.insert(6, criterion_6());
    let (seventh, known_gap) = criterion_7();
    outcomes.insert(7, seventh);
    outcomes.insert(8, criterion_8());
    outcomes.insert(9, criterion_9());
    outcomes.insert(10, criterion_10());

    for (n, o) in &outcomes {
        println!("criterion {n:>2}: {} {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    if !outcomes[&7].pass && known_gap {
        println!(
            "criterion  7: the displayed diagram omits the sign tau_{{Y^vv,Y^vv}} = r_Y on its second term; \
             it holds exactly once that factor is included"
        );
    }

    for (n, o) in &outcomes {
        if *n == 7 {
            assert!(o.pass || known_gap, "criterion 7 failed outside the analyzed sign gap: {}", o.detail);
        } else {
            assert!(o.pass, "criterion {n} failed: {}", o.detail);
        }
    }
}
