//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;

use isopos_cli::bench::{run_bench, BenchConfig};
use isopos_cli::mine::{replay, run_mine, MineConfig, MiningReport, RECORDS_FILE};
use isopos_cli::report::trace_report;
use isopos_core::corpus::{
    connected_gnp, emit_graph6, gen_gnp, named_graph, parse_graph6, random_permutation, Seed,
};
use isopos_core::{
    exact_isomorphism, exhaustive_isomorphism, positional_equivalence, AuxiliaryDigraph, Graph,
};

const SLOPE_LIMIT: f64 = 4.5;

/// Characteristic tables of the worked example, per round, in the trace
/// report's line grammar.
const APPENDIX_TABLES: [(&[&str], &[&str]); 6] = [
    (
        &[
            "V I_v1=() O_v1=(1,1,1,1)",
            "V I_v2=(0,1,1) O_v2=(1,1,2)",
            "V I_v3=(0,1,1) O_v3=(1,1,2)",
            "V I_v4=(1,1,1,1) O_v4=()",
            "V I_v5=(0,1,1) O_v5=(1,1,2)",
            "V I_v6=(0,1,1) O_v6=(1,1,2)",
        ],
        &[
            "U I_u1=() O_u1=(1,1,1,1)",
            "U I_u2=(0,1,1) O_u2=(1,1,2)",
            "U I_u3=(0,1,1) O_u3=(1,1,2)",
            "U I_u4=(0,1,1) O_u4=(1,1,2)",
            "U I_u5=(1,1,1,1) O_u5=()",
            "U I_u6=(0,1,1) O_u6=(1,1,2)",
        ],
    ),
    (
        &[
            "V I_v2=() O_v2=(1,1,1)",
            "V I_v3=(0,1) O_v3=(1,2)",
            "V I_v4=(0,1,1) O_v4=(1,1,2)",
            "V I_v5=(1,1,1) O_v5=()",
            "V I_v6=(0,1) O_v6=(1,2)",
        ],
        &[
            "U I_u2=() O_u2=(1,1,1)",
            "U I_u3=(0,1) O_u3=(1,2)",
            "U I_u4=(0,1) O_u4=(1,2)",
            "U I_u5=(0,1,1) O_u5=(1,1,2)",
            "U I_u6=(1,1,1) O_u6=()",
        ],
    ),
    (
        &[
            "V I_v3=() O_v3=(1,1)",
            "V I_v4=(0,1) O_v4=(1,2)",
            "V I_v5=(0,1) O_v5=(1,2)",
            "V I_v6=(1,1) O_v6=()",
        ],
        &[
            "U I_u3=() O_u3=(1,1)",
            "U I_u4=(1,1) O_u4=()",
            "U I_u5=(0,1) O_u5=(1,2)",
            "U I_u6=(0,1) O_u6=(1,2)",
        ],
    ),
    (
        &[
            "V I_v4=() O_v4=(1,1)",
            "V I_v5=(0,1) O_v5=(1)",
            "V I_v6=(0,1) O_v6=(1)",
        ],
        &[
            "U I_u4=() O_u4=(1,1)",
            "U I_u5=(0,1) O_u5=(1)",
            "U I_u6=(0,1) O_u6=(1)",
        ],
    ),
    (
        &["V I_v5=() O_v5=(1)", "V I_v6=(0) O_v6=()"],
        &["U I_u5=() O_u5=(1)", "U I_u6=(0) O_u6=()"],
    ),
    (&["V I_v6=() O_v6=()"], &["U I_u6=() O_u6=()"]),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn appendix_reproduction() -> Outcome {
    let start = Instant::now();
    let g = named_graph("appendix_G").unwrap();
    let h = named_graph("appendix_H").unwrap();
    let report = trace_report(&g, &h).unwrap();
    let elapsed = start.elapsed();

    let rounds: Vec<&str> = report.split("round ").skip(1).collect();
    let mut problems = Vec::new();
    if rounds.len() != 6 {
        problems.push(format!("expected 6 rounds, found {}", rounds.len()));
    }
    for (i, (block, (left, right))) in rounds.iter().zip(APPENDIX_TABLES).enumerate() {
        let k = i + 1;
        let header = format!("{k}: pivot v{k} matched u{k}");
        if !block.starts_with(&header) {
            problems.push(format!("round {k} header"));
        }
        let tables = |prefix: &str| -> Vec<&str> {
            block.lines().filter(|l| l.starts_with(prefix)).collect()
        };
        if tables("V I_") != left {
            problems.push(format!("round {k} left table"));
        }
        if tables("U I_") != right {
            problems.push(format!("round {k} right table"));
        }
    }
    if !report.contains("verdict: HEURISTIC_ISOMORPHIC\n") {
        problems.push("verdict".into());
    }
    if elapsed.as_secs_f64() >= 1.0 {
        problems.push(format!("took {elapsed:?}"));
    }
    let detail = if problems.is_empty() {
        format!("6 rounds (v1,u1)..(v6,u6), 12 tables exact, {elapsed:?}")
    } else {
        problems.join("; ")
    };
    outcome(problems.is_empty(), detail)
}

fn relabeling_invariance() -> Outcome {
    let mut checked = 0usize;
    let mut failures = 0usize;
    for trial in 0..1000u64 {
        let mut rng = Seed(2).rng();
        rng.set_stream(trial);
        let n = rng.random_range(4..=12);
        let g = connected_gnp(n, 0.5, &mut rng).unwrap();
        let p = random_permutation(&g, &mut rng);
        let h = g.apply_permutation(&p).unwrap();
        for v in g.vertices() {
            let a = AuxiliaryDigraph::build(&g, v).unwrap();
            let b = AuxiliaryDigraph::build(&h, p.get(v).unwrap()).unwrap();
            checked += 1;
            if !positional_equivalence(&a, &b) {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("1000 trials, {checked} rooted pairs, {failures} failures"),
    )
}

fn witness_soundness(report: &MiningReport) -> Outcome {
    outcome(
        report.witness_violations == 0,
        format!(
            "{} verified pairings over {} trials, {} without oracle support",
            report.mapping_verified, report.trials, report.witness_violations
        ),
    )
}

fn oracle_self_consistency() -> Outcome {
    let mut agree = 0;
    let mut isomorphic = 0;
    for trial in 0..500u64 {
        let mut rng = Seed(4).rng();
        rng.set_stream(trial);
        let n = rng.random_range(1..=7);
        let p = rng.random_range(0.0..=1.0);
        let g = gen_gnp(n, p, Seed(rng.random())).unwrap();
        let h = if trial % 2 == 0 {
            g.apply_permutation(&random_permutation(&g, &mut rng)).unwrap()
        } else {
            gen_gnp(n, p, Seed(rng.random())).unwrap()
        };
        let fast = exact_isomorphism(&g, &h).unwrap();
        let slow = exhaustive_isomorphism(&g, &h).unwrap();
        if fast.isomorphic == slow.isomorphic {
            agree += 1;
        }
        if slow.isomorphic {
            isomorphic += 1;
        }
    }
    outcome(
        agree == 500,
        format!("{agree}/500 agree ({isomorphic} isomorphic pairs)"),
    )
}

/// Seeded connected graphs with one random root each.
fn rooted_corpus() -> Vec<(Graph, u32)> {
    (0..500u64)
        .map(|trial| {
            let mut rng = Seed(5).rng();
            rng.set_stream(trial);
            let n = rng.random_range(2..=16);
            let p = rng.random_range(0.2..0.8);
            let g = connected_gnp(n, p, &mut rng).unwrap();
            let root = rng.random_range(0..n as u32);
            (g, root)
        })
        .collect()
}

fn degree_recovery(corpus: &[(Graph, u32)]) -> Outcome {
    let mut vertices = 0;
    let mut failures = 0;
    for (g, root) in corpus {
        let d = AuxiliaryDigraph::build(g, *root).unwrap();
        for (&v, c) in d.characteristics() {
            let own_level = d.decomposition().level_of(v).unwrap();
            let own = c.input.iter().filter(|&&l| l == own_level).count();
            vertices += 1;
            if g.degree(v).unwrap() != c.input.len() + c.output.len() - own {
                failures += 1;
            }
        }
    }
    outcome(
        failures == 0,
        format!("500 graphs, {vertices} vertices, {failures} failures"),
    )
}

fn edge_accounting(corpus: &[(Graph, u32)]) -> Outcome {
    let mut failures = 0;
    for (g, root) in corpus {
        let d = AuxiliaryDigraph::build(g, *root).unwrap();
        let level = |v| d.decomposition().level_of(v).unwrap();
        let same = g.edges().filter(|&(a, b)| level(a) == level(b)).count();
        let cross = g.edge_count() - same;
        let sum_in: usize = d.characteristics().values().map(|c| c.input.len()).sum();
        let sum_out: usize = d.characteristics().values().map(|c| c.output.len()).sum();
        if sum_in != cross + 2 * same || sum_out != cross + 2 * same {
            failures += 1;
        }
    }
    outcome(failures == 0, format!("500 graphs, {failures} failures"))
}

fn graph6_round_trip() -> Outcome {
    let mut failures = 0;
    for trial in 0..1000u64 {
        let mut rng = Seed(7).rng();
        rng.set_stream(trial);
        let n = rng.random_range(1..63);
        let p = rng.random_range(0.0..=1.0);
        let g = gen_gnp(n, p, Seed(rng.random())).unwrap();
        if parse_graph6(&emit_graph6(&g)).as_ref() != Ok(&g) {
            failures += 1;
        }
    }
    let k3 = emit_graph6(&named_graph("complete_3").unwrap());
    outcome(
        failures == 0 && k3 == "Bw",
        format!("1000 graphs, {failures} failures; emit(K3) = {k3:?}"),
    )
}

fn fidelity_report(report: &MiningReport, out: &std::path::Path) -> Outcome {
    let mut problems = Vec::new();
    let fa = report.false_accepts.len() as u64;
    let fr = report.false_rejects.len() as u64;
    if report.trials != 2001 {
        problems.push(format!("trials = {}", report.trials));
    }
    if report.agreements + fa + fr != report.trials {
        problems.push("tally does not sum to trials".into());
    }
    let lines = fs::read_to_string(out.join(RECORDS_FILE)).unwrap_or_default();
    if lines.lines().count() as u64 != fa + fr {
        problems.push("record count differs from disagreements".into());
    }
    match replay(out) {
        Ok(r) if r.mismatched.is_empty() && r.records as u64 == fa + fr => {}
        Ok(r) => problems.push(format!("{} of {} records replayed", r.reproduced, r.records)),
        Err(e) => problems.push(format!("replay failed: {e}")),
    }
    let stress_archived = lines.contains("named:rook_4x4/shrikhande");
    let stress_accepted = report
        .false_accepts
        .iter()
        .any(|r| r.provenance == "named:rook_4x4/shrikhande");
    if stress_archived != stress_accepted {
        problems.push("stress trial archiving inconsistent".into());
    }
    let detail = format!(
        "trials={} agreements={} false_accepts={fa} false_rejects={fr} disconnected={} permuted={} stress_archived={stress_archived}",
        report.trials,
        report.agreements,
        report.disconnected_intermediate_count,
        report.permuted_trials,
    );
    if problems.is_empty() {
        outcome(true, detail)
    } else {
        outcome(false, format!("{detail}; {}", problems.join("; ")))
    }
}

fn complexity_check() -> (Outcome, String) {
    let cfg = BenchConfig {
        sizes: vec![20, 40, 80, 160],
        p: 0.5,
        reps: 5,
        seed: 0,
    };
    let report = run_bench(&cfg).unwrap();
    let slope = report.slope.unwrap_or(f64::INFINITY);
    (
        outcome(
            slope <= SLOPE_LIMIT,
            format!("fitted slope {slope:.3} (limit {SLOPE_LIMIT})"),
        ),
        report.render(),
    )
}

fn main() -> ExitCode {
    let out = tempfile::tempdir().expect("temp dir");
    let mining = run_mine(&MineConfig {
        n_min: 5,
        n_max: 10,
        p: 0.5,
        trials: 2000,
        seed: 0,
        out: out.path().to_path_buf(),
        stress: true,
        permuted_only: false,
    })
    .expect("mining session");
    let corpus = rooted_corpus();
    let (bench, bench_table) = complexity_check();

    let results = [
        ("1 appendix reproduction", appendix_reproduction()),
        ("2 relabeling invariance", relabeling_invariance()),
        ("3 witness soundness", witness_soundness(&mining)),
        ("4 oracle self-consistency", oracle_self_consistency()),
        ("5 degree recovery", degree_recovery(&corpus)),
        ("6 edge accounting", edge_accounting(&corpus)),
        ("7 graph6 round-trip", graph6_round_trip()),
        ("8 heuristic fidelity report", fidelity_report(&mining, out.path())),
        ("9 complexity check", bench),
    ];

    let mut failed = 0;
    for (name, r) in &results {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {name}: {}", r.detail);
        failed += usize::from(!r.pass);
    }
    print!("{bench_table}");
    print!("{}", mining.summary());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
