//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! its JSON payload is recomputed at the end to check determinism.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use pursuit::commands::{self, AuditArgs, CertifyArgs, GameArg, LemmaArg, SolveArgs};
use pursuit::graphio::builtin;
use pursuit::report::{to_json, SolveReport};
use pursuit_core::characterizations::triangle_free_cc_at_most_2;
use pursuit_core::enumerate::connected_graphs;
use pursuit_core::game::{extract_strategy, play, TraceOutcome};
use pursuit_core::structure::{degree_stats, find_dominated_vertex, girth, is_triangle_free};
use pursuit_core::*;

/// Criteria that cannot hold as stated, with the reason. They still run and
/// print FAIL; the function asserts the values the analysis predicts.
const UNATTAINABLE: &[(u32, &str)] = &[(
    7,
    "the line graph of the Petersen graph has a dominating set of size 3, and cc <= gamma for every graph, \
     so cc = 4 is impossible under these rules; the solver and the naive oracle both give cc = 3",
)];

const ONE_SECOND: Duration = Duration::from_secs(1);
const FIVE_MINUTES: Duration = Duration::from_secs(5 * 60);
const THIRTY_MINUTES: Duration = Duration::from_secs(30 * 60);
const ONE_HOUR: Duration = Duration::from_secs(60 * 60);

struct Verdict {
    passed: bool,
    detail: String,
    payload: String,
}

fn solve_report(game: GameArg, graph: &str, max_cops: usize) -> SolveReport {
    let args = SolveArgs {
        game,
        graph: graph.into(),
        max_cops,
        budget: None,
        table: None,
        trace: None,
        max_rounds: 1000,
    };
    let mut report = commands::solve(&args).unwrap();
    report.wall_ms = 0;
    report
}

fn certify(lemma: LemmaArg, graph: &str, upper_cops: Option<usize>) -> pursuit::report::CertifyReport {
    commands::certify(&CertifyArgs {
        lemma,
        graph: graph.into(),
        gamma_budget: 8,
        faces: None,
        upper_cops,
        budget: None,
    })
    .unwrap()
}

fn small_named_graphs() -> Verdict {
    let started = Instant::now();
    let cases = [
        ("builtin:p4", 1, 2),
        ("builtin:c7", 2, 3),
        ("builtin:triangle-pendants", 1, 1),
    ];
    let mut payload = String::new();
    let mut ok = true;
    let mut seen = Vec::new();
    for (graph, c, cc) in cases {
        let classic = solve_report(GameArg::Classic, graph, 4);
        let attacking = solve_report(GameArg::Attacking, graph, 4);
        ok &= classic.value == Some(c) && attacking.value == Some(cc);
        seen.push(format!("{graph}: c={:?} cc={:?}", classic.value, attacking.value));
        payload.push_str(&to_json(&classic));
        payload.push_str(&to_json(&attacking));
    }
    let elapsed = started.elapsed();
    Verdict { passed: ok && elapsed < ONE_SECOND, detail: format!("{} in {elapsed:?}", seen.join(", ")), payload }
}

fn sandwich_on_small_graphs() -> Verdict {
    let started = Instant::now();
    let report = commands::audit(&AuditArgs {
        corpus: "small:7".into(),
        max_cops: 3,
        budget: None,
        jobs: Some(1),
        summary: false,
    })
    .unwrap();
    let entries = report.entries.as_ref().unwrap();
    // Check the sandwich here as well rather than relying on the audit alone.
    let mut failures = 0;
    for e in entries {
        let (c, cc) = (e.c.unwrap(), e.cc.unwrap());
        if !(c <= cc && cc <= (2 * c).min(e.gamma) && (cc == 1) == (e.gamma == 1)) {
            failures += 1;
        }
    }
    let elapsed = started.elapsed();
    let passed = report.graphs == 996 && report.violations == 0 && failures == 0 && elapsed < THIRTY_MINUTES;
    Verdict {
        passed,
        detail: format!("{} graphs, {} audit violations, {failures} sandwich failures in {elapsed:?}", report.graphs, report.violations),
        payload: to_json(&report),
    }
}

fn oracle_equivalence() -> Verdict {
    let opts = SolveOptions::default();
    let graphs = connected_graphs(7).unwrap();
    let (mut comparisons, mut mismatches) = (0, 0);
    for g in &graphs {
        for k in 1..=2 {
            for kind in [GameKind::Classic, GameKind::Attacking] {
                comparisons += 1;
                if solve(g, kind, k, &opts).unwrap() != naive_fixed_point(g, k, kind).unwrap() {
                    mismatches += 1;
                }
            }
        }
    }
    Verdict {
        passed: mismatches == 0 && graphs.len() == 996,
        detail: format!("{comparisons} table comparisons over {} graphs, {mismatches} mismatches", graphs.len()),
        payload: json!({ "graphs": graphs.len(), "comparisons": comparisons, "mismatches": mismatches }).to_string(),
    }
}

fn triangle_free_equivalence() -> Verdict {
    let opts = SolveOptions::default();
    let graphs: Vec<Graph> = connected_graphs(8).unwrap().into_iter().filter(is_triangle_free).collect();
    let mut mismatches = 0;
    let mut yes = 0;
    for g in &graphs {
        let (verdict, record) = triangle_free_cc_at_most_2(g).unwrap();
        record.verify(g).unwrap();
        let solver = attacking_cop_number(g, 3, &opts).unwrap().value.is_some_and(|k| k <= 2);
        mismatches += usize::from(verdict != solver);
        yes += usize::from(verdict);
    }
    Verdict {
        passed: mismatches == 0 && graphs.len() == 357,
        detail: format!("{} triangle-free graphs ({yes} with cc <= 2), {mismatches} mismatches", graphs.len()),
        payload: json!({ "graphs": graphs.len(), "cc_at_most_2": yes, "mismatches": mismatches }).to_string(),
    }
}

fn subdivided_dodecahedron() -> Verdict {
    let started = Instant::now();
    let cert = certify(LemmaArg::Subdivision, "builtin:dodecahedron", None);
    let bound = cert.certificate.as_ref().map(|c| c.bound);
    let solved = solve_report(GameArg::Attacking, "builtin:subdivided-dodecahedron", 4);
    let elapsed = started.elapsed();
    // value 4 with max 4 means every solve with 1..=3 cops was refuted.
    let passed = bound.is_some_and(|b| b >= 4) && solved.value == Some(4) && elapsed < ONE_HOUR;
    Verdict {
        passed,
        detail: format!("certificate bound {bound:?}, solver cc = {:?} ({} states) in {elapsed:?}", solved.value, solved.states_explored),
        payload: to_json(&cert) + &to_json(&solved),
    }
}

fn cage_chain() -> Verdict {
    let started = Instant::now();
    let g1 = builtin("g1").unwrap();
    let regular = degree_stats(&g1) == (3, 3);
    let girth9 = girth(&g1).finite() == Some(9);
    let report = certify(LemmaArg::Square, "builtin:g1", Some(3));
    let cert = report.certificate.as_ref().unwrap();
    let gamma = &cert.premises.gamma;
    let counting = gamma.relation == "at_least" && gamma.value == 9 && gamma.method == Some("counting_bound");
    let c = report.upper.as_ref().and_then(|u| u.cop_number);
    let elapsed = started.elapsed();
    let passed = regular
        && girth9
        && counting
        && cert.bound == 6
        && c == Some(3)
        && report.attacking_cop_number == Some(6)
        && elapsed < THIRTY_MINUTES;
    Verdict {
        passed,
        detail: format!(
            "G1 3-regular={regular} girth 9={girth9}; bound {} from gamma >= {}; c(H1) = {c:?}; cc(H1) = {:?} in {elapsed:?}",
            cert.bound, gamma.value, report.attacking_cop_number
        ),
        payload: to_json(&report),
    }
}

fn petersen_line_graph() -> Verdict {
    let started = Instant::now();
    let classic = solve_report(GameArg::Classic, "builtin:petersen-line", 4);
    let attacking = solve_report(GameArg::Attacking, "builtin:petersen-line", 4);
    let elapsed = started.elapsed();
    let lp = builtin("petersen-line").unwrap();
    let gamma = domination_number(&lp, None).exact().unwrap();
    // The values the analysis predicts; the naive oracle confirms the 3-cop table.
    assert_eq!((classic.value, attacking.value, gamma), (Some(2), Some(3), 3));
    assert_eq!(
        solve(&lp, GameKind::Attacking, 3, &SolveOptions::default()).unwrap(),
        naive_fixed_point(&lp, 3, GameKind::Attacking).unwrap()
    );
    let passed = classic.value == Some(2) && attacking.value == Some(4) && elapsed < FIVE_MINUTES;
    Verdict {
        passed,
        detail: format!("c = {:?}, cc = {:?} (expected 2 and 4), gamma = {gamma} in {elapsed:?}", classic.value, attacking.value),
        payload: to_json(&classic) + &to_json(&attacking),
    }
}

fn triangle_guard() -> Verdict {
    let g = builtin("triangle-guard").unwrap();
    let triangle = !is_triangle_free(&g);
    let dominated = find_dominated_vertex(&g).is_some();
    let gamma = domination_number(&g, None).exact().unwrap();
    let solved = solve_report(GameArg::Attacking, "builtin:triangle-guard", 3);
    Verdict {
        passed: triangle && !dominated && gamma == 3 && solved.value == Some(2),
        detail: format!("triangle={triangle}, dominated vertex={dominated}, gamma={gamma}, cc={:?}", solved.value),
        payload: to_json(&solved),
    }
}

fn strategy_soundness() -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let corpus = connected_graphs(6).unwrap();
    let opts = SolveOptions::default();
    let (mut wins, mut losses, mut failures, mut attempts) = (0, 0, 0, 0);
    while (wins < 200 || losses < 200) && attempts < 100_000 {
        attempts += 1;
        let g = &corpus[rng.gen_range(0..corpus.len())];
        let n = g.vertex_count();
        let kind = if rng.gen_bool(0.5) { GameKind::Classic } else { GameKind::Attacking };
        let k = rng.gen_range(1..=2);
        let table = solve(g, kind, k, &opts).unwrap();
        let start = GameState::new((0..k).map(|_| rng.gen_range(0..n)).collect(), rng.gen_range(0..n), Side::Cops);
        let cops = extract_strategy(g, &table, Side::Cops);
        let robber = extract_strategy(g, &table, Side::Robber);
        match table.outcome(&start).unwrap() {
            Outcome::CopWin { moves } if wins < 200 => {
                wins += 1;
                let trace = play(g, kind, &cops, &robber, &start, moves as usize + 1).unwrap();
                failures += usize::from(trace.outcome != TraceOutcome::Captured { rounds: moves as usize });
            }
            Outcome::RobberWin if losses < 200 => {
                losses += 1;
                let limit = 4 * table.state_count() as usize;
                let trace = play(g, kind, &cops, &robber, &start, limit).unwrap();
                let survived = match trace.outcome {
                    TraceOutcome::Survived { rounds } => rounds == limit,
                    TraceOutcome::CopsEliminated { .. } => true,
                    TraceOutcome::Captured { .. } => false,
                };
                failures += usize::from(!survived);
            }
            _ => {}
        }
    }
    Verdict {
        passed: wins == 200 && losses == 200 && failures == 0,
        detail: format!("{wins} cop-win starts, {losses} robber-win starts, {failures} failures"),
        payload: json!({ "cop_win_starts": wins, "robber_win_starts": losses, "failures": failures }).to_string(),
    }
}

type Criterion = (u32, &'static str, fn() -> Verdict);

const CRITERIA: &[Criterion] = &[
    (1, "cop numbers of small named graphs", small_named_graphs),
    (2, "sandwich bounds on all connected graphs up to 7 vertices", sandwich_on_small_graphs),
    (3, "optimised and naive labels agree", oracle_equivalence),
    (4, "triangle-free cc <= 2 characterisation up to 8 vertices", triangle_free_equivalence),
    (5, "subdivided dodecahedron has cc = 4", subdivided_dodecahedron),
    (6, "cage chain gives cc(H1) = 2 c(H1) = 6", cage_chain),
    (7, "line graph of the Petersen graph: c = 2, cc = 4", petersen_line_graph),
    (8, "triangle guard graph has cc = 2", triangle_guard),
    (9, "extracted strategies are sound", strategy_soundness),
];

/// Writes straight to stdout so the lines survive the test harness capture.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    let mut payloads = Vec::new();
    for &(id, name, check) in CRITERIA {
        let verdict = check();
        let status = if verdict.passed { "PASS" } else { "FAIL" };
        report(format!("criterion {id} {status}: {name}: {}", verdict.detail));
        if !verdict.passed {
            match UNATTAINABLE.iter().find(|(u, _)| *u == id) {
                Some((_, why)) => report(format!("criterion {id} is not attainable: {why}")),
                None => failed.push(id),
            }
        }
        payloads.push((id, verdict.payload));
    }

    let mut differing = Vec::new();
    for &(id, _, check) in CRITERIA.iter().filter(|(id, _, _)| *id <= 8) {
        let again = check().payload;
        let first = &payloads.iter().find(|(i, _)| *i == id).unwrap().1;
        if *first != again {
            differing.push(id);
        }
    }
    let deterministic = differing.is_empty();
    report(format!(
        "criterion 10 {}: repeated runs of criteria 1-8 give identical JSON payloads (differing: {differing:?})",
        if deterministic { "PASS" } else { "FAIL" }
    ));
    if !deterministic {
        failed.push(10);
    }

    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
