//! Trace export as JSON or as DOT with one frame per round.

use std::fmt::Write as _;

use pursuit_core::game::{Trace, TraceOutcome};
use pursuit_core::Graph;

use crate::report::{PlacementJson, RoundJson, TraceJson, TraceOutcomeJson, SCHEMA};

pub fn trace_json(trace: &Trace) -> TraceJson {
    let (kind, rounds) = match trace.outcome {
        TraceOutcome::Captured { rounds } => ("captured", rounds),
        TraceOutcome::CopsEliminated { rounds } => ("cops_eliminated", rounds),
        TraceOutcome::Survived { rounds } => ("survived", rounds),
    };
    TraceJson {
        schema: SCHEMA,
        graph: trace.graph.clone(),
        game: trace.kind.as_str(),
        start: PlacementJson { cops: trace.start_cops.clone(), robber: trace.start_robber },
        rounds: trace
            .rounds
            .iter()
            .enumerate()
            .map(|(i, r)| RoundJson { round: i + 1, cops: r.cops.clone(), robber: r.robber, attacked: r.attacked })
            .collect(),
        outcome: TraceOutcomeJson { kind, rounds },
    }
}

/// One `graph` block per frame: the start, then the position after each
/// round. Cops are blue, the robber red, a shared vertex purple and an
/// attacked vertex is drawn with a double border.
pub fn trace_dot(g: &Graph, trace: &Trace) -> String {
    let mut out = String::new();
    let mut frames = vec![(trace.start_cops.clone(), Some(trace.start_robber), None)];
    let mut robber = Some(trace.start_robber);
    for r in &trace.rounds {
        robber = r.robber.or(robber);
        frames.push((r.cops.clone(), robber, r.attacked));
    }
    for (i, (cops, robber, attacked)) in frames.iter().enumerate() {
        writeln!(out, "graph frame_{i} {{").unwrap();
        writeln!(out, "  label=\"round {i}\";").unwrap();
        for v in g.vertices() {
            let cop = cops.contains(&v);
            let rob = *robber == Some(v);
            let color = match (cop, rob) {
                (true, true) => "purple",
                (true, false) => "blue",
                (false, true) => "red",
                (false, false) => "white",
            };
            let peripheries = if *attacked == Some(v) { 2 } else { 1 };
            writeln!(out, "  {v} [style=filled, fillcolor={color}, peripheries={peripheries}];").unwrap();
        }
        for (u, v) in g.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
    }
    out
}
