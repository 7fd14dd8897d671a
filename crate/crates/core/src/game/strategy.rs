//! Strategies read off a solved table, and validated play-outs.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{successors, GameKind, GameState, Outcome, Side, SolveTable};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Something that picks a move for one side.
pub trait Policy {
    /// The position after this side moves from `state`, or `None` if the
    /// policy has nothing to say about `state`.
    fn choose(&self, state: &GameState) -> Option<GameState>;
}

/// Optimal play for one side, computed on demand from a table.
///
/// The cops move to a successor with the fewest moves to capture; the robber
/// moves to a successor with the most (robber wins counting as infinitely
/// many). Ties go to the lexicographically smallest successor.
#[derive(Clone, Copy, Debug)]
pub struct Strategy<'a> {
    side: Side,
    graph: &'a Graph,
    table: &'a SolveTable,
}

pub fn extract_strategy<'a>(graph: &'a Graph, table: &'a SolveTable, side: Side) -> Strategy<'a> {
    Strategy { side, graph, table }
}

impl Strategy<'_> {
    pub fn side(&self) -> Side {
        self.side
    }

    fn score(&self, state: &GameState) -> u64 {
        match self.table.outcome(state) {
            Some(Outcome::CopWin { moves }) => moves as u64,
            _ => u64::MAX,
        }
    }
}

impl Policy for Strategy<'_> {
    fn choose(&self, state: &GameState) -> Option<GameState> {
        if state.to_move != self.side {
            return None;
        }
        let options = successors(self.graph, self.table.kind(), state);
        let mut best: Option<(u64, GameState)> = None;
        for next in options {
            let score = self.score(&next);
            let better = match &best {
                None => true,
                Some((b, s)) => match self.side {
                    Side::Cops => score < *b || (score == *b && next < *s),
                    Side::Robber => score > *b || (score == *b && next < *s),
                },
            };
            if better {
                best = Some((score, next));
            }
        }
        best.map(|(_, s)| s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// Cop positions after the cops moved.
    pub cops: Vec<Vertex>,
    /// Robber position after its move; `None` when the cops captured first.
    pub robber: Option<Vertex>,
    /// Vertex of the cop removed by an attack this round.
    pub attacked: Option<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceOutcome {
    Captured { rounds: usize },
    /// Attacking game: the robber removed every cop.
    CopsEliminated { rounds: usize },
    /// The round limit was reached without a capture.
    Survived { rounds: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub graph: Option<String>,
    pub kind: GameKind,
    pub start_cops: Vec<Vertex>,
    pub start_robber: Vertex,
    pub rounds: Vec<Round>,
    pub outcome: TraceOutcome,
}

/// Plays from the cop-turn position `start` for at most `max_rounds` rounds,
/// checking every move against the rules.
pub fn play(
    g: &Graph,
    kind: GameKind,
    cops: &dyn Policy,
    robber: &dyn Policy,
    start: &GameState,
    max_rounds: usize,
) -> Result<Trace> {
    if start.to_move != Side::Cops {
        return Err(Error::Argument("play starts with the cops to move".into()));
    }
    if start.robber >= g.vertex_count() || start.cops.iter().any(|&c| c >= g.vertex_count()) {
        return Err(Error::Argument("start position names a vertex outside the graph".into()));
    }
    let mut trace = Trace {
        graph: g.name().map(String::from),
        kind,
        start_cops: start.cops.clone(),
        start_robber: start.robber,
        rounds: Vec::new(),
        outcome: TraceOutcome::Survived { rounds: 0 },
    };
    let mut state = GameState::new(start.cops.clone(), start.robber, Side::Cops);
    loop {
        let done = trace.rounds.len();
        if state.is_capture() {
            trace.outcome = TraceOutcome::Captured { rounds: done };
            return Ok(trace);
        }
        if state.cops.is_empty() {
            trace.outcome = TraceOutcome::CopsEliminated { rounds: done };
            return Ok(trace);
        }
        if done == max_rounds {
            trace.outcome = TraceOutcome::Survived { rounds: done };
            return Ok(trace);
        }
        let round = done + 1;

        let moved = cops
            .choose(&state)
            .ok_or_else(|| Error::IllegalMove { round, reason: "cop strategy has no move".into() })?;
        check_cop_move(g, &state, &moved).map_err(|reason| Error::IllegalMove { round, reason })?;
        if moved.is_capture() {
            trace.rounds.push(Round { cops: moved.cops, robber: None, attacked: None });
            trace.outcome = TraceOutcome::Captured { rounds: round };
            return Ok(trace);
        }

        let after = robber
            .choose(&moved)
            .ok_or_else(|| Error::IllegalMove { round, reason: "robber strategy has no move".into() })?;
        let attacked = check_robber_move(g, kind, &moved, &after).map_err(|reason| Error::IllegalMove { round, reason })?;
        trace.rounds.push(Round { cops: moved.cops, robber: Some(after.robber), attacked });
        state = after;
    }
}

fn check_cop_move(g: &Graph, before: &GameState, after: &GameState) -> core::result::Result<(), String> {
    if after.to_move != Side::Robber || after.robber != before.robber {
        return Err("cops moved the robber or skipped the turn order".into());
    }
    if after.cops.len() != before.cops.len() {
        return Err(format!("cop count changed from {} to {}", before.cops.len(), after.cops.len()));
    }
    if !perfect_move_matching(g, &before.cops, &after.cops) {
        return Err(format!("cops {:?} cannot reach {:?} in one move", before.cops, after.cops));
    }
    Ok(())
}

/// Returns the vertex of the attacked cop, if any.
fn check_robber_move(
    g: &Graph,
    kind: GameKind,
    before: &GameState,
    after: &GameState,
) -> core::result::Result<Option<Vertex>, String> {
    let (from, to) = (before.robber, after.robber);
    if after.to_move != Side::Cops {
        return Err("robber skipped the turn order".into());
    }
    if to >= g.vertex_count() || (to != from && !g.has_edge(from, to)) {
        return Err(format!("robber cannot move from {from} to {to}"));
    }
    let mut expected = before.cops.clone();
    let mut attacked = None;
    if kind == GameKind::Attacking && to != from {
        if let Some(i) = expected.iter().position(|&c| c == to) {
            expected.remove(i);
            attacked = Some(to);
        }
    }
    if after.cops != expected {
        return Err(format!("cops changed from {:?} to {:?} on the robber's turn", before.cops, after.cops));
    }
    Ok(attacked)
}

/// Is there a bijection from `from` to `to` with every cop staying within its
/// closed neighbourhood?
fn perfect_move_matching(g: &Graph, from: &[Vertex], to: &[Vertex]) -> bool {
    let k = from.len();
    let mut owner: Vec<Option<usize>> = vec![None; k];
    for i in 0..k {
        let mut seen = vec![false; k];
        if !augment(g, from, to, i, &mut seen, &mut owner) {
            return false;
        }
    }
    true
}

fn augment(g: &Graph, from: &[Vertex], to: &[Vertex], i: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for t in 0..to.len() {
        let reachable = from[i] == to[t] || g.has_edge(from[i], to[t]);
        if reachable && !seen[t] {
            seen[t] = true;
            if owner[t].is_none() || augment(g, from, to, owner[t].unwrap(), seen, owner) {
                owner[t] = Some(i);
                return true;
            }
        }
    }
    false
}
