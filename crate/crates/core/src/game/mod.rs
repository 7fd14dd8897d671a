//! Exact solvers for Cops and Robbers (`Classic`) and Cops and Attacking
//! Robbers (`Attacking`).
//!
//! A position is a sorted multiset of live cops, the robber's vertex and the
//! side to move. A cop-turn position with a cop on the robber is a capture;
//! so is a robber-turn position after a cop stepped onto the robber. In the
//! attacking game a robber stepping onto a cop removes exactly one cop there
//! and play continues with one cop fewer; if another cop shares that vertex
//! the resulting cop-turn position is already a capture.
//!
//! Labels count cop moves to capture under optimal play (the cops minimise,
//! the robber maximises). Positions the cops cannot force to capture are
//! robber wins.

mod naive;
pub mod ranking;
mod solver;
mod strategy;

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::structure::is_connected;

pub use naive::naive_fixed_point;
pub use solver::{solve, solve_attacking, solve_classic, verify_fixed_point, Level, SolveTable};
pub use strategy::{extract_strategy, play, Policy, Round, Strategy, Trace, TraceOutcome};

/// Default cap on the number of labelled positions a solve may allocate.
pub const DEFAULT_BUDGET_STATES: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GameKind {
    Classic,
    Attacking,
}

impl GameKind {
    pub fn as_str(self) -> &'static str {
        match self {
            GameKind::Classic => "classic",
            GameKind::Attacking => "attacking",
        }
    }
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Cops,
    Robber,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GameState {
    /// Live cops, sorted ascending.
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
    pub to_move: Side,
}

impl GameState {
    pub fn new(mut cops: Vec<Vertex>, robber: Vertex, to_move: Side) -> Self {
        cops.sort_unstable();
        GameState { cops, robber, to_move }
    }

    /// A cop shares the robber's vertex.
    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// The cops capture within `moves` further cop moves.
    CopWin { moves: u32 },
    RobberWin,
}

impl Outcome {
    pub fn is_cop_win(self) -> bool {
        matches!(self, Outcome::CopWin { .. })
    }

    pub fn moves(self) -> Option<u32> {
        match self {
            Outcome::CopWin { moves } => Some(moves),
            Outcome::RobberWin => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Maximum number of labelled positions, summed over all levels.
    pub budget_states: u64,
    /// Attacking game only: when false the robber may not step onto cops at
    /// all, which must reproduce the classic labels.
    pub attack_transitions: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { budget_states: DEFAULT_BUDGET_STATES, attack_transitions: true }
    }
}

impl SolveOptions {
    pub fn with_budget(budget_states: u64) -> Self {
        SolveOptions { budget_states, ..Self::default() }
    }
}

/// Best opening for a fixed number of cops: the cops pick the multiset that
/// minimises the worst robber reply; robber ties and cop ties break towards
/// the smallest vertex / lexicographically smallest multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    pub cops: Vec<Vertex>,
    /// The robber's best reply.
    pub robber: Vertex,
    /// Cop moves to capture from the opening, `None` if the robber wins.
    pub capture_in: Option<u32>,
}

impl Placement {
    pub fn cops_win(&self) -> bool {
        self.capture_in.is_some()
    }

    /// The first position of play: cops to move.
    pub fn start(&self) -> GameState {
        GameState::new(self.cops.clone(), self.robber, Side::Cops)
    }
}

/// Result of a cop-number search.
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Smallest winning cop count, or `None` when it exceeds the maximum.
    pub value: Option<usize>,
    /// Table for `value` cops, or for the maximum when none won.
    pub table: SolveTable,
    /// Positions labelled across every solve of the search.
    pub states_explored: u64,
}

impl SearchResult {
    pub fn placement(&self) -> Placement {
        self.table.placement(self.table.cops())
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 || !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Positions needed to solve `kind` with `k` cops on `n` vertices.
pub fn required_states(kind: GameKind, n: usize, k: usize) -> u64 {
    let per_level = |j: usize| ranking::multiset_count(n, j).saturating_mul(2 * n as u64);
    match kind {
        GameKind::Classic => per_level(k),
        GameKind::Attacking => (0..=k).fold(0u64, |acc, j| acc.saturating_add(per_level(j))),
    }
}

fn check_search_budget(kind: GameKind, g: &Graph, k_max: usize, opts: &SolveOptions) -> Result<()> {
    let required = required_states(kind, g.vertex_count(), k_max);
    if required > opts.budget_states {
        return Err(Error::Budget { required, budget: opts.budget_states });
    }
    Ok(())
}

/// `c(G)`: the least `k ≤ k_max` for which cops win the classic game. The
/// budget must cover a solve with `k_max` cops; otherwise the search is
/// refused up front.
pub fn cop_number(g: &Graph, k_max: usize, opts: &SolveOptions) -> Result<SearchResult> {
    require_connected(g)?;
    if k_max == 0 {
        return Err(Error::Argument("k_max must be at least 1".into()));
    }
    check_search_budget(GameKind::Classic, g, k_max, opts)?;
    let mut explored = 0;
    let mut k = 1;
    loop {
        let table = solve_classic(g, k, opts)?;
        explored += table.state_count();
        if table.placement(k).cops_win() {
            return Ok(SearchResult { value: Some(k), table, states_explored: explored });
        }
        if k == k_max {
            return Ok(SearchResult { value: None, table, states_explored: explored });
        }
        k += 1;
    }
}

/// `cc(G)`: the least `k ≤ k_max` for which cops win the attacking game.
/// Levels are solved bottom-up and the search stops at the first winning one.
pub fn attacking_cop_number(g: &Graph, k_max: usize, opts: &SolveOptions) -> Result<SearchResult> {
    require_connected(g)?;
    if k_max == 0 {
        return Err(Error::Argument("k_max must be at least 1".into()));
    }
    check_search_budget(GameKind::Attacking, g, k_max, opts)?;
    let mut table = SolveTable::attacking_base(g, opts)?;
    loop {
        table.push_attacking_level(g, opts)?;
        let k = table.cops();
        if table.placement(k).cops_win() {
            let states_explored = table.state_count();
            return Ok(SearchResult { value: Some(k), table, states_explored });
        }
        if k == k_max {
            let states_explored = table.state_count();
            return Ok(SearchResult { value: None, table, states_explored });
        }
    }
}

/// Every position reachable in one move from `state`, in canonical form.
pub fn successors(g: &Graph, kind: GameKind, state: &GameState) -> Vec<GameState> {
    let mut out = Vec::new();
    if state.is_capture() {
        return out;
    }
    match state.to_move {
        Side::Cops => {
            let options: Vec<Vec<Vertex>> = state.cops.iter().map(|&c| g.closed_neighbors(c)).collect();
            let mut pick = alloc::vec![0usize; options.len()];
            'outer: loop {
                let cops: Vec<Vertex> = pick.iter().zip(&options).map(|(&i, o)| o[i]).collect();
                out.push(GameState::new(cops, state.robber, Side::Robber));
                for i in (0..pick.len()).rev() {
                    pick[i] += 1;
                    if pick[i] < options[i].len() {
                        continue 'outer;
                    }
                    pick[i] = 0;
                }
                break;
            }
            out.sort();
            out.dedup();
        }
        Side::Robber => {
            for r in g.closed_neighbors(state.robber) {
                let mut cops = state.cops.clone();
                if kind == GameKind::Attacking && r != state.robber {
                    if let Some(i) = cops.iter().position(|&c| c == r) {
                        cops.remove(i);
                    }
                }
                out.push(GameState { cops, robber: r, to_move: Side::Cops });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;
