//! Counter-based retrograde solver over ranked cop multisets.
//!
//! Each level holds the positions with a fixed number of live cops, indexed
//! as `multiset_rank * n + robber`, one label array per side to move.
//! Labels are assigned in order of increasing distance to capture: a pass
//! over level `d` collects every position labelled `d`, then propagates to
//! predecessors. A cop-turn position takes `1 + d` from the first robber-turn
//! successor that is labelled; a robber-turn position keeps a countdown of
//! unlabelled successors and is labelled with the maximum successor value
//! when the countdown reaches zero. Attacking levels are solved bottom-up so
//! that attack successors (one level down) are final before they are read.

use alloc::vec;
use alloc::vec::Vec;

use super::ranking::MultisetRanker;
use super::{require_connected, required_states, GameKind, GameState, Outcome, Placement, Side, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const UNLABELLED: u32 = u32::MAX;
const NEVER: u16 = u16::MAX;
pub(crate) const MAX_COPS: usize = 16;

/// Labels for every position with a fixed number of live cops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    cops: usize,
    multisets: usize,
    cop_turn: Vec<u32>,
    robber_turn: Vec<u32>,
}

impl Level {
    pub fn cops(&self) -> usize {
        self.cops
    }

    pub fn multiset_count(&self) -> usize {
        self.multisets
    }

    pub fn state_count(&self) -> u64 {
        (self.cop_turn.len() + self.robber_turn.len()) as u64
    }

    /// Raw labels: moves to capture, `u32::MAX` for robber wins.
    pub fn raw_labels(&self, side: Side) -> &[u32] {
        match side {
            Side::Cops => &self.cop_turn,
            Side::Robber => &self.robber_turn,
        }
    }

    /// Rebuilds a level from raw labels (as written by [`Level::raw_labels`]).
    pub fn from_raw(cops: usize, multisets: usize, cop_turn: Vec<u32>, robber_turn: Vec<u32>) -> Result<Level> {
        if cop_turn.len() != robber_turn.len() || multisets == 0 || !cop_turn.len().is_multiple_of(multisets) {
            return Err(Error::Argument("inconsistent level dimensions".into()));
        }
        Ok(Level { cops, multisets, cop_turn, robber_turn })
    }
}

fn label_to_outcome(label: u32) -> Outcome {
    if label == UNLABELLED {
        Outcome::RobberWin
    } else {
        Outcome::CopWin { moves: label }
    }
}

/// A complete labelling of one game for a top cop count `k`. Classic tables
/// hold only level `k`; attacking tables hold levels `0..=k`.
#[derive(Clone, Debug)]
pub struct SolveTable {
    kind: GameKind,
    n: usize,
    levels: Vec<Level>,
    ranker: MultisetRanker,
}

impl PartialEq for SolveTable {
    fn eq(&self, other: &Self) -> bool {
        (self.kind, self.n, &self.levels) == (other.kind, other.n, &other.levels)
    }
}

impl Eq for SolveTable {}

impl SolveTable {
    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Cop count of the top level.
    pub fn cops(&self) -> usize {
        self.levels.last().map_or(0, |l| l.cops)
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn level(&self, cops: usize) -> Option<&Level> {
        self.levels.iter().find(|l| l.cops == cops)
    }

    pub fn state_count(&self) -> u64 {
        self.levels.iter().map(Level::state_count).sum()
    }

    /// Reassembles a table from levels, e.g. after reading a dump.
    pub fn from_levels(kind: GameKind, n: usize, levels: Vec<Level>) -> Result<SolveTable> {
        let top = levels.last().map_or(0, |l| l.cops);
        let ranker = MultisetRanker::new(n, top);
        for l in &levels {
            if l.cops > top || ranker.count(l.cops) as usize != l.multisets || l.cop_turn.len() != l.multisets * n {
                return Err(Error::Argument("level does not match the vertex count".into()));
            }
        }
        Ok(SolveTable { kind, n, levels, ranker })
    }

    fn index(&self, state: &GameState) -> Option<(&Level, usize)> {
        let level = self.level(state.cops.len())?;
        if state.robber >= self.n || state.cops.iter().any(|&c| c >= self.n) {
            return None;
        }
        let mut buf = [0u32; MAX_COPS];
        let cops = &mut buf[..state.cops.len()];
        for (slot, &c) in cops.iter_mut().zip(&state.cops) {
            *slot = c as u32;
        }
        cops.sort_unstable();
        Some((level, self.ranker.rank(cops) * self.n + state.robber))
    }

    /// Label of `state`, or `None` if the table has no level for its cop count.
    pub fn outcome(&self, state: &GameState) -> Option<Outcome> {
        let (level, i) = self.index(state)?;
        Some(label_to_outcome(level.raw_labels(state.to_move)[i]))
    }

    /// Best opening with `cops` cops.
    pub fn placement(&self, cops: usize) -> Placement {
        let level = self.level(cops).expect("no level for this cop count");
        let n = self.n;
        let mut buf = vec![0u32; cops];
        let mut best: Option<(u32, Vec<u32>, usize)> = None;
        for m in 0..level.multisets {
            let row = &level.cop_turn[m * n..(m + 1) * n];
            let (mut worst, mut reply) = (0u32, 0usize);
            for (r, &label) in row.iter().enumerate() {
                if label > worst || r == 0 {
                    worst = label;
                    reply = r;
                }
            }
            self.ranker.unrank(m, &mut buf);
            let better = match &best {
                None => true,
                Some((w, c, _)) => (worst, &buf) < (*w, c),
            };
            if better {
                best = Some((worst, buf.clone(), reply));
            }
        }
        let (worst, cops, robber) = best.expect("levels hold at least one multiset");
        Placement {
            cops: cops.into_iter().map(|c| c as Vertex).collect(),
            robber,
            capture_in: (worst != UNLABELLED).then_some(worst),
        }
    }

    pub(crate) fn attacking_base(g: &Graph, _opts: &SolveOptions) -> Result<SolveTable> {
        let n = g.vertex_count();
        check_vertex_count(n)?;
        let empty = Level { cops: 0, multisets: 1, cop_turn: vec![UNLABELLED; n], robber_turn: vec![UNLABELLED; n] };
        Ok(SolveTable { kind: GameKind::Attacking, n, levels: vec![empty], ranker: MultisetRanker::new(n, 0) })
    }

    /// Solves the attacking level one above the current top.
    pub(crate) fn push_attacking_level(&mut self, g: &Graph, opts: &SolveOptions) -> Result<()> {
        debug_assert_eq!(self.kind, GameKind::Attacking);
        let j = self.cops() + 1;
        check_cops(j)?;
        let required = required_states(GameKind::Attacking, self.n, j);
        if required > opts.budget_states {
            return Err(Error::Budget { required, budget: opts.budget_states });
        }
        self.ranker = MultisetRanker::new(self.n, j);
        let ctx = Context::new(g, GameKind::Attacking, opts.attack_transitions);
        let level = ctx.solve_level(j, &self.ranker, self.levels.last());
        self.levels.push(level);
        Ok(())
    }
}

fn check_vertex_count(n: usize) -> Result<()> {
    if n >= u32::MAX as usize || n + 1 >= NEVER as usize {
        return Err(Error::Argument("graph too large for the solver".into()));
    }
    Ok(())
}

fn check_cops(k: usize) -> Result<()> {
    if k == 0 || k > MAX_COPS {
        return Err(Error::Argument(alloc::format!("cop count must be in 1..={MAX_COPS}")));
    }
    Ok(())
}

fn check_budget(kind: GameKind, n: usize, k: usize, opts: &SolveOptions) -> Result<()> {
    let required = required_states(kind, n, k);
    if required > opts.budget_states || required / 2 > u32::MAX as u64 {
        return Err(Error::Budget { required, budget: opts.budget_states });
    }
    Ok(())
}

pub fn solve_classic(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveTable> {
    require_connected(g)?;
    check_cops(k)?;
    let n = g.vertex_count();
    check_vertex_count(n)?;
    check_budget(GameKind::Classic, n, k, opts)?;
    let ranker = MultisetRanker::new(n, k);
    let level = Context::new(g, GameKind::Classic, false).solve_level(k, &ranker, None);
    Ok(SolveTable { kind: GameKind::Classic, n, levels: vec![level], ranker })
}

pub fn solve_attacking(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveTable> {
    require_connected(g)?;
    check_cops(k)?;
    check_budget(GameKind::Attacking, g.vertex_count(), k, opts)?;
    let mut table = SolveTable::attacking_base(g, opts)?;
    for _ in 0..k {
        table.push_attacking_level(g, opts)?;
    }
    Ok(table)
}

pub fn solve(g: &Graph, kind: GameKind, k: usize, opts: &SolveOptions) -> Result<SolveTable> {
    match kind {
        GameKind::Classic => solve_classic(g, k, opts),
        GameKind::Attacking => solve_attacking(g, k, opts),
    }
}

struct Context {
    n: usize,
    closed: Vec<Vec<u32>>,
    kind: GameKind,
    attacks: bool,
}

impl Context {
    fn new(g: &Graph, kind: GameKind, attacks: bool) -> Self {
        let closed = g.vertices().map(|v| g.closed_neighbors(v).into_iter().map(|w| w as u32).collect()).collect();
        Context { n: g.vertex_count(), closed, kind, attacks: kind == GameKind::Attacking && attacks }
    }

    /// Calls `f` with the rank of every multiset reachable by one cop move
    /// (each cop steps within its closed neighbourhood). Cops stacked on one
    /// vertex pick non-decreasing neighbour indices, so most duplicates are
    /// skipped; the rest are harmless to callers.
    fn for_each_cop_move(&self, cops: &[u32], ranker: &MultisetRanker, f: &mut impl FnMut(usize)) {
        let mut pick = [0usize; MAX_COPS];
        let mut dest = [0u32; MAX_COPS];
        self.cop_moves_from(0, cops, &mut pick, &mut dest, ranker, f);
    }

    fn cop_moves_from(
        &self,
        i: usize,
        cops: &[u32],
        pick: &mut [usize; MAX_COPS],
        dest: &mut [u32; MAX_COPS],
        ranker: &MultisetRanker,
        f: &mut impl FnMut(usize),
    ) {
        let j = cops.len();
        if i == j {
            let mut sorted = *dest;
            let s = &mut sorted[..j];
            insertion_sort(s);
            f(ranker.rank(s));
            return;
        }
        let options = &self.closed[cops[i] as usize];
        let start = if i > 0 && cops[i] == cops[i - 1] { pick[i - 1] } else { 0 };
        for (t, &w) in options.iter().enumerate().skip(start) {
            pick[i] = t;
            dest[i] = w;
            self.cop_moves_from(i + 1, cops, pick, dest, ranker, f);
        }
    }

    /// Cop-turn label reached when the robber steps from its vertex to `to`
    /// against cops `cops` (multiset rank `m`), or `None` if the move is not
    /// available.
    fn robber_successor(&self, cops: &[u32], m: usize, to: u32, cop_turn: &[u32], lower: Option<(&Level, &MultisetRanker)>) -> Option<u32> {
        let n = self.n;
        match cops.iter().position(|&c| c == to) {
            None => Some(cop_turn[m * n + to as usize]),
            Some(_) if self.kind == GameKind::Classic => Some(0),
            Some(_) if !self.attacks => None,
            Some(at) => {
                let (level, ranker) = lower.expect("attack successors need the level below");
                let mut rest = [0u32; MAX_COPS];
                let mut len = 0;
                for (i, &c) in cops.iter().enumerate() {
                    if i != at {
                        rest[len] = c;
                        len += 1;
                    }
                }
                Some(level.cop_turn[ranker.rank(&rest[..len]) * n + to as usize])
            }
        }
    }

    fn solve_level(&self, j: usize, ranker: &MultisetRanker, lower: Option<&Level>) -> Level {
        let n = self.n;
        let multisets = ranker.count(j) as usize;
        let states = multisets * n;
        let mut cop_turn = vec![UNLABELLED; states];
        let mut robber_turn = vec![UNLABELLED; states];
        let lower = lower.map(|l| (l, ranker));

        let mut members = vec![0u32; multisets * j];
        for (m, chunk) in members.chunks_exact_mut(j.max(1)).enumerate().take(multisets) {
            if j > 0 {
                ranker.unrank(m, chunk);
            }
        }
        let cops_of = |m: usize| &members[m * j..(m + 1) * j];

        // Terminal captures and robber countdowns.
        let mut countdown = vec![0u16; states];
        for m in 0..multisets {
            let cops = cops_of(m);
            for r in 0..n {
                let s = m * n + r;
                if cops.contains(&(r as u32)) {
                    cop_turn[s] = 0;
                    robber_turn[s] = 0;
                    continue;
                }
                let mut pending = 0u16;
                for &to in &self.closed[r] {
                    if !cops.contains(&to) {
                        pending += 1;
                    } else if self.attacks && self.robber_successor(cops, m, to, &cop_turn, lower) == Some(UNLABELLED) {
                        pending = NEVER;
                        break;
                    }
                }
                countdown[s] = pending;
            }
        }

        let mut frontier: Vec<(u32, Side)> = Vec::new();
        let mut depth = 0u32;
        loop {
            frontier.clear();
            let mut pending_later = false;
            for s in 0..states {
                if cop_turn[s] == depth {
                    frontier.push((s as u32, Side::Cops));
                } else if cop_turn[s] != UNLABELLED && cop_turn[s] > depth {
                    pending_later = true;
                }
                if robber_turn[s] == depth {
                    frontier.push((s as u32, Side::Robber));
                } else if robber_turn[s] != UNLABELLED && robber_turn[s] > depth {
                    pending_later = true;
                }
            }
            if frontier.is_empty() && !pending_later {
                break;
            }
            let mut next = 0;
            while next < frontier.len() {
                let (s, side) = frontier[next];
                next += 1;
                let s = s as usize;
                let (m, r) = (s / n, s % n);
                let cops = cops_of(m);
                match side {
                    Side::Cops => {
                        if cops.contains(&(r as u32)) {
                            continue;
                        }
                        for &from in &self.closed[r] {
                            if cops.contains(&from) {
                                continue;
                            }
                            let p = m * n + from as usize;
                            if robber_turn[p] != UNLABELLED || countdown[p] == NEVER {
                                continue;
                            }
                            countdown[p] -= 1;
                            if countdown[p] == 0 {
                                let value = self.closed[from as usize]
                                    .iter()
                                    .filter_map(|&to| self.robber_successor(cops, m, to, &cop_turn, lower))
                                    .max()
                                    .expect("passing is always available");
                                debug_assert!(value >= depth && value != UNLABELLED);
                                robber_turn[p] = value;
                                if value == depth {
                                    frontier.push((p as u32, Side::Robber));
                                }
                            }
                        }
                    }
                    Side::Robber => {
                        let value = depth + 1;
                        self.for_each_cop_move(cops, ranker, &mut |pm| {
                            let p = pm * n + r;
                            if cop_turn[p] == UNLABELLED {
                                cop_turn[p] = value;
                            }
                        });
                    }
                }
            }
            depth += 1;
        }

        Level { cops: j, multisets, cop_turn, robber_turn }
    }
}

fn insertion_sort(s: &mut [u32]) {
    for i in 1..s.len() {
        let mut k = i;
        while k > 0 && s[k - 1] > s[k] {
            s.swap(k - 1, k);
            k -= 1;
        }
    }
}

/// Recomputes every label of `table` from its successors in one pass and
/// returns the number of positions whose stored label disagrees.
pub fn verify_fixed_point(g: &Graph, table: &SolveTable) -> usize {
    let ctx = Context::new(g, table.kind, true);
    let n = table.n;
    let mut mismatches = 0;
    for (li, level) in table.levels.iter().enumerate() {
        let j = level.cops;
        let lower = if table.kind == GameKind::Attacking && li > 0 { Some((&table.levels[li - 1], &table.ranker)) } else { None };
        let mut cops = vec![0u32; j];
        for m in 0..level.multisets {
            table.ranker.unrank(m, &mut cops);
            for r in 0..n {
                let s = m * n + r;
                let captured = cops.contains(&(r as u32));
                let cop_value = if captured {
                    0
                } else if j == 0 {
                    UNLABELLED
                } else {
                    let mut best = UNLABELLED;
                    ctx.for_each_cop_move(&cops, &table.ranker, &mut |pm| {
                        best = best.min(level.robber_turn[pm * n + r]);
                    });
                    best.saturating_add(1)
                };
                let robber_value = if captured {
                    0
                } else {
                    ctx.closed[r]
                        .iter()
                        .filter_map(|&to| ctx.robber_successor(&cops, m, to, &level.cop_turn, lower))
                        .max()
                        .unwrap_or(UNLABELLED)
                };
                mismatches += (level.cop_turn[s] != cop_value) as usize;
                mismatches += (level.robber_turn[s] != robber_value) as usize;
            }
        }
    }
    mismatches
}
