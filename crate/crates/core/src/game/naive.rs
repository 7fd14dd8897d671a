//! Unoptimised reference labelling used to cross-check the retrograde solver.
//!
//! Cops are ordered tuples rather than multisets, and the labels are found by
//! sweeping the Bellman equations until nothing changes. Starting from
//! "unlabelled everywhere", the sweeps converge to the least fixed point with
//! exact move counts.

use alloc::vec;
use alloc::vec::Vec;

use super::ranking::MultisetRanker;
use super::{require_connected, GameKind, Level, SolveTable};
use crate::error::{Error, Result};
use crate::graph::Graph;

const INF: u32 = u32::MAX;
const MAX_NAIVE_STATES: u64 = 4_000_000;

struct Tuples {
    n: usize,
    closed: Vec<Vec<usize>>,
}

impl Tuples {
    fn decode(&self, mut t: usize, j: usize, out: &mut Vec<usize>) {
        out.clear();
        for _ in 0..j {
            out.push(t % self.n);
            t /= self.n;
        }
    }

    fn encode(&self, cops: &[usize]) -> usize {
        cops.iter().rev().fold(0, |acc, &c| acc * self.n + c)
    }

    /// All tuples reachable when every cop moves within its closed
    /// neighbourhood.
    fn moves(&self, cops: &[usize]) -> Vec<usize> {
        let mut out = vec![0usize];
        let mut scale = 1;
        for &c in cops {
            out = out.iter().flat_map(|&base| self.closed[c].iter().map(move |&w| base + w * scale)).collect();
            scale *= self.n;
        }
        out
    }
}

/// Labels the game by plain value iteration over ordered cop tuples. Intended
/// for small inputs only: the total tuple state count is capped.
pub fn naive_fixed_point(g: &Graph, k: usize, kind: GameKind) -> Result<SolveTable> {
    require_connected(g)?;
    if k == 0 {
        return Err(Error::Argument("k must be at least 1".into()));
    }
    let n = g.vertex_count();
    let level_range: Vec<usize> = match kind {
        GameKind::Classic => vec![k],
        GameKind::Attacking => (0..=k).collect(),
    };
    let required: u64 = level_range
        .iter()
        .map(|&j| (n as u64).saturating_pow(j as u32 + 1).saturating_mul(2))
        .fold(0, u64::saturating_add);
    if required > MAX_NAIVE_STATES {
        return Err(Error::Budget { required, budget: MAX_NAIVE_STATES });
    }

    let tuples = Tuples { n, closed: g.vertices().map(|v| g.closed_neighbors(v)).collect() };
    // Indexed by cop count; unused counts stay empty.
    let mut cop: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    let mut rob: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for &j in &level_range {
        cop[j] = vec![INF; n.pow(j as u32) * n];
        rob[j] = vec![INF; n.pow(j as u32) * n];
    }

    let mut cops = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for &j in &level_range {
            for t in 0..n.pow(j as u32) {
                tuples.decode(t, j, &mut cops);
                let moves = if j > 0 { tuples.moves(&cops) } else { Vec::new() };
                for r in 0..n {
                    let captured = cops.contains(&r);
                    let new_cop = if captured {
                        0
                    } else {
                        let best = moves.iter().map(|&t2| rob[j][t2 * n + r]).min().unwrap_or(INF);
                        if best == INF { INF } else { best + 1 }
                    };
                    let new_rob = if captured {
                        0
                    } else {
                        let mut worst = 0;
                        for &to in &tuples.closed[r] {
                            let value = match cops.iter().position(|&c| c == to) {
                                Some(i) if kind == GameKind::Attacking => {
                                    let mut rest = cops.clone();
                                    rest.remove(i);
                                    cop[j - 1][tuples.encode(&rest) * n + to]
                                }
                                _ => cop[j][t * n + to],
                            };
                            worst = worst.max(value);
                        }
                        worst
                    };
                    if cop[j][t * n + r] != new_cop {
                        cop[j][t * n + r] = new_cop;
                        changed = true;
                    }
                    if rob[j][t * n + r] != new_rob {
                        rob[j][t * n + r] = new_rob;
                        changed = true;
                    }
                }
            }
        }
    }

    // Every ordering of a multiset must agree before collapsing to multisets.
    let ranker = MultisetRanker::new(n, k);
    let mut levels = Vec::new();
    for &j in &level_range {
        let multisets = ranker.count(j) as usize;
        let mut cop_turn = vec![INF; multisets * n];
        let mut robber_turn = vec![INF; multisets * n];
        let mut seen = vec![false; multisets];
        let mut sorted = Vec::new();
        for t in 0..n.pow(j as u32) {
            tuples.decode(t, j, &mut cops);
            sorted.clear();
            sorted.extend(cops.iter().map(|&c| c as u32));
            sorted.sort_unstable();
            let m = ranker.rank(&sorted);
            for r in 0..n {
                let (c, rb) = (cop[j][t * n + r], rob[j][t * n + r]);
                if seen[m] {
                    assert_eq!((cop_turn[m * n + r], robber_turn[m * n + r]), (c, rb), "labels depend on cop order");
                } else {
                    cop_turn[m * n + r] = c;
                    robber_turn[m * n + r] = rb;
                }
            }
            seen[m] = true;
        }
        levels.push(Level::from_raw(j, multisets, cop_turn, robber_turn)?);
    }
    SolveTable::from_levels(kind, n, levels)
}
