//! Exact domination number by branch and bound.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::graph::{Graph, Vertex};
use crate::structure::degree_stats;

/// A minimum dominating set. Among all minimum sets this is the
/// lexicographically smallest (compared as ascending vertex lists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominationWitness {
    pub set: Vec<Vertex>,
}

impl DominationWitness {
    pub fn size(&self) -> usize {
        self.set.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domination {
    Exact(DominationWitness),
    /// No dominating set of size at most the budget exists.
    ExceedsBudget { budget: usize },
}

impl Domination {
    pub fn exact(&self) -> Option<usize> {
        match self {
            Domination::Exact(w) => Some(w.size()),
            Domination::ExceedsBudget { .. } => None,
        }
    }
}

/// `⌈n / (Δ + 1)⌉`: no vertex covers more than `Δ + 1` vertices.
pub fn counting_lower_bound(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let (_, max_degree) = degree_stats(g);
    n.div_ceil(max_degree + 1)
}

/// Exact `γ(G)` with the lexicographically smallest minimum witness. With a
/// budget, sizes above it are not searched and `ExceedsBudget` certifies
/// `γ(G) > budget`.
pub fn domination_number(g: &Graph, budget: Option<usize>) -> Domination {
    let n = g.vertex_count();
    let limit = budget.unwrap_or(n).min(n);
    let search = Search::new(g);
    for size in counting_lower_bound(g)..=limit {
        if let Some(set) = search.first_of_size(size) {
            return Domination::Exact(DominationWitness { set });
        }
    }
    Domination::ExceedsBudget { budget: limit }
}

struct Search<'g> {
    g: &'g Graph,
    closed: Vec<VertexSet>,
    /// Largest vertex of each closed neighbourhood.
    reach: Vec<Vertex>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let closed: Vec<VertexSet> = g.vertices().map(|v| g.closed_neighbor_set(v)).collect();
        let reach = closed.iter().map(|s| s.iter().last().unwrap_or(0)).collect();
        Search { g, closed, reach }
    }

    fn first_of_size(&self, size: usize) -> Option<Vec<Vertex>> {
        let n = self.g.vertex_count();
        let mut chosen = Vec::with_capacity(size);
        if self.extend(&mut chosen, 0, VertexSet::full(n), size) {
            Some(chosen)
        } else {
            None
        }
    }

    /// Depth-first over ascending vertex choices, so the first success is the
    /// lexicographically smallest set of this size.
    fn extend(&self, chosen: &mut Vec<Vertex>, next: Vertex, undominated: VertexSet, size: usize) -> bool {
        let Some(first) = undominated.first() else { return true };
        let remaining = size - chosen.len();
        if remaining == 0 {
            return false;
        }
        // Every undominated vertex needs a neighbour at or after `next`.
        if undominated.iter().any(|u| self.reach[u] < next) {
            return false;
        }
        if !self.coverage_possible(next, &undominated, remaining) {
            return false;
        }
        // `first` must be covered by a vertex chosen now or later, all of
        // which are ≥ the current pick.
        for v in next..=self.reach[first] {
            let mut rest = undominated.clone();
            rest.difference_with(self.closed[v].words());
            chosen.push(v);
            if self.extend(chosen, v + 1, rest, size) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// The `remaining` largest coverages among candidates must reach `|U|`.
    fn coverage_possible(&self, next: Vertex, undominated: &VertexSet, remaining: usize) -> bool {
        let need = undominated.len();
        let mut gains: Vec<usize> =
            (next..self.g.vertex_count()).map(|v| undominated.intersection_len(self.closed[v].words())).collect();
        if gains.len() > remaining {
            gains.select_nth_unstable_by(remaining - 1, |a, b| b.cmp(a));
            gains.truncate(remaining);
        }
        gains.iter().sum::<usize>() >= need
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, dodecahedron, petersen, star};
    use crate::structure::is_dominating;
    use alloc::vec;

    /// Lexicographically smallest minimum dominating set by plain
    /// enumeration of subsets in size-then-lex order.
    fn brute_force(g: &Graph) -> Vec<Vertex> {
        let n = g.vertex_count();
        for size in 0..=n {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                if is_dominating(g, &combo) {
                    return combo;
                }
                // next combination in lex order
                let mut i = size;
                while i > 0 && combo[i - 1] == n - size + i - 1 {
                    i -= 1;
                }
                if i == 0 {
                    break;
                }
                combo[i - 1] += 1;
                for j in i..size {
                    combo[j] = combo[j - 1] + 1;
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn star_has_universal_vertex() {
        assert_eq!(domination_number(&star(6).unwrap(), None), Domination::Exact(DominationWitness { set: vec![0] }));
    }

    #[test]
    fn matches_brute_force_on_named_graphs() {
        for g in [cycle(7).unwrap(), petersen(), dodecahedron(), cycle(5).unwrap(), cycle(4).unwrap()] {
            let Domination::Exact(w) = domination_number(&g, None) else { panic!() };
            assert_eq!(w.set, brute_force(&g), "{g:?}");
        }
    }

    #[test]
    fn known_values() {
        assert_eq!(domination_number(&cycle(7).unwrap(), None).exact(), Some(3));
        assert_eq!(domination_number(&petersen(), None).exact(), Some(3));
        assert!(domination_number(&dodecahedron(), None).exact().unwrap() > 4);
    }

    #[test]
    fn budget_reports_excess() {
        assert_eq!(domination_number(&cycle(7).unwrap(), Some(2)), Domination::ExceedsBudget { budget: 2 });
        assert_eq!(domination_number(&cycle(7).unwrap(), Some(3)).exact(), Some(3));
    }

    #[test]
    fn random_graphs_match_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let edges: Vec<_> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.3)).collect();
            let g = Graph::from_edges(n, edges).unwrap();
            let Domination::Exact(w) = domination_number(&g, None) else { panic!() };
            assert_eq!(w.set, brute_force(&g));
            assert!(w.size() >= counting_lower_bound(&g));
        }
    }
}
