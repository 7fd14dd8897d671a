//! Distances, girth, degree statistics and the simple structural predicates.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::VertexSet;
use crate::graph::{DominatedPair, Graph, Vertex};

/// A shortest-path length, or `Unreachable` between components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Length of a shortest cycle; `Acyclic` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }

    /// `girth ≥ bound`, where forests satisfy every bound.
    pub fn at_least(self, bound: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("inf"),
        }
    }
}

pub fn bfs_distances(g: &Graph, src: Vertex) -> Vec<Distance> {
    assert!(src < g.vertex_count(), "source vertex out of range");
    let mut dist = vec![Distance::Unreachable; g.vertex_count()];
    dist[src] = Distance::Finite(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let Distance::Finite(du) = dist[u] else { unreachable!() };
        for w in g.neighbors(u) {
            if dist[w] == Distance::Unreachable {
                dist[w] = Distance::Finite(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Vertices at each distance from `src`: `classes[i]` holds every vertex at
/// distance exactly `i`. Unreachable vertices are omitted.
pub fn distance_classes(g: &Graph, src: Vertex) -> Vec<Vec<Vertex>> {
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for (v, d) in bfs_distances(g, src).into_iter().enumerate() {
        if let Distance::Finite(d) = d {
            if classes.len() <= d {
                classes.resize_with(d + 1, Vec::new);
            }
            classes[d].push(v);
        }
    }
    classes
}

/// Shortest cycle length via one BFS per vertex.
///
/// A BFS from `s` that meets a non-tree edge `(u, w)` closes a closed walk of
/// length `d(u) + d(w) + 1` through `s`, which contains a cycle no longer than
/// that; the minimum over all roots is attained on a shortest cycle.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.clear();
        queue.push_back(s);
        'bfs: while let Some(u) = queue.pop_front() {
            // Nothing shorter can be found from deeper layers.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// `(δ, Δ)`; `(0, 0)` for the empty graph.
pub fn degree_stats(g: &Graph) -> (usize, usize) {
    let mut degrees = g.vertices().map(|v| g.degree(v));
    let Some(first) = degrees.next() else { return (0, 0) };
    degrees.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.neighbor_set(u).intersection_len(g.row(v)) == 0)
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// A proper 2-colouring (`false`/`true` per vertex), if one exists.
pub fn two_coloring(g: &Graph) -> Option<Vec<bool>> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// The empty graph counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    bfs_distances(g, 0).iter().all(|d| *d != Distance::Unreachable)
}

/// First dominated pair in (dominated, dominator) lexicographic order.
pub fn find_dominated_vertex(g: &Graph) -> Option<DominatedPair> {
    let n = g.vertex_count();
    for u in 0..n {
        let nu = g.neighbor_set(u);
        for v in 0..n {
            if v == u {
                continue;
            }
            let mut closed = g.neighbor_set(v);
            closed.insert(v);
            if nu.is_subset_of(closed.words()) {
                return Some(DominatedPair { dominated: u, dominator: v });
            }
        }
    }
    None
}

/// Every dominated pair, in lexicographic order.
pub fn dominated_pairs(g: &Graph) -> Vec<DominatedPair> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for v in g.vertices() {
            if g.dominates(v, u) {
                out.push(DominatedPair { dominated: u, dominator: v });
            }
        }
    }
    out
}

/// Vertices adjacent to every other vertex.
pub fn universal_vertices(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    g.vertices().filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Is `set` a dominating set?
pub fn is_dominating(g: &Graph, set: &[Vertex]) -> bool {
    let mut covered = VertexSet::new(g.vertex_count());
    for &v in set {
        covered.insert(v);
        covered.union_with(g.row(v));
    }
    covered.len() == g.vertex_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path, petersen, star};

    #[test]
    fn path_and_cycle_distances() {
        let p4 = path(4).unwrap();
        assert_eq!(bfs_distances(&p4, 0)[3], Distance::Finite(3));
        let c7 = cycle(7).unwrap();
        let far = bfs_distances(&c7, 0).into_iter().max().unwrap();
        assert_eq!(far, Distance::Finite(3));
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(bfs_distances(&split, 0)[2], Distance::Unreachable);
        assert_eq!(distance_classes(&c7, 0), vec![vec![0], vec![1, 6], vec![2, 5], vec![3, 4]]);
    }

    #[test]
    fn girth_values() {
        assert_eq!(girth(&cycle(7).unwrap()), Girth::Finite(7));
        assert_eq!(girth(&star(5).unwrap()), Girth::Acyclic);
        assert_eq!(girth(&petersen()), Girth::Finite(5));
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(girth(&k4), Girth::Finite(3));
    }

    #[test]
    fn predicates_on_c7() {
        let c7 = cycle(7).unwrap();
        assert_eq!((is_triangle_free(&c7), is_bipartite(&c7), is_connected(&c7)), (true, false, true));
        assert_eq!(degree_stats(&path(4).unwrap()), (1, 2));
    }

    #[test]
    fn dominated_vertex_tie_break() {
        let p4 = path(4).unwrap();
        assert_eq!(find_dominated_vertex(&p4), Some(DominatedPair { dominated: 0, dominator: 1 }));
        assert_eq!(find_dominated_vertex(&cycle(5).unwrap()), None);
        assert_eq!(find_dominated_vertex(&petersen()), None);
    }
}
