//! Exhaustive enumeration of small connected graphs up to isomorphism.
//!
//! Every connected graph on `n` vertices has a non-cut vertex, so it arises
//! from a connected graph on `n - 1` vertices by adding a vertex with a
//! non-empty neighbourhood. Candidates are reduced to a canonical form and
//! deduplicated on it.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the enumerator.
pub const MAX_ORDER: usize = 8;

/// Upper-triangle adjacency bits in column order `(0,1), (0,2), (1,2), (0,3), …`,
/// first pair in the most significant position.
fn code_of(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> u64 {
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = (code << 1) | adjacent(i, j) as u64;
        }
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if (code >> (pairs - 1 - idx)) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges).expect("code describes a simple graph")
}

/// Stable colour refinement; colours are ranks of sorted signatures, so they
/// are invariant under relabelling.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).map(|w| color[w]).collect();
                around.sort_unstable();
                (color[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            color[v] = distinct.binary_search(&signatures[v]).expect("signature present");
        }
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct Canon<'g> {
    g: &'g Graph,
    /// Colour class required at each label position.
    slot_color: Vec<usize>,
    color: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    best_cols: Vec<u64>,
    best_order: Vec<usize>,
    have_best: bool,
}

impl Canon<'_> {
    fn column(&self, d: usize, v: usize) -> u64 {
        self.order[..d].iter().fold(0u64, |acc, &u| (acc << 1) | self.g.has_edge(u, v) as u64)
    }

    fn search(&mut self, d: usize, cols: &mut Vec<u64>) {
        let n = self.g.vertex_count();
        if d == n {
            if !self.have_best || cols[..] > self.best_cols[..] {
                self.best_cols.clone_from(cols);
                self.best_order.clone_from(&self.order);
                self.have_best = true;
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.color[v] != self.slot_color[d] {
                continue;
            }
            cols.push(self.column(d, v));
            // The best labelling can change under us, so compare whole prefixes.
            if self.have_best && cols[..] < self.best_cols[..=d] {
                cols.pop();
                continue;
            }
            self.used[v] = true;
            self.order.push(v);
            self.search(d + 1, cols);
            self.order.pop();
            self.used[v] = false;
            cols.pop();
        }
    }
}

/// Canonical relabelling: the maximum adjacency code over all labellings
/// that list colour classes in refinement order.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let color = refine(g);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut canon = Canon {
        g,
        slot_color,
        color,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best_cols: Vec::new(),
        best_order: Vec::new(),
        have_best: false,
    };
    canon.search(0, &mut Vec::with_capacity(n));
    let order = canon.best_order;
    graph_from_code(n, code_of(n, |i, j| g.has_edge(order[i], order[j])))
}

pub fn canonical_code(g: &Graph) -> u64 {
    let c = canonical_form(g);
    code_of(c.vertex_count(), |i, j| c.has_edge(i, j))
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in canonical labelling and ascending canonical code.
pub fn connected_graphs_of_order(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ORDER {
        return Err(Error::Argument(alloc::format!("enumeration is limited to {MAX_ORDER} vertices")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer: BTreeSet<u64> = BTreeSet::from([0]);
    for order in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &layer {
            let base = graph_from_code(order - 1, code);
            let edges: Vec<(usize, usize)> = base.edges().collect();
            for mask in 1u32..(1 << (order - 1)) {
                let extra = (0..order - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, order - 1));
                let g = Graph::from_edges(order, edges.iter().copied().chain(extra)).expect("valid edges");
                next.insert(canonical_code(&g));
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().map(|code| graph_from_code(n, code)).collect())
}

/// Connected graphs on `1..=max_n` vertices, by order then canonical code.
pub fn connected_graphs(max_n: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(connected_graphs_of_order(n)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path, petersen};
    use crate::structure::{is_connected, is_triangle_free};

    #[test]
    fn connected_counts_match_known_sequence() {
        // 1, 1, 2, 6, 21, 112, 853 connected graphs on 1..=7 vertices
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs_of_order(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn triangle_free_counts() {
        // connected triangle-free graphs: 1, 1, 1, 3, 6, 19, 59
        let counts: Vec<usize> = (1..=7)
            .map(|n| connected_graphs_of_order(n).unwrap().iter().filter(|g| is_triangle_free(g)).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 6, 19, 59]);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let c = cycle(6).unwrap();
        let relabelled = Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        assert_eq!(canonical_form(&c), canonical_form(&relabelled));
        assert_ne!(canonical_code(&c), canonical_code(&path(6).unwrap()));
        let p = petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 5, 4, 6];
        let q = Graph::from_edges(10, p.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(canonical_code(&p), canonical_code(&q));
    }

    #[test]
    fn enumerated_graphs_are_connected_and_distinct() {
        let graphs = connected_graphs(6).unwrap();
        assert!(graphs.iter().all(is_connected));
        let mut codes: Vec<u64> = graphs.iter().map(|g| (g.vertex_count() as u64) << 56 | canonical_code(g)).collect();
        let before = codes.len();
        codes.dedup();
        assert_eq!(codes.len(), before);
        assert!(connected_graphs_of_order(MAX_ORDER + 1).is_err());
    }
}
