//! Builders for the graph families used throughout: paths, cycles, stars, the
//! Petersen graph and dodecahedron, edge subdivision, the square-minus-edges
//! operation and the 58-vertex (3,9)-cage `G1`.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Construction(msg.into()))
    }
}

pub fn path(n: usize) -> Result<Graph> {
    require(n >= 1, "a path needs at least one vertex")?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_name(format!("P{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    require(n >= 3, "a cycle needs at least three vertices")?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_name(format!("C{n}")))
}

/// `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Result<Graph> {
    require(leaves >= 1, "a star needs at least one leaf")?;
    Ok(Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))?.with_name(format!("K1,{leaves}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    require(n >= 1, "a complete graph needs at least one vertex")?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("K{n}")))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i - i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("static edge list").with_name("petersen")
}

/// The dodecahedral graph: an outer 10-cycle `0..10` whose vertices alternate
/// between the two inner pentagons `10..15` and `15..20`.
pub fn dodecahedron() -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    for i in 0..5 {
        edges.push((10 + i, 10 + (i + 1) % 5));
        edges.push((15 + i, 15 + (i + 1) % 5));
    }
    edges.extend([(15, 1), (16, 3), (17, 5), (18, 7), (19, 9)]);
    edges.extend([(2, 11), (4, 12), (6, 13), (8, 14), (0, 10)]);
    Graph::from_edges(20, edges).expect("static edge list").with_name("dodecahedron")
}

/// Vertices are the edges of `g` in lexicographic order; two are adjacent
/// when the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    require(!edges.is_empty(), "the line graph needs at least one edge")?;
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    let lg = Graph::from_edges(edges.len(), out)?;
    Ok(match g.name() {
        Some(name) => lg.with_name(format!("L({name})")),
        None => lg,
    })
}

/// Replaces every edge by a path of length two. Original vertices keep their
/// ids; the `i`-th edge in lexicographic order becomes vertex `n + i`.
pub fn subdivide_all_edges(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    let mut out = Vec::with_capacity(2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        out.push((u, n + i));
        out.push((v, n + i));
    }
    let s = Graph::from_edges(n + edges.len(), out).expect("subdivision endpoints are in range");
    match g.name() {
        Some(name) => s.with_name(format!("S({name})")),
        None => s,
    }
}

/// `G² − E(G)`: same vertices, with `u ~ v` exactly when `dist_G(u, v) = 2`.
pub fn square_minus_edges(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let mut h = Graph::empty(n);
    for v in 0..n {
        let closed = g.closed_neighbor_set(v);
        for w in g.neighbors(v) {
            for x in g.neighbors(w) {
                if x > v && !closed.contains(x) {
                    h.add_edge(v, x);
                }
            }
        }
    }
    match g.name() {
        Some(name) => h.with_name(format!("{name}^2-E")),
        None => h,
    }
}

/// Edges of the (3,9)-cage `G1` in its published 1-based labelling.
const CAGE_G1_EDGES: [(usize, usize); 87] = [
    (1, 2), (1, 58), (1, 9), (2, 3), (2, 27), (3, 4), (3, 42), (4, 5),
    (4, 13), (5, 6), (5, 47), (6, 7), (6, 55), (7, 8), (7, 34), (8, 9),
    (8, 20), (9, 10), (10, 11), (10, 39), (11, 12), (11, 52), (12, 13), (12, 31),
    (13, 14), (14, 15), (14, 22), (15, 16), (15, 36), (16, 17), (16, 54), (17, 18),
    (17, 41), (18, 19), (18, 48), (19, 20), (19, 29), (20, 21), (21, 22), (21, 44),
    (22, 23), (23, 24), (23, 57), (24, 25), (24, 40), (25, 26), (25, 33), (26, 27),
    (26, 53), (27, 28), (28, 29), (28, 37), (29, 30), (30, 31), (30, 56), (31, 32),
    (32, 33), (32, 45), (33, 34), (34, 35), (35, 36), (35, 50), (36, 37), (37, 38),
    (38, 39), (38, 46), (39, 40), (40, 41), (41, 42), (42, 43), (43, 44), (43, 51),
    (44, 45), (45, 46), (46, 47), (47, 48), (48, 49), (49, 50), (49, 58), (50, 51),
    (51, 52), (52, 53), (53, 54), (54, 55), (55, 56), (56, 57), (57, 58),
];

/// The (3,9)-cage `G1` on 58 vertices; label `i` of the published drawing is
/// vertex `i - 1` here.
pub fn cage_g1() -> Graph {
    Graph::from_edges(58, CAGE_G1_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)))
        .expect("static edge list")
        .with_name("G1")
}

/// `H1 = G1² − E(G1)`.
pub fn cage_h1() -> Graph {
    square_minus_edges(&cage_g1()).with_name("H1")
}

/// A triangle `{0, 1, 2}` with two pendant vertices `3, 4` on vertex 0; vertex
/// 0 is universal.
pub fn triangle_with_pendants() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)]).expect("static edge list").with_name("triangle-pendants")
}

/// Ten-vertex graph with a triangle, no dominated vertex and domination
/// number three that two attacking cops nonetheless win on.
pub fn triangle_counterexample() -> Graph {
    const EDGES: [(usize, usize); 17] = [
        (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6), (4, 5),
        (4, 7), (5, 8), (6, 9), (6, 10), (7, 8), (7, 10), (8, 9), (9, 10),
    ];
    Graph::from_edges(10, EDGES.iter().map(|&(u, v)| (u - 1, v - 1))).expect("static edge list").with_name("triangle-guard")
}

/// `K_{1,arms}` with every edge subdivided twice and the leaves merged into a
/// single vertex. Centre 0, arm `i` is `0 - 2i+1 - 2i+2 - (2·arms+1)`.
pub fn merged_leaves_spider(arms: usize) -> Result<Graph> {
    require(arms >= 1, "the spider needs at least one arm")?;
    let sink = 2 * arms + 1;
    let edges = (0..arms).flat_map(|i| [(0, 2 * i + 1), (2 * i + 1, 2 * i + 2), (2 * i + 2, sink)]);
    Ok(Graph::from_edges(sink + 1, edges)?.with_name(format!("spider{arms}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::domination_number;
    use crate::structure::{degree_stats, girth, is_bipartite, Girth};

    #[test]
    fn basic_families() {
        let c7 = cycle(7).unwrap();
        assert_eq!((c7.vertex_count(), c7.edge_count(), girth(&c7)), (7, 7, Girth::Finite(7)));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(star(5).unwrap().vertex_count(), 6);
    }

    #[test]
    fn named_graphs() {
        let d = dodecahedron();
        assert_eq!((d.vertex_count(), d.edge_count(), degree_stats(&d), girth(&d)), (20, 30, (3, 3), Girth::Finite(5)));
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count(), degree_stats(&p), girth(&p)), (10, 15, (3, 3), Girth::Finite(5)));
        assert_eq!(domination_number(&p, None).exact(), Some(3));
    }

    #[test]
    fn line_graphs() {
        assert_eq!(line_graph(&path(4).unwrap()).unwrap(), path(3).unwrap());
        let lc7 = line_graph(&cycle(7).unwrap()).unwrap();
        assert_eq!(lc7.edge_count(), 7);
        assert_eq!(degree_stats(&lc7), (2, 2));
        let lp = line_graph(&petersen()).unwrap();
        assert_eq!((lp.vertex_count(), degree_stats(&lp)), (15, (4, 4)));
        assert!(line_graph(&Graph::empty(3)).is_err());
    }

    #[test]
    fn subdivisions() {
        let s = subdivide_all_edges(&cycle(5).unwrap());
        assert_eq!((s.vertex_count(), s.edge_count(), girth(&s)), (10, 10, Girth::Finite(10)));
        assert_eq!(degree_stats(&s), (2, 2));
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(subdivide_all_edges(&k2), Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
        let sd = subdivide_all_edges(&dodecahedron());
        assert_eq!((sd.vertex_count(), sd.edge_count(), is_bipartite(&sd), girth(&sd)), (50, 60, true, Girth::Finite(10)));
    }

    #[test]
    fn square_minus_edges_small() {
        let h = square_minus_edges(&path(3).unwrap());
        assert_eq!(h, Graph::from_edges(3, [(0, 2)]).unwrap());
        let h5 = square_minus_edges(&cycle(5).unwrap());
        assert_eq!((h5.edge_count(), degree_stats(&h5), girth(&h5)), (5, (2, 2), Girth::Finite(5)));
    }

    #[test]
    fn cage_and_its_square() {
        let g1 = cage_g1();
        assert_eq!((g1.vertex_count(), g1.edge_count(), degree_stats(&g1), girth(&g1)), (58, 87, (3, 3), Girth::Finite(9)));
        assert!(g1.has_edge(0, 1) && g1.has_edge(0, 57) && g1.has_edge(0, 8));
        let h1 = cage_h1();
        assert_eq!((h1.vertex_count(), degree_stats(&h1)), (58, (6, 6)));
    }

    #[test]
    fn small_named_graphs() {
        let spider = merged_leaves_spider(4).unwrap();
        assert_eq!(spider.vertex_count(), 10);
        assert_eq!(domination_number(&spider, None).exact(), Some(2));
        let f2 = triangle_counterexample();
        assert_eq!((f2.vertex_count(), f2.edge_count()), (10, 17));
        assert_eq!(domination_number(&f2, None).exact(), Some(3));
    }
}
