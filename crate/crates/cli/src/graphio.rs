//! Graph sources: builtin names, graph6, edge lists and DOT.

use std::fs;
use std::path::Path;

use pursuit_core::constructions::{
    cage_g1, cage_h1, complete, cycle, dodecahedron, line_graph, merged_leaves_spider, path, petersen, star,
    subdivide_all_edges, triangle_counterexample, triangle_with_pendants,
};
use pursuit_core::enumerate::connected_graphs;
use pursuit_core::graph6::{encode_graph6, parse_graph6};
use pursuit_core::Graph;

use crate::error::{CliError, CliResult};

/// Fixed builtin names with a one-line description.
pub const BUILTINS: &[(&str, &str)] = &[
    ("p4", "path on 4 vertices"),
    ("c7", "cycle on 7 vertices"),
    ("triangle-pendants", "triangle with two pendant vertices on one corner"),
    ("triangle-guard", "10-vertex graph with a triangle, gamma 3 and cc 2"),
    ("star6", "star with 6 leaves"),
    ("petersen", "Petersen graph"),
    ("petersen-line", "line graph of the Petersen graph"),
    ("dodecahedron", "dodecahedron"),
    ("subdivided-dodecahedron", "dodecahedron with every edge subdivided"),
    ("g1", "(3,9)-cage on 58 vertices"),
    ("h1", "square minus edges of the (3,9)-cage"),
];

/// Parametric builtins: the prefix followed by a size, e.g. `cycle9`.
pub const PARAMETRIC: &[(&str, &str)] = &[
    ("path", "path on N vertices"),
    ("cycle", "cycle on N vertices"),
    ("star", "star with N leaves"),
    ("complete", "complete graph on N vertices"),
    ("spider", "spider with N arms of length 3 whose ends are merged"),
];

/// Builds a builtin graph by name.
pub fn builtin(name: &str) -> CliResult<Graph> {
    let g = match name {
        "p4" => path(4)?,
        "c7" => cycle(7)?,
        "triangle-pendants" => triangle_with_pendants(),
        "triangle-guard" => triangle_counterexample(),
        "star6" => star(6)?,
        "petersen" => petersen(),
        "petersen-line" => line_graph(&petersen())?,
        "dodecahedron" => dodecahedron(),
        "subdivided-dodecahedron" => subdivide_all_edges(&dodecahedron()),
        "g1" => cage_g1(),
        "h1" => cage_h1(),
        _ => parametric(name)?,
    };
    Ok(g.with_name(name))
}

fn parametric(name: &str) -> CliResult<Graph> {
    let unknown = || {
        let names: Vec<&str> = BUILTINS.iter().map(|(n, _)| *n).collect();
        let params: Vec<String> = PARAMETRIC.iter().map(|(p, _)| format!("{p}N")).collect();
        CliError::Input(format!("unknown builtin `{name}`; known: {}, {}", names.join(", "), params.join(", ")))
    };
    let split = name.find(|c: char| c.is_ascii_digit()).ok_or_else(unknown)?;
    let (prefix, digits) = name.split_at(split);
    let size: usize = digits.parse().map_err(|_| unknown())?;
    Ok(match prefix {
        "path" => path(size)?,
        "cycle" => cycle(size)?,
        "star" => star(size)?,
        "complete" => complete(size)?,
        "spider" => merged_leaves_spider(size)?,
        _ => return Err(unknown()),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    G6,
    Edges,
    Dot,
}

impl Format {
    /// Guesses a format from a file extension; edge lists are the fallback.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::G6,
            Some("dot" | "gv") => Format::Dot,
            _ => Format::Edges,
        }
    }
}

/// Loads `builtin:NAME` or a graph file (format from the extension).
pub fn load_graph(source: &str) -> CliResult<Graph> {
    if let Some(name) = source.strip_prefix("builtin:") {
        return builtin(name);
    }
    let path = Path::new(source);
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let g = parse_graph(&text, Format::from_path(path)).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(source);
    Ok(g.with_name(stem))
}

pub fn parse_graph(text: &str, format: Format) -> CliResult<Graph> {
    match format {
        Format::G6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines.next().ok_or_else(|| CliError::Input("no graph6 line".into()))?;
            if lines.next().is_some() {
                return Err(CliError::Input("expected a single graph6 line; use a corpus for several".into()));
            }
            Ok(parse_graph6(first)?)
        }
        Format::Edges => parse_edge_list(text),
        Format::Dot => parse_dot(text),
    }
}

pub fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => format!("{}\n", encode_graph6(g)),
        Format::Edges => render_edge_list(g),
        Format::Dot => render_dot(g),
    }
}

pub fn write_graph(g: &Graph, path: &Path, format: Format) -> CliResult<()> {
    fs::write(path, render_graph(g, format)).map_err(|e| CliError::io(path, e))
}

/// Edge list: one `u v` pair per line, `#` comments, and an optional
/// `# n COUNT` header that fixes the vertex count.
pub fn parse_edge_list(text: &str) -> CliResult<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            if words.next() == Some("n") {
                let n = words.next().and_then(|w| w.parse::<usize>().ok());
                declared = Some(n.ok_or_else(|| CliError::Input(format!("line {}: bad `# n` header", lineno + 1)))?);
            }
            continue;
        }
        if line.is_empty() {
            continue;
        }
        let ids: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Input(format!("line {}: expected two vertex ids", lineno + 1)))?;
        match ids[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(CliError::Input(format!("line {}: expected two vertex ids", lineno + 1))),
        }
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, edges)?)
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("# n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// A small DOT reader for undirected graphs: node statements and `--`
/// chains; attributes are ignored. Numeric ids are used as given, otherwise
/// vertices are numbered in order of first appearance.
pub fn parse_dot(text: &str) -> CliResult<Graph> {
    let stripped: String = text
        .lines()
        .map(|l| if l.trim_start().starts_with('#') { "" } else { l.split("//").next().unwrap_or("") })
        .collect::<Vec<_>>()
        .join("\n");
    let open = stripped.find('{').ok_or_else(|| CliError::Input("DOT: missing `{`".into()))?;
    let close = stripped.rfind('}').ok_or_else(|| CliError::Input("DOT: missing `}`".into()))?;
    if stripped[..open].contains("digraph") {
        return Err(CliError::Input("DOT: directed graphs are not supported".into()));
    }
    let body = remove_attributes(&stripped[open + 1..close]);

    let mut names: Vec<String> = Vec::new();
    let mut chains: Vec<Vec<usize>> = Vec::new();
    for stmt in body.split([';', '\n']).map(str::trim).filter(|s| !s.is_empty()) {
        if stmt.contains('=') || matches!(stmt, "graph" | "node" | "edge") {
            continue;
        }
        let mut chain = Vec::new();
        for id in stmt.split("--").map(|s| s.trim().trim_matches('"')) {
            if id.is_empty() || id.contains(char::is_whitespace) {
                return Err(CliError::Input(format!("DOT: cannot read statement `{stmt}`")));
            }
            let index = match names.iter().position(|n| n == id) {
                Some(i) => i,
                None => {
                    names.push(id.to_string());
                    names.len() - 1
                }
            };
            chain.push(index);
        }
        chains.push(chain);
    }

    let numeric: Option<Vec<usize>> = names.iter().map(|n| n.parse().ok()).collect();
    let (n, ids) = match numeric {
        Some(ids) => (ids.iter().map(|&i| i + 1).max().unwrap_or(0), ids),
        None => (names.len(), (0..names.len()).collect()),
    };
    let edges = chains.iter().flat_map(|c| c.windows(2).map(|w| (ids[w[0]], ids[w[1]])));
    Ok(Graph::from_edges(n, edges)?)
}

fn remove_attributes(body: &str) -> String {
    let mut out = String::with_capacity(body.len());
    let mut depth = 0usize;
    for ch in body.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ if depth == 0 => out.push(ch),
            _ => {}
        }
    }
    out
}

pub fn render_dot(g: &Graph) -> String {
    let name = g.name().unwrap_or("G").replace('"', "");
    let mut out = format!("graph \"{name}\" {{\n");
    for v in g.vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// A corpus is `small:N` (every connected graph on at most `N ≤ 8`
/// vertices) or a file with one graph6 string per line.
pub fn load_corpus(source: &str) -> CliResult<Vec<Graph>> {
    let graphs = if let Some(n) = source.strip_prefix("small:") {
        let n: usize = n.parse().map_err(|_| CliError::Input(format!("bad corpus size in `{source}`")))?;
        connected_graphs(n)?
    } else {
        let path = Path::new(source);
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| CliError::Input(format!("{source}:{}: {e}", i + 1))))
            .collect::<CliResult<Vec<_>>>()?
    };
    if graphs.is_empty() {
        return Err(CliError::Input(format!("corpus `{source}` is empty")));
    }
    Ok(graphs)
}
