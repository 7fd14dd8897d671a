//! Decision procedures and lower-bound certificates for the attacking cop
//! number: the `cc = 1` test, the triangle-free `cc ≤ 2` characterisation via
//! domination elimination, the outerplanar face test, and three girth-based
//! lower bounds that can be re-checked from the graph alone.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::constructions::{square_minus_edges, subdivide_all_edges};
use crate::domination::{counting_lower_bound, domination_number, Domination};
use crate::error::{Error, Result};
use crate::game::{attacking_cop_number, cop_number, require_connected, SolveOptions};
use crate::graph::{DominatedPair, Graph, Vertex};
use crate::structure::{degree_stats, find_dominated_vertex, girth, is_triangle_free, universal_vertices, Girth};

/// Size budget for exact domination searches inside certificates.
pub const DEFAULT_GAMMA_BUDGET: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lemma {
    /// girth ≥ 5 and γ > δ give `cc ≥ δ + 1`.
    Girth5,
    /// girth ≥ 5 and γ > δ give `cc(S(G)) ≥ δ + 1` for the full subdivision.
    Subdivision,
    /// girth ≥ 9 and δ ≥ 3 give `cc(G² − E) ≥ min(2δ, γ(G² − E))`.
    Square,
}

impl Lemma {
    pub fn as_str(self) -> &'static str {
        match self {
            Lemma::Girth5 => "girth5",
            Lemma::Subdivision => "subdivision",
            Lemma::Square => "square",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaMethod {
    /// `⌈n / (Δ + 1)⌉`.
    CountingBound,
    /// Exhaustive search found no dominating set below the value.
    ExhaustiveSearch,
}

/// What is known about a domination number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaEvidence {
    Exact(usize),
    AtLeast { value: usize, method: GammaMethod },
}

impl GammaEvidence {
    /// Largest value the evidence guarantees γ to be at least.
    pub fn lower(self) -> usize {
        match self {
            GammaEvidence::Exact(v) | GammaEvidence::AtLeast { value: v, .. } => v,
        }
    }

    fn recheck(self, g: &Graph) -> bool {
        match self {
            GammaEvidence::Exact(v) => domination_number(g, Some(v)).exact() == Some(v),
            GammaEvidence::AtLeast { value, method: GammaMethod::CountingBound } => counting_lower_bound(g) >= value,
            GammaEvidence::AtLeast { value, method: GammaMethod::ExhaustiveSearch } => {
                value == 0 || domination_number(g, Some(value - 1)).exact().is_none()
            }
        }
    }
}

/// A re-checkable lower bound on an attacking cop number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub lemma: Lemma,
    /// Name of the input graph, if it has one.
    pub source: Option<String>,
    /// Graph the bound is about: the input, its subdivision or `G² − E`.
    pub target: String,
    /// Premises, measured on the input graph.
    pub girth: Girth,
    pub min_degree: usize,
    /// Domination evidence: on the input for `Girth5`/`Subdivision`, on
    /// `G² − E` for `Square`.
    pub gamma: GammaEvidence,
    /// The concluded bound `cc(target) ≥ bound`.
    pub bound: usize,
}

impl Certificate {
    /// Recomputes every premise from `g` and checks the bound formula.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fail = |what: &str| Err(Error::Certificate(format!("{} certificate: {what}", self.lemma.as_str())));
        if girth(g) != self.girth {
            return fail("girth differs");
        }
        let (delta, _) = degree_stats(g);
        if delta != self.min_degree {
            return fail("minimum degree differs");
        }
        match self.lemma {
            Lemma::Girth5 | Lemma::Subdivision => {
                if !self.girth.at_least(5) {
                    return fail("girth below 5");
                }
                if self.gamma.lower() <= delta || !self.gamma.recheck(g) {
                    return fail("domination premise does not hold");
                }
                if self.bound != delta + 1 {
                    return fail("bound is not δ + 1");
                }
            }
            Lemma::Square => {
                if !self.girth.at_least(9) || delta < 3 {
                    return fail("needs girth ≥ 9 and δ ≥ 3");
                }
                let h = square_minus_edges(g);
                if !self.gamma.recheck(&h) {
                    return fail("domination evidence for G² − E does not hold");
                }
                if self.bound != (2 * delta).min(self.gamma.lower()) {
                    return fail("bound is not min(2δ, γ)");
                }
            }
        }
        Ok(())
    }
}

/// Domination evidence used by the certificates: the counting bound when it
/// already exceeds `needed`, otherwise an exact search up to `budget`.
fn gamma_evidence(g: &Graph, needed: usize, budget: usize) -> GammaEvidence {
    let counting = counting_lower_bound(g);
    if counting > needed.max(budget) {
        return GammaEvidence::AtLeast { value: counting, method: GammaMethod::CountingBound };
    }
    match domination_number(g, Some(budget.max(needed))) {
        Domination::Exact(w) => GammaEvidence::Exact(w.size()),
        Domination::ExceedsBudget { budget } => GammaEvidence::AtLeast { value: budget + 1, method: GammaMethod::ExhaustiveSearch },
    }
}

fn name_of(g: &Graph) -> Option<String> {
    g.name().map(String::from)
}

fn girth5_premises(g: &Graph, gamma_budget: usize) -> Option<(Girth, usize, GammaEvidence)> {
    let gi = girth(g);
    if !gi.at_least(5) {
        return None;
    }
    let (delta, _) = degree_stats(g);
    let gamma = gamma_evidence(g, delta, gamma_budget);
    (gamma.lower() > delta).then_some((gi, delta, gamma))
}

/// `cc(G) ≥ δ + 1` when girth ≥ 5 and γ > δ.
pub fn girth5_lower_bound(g: &Graph, gamma_budget: usize) -> Option<Certificate> {
    let (girth, min_degree, gamma) = girth5_premises(g, gamma_budget)?;
    let source = name_of(g);
    Some(Certificate {
        lemma: Lemma::Girth5,
        target: source.clone().unwrap_or_else(|| "G".into()),
        source,
        girth,
        min_degree,
        gamma,
        bound: min_degree + 1,
    })
}

/// `cc(S(G)) ≥ δ(G) + 1` for the full subdivision, under the same premises.
pub fn subdivision_lower_bound(g: &Graph, gamma_budget: usize) -> Option<Certificate> {
    let (girth, min_degree, gamma) = girth5_premises(g, gamma_budget)?;
    let source = name_of(g);
    Some(Certificate {
        lemma: Lemma::Subdivision,
        target: subdivide_all_edges(g).name().map(String::from).unwrap_or_else(|| "S(G)".into()),
        source,
        girth,
        min_degree,
        gamma,
        bound: min_degree + 1,
    })
}

/// `cc(G² − E) ≥ min(2δ, γ(G² − E))` when girth ≥ 9 and δ ≥ 3.
pub fn square_lower_bound(g: &Graph, gamma_budget: usize) -> Option<Certificate> {
    let gi = girth(g);
    let (delta, _) = degree_stats(g);
    if !gi.at_least(9) || delta < 3 {
        return None;
    }
    let h = square_minus_edges(g);
    let gamma = gamma_evidence(&h, 2 * delta - 1, gamma_budget);
    Some(Certificate {
        lemma: Lemma::Square,
        source: name_of(g),
        target: h.name().map(String::from).unwrap_or_else(|| "G^2-E".into()),
        girth: gi,
        min_degree: delta,
        gamma,
        bound: (2 * delta).min(gamma.lower()),
    })
}

/// `cc(G) = 1` exactly when some vertex dominates the graph.
pub fn cc_equals_one(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    Ok(domination_number(g, Some(1)).exact() == Some(1))
}

/// Greedy domination elimination, in original vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationRecord {
    /// Removed vertices `v1, …, vk` in order.
    pub order: Vec<Vertex>,
    /// For each removal, the pair witnessing domination in the graph that
    /// remained just before it.
    pub witnesses: Vec<DominatedPair>,
    /// Vertices left after the last removal.
    pub final_size: usize,
    /// `γ` of the remaining graph if it is at most 2, else `None`.
    pub final_gamma: Option<usize>,
}

impl EliminationRecord {
    /// Re-checks every step on `g`: each removed vertex is dominated by its
    /// witness in the graph left by the earlier removals.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        if self.order.len() != self.witnesses.len() {
            return Err(Error::Certificate("one witness per removed vertex".into()));
        }
        let mut alive = VertexSet::full(g.vertex_count());
        for (i, (&v, w)) in self.order.iter().zip(&self.witnesses).enumerate() {
            if w.dominated != v || !alive.contains(w.dominated) || !alive.contains(w.dominator) || v == w.dominator {
                return Err(Error::Certificate(format!("step {i}: witness does not name live vertices")));
            }
            let mut nu = g.neighbor_set(v);
            nu.intersect_with(alive.words());
            let mut closed = g.closed_neighbor_set(w.dominator);
            closed.intersect_with(alive.words());
            if !nu.is_subset_of(closed.words()) {
                return Err(Error::Certificate(format!("step {i}: {v} is not dominated by {}", w.dominator)));
            }
            alive.remove(v);
        }
        if alive.len() != self.final_size {
            return Err(Error::Certificate("final size mismatch".into()));
        }
        let (rest, _) = g.induced_subgraph(&alive);
        if domination_number(&rest, Some(2)).exact() != self.final_gamma {
            return Err(Error::Certificate("final domination value mismatch".into()));
        }
        Ok(())
    }
}

/// Decides `cc(G) ≤ 2` for a connected triangle-free graph: true when
/// `γ(G) ≤ 2`, or when repeatedly deleting a dominated vertex (smallest
/// dominated vertex first, then smallest dominator) reaches a graph with
/// `γ ≤ 2` before running out of dominated vertices.
pub fn triangle_free_cc_at_most_2(g: &Graph) -> Result<(bool, EliminationRecord)> {
    require_connected(g)?;
    if !is_triangle_free(g) {
        return Err(Error::NotTriangleFree);
    }
    let mut alive = VertexSet::full(g.vertex_count());
    let mut record = EliminationRecord { order: Vec::new(), witnesses: Vec::new(), final_size: g.vertex_count(), final_gamma: None };
    loop {
        let (rest, ids) = g.induced_subgraph(&alive);
        record.final_size = rest.vertex_count();
        if let Some(gamma) = domination_number(&rest, Some(2)).exact() {
            record.final_gamma = Some(gamma);
            return Ok((true, record));
        }
        let Some(pair) = find_dominated_vertex(&rest) else {
            return Ok((false, record));
        };
        let removed = ids[pair.dominated];
        record.order.push(removed);
        record.witnesses.push(DominatedPair { dominated: removed, dominator: ids[pair.dominator] });
        alive.remove(removed);
    }
}

/// Internal faces of a fixed outerplanar embedding, each as a cyclic vertex
/// sequence. Supplied by the caller; never computed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddingFaces {
    pub faces: Vec<Vec<Vertex>>,
}

impl EmbeddingFaces {
    pub fn new(faces: Vec<Vec<Vertex>>) -> Self {
        EmbeddingFaces { faces }
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        for (index, face) in self.faces.iter().enumerate() {
            let bad = |reason: String| Err(Error::InvalidFace { index, reason });
            if face.len() < 3 {
                return bad(format!("a face needs at least 3 vertices, got {}", face.len()));
            }
            if let Some(&v) = face.iter().find(|&&v| v >= g.vertex_count()) {
                return bad(format!("vertex {v} is not in the graph"));
            }
            let mut seen = VertexSet::new(g.vertex_count());
            if face.iter().any(|&v| !seen.insert(v)) {
                return bad("a vertex repeats".into());
            }
            for (i, &u) in face.iter().enumerate() {
                let v = face[(i + 1) % face.len()];
                if !g.has_edge(u, v) {
                    return bad(format!("({u}, {v}) is not an edge"));
                }
            }
        }
        Ok(())
    }
}

/// Face test for an outerplanar graph without a universal vertex: at most one
/// internal face of length 5 or 6 and none longer than 6.
pub fn outerplanar_cc2_check(g: &Graph, faces: &EmbeddingFaces) -> Result<bool> {
    require_connected(g)?;
    if !universal_vertices(g).is_empty() {
        return Err(Error::UniversalVertex);
    }
    faces.validate(g)?;
    let medium = faces.faces.iter().filter(|f| matches!(f.len(), 5 | 6)).count();
    let long = faces.faces.iter().any(|f| f.len() > 6);
    Ok(medium <= 1 && !long)
}

/// Triangle-free, no dominated vertex and `γ ≥ 3`: two attacking cops lose.
pub fn forces_more_than_two_cops(g: &Graph) -> bool {
    is_triangle_free(g) && find_dominated_vertex(g).is_none() && domination_number(g, Some(2)).exact().is_none()
}

/// Outcome of checking the general bounds on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundAudit {
    /// `None` when the value exceeds the cop limit.
    pub cop_number: Option<usize>,
    pub attacking_cop_number: Option<usize>,
    pub domination_number: usize,
    /// Applicable certificates with whether their bound equals `cc`.
    pub certificates: Vec<(Certificate, Option<bool>)>,
    /// Result of the triangle-free characterisation, if it applies.
    pub triangle_free_cc_at_most_2: Option<bool>,
    pub violations: Vec<String>,
}

/// Computes `c`, `cc` and `γ` and checks `c ≤ cc ≤ min(2c, γ)`,
/// `cc = 1 ⟺ γ = 1`, every applicable certificate, and for triangle-free
/// graphs the `cc ≤ 2` characterisation.
pub fn bound_audit(g: &Graph, k_max: usize, opts: &SolveOptions) -> Result<BoundAudit> {
    let c = cop_number(g, k_max, opts)?.value;
    let cc = attacking_cop_number(g, k_max, opts)?.value;
    let gamma = match domination_number(g, None) {
        Domination::Exact(w) => w.size(),
        Domination::ExceedsBudget { .. } => unreachable!("no budget given"),
    };
    let mut violations = Vec::new();
    // `None` stands for "more than k_max".
    let le = |a: Option<usize>, b: Option<usize>| match (a, b) {
        (Some(a), Some(b)) => a <= b,
        (_, None) => true,
        (None, Some(_)) => false,
    };
    if !le(c, cc) {
        violations.push(format!("c = {c:?} exceeds cc = {cc:?}"));
    }
    if !le(cc, c.map(|c| 2 * c)) {
        violations.push(format!("cc = {cc:?} exceeds 2c for c = {c:?}"));
    }
    if !le(cc, Some(gamma)) {
        violations.push(format!("cc = {cc:?} exceeds γ = {gamma}"));
    }
    if (cc == Some(1)) != (gamma == 1) {
        violations.push(format!("cc = 1 and γ = 1 disagree (cc = {cc:?}, γ = {gamma})"));
    }

    let mut certificates = Vec::new();
    if let Some(cert) = girth5_lower_bound(g, DEFAULT_GAMMA_BUDGET) {
        if let Err(e) = cert.verify(g) {
            violations.push(format!("{e}"));
        }
        if !le(Some(cert.bound), cc) && cc.is_some() {
            violations.push(format!("girth5 bound {} exceeds cc = {cc:?}", cert.bound));
        }
        let tight = cc.map(|cc| cc == cert.bound);
        certificates.push((cert, tight));
    }

    let mut characterisation = None;
    if is_triangle_free(g) {
        let (verdict, record) = triangle_free_cc_at_most_2(g)?;
        if let Err(e) = record.verify(g) {
            violations.push(format!("{e}"));
        }
        if k_max >= 2 && verdict != matches!(cc, Some(k) if k <= 2) {
            violations.push(format!("triangle-free characterisation says {verdict} but cc = {cc:?}"));
        }
        characterisation = Some(verdict);
    }

    Ok(BoundAudit {
        cop_number: c,
        attacking_cop_number: cc,
        domination_number: gamma,
        certificates,
        triangle_free_cc_at_most_2: characterisation,
        violations,
    })
}
