//! Exact solvers and structural certificates for Cops and Robbers and for
//! Cops and Attacking Robbers on finite reflexive graphs.
//!
//! Graphs are stored as simple graphs; every vertex carries an implicit loop,
//! which the game rules interpret as passing. The crate is `no_std` and only
//! needs `alloc`; file formats, JSON and the command line live in the
//! `pursuit` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod characterizations;
pub mod constructions;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod game;
pub mod graph;
pub mod graph6;
pub mod structure;

pub use bitset::VertexSet;
pub use characterizations::{Certificate, EliminationRecord, EmbeddingFaces, GammaEvidence, Lemma};
pub use domination::{domination_number, Domination, DominationWitness};
pub use error::{Error, Result};
pub use game::{
    attacking_cop_number, cop_number, naive_fixed_point, solve, solve_attacking, solve_classic,
    GameKind, GameState, Outcome, Placement, SearchResult, Side, SolveOptions, SolveTable,
};
pub use graph::{DominatedPair, Graph, Vertex};
pub use structure::{Distance, Girth};
