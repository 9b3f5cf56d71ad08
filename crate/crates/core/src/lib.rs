//! Recognition of word-representable (semi-transitive) co-bipartite graphs.
//!
//! A co-bipartite graph splits into two cliques `X` and `Y`; the cross edges
//! form a binary matrix `M(G)` with rows indexed by `X` and columns by `Y`.
//! The graph admits a semi-transitive orientation exactly when `M(G)` has the
//! circularly compatible ones property, and the minimal obstructions are the
//! graphs `CG(F)` for the forbidden matrix configurations `F`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is a pure function
//! over immutable values; text formats, the command line and the exhaustive
//! sweeps live in the companion `cobip` crate.
//!
//! Modules:
//!
//! * [`graph`] - simple graphs, complements, local complementation,
//!   co-bipartitions, induced-subgraph search and the named graph families.
//! * [`words`] - alternation, word-representants and bounded brute-force
//!   representant search.
//! * [`orientation`] - orientations, shortcut/cycle detection, the
//!   brute-force semi-transitivity oracle and the biorder construction.
//! * [`matrix`] - sparse binary matrices, consecutive/circular ones,
//!   configurations, forbidden patterns, biorders and the CCO decision.
//! * [`recognizer`] - the graph/matrix bridge and the end-to-end verdict.
#![no_std]

extern crate alloc;

mod budget;
mod error;

pub mod graph;
pub mod matrix;
pub mod orientation;
pub mod recognizer;
pub mod words;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{CoBipartition, FamilyId, Graph, Vertex};
pub use matrix::{BinaryMatrix, Biorder, PatternId};
pub use orientation::{Orientation, Violation};
pub use recognizer::{Certificate, Decision, GsMember, Verdict, WitnessPath};
pub use words::Word;
