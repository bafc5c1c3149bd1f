//! Exhaustive and randomized checks of the characterization theorems.

use thiserror::Error;

use crate::classes::ClassError;
use crate::graph::GraphError;

pub mod converse;
pub mod enumerate;
pub mod lemma;
pub mod theorems;

pub use converse::{probe_converse, probe_transit, ConverseReport, ProbeOutcome};
pub use enumerate::{all_graphs, canonical_key, corpus_up_to, enumerate_graphs, GraphSource};
pub use lemma::{induced_path_lemma_check, PathLemma};
pub use theorems::{sweep, sweep_graphs, verify_theorem, EquivalenceReport, TheoremCheck, TheoremId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("builtin enumeration supports n <= 7, got {0}; use a corpus file")]
    TooLargeForBuiltin(usize),
    #[error("corpus: {0}")]
    Corpus(String),
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("unknown lemma {0:?} (expected easy1, easy or easydh)")]
    UnknownLemma(String),
    #[error("{0} is not a characterization theorem")]
    NotCharacterization(theorems::TheoremId),
    #[error("{0}")]
    Contract(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Class(#[from] ClassError),
}
