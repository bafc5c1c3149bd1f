//! Gadgets, ternary structures and Ehrenfeucht-Fraïssé games.

use thiserror::Error;

use crate::graph::GraphError;

pub mod ef;
pub mod gadgets;
pub mod strategy;
pub mod structure;

pub use ef::{ef_solve, ef_solve_with, EFGameResult, Move, Player, Side};
pub use gadgets::{build_g_d, build_g_d_prime, GadgetIds, Layer};
pub use strategy::{strategy_soak, GadgetGame, SoakReport, SpoilerSource, StrategyRun};
pub use structure::{
    check_partial_isomorphism, is_scant, scant_structure, w_structure, PartialMap, ScantVerdict, ScantWitness,
    TernaryStructure,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NondefError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a transit relation: {0}")]
    NotTransit(String),
    #[error("estimated {estimated:.3e} game states exceeds the budget of {budget:.3e}; use strategy mode or raise TOLLWALK_BUDGET")]
    Budget { estimated: f64, budget: f64 },
    #[error("precondition: {0}")]
    Precondition(String),
    #[error("{0}")]
    Contract(String),
}
