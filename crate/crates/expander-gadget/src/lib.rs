//! Worst-case to expander-case graph reductions.
//!
//! Every input graph is augmented with a balancing layer `L`, an expansion layer `R`
//! and a certified bipartite expander `X` between them, so that the result is an
//! Ω(1)-expander while the answer to a chosen problem is recoverable exactly.
//! Exact oracles in [`oracle`] check each claim at small scale.

pub mod cli;
pub mod dynamic;
pub mod error;
pub mod expander;
pub mod gadget;
pub mod graph;
pub mod io;
pub mod measure;
pub mod oracle;
pub mod ratio;
pub mod report;
pub mod spectral;
pub mod verify;
pub mod wter;

pub use error::{Error, Result};
pub use gadget::{ExpanderizedGraph, GadgetParams, Mode, Role};
pub use graph::{Cut, Graph};
pub use ratio::Rational;
