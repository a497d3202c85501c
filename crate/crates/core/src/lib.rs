//! Abstract argumentation toolkit.
//!
//! * [`framework`]: the data model and set predicates (conflict-freeness,
//!   defense, range, grounded fixed point).
//! * [`semantics`] and [`task`]: the seven semantics and the competition
//!   task catalog (`DC`, `DS`, `SE`, `EE` per semantics, plus `D3`).
//! * [`engine`]: an exhaustive oracle and a labelling search engine.
//! * [`gen`]: seeded benchmark generators.
//! * [`io`]: APX/TGF instances and solver answer text.
//! * [`harness`]: running, judging, scoring and benchmark selection.

pub mod engine;
pub mod examples;
pub mod framework;
pub mod gen;
pub mod harness;
pub mod io;
pub mod semantics;
pub mod task;

#[cfg(feature = "cli")]
pub mod cli;

pub use engine::{Engine, EngineError, Oracle, Reasoner};
pub use framework::{AfError, ArgumentId, ArgumentationFramework, Extension};
pub use semantics::SemanticsKind;
pub use task::{Answer, Problem, TaskKind, TaskSpec, Triathlon};
