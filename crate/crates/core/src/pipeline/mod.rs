//! End-to-end operations behind the command-line tool: comparing two
//! clusterings, the Iris experiment, axiom checks and timing runs.

mod axioms;
mod bench;
mod compare;
mod iris;
pub mod random;

pub use axioms::{check_family, run_axioms, AxiomFamily, AxiomOptions, AxiomOutcome};
pub use bench::{run_bench, BenchOptions, BenchRecord};
pub use compare::{compare, joint_kind, CompareOptions, Input, View};
pub use iris::{fit, reproduce_iris, Algorithm, Cell, IrisOptions, IrisRow, IrisTable, IRIS_BUDGET};
