//! Exhaustive generation of connected graphs and the verifications built on it.

mod census;
mod generate;
mod induced;
mod structure;

pub use census::{
    h_optimal_graphs, verify_min_order, Census, HOptimalScan, MinOrderVerdict, FULL_TABLE_ORDER,
};
pub use generate::{connected_graphs, count_connected_graphs, Generator, MAX_GENERATION_ORDER};
pub use induced::find_induced_reduced;
pub use structure::{structure_report, Check, PairType, Preconditions, StructureReport};

pub use crate::coloring::{all_complete_colorings, for_each_complete_coloring};
