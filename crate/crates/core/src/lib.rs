//! Quasi neighborhood balanced colorings (QNBC) of simple graphs.
//!
//! A red/blue vertex coloring is *neighborhood balanced* (NBC) when every
//! vertex has as many red as blue neighbors, and *quasi neighborhood
//! balanced* when the two counts differ by at most one everywhere and by
//! exactly one somewhere. This crate checks such colorings, searches for them,
//! builds certified colorings for several graph families, lifts colorings
//! through graph products, and implements the induced-subgraph embedding and
//! the NBC-to-QNBC gadget.

pub mod census;
pub mod checker;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod products;
pub mod sample;
pub mod solver;
pub mod theorems;

pub use checker::{
    check_congruence, classify, counting_summary, imbalance, imbalances, Classification,
    CongruenceReport, CountingSummary, Kind,
};
pub use error::{Error, Result};
pub use families::{Claim, FamilyResult};
pub use graph::{complement_coloring, Color, Coloring, Graph, VertexMap};
pub use products::{JoinMode, LexMode, Lift, ProductKind, Promise};
pub use solver::{enumerate, oracle, solve, SearchOutcome, VariantMode, Verdict};
