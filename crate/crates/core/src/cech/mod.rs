//! Čech cohomology of tautological bundles over the permutohedral fan.
//!
//! The pipeline: [`context`] fixes the fan (cones, chart tuples, chain
//! tables), [`value`] presents the per-weight value spaces of normalized
//! bundle expressions as nested subquotients, [`complex`] assembles and
//! solves block complexes, [`engine`] drives the per-weight evaluation into
//! complete cohomology tables, and [`oracle`] recomputes line-bundle tables
//! from fan combinatorics alone as an independent check.

pub mod complex;
pub mod context;
pub mod engine;
pub mod oracle;
pub mod value;

pub use context::{ConeId, LeafTables, PermContext};
pub use engine::{
    chart_trivialization, chart_weight_space, pushforward_check, CohomologyReport, Engine,
    H0Pieces, H0Weight, PushforwardReport, PushFunctor, WeightLine,
};
pub use value::{BitMask, GenList, Subquotient};
