//! Counting follower, predecessor and extender sets of subshifts.
//!
//! Finite labeled-graph presentations get exact classification through the
//! subset construction ([`sofic`]); the nonsofic up/down shift gets an exact
//! symbolic engine ([`updown`]); any membership oracle can be classified at
//! finite depth ([`oracle`]). [`criteria`] turns exact counts into soficity
//! certificates.

pub mod alphabet;
pub mod coded;
pub mod criteria;
pub mod error;
pub mod graph;
pub mod language;
pub mod oracle;
pub mod report;
pub mod sofic;
pub mod table;
pub mod updown;

pub use alphabet::{Alphabet, Letter, Word};
pub use coded::{CodedSystem, SGapSpec};
pub use error::{Error, Result};
pub use graph::LabeledGraph;
pub use language::{enumerate_language, Language};
pub use oracle::Oracle;
pub use sofic::{SoficShift, StateSet};
pub use table::{ClassTable, Side};
pub use updown::{UpDown, VertexSet};
