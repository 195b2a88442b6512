pub mod arw;
pub mod buckets;
pub mod cli;
pub mod cut;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;
mod marks;
pub mod oracle;
pub mod pipelines;
pub mod reduce;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
