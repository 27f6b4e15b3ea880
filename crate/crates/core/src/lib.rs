pub mod constructions;
pub mod density;
pub mod error;
pub mod graph;
pub mod search;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Edge, Graph, VertexPartition};
