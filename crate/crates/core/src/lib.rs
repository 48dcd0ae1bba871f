pub mod capacity;
pub mod catalog;
pub mod context;
pub mod error;
pub mod formats;
pub mod graph;
pub mod lattice;
pub mod ray;
pub mod report;
pub mod scan;
pub mod states;

pub use error::{Error, Result};
