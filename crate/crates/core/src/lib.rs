pub mod cli;
pub mod cones;
pub mod dag;
pub mod det;
pub mod digraph;
pub mod error;
pub mod oracle;
pub mod path_count;
pub mod ring;
pub mod root_system;
pub mod weyl;

pub use error::{Error, Result};
