//! File formats, verification sweeps and the command-line interface built
//! on top of [`mans_core`].

pub mod cli;
mod error;
pub mod export;
pub mod verify;

pub use error::{Error, Result};
pub use export::{export_dot, export_json, load_json, NodeDocument, TreeDocument};
pub use verify::{run_suite, Suite, VerifyReport};
