//! File formats, JSON reports and the `fracbox` command line tool built on
//! [`fracbox_core`].

pub mod cli;
pub mod format;
pub mod json;

use thiserror::Error;

pub use crate::format::{emit_graph6, parse_edge_list, parse_graph6, Format, ParseError};

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("write failed: {0}")]
    Output(#[from] std::io::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Solve(#[from] fracbox_core::Error),
}

impl Error {
    /// 2 for size-limit violations, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(e) if e.is_size_limit() => 2,
            Error::Solve(e) if e.is_size_limit() => 2,
            _ => 1,
        }
    }
}
