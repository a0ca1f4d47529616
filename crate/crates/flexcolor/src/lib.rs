//! File formats, corpus generation and the command implementations behind the
//! `flexcolor` binary.

pub mod cli;
pub mod corpus;
pub mod format;
