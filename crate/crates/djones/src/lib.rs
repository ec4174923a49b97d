//! File formats, parallel verification grids and the command-line front end
//! for the `djones-core` library.

pub mod cli;
pub mod formats;
pub mod suites;
