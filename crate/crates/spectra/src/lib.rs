//! File formats, parallel search and the command-line front end for
//! [`spectra_core`].

pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;

pub use spectra_core;
