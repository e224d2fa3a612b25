//! Construction scripts, SVG output and the command line on top of
//! `pgeo-core`.

pub mod report;
pub mod script;
pub mod svg;

pub use pgeo_core as core;
