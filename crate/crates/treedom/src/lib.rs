//! File formats, random trees, the parallel census and the command-line
//! front end over `treedom-core`.

pub mod census;
pub mod cli;
pub mod io;
pub mod random;

pub use cli::run;
