//! Command-line front end for the `dense-coding` library: single points,
//! parameter sweeps, critical temperatures and figure data.

pub mod app;
pub mod error;
pub mod figures;
pub mod format;
pub mod sweep;

pub use app::run;
pub use error::CliError;
