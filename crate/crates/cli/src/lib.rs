//! Problem-file parsing, the built-in battery and the `mfhrr` command line.

pub mod app;
pub mod battery;
pub mod problem;

pub use app::run;
pub use battery::builtin_battery;
pub use problem::ProblemFile;
