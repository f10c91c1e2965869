pub mod bell;
pub mod cli;
pub mod error;
pub mod exactfield;
pub mod index;
pub mod lie;
pub mod report;
pub mod rtt;
pub mod yangian;

pub use error::{Error, Result};
