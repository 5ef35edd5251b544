pub mod basis;
pub mod cli;
pub mod errata;
pub mod error;
pub mod exact;
pub mod fermat;
pub mod interp;
pub mod polyfam;
pub mod powersum;
pub mod report;
pub mod stirling;

pub use error::{Error, Result};
