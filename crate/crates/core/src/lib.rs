//! Exact verification engine for Yangian actions on Grassmann algebras.

pub mod enveloping;
pub mod error;
pub mod exact;
pub mod glmodule;
pub mod grassmann;
pub mod induced;
pub mod hecke;
pub mod olshanski;
pub mod perm;
pub mod report;
pub mod yangian;
pub mod zhelobenko;

pub use error::{Error, Result};
