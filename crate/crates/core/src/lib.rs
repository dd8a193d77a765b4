//! Trisection diagrams of 4-manifolds and of surfaces in them.

pub mod cancel;
pub mod catalog;
pub mod cli;
pub mod cells;
pub mod combsurf;
pub mod complement;
pub mod error;
pub mod curves;
pub mod diagrams;
pub mod glue;
pub mod invariants;
pub mod io;
pub mod kirby;
pub mod openbook;

pub use cancel::CancelToken;
pub use error::{Error, Result};
