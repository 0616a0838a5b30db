//! Cactus groups, their Gauss diagram model, and the Reidemeister–Schreier
//! machinery for computing presentations of pure cactus groups.

pub mod acceptance;
pub mod cactus;
pub mod error;
pub mod perm;
pub mod presentation;
pub mod racg;
pub mod render;
pub mod rschreier;
pub mod subgroups;
pub mod syntax;

pub use error::{Error, Result};

/// Largest supported strand count; label sets are 64-bit masks.
pub const MAX_STRANDS: usize = 64;
