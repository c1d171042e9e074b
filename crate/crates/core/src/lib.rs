//! Combinatorial models of affine `sl_n` crystals.
//!
//! Partitions and bead rows, colored abaci with their crystal operators,
//! cylindric plane partitions, Kyoto paths, truncated `q`-series for the
//! partition function, and the finite-type crystal commutor.

pub mod abacus;
pub mod charformula;
pub mod commutor;
pub mod cpp;
pub mod crystal;
pub mod error;
pub mod kyoto;
pub mod partition;
pub mod series;

pub use error::{Error, Result};
