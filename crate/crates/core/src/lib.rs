//! Exact logical Pauli channels of single-logical-qubit stabilizer codes and
//! secret-key-rate analysis of repeater chains built from encoded memories.
//!
//! Pauli operators are phaseless symplectic bit masks ([`pauli`]). A code
//! ([`code`]) is decoded with a syndrome lookup table ([`decoder`]) and every
//! physical error is classified into a logical Pauli. Summing occurrence
//! probabilities per class gives exact polynomial channels ([`channel`]),
//! cross-checked by a dense state-vector model ([`oracle`]). The [`repeater`]
//! module turns channels into key rates.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod channel;
pub mod code;
pub mod decoder;
pub mod error;
pub mod oracle;
pub mod pauli;
pub mod poly;
pub mod repeater;

pub use error::{Error, Result};
