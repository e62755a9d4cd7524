//! Ascent, repetition and descent sequences.
//!
//! The crate enumerates the three sequence families, implements three
//! bijections (repetition sequences to set partitions, 021-avoiding
//! repetition sequences to Dyck paths, 021-avoiding ascent sequences to Dyck
//! paths), expands the length/zeros generating function of 021-avoiding
//! ascent sequences exactly over the rationals, and cross-checks all of it
//! by brute force in the [`verify`] registry.
//!
//! Sequence positions are 1-based wherever an index is exposed
//! (`tight_indices`, `key_index`); the underlying storage is an ordinary
//! zero-based `Vec`.

pub mod bijections;
pub mod dyck;
mod error;
pub mod partitions;
pub mod seqcore;
pub mod series;
pub mod verify;

pub use bijections::{
    main_values, next_value_split, phi, phi_inverse, psi, psi_inverse, tau, tau_inverse,
    MainValueRange, NextValueSplit, TauMode,
};
pub use dyck::{DyckPath, Step};
pub use error::{Error, Result};
pub use partitions::{bell_number, enumerate_partitions, SetPartition};
pub use seqcore::{Constraint, Enumerator, Family, IntSequence};
pub use series::{CountTable, Rational, TruncSeries};
