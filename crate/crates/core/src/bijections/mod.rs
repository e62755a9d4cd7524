//! The three bijections and their inverses.
//!
//! * [`phi`]: repetition sequences of length `n` to set partitions of
//!   `{1..n}`, sending repetitions to dividers.
//! * [`psi`]: 021-avoiding repetition sequences to Dyck paths, sending
//!   repetitions to valleys.
//! * [`tau`]: 021-avoiding ascent sequences to Dyck paths, sending runs of
//!   zeros to good runs of peaks and descents to `DDU` factors. Available in
//!   a recursive and an incremental form that must agree.

mod phi;
mod psi;
mod tau;

pub use phi::{phi, phi_inverse, phi_top_down};
pub use psi::{next_value_split, psi, psi_inverse, NextValueSplit};
pub use tau::{main_values, tau, tau_inverse, MainValueRange, TauMode};

use crate::error::{Error, Result};
use crate::seqcore::{avoids_021, is_valid, Family, IntSequence};

fn require_member(seq: &[u32], family: Family, what: &'static str) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::Empty { what });
    }
    if !is_valid(seq, family) {
        return Err(Error::InvalidSequence {
            seq: IntSequence::from(seq).to_string(),
            family,
        });
    }
    Ok(())
}

fn require_avoiding(seq: &[u32], family: Family, what: &'static str) -> Result<()> {
    require_member(seq, family, what)?;
    if !avoids_021(seq) {
        return Err(Error::NotAvoiding {
            seq: IntSequence::from(seq).to_string(),
            family,
        });
    }
    Ok(())
}
