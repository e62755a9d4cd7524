//! Set partitions of `{1..n}` in canonical form.
//!
//! Canonical form: entries increase within each block and blocks are ordered
//! by their smallest entry. Text form separates blocks with `/`; inside a
//! block elements are written without separators when `n <= 9`
//! (`135/29/4/678`) and comma-separated otherwise (`1,10/2,3/...`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PARTITION_CAP: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    /// Checks that `blocks` is a canonical partition of `{1..n}`.
    pub fn from_blocks(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let candidate = SetPartition { blocks };
        let text = candidate.to_string();
        let err = |reason: String| Error::ParsePartition {
            text: text.clone(),
            reason,
        };
        let n = candidate.size();
        let mut seen = vec![false; n + 1];
        for block in &candidate.blocks {
            if block.is_empty() {
                return Err(err("empty block".into()));
            }
            for &e in block {
                if e == 0 || e as usize > n {
                    return Err(err(format!("element {e} outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[e as usize], true) {
                    return Err(err(format!("element {e} appears twice")));
                }
            }
        }
        let canonical = candidate.canonicalized();
        if canonical != candidate {
            return Err(err(format!("not in canonical form (expected {canonical})")));
        }
        Ok(candidate)
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<Vec<u32>>) -> Self {
        let p = SetPartition { blocks };
        debug_assert!(SetPartition::from_blocks(p.blocks.clone()).is_ok());
        p
    }

    fn canonicalized(&self) -> SetPartition {
        let mut blocks = self.blocks.clone();
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        blocks.sort_by_key(|b| b[0]);
        SetPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Size `n` of the ground set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn divider_count(&self) -> usize {
        self.blocks.len().saturating_sub(1)
    }

    /// 1-based index of the block holding `element`.
    pub fn block_of(&self, element: u32) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.contains(&element))
            .map(|i| i + 1)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() >= 10 { "," } else { "" };
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(SetPartition::default());
        }
        let err = |reason: String| Error::ParsePartition {
            text: text.to_string(),
            reason,
        };
        // Elements are single digits only when there are at most 9 of them;
        // beyond that every element is a decimal number and blocks use commas.
        let digit_count = text.chars().filter(char::is_ascii_digit).count();
        let comma_form = text.contains(',') || digit_count >= 10;
        let blocks = text
            .split('/')
            .map(|block| {
                let block = block.trim();
                if block.is_empty() {
                    return Err(err("empty block".into()));
                }
                if comma_form {
                    block
                        .split(',')
                        .map(|e| {
                            e.trim()
                                .parse::<u32>()
                                .map_err(|_| err(format!("bad element {e:?}")))
                        })
                        .collect()
                } else {
                    block
                        .chars()
                        .map(|c| {
                            c.to_digit(10)
                                .ok_or_else(|| err(format!("unexpected character {c:?}")))
                        })
                        .collect()
                }
            })
            .collect::<Result<Vec<Vec<u32>>>>()?;
        SetPartition::from_blocks(blocks)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `{1..n}`, ordered by rendered text.
pub fn enumerate_partitions(n: usize) -> Result<Vec<SetPartition>> {
    if n > DEFAULT_PARTITION_CAP {
        return Err(Error::CapExceeded {
            what: "set partition enumeration",
            n,
            cap: DEFAULT_PARTITION_CAP,
            estimate: bell_number(n).to_string(),
        });
    }
    // Insert n, n-1, ... into existing blocks or a new one; every partition
    // arises once, and canonical order is preserved because elements are
    // added in increasing order.
    let mut current = vec![Vec::<Vec<u32>>::new()];
    for e in 1..=n as u32 {
        let mut next = Vec::with_capacity(current.len() * 2);
        for blocks in &current {
            for i in 0..blocks.len() {
                let mut b = blocks.clone();
                b[i].push(e);
                next.push(b);
            }
            let mut b = blocks.clone();
            b.push(vec![e]);
            next.push(b);
        }
        current = next;
    }
    let mut out: Vec<(String, SetPartition)> = current
        .into_iter()
        .map(SetPartition::from_blocks_unchecked)
        .map(|p| (p.to_string(), p))
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, p)| p).collect())
}

/// Bell number via the Bell triangle: each row starts with the previous
/// row's last entry and each further entry is its left neighbour plus the
/// entry above-left.
pub fn bell_number(n: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().unwrap().clone());
        for above_left in &row {
            let v = next.last().unwrap() + above_left;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}
