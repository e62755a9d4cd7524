use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dyck::{
    append_peak, elevate_last, insert_before_last_component, DyckPath, Step,
};
use crate::error::{Error, Result};
use crate::seqcore::{ascent_count, key_index, Family, IntSequence};

use super::require_avoiding;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TauMode {
    #[default]
    Recursive,
    Algorithmic,
}

impl fmt::Display for TauMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TauMode::Recursive => "recursive",
            TauMode::Algorithmic => "algorithmic",
        })
    }
}

impl FromStr for TauMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "recursive" => Ok(TauMode::Recursive),
            "algorithmic" | "incremental" => Ok(TauMode::Algorithmic),
            other => Err(format!("unknown tau mode {other:?}")),
        }
    }
}

/// Allowed next entries of a 021-avoiding ascent sequence other than 0 and
/// a repeat of a positive last entry. Contiguous, possibly empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MainValueRange {
    pub values: Vec<u32>,
}

impl MainValueRange {
    fn compute(a: &[u32]) -> MainValueRange {
        let max = a.iter().copied().max().unwrap_or(0);
        let last = *a.last().expect("nonempty");
        let upper = 1 + ascent_count(a) as u32;
        let lower = match (max, last) {
            (0, _) => return MainValueRange { values: vec![1] },
            (m, 0) => m,
            (m, _) => m + 1,
        };
        MainValueRange {
            values: (lower..=upper).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based rank of `v` among the main values.
    pub fn rank(&self, v: u32) -> Option<usize> {
        self.values.iter().position(|&x| x == v).map(|i| i + 1)
    }
}

/// Main values for the entry following `seq`.
pub fn main_values(seq: &IntSequence) -> Result<MainValueRange> {
    require_avoiding(seq.entries(), Family::Ascent, "main_values")?;
    Ok(MainValueRange::compute(seq.entries()))
}

/// Maps a 021-avoiding ascent sequence to a Dyck path of the same size. The
/// empty sequence maps to the empty path.
pub fn tau(seq: &IntSequence, mode: TauMode) -> Result<DyckPath> {
    let a = seq.entries();
    if a.is_empty() {
        return Ok(DyckPath::empty());
    }
    require_avoiding(a, Family::Ascent, "tau")?;
    let path = match mode {
        TauMode::Recursive => recursive(a),
        TauMode::Algorithmic => algorithmic(a)?,
    };
    if cfg!(debug_assertions) {
        let other = match mode {
            TauMode::Recursive => algorithmic(a)?,
            TauMode::Algorithmic => recursive(a),
        };
        assert_eq!(path, other, "tau modes disagree on {seq}");
    }
    Ok(path)
}

fn recursive(a: &[u32]) -> DyckPath {
    if a.is_empty() {
        return DyckPath::empty();
    }
    if a.iter().all(|&x| x == 0) {
        return DyckPath::concat(&[DyckPath::sawtooth(1), recursive(&a[1..])]);
    }
    let k = key_index(a).expect("validated");
    let key = a[k - 1];
    if a.get(k) == Some(&key) {
        let mut hatted = a.to_vec();
        hatted.remove(k - 1);
        return DyckPath::concat(&[DyckPath::sawtooth(1), recursive(&hatted)]);
    }
    let reduced: Vec<u32> = a[k..]
        .iter()
        .map(|&x| if x == 0 { 0 } else { x - (key - 1) })
        .collect();
    DyckPath::concat(&[recursive(&a[..k - 1]).lifted(), recursive(&reduced)])
}

fn algorithmic(a: &[u32]) -> Result<DyckPath> {
    let mut path = DyckPath::empty();
    for m in 0..a.len() {
        let next = a[m];
        path = if next == 0 {
            append_peak(&path)
        } else if m > 0 && next == a[m - 1] {
            insert_before_last_component(&path)?
        } else {
            let rank = MainValueRange::compute(&a[..m]).rank(next).ok_or_else(|| {
                Error::Internal(format!("tau: {next} is not a main value after {:?}", &a[..m]))
            })?;
            elevate_last(&path, rank)?
        };
    }
    Ok(path)
}

/// Inverts the recursive description: a leading `UD` undoes either the
/// all-zero rule or the deletion of a repeated key entry; otherwise the path
/// is `U P D Q`, split at its first return to ground.
pub fn tau_inverse(p: &DyckPath) -> Result<IntSequence> {
    Ok(IntSequence::new(inverse(p.steps())))
}

fn inverse(steps: &[Step]) -> Vec<u32> {
    if steps.is_empty() {
        return Vec::new();
    }
    if steps[1] == Step::D {
        let mut rest = inverse(&steps[2..]);
        if rest.iter().all(|&x| x == 0) {
            rest.push(0);
            return rest;
        }
        let k = key_index(&rest).expect("image of tau");
        rest.insert(k, rest[k - 1]);
        return rest;
    }
    let mut height = 0i32;
    let first_return = steps
        .iter()
        .position(|s| {
            height += if *s == Step::U { 1 } else { -1 };
            height == 0
        })
        .expect("balanced path");
    let mut a = inverse(&steps[1..first_return]);
    let key = 1 + ascent_count(&a) as u32;
    a.push(key);
    a.extend(
        inverse(&steps[first_return + 1..])
            .into_iter()
            .map(|x| if x == 0 { 0 } else { x + key - 1 }),
    );
    a
}
