//! Ascent, repetition and descent sequences.
//!
//! A sequence `a_1 a_2 ... a_n` belongs to a family when `a_1 = 0` and every
//! later entry is at most one more than the number of the family's defining
//! adjacencies (`<`, `=` or `>`) in the strict prefix before it. Positions
//! exposed by this module are 1-based.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default largest length accepted by exhaustive enumeration.
pub const DEFAULT_ENUM_CAP: usize = 16;

/// A finite list of nonnegative integers.
///
/// The text form is comma-separated decimals (`0,1,0,12`). When every entry
/// is a single digit the bare digit string (`01012`) is accepted as input and
/// produced by [`IntSequence::to_compact`].
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSequence(Vec<u32>);

impl IntSequence {
    pub fn new(entries: Vec<u32>) -> Self {
        IntSequence(entries)
    }

    pub fn empty() -> Self {
        IntSequence(Vec::new())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> u32 {
        self.0[i - 1]
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn pushed(&self, v: u32) -> IntSequence {
        let mut entries = self.0.clone();
        entries.push(v);
        IntSequence(entries)
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Bare digit string when every entry is below 10, canonical form otherwise.
    pub fn to_compact(&self) -> String {
        if self.0.iter().all(|&a| a < 10) {
            self.0.iter().map(|a| char::from(b'0' + *a as u8)).collect()
        } else {
            self.to_string()
        }
    }
}

impl From<Vec<u32>> for IntSequence {
    fn from(entries: Vec<u32>) -> Self {
        IntSequence(entries)
    }
}

impl From<&[u32]> for IntSequence {
    fn from(entries: &[u32]) -> Self {
        IntSequence(entries.to_vec())
    }
}

impl fmt::Display for IntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for IntSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let err = |reason: String| Error::ParseSequence {
            text: text.to_string(),
            reason,
        };
        if text.is_empty() || text == "ε" {
            return Ok(IntSequence::empty());
        }
        if text.contains(',') {
            text.split(',')
                .map(|part| {
                    let part = part.trim();
                    part.parse::<u32>()
                        .map_err(|e| err(format!("entry {part:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(IntSequence)
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| err(format!("unexpected character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(IntSequence)
        }
    }
}

/// Which adjacency a family counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Counts `a_j < a_{j+1}`.
    Ascent,
    /// Counts `a_j = a_{j+1}`.
    Repetition,
    /// Counts `a_j > a_{j+1}`.
    Descent,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Ascent, Family::Repetition, Family::Descent];

    /// Whether the adjacent pair `(left, right)` is one this family counts.
    #[inline]
    pub fn counts(self, left: u32, right: u32) -> bool {
        match self {
            Family::Ascent => left < right,
            Family::Repetition => left == right,
            Family::Descent => left > right,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Ascent => "ascent",
            Family::Repetition => "repetition",
            Family::Descent => "descent",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "ascent" | "asc" | "a" => Ok(Family::Ascent),
            "repetition" | "rep" | "r" => Ok(Family::Repetition),
            "descent" | "desc" | "d" => Ok(Family::Descent),
            other => Err(format!("unknown family {other:?}")),
        }
    }
}

/// Extra restrictions applied on top of family membership.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    pub avoid_021: bool,
    /// No two consecutive zeros.
    pub forbid_double_zero: bool,
    /// No maximal run of zeros of length exactly one.
    pub forbid_isolated_zero: bool,
}

impl Constraint {
    pub fn none() -> Self {
        Constraint::default()
    }

    pub fn avoiding_021() -> Self {
        Constraint {
            avoid_021: true,
            ..Constraint::default()
        }
    }

    pub fn no_double_zero(mut self) -> Self {
        self.forbid_double_zero = true;
        self
    }

    pub fn no_isolated_zero(mut self) -> Self {
        self.forbid_isolated_zero = true;
        self
    }

    /// Whether a complete sequence satisfies every flag.
    pub fn accepts(&self, seq: &[u32]) -> bool {
        if self.avoid_021 && !avoids_021(seq) {
            return false;
        }
        if self.forbid_double_zero && seq.windows(2).any(|w| w[0] == 0 && w[1] == 0) {
            return false;
        }
        if self.forbid_isolated_zero && zero_run_lengths(seq).contains(&1) {
            return false;
        }
        true
    }
}

/// Number of adjacent pairs of `seq` counted by `family`.
pub fn adjacency_count(seq: &[u32], family: Family) -> usize {
    seq.windows(2).filter(|w| family.counts(w[0], w[1])).count()
}

pub fn ascent_count(seq: &[u32]) -> usize {
    adjacency_count(seq, Family::Ascent)
}

pub fn repetition_count(seq: &[u32]) -> usize {
    adjacency_count(seq, Family::Repetition)
}

pub fn descent_count(seq: &[u32]) -> usize {
    adjacency_count(seq, Family::Descent)
}

pub fn is_valid(seq: &[u32], family: Family) -> bool {
    let Some((&first, _)) = seq.split_first() else {
        return true;
    };
    if first != 0 {
        return false;
    }
    let mut count = 0usize;
    for w in seq.windows(2) {
        if w[1] as usize > 1 + count {
            return false;
        }
        if family.counts(w[0], w[1]) {
            count += 1;
        }
    }
    true
}

/// Values `v` for which `seq` followed by `v` is still in `family`, ascending.
pub fn valid_extensions(seq: &[u32], family: Family) -> Result<Vec<u32>> {
    if !is_valid(seq, family) {
        return Err(Error::InvalidSequence {
            seq: IntSequence::from(seq).to_string(),
            family,
        });
    }
    if seq.is_empty() {
        return Ok(vec![0]);
    }
    let bound = 1 + adjacency_count(seq, family) as u32;
    Ok((0..=bound).collect())
}

/// Direct search for indices `i < j < k` with `a_i < a_k < a_j`.
pub fn avoids_021(seq: &[u32]) -> bool {
    let mut prefix_min = u32::MAX;
    for (j, &middle) in seq.iter().enumerate() {
        if prefix_min < middle
            && seq[j + 1..]
                .iter()
                .any(|&last| prefix_min < last && last < middle)
        {
            return false;
        }
        prefix_min = prefix_min.min(middle);
    }
    true
}

/// Whether the nonzero entries of `seq` are weakly increasing.
///
/// For sequences starting with 0 this is equivalent to [`avoids_021`].
pub fn nonzero_weakly_increasing(seq: &[u32]) -> bool {
    let mut last_nonzero = 0;
    for &a in seq.iter().filter(|&&a| a != 0) {
        if a < last_nonzero {
            return false;
        }
        last_nonzero = a;
    }
    true
}

/// Whether appending `v` to the 021-avoiding `prefix` creates an occurrence.
fn extension_creates_021(prefix: &[u32], v: u32) -> bool {
    let mut prefix_min = u32::MAX;
    for &middle in prefix {
        if prefix_min < v && v < middle {
            return true;
        }
        prefix_min = prefix_min.min(middle);
    }
    false
}

/// Zero statistics of a sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZeroRunProfile {
    pub total_zeros: usize,
    /// Maximal zero runs of length exactly 1.
    pub isolated_zeros: usize,
    /// Maximal zero runs of length at least 2.
    pub long_zero_runs: usize,
    /// Lengths of the maximal zero runs, left to right.
    pub run_lengths: Vec<usize>,
}

impl ZeroRunProfile {
    /// Exponents `(y, z, w)` this sequence contributes to the zeros
    /// generating function.
    pub fn exponents(&self) -> (usize, usize, usize) {
        (self.total_zeros, self.isolated_zeros, self.long_zero_runs)
    }
}

fn zero_run_lengths(seq: &[u32]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0;
    for &a in seq {
        if a == 0 {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

pub fn zero_statistics(seq: &[u32]) -> ZeroRunProfile {
    let run_lengths = zero_run_lengths(seq);
    ZeroRunProfile {
        total_zeros: run_lengths.iter().sum(),
        isolated_zeros: run_lengths.iter().filter(|&&r| r == 1).count(),
        long_zero_runs: run_lengths.iter().filter(|&&r| r >= 2).count(),
        run_lengths,
    }
}

/// Descent tops and bottoms, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DescentProfile {
    pub descent_count: usize,
    pub descent_tops: Vec<u32>,
    pub descent_bottoms: Vec<u32>,
}

pub fn descent_statistics(seq: &[u32]) -> DescentProfile {
    let (descent_tops, descent_bottoms): (Vec<u32>, Vec<u32>) = seq
        .windows(2)
        .filter(|w| w[0] > w[1])
        .map(|w| (w[0], w[1]))
        .unzip();
    DescentProfile {
        descent_count: descent_tops.len(),
        descent_tops,
        descent_bottoms,
    }
}

/// 1-based indices `i` where `a_i` equals one plus the number of ascents
/// in `a_1 ... a_{i-1}`.
pub fn tight_indices(seq: &[u32]) -> Vec<usize> {
    let mut ascents = 0u32;
    let mut tight = Vec::new();
    for (pos, &a) in seq.iter().enumerate() {
        if pos > 0 {
            if a == 1 + ascents {
                tight.push(pos + 1);
            }
            if seq[pos - 1] < a {
                ascents += 1;
            }
        }
    }
    tight
}

/// Largest tight index, or `n` for the all-zero sequence.
pub fn key_index(seq: &[u32]) -> Result<usize> {
    if seq.is_empty() {
        return Err(Error::Empty { what: "key_index" });
    }
    if !is_valid(seq, Family::Ascent) {
        return Err(Error::InvalidSequence {
            seq: IntSequence::from(seq).to_string(),
            family: Family::Ascent,
        });
    }
    Ok(tight_indices(seq).last().copied().unwrap_or(seq.len()))
}

/// Number of length-`n` sequences in `family`, by dynamic programming over
/// (adjacency count, last entry). Used for cap diagnostics.
pub fn family_size(family: Family, n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    // states[c][v]: sequences with c counted adjacencies ending in v
    let mut states = vec![vec![BigUint::zero(); n + 1]; n];
    states[0][0] = BigUint::one();
    for _ in 1..n {
        let mut next = vec![vec![BigUint::zero(); n + 1]; n];
        for (c, row) in states.iter().enumerate() {
            for (v, ways) in row.iter().enumerate() {
                if ways.is_zero() {
                    continue;
                }
                for u in 0..=(1 + c).min(n) {
                    let c2 = c + family.counts(v as u32, u as u32) as usize;
                    next[c2][u] += ways;
                }
            }
        }
        states = next;
    }
    states.iter().flatten().sum()
}

/// Exhaustive depth-first enumeration with a length cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumerator {
    pub cap: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            cap: DEFAULT_ENUM_CAP,
        }
    }
}

struct Walk<'a, F> {
    family: Family,
    n: usize,
    constraint: Constraint,
    visit: &'a mut F,
}

impl<F: FnMut(&[u32])> Walk<'_, F> {
    fn descend(&mut self, prefix: &mut Vec<u32>, count: usize) {
        if prefix.len() == self.n {
            if !self.constraint.forbid_isolated_zero || !ends_in_isolated_zero(prefix) {
                (self.visit)(prefix);
            }
            return;
        }
        let bound = if prefix.is_empty() { 0 } else { 1 + count as u32 };
        for v in 0..=bound {
            if !extension_allowed(prefix, v, &self.constraint) {
                continue;
            }
            let counted = prefix
                .last()
                .is_some_and(|&last| self.family.counts(last, v));
            prefix.push(v);
            self.descend(prefix, count + counted as usize);
            prefix.pop();
        }
    }
}

fn ends_in_isolated_zero(seq: &[u32]) -> bool {
    match seq {
        [.., x, 0] => *x != 0,
        [0] => true,
        _ => false,
    }
}

/// Prunes only where no completion of `prefix + [v]` could satisfy the
/// constraint.
fn extension_allowed(prefix: &[u32], v: u32, constraint: &Constraint) -> bool {
    if constraint.avoid_021 && extension_creates_021(prefix, v) {
        return false;
    }
    if constraint.forbid_double_zero && v == 0 && prefix.last() == Some(&0) {
        return false;
    }
    // a nonzero entry closes the current zero run for good
    if constraint.forbid_isolated_zero && v != 0 && ends_in_isolated_zero(prefix) {
        return false;
    }
    true
}

impl Enumerator {
    pub fn with_cap(cap: usize) -> Self {
        Enumerator { cap }
    }

    fn check_cap(&self, family: Family, n: usize) -> Result<()> {
        if n > self.cap {
            return Err(Error::CapExceeded {
                what: "sequence enumeration",
                n,
                cap: self.cap,
                estimate: format_estimate(&family_size(family, n)),
            });
        }
        Ok(())
    }

    /// Calls `visit` on every length-`n` member of `family` satisfying
    /// `constraint`, in lexicographic order.
    pub fn visit<F: FnMut(&[u32])>(
        &self,
        family: Family,
        n: usize,
        constraint: Constraint,
        mut visit: F,
    ) -> Result<()> {
        self.check_cap(family, n)?;
        let mut walk = Walk {
            family,
            n,
            constraint,
            visit: &mut visit,
        };
        walk.descend(&mut Vec::with_capacity(n), 0);
        Ok(())
    }

    pub fn enumerate(
        &self,
        family: Family,
        n: usize,
        constraint: Constraint,
    ) -> Result<Vec<IntSequence>> {
        let mut out = Vec::new();
        self.visit(family, n, constraint, |s| out.push(IntSequence::from(s)))?;
        Ok(out)
    }

    pub fn count(&self, family: Family, n: usize, constraint: Constraint) -> Result<u64> {
        let mut total = 0u64;
        self.visit(family, n, constraint, |_| total += 1)?;
        Ok(total)
    }

    /// Same output as [`Enumerator::enumerate`], computed in parallel over
    /// fixed-length prefixes and merged back in order.
    pub fn enumerate_parallel(
        &self,
        family: Family,
        n: usize,
        constraint: Constraint,
    ) -> Result<Vec<IntSequence>> {
        self.check_cap(family, n)?;
        let split = n.min(4);
        // Prefixes are generated without the isolated-zero flag: that rule is
        // not prefix-closed.
        let prefix_constraint = Constraint {
            forbid_isolated_zero: false,
            ..constraint
        };
        let prefixes = self.enumerate(family, split, prefix_constraint)?;
        let chunks: Vec<Vec<IntSequence>> = prefixes
            .par_iter()
            .map(|prefix| {
                let mut out = Vec::new();
                let mut push = |s: &[u32]| out.push(IntSequence::from(s));
                let mut walk = Walk {
                    family,
                    n,
                    constraint,
                    visit: &mut push,
                };
                let mut buf = prefix.entries().to_vec();
                let count = adjacency_count(&buf, family);
                walk.descend(&mut buf, count);
                out.retain(|s| constraint.accepts(s.entries()));
                out
            })
            .collect();
        Ok(chunks.into_iter().flatten().collect())
    }
}

fn format_estimate(count: &BigUint) -> String {
    let digits = count.to_string();
    if digits.len() <= 6 {
        digits
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..3], digits.len() - 1)
    }
}

/// Enumerates with the default cap.
pub fn enumerate(family: Family, n: usize, constraint: Constraint) -> Result<Vec<IntSequence>> {
    Enumerator::default().enumerate(family, n, constraint)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Vec<u32> {
        s.parse::<IntSequence>().unwrap().into_entries()
    }

    fn listing(family: Family, n: usize, c: Constraint) -> Vec<String> {
        enumerate(family, n, c)
            .unwrap()
            .iter()
            .map(IntSequence::to_compact)
            .collect()
    }

    #[test]
    fn validity() {
        assert!(!is_valid(&seq("012"), Family::Repetition));
        for f in Family::ALL {
            assert!(is_valid(&seq("000"), f));
            assert!(is_valid(&[], f));
        }
        assert!(is_valid(&seq("01012"), Family::Ascent));
        assert!(!is_valid(&seq("1"), Family::Ascent));
    }

    #[test]
    fn extensions() {
        assert_eq!(valid_extensions(&seq("0"), Family::Repetition).unwrap(), vec![0, 1]);
        assert_eq!(valid_extensions(&[], Family::Ascent).unwrap(), vec![0]);
        assert_eq!(
            valid_extensions(&seq("00"), Family::Repetition).unwrap(),
            vec![0, 1, 2]
        );
        assert!(valid_extensions(&seq("012"), Family::Repetition).is_err());
    }

    #[test]
    fn small_listings() {
        assert_eq!(
            listing(Family::Repetition, 3, Constraint::none()),
            ["000", "001", "002", "010", "011"]
        );
        assert_eq!(
            listing(Family::Ascent, 3, Constraint::avoiding_021().no_double_zero()),
            ["010", "011", "012"]
        );
        assert_eq!(
            listing(Family::Ascent, 3, Constraint::avoiding_021().no_isolated_zero()),
            ["000", "001"]
        );
        assert_eq!(listing(Family::Ascent, 0, Constraint::none()), [""]);
    }

    #[test]
    fn cap_is_enforced() {
        let err = Enumerator::with_cap(5)
            .enumerate(Family::Ascent, 6, Constraint::none())
            .unwrap_err();
        assert!(matches!(err, Error::CapExceeded { n: 6, cap: 5, .. }));
        assert!(err.to_string().contains("217"));
        assert!(enumerate(Family::Ascent, 20, Constraint::none()).is_err());
    }

    #[test]
    fn pattern_021() {
        assert!(avoids_021(&seq("00111020225")));
        assert!(!avoids_021(&seq("0021")));
        assert!(avoids_021(&seq("0")));
        assert!(avoids_021(&[]));
        assert!(!nonzero_weakly_increasing(&seq("0021")));
        // only 0021 drops out of R_4
        let all = listing(Family::Repetition, 4, Constraint::none());
        let avoiding = listing(Family::Repetition, 4, Constraint::avoiding_021());
        let missing: Vec<_> = all.iter().filter(|s| !avoiding.contains(s)).collect();
        assert_eq!(missing, ["0021"]);
    }

    #[test]
    fn zero_profile() {
        let p = zero_statistics(&seq("00102200023030"));
        assert_eq!(p.exponents(), (8, 3, 2));
        assert_eq!(p.run_lengths, vec![2, 1, 3, 1, 1]);
        assert_eq!(zero_statistics(&[]), ZeroRunProfile::default());
        let p = zero_statistics(&seq("000"));
        assert_eq!(p.exponents(), (3, 0, 1));
        assert_eq!(p.run_lengths, vec![3]);
    }

    #[test]
    fn tightness() {
        assert_eq!(tight_indices(&seq("0")), Vec::<usize>::new());
        assert_eq!(key_index(&seq("0")).unwrap(), 1);
        assert_eq!(tight_indices(&seq("01")), vec![2]);
        assert_eq!(key_index(&seq("01")).unwrap(), 2);
        assert_eq!(tight_indices(&seq("01011")), vec![2]);
        assert_eq!(key_index(&seq("01011")).unwrap(), 2);
        assert_eq!(key_index(&seq("0000")).unwrap(), 4);
        assert!(matches!(key_index(&[]), Err(Error::Empty { .. })));
    }

    #[test]
    fn adjacency_statistics() {
        assert_eq!(repetition_count(&seq("000223303")), 4);
        let s = seq("01011");
        assert_eq!(ascent_count(&s), 2);
        let d = descent_statistics(&s);
        assert_eq!(d.descent_count, 1);
        assert_eq!(d.descent_tops, vec![1]);
        assert_eq!(d.descent_bottoms, vec![0]);
        assert_eq!(descent_statistics(&[]), DescentProfile::default());
        assert_eq!(ascent_count(&[]) + repetition_count(&[]), 0);
    }

    #[test]
    fn text_forms() {
        let s: IntSequence = "0,1,0,12".parse().unwrap();
        assert_eq!(s.entries(), &[0, 1, 0, 12]);
        assert_eq!(s.to_compact(), "0,1,0,12");
        assert_eq!(s.to_string().parse::<IntSequence>().unwrap(), s);
        let t: IntSequence = "0101".parse().unwrap();
        assert_eq!(t.to_string(), "0,1,0,1");
        assert_eq!(t.to_compact(), "0101");
        assert!("01x".parse::<IntSequence>().is_err());
        assert!("0,,1".parse::<IntSequence>().is_err());
    }

    #[test]
    fn parallel_matches_sequential() {
        for family in Family::ALL {
            for c in [
                Constraint::none(),
                Constraint::avoiding_021(),
                Constraint::avoiding_021().no_isolated_zero(),
                Constraint::none().no_double_zero().no_isolated_zero(),
            ] {
                for n in 0..=8 {
                    let e = Enumerator::default();
                    assert_eq!(
                        e.enumerate(family, n, c).unwrap(),
                        e.enumerate_parallel(family, n, c).unwrap(),
                        "{family} {n} {c:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn family_sizes() {
        let fishburn: Vec<u64> = (0..=6)
            .map(|n| family_size(Family::Ascent, n).try_into().unwrap())
            .collect();
        assert_eq!(fishburn, vec![1, 1, 2, 5, 15, 53, 217]);
    }
}
