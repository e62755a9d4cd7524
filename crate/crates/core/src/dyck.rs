//! Dyck paths: parsing, enumeration, statistics and the structural edits used
//! by the bijections.
//!
//! Vertices are numbered `0..=2n`; vertex `v` sits after the first `v` steps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::catalan;

/// Default largest semilength accepted by [`enumerate_paths`].
pub const DEFAULT_PATH_CAP: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
}

impl Step {
    fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// Parses a bare `U`/`D` word (case-insensitive) without the Dyck condition.
pub fn parse_steps(text: &str) -> Result<Vec<Step>> {
    text.trim()
        .chars()
        .enumerate()
        .map(|(i, c)| match c.to_ascii_uppercase() {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            _ => Err(Error::ParsePath {
                position: i + 1,
                reason: format!("unexpected character {c:?}"),
            }),
        })
        .collect()
}

/// A balanced word over `{U, D}` whose prefixes never go below ground.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath(Vec::new())
    }

    /// Validates the Dyck condition, reporting the 1-based position of the
    /// first offending step.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(Error::ParsePath {
                    position: i + 1,
                    reason: "path goes below ground level".into(),
                });
            }
        }
        if height != 0 {
            return Err(Error::ParsePath {
                position: steps.len(),
                reason: format!("path ends at height {height}"),
            });
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of up steps.
    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// `(UD)^n`
    pub fn sawtooth(n: usize) -> Self {
        DyckPath([Step::U, Step::D].repeat(n))
    }

    /// `U^n D^n`
    pub fn pyramid(n: usize) -> Self {
        let mut steps = vec![Step::U; n];
        steps.extend(std::iter::repeat(Step::D).take(n));
        DyckPath(steps)
    }

    pub fn concat(parts: &[DyckPath]) -> Self {
        DyckPath(parts.iter().flat_map(|p| p.0.iter().copied()).collect())
    }

    /// `U self D`
    pub fn lifted(&self) -> Self {
        let mut steps = Vec::with_capacity(self.0.len() + 2);
        steps.push(Step::U);
        steps.extend_from_slice(&self.0);
        steps.push(Step::D);
        DyckPath(steps)
    }

    /// Vertices sitting between the `U` and the `D` of a `UD` factor.
    pub fn peak_vertices(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::U && w[1] == Step::D)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Inserts `UD` at vertex `v`.
    pub fn insert_peak_at(&self, v: usize) -> DyckPath {
        let mut steps = self.0.clone();
        steps.splice(v..v, [Step::U, Step::D]);
        DyckPath(steps)
    }

    /// Removes the `UD` occupying steps `v + 1` and `v + 2` (the inverse of
    /// [`DyckPath::insert_peak_at`]).
    pub fn remove_peak_at(&self, v: usize) -> Option<DyckPath> {
        match self.0.get(v..v + 2) {
            Some([Step::U, Step::D]) => {
                let mut steps = self.0.clone();
                steps.drain(v..v + 2);
                Some(DyckPath(steps))
            }
            _ => None,
        }
    }

    /// The first peak after the last `DUU`, or the first peak when there is
    /// no `DUU`. Returned as a vertex.
    pub fn key_peak(&self) -> Option<usize> {
        let start = self
            .0
            .windows(3)
            .rposition(|w| w == [Step::D, Step::U, Step::U])
            .unwrap_or(0);
        self.peak_vertices().into_iter().find(|&v| v > start)
    }

    /// Vertex right after the key peak.
    pub fn repetition_vertex(&self) -> Option<usize> {
        self.key_peak().map(|v| v + 1)
    }

    /// The key peak and every later peak, as vertices.
    pub fn nonrep_vertices(&self) -> Vec<usize> {
        match self.key_peak() {
            Some(key) => self
                .peak_vertices()
                .into_iter()
                .filter(|&v| v >= key)
                .collect(),
            None => Vec::new(),
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        DyckPath::from_steps(parse_steps(text)?)
    }
}

impl Serialize for DyckPath {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for DyckPath {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Calls `visit` on every Dyck path of semilength `n`, in lexicographic
/// order with `U < D`.
pub fn visit_paths<F: FnMut(&DyckPath)>(n: usize, cap: usize, mut visit: F) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "Dyck path enumeration",
            n,
            cap,
            estimate: catalan(n as u64).to_string(),
        });
    }
    fn walk<F: FnMut(&DyckPath)>(path: &mut DyckPath, ups: usize, downs: usize, n: usize, visit: &mut F) {
        if downs == n {
            visit(path);
            return;
        }
        if ups < n {
            path.0.push(Step::U);
            walk(path, ups + 1, downs, n, visit);
            path.0.pop();
        }
        if downs < ups {
            path.0.push(Step::D);
            walk(path, ups, downs + 1, n, visit);
            path.0.pop();
        }
    }
    walk(&mut DyckPath(Vec::with_capacity(2 * n)), 0, 0, n, &mut visit);
    Ok(())
}

pub fn enumerate_paths(n: usize) -> Result<Vec<DyckPath>> {
    let mut out = Vec::new();
    visit_paths(n, DEFAULT_PATH_CAP, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Number of (possibly overlapping) occurrences of `factor` as consecutive
/// steps.
pub fn count_factor(p: &DyckPath, factor: &[Step]) -> usize {
    if factor.is_empty() {
        return 0;
    }
    p.0.windows(factor.len()).filter(|w| *w == factor).count()
}

/// Number of `DU` factors.
pub fn valleys(p: &DyckPath) -> usize {
    count_factor(p, &[Step::D, Step::U])
}

pub fn peaks(p: &DyckPath) -> usize {
    count_factor(p, &[Step::U, Step::D])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeakRun {
    pub length: usize,
    /// Followed by `D` or at the end of the path.
    pub good: bool,
}

/// Maximal `(UD)^i` subpaths, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PeakRunProfile {
    pub runs: Vec<PeakRun>,
}

impl PeakRunProfile {
    pub fn good_peaks(&self) -> usize {
        self.runs.iter().filter(|r| r.good).map(|r| r.length).sum()
    }

    pub fn good_single_runs(&self) -> usize {
        self.runs.iter().filter(|r| r.good && r.length == 1).count()
    }

    pub fn good_long_runs(&self) -> usize {
        self.runs.iter().filter(|r| r.good && r.length >= 2).count()
    }

    pub fn good_run_lengths(&self) -> Vec<usize> {
        self.runs.iter().filter(|r| r.good).map(|r| r.length).collect()
    }
}

pub fn peak_run_profile(p: &DyckPath) -> PeakRunProfile {
    let s = &p.0;
    let is_peak = |i: usize| i + 1 < s.len() && s[i] == Step::U && s[i + 1] == Step::D;
    let mut runs = Vec::new();
    let mut i = 0;
    while i < s.len() {
        if !is_peak(i) {
            i += 1;
            continue;
        }
        let mut length = 0;
        while is_peak(i) {
            length += 1;
            i += 2;
        }
        runs.push(PeakRun {
            length,
            good: s.get(i) != Some(&Step::U),
        });
    }
    PeakRunProfile { runs }
}

/// Pieces obtained by cutting a nonempty path after each `DD` that lands
/// on ground level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DDComponentSplit {
    pub components: Vec<DyckPath>,
}

pub fn dd_components(p: &DyckPath) -> Result<DDComponentSplit> {
    if p.is_empty() {
        return Err(Error::Empty {
            what: "dd_components",
        });
    }
    let s = &p.0;
    let mut components = Vec::new();
    let mut start = 0;
    let mut height = 0i64;
    for i in 0..s.len() {
        height += if s[i] == Step::U { 1 } else { -1 };
        if height == 0 && i > 0 && s[i] == Step::D && s[i - 1] == Step::D {
            components.push(DyckPath(s[start..=i].to_vec()));
            start = i + 1;
        }
    }
    if start < s.len() {
        components.push(DyckPath(s[start..].to_vec()));
    }
    Ok(DDComponentSplit { components })
}

/// With `p = Q P_j ... P_1` (last `j` DD-components), returns `Q U P_j ... P_1 D`.
pub fn elevate_last(p: &DyckPath, j: usize) -> Result<DyckPath> {
    let comps = dd_components(p)?.components;
    if j == 0 || j > comps.len() {
        return Err(Error::OutOfRange {
            what: "elevate_last",
            value: j,
            range: format!("1..={}", comps.len()),
        });
    }
    let split = comps.len() - j;
    let head = DyckPath::concat(&comps[..split]);
    let tail = DyckPath::concat(&comps[split..]).lifted();
    Ok(DyckPath::concat(&[head, tail]))
}

/// Inserts `UD` just before the last DD-component.
pub fn insert_before_last_component(p: &DyckPath) -> Result<DyckPath> {
    let comps = dd_components(p)?.components;
    let (last, init) = comps.split_last().expect("nonempty path has a component");
    let mut steps = DyckPath::concat(init).0;
    steps.extend([Step::U, Step::D]);
    steps.extend_from_slice(&last.0);
    Ok(DyckPath(steps))
}

pub fn append_peak(p: &DyckPath) -> DyckPath {
    let mut steps = p.0.clone();
    steps.extend([Step::U, Step::D]);
    DyckPath(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn steps(s: &str) -> Vec<Step> {
        parse_steps(s).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!(path("UD").semilength(), 1);
        assert_eq!(path("ud").to_string(), "UD");
        assert_eq!(path("UUDDUDUUDD").semilength(), 5);
        match "DU".parse::<DyckPath>() {
            Err(Error::ParsePath { position, .. }) => assert_eq!(position, 1),
            other => panic!("{other:?}"),
        }
        match "UUD".parse::<DyckPath>() {
            Err(Error::ParsePath { position, .. }) => assert_eq!(position, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            "UXD".parse::<DyckPath>(),
            Err(Error::ParsePath { position: 2, .. })
        ));
        assert_eq!(path(""), DyckPath::empty());
    }

    #[test]
    fn enumeration() {
        let names = |n| -> Vec<String> {
            enumerate_paths(n).unwrap().iter().map(|p| p.to_string()).collect()
        };
        assert_eq!(names(0), [""]);
        assert_eq!(names(2), ["UUDD", "UDUD"]);
        assert_eq!(names(3).len(), 5);
        assert!(enumerate_paths(15).is_err());
    }

    #[test]
    fn valley_counts() {
        assert_eq!(valleys(&path("UDUUDUUUUDDDUDDDUD")), 4);
        assert_eq!(valleys(&path("UUDD")), 0);
        assert_eq!(valleys(&path("UDUDUD")), 2);
    }

    #[test]
    fn peak_runs() {
        let prof = peak_run_profile(&path("UUDDUDUDUUDD"));
        let goods: Vec<bool> = prof.runs.iter().map(|r| r.good).collect();
        assert_eq!(goods, [true, false, true]);
        assert_eq!(prof.good_run_lengths(), [1, 1]);

        let prof = peak_run_profile(&path("UDUDUD"));
        assert_eq!(prof.runs, [PeakRun { length: 3, good: true }]);
        assert_eq!(prof.good_long_runs(), 1);

        let prof = peak_run_profile(&path("UUUDDD"));
        assert_eq!(prof.runs, [PeakRun { length: 1, good: true }]);
        assert_eq!(prof.good_single_runs(), 1);
        assert_eq!(peak_run_profile(&DyckPath::empty()).runs, []);
    }

    #[test]
    fn components() {
        let comps = |s: &str| -> Vec<String> {
            dd_components(&path(s))
                .unwrap()
                .components
                .iter()
                .map(|p| p.to_string())
                .collect()
        };
        assert_eq!(
            comps("UDUDUUDUDDUDUDUDUUUDDDUD"),
            ["UDUDUUDUDD", "UDUDUDUUUDDD", "UD"]
        );
        assert_eq!(comps("UUDDUDUUDD"), ["UUDD", "UDUUDD"]);
        assert_eq!(comps("UDUD"), ["UDUD"]);
        assert!(dd_components(&DyckPath::empty()).is_err());
    }

    #[test]
    fn edits() {
        let p = path("UUDDUDUUDD");
        assert_eq!(elevate_last(&p, 1).unwrap().to_string(), "UUDDUUDUUDDD");
        assert_eq!(elevate_last(&p, 2).unwrap().to_string(), "UUUDDUDUUDDD");
        assert!(elevate_last(&p, 3).is_err());
        assert!(elevate_last(&p, 0).is_err());
        assert_eq!(elevate_last(&path("UD"), 1).unwrap().to_string(), "UUDD");
        assert_eq!(
            insert_before_last_component(&p).unwrap().to_string(),
            "UUDDUDUDUUDD"
        );
        assert_eq!(append_peak(&p).to_string(), "UUDDUDUUDDUD");
        assert_eq!(append_peak(&DyckPath::empty()).to_string(), "UD");
        assert!(insert_before_last_component(&DyckPath::empty()).is_err());
    }

    #[test]
    fn factors() {
        assert_eq!(count_factor(&path("UUDUDD"), &steps("UUDU")), 1);
        assert_eq!(count_factor(&path("UDUD"), &steps("DDU")), 0);
        assert_eq!(count_factor(&path("UUDDUDUUDD"), &steps("DDU")), 1);
        assert_eq!(count_factor(&path("UUUDDD"), &steps("DD")), 2);
        let with_uudu = enumerate_paths(3)
            .unwrap()
            .into_iter()
            .filter(|p| count_factor(p, &steps("UUDU")) > 0)
            .collect::<Vec<_>>();
        assert_eq!(with_uudu, [path("UUDUDD")]);
    }

    #[test]
    fn key_peak_vertices() {
        let p = path("UDUUDUUUUDDDUDDDUD");
        assert_eq!(p.key_peak(), Some(9));
        assert_eq!(p.repetition_vertex(), Some(10));
        assert_eq!(p.nonrep_vertices(), [9, 13, 17]);

        let pyramid = DyckPath::pyramid(3);
        assert_eq!(pyramid.key_peak(), Some(3));
        assert_eq!(pyramid.repetition_vertex(), Some(4));
        assert_eq!(pyramid.nonrep_vertices(), [3]);

        let saw = DyckPath::sawtooth(3);
        assert_eq!(saw.repetition_vertex(), Some(2));
        assert_eq!(saw.nonrep_vertices(), [1, 3, 5]);
        assert_eq!(DyckPath::empty().key_peak(), None);
    }
}
