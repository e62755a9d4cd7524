use serde::{Deserialize, Serialize};

use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::seqcore::{repetition_count, Family, IntSequence};

use super::require_avoiding;

/// Valid next entries of a 021-avoiding repetition sequence, split into the
/// repetition value `a_n` and the remaining ("nonrep") values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NextValueSplit {
    pub repetition_value: u32,
    /// Ascending, so 0 (when present) comes first.
    pub nonrep_values: Vec<u32>,
}

impl NextValueSplit {
    fn compute(a: &[u32]) -> NextValueSplit {
        let last = *a.last().expect("nonempty");
        let max = a.iter().copied().max().unwrap_or(0);
        let reps = repetition_count(a) as u32;
        let nonrep_values = std::iter::once(0)
            .chain(max.max(1)..=1 + reps)
            .filter(|&v| v != last)
            .collect();
        NextValueSplit {
            repetition_value: last,
            nonrep_values,
        }
    }
}

/// `({0} ∪ [max(m, 1), 1 + R]) \ {a_n}` with `m` the largest entry and `R`
/// the number of repetitions.
pub fn next_value_split(seq: &IntSequence) -> Result<NextValueSplit> {
    require_avoiding(seq.entries(), Family::Repetition, "next_value_split")?;
    Ok(NextValueSplit::compute(seq.entries()))
}

/// Starts from `UD` and, for each further entry, inserts `UD` at the
/// repetition vertex (entry repeats `a_n`) or at the `i`-th nonrep vertex
/// (entry is the `i`-th nonrep value).
pub fn psi(seq: &IntSequence) -> Result<DyckPath> {
    let a = seq.entries();
    require_avoiding(a, Family::Repetition, "psi")?;
    let mut path = DyckPath::sawtooth(1);
    for m in 1..a.len() {
        let split = NextValueSplit::compute(&a[..m]);
        let next = a[m];
        let vertex = if next == split.repetition_value {
            path.repetition_vertex()
        } else {
            let vertices = path.nonrep_vertices();
            if vertices.len() != split.nonrep_values.len() {
                return Err(Error::Internal(format!(
                    "psi: {} nonrep values but {} nonrep vertices in {path}",
                    split.nonrep_values.len(),
                    vertices.len()
                )));
            }
            split
                .nonrep_values
                .iter()
                .position(|&v| v == next)
                .map(|i| vertices[i])
        };
        let vertex =
            vertex.ok_or_else(|| Error::Internal(format!("psi: no insertion vertex in {path}")))?;
        path = path.insert_peak_at(vertex);
    }
    Ok(path)
}

enum Insertion {
    Repetition,
    Nonrep(usize),
}

/// Peels insertions off the path one at a time. The peak inserted last is
/// recognised from the key peak: when the key peak's descent has length one
/// and is followed by `UD`, that `UD` went in at the repetition vertex;
/// otherwise the key peak itself was inserted at a nonrep vertex.
pub fn psi_inverse(p: &DyckPath) -> Result<IntSequence> {
    if p.is_empty() {
        return Err(Error::Empty {
            what: "psi_inverse",
        });
    }
    let mut history = Vec::with_capacity(p.semilength());
    let mut current = p.clone();
    while current.semilength() > 1 {
        let key = current
            .key_peak()
            .ok_or_else(|| Error::Internal(format!("psi_inverse: no key peak in {current}")))?;
        // step indices are 0-based: the key peak's D is steps()[key]
        let short_descent = current.steps().get(key + 1) == Some(&Step::U);
        let (smaller, insertion) = if short_descent {
            let smaller = current.remove_peak_at(key + 1).ok_or_else(|| {
                Error::Internal(format!("psi_inverse: expected UD after key peak in {current}"))
            })?;
            (smaller, Insertion::Repetition)
        } else {
            let smaller = current.remove_peak_at(key - 1).ok_or_else(|| {
                Error::Internal(format!("psi_inverse: key peak of {current} is not a UD"))
            })?;
            let index = smaller
                .nonrep_vertices()
                .iter()
                .position(|&v| v == key - 1)
                .ok_or_else(|| {
                    Error::Internal(format!("psi_inverse: {current} is not an image of psi"))
                })?;
            (smaller, Insertion::Nonrep(index))
        };
        history.push(insertion);
        current = smaller;
    }
    let mut a = vec![0u32];
    for insertion in history.into_iter().rev() {
        let split = NextValueSplit::compute(&a);
        let next = match insertion {
            Insertion::Repetition => split.repetition_value,
            Insertion::Nonrep(i) => *split.nonrep_values.get(i).ok_or_else(|| {
                Error::Internal(format!("psi_inverse: nonrep index {i} out of range"))
            })?,
        };
        a.push(next);
    }
    Ok(IntSequence::new(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi_str(s: &str) -> String {
        psi(&s.parse().unwrap()).unwrap().to_string()
    }

    #[test]
    fn split_examples() {
        let split = |s: &str| next_value_split(&s.parse().unwrap()).unwrap();
        assert_eq!(
            split("000223303"),
            NextValueSplit {
                repetition_value: 3,
                nonrep_values: vec![0, 4, 5]
            }
        );
        assert_eq!(split("0").nonrep_values, [1]);
        assert_eq!(split("0").repetition_value, 0);
        assert_eq!(split("000").nonrep_values, [1, 2, 3]);
        assert!(next_value_split(&"0021".parse().unwrap()).is_err());
    }

    #[test]
    fn worked_examples() {
        assert_eq!(psi_str("0"), "UD");
        assert_eq!(psi_str("000223303"), "UDUUDUUUUDDDUDDDUD");
        assert_eq!(psi_str("0000"), "UDUDUDUD");
        assert_eq!(psi_str("0101"), "UUUUDDDD");
        assert_eq!(psi_str("010101"), DyckPath::pyramid(6).to_string());
    }

    #[test]
    fn insertion_vertices() {
        // a_{10} = 5 goes to the peak at vertex 17, a_{10} = 3 to vertex 10
        let base: IntSequence = "000223303".parse().unwrap();
        let p = psi(&base).unwrap();
        assert_eq!(psi(&base.pushed(5)).unwrap(), p.insert_peak_at(17));
        assert_eq!(psi(&base.pushed(3)).unwrap(), p.insert_peak_at(10));
        assert_eq!(psi(&base.pushed(0)).unwrap(), p.insert_peak_at(9));
    }

    #[test]
    fn inverse_examples() {
        for s in ["0", "00", "01", "000223303", "0000", "0101", "00111020225"] {
            let seq: IntSequence = s.parse().unwrap();
            assert_eq!(psi_inverse(&psi(&seq).unwrap()).unwrap(), seq, "{s}");
        }
        assert!(psi_inverse(&DyckPath::empty()).is_err());
        assert!(psi(&"0021".parse().unwrap()).is_err());
    }
}
