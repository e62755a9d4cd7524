use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};

/// Counts indexed by `n` or by `(n, k)`, tagged with where they came from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub label: String,
    values: BTreeMap<(u32, Option<u32>), BigUint>,
}

impl CountTable {
    pub fn new(label: impl Into<String>) -> Self {
        CountTable {
            label: label.into(),
            values: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, n: u32, value: BigUint) {
        self.values.insert((n, None), value);
    }

    pub fn insert2(&mut self, n: u32, k: u32, value: BigUint) {
        self.values.insert((n, Some(k)), value);
    }

    pub fn get(&self, n: u32) -> Option<&BigUint> {
        self.values.get(&(n, None))
    }

    pub fn get2(&self, n: u32, k: u32) -> Option<&BigUint> {
        self.values.get(&(n, Some(k)))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(n, value)` pairs of the one-dimensional part, ascending in `n`.
    pub fn series(&self) -> Vec<(u32, BigUint)> {
        self.values
            .iter()
            .filter(|((_, k), _)| k.is_none())
            .map(|((n, _), v)| (*n, v.clone()))
            .collect()
    }

    /// `(k, value)` pairs of row `n` of the two-dimensional part.
    pub fn row(&self, n: u32) -> Vec<(u32, BigUint)> {
        self.values
            .range((n, Some(0))..=(n, Some(u32::MAX)))
            .map(|((_, k), v)| (k.unwrap(), v.clone()))
            .collect()
    }
}

impl Serialize for CountTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            n: u32,
            #[serde(skip_serializing_if = "Option::is_none")]
            k: Option<u32>,
            value: String,
        }
        let entries: Vec<Entry> = self
            .values
            .iter()
            .map(|((n, k), v)| Entry {
                n: *n,
                k: *k,
                value: v.to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("CountTable", 2)?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("values", &entries)?;
        st.end()
    }
}

/// `n choose k`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `binom(2n, n) - binom(2n, n - 1)`.
pub fn catalan(n: u64) -> BigUint {
    let n = n as i64;
    binomial(2 * n, n) - binomial(2 * n, n - 1)
}

/// `C_0 ..= C_n` from `C_{m+1} = sum_i C_i C_{m-i}`.
pub fn catalan_by_recurrence(n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::one()];
    for m in 0..n {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c
}

/// Dyck paths of semilength `n` with `k` occurrences of `DDU`:
/// `2^(n-2k-1) binom(n-1, 2k) C_k`, zero outside `n >= 1`, `0 <= 2k <= n-1`.
pub fn touchard(n: i64, k: i64) -> BigUint {
    if n < 1 || k < 0 || n - 2 * k - 1 < 0 {
        return BigUint::zero();
    }
    (BigUint::one() << (n - 2 * k - 1) as u64) * binomial(n - 1, 2 * k) * catalan(k as u64)
}

/// Catalan-type convolution `t_n = sum_{i<n} t_i t_{n-1-i}` for `n >= 3`.
fn convolution_sequence(label: &str, initial: [u64; 3], n_max: usize) -> CountTable {
    let mut t: Vec<BigUint> = initial.iter().map(|&v| BigUint::from(v)).collect();
    for n in 3..=n_max {
        let next = (0..n).map(|i| &t[i] * &t[n - 1 - i]).sum();
        t.push(next);
    }
    let mut table = CountTable::new(label);
    for (n, v) in t.into_iter().take(n_max + 1).enumerate() {
        table.insert(n as u32, v);
    }
    table
}

/// 021-avoiding ascent sequences without two consecutive zeros.
pub fn u_sequence(n_max: usize) -> CountTable {
    convolution_sequence("u: convolution recurrence, u0=u1=u2=1", [1, 1, 1], n_max)
}

/// 021-avoiding ascent sequences without isolated zeros.
pub fn v_sequence(n_max: usize) -> CountTable {
    convolution_sequence("v: convolution recurrence, v0=1, v1=0, v2=1", [1, 0, 1], n_max)
}

/// `v_n = sum_{k=1}^{floor((n+1)/3)} 2^(n-3k+1) binom(n-k-1, 2k-2) C_{k-1}`
/// for `n >= 1`.
pub fn v_explicit(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "v_explicit",
            value: 0,
            range: "n >= 1".into(),
        });
    }
    let n = n as i64;
    Ok((1..=(n + 1) / 3)
        .map(|k| {
            (BigUint::one() << (n - 3 * k + 1) as u64)
                * binomial(n - k - 1, 2 * k - 2)
                * catalan((k - 1) as u64)
        })
        .sum())
}

/// 021-avoiding descent sequences of length `n >= 1` with `k` descents:
/// `binom(n+k, 3k+1) C_k`.
pub fn descent_021_count(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "descent_021_count",
            value: 0,
            range: "n >= 1".into(),
        });
    }
    let (n, k) = (n as i64, k as i64);
    Ok(binomial(n + k, 3 * k + 1) * catalan(k as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), big(20));
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(3, -1), big(0));
        assert_eq!(binomial(3, 4), big(0));
        assert_eq!(binomial(-1, 0), big(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse().unwrap());
    }

    #[test]
    fn catalan_routes_agree() {
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(0), big(1));
        let rec = catalan_by_recurrence(40);
        for (n, c) in rec.iter().enumerate() {
            assert_eq!(&catalan(n as u64), c);
        }
    }

    #[test]
    fn touchard_values() {
        assert_eq!(touchard(1, 0), big(1));
        assert_eq!(touchard(4, 1), big(6));
        assert_eq!(touchard(4, 0), big(8));
        assert_eq!(touchard(4, 2), big(0));
        assert_eq!(touchard(0, 0), big(0));
        for n in 1..=12i64 {
            let total: BigUint = (0..=n).map(|k| touchard(n, k)).sum();
            assert_eq!(total, catalan(n as u64));
        }
    }

    #[test]
    fn u_and_v() {
        let u = u_sequence(5);
        let vals: Vec<_> = u.series().into_iter().map(|(_, v)| v).collect();
        assert_eq!(vals, [1u64, 1, 1, 3, 8, 23].map(big));
        let v = v_sequence(3);
        let vals: Vec<_> = v.series().into_iter().map(|(_, v)| v).collect();
        assert_eq!(vals, [1u64, 0, 1, 2].map(big));
        assert_eq!(u_sequence(1).len(), 2);
    }

    #[test]
    fn explicit_v() {
        assert_eq!(v_explicit(1).unwrap(), big(0));
        assert_eq!(v_explicit(2).unwrap(), big(1));
        assert_eq!(v_explicit(3).unwrap(), big(2));
        assert!(v_explicit(0).is_err());
        let rec = v_sequence(30);
        for n in 1..=30u32 {
            assert_eq!(&v_explicit(n as usize).unwrap(), rec.get(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn descent_formula() {
        assert_eq!(descent_021_count(3, 1).unwrap(), big(1));
        for n in 1..=8 {
            assert_eq!(descent_021_count(n, 0).unwrap(), big(n as u64));
        }
        let totals: Vec<BigUint> = (1..=6)
            .map(|n| (0..=n).map(|k| descent_021_count(n, k).unwrap()).sum())
            .collect();
        assert_eq!(totals, [1u64, 2, 4, 9, 22, 57].map(big));
        assert!(descent_021_count(0, 0).is_err());
    }

    #[test]
    fn table_rows() {
        let mut t = CountTable::new("t");
        t.insert2(3, 0, big(4));
        t.insert2(3, 1, big(1));
        t.insert2(4, 0, big(8));
        t.insert(7, big(9));
        assert_eq!(t.row(3), vec![(0, big(4)), (1, big(1))]);
        assert_eq!(t.series(), vec![(7, big(9))]);
        let j = serde_json::to_value(&t).unwrap();
        assert_eq!(j["values"][0]["value"], "4");
    }
}
