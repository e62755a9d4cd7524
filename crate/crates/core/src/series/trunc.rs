use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};

/// Exact rational coefficient, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Exponents of `y`, `z`, `w`.
pub type Rest = [u32; 3];

/// Exponents of `x`, `y`, `z`, `w`.
pub type Exponents = [u32; 4];

/// Power series in `x` truncated after `x^order`, whose coefficients are
/// polynomials in `y`, `z`, `w` over the rationals.
///
/// Storage is sparse: slice `i` maps `(j, k, l)` to the nonzero coefficient
/// of `x^i y^j z^k w^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: u32,
    slices: Vec<BTreeMap<Rest, Rational>>,
}

fn add_into(slice: &mut BTreeMap<Rest, Rational>, rest: Rest, value: Rational) {
    use std::collections::btree_map::Entry;
    match slice.entry(rest) {
        Entry::Vacant(e) => {
            if !value.is_zero() {
                e.insert(value);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn add_rest(a: &Rest, b: &Rest) -> Rest {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn poly_mul_into(
    out: &mut BTreeMap<Rest, Rational>,
    a: &BTreeMap<Rest, Rational>,
    b: &BTreeMap<Rest, Rational>,
) {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    for (ra, ca) in small {
        for (rb, cb) in large {
            add_into(out, add_rest(ra, rb), ca * cb);
        }
    }
}

impl TruncSeries {
    pub fn zero(order: u32) -> Self {
        TruncSeries {
            order,
            slices: vec![BTreeMap::new(); order as usize + 1],
        }
    }

    pub fn one(order: u32) -> Self {
        TruncSeries::constant(order, Rational::one())
    }

    pub fn constant(order: u32, c: Rational) -> Self {
        TruncSeries::monomial(order, [0; 4], c)
    }

    /// `c * x^i y^j z^k w^l`, or zero when `i > order`.
    pub fn monomial(order: u32, exps: Exponents, c: Rational) -> Self {
        let mut s = TruncSeries::zero(order);
        if exps[0] <= order {
            add_into(&mut s.slices[exps[0] as usize], [exps[1], exps[2], exps[3]], c);
        }
        s
    }

    /// Integer-coefficient shorthand for [`TruncSeries::monomial`] sums.
    pub fn from_terms(order: u32, terms: &[(i64, Exponents)]) -> Self {
        let mut s = TruncSeries::zero(order);
        for &(c, exps) in terms {
            if exps[0] <= order {
                add_into(
                    &mut s.slices[exps[0] as usize],
                    [exps[1], exps[2], exps[3]],
                    Rational::from_integer(c.into()),
                );
            }
        }
        s
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficient(&self, exps: Exponents) -> Rational {
        self.slices
            .get(exps[0] as usize)
            .and_then(|s| s.get(&[exps[1], exps[2], exps[3]]))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &Rational)> + '_ {
        self.slices.iter().enumerate().flat_map(|(i, slice)| {
            slice
                .iter()
                .map(move |(r, c)| ([i as u32, r[0], r[1], r[2]], c))
        })
    }

    /// Coefficient polynomial of `x^i`.
    pub fn slice(&self, i: u32) -> Option<&BTreeMap<Rest, Rational>> {
        self.slices.get(i as usize)
    }

    pub fn term_count(&self) -> usize {
        self.slices.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(BTreeMap::is_empty)
    }

    /// Drops terms above `x^order` or pads with zeros up to it.
    pub fn with_order(&self, order: u32) -> Self {
        let mut slices = self.slices.clone();
        slices.resize(order as usize + 1, BTreeMap::new());
        TruncSeries { order, slices }
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncSeries) -> Result<Self> {
        self.check_order(other)?;
        let mut out = self.clone();
        for (i, slice) in other.slices.iter().enumerate() {
            for (r, c) in slice {
                add_into(&mut out.slices[i], *r, c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return TruncSeries::zero(self.order);
        }
        TruncSeries {
            order: self.order,
            slices: self
                .slices
                .iter()
                .map(|s| s.iter().map(|(r, v)| (*r, v * c)).collect())
                .collect(),
        }
    }

    /// Product truncated after `x^order`.
    pub fn mul(&self, other: &TruncSeries) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order as usize;
        let mut out = TruncSeries::zero(self.order);
        for (i, a) in self.slices.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (j, b) in other.slices[..=n - i].iter().enumerate() {
                if !b.is_empty() {
                    poly_mul_into(&mut out.slices[i + j], a, b);
                }
            }
        }
        Ok(out)
    }

    /// The `x^0` coefficient when it is a constant (no `y`, `z`, `w`).
    fn scalar_constant(&self) -> Option<&Rational> {
        let s = &self.slices[0];
        match s.len() {
            0 => None,
            1 => s.get(&[0, 0, 0]),
            _ => None,
        }
    }

    /// Quotient `self / divisor`, where the divisor's `x^0` coefficient is a
    /// nonzero rational constant.
    pub fn div_unit(&self, divisor: &TruncSeries) -> Result<Self> {
        self.check_order(divisor)?;
        let lead = divisor.scalar_constant().ok_or(Error::NotUnit {
            what: "div_unit",
            required: "a nonzero rational constant",
        })?;
        let inv_lead = lead.recip();
        let n = self.order as usize;
        let mut q: Vec<BTreeMap<Rest, Rational>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = self.slices[i].clone();
            for j in 1..=i {
                let t = &divisor.slices[j];
                if t.is_empty() || q[i - j].is_empty() {
                    continue;
                }
                let mut prod = BTreeMap::new();
                poly_mul_into(&mut prod, t, &q[i - j]);
                for (r, c) in prod {
                    add_into(&mut acc, r, -c);
                }
            }
            acc.values_mut().for_each(|c| *c *= &inv_lead);
            q.push(acc);
        }
        Ok(TruncSeries {
            order: self.order,
            slices: q,
        })
    }

    /// Square root of a series with constant term 1, by Newton iteration
    /// `r <- (r + s / r) / 2`, doubling the number of correct `x`-orders per
    /// step.
    pub fn sqrt_unit(&self) -> Result<Self> {
        if self.scalar_constant() != Some(&Rational::one()) {
            return Err(Error::NotUnit {
                what: "sqrt_unit",
                required: "exactly 1",
            });
        }
        let target = self.order + 1;
        let half = Rational::new(1.into(), 2.into());
        let mut root = TruncSeries::one(0);
        let mut correct = 1;
        while correct < target {
            correct = (2 * correct).min(target);
            let order = correct - 1;
            let s = self.with_order(order);
            let r = root.with_order(order);
            root = r.add(&s.div_unit(&r)?)?.scale(&half);
        }
        Ok(root.with_order(self.order))
    }

    /// Divides by `x`; the `x^0` coefficient must vanish. The order drops by one.
    pub fn shift_down_x(&self) -> Result<Self> {
        if !self.slices[0].is_empty() {
            return Err(Error::Internal(
                "shift_down_x: x^0 coefficient is nonzero".into(),
            ));
        }
        if self.order == 0 {
            return Err(Error::Internal("shift_down_x: order 0 series".into()));
        }
        Ok(TruncSeries {
            order: self.order - 1,
            slices: self.slices[1..].to_vec(),
        })
    }

    /// Substitutes integer values for any of `y`, `z`, `w`.
    pub fn specialize(&self, values: [Option<i64>; 3]) -> Self {
        let mut out = TruncSeries::zero(self.order);
        for (i, slice) in self.slices.iter().enumerate() {
            for (rest, c) in slice {
                let mut coeff = c.clone();
                let mut new_rest = *rest;
                for v in 0..3 {
                    if let Some(value) = values[v] {
                        let base = Rational::from_integer(BigInt::from(value));
                        coeff *= num_traits::pow(base, rest[v] as usize);
                        new_rest[v] = 0;
                    }
                }
                add_into(&mut out.slices[i], new_rest, coeff);
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms().all(|(_, c)| c.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms().all(|(_, c)| !c.is_negative())
    }

    /// Whether only powers of `x` occur.
    pub fn is_univariate(&self) -> bool {
        self.terms().all(|(e, _)| e[1..] == [0, 0, 0])
    }

    /// Coefficients of `x^0 ..= x^order`, summed over `y`, `z`, `w` at 1.
    pub fn x_coefficients(&self) -> Vec<Rational> {
        self.slices
            .iter()
            .map(|s| s.values().fold(Rational::zero(), |acc, c| acc + c))
            .collect()
    }

    /// Integer coefficients of `x^0 ..= x^order` of a univariate integral series.
    pub fn integer_x_coefficients(&self) -> Option<Vec<BigInt>> {
        if !self.is_univariate() || !self.is_integral() {
            return None;
        }
        Some(self.x_coefficients().into_iter().map(|c| c.to_integer()).collect())
    }

    /// `{"order": N, "terms": [{"x":i,"y":j,"z":k,"w":l,"coeff":"p/q"}, ...]}`
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms()
            .map(|(e, c)| {
                json!({"x": e[0], "y": e[1], "z": e[2], "w": e[3], "coeff": c.to_string()})
            })
            .collect();
        json!({"order": self.order, "terms": terms})
    }
}

/// One line per nonzero term, `coeff * x^i y^j z^k w^l`, in increasing
/// exponent order.
impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.terms() {
            writeln!(f, "{c} * x^{} y^{} z^{} w^{}", e[0], e[1], e[2], e[3])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| Rational::from_integer(c.into())).collect()
    }

    #[test]
    fn sqrt_of_one_minus_four_x() {
        let s = TruncSeries::from_terms(4, &[(1, [0, 0, 0, 0]), (-4, [1, 0, 0, 0])]);
        let r = s.sqrt_unit().unwrap();
        assert_eq!(r.x_coefficients(), ints(&[1, -2, -2, -4, -10]));
    }

    #[test]
    fn identity_and_geometric() {
        let s = TruncSeries::from_terms(3, &[(2, [0, 1, 0, 0]), (-3, [2, 0, 1, 1]), (5, [3, 2, 0, 0])]);
        assert_eq!(s.mul(&TruncSeries::one(3)).unwrap(), s);
        let denom = TruncSeries::from_terms(3, &[(1, [0, 0, 0, 0]), (-1, [1, 1, 0, 0])]);
        let q = TruncSeries::one(3).div_unit(&denom).unwrap();
        let expected = TruncSeries::from_terms(
            3,
            &[(1, [0, 0, 0, 0]), (1, [1, 1, 0, 0]), (1, [2, 2, 0, 0]), (1, [3, 3, 0, 0])],
        );
        assert_eq!(q, expected);
    }

    #[test]
    fn errors() {
        let a = TruncSeries::one(2);
        let b = TruncSeries::one(3);
        assert!(matches!(a.add(&b), Err(Error::OrderMismatch { left: 2, right: 3 })));
        assert!(a.mul(&b).is_err());
        let two = TruncSeries::constant(2, Rational::from_integer(2.into()));
        assert!(matches!(two.sqrt_unit(), Err(Error::NotUnit { .. })));
        let poly_lead = TruncSeries::from_terms(2, &[(1, [0, 0, 0, 0]), (1, [0, 1, 0, 0])]);
        assert!(a.div_unit(&poly_lead).is_err());
        assert!(a.div_unit(&TruncSeries::zero(2)).is_err());
        assert!(a.shift_down_x().is_err());
    }

    #[test]
    fn specialization() {
        let s = TruncSeries::from_terms(2, &[(3, [1, 2, 1, 0]), (1, [1, 0, 0, 0]), (-1, [2, 1, 1, 1])]);
        let t = s.specialize([Some(2), None, Some(0)]);
        assert_eq!(t.coefficient([1, 0, 1, 0]), Rational::from_integer(12.into()));
        assert_eq!(t.coefficient([1, 0, 0, 0]), Rational::one());
        assert_eq!(t.term_count(), 2);
    }

    #[test]
    fn rendering() {
        let s = TruncSeries::from_terms(2, &[(1, [0, 0, 0, 0]), (-2, [1, 1, 0, 1])]);
        assert_eq!(s.to_string(), "1 * x^0 y^0 z^0 w^0\n-2 * x^1 y^1 z^0 w^1\n");
        let j = s.to_json();
        assert_eq!(j["terms"][1]["coeff"], "-2");
        assert_eq!(j["order"], 2);
    }

    fn unit_series() -> impl Strategy<Value = TruncSeries> {
        (1u32..=6, proptest::collection::vec((-3i64..=3, 1u32..=6, 0u32..=2, 0u32..=2, 0u32..=1), 0..8))
            .prop_map(|(order, terms)| {
                let mut all = vec![(1i64, [0u32, 0, 0, 0])];
                all.extend(terms.into_iter().map(|(c, i, j, k, l)| (c, [i, j, k, l])));
                TruncSeries::from_terms(order, &all)
            })
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(s in unit_series()) {
            let r = s.sqrt_unit().unwrap();
            prop_assert_eq!(r.mul(&r).unwrap(), s);
        }

        #[test]
        fn division_inverts_multiplication(s in unit_series(), t in unit_series()) {
            let order = s.order().min(t.order());
            let (s, t) = (s.with_order(order), t.with_order(order));
            let q = s.div_unit(&t).unwrap();
            prop_assert_eq!(q.mul(&t).unwrap(), s);
        }
    }
}
