//! Generating functions for 021-avoiding ascent and descent sequences.

use num_traits::Zero;

use super::trunc::{Rational, TruncSeries};
use crate::error::{Error, Result};

/// Numerator of the radicand of `F`:
/// `1 - x(4 + y) + 4x^2(1 + y(1 - z)) - 4x^3 y(1 + wy - (1 + y)z) + 4x^4 y^2 (w - z)`.
fn radicand_numerator(order: u32) -> TruncSeries {
    TruncSeries::from_terms(
        order,
        &[
            (1, [0, 0, 0, 0]),
            (-4, [1, 0, 0, 0]),
            (-1, [1, 1, 0, 0]),
            (4, [2, 0, 0, 0]),
            (4, [2, 1, 0, 0]),
            (-4, [2, 1, 1, 0]),
            (-4, [3, 1, 0, 0]),
            (-4, [3, 2, 0, 1]),
            (4, [3, 1, 1, 0]),
            (4, [3, 2, 1, 0]),
            (4, [4, 2, 0, 1]),
            (-4, [4, 2, 1, 0]),
        ],
    )
}

fn one_minus_xy(order: u32) -> TruncSeries {
    TruncSeries::from_terms(order, &[(1, [0, 0, 0, 0]), (-1, [1, 1, 0, 0])])
}

/// Checks what every coefficient of `F` must satisfy: a nonnegative integer
/// at `x^i y^j z^k w^l` with `j <= i` and `k + 2l <= j`.
fn check_census_shape(f: &TruncSeries, what: &str) -> Result<()> {
    for (e, c) in f.terms() {
        if !c.is_integer() || c < &Rational::zero() {
            return Err(Error::Internal(format!(
                "{what}: coefficient {c} at {e:?} is not a nonnegative integer"
            )));
        }
        if e[1] > e[0] || e[2] + 2 * e[3] > e[1] {
            return Err(Error::Internal(format!(
                "{what}: impossible monomial {e:?}"
            )));
        }
    }
    Ok(())
}

/// `F(x, y, z, w)` through `x^order` from the closed form
/// `(1 - sqrt(N(x,y,z,w) / (1 - xy))) / (2x)`.
///
/// `x`, `y`, `z`, `w` mark length, zeros, isolated zeros and runs of two or
/// more zeros.
pub fn expand_f_closed(order: u32) -> Result<TruncSeries> {
    let work = order + 1;
    let radicand = radicand_numerator(work).div_unit(&one_minus_xy(work))?;
    let root = radicand.sqrt_unit()?;
    let numerator = TruncSeries::one(work).sub(&root)?;
    let half = Rational::new(1.into(), 2.into());
    let f = numerator.shift_down_x()?.scale(&half);
    check_census_shape(&f, "expand_f_closed")?;
    Ok(f)
}

/// `F` as the fixed point of
/// `F = 1 + xyz + x^2 y^2 w / (1 - xy) + x/(1 - x) (F - 1) F`,
/// iterated from `F = 1` until two iterates coincide.
pub fn expand_f_fixedpoint(order: u32) -> Result<TruncSeries> {
    let one = TruncSeries::one(order);
    let long_runs = TruncSeries::from_terms(order, &[(1, [2, 2, 0, 1])])
        .div_unit(&one_minus_xy(order))?;
    let base = one
        .add(&TruncSeries::from_terms(order, &[(1, [1, 1, 1, 0])]))?
        .add(&long_runs)?;
    let kernel = TruncSeries::from_terms(order, &[(1, [1, 0, 0, 0])])
        .div_unit(&TruncSeries::from_terms(order, &[(1, [0, 0, 0, 0]), (-1, [1, 0, 0, 0])]))?;
    let mut f = one.clone();
    for _ in 0..order + 2 {
        let next = base.add(&kernel.mul(&f.sub(&one)?.mul(&f)?)?)?;
        if next == f {
            check_census_shape(&f, "expand_f_fixedpoint")?;
            return Ok(f);
        }
        f = next;
    }
    Err(Error::Internal(format!(
        "expand_f_fixedpoint: no fixed point after {} iterations",
        order + 2
    )))
}

/// `C(x) = (1 - sqrt(1 - 4x)) / (2x)` through `x^order`.
pub fn catalan_series(order: u32) -> Result<TruncSeries> {
    let work = order + 1;
    let root = TruncSeries::from_terms(work, &[(1, [0, 0, 0, 0]), (-4, [1, 0, 0, 0])]).sqrt_unit()?;
    let half = Rational::new(1.into(), 2.into());
    TruncSeries::one(work)
        .sub(&root)?
        .shift_down_x()
        .map(|s| s.scale(&half))
}

/// Length/descents series of 021-avoiding descent sequences,
/// `1 + x/(1-x)^2 C(x^2 y / (1-x)^3)`, with `y` in the `y` slot.
///
/// The constant term 1 counts the empty sequence; dropping it gives the
/// series of nonempty sequences. With `with_y = false`, `y` is set to 1.
pub fn expand_g(order: u32, with_y: bool) -> Result<TruncSeries> {
    let one_minus_x = TruncSeries::from_terms(order, &[(1, [0, 0, 0, 0]), (-1, [1, 0, 0, 0])]);
    let sq = one_minus_x.mul(&one_minus_x)?;
    let cube = sq.mul(&one_minus_x)?;
    let inner = TruncSeries::from_terms(order, &[(1, [2, 1, 0, 0])]).div_unit(&cube)?;

    // C(inner) by Horner; inner has no constant term, so x^(2m) divides
    // inner^m and only C_0 .. C_{order/2} matter.
    let c = catalan_series(order / 2)?;
    let mut composed = TruncSeries::zero(order);
    for m in (0..=order / 2).rev() {
        let coeff = c.coefficient([m, 0, 0, 0]);
        composed = composed
            .mul(&inner)?
            .add(&TruncSeries::constant(order, coeff))?;
    }

    let prefactor = TruncSeries::from_terms(order, &[(1, [1, 0, 0, 0])]).div_unit(&sq)?;
    let g = TruncSeries::one(order).add(&prefactor.mul(&composed)?)?;
    if !g.is_integral() || !g.is_nonnegative() {
        return Err(Error::Internal("expand_g: non-integral coefficient".into()));
    }
    Ok(if with_y {
        g
    } else {
        g.specialize([Some(1), None, None])
    })
}

/// `F` with `y`, `z`, `w` replaced by the given integers, as a list of
/// `x`-coefficients. Errors if any coefficient fails to be an integer.
pub fn f_specialized_coefficients(
    f: &TruncSeries,
    y: i64,
    z: i64,
    w: i64,
) -> Result<Vec<num_bigint::BigInt>> {
    f.specialize([Some(y), Some(z), Some(w)])
        .integer_x_coefficients()
        .ok_or_else(|| Error::Internal("specialization is not integral".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn low_orders() {
        let f0 = expand_f_fixedpoint(0).unwrap();
        assert_eq!(f0, TruncSeries::one(0));
        let f1 = expand_f_fixedpoint(1).unwrap();
        assert_eq!(
            f1,
            TruncSeries::from_terms(1, &[(1, [0, 0, 0, 0]), (1, [1, 1, 1, 0])])
        );
        assert_eq!(expand_f_closed(1).unwrap(), f1);
        assert_eq!(expand_f_closed(0).unwrap(), f0);
    }

    #[test]
    fn length_three_census() {
        // A_3(021) = 000, 001, 010, 011, 012
        let f = expand_f_closed(3).unwrap();
        let at = |e| f.coefficient(e).to_integer();
        assert_eq!(at([3, 3, 0, 1]), BigInt::from(1));
        assert_eq!(at([3, 2, 0, 1]), BigInt::from(1));
        assert_eq!(at([3, 2, 2, 0]), BigInt::from(1));
        assert_eq!(at([3, 1, 1, 0]), BigInt::from(2));
        assert_eq!(f.slice(3).unwrap().len(), 4);
    }

    #[test]
    fn specializations() {
        let f = expand_f_closed(7).unwrap();
        assert_eq!(
            f_specialized_coefficients(&f, 1, 1, 1).unwrap(),
            ints(&[1, 1, 2, 5, 14, 42, 132, 429])
        );
        assert_eq!(
            f_specialized_coefficients(&f, 1, 1, 0).unwrap(),
            ints(&[1, 1, 1, 3, 8, 23, 68, 207])
        );
        assert_eq!(
            f_specialized_coefficients(&f, 1, 0, 1).unwrap()[..4],
            ints(&[1, 0, 1, 2])
        );
    }

    #[test]
    fn routes_agree() {
        for order in [2, 5, 9] {
            assert_eq!(
                expand_f_closed(order).unwrap(),
                expand_f_fixedpoint(order).unwrap()
            );
        }
    }

    #[test]
    fn catalan_generating_function() {
        let c = catalan_series(6).unwrap();
        assert_eq!(c.integer_x_coefficients().unwrap(), ints(&[1, 1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn descent_series() {
        let g = expand_g(6, false).unwrap();
        assert_eq!(g.integer_x_coefficients().unwrap(), ints(&[1, 1, 2, 4, 9, 22, 57]));
        let gy = expand_g(6, true).unwrap();
        assert_eq!(gy.coefficient([3, 1, 0, 0]).to_integer(), BigInt::from(1));
        assert_eq!(gy.coefficient([5, 0, 0, 0]).to_integer(), BigInt::from(5));
    }
}
