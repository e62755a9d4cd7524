//! Truncated power series and closed-form counts.

mod counts;
mod gf;
mod trunc;

pub use counts::{
    binomial, catalan, catalan_by_recurrence, descent_021_count, touchard, u_sequence,
    v_explicit, v_sequence, CountTable,
};
pub use gf::{
    catalan_series, expand_f_closed, expand_f_fixedpoint, expand_g, f_specialized_coefficients,
};
pub use trunc::{Exponents, Rational, TruncSeries};
