//! Exact scalars and the rational literal syntax used by all file formats.
//!
//! Every geometric decision in this crate reduces to comparing an exact
//! scalar against zero, so the kernel is generic over any ordered exact
//! number type. `Rat` (arbitrary-precision rationals) is the concrete
//! instantiation used throughout; integers work wherever no division is
//! needed (e.g. sign predicates on cleared-denominator vectors).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero as _};
use thiserror::Error;

/// Ordered exact scalar: ring arithmetic plus a total order.
///
/// `f32`/`f64` do not implement `Ord` and are intentionally excluded: no
/// decision path in this crate may round.
pub trait Scalar: Clone + Ord + Signed + std::fmt::Debug {}
impl<T> Scalar for T where T: Clone + Ord + Signed + std::fmt::Debug {}

/// Scalars whose division is exact (fields), required by operations that
/// produce coordinates or parameters rather than just signs.
pub trait FieldScalar: Scalar {}
impl FieldScalar for BigRational {}
impl FieldScalar for num_rational::Rational64 {}

/// The concrete scalar used by embeddings, scenes and diagrams.
pub type Rat = BigRational;

/// Sign of a scalar as -1, 0 or +1.
pub fn sign_of<T: Scalar>(t: &T) -> i8 {
    if t.is_zero() {
        0
    } else if t.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RatParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal: {0:?}")]
    Malformed(String),
    #[error("zero denominator in rational literal: {0:?}")]
    ZeroDenominator(String),
}

/// Parse a rational literal `p/q`, with `/q` omitted when the value is an
/// integer. The result is canonical (reduced, positive denominator).
pub fn parse_rat(s: &str) -> Result<Rat, RatParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(RatParseError::Empty);
    }
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| RatParseError::Malformed(s.to_string()))?;
    let denom: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| RatParseError::Malformed(s.to_string()))?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(RatParseError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(numer, denom))
}

/// Format a rational in the literal syntax accepted by [`parse_rat`].
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for integer-valued rationals.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}
