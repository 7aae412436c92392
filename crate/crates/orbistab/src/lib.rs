//! Exact computation and certification of the lattice-level data behind
//! Bridgeland stability conditions on Kleinian (ADE) orbisurfaces.
//!
//! Everything that feeds a mathematical decision is computed in exact
//! arithmetic: arbitrary-precision rationals and elements of cyclotomic
//! fields `Q(zeta_n)`. Floating point appears only in informational reports
//! and in CSV/plot output, never on a decision path.
//!
//! The crate is organized around the pipeline
//!
//! * [`exactnum`] — rationals and cyclotomic field arithmetic;
//! * [`groups`] — character tables of the finite subgroups of `SL(2, C)`
//!   (cyclic, binary dihedral, binary tetrahedral/octahedral/icosahedral);
//! * [`rootdata`] — ADE root systems, root enumeration, and exact
//!   definiteness certificates;
//! * [`trr`] — Riemann-Roch correction coefficients `T_i` and the correction
//!   term `delta` for classes supported at the stacky point;
//! * [`stability`] — numerical K-theory classes, central charges `Z_{w,gamma}`,
//!   the parameter gate, and support-property quadratic forms;
//! * [`walls`] — central charges restricted to the root lattice, chamber
//!   membership, and destabilizer scans for skyscraper classes.

// Index-based loops mirror the matrix notation throughout.
#![allow(clippy::needless_range_loop)]

pub mod exactnum;
pub mod groups;
mod linalg;
pub mod rootdata;
pub mod stability;
pub mod trr;
pub mod walls;

use num_bigint::BigInt;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (maintained by `num-rational`).
pub type Rat = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Renders a rational as `num/den` (or just `num` for integers).
pub fn rat_to_string(q: &Rat) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `num/den` or a plain integer string.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer `{t}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Renders a rational as a decimal string with `digits` fractional digits,
/// rounding half away from zero. Display-only; exact values never pass
/// through this.
pub fn rat_to_decimal(q: &Rat, digits: usize) -> String {
    use num_traits::Signed;
    let neg = q.is_negative();
    let abs = q.abs();
    let scale = BigInt::from(10).pow(digits as u32);
    // round(|q| * 10^digits)
    let scaled = abs * Rat::from_integer(scale.clone());
    let (num, den) = (scaled.numer().clone(), scaled.denom().clone());
    let rounded = (num * 2 + &den) / (den * 2);
    let int_part = &rounded / &scale;
    let frac_part = &rounded % &scale;
    let sign = if neg && rounded != BigInt::from(0) { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
    }
}

/// Errors across all modules.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("exponent {k} is not invertible modulo {n}")]
    NotAGaloisMap { k: u64, n: u64 },
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("invalid group family: {0}")]
    InvalidFamily(String),
    #[error("character table validation failed: {0}")]
    TableValidation(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("non-integral class coordinates: {0}")]
    NonIntegralClass(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
    #[error("invalid surface profile: {0}")]
    InvalidProfile(String),
    #[error("invalid stability parameters: {0}")]
    InvalidParams(String),
    #[error("degenerate central charge: {0}")]
    DegenerateCharge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
