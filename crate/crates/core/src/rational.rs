//! Exact rational scalars.
//!
//! Values whose numerator and denominator fit in an `i64` are stored inline
//! and combined in `i128`; anything larger moves to
//! [`num_rational::BigRational`]. Both forms are kept in lowest terms with a
//! positive denominator, and a value that fits inline is always stored
//! inline, so equality tests such as `alpha + beta == -2` are exact and
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `n / d` with `d > 0`, `gcd(n, d) = 1` and `n != i64::MIN`.
    Small(i64, i64),
    /// Only for values that do not fit `Small`.
    Big(BigRational),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("invalid rational literal {0:?}: expected `p` or `p/q` with integer p, q")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

fn small(n: i128, d: i128) -> Option<Repr> {
    let n = i64::try_from(n).ok().filter(|&n| n != i64::MIN)?;
    let d = i64::try_from(d).ok()?;
    Some(Repr::Small(n, d))
}

/// Reduces `n / d` (any signs, `d != 0`).
fn from_i128(n: i128, d: i128) -> Rational {
    debug_assert!(d != 0);
    let g = match (i64::try_from(n), i64::try_from(d)) {
        (Ok(a), Ok(b)) if a != i64::MIN && b != i64::MIN => a.gcd(&b) as i128,
        _ => n.gcd(&d),
    };
    let (mut n, mut d) = (n / g, d / g);
    if d < 0 {
        n = -n;
        d = -d;
    }
    match small(n, d) {
        Some(r) => Rational(r),
        None => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
    }
}

fn from_big(r: BigRational) -> Rational {
    let fits = r.numer().to_i128().zip(r.denom().to_i128());
    match fits.and_then(|(n, d)| small(n, d)) {
        Some(s) => Rational(s),
        None => Rational(Repr::Big(r)),
    }
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(value: i64) -> Self {
        from_i128(value.into(), 1)
    }

    /// Builds `numer / denom`.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        from_i128(numer.into(), denom.into())
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n > 0,
            Repr::Big(r) => r.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// Multiplies by a small integer.
    pub fn scale(&self, factor: i64) -> Self {
        self * factor
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        from_big(value)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let invalid = || ParseRationalError::Invalid(s.to_string());
        let parse_int = |part: &str| -> Result<BigInt, ParseRationalError> {
            let part = part.trim();
            let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            part.parse::<BigInt>().map_err(|_| invalid())
        };
        match text.split_once('/') {
            None => Ok(from_big(BigRational::from_integer(parse_int(text)?))),
            Some((p, q)) => {
                let numer = parse_int(p)?;
                let denom = parse_int(q)?;
                if denom.is_zero() {
                    return Err(ParseRationalError::ZeroDenominator(s.to_string()));
                }
                Ok(from_big(BigRational::new(numer, denom)))
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn add(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let (n1, d1, n2, d2) = (*n1 as i128, *d1 as i128, *n2 as i128, *d2 as i128);
            if d1 == d2 {
                from_i128(n1 + n2, d1)
            } else {
                from_i128(n1 * d2 + n2 * d1, d1 * d2)
            }
        }
        _ => from_big(a.to_big() + b.to_big()),
    }
}

fn sub(a: &Rational, b: &Rational) -> Rational {
    add(a, &-b)
}

fn mul(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            from_i128(*n1 as i128 * *n2 as i128, *d1 as i128 * *d2 as i128)
        }
        _ => from_big(a.to_big() * b.to_big()),
    }
}

fn div(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "division by zero");
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            from_i128(*n1 as i128 * *d2 as i128, *d1 as i128 * *n2 as i128)
        }
        _ => from_big(a.to_big() / b.to_big()),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $imp(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $imp(&self, rhs)
            }
        }
        impl $trait<i64> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                $imp(self, &Rational::from_integer(rhs))
            }
        }
        impl $trait<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                $imp(&self, &Rational::from_integer(rhs))
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);
forward_binop!(Div, div, div);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            // n != i64::MIN, so -n cannot overflow
            Repr::Small(n, d) => Rational(Repr::Small(-n, *d)),
            Repr::Big(r) => from_big(-r),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        matches!(self.0, Repr::Small(n, 1) if n == *other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("3".parse::<Rational>().unwrap(), Rational::from(3));
        assert_eq!("-5/2".parse::<Rational>().unwrap(), Rational::new(-5, 2));
        assert_eq!(" 4/6 ".parse::<Rational>().unwrap(), Rational::new(2, 3));
        assert_eq!("6/-4".parse::<Rational>().unwrap(), Rational::new(-3, 2));
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!(matches!("2.5".parse::<Rational>(), Err(ParseRationalError::Invalid(_))));
        assert!(matches!("".parse::<Rational>(), Err(ParseRationalError::Invalid(_))));
        assert!(matches!("1/0".parse::<Rational>(), Err(ParseRationalError::ZeroDenominator(_))));
    }

    #[test]
    fn always_in_lowest_terms() {
        let r = Rational::new(10, -4);
        assert_eq!(r.numer(), BigInt::from(-5));
        assert_eq!(r.denom(), BigInt::from(2));
        assert_eq!(r.to_string(), "-5/2");
        assert_eq!((Rational::new(1, 2) + Rational::new(1, 2)).to_string(), "1");
    }

    #[test]
    fn integer_comparison() {
        assert!(Rational::from(-2) == -2);
        assert!(Rational::new(-4, 2) == -2);
        assert!(Rational::new(-3, 2) != -1);
    }

    #[test]
    fn overflow_moves_to_big_and_back() {
        let big = Rational::from(i64::MAX) * Rational::from(4);
        assert_eq!(big.to_string(), "36893488147419103228");
        assert!(matches!(big.0, Repr::Big(_)));
        let back = &big / 4;
        assert_eq!(back, Rational::from(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Rational::from(i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808");
        assert_eq!(-(-min.clone()), min);
        let huge: Rational = "123456789012345678901234567890/7".parse().unwrap();
        assert_eq!(&huge - &huge, Rational::zero());
        assert!(huge > Rational::from(i64::MAX));
    }

    #[test]
    fn small_arithmetic_matches_big() {
        let values = [(-7, 3), (5, 2), (0, 1), (9, 4), (-1, 1), (i64::MAX, 3), (1, i64::MAX)];
        for &(a, b) in &values {
            for &(c, d) in &values {
                let (x, y) = (Rational::new(a, b), Rational::new(c, d));
                let (bx, by) = (x.to_big(), y.to_big());
                assert_eq!((&x + &y).to_big(), &bx + &by);
                assert_eq!((&x - &y).to_big(), &bx - &by);
                assert_eq!((&x * &y).to_big(), &bx * &by);
                if !y.is_zero() {
                    assert_eq!((&x / &y).to_big(), &bx / &by);
                }
                assert_eq!(x.cmp(&y), bx.cmp(&by));
            }
        }
    }
}
