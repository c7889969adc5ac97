//! Exact scalars and the generic scalar bound used by matrices and predicates.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, Zero};

use crate::error::Error;

/// Exact rational number in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Scalar bound for the generic containers and predicates.
///
/// Anything exact (`Rational`, `BigInt`, `i64`) satisfies it; floating point
/// types do too, but nothing in the decision paths of this crate is ever
/// instantiated with them.
pub trait Scalar: Clone + PartialEq + PartialOrd + Num + Signed + Debug {}

impl<T> Scalar for T where T: Clone + PartialEq + PartialOrd + Num + Signed + Debug {}

/// Sign of a scalar as -1, 0 or +1.
pub fn sign<T: Scalar>(x: &T) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`; panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`. Decimal points and exponents are
/// rejected outright: the model format never rounds.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    if t.contains(['.', 'e', 'E']) {
        return Err(Error::FloatRejected(t.to_string()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Scales a rational vector to coprime integers with the first nonzero entry
/// positive. The zero vector is returned unchanged.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let lead_negative = ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    if lead_negative {
        g = -g;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("1/3").unwrap() * int(3), int(1));
    }

    #[test]
    fn rejects_floats_and_garbage() {
        assert!(matches!(parse_rational("0.5"), Err(Error::FloatRejected(_))));
        assert!(matches!(parse_rational("1e3"), Err(Error::FloatRejected(_))));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn primitive_vector_is_canonical() {
        let v = vec![rat(-1, 2), rat(1, 3), int(0)];
        assert_eq!(primitive_integer_vector(&v), vec![int(3), int(-2), int(0)]);
    }

    #[test]
    fn formatting_round_trips() {
        for s in ["0", "-7", "3/2", "-1/9"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
    }
}
