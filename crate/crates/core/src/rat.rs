//! Exact rational scalars used by every certification path.
//!
//! Distances, measures and ℓ¹ data are kept as arbitrary-precision rationals
//! so that pass/fail comparisons are exact; floating point appears only in
//! eigenvalue computations, which live in [`crate::eigen`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from an unsigned integer.
pub fn rat_u(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p / q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn is_zero(r: &Rat) -> bool {
    r.is_zero()
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Largest integer `≤ r`, as a `Rat`.
pub fn floor(r: &Rat) -> Rat {
    r.floor()
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn display(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"1.5"`.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rat::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let whole: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole.parse().ok()?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let scale = num::pow::pow(BigInt::from(10), frac.len());
        let frac_val: BigInt = frac.parse().ok()?;
        let abs = Rat::from_integer(whole.abs()) + Rat::new(frac_val, scale);
        return Some(if neg { -abs } else { abs });
    }
    let p: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(p))
}

/// Serde adapter storing a `Rat` as its canonical string form.
pub mod serde_rat {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&display(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(de)?;
        parse(&s).ok_or_else(|| de::Error::custom(format!("invalid rational: {s}")))
    }
}

/// Serde adapter for `Vec<Rat>`.
pub mod serde_rat_vec {
    use super::*;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(display))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rat>, D::Error> {
        let strings = Vec::<String>::deserialize(de)?;
        strings
            .iter()
            .map(|s| parse(s).ok_or_else(|| de::Error::custom(format!("invalid rational: {s}"))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("3").unwrap(), rat(3));
        assert_eq!(parse("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse("1.5").unwrap(), ratio(3, 2));
        assert_eq!(parse("-0.25").unwrap(), ratio(-1, 4));
        assert!(parse("1/0").is_none());
        assert!(parse("abc").is_none());
    }

    #[test]
    fn display_roundtrip() {
        for r in [rat(0), rat(-4), ratio(22, 7), ratio(-3, 9)] {
            assert_eq!(parse(&display(&r)).unwrap(), r);
        }
    }
}
