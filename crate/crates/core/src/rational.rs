//! Exact rational helpers: canonical `p/q` rendering, decimal rendering of
//! `q·log 2`, and JSON encoding of big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serializer;

/// `log 2` to 100 decimal places.
const LN2_DIGITS: &str = "6931471805599453094172321214581765680755001343602552541206800094933936219696947156058633269964186875";

/// Largest significant-digit count [`decimal_times_ln2`] will render.
pub const MAX_DECIMAL_DIGITS: usize = 60;

/// `p/q` with `q > 0` and `gcd(p, q) = 1`; integers keep the `/1`.
pub fn canonical(r: &BigRational) -> String {
    // BigRational is always stored reduced with a positive denominator.
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_canonical(s: &str) -> Option<BigRational> {
    let (p, q) = s.split_once('/')?;
    let p: BigInt = p.trim().parse().ok()?;
    let q: BigInt = q.trim().parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p, q))
}

fn ln2() -> BigRational {
    let numer: BigInt = LN2_DIGITS.parse().expect("constant digits");
    BigRational::new(numer, BigInt::from(10).pow(LN2_DIGITS.len() as u32))
}

/// Renders `q·log 2` with `digits` significant digits (rounded half away
/// from zero). `digits` is clamped to `1..=MAX_DECIMAL_DIGITS`.
pub fn decimal_times_ln2(q: &BigRational, digits: usize) -> String {
    render_significant(&(q * ln2()), digits.clamp(1, MAX_DECIMAL_DIGITS))
}

pub(crate) fn render_significant(x: &BigRational, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let x = x.abs();
    let ten = BigRational::from_integer(BigInt::from(10));

    // exponent e with 10^e <= x < 10^(e+1)
    let mut e: i64 = 0;
    let mut probe = BigRational::one();
    if x >= probe {
        while &probe * &ten <= x {
            probe = &probe * &ten;
            e += 1;
        }
    } else {
        while probe > x {
            probe = &probe / &ten;
            e -= 1;
        }
    }

    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        &x * BigRational::from_integer(BigInt::from(10).pow(shift as u32))
    } else {
        &x / BigRational::from_integer(BigInt::from(10).pow((-shift) as u32))
    };
    let mut mantissa = round_half_up(&scaled);
    let mut shift = shift;
    if mantissa.to_string().len() > digits {
        mantissa /= 10;
        shift -= 1;
    }

    let raw = mantissa.to_string();
    let body = if shift <= 0 {
        let mut s = raw;
        s.push_str(&"0".repeat((-shift) as usize));
        s
    } else {
        let shift = shift as usize;
        if raw.len() > shift {
            let (int, frac) = raw.split_at(raw.len() - shift);
            format!("{int}.{frac}")
        } else {
            format!("0.{}{}", "0".repeat(shift - raw.len()), raw)
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn round_half_up(x: &BigRational) -> BigInt {
    let (q, r) = x.numer().div_rem(x.denom());
    if BigInt::from(2) * r >= *x.denom() {
        q + 1
    } else {
        q
    }
}

/// Serializes a big integer as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(n) => s.serialize_i64(n),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(n) => seq.serialize_element(&n)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

pub(crate) fn serialize_opt_rational<S: Serializer>(
    v: &Option<BigRational>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&canonical(r)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical(&r(2, -84)), "-1/42");
        assert_eq!(canonical(&r(4, 2)), "2/1");
        assert_eq!(canonical(&r(0, 5)), "0/1");
        assert_eq!(parse_canonical("-1/42"), Some(r(-1, 42)));
        assert_eq!(parse_canonical("1/0"), None);
    }

    #[test]
    fn significant_digits() {
        assert_eq!(render_significant(&r(1, 3), 4), "0.3333");
        assert_eq!(render_significant(&r(2, 3), 3), "0.667");
        assert_eq!(render_significant(&r(-1234567, 1), 3), "-1230000");
        assert_eq!(render_significant(&r(999, 1000), 2), "1.0");
        assert_eq!(render_significant(&r(1, 1000), 2), "0.0010");
        assert_eq!(render_significant(&r(0, 1), 5), "0");
    }

    #[test]
    fn ln2_multiples() {
        assert_eq!(decimal_times_ln2(&r(1, 1), 12), "0.693147180560");
        assert_eq!(decimal_times_ln2(&r(2, 1), 12), "1.38629436112");
        let v: f64 = decimal_times_ln2(&r(1, 42), 12).parse().unwrap();
        assert!((v - std::f64::consts::LN_2 / 42.0).abs() < 1e-13);
    }
}
