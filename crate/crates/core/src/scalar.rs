//! Exact arithmetic in the real quadratic field Q(sqrt 3).
//!
//! A [`Scalar`] is `a + b*sqrt(3)` with `a, b` arbitrary-precision
//! rationals, kept canonical by `num_rational::Ratio` (reduced, positive
//! denominator). Equality is structural and exact; there are no
//! tolerances anywhere in the engine.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    /// rational part
    pub a: Rational,
    /// coefficient of sqrt(3)
    pub b: Rational,
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

impl Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rational::one(), Rational::zero())
    }

    pub fn sqrt3() -> Self {
        Scalar::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(rat(n, 1), Rational::zero())
    }

    /// n/d as a rational scalar
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::new(rat(n, d), Rational::zero())
    }

    /// (n/d) * sqrt(3)
    pub fn sqrt3_times(n: i64, d: i64) -> Self {
        Scalar::new(Rational::zero(), rat(n, d))
    }

    pub fn from_rational(a: Rational) -> Self {
        Scalar::new(a, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Multiplicative inverse: (a + b r)^-1 = (a - b r) / (a^2 - 3 b^2).
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let three = rat(3, 1);
        let norm = &self.a * &self.a - three * (&self.b * &self.b);
        // norm = 0 with (a,b) != 0 would mean sqrt(3) is rational
        debug_assert!(!norm.is_zero());
        Ok(Scalar::new(&self.a / &norm, -(&self.b / &norm)))
    }

    /// Exact sign of the real number a + b*sqrt(3), with sqrt(3) > 0.
    pub fn sign(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (x, y) if x == y => x,
            (x, y) => {
                // opposite signs: compare a^2 against 3 b^2
                let a2 = &self.a * &self.a;
                let b23 = rat(3, 1) * (&self.b * &self.b);
                match a2.cmp(&b23) {
                    std::cmp::Ordering::Greater => x,
                    std::cmp::Ordering::Less => y,
                    // a^2 = 3 b^2 with both nonzero is impossible over Q
                    std::cmp::Ordering::Equal => unreachable!("sqrt(3) is irrational"),
                }
            }
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, n: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Conjugate a - b*sqrt(3).
    pub fn conj(&self) -> Scalar {
        Scalar::new(self.a.clone(), -self.b.clone())
    }
}

fn rational_sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let d = self - other;
        match d.sign() {
            x if x < 0 => std::cmp::Ordering::Less,
            0 => std::cmp::Ordering::Equal,
            _ => std::cmp::Ordering::Greater,
        }
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, |$x:ident, $y:ident| $body:expr) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                let $x = self;
                let $y = rhs;
                $body
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                $trait::$method(&self, rhs)
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, |x, y| Scalar::new(&x.a + &y.a, &x.b + &y.b));
impl_binop!(Sub, sub, |x, y| Scalar::new(&x.a - &y.a, &x.b - &y.b));
impl_binop!(Mul, mul, |x, y| {
    // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 3 b1 b2 + (a1 b2 + b1 a2) r
    let three = rat(3, 1);
    Scalar::new(
        &x.a * &y.a + three * (&x.b * &y.b),
        &x.a * &y.b + &x.b * &y.a,
    )
});
impl_binop!(Div, div, |x, y| {
    let inv = y.inv().expect("division by zero Scalar");
    x * &inv
});

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Text codec: `an/ad` when b = 0, otherwise `an/ad+bn/bd*r3`.
/// Round-trips bit-exactly because both parts are canonical.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}/{}", self.a.numer(), self.a.denom())
        } else {
            write!(
                f,
                "{}/{}+{}/{}*r3",
                self.a.numer(),
                self.a.denom(),
                self.b.numer(),
                self.b.denom()
            )
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))?;
    let d = BigInt::from_str(d.trim()).map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some(stripped) = s.strip_suffix("*r3") {
            // split at the '+' separating the two parts; the rational part
            // cannot contain '+' after its first character
            let plus = stripped[1..]
                .find('+')
                .map(|i| i + 1)
                .ok_or_else(|| Error::Parse(format!("missing rational part in {s:?}")))?;
            let a = parse_rational(&stripped[..plus])?;
            let b = parse_rational(&stripped[plus + 1..])?;
            Ok(Scalar::new(a, b))
        } else {
            Ok(Scalar::from_rational(parse_rational(s)?))
        }
    }
}

/// JSON codec `[[an, ad], [bn, bd]]` with arbitrary-precision integers.
impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        fn num<S: serde::Serializer>(x: &BigInt) -> std::result::Result<serde_json::Number, S::Error> {
            serde_json::Number::from_str(&x.to_string())
                .map_err(|e| serde::ser::Error::custom(format!("bigint to json: {e}")))
        }
        let v = serde_json::json!([
            [num::<S>(self.a.numer())?, num::<S>(self.a.denom())?],
            [num::<S>(self.b.numer())?, num::<S>(self.b.denom())?]
        ]);
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Scalar, D::Error> {
        use serde::de::Error as DeError;
        let v = serde_json::Value::deserialize(de)?;
        scalar_from_json(&v).map_err(|e| D::Error::custom(e.to_string()))
    }
}

pub fn scalar_from_json(v: &serde_json::Value) -> Result<Scalar> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("scalar must be [[an,ad],[bn,bd]], got {v}")))?;
    if arr.len() != 2 {
        return Err(Error::Parse(format!("scalar must have two parts, got {v}")));
    }
    let mut parts = Vec::with_capacity(2);
    for p in arr {
        let pair = p
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse(format!("scalar part must be [n,d], got {p}")))?;
        let n = json_bigint(&pair[0])?;
        let d = json_bigint(&pair[1])?;
        if d.is_zero() {
            return Err(Error::Parse("zero denominator in scalar".into()));
        }
        parts.push(Rational::new(n, d));
    }
    let b = parts.pop().unwrap();
    let a = parts.pop().unwrap();
    Ok(Scalar::new(a, b))
}

fn json_bigint(v: &serde_json::Value) -> Result<BigInt> {
    match v {
        serde_json::Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|e| Error::Parse(format!("not an integer: {n} ({e})"))),
        other => Err(Error::Parse(format!("expected integer, got {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(an: i64, ad: i64, bn: i64, bd: i64) -> Scalar {
        Scalar::new(rat(an, ad), rat(bn, bd))
    }

    #[test]
    fn add_mul_basics() {
        let one = Scalar::one();
        let r3 = Scalar::sqrt3();
        assert_eq!(&one + &r3, s(1, 1, 1, 1));
        assert_eq!(&r3 * &r3, Scalar::from_int(3));
    }

    #[test]
    fn inv_of_one_plus_sqrt3() {
        // (1 + r3)^-1 = -1/2 + (1/2) r3, checked by multiplying back
        let x = s(1, 1, 1, 1);
        let inv = x.inv().unwrap();
        assert_eq!(inv, s(-1, 2, 1, 2));
        assert!((x * inv).is_one());
    }

    #[test]
    fn inv_zero_fails() {
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn exact_signs() {
        assert_eq!(s(-2, 1, 1, 1).sign(), -1); // sqrt(3) < 2
        assert_eq!(s(-1, 1, 1, 1).sign(), 1); // sqrt(3) > 1
        assert_eq!(Scalar::zero().sign(), 0);
        assert_eq!(s(7, 4, -1, 1).sign(), 1); // 7/4 > sqrt(3)
        assert_eq!(s(12, 7, -1, 1).sign(), -1); // 12/7 < sqrt(3)
    }

    #[test]
    fn text_round_trip() {
        for x in [
            Scalar::zero(),
            s(-3, 4, 0, 1),
            s(0, 1, -1, 4),
            s(22, 7, 355, 113),
        ] {
            let t = x.to_string();
            assert_eq!(t.parse::<Scalar>().unwrap(), x, "round-trip of {t}");
        }
        assert_eq!(s(-3, 4, 0, 1).to_string(), "-3/4");
        assert_eq!(s(0, 1, -1, 4).to_string(), "0/1+-1/4*r3");
    }

    #[test]
    fn json_round_trip() {
        let x = s(-141, 32, 99, 32);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, "[[-141,32],[99,32]]");
        let back: Scalar = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_rejects_floats() {
        assert!(serde_json::from_str::<Scalar>("[[1.5,1],[0,1]]").is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (
            -50i64..50,
            1i64..20,
            -50i64..50,
            1i64..20,
        )
            .prop_map(|(an, ad, bn, bd)| s(an, ad, bn, bd))
    }

    proptest! {
        #[test]
        fn field_laws(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                let inv = x.inv().unwrap();
                prop_assert!((&x * &inv).is_one());
                prop_assert_eq!(inv.inv().unwrap(), x.clone());
            }
        }

        #[test]
        fn sign_is_multiplicative(x in arb_scalar(), y in arb_scalar()) {
            prop_assert!((&x * &x).sign() >= 0);
            prop_assert_eq!(x.sign() * y.sign(), (&x * &y).sign());
        }

        #[test]
        fn text_codec_round_trips(x in arb_scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
}
