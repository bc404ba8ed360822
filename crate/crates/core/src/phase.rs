//! Roots of unity with exact rational exponents.

use std::fmt;
use std::ops::{Div, DivAssign, Mul, MulAssign};
use std::str::FromStr;

use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// The root of unity `exp(2πi·num/den)`, stored as a reduced fraction in `[0, 1)`.
///
/// The group law is written multiplicatively: `a * b` adds exponents mod 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Phase {
    num: u64,
    den: u64,
}

impl Phase {
    pub const ONE: Phase = Phase { num: 0, den: 1 };
    pub const MINUS_ONE: Phase = Phase { num: 1, den: 2 };
    pub const I: Phase = Phase { num: 1, den: 4 };

    /// `exp(2πi·num/den)`. Panics if `den == 0`.
    pub fn new(num: i64, den: u64) -> Phase {
        assert!(den > 0, "phase denominator must be positive");
        let r = num.rem_euclid(den as i64) as u64;
        let g = r.gcd(&den);
        Phase { num: r / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Multiplicative order of the root of unity.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn inv(self) -> Phase {
        if self.num == 0 {
            self
        } else {
            Phase { num: self.den - self.num, den: self.den }
        }
    }

    pub fn pow(self, k: i64) -> Phase {
        let num = (self.num as i128 * k as i128).rem_euclid(self.den as i128) as i64;
        Phase::new(num, self.den)
    }

    /// Exponent numerator over a multiple `m` of the denominator.
    pub fn numerator_over(&self, m: u64) -> u64 {
        debug_assert_eq!(m % self.den, 0);
        self.num * (m / self.den)
    }

    pub fn to_complex<T: Float + FloatConst>(&self) -> Complex<T> {
        let angle = T::TAU() * T::from(self.num).unwrap() / T::from(self.den).unwrap();
        Complex::from_polar(T::one(), angle)
    }

    /// Symbolic form used in dense exports, e.g. `e(1/4)`.
    pub fn symbolic(&self) -> String {
        format!("e({})", self)
    }
}

impl Default for Phase {
    fn default() -> Self {
        Phase::ONE
    }
}

impl Mul for Phase {
    type Output = Phase;
    fn mul(self, rhs: Phase) -> Phase {
        if self.den == rhs.den {
            let s = self.num + rhs.num;
            return Phase::new((s % self.den) as i64, self.den);
        }
        let l = self.den.lcm(&rhs.den);
        let s = (self.num * (l / self.den) + rhs.num * (l / rhs.den)) % l;
        Phase::new(s as i64, l)
    }
}

impl Div for Phase {
    type Output = Phase;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Phase) -> Phase {
        self * rhs.inv()
    }
}

impl MulAssign for Phase {
    fn mul_assign(&mut self, rhs: Phase) {
        *self = *self * rhs;
    }
}

impl DivAssign for Phase {
    fn div_assign(&mut self, rhs: Phase) {
        *self = *self / rhs;
    }
}

impl std::iter::Product for Phase {
    fn product<I: Iterator<Item = Phase>>(iter: I) -> Phase {
        iter.fold(Phase::ONE, |a, b| a * b)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Phase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Phase, Error> {
        let bad = || Error::InvalidPhase(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: i64 = n.parse().map_err(|_| bad())?;
        let den: u64 = d.parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Phase::new(num, den))
    }
}

impl Serialize for Phase {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Phase {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Phase, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
