//! Exact membership grades.
//!
//! A [`Grade`] is a decimal fixed-point number in `[0, 1]`, stored as an
//! integer count of `10^-18` units. Every operation the algebra performs on
//! grades is a `min` or a `max`, so no rounding ever happens after parsing
//! and equality is exact.
//!
//! The precision accepted from text is governed by a [`GradeScale`]
//! (default: six decimal digits). Input with more fractional digits than the
//! scale allows is rejected rather than rounded.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Number of decimal digits in the internal representation.
pub const MAX_DIGITS: u8 = 18;

const ONE_UNITS: u64 = 1_000_000_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradeError {
    #[error("grade `{0}` is not a decimal number")]
    Malformed(String),
    #[error("grade `{0}` lies outside [0, 1]")]
    OutOfRange(String),
    #[error("grade `{text}` has more than {digits} fractional digits")]
    TooPrecise { text: String, digits: u8 },
    #[error("grade scale of {0} digits exceeds the maximum of {MAX_DIGITS}")]
    InvalidScale(u8),
}

/// A membership value in `[0, 1]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grade(u64);

impl Grade {
    pub const ZERO: Grade = Grade(0);
    pub const ONE: Grade = Grade(ONE_UNITS);

    /// Builds `numerator / 10^digits`. Returns `None` if the value exceeds 1
    /// or `digits` exceeds [`MAX_DIGITS`].
    pub fn from_decimal(numerator: u64, digits: u8) -> Option<Grade> {
        if digits > MAX_DIGITS {
            return None;
        }
        let factor = 10u64.pow(u32::from(MAX_DIGITS - digits));
        let units = numerator.checked_mul(factor)?;
        (units <= ONE_UNITS).then_some(Grade(units))
    }

    /// `k / 10`, the points of the 11-step scale used by the generators.
    pub fn tenths(k: u8) -> Grade {
        Grade::from_decimal(u64::from(k), 1).expect("tenths out of range")
    }

    pub fn units(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == ONE_UNITS
    }

    pub fn join(self, other: Grade) -> Grade {
        self.max(other)
    }

    pub fn meet(self, other: Grade) -> Grade {
        self.min(other)
    }

    /// Absolute difference, used only by tolerance-relaxed comparisons.
    pub fn distance(self, other: Grade) -> Grade {
        Grade(self.0.abs_diff(other.0))
    }

    /// Number of fractional digits needed to print this grade exactly.
    pub fn significant_digits(self) -> u8 {
        let frac = self.0 % ONE_UNITS;
        if frac == 0 {
            return 0;
        }
        let mut digits = MAX_DIGITS;
        let mut rest = frac;
        while rest.is_multiple_of(10) {
            rest /= 10;
            digits -= 1;
        }
        digits
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / ONE_UNITS as f64
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / ONE_UNITS;
        let digits = self.significant_digits();
        if digits == 0 {
            return write!(f, "{whole}");
        }
        let frac = (self.0 % ONE_UNITS) / 10u64.pow(u32::from(MAX_DIGITS - digits));
        write!(f, "{whole}.{frac:0width$}", width = usize::from(digits))
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grade({self})")
    }
}

impl FromStr for Grade {
    type Err = GradeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GradeScale::MAX.parse(s)
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Precision accepted when parsing grades from text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradeScale {
    digits: u8,
}

impl Default for GradeScale {
    fn default() -> Self {
        GradeScale { digits: 6 }
    }
}

impl GradeScale {
    pub const MAX: GradeScale = GradeScale { digits: MAX_DIGITS };

    pub fn new(digits: u8) -> Result<Self, GradeError> {
        if digits > MAX_DIGITS {
            return Err(GradeError::InvalidScale(digits));
        }
        Ok(GradeScale { digits })
    }

    pub fn digits(self) -> u8 {
        self.digits
    }

    /// Whether `grade` can be written within this scale.
    pub fn admits(self, grade: Grade) -> bool {
        grade.significant_digits() <= self.digits
    }

    /// Parses a plain decimal such as `1`, `0.75` or `.5`.
    pub fn parse(self, text: &str) -> Result<Grade, GradeError> {
        let s = text.trim();
        let malformed = || GradeError::Malformed(text.to_string());
        let (whole, frac) = match s.split_once('.') {
            Some((w, f)) => (w, f),
            None => (s, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(malformed());
        }
        if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > usize::from(self.digits) {
            return Err(GradeError::TooPrecise {
                text: text.to_string(),
                digits: self.digits,
            });
        }
        let whole = whole.trim_start_matches('0');
        let whole_units = match whole {
            "" => 0,
            "1" => ONE_UNITS,
            _ => return Err(GradeError::OutOfRange(text.to_string())),
        };
        let frac_units = if frac.is_empty() {
            0
        } else {
            let value: u64 = frac.parse().map_err(|_| malformed())?;
            value * 10u64.pow(u32::from(MAX_DIGITS) - frac.len() as u32)
        };
        let units = whole_units + frac_units;
        if units > ONE_UNITS {
            return Err(GradeError::OutOfRange(text.to_string()));
        }
        Ok(Grade(units))
    }
}

/// The 11-point alphabet `{0, 0.1, ..., 1.0}`.
pub fn eleven_point_alphabet() -> Vec<Grade> {
    (0..=10).map(Grade::tenths).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let scale = GradeScale::default();
        for (text, shown) in [
            ("0", "0"),
            ("1", "1"),
            ("1.000", "1"),
            ("0.8", "0.8"),
            (".25", "0.25"),
            ("0.000001", "0.000001"),
        ] {
            assert_eq!(scale.parse(text).unwrap().to_string(), shown);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let scale = GradeScale::default();
        assert!(matches!(scale.parse("1.5"), Err(GradeError::OutOfRange(_))));
        assert!(matches!(scale.parse("2"), Err(GradeError::OutOfRange(_))));
        assert!(matches!(scale.parse("-0.1"), Err(GradeError::Malformed(_))));
        assert!(matches!(
            scale.parse("0.1e2"),
            Err(GradeError::Malformed(_))
        ));
        assert!(matches!(scale.parse("."), Err(GradeError::Malformed(_))));
        assert!(matches!(scale.parse(""), Err(GradeError::Malformed(_))));
        assert!(matches!(
            scale.parse("0.0000001"),
            Err(GradeError::TooPrecise { .. })
        ));
        // trailing zeros do not count against the scale
        assert_eq!(scale.parse("0.5000000000").unwrap(), Grade::tenths(5));
        assert!(GradeScale::new(19).is_err());
    }

    #[test]
    fn finer_scale_accepts_more_digits() {
        let fine = GradeScale::new(9).unwrap();
        let g = fine.parse("0.123456789").unwrap();
        assert_eq!(g.significant_digits(), 9);
        assert!(!GradeScale::default().admits(g));
        assert!(fine.admits(g));
    }

    #[test]
    fn lattice_ops_pick_an_operand() {
        let a = Grade::tenths(3);
        let b = Grade::tenths(8);
        assert_eq!(a.join(b), b);
        assert_eq!(a.meet(b), a);
        assert_eq!(Grade::ZERO.join(Grade::ONE), Grade::ONE);
        assert_eq!(Grade::from_decimal(8, 1), Some(Grade::tenths(8)));
        assert_eq!(Grade::from_decimal(11, 1), None);
    }

    #[test]
    fn serde_uses_decimal_strings() {
        let json = serde_json::to_string(&Grade::tenths(7)).unwrap();
        assert_eq!(json, "\"0.7\"");
        let back: Grade = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Grade::tenths(7));
        assert!(serde_json::from_str::<Grade>("0.7").is_err());
    }
}
