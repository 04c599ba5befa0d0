//! Exact rational grades on the unit interval.
//!
//! Every membership degree and every threshold is a [`Grade`]: a reduced
//! fraction `p/q` with `0 <= p <= q`. Comparisons are exact, so level cuts
//! and the suprema/infima over finite images need no tolerance.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A rational number in `[0, 1]`, always stored in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<u64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Builds `numerator / denominator`, reducing to lowest terms.
    pub fn new(numerator: u64, denominator: u64) -> Result<Grade> {
        if denominator == 0 {
            return Err(Error::MalformedGrade(format!("{numerator}/0")));
        }
        if numerator > denominator {
            return Err(Error::OutOfRange(format!("{numerator}/{denominator}")));
        }
        Ok(Grade(Ratio::new(numerator, denominator)))
    }

    pub fn numerator(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denominator(&self) -> u64 {
        *self.0.denom()
    }

    /// `1 - self`.
    pub fn complement(self) -> Grade {
        Grade(Ratio::new_raw(
            self.denominator() - self.numerator(),
            self.denominator(),
        ))
    }

    /// Exact sum, which may leave the unit interval; used for the
    /// `mu + lambda <= 1` constraint.
    pub fn sum_at_most_one(self, other: Grade) -> bool {
        // a/b + c/d <= 1  <=>  a*d + c*b <= b*d, evaluated in u128
        let (a, b) = (self.numerator() as u128, self.denominator() as u128);
        let (c, d) = (other.numerator() as u128, other.denominator() as u128);
        a * d + c * b <= b * d
    }

    pub fn is_zero(&self) -> bool {
        self.numerator() == 0
    }

    pub fn is_one(&self) -> bool {
        self.numerator() == self.denominator()
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator() as f64 / self.denominator() as f64
    }
}

/// Parses the textual form `p/q` or `p`.
pub fn grade_parse(text: &str) -> Result<Grade> {
    let malformed = || Error::MalformedGrade(text.to_string());
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());

    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    if let Some(rest) = num.strip_prefix('-') {
        if digits(rest) && den.is_none_or(digits) {
            let zero = rest.bytes().all(|b| b == b'0');
            if !zero {
                return Err(Error::OutOfRange(text.to_string()));
            }
        }
        return Err(malformed());
    }
    if !digits(num) || !den.is_none_or(digits) {
        return Err(malformed());
    }
    let numerator: u64 = num.parse().map_err(|_| Error::GradeOverflow)?;
    let denominator: u64 = match den {
        Some(d) => d.parse().map_err(|_| Error::GradeOverflow)?,
        None => 1,
    };
    if denominator == 0 {
        return Err(malformed());
    }
    if numerator > denominator {
        return Err(Error::OutOfRange(text.to_string()));
    }
    Grade::new(numerator, denominator)
}

pub fn grade_complement(g: Grade) -> Grade {
    g.complement()
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Grade> {
        grade_parse(s)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator() == 1 {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "{}/{}", self.numerator(), self.denominator())
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shorthand for literal grades in tests and examples. Panics on invalid input.
pub fn g(text: &str) -> Grade {
    grade_parse(text).unwrap_or_else(|e| panic!("invalid grade literal: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(grade_parse("1/2").unwrap(), Grade::new(1, 2).unwrap());
        let zero = grade_parse("0").unwrap();
        assert_eq!((zero.numerator(), zero.denominator()), (0, 1));
        assert!(matches!(grade_parse("7/5"), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "/", "1/", "/2", "a", "1/2/3", "0.5", "1/0", " 1", "+1", "-"] {
            assert!(
                matches!(grade_parse(bad), Err(Error::MalformedGrade(_))),
                "{bad:?} should be malformed"
            );
        }
        assert!(matches!(grade_parse("-1/2"), Err(Error::OutOfRange(_))));
        assert!(matches!(
            grade_parse("99999999999999999999999"),
            Err(Error::GradeOverflow)
        ));
    }

    #[test]
    fn parse_reduces() {
        let x = grade_parse("6/10").unwrap();
        assert_eq!((x.numerator(), x.denominator()), (3, 5));
        assert_eq!(x, grade_parse("3/5").unwrap());
        assert_eq!(grade_parse("4/4").unwrap(), Grade::ONE);
        assert_eq!(grade_parse("0/7").unwrap(), Grade::ZERO);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(grade_complement(Grade::ZERO), Grade::ONE);
        assert_eq!(grade_complement(g("1/3")), g("2/3"));
        assert_eq!(grade_complement(grade_complement(g("2/7"))), g("2/7"));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Grade::ZERO.to_string(), "0");
        assert_eq!(Grade::ONE.to_string(), "1");
        assert_eq!(g("2/10").to_string(), "1/5");
    }

    #[test]
    fn sum_constraint_is_exact() {
        assert!(g("1/2").sum_at_most_one(g("1/2")));
        assert!(!g("9/10").sum_at_most_one(g("2/10")));
        assert!(g("1/3").sum_at_most_one(g("2/3")));
        let big = Grade::new(u64::MAX - 1, u64::MAX).unwrap();
        assert!(!big.sum_at_most_one(g("1/2")));
        assert!(big.sum_at_most_one(big.complement()));
    }

    fn arb_grade() -> impl Strategy<Value = Grade> {
        (1u64..1_000_000)
            .prop_flat_map(|d| (0..=d, Just(d)))
            .prop_map(|(n, d)| Grade::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn complement_involution_and_range(x in arb_grade()) {
            prop_assert!(x >= Grade::ZERO && x <= Grade::ONE);
            prop_assert_eq!(x.complement().complement(), x);
        }

        #[test]
        fn reduced_and_round_trips(x in arb_grade()) {
            prop_assert_eq!(num_integer_gcd(x.numerator(), x.denominator()), 1);
            prop_assert_eq!(grade_parse(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn total_order(x in arb_grade(), y in arb_grade()) {
            let n = [x < y, x == y, x > y].iter().filter(|b| **b).count();
            prop_assert_eq!(n, 1);
        }

        #[test]
        fn min_max_are_members(xs in proptest::collection::vec(arb_grade(), 1..20)) {
            let lo = *xs.iter().min().unwrap();
            let hi = *xs.iter().max().unwrap();
            prop_assert!(xs.contains(&lo) && xs.contains(&hi));
        }
    }

    fn num_integer_gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
}
