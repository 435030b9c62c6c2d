//! Published reference values for the iterated transforms of the 6-cycle,
//! with per-entry comparison rules at the precision each value was printed.
//!
//! The Kemeny and Kirchhoff tables are reproduced by the one-step recursions
//! seeded with the tables' own base row. The printed base values `0.89` and
//! `10.67` are the two-decimal renderings of `8/9` and `32/3`; those exact
//! rationals are the only seeds that reproduce every later row at its
//! printed precision, so the harness uses them and flags the provenance
//! (see [`KNOWN_DISCREPANCIES`]). Four spanning-tree entries disagree with
//! the exact counts (confirmed independently by matrix-tree determinants on
//! the explicitly built graphs); they are flagged rather than matched.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{pow::pow, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Kemeny,
    Kirchhoff,
    SpanningTrees,
}

impl Quantity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Quantity::Kemeny => "kemeny",
            Quantity::Kirchhoff => "kirchhoff",
            Quantity::SpanningTrees => "spanning-trees",
        }
    }
}

/// How a computed value is compared against the printed reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchRule {
    /// |computed - printed| <= 0.005 (value printed with two decimals).
    TwoDecimals,
    /// Exact equality with an exactly printed integer.
    ExactInteger,
    /// |computed - printed| <= 10^unit_log10: one unit in the last
    /// significant printed digit, absorbing the reference's own rounding.
    WithinLastDigit { unit_log10: u32 },
    /// The computed value rounded to this many significant decimal digits
    /// must equal the printed mantissa.
    SignificantDigits { digits: u32 },
}

#[derive(Debug, Clone, Copy)]
pub struct ReferenceEntry {
    pub id: &'static str,
    pub quantity: Quantity,
    pub k: u64,
    pub n: u64,
    /// The value exactly as printed in the reference table.
    pub printed: &'static str,
    pub rule: MatchRule,
}

/// Exact seed for the Kemeny recursion; prints as the table's base value 0.89.
pub fn seed_kemeny() -> BigRational {
    BigRational::new(BigInt::from(8), BigInt::from(9))
}

/// Exact seed for the Kirchhoff recursion; prints as the table's base value 10.67.
pub fn seed_kirchhoff() -> BigRational {
    BigRational::new(BigInt::from(32), BigInt::from(3))
}

use MatchRule::*;
use Quantity::*;

pub const REFERENCE_ENTRIES: &[ReferenceEntry] = &[
    // Kemeny's constant, k = 1 (printed with two decimals)
    ReferenceEntry { id: "kemeny/H_0", quantity: Kemeny, k: 1, n: 0, printed: "0.89", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_1", quantity: Kemeny, k: 1, n: 1, printed: "42.44", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_2", quantity: Kemeny, k: 1, n: 2, printed: "458.22", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_3", quantity: Kemeny, k: 1, n: 3, printed: "3785.11", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_4", quantity: Kemeny, k: 1, n: 4, printed: "27907.56", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_5", quantity: Kemeny, k: 1, n: 5, printed: "193447.78", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_6", quantity: Kemeny, k: 1, n: 6, printed: "1290716.89", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_7", quantity: Kemeny, k: 1, n: 7, printed: "8394470.44", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H_8", quantity: Kemeny, k: 1, n: 8, printed: "53617686.22", rule: TwoDecimals },
    // Kemeny's constant, k = 2
    ReferenceEntry { id: "kemeny/H2_0", quantity: Kemeny, k: 2, n: 0, printed: "0.89", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_1", quantity: Kemeny, k: 2, n: 1, printed: "87.92", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_2", quantity: Kemeny, k: 2, n: 2, printed: "1622.01", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_3", quantity: Kemeny, k: 2, n: 3, printed: "23028.76", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_4", quantity: Kemeny, k: 2, n: 4, printed: "294109.21", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_5", quantity: Kemeny, k: 2, n: 5, printed: "3555757.33", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_6", quantity: Kemeny, k: 2, n: 6, printed: "41632025.66", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_7", quantity: Kemeny, k: 2, n: 7, printed: "477742069.94", rule: TwoDecimals },
    ReferenceEntry { id: "kemeny/H2_8", quantity: Kemeny, k: 2, n: 8, printed: "5410653999.62", rule: TwoDecimals },
    // Kirchhoff index, k = 1 (exact integers from level 1 on; the level-8
    // value is printed rounded to 15 significant digits)
    ReferenceEntry { id: "kirchhoff/H_0", quantity: Kirchhoff, k: 1, n: 0, printed: "10.67", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H_1", quantity: Kirchhoff, k: 1, n: 1, printed: "3056", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_2", quantity: Kirchhoff, k: 1, n: 2, printed: "197952", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_3", quantity: Kirchhoff, k: 1, n: 3, printed: "9811008", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_4", quantity: Kirchhoff, k: 1, n: 4, printed: "434018304", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_5", quantity: Kirchhoff, k: 1, n: 5, printed: "18050999040", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_6", quantity: Kirchhoff, k: 1, n: 6, printed: "722636246016", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_7", quantity: Kirchhoff, k: 1, n: 7, printed: "28198973740032", rule: ExactInteger },
    ReferenceEntry { id: "kirchhoff/H_8", quantity: Kirchhoff, k: 1, n: 8, printed: "1080685483941890", rule: WithinLastDigit { unit_log10: 1 } },
    // Kirchhoff index, k = 2 (two decimals up to level 5, then rounded
    // integer renderings)
    ReferenceEntry { id: "kirchhoff/H2_0", quantity: Kirchhoff, k: 2, n: 0, printed: "10.67", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H2_1", quantity: Kirchhoff, k: 2, n: 1, printed: "11605.33", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H2_2", quantity: Kirchhoff, k: 2, n: 2, printed: "2355164.95", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H2_3", quantity: Kirchhoff, k: 2, n: 3, printed: "367815398.31", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H2_4", quantity: Kirchhoff, k: 2, n: 4, printed: "51672635965.05", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H2_5", quantity: Kirchhoff, k: 2, n: 5, printed: "6871899281276.09", rule: TwoDecimals },
    ReferenceEntry { id: "kirchhoff/H2_6", quantity: Kirchhoff, k: 2, n: 6, printed: "885044076026391", rule: WithinLastDigit { unit_log10: 0 } },
    ReferenceEntry { id: "kirchhoff/H2_7", quantity: Kirchhoff, k: 2, n: 7, printed: "11171809693029e4", rule: WithinLastDigit { unit_log10: 4 } },
    ReferenceEntry { id: "kirchhoff/H2_8", quantity: Kirchhoff, k: 2, n: 8, printed: "139178608420502e5", rule: WithinLastDigit { unit_log10: 5 } },
    // Spanning trees (integers where printed that way, otherwise 15
    // significant digits in scientific form)
    ReferenceEntry { id: "tau/H_0", quantity: SpanningTrees, k: 1, n: 0, printed: "6", rule: ExactInteger },
    ReferenceEntry { id: "tau/H_1", quantity: SpanningTrees, k: 1, n: 1, printed: "241943", rule: ExactInteger },
    ReferenceEntry { id: "tau/H_2", quantity: SpanningTrees, k: 1, n: 2, printed: "6.71512031151729e32", rule: SignificantDigits { digits: 15 } },
    ReferenceEntry { id: "tau/H2_0", quantity: SpanningTrees, k: 2, n: 0, printed: "6", rule: ExactInteger },
    ReferenceEntry { id: "tau/H2_1", quantity: SpanningTrees, k: 2, n: 1, printed: "8426691368", rule: ExactInteger },
    ReferenceEntry { id: "tau/H2_2", quantity: SpanningTrees, k: 2, n: 2, printed: "8.04003508846179e109", rule: SignificantDigits { digits: 15 } },
];

/// A reference entry expected to disagree with the recomputed value, with
/// the reason. The validation run is green when every mismatch it finds is
/// listed here (and every entry here does mismatch).
#[derive(Debug, Clone, Copy)]
pub struct KnownDiscrepancy {
    pub id: &'static str,
    pub explanation: &'static str,
}

pub const KNOWN_DISCREPANCIES: &[KnownDiscrepancy] = &[
    KnownDiscrepancy {
        id: "tau/H_1",
        explanation: "printed 241943; the closed form and the exact matrix-tree count of the \
                      built 30-vertex graph both give 233280",
    },
    KnownDiscrepancy {
        id: "tau/H2_1",
        explanation: "printed 8426691368; the closed form and the exact matrix-tree count of \
                      the built 54-vertex graph both give 7878281250",
    },
    KnownDiscrepancy {
        id: "tau/H_2",
        explanation: "printed mantissa deviates in its 15th significant digit: the exact count \
                      is 671512031151727574620569600000000 = 5^8 * 6^35, which rounds to \
                      6.71512031151728e32, confirmed by the matrix-tree determinant of the \
                      built 174-vertex graph",
    },
    KnownDiscrepancy {
        id: "tau/H2_2",
        explanation: "printed mantissa deviates beyond its 13th significant digit: the exact \
                      count 7^58 * 5^86 * 6 rounds to 8.04003508846168e109",
    },
    KnownDiscrepancy {
        id: "seed/kemeny",
        explanation: "the reference tables seed their Kemeny column with 0.89 (exactly 8/9), \
                      but the reciprocal eigenvalue sum of the base 6-cycle is 35/6 = 5.83; the \
                      tables are reproduced with their own seed and the spectral value is \
                      reported separately",
    },
    KnownDiscrepancy {
        id: "seed/kirchhoff",
        explanation: "the reference tables seed their Kirchhoff column with 10.67 (exactly \
                      32/3), but 2 E K of the base 6-cycle is 70; the tables are reproduced \
                      with their own seed and the spectral value is reported separately",
    },
];

pub fn known_discrepancy(id: &str) -> Option<&'static KnownDiscrepancy> {
    KNOWN_DISCREPANCIES.iter().find(|d| d.id == id)
}

/// Parses a printed table value ("42.44", "3056", "11171809693029e4",
/// "6.71512031151729e32") into an exact rational.
pub fn parse_printed(s: &str) -> BigRational {
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().expect("exponent")),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    let value: BigInt = digits.parse().expect("decimal digits");
    let shift = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    if shift >= 0 {
        BigRational::from_integer(value * pow(ten, shift as usize))
    } else {
        BigRational::new(value, pow(ten, (-shift) as usize))
    }
}

/// Rounds a positive rational to `digits` significant decimal digits,
/// returning the mantissa and the power of ten of its last digit
/// (value ~ mantissa * 10^exp10).
pub fn round_significant(x: &BigRational, digits: u32) -> (BigUint, i64) {
    assert!(x.is_positive() && digits > 0);
    let ten = BigInt::from(10);
    // order of magnitude: largest p with 10^p <= x
    let mut p: i64 = 0;
    let mut scaled = x.clone();
    let one = BigRational::from_integer(BigInt::from(1));
    let ten_r = BigRational::from_integer(ten.clone());
    while scaled >= ten_r {
        scaled /= &ten_r;
        p += 1;
    }
    while scaled < one {
        scaled *= &ten_r;
        p -= 1;
    }
    // mantissa * 10^(digits-1) rounded half away from zero
    let m = (scaled * BigRational::from_integer(pow(ten.clone(), digits as usize - 1)))
        .round()
        .to_integer();
    let mut mantissa = m.to_biguint().expect("positive");
    let mut exp = p - (digits as i64 - 1);
    // rounding may carry into one extra digit (e.g. 9.99 -> 10.0)
    if mantissa >= pow(BigUint::from(10u32), digits as usize) {
        mantissa /= 10u32;
        exp += 1;
    }
    (mantissa, exp)
}

/// Applies a [`MatchRule`], returning whether the computed value matches the
/// printed one.
pub fn rule_matches(rule: MatchRule, computed: &BigRational, printed: &str) -> bool {
    let reference = parse_printed(printed);
    match rule {
        MatchRule::TwoDecimals => {
            let diff = (computed - &reference).abs();
            diff <= BigRational::new(BigInt::from(1), BigInt::from(200))
        }
        MatchRule::ExactInteger => computed == &reference,
        MatchRule::WithinLastDigit { unit_log10 } => {
            let unit = BigRational::from_integer(pow(BigInt::from(10), unit_log10 as usize));
            (computed - &reference).abs() <= unit
        }
        MatchRule::SignificantDigits { digits } => {
            if computed.is_zero() || !computed.is_positive() {
                return computed == &reference;
            }
            round_significant(computed, digits) == round_significant(&reference, digits)
        }
    }
}
