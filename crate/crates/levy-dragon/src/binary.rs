//! Binary expansions of points in the unit interval.
//!
//! A point x ∈ [0,1] is handled through the digits of x = Σ ωₙ 2^{-n}.
//! Two conventions are fixed once here and relied on everywhere else:
//! a dyadic point uses its terminating expansion (trailing zeros, never a
//! tail of ones), and x = 1 is the special all-ones word.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// A binary word: either the terminating expansion of a dyadic point
/// (digits stored with trailing zeros stripped, so the last stored digit
/// is always 1), or the all-ones expansion of x = 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryWord {
    digits: Vec<u8>,
    is_one: bool,
}

impl BinaryWord {
    /// The empty word, x = 0.
    pub fn zero() -> Self {
        Self { digits: Vec::new(), is_one: false }
    }

    /// The all-ones word, x = 1.
    pub fn one() -> Self {
        Self { digits: Vec::new(), is_one: true }
    }

    /// Builds a word from explicit digits, canonicalizing by stripping
    /// trailing zeros (they do not change the value). Digits must be 0 or 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "binary digits must be 0 or 1");
        let mut digits = bits.to_vec();
        while digits.last() == Some(&0) {
            digits.pop();
        }
        Self { digits, is_one: false }
    }

    pub fn is_one(&self) -> bool {
        self.is_one
    }

    pub fn is_zero(&self) -> bool {
        !self.is_one && self.digits.is_empty()
    }

    /// Number of stored digits; the last one is a 1 whenever width > 0.
    pub fn width(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// The digit ωₙ, 1-indexed. Beyond the stored width the expansion
    /// continues with zeros (or ones for x = 1).
    pub fn digit(&self, n: usize) -> u8 {
        debug_assert!(n >= 1);
        if self.is_one {
            1
        } else {
            self.digits.get(n - 1).copied().unwrap_or(0)
        }
    }

    /// q(x, n): how many of the first n digits are 1; q(x, 0) = 0.
    pub fn ones_in_prefix(&self, n: usize) -> usize {
        if self.is_one {
            return n;
        }
        self.digits[..n.min(self.digits.len())].iter().filter(|&&b| b == 1).count()
    }

    /// Drops ω₁: the word of 2x mod 1 (or of x = 1, unchanged, since the
    /// all-ones expansion is shift-invariant). `None` for x = 0, which has
    /// no digit to drop; recursions treat that as their base case.
    pub fn shift_left(&self) -> Option<Self> {
        if self.is_one {
            Some(Self::one())
        } else if self.digits.is_empty() {
            None
        } else {
            Some(Self::from_bits(&self.digits[1..]))
        }
    }

    /// The exact value of the word as a fraction.
    pub fn to_rational(&self) -> BigRational {
        if self.is_one {
            return BigRational::one();
        }
        let mut num = BigInt::zero();
        for &d in &self.digits {
            num = num * 2 + d;
        }
        let den = BigInt::one() << self.digits.len();
        BigRational::new(num, den)
    }
}

impl std::fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_one {
            write!(f, "1b")
        } else if self.digits.is_empty() {
            write!(f, "0b")
        } else {
            write!(f, "0.")?;
            for d in &self.digits {
                write!(f, "{d}")?;
            }
            write!(f, "b")
        }
    }
}

/// If x is dyadic (reduced denominator a power of two), the exponent of
/// that power: the width of the terminating expansion.
pub fn dyadic_width(x: &BigRational) -> Option<usize> {
    let den = x.denom().magnitude();
    let tz = den.trailing_zeros().unwrap_or(0);
    if den.bits() == tz + 1 {
        Some(tz as usize)
    } else {
        None
    }
}

/// First n_digits binary digits of x ∈ [0,1] by exact long division,
/// canonicalized. x = 1 yields the all-ones word; a dyadic x whose width
/// is within n_digits yields its complete terminating expansion.
pub fn expand(x: &BigRational, n_digits: usize) -> Result<BinaryWord, Error> {
    if x.is_negative() || x > &BigRational::one() {
        return Err(Error::OutOfRange(x.to_string()));
    }
    if x.is_one() {
        return Ok(BinaryWord::one());
    }
    let mut num = x.numer().clone();
    let den = x.denom().clone();
    let mut bits = Vec::with_capacity(n_digits);
    for _ in 0..n_digits {
        if num.is_zero() {
            break;
        }
        num *= 2;
        if num >= den {
            bits.push(1);
            num -= &den;
        } else {
            bits.push(0);
        }
    }
    Ok(BinaryWord::from_bits(&bits))
}

/// A parsed point on the unit interval: either digit-exact (binary
/// literal) or a fraction still to be expanded.
#[derive(Clone, Debug)]
pub enum PointInput {
    Word(BinaryWord),
    Rational(BigRational),
}

/// Parses the accepted point syntaxes: binary literal with a `b` suffix
/// ("0.0101b", "1b"), fraction "p/q", or decimal string ("0.75", "1").
pub fn parse_point(s: &str) -> Result<PointInput, Error> {
    let s = s.trim();
    if let Some(body) = s.strip_suffix(['b', 'B']) {
        return parse_binary_literal(body).map(PointInput::Word);
    }
    let x = if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| Error::Parse(format!("numerator {p:?}")))?;
        let q: BigInt = q.trim().parse().map_err(|_| Error::Parse(format!("denominator {q:?}")))?;
        if q.is_zero() {
            return Err(Error::Parse(format!("{s:?} (zero denominator)")));
        }
        BigRational::new(p, q)
    } else {
        parse_decimal(s)?
    };
    if x.is_negative() || x > BigRational::one() {
        return Err(Error::OutOfRange(x.to_string()));
    }
    Ok(PointInput::Rational(x))
}

fn parse_binary_literal(body: &str) -> Result<BinaryWord, Error> {
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    let err = || Error::Parse(format!("binary literal {body:?}b"));
    if !frac_part.bytes().all(|c| c == b'0' || c == b'1') {
        return Err(err());
    }
    let bits: Vec<u8> = frac_part.bytes().map(|c| c - b'0').collect();
    match int_part {
        "0" | "" => Ok(BinaryWord::from_bits(&bits)),
        "1" => {
            if bits.iter().all(|&b| b == 0) {
                Ok(BinaryWord::one())
            } else {
                Err(Error::OutOfRange(format!("1.{frac_part}b")))
            }
        }
        _ => Err(err()),
    }
}

fn parse_decimal(s: &str) -> Result<BigRational, Error> {
    let err = || Error::Parse(format!("{s:?}"));
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part.bytes().all(|c| c.is_ascii_digit()) || !frac_part.bytes().all(|c| c.is_ascii_digit()) {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let num: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| err())? };
    let den = BigInt::from(10u32).pow(frac_part.len() as u32);
    Ok(BigRational::new(num, den))
}

/// Resolves a parsed point to a word plus a completeness flag: `true`
/// when the word is the entire expansion (binary literals and dyadic
/// fractions), `false` when it is an n-digit prefix of a non-terminating
/// expansion.
pub fn to_word(input: &PointInput, n_digits: usize) -> Result<(BinaryWord, bool), Error> {
    match input {
        PointInput::Word(w) => Ok((w.clone(), true)),
        PointInput::Rational(x) => match dyadic_width(x) {
            Some(width) => Ok((expand(x, width)?, true)),
            None => Ok((expand(x, n_digits)?, false)),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    // Oracle: plain u64 long division, independent of expand().
    fn digits_u64(mut p: u64, q: u64, n: usize) -> Vec<u8> {
        let mut out = Vec::new();
        for _ in 0..n {
            p *= 2;
            if p >= q {
                out.push(1);
                p -= q;
            } else {
                out.push(0);
            }
        }
        out
    }

    #[test]
    fn expansion_of_one_third() {
        assert_eq!(digits_u64(1, 3, 6), vec![0, 1, 0, 1, 0, 1]);
        let w = expand(&ratio(1, 3), 6).unwrap();
        assert_eq!(w.digits(), &[0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn expansion_of_two_thirds() {
        assert_eq!(digits_u64(2, 3, 5), vec![1, 0, 1, 0, 1]);
        let w = expand(&ratio(2, 3), 5).unwrap();
        assert_eq!(w.digits(), &[1, 0, 1, 0, 1]);
    }

    #[test]
    fn dyadic_expansion_terminates_with_zeros() {
        // 1/2 over four digits is (1,0,0,0), canonically stored as (1):
        // the terminating expansion is chosen, never 0111....
        let w = expand(&ratio(1, 2), 4).unwrap();
        assert_eq!(w.digits(), &[1]);
        assert_eq!(w.width(), 1);
        assert_eq!((w.digit(1), w.digit(2), w.digit(4)), (1, 0, 0));

        let w = expand(&ratio(11, 16), 12).unwrap();
        assert_eq!(w.digits(), &[1, 0, 1, 1]);
    }

    #[test]
    fn endpoints() {
        assert!(expand(&ratio(0, 1), 5).unwrap().is_zero());
        let one = expand(&ratio(1, 1), 5).unwrap();
        assert!(one.is_one());
        assert_eq!(one.digit(37), 1);
        assert_eq!(one.ones_in_prefix(9), 9);
        assert!(expand(&ratio(3, 2), 4).is_err());
        assert!(expand(&ratio(-1, 2), 4).is_err());
    }

    #[test]
    fn prefix_counts() {
        let w = BinaryWord::from_bits(&[1, 0, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(w.ones_in_prefix(0), 0);
        assert_eq!(w.ones_in_prefix(5), 3);
        assert_eq!(w.ones_in_prefix(9), 5);
        assert_eq!(w.ones_in_prefix(100), 5);
        for n in 0..20 {
            let step = w.ones_in_prefix(n + 1) - w.ones_in_prefix(n);
            assert_eq!(step as u8, w.digit(n + 1));
        }
    }

    #[test]
    fn shift_drops_the_leading_digit() {
        let w = BinaryWord::from_bits(&[1, 0, 1, 1]);
        assert_eq!(w.shift_left().unwrap().digits(), &[0, 1, 1]);
        assert_eq!(BinaryWord::from_bits(&[1]).shift_left().unwrap(), BinaryWord::zero());
        assert_eq!(BinaryWord::one().shift_left().unwrap(), BinaryWord::one());
        assert_eq!(BinaryWord::zero().shift_left(), None);
    }

    #[test]
    fn shift_matches_doubling() {
        // shift_left(expand(x, n)) = expand(2x mod 1, n-1) on dyadics.
        for denom_pow in 1..=8u32 {
            let den = 1i64 << denom_pow;
            for m in 1..den {
                let x = ratio(m, den);
                let w = expand(&x, 12).unwrap();
                let doubled = ratio((2 * m) % den, den);
                assert_eq!(w.shift_left().unwrap(), expand(&doubled, 11).unwrap());
            }
        }
    }

    #[test]
    fn reinterpreting_the_prefix_stays_close() {
        for (p, q, n) in [(1i64, 3i64, 8usize), (2, 7, 13), (5, 11, 20), (13, 29, 30)] {
            let x = ratio(p, q);
            let w = expand(&x, n).unwrap();
            let diff = (&x - w.to_rational()).abs();
            let bound = BigRational::new(BigInt::from(1), BigInt::from(1) << n);
            assert!(diff < bound, "{p}/{q} at {n} digits: diff {diff}");
        }
    }

    #[test]
    fn parsing() {
        match parse_point("0.100110110b").unwrap() {
            PointInput::Word(w) => assert_eq!(w.digits(), &[1, 0, 0, 1, 1, 0, 1, 1]),
            other => panic!("expected word, got {other:?}"),
        }
        match parse_point("1b").unwrap() {
            PointInput::Word(w) => assert!(w.is_one()),
            other => panic!("expected word, got {other:?}"),
        }
        match parse_point("3/4").unwrap() {
            PointInput::Rational(x) => assert_eq!(x, ratio(3, 4)),
            other => panic!("expected rational, got {other:?}"),
        }
        match parse_point("0.75").unwrap() {
            PointInput::Rational(x) => assert_eq!(x, ratio(3, 4)),
            other => panic!("expected rational, got {other:?}"),
        }
        assert!(parse_point("5/4").is_err());
        assert!(parse_point("1/0").is_err());
        assert!(parse_point("0.2x1b").is_err());
        assert!(parse_point("abc").is_err());
        assert!(parse_point("-0.5").is_err());
    }

    #[test]
    fn word_resolution() {
        let (w, complete) = to_word(&parse_point("3/4").unwrap(), 4).unwrap();
        assert!(complete);
        assert_eq!(w.digits(), &[1, 1]);
        // Dyadic inputs resolve to their full expansion even when it is
        // wider than the requested digit budget.
        let (w, complete) = to_word(&parse_point("1/1024").unwrap(), 4).unwrap();
        assert!(complete);
        assert_eq!(w.width(), 10);
        let (w, complete) = to_word(&parse_point("1/3").unwrap(), 8).unwrap();
        assert!(!complete);
        assert_eq!(w.digits(), &[0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(dyadic_width(&ratio(1, 3)), None);
        assert_eq!(dyadic_width(&ratio(5, 8)), Some(3));
        assert_eq!(dyadic_width(&ratio(4, 8)), Some(1));
        assert_eq!(dyadic_width(&ratio(0, 1)), Some(0));
    }

    #[test]
    fn rational_round_trip() {
        let w = BinaryWord::from_bits(&[1, 0, 1, 1]);
        assert_eq!(w.to_rational(), ratio(11, 16));
        assert_eq!(BinaryWord::zero().to_rational(), ratio(0, 1));
        assert_eq!(BinaryWord::one().to_rational(), ratio(1, 1));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0.1011b", "0b", "1b"] {
            match parse_point(s).unwrap() {
                PointInput::Word(w) => assert_eq!(w.to_string(), s),
                other => panic!("expected word, got {other:?}"),
            }
        }
    }
}
