//! Exact arithmetic in the ring of dyadic Gaussian rationals, the complex
//! numbers of the form `(a + b*i) / 2^k` with integer `a`, `b`.
//!
//! Every value the two curves take at a terminating dyadic point lives in
//! this ring, as do all the series coefficients, so equality tests against
//! oracles can be structural instead of tolerance-based. Numerators are
//! checked 128-bit integers: overflow is reported as [`Error::Overflow`],
//! never wrapped. That comfortably covers exact evaluation at words of up
//! to about 100 binary digits; longer inputs take the float path.

use std::fmt;

use num_complex::Complex64;

use crate::Error;

/// `(a + b*i) / 2^k` in normal form: if `k > 0`, not both `a` and `b`
/// are even. `i128::MIN` numerators are excluded so that negation and
/// conjugation are total.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct DyadicGaussian {
    a: i128,
    b: i128,
    k: u32,
}

impl DyadicGaussian {
    pub const ZERO: Self = Self::new(0, 0, 0);
    pub const ONE: Self = Self::new(1, 0, 0);
    pub const I: Self = Self::new(0, 1, 0);
    pub const HALF: Self = Self::new(1, 0, 1);

    /// Builds `(a + b*i) / 2^k` and reduces it to normal form.
    ///
    /// Panics on `i128::MIN` numerators; fallible arithmetic below never
    /// produces them.
    pub const fn new(a: i128, b: i128, k: u32) -> Self {
        assert!(a != i128::MIN && b != i128::MIN);
        let mut a = a;
        let mut b = b;
        let mut k = k;
        while k > 0 && a % 2 == 0 && b % 2 == 0 {
            a /= 2;
            b /= 2;
            k -= 1;
        }
        Self { a, b, k }
    }

    pub const fn from_integer(n: i64) -> Self {
        Self::new(n as i128, 0, 0)
    }

    /// Real numerator in normal form.
    pub fn re_numerator(&self) -> i128 {
        self.a
    }

    /// Imaginary numerator in normal form.
    pub fn im_numerator(&self) -> i128 {
        self.b
    }

    /// Exponent of the power-of-two denominator in normal form.
    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn build(a: i128, b: i128, k: u32) -> Result<Self, Error> {
        if a == i128::MIN || b == i128::MIN {
            return Err(Error::Overflow);
        }
        Ok(Self::new(a, b, k))
    }

    /// `n * 2^s` with overflow detection.
    fn shl(n: i128, s: u32) -> Result<i128, Error> {
        if n == 0 || s == 0 {
            return Ok(n);
        }
        if s > 126 {
            return Err(Error::Overflow);
        }
        n.checked_mul(1i128 << s).ok_or(Error::Overflow)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, Error> {
        let k = self.k.max(rhs.k);
        let a1 = Self::shl(self.a, k - self.k)?;
        let b1 = Self::shl(self.b, k - self.k)?;
        let a2 = Self::shl(rhs.a, k - rhs.k)?;
        let b2 = Self::shl(rhs.b, k - rhs.k)?;
        Self::build(
            a1.checked_add(a2).ok_or(Error::Overflow)?,
            b1.checked_add(b2).ok_or(Error::Overflow)?,
            k,
        )
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.checked_add(&rhs.negated())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        let ac = self.a.checked_mul(rhs.a).ok_or(Error::Overflow)?;
        let bd = self.b.checked_mul(rhs.b).ok_or(Error::Overflow)?;
        let ad = self.a.checked_mul(rhs.b).ok_or(Error::Overflow)?;
        let bc = self.b.checked_mul(rhs.a).ok_or(Error::Overflow)?;
        Self::build(
            ac.checked_sub(bd).ok_or(Error::Overflow)?,
            ad.checked_add(bc).ok_or(Error::Overflow)?,
            self.k.checked_add(rhs.k).ok_or(Error::Overflow)?,
        )
    }

    pub fn checked_pow(&self, mut exp: u32) -> Result<Self, Error> {
        let mut base = *self;
        let mut acc = Self::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn negated(&self) -> Self {
        Self { a: -self.a, b: -self.b, k: self.k }
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a, b: -self.b, k: self.k }
    }

    /// Multiplicative inverse, when it exists in the ring: exactly the
    /// values whose numerator norm `a^2 + b^2` is a power of two.
    pub fn inverse(&self) -> Result<Self, Error> {
        let norm = self
            .a
            .checked_mul(self.a)
            .and_then(|aa| self.b.checked_mul(self.b).and_then(|bb| aa.checked_add(bb)))
            .ok_or(Error::Overflow)?;
        if norm == 0 || norm & (norm - 1) != 0 {
            return Err(Error::InexactDivision);
        }
        let m = norm.trailing_zeros();
        // 1/z = (a - b*i) * 2^k / 2^m
        if self.k >= m {
            Self::build(Self::shl(self.a, self.k - m)?, Self::shl(-self.b, self.k - m)?, 0)
        } else {
            Self::build(self.a, -self.b, m - self.k)
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        self.checked_mul(&rhs.inverse()?)
    }

    /// Nearest `f64` pair. Exact whenever the numerators fit in 53 bits.
    pub fn to_complex(&self) -> Complex64 {
        let scale = 2f64.powi(-(self.k as i32));
        Complex64::new(self.a as f64 * scale, self.b as f64 * scale)
    }
}

impl fmt::Display for DyadicGaussian {
    /// Renders `(a + b*i)/2^k`, dropping zero parts and unit coefficients:
    /// `0`, `1/2`, `-i/2`, `(-1+i)/2`, `(2-i)/2`, `(3-5*i)/8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn imaginary(b: i128) -> String {
            match b {
                1 => "i".to_string(),
                -1 => "-i".to_string(),
                _ => format!("{b}*i"),
            }
        }
        let numerator = match (self.a, self.b) {
            (0, 0) => "0".to_string(),
            (a, 0) => format!("{a}"),
            (0, b) => imaginary(b),
            (a, b) if b < 0 => format!("({a}-{})", &imaginary(-b)),
            (a, b) => format!("({a}+{})", &imaginary(b)),
        };
        if self.k == 0 || self.is_zero() {
            write!(f, "{numerator}")
        } else if self.k <= 126 {
            write!(f, "{numerator}/{}", 1u128 << self.k)
        } else {
            write!(f, "{numerator}/2^{}", self.k)
        }
    }
}
