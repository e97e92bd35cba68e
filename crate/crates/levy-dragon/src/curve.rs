//! Series evaluators for the two curves, with three independent oracles
//! (functional-equation unwinding, map-composition limits, digit-sequence
//! decoding) and the exact cancellation of the dyadic tail.
//!
//! The Lévy curve value at x with binary digits ω₁ω₂… is
//! Σ ωₙ α^{n−q(x,n−1)} (1−α)^{q(x,n−1)} with α = (1−i)/2, where q counts
//! the ones in the length-(n−1) prefix. The shifted curve replaces the
//! ωₙ factor with (−1)^{1−ωₙ} and rescales: its n-th term is
//! (1/2)(−1)^{1−ωₙ} α^{n−1−q} (1−α)^q. Both are driven by the same factor
//! recurrence: start at α and multiply by (1−α) after a one, by α after a
//! zero.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::binary::{to_word, BinaryWord, PointInput};
use crate::exact::DyadicGaussian;
use crate::ifs::FloatMap;
use crate::revolving::{DigitAutomaton, UnitDigit};
use crate::{Curve, Error};

/// α = (1−i)/2, the contraction ratio of the left-half map.
pub const ALPHA: DyadicGaussian = DyadicGaussian::new(1, -1, 1);
/// 1 − α = (1+i)/2 = iα.
pub const ONE_MINUS_ALPHA: DyadicGaussian = DyadicGaussian::new(1, 1, 1);
/// s = (−1+i)/2, the translation between the two curves: G = f + s.
pub const SHIFT: DyadicGaussian = DyadicGaussian::new(-1, 1, 1);

/// A curve value together with how it was obtained. `exact` is present
/// only when the input was a complete terminating expansion and every
/// contributing term was summed in ring arithmetic; then `tail_bound` is 0
/// and `approx` is the float image of `exact`. Otherwise `approx` is a
/// partial sum of `terms_used` terms and the true value lies within
/// `tail_bound` of it.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct CurvePoint {
    pub exact: Option<DyadicGaussian>,
    pub approx: Complex64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

impl CurvePoint {
    fn from_exact(value: DyadicGaussian, terms_used: usize) -> Self {
        CurvePoint { exact: Some(value), approx: value.to_complex(), terms_used, tail_bound: 0.0 }
    }
}

fn endpoint(curve: Curve, at_one: bool) -> DyadicGaussian {
    match (curve, at_one) {
        (Curve::Levy, false) => DyadicGaussian::ZERO,
        (Curve::Levy, true) => DyadicGaussian::ONE,
        (Curve::Shifted, false) => SHIFT,
        (Curve::Shifted, true) => ONE_MINUS_ALPHA,
    }
}

/// Upper bound on |true value − N-term partial sum|.
///
/// Lévy terms have modulus (1/√2)ⁿ, so the tail past N sums to
/// (1/√2)^{N+1}/(1 − 1/√2). Shifted terms have modulus (1/2)(1/√2)^{n−1};
/// the bound (1/√2)^N/(1 − 1/√2) used here is that geometric sum doubled,
/// conservative but simple.
pub fn truncation_bound(curve: Curve, n_terms: usize) -> f64 {
    let r = FRAC_1_SQRT_2;
    let exp = match curve {
        Curve::Levy => n_terms as i32 + 1,
        Curve::Shifted => n_terms as i32,
    };
    r.powi(exp) / (1.0 - r)
}

fn exact_sum(curve: Curve, w: &BinaryWord, terms: usize) -> Result<DyadicGaussian, Error> {
    let mut acc = DyadicGaussian::ZERO;
    let mut factor = ALPHA;
    for n in 1..=terms {
        let bit = w.digit(n);
        match curve {
            Curve::Levy => {
                if bit == 1 {
                    acc = acc.checked_add(&factor)?;
                }
            }
            Curve::Shifted => {
                let term = factor.checked_mul(&ONE_MINUS_ALPHA)?;
                acc = if bit == 1 { acc.checked_add(&term)? } else { acc.checked_sub(&term)? };
            }
        }
        factor = factor.checked_mul(if bit == 1 { &ONE_MINUS_ALPHA } else { &ALPHA })?;
    }
    Ok(acc)
}

fn float_sum(curve: Curve, w: &BinaryWord, terms: usize) -> Complex64 {
    let alpha = ALPHA.to_complex();
    let one_minus_alpha = ONE_MINUS_ALPHA.to_complex();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut factor = alpha;
    for n in 1..=terms {
        let bit = w.digit(n);
        match curve {
            Curve::Levy => {
                if bit == 1 {
                    acc += factor;
                }
            }
            Curve::Shifted => {
                let term = factor * one_minus_alpha;
                acc += if bit == 1 { term } else { -term };
            }
        }
        factor *= if bit == 1 { one_minus_alpha } else { alpha };
    }
    acc
}

/// Evaluates the chosen curve at the point the word denotes.
///
/// A terminating word is the point itself: once `n_terms` covers its
/// width the sum is exact — all of it for the Lévy curve, and for the
/// shifted curve the terms before the final one-digit (the rest of that
/// series cancels to zero; see [`tail_identity`]). The two fixed words
/// (all-zeros and the all-ones point x = 1) get their endpoint values
/// directly. With `n_terms` below the width the result falls back to a
/// float partial sum carrying `truncation_bound`.
pub fn evaluate(curve: Curve, w: &BinaryWord, n_terms: usize) -> Result<CurvePoint, Error> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be at least 1".into()));
    }
    if w.is_one() {
        return Ok(CurvePoint::from_exact(endpoint(curve, true), 0));
    }
    if w.is_zero() {
        return Ok(CurvePoint::from_exact(endpoint(curve, false), 0));
    }
    let k = w.width();
    if k <= n_terms {
        let terms = match curve {
            Curve::Levy => k,
            Curve::Shifted => k - 1,
        };
        let value = exact_sum(curve, w, terms)?;
        return Ok(CurvePoint::from_exact(value, terms));
    }
    Ok(CurvePoint {
        exact: None,
        approx: float_sum(curve, w, n_terms),
        terms_used: n_terms,
        tail_bound: truncation_bound(curve, n_terms),
    })
}

/// Evaluates at a parsed input. Terminating expansions are evaluated
/// exactly no matter how short the term budget; non-terminating ones get
/// an `n_terms`-digit prefix and a certified bound.
pub fn evaluate_at(curve: Curve, input: &PointInput, n_terms: usize) -> Result<CurvePoint, Error> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be at least 1".into()));
    }
    let (w, complete) = to_word(input, n_terms)?;
    if complete {
        evaluate(curve, &w, n_terms.max(w.width()))
    } else {
        Ok(CurvePoint {
            exact: None,
            approx: float_sum(curve, &w, n_terms),
            terms_used: n_terms,
            tail_bound: truncation_bound(curve, n_terms),
        })
    }
}

/// The Lévy-form series Σ ωₙ α^{n−q}(1−α)^q for an arbitrary ratio α,
/// in float arithmetic. Refuses ratios where the geometric tail bound
/// max(|α|, |1−α|) reaches 1, since no convergence certificate exists
/// there. With α = 1/2 the series telescopes to x itself; with
/// α = (1−i)/2 it matches [`evaluate`].
pub fn evaluate_general(
    alpha: Complex64,
    w: &BinaryWord,
    n_terms: usize,
) -> Result<CurvePoint, Error> {
    if n_terms == 0 {
        return Err(Error::InvalidParameter("n_terms must be at least 1".into()));
    }
    let one_minus_alpha = Complex64::new(1.0, 0.0) - alpha;
    let modulus = alpha.norm().max(one_minus_alpha.norm());
    if modulus >= 1.0 {
        return Err(Error::NotContractive);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut factor = alpha;
    for n in 1..=n_terms {
        if w.digit(n) == 1 {
            acc += factor;
        }
        factor *= if w.digit(n) == 1 { one_minus_alpha } else { alpha };
    }
    // Terms past a terminating word's width vanish identically, so the
    // partial sum is already the full sum.
    let tail_bound = if !w.is_one() && w.width() <= n_terms {
        0.0
    } else {
        modulus.powi(n_terms as i32 + 1) / (1.0 - modulus)
    };
    Ok(CurvePoint { exact: None, approx: acc, terms_used: n_terms, tail_bound })
}

/// First oracle: unwind the defining functional equation digit by digit.
///
/// Lévy: f(x) = αf(2x) for x < 1/2, f(x) = (1−α)f(2x−1) + α otherwise,
/// with f(0) = 0, f(1) = 1. Shifted: G(x) = αG(2x) − 1/2 and
/// G(x) = (1−α)G(2x−1) + 1/2, with G(0) = s, G(1) = (1+i)/2. Shifting a
/// terminating word left eventually reaches 0, so folding back from the
/// last digit evaluates the recursion exactly.
pub fn recursion_value(curve: Curve, w: &BinaryWord) -> Result<DyadicGaussian, Error> {
    if w.is_one() {
        return Ok(endpoint(curve, true));
    }
    let mut v = endpoint(curve, false);
    for n in (1..=w.width()).rev() {
        let bit = w.digit(n);
        v = match (curve, bit) {
            (Curve::Levy, 0) => ALPHA.checked_mul(&v)?,
            (Curve::Levy, _) => ONE_MINUS_ALPHA.checked_mul(&v)?.checked_add(&ALPHA)?,
            (Curve::Shifted, 0) => ALPHA.checked_mul(&v)?.checked_sub(&DyadicGaussian::HALF)?,
            (Curve::Shifted, _) => {
                ONE_MINUS_ALPHA.checked_mul(&v)?.checked_add(&DyadicGaussian::HALF)?
            }
        };
    }
    Ok(v)
}

/// Second oracle: the curve point as the limit of map compositions,
/// m_{ω₁} ∘ m_{ω₂} ∘ … ∘ m_{ω_depth}(0), evaluated innermost-first. The
/// distance to the true limit is at most L^depth · 2 with L the larger
/// contraction factor (the attractors sit inside |z| ≤ 2).
pub fn ifs_limit(maps: &[FloatMap; 2], w: &BinaryWord, depth: usize) -> Result<Complex64, Error> {
    if !(maps[0].is_contraction() && maps[1].is_contraction()) {
        return Err(Error::NotContractive);
    }
    let mut z = Complex64::new(0.0, 0.0);
    for n in (1..=depth).rev() {
        z = maps[w.digit(n) as usize].apply(z);
    }
    Ok(z)
}

/// The shifted series past a terminating word's final one-digit, in
/// closed form. With k the index of that digit and Q the count of earlier
/// ones, the term at k is (1/2)α^{k−1−Q}(1−α)^Q and the geometric sum of
/// everything after it is (1−α)^{Q+1}α^{k−Q} (using 1/(1−α) = 2α in the
/// ring). Their difference — the whole tail — must come out exactly zero;
/// returning it lets callers assert that rather than trust it.
pub fn tail_identity(w: &BinaryWord) -> Result<DyadicGaussian, Error> {
    if w.is_zero() {
        return Err(Error::EmptyWord);
    }
    if w.is_one() {
        return Err(Error::OutOfRange("x = 1 has no terminating expansion".into()));
    }
    let k = w.width();
    let q = w.ones_in_prefix(k - 1);
    let term_at_k = DyadicGaussian::HALF
        .checked_mul(&ALPHA.checked_pow((k - 1 - q) as u32)?)?
        .checked_mul(&ONE_MINUS_ALPHA.checked_pow(q as u32)?)?;
    let rest = ONE_MINUS_ALPHA
        .checked_pow(q as u32 + 1)?
        .checked_mul(&ALPHA.checked_pow((k - q) as u32)?)?;
    term_at_k.checked_sub(&rest)
}

/// Third oracle: rebuild a curve point from its digit sequence alone.
///
/// Replays the digits against the emitting automaton: at rotation count m
/// the only legal digits are i^m or silence (Lévy) and ±i^m (shifted), so
/// each digit determines the underlying bit or convicts the sequence. The
/// value is Σ dₙ αⁿ, times (1−α) for the shifted curve, summed exactly.
pub fn decode(curve: Curve, seq: &[UnitDigit]) -> Result<CurvePoint, Error> {
    let automaton = DigitAutomaton::for_curve(curve);
    let mut m = 0usize;
    let mut acc = DyadicGaussian::ZERO;
    let mut power = ALPHA;
    for (index, digit) in seq.iter().enumerate() {
        let bit = if *digit == automaton.emission(2 * m + 1) {
            1usize
        } else if *digit == automaton.emission(2 * m) {
            0usize
        } else {
            return Err(Error::Unrealizable { index });
        };
        acc = acc.checked_add(&digit.to_exact().checked_mul(&power)?)?;
        m = (m + bit) % 4;
        power = power.checked_mul(&ALPHA)?;
    }
    if curve == Curve::Shifted {
        acc = acc.checked_mul(&ONE_MINUS_ALPHA)?;
    }
    Ok(CurvePoint::from_exact(acc, seq.len()))
}
