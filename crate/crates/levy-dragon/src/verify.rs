//! Runnable invariant suites, one per library module.
//!
//! Each property either holds over an exhaustive small domain or over a
//! seeded random sample, and reports what it covered. The CLI exposes
//! these as `verify --suite <name>`; identical seeds give identical
//! reports.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use crate::binary::{BinaryWord, PointInput};
use crate::curve::{
    decode, evaluate, evaluate_at, ifs_limit, recursion_value, tail_identity, truncation_bound,
    ALPHA, ONE_MINUS_ALPHA, SHIFT,
};
use crate::exact::DyadicGaussian;
use crate::ifs::{
    curve_maps, de_rham_check, general_family, levy_maps, shifted_maps, subdivide,
    subdivide_exact, DEFAULT_MAX_DEPTH,
};
use crate::render::{to_csv, RenderSpec, Viewport};
use crate::revolving::{
    digit_sequence, satisfies_revolving, satisfies_revolving_exact, DigitAutomaton, ThetaAlphabet,
};
use crate::{Curve, Error};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Suite {
    Exact,
    Binary,
    Revolving,
    Curve,
    Geometry,
    Render,
}

impl Suite {
    pub fn all() -> [Suite; 6] {
        [Suite::Exact, Suite::Binary, Suite::Revolving, Suite::Curve, Suite::Geometry, Suite::Render]
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Exact => "exact",
            Suite::Binary => "binary",
            Suite::Revolving => "revolving",
            Suite::Curve => "curve",
            Suite::Geometry => "geometry",
            Suite::Render => "render",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "exact" => Ok(Suite::Exact),
            "binary" => Ok(Suite::Binary),
            "revolving" => Ok(Suite::Revolving),
            "curve" => Ok(Suite::Curve),
            "geometry" => Ok(Suite::Geometry),
            "render" => Ok(Suite::Render),
            other => Err(Error::Parse(format!(
                "unknown suite '{other}' (expected exact, binary, revolving, curve, geometry, render, or all)"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct PropertyResult {
    pub suite: Suite,
    pub property: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Deterministic per-property generator: the suite seed is shared, the
/// salt separates properties so reordering one suite cannot shift the
/// samples of another.
fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt))
}

fn property(
    suite: Suite,
    name: &'static str,
    body: impl FnOnce() -> Result<String, String>,
) -> PropertyResult {
    match body() {
        Ok(detail) => PropertyResult { suite, property: name, passed: true, detail },
        Err(detail) => PropertyResult { suite, property: name, passed: false, detail },
    }
}

/// All terminating words of width ≤ max_width, plus the two endpoint
/// words. Width-k words have an odd final numerator, so each dyadic
/// appears exactly once.
fn dyadics_to_width(max_width: u32) -> Vec<BinaryWord> {
    let mut out = vec![BinaryWord::zero(), BinaryWord::one()];
    for k in 1..=max_width {
        for num in (1..(1u32 << k)).step_by(2) {
            let bits: Vec<u8> = (0..k).map(|i| ((num >> (k - 1 - i)) & 1) as u8).collect();
            out.push(BinaryWord::from_bits(&bits));
        }
    }
    out
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> BinaryWord {
    let bits: Vec<u8> = (0..len).map(|_| rng.gen_range(0..=1u8)).collect();
    BinaryWord::from_bits(&bits)
}

fn random_dg(rng: &mut ChaCha8Rng) -> DyadicGaussian {
    DyadicGaussian::new(
        rng.gen_range(-(1i128 << 30)..=(1i128 << 30)),
        rng.gen_range(-(1i128 << 30)..=(1i128 << 30)),
        rng.gen_range(0..=8),
    )
}

fn err_of(e: Error) -> String {
    format!("unexpected error: {e}")
}

// ---- exact suite -----------------------------------------------------

fn exact_suite(seed: u64) -> Vec<PropertyResult> {
    let s = Suite::Exact;
    vec![
        property(s, "ring laws on random triples", || {
            let mut rng = rng_for(seed, 1);
            for case in 0..10_000 {
                let (a, b, c) = (random_dg(&mut rng), random_dg(&mut rng), random_dg(&mut rng));
                let run = || -> Result<(), Error> {
                    let ab = a.checked_add(&b)?;
                    if ab != b.checked_add(&a)? {
                        return Err(Error::InvalidParameter("add commutativity".into()));
                    }
                    if ab.checked_add(&c)? != a.checked_add(&b.checked_add(&c)?)? {
                        return Err(Error::InvalidParameter("add associativity".into()));
                    }
                    let amb = a.checked_mul(&b)?;
                    if amb != b.checked_mul(&a)? {
                        return Err(Error::InvalidParameter("mul commutativity".into()));
                    }
                    if amb.checked_mul(&c)? != a.checked_mul(&b.checked_mul(&c)?)? {
                        return Err(Error::InvalidParameter("mul associativity".into()));
                    }
                    if a.checked_mul(&b.checked_add(&c)?)?
                        != amb.checked_add(&a.checked_mul(&c)?)?
                    {
                        return Err(Error::InvalidParameter("distributivity".into()));
                    }
                    Ok(())
                };
                if let Err(e) = run() {
                    return Err(format!("case {case}: {e} with a={a}, b={b}, c={c}"));
                }
            }
            Ok("10000 random triples, numerators up to 2^30".into())
        }),
        property(s, "normal form is idempotent", || {
            let mut rng = rng_for(seed, 2);
            for _ in 0..10_000 {
                let v = random_dg(&mut rng);
                let again =
                    DyadicGaussian::new(v.re_numerator(), v.im_numerator(), v.exponent());
                if again != v {
                    return Err(format!("renormalizing {v} gave {again}"));
                }
            }
            Ok("10000 random values".into())
        }),
        property(s, "alpha powers agree with float powering", || {
            let alpha = Complex64::new(0.5, -0.5);
            for n in 0..=128u32 {
                let exact = ALPHA.checked_pow(n).map_err(err_of)?.to_complex();
                let float = alpha.powi(n as i32);
                let scale = float.norm().max(f64::MIN_POSITIVE);
                if (exact - float).norm() / scale > 1e-12 {
                    return Err(format!("n = {n}: exact {exact} vs float {float}"));
                }
            }
            Ok("n = 0..=128, relative error ≤ 1e-12".into())
        }),
        property(s, "alpha times its conjugate is one half", || {
            let product = ALPHA.checked_mul(&ALPHA.conjugate()).map_err(err_of)?;
            if product == DyadicGaussian::HALF {
                Ok("exact".into())
            } else {
                Err(format!("got {product}"))
            }
        }),
    ]
}

// ---- binary suite ----------------------------------------------------

fn binary_suite(seed: u64) -> Vec<PropertyResult> {
    let s = Suite::Binary;
    vec![
        property(s, "prefix one-counts increase by the next digit", || {
            let mut rng = rng_for(seed, 10);
            for _ in 0..2_000 {
                let w = random_word(&mut rng, 48);
                for n in 0..64 {
                    let step = w.ones_in_prefix(n + 1) - w.ones_in_prefix(n);
                    if step != w.digit(n + 1) as usize {
                        return Err(format!("w = {w}, n = {n}: step {step}"));
                    }
                }
            }
            Ok("2000 random words, prefixes up to 64".into())
        }),
        property(s, "expansion reinterprets within 2^-n", || {
            let mut rng = rng_for(seed, 11);
            for _ in 0..2_000 {
                let den: i64 = rng.gen_range(2..=1_000_000);
                let num: i64 = rng.gen_range(0..=den);
                let x = BigRational::new(num.into(), den.into());
                let n = rng.gen_range(1..=40usize);
                let w = crate::binary::expand(&x, n).map_err(err_of)?;
                let gap = (w.to_rational() - &x).abs();
                let bound = BigRational::new(1.into(), (1i128 << n).into());
                if gap >= bound {
                    return Err(format!("x = {num}/{den}, n = {n}: gap {gap}"));
                }
            }
            Ok("2000 random rationals, up to 40 digits".into())
        }),
        property(s, "terminating expansions never end in a run of ones", || {
            for w in dyadics_to_width(12) {
                if w.is_one() || w.is_zero() {
                    continue;
                }
                let x = w.to_rational();
                let again = crate::binary::expand(&x, 64).map_err(err_of)?;
                if again != w {
                    return Err(format!("{x} expanded to {again}, expected {w}"));
                }
                if again.digit(again.width()) != 1 {
                    return Err(format!("{again} does not end in a one"));
                }
            }
            Ok("all 4095 dyadics of width ≤ 12, re-expanded with a 64-digit budget".into())
        }),
        property(s, "left shift doubles the value", || {
            for w in dyadics_to_width(12) {
                if w.is_zero() || w.is_one() || w.width() < 2 {
                    continue;
                }
                let shifted = w.shift_left().ok_or("unexpected empty shift")?;
                let x = w.to_rational();
                let two = BigRational::new(2.into(), 1.into());
                let doubled = if x < BigRational::new(1.into(), 2.into()) {
                    &x * &two
                } else {
                    &x * &two - BigRational::new(1.into(), 1.into())
                };
                if shifted.to_rational() != doubled {
                    return Err(format!("shift of {w} gave {shifted}"));
                }
            }
            Ok("all dyadics of width 2..=12".into())
        }),
    ]
}

// ---- revolving suite -------------------------------------------------

fn revolving_suite(seed: u64) -> Vec<PropertyResult> {
    let s = Suite::Revolving;
    vec![
        property(s, "automata reproduce the closed-form digits", || {
            let g1 = DigitAutomaton::for_curve(Curve::Levy);
            let g2 = DigitAutomaton::for_curve(Curve::Shifted);
            let mut words = 0u64;
            for len in 1..=16usize {
                for pattern in 0..(1u32 << len) {
                    let bits: Vec<u8> =
                        (0..len).map(|i| ((pattern >> (len - 1 - i)) & 1) as u8).collect();
                    let w = BinaryWord::from_bits(&bits);
                    if g1.run(&w, len) != digit_sequence(Curve::Levy, &w, len) {
                        return Err(format!("levy machine differs on {bits:?}"));
                    }
                    if g2.run(&w, len) != digit_sequence(Curve::Shifted, &w, len) {
                        return Err(format!("shifted machine differs on {bits:?}"));
                    }
                    words += 1;
                }
            }
            Ok(format!("{words} words of length ≤ 16 (2^17 - 2)"))
        }),
        property(s, "levy digit sequences satisfy the revolving condition", || {
            let mut rng = rng_for(seed, 20);
            let alphabet = ThetaAlphabet::quarter_turn();
            for case in 0..100_000 {
                let w = random_word(&mut rng, 64);
                let seq = digit_sequence(Curve::Levy, &w, 64);
                if !satisfies_revolving_exact(&seq) {
                    return Err(format!("case {case}: word {w}"));
                }
                if case < 2_000 {
                    let floats: Vec<Complex64> = seq.iter().map(|d| d.to_complex()).collect();
                    if !satisfies_revolving(&floats, &alphabet).map_err(err_of)? {
                        return Err(format!("case {case} fails the float check: word {w}"));
                    }
                }
            }
            Ok("100000 random length-64 words (2000 also float-checked)".into())
        }),
        property(s, "some shifted digit pair breaks the revolving condition", || {
            let mut failures = 0;
            for bits in [[0u8, 0], [0, 1], [1, 0], [1, 1]] {
                let w = BinaryWord::from_bits(&bits);
                let seq = digit_sequence(Curve::Shifted, &w, 2);
                if !satisfies_revolving_exact(&seq) {
                    failures += 1;
                }
            }
            if failures == 0 {
                return Err("every length-2 sequence satisfied the condition".into());
            }
            Ok(format!("{failures} of 4 length-2 words fail"))
        }),
        property(s, "shifted digits are never zero", || {
            for w in dyadics_to_width(12) {
                let seq = digit_sequence(Curve::Shifted, &w, 16);
                if let Some(j) = seq.iter().position(|d| d.is_zero()) {
                    return Err(format!("word {w} has a zero digit at index {j}"));
                }
            }
            Ok("all dyadics of width ≤ 12, 16 digits each".into())
        }),
        property(s, "consecutive shifted digits follow the ratio law", || {
            for w in dyadics_to_width(12) {
                let n = 14usize;
                let seq = digit_sequence(Curve::Shifted, &w, n);
                for k in 1..n {
                    let ratio = seq[k].ratio(&seq[k - 1]).ok_or("zero digit")?;
                    let (wk, wk1) = (w.digit(k), w.digit(k + 1));
                    let mut expected = crate::revolving::UnitDigit::power_of_i(wk as usize);
                    if wk != wk1 {
                        expected = expected.negated();
                    }
                    if ratio != expected {
                        return Err(format!("word {w}, k = {k}: ratio {ratio:?}"));
                    }
                }
            }
            Ok("all dyadics of width ≤ 12, 14 digits each".into())
        }),
        property(s, "the quarter-turn alphabet is the fourth roots with zero", || {
            let alphabet = ThetaAlphabet::new(4, 1, false).map_err(err_of)?;
            let expected = [
                Complex64::new(0.0, 0.0),
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(-1.0, 0.0),
                Complex64::new(0.0, -1.0),
            ];
            if alphabet.members().len() != expected.len() {
                return Err(format!("{} members", alphabet.members().len()));
            }
            for (got, want) in alphabet.members().iter().zip(expected) {
                if (got - want).norm() > 1e-12 {
                    return Err(format!("member {got} vs {want}"));
                }
            }
            Ok("p = 4, q = 1, within 1e-12".into())
        }),
    ]
}

// ---- curve suite -----------------------------------------------------

fn curve_suite(seed: u64) -> Vec<PropertyResult> {
    let s = Suite::Curve;
    vec![
        property(s, "the two curves differ by the fixed translation", || {
            for w in dyadics_to_width(12) {
                let f = evaluate(Curve::Levy, &w, 128).map_err(err_of)?.exact.unwrap();
                let g = evaluate(Curve::Shifted, &w, 128).map_err(err_of)?.exact.unwrap();
                if g != f.checked_add(&SHIFT).map_err(err_of)? {
                    return Err(format!("word {w}: f = {f}, g = {g}"));
                }
            }
            let mut rng = rng_for(seed, 30);
            for case in 0..10_000 {
                let den: i64 = rng.gen_range(2..=1_000_000);
                let num: i64 = rng.gen_range(0..=den);
                let x = PointInput::Rational(BigRational::new(num.into(), den.into()));
                let f = evaluate_at(Curve::Levy, &x, 128).map_err(err_of)?.approx;
                let g = evaluate_at(Curve::Shifted, &x, 128).map_err(err_of)?.approx;
                let gap = (g - f - Complex64::new(-0.5, 0.5)).norm();
                if gap > 1e-12 {
                    return Err(format!("case {case}, x = {num}/{den}: |g - f - s| = {gap:e}"));
                }
            }
            Ok("4097 dyadics exactly; 10000 random rationals at 128 terms within 1e-12".into())
        }),
        property(s, "both branch recursions leave no residual", || {
            for w in dyadics_to_width(12) {
                if w.is_one() {
                    continue;
                }
                let double = match w.shift_left() {
                    Some(d) => d,
                    None => continue,
                };
                let f = evaluate(Curve::Levy, &w, 128).map_err(err_of)?.exact.unwrap();
                let f2 = evaluate(Curve::Levy, &double, 128).map_err(err_of)?.exact.unwrap();
                let g = evaluate(Curve::Shifted, &w, 128).map_err(err_of)?.exact.unwrap();
                let g2 = evaluate(Curve::Shifted, &double, 128).map_err(err_of)?.exact.unwrap();
                let (ef, eg) = if w.digit(1) == 0 {
                    (
                        ALPHA.checked_mul(&f2).map_err(err_of)?,
                        ALPHA
                            .checked_mul(&g2)
                            .and_then(|v| v.checked_sub(&DyadicGaussian::HALF))
                            .map_err(err_of)?,
                    )
                } else {
                    (
                        ONE_MINUS_ALPHA
                            .checked_mul(&f2)
                            .and_then(|v| v.checked_add(&ALPHA))
                            .map_err(err_of)?,
                        ONE_MINUS_ALPHA
                            .checked_mul(&g2)
                            .and_then(|v| v.checked_add(&DyadicGaussian::HALF))
                            .map_err(err_of)?,
                    )
                };
                if f != ef || g != eg {
                    return Err(format!("word {w}"));
                }
            }
            Ok("all dyadics of width ≤ 12, both curves".into())
        }),
        property(s, "series and recursion oracle agree exactly", || {
            for w in dyadics_to_width(12) {
                for curve in [Curve::Levy, Curve::Shifted] {
                    let series = evaluate(curve, &w, 128).map_err(err_of)?.exact.unwrap();
                    let unwound = recursion_value(curve, &w).map_err(err_of)?;
                    if series != unwound {
                        return Err(format!("{curve} at {w}: {series} vs {unwound}"));
                    }
                }
            }
            Ok("4097 dyadics, both curves".into())
        }),
        property(s, "series and map-composition oracle agree", || {
            let mut rng = rng_for(seed, 31);
            let bound = truncation_bound(Curve::Levy, 128) + 2.0 * FRAC_1_SQRT_2.powi(64);
            for case in 0..1_000 {
                let w = random_word(&mut rng, 128);
                for curve in [Curve::Levy, Curve::Shifted] {
                    let maps = curve_maps(curve);
                    let float = [maps[0].to_float(), maps[1].to_float()];
                    let series = evaluate(curve, &w, 128).map_err(err_of)?.approx;
                    let composed = ifs_limit(&float, &w, 64).map_err(err_of)?;
                    let gap = (series - composed).norm();
                    if gap > bound {
                        return Err(format!("case {case}, {curve}: gap {gap:e} > {bound:e}"));
                    }
                }
            }
            Ok(format!("1000 random length-128 words, both curves, within {bound:.3e}"))
        }),
        property(s, "endpoint values are pinned", || {
            let checks: [(Curve, BinaryWord, DyadicGaussian); 5] = [
                (Curve::Levy, BinaryWord::zero(), DyadicGaussian::ZERO),
                (Curve::Levy, BinaryWord::one(), DyadicGaussian::ONE),
                (Curve::Shifted, BinaryWord::zero(), SHIFT),
                (Curve::Shifted, BinaryWord::one(), ONE_MINUS_ALPHA),
                (Curve::Shifted, BinaryWord::from_bits(&[1]), DyadicGaussian::ZERO),
            ];
            for (curve, w, want) in checks {
                let got = evaluate(curve, &w, 8).map_err(err_of)?.exact.unwrap();
                if got != want {
                    return Err(format!("{curve} at {w}: {got}, expected {want}"));
                }
            }
            Ok("five endpoint identities, exact".into())
        }),
        property(s, "the series tail past the last one-digit cancels", || {
            for w in dyadics_to_width(12) {
                if w.is_zero() || w.is_one() {
                    continue;
                }
                let tail = tail_identity(&w).map_err(err_of)?;
                if tail != DyadicGaussian::ZERO {
                    return Err(format!("word {w}: tail {tail}"));
                }
            }
            Ok("all 4095 dyadics of width ≤ 12".into())
        }),
        property(s, "values approach the junction geometrically", || {
            let half = BinaryWord::from_bits(&[1]);
            let at_half = evaluate(Curve::Levy, &half, 8).map_err(err_of)?.exact.unwrap();
            for j in 1..=30u32 {
                let mut bits = vec![0u8];
                bits.extend(std::iter::repeat(1).take(j as usize - 1));
                let w = BinaryWord::from_bits(&bits);
                let v = evaluate(Curve::Levy, &w, 64).map_err(err_of)?.exact.unwrap();
                let gap = at_half.checked_sub(&v).map_err(err_of)?;
                let expected = ALPHA
                    .checked_mul(&ONE_MINUS_ALPHA.checked_pow(j - 1).map_err(err_of)?)
                    .map_err(err_of)?;
                if gap != expected {
                    return Err(format!("j = {j}: gap {gap}"));
                }
            }
            Ok("x = 1/2 - 2^-j for j = 1..=30, gap exactly α(1-α)^(j-1)".into())
        }),
        property(s, "digit decoding inverts both sequence generators", || {
            for w in dyadics_to_width(10) {
                if w.is_zero() || w.is_one() {
                    continue;
                }
                let k = w.width();
                let xi = digit_sequence(Curve::Levy, &w, k);
                let f = decode(Curve::Levy, &xi).map_err(err_of)?.exact.unwrap();
                if f != evaluate(Curve::Levy, &w, 128).map_err(err_of)?.exact.unwrap() {
                    return Err(format!("levy decode differs at {w}"));
                }
                let gamma = digit_sequence(Curve::Shifted, &w, k - 1);
                let g = decode(Curve::Shifted, &gamma).map_err(err_of)?.exact.unwrap();
                if g != evaluate(Curve::Shifted, &w, 128).map_err(err_of)?.exact.unwrap() {
                    return Err(format!("shifted decode differs at {w}"));
                }
            }
            Ok("all dyadics of width ≤ 10".into())
        }),
    ]
}

// ---- geometry suite --------------------------------------------------

fn geometry_suite(_seed: u64) -> Vec<PropertyResult> {
    let s = Suite::Geometry;
    vec![
        property(s, "polyline vertices are the curve values", || {
            for curve in [Curve::Levy, Curve::Shifted] {
                let maps = curve_maps(curve);
                for depth in 1..=10u32 {
                    let verts =
                        subdivide_exact(&maps[0], &maps[1], depth, DEFAULT_MAX_DEPTH)
                            .map_err(err_of)?;
                    for (j, v) in verts.iter().enumerate() {
                        let k = depth as usize;
                        let bits: Vec<u8> =
                            (0..k).map(|i| ((j >> (k - 1 - i)) & 1) as u8).collect();
                        let w = if j == 1 << depth {
                            BinaryWord::one()
                        } else {
                            BinaryWord::from_bits(&bits)
                        };
                        let p = evaluate(curve, &w, 64).map_err(err_of)?.exact.unwrap();
                        if *v != p {
                            return Err(format!("{curve} depth {depth} vertex {j}: {v} vs {p}"));
                        }
                    }
                }
            }
            Ok("depths 1..=10, both curves, every vertex exact".into())
        }),
        property(s, "edges shrink by the contraction ratio", || {
            let [m0, m1] = levy_maps();
            for depth in 1..=10u32 {
                let p = subdivide(
                    &m0.to_float(),
                    &m1.to_float(),
                    depth,
                    DEFAULT_MAX_DEPTH,
                    "levy",
                )
                .map_err(err_of)?;
                let want = FRAC_1_SQRT_2.powi(depth as i32);
                for pair in p.vertices.windows(2) {
                    let len = (pair[1] - pair[0]).norm();
                    if (len / want - 1.0).abs() > 1e-12 {
                        return Err(format!("depth {depth}: edge {len} vs {want}"));
                    }
                }
            }
            Ok("depths 1..=10, every edge (1/√2)^d within 1e-12 relative".into())
        }),
        property(s, "polyline endpoints sit on the map fixed points", || {
            for curve in [Curve::Levy, Curve::Shifted] {
                let maps = curve_maps(curve);
                for depth in [1u32, 5, 10] {
                    let verts = subdivide_exact(&maps[0], &maps[1], depth, DEFAULT_MAX_DEPTH)
                        .map_err(err_of)?;
                    if verts.len() != (1 << depth) + 1 {
                        return Err(format!("{curve} depth {depth}: {} vertices", verts.len()));
                    }
                    let first = maps[0].fixed_point().map_err(err_of)?;
                    let last = maps[1].fixed_point().map_err(err_of)?;
                    if verts[0] != first || *verts.last().unwrap() != last {
                        return Err(format!("{curve} depth {depth}: endpoints moved"));
                    }
                }
            }
            Ok("depths 1, 5, 10, both curves, exact".into())
        }),
        property(s, "the shifted polyline is the levy polyline translated", || {
            let [l0, l1] = levy_maps();
            let [s0, s1] = shifted_maps();
            for depth in 1..=10u32 {
                let levy = subdivide_exact(&l0, &l1, depth, DEFAULT_MAX_DEPTH).map_err(err_of)?;
                let shifted =
                    subdivide_exact(&s0, &s1, depth, DEFAULT_MAX_DEPTH).map_err(err_of)?;
                for (a, b) in levy.iter().zip(shifted.iter()) {
                    if a.checked_add(&SHIFT).map_err(err_of)? != *b {
                        return Err(format!("depth {depth}: {a} + s != {b}"));
                    }
                }
            }
            Ok("depths 1..=10, vertexwise exact".into())
        }),
        property(s, "the unit family member is the levy pair", || {
            let fam = general_family(&DyadicGaussian::ONE, &DyadicGaussian::ZERO)
                .map_err(err_of)?;
            let levy = levy_maps();
            if fam != levy {
                return Err("maps differ".into());
            }
            let a = subdivide_exact(&fam[0], &fam[1], 8, DEFAULT_MAX_DEPTH).map_err(err_of)?;
            let b = subdivide_exact(&levy[0], &levy[1], 8, DEFAULT_MAX_DEPTH).map_err(err_of)?;
            if a != b {
                return Err("depth-8 polylines differ".into());
            }
            let witness = de_rham_check(&fam[0], &fam[1]).map_err(err_of)?;
            if !witness.compatible {
                return Err("family maps fail the junction check".into());
            }
            Ok("maps and depth-8 polylines identical; junction compatible".into())
        }),
        property(s, "each refinement keeps the coarser vertices", || {
            let [m0, m1] = levy_maps();
            let float = [m0.to_float(), m1.to_float()];
            for depth in 1..=9u32 {
                let coarse = subdivide(&float[0], &float[1], depth, DEFAULT_MAX_DEPTH, "levy")
                    .map_err(err_of)?;
                let fine = subdivide(&float[0], &float[1], depth + 1, DEFAULT_MAX_DEPTH, "levy")
                    .map_err(err_of)?;
                for (j, v) in coarse.vertices.iter().enumerate() {
                    if fine.vertices[2 * j] != *v {
                        return Err(format!("depth {depth} vertex {j} moved on refinement"));
                    }
                }
            }
            Ok("depths 1..=9 against their refinements, bitwise".into())
        }),
    ]
}

// ---- render suite ----------------------------------------------------

fn render_suite(_seed: u64) -> Vec<PropertyResult> {
    let s = Suite::Render;
    vec![
        property(s, "emitted csv parses back to the vertices", || {
            let [m0, m1] = curve_maps(Curve::Shifted);
            let p = subdivide(&m0.to_float(), &m1.to_float(), 8, DEFAULT_MAX_DEPTH, "shifted")
                .map_err(err_of)?;
            let csv = to_csv(&p);
            let mut lines = csv.lines();
            if lines.next() != Some("x,re,im") {
                return Err("missing header".into());
            }
            for (j, row) in lines.enumerate() {
                let cells: Vec<f64> =
                    row.split(',').map(|c| c.parse().unwrap_or(f64::NAN)).collect();
                if cells.len() != 3 {
                    return Err(format!("row {j} has {} cells", cells.len()));
                }
                let x = j as f64 / 256.0;
                if (cells[0] - x).abs() > 1e-12
                    || (cells[1] - p.vertices[j].re).abs() > 1e-12
                    || (cells[2] - p.vertices[j].im).abs() > 1e-12
                {
                    return Err(format!("row {j} drifted: {row}"));
                }
            }
            Ok("depth-8 shifted polyline, 257 rows within 1e-12".into())
        }),
        property(s, "the pixel transform is invertible", || {
            let [m0, m1] = curve_maps(Curve::Levy);
            let p = subdivide(&m0.to_float(), &m1.to_float(), 10, DEFAULT_MAX_DEPTH, "levy")
                .map_err(err_of)?;
            for spec in [
                RenderSpec::default(),
                RenderSpec { width: 320, height: 1200, margin: 12.0, ..Default::default() },
            ] {
                let view = Viewport::fit(&p.vertices, &spec).map_err(err_of)?;
                for v in p.vertices.iter().step_by(11) {
                    let (px, py) = view.to_pixel(*v);
                    let back = view.from_pixel(px, py);
                    let (qx, qy) = view.to_pixel(back);
                    let drift = ((qx - px).powi(2) + (qy - py).powi(2)).sqrt();
                    if drift >= 0.5 || (back - v).norm() * view.scale >= 0.5 {
                        return Err(format!("vertex {v} drifts {drift} px"));
                    }
                }
            }
            Ok("depth-10 polyline under two viewport shapes, within 0.5 px".into())
        }),
    ]
}

pub fn run_suite(suite: Suite, seed: u64) -> Vec<PropertyResult> {
    match suite {
        Suite::Exact => exact_suite(seed),
        Suite::Binary => binary_suite(seed),
        Suite::Revolving => revolving_suite(seed),
        Suite::Curve => curve_suite(seed),
        Suite::Geometry => geometry_suite(seed),
        Suite::Render => render_suite(seed),
    }
}

pub fn run_all(seed: u64) -> Vec<PropertyResult> {
    Suite::all().into_iter().flat_map(|s| run_suite(s, seed)).collect()
}

/// Resolves a suite name, `"all"` included, and runs it.
pub fn run_named(name: &str, seed: u64) -> Result<Vec<PropertyResult>, Error> {
    if name == "all" {
        return Ok(run_all(seed));
    }
    Ok(run_suite(Suite::from_str(name)?, seed))
}
