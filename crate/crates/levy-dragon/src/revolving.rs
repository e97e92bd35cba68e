//! Revolving digit sequences and the digit graphs that generate them.
//!
//! Both curves admit power-series representations in α = (1-i)/2 whose
//! coefficients come from the five-element set {0, 1, i, -1, -i}:
//!
//! * Lévy:    f(x) = Σ ξₙ αⁿ      with ξₙ = ωₙ · i^q(x,n-1)
//! * shifted: G(x) = (1-α) Σ γₙ αⁿ with γₙ = (-1)^(1-ωₙ) · i^q(x,n-1)
//!
//! The nonzero ξ digits advance by a quarter turn at every 1-digit of x,
//! which is the revolving condition checked here. Each sequence is also
//! the emission trace of an eight-state Moore machine over states
//! (q mod 4, current bit); those machines, their runs and their DOT
//! serialization live here too.

use num_complex::Complex64;

use crate::binary::BinaryWord;
use crate::exact::DyadicGaussian;
use crate::{Curve, Error};

/// A coefficient from {0, 1, i, -1, -i}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum UnitDigit {
    Zero,
    One,
    I,
    MinusOne,
    MinusI,
}

impl UnitDigit {
    /// i^m.
    pub fn power_of_i(m: usize) -> Self {
        match m % 4 {
            0 => UnitDigit::One,
            1 => UnitDigit::I,
            2 => UnitDigit::MinusOne,
            _ => UnitDigit::MinusI,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, UnitDigit::Zero)
    }

    /// Multiplication by i, a counterclockwise quarter turn.
    pub fn times_i(&self) -> Self {
        match self {
            UnitDigit::Zero => UnitDigit::Zero,
            UnitDigit::One => UnitDigit::I,
            UnitDigit::I => UnitDigit::MinusOne,
            UnitDigit::MinusOne => UnitDigit::MinusI,
            UnitDigit::MinusI => UnitDigit::One,
        }
    }

    pub fn negated(&self) -> Self {
        match self {
            UnitDigit::Zero => UnitDigit::Zero,
            UnitDigit::One => UnitDigit::MinusOne,
            UnitDigit::I => UnitDigit::MinusI,
            UnitDigit::MinusOne => UnitDigit::One,
            UnitDigit::MinusI => UnitDigit::I,
        }
    }

    /// The quotient self/other for nonzero digits, `None` if either is zero.
    pub fn ratio(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        // Divide by rotating back: 1/i = -i and the set is a cyclic group.
        let mut r = *self;
        let mut d = *other;
        while d != UnitDigit::One {
            d = d.times_i();
            r = r.times_i();
        }
        Some(r)
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            UnitDigit::Zero => Complex64::new(0.0, 0.0),
            UnitDigit::One => Complex64::new(1.0, 0.0),
            UnitDigit::I => Complex64::new(0.0, 1.0),
            UnitDigit::MinusOne => Complex64::new(-1.0, 0.0),
            UnitDigit::MinusI => Complex64::new(0.0, -1.0),
        }
    }

    pub fn to_exact(&self) -> DyadicGaussian {
        match self {
            UnitDigit::Zero => DyadicGaussian::ZERO,
            UnitDigit::One => DyadicGaussian::ONE,
            UnitDigit::I => DyadicGaussian::I,
            UnitDigit::MinusOne => DyadicGaussian::new(-1, 0, 0),
            UnitDigit::MinusI => DyadicGaussian::new(0, -1, 0),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            UnitDigit::Zero => "0",
            UnitDigit::One => "1",
            UnitDigit::I => "i",
            UnitDigit::MinusOne => "-1",
            UnitDigit::MinusI => "-i",
        }
    }
}

impl std::fmt::Display for UnitDigit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First n digits of the series for the given curve: ξ for Lévy and γ for
/// shifted, both driven by the running count of ones q(x, n-1).
pub fn digit_sequence(curve: Curve, w: &BinaryWord, n: usize) -> Vec<UnitDigit> {
    let mut out = Vec::with_capacity(n);
    let mut q = 0usize;
    for idx in 1..=n {
        let bit = w.digit(idx);
        let rot = UnitDigit::power_of_i(q);
        out.push(match (curve, bit) {
            (Curve::Levy, 1) => rot,
            (Curve::Levy, _) => UnitDigit::Zero,
            (Curve::Shifted, 1) => rot,
            (Curve::Shifted, _) => rot.negated(),
        });
        q += bit as usize;
    }
    out
}

/// Revolving condition over the quarter-turn alphabet, checked exactly:
/// consecutive nonzero digits must satisfy next = i * previous.
pub fn satisfies_revolving_exact(seq: &[UnitDigit]) -> bool {
    let mut prev: Option<UnitDigit> = None;
    for d in seq {
        if d.is_zero() {
            continue;
        }
        if let Some(p) = prev {
            if *d != p.times_i() {
                return false;
            }
        }
        prev = Some(*d);
    }
    true
}

/// The alphabet Δ_θ = {0, 1, e^iθ, …, e^(p-1)iθ} for θ = ±2πq/p.
#[derive(Clone, Debug)]
pub struct ThetaAlphabet {
    p: u32,
    q: u32,
    theta: f64,
    members: Vec<Complex64>,
}

/// Membership and ratio tolerance for float digit checks.
pub const ALPHABET_TOLERANCE: f64 = 1e-12;

impl ThetaAlphabet {
    /// θ = -2πq/p when `clockwise`, else +2πq/p; must lie in (-π, π].
    pub fn new(p: u32, q: u32, clockwise: bool) -> Result<Self, Error> {
        if p == 0 {
            return Err(Error::InvalidParameter("alphabet needs p >= 1".into()));
        }
        let magnitude = 2.0 * std::f64::consts::PI * q as f64 / p as f64;
        let theta = if clockwise { -magnitude } else { magnitude };
        // Rational comparison, not float: |θ| ≤ π means 2q ≤ p, and the
        // open left end excludes θ = -π.
        if 2 * q > p || (clockwise && 2 * q == p) {
            return Err(Error::InvalidParameter(format!(
                "theta = {}2*pi*{q}/{p} is outside (-pi, pi]",
                if clockwise { "-" } else { "" }
            )));
        }
        let mut members = Vec::with_capacity(p as usize + 1);
        members.push(Complex64::new(0.0, 0.0));
        for j in 0..p {
            let arg = theta * j as f64;
            members.push(Complex64::new(arg.cos(), arg.sin()));
        }
        Ok(Self { p, q, theta, members })
    }

    /// The quarter-turn alphabet {0, 1, i, -1, -i}: p = 4, q = 1.
    pub fn quarter_turn() -> Self {
        Self::new(4, 1, false).expect("pi/2 is a valid turn angle")
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// All p+1 members, zero first.
    pub fn members(&self) -> &[Complex64] {
        &self.members
    }

    /// Index of the member z is closest to, if within tolerance.
    pub fn classify(&self, z: Complex64) -> Option<usize> {
        self.members.iter().position(|m| (m - z).norm() <= ALPHABET_TOLERANCE)
    }
}

/// Revolving condition for float digits over an arbitrary Δ_θ: every
/// element must belong to the alphabet, and consecutive nonzero elements
/// must advance by exactly e^iθ (within 1e-12).
pub fn satisfies_revolving(seq: &[Complex64], alphabet: &ThetaAlphabet) -> Result<bool, Error> {
    let step = Complex64::from_polar(1.0, alphabet.theta());
    let mut prev: Option<Complex64> = None;
    for (index, z) in seq.iter().enumerate() {
        let Some(member) = alphabet.classify(*z) else {
            return Err(Error::DigitOutsideAlphabet { index });
        };
        if member == 0 {
            continue;
        }
        if let Some(p) = prev {
            if (z - step * p).norm() > ALPHABET_TOLERANCE {
                return Ok(false);
            }
        }
        prev = Some(*z);
    }
    Ok(true)
}

/// How the curve turns between two consecutive series digits.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Move {
    /// Ratio 1: keep direction.
    Stay,
    /// Ratio i: quarter turn.
    Forward1,
    /// Ratio -1: half turn.
    Forward2,
    /// Ratio -i: quarter turn back.
    Back1,
}

/// Classifies each consecutive ratio seq[k+1]/seq[k] of a nowhere-zero
/// digit sequence.
pub fn classify_moves(seq: &[UnitDigit]) -> Result<Vec<Move>, Error> {
    for (index, d) in seq.iter().enumerate() {
        if d.is_zero() {
            return Err(Error::ZeroDigit { index });
        }
    }
    Ok(seq
        .windows(2)
        .map(|pair| match pair[1].ratio(&pair[0]).expect("digits checked nonzero") {
            UnitDigit::One => Move::Stay,
            UnitDigit::I => Move::Forward1,
            UnitDigit::MinusOne => Move::Forward2,
            UnitDigit::MinusI => Move::Back1,
            UnitDigit::Zero => unreachable!("ratio of nonzero digits is nonzero"),
        })
        .collect())
}

/// An eight-state Moore machine generating one of the two digit
/// sequences. State (m, b) encodes m = q(x, n-1) mod 4 and b = ωₙ;
/// reading the next bit b' moves (m, b) to ((m + b) mod 4, b').
///
/// For the Lévy machine, state (m, 1) emits i^m and (m, 0) is silent;
/// for the shifted machine, (m, 1) emits i^m and (m, 0) emits -i^m, so
/// every state emits a nonzero digit.
#[derive(Clone, Debug)]
pub struct DigitAutomaton {
    curve: Curve,
    emissions: [UnitDigit; 8],
    edges: [[usize; 2]; 8],
}

impl DigitAutomaton {
    const fn state_id(m: usize, b: usize) -> usize {
        2 * m + b
    }

    /// Builds the machine for the given curve from the closed-form digit
    /// definition; no table is hard-coded.
    pub fn for_curve(curve: Curve) -> Self {
        let mut emissions = [UnitDigit::Zero; 8];
        let mut edges = [[0usize; 2]; 8];
        for m in 0..4 {
            for b in 0..2 {
                let id = Self::state_id(m, b);
                let rot = UnitDigit::power_of_i(m);
                emissions[id] = match (curve, b) {
                    (_, 1) => rot,
                    (Curve::Levy, _) => UnitDigit::Zero,
                    (Curve::Shifted, _) => rot.negated(),
                };
                for next_bit in 0..2 {
                    edges[id][next_bit] = Self::state_id((m + b) % 4, next_bit);
                }
            }
        }
        Self { curve, emissions, edges }
    }

    pub fn curve(&self) -> Curve {
        self.curve
    }

    pub fn state_count(&self) -> usize {
        8
    }

    /// Start state for a word whose first digit is `bit`.
    pub fn initial(&self, bit: u8) -> usize {
        Self::state_id(0, bit as usize)
    }

    pub fn emission(&self, state: usize) -> UnitDigit {
        self.emissions[state]
    }

    pub fn next(&self, state: usize, bit: u8) -> usize {
        self.edges[state][bit as usize]
    }

    /// Emissions along the unique walk reading ω₁…ωₙ.
    pub fn run(&self, w: &BinaryWord, n: usize) -> Vec<UnitDigit> {
        let mut out = Vec::with_capacity(n);
        if n == 0 {
            return out;
        }
        let mut state = self.initial(w.digit(1));
        out.push(self.emission(state));
        for idx in 2..=n {
            state = self.next(state, w.digit(idx));
            out.push(self.emission(state));
        }
        out
    }

    /// DOT serialization: eight nodes labeled by emission, sixteen edges;
    /// 0-edges blue, 1-edges red; start states drawn bold.
    pub fn to_dot(&self) -> String {
        let name = match self.curve {
            Curve::Levy => "levy_digits",
            Curve::Shifted => "shifted_digits",
        };
        let mut dot = String::new();
        dot.push_str(&format!("digraph {name} {{\n"));
        dot.push_str("  rankdir=LR;\n");
        dot.push_str("  node [shape=circle];\n");
        for m in 0..4 {
            for b in 0..2 {
                let id = Self::state_id(m, b);
                let start = if id == self.initial(0) || id == self.initial(1) {
                    ", style=bold"
                } else {
                    ""
                };
                dot.push_str(&format!(
                    "  s{id} [label=\"{}\", xlabel=\"q={m},b={b}\"{start}];\n",
                    self.emissions[id]
                ));
            }
        }
        for id in 0..8 {
            for bit in 0..2 {
                let color = if bit == 0 { "blue" } else { "red" };
                dot.push_str(&format!(
                    "  s{id} -> s{} [label=\"{bit}\", color={color}];\n",
                    self.edges[id][bit]
                ));
            }
        }
        dot.push_str("}\n");
        dot
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use UnitDigit::{MinusI, MinusOne, Zero, I as DigI, One as DigOne};

    fn word(bits: &[u8]) -> BinaryWord {
        BinaryWord::from_bits(bits)
    }

    #[test]
    fn levy_digits_of_the_section_four_point() {
        let w = word(&[1, 0, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(
            digit_sequence(Curve::Levy, &w, 9),
            vec![DigOne, Zero, Zero, DigI, MinusOne, Zero, MinusI, DigOne, Zero]
        );
    }

    #[test]
    fn levy_digits_of_one_rotate_every_step() {
        assert_eq!(
            digit_sequence(Curve::Levy, &BinaryWord::one(), 4),
            vec![DigOne, DigI, MinusOne, MinusI]
        );
        assert_eq!(
            digit_sequence(Curve::Levy, &BinaryWord::zero(), 5),
            vec![Zero; 5]
        );
    }

    #[test]
    fn shifted_digits_match_both_worked_examples() {
        let w = word(&[1, 0, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(
            digit_sequence(Curve::Shifted, &w, 9),
            vec![DigOne, MinusI, MinusI, DigI, MinusOne, DigI, MinusI, DigOne, MinusI]
        );
        let w = word(&[0, 1, 0, 1, 1, 0, 0, 1, 1, 0, 1]);
        assert_eq!(
            digit_sequence(Curve::Shifted, &w, 11),
            vec![MinusOne, DigOne, MinusI, DigI, MinusOne, DigI, DigI, MinusI, DigOne, MinusI, DigI]
        );
    }

    #[test]
    fn first_shifted_digit_follows_the_first_bit() {
        assert_eq!(digit_sequence(Curve::Shifted, &word(&[0, 1]), 1), vec![MinusOne]);
        assert_eq!(digit_sequence(Curve::Shifted, &word(&[1]), 1), vec![DigOne]);
    }

    #[test]
    fn revolving_condition_exact() {
        // Nonzero digits must advance 1 -> i -> -1 -> -i -> 1.
        assert!(satisfies_revolving_exact(&[DigOne, Zero, DigI, MinusOne, Zero, Zero, MinusI]));
        assert!(satisfies_revolving_exact(&[]));
        assert!(satisfies_revolving_exact(&[Zero, Zero]));
        assert!(!satisfies_revolving_exact(&[DigOne, MinusI]));
        assert!(!satisfies_revolving_exact(&[DigOne, DigOne]));
        // The shifted digits of x with bits (1,0) fail: ratio is -i.
        let gamma = digit_sequence(Curve::Shifted, &word(&[1, 0]), 2);
        assert!(!satisfies_revolving_exact(&gamma));
    }

    #[test]
    fn revolving_condition_float() {
        let alphabet = ThetaAlphabet::quarter_turn();
        let seq: Vec<Complex64> =
            [DigOne, Zero, DigI, MinusOne].iter().map(UnitDigit::to_complex).collect();
        assert_eq!(satisfies_revolving(&seq, &alphabet), Ok(true));
        let bad: Vec<Complex64> = [DigOne, MinusI].iter().map(UnitDigit::to_complex).collect();
        assert_eq!(satisfies_revolving(&bad, &alphabet), Ok(false));
        let outside = vec![Complex64::new(0.5, 0.5)];
        assert_eq!(
            satisfies_revolving(&outside, &alphabet),
            Err(Error::DigitOutsideAlphabet { index: 0 })
        );
    }

    #[test]
    fn quarter_turn_alphabet_members() {
        let alphabet = ThetaAlphabet::quarter_turn();
        assert_eq!(alphabet.members().len(), 5);
        let expected = [Zero, DigOne, DigI, MinusOne, MinusI];
        for (m, d) in alphabet.members().iter().zip(expected.iter()) {
            assert!((m - d.to_complex()).norm() <= 1e-12);
        }
        assert_eq!(alphabet.classify(Complex64::new(0.0, -1.0)), Some(4));
        assert_eq!(alphabet.classify(Complex64::new(0.3, 0.0)), None);
    }

    #[test]
    fn alphabet_angle_domain() {
        // theta = 2*pi*2/3 > pi.
        assert!(ThetaAlphabet::new(3, 2, false).is_err());
        // theta = pi is allowed, -pi is not.
        assert!(ThetaAlphabet::new(2, 1, false).is_ok());
        assert!(ThetaAlphabet::new(2, 1, true).is_err());
        assert!(ThetaAlphabet::new(0, 1, false).is_err());
        let clockwise = ThetaAlphabet::new(4, 1, true).unwrap();
        assert!(clockwise.theta() < 0.0);
    }

    #[test]
    fn move_classification() {
        // (1, -i): ratio -i, the bits were (1, 0).
        assert_eq!(classify_moves(&[DigOne, MinusI]).unwrap(), vec![Move::Back1]);
        // (-1, 1): ratio -1, the bits were (0, 1).
        assert_eq!(classify_moves(&[MinusOne, DigOne]).unwrap(), vec![Move::Forward2]);
        // (i, i): ratio 1.
        assert_eq!(classify_moves(&[DigI, DigI]).unwrap(), vec![Move::Stay]);
        assert_eq!(classify_moves(&[DigOne, DigI]).unwrap(), vec![Move::Forward1]);
        assert_eq!(
            classify_moves(&[DigOne, Zero]),
            Err(Error::ZeroDigit { index: 1 })
        );
    }

    #[test]
    fn ratio_law_links_moves_to_bits() {
        // gamma_{k+1}/gamma_k = (-1)^(bit_k - bit_{k+1}) * i^bit_k, exhaustively
        // over all words of length <= 12.
        for len in 1..=12usize {
            for pattern in 0u32..1 << len {
                let bits: Vec<u8> =
                    (0..len).map(|j| ((pattern >> (len - 1 - j)) & 1) as u8).collect();
                let w = word(&bits);
                let gamma = digit_sequence(Curve::Shifted, &w, len);
                for k in 0..len - 1 {
                    let ratio = gamma[k + 1].ratio(&gamma[k]).unwrap();
                    let mut expected = UnitDigit::power_of_i(bits[k] as usize);
                    if (bits[k] + bits[k + 1]) % 2 == 1 {
                        expected = expected.negated();
                    }
                    assert_eq!(ratio, expected, "bits {bits:?} at {k}");
                }
            }
        }
    }

    #[test]
    fn machines_reproduce_the_closed_form() {
        let g1 = DigitAutomaton::for_curve(Curve::Levy);
        let g2 = DigitAutomaton::for_curve(Curve::Shifted);
        let w = word(&[1, 0, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(g1.run(&w, 9), digit_sequence(Curve::Levy, &w, 9));
        assert_eq!(g2.run(&w, 9), digit_sequence(Curve::Shifted, &w, 9));
        assert_eq!(g2.run(&BinaryWord::one(), 6), digit_sequence(Curve::Shifted, &BinaryWord::one(), 6));
    }

    #[test]
    fn machine_locally_matches_the_transition_rule() {
        let g1 = DigitAutomaton::for_curve(Curve::Levy);
        // State (0,1) reading 1 goes to (1,1), which emits i.
        let s01 = g1.initial(1);
        let next = g1.next(s01, 1);
        assert_eq!(g1.emission(next), DigI);
        let g2 = DigitAutomaton::for_curve(Curve::Shifted);
        // State (0,1) reading 0 goes to (1,0), which emits -i.
        let next = g2.next(g2.initial(1), 0);
        assert_eq!(g2.emission(next), MinusI);
        // Start emissions: initial1 emits 1, initial0 emits -1 (shifted).
        assert_eq!(g2.emission(g2.initial(1)), DigOne);
        assert_eq!(g2.emission(g2.initial(0)), MinusOne);
        assert_eq!(g1.emission(g1.initial(0)), Zero);
    }

    #[test]
    fn silent_states() {
        let g1 = DigitAutomaton::for_curve(Curve::Levy);
        let silent = (0..8).filter(|&s| g1.emission(s).is_zero()).count();
        assert_eq!(silent, 4);
        let g2 = DigitAutomaton::for_curve(Curve::Shifted);
        assert!((0..8).all(|s| !g2.emission(s).is_zero()));
    }

    #[test]
    fn dot_output_shape() {
        for curve in [Curve::Levy, Curve::Shifted] {
            let dot = DigitAutomaton::for_curve(curve).to_dot();
            assert!(dot.starts_with("digraph"));
            assert_eq!(dot.matches(" -> ").count(), 16);
            // Eight node declarations: lines mentioning a label but no edge.
            let nodes = dot
                .lines()
                .filter(|l| l.contains("label=") && !l.contains("->"))
                .count();
            assert_eq!(nodes, 8);
            assert_eq!(dot.matches("color=blue").count(), 8);
            assert_eq!(dot.matches("color=red").count(), 8);
        }
    }
}
