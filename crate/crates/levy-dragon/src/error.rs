use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numerator left the 128-bit range. Exact arithmetic never wraps;
    /// callers either reduce the word width or switch to the float path.
    #[error("integer overflow in exact dyadic arithmetic (numerator exceeds 128 bits)")]
    Overflow,

    /// Input point outside the unit interval.
    #[error("point {0} is outside [0, 1]")]
    OutOfRange(String),

    /// An operation that needs a terminating binary expansion was given
    /// a point that has none (or the expansion is all ones, x = 1).
    #[error("operation requires a terminating dyadic point")]
    NonDyadic,

    /// x = 0 has no last one-digit, so tail sums starting there are undefined.
    #[error("operation requires a word with at least one 1-digit")]
    EmptyWord,

    /// An affine map with |linear| >= 1 cannot drive any of the limit
    /// constructions (fixed-point iteration, series tails, subdivision).
    #[error("affine map is not a contraction (|linear coefficient| >= 1)")]
    NotContractive,

    /// linear == 1 leaves cz + d without a fixed point.
    #[error("affine map is degenerate: linear coefficient is 1")]
    DegenerateMap,

    /// Quotient does not exist inside the dyadic Gaussian ring
    /// (denominator norm is not a power of two).
    #[error("division has no exact dyadic Gaussian result")]
    InexactDivision,

    /// The two maps disagree at the junction point, so the subdivided
    /// curve would be discontinuous at parameter 1/2.
    #[error("maps are incompatible at the junction: m1(fix(m0)) = {left}, m0(fix(m1)) = {right}")]
    IncompatibleMaps { left: String, right: String },

    /// Subdivision depth above the configured cap.
    #[error("depth {requested} exceeds the cap {max} (override with DRAGON_MAX_DEPTH)")]
    DepthLimit { requested: u32, max: u32 },

    /// Rendering needs at least two vertices.
    #[error("polyline has fewer than two vertices")]
    TooFewVertices,

    /// A float digit was not close to any member of the alphabet.
    #[error("digit at index {index} is not a member of the alphabet (tolerance 1e-12)")]
    DigitOutsideAlphabet { index: usize },

    /// Move classification is defined only for nowhere-zero sequences.
    #[error("zero digit at index {index}; moves are defined for nonzero digits only")]
    ZeroDigit { index: usize },

    /// No walk of the digit graph emits this sequence.
    #[error("digit at index {index} is not emitted by any continuation of the walk")]
    Unrealizable { index: usize },

    /// Construction parameter outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Unparseable textual input.
    #[error("cannot parse {0}")]
    Parse(String),
}
