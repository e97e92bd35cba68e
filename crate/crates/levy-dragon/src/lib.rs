pub mod binary;
pub mod ifs;
pub mod render;
pub mod revolving;
pub mod curve;
pub mod error;
pub mod exact;

pub mod verify;

pub use error::Error;

/// Which of the two curves an operation refers to: the Lévy dragon (the
/// de Rham solution f with f(0) = 0, f(1) = 1) or its translate by
/// s = (-1+i)/2 (the solution G with G(0) = s, G(1) = 1 + s).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Curve {
    Levy,
    Shifted,
}

impl std::fmt::Display for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Curve::Levy => "levy",
            Curve::Shifted => "shifted",
        })
    }
}

impl std::str::FromStr for Curve {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "levy" => Ok(Curve::Levy),
            "shifted" => Ok(Curve::Shifted),
            other => Err(Error::Parse(format!("curve {other:?}"))),
        }
    }
}
