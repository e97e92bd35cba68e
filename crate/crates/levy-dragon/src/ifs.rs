//! Affine complex contractions, their fixed points and compatibility
//! checks, and deterministic polyline approximations of the attractors.

use num_complex::Complex64;

use crate::exact::DyadicGaussian;
use crate::{Curve, Error};

/// z ↦ linear·z + offset. Exact coefficients for the standard maps and
/// verification work, `Complex64` for rendering and arbitrary parameters.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct AffineMap<T> {
    pub linear: T,
    pub offset: T,
}

pub type ExactMap = AffineMap<DyadicGaussian>;
pub type FloatMap = AffineMap<Complex64>;

/// Junction witness of `de_rham_check`: the curve built from (m0, m1) is
/// continuous at parameter 1/2 iff both sides agree.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct DeRhamWitness<T> {
    pub compatible: bool,
    /// m1(fix(m0)), the right map applied to the left endpoint.
    pub left: T,
    /// m0(fix(m1)).
    pub right: T,
}

impl AffineMap<DyadicGaussian> {
    pub fn apply(&self, z: &DyadicGaussian) -> Result<DyadicGaussian, Error> {
        self.linear.checked_mul(z)?.checked_add(&self.offset)
    }

    /// The unique solution of cz + d = z: d/(1-c). Errors if c = 1 or if
    /// the quotient leaves the dyadic Gaussian ring.
    pub fn fixed_point(&self) -> Result<DyadicGaussian, Error> {
        let denom = DyadicGaussian::ONE.checked_sub(&self.linear)?;
        if denom.is_zero() {
            return Err(Error::DegenerateMap);
        }
        self.offset.checked_div(&denom)
    }

    /// |linear| < 1, decided on integers: |a+bi|^2 < 4^k.
    pub fn is_contraction(&self) -> Result<bool, Error> {
        let a = self.linear.re_numerator();
        let b = self.linear.im_numerator();
        let k = self.linear.exponent();
        let norm = a
            .checked_mul(a)
            .and_then(|aa| b.checked_mul(b).and_then(|bb| aa.checked_add(bb)))
            .ok_or(Error::Overflow)?;
        if k > 63 {
            // Numerators are odd once k > 0, so |linear| >= 2^-k > 0 means
            // norm >= 1; 4^k beyond i128 range then forces norm < 4^k.
            return Ok(true);
        }
        Ok(norm < 1i128 << (2 * k))
    }

    /// S ∘ m ∘ S⁻¹ for the translation S(z) = z + s:
    /// z ↦ c·z + (d + s − c·s).
    pub fn conjugate_by_shift(&self, s: &DyadicGaussian) -> Result<Self, Error> {
        let offset = self.offset.checked_add(s)?.checked_sub(&self.linear.checked_mul(s)?)?;
        Ok(Self { linear: self.linear, offset })
    }

    pub fn to_float(&self) -> FloatMap {
        AffineMap { linear: self.linear.to_complex(), offset: self.offset.to_complex() }
    }
}

impl AffineMap<Complex64> {
    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.linear * z + self.offset
    }

    pub fn fixed_point(&self) -> Result<Complex64, Error> {
        let denom = Complex64::new(1.0, 0.0) - self.linear;
        if denom.norm() == 0.0 {
            return Err(Error::DegenerateMap);
        }
        Ok(self.offset / denom)
    }

    pub fn is_contraction(&self) -> bool {
        self.linear.norm() < 1.0
    }

    pub fn conjugate_by_shift(&self, s: Complex64) -> Self {
        Self { linear: self.linear, offset: self.offset + s - self.linear * s }
    }
}

/// The Lévy dragon pair: ψ₀(z) = ((1-i)/2)z, ψ₁(z) = ((1+i)/2)z + (1-i)/2.
pub fn levy_maps() -> [ExactMap; 2] {
    let alpha = DyadicGaussian::new(1, -1, 1);
    let one_minus_alpha = DyadicGaussian::new(1, 1, 1);
    [
        AffineMap { linear: alpha, offset: DyadicGaussian::ZERO },
        AffineMap { linear: one_minus_alpha, offset: alpha },
    ]
}

/// The pair fixing the translated curve: φ₀(z) = ((1-i)/2)z - 1/2,
/// φ₁(z) = ((1+i)/2)z + 1/2. Obtained from ψᵢ by conjugation with the
/// shift s = (-1+i)/2; constructed that way here so the displayed form is
/// checked by tests rather than assumed.
pub fn shifted_maps() -> [ExactMap; 2] {
    let s = DyadicGaussian::new(-1, 1, 1);
    let [psi0, psi1] = levy_maps();
    [
        psi0.conjugate_by_shift(&s).expect("small exact coefficients"),
        psi1.conjugate_by_shift(&s).expect("small exact coefficients"),
    ]
}

/// The two-parameter family: g₀(z) = ((1-i)/2)z + ((1+i)/2)τ,
/// g₁(z) = ((1+i)/2)z + ((1-i)/2)(τ+λ). λ = 1, τ = 0 restores the Lévy
/// pair; λ = 1, τ = s the shifted pair.
pub fn general_family(
    lambda: &DyadicGaussian,
    tau: &DyadicGaussian,
) -> Result<[ExactMap; 2], Error> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let alpha = DyadicGaussian::new(1, -1, 1);
    let one_minus_alpha = DyadicGaussian::new(1, 1, 1);
    Ok([
        AffineMap { linear: alpha, offset: one_minus_alpha.checked_mul(tau)? },
        AffineMap { linear: one_minus_alpha, offset: alpha.checked_mul(&tau.checked_add(lambda)?)? },
    ])
}

pub fn general_family_float(lambda: Complex64, tau: Complex64) -> Result<[FloatMap; 2], Error> {
    if lambda.norm() == 0.0 {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let alpha = Complex64::new(0.5, -0.5);
    let one_minus_alpha = Complex64::new(0.5, 0.5);
    Ok([
        AffineMap { linear: alpha, offset: one_minus_alpha * tau },
        AffineMap { linear: one_minus_alpha, offset: alpha * (tau + lambda) },
    ])
}

/// Checks the junction condition m1(fix(m0)) = m0(fix(m1)) exactly.
pub fn de_rham_check(m0: &ExactMap, m1: &ExactMap) -> Result<DeRhamWitness<DyadicGaussian>, Error> {
    if !(m0.is_contraction()? && m1.is_contraction()?) {
        return Err(Error::NotContractive);
    }
    let left = m1.apply(&m0.fixed_point()?)?;
    let right = m0.apply(&m1.fixed_point()?)?;
    Ok(DeRhamWitness { compatible: left == right, left, right })
}

/// Float junction check, compatible within 1e-12.
pub fn de_rham_check_float(m0: &FloatMap, m1: &FloatMap) -> Result<DeRhamWitness<Complex64>, Error> {
    if !(m0.is_contraction() && m1.is_contraction()) {
        return Err(Error::NotContractive);
    }
    let left = m1.apply(m0.fixed_point()?);
    let right = m0.apply(m1.fixed_point()?);
    Ok(DeRhamWitness { compatible: (left - right).norm() <= 1e-12, left, right })
}

/// Default subdivision depth cap; ~2^26 vertices is the memory guard.
/// The CLI lets the environment override it.
pub const DEFAULT_MAX_DEPTH: u32 = 26;

/// A depth-d approximation of the curve: vertex j is the curve value at
/// parameter j/2^depth.
#[derive(Clone, Debug)]
pub struct Polyline {
    pub vertices: Vec<Complex64>,
    pub depth: u32,
    pub tag: String,
}

fn check_depth(depth: u32, max_depth: u32) -> Result<(), Error> {
    if depth > max_depth {
        return Err(Error::DepthLimit { requested: depth, max: max_depth });
    }
    Ok(())
}

/// Subdivides [fix(m0), fix(m1)] depth times: each pass maps the current
/// vertex list through m0 (left half of the parameter interval) and m1
/// (right half), sharing the junction vertex. Vertex count is 2^depth + 1.
pub fn subdivide(
    m0: &FloatMap,
    m1: &FloatMap,
    depth: u32,
    max_depth: u32,
    tag: impl Into<String>,
) -> Result<Polyline, Error> {
    check_depth(depth, max_depth)?;
    let witness = de_rham_check_float(m0, m1)?;
    if !witness.compatible {
        return Err(Error::IncompatibleMaps {
            left: format!("{}", witness.left),
            right: format!("{}", witness.right),
        });
    }
    let mut vertices = vec![m0.fixed_point()?, m1.fixed_point()?];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(2 * vertices.len() - 1);
        next.extend(vertices.iter().map(|&z| m0.apply(z)));
        next.extend(vertices.iter().skip(1).map(|&z| m1.apply(z)));
        vertices = next;
    }
    Ok(Polyline { vertices, depth, tag: tag.into() })
}

/// Exact-arithmetic subdivision for dyadic-coefficient maps; used by the
/// structural-equality tests at modest depths.
pub fn subdivide_exact(
    m0: &ExactMap,
    m1: &ExactMap,
    depth: u32,
    max_depth: u32,
) -> Result<Vec<DyadicGaussian>, Error> {
    check_depth(depth, max_depth)?;
    let witness = de_rham_check(m0, m1)?;
    if !witness.compatible {
        return Err(Error::IncompatibleMaps {
            left: witness.left.to_string(),
            right: witness.right.to_string(),
        });
    }
    let mut vertices = vec![m0.fixed_point()?, m1.fixed_point()?];
    for _ in 0..depth {
        let mut next = Vec::with_capacity(2 * vertices.len() - 1);
        for z in &vertices {
            next.push(m0.apply(z)?);
        }
        for z in vertices.iter().skip(1) {
            next.push(m1.apply(z)?);
        }
        vertices = next;
    }
    Ok(vertices)
}

/// The exact map pair for one of the two named curves.
pub fn curve_maps(curve: Curve) -> [ExactMap; 2] {
    match curve {
        Curve::Levy => levy_maps(),
        Curve::Shifted => shifted_maps(),
    }
}
