//! The involutions `alpha` and `beta` of `A[X; *]^fl` extending `*` on `A`.
//!
//! ```text
//! alpha(sum a_i X^i) = sum (-1)^i *^(i+1)(a_i) X^i
//! beta (sum a_i X^i) = sum        *^(i+1)(a_i) X^i
//! ```
//!
//! `alpha` is the involution used whenever `A[X; *]^fl` is treated as a *-algebra.

use std::fmt;
use std::str::FromStr;

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::flip_poly::FlipPolyRing;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Alpha,
    Beta,
}

impl FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Which::Alpha),
            "beta" => Ok(Which::Beta),
            _ => Err(Error::Parse(format!(
                "unknown involution `{s}` (expected alpha or beta)"
            ))),
        }
    }
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Alpha => "alpha",
            Which::Beta => "beta",
        })
    }
}

fn require_star_skew(ring: &FlipPolyRing) -> Result<()> {
    if ring.is_star_skew() {
        Ok(())
    } else {
        Err(Error::NotStarSkew(
            "sigma must be the involution, delta zero, and the product flipped".into(),
        ))
    }
}

fn apply(ring: &FlipPolyRing, p: &Poly, alternate: bool) -> Result<Poly> {
    require_star_skew(ring)?;
    p.check_dim(ring.dim())?;
    let alg = ring.algebra();
    Ok(p.map_coeffs(|i, a| match (i % 2, alternate) {
        (0, _) => alg.conj(a),
        (_, true) => -a,
        (_, false) => a.clone(),
    }))
}

pub fn alpha(ring: &FlipPolyRing, p: &Poly) -> Result<Poly> {
    apply(ring, p, true)
}

pub fn beta(ring: &FlipPolyRing, p: &Poly) -> Result<Poly> {
    apply(ring, p, false)
}

pub fn involution(ring: &FlipPolyRing, which: Which, p: &Poly) -> Result<Poly> {
    match which {
        Which::Alpha => alpha(ring, p),
        Which::Beta => beta(ring, p),
    }
}

/// Necessary conditions on a proposed image `gamma(X) = a + bX` of an
/// involution extending `*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeOneCheck {
    pub a: AlgebraElement,
    pub b: AlgebraElement,
    /// `gamma(X)` has degree exactly 1
    pub degree_one: bool,
    /// `b^2 = 1`
    pub b_squared_is_one: bool,
    /// `a* + a b* = 0`
    pub a_star_plus_a_b_star_vanishes: bool,
    /// `c* a = a c` for every basis `c`
    pub twisted_commutation: bool,
}

impl DegreeOneCheck {
    pub fn passed(&self) -> bool {
        self.degree_one
            && self.b_squared_is_one
            && self.a_star_plus_a_b_star_vanishes
            && self.twisted_commutation
    }
}

impl fmt::Display for DegreeOneCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        writeln!(f, "image of X: a = [{}], b = [{}]", self.a, self.b)?;
        writeln!(f, "{} degree is 1", mark(self.degree_one))?;
        writeln!(f, "{} b^2 = 1", mark(self.b_squared_is_one))?;
        writeln!(
            f,
            "{} a* + ab* = 0",
            mark(self.a_star_plus_a_b_star_vanishes)
        )?;
        writeln!(
            f,
            "{} c*a = ac for all basis c",
            mark(self.twisted_commutation)
        )
    }
}

pub fn check_degree_one_image(ring: &FlipPolyRing, image: &Poly) -> Result<DegreeOneCheck> {
    require_star_skew(ring)?;
    image.check_dim(ring.dim())?;
    let alg = ring.algebra();
    let n = ring.dim();
    let a = image.coeff_or_zero(0, n);
    let b = image.coeff_or_zero(1, n);
    let degree_one = image.degree() == Some(1);
    let b_squared_is_one = alg.product(&b, &b) == alg.one();
    let a_star_plus_a_b_star_vanishes = (&alg.conj(&a) + &alg.product(&a, &alg.conj(&b))).is_zero();
    let twisted_commutation = alg
        .basis_elements()
        .iter()
        .all(|c| alg.product(&alg.conj(c), &a) == alg.product(&a, c));
    Ok(DegreeOneCheck {
        a,
        b,
        degree_one,
        b_squared_is_one,
        a_star_plus_a_b_star_vanishes,
        twisted_commutation,
    })
}
