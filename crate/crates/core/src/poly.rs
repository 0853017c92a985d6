//! Polynomials with coefficients in a finite-dimensional algebra.
//!
//! A [`Poly`] is only the additive group `A[X]`; multiplication depends on the
//! ring it lives in and is provided by [`crate::flip_poly::FlipPolyRing`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalars::Rational;

/// Finite-support map from degree to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    coeffs: BTreeMap<usize, AlgebraElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(coeff: AlgebraElement, degree: usize) -> Self {
        let mut p = Poly::zero();
        p.add_term(degree, &coeff);
        p
    }

    pub fn constant(coeff: AlgebraElement) -> Self {
        Self::monomial(coeff, 0)
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, AlgebraElement)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (d, c) in terms {
            p.add_term(d, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> Option<&AlgebraElement> {
        self.coeffs.get(&degree)
    }

    /// Coefficient at `degree`, or zero of dimension `dim`.
    pub fn coeff_or_zero(&self, degree: usize, dim: usize) -> AlgebraElement {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| AlgebraElement::zero(dim))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &AlgebraElement)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient dimension, if the polynomial is nonzero.
    pub fn coeff_dim(&self) -> Option<usize> {
        self.coeffs.values().next().map(AlgebraElement::dim)
    }

    pub fn check_dim(&self, dim: usize) -> Result<()> {
        match self.coeffs.values().find(|c| c.dim() != dim) {
            Some(c) => Err(Error::DimensionMismatch {
                expected: dim,
                got: c.dim(),
            }),
            None => Ok(()),
        }
    }

    pub fn add_term(&mut self, degree: usize, coeff: &AlgebraElement) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&degree) {
            Some(c) => {
                c.add_assign(coeff);
                if c.is_zero() {
                    self.coeffs.remove(&degree);
                }
            }
            None => {
                self.coeffs.insert(degree, coeff.clone());
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.add_term(d, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.map_coeffs(|_, c| -c)
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        self.map_coeffs(|_, c| c.scale(k))
    }

    /// Applies `f(degree, coeff)` to every stored term; zero results are dropped.
    pub fn map_coeffs<F: FnMut(usize, &AlgebraElement) -> AlgebraElement>(&self, mut f: F) -> Poly {
        Poly::from_terms(self.terms().map(|(d, c)| (d, f(d, c))))
    }

    /// Re-indexes degrees, summing coefficients that land on the same degree.
    pub fn map_degrees<F: FnMut(usize) -> usize>(&self, mut f: F) -> Poly {
        Poly::from_terms(self.terms().map(|(d, c)| (f(d), c.clone())))
    }

    /// Keeps the terms whose degree satisfies `keep`.
    pub fn filter_degrees<F: FnMut(usize) -> bool>(&self, mut keep: F) -> Poly {
        Poly::from_terms(
            self.terms()
                .filter(|(d, _)| keep(*d))
                .map(|(d, c)| (d, c.clone())),
        )
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson(
            self.terms()
                .map(|(d, c)| (d, c.coords().to_vec()))
                .collect(),
        )
    }

    pub fn from_json(json: &PolyJson) -> Poly {
        Poly::from_terms(
            json.0
                .iter()
                .map(|(d, c)| (*d, AlgebraElement::from_coords(c.clone()))),
        )
    }
}

/// Writes `[c0,c1,...] + [..]*X + [..]*X^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (d, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let coords: Vec<String> = c.coords().iter().map(Rational::to_string).collect();
            write!(f, "[{}]", coords.join(","))?;
            match d {
                0 => {}
                1 => f.write_str("*X")?,
                _ => write!(f, "*X^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON mirror: `{"degree": ["p/q", ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyJson(pub BTreeMap<usize, Vec<Rational>>);
