//! The Cayley double `Cay(A, mu)` and iterated doubling towers.
//!
//! `Cay(A, mu)` is `A ⊕ A` with
//!
//! ```text
//! (a, b)(c, d) = (ac + mu d* b, da + b c*)      (a, b)* = (a*, -b)
//! ```
//!
//! Basis order: `(e_i, 0)` keeps index `i`, `(0, e_i)` gets index `dim(A) + i`,
//! so `A` embeds into its double as an index-preserving prefix.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{AlgebraElement, Involution, StarAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::linalg::{zero_vector, Matrix};
use crate::scalars::Rational;

/// The doubling parameters of a tower, applied left to right starting from the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublingSpec {
    mus: Vec<Rational>,
}

impl DoublingSpec {
    pub fn new(mus: Vec<Rational>) -> Result<Self> {
        if mus.iter().any(Rational::is_zero) {
            return Err(Error::ZeroMu);
        }
        Ok(DoublingSpec { mus })
    }

    pub fn from_integers(mus: &[i64]) -> Result<Self> {
        Self::new(mus.iter().map(|&m| Rational::from_integer(m)).collect())
    }

    pub fn mus(&self) -> &[Rational] {
        &self.mus
    }
}

/// Parses the comma-separated `--mus` form, e.g. `-1,-1,1` or `-1,1/2`.
impl FromStr for DoublingSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Self::new(Vec::new());
        }
        let mus = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Rational>>>()?;
        Self::new(mus)
    }
}

pub fn cayley_double(a: &StarAlgebra, mu: &Rational) -> Result<StarAlgebra> {
    if mu.is_zero() {
        return Err(Error::ZeroMu);
    }
    let n = a.dim();
    let big = 2 * n;
    let lift = |v: AlgebraElement, offset: usize| -> Vec<(usize, Rational)> {
        v.coords()
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k + offset, x.clone()))
            .collect()
    };
    let mut table = Vec::with_capacity(big * big);
    for p in 0..big {
        for q in 0..big {
            let entry = match (p < n, q < n) {
                // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
                (true, true) => lift(a.product(&a.basis(p), &a.basis(q)), 0),
                // (e_i, 0)(0, e_j) = (0, e_j e_i)
                (true, false) => lift(a.product(&a.basis(q - n), &a.basis(p)), n),
                // (0, e_i)(e_j, 0) = (0, e_i e_j*)
                (false, true) => lift(a.product(&a.basis(p - n), &a.conj(&a.basis(q))), n),
                // (0, e_i)(0, e_j) = (mu e_j* e_i, 0)
                (false, false) => lift(
                    a.product(&a.conj(&a.basis(q - n)), &a.basis(p - n))
                        .scale(mu),
                    0,
                ),
            };
            table.push(entry);
        }
    }
    let sc = StructureConstants::from_sparse(big, a.structure().unit_index(), table)?;

    let inner = a.involution().matrix();
    let mut rows = Vec::with_capacity(big);
    for i in 0..big {
        let mut row = zero_vector(big);
        if i < n {
            for (j, slot) in row.iter_mut().take(n).enumerate() {
                *slot = inner.get(i, j).clone();
            }
        } else {
            row[i] = -Rational::one();
        }
        rows.push(row);
    }
    let star = Involution::new(Matrix::from_rows(rows)?, &sc)?;
    StarAlgebra::new(sc, star)
}

pub fn tower(spec: &DoublingSpec) -> Result<StarAlgebra> {
    spec.mus
        .iter()
        .try_fold(StarAlgebra::rationals(), |acc, mu| cayley_double(&acc, mu))
}

/// Preset algebras: the `mu = -1` tower and its split (`mu = +1`) counterparts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedAlgebra {
    /// the rationals
    R,
    C,
    CSplit,
    H,
    HSplit,
    O,
    OSplit,
    /// sedenions
    S,
}

impl NamedAlgebra {
    pub const ALL: [NamedAlgebra; 8] = [
        NamedAlgebra::R,
        NamedAlgebra::C,
        NamedAlgebra::CSplit,
        NamedAlgebra::H,
        NamedAlgebra::HSplit,
        NamedAlgebra::O,
        NamedAlgebra::OSplit,
        NamedAlgebra::S,
    ];

    pub fn mus(self) -> &'static [i64] {
        match self {
            NamedAlgebra::R => &[],
            NamedAlgebra::C => &[-1],
            NamedAlgebra::CSplit => &[1],
            NamedAlgebra::H => &[-1, -1],
            NamedAlgebra::HSplit => &[1, 1],
            NamedAlgebra::O => &[-1, -1, -1],
            NamedAlgebra::OSplit => &[1, 1, 1],
            NamedAlgebra::S => &[-1, -1, -1, -1],
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            NamedAlgebra::R => "R",
            NamedAlgebra::C => "C",
            NamedAlgebra::CSplit => "C'",
            NamedAlgebra::H => "H",
            NamedAlgebra::HSplit => "H'",
            NamedAlgebra::O => "O",
            NamedAlgebra::OSplit => "O'",
            NamedAlgebra::S => "S",
        }
    }

    pub fn build(self) -> StarAlgebra {
        named(self)
    }
}

impl fmt::Display for NamedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for NamedAlgebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        NamedAlgebra::ALL
            .into_iter()
            .find(|n| n.token() == s.trim())
            .ok_or_else(|| Error::UnknownAlgebra(s.to_string()))
    }
}

pub fn named(name: NamedAlgebra) -> StarAlgebra {
    let spec = DoublingSpec::from_integers(name.mus()).expect("preset parameters are nonzero");
    tower(&spec).expect("preset towers are valid")
}

/// Looks up a preset by its CLI token (`R`, `C`, `C'`, `H`, `H'`, `O`, `O'`, `S`).
pub fn named_by_token(token: &str) -> Result<StarAlgebra> {
    Ok(named(token.parse()?))
}

fn sparse_candidates(n: usize) -> Vec<AlgebraElement> {
    let mut out = Vec::new();
    for i in 0..n {
        out.push(AlgebraElement::basis(n, i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for sign in [1, -1] {
                let mut v = zero_vector(n);
                v[i] = Rational::one();
                v[j] = Rational::from_integer(sign);
                out.push(AlgebraElement::from_coords(v));
            }
        }
    }
    out
}

/// Looks for `x, y != 0` with `xy = 0` among vectors with at most two `±1` entries.
///
/// At most `search_budget` products are evaluated. `None` means nothing was
/// found within the budget, not that the algebra has no zero divisors.
pub fn find_zero_divisor(
    a: &StarAlgebra,
    search_budget: usize,
) -> Option<(AlgebraElement, AlgebraElement)> {
    let cands = sparse_candidates(a.dim());
    cands
        .iter()
        .flat_map(|x| cands.iter().map(move |y| (x, y)))
        .take(search_budget)
        .find(|(x, y)| a.product(x, y).is_zero())
        .map(|(x, y)| (x.clone(), y.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(a: &StarAlgebra, coords: &[i64]) -> AlgebraElement {
        assert_eq!(coords.len(), a.dim());
        AlgebraElement::from_integers(coords)
    }

    #[test]
    fn complex_and_split_complex_units() {
        let c = cayley_double(&StarAlgebra::rationals(), &Rational::from_integer(-1)).unwrap();
        let i = c.basis(1);
        assert_eq!(c.mul(&i, &i).unwrap(), el(&c, &[-1, 0]));
        let cs = cayley_double(&StarAlgebra::rationals(), &Rational::one()).unwrap();
        let j = cs.basis(1);
        assert_eq!(cs.mul(&j, &j).unwrap(), el(&cs, &[1, 0]));
    }

    #[test]
    fn quaternion_units_from_doubling() {
        let h = named(NamedAlgebra::H);
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        // (i,0)(0,1) = (0,i)
        assert_eq!(h.mul(&i, &j).unwrap(), k);
        assert_eq!(h.mul(&j, &i).unwrap(), -&k);
        assert_eq!(h.mul(&j, &k).unwrap(), i);
        assert_eq!(h.mul(&k, &i).unwrap(), j);
    }

    #[test]
    fn zero_mu_rejected() {
        assert_eq!(
            cayley_double(&StarAlgebra::rationals(), &Rational::zero()),
            Err(Error::ZeroMu)
        );
        assert_eq!(DoublingSpec::from_integers(&[-1, 0]), Err(Error::ZeroMu));
        assert_eq!("1,0".parse::<DoublingSpec>(), Err(Error::ZeroMu));
    }

    #[test]
    fn empty_tower_is_rationals() {
        let r = tower(&DoublingSpec::new(vec![]).unwrap()).unwrap();
        assert_eq!(r, StarAlgebra::rationals());
        assert!(r.involution().is_trivial());
    }

    #[test]
    fn tower_dimensions() {
        for len in 0..=5 {
            let spec = DoublingSpec::from_integers(&vec![-1; len]).unwrap();
            assert_eq!(tower(&spec).unwrap().dim(), 1 << len);
        }
    }

    #[test]
    fn mus_flag_parsing() {
        let s: DoublingSpec = "-1,-1,1".parse().unwrap();
        assert_eq!(s, DoublingSpec::from_integers(&[-1, -1, 1]).unwrap());
        assert_eq!("".parse::<DoublingSpec>().unwrap().mus().len(), 0);
        assert!("a,b".parse::<DoublingSpec>().is_err());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            "Q".parse::<NamedAlgebra>(),
            Err(Error::UnknownAlgebra(_))
        ));
        assert_eq!("O'".parse::<NamedAlgebra>().unwrap(), NamedAlgebra::OSplit);
    }

    #[test]
    fn split_complex_zero_divisor() {
        let cs = named(NamedAlgebra::CSplit);
        let (x, y) = find_zero_divisor(&cs, usize::MAX).unwrap();
        assert!(cs.mul(&x, &y).unwrap().is_zero());
        assert!(!x.is_zero() && !y.is_zero());
        // (1 + j)(1 - j) = 1 - j^2 = 0
        let p = cs.mul(&el(&cs, &[1, 1]), &el(&cs, &[1, -1])).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn division_algebras_have_no_sparse_zero_divisors() {
        for name in [
            NamedAlgebra::R,
            NamedAlgebra::C,
            NamedAlgebra::H,
            NamedAlgebra::O,
        ] {
            assert_eq!(find_zero_divisor(&named(name), usize::MAX), None, "{name}");
        }
    }

    #[test]
    fn search_budget_is_respected() {
        let cs = named(NamedAlgebra::CSplit);
        assert_eq!(find_zero_divisor(&cs, 0), None);
    }
}
