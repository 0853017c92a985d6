//! Finite-dimensional unital *-algebras given by structure constants.
//!
//! The commuter, the three nuclei and the center of an algebra are all
//! kernels of linear maps built from structure constants, so they are
//! computed exactly by row reduction. Flexibility and alternativity are
//! decided on basis triples through the linearized identities, which is
//! equivalent to the quadratic forms in characteristic zero.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    is_zero_vector, kernel_from_images, unit_vector, zero_vector, Matrix, Subspace,
};
use crate::scalars::Rational;

/// An element of an algebra, as coordinates relative to the fixed basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    coords: Vec<Rational>,
}

impl AlgebraElement {
    pub fn from_coords(coords: Vec<Rational>) -> Self {
        AlgebraElement { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        AlgebraElement {
            coords: coords.iter().map(|&c| Rational::from_integer(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement {
            coords: zero_vector(dim),
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        AlgebraElement {
            coords: unit_vector(dim, i),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        AlgebraElement {
            coords: self.coords.iter().map(|x| x * k).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        debug_assert_eq!(self.dim(), other.dim());
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    pub fn sub_assign(&mut self, other: &AlgebraElement) {
        debug_assert_eq!(self.dim(), other.dim());
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.coords.iter().filter(|x| !x.is_zero()).count()
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

/// Writes the element literal form, e.g. `1/2*e0 - e3`.
impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "e{i}")?;
            } else {
                write!(f, "{mag}*e{i}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

type SparseVec = Vec<(usize, Rational)>;

fn sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Multiplication table of a finite-dimensional unital algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    unit_index: usize,
    table: Vec<SparseVec>,
}

impl StructureConstants {
    /// `table[i][j]` holds the coordinates of `e_i * e_j`.
    pub fn new(dim: usize, unit_index: usize, table: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        if unit_index >= dim {
            return Err(Error::InvalidStructure(format!(
                "unit index {unit_index} out of range"
            )));
        }
        if table.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for row in table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: entry.len(),
                    });
                }
                flat.push(sparse(&entry));
            }
        }
        let sc = StructureConstants {
            dim,
            unit_index,
            table: flat,
        };
        sc.check_unit()?;
        Ok(sc)
    }

    pub(crate) fn from_sparse(
        dim: usize,
        unit_index: usize,
        table: Vec<SparseVec>,
    ) -> Result<Self> {
        let sc = StructureConstants {
            dim,
            unit_index,
            table,
        };
        sc.check_unit()?;
        Ok(sc)
    }

    fn check_unit(&self) -> Result<()> {
        let u = self.unit_index;
        for j in 0..self.dim {
            let want = vec![(j, Rational::one())];
            if self.basis_product(u, j) != want.as_slice()
                || self.basis_product(j, u) != want.as_slice()
            {
                return Err(Error::InvalidStructure(format!(
                    "e{u} is not a two-sided unit (fails on e{j})"
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_index(&self) -> usize {
        self.unit_index
    }

    /// Nonzero coordinates of `e_i * e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim + j]
    }

    pub fn dense_entry(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = zero_vector(self.dim);
        for (k, c) in self.basis_product(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    pub(crate) fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim;
        let mut out = zero_vector(n);
        let ys: SparseVec = sparse(y);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in &ys {
                let xy = xi * yj;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }
}

/// A linear involution `a -> a*`, stored as its matrix in the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Involution {
    matrix: Matrix,
}

impl Involution {
    pub fn new(matrix: Matrix, sc: &StructureConstants) -> Result<Self> {
        let n = sc.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.rows(),
            });
        }
        if !matrix.compose(&matrix).is_identity() {
            return Err(Error::InvalidInvolution(
                "matrix does not square to the identity".into(),
            ));
        }
        let one = unit_vector(n, sc.unit_index());
        if matrix.apply(&one) != one {
            return Err(Error::InvalidInvolution("unit is not fixed".into()));
        }
        let inv = Involution { matrix };
        for i in 0..n {
            for j in 0..n {
                let ei = unit_vector(n, i);
                let ej = unit_vector(n, j);
                let lhs = inv.apply(&sc.product(&ei, &ej));
                let rhs = sc.product(&inv.apply(&ej), &inv.apply(&ei));
                if lhs != rhs {
                    return Err(Error::InvalidInvolution(format!(
                        "(e{i}e{j})* != e{j}* e{i}*"
                    )));
                }
            }
        }
        Ok(inv)
    }

    pub fn identity(n: usize) -> Self {
        Involution {
            matrix: Matrix::identity(n),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_trivial(&self) -> bool {
        self.matrix.is_identity()
    }

    pub(crate) fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.apply(v)
    }
}

/// Which slot of the associator is left free when computing a nucleus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NucleusSide {
    Left,
    Middle,
    Right,
    Full,
}

impl std::str::FromStr for NucleusSide {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(NucleusSide::Left),
            "middle" => Ok(NucleusSide::Middle),
            "right" => Ok(NucleusSide::Right),
            "full" => Ok(NucleusSide::Full),
            _ => Err(Error::Parse(format!("unknown nucleus side `{s}`"))),
        }
    }
}

/// A concrete failure of an identity: the inputs and the nonzero value they produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub identity: &'static str,
    pub inputs: Vec<AlgebraElement>,
    pub value: AlgebraElement,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let args: Vec<String> = self.inputs.iter().map(|e| format!("[{e}]")).collect();
        write!(
            f,
            "{} with ({}) = {}",
            self.identity,
            args.join(", "),
            self.value
        )
    }
}

/// A unital algebra over the rationals together with an involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StarAlgebra {
    sc: StructureConstants,
    star: Involution,
}

impl StarAlgebra {
    pub fn new(sc: StructureConstants, star: Involution) -> Result<Self> {
        if star.matrix.rows() != sc.dim() {
            return Err(Error::DimensionMismatch {
                expected: sc.dim(),
                got: star.matrix.rows(),
            });
        }
        Ok(StarAlgebra { sc, star })
    }

    /// The rationals as a one-dimensional algebra with the identity involution.
    pub fn rationals() -> Self {
        let sc = StructureConstants::from_sparse(1, 0, vec![vec![(0, Rational::one())]])
            .expect("rationals are unital");
        StarAlgebra {
            sc,
            star: Involution::identity(1),
        }
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn involution(&self) -> &Involution {
        &self.star
    }

    pub fn dim(&self) -> usize {
        self.sc.dim
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::basis(self.dim(), self.sc.unit_index)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.dim())
    }

    pub fn basis(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim(), i)
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        (0..self.dim()).map(|i| self.basis(i)).collect()
    }

    pub fn scalar(&self, k: &Rational) -> AlgebraElement {
        self.one().scale(k)
    }

    pub fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.product(x, y))
    }

    pub fn commutator(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.comm(x, y))
    }

    pub fn associator(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        z: &AlgebraElement,
    ) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(self.assoc(x, y, z))
    }

    pub fn star(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        Ok(self.conj(x))
    }

    // Unchecked kernels used by the rest of the crate once dimensions are known to agree.

    pub(crate) fn product(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        debug_assert_eq!(x.dim(), self.dim());
        debug_assert_eq!(y.dim(), self.dim());
        AlgebraElement {
            coords: self.sc.product(&x.coords, &y.coords),
        }
    }

    pub(crate) fn comm(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        &self.product(x, y) - &self.product(y, x)
    }

    pub(crate) fn assoc(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
        z: &AlgebraElement,
    ) -> AlgebraElement {
        &self.product(&self.product(x, y), z) - &self.product(x, &self.product(y, z))
    }

    pub(crate) fn conj(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            coords: self.star.apply(&x.coords),
        }
    }

    /// `C(A)`: kernel of `x -> [x, e_j]` over all basis `e_j`.
    pub fn commuter_basis(&self) -> Subspace {
        let n = self.dim();
        kernel_from_images(n, |i| self.commuter_images(i))
    }

    fn commuter_images(&self, i: usize) -> Vec<Rational> {
        let ei = self.basis(i);
        (0..self.dim())
            .flat_map(|j| self.comm(&ei, &self.basis(j)).into_coords())
            .collect()
    }

    fn nucleus_images(&self, side: NucleusSide, i: usize) -> Vec<Rational> {
        let n = self.dim();
        let x = self.basis(i);
        let mut out = Vec::new();
        let sides: &[NucleusSide] = match side {
            NucleusSide::Full => &[NucleusSide::Left, NucleusSide::Middle, NucleusSide::Right],
            NucleusSide::Left => &[NucleusSide::Left],
            NucleusSide::Middle => &[NucleusSide::Middle],
            NucleusSide::Right => &[NucleusSide::Right],
        };
        for s in sides {
            for j in 0..n {
                for k in 0..n {
                    let (b, c) = (self.basis(j), self.basis(k));
                    let a = match s {
                        NucleusSide::Left => self.assoc(&x, &b, &c),
                        NucleusSide::Middle => self.assoc(&b, &x, &c),
                        _ => self.assoc(&b, &c, &x),
                    };
                    out.extend(a.into_coords());
                }
            }
        }
        out
    }

    fn star_fixed_images(&self, i: usize) -> Vec<Rational> {
        let x = self.basis(i);
        (&self.conj(&x) - &x).into_coords()
    }

    pub fn nucleus_basis(&self, side: NucleusSide) -> Subspace {
        kernel_from_images(self.dim(), |i| self.nucleus_images(side, i))
    }

    /// `Z(A) = C(A) ∩ N(A)`.
    pub fn center_basis(&self) -> Subspace {
        kernel_from_images(self.dim(), |i| {
            let mut v = self.commuter_images(i);
            v.extend(self.nucleus_images(NucleusSide::Full, i));
            v
        })
    }

    /// `C_*(A)`: the *-fixed part of the commuter.
    pub fn c_star_basis(&self) -> Subspace {
        kernel_from_images(self.dim(), |i| {
            let mut v = self.commuter_images(i);
            v.extend(self.star_fixed_images(i));
            v
        })
    }

    /// `Z_*(A)`: the *-fixed part of the center.
    pub fn z_star_basis(&self) -> Subspace {
        kernel_from_images(self.dim(), |i| {
            let mut v = self.commuter_images(i);
            v.extend(self.nucleus_images(NucleusSide::Full, i));
            v.extend(self.star_fixed_images(i));
            v
        })
    }

    pub fn commutativity_witness(&self) -> Option<Witness> {
        let n = self.dim();
        for i in 0..n {
            for j in (i + 1)..n {
                let (a, b) = (self.basis(i), self.basis(j));
                let c = self.comm(&a, &b);
                if !c.is_zero() {
                    return Some(Witness {
                        identity: "[a,b]",
                        inputs: vec![a, b],
                        value: c,
                    });
                }
            }
        }
        None
    }

    pub fn associativity_witness(&self) -> Option<Witness> {
        self.basis_triples().find_map(|(a, b, c)| {
            let v = self.assoc(&a, &b, &c);
            (!v.is_zero()).then(|| Witness {
                identity: "(a,b,c)",
                inputs: vec![a, b, c],
                value: v,
            })
        })
    }

    /// Searches the linearized identity `(a,b,c) + (c,b,a) = 0` on basis triples and
    /// returns a concrete `(a,b,a) != 0` when it fails.
    pub fn flexibility_witness(&self) -> Option<Witness> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in i..n {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    let lin = &self.assoc(&a, &b, &c) + &self.assoc(&c, &b, &a);
                    if lin.is_zero() {
                        continue;
                    }
                    return Some(
                        self.quadratic_witness(&[a.clone(), c.clone(), &a + &c], |x| {
                            ("(a,b,a)", vec![x.clone(), b.clone()], self.assoc(x, &b, x))
                        }),
                    );
                }
            }
        }
        None
    }

    /// Searches `(a,b,c) + (b,a,c) = 0` and `(a,b,c) + (a,c,b) = 0` on basis triples and
    /// returns a concrete `(a,a,b) != 0` or `(b,a,a) != 0` when either fails.
    pub fn alternativity_witness(&self) -> Option<Witness> {
        for (a, b, c) in self.basis_triples() {
            let abc = self.assoc(&a, &b, &c);
            if !(&abc + &self.assoc(&b, &a, &c)).is_zero() {
                return Some(
                    self.quadratic_witness(&[a.clone(), b.clone(), &a + &b], |x| {
                        ("(a,a,b)", vec![x.clone(), c.clone()], self.assoc(x, x, &c))
                    }),
                );
            }
            if !(&abc + &self.assoc(&a, &c, &b)).is_zero() {
                return Some(
                    self.quadratic_witness(&[b.clone(), c.clone(), &b + &c], |x| {
                        ("(b,a,a)", vec![x.clone(), a.clone()], self.assoc(&a, x, x))
                    }),
                );
            }
        }
        None
    }

    // A failing linearization L(u,v) = Q(u+v) - Q(u) - Q(v) guarantees that one of
    // Q(u), Q(v), Q(u+v) is nonzero.
    fn quadratic_witness<F>(&self, candidates: &[AlgebraElement], eval: F) -> Witness
    where
        F: Fn(&AlgebraElement) -> (&'static str, Vec<AlgebraElement>, AlgebraElement),
    {
        candidates
            .iter()
            .map(eval)
            .find(|(_, _, v)| !v.is_zero())
            .map(|(identity, inputs, value)| Witness {
                identity,
                inputs,
                value,
            })
            .expect("nonzero linearization implies a nonzero quadratic value")
    }

    fn basis_triples(
        &self,
    ) -> impl Iterator<Item = (AlgebraElement, AlgebraElement, AlgebraElement)> + '_ {
        let n = self.dim();
        (0..n).flat_map(move |i| {
            (0..n).flat_map(move |j| {
                (0..n).map(move |k| (self.basis(i), self.basis(j), self.basis(k)))
            })
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_flexible(&self) -> bool {
        self.flexibility_witness().is_none()
    }

    pub fn is_alternative(&self) -> bool {
        self.alternativity_witness().is_none()
    }

    /// `e_i*` for every basis element must agree with the matrix, `(ab)* = b*a*`, `a** = a`, `1* = 1`.
    pub fn check_involution_axioms(&self) -> Result<()> {
        Involution::new(self.star.matrix.clone(), &self.sc).map(|_| ())
    }

    pub fn to_json(&self) -> StarAlgebraJson {
        let n = self.dim();
        StarAlgebraJson {
            dim: n,
            unit_index: self.sc.unit_index,
            table: (0..n)
                .map(|i| (0..n).map(|j| self.sc.dense_entry(i, j)).collect())
                .collect(),
            star: self.star.matrix.to_rows(),
        }
    }

    pub fn from_json(json: StarAlgebraJson) -> Result<Self> {
        let sc = StructureConstants::new(json.dim, json.unit_index, json.table)?;
        let star = Involution::new(Matrix::from_rows(json.star)?, &sc)?;
        StarAlgebra::new(sc, star)
    }
}

/// Serialized form `{dim, unit_index, table, star}`; scalars are `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarAlgebraJson {
    pub dim: usize,
    pub unit_index: usize,
    pub table: Vec<Vec<Vec<Rational>>>,
    pub star: Vec<Vec<Rational>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    use crate::test_support::dual_numbers;

    #[test]
    fn rejects_missing_unit() {
        let table = vec![
            vec![vec![q(0), q(1)], vec![q(0), q(1)]],
            vec![vec![q(0), q(1)], vec![q(1), q(0)]],
        ];
        assert!(matches!(
            StructureConstants::new(2, 0, table),
            Err(Error::InvalidStructure(_))
        ));
    }

    #[test]
    fn rejects_bad_involution() {
        let a = dual_numbers();
        // eps -> -eps is fine on the dual numbers; eps -> 2 eps does not square to 1.
        let good = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(-1)]]).unwrap();
        assert!(Involution::new(good, a.structure()).is_ok());
        let bad = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(2)]]).unwrap();
        assert!(Involution::new(bad, a.structure()).is_err());
        let moves_unit = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        assert!(Involution::new(moves_unit, a.structure()).is_err());
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = dual_numbers();
        let x = AlgebraElement::zero(3);
        assert!(matches!(
            a.mul(&x, &a.one()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dual_numbers_structure() {
        let a = dual_numbers();
        assert!(a.is_commutative() && a.is_associative() && a.is_alternative());
        assert!(a.commuter_basis().is_full());
        assert!(a.nucleus_basis(NucleusSide::Full).is_full());
        let eps = a.basis(1);
        assert!(a.mul(&eps, &eps).unwrap().is_zero());
    }

    #[test]
    fn rationals_are_trivial() {
        let r = StarAlgebra::rationals();
        assert_eq!(r.center_basis(), Subspace::full(1));
        assert_eq!(r.z_star_basis(), Subspace::full(1));
        let x = AlgebraElement::from_integers(&[5]);
        assert_eq!(r.mul(&r.one(), &x).unwrap(), x);
    }

    #[test]
    fn element_display() {
        let x = AlgebraElement::from_coords(vec![Rational::new(1, 2).unwrap(), q(0), q(0), q(-1)]);
        assert_eq!(x.to_string(), "1/2*e0 - e3");
        assert_eq!(AlgebraElement::zero(2).to_string(), "0");
        assert_eq!(
            AlgebraElement::from_integers(&[0, -2, 1]).to_string(),
            "-2*e1 + e2"
        );
    }

    #[test]
    fn json_round_trip() {
        let a = dual_numbers();
        let s = serde_json::to_string(&a.to_json()).unwrap();
        assert!(s.contains("\"unit_index\":0"));
        let back = StarAlgebra::from_json(serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, a);
    }
}
