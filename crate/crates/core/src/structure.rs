//! Structural sets of flipped polynomial rings: X-nucleus membership, the
//! inheritance criteria for `B = A[X; *]^fl`, and degreewise descriptions of
//! the commuter, nuclei and center of `B`.
//!
//! Every criterion has a brute-force counterpart that works directly with
//! products in the ring, so the two can be compared.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{AlgebraElement, NucleusSide, StarAlgebra};
use crate::error::{Error, Result};
use crate::flip_poly::FlipPolyRing;
use crate::linalg::{kernel_from_images, Subspace};
use crate::poly::Poly;
use crate::scalars::Rational;

/// Slot of the associator occupied by `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Middle,
    Right,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Middle, Side::Right];
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "middle" => Ok(Side::Middle),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!(
                "unknown side `{s}` (expected left, middle or right)"
            ))),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Middle => "middle",
            Side::Right => "right",
        })
    }
}

/// Criterion for `X` lying in the left, middle or right nucleus of a flipped ring.
///
/// * left: `sigma` is multiplicative and `delta` is both a left and a right `sigma`-derivation;
/// * middle: `delta^n(sigma(R))` lies in the commuter for every `n`;
/// * right: `R` is commutative.
pub fn x_in_nucleus(ring: &FlipPolyRing, side: Side) -> bool {
    match side {
        Side::Left => {
            ring.is_sigma_endomorphism()
                && ring.is_delta_left_sigma_derivation()
                && ring.is_delta_right_sigma_derivation()
        }
        Side::Middle => {
            delta_orbit_of_sigma_image(ring).is_subset_of(&ring.algebra().commuter_basis())
        }
        Side::Right => ring.algebra().is_commutative(),
    }
}

/// `im(sigma) + delta(im sigma) + delta^2(im sigma) + ...`; stabilizes after at most `dim` steps.
pub fn delta_orbit_of_sigma_image(ring: &FlipPolyRing) -> Subspace {
    let n = ring.dim();
    let mut span = ring.sigma().matrix().column_space();
    loop {
        let images: Vec<_> = span
            .basis()
            .iter()
            .map(|v| ring.delta().matrix().apply(v))
            .collect();
        let mut grew = false;
        for v in images {
            grew |= span.insert(v);
        }
        if !grew || span.dim() == n {
            return span;
        }
    }
}

trait SubsetOf {
    fn is_subset_of(&self, other: &Subspace) -> bool;
}

impl SubsetOf for Subspace {
    fn is_subset_of(&self, other: &Subspace) -> bool {
        other.contains_subspace(self)
    }
}

/// A nonvanishing associator in a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyWitness {
    pub inputs: [Poly; 3],
    pub value: Poly,
}

impl fmt::Display for PolyWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p, q, r] = &self.inputs;
        write!(f, "({p}, {q}, {r}) = {}", self.value)
    }
}

pub const MAX_BRUTEFORCE_BOUND: usize = 4;
pub const MAX_DEGREEWISE_BOUND: usize = 8;

fn check_bound(bound: usize, limit: usize) -> Result<()> {
    if bound > limit {
        Err(Error::BoundExceeded { got: bound, limit })
    } else {
        Ok(())
    }
}

/// First associator with `X` in the chosen slot and basis monomials of degree
/// `<= bound` elsewhere that does not vanish.
pub fn x_nucleus_counterexample(
    ring: &FlipPolyRing,
    side: Side,
    bound: usize,
) -> Result<Option<PolyWitness>> {
    check_bound(bound, MAX_BRUTEFORCE_BOUND)?;
    let x = ring.x();
    let basis = ring.algebra().basis_elements();
    for j in 0..=bound {
        for k in 0..=bound {
            for b in &basis {
                for c in &basis {
                    let (p, q) = (Poly::monomial(b.clone(), j), Poly::monomial(c.clone(), k));
                    let inputs = match side {
                        Side::Left => [x.clone(), p, q],
                        Side::Middle => [p, x.clone(), q],
                        Side::Right => [p, q, x.clone()],
                    };
                    let value = ring.assoc(&inputs[0], &inputs[1], &inputs[2]);
                    if !value.is_zero() {
                        return Ok(Some(PolyWitness { inputs, value }));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn x_in_nucleus_bruteforce(ring: &FlipPolyRing, side: Side, bound: usize) -> Result<bool> {
    Ok(x_nucleus_counterexample(ring, side, bound)?.is_none())
}

/// `R` associative and commutative, `sigma` multiplicative, `delta` a left `sigma`-derivation.
/// Equivalent to associativity of the flipped ring.
pub fn ring_is_associative_criterion(ring: &FlipPolyRing) -> bool {
    let a = ring.algebra();
    a.is_associative()
        && a.is_commutative()
        && ring.is_sigma_endomorphism()
        && ring.is_delta_left_sigma_derivation()
}

/// `ab* + ba*` commutes with every basis element, for every basis pair (the polarization of `aa* ∈ C(A)`).
fn norm_polarization_commutes(alg: &StarAlgebra) -> bool {
    let basis = alg.basis_elements();
    let commuter = alg.commuter_basis();
    basis.iter().enumerate().all(|(i, a)| {
        basis[i..].iter().all(|b| {
            let v = &alg.product(a, &alg.conj(b)) + &alg.product(b, &alg.conj(a));
            commuter.contains(v.coords())
        })
    })
}

/// `A[X; *]^fl` is flexible iff `A` is flexible, `aa*` commutes with `A`, and `(a,b,c) = (a,b*,c*)`.
pub fn b_flexible_criterion(alg: &StarAlgebra) -> bool {
    if !alg.is_flexible() || !norm_polarization_commutes(alg) {
        return false;
    }
    let basis = alg.basis_elements();
    basis.iter().all(|a| {
        basis.iter().all(|b| {
            basis
                .iter()
                .all(|c| alg.assoc(a, b, c) == alg.assoc(a, &alg.conj(b), &alg.conj(c)))
        })
    })
}

/// `A[X; *]^fl` is alternative iff `A` is alternative, `aa*` commutes with `A`, and `2a + a*` is in `N(A)`.
pub fn b_alternative_criterion(alg: &StarAlgebra) -> bool {
    if !alg.is_alternative() || !norm_polarization_commutes(alg) {
        return false;
    }
    let nucleus = alg.nucleus_basis(NucleusSide::Full);
    let two = Rational::from_integer(2);
    alg.basis_elements()
        .iter()
        .all(|a| nucleus.contains((&a.scale(&two) + &alg.conj(a)).coords()))
}

/// `A[X; *]^fl` is commutative iff `A` is commutative with trivial involution.
pub fn b_commutative_criterion(alg: &StarAlgebra) -> bool {
    alg.is_commutative() && alg.involution().is_trivial()
}

/// `alpha` is trivial iff `*` is trivial and `2A = 0`; the latter never holds over the rationals.
pub fn alpha_trivial_criterion(alg: &StarAlgebra) -> bool {
    let two_a_vanishes = alg.dim() == 0;
    alg.involution().is_trivial() && two_a_vanishes
}

/// The structural sets of `B = A[X; *]^fl` described degree by degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetKind {
    Commuter,
    LeftRightNucleus,
    MiddleNucleus,
    Nucleus,
    Center,
}

impl SetKind {
    pub const ALL: [SetKind; 5] = [
        SetKind::Commuter,
        SetKind::LeftRightNucleus,
        SetKind::MiddleNucleus,
        SetKind::Nucleus,
        SetKind::Center,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetKind::Commuter => "commuter",
            SetKind::LeftRightNucleus => "left_right_nucleus",
            SetKind::MiddleNucleus => "middle_nucleus",
            SetKind::Nucleus => "nucleus",
            SetKind::Center => "center",
        }
    }
}

impl FromStr for SetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "commuter" => Ok(SetKind::Commuter),
            "left_right_nucleus" | "left_right" | "left" | "right" => Ok(SetKind::LeftRightNucleus),
            "middle_nucleus" | "middle" => Ok(SetKind::MiddleNucleus),
            "nucleus" => Ok(SetKind::Nucleus),
            "center" => Ok(SetKind::Center),
            _ => Err(Error::Parse(format!(
                "unknown set `{s}` (expected commuter, left_right_nucleus, middle_nucleus, nucleus or center)"
            ))),
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// For each degree `i <= bound`, the subspace of coefficients `a` with `aX^i` in the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreewiseSet {
    pub kind: SetKind,
    pub bound: usize,
    pub per_degree: Vec<Subspace>,
}

impl DegreewiseSet {
    pub fn degree(&self, i: usize) -> &Subspace {
        &self.per_degree[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.per_degree.iter().map(Subspace::dim).collect()
    }

    pub fn ambient_dim(&self) -> usize {
        self.per_degree.first().map_or(0, Subspace::ambient_dim)
    }

    /// First degree where the two sets differ.
    pub fn first_difference(&self, other: &DegreewiseSet) -> Option<usize> {
        (0..self.per_degree.len().max(other.per_degree.len()))
            .find(|&i| self.per_degree.get(i) != other.per_degree.get(i))
    }
}

impl fmt::Display for DegreewiseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "set: {}  ambient dim: {}  bound: {}",
            self.kind,
            self.ambient_dim(),
            self.bound
        )?;
        writeln!(f, "{:>6}  {:>3}  basis", "degree", "dim")?;
        for (i, s) in self.per_degree.iter().enumerate() {
            let basis: Vec<String> = s
                .basis()
                .iter()
                .map(|v| format!("[{}]", AlgebraElement::from_coords(v.clone())))
                .collect();
            let shown = if basis.is_empty() {
                "-".to_string()
            } else {
                basis.join(", ")
            };
            writeln!(f, "{i:>6}  {:>3}  {shown}", s.dim())?;
        }
        Ok(())
    }
}

enum Cond {
    Commutes,
    StarFixed,
    Assoc(NucleusSide),
    StarTwistInvisible,
    LeftRightOddA,
    LeftRightOddB,
    MiddleOddA,
    MiddleOddB,
    KillsCommutators,
}

fn residuals(alg: &StarAlgebra, a: &AlgebraElement, conds: &[Cond]) -> Vec<Rational> {
    let basis = alg.basis_elements();
    let mut out = Vec::new();
    let mut push = |v: AlgebraElement| out.extend(v.into_coords());
    for cond in conds {
        match cond {
            Cond::Commutes => basis.iter().for_each(|b| push(alg.comm(a, b))),
            Cond::StarFixed => push(&alg.conj(a) - a),
            Cond::StarTwistInvisible => basis
                .iter()
                .for_each(|b| push(&alg.product(a, &alg.conj(b)) - &alg.product(a, b))),
            Cond::Assoc(side) => {
                let sides: &[NucleusSide] = match side {
                    NucleusSide::Full => {
                        &[NucleusSide::Left, NucleusSide::Middle, NucleusSide::Right]
                    }
                    NucleusSide::Left => &[NucleusSide::Left],
                    NucleusSide::Middle => &[NucleusSide::Middle],
                    NucleusSide::Right => &[NucleusSide::Right],
                };
                for s in sides {
                    for b in &basis {
                        for c in &basis {
                            push(match s {
                                NucleusSide::Left => alg.assoc(a, b, c),
                                NucleusSide::Middle => alg.assoc(b, a, c),
                                _ => alg.assoc(b, c, a),
                            });
                        }
                    }
                }
            }
            // (ab)c = a(cb)
            Cond::LeftRightOddA => pairs(&basis, |b, c| {
                push(&alg.product(&alg.product(a, b), c) - &alg.product(a, &alg.product(c, b)))
            }),
            // (bc)a = c(ba)
            Cond::LeftRightOddB => pairs(&basis, |b, c| {
                push(&alg.product(&alg.product(b, c), a) - &alg.product(c, &alg.product(b, a)))
            }),
            // (ab)c = (ac)b
            Cond::MiddleOddA => pairs(&basis, |b, c| {
                push(&alg.product(&alg.product(a, b), c) - &alg.product(&alg.product(a, c), b))
            }),
            // b(ca) = c(ba)
            Cond::MiddleOddB => pairs(&basis, |b, c| {
                push(&alg.product(b, &alg.product(c, a)) - &alg.product(c, &alg.product(b, a)))
            }),
            Cond::KillsCommutators => pairs(&basis, |b, c| push(alg.product(a, &alg.comm(b, c)))),
        }
    }
    out
}

fn pairs<F: FnMut(&AlgebraElement, &AlgebraElement)>(basis: &[AlgebraElement], mut f: F) {
    for b in basis {
        for c in basis {
            f(b, c);
        }
    }
}

fn conditions(kind: SetKind, odd: bool) -> Vec<Cond> {
    use Cond::*;
    match (kind, odd) {
        (SetKind::Commuter, false) => vec![Commutes, StarFixed],
        (SetKind::Commuter, true) => vec![Commutes, StarFixed, StarTwistInvisible],
        (SetKind::LeftRightNucleus, false) => vec![Commutes, Assoc(NucleusSide::Full)],
        (SetKind::LeftRightNucleus, true) => {
            vec![
                Commutes,
                Assoc(NucleusSide::Middle),
                LeftRightOddA,
                LeftRightOddB,
            ]
        }
        (SetKind::MiddleNucleus, false) => vec![Commutes, Assoc(NucleusSide::Middle)],
        (SetKind::MiddleNucleus, true) => vec![Commutes, MiddleOddA, MiddleOddB],
        (SetKind::Nucleus, false) => vec![Commutes, Assoc(NucleusSide::Full)],
        (SetKind::Nucleus, true) => vec![Commutes, Assoc(NucleusSide::Full), KillsCommutators],
        (SetKind::Center, false) => vec![Commutes, Assoc(NucleusSide::Full), StarFixed],
        (SetKind::Center, true) => vec![
            Commutes,
            Assoc(NucleusSide::Full),
            StarFixed,
            StarTwistInvisible,
        ],
    }
}

fn coefficient_space(alg: &StarAlgebra, conds: &[Cond]) -> Subspace {
    kernel_from_images(alg.dim(), |t| residuals(alg, &alg.basis(t), conds))
}

/// Solves the per-coefficient membership conditions for `kind` at every degree `<= bound`.
pub fn degreewise_set(alg: &StarAlgebra, kind: SetKind, bound: usize) -> Result<DegreewiseSet> {
    check_bound(bound, MAX_DEGREEWISE_BOUND)?;
    let even = coefficient_space(alg, &conditions(kind, false));
    let odd = coefficient_space(alg, &conditions(kind, true));
    let per_degree = (0..=bound)
        .map(|i| {
            if i % 2 == 0 {
                even.clone()
            } else {
                odd.clone()
            }
        })
        .collect();
    Ok(DegreewiseSet {
        kind,
        bound,
        per_degree,
    })
}

/// `Z_*(B)`: the center intersected with the fixed points of `alpha`, which at
/// degree `i` acts by `a -> a*` (even) or `a -> -a` (odd).
pub fn z_star_of_b(alg: &StarAlgebra, bound: usize) -> Result<DegreewiseSet> {
    let center = degreewise_set(alg, SetKind::Center, bound)?;
    let n = alg.dim();
    let star_fixed = kernel_from_images(n, |t| residuals(alg, &alg.basis(t), &[Cond::StarFixed]));
    let per_degree = center
        .per_degree
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if i % 2 == 0 {
                s.intersect(&star_fixed)
            } else {
                Subspace::zero(n)
            }
        })
        .collect();
    Ok(DegreewiseSet {
        kind: SetKind::Center,
        bound,
        per_degree,
    })
}

/// Test degrees used against `aX^i` by the brute-force solver.
pub const PROBE_DEGREES: usize = 2;

fn flatten(p: &Poly, dim: usize, degrees: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(dim * degrees);
    for d in 0..degrees {
        out.extend(p.coeff_or_zero(d, dim).into_coords());
    }
    debug_assert!(p.degree().is_none_or(|d| d < degrees));
    out
}

/// Which brute-force identities `aX^i` must satisfy against the probe monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Probe {
    commutes: bool,
    left: bool,
    middle: bool,
    right: bool,
}

fn probe_space(ring: &FlipPolyRing, i: usize, probe: Probe) -> Subspace {
    let alg = ring.algebra();
    let n = alg.dim();
    let degrees = i + 2 * PROBE_DEGREES + 1;
    let basis = alg.basis_elements();
    kernel_from_images(n, |t| {
        let a = Poly::monomial(alg.basis(t), i);
        let mut out = Vec::new();
        for j in 0..=PROBE_DEGREES {
            for b in &basis {
                let p = Poly::monomial(b.clone(), j);
                if probe.commutes {
                    out.extend(flatten(&ring.comm(&a, &p), n, degrees));
                }
                if !(probe.left || probe.middle || probe.right) {
                    continue;
                }
                for k in 0..=PROBE_DEGREES {
                    for c in &basis {
                        let q = Poly::monomial(c.clone(), k);
                        if probe.left {
                            out.extend(flatten(&ring.assoc(&a, &p, &q), n, degrees));
                        }
                        if probe.middle {
                            out.extend(flatten(&ring.assoc(&p, &a, &q), n, degrees));
                        }
                        if probe.right {
                            out.extend(flatten(&ring.assoc(&p, &q, &a), n, degrees));
                        }
                    }
                }
            }
        }
        out
    })
}

fn probe_for(kind: SetKind) -> Probe {
    let none = Probe {
        commutes: false,
        left: false,
        middle: false,
        right: false,
    };
    match kind {
        SetKind::Commuter => Probe {
            commutes: true,
            ..none
        },
        SetKind::LeftRightNucleus => Probe { left: true, ..none },
        SetKind::MiddleNucleus => Probe {
            middle: true,
            ..none
        },
        SetKind::Nucleus => Probe {
            left: true,
            middle: true,
            right: true,
            ..none
        },
        SetKind::Center => Probe {
            commutes: true,
            left: true,
            middle: true,
            right: true,
        },
    }
}

fn bruteforce(
    alg: &StarAlgebra,
    kind: SetKind,
    bound: usize,
    probe: Probe,
) -> Result<DegreewiseSet> {
    check_bound(bound, MAX_BRUTEFORCE_BOUND)?;
    let ring = FlipPolyRing::star_skew(alg.clone());
    let per_degree = (0..=bound).map(|i| probe_space(&ring, i, probe)).collect();
    Ok(DegreewiseSet {
        kind,
        bound,
        per_degree,
    })
}

/// Solves for `a` with `aX^i` commuting or associating, in the designated
/// slot(s), with every basis monomial of degree `<= 2`. For
/// `LeftRightNucleus` this computes the left nucleus.
pub fn degreewise_set_bruteforce(
    alg: &StarAlgebra,
    kind: SetKind,
    bound: usize,
) -> Result<DegreewiseSet> {
    bruteforce(alg, kind, bound, probe_for(kind))
}

/// Brute-force left, middle or right nucleus of `A[X; *]^fl`, degree by degree.
pub fn one_sided_nucleus_bruteforce(
    alg: &StarAlgebra,
    side: Side,
    bound: usize,
) -> Result<DegreewiseSet> {
    let none = Probe {
        commutes: false,
        left: false,
        middle: false,
        right: false,
    };
    let (kind, probe) = match side {
        Side::Left => (SetKind::LeftRightNucleus, Probe { left: true, ..none }),
        Side::Middle => (
            SetKind::MiddleNucleus,
            Probe {
                middle: true,
                ..none
            },
        ),
        Side::Right => (
            SetKind::LeftRightNucleus,
            Probe {
                right: true,
                ..none
            },
        ),
    };
    bruteforce(alg, kind, bound, probe)
}

/// Compares the brute-force left and right nuclei of `A[X; *]^fl`; returns the first degree where they differ.
pub fn left_right_nucleus_discrepancy(alg: &StarAlgebra, bound: usize) -> Result<Option<usize>> {
    let left = one_sided_nucleus_bruteforce(alg, Side::Left, bound)?;
    let right = one_sided_nucleus_bruteforce(alg, Side::Right, bound)?;
    Ok(left.first_difference(&right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::{named, NamedAlgebra};
    use crate::linalg::Matrix;
    use crate::test_support::{dual_numbers, nilpotent_delta};

    fn star_ring(name: NamedAlgebra) -> FlipPolyRing {
        FlipPolyRing::star_skew(named(name))
    }

    #[test]
    fn x_nucleus_examples() {
        assert!(x_in_nucleus(&star_ring(NamedAlgebra::C), Side::Left));
        assert!(!x_in_nucleus(&star_ring(NamedAlgebra::H), Side::Middle));
        assert!(!x_in_nucleus(&star_ring(NamedAlgebra::H), Side::Right));
        assert!(x_in_nucleus_bruteforce(&star_ring(NamedAlgebra::C), Side::Right, 4).unwrap());
        let w = x_nucleus_counterexample(&star_ring(NamedAlgebra::O), Side::Left, 4).unwrap();
        assert!(w.is_some());
        assert!(x_nucleus_counterexample(&star_ring(NamedAlgebra::O), Side::Left, 5).is_err());
    }

    #[test]
    fn x_nucleus_with_nonzero_delta() {
        // dual numbers with the derivation eps -> eps: associative, commutative base
        let d = dual_numbers();
        let delta = Matrix::from_rows(vec![
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::zero(), Rational::one()],
        ])
        .unwrap();
        let ring = FlipPolyRing::new(d, Matrix::identity(2), delta, true).unwrap();
        for side in Side::ALL {
            assert!(x_in_nucleus(&ring, side));
            assert!(x_in_nucleus_bruteforce(&ring, side, 3).unwrap());
        }
        assert!(ring_is_associative_criterion(&ring));
    }

    #[test]
    fn x_nucleus_with_non_derivation() {
        // over C, delta(e1) = e0 is not a derivation
        let c = named(NamedAlgebra::C);
        let ring = FlipPolyRing::new(c, Matrix::identity(2), nilpotent_delta(2), true).unwrap();
        for side in Side::ALL {
            assert_eq!(
                x_in_nucleus(&ring, side),
                x_in_nucleus_bruteforce(&ring, side, 3).unwrap(),
                "{side}"
            );
        }
        assert!(!x_in_nucleus(&ring, Side::Left));
        assert!(!ring_is_associative_criterion(&ring));
    }

    #[test]
    fn orbit_stabilizes() {
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(h, Matrix::identity(4), nilpotent_delta(4), true).unwrap();
        assert!(delta_orbit_of_sigma_image(&ring).is_full());
    }

    #[test]
    fn associativity_criterion_examples() {
        assert!(ring_is_associative_criterion(&star_ring(NamedAlgebra::C)));
        assert!(!ring_is_associative_criterion(&star_ring(NamedAlgebra::H)));
        assert!(ring_is_associative_criterion(&FlipPolyRing::ordinary(
            StarAlgebra::rationals()
        )));
    }

    #[test]
    fn property_criteria_examples() {
        assert!(b_alternative_criterion(&named(NamedAlgebra::H)));
        assert!(!b_alternative_criterion(&named(NamedAlgebra::O)));
        assert!(b_flexible_criterion(&named(NamedAlgebra::O)));
        assert!(b_commutative_criterion(&StarAlgebra::rationals()));
        assert!(!b_commutative_criterion(&named(NamedAlgebra::C)));
        assert!(!alpha_trivial_criterion(&named(NamedAlgebra::C)));
        assert!(!alpha_trivial_criterion(&StarAlgebra::rationals()));
    }

    #[test]
    fn degreewise_examples() {
        let r = degreewise_set(&StarAlgebra::rationals(), SetKind::Commuter, 5).unwrap();
        assert_eq!(r.dims(), vec![1; 6]);
        let c = degreewise_set(&named(NamedAlgebra::C), SetKind::Center, 5).unwrap();
        assert_eq!(c.dims(), vec![1, 0, 1, 0, 1, 0]);
        assert_eq!(
            c.degree(0).basis(),
            &[vec![Rational::one(), Rational::zero()]]
        );
        let h = degreewise_set(&named(NamedAlgebra::H), SetKind::Nucleus, 4).unwrap();
        assert_eq!(h.dims(), vec![1, 0, 1, 0, 1]);
        assert!(degreewise_set(&named(NamedAlgebra::H), SetKind::Nucleus, 9).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let r = degreewise_set_bruteforce(&StarAlgebra::rationals(), SetKind::Nucleus, 4).unwrap();
        assert_eq!(r.dims(), vec![1; 5]);
        let o =
            degreewise_set_bruteforce(&named(NamedAlgebra::O), SetKind::MiddleNucleus, 3).unwrap();
        assert_eq!(o.degree(1).dim(), 0);
        assert_eq!(o.degree(3).dim(), 0);
    }

    #[test]
    fn z_star_examples() {
        for name in [NamedAlgebra::R, NamedAlgebra::C, NamedAlgebra::H] {
            let z = z_star_of_b(&named(name), 4).unwrap();
            assert_eq!(z.dims(), vec![1, 0, 1, 0, 1], "{name}");
        }
    }

    #[test]
    fn set_kind_parsing() {
        assert_eq!("center".parse::<SetKind>().unwrap(), SetKind::Center);
        assert_eq!(
            "left_right_nucleus".parse::<SetKind>().unwrap(),
            SetKind::LeftRightNucleus
        );
        assert!("bogus".parse::<SetKind>().is_err());
    }
}
