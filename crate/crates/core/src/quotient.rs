//! The quotient `A[X; *]^fl / <X^2 - mu>` and its identification with
//! `Cay(A, mu)`, and the identification of `A[X; *]^fl` with `Cay(A[t], t)`.

use std::fmt;

use crate::algebra::{AlgebraElement, Involution, StarAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::flip_poly::FlipPolyRing;
use crate::involutions::alpha;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::scalars::Rational;

/// The class `[a + bX]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotElement {
    pub a: AlgebraElement,
    pub b: AlgebraElement,
}

impl QuotElement {
    pub fn new(a: AlgebraElement, b: AlgebraElement) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                got: b.dim(),
            });
        }
        Ok(QuotElement { a, b })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    /// The representative `a + bX`.
    pub fn to_poly(&self) -> Poly {
        Poly::from_terms([(0, self.a.clone()), (1, self.b.clone())])
    }

    /// Basis of the quotient: `[e_i]` for `i < n`, then `[e_i X]`.
    pub fn basis(dim: usize, k: usize) -> Self {
        if k < dim {
            QuotElement {
                a: AlgebraElement::basis(dim, k),
                b: AlgebraElement::zero(dim),
            }
        } else {
            QuotElement {
                a: AlgebraElement::zero(dim),
                b: AlgebraElement::basis(dim, k - dim),
            }
        }
    }
}

impl fmt::Display for QuotElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}], [{}])", self.a, self.b)
    }
}

fn nonzero(mu: &Rational) -> Result<()> {
    if mu.is_zero() {
        Err(Error::ZeroMu)
    } else {
        Ok(())
    }
}

/// Folds `a X^(2n)` to `a mu^n` and `a X^(2n+1)` to `(a mu^n) X`.
pub fn reduce(ring: &FlipPolyRing, p: &Poly, mu: &Rational) -> Result<QuotElement> {
    nonzero(mu)?;
    p.check_dim(ring.dim())?;
    let n = ring.dim();
    let mut a = AlgebraElement::zero(n);
    let mut b = AlgebraElement::zero(n);
    for (d, c) in p.terms() {
        let scaled = c.scale(&mu.pow((d / 2) as u32));
        if d % 2 == 0 {
            a.add_assign(&scaled);
        } else {
            b.add_assign(&scaled);
        }
    }
    Ok(QuotElement { a, b })
}

/// `(a, b)(c, d) = (ac + mu d* b, da + b c*)`.
pub fn quot_mul(
    alg: &StarAlgebra,
    mu: &Rational,
    u: &QuotElement,
    v: &QuotElement,
) -> Result<QuotElement> {
    nonzero(mu)?;
    for x in [&u.a, &u.b, &v.a, &v.b] {
        alg.check(x)?;
    }
    let (a, b, c, d) = (&u.a, &u.b, &v.a, &v.b);
    let first = &alg.product(a, c) + &alg.product(&alg.conj(d), b).scale(mu);
    let second = &alg.product(d, a) + &alg.product(b, &alg.conj(c));
    Ok(QuotElement {
        a: first,
        b: second,
    })
}

/// `(a, b)* = (a*, -b)`.
pub fn quot_star(alg: &StarAlgebra, u: &QuotElement) -> Result<QuotElement> {
    alg.check(&u.a)?;
    alg.check(&u.b)?;
    Ok(QuotElement {
        a: alg.conj(&u.a),
        b: -&u.b,
    })
}

/// `[a + bX] -> (a, b)` in the doubling basis order.
pub fn phi(u: &QuotElement) -> AlgebraElement {
    let mut coords = u.a.coords().to_vec();
    coords.extend_from_slice(u.b.coords());
    AlgebraElement::from_coords(coords)
}

pub fn phi_inv(x: &AlgebraElement) -> Result<QuotElement> {
    if !x.dim().is_multiple_of(2) {
        return Err(Error::DimensionMismatch {
            expected: x.dim() + 1,
            got: x.dim(),
        });
    }
    let n = x.dim() / 2;
    let (a, b) = x.coords().split_at(n);
    Ok(QuotElement {
        a: AlgebraElement::from_coords(a.to_vec()),
        b: AlgebraElement::from_coords(b.to_vec()),
    })
}

/// Builds the quotient as a *-algebra of dimension `2 dim(A)` by multiplying
/// representatives in `A[X; *]^fl` and reducing; the involution is induced by `alpha`.
pub fn quotient_algebra(alg: &StarAlgebra, mu: &Rational) -> Result<StarAlgebra> {
    nonzero(mu)?;
    let ring = FlipPolyRing::star_skew(alg.clone());
    let n = alg.dim();
    let big = 2 * n;
    let mut table = Vec::with_capacity(big);
    for p in 0..big {
        let mut row = Vec::with_capacity(big);
        let lhs = QuotElement::basis(n, p).to_poly();
        for q in 0..big {
            let rhs = QuotElement::basis(n, q).to_poly();
            let prod = reduce(&ring, &ring.product(&lhs, &rhs), mu)?;
            row.push(phi(&prod).into_coords());
        }
        table.push(row);
    }
    let sc = StructureConstants::new(big, alg.structure().unit_index(), table)?;
    let mut columns = Vec::with_capacity(big);
    for q in 0..big {
        let image = reduce(
            &ring,
            &alpha(&ring, &QuotElement::basis(n, q).to_poly())?,
            mu,
        )?;
        columns.push(phi(&image).into_coords());
    }
    let star = Involution::new(Matrix::from_columns(big, &columns), &sc)?;
    StarAlgebra::new(sc, star)
}

/// An element `(p(t), q(t))` of `Cay(A[t], t)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyPair {
    pub p: Poly,
    pub q: Poly,
}

impl PolyPair {
    pub fn new(p: Poly, q: Poly) -> Self {
        PolyPair { p, q }
    }
}

impl fmt::Display for PolyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Poly| p.to_string().replace('X', "t");
        write!(f, "({}, {})", show(&self.p), show(&self.q))
    }
}

/// `A[t]` with `t` central and `t* = t`.
fn t_ring(alg: &StarAlgebra) -> FlipPolyRing {
    FlipPolyRing::ordinary(alg.clone())
}

fn t_star(alg: &StarAlgebra, p: &Poly) -> Poly {
    p.map_coeffs(|_, c| alg.conj(c))
}

/// `(p, q)(r, s) = (pr + t s* q, s p + q r*)` in `Cay(A[t], t)`.
pub fn pair_mul(alg: &StarAlgebra, u: &PolyPair, v: &PolyPair) -> Result<PolyPair> {
    let n = alg.dim();
    for x in [&u.p, &u.q, &v.p, &v.q] {
        x.check_dim(n)?;
    }
    let ring = t_ring(alg);
    let (p, q, r, s) = (&u.p, &u.q, &v.p, &v.q);
    let shifted = ring.product(&t_star(alg, s), q).map_degrees(|k| k + 1);
    let first = ring.product(p, r).add(&shifted);
    let second = ring.product(s, p).add(&ring.product(q, &t_star(alg, r)));
    Ok(PolyPair {
        p: first,
        q: second,
    })
}

/// `(p, q)* = (p*, -q)`.
pub fn pair_star(alg: &StarAlgebra, u: &PolyPair) -> Result<PolyPair> {
    u.p.check_dim(alg.dim())?;
    u.q.check_dim(alg.dim())?;
    Ok(PolyPair {
        p: t_star(alg, &u.p),
        q: u.q.neg(),
    })
}

/// `(p(t), q(t)) -> p(X^2) + q(X^2) X`.
pub fn psi(pair: &PolyPair) -> Poly {
    pair.p
        .map_degrees(|k| 2 * k)
        .add(&pair.q.map_degrees(|k| 2 * k + 1))
}

pub fn psi_inv(p: &Poly) -> PolyPair {
    PolyPair {
        p: p.filter_degrees(|k| k % 2 == 0).map_degrees(|k| k / 2),
        q: p.filter_degrees(|k| k % 2 == 1).map_degrees(|k| k / 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::{cayley_double, named, tower, DoublingSpec, NamedAlgebra};
    use crate::test_support::random_poly;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn real(k: i64) -> AlgebraElement {
        AlgebraElement::from_integers(&[k])
    }

    #[test]
    fn reduce_examples() {
        let r = FlipPolyRing::star_skew(StarAlgebra::rationals());
        let p = Poly::from_terms([(0, real(3)), (1, real(2)), (2, real(5))]);
        assert_eq!(
            reduce(&r, &p, &q(-1)).unwrap(),
            QuotElement {
                a: real(-2),
                b: real(2)
            }
        );
        assert_eq!(
            reduce(&r, &Poly::monomial(real(1), 3), &q(-1)).unwrap(),
            QuotElement {
                a: real(0),
                b: real(-1)
            }
        );
        let ab = Poly::from_terms([(0, real(7)), (1, real(-4))]);
        assert_eq!(
            reduce(&r, &ab, &q(3)).unwrap(),
            QuotElement {
                a: real(7),
                b: real(-4)
            }
        );
        assert_eq!(reduce(&r, &p, &q(0)), Err(Error::ZeroMu));
    }

    #[test]
    fn quot_mul_examples() {
        let r = StarAlgebra::rationals();
        let x = QuotElement {
            a: real(0),
            b: real(1),
        };
        assert_eq!(
            quot_mul(&r, &q(-1), &x, &x).unwrap(),
            QuotElement {
                a: real(-1),
                b: real(0)
            }
        );
        let h = named(NamedAlgebra::H);
        let i = QuotElement {
            a: h.basis(1),
            b: h.zero(),
        };
        let big_x = QuotElement {
            a: h.zero(),
            b: h.one(),
        };
        let prod = quot_mul(&h, &q(-1), &i, &big_x).unwrap();
        assert_eq!(
            prod,
            QuotElement {
                a: h.zero(),
                b: h.basis(1)
            }
        );
        let o = named(NamedAlgebra::O);
        assert_eq!(phi(&prod), o.mul(&o.basis(1), &o.basis(4)).unwrap());
        assert_eq!(phi(&prod), o.basis(5));
        let one = QuotElement {
            a: h.one(),
            b: h.zero(),
        };
        let v = QuotElement {
            a: h.basis(2),
            b: h.basis(3),
        };
        assert_eq!(quot_mul(&h, &q(-1), &one, &v).unwrap(), v);
    }

    #[test]
    fn quot_star_examples() {
        let h = named(NamedAlgebra::H);
        let u = QuotElement {
            a: h.basis(1),
            b: h.basis(2),
        };
        assert_eq!(
            quot_star(&h, &u).unwrap(),
            QuotElement {
                a: -&h.basis(1),
                b: -&h.basis(2)
            }
        );
        let one = QuotElement {
            a: h.one(),
            b: h.zero(),
        };
        assert_eq!(quot_star(&h, &one).unwrap(), one);
    }

    #[test]
    fn reduce_is_multiplicative() {
        let mut rng = StdRng::seed_from_u64(3);
        for name in [NamedAlgebra::C, NamedAlgebra::H] {
            let alg = named(name);
            let ring = FlipPolyRing::star_skew(alg.clone());
            for mu in [q(-1), q(1)] {
                for _ in 0..25 {
                    let (p, r) = (
                        random_poly(&mut rng, alg.dim(), 5),
                        random_poly(&mut rng, alg.dim(), 5),
                    );
                    let lhs = reduce(&ring, &ring.mul(&p, &r).unwrap(), &mu).unwrap();
                    let rhs = quot_mul(
                        &alg,
                        &mu,
                        &reduce(&ring, &p, &mu).unwrap(),
                        &reduce(&ring, &r, &mu).unwrap(),
                    )
                    .unwrap();
                    assert_eq!(lhs, rhs);
                    let starred = reduce(&ring, &alpha(&ring, &p).unwrap(), &mu).unwrap();
                    assert_eq!(
                        starred,
                        quot_star(&alg, &reduce(&ring, &p, &mu).unwrap()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn quotient_tower_matches_doubling_tower() {
        let h = named(NamedAlgebra::H);
        assert_eq!(
            quotient_algebra(&h, &q(-1)).unwrap(),
            tower(&DoublingSpec::from_integers(&[-1, -1, -1]).unwrap()).unwrap()
        );
        let half = Rational::new(1, 2).unwrap();
        let c = named(NamedAlgebra::C);
        assert_eq!(
            quotient_algebra(&c, &half).unwrap(),
            cayley_double(&c, &half).unwrap()
        );
    }

    #[test]
    fn phi_round_trip() {
        let h = named(NamedAlgebra::H);
        let u = QuotElement {
            a: h.basis(1),
            b: AlgebraElement::from_integers(&[1, 0, -2, 3]),
        };
        assert_eq!(phi_inv(&phi(&u)).unwrap(), u);
        assert!(phi_inv(&AlgebraElement::zero(3)).is_err());
    }

    #[test]
    fn psi_examples() {
        let h = named(NamedAlgebra::H);
        let t = PolyPair::new(Poly::monomial(h.one(), 1), Poly::zero());
        assert_eq!(psi(&t), Poly::monomial(h.one(), 2));
        let x = PolyPair::new(Poly::zero(), Poly::constant(h.one()));
        assert_eq!(psi(&x), Poly::monomial(h.one(), 1));
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let p = random_poly(&mut rng, 4, 7);
            assert_eq!(psi(&psi_inv(&p)), p);
        }
    }

    #[test]
    fn psi_is_a_star_homomorphism() {
        let mut rng = StdRng::seed_from_u64(9);
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::star_skew(h.clone());
        for _ in 0..20 {
            let u = PolyPair::new(random_poly(&mut rng, 4, 3), random_poly(&mut rng, 4, 3));
            let v = PolyPair::new(random_poly(&mut rng, 4, 3), random_poly(&mut rng, 4, 3));
            assert_eq!(
                psi(&pair_mul(&h, &u, &v).unwrap()),
                ring.mul(&psi(&u), &psi(&v)).unwrap()
            );
            assert_eq!(
                psi(&pair_star(&h, &u).unwrap()),
                alpha(&ring, &psi(&u)).unwrap()
            );
        }
    }
}
