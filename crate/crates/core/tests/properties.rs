use proptest::prelude::*;

use flipcayley::involutions::{alpha, beta};
use flipcayley::quotient::{psi, psi_inv, quot_mul, quot_star, reduce};
use flipcayley::{
    named, AlgebraElement, FlipPolyRing, Matrix, NamedAlgebra, Poly, Rational, StarAlgebra,
};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn arb_element(dim: usize) -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec(arb_rational(), dim).prop_map(AlgebraElement::from_coords)
}

fn arb_poly(dim: usize, max_degree: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((0..=max_degree, arb_element(dim)), 0..=3).prop_map(Poly::from_terms)
}

fn arb_name() -> impl Strategy<Value = NamedAlgebra> {
    prop_oneof![
        Just(NamedAlgebra::C),
        Just(NamedAlgebra::H),
        Just(NamedAlgebra::O)
    ]
}

fn ring_and_polys(
    max_degree: usize,
    count: usize,
) -> impl Strategy<Value = (NamedAlgebra, Vec<Poly>)> {
    arb_name().prop_flat_map(move |name| {
        let dim = named(name).dim();
        (
            Just(name),
            proptest::collection::vec(arb_poly(dim, max_degree), count),
        )
    })
}

fn shift_down(n: usize) -> Matrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rational::from_integer(i64::from(j == i + 1)))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).unwrap()
}

fn h_with_delta() -> FlipPolyRing {
    let h = named(NamedAlgebra::H);
    let star = h.involution().matrix().clone();
    FlipPolyRing::new(h, star, shift_down(4), true).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn poly_mul_is_biadditive(ps in proptest::collection::vec(arb_poly(4, 5), 4), with_delta in any::<bool>()) {
        let ring = if with_delta { h_with_delta() } else { FlipPolyRing::star_skew(named(NamedAlgebra::H)) };
        let (p, p2, q, q2) = (&ps[0], &ps[1], &ps[2], &ps[3]);
        let m = |a: &Poly, b: &Poly| ring.mul(a, b).unwrap();
        prop_assert_eq!(m(&p.add(p2), q), m(p, q).add(&m(p2, q)));
        prop_assert_eq!(m(p, &q.add(q2)), m(p, q).add(&m(p, q2)));
    }

    #[test]
    fn involutions_square_to_identity((name, ps) in ring_and_polys(6, 1)) {
        let ring = FlipPolyRing::star_skew(named(name));
        let p = &ps[0];
        prop_assert_eq!(&alpha(&ring, &alpha(&ring, p).unwrap()).unwrap(), p);
        prop_assert_eq!(&beta(&ring, &beta(&ring, p).unwrap()).unwrap(), p);
    }

    #[test]
    fn involutions_reverse_products((name, ps) in ring_and_polys(4, 2)) {
        let ring = FlipPolyRing::star_skew(named(name));
        let (p, q) = (&ps[0], &ps[1]);
        for f in [alpha, beta] {
            let lhs = f(&ring, &ring.mul(p, q).unwrap()).unwrap();
            let rhs = ring.mul(&f(&ring, q).unwrap(), &f(&ring, p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn reduce_is_a_star_ring_map(
        quaternions in any::<bool>(),
        plus in any::<bool>(),
        seeds in proptest::collection::vec(arb_poly(4, 5), 2),
    ) {
        let name = if quaternions { NamedAlgebra::H } else { NamedAlgebra::C };
        let alg = named(name);
        let n = alg.dim();
        let truncate = |p: &Poly| Poly::from_terms(p.terms().map(|(d, c)| (d, AlgebraElement::from_coords(c.coords()[..n].to_vec()))));
        let (p, q) = (truncate(&seeds[0]), truncate(&seeds[1]));
        let mu = Rational::from_integer(if plus { 1 } else { -1 });
        let ring = FlipPolyRing::star_skew(alg.clone());
        let r = |x: &Poly| reduce(&ring, x, &mu).unwrap();
        prop_assert_eq!(r(&ring.mul(&p, &q).unwrap()), quot_mul(&alg, &mu, &r(&p), &r(&q)).unwrap());
        prop_assert_eq!(r(&alpha(&ring, &p).unwrap()), quot_star(&alg, &r(&p)).unwrap());
    }

    #[test]
    fn psi_round_trip(p in arb_poly(4, 9)) {
        prop_assert_eq!(psi(&psi_inv(&p)), p);
    }

    #[test]
    fn quadratic_identities_on_samples(a in arb_element(8), b in arb_element(8)) {
        let o = named(NamedAlgebra::O);
        prop_assert!(o.associator(&a, &b, &a).unwrap().is_zero());
        prop_assert!(o.associator(&a, &a, &b).unwrap().is_zero());
        prop_assert!(o.associator(&b, &a, &a).unwrap().is_zero());
    }
}

fn sample(rng: &mut impl rand::Rng, dim: usize) -> AlgebraElement {
    AlgebraElement::from_coords(
        (0..dim)
            .map(|_| Rational::new(rng.gen_range(-3..=3), rng.gen_range(1..=2)).unwrap())
            .collect(),
    )
}

fn sampled_flags(a: &StarAlgebra, samples: usize) -> (bool, bool) {
    use rand::SeedableRng;
    let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
    let (mut flexible, mut alternative) = (true, true);
    for _ in 0..samples {
        let (x, y) = (sample(&mut rng, a.dim()), sample(&mut rng, a.dim()));
        flexible &= a.associator(&x, &y, &x).unwrap().is_zero();
        alternative &= a.associator(&x, &x, &y).unwrap().is_zero()
            && a.associator(&y, &x, &x).unwrap().is_zero();
    }
    (flexible, alternative)
}

#[test]
fn predicates_agree_with_random_sampling() {
    for name in [
        NamedAlgebra::H,
        NamedAlgebra::O,
        NamedAlgebra::OSplit,
        NamedAlgebra::S,
    ] {
        let a = named(name);
        assert_eq!(
            sampled_flags(&a, 1000),
            (a.is_flexible(), a.is_alternative()),
            "{name}"
        );
    }
}
