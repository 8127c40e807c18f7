//! Randomized properties of the polynomial layer and of straightening.

use detring::{
    enumerate_standard, straightening, EvalSide, Params, Polynomial, SubstitutionMap,
    VariableSpace,
};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space() -> impl Strategy<Value = VariableSpace> {
    prop_oneof![
        (1..=3usize, 1..=3usize).prop_map(|(m, n)| VariableSpace::x(m, n).unwrap()),
        (1..=3usize, 1..=3usize, 1..=3usize)
            .prop_filter("r <= min", |(m, n, r)| r <= m.min(n))
            .prop_map(|(m, n, r)| VariableSpace::yz(m, r, n).unwrap()),
    ]
}

fn poly(space: VariableSpace, seed: u64, max_degree: u32) -> Polynomial {
    Polynomial::random(space, &mut ChaCha8Rng::seed_from_u64(seed), max_degree, 5)
}

fn params() -> impl Strategy<Value = Params> {
    (1..=3usize, 1..=3usize, 1..=3usize)
        .prop_filter("r <= min", |(m, n, r)| r <= m.min(n))
        .prop_map(|(m, n, r)| Params::new(m, n, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_axioms(s in space(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (f, g, h) = (poly(s, a, 3), poly(s, b, 3), poly(s, c, 3));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(s), f.clone());
    }

    #[test]
    fn parse_inverts_print(s in space(), seed in any::<u64>()) {
        let f = poly(s, seed, 4);
        prop_assert_eq!(Polynomial::parse(&f.to_string(), s).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leading_term_is_multiplicative(s in space(), a in any::<u64>(), b in any::<u64>()) {
        let (f, g) = (poly(s, a, 4), poly(s, b, 4));
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (mf, cf) = f.leading_term().unwrap();
        let (mg, cg) = g.leading_term().unwrap();
        let (m, c) = (&f * &g).leading_term().unwrap();
        prop_assert_eq!(m, &mf * &mg);
        prop_assert_eq!(c, cf * cg);
    }

    #[test]
    fn straightening_is_sound(p in params(), seed in any::<u64>()) {
        let map = SubstitutionMap::new(p);
        let f = poly(p.x_space(), seed, 3);
        let out = straightening::straighten_with(&f, &map).unwrap();
        let mut image = Polynomial::zero(p.yz_space());
        for (c, s) in out.combination.terms() {
            prop_assert!(s.is_standard());
            image.add_scaled(&map.eval_bitableau(s, EvalSide::YZ).unwrap(), c);
        }
        prop_assert_eq!(image, map.phi(&f).unwrap());
        prop_assert_eq!(out.combination.to_polynomial(&map).unwrap().degree(), f.degree().filter(|_| !out.combination.is_empty()));
    }

    #[test]
    fn homogeneous_straightening_steps_are_bounded(p in params(), seed in any::<u64>(), d in 0..=3u32) {
        let map = SubstitutionMap::new(p);
        let f = Polynomial::random_homogeneous(p.x_space(), &mut ChaCha8Rng::seed_from_u64(seed), d, 6);
        let out = straightening::straighten_with(&f, &map).unwrap();
        prop_assert!(out.iterations <= enumerate_standard(&p, d as usize).len());
        let image = map.phi(&f).unwrap();
        if !image.is_zero() {
            let (y, z) = image.leading_monomial().unwrap().bidegree();
            prop_assert_eq!((y, z), (d, d));
            prop_assert!(image.terms().all(|(m, _)| m.bidegree() == (d, d)));
        }
    }

    #[test]
    fn straightening_is_linear(p in params(), a in any::<u64>(), b in any::<u64>(), k in -3i64..=3) {
        let f = poly(p.x_space(), a, 3);
        let g = poly(p.x_space(), b, 3);
        let scaled = g.scale(&BigRational::from_integer(k.into()));
        let sf = straightening::straighten(&f, &p).unwrap();
        let sg = straightening::straighten(&scaled, &p).unwrap();
        prop_assert_eq!(straightening::straighten(&(&f + &scaled), &p).unwrap(), sf.merge(&sg, &p).unwrap());
    }
}
