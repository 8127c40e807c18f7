//! Exhaustive desk-scale invariants across the modules.

use std::cmp::Ordering;

use detring::classifier::cm_bound;
use detring::cone::{count_e_points_y_degree, generators_d_tilde, ConeSystem};
use detring::counting::monomials_of_degree;
use detring::{
    classify, count_standard, enumerate_standard, generators_d, hilbert_function, minor_leq,
    mu_power, rank1_mcm_classes, semigroup_vs_cone, straightening, verify_ladder, EvalSide,
    ExponentVector, HilbertMethod, Ideal, Minor, Monomial, Params, SubstitutionMap, Variant,
    VariableSpace,
};
use num_rational::BigRational;
use num_traits::One;

fn all_params(max_m: usize, max_n: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        for n in 1..=max_n {
            for r in 1..=m.min(n) {
                out.push(Params::new(m, n, r).unwrap());
            }
        }
    }
    out
}

fn proper_params(max_m: usize, max_n: usize) -> Vec<Params> {
    all_params(max_m, max_n)
        .into_iter()
        .filter(|p| p.r < p.m.min(p.n))
        .collect()
}

fn monomials_up_to(space: VariableSpace, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(space, k)).collect()
}

#[test]
fn term_order_axioms() {
    for space in [VariableSpace::x(2, 2).unwrap(), VariableSpace::yz(2, 2, 2).unwrap()] {
        let bound = if space.is_x() { 5 } else { 3 };
        let ms = monomials_up_to(space, bound);
        let one = Monomial::one(space);
        let vars = monomials_of_degree(space, 1);
        for a in &ms {
            assert!(a >= &one);
            for b in &ms {
                let ord = a.cmp(b);
                assert_eq!(ord == Ordering::Equal, a == b);
                assert_eq!(b.cmp(a), ord.reverse());
                if a.degree() != b.degree() {
                    assert_eq!(ord, a.degree().cmp(&b.degree()));
                }
                for c in &vars {
                    assert_eq!((a * c).cmp(&(b * c)), ord, "{a} {b} {c}");
                }
            }
        }
        // sorting is consistent only for a transitive order
        let mut sorted = ms.clone();
        sorted.sort();
        assert!(sorted.windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn minor_order_is_a_partial_order() {
    for m in 1..=3 {
        for n in 1..=3 {
            let all = Minor::all(m, n);
            for a in &all {
                assert!(minor_leq(a, a));
                for b in &all {
                    if minor_leq(a, b) && minor_leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &all {
                        if minor_leq(a, b) && minor_leq(b, c) {
                            assert!(minor_leq(a, c));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_standard_deterministic_and_counts_lattice_points() {
    for p in all_params(4, 4) {
        for d in 0..=4 {
            let first = enumerate_standard(&p, d);
            assert_eq!(first, enumerate_standard(&p, d));
            for s in &first {
                assert!(s.is_standard());
                assert!(s.shape().windows(2).all(|w| w[0] >= w[1]));
            }
            assert_eq!(first.len() as u64, count_standard(&p, d));
            assert_eq!(count_e_points_y_degree(&p, d).unwrap(), first.len(), "{p} d={d}");
        }
    }
}

#[test]
fn larger_minors_vanish_under_phi() {
    for p in proper_params(4, 4) {
        let map = SubstitutionMap::new(p);
        for d in Minor::all_of_size(p.m, p.n, p.r + 1) {
            assert!(map.minor_yz(&d).unwrap().is_zero(), "{p} {d}");
            let x = map.eval_bitableau(&detring::Bitableau::new(vec![d]).unwrap(), EvalSide::X).unwrap();
            assert!(map.phi(&x).unwrap().is_zero());
        }
    }
}

#[test]
fn straightening_fixes_standard_bitableaux() {
    for p in all_params(3, 3) {
        let map = SubstitutionMap::new(p);
        for d in 0..=3 {
            for s in enumerate_standard(&p, d) {
                let f = map.eval_bitableau(&s, EvalSide::X).unwrap();
                let out = straightening::straighten_with(&f, &map).unwrap();
                assert_eq!(out.combination.terms(), &[(BigRational::one(), s)]);
            }
        }
    }
}

#[test]
fn hilbert_function_methods_agree() {
    for p in all_params(3, 3) {
        for d in 0..=3 {
            let a = hilbert_function(&p, d, HilbertMethod::Bitableaux).unwrap();
            let b = hilbert_function(&p, d, HilbertMethod::Lattice).unwrap();
            let c = hilbert_function(&p, d, HilbertMethod::Rank).unwrap();
            assert_eq!((a, b), (c, c), "{p} d={d}");
        }
    }
    for p in all_params(4, 4) {
        for d in 4..=5 {
            assert_eq!(
                hilbert_function(&p, d, HilbertMethod::Bitableaux).unwrap(),
                hilbert_function(&p, d, HilbertMethod::Lattice).unwrap(),
                "{p} d={d}"
            );
        }
    }
}

#[test]
fn generators_satisfy_their_systems() {
    for p in all_params(4, 4) {
        let e = ConeSystem::new(p, Variant::E);
        let et = ConeSystem::new(p, Variant::ETilde);
        for g in generators_d(&p) {
            let v = ExponentVector::from_monomial(&g, &p).unwrap();
            assert!(e.contains_int(v.data()).unwrap());
            assert_eq!(v.y_degree(), v.z_degree());
        }
        for g in generators_d_tilde(&p) {
            let v = ExponentVector::from_monomial(&g, &p).unwrap();
            assert!(et.contains_int(v.data()).unwrap(), "{p} {g}");
        }
    }
}

#[test]
fn semigroups_equal_cones_both_variants() {
    for p in all_params(4, 4) {
        for variant in [Variant::E, Variant::ETilde] {
            for bound in [4, 6] {
                let report = semigroup_vs_cone(&p, variant, bound).unwrap();
                assert!(report.passed(), "{p} {variant} D={bound}: {:?}", report.first_mismatch);
            }
        }
    }
}

#[test]
fn counting_invariants() {
    for p in proper_params(5, 5) {
        for ideal in [Ideal::P, Ideal::Q] {
            for t in 1..=5 {
                assert!(mu_power(&p, ideal, t + 1).unwrap() > mu_power(&p, ideal, t).unwrap());
            }
        }
        for t in 0..=4 {
            assert_eq!(
                mu_power(&p, Ideal::P, t).unwrap(),
                mu_power(&p.transpose(), Ideal::Q, t).unwrap()
            );
        }
    }
}

#[test]
fn classification_invariants() {
    for p in proper_params(4, 4) {
        assert_eq!(
            rank1_mcm_classes(&p).unwrap().len(),
            (p.m - p.r) + (p.n - p.r) + 1
        );
        for ideal in [Ideal::P, Ideal::Q] {
            for t in 0..=cm_bound(&p, ideal) + 2 {
                let v = classify(&p, ideal, t).unwrap();
                if v.is_ulrich {
                    assert!(v.is_cohen_macaulay && v.mu == v.e);
                }
                if !v.is_cohen_macaulay {
                    assert!(v.mu > v.e);
                }
            }
        }
        if p.m == p.n {
            let mp = classify(&p, Ideal::P, p.m - p.r).unwrap().mu;
            let mq = classify(&p, Ideal::Q, p.n - p.r).unwrap().mu;
            assert_eq!(mp, mq);
        }
    }
}

#[test]
fn ladder_checks() {
    for (m, n) in [(2, 2), (2, 3), (3, 2)] {
        let p = Params::new(m, n, m.min(n)).unwrap();
        for delta in Minor::all(m, n) {
            let report = verify_ladder(&p, &delta, 3).unwrap();
            assert!(report.passed(), "{p} {delta}: {:?}", report.first_mismatch);
        }
    }
}
