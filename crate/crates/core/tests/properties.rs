mod common;

use std::collections::BTreeSet;

use common::{from_mask, random_complex, random_injective, random_stack, random_subcomplex, rng};
use morse_core::moves::{
    coperforation, coreduction, elementary_collapse, elementary_expansion, elementary_filling,
    elementary_perforation, perforation_set, reduction,
};
use morse_core::oracle::{acyclicity, count_vpaths_mod2};
use morse_core::*;
use proptest::prelude::*;

/// Random subsets of the 63 faces of a 5-simplex.
fn pool_in_5_simplex() -> impl Strategy<Value = SimplexPool> {
    proptest::collection::btree_set(1u32..64, 0..24)
        .prop_map(|masks| SimplexPool::new(masks.into_iter().map(from_mask)))
}

/// A random complex on at most `n` vertices, driven by a seed.
fn complex(n: u32) -> impl Strategy<Value = (u64, SimplexPool)> {
    any::<u64>().prop_map(move |seed| (seed, random_complex(&mut rng(seed), n)))
}

/// `K \ L` for a random complex and subcomplex: always cosimplicial.
fn cosimplicial_difference() -> impl Strategy<Value = (SimplexPool, SimplexPool, SimplexPool)> {
    any::<u64>().prop_map(|seed| {
        let mut r = rng(seed);
        let k = random_complex(&mut r, 6);
        let l = random_subcomplex(&mut r, &k);
        let s = k.difference(&l);
        (k, l, s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cosimplicial_iff_underline_simplicial(
        s in prop_oneof![pool_in_5_simplex(), cosimplicial_difference().prop_map(|(_, _, s)| s)]
    ) {
        prop_assert_eq!(s.is_cosimplicial(), s.underline().is_simplicial());
    }

    #[test]
    fn boundary_lies_one_dimension_down(s in pool_in_5_simplex()) {
        for nu in s.iter() {
            for mu in s.boundary(nu).unwrap() {
                prop_assert!(s.contains(&mu));
                prop_assert_eq!(mu.dim() + 1, nu.dim());
            }
        }
    }

    #[test]
    fn closure_is_idempotent(s in pool_in_5_simplex()) {
        let c = s.closure();
        prop_assert!(c.is_simplicial());
        prop_assert!(s.is_subset_of(&c));
        prop_assert_eq!(c.closure(), c.clone());
        prop_assert_eq!(s.underline(), c.difference(&s));
    }

    #[test]
    fn coboundary_stays_inside_and_mirrors_boundary((_k, _l, s) in cosimplicial_difference()) {
        prop_assert!(s.is_cosimplicial());
        for nu in s.iter() {
            let up = s.coboundary(nu).unwrap();
            for tau in &up {
                prop_assert!(s.contains(tau));
            }
            for mu in s.iter() {
                let down = s.boundary(mu).unwrap();
                prop_assert_eq!(down.contains(nu), up.contains(mu));
            }
        }
    }

    #[test]
    fn set_moves_mirror_complex_moves((_k, _l, s) in cosimplicial_difference()) {
        let upper = s.closure();
        let lower = s.underline();
        for tau in s.iter() {
            prop_assert_eq!(
                elementary_perforation(&upper, tau).is_ok(),
                perforation_set(&s, tau).is_ok()
            );
            prop_assert_eq!(elementary_filling(&lower, tau).is_ok(), coperforation(&s, tau).is_ok());
            for sigma in tau.facets().filter(|f| s.contains(f)) {
                let pair = FreePair::new(sigma.clone(), tau.clone()).unwrap();
                prop_assert_eq!(
                    elementary_collapse(&upper, &pair).is_ok(),
                    reduction(&s, &sigma, tau).is_ok()
                );
                prop_assert_eq!(
                    elementary_expansion(&lower, &pair).is_ok(),
                    coreduction(&s, &sigma, tau).is_ok()
                );
            }
        }
    }

    #[test]
    fn cuts_and_sections_are_cosimplicial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_complex(&mut r, 6);
        let l = random_subcomplex(&mut r, &k);
        let s = k.difference(&l);
        let f = random_stack(&mut r, &k, 4).restrict(&k, &s);
        for lambda in f.levels() {
            prop_assert!(f.cut(&s, lambda).is_cosimplicial());
            prop_assert!(f.section(&s, lambda).is_cosimplicial());
        }
    }

    #[test]
    fn monotone_iff_every_cut_is_simplicial(seed in any::<u64>(), monotone in any::<bool>()) {
        let mut r = rng(seed);
        let k = random_complex(&mut r, 5);
        let f = if monotone {
            random_stack(&mut r, &k, 4)
        } else {
            common::arbitrary_weights(&mut r, &k, 3)
        };
        let cuts_simplicial = f.levels().into_iter().all(|lambda| f.cut(&k, lambda).is_simplicial());
        prop_assert_eq!(validate_stack(&f, &k).unwrap(), cuts_simplicial);
        if monotone {
            prop_assert!(cuts_simplicial);
        }
    }

    #[test]
    fn lower_stars_are_the_sections((seed, k) in complex(6)) {
        let f = random_injective(&mut rng(seed), &k);
        let stack = induced_stack(&f, &k).unwrap();
        let stars: Vec<SimplexPool> = k
            .vertex_ids()
            .into_iter()
            .map(|v| lower_star(&k, &f, v).unwrap())
            .collect();
        for (v, star) in k.vertex_ids().into_iter().zip(&stars) {
            prop_assert_eq!(&stack.section(&k, f.get(v).unwrap()), star);
        }
        let sections: BTreeSet<Vec<Simplex>> = stack
            .levels()
            .into_iter()
            .map(|lambda| stack.section(&k, lambda).simplexes().to_vec())
            .collect();
        let star_sets: BTreeSet<Vec<Simplex>> = stars.iter().map(|s| s.simplexes().to_vec()).collect();
        prop_assert_eq!(sections, star_sets);
    }

    #[test]
    fn lower_star_partition_is_disjoint_and_covering((seed, k) in complex(6)) {
        let f = random_injective(&mut rng(seed), &k);
        let blocks = lower_star_partition(&k, &f).unwrap();
        let mut seen = BTreeSet::new();
        for b in &blocks {
            prop_assert!(b.star.contains(&Simplex::vertex(b.vertex)));
            for s in b.star.iter() {
                prop_assert!(seen.insert(s.clone()), "{:?} in two stars", s);
            }
        }
        prop_assert_eq!(seen.len(), k.len());
        let values: Vec<Weight> = blocks.iter().map(|b| f.get(b.vertex).unwrap()).collect();
        prop_assert!(values.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn scheduler_outputs_are_filtrations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_complex(&mut r, 6);
        let l = random_subcomplex(&mut r, &k);
        let s = CosimplicialComplex::new(k.difference(&l)).unwrap();
        let f = random_stack(&mut r, &k, 3).restrict(&k, &s);
        for seq in [max_f(&s, &f).unwrap(), min_f(&s, &f).unwrap()] {
            prop_assert_eq!(&seq.base, &s.underline());
            prop_assert_eq!(seq.simplex_count(), s.len());
            let mut current: Vec<Simplex> = seq.base.simplexes().to_vec();
            for item in &seq.items {
                current.extend(item.simplexes().cloned());
                prop_assert!(SimplexPool::new(current.clone()).is_simplicial());
            }
            let gvf = gradient_field(&seq);
            prop_assert!(gvf.is_disjoint());
            prop_assert!(acyclicity(&gvf, &s.closure()));
            let by_dim = s.f_vector();
            let expected: i64 = by_dim.iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
            prop_assert_eq!(critical_euler(&seq), expected);
        }
    }

    #[test]
    fn counters_and_moves_stay_consistent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_complex(&mut r, 6);
        let l = random_subcomplex(&mut r, &k);
        let s = CosimplicialComplex::new(k.difference(&l)).unwrap();
        let f = random_stack(&mut r, &k, 3).restrict(&k, &s);
        prop_assert_eq!(max_f_checked(&s, &f).unwrap(), max_f(&s, &f).unwrap());
        prop_assert_eq!(min_f_checked(&s, &f).unwrap(), min_f(&s, &f).unwrap());
    }

    #[test]
    fn morse_reference_counts_gradient_paths((seed, k) in complex(5)) {
        prop_assume!(k.len() <= 20);
        let f = random_stack(&mut rng(seed), &k, 3);
        let seq = max_on_complex(&k, &f).unwrap();
        let reference = morse_reference(&seq).unwrap();
        let gvf = gradient_field(&seq);
        let criticals: Vec<Simplex> = seq.criticals().cloned().collect();
        for sigma in k.iter() {
            let expected: Vec<Simplex> = criticals
                .iter()
                .filter(|c| c.dim() == sigma.dim())
                .filter(|c| count_vpaths_mod2(&gvf, &k, sigma, c).unwrap())
                .cloned()
                .collect();
            let mut got = reference.get(sigma).unwrap();
            got.sort();
            let mut expected = expected;
            expected.sort();
            prop_assert_eq!(got, expected, "reference of {:?}", sigma);
        }
        prop_assert!(morse_boundary(&seq).unwrap().squares_to_zero());
    }

    #[test]
    fn sequence_files_round_trip((seed, k) in complex(6)) {
        let f = random_stack(&mut rng(seed), &k, 3);
        let seq = max_on_complex(&k, &f).unwrap();
        let text = io::write_sequence(&seq);
        let back = io::parse_sequence(&text).unwrap();
        prop_assert_eq!(&back, &seq);
        prop_assert_eq!(io::write_sequence(&back), text);
        let file = io::parse_complex(&io::write_complex(&k, Some(&f))).unwrap();
        prop_assert_eq!(file.complex, k);
        prop_assert_eq!(file.weights.unwrap(), f);
    }
}

#[test]
fn premature_critical_fails_the_maximal_audit() {
    let k = fixtures::triangle();
    let f = Stack::constant(&k, 1);
    let mut seq = max_on_complex(&k, &f).unwrap();
    assert!(audit_maximal(&seq, &k, f.on(&k)));
    // split the first pair into two criticals
    let MorseItem::Pair(sigma, tau) = seq.items[1].clone() else {
        panic!("expected a pair");
    };
    seq.items
        .splice(1..2, [MorseItem::Critical(sigma), MorseItem::Critical(tau)]);
    assert!(validate_f(&seq, &k, f.on(&k)).is_ok());
    assert!(!audit_maximal(&seq, &k, f.on(&k)));
}

#[test]
fn cyclic_pairing_is_not_acyclic() {
    let (k, gvf) = fixtures::cyclic_square_pairing();
    assert!(!acyclicity(&gvf, &k));
    assert!(acyclicity(&GradientVectorField::default(), &k));
}
