use bircones_core::tl::*;
use bircones_core::Cone;
use num_traits::Signed;
use proptest::prelude::*;

#[test]
fn ray_counts_follow_the_closed_forms() {
    for n in 2..=8 {
        let [nef, mov1, eff, ne] = ray_counts(n).unwrap();
        assert_eq!(nef, (n * n + 3 * n - 2) / 2, "nef at n = {n}");
        assert_eq!(mov1, n * n, "mov1 at n = {n}");
        assert_eq!(eff, 2 * n, "eff at n = {n}");
        assert_eq!(ne, 3 * n - 2, "ne at n = {n}");
        let mori = mori_cone(n).unwrap();
        assert_eq!(
            mori.extremal_rays().len(),
            3 * n - 2,
            "NE generators extremal at n = {n}"
        );
    }
}

#[test]
fn duality_square() {
    for n in 2..=6 {
        let nef = nef_cone(n).unwrap();
        assert!(nef.equals(&mori_cone(n).unwrap().dual().unwrap()).unwrap(), "n = {n}");
        let w = Cone::new(
            picard_rank(n),
            moving_curve_generators(n)
                .unwrap()
                .into_iter()
                .map(|c| c.into_pairings())
                .collect(),
        )
        .unwrap();
        assert!(
            w.equals(&effective_cone(n).unwrap().dual().unwrap()).unwrap(),
            "n = {n}"
        );
        assert_eq!(verified_moving_curve_rays(n).unwrap().len(), n * n);
    }
}

fn chain(n: usize) {
    let nef = nef_cone(n).unwrap();
    let mov = movable_cone(n).unwrap();
    let eff = effective_cone(n).unwrap();
    assert!(mov.contains_cone(&nef).unwrap(), "Nef in Mov at n = {n}");
    assert!(eff.contains_cone(&mov).unwrap(), "Mov in Eff at n = {n}");
    if n == 2 {
        assert!(nef.equals(&mov).unwrap());
    } else {
        assert!(!nef.contains_cone(&mov).unwrap(), "Nef != Mov at n = {n}");
        assert!(!mov.contains_cone(&eff).unwrap(), "Mov != Eff at n = {n}");
    }
}

#[test]
fn inclusion_chain_small() {
    for n in 2..=5 {
        chain(n);
    }
}

#[test]
fn inclusion_chain_n6() {
    chain(6);
}

#[test]
fn movable_cone_ray_counts() {
    let counts: Vec<usize> = (2..=4)
        .map(|n| movable_cone(n).unwrap().extremal_rays().len())
        .collect();
    assert_eq!(counts[..2], [4, 16]);
    // regression value for n = 4
    assert_eq!(counts[2], 96);
}

#[test]
fn repeated_colors_only_enlarge_the_movable_cone() {
    for n in 2..=4 {
        let list = degree_list(n).unwrap();
        let mut distinct = list.vectors.clone();
        distinct.dedup();
        let once = movable_cone_of(picard_rank(n), &distinct).unwrap();
        let twice = movable_cone(n).unwrap();
        assert!(twice.contains_cone(&once).unwrap(), "n = {n}");
    }
}

#[test]
fn classification_table() {
    for n in 2..=8 {
        let r = classify_tl(n).unwrap();
        assert!(!r.is_fano || r.is_weak_fano);
        assert_eq!(r.is_fano, n == 2, "n = {n}");
        assert!(r.is_weak_fano, "n = {n}");
        assert_eq!(r.aut_dimension, Some((n * n) as u64));
    }
}

#[test]
fn anticanonical_class_is_nonnegative_on_curves() {
    for n in 2..=8 {
        assert!(anticanonical_is_nef_on_generators(n).unwrap(), "n = {n}");
        assert!(alt_canonical_check(n).unwrap(), "n = {n}");
    }
}

fn n_and_pair() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=8).prop_flat_map(|n| {
        let pairs = moving_indices(n);
        (Just(n), 0..pairs.len()).prop_map(move |(n, i)| (n, pairs[i].0, pairs[i].1))
    })
}

fn n_and_nef_index() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=8).prop_flat_map(|n| {
        let pairs = nef_indices(n);
        (Just(n), 0..pairs.len()).prop_map(move |(n, i)| (n, pairs[i].0, pairs[i].1))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn last_boundary_relation_matches_the_table(n in 2usize..=8, k in 0usize..64) {
        let curves = mori_curves(n);
        let curve = curves[k % curves.len()];
        let c = mori_generator(n, curve).unwrap();
        for side in [Side::Plus, Side::Minus] {
            let last = boundary_divisor(n, side, n - 1).unwrap();
            let expected = table::boundary_pairing(n, curve, side, n - 1);
            prop_assert_eq!(pair(&last, &c).unwrap(), num_rational::BigRational::from_integer(expected.into()));
        }
    }

    #[test]
    fn moving_curves_pair_nonnegatively_with_boundary((n, p, q) in n_and_pair()) {
        let w = moving_curve_ray(n, p, q).unwrap();
        for d in boundary_divisors(n).unwrap() {
            prop_assert!(!pair(&d, &w).unwrap().is_negative());
        }
    }

    #[test]
    fn expansions_are_effective_and_symmetric((n, p, q) in n_and_pair()) {
        let w = moving_curve_ray(n, p, q).unwrap();
        let minus = moving_curve_expansion(n, p, q).unwrap();
        let plus = moving_curve_expansion_plus(n, p, q).unwrap();
        prop_assert!(minus.is_effective());
        prop_assert_eq!(minus.evaluate(), w.clone());
        prop_assert_eq!(plus.evaluate(), w);
    }

    #[test]
    fn nef_generators_are_nonnegative_on_curves((n, p, q) in n_and_nef_index()) {
        let d = nef_generator(n, p, q).unwrap();
        for curve in mori_curves(n) {
            prop_assert!(!pair(&d, &mori_generator(n, curve).unwrap()).unwrap().is_negative());
        }
    }

    #[test]
    fn curve_bases_round_trip((n, p, q) in n_and_pair()) {
        let w = moving_curve_ray(n, p, q).unwrap();
        for basis in [CurveBasis::Pairing, CurveBasis::Epsilon, CurveBasis::Literal] {
            let coords = basis.coordinates(&w).unwrap();
            prop_assert_eq!(basis.class(n, &coords).unwrap(), w.clone());
        }
    }
}
