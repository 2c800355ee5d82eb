//! Randomized invariants of the core data structures and solvers.

use fincat::certcheck;
use fincat::cover::ls_category_space;
use fincat::harness::gen::{gen_map, gen_space, GeneratorConfig};
use fincat::homotopy::{enumerate_maps, is_homotopic, is_nullhomotopic};
use fincat::poset::CoreReduction;
use fincat::{ContinuousMap, FiniteSpace, MapJson, Settings, Space};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space(seed: u64, max_points: usize) -> Space {
    let cfg = GeneratorConfig {
        max_points,
        ..GeneratorConfig::default()
    };
    gen_space(&mut ChaCha8Rng::seed_from_u64(seed), &cfg).unwrap()
}

/// Order-preserving functions counted without the enumerator.
fn brute_force_maps(x: &Space, y: &Space) -> usize {
    let (n, m) = (x.len(), y.len());
    let mut count = 0;
    let mut v = vec![0usize; n];
    loop {
        if (0..n).all(|a| (0..n).all(|b| !x.leq(a, b) || y.leq(v[a], v[b]))) {
            count += 1;
        }
        let mut i = 0;
        while i < n && v[i] + 1 == m {
            v[i] = 0;
            i += 1;
        }
        if i == n {
            return count;
        }
        v[i] += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pair_normality_matches_exhaustive(seed in any::<u64>()) {
        let x = space(seed, 6);
        prop_assert_eq!(x.is_normal().0, x.is_normal_exhaustive(1 << 20).unwrap().0);
    }

    #[test]
    fn space_json_round_trips(seed in any::<u64>()) {
        let x = space(seed, 6);
        let back = FiniteSpace::from_json(&x.to_json()).unwrap().space;
        prop_assert!(back.same_as(&x));
    }

    #[test]
    fn map_json_round_trips(seed in any::<u64>()) {
        let (x, y) = (space(seed, 4), space(seed ^ 0x9e37, 4));
        let f = gen_map(&mut ChaCha8Rng::seed_from_u64(seed), &x, &y, &GeneratorConfig::default()).unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        let back = ContinuousMap::from_json(&serde_json::from_str::<MapJson>(&text).unwrap()).unwrap();
        prop_assert_eq!(back.values(), f.values());
    }

    #[test]
    fn enumeration_counts_every_map(seed in any::<u64>()) {
        let (x, y) = (space(seed, 4), space(seed.rotate_left(17), 4));
        let maps = enumerate_maps(&x, &y, false, 1 << 20).unwrap();
        prop_assert_eq!(maps.len(), brute_force_maps(&x, &y));
    }

    #[test]
    fn core_reduction_is_a_deformation(seed in any::<u64>()) {
        let x = space(seed, 6);
        let red = CoreReduction::compute(&x, None);
        prop_assert!(red.fence.is_valid());
        let ri = red.retraction.after(&red.inclusion).unwrap();
        let id = ContinuousMap::identity(&red.core);
        prop_assert_eq!(ri.values(), id.values());
        prop_assert_eq!(red.core.len() + red.removal_trace.len(), x.len());
        // a core has nothing left to remove
        prop_assert!(CoreReduction::compute(&red.core, None).is_trivial());
    }

    #[test]
    fn category_is_bounded_by_maximal_points(seed in any::<u64>()) {
        let x = space(seed, 5);
        prop_assume!(x.is_path_connected());
        let r = ls_category_space(&x, false, &Settings::default()).unwrap();
        let n = r.value.finite().unwrap();
        // the basic opens of the maximal points are contractible
        prop_assert!(n < x.maximal_in(&x.all()).len());
        let contractible = is_nullhomotopic(&ContinuousMap::identity(&x), false, &Settings::default()).unwrap().homotopic;
        prop_assert_eq!(n == 0, contractible);
        prop_assert!(certcheck::check_cover(&r.certificate.unwrap().to_json(), Some(n + 1)).is_ok());
    }

    #[test]
    fn sequential_and_parallel_agree(seed in any::<u64>()) {
        let x = space(seed, 5);
        prop_assume!(x.is_path_connected());
        let a = ls_category_space(&x, false, &Settings::default()).unwrap().value;
        let b = ls_category_space(&x, false, &Settings::sequential()).unwrap().value;
        prop_assert_eq!(a, b);
        prop_assert!(!a.is_budget());
    }

    #[test]
    fn core_search_agrees_with_plain_search(seed in any::<u64>()) {
        let (x, y) = (space(seed, 4), space(seed.wrapping_mul(31), 4));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GeneratorConfig::default();
        let f = gen_map(&mut rng, &x, &y, &cfg).unwrap();
        let g = gen_map(&mut rng, &x, &y, &cfg).unwrap();
        let plain = Settings { use_cores: false, ..Settings::default() };
        let a = is_homotopic(&f, &g, false, &Settings::default()).unwrap();
        let b = is_homotopic(&f, &g, false, &plain).unwrap();
        prop_assert_eq!(a.homotopic, b.homotopic);
        if let Some(fence) = a.certificate {
            prop_assert!(certcheck::check_fence(&fence.to_json(), Some(&f.to_json()), Some(&g.to_json())).is_ok());
        }
    }
}
