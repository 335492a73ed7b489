use parallelotope::constructions::{decompose, sum_cell24, zonotope};
use parallelotope::exact_linalg::{Rational, RationalVector};
use parallelotope::polytope_core::{add_segment, centrally_symmetric, split_off_segment, venkov_parallelotope, vertices_of, Polytope};
use parallelotope::root_d4::{contains_quadruple, is_unimodular_mask, roots_of_mask, signed_permutations, tau_mask};
use proptest::prelude::*;

fn euler(p: &Polytope) -> i64 {
    p.f_vector().iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sums_are_symmetric_with_even_euler_sum(mask in 0u16..4096) {
        let p = sum_cell24(mask).unwrap();
        prop_assert_eq!(euler(&p), 0);
        prop_assert!(centrally_symmetric(p.vertices()).is_some());
    }

    #[test]
    fn venkov_matches_unimodular_and_quadruple_free(mask in 0u16..4096) {
        let p = sum_cell24(mask).unwrap();
        let tiles = venkov_parallelotope(&p).is_parallelotope();
        prop_assert_eq!(tiles, is_unimodular_mask(mask) && !contains_quadruple(mask));
        if tiles {
            prop_assert_eq!(p.facets().len(), 24 + 2 * tau_mask(mask).len());
        }
    }

    #[test]
    fn certificate_is_invariant_under_signed_permutations(mask in 0u16..4096, k in 0usize..384) {
        let g = &signed_permutations()[k];
        let a = sum_cell24(mask).unwrap();
        let b = sum_cell24(g.apply_mask(mask)).unwrap();
        prop_assert_eq!(a.certificate(), b.certificate());
    }

    #[test]
    fn facets_give_back_the_vertices(mask in 0u16..4096) {
        let p = sum_cell24(mask).unwrap();
        let mut v = vertices_of(&p.to_hpolytope()).unwrap();
        v.sort();
        prop_assert_eq!(v, p.vertices().to_vec());
    }

    #[test]
    fn segments_split_off_and_back(mask in 1u16..4096, pick in 0usize..12, num in 1i64..4) {
        prop_assume!(is_unimodular_mask(mask) && !contains_quadruple(mask));
        let roots = roots_of_mask(mask);
        let z = roots[pick % roots.len()].vector();
        let lambda = Rational::new(num, 2);
        let p = sum_cell24(mask).unwrap();
        let bigger = add_segment(&p, &z, &lambda).unwrap();
        let back = split_off_segment(&bigger, &z, &lambda).unwrap().expect("segment splits off");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn unimodular_zonotopes_decompose_to_a_point(mask in 1u16..4096) {
        prop_assume!(is_unimodular_mask(mask));
        let gens: Vec<RationalVector> = roots_of_mask(mask).iter().map(|r| r.vector()).collect();
        let z = zonotope(&gens, None).unwrap();
        let d = decompose(&z).unwrap();
        prop_assert_eq!(d.core.vertices().len(), 1);
        prop_assert_eq!(d.zone_directions.len(), gens.len());
    }
}
