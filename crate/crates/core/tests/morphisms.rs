mod common;

use aglab::derived::derive;
use aglab::fixtures;
use aglab::morphisms::{
    are_isomorphic, aut2e, automorphisms, canonical_form, is_homomorphism, theorem15_check, Permutation,
};
use aglab::FiniteGroupoid;
use common::{all_tables, groupoid, permutations, random_permutation, Raw};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_groupoid(max: usize) -> impl Strategy<Value = FiniteGroupoid> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0..n as u8, n * n).prop_map(move |t| groupoid(n, t))
    })
}

fn arb_with_perm(max: usize) -> impl Strategy<Value = (FiniteGroupoid, Vec<usize>)> {
    arb_groupoid(max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant((g, phi) in arb_with_perm(6)) {
        let h = g.relabel(&phi);
        prop_assert_eq!(canonical_form(&g).table, canonical_form(&h).table);
    }

    #[test]
    fn canonical_form_is_idempotent(g in arb_groupoid(6)) {
        let c = canonical_form(&g);
        let again = canonical_form(&c.table);
        prop_assert_eq!(&again.table, &c.table);
        prop_assert_eq!(g.relabel(&c.relabeling).without_labels(), c.table);
    }

    #[test]
    fn canonical_form_is_least_relabeling(g in arb_groupoid(4)) {
        let least = Raw::new(g.order(), g.table()).canonical();
        prop_assert_eq!(canonical_form(&g).table.table().to_vec(), least);
    }

    #[test]
    fn isomorphism_witness_is_verified((g, phi) in arb_with_perm(6)) {
        let h = g.relabel(&phi);
        let iso = are_isomorphic(&g, &h).expect("relabeled copies are isomorphic");
        prop_assert!(is_homomorphism(&g, &h, &iso));
        // phi is recovered up to an automorphism of g
        let back = Permutation::new(phi.clone()).unwrap().inverse().compose(&iso);
        prop_assert!(is_homomorphism(&g, &g, &back));
    }

    #[test]
    fn automorphisms_are_automorphisms(g in arb_groupoid(5)) {
        let autos = automorphisms(&g);
        prop_assert!(autos[0].perm.is_identity());
        for w in autos.windows(2) {
            prop_assert!(w[0].perm < w[1].perm);
        }
        for a in &autos {
            prop_assert!(is_homomorphism(&g, &g, &a.perm));
            prop_assert_eq!(a.involutive, a.perm.is_involution());
        }
        let brute = permutations(g.order())
            .into_iter()
            .filter(|p| is_homomorphism(&g, &g, p))
            .count();
        prop_assert_eq!(autos.len(), brute);
    }

    #[test]
    fn aut2e_is_closed_under_inversion(g in arb_groupoid(5)) {
        let members = aut2e(&g);
        prop_assert!(members.iter().any(|a| a.perm.is_identity()));
        for a in &members {
            prop_assert_eq!(a.perm.inverse(), a.perm.clone());
            for e in g.idempotents() {
                prop_assert_eq!(a.perm.apply(e), e);
            }
        }
    }
}

#[test]
fn seeded_relabelings_of_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, g) in fixtures::all() {
        let c = canonical_form(&g).table;
        for _ in 0..100 {
            let phi = random_permutation(&mut rng, g.order());
            let h = g.relabel(&phi);
            assert_eq!(canonical_form(&h).table, c, "{name}");
            let iso = are_isomorphic(&g, &h).unwrap();
            assert!(is_homomorphism(&g, &h, &iso), "{name}");
        }
    }
}

#[test]
fn distinct_canonical_forms_mean_non_isomorphic() {
    let gs: Vec<FiniteGroupoid> = all_tables(2).map(|t| groupoid(2, t)).collect();
    for g in &gs {
        for h in &gs {
            let brute = permutations(2).iter().any(|p| is_homomorphism(g, h, p));
            assert_eq!(are_isomorphic(g, h).is_some(), brute);
        }
    }
}

/// The bijection criterion for every bijection between every pair of
/// completely inverse AG**-groupoids of order at most 3.
#[test]
fn bijection_criterion_exhaustive() {
    for n in 1..=3 {
        let members: Vec<FiniteGroupoid> = all_tables(n)
            .filter(|t| Raw::new(n, t).cia())
            .map(|t| groupoid(n, t))
            .collect();
        let bijections: Vec<Permutation> = permutations(n)
            .into_iter()
            .map(|p| Permutation::new(p).unwrap())
            .collect();
        let mut positives = 0;
        for g in &members {
            for h in &members {
                let dg = derive(g).unwrap();
                let dh = derive(h).unwrap();
                for b in &bijections {
                    let r = theorem15_check(b, g, h).unwrap();
                    assert!(r.violations.is_empty(), "{:?}", r.violations);
                    assert_eq!(r.cond_a, r.cond_b);
                    assert_eq!(r.cond_a, is_homomorphism(dg.derived(), dh.derived(), b));
                    positives += r.cond_a as usize;
                }
            }
        }
        assert!(positives > 0);
    }
}

#[test]
fn bijection_criterion_rejects_non_members() {
    let id = Permutation::identity(2);
    assert!(theorem15_check(&id, &fixtures::lz2(), &fixtures::sl2()).is_err());
}
