use std::collections::BTreeSet;

use outbraid_core::braid::pure_braid_generator;
use outbraid_core::fpgroup::{
    braid_presentation, coset_table_from_quotient, invert_word, reidemeister_schreier_with,
    todd_coxeter, GroupHom, SymmetricGroup, TreePolicy,
};
use outbraid_core::freeprod::{fp_ab, fp_normalize, is_in_pi04, reduced_words, torsion_scan, FpWord};
use outbraid_core::hom_enum::{conjugation_orbit, enumerate_homs, EnumOptions};
use outbraid_core::perm::closure;
use outbraid_core::{AbelianDescriptor, Perm, Presentation};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed_0003),
        failure_persistence: None,
        ..Config::default()
    }
}

fn s4_word() -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1i32..=3, any::<bool>()), 0..8)
        .prop_map(|v| v.into_iter().map(|(k, n)| if n { -k } else { k }).collect())
}

fn eval_s4(w: &[i32]) -> Perm {
    let mut acc = Perm::identity(4);
    for &l in w {
        let k = l.unsigned_abs() as usize;
        acc = acc.then(&Perm::transposition(4, k, k + 1).unwrap());
    }
    acc
}

fn fp_letters() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(1u8..=3, 0..16)
}

proptest! {
    #![proptest_config(config(1000))]

    // index of ⟨words⟩ in S₄, compared with a closure count in the permutation group
    #[test]
    fn coset_tables_close_and_match_index(words in prop::collection::vec(s4_word(), 0..3)) {
        let p = Presentation::coxeter_symmetric(4).unwrap();
        let t = todd_coxeter(&p, &words, 200).unwrap();
        prop_assert!(t.is_closed());
        prop_assert!(t.is_consistent_with(&p));
        for w in &words {
            prop_assert_eq!(t.trace(0, w), 0);
        }
        let gens: Vec<Perm> = words.iter().map(|w| eval_s4(w)).collect();
        let order = if gens.is_empty() { 1 } else { closure(&gens).len() };
        prop_assert_eq!(t.len(), 24 / order);
    }

    #[test]
    fn free_product_abelianization_is_multiplicative(a in fp_letters(), b in fp_letters()) {
        let u = fp_normalize(&a).unwrap();
        let v = fp_normalize(&b).unwrap();
        let uv = u.mul(&v);
        let (x, y, z) = (fp_ab(&u), fp_ab(&v), fp_ab(&uv));
        for i in 0..3 {
            prop_assert_eq!(z[i], x[i] ^ y[i]);
        }
        prop_assert_eq!(fp_normalize(uv.letters()).unwrap(), uv.clone());
        prop_assert!(u.mul(&u.inverse()).is_empty());
        prop_assert_eq!(is_in_pi04(&uv), z == [0, 0, 0] || z == [1, 1, 1]);
        if is_in_pi04(&u) && is_in_pi04(&v) {
            prop_assert!(is_in_pi04(&uv));
        }
    }
}

#[test]
fn schreier_presentations_agree_across_tree_policies() {
    let p = Presentation::coxeter_symmetric(4).unwrap();
    let subgroups: Vec<Vec<Vec<i32>>> = vec![
        vec![],
        vec![vec![1]],
        vec![vec![1], vec![3]],
        vec![vec![1, 3]],
        vec![vec![1, 2]],
        vec![vec![1, 2, 3]],
    ];
    for words in subgroups {
        let t = todd_coxeter(&p, &words, 200).unwrap();
        let bfs = reidemeister_schreier_with(&p, &t, TreePolicy::BreadthFirst).unwrap();
        let dfs = reidemeister_schreier_with(&p, &t, TreePolicy::DepthFirst).unwrap();
        let n = t.len();
        assert_eq!(bfs.presentation.num_generators(), 3 * n - (n - 1));
        assert_eq!(dfs.presentation.num_generators(), 3 * n - (n - 1));
        assert_eq!(bfs.presentation.abelianization(), dfs.presentation.abelianization());
        // index times subgroup order, the latter counted in S₄
        let gens: Vec<Perm> = words.iter().map(|w| eval_s4(w)).collect();
        let h = if gens.is_empty() { 1 } else { closure(&gens).len() };
        assert_eq!(n * h, 24);
        for w in &bfs.generator_words {
            assert_eq!(t.trace(0, w), 0);
        }
    }
}

#[test]
fn pure_braid_group_abelianizes_to_z6() {
    let p = braid_presentation(4).unwrap();
    let imgs = (1..4).map(|i| Perm::transposition(4, i, i + 1).unwrap()).collect();
    let mut q = GroupHom::new(p.clone(), SymmetricGroup { degree: 4 }, imgs).unwrap();
    assert!(q.verify().unwrap());
    let t = coset_table_from_quotient(&p, &q).unwrap();
    assert_eq!(t.len(), 24);
    for policy in [TreePolicy::BreadthFirst, TreePolicy::DepthFirst] {
        let rw = reidemeister_schreier_with(&p, &t, policy).unwrap();
        assert_eq!(rw.presentation.abelianization(), AbelianDescriptor::from_parts(6, &[]).unwrap());
    }
    // the same index via coset enumeration over the x_ij
    let xs: Vec<Vec<i32>> = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        .iter()
        .map(|&(i, j)| pure_braid_generator(4, i, j).unwrap().letters().to_vec())
        .collect();
    assert_eq!(todd_coxeter(&p, &xs, 500).unwrap().len(), 24);
}

#[test]
fn enumerated_homs_satisfy_relators_and_orbit_sizes() {
    for (n, m) in [(3, 3), (4, 3), (4, 4), (3, 4), (5, 4)] {
        let p = braid_presentation(n).unwrap();
        let c = enumerate_homs(&p, m, EnumOptions::default()).unwrap();
        let mut total = 0;
        for class in &c.classes {
            let orbit = conjugation_orbit(&class.representative);
            assert_eq!(orbit.len() as u64, class.orbit_size);
            assert_eq!(class.representative.canonical_under_conjugation().unwrap(), class.representative);
            for t in &orbit {
                let mut h = GroupHom::to_symmetric(p.clone(), t).unwrap();
                assert!(h.verify().unwrap());
            }
            total += class.orbit_size;
        }
        assert_eq!(total, c.total);
    }
}

#[test]
fn enumeration_is_exhaustive_for_small_cases() {
    // brute force over all image tuples in S₃ for B₃ and B₄
    let s3: Vec<Perm> = outbraid_core::perm::AllPerms::new(3).collect();
    for n in [3usize, 4] {
        let p = braid_presentation(n).unwrap();
        let mut count = 0u64;
        let mut stack = vec![vec![]];
        while let Some(partial) = stack.pop() {
            if partial.len() == n - 1 {
                let t = outbraid_core::PermTuple::new(partial).unwrap();
                let mut h = GroupHom::to_symmetric(p.clone(), &t).unwrap();
                if h.verify().unwrap() {
                    count += 1;
                }
                continue;
            }
            for g in &s3 {
                let mut next = partial.clone();
                next.push(g.clone());
                stack.push(next);
            }
        }
        let c = enumerate_homs(&p, 3, EnumOptions::default()).unwrap();
        assert_eq!(c.total, count);
    }
}

#[test]
fn torsion_scan_finds_only_conjugates_of_generators() {
    let s = torsion_scan(9).unwrap();
    assert!(s.anomalies.is_empty());
    assert_eq!(s.labels, BTreeSet::from([1, 2, 3]));
    assert!(s.all_odd_palindromes);
    // independent count: w = u t u⁻¹ with u reduced and not ending in t
    let expected = reduced_words(4)
        .iter()
        .map(|u| (1..=3u8).filter(|&t| u.letters().last() != Some(&t)).count())
        .sum::<usize>();
    assert_eq!(s.involutions.len(), expected);
    assert_eq!(s.words_scanned, reduced_words(9).len());
}

#[test]
fn inverse_words_cancel() {
    let w = vec![1, -2, 3, 3];
    let mut both = w.clone();
    both.extend(invert_word(&w));
    assert!(outbraid_core::fpgroup::free_reduce(&both).is_empty());
    assert!(FpWord::identity().is_empty());
}
