mod common;

use std::collections::BTreeSet;

use common::*;
use proptest::prelude::*;
use tauscope::census::Census;
use tauscope::repmod::ext1;
use tauscope::torsion::*;
use tauscope::Error;

fn labels(c: &Census, ids: &[usize]) -> Vec<String> {
    let mut out: Vec<String> = ids.iter().map(|&i| c.label(i).to_string()).collect();
    out.sort();
    out
}

#[test]
fn gen_membership_in_alg_a() {
    let c = census_of(&load("alg_a"));
    let s1 = c.id_of_label("S1").unwrap();
    let p1 = c.id_of_label("P1").unwrap();
    assert!(gen_membership(&c, s1, &ids(&c, &["P1"])));
    assert!(!gen_membership(&c, p1, &ids(&c, &["S1"])));
    for x in 0..c.len() {
        assert!(gen_membership(&c, x, &BTreeSet::from([x])));
    }
}

#[test]
fn closure_membership_in_alg_a() {
    let c = census_of(&load("alg_a"));
    let p1 = c.id_of_label("P1").unwrap();
    let s2 = c.id_of_label("S2").unwrap();
    assert!(torsion_closure_membership(&c, p1, &ids(&c, &["S1", "S2"])));
    assert_eq!(
        filtration_length(&c, p1, &ids(&c, &["S1", "S2"])).unwrap(),
        2
    );
    assert!(!torsion_closure_membership(&c, s2, &ids(&c, &["S1"])));
    let everything: BTreeSet<usize> = (0..c.len()).collect();
    for x in 0..c.len() {
        assert!(torsion_closure_membership(&c, x, &everything));
    }
}

#[test]
fn filtration_lengths() {
    let c = census_of(&load("alg_a"));
    let p1 = c.id_of_label("P1").unwrap();
    let s2 = c.id_of_label("S2").unwrap();
    assert_eq!(filtration_length(&c, p1, &BTreeSet::from([p1])).unwrap(), 1);
    assert_eq!(
        filtration_length(&c, p1, &ids(&c, &["S1", "S2", "P3"])).unwrap(),
        2
    );
    assert!(matches!(
        filtration_length(&c, s2, &ids(&c, &["S1"])),
        Err(Error::NotMember)
    ));
}

#[test]
fn closures_in_alg_a() {
    let c = census_of(&load("alg_a"));
    assert!(torsion_closure(&c, &BTreeSet::new()).members().is_empty());
    assert_eq!(
        torsion_closure(&c, &ids(&c, &["P1"])).members(),
        &ids(&c, &["P1", "S1"])
    );
    assert_eq!(
        torsion_closure(&c, &ids(&c, &["S1"])).members(),
        &ids(&c, &["S1"])
    );
}

#[test]
fn torsion_class_counts() {
    for (name, count) in [("alg_a", 12), ("a2", 5), ("semisimple3", 8)] {
        let c = census_of(&load(name));
        let classes = enumerate_torsion_classes(&c);
        assert_eq!(classes.len(), count, "{name}");
        let distinct: BTreeSet<&BTreeSet<usize>> = classes.iter().map(|t| t.members()).collect();
        assert_eq!(distinct.len(), count);
        assert!(classes.iter().any(|t| t.members().is_empty()));
        assert!(classes.iter().any(|t| t.members().len() == c.len()));
    }
}

#[test]
fn enumeration_matches_brute_force() {
    let algebras = [
        load("alg_a"),
        load("a2"),
        load("semisimple3"),
        algebra_from_text(A3_LINEAR),
        algebra_from_text(D4),
    ];
    for a in &algebras {
        let c = census_of(a);
        assert!(c.len() <= 12);
        let hom = hom_table(&c);
        let expected = all_closed_sets(&hom);
        let found: BTreeSet<BTreeSet<usize>> = enumerate_torsion_classes(&c)
            .into_iter()
            .map(|t| t.members().clone())
            .collect();
        assert_eq!(found, expected, "{}", a.name());
    }
}

#[test]
fn approximation_of_main_example() {
    let c = census_of(&load("alg_a"));
    let t = torsion_closure(&c, &ids(&c, &["S1", "P1", "P3"]));
    assert_eq!(t.members(), &ids(&c, &["S1", "P1", "P3"]));
    let ap = minimal_left_approximation(&c, &t).unwrap();
    assert_eq!(labels(&c, &ap.t0_ids), ["P1", "P1", "P3"]);
    assert_eq!(labels(&c, &ap.t1_ids), ["S1"]);
    assert!(ap.phi.cokernel().0.dims() == ap.t1.dims());
    assert_eq!(split_projectives(&c, &t).unwrap(), ids(&c, &["P1", "P3"]));
    let ext = ext_projectives(&c, &t).unwrap();
    let only: Vec<usize> = ext
        .difference(&split_projectives(&c, &t).unwrap())
        .copied()
        .collect();
    assert_eq!(labels(&c, &only), ["S1"]);
}

#[test]
fn approximation_extremes() {
    let c = census_of(&load("alg_a"));
    let full = torsion_closure(&c, &(0..c.len()).collect());
    let ap = minimal_left_approximation(&c, &full).unwrap();
    assert_eq!(labels(&c, &ap.t0_ids), ["P1", "P2", "P3"]);
    assert!(ap.t1_ids.is_empty());
    assert_eq!(
        split_projectives(&c, &full).unwrap(),
        c.projective_ids().into_iter().collect()
    );
    let empty = torsion_closure(&c, &BTreeSet::new());
    let ap = minimal_left_approximation(&c, &empty).unwrap();
    assert!(ap.t0_ids.is_empty() && ap.t1_ids.is_empty());
}

#[test]
fn ext_projectives_have_no_extensions_into_the_class() {
    for name in ["alg_a", "a2", "semisimple3"] {
        let c = census_of(&load(name));
        for t in enumerate_torsion_classes(&c) {
            for p in ext_projectives(&c, &t).unwrap() {
                for &x in t.members() {
                    assert_eq!(ext1(c.module(p), c.module(x)).unwrap().dim(), 0);
                }
            }
        }
    }
}

#[test]
fn alpha_examples() {
    let c = census_of(&load("alg_a"));
    let t = torsion_closure(&c, &ids(&c, &["S1", "P1", "P3"]));
    assert_eq!(alpha(&c, &t).unwrap().members, ids(&c, &["P1", "P3"]));
    let full = torsion_closure(&c, &(0..c.len()).collect());
    assert_eq!(alpha(&c, &full).unwrap().members.len(), c.len());
    let s1 = torsion_closure(&c, &ids(&c, &["S1"]));
    assert_eq!(alpha(&c, &s1).unwrap().members, ids(&c, &["S1"]));
}

#[test]
fn wide_roundtrips() {
    let c = census_of(&load("alg_a"));
    let w = WideSubcategory {
        members: ids(&c, &["P1", "P3"]),
    };
    let t = wide_to_torsion(&c, &w).unwrap();
    assert_eq!(t.members(), &ids(&c, &["P1", "P3", "S1"]));
    assert!(wide_to_torsion(&c, &WideSubcategory::default())
        .unwrap()
        .members()
        .is_empty());
    let all = WideSubcategory {
        members: (0..c.len()).collect(),
    };
    assert_eq!(wide_to_torsion(&c, &all).unwrap().members().len(), c.len());
    // S1 is the cokernel of S2 -> P1, so {P1, S2} is not wide.
    let bad = WideSubcategory {
        members: ids(&c, &["P1", "S2"]),
    };
    assert!(matches!(
        wide_to_torsion(&c, &bad),
        Err(Error::RoundtripFailure)
    ));
}

#[test]
fn wide_counts_and_bijection() {
    for (name, count) in [("alg_a", 12), ("a2", 5), ("semisimple3", 8)] {
        let c = census_of(&load(name));
        let classes = enumerate_torsion_classes(&c);
        let wides = enumerate_wide_subcategories(&c).unwrap();
        assert_eq!(wides.len(), count, "{name}");
        let distinct: BTreeSet<&BTreeSet<usize>> = wides.iter().map(|w| &w.members).collect();
        assert_eq!(distinct.len(), count);
        for (t, w) in classes.iter().zip(&wides) {
            assert_eq!(torsion_closure(&c, &w.members).members(), t.members());
            assert_eq!(&alpha(&c, &wide_to_torsion(&c, w).unwrap()).unwrap(), w);
            if name == "semisimple3" {
                assert_eq!(&w.members, t.members());
            }
        }
    }
}

fn subset_strategy(n: usize) -> impl Strategy<Value = BTreeSet<usize>> {
    proptest::collection::btree_set(0..n, 0..=n)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn closure_is_a_closure_operator(s in subset_strategy(12), u in subset_strategy(12)) {
        let c = census_of(&algebra_from_text(D4));
        let hom = hom_table(&c);
        let s: BTreeSet<usize> = s.into_iter().filter(|&i| i < c.len()).collect();
        let u: BTreeSet<usize> = u.into_iter().filter(|&i| i < c.len()).collect();
        let cs = torsion_closure(&c, &s).members().clone();
        prop_assert!(s.is_subset(&cs));
        let again = torsion_closure(&c, &cs);
        prop_assert_eq!(again.members(), &cs);
        let both: BTreeSet<usize> = s.union(&u).copied().collect();
        prop_assert!(cs.is_subset(torsion_closure(&c, &both).members()));
        prop_assert_eq!(&cs, &closure_oracle(&hom, &s));
    }
}

#[test]
fn approximations_are_minimal_and_alpha_recovers_classes() {
    let algebras = [
        load("alg_a"),
        load("a2"),
        algebra_from_text(A3_LINEAR),
        algebra_from_text(D4),
    ];
    for a in &algebras {
        let c = census_of(a);
        let mut wides = BTreeSet::new();
        for t in enumerate_torsion_classes(&c) {
            let ap = minimal_left_approximation(&c, &t).unwrap();
            assert!(is_left_approximation(&c, &t, ap), "{}", a.name());
            assert!(is_left_minimal(&c, &t, ap), "{}", a.name());
            for x in ap.t0_ids.iter().chain(&ap.t1_ids) {
                assert!(t.contains(*x));
            }
            let w = alpha(&c, &t).unwrap();
            assert_eq!(torsion_closure(&c, &w.members), t);
            wides.insert(w.members);
        }
        assert_eq!(wides.len(), enumerate_torsion_classes(&c).len());
    }
}

#[test]
fn dynkin_counts() {
    let c = census_of(&algebra_from_text(A3_LINEAR));
    assert_eq!(c.len(), 6);
    assert_eq!(enumerate_torsion_classes(&c).len(), 14);
    let c = census_of(&algebra_from_text(D4));
    assert_eq!(c.len(), 12);
    assert_eq!(enumerate_torsion_classes(&c).len(), 50);
}
