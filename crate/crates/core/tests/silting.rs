mod common;

use std::collections::BTreeSet;

use common::*;
use tauscope::census::Census;
use tauscope::repmod::{projective_module, simple_module, Representation};
use tauscope::silting::*;
use tauscope::torsion::*;

fn sum(c: &Census, labels: &[&str]) -> Representation {
    let parts: Vec<Representation> = labels
        .iter()
        .map(|l| c.module(c.id_of_label(l).unwrap()).clone())
        .collect();
    Representation::direct_sum(&parts)
}

#[test]
fn main_example_silting_data() {
    let c = census_of(&load("alg_a"));
    let t = torsion_closure(&c, &ids(&c, &["S1", "P1", "P3"]));
    let data = silting_from_torsion_class(&c, &t).unwrap();
    assert_eq!(
        data.basic.iter().copied().collect::<BTreeSet<_>>(),
        ids(&c, &["S1", "P1", "P3"])
    );
    assert!(data.support.is_empty());
    let zero = Representation::zero(c.algebra().clone());
    assert!(d_sigma_membership(&data.sigma_prime, &zero));
    let s1 = c.module(c.id_of_label("S1").unwrap());
    let s2 = c.module(c.id_of_label("S2").unwrap());
    assert!(d_sigma_membership(&data.sigma_prime, s1));
    assert!(!d_sigma_membership(&data.sigma_prime, s2));
    assert!(is_support_tau_tilting(&c, &data).unwrap());
}

#[test]
fn extreme_silting_data() {
    let c = census_of(&load("alg_a"));
    let full = torsion_closure(&c, &(0..c.len()).collect());
    let data = silting_from_torsion_class(&c, &full).unwrap();
    assert_eq!(
        data.basic.iter().copied().collect::<BTreeSet<_>>(),
        c.projective_ids().into_iter().collect()
    );
    assert!(data.support.is_empty());
    let empty = torsion_closure(&c, &BTreeSet::new());
    let data = silting_from_torsion_class(&c, &empty).unwrap();
    assert!(data.basic.is_empty());
    assert_eq!(data.support, vec![0, 1, 2]);
    for x in 0..c.len() {
        assert!(!d_sigma_membership(&data.sigma_prime, c.module(x)));
        assert!(!d_sigma_membership(&data.sigma1, c.module(x)));
    }
}

#[test]
fn tau_rigidity() {
    let c = census_of(&load("alg_a"));
    assert!(is_tau_rigid(&sum(&c, &["S1", "P1", "P3"])).unwrap());
    for i in 0..3 {
        assert!(is_tau_rigid(&projective_module(c.algebra(), i)).unwrap());
    }
    let d = algebra_from_text(DUAL_NUMBERS);
    assert!(!is_tau_rigid(&simple_module(&d, 0)).unwrap());
}

#[test]
fn support_tau_tilting_pairs() {
    let c = census_of(&load("alg_a"));
    let m = sum(&c, &["S1", "P1", "P3"]);
    assert!(is_support_tau_tilting_pair(&m, &[]).unwrap());
    assert!(!is_support_tau_tilting_pair(&sum(&c, &["S1", "P1"]), &[]).unwrap());
    assert!(!is_support_tau_tilting_pair(&m, &[1]).unwrap());
}

#[test]
fn tilting_modules() {
    let c = census_of(&load("alg_a"));
    assert!(is_tilting(&sum(&c, &["P1", "P2", "P3"])).unwrap());
    assert!(!is_tilting(&sum(&c, &["S1", "P1", "P3"])).unwrap());
    let c = census_of(&load("a2"));
    assert!(is_tilting(&sum(&c, &["P1", "S1"])).unwrap());
}

#[test]
fn cone_of_main_example() {
    let c = census_of(&load("alg_a"));
    let t = torsion_closure(&c, &ids(&c, &["S1", "P1", "P3"]));
    let s = sigma1_from_approximation(&c, &t).unwrap();
    assert_eq!(
        c.decompose_ids(s.cokernel()).unwrap(),
        vec![(c.id_of_label("S1").unwrap(), 1)]
    );
    let d: BTreeSet<usize> = (0..c.len())
        .filter(|&x| d_sigma_membership(&s, c.module(x)))
        .collect();
    assert_eq!(d, ids(&c, &["S1", "P1", "P3"]));
    assert_eq!(s.p1(), &[1]);
    assert_eq!(s.p0(), &[0]);
}

#[test]
fn cone_of_full_class() {
    let c = census_of(&load("alg_a"));
    let full = torsion_closure(&c, &(0..c.len()).collect());
    let s = sigma1_from_approximation(&c, &full).unwrap();
    assert!(s.cokernel().is_zero());
    for x in 0..c.len() {
        assert!(d_sigma_membership(&s, c.module(x)));
    }
}

#[test]
fn silting_invariants_over_all_classes() {
    let algebras = [
        load("alg_a"),
        load("a2"),
        load("semisimple3"),
        algebra_from_text(A3_LINEAR),
        algebra_from_text(D4),
    ];
    for a in &algebras {
        let c = census_of(a);
        let n = a.idempotents().len();
        let mut seen = BTreeSet::new();
        for t in enumerate_torsion_classes(&c) {
            let data = silting_from_torsion_class(&c, &t).unwrap();
            assert_eq!(data.basic.len() + data.support.len(), n);
            for x in 0..c.len() {
                let m = c.module(x);
                assert_eq!(d_sigma_membership(&data.sigma_prime, m), t.contains(x));
                assert_eq!(d_sigma_membership(&data.sigma1, m), t.contains(x));
            }
            let module = Representation::direct_sum(
                &data
                    .basic
                    .iter()
                    .map(|&i| c.module(i).clone())
                    .chain(std::iter::once(Representation::zero(a.clone())))
                    .collect::<Vec<_>>(),
            );
            assert!(is_tau_rigid(&module).unwrap());
            assert!(is_support_tau_tilting(&c, &data).unwrap());
            let basic: BTreeSet<usize> = data.basic.iter().copied().collect();
            let generated: BTreeSet<usize> = (0..c.len())
                .filter(|&x| gen_membership(&c, x, &basic))
                .collect();
            assert_eq!(&generated, t.members());
            assert!(seen.insert(data.basic.clone()));
        }
    }
}
