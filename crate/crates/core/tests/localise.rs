mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::*;
use tauscope::algebra::{count_simple_modules, regular_multiplicities, Algebra};
use tauscope::census::{knit, Caps, Census};
use tauscope::exactlin::{Matrix, Scalar};
use tauscope::localise::*;
use tauscope::repmod::{hom_dim, injective_module, is_isomorphic, ProjectiveMap};
use tauscope::silting::{silting_from_torsion_class, TwoTermComplex};
use tauscope::torsion::*;

fn element(a: &Algebra, label: &str) -> Vec<Scalar> {
    let i = a
        .labels()
        .iter()
        .position(|l| l == label)
        .unwrap_or_else(|| panic!("no basis element {label}"));
    a.basis_element(i)
}

fn main_class(c: &Census) -> TorsionClass {
    torsion_closure(c, &ids(c, &["S1", "P1", "P3"]))
}

fn span_equal(n: usize, x: &[Vec<Scalar>], y: &[Vec<Scalar>]) -> bool {
    let rank = |v: &[Vec<Scalar>]| Matrix::from_columns(n, v).rank();
    let both: Vec<Vec<Scalar>> = x.iter().chain(y).cloned().collect();
    rank(x) == rank(y) && rank(&both) == rank(x)
}

#[test]
fn reflections_of_the_regular_module() {
    let c = census_of(&load("alg_a"));
    let (g, eta) = reflection_of_regular(&c, &main_class(&c)).unwrap();
    let p1 = c.id_of_label("P1").unwrap();
    let p3 = c.id_of_label("P3").unwrap();
    assert_eq!(c.decompose_ids(&g).unwrap(), vec![(p3, 1), (p1, 2)]);
    assert_eq!(
        c.decompose_ids(&eta.cokernel().0).unwrap(),
        vec![(c.id_of_label("S1").unwrap(), 1)]
    );

    let full = torsion_closure(&c, &(0..c.len()).collect());
    let (g, eta) = reflection_of_regular(&c, &full).unwrap();
    assert_eq!(g.total_dim(), 5);
    assert!(eta.is_isomorphism());

    let s1 = torsion_closure(&c, &ids(&c, &["S1"]));
    let (g, _) = reflection_of_regular(&c, &s1).unwrap();
    assert_eq!(
        c.decompose_ids(&g).unwrap(),
        vec![(c.id_of_label("S1").unwrap(), 1)]
    );
}

#[test]
fn localised_rings_of_alg_a() {
    let c = census_of(&load("alg_a"));
    let lambda = localised_ring(&c, &main_class(&c)).unwrap();
    assert_eq!(lambda.dim(), 5);
    assert_eq!(count_simple_modules(&lambda).unwrap(), 2);
    assert_eq!(regular_multiplicities(&lambda).unwrap(), vec![2, 1]);

    let full = torsion_closure(&c, &(0..c.len()).collect());
    let lambda = localised_ring(&c, &full).unwrap();
    assert_eq!(lambda.dim(), 5);
    assert_eq!(count_simple_modules(&lambda).unwrap(), 3);

    let s1 = torsion_closure(&c, &ids(&c, &["S1"]));
    assert_eq!(localised_ring(&c, &s1).unwrap().dim(), 1);
    let empty = torsion_closure(&c, &BTreeSet::new());
    assert_eq!(localised_ring(&c, &empty).unwrap().dim(), 0);
}

#[test]
fn ring_map_kernels() {
    let c = census_of(&load("alg_a"));
    let a = c.algebra();
    let (f, kernel) = ring_map(&c, &main_class(&c)).unwrap();
    assert_eq!(f.cols(), 5);
    let beta = element(a, "beta");
    assert_eq!(kernel.len(), 1);
    assert!(span_equal(5, &kernel, std::slice::from_ref(&beta)));
    assert!(span_equal(5, &kernel, &a.ideal_closure(&[beta]).columns()));

    let full = torsion_closure(&c, &(0..c.len()).collect());
    let (f, kernel) = ring_map(&c, &full).unwrap();
    assert!(kernel.is_empty());
    assert_eq!(f.rank(), 5);

    let s1 = torsion_closure(&c, &ids(&c, &["S1"]));
    let (_, kernel) = ring_map(&c, &s1).unwrap();
    assert_eq!(kernel.len(), 4);
    let expected: Vec<Vec<Scalar>> = ["e2", "e3", "alpha", "beta"]
        .iter()
        .map(|l| element(a, l))
        .collect();
    assert!(span_equal(5, &kernel, &expected));
}

#[test]
fn ring_map_is_a_unital_homomorphism() {
    let c = census_of(&load("alg_a"));
    let a = c.algebra();
    let data = ring_epimorphism(&c, &main_class(&c)).unwrap();
    let f = &data.ring_map;
    let lambda = &data.lambda;
    assert_eq!(f.apply(a.unit()), lambda.unit().to_vec());
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let x = a.basis_element(i);
            let y = a.basis_element(j);
            assert_eq!(
                f.apply(&a.multiply(&x, &y)),
                lambda.multiply(&f.apply(&x), &f.apply(&y))
            );
        }
    }
}

#[test]
fn self_orthogonality_examples() {
    let c = census_of(&load("alg_a"));
    let a = c.algebra();
    let identity = TwoTermComplex::new(
        a,
        ProjectiveMap {
            source: vec![0],
            target: vec![0],
            entries: vec![vec![element(a, "e1")]],
        },
    );
    assert!(self_orthogonality(&identity));
    let data = silting_from_torsion_class(&c, &main_class(&c)).unwrap();
    assert!(self_orthogonality(&data.sigma1));

    // Multiplication by x on the dual numbers has a non-null-homotopic shift.
    let d = algebra_from_text(DUAL_NUMBERS);
    let x = TwoTermComplex::new(
        &d,
        ProjectiveMap {
            source: vec![0],
            target: vec![0],
            entries: vec![vec![element(&d, "x")]],
        },
    );
    assert!(!self_orthogonality(&x));
}

#[test]
fn x_sigma_in_alg_a() {
    let c = census_of(&load("alg_a"));
    let data = silting_from_torsion_class(&c, &main_class(&c)).unwrap();
    let zero = tauscope::repmod::Representation::zero(c.algebra().clone());
    assert!(x_sigma_membership(&data.sigma1, &zero));
    let members: BTreeSet<usize> = (0..c.len())
        .filter(|&x| x_sigma_membership(&data.sigma1, c.module(x)))
        .collect();
    assert_eq!(members, ids(&c, &["P1", "P3"]));
}

#[test]
fn asai_probe() {
    let a = load("asai");
    let i3 = injective_module(&a, 2);
    assert_eq!(hom_dim(&i3, &i3), 1);
    let sigma = TwoTermComplex::new(
        &a,
        ProjectiveMap {
            source: vec![2, 2],
            target: vec![1, 0],
            entries: vec![
                vec![element(&a, "gamma"), vec![Scalar::zero(); a.dim()]],
                vec![vec![Scalar::zero(); a.dim()], element(&a, "gamma*beta")],
            ],
        },
    );
    assert!(self_orthogonality(&sigma));
    assert!(x_sigma_membership(&sigma, &i3));
    let caps = Caps {
        dim_cap: 12,
        count_cap: 1000,
    };
    let k = knit(&a, caps, false).unwrap();
    assert!(k.cap_hit.is_some());
    let mut hits = 0;
    for item in &k.items {
        let m = &item.module;
        assert!(m.total_dim() <= 12);
        let inside = x_sigma_membership(&sigma, m);
        assert_eq!(inside, is_isomorphic(m, &i3).unwrap(), "{}", item.label);
        hits += inside as usize;
    }
    assert_eq!(hits, 1);
}

#[test]
fn tor_one() {
    let c = census_of(&load("alg_a"));
    let full = torsion_closure(&c, &(0..c.len()).collect());
    assert_eq!(tor1(&ring_epimorphism(&c, &full).unwrap()).unwrap(), 0);
    assert_eq!(
        tor1(&ring_epimorphism(&c, &main_class(&c)).unwrap()).unwrap(),
        0
    );
    let d = algebra_from_text(DUAL_NUMBERS);
    let (k, f) = d.quotient_by_ideal(&[element(&d, "x")]).unwrap();
    assert_eq!(tor1_of(&d, &Arc::new(k), &f).unwrap(), 1);
    let (same, id) = d.quotient_by_ideal(&[]).unwrap();
    assert_eq!(tor1_of(&d, &Arc::new(same), &id).unwrap(), 0);
}

#[test]
fn classification_counts() {
    for (name, count) in [("alg_a", 12), ("a2", 5), ("semisimple3", 8)] {
        let c = census_of(&load(name));
        let report = classify_all(&c).unwrap();
        assert_eq!(report.records.len(), count, "{name}");
        assert_eq!(report.counts.torsion_classes, count);
        assert_eq!(report.counts.support_tau_tilting, count);
        assert_eq!(report.counts.wide_subcategories, count);
        assert_eq!(report.counts.ring_epimorphisms, count);
        assert_eq!(report.counts.universal_localisations, count);
    }
}

#[test]
fn semisimple_localisations_are_products_of_fields() {
    let c = census_of(&load("semisimple3"));
    for t in enumerate_torsion_classes(&c) {
        let data = ring_epimorphism(&c, &t).unwrap();
        let mult = regular_multiplicities(&data.lambda).unwrap();
        assert!(mult.iter().all(|&k| k == 1));
        assert_eq!(mult.len(), data.lambda.dim());
        assert_eq!(data.lambda.dim(), t.members().len());
        if t.members().len() == c.len() {
            assert!(data.kernel.is_empty());
        }
    }
}

#[test]
fn localisation_invariants_over_all_classes() {
    let algebras = [
        load("alg_a"),
        load("a2"),
        load("semisimple3"),
        algebra_from_text(A3_LINEAR),
    ];
    for a in &algebras {
        let c = census_of(a);
        let mut images = BTreeSet::new();
        for t in enumerate_torsion_classes(&c) {
            let data = ring_epimorphism(&c, &t).unwrap();
            let w = alpha(&c, &t).unwrap();
            let x_sigma: BTreeSet<usize> = (0..c.len())
                .filter(|&x| x_sigma_membership(&data.sigma_b, c.module(x)))
                .collect();
            assert_eq!(x_sigma, w.members, "{}", a.name());
            let restricted: BTreeSet<usize> = (0..c.len())
                .filter(|&x| restriction_membership(&data, c.module(x)).unwrap())
                .collect();
            assert_eq!(restricted, w.members, "{}", a.name());
            assert!(self_orthogonality(&data.sigma_b));
            assert_eq!(
                count_simple_modules(&data.lambda).unwrap(),
                split_projectives(&c, &t).unwrap().len()
            );
            assert_eq!(data.lambda.dim(), hom_dim(&data.reflection, &data.reflection));
            let kernel = Matrix::from_columns(a.dim(), &data.kernel);
            assert!(a.is_two_sided_ideal(&kernel));
            assert_eq!(tor1(&data).unwrap(), 0);
            assert!(images.insert(x_sigma));
        }
    }
}
