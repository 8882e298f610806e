#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use tauscope::algebra::{build_algebra, Algebra, FieldMode};
use tauscope::census::{enumerate_indecomposables, Caps, Census};
use tauscope::cli::parse_presentation;
use tauscope::repmod::hom_dim;

pub const A3_LINEAR: &str = "algebra L3\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\n";
pub const D4: &str =
    "algebra D4\nvertices 1 2 3 4\narrow a : 1 -> 4\narrow b : 2 -> 4\narrow c : 3 -> 4\n";
pub const DUAL_NUMBERS: &str = "algebra D\nvertices 1\narrow x : 1 -> 1\nrelation x*x\n";

pub fn data_path(name: &str) -> String {
    format!("{}/../../data/{name}.quiver", env!("CARGO_MANIFEST_DIR"))
}

pub fn algebra_from_text(text: &str) -> Arc<Algebra> {
    let p = parse_presentation(text).unwrap();
    Arc::new(build_algebra(&p, 64, FieldMode::Rational).unwrap())
}

pub fn load(name: &str) -> Arc<Algebra> {
    algebra_from_text(&std::fs::read_to_string(data_path(name)).unwrap())
}

pub fn census_of(a: &Arc<Algebra>) -> Census {
    enumerate_indecomposables(a, Caps::default()).unwrap()
}

pub fn ids(c: &Census, labels: &[&str]) -> BTreeSet<usize> {
    labels
        .iter()
        .map(|l| c.id_of_label(l).unwrap_or_else(|| panic!("no item {l}")))
        .collect()
}

pub fn hom_table(c: &Census) -> Vec<Vec<usize>> {
    let n = c.len();
    (0..n)
        .map(|i| (0..n).map(|j| hom_dim(c.module(i), c.module(j))).collect())
        .collect()
}

/// The smallest torsion class containing `s` is `⊥(s⊥)`; over a census both
/// perpendicular categories are read off indecomposables.
pub fn closure_oracle(hom: &[Vec<usize>], s: &BTreeSet<usize>) -> BTreeSet<usize> {
    let n = hom.len();
    let free: Vec<usize> = (0..n)
        .filter(|&y| s.iter().all(|&x| hom[x][y] == 0))
        .collect();
    (0..n)
        .filter(|&x| free.iter().all(|&y| hom[x][y] == 0))
        .collect()
}

pub fn all_closed_sets(hom: &[Vec<usize>]) -> BTreeSet<BTreeSet<usize>> {
    let n = hom.len();
    (0..1u64 << n)
        .map(|mask| {
            let s: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            closure_oracle(hom, &s)
        })
        .collect()
}
