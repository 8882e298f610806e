//! JSON sections and the DOT lattice.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::census::Census;
use crate::error::Result;
use crate::localise::{classify_all, LocalisationRecord};
use crate::silting::{silting_from_torsion_class, TwoTermComplex};
use crate::torsion::{alpha, enumerate_torsion_classes, IdSet};

fn vertex_names(alg: &Algebra) -> Vec<String> {
    alg.quiver()
        .map(|q| q.quiver.vertices.clone())
        .unwrap_or_default()
}

fn names(c: &Census, ids: impl IntoIterator<Item = usize>) -> Vec<String> {
    ids.into_iter().map(|i| c.label(i).to_string()).collect()
}

fn vertices(alg: &Algebra, vs: &[usize]) -> Vec<String> {
    let n = vertex_names(alg);
    vs.iter().map(|&v| n[v].clone()).collect()
}

pub fn algebra_json(alg: &Algebra, field: &str) -> Value {
    json!({
        "name": alg.name(),
        "dimension": alg.dim(),
        "vertices": vertex_names(alg),
        "field": field,
    })
}

pub fn labels_json(c: &Census) -> Value {
    json!(names(c, 0..c.len()))
}

pub fn census_json(c: &Census) -> Value {
    let items: Vec<Value> = c
        .items()
        .iter()
        .map(|i| {
            json!({
                "id": i.id,
                "label": i.label,
                "dims": i.dims,
                "projective": i.projective,
                "injective": i.injective,
            })
        })
        .collect();
    json!({ "count": items.len(), "items": items })
}

pub fn tors_json(c: &Census) -> Value {
    let classes: Vec<Value> = enumerate_torsion_classes(c)
        .iter()
        .enumerate()
        .map(|(k, t)| json!({ "index": k, "members": names(c, t.members().iter().copied()) }))
        .collect();
    json!({ "count": classes.len(), "classes": classes })
}

pub fn wide_json(c: &Census) -> Result<Value> {
    let mut items = Vec::new();
    for (k, t) in enumerate_torsion_classes(c).iter().enumerate() {
        let w = alpha(c, t)?;
        items.push(json!({
            "index": k,
            "members": names(c, w.members.iter().copied()),
            "torsion_class": k,
        }));
    }
    Ok(json!({ "count": items.len(), "items": items }))
}

fn complex_json(alg: &Algebra, s: &TwoTermComplex) -> Value {
    json!({ "p1": vertices(alg, s.p1()), "p0": vertices(alg, s.p0()) })
}

pub fn silting_json(c: &Census) -> Result<Value> {
    let alg = c.algebra();
    let mut items = Vec::new();
    for (k, t) in enumerate_torsion_classes(c).iter().enumerate() {
        let s = silting_from_torsion_class(c, t)?;
        items.push(json!({
            "index": k,
            "class": names(c, t.members().iter().copied()),
            "basic": names(c, s.basic.iter().copied()),
            "support": vertices(alg, &s.support),
            "sigma_prime": complex_json(alg, &s.sigma_prime),
            "sigma1": complex_json(alg, &s.sigma1),
        }));
    }
    Ok(json!({ "count": items.len(), "items": items }))
}

fn record_json(c: &Census, k: usize, r: &LocalisationRecord) -> Value {
    let alg = c.algebra();
    json!({
        "index": k,
        "class": names(c, r.class.iter().copied()),
        "wide": names(c, r.wide.iter().copied()),
        "split_projectives": names(c, r.split_projectives.iter().copied()),
        "basic": names(c, r.basic.iter().copied()),
        "support": vertices(alg, &r.support),
        "lambda": {
            "dimension": r.lambda_dim,
            "simples": r.simple_count,
            "multiplicities": r.multiplicities,
            "labels": r.lambda_labels,
            "structure_constants": r.lambda_constants,
        },
        "kernel_dimension": r.kernel_dim,
        "sigma_b": { "p1": vertices(alg, &r.sigma_b.p1), "p0": vertices(alg, &r.sigma_b.p0) },
        "x_sigma": names(c, r.x_sigma.iter().copied()),
        "restriction_image": names(c, r.restriction_image.iter().copied()),
        "tor1": r.tor1,
        "self_orthogonal": r.self_orthogonal,
    })
}

pub fn localise_json(c: &Census) -> Result<Value> {
    let report = classify_all(c)?;
    let records: Vec<Value> = report
        .records
        .iter()
        .enumerate()
        .map(|(k, r)| record_json(c, k, r))
        .collect();
    Ok(json!({
        "count": records.len(),
        "counts": report.counts,
        "records": records,
    }))
}

/// Covering pairs `(i, j)` of the inclusion order: `i ⊂ j` with nothing
/// strictly between.
pub fn hasse_covers(classes: &[IdSet]) -> Vec<(usize, usize)> {
    let below = |i: usize, j: usize| classes[i].len() < classes[j].len() && classes[i].is_subset(&classes[j]);
    let mut out = Vec::new();
    for i in 0..classes.len() {
        for j in 0..classes.len() {
            if below(i, j) && !(0..classes.len()).any(|k| below(i, k) && below(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Longest chain, counted in edges.
fn height(classes: &[IdSet], covers: &[(usize, usize)]) -> usize {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| classes[i].len());
    let mut depth = vec![0usize; classes.len()];
    for &j in &order {
        for &(a, b) in covers {
            if b == j {
                depth[j] = depth[j].max(depth[a] + 1);
            }
        }
    }
    depth.into_iter().max().unwrap_or(0)
}

pub fn hasse_dot(c: &Census, classes: &[IdSet], covers: &[(usize, usize)]) -> String {
    let mut s = String::from("digraph torsion_classes {\n  rankdir=BT;\n");
    for (k, t) in classes.iter().enumerate() {
        let label = names(c, t.iter().copied()).join(",");
        let _ = writeln!(s, "  t{k} [label=\"{{{label}}}\"];");
    }
    for (a, b) in covers {
        let _ = writeln!(s, "  t{a} -> t{b};");
    }
    s.push_str("}\n");
    s
}

pub fn hasse_json(c: &Census) -> (Value, String) {
    let classes: Vec<IdSet> = enumerate_torsion_classes(c)
        .into_iter()
        .map(|t| t.members().clone())
        .collect();
    let covers = hasse_covers(&classes);
    let summary = json!({
        "nodes": classes.len(),
        "edges": covers,
        "height": height(&classes, &covers),
    });
    (summary, hasse_dot(c, &classes, &covers))
}
