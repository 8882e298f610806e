//! Indecomposable modules of a representation-finite algebra by
//! Auslander–Reiten knitting.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{CapKind, Error, Result};
use crate::repmod::{
    almost_split_sequence, almost_split_sequence_with, decompose, end_top_dim, hom_dim,
    indecomposable_isomorphism, injective_modules, projective_modules, radical_submodule,
    simple_modules, socle_submodule, tau, tau_minus, ARSequence, Representation,
};

pub const DEFAULT_DIM_CAP: usize = 60;
pub const DEFAULT_COUNT_CAP: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub dim_cap: usize,
    pub count_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            dim_cap: DEFAULT_DIM_CAP,
            count_cap: DEFAULT_COUNT_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CapHit {
    pub kind: CapKind,
    pub limit: usize,
    pub found: usize,
}

#[derive(Clone, Debug)]
pub struct CensusItem {
    pub id: usize,
    pub label: String,
    pub module: Representation,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
}

#[derive(Clone, Debug)]
pub struct Census {
    algebra: Arc<Algebra>,
    items: Vec<CensusItem>,
    caps: Caps,
    hom: OnceLock<Vec<Vec<usize>>>,
}

/// Result of a bounded knitting run: whatever was found below the caps.
#[derive(Clone, Debug)]
pub struct Knitting {
    pub items: Vec<CensusItem>,
    pub cap_hit: Option<CapHit>,
}

/// A summand of a middle term: its module, registry slot when registered,
/// and multiplicity.
#[derive(Clone)]
struct Neighbour {
    module: Representation,
    id: Option<usize>,
    mult: usize,
}

struct Node {
    module: Representation,
    projective: Option<usize>,
    injective: Option<usize>,
    tau: Option<usize>,
    tau_minus: Option<usize>,
    /// Middle term of the almost split sequence ending here (the radical for
    /// projectives), once processed.
    preds: Option<Vec<Neighbour>>,
}

struct Registry {
    nodes: Vec<Node>,
    projectives: Vec<Representation>,
    injectives: Vec<Representation>,
    queue: BinaryHeap<Reverse<(usize, usize)>>,
    caps: Caps,
    cap_hit: Option<CapHit>,
}

fn position_among(m: &Representation, list: &[Representation]) -> Option<usize> {
    list.iter()
        .position(|p| p.dims() == m.dims() && indecomposable_isomorphism(p, m).is_some())
}

impl Registry {
    fn note_cap(&mut self, kind: CapKind, limit: usize, found: usize) {
        if self.cap_hit.is_none() {
            self.cap_hit = Some(CapHit { kind, limit, found });
        }
    }

    fn lookup(&self, m: &Representation) -> Option<usize> {
        self.nodes.iter().position(|x| {
            x.module.dims() == m.dims() && indecomposable_isomorphism(&x.module, m).is_some()
        })
    }

    /// Registry slot of `m`, adding it when new and below the caps.
    fn insert(&mut self, m: Representation) -> Option<usize> {
        if m.is_zero() {
            return None;
        }
        if let Some(i) = self.lookup(&m) {
            return Some(i);
        }
        if m.total_dim() > self.caps.dim_cap {
            let d = m.total_dim();
            self.note_cap(CapKind::TotalDimension, self.caps.dim_cap, d);
            return None;
        }
        if self.nodes.len() >= self.caps.count_cap {
            let n = self.nodes.len() + 1;
            self.note_cap(CapKind::ItemCount, self.caps.count_cap, n);
            return None;
        }
        let id = self.nodes.len();
        self.queue.push(Reverse((m.total_dim(), id)));
        self.nodes.push(Node {
            projective: position_among(&m, &self.projectives),
            injective: position_among(&m, &self.injectives),
            module: m,
            tau: None,
            tau_minus: None,
            preds: None,
        });
        Some(id)
    }

    fn link(&mut self, z: Option<usize>, x: Option<usize>) {
        if let (Some(z), Some(x)) = (z, x) {
            self.nodes[z].tau_minus = Some(x);
            self.nodes[x].tau = Some(z);
        }
    }

    fn neighbour(&mut self, module: Representation, mult: usize) -> Neighbour {
        let id = self.insert(module.clone());
        Neighbour { module, id, mult }
    }

    fn neighbours(&mut self, summands: &[(Representation, usize)]) -> Vec<Neighbour> {
        summands
            .iter()
            .map(|(m, k)| self.neighbour(m.clone(), *k))
            .collect()
    }

    fn is_injective(&self, n: &Neighbour) -> bool {
        match n.id {
            Some(i) => self.nodes[i].injective.is_some(),
            None => position_among(&n.module, &self.injectives).is_some(),
        }
    }

    fn is_projective(&self, n: &Neighbour) -> bool {
        match n.id {
            Some(i) => self.nodes[i].projective.is_some(),
            None => position_among(&n.module, &self.projectives).is_some(),
        }
    }

    /// `τ⁻` (or `τ`) of a neighbour, reusing a recorded translate.
    fn translate(&mut self, n: &Neighbour, inverse: bool) -> Result<Neighbour> {
        let known = n.id.and_then(|i| {
            let node = &self.nodes[i];
            if inverse {
                node.tau_minus
            } else {
                node.tau
            }
        });
        if let Some(j) = known {
            return Ok(Neighbour {
                module: self.nodes[j].module.clone(),
                id: Some(j),
                mult: n.mult,
            });
        }
        let module = if inverse {
            tau_minus(&n.module)?
        } else {
            tau(&n.module)?
        };
        let out = self.neighbour(module, n.mult);
        if inverse {
            self.link(n.id, out.id);
        } else {
            self.link(out.id, n.id);
        }
        Ok(out)
    }
}

/// Same isomorphism class, by registry slot when both are registered.
fn same(a: &Neighbour, b: &Neighbour) -> bool {
    match (a.id, b.id) {
        (Some(i), Some(j)) => i == j,
        _ => {
            a.module.dims() == b.module.dims()
                && indecomposable_isomorphism(&a.module, &b.module).is_some()
        }
    }
}

fn multiplicity_in(m: &Neighbour, list: &[Neighbour]) -> usize {
    list.iter().find(|y| same(y, m)).map_or(0, |y| y.mult)
}

fn sum_dims(list: &[Neighbour], len: usize) -> Vec<usize> {
    let mut d = vec![0; len];
    for n in list {
        for (a, b) in d.iter_mut().zip(n.module.dims()) {
            *a += n.mult * b;
        }
    }
    d
}

/// Radicals of projectives and socle quotients of injectives.
struct Boundary {
    radicals: Vec<Vec<Neighbour>>,
    socle_quotients: Vec<Vec<Neighbour>>,
}

/// Middle term ending at `τ⁻z` from the predecessors of `z`: translates of
/// the non-injective ones, and projectives whose radical contains `z`. The
/// multiplicity of a projective picks up `dim End(z)/rad`, since projectives
/// of a quiver algebra have residue field `K`.
fn middle_from_translate(
    reg: &mut Registry,
    b: &Boundary,
    z: &Neighbour,
    z_preds: &[Neighbour],
) -> Result<Vec<Neighbour>> {
    let mut out = Vec::new();
    for w in z_preds {
        if !reg.is_injective(w) {
            out.push(reg.translate(w, true)?);
        }
    }
    let mut z_top = None;
    for (p, rad) in b.radicals.iter().enumerate() {
        let k = multiplicity_in(z, rad);
        if k > 0 {
            let t = *z_top.get_or_insert_with(|| end_top_dim(&z.module));
            out.push(reg.neighbour(reg.projectives[p].clone(), k * t));
        }
    }
    Ok(out)
}

/// Middle term ending at `x` from its successors: translates of the
/// non-projective ones, and injectives whose socle quotient contains `x`.
fn middle_from_successors(
    reg: &mut Registry,
    b: &Boundary,
    x: &Neighbour,
    x_succs: &[Neighbour],
) -> Result<Vec<Neighbour>> {
    let mut out = Vec::new();
    for y in x_succs {
        if !reg.is_projective(y) {
            out.push(reg.translate(y, false)?);
        }
    }
    let mut x_top = None;
    for (i, q) in b.socle_quotients.iter().enumerate() {
        let k = multiplicity_in(x, q);
        if k > 0 {
            let t = *x_top.get_or_insert_with(|| end_top_dim(&x.module));
            out.push(reg.neighbour(reg.injectives[i].clone(), k * t));
        }
    }
    Ok(out)
}

/// Predecessors of `x` visible from processed successors: `τY` for each
/// processed non-projective `Y` with `x` in its middle term, and injectives
/// whose socle quotient contains `x`.
fn known_predecessors(reg: &Registry, b: &Boundary, x: &Neighbour) -> Vec<Representation> {
    let mut out = Vec::new();
    for node in &reg.nodes {
        let (Some(preds), Some(t)) = (&node.preds, node.tau) else {
            continue;
        };
        if node.projective.is_none() && preds.iter().any(|n| same(n, x)) {
            out.push(reg.nodes[t].module.clone());
        }
    }
    for (i, q) in b.socle_quotients.iter().enumerate() {
        if multiplicity_in(x, q) > 0 {
            out.push(reg.injectives[i].clone());
        }
    }
    out
}

/// Middle term of the sequence ending at the non-projective `x` from
/// neighbours already known, checked against `dim x + dim τx`.
fn shortcut_middle(
    reg: &mut Registry,
    b: &Boundary,
    x: &Neighbour,
    quiver: bool,
) -> Result<Option<Vec<Neighbour>>> {
    if !quiver {
        return Ok(None);
    }
    let idx = x.id.expect("registered");
    let successors = match reg.nodes[idx].injective {
        Some(i) => Some(b.socle_quotients[i].clone()),
        None => {
            let y = reg.translate(x, true)?;
            y.id.and_then(|j| reg.nodes[j].preds.clone())
        }
    };
    let z = reg.translate(x, false)?;
    let expected: Vec<usize> = x
        .module
        .dims()
        .iter()
        .zip(z.module.dims())
        .map(|(a, c)| a + c)
        .collect();
    let z_preds = z.id.and_then(|j| reg.nodes[j].preds.clone());
    let guess = match (z_preds, &successors) {
        (Some(zp), _) => Some(middle_from_translate(reg, b, &z, &zp)?),
        (None, Some(s)) => Some(middle_from_successors(reg, b, x, s)?),
        (None, None) => None,
    };
    Ok(guess.filter(|g| sum_dims(g, expected.len()) == expected))
}

/// Knit from the indecomposable projectives and injectives. With `stop_at_cap`
/// the run ends at the first cap hit; otherwise over-cap modules are dropped
/// and knitting continues with the rest.
///
/// Middle terms of almost split sequences come from already knitted
/// neighbours when possible and are checked on dimension vectors; otherwise
/// the sequence is built and decomposed.
pub fn knit(alg: &Arc<Algebra>, caps: Caps, stop_at_cap: bool) -> Result<Knitting> {
    assert!(
        caps.dim_cap >= 1 && caps.count_cap >= 1,
        "caps must be positive"
    );
    let projectives = projective_modules(alg);
    let injectives = injective_modules(alg);
    let mut reg = Registry {
        nodes: Vec::new(),
        projectives: projectives.clone(),
        injectives: injectives.clone(),
        queue: BinaryHeap::new(),
        caps,
        cap_hit: None,
    };
    for m in projectives.iter().chain(&injectives) {
        reg.insert(m.clone());
    }
    let mut b = Boundary {
        radicals: Vec::new(),
        socle_quotients: Vec::new(),
    };
    for p in &projectives {
        let rad = decompose(&radical_submodule(p)?.0)?;
        b.radicals.push(reg.neighbours(&rad));
    }
    for i in &injectives {
        let q = decompose(&i.quotient(socle_submodule(i)?.1.blocks()).0)?;
        b.socle_quotients.push(reg.neighbours(&q));
    }
    let quiver = alg.quiver().is_some();
    let mut deferred: Vec<usize> = Vec::new();
    loop {
        let idx = match deferred.pop() {
            Some(i) => i,
            None => match reg.queue.pop() {
                Some(Reverse((_, i))) => i,
                None => break,
            },
        };
        if reg.nodes[idx].preds.is_some() {
            continue;
        }
        if stop_at_cap && reg.cap_hit.is_some() {
            break;
        }
        let x = Neighbour {
            module: reg.nodes[idx].module.clone(),
            id: Some(idx),
            mult: 1,
        };
        let middle = match reg.nodes[idx].projective {
            Some(p) => b.radicals[p].clone(),
            None => match shortcut_middle(&mut reg, &b, &x, quiver)? {
                Some(g) => g,
                None => {
                    let next = match reg.nodes[idx].injective {
                        Some(_) => None,
                        None => reg.translate(&x, true)?.id,
                    };
                    match next {
                        Some(j) if reg.nodes[j].preds.is_none() && !deferred.contains(&j) => {
                            deferred.push(idx);
                            deferred.push(j);
                            continue;
                        }
                        _ => {
                            let hints = known_predecessors(&reg, &b, &x);
                            let ar = almost_split_sequence_with(&x.module, &hints)?;
                            reg.neighbours(&ar.middle_summands)
                        }
                    }
                }
            },
        };
        reg.nodes[idx].preds = Some(middle);
    }
    let found = reg.nodes.into_iter().map(|n| n.module).collect();
    let items = label_items(alg, found, &projectives, &injectives);
    Ok(Knitting {
        items,
        cap_hit: reg.cap_hit,
    })
}

fn label_items(
    alg: &Arc<Algebra>,
    found: Vec<Representation>,
    projectives: &[Representation],
    injectives: &[Representation],
) -> Vec<CensusItem> {
    let simples = if alg.quiver().is_some() {
        simple_modules(alg)
    } else {
        Vec::new()
    };
    let names: Vec<String> = match alg.quiver() {
        Some(q) => q.quiver.vertices.clone(),
        None => (1..=projectives.len()).map(|i| i.to_string()).collect(),
    };
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by(|&a, &b| found[a].dims().cmp(found[b].dims()).then(a.cmp(&b)));
    order
        .into_iter()
        .enumerate()
        .map(|(id, i)| {
            let m = found[i].clone();
            let find = |list: &[Representation]| {
                list.iter().position(|p| {
                    p.dims() == m.dims() && indecomposable_isomorphism(p, &m).is_some()
                })
            };
            let p = find(projectives);
            let inj = find(injectives);
            let s = find(&simples);
            let label = match (p, s, inj) {
                (Some(v), _, _) => format!("P{}", names[v]),
                (None, Some(v), _) => format!("S{}", names[v]),
                (None, None, Some(v)) => format!("I{}", names[v]),
                _ => format!("M{id}"),
            };
            CensusItem {
                id,
                label,
                dims: m.dimension_vector(),
                module: m,
                projective: p.is_some(),
                injective: inj.is_some(),
            }
        })
        .collect()
}

pub fn enumerate_indecomposables(alg: &Arc<Algebra>, caps: Caps) -> Result<Census> {
    let k = knit(alg, caps, true)?;
    if let Some(hit) = k.cap_hit {
        return Err(Error::RepInfiniteAtCap {
            kind: hit.kind,
            limit: hit.limit,
            found: hit.found,
        });
    }
    Ok(Census {
        algebra: alg.clone(),
        items: k.items,
        caps,
        hom: OnceLock::new(),
    })
}

impl Census {
    /// A census from already known indecomposables (for example a cache).
    pub fn from_modules(alg: &Arc<Algebra>, modules: Vec<Representation>, caps: Caps) -> Census {
        let items = label_items(
            alg,
            modules,
            &projective_modules(alg),
            &injective_modules(alg),
        );
        Census {
            algebra: alg.clone(),
            items,
            caps,
            hom: OnceLock::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn items(&self) -> &[CensusItem] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn module(&self, id: usize) -> &Representation {
        &self.items[id].module
    }

    pub fn label(&self, id: usize) -> &str {
        &self.items[id].label
    }

    /// `dim Hom(X_i, X_j)`, computed once for all pairs.
    pub fn hom_dim(&self, i: usize, j: usize) -> usize {
        self.hom.get_or_init(|| {
            let n = self.items.len();
            (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| hom_dim(self.module(a), self.module(b)))
                        .collect()
                })
                .collect()
        })[i][j]
    }

    pub fn id_of_label(&self, label: &str) -> Option<usize> {
        self.items.iter().position(|i| i.label == label)
    }

    pub fn identify(&self, m: &Representation) -> Result<usize> {
        assert!(
            crate::repmod::same_algebra(m.algebra(), &self.algebra),
            "module over a different algebra"
        );
        self.items
            .iter()
            .find(|i| i.dims == m.dims() && indecomposable_isomorphism(&i.module, m).is_some())
            .map(|i| i.id)
            .ok_or_else(|| Error::NotInCensus(m.dimension_vector()))
    }

    /// Census ids of the indecomposable summands with multiplicities, sorted by id.
    pub fn decompose_ids(&self, m: &Representation) -> Result<Vec<(usize, usize)>> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (x, k) in decompose(m)? {
            out.push((self.identify(&x)?, k));
        }
        out.sort();
        Ok(out)
    }

    pub fn projective_ids(&self) -> Vec<usize> {
        self.items
            .iter()
            .filter(|i| i.projective)
            .map(|i| i.id)
            .collect()
    }

    pub fn injective_ids(&self) -> Vec<usize> {
        self.items
            .iter()
            .filter(|i| i.injective)
            .map(|i| i.id)
            .collect()
    }

    /// Census id of the indecomposable projective at each vertex.
    pub fn projective_at_vertices(&self) -> Result<Vec<usize>> {
        projective_modules(&self.algebra)
            .iter()
            .map(|p| self.identify(p))
            .collect()
    }

    pub fn almost_split_sequence(&self, id: usize) -> Result<ARSequence> {
        almost_split_sequence(self.module(id))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::tests::alg_a;

    #[test]
    fn alg_a_census() {
        let a = alg_a();
        let c = enumerate_indecomposables(&a, Caps::default()).unwrap();
        let labels: Vec<&str> = c.items().iter().map(|i| i.label.as_str()).collect();
        assert_eq!(labels, ["P3", "S2", "P2", "S1", "P1"]);
        assert_eq!(c.projective_ids().len(), 3);
        assert_eq!(c.injective_ids().len(), 3);
        let again = enumerate_indecomposables(&a, Caps::default()).unwrap();
        assert_eq!(
            again
                .items()
                .iter()
                .map(|i| i.dims.clone())
                .collect::<Vec<_>>(),
            c.items().iter().map(|i| i.dims.clone()).collect::<Vec<_>>()
        );
    }
}
