//! Torsion classes and wide subcategories of a representation-finite
//! algebra, as sets of census ids.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use serde::Serialize;

use crate::census::Census;
use crate::error::{Error, Result};
use crate::exactlin::{span_rank, Scalar};
use crate::repmod::{
    combine, direct_sum_with_maps, end_radical, hom_basis, idempotent_part, trace_submodule,
    ModuleMap, ProjectiveSum, Representation,
};

pub type IdSet = BTreeSet<usize>;

/// The minimal left approximation `A --φ--> T0 -> T1 -> 0` of the regular
/// module, with `A` realised as `⊕_i A e_i`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub regular: ProjectiveSum,
    pub phi: ModuleMap,
    pub t0: Representation,
    /// Census id of each summand of `t0`, in summand order.
    pub t0_ids: Vec<usize>,
    /// Vertex whose projective maps into each summand of `t0`.
    pub t0_vertices: Vec<usize>,
    pub t1: Representation,
    pub t1_ids: Vec<usize>,
    pub cokernel: ModuleMap,
}

#[derive(Clone, Debug)]
pub struct TorsionClass {
    members: IdSet,
    approximation: OnceLock<Approximation>,
}

impl PartialEq for TorsionClass {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for TorsionClass {}

impl TorsionClass {
    pub fn members(&self) -> &IdSet {
        &self.members
    }

    pub fn contains(&self, id: usize) -> bool {
        self.members.contains(&id)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct WideSubcategory {
    pub members: IdSet,
}

/// Direct sum of census members with inclusions and projections; the zero
/// module for an empty list.
pub(crate) fn sum_of_members(
    c: &Census,
    ids: &[usize],
) -> (Representation, Vec<ModuleMap>, Vec<ModuleMap>) {
    if ids.is_empty() {
        return (
            Representation::zero(c.algebra().clone()),
            Vec::new(),
            Vec::new(),
        );
    }
    let parts: Vec<Representation> = ids.iter().map(|&x| c.module(x).clone()).collect();
    direct_sum_with_maps(&parts)
}

fn modules(c: &Census, s: &IdSet) -> Vec<Representation> {
    s.iter().map(|&i| c.module(i).clone()).collect()
}

/// `X ∈ gen(S)`: the trace of `S` in `X` is all of `X`.
pub fn gen_membership(c: &Census, x: usize, s: &IdSet) -> bool {
    if s.iter().all(|&w| c.hom_dim(w, x) == 0) {
        return c.module(x).is_zero();
    }
    let m = c.module(x);
    trace_submodule(&modules(c, s), m).0.total_dim() == m.total_dim()
}

/// Number of trace layers needed to exhaust `m`, if it lies in `filt(gen(W))`.
fn trace_layers(w: &[Representation], m: &Representation) -> Option<usize> {
    let mut current = m.clone();
    let mut layers = 0;
    while !current.is_zero() {
        let (trace, inc) = trace_submodule(w, &current);
        if trace.is_zero() {
            return None;
        }
        current = current.quotient(inc.blocks()).0;
        layers += 1;
    }
    Some(layers)
}

pub fn torsion_closure_membership(c: &Census, x: usize, w: &IdSet) -> bool {
    if w.contains(&x) {
        return true;
    }
    if w.iter().all(|&v| c.hom_dim(v, x) == 0) {
        return false;
    }
    trace_layers(&modules(c, w), c.module(x)).is_some()
}

/// Least `n` with `X ∈ gen(W)^{⋆n}`.
pub fn filtration_length(c: &Census, x: usize, w: &IdSet) -> Result<usize> {
    trace_layers(&modules(c, w), c.module(x)).ok_or(Error::NotMember)
}

pub fn torsion_closure(c: &Census, s: &IdSet) -> TorsionClass {
    let gens = modules(c, s);
    let members = (0..c.len())
        .filter(|&x| {
            s.contains(&x)
                || (s.iter().any(|&v| c.hom_dim(v, x) != 0)
                    && trace_layers(&gens, c.module(x)).is_some())
        })
        .collect();
    TorsionClass {
        members,
        approximation: OnceLock::new(),
    }
}

/// All torsion classes in lectic order of their member sets.
pub fn enumerate_torsion_classes(c: &Census) -> Vec<TorsionClass> {
    let n = c.len();
    let mut out = vec![torsion_closure(c, &IdSet::new())];
    loop {
        let current = out.last().expect("nonempty").members.clone();
        let mut next = None;
        let mut a = current;
        for i in (0..n).rev() {
            if a.contains(&i) {
                a.remove(&i);
                continue;
            }
            let mut b = a.clone();
            b.insert(i);
            let t = torsion_closure(c, &b);
            if t.members.difference(&a).all(|&j| j >= i) {
                next = Some(t);
                break;
            }
        }
        match next {
            Some(t) => out.push(t),
            None => return out,
        }
    }
}

/// Vectors of `e_i X` hit by radical maps `Y -> X` from members `Y`, composed
/// with all maps `A e_i -> Y`.
fn radical_images(c: &Census, members: &IdSet, x: usize, i: usize) -> Vec<Vec<Scalar>> {
    let mut out = Vec::new();
    for &y in members {
        if c.hom_dim(y, x) == 0 {
            continue;
        }
        let sources = idempotent_part(c.module(y), i).columns();
        if sources.is_empty() {
            continue;
        }
        let maps: Vec<ModuleMap> = if y == x {
            let (basis, rad) = end_radical(c.module(x));
            rad.columns()
                .iter()
                .map(|col| combine(&basis, col))
                .collect()
        } else {
            hom_basis(c.module(y), c.module(x))
        };
        for h in &maps {
            out.extend(sources.iter().map(|u| h.apply(u)));
        }
    }
    out
}

/// Generator images of a minimal left approximation of `A e_i`: per member
/// `X`, vectors of `e_i X` whose `End(X)`-orbits complement the radical
/// images, so each chosen vector is one summand `X` of `T0`.
fn top_generators(c: &Census, members: &IdSet, i: usize) -> Vec<(usize, Vec<Scalar>)> {
    let mut out = Vec::new();
    for &x in members {
        let m = c.module(x);
        let candidates = idempotent_part(m, i).columns();
        if candidates.is_empty() {
            continue;
        }
        let mut span = radical_images(c, members, x, i);
        let mut rank = span_rank(m.total_dim(), &span);
        if rank == candidates.len() {
            continue;
        }
        let end = hom_basis(m, m);
        for v in candidates {
            let mut with = span.clone();
            with.push(v.clone());
            if span_rank(m.total_dim(), &with) == rank {
                continue;
            }
            span.extend(end.iter().map(|g| g.apply(&v)));
            rank = span_rank(m.total_dim(), &span);
            out.push((x, v));
        }
    }
    out
}

fn build_approximation(c: &Census, t: &TorsionClass) -> Result<Approximation> {
    let alg = c.algebra();
    let vertex_count = alg.idempotents().len();
    let regular = ProjectiveSum::new(alg, (0..vertex_count).collect());
    let mut t0_ids = Vec::new();
    let mut t0_vertices = Vec::new();
    let mut images = Vec::new();
    for i in 0..vertex_count {
        for (x, v) in top_generators(c, &t.members, i) {
            t0_ids.push(x);
            t0_vertices.push(i);
            images.push(v);
        }
    }
    let (t0, inj, _) = sum_of_members(c, &t0_ids);
    let mut generator_images = vec![vec![Scalar::zero(); t0.total_dim()]; vertex_count];
    for (k, v) in images.iter().enumerate() {
        let placed = inj[k].apply(v);
        let g = &mut generator_images[t0_vertices[k]];
        for (o, y) in g.iter_mut().zip(placed) {
            *o = &*o + &y;
        }
    }
    let phi = regular.map_to(&t0, &generator_images);
    let (t1, cokernel) = phi.cokernel();
    let mut t1_ids = Vec::new();
    for (id, k) in c.decompose_ids(&t1)? {
        t1_ids.extend(std::iter::repeat_n(id, k));
    }
    Ok(Approximation {
        regular,
        phi,
        t0,
        t0_ids,
        t0_vertices,
        t1,
        t1_ids,
        cokernel,
    })
}

pub fn minimal_left_approximation<'t>(
    c: &Census,
    t: &'t TorsionClass,
) -> Result<&'t Approximation> {
    if let Some(ap) = t.approximation.get() {
        return Ok(ap);
    }
    let ap = build_approximation(c, t)?;
    Ok(t.approximation.get_or_init(|| ap))
}

/// Whether every map from `A` into a member factors through the summands
/// of `t0` listed in `keep`.
fn factors_through(c: &Census, t: &TorsionClass, ap: &Approximation, keep: &[usize]) -> bool {
    let images = ap.regular.generator_images(&ap.phi);
    let (_, _, proj) = sum_of_members(c, &ap.t0_ids);
    for &y in &t.members {
        let target = c.module(y);
        for (i, g) in images.iter().enumerate() {
            let need = idempotent_part(target, i).cols();
            if need == 0 {
                continue;
            }
            let mut hit = Vec::new();
            for &k in keep {
                let v = proj[k].apply(g);
                if v.iter().all(Scalar::is_zero) {
                    continue;
                }
                for h in hom_basis(c.module(ap.t0_ids[k]), target) {
                    hit.push(h.apply(&v));
                }
            }
            if span_rank(target.total_dim(), &hit) < need {
                return false;
            }
        }
    }
    true
}

/// `Hom(φ, X)` is surjective for every member `X`.
pub fn is_left_approximation(c: &Census, t: &TorsionClass, ap: &Approximation) -> bool {
    let all: Vec<usize> = (0..ap.t0_ids.len()).collect();
    factors_through(c, t, ap, &all)
}

/// No single summand of `T0` can be dropped from an approximation.
pub fn is_left_minimal(c: &Census, t: &TorsionClass, ap: &Approximation) -> bool {
    (0..ap.t0_ids.len()).all(|drop| {
        let keep: Vec<usize> = (0..ap.t0_ids.len()).filter(|&k| k != drop).collect();
        !factors_through(c, t, ap, &keep)
    })
}

pub fn split_projectives(c: &Census, t: &TorsionClass) -> Result<IdSet> {
    Ok(minimal_left_approximation(c, t)?
        .t0_ids
        .iter()
        .copied()
        .collect())
}

pub fn ext_projectives(c: &Census, t: &TorsionClass) -> Result<IdSet> {
    let ap = minimal_left_approximation(c, t)?;
    Ok(ap.t0_ids.iter().chain(&ap.t1_ids).copied().collect())
}

/// `T ∩ T1°`.
pub fn alpha(c: &Census, t: &TorsionClass) -> Result<WideSubcategory> {
    let ap = minimal_left_approximation(c, t)?;
    let members = t
        .members
        .iter()
        .copied()
        .filter(|&x| ap.t1_ids.iter().all(|&y| c.hom_dim(y, x) == 0))
        .collect();
    Ok(WideSubcategory { members })
}

pub fn wide_to_torsion(c: &Census, w: &WideSubcategory) -> Result<TorsionClass> {
    let t = torsion_closure(c, &w.members);
    if alpha(c, &t)? != *w {
        return Err(Error::RoundtripFailure);
    }
    Ok(t)
}

/// `α` of every torsion class, in the order of [`enumerate_torsion_classes`].
pub fn enumerate_wide_subcategories(c: &Census) -> Result<Vec<WideSubcategory>> {
    enumerate_torsion_classes(c)
        .iter()
        .map(|t| alpha(c, t))
        .collect()
}
