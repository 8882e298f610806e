//! Ring epimorphisms `A -> Λ` attached to torsion classes, realised through
//! the reflection of the regular module, and the classification report
//! tying torsion classes, support τ-tilting pairs, wide subcategories, ring
//! epimorphisms and universal localisations together.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{regular_multiplicities, zero_algebra, Algebra};
use crate::census::Census;
use crate::error::{Error, Result};
use crate::exactlin::{span_rank, Matrix, Scalar};
use crate::repmod::{
    direct_sum_with_maps, endomorphism_algebra, hom_basis, minimal_presentation,
    trace_submodule, ModuleMap, Representation,
};
use crate::silting::{sigma1_from_approximation, silting_from_torsion_class, TwoTermComplex};
use crate::torsion::{
    alpha, enumerate_torsion_classes, minimal_left_approximation, split_projectives, IdSet,
    TorsionClass,
};

#[derive(Clone, Debug)]
pub struct RingEpimorphismData {
    pub class: IdSet,
    pub algebra: Arc<Algebra>,
    /// `End^op(G)`, the codomain of `ring_map`.
    pub lambda: Arc<Algebra>,
    /// `dim Λ × dim A`, columns are images of basis elements.
    pub ring_map: Matrix,
    pub kernel: Vec<Vec<Scalar>>,
    pub sigma_b: TwoTermComplex,
    pub reflection: Representation,
    pub unit: ModuleMap,
}

fn end_op(m: &Representation) -> Result<(Algebra, Vec<ModuleMap>)> {
    if m.is_zero() {
        return Ok((zero_algebra("End^op", m.algebra().field()), Vec::new()));
    }
    endomorphism_algebra(m, true)
}

/// `G = T0 / tr_{T1}(T0)` and `η : A -> T0 -> G`.
pub fn reflection_of_regular(
    c: &Census,
    t: &TorsionClass,
) -> Result<(Representation, ModuleMap)> {
    let ap = minimal_left_approximation(c, t)?;
    let t1: BTreeSet<usize> = ap.t1_ids.iter().copied().collect();
    let w: Vec<Representation> = t1.iter().map(|&x| c.module(x).clone()).collect();
    let (_, inc) = trace_submodule(&w, &ap.t0);
    let (g, q) = ap.t0.quotient(inc.blocks());
    let eta = q.after(&ap.phi);
    Ok((g, eta))
}

fn fingerprint(alg: &Arc<Algebra>) -> Result<(usize, Vec<usize>)> {
    Ok((alg.dim(), regular_multiplicities(alg)?))
}

/// `End^op(T0 ⊕ T1) / <e_T1>`, checked against `End^op(G)`.
pub fn localised_ring(c: &Census, t: &TorsionClass) -> Result<Arc<Algebra>> {
    let ap = minimal_left_approximation(c, t)?;
    let field = c.algebra().field();
    let quotient = Arc::new(if ap.t0.is_zero() {
        zero_algebra("End^op/I", field)
    } else {
        let (m, inj, proj) = direct_sum_with_maps(&[ap.t0.clone(), ap.t1.clone()]);
        let (e, basis) = endomorphism_algebra(&m, true)?;
        let flat: Vec<Vec<Scalar>> = basis.iter().map(ModuleMap::flatten).collect();
        let idempotent = inj[1].after(&proj[1]).flatten();
        let coords = Matrix::from_columns(idempotent.len(), &flat)
            .solve(&idempotent)
            .ok_or_else(|| Error::CrossCheckFailure("e_T1 is not an endomorphism".into()))?;
        e.quotient_by_ideal(&[coords])?.0
    });
    let (g, _) = reflection_of_regular(c, t)?;
    let (reflected, _) = end_op(&g)?;
    let (dq, mq) = fingerprint(&quotient)?;
    let (dg, mg) = fingerprint(&Arc::new(reflected))?;
    if dq != dg || mq != mg {
        return Err(Error::CrossCheckFailure(format!(
            "End^op quotient has dimension {dq} and multiplicities {mq:?}, End^op(G) has {dg} and {mg:?}"
        )));
    }
    Ok(quotient)
}

/// `η ∘ ρ_b` for right multiplication `ρ_b` by the basis element `b`.
fn eta_after_right_multiplication(
    c: &Census,
    t: &TorsionClass,
    eta: &ModuleMap,
    b: usize,
) -> Result<ModuleMap> {
    let alg = c.algebra();
    let regular = &minimal_left_approximation(c, t)?.regular;
    let es = alg.idempotents();
    let x = alg.basis_element(b);
    let images: Vec<Vec<Scalar>> = regular
        .vertices()
        .iter()
        .map(|&i| {
            let left = alg.multiply(&es[i], &x);
            let mut v = vec![Scalar::zero(); regular.rep().total_dim()];
            for (k, &j) in regular.vertices().iter().enumerate() {
                let part = alg.multiply(&left, &es[j]);
                if part.iter().all(Scalar::is_zero) {
                    continue;
                }
                for (o, y) in v.iter_mut().zip(regular.vector_of(k, &part)) {
                    *o = &*o + &y;
                }
            }
            eta.apply(&v)
        })
        .collect();
    Ok(regular.map_to(&eta.target, &images))
}

struct Reflected {
    lambda: Arc<Algebra>,
    g: Representation,
    eta: ModuleMap,
    f: Matrix,
    kernel: Vec<Vec<Scalar>>,
}

fn reflect(c: &Census, t: &TorsionClass) -> Result<Reflected> {
    let alg = c.algebra();
    let n = alg.dim();
    let (g, eta) = reflection_of_regular(c, t)?;
    let (lambda, basis) = end_op(&g)?;
    let lambda = Arc::new(lambda);
    let f = if g.is_zero() {
        Matrix::zeros(0, n)
    } else {
        let len = eta.flatten().len();
        let composites: Vec<Vec<Scalar>> = basis.iter().map(|r| r.after(&eta).flatten()).collect();
        let system = Matrix::from_columns(len, &composites);
        if system.rank() != basis.len() {
            return Err(Error::ReflectionNotUnique(
                "two endomorphisms of G agree after η".into(),
            ));
        }
        let mut cols = Vec::with_capacity(n);
        for b in 0..n {
            let target = eta_after_right_multiplication(c, t, &eta, b)?.flatten();
            cols.push(system.solve(&target).ok_or_else(|| {
                Error::ReflectionNotUnique(format!(
                    "right multiplication by {} does not factor through η",
                    alg.labels()[b]
                ))
            })?);
        }
        Matrix::from_columns(lambda.dim(), &cols)
    };
    if f.apply(alg.unit()) != lambda.unit() {
        return Err(Error::CrossCheckFailure("ring map is not unital".into()));
    }
    let images: Vec<Vec<Scalar>> = f.columns();
    for i in 0..n {
        for j in 0..n {
            let prod = f.apply(&alg.multiply(&alg.basis_element(i), &alg.basis_element(j)));
            if prod != lambda.multiply(&images[i], &images[j]) {
                return Err(Error::CrossCheckFailure(format!(
                    "ring map is not multiplicative at ({}, {})",
                    alg.labels()[i],
                    alg.labels()[j]
                )));
            }
        }
    }
    let kernel = f.kernel_basis();
    if !alg.is_two_sided_ideal(&kernel) {
        return Err(Error::CrossCheckFailure(
            "kernel of the ring map is not an ideal".into(),
        ));
    }
    Ok(Reflected {
        lambda,
        g,
        eta,
        f,
        kernel: kernel.columns(),
    })
}

/// `f : A -> End^op(G)` with `f(a) ∘ η = η ∘ ρ_a`, and a basis of its kernel.
pub fn ring_map(c: &Census, t: &TorsionClass) -> Result<(Matrix, Vec<Vec<Scalar>>)> {
    let r = reflect(c, t)?;
    Ok((r.f, r.kernel))
}

fn assemble(
    c: &Census,
    t: &TorsionClass,
    sigma_b: TwoTermComplex,
) -> Result<RingEpimorphismData> {
    localised_ring(c, t)?;
    let r = reflect(c, t)?;
    Ok(RingEpimorphismData {
        class: t.members().clone(),
        algebra: c.algebra().clone(),
        lambda: r.lambda,
        ring_map: r.f,
        kernel: r.kernel,
        sigma_b,
        reflection: r.g,
        unit: r.eta,
    })
}

pub fn ring_epimorphism(c: &Census, t: &TorsionClass) -> Result<RingEpimorphismData> {
    assemble(c, t, sigma1_from_approximation(c, t)?)
}

/// `Hom(P1, P0)` is spanned by `t ∘ σ + σ ∘ s`, so `σ` has no
/// non-null-homotopic maps to its shift.
pub fn self_orthogonality(sigma: &TwoTermComplex) -> bool {
    let (p1, p0, s) = sigma.map().realise(sigma.algebra());
    if p1.rep().is_zero() || p0.rep().is_zero() {
        return true;
    }
    let all = hom_basis(p1.rep(), p0.rep());
    if all.is_empty() {
        return true;
    }
    let len = all[0].flatten().len();
    let mut span: Vec<Vec<Scalar>> = hom_basis(p0.rep(), p0.rep())
        .iter()
        .map(|t| t.after(&s).flatten())
        .collect();
    span.extend(
        hom_basis(p1.rep(), p1.rep())
            .iter()
            .map(|u| s.after(u).flatten()),
    );
    span_rank(len, &span) == all.len()
}

/// `Hom(σ, X)` is bijective.
pub fn x_sigma_membership(sigma: &TwoTermComplex, x: &Representation) -> bool {
    sigma.map().hom_bijective(x)
}

/// Basis elements of `A` generating it as an algebra.
fn generators(a: &Algebra) -> Vec<usize> {
    match a.quiver() {
        Some(q) => q.vertex_basis.iter().chain(&q.arrow_basis).copied().collect(),
        None => (0..a.dim()).collect(),
    }
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = a.get(i, j);
            if !x.is_zero() {
                out.set_block(i * b.rows(), j * b.cols(), &b.scale(x));
            }
        }
    }
    out
}

/// Columns spanning the relations `m a ⊗ x - m ⊗ a x` in `M ⊗_K X`, for the
/// right action matrices of `M` indexed by basis elements of `A`.
fn tensor_relations(a: &Algebra, right: &[Matrix], x: &Representation) -> Matrix {
    let m = right.first().map_or(0, Matrix::rows);
    let d = x.total_dim();
    let id_m = Matrix::identity(m);
    let id_x = Matrix::identity(d);
    let blocks: Vec<Matrix> = generators(a)
        .into_iter()
        .map(|k| {
            let left = x.action_matrix(&a.basis_element(k));
            kron(&right[k], &id_x).sub(&kron(&id_m, &left))
        })
        .collect();
    if blocks.is_empty() {
        return Matrix::zeros(m * d, 0);
    }
    Matrix::hstack(&blocks.iter().collect::<Vec<_>>())
}

fn right_actions(a: &Algebra, lambda: &Algebra, f: &Matrix) -> Vec<Matrix> {
    (0..a.dim())
        .map(|b| lambda.right_multiplication(&f.column(b)))
        .collect()
}

/// `dim Tor_1^A(Λ, Λ)` for an algebra map `f : A -> Λ`.
pub fn tor1_of(a: &Arc<Algebra>, lambda: &Arc<Algebra>, f: &Matrix) -> Result<usize> {
    let m = lambda.dim();
    if m == 0 {
        return Ok(0);
    }
    let left: Vec<Matrix> = (0..a.dim())
        .map(|b| lambda.left_multiplication(&f.column(b)))
        .collect();
    let (module, _) = Representation::from_action(a.clone(), m, &left)?;
    let p = minimal_presentation(&module)?;
    if p.syzygy.is_zero() {
        return Ok(0);
    }
    let right = right_actions(a, lambda, f);
    let r_syzygy = tensor_relations(a, &right, &p.syzygy);
    let r_cover = tensor_relations(a, &right, p.p0.rep());
    let induced = kron(&Matrix::identity(m), &p.syzygy_inclusion.total_matrix());
    let n = m * p.syzygy.total_dim();
    let joint = Matrix::hstack(&[&induced, &r_cover]).rank();
    Ok(n + r_cover.rank() - joint - r_syzygy.rank())
}

pub fn tor1(data: &RingEpimorphismData) -> Result<usize> {
    tor1_of(&data.algebra, &data.lambda, &data.ring_map)
}

/// `X` lies in the essential image of restriction along the ring map:
/// `X -> Λ ⊗_A X` is bijective.
pub fn restriction_membership(data: &RingEpimorphismData, x: &Representation) -> Result<bool> {
    let m = data.lambda.dim();
    let d = x.total_dim();
    if m == 0 || d == 0 {
        return Ok(d == 0);
    }
    let right = right_actions(&data.algebra, &data.lambda, &data.ring_map);
    let relations = tensor_relations(&data.algebra, &right, x);
    let rank = relations.rank();
    if m * d - rank != d {
        return Ok(false);
    }
    let unit = kron(
        &Matrix::column_vector(data.lambda.unit().to_vec()),
        &Matrix::identity(d),
    );
    Ok(Matrix::hstack(&[&unit, &relations]).rank() - rank == d)
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaSummary {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalisationRecord {
    pub class: Vec<usize>,
    pub wide: Vec<usize>,
    pub split_projectives: Vec<usize>,
    pub basic: Vec<usize>,
    pub support: Vec<usize>,
    pub lambda_dim: usize,
    pub simple_count: usize,
    pub multiplicities: Vec<usize>,
    pub kernel_dim: usize,
    pub sigma_b: SigmaSummary,
    pub x_sigma: Vec<usize>,
    pub restriction_image: Vec<usize>,
    pub tor1: usize,
    pub self_orthogonal: bool,
    pub lambda_labels: Vec<String>,
    pub lambda_constants: Vec<Vec<Vec<String>>>,
}

/// Sizes of the five sets in bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiveCounts {
    pub support_tau_tilting: usize,
    pub torsion_classes: usize,
    pub wide_subcategories: usize,
    pub ring_epimorphisms: usize,
    pub universal_localisations: usize,
}

impl FiveCounts {
    pub fn all_equal(&self) -> bool {
        let v = [
            self.support_tau_tilting,
            self.torsion_classes,
            self.wide_subcategories,
            self.ring_epimorphisms,
            self.universal_localisations,
        ];
        v.iter().all(|&x| x == v[0])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalisationReport {
    pub records: Vec<LocalisationRecord>,
    pub counts: FiveCounts,
}

fn in_class(e: Error, class: &IdSet) -> Error {
    let tag = |s: String| format!("class {class:?}: {s}");
    match e {
        Error::SiltingCheckFailure(s) => Error::SiltingCheckFailure(tag(s)),
        Error::ConeCheckFailure(s) => Error::ConeCheckFailure(tag(s)),
        Error::CrossCheckFailure(s) => Error::CrossCheckFailure(tag(s)),
        Error::ReflectionNotUnique(s) => Error::ReflectionNotUnique(tag(s)),
        other => other,
    }
}

fn record(c: &Census, t: &TorsionClass) -> Result<LocalisationRecord> {
    let wide = alpha(c, t)?;
    let silting = silting_from_torsion_class(c, t)?;
    let data = assemble(c, t, silting.sigma1.clone())?;
    let x_sigma: Vec<usize> = (0..c.len())
        .filter(|&x| x_sigma_membership(&data.sigma_b, c.module(x)))
        .collect();
    let mut restriction_image = Vec::new();
    for x in 0..c.len() {
        if restriction_membership(&data, c.module(x))? {
            restriction_image.push(x);
        }
    }
    let multiplicities = regular_multiplicities(&data.lambda)?;
    Ok(LocalisationRecord {
        class: t.members().iter().copied().collect(),
        wide: wide.members.into_iter().collect(),
        split_projectives: split_projectives(c, t)?.into_iter().collect(),
        basic: silting.basic,
        support: silting.support,
        lambda_dim: data.lambda.dim(),
        simple_count: multiplicities.len(),
        multiplicities,
        kernel_dim: data.kernel.len(),
        sigma_b: SigmaSummary {
            p1: data.sigma_b.p1().to_vec(),
            p0: data.sigma_b.p0().to_vec(),
        },
        x_sigma,
        restriction_image,
        tor1: tor1(&data)?,
        self_orthogonal: self_orthogonality(&data.sigma_b),
        lambda_labels: data.lambda.labels().to_vec(),
        lambda_constants: data
            .lambda
            .structure_constants()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|x| x.to_string()).collect())
                    .collect()
            })
            .collect(),
    })
}

/// Every torsion class with its wide subcategory, silting data and
/// localisation, and the sizes of the five corresponding sets. Ring
/// epimorphisms and universal localisations are compared through the census
/// members of their module categories.
pub fn classify_all(c: &Census) -> Result<LocalisationReport> {
    let classes = enumerate_torsion_classes(c);
    let mut records = Vec::with_capacity(classes.len());
    for t in &classes {
        records.push(record(c, t).map_err(|e| in_class(e, t.members()))?);
    }
    let distinct = |key: &dyn Fn(&LocalisationRecord) -> Vec<Vec<usize>>| {
        records.iter().map(key).collect::<BTreeSet<_>>().len()
    };
    let counts = FiveCounts {
        support_tau_tilting: distinct(&|r| vec![r.basic.clone(), r.support.clone()]),
        torsion_classes: distinct(&|r| vec![r.class.clone()]),
        wide_subcategories: distinct(&|r| vec![r.wide.clone()]),
        ring_epimorphisms: distinct(&|r| vec![r.restriction_image.clone()]),
        universal_localisations: distinct(&|r| vec![r.x_sigma.clone()]),
    };
    if !counts.all_equal() {
        return Err(Error::CrossCheckFailure(format!(
            "the five counts differ: {counts:?}"
        )));
    }
    Ok(LocalisationReport { records, counts })
}
