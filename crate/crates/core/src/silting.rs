//! Support τ-tilting data of a torsion class: the basic Ext-projective
//! module, its support idempotent, and the two-term presentations `σ'` and
//! `σ1` whose `D`-classes recover the torsion class.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::census::Census;
use crate::error::{Error, Result};
use crate::exactlin::Scalar;
use crate::repmod::{
    decompose, ext1, hom_dim, idempotent_part, minimal_presentation, tau, ProjectiveMap,
    ProjectiveSum, Representation,
};
use crate::torsion::{
    ext_projectives, minimal_left_approximation, sum_of_members, IdSet, TorsionClass,
};

/// `P1 -> P0` between sums of indecomposable projectives, with its cokernel.
#[derive(Clone, Debug)]
pub struct TwoTermComplex {
    algebra: Arc<Algebra>,
    map: ProjectiveMap,
    cokernel: Representation,
}

impl TwoTermComplex {
    pub fn new(algebra: &Arc<Algebra>, map: ProjectiveMap) -> Self {
        let (_, _, f) = map.realise(algebra);
        TwoTermComplex {
            algebra: algebra.clone(),
            cokernel: f.cokernel().0,
            map,
        }
    }

    /// `A e -> 0` for the idempotent `e` summing the given vertices.
    pub fn trivial(algebra: &Arc<Algebra>, vertices: &[usize]) -> Self {
        Self::new(
            algebra,
            ProjectiveMap {
                source: vertices.to_vec(),
                target: Vec::new(),
                entries: vec![Vec::new(); vertices.len()],
            },
        )
    }

    /// The minimal projective presentation of `m`.
    pub fn presentation_of(m: &Representation) -> Result<Self> {
        let map = if m.is_zero() {
            ProjectiveMap {
                source: Vec::new(),
                target: Vec::new(),
                entries: Vec::new(),
            }
        } else {
            minimal_presentation(m)?.projective_map()
        };
        Ok(Self::new(m.algebra(), map))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn map(&self) -> &ProjectiveMap {
        &self.map
    }

    pub fn p1(&self) -> &[usize] {
        &self.map.source
    }

    pub fn p0(&self) -> &[usize] {
        &self.map.target
    }

    pub fn cokernel(&self) -> &Representation {
        &self.cokernel
    }

    pub fn direct_sum(&self, other: &TwoTermComplex) -> Self {
        Self::new(
            &self.algebra,
            self.map.direct_sum(&other.map, self.algebra.dim()),
        )
    }

    /// The same complex with every summand `P --1--> P` split off.
    pub fn reduced(&self) -> Self {
        let alg = &self.algebra;
        let mut m = self.map.clone();
        while let Some((l, k, inv)) = invertible_entry(alg, &m) {
            let rows: Vec<usize> = (0..m.source.len()).filter(|&r| r != l).collect();
            let cols: Vec<usize> = (0..m.target.len()).filter(|&c| c != k).collect();
            let entries = rows
                .iter()
                .map(|&r| {
                    let left = alg.multiply(&m.entries[r][k], &inv);
                    cols.iter()
                        .map(|&c| {
                            let correction = alg.multiply(&left, &m.entries[l][c]);
                            m.entries[r][c]
                                .iter()
                                .zip(&correction)
                                .map(|(a, b)| a - b)
                                .collect()
                        })
                        .collect()
                })
                .collect();
            m = ProjectiveMap {
                source: rows.iter().map(|&r| m.source[r]).collect(),
                target: cols.iter().map(|&c| m.target[c]).collect(),
                entries,
            };
        }
        Self::new(alg, m)
    }
}

/// An entry `u ∈ e_i A e_i` with nonzero `e_i`-coefficient, and its inverse.
fn invertible_entry(alg: &Algebra, m: &ProjectiveMap) -> Option<(usize, usize, Vec<Scalar>)> {
    let q = alg.quiver()?;
    for (l, &j) in m.source.iter().enumerate() {
        for (k, &i) in m.target.iter().enumerate() {
            if i != j {
                continue;
            }
            let u = &m.entries[l][k];
            let c = &u[q.vertex_basis[i]];
            if c.is_zero() {
                continue;
            }
            return Some((l, k, local_inverse(alg, u, q.vertex_basis[i], c)));
        }
    }
    None
}

/// `(c e + n)^{-1} = c^{-1} Σ (-n/c)^m` for nilpotent `n`.
fn local_inverse(alg: &Algebra, u: &[Scalar], e: usize, c: &Scalar) -> Vec<Scalar> {
    let c_inv = c.inverse().expect("nonzero coefficient");
    let mut step: Vec<Scalar> = u.iter().map(|x| -(x * &c_inv)).collect();
    step[e] = Scalar::zero();
    let mut power = alg.basis_element(e);
    let mut sum = vec![Scalar::zero(); alg.dim()];
    while power.iter().any(|x| !x.is_zero()) {
        for (s, p) in sum.iter_mut().zip(&power) {
            *s = &*s + p;
        }
        power = alg.multiply(&power, &step);
    }
    sum.iter().map(|x| x * &c_inv).collect()
}

/// `X ∈ D_σ`: `Hom(σ, X)` is surjective.
pub fn d_sigma_membership(sigma: &TwoTermComplex, x: &Representation) -> bool {
    sigma.map.hom_surjective(x)
}

#[derive(Clone, Debug)]
pub struct SiltingData {
    pub class: IdSet,
    /// One census id per isomorphism class of summands of `T0 ⊕ T1`.
    pub basic: Vec<usize>,
    /// Vertices `i` with `Hom(A e_i, X) = 0` for every member `X`.
    pub support: Vec<usize>,
    pub sigma_prime: TwoTermComplex,
    pub sigma1: TwoTermComplex,
}

fn support_vertices(c: &Census, t: &TorsionClass) -> Vec<usize> {
    (0..c.algebra().idempotents().len())
        .filter(|&i| {
            t.members()
                .iter()
                .all(|&x| idempotent_part(c.module(x), i).cols() == 0)
        })
        .collect()
}

pub fn silting_from_torsion_class(c: &Census, t: &TorsionClass) -> Result<SiltingData> {
    let basic: Vec<usize> = ext_projectives(c, t)?.into_iter().collect();
    let support = support_vertices(c, t);
    let module = sum_of_members(c, &basic).0;
    let sigma_prime = TwoTermComplex::presentation_of(&module)?
        .direct_sum(&TwoTermComplex::trivial(c.algebra(), &support));
    for x in 0..c.len() {
        if d_sigma_membership(&sigma_prime, c.module(x)) != t.contains(x) {
            return Err(Error::SiltingCheckFailure(format!(
                "D-class disagrees with the torsion class at {}",
                c.label(x)
            )));
        }
    }
    let sigma1 = sigma1_from_approximation(c, t)?;
    Ok(SiltingData {
        class: t.members().clone(),
        basic,
        support,
        sigma_prime,
        sigma1,
    })
}

pub fn is_tau_rigid(m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    Ok(hom_dim(m, &tau(m)?) == 0)
}

/// `(M, P)` with `P = ⊕_{i ∈ support} A e_i`: `M` is τ-rigid, `Hom(P, M) = 0`
/// and the basic summands of `M` and `P` together number the vertices.
pub fn is_support_tau_tilting_pair(m: &Representation, support: &[usize]) -> Result<bool> {
    let vertices = m.algebra().idempotents().len();
    if support.iter().any(|&i| idempotent_part(m, i).cols() != 0) {
        return Ok(false);
    }
    let summands = decompose(m)?.len();
    Ok(summands + support.len() == vertices && is_tau_rigid(m)?)
}

pub fn is_support_tau_tilting(c: &Census, data: &SiltingData) -> Result<bool> {
    is_support_tau_tilting_pair(&sum_of_members(c, &data.basic).0, &data.support)
}

/// Projective dimension at most one, no self-extensions, and as many basic
/// summands as vertices.
pub fn is_tilting(m: &Representation) -> Result<bool> {
    if decompose(m)?.len() != m.algebra().idempotents().len() {
        return Ok(false);
    }
    if !minimal_presentation(m)?.sigma.is_injective() {
        return Ok(false);
    }
    Ok(ext1(m, m)?.dim() == 0)
}

/// The cone of `A --ψ0--> Q0` glued to the minimal presentation `Q1 -> Q0`
/// of `T0`, where `ψ0` lifts the approximation, plus `A e -> 0` for the
/// support idempotent. Identity summands are split off.
pub fn sigma1_from_approximation(c: &Census, t: &TorsionClass) -> Result<TwoTermComplex> {
    let alg = c.algebra();
    let ap = minimal_left_approximation(c, t)?;
    let regular = &ap.regular;
    let (q0, rows, source) = if ap.t0.is_zero() {
        (
            ProjectiveSum::new(alg, Vec::new()),
            vec![Vec::new(); regular.vertices().len()],
            regular.vertices().to_vec(),
        )
    } else {
        let p = minimal_presentation(&ap.t0)?;
        let sigma = p.projective_map();
        let psi = regular
            .lift(&p.cover, &ap.phi)
            .ok_or_else(|| Error::ConeCheckFailure("approximation does not lift".into()))?;
        let mut rows = sigma.entries;
        rows.extend(ProjectiveMap::from_module_map(regular, &p.p0, &psi).entries);
        let mut source = sigma.source;
        source.extend(regular.vertices());
        (p.p0, rows, source)
    };
    let cone = TwoTermComplex::new(
        alg,
        ProjectiveMap {
            source,
            target: q0.vertices().to_vec(),
            entries: rows,
        },
    );
    let sigma1 = cone
        .direct_sum(&TwoTermComplex::trivial(alg, &support_vertices(c, t)))
        .reduced();
    let mut t1: Vec<(usize, usize)> = Vec::new();
    for &id in &ap.t1_ids {
        match t1.iter_mut().find(|(i, _)| *i == id) {
            Some(e) => e.1 += 1,
            None => t1.push((id, 1)),
        }
    }
    t1.sort();
    if c.decompose_ids(sigma1.cokernel())? != t1 {
        return Err(Error::ConeCheckFailure("cokernel differs from T1".into()));
    }
    for x in 0..c.len() {
        if d_sigma_membership(&sigma1, c.module(x)) != t.contains(x) {
            return Err(Error::ConeCheckFailure(format!(
                "D-class disagrees with the torsion class at {}",
                c.label(x)
            )));
        }
    }
    Ok(sigma1)
}
