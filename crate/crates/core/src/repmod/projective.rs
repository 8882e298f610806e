//! Projective, injective and simple modules, radicals, covers and minimal
//! presentations.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::hom::factor_through_injection;
use super::{direct_sum_with_maps, generator_element, slot_count, ModuleMap, Representation};
use crate::algebra::{unit_vector, Algebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// Total-coordinate basis of `e_i X`.
pub fn idempotent_part(x: &Representation, i: usize) -> Matrix {
    let n = x.total_dim();
    match x.algebra().quiver() {
        Some(_) => {
            let off = x.offsets()[i];
            let d = x.dims()[i];
            let cols: Vec<Vec<Scalar>> = (0..d).map(|r| unit_vector(n, off + r)).collect();
            Matrix::from_columns(n, &cols)
        }
        None => x
            .action_matrix(&x.algebra().idempotents()[i])
            .column_space(),
    }
}

pub(crate) fn idempotent_dim(x: &Representation, i: usize) -> usize {
    match x.algebra().quiver() {
        Some(_) => x.dims()[i],
        None => idempotent_part(x, i).cols(),
    }
}

/// Coordinates of `v ∈ e_i X` in the basis [`idempotent_part`].
pub(crate) fn idempotent_coordinates(x: &Representation, i: usize, v: &[Scalar]) -> Vec<Scalar> {
    match x.algebra().quiver() {
        Some(_) => {
            let off = x.offsets()[i];
            v[off..off + x.dims()[i]].to_vec()
        }
        None => {
            let basis = idempotent_part(x, i);
            if basis.cols() == 0 {
                return Vec::new();
            }
            basis.solve(v).expect("vector lies in the idempotent part")
        }
    }
}

fn slot_of_idempotent(alg: &Algebra, i: usize) -> usize {
    if alg.quiver().is_some() {
        i
    } else {
        0
    }
}

struct ProjectivePart {
    rep: Representation,
    /// Per slot, the algebra elements forming its basis (as columns).
    elements: Vec<Matrix>,
    /// Generator `e_i` in the local coordinates of its slot.
    generator: Vec<Scalar>,
}

fn projective_part(alg: &Arc<Algebra>, i: usize) -> ProjectivePart {
    let n = alg.dim();
    let slots = slot_count(alg);
    let elements: Vec<Matrix> = match alg.quiver() {
        Some(q) => (0..slots)
            .map(|v| {
                let cols: Vec<Vec<Scalar>> = (0..n)
                    .filter(|&b| q.ends[b] == (i, v))
                    .map(|b| unit_vector(n, b))
                    .collect();
                Matrix::from_columns(n, &cols)
            })
            .collect(),
        None => vec![alg
            .right_multiplication(&alg.idempotents()[i])
            .column_space()],
    };
    let dims: Vec<usize> = elements.iter().map(Matrix::cols).collect();
    let maps = super::generator_ends(alg)
        .iter()
        .enumerate()
        .map(|(g, &(s, t))| {
            let x = generator_element(alg, g);
            let cols: Vec<Vec<Scalar>> = elements[s]
                .columns()
                .iter()
                .map(|u| {
                    elements[t]
                        .solve(&alg.multiply(&x, u))
                        .expect("projective is closed under the action")
                })
                .collect();
            Matrix::from_columns(dims[t], &cols)
        })
        .collect();
    let rep = Representation::new_unchecked(alg.clone(), dims, maps);
    let gslot = slot_of_idempotent(alg, i);
    let generator = elements[gslot]
        .solve(&alg.idempotents()[i])
        .expect("idempotent lies in its projective");
    ProjectivePart {
        rep,
        elements,
        generator,
    }
}

/// A finite direct sum `⊕ A e_{i_k}` with its algebra-element coordinates.
#[derive(Clone)]
pub struct ProjectiveSum {
    vertices: Vec<usize>,
    rep: Representation,
    /// Per total coordinate: owning summand and the algebra element.
    coords: Vec<(usize, Vec<Scalar>)>,
    /// Per summand and slot: element basis and the summand's coordinate offset.
    blocks: Vec<Vec<(Matrix, usize)>>,
    generators: Vec<Vec<Scalar>>,
}

impl std::fmt::Debug for ProjectiveSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProjectiveSum{:?}", self.vertices)
    }
}

impl ProjectiveSum {
    pub fn new(alg: &Arc<Algebra>, vertices: Vec<usize>) -> Self {
        let mut cache: BTreeMap<usize, ProjectivePart> = BTreeMap::new();
        for &v in &vertices {
            cache.entry(v).or_insert_with(|| projective_part(alg, v));
        }
        let parts: Vec<&ProjectivePart> = vertices.iter().map(|v| &cache[v]).collect();
        let slots = slot_count(alg);
        if parts.is_empty() {
            return ProjectiveSum {
                vertices,
                rep: Representation::zero(alg.clone()),
                coords: Vec::new(),
                blocks: Vec::new(),
                generators: Vec::new(),
            };
        }
        let reps: Vec<Representation> = parts.iter().map(|p| p.rep.clone()).collect();
        let (rep, _, _) = direct_sum_with_maps(&reps);
        let off = rep.offsets();
        let total = rep.total_dim();
        let mut coords = vec![(0, Vec::new()); total];
        let mut blocks = vec![Vec::with_capacity(slots); parts.len()];
        for v in 0..slots {
            let mut at = off[v];
            for (k, p) in parts.iter().enumerate() {
                for (r, col) in p.elements[v].columns().into_iter().enumerate() {
                    coords[at + r] = (k, col);
                }
                blocks[k].push((p.elements[v].clone(), at));
                at += p.elements[v].cols();
            }
        }
        let generators = vertices
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let gslot = slot_of_idempotent(alg, i);
                let mut g = vec![Scalar::zero(); total];
                let start = blocks[k][gslot].1;
                for (r, c) in parts[k].generator.iter().enumerate() {
                    g[start + r] = c.clone();
                }
                g
            })
            .collect();
        ProjectiveSum {
            vertices,
            rep,
            coords,
            blocks,
            generators,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.rep.algebra()
    }

    pub fn generator(&self, k: usize) -> &[Scalar] {
        &self.generators[k]
    }

    /// Total coordinates of `a ∈ A e_{i_k}` placed in summand `k`.
    pub fn vector_of(&self, k: usize, a: &[Scalar]) -> Vec<Scalar> {
        let alg = self.algebra();
        let mut out = vec![Scalar::zero(); self.rep.total_dim()];
        for (v, (elements, start)) in self.blocks[k].iter().enumerate() {
            if elements.cols() == 0 {
                continue;
            }
            let part = match alg.quiver() {
                Some(q) => alg.multiply(&alg.basis_element(q.vertex_basis[v]), a),
                None => a.to_vec(),
            };
            let c = elements
                .solve(&part)
                .expect("element lies in the projective");
            for (r, x) in c.into_iter().enumerate() {
                out[start + r] = x;
            }
        }
        out
    }

    /// The algebra element of each summand carried by a total vector.
    pub fn elements_of(&self, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let n = self.algebra().dim();
        let mut out = vec![vec![Scalar::zero(); n]; self.vertices.len()];
        for (x, (k, e)) in v.iter().zip(&self.coords) {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out[*k].iter_mut().zip(e) {
                if !y.is_zero() {
                    *o = &*o + &(x * y);
                }
            }
        }
        out
    }

    /// The map sending generator `k` to `images[k]`, a vector of `e_{i_k} X`.
    pub fn map_to(&self, x: &Representation, images: &[Vec<Scalar>]) -> ModuleMap {
        let cols: Vec<Vec<Scalar>> = self
            .coords
            .iter()
            .map(|(k, u)| x.act(u, &images[*k]))
            .collect();
        let m = Matrix::from_columns(x.total_dim(), &cols);
        ModuleMap::from_total(self.rep.clone(), x.clone(), &m)
    }

    pub fn generator_images(&self, f: &ModuleMap) -> Vec<Vec<Scalar>> {
        let m = f.total_matrix();
        self.generators.iter().map(|g| m.apply(g)).collect()
    }

    /// A lift `g` with `p ∘ g = f` for a surjection `p`.
    pub fn lift(&self, p: &ModuleMap, f: &ModuleMap) -> Option<ModuleMap> {
        let pm = p.total_matrix();
        let mut images = Vec::new();
        for (k, y) in self.generator_images(f).into_iter().enumerate() {
            let u = idempotent_part(&p.source, self.vertices[k]);
            let c = pm.mul(&u).solve(&y)?;
            images.push(u.apply(&c));
        }
        Some(self.map_to(&p.source, &images))
    }
}

/// A map `⊕ A e_{j_l} -> ⊕ A e_{i_k}` between projective sums, given by the
/// images of generators: entry `[l][k] ∈ e_{j_l} A e_{i_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveMap {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub entries: Vec<Vec<Vec<Scalar>>>,
}

impl ProjectiveMap {
    pub fn from_module_map(src: &ProjectiveSum, tgt: &ProjectiveSum, f: &ModuleMap) -> Self {
        let entries = src
            .generator_images(f)
            .iter()
            .map(|v| tgt.elements_of(v))
            .collect();
        ProjectiveMap {
            source: src.vertices.clone(),
            target: tgt.vertices.clone(),
            entries,
        }
    }

    pub fn realise(&self, alg: &Arc<Algebra>) -> (ProjectiveSum, ProjectiveSum, ModuleMap) {
        let src = ProjectiveSum::new(alg, self.source.clone());
        let tgt = ProjectiveSum::new(alg, self.target.clone());
        let images: Vec<Vec<Scalar>> = self
            .entries
            .iter()
            .map(|row| {
                let mut acc = vec![Scalar::zero(); tgt.rep.total_dim()];
                for (k, a) in row.iter().enumerate() {
                    for (o, y) in acc.iter_mut().zip(tgt.vector_of(k, a)) {
                        *o = &*o + &y;
                    }
                }
                acc
            })
            .collect();
        let f = src.map_to(tgt.rep(), &images);
        (src, tgt, f)
    }

    /// `Hom(σ, A)` read as a map of projectives over the opposite algebra.
    pub fn transpose(&self) -> ProjectiveMap {
        let entries = (0..self.target.len())
            .map(|k| {
                (0..self.source.len())
                    .map(|l| self.entries[l][k].clone())
                    .collect()
            })
            .collect();
        ProjectiveMap {
            source: self.target.clone(),
            target: self.source.clone(),
            entries,
        }
    }

    pub fn direct_sum(&self, other: &ProjectiveMap, dim: usize) -> ProjectiveMap {
        let zero = vec![Scalar::zero(); dim];
        let mut entries = Vec::new();
        for row in &self.entries {
            let mut r = row.clone();
            r.extend(std::iter::repeat_n(zero.clone(), other.target.len()));
            entries.push(r);
        }
        for row in &other.entries {
            let mut r: Vec<Vec<Scalar>> = std::iter::repeat_n(zero.clone(), self.target.len())
                .collect();
            r.extend(row.iter().cloned());
            entries.push(r);
        }
        let mut source = self.source.clone();
        source.extend(&other.source);
        let mut target = self.target.clone();
        target.extend(&other.target);
        ProjectiveMap {
            source,
            target,
            entries,
        }
    }

    /// Matrix of `Hom(σ, X) : Hom(P0, X) -> Hom(P1, X)` in the coordinates
    /// `Hom(A e_i, X) = e_i X`.
    pub fn hom_matrix(&self, x: &Representation) -> Matrix {
        let row_dim: usize = self.source.iter().map(|&v| idempotent_dim(x, v)).sum();
        let mut parts: BTreeMap<usize, Matrix> = BTreeMap::new();
        for &v in &self.target {
            parts.entry(v).or_insert_with(|| idempotent_part(x, v));
        }
        let mut columns = Vec::new();
        for (k, &i) in self.target.iter().enumerate() {
            for u in parts[&i].columns() {
                let mut col = Vec::with_capacity(row_dim);
                for (l, &j) in self.source.iter().enumerate() {
                    col.extend(idempotent_coordinates(
                        x,
                        j,
                        &x.act(&self.entries[l][k], &u),
                    ));
                }
                columns.push(col);
            }
        }
        Matrix::from_columns(row_dim, &columns)
    }

    pub fn hom_surjective(&self, x: &Representation) -> bool {
        let m = self.hom_matrix(x);
        m.rank() == m.rows()
    }

    pub fn hom_bijective(&self, x: &Representation) -> bool {
        let m = self.hom_matrix(x);
        m.rows() == m.cols() && m.rank() == m.rows()
    }
}

pub fn simple_module(alg: &Arc<Algebra>, v: usize) -> Representation {
    let q = alg
        .quiver()
        .expect("simple modules are indexed by vertices");
    let dims: Vec<usize> = (0..q.vertex_count()).map(|w| usize::from(w == v)).collect();
    let maps = q
        .quiver
        .arrows
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Representation::new_unchecked(alg.clone(), dims, maps)
}

pub fn simple_modules(alg: &Arc<Algebra>) -> Vec<Representation> {
    (0..slot_count(alg))
        .map(|v| simple_module(alg, v))
        .collect()
}

pub fn projective_module(alg: &Arc<Algebra>, i: usize) -> Representation {
    projective_part(alg, i).rep
}

pub fn projective_modules(alg: &Arc<Algebra>) -> Vec<Representation> {
    (0..alg.idempotents().len())
        .map(|i| projective_module(alg, i))
        .collect()
}

/// `D(e_i A)`, the dual of the opposite projective.
pub fn injective_module(alg: &Arc<Algebra>, i: usize) -> Representation {
    projective_module(&alg.opposite(), i).dual()
}

pub fn injective_modules(alg: &Arc<Algebra>) -> Vec<Representation> {
    (0..alg.idempotents().len())
        .map(|i| injective_module(alg, i))
        .collect()
}

/// `rad M = J M`.
pub fn radical_submodule(m: &Representation) -> Result<(Representation, ModuleMap)> {
    let alg = m.algebra().clone();
    let basis = match alg.quiver() {
        Some(q) => (0..q.vertex_count())
            .map(|w| {
                let ins: Vec<&Matrix> = q
                    .quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == w)
                    .map(|(i, _)| m.map(i))
                    .collect();
                if ins.is_empty() {
                    Matrix::zeros(m.dims()[w], 0)
                } else {
                    Matrix::hstack(&ins).column_space()
                }
            })
            .collect(),
        None => {
            let rad = alg.jacobson_radical()?;
            let n = m.total_dim();
            let vectors: Vec<Vec<Scalar>> = rad
                .columns()
                .iter()
                .flat_map(|j| (0..n).map(move |c| (j.clone(), c)))
                .map(|(j, c)| m.act(&j, &unit_vector(n, c)))
                .collect();
            m.graded_span(&vectors)
        }
    };
    Ok(m.submodule(basis))
}

/// `soc M`, the vectors killed by `J`.
pub fn socle_submodule(m: &Representation) -> Result<(Representation, ModuleMap)> {
    let alg = m.algebra().clone();
    let basis = match alg.quiver() {
        Some(q) => (0..q.vertex_count())
            .map(|v| {
                let outs: Vec<&Matrix> = q
                    .quiver
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == v)
                    .map(|(i, _)| m.map(i))
                    .collect();
                if outs.is_empty() {
                    Matrix::identity(m.dims()[v])
                } else {
                    Matrix::vstack(&outs).kernel_basis()
                }
            })
            .collect(),
        None => {
            let rad = alg.jacobson_radical()?;
            let mats: Vec<Matrix> = rad.columns().iter().map(|j| m.action_matrix(j)).collect();
            let n = m.total_dim();
            if mats.is_empty() {
                vec![Matrix::identity(n)]
            } else {
                let refs: Vec<&Matrix> = mats.iter().collect();
                vec![Matrix::vstack(&refs).kernel_basis()]
            }
        }
    };
    Ok(m.submodule(basis))
}

pub fn top(m: &Representation) -> Result<(Representation, ModuleMap)> {
    let (_, inc) = radical_submodule(m)?;
    Ok(m.quotient(inc.blocks()))
}

/// Projective cover `⊕ P_v^{dim top(M)_v} -> M`.
pub fn projective_cover(m: &Representation) -> Result<(ProjectiveSum, ModuleMap)> {
    let alg = m.algebra().clone();
    if alg.quiver().is_none() {
        return Err(Error::InvalidRepresentation(
            "projective covers need a quiver algebra".into(),
        ));
    }
    let (_, inc) = radical_submodule(m)?;
    let off = m.offsets();
    let n = m.total_dim();
    let mut vertices = Vec::new();
    let mut images = Vec::new();
    for (v, rad) in inc.blocks().iter().enumerate() {
        for c in rad.complement_units() {
            vertices.push(v);
            images.push(unit_vector(n, off[v] + c));
        }
    }
    let p = ProjectiveSum::new(&alg, vertices);
    let cover = p.map_to(m, &images);
    Ok((p, cover))
}

/// `P1 --σ--> P0 --cover--> M -> 0`, both projectives minimal.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: ProjectiveSum,
    pub p0: ProjectiveSum,
    pub sigma: ModuleMap,
    pub cover: ModuleMap,
    pub syzygy: Representation,
    pub syzygy_inclusion: ModuleMap,
    pub syzygy_cover: ModuleMap,
}

impl Presentation {
    pub fn projective_map(&self) -> ProjectiveMap {
        ProjectiveMap::from_module_map(&self.p1, &self.p0, &self.sigma)
    }
}

pub fn minimal_presentation(m: &Representation) -> Result<Presentation> {
    let (p0, cover) = projective_cover(m)?;
    let (syzygy, syzygy_inclusion) = cover.kernel();
    let (p1, syzygy_cover) = projective_cover(&syzygy)?;
    let sigma = syzygy_inclusion.after(&syzygy_cover);
    debug_assert!(factor_through_injection(&syzygy_inclusion, &sigma).is_some());
    Ok(Presentation {
        p1,
        p0,
        sigma,
        cover,
        syzygy,
        syzygy_inclusion,
        syzygy_cover,
    })
}
