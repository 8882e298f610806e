//! Finite-dimensional modules and their morphisms.
//!
//! Over a quiver algebra a module is a representation: one vector space per
//! vertex ("slot") and one matrix per arrow. Over an abstract algebra there is
//! a single slot and one action matrix per basis element. Vectors in a module
//! are written in total coordinates, the slots concatenated in vertex order.

mod ar;
mod decompose;
mod hom;
mod projective;

use std::fmt;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

pub use ar::{
    almost_split_sequence, almost_split_sequence_with, ext1, extension_middle_term, tau, tau_minus,
    ARSequence, Ext1,
};
pub use decompose::{
    decompose, decompose_with_known, is_indecomposable, is_isomorphic, split_indecomposables,
    split_with_known, Summand,
};
pub(crate) use hom::{combine, end_radical};
pub use hom::{
    end_top_dim, endomorphism_algebra, factor_through_injection, factor_through_surjection,
    hom_basis, hom_dim, indecomposable_isomorphism, trace_submodule,
};
pub use projective::{
    idempotent_part, injective_module, injective_modules, minimal_presentation, projective_cover,
    projective_module, projective_modules, radical_submodule, simple_module, simple_modules,
    socle_submodule, top, Presentation, ProjectiveMap, ProjectiveSum,
};

pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub fn slot_count(alg: &Algebra) -> usize {
    alg.quiver().map_or(1, |q| q.vertex_count())
}

/// (source slot, target slot) of each generator.
pub fn generator_ends(alg: &Algebra) -> Vec<(usize, usize)> {
    match alg.quiver() {
        Some(q) => q
            .quiver
            .arrows
            .iter()
            .map(|a| (a.source, a.target))
            .collect(),
        None => vec![(0, 0); alg.dim()],
    }
}

/// The algebra element acting as generator `g`.
pub fn generator_element(alg: &Algebra, g: usize) -> Vec<Scalar> {
    match alg.quiver() {
        Some(q) => alg.basis_element(q.arrow_basis[g]),
        None => alg.basis_element(g),
    }
}

#[derive(Clone)]
pub struct Representation {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation{:?}", self.dims)
    }
}

impl Representation {
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let ends = generator_ends(&algebra);
        if dims.len() != slot_count(&algebra) {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} slots, got {}",
                slot_count(&algebra),
                dims.len()
            )));
        }
        if maps.len() != ends.len() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} generator matrices, got {}",
                ends.len(),
                maps.len()
            )));
        }
        for (g, (&(s, t), m)) in ends.iter().zip(&maps).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::InvalidRepresentation(format!(
                    "generator {g} has the wrong shape"
                )));
            }
        }
        let rep = Representation {
            algebra,
            dims,
            maps,
        };
        rep.check_relations()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<Algebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Self {
        debug_assert!(Representation::new(algebra.clone(), dims.clone(), maps.clone()).is_ok());
        Representation {
            algebra,
            dims,
            maps,
        }
    }

    fn check_relations(&self) -> Result<()> {
        let alg = &self.algebra;
        match alg.quiver() {
            Some(q) => {
                for (ri, r) in q.relations.iter().enumerate() {
                    let Some((_, first)) = r.terms.first() else {
                        continue;
                    };
                    let s = q.quiver.arrows[first[0]].source;
                    let t = q.quiver.arrows[*first.last().unwrap()].target;
                    let mut acc = Matrix::zeros(self.dims[t], self.dims[s]);
                    for (c, path) in &r.terms {
                        acc = acc.add(&self.path_matrix(path, s).scale(c));
                    }
                    if !acc.is_zero() {
                        return Err(Error::InvalidRepresentation(format!(
                            "relation {ri} does not vanish"
                        )));
                    }
                }
            }
            None => {
                let n = self.total_dim();
                let mut unit = Matrix::zeros(n, n);
                for (i, c) in alg.unit().iter().enumerate() {
                    if !c.is_zero() {
                        unit = unit.add(&self.maps[i].scale(c));
                    }
                }
                if unit != Matrix::identity(n) {
                    return Err(Error::InvalidRepresentation(
                        "unit does not act as the identity".into(),
                    ));
                }
                for i in 0..alg.dim() {
                    for j in 0..alg.dim() {
                        let mut rhs = Matrix::zeros(n, n);
                        for (k, c) in alg.basis_product(i, j) {
                            rhs = rhs.add(&self.maps[*k].scale(c));
                        }
                        if self.maps[i].mul(&self.maps[j]) != rhs {
                            return Err(Error::InvalidRepresentation(format!(
                                "action breaks the product of basis elements {i} and {j}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let dims = vec![0; slot_count(&algebra)];
        let maps = generator_ends(&algebra)
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        Representation {
            algebra,
            dims,
            maps,
        }
    }

    /// Module structure from action matrices of every basis element on `K^n`.
    /// Returns the module together with the change of basis (columns are the
    /// new basis vectors in the old coordinates).
    pub fn from_action(
        algebra: Arc<Algebra>,
        n: usize,
        actions: &[Matrix],
    ) -> Result<(Self, Matrix)> {
        if algebra.quiver().is_none() {
            return Ok((
                Representation::new(algebra, vec![n], actions.to_vec())?,
                Matrix::identity(n),
            ));
        }
        let q = algebra.quiver().unwrap();
        let act = |x: &[Scalar]| -> Matrix {
            let mut m = Matrix::zeros(n, n);
            for (i, c) in x.iter().enumerate() {
                if !c.is_zero() {
                    m = m.add(&actions[i].scale(c));
                }
            }
            m
        };
        let mut blocks = Vec::new();
        let mut dims = Vec::new();
        for &b in &q.vertex_basis {
            let e = act(&algebra.basis_element(b));
            let space = e.column_space();
            dims.push(space.cols());
            blocks.push(space);
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        let change = if n == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::hstack(&refs)
        };
        let inverse = change.inverse().ok_or_else(|| {
            Error::InvalidRepresentation("vertex idempotents do not split the space".into())
        })?;
        let offsets = offsets(&dims);
        let mut maps = Vec::new();
        for (a, arrow) in q.quiver.arrows.iter().enumerate() {
            let m = inverse.mul(&actions[q.arrow_basis[a]]).mul(&change);
            maps.push(m.block(
                offsets[arrow.target],
                offsets[arrow.source],
                dims[arrow.target],
                dims[arrow.source],
            ));
        }
        Ok((Representation::new(algebra, dims, maps)?, change))
    }

    /// The left regular module, with the basis change into path coordinates.
    pub fn regular(algebra: Arc<Algebra>) -> Result<(Self, Matrix)> {
        let n = algebra.dim();
        let actions: Vec<Matrix> = (0..n)
            .map(|i| algebra.left_multiplication(&algebra.basis_element(i)))
            .collect();
        Representation::from_action(algebra, n, &actions)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, g: usize) -> &Matrix {
        &self.maps[g]
    }

    pub fn offsets(&self) -> Vec<usize> {
        offsets(&self.dims)
    }

    /// Product of arrow matrices along a traversal-order path from `source`.
    pub fn path_matrix(&self, path: &[usize], source: usize) -> Matrix {
        let mut m = Matrix::identity(self.dims[source]);
        for &a in path {
            m = self.maps[a].mul(&m);
        }
        m
    }

    /// `x * v` for an algebra element `x` and a total-coordinate vector `v`.
    pub fn act(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.total_dim();
        let mut out = vec![Scalar::zero(); n];
        match self.algebra.quiver() {
            Some(q) => {
                let off = self.offsets();
                for (i, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (s, t) = q.ends[i];
                    let mut w: Vec<Scalar> = v[off[s]..off[s] + self.dims[s]].to_vec();
                    if w.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    for &a in &q.paths[i] {
                        w = self.maps[a].apply(&w);
                    }
                    for (k, y) in w.iter().enumerate() {
                        if !y.is_zero() {
                            out[off[t] + k] = &out[off[t] + k] + &(c * y);
                        }
                    }
                }
            }
            None => {
                for (i, c) in x.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (k, y) in self.maps[i].apply(v).iter().enumerate() {
                        out[k] = &out[k] + &(c * y);
                    }
                }
            }
        }
        out
    }

    pub fn action_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.total_dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.act(x, &crate::algebra::unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    /// Slot pieces of a total vector.
    pub fn split_vector(&self, v: &[Scalar]) -> Vec<Vec<Scalar>> {
        let off = self.offsets();
        (0..self.dims.len())
            .map(|s| v[off[s]..off[s] + self.dims[s]].to_vec())
            .collect()
    }

    /// Per-slot column spaces of the slot projections of `vectors`. For a
    /// graded family of vectors this is the graded span.
    pub fn graded_span(&self, vectors: &[Vec<Scalar>]) -> Vec<Matrix> {
        let mut per_slot: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); self.dims.len()];
        for v in vectors {
            for (s, piece) in self.split_vector(v).into_iter().enumerate() {
                if piece.iter().any(|x| !x.is_zero()) {
                    per_slot[s].push(piece);
                }
            }
        }
        per_slot
            .into_iter()
            .zip(&self.dims)
            .map(|(vs, &d)| {
                if vs.is_empty() {
                    Matrix::zeros(d, 0)
                } else {
                    Matrix::from_columns(d, &vs).column_space()
                }
            })
            .collect()
    }

    /// Submodule with the given per-slot bases (independent columns).
    pub fn submodule(&self, basis: Vec<Matrix>) -> (Representation, ModuleMap) {
        let ends = generator_ends(&self.algebra);
        let dims: Vec<usize> = basis.iter().map(Matrix::cols).collect();
        let maps = ends
            .iter()
            .zip(&self.maps)
            .map(|(&(s, t), m)| {
                basis[t]
                    .solve_matrix(&m.mul(&basis[s]))
                    .expect("subspace is not closed under the action")
            })
            .collect();
        let sub = Representation::new_unchecked(self.algebra.clone(), dims, maps);
        let inclusion = ModuleMap::new_unchecked(sub.clone(), self.clone(), basis);
        (sub, inclusion)
    }

    /// Quotient by the submodule with the given per-slot bases. The quotient
    /// is written on a complement of standard basis vectors.
    pub fn quotient(&self, basis: &[Matrix]) -> (Representation, ModuleMap) {
        let mut projections = Vec::new();
        let mut sections = Vec::new();
        for (b, &d) in basis.iter().zip(&self.dims) {
            let comp = b.complement_units();
            let mut units = Matrix::zeros(d, comp.len());
            for (j, &c) in comp.iter().enumerate() {
                units.set(c, j, Scalar::one());
            }
            let full = Matrix::hstack(&[b, &units]);
            let inv = full.inverse().expect("complement completes a basis");
            let rows: Vec<usize> = (b.cols()..d).collect();
            projections.push(inv.select_rows(&rows));
            sections.push(units);
        }
        let ends = generator_ends(&self.algebra);
        let maps = ends
            .iter()
            .zip(&self.maps)
            .map(|(&(s, t), m)| projections[t].mul(m).mul(&sections[s]))
            .collect();
        let dims = sections.iter().map(Matrix::cols).collect();
        let q = Representation::new_unchecked(self.algebra.clone(), dims, maps);
        let projection = ModuleMap::new_unchecked(self.clone(), q.clone(), projections);
        (q, projection)
    }

    /// Module over the opposite algebra on the dual spaces.
    pub fn dual(&self) -> Representation {
        let op = self.algebra.opposite();
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        Representation::new_unchecked(op, self.dims.clone(), maps)
    }

    pub fn direct_sum(parts: &[Representation]) -> Representation {
        direct_sum_with_maps(parts).0
    }

    pub fn identity(&self) -> ModuleMap {
        ModuleMap::new_unchecked(
            self.clone(),
            self.clone(),
            self.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        )
    }
}

pub(crate) fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for &d in dims {
        out.push(acc);
        acc += d;
    }
    out
}

/// Direct sum with its canonical injections and projections.
pub fn direct_sum_with_maps(
    parts: &[Representation],
) -> (Representation, Vec<ModuleMap>, Vec<ModuleMap>) {
    assert!(
        !parts.is_empty(),
        "direct sum of an empty family needs an algebra"
    );
    let alg = parts[0].algebra.clone();
    let slots = parts[0].dims.len();
    let dims: Vec<usize> = (0..slots)
        .map(|s| parts.iter().map(|p| p.dims[s]).sum())
        .collect();
    let maps = generator_ends(&alg)
        .iter()
        .enumerate()
        .map(|(g, _)| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[g]).collect();
            Matrix::block_diag(&blocks)
        })
        .collect();
    let sum = Representation::new_unchecked(alg, dims.clone(), maps);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut start = vec![0; slots];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for s in 0..slots {
            let mut m = Matrix::zeros(dims[s], p.dims[s]);
            m.set_block(start[s], 0, &Matrix::identity(p.dims[s]));
            proj.push(m.transpose());
            inj.push(m);
            start[s] += p.dims[s];
        }
        injections.push(ModuleMap::new_unchecked(p.clone(), sum.clone(), inj));
        projections.push(ModuleMap::new_unchecked(sum.clone(), p.clone(), proj));
    }
    (sum, injections, projections)
}

/// A module homomorphism, one matrix per slot.
#[derive(Clone)]
pub struct ModuleMap {
    pub source: Representation,
    pub target: Representation,
    blocks: Vec<Matrix>,
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap({:?} -> {:?}, rank {})",
            self.source.dims,
            self.target.dims,
            self.rank()
        )
    }
}

impl ModuleMap {
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Self> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::InvalidRepresentation(
                "map between modules over different algebras".into(),
            ));
        }
        if blocks.len() != source.dims.len()
            || blocks
                .iter()
                .enumerate()
                .any(|(s, b)| b.rows() != target.dims[s] || b.cols() != source.dims[s])
        {
            return Err(Error::InvalidRepresentation(
                "map blocks have the wrong shape".into(),
            ));
        }
        let f = ModuleMap {
            source,
            target,
            blocks,
        };
        for (g, &(s, t)) in generator_ends(&f.source.algebra).iter().enumerate() {
            if f.blocks[t].mul(&f.source.maps[g]) != f.target.maps[g].mul(&f.blocks[s]) {
                return Err(Error::InvalidRepresentation(format!(
                    "map does not commute with generator {g}"
                )));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Self {
        debug_assert!(ModuleMap::new(source.clone(), target.clone(), blocks.clone()).is_ok());
        ModuleMap {
            source,
            target,
            blocks,
        }
    }

    pub fn zero(source: Representation, target: Representation) -> Self {
        let blocks = (0..source.dims.len())
            .map(|s| Matrix::zeros(target.dims[s], source.dims[s]))
            .collect();
        ModuleMap {
            source,
            target,
            blocks,
        }
    }

    /// From a total matrix that respects the slot grading.
    pub fn from_total(source: Representation, target: Representation, m: &Matrix) -> Self {
        let so = source.offsets();
        let to = target.offsets();
        let blocks = (0..source.dims.len())
            .map(|s| m.block(to[s], so[s], target.dims[s], source.dims[s]))
            .collect();
        ModuleMap::new_unchecked(source, target, blocks)
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, s: usize) -> &Matrix {
        &self.blocks[s]
    }

    pub fn total_matrix(&self) -> Matrix {
        let refs: Vec<&Matrix> = self.blocks.iter().collect();
        Matrix::block_diag(&refs)
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.total_matrix().apply(v)
    }

    /// Flattened blocks, used as coordinates in Hom spaces.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(Matrix::to_vec).collect()
    }

    /// `self ∘ g`.
    pub fn after(&self, g: &ModuleMap) -> ModuleMap {
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a.mul(b))
            .collect();
        ModuleMap::new_unchecked(g.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, o: &ModuleMap) -> ModuleMap {
        let blocks = self
            .blocks
            .iter()
            .zip(&o.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn neg(&self) -> ModuleMap {
        self.scale(&Scalar::from_i64(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn kernel(&self) -> (Representation, ModuleMap) {
        self.source
            .submodule(self.blocks.iter().map(Matrix::kernel_basis).collect())
    }

    pub fn image(&self) -> (Representation, ModuleMap) {
        self.target
            .submodule(self.blocks.iter().map(Matrix::column_space).collect())
    }

    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        let spaces: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space).collect();
        self.target.quotient(&spaces)
    }

    /// `D f : D target -> D source` over the opposite algebra.
    pub fn dual(&self) -> ModuleMap {
        ModuleMap::new_unchecked(
            self.target.dual(),
            self.source.dual(),
            self.blocks.iter().map(Matrix::transpose).collect(),
        )
    }

    /// The map between direct sums with components `parts[k][l] : sources[l] -> targets[k]`.
    pub fn from_components(
        sources: &[Representation],
        targets: &[Representation],
        parts: &[Vec<Option<ModuleMap>>],
    ) -> ModuleMap {
        let (src, _, src_proj) = direct_sum_with_maps(sources);
        let (tgt, tgt_inj, _) = direct_sum_with_maps(targets);
        let mut acc = ModuleMap::zero(src.clone(), tgt.clone());
        for (k, row) in parts.iter().enumerate() {
            for (l, f) in row.iter().enumerate() {
                if let Some(f) = f {
                    acc = acc.add(&tgt_inj[k].after(f).after(&src_proj[l]));
                }
            }
        }
        acc
    }
}

/// `0 -> A -> B -> C -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub left: ModuleMap,
    pub right: ModuleMap,
}

impl ShortExactSequence {
    pub fn is_valid(&self) -> bool {
        self.left.is_injective()
            && self.right.is_surjective()
            && self.right.after(&self.left).is_zero()
            && self.left.source.total_dim() + self.right.target.total_dim()
                == self.left.target.total_dim()
    }

    pub fn middle(&self) -> &Representation {
        &self.left.target
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraPresentation, Arrow, FieldMode, Quiver, Relation};

    pub fn alg_a() -> Arc<Algebra> {
        let p = AlgebraPresentation {
            name: "A".into(),
            quiver: Quiver {
                vertices: vec!["1".into(), "2".into(), "3".into()],
                arrows: vec![
                    Arrow {
                        name: "a".into(),
                        source: 0,
                        target: 1,
                    },
                    Arrow {
                        name: "b".into(),
                        source: 1,
                        target: 2,
                    },
                ],
            },
            relations: vec![Relation {
                terms: vec![(Scalar::one(), vec![0, 1])],
            }],
        };
        Arc::new(build_algebra(&p, 64, FieldMode::Rational).unwrap())
    }

    #[test]
    fn regular_module_of_alg_a() {
        let a = alg_a();
        let (reg, _) = Representation::regular(a).unwrap();
        assert_eq!(reg.dims(), &[1, 2, 2]);
    }

    #[test]
    fn kernel_image_cokernel_fit() {
        let a = alg_a();
        let p1 = projective_module(&a, 0);
        let s1 = simple_module(&a, 0);
        let f = hom_basis(&p1, &s1).pop().unwrap();
        let (k, inc) = f.kernel();
        assert_eq!(k.dims(), &[0, 1, 0]);
        let ses = ShortExactSequence {
            left: inc,
            right: f.clone(),
        };
        assert!(ses.is_valid());
        let (c, _) = f.cokernel();
        assert!(c.is_zero());
        let (k0, _) = ModuleMap::zero(p1.clone(), s1.clone()).kernel();
        assert_eq!(k0.dims(), p1.dims());
        assert!(p1.identity().kernel().0.is_zero());
    }

    #[test]
    fn dual_is_involutive() {
        let a = alg_a();
        let p1 = projective_module(&a, 0);
        let dd = p1.dual().dual();
        assert!(Arc::ptr_eq(dd.algebra(), &a));
        assert!(is_isomorphic(&dd, &p1).unwrap());
    }

    #[test]
    fn invalid_representation_is_rejected() {
        let a = alg_a();
        let one = Matrix::identity(1);
        let r = Representation::new(a, vec![1, 1, 1], vec![one.clone(), one]);
        assert!(matches!(r, Err(Error::InvalidRepresentation(_))));
    }
}
