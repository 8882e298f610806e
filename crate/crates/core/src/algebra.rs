//! Finite-dimensional algebras: quiver-with-relations presentations resolved
//! to a path basis, and abstract structure-constant algebras.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock, Weak};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// Default bound on path length while resolving a presentation.
pub const DEFAULT_LENGTH_CAP: usize = 64;

const PATH_COUNT_LIMIT: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// A linear combination of parallel paths. Each path lists arrow indices in
/// traversal order, so the written product `b*a` is stored as `[a, b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldMode {
    Rational,
    Prime(u64),
}

impl FieldMode {
    pub fn embed(&self, s: Scalar) -> Scalar {
        match self {
            FieldMode::Rational => s,
            FieldMode::Prime(p) => s.to_residue(*p),
        }
    }
}

/// Path bookkeeping kept for algebras that come from a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverData {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Traversal-order arrows of each basis path (empty for idempotents).
    pub paths: Vec<Vec<usize>>,
    /// (source, target) vertex of each basis path.
    pub ends: Vec<(usize, usize)>,
    pub vertex_basis: Vec<usize>,
    pub arrow_basis: Vec<usize>,
}

impl QuiverData {
    pub fn vertex_count(&self) -> usize {
        self.quiver.vertices.len()
    }
}

/// A finite-dimensional associative unital algebra given by structure
/// constants `b_i * b_j = sum_k c[i][j][k] b_k`, stored sparsely.
#[derive(Debug)]
pub struct Algebra {
    name: String,
    field: FieldMode,
    labels: Vec<String>,
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Vec<Scalar>,
    idempotents: Vec<Vec<Scalar>>,
    quiver: Option<QuiverData>,
    opposite: OnceLock<Arc<Algebra>>,
    origin: OnceLock<Weak<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.labels == other.labels
            && self.products == other.products
            && self.unit == other.unit
            && self.quiver == other.quiver
    }
}

fn path_label(q: &Quiver, path: &[usize], source: usize) -> String {
    if path.is_empty() {
        return format!("e{}", q.vertices[source]);
    }
    path.iter()
        .rev()
        .map(|&a| q.arrows[a].name.as_str())
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

impl Path {
    fn key(&self) -> (usize, usize, &[usize]) {
        // trivial paths compare by vertex
        let v = if self.arrows.is_empty() {
            self.source
        } else {
            0
        };
        (self.arrows.len(), v, &self.arrows)
    }

    fn cmp_graded(&self, o: &Path) -> Ordering {
        self.key().cmp(&o.key())
    }
}

fn enumerate_paths(q: &Quiver, max_len: usize) -> Result<Vec<Vec<Path>>> {
    let mut by_len: Vec<Vec<Path>> = vec![(0..q.vertices.len())
        .map(|v| Path {
            source: v,
            target: v,
            arrows: vec![],
        })
        .collect()];
    let mut total = by_len[0].len();
    for len in 1..=max_len {
        let mut next = Vec::new();
        if len == 1 {
            for (i, a) in q.arrows.iter().enumerate() {
                next.push(Path {
                    source: a.source,
                    target: a.target,
                    arrows: vec![i],
                });
            }
        } else {
            for p in &by_len[len - 1] {
                for (i, a) in q.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
        }
        next.sort_by(|a, b| a.cmp_graded(b));
        total += next.len();
        if total > PATH_COUNT_LIMIT {
            return Err(Error::NotFiniteDimensional(max_len));
        }
        by_len.push(next);
    }
    Ok(by_len)
}

fn validate_presentation(p: &AlgebraPresentation) -> Result<()> {
    let q = &p.quiver;
    let n = q.vertices.len();
    if n == 0 {
        return Err(Error::MalformedRelation("quiver has no vertices".into()));
    }
    for (i, v) in q.vertices.iter().enumerate() {
        if q.vertices[..i].contains(v) {
            return Err(Error::MalformedRelation(format!("duplicate vertex {v}")));
        }
    }
    for (i, a) in q.arrows.iter().enumerate() {
        if a.source >= n || a.target >= n {
            return Err(Error::MalformedRelation(format!(
                "arrow {} has undeclared ends",
                a.name
            )));
        }
        if q.arrows[..i].iter().any(|b| b.name == a.name) {
            return Err(Error::MalformedRelation(format!(
                "duplicate arrow {}",
                a.name
            )));
        }
    }
    for r in &p.relations {
        let mut ends = None;
        for (_, path) in &r.terms {
            if path.len() < 2 {
                return Err(Error::MalformedRelation(
                    "relation terms must be paths of length at least 2".into(),
                ));
            }
            if path.iter().any(|&a| a >= q.arrows.len()) {
                return Err(Error::MalformedRelation("unknown arrow in relation".into()));
            }
            for w in path.windows(2) {
                if q.arrows[w[0]].target != q.arrows[w[1]].source {
                    return Err(Error::MalformedRelation(format!(
                        "{} does not compose with {}",
                        q.arrows[w[1]].name, q.arrows[w[0]].name
                    )));
                }
            }
            let e = (
                q.arrows[path[0]].source,
                q.arrows[*path.last().unwrap()].target,
            );
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(Error::MalformedRelation(
                        "relation mixes paths with different ends".into(),
                    ))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Span of `{u * r * w}` for relations `r`, with terms longer than `max_len`
/// dropped, as rows over the given column index.
fn relation_ideal_rows(
    p: &AlgebraPresentation,
    paths: &[Vec<Path>],
    column: &BTreeMap<Vec<usize>, usize>,
    trivial_column: &[usize],
    max_len: usize,
    field: FieldMode,
) -> Vec<Vec<Scalar>> {
    let ncols = column.len() + trivial_column.len();
    let all: Vec<&Path> = paths.iter().flatten().collect();
    let mut rows = Vec::new();
    for r in &p.relations {
        let Some((_, first)) = r.terms.first() else {
            continue;
        };
        let src = p.quiver.arrows[first[0]].source;
        let tgt = p.quiver.arrows[*first.last().unwrap()].target;
        let min_len = r.terms.iter().map(|(_, t)| t.len()).min().unwrap();
        for before in all.iter().filter(|u| u.target == src) {
            for after in all.iter().filter(|w| w.source == tgt) {
                if before.arrows.len() + after.arrows.len() + min_len > max_len {
                    continue;
                }
                let mut row = vec![Scalar::zero(); ncols];
                let mut any = false;
                for (c, t) in &r.terms {
                    let len = before.arrows.len() + t.len() + after.arrows.len();
                    if len > max_len {
                        continue;
                    }
                    let mut full = before.arrows.clone();
                    full.extend_from_slice(t);
                    full.extend_from_slice(&after.arrows);
                    let col = column[&full];
                    row[col] = &row[col] + &field.embed(c.clone());
                    any = true;
                }
                if any && row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

/// Resolve a presentation to a path basis with structure constants.
///
/// Finds the least `n` with every path of length `n` in the relation ideal
/// (checked modulo paths of length `n + 1`), then reduces the paths of length
/// below `n` against the ideal. Longer paths in each grade are eliminated
/// first, so the surviving basis consists of the smallest paths in graded
/// lexicographic order.
pub fn build_algebra(
    p: &AlgebraPresentation,
    length_cap: usize,
    field: FieldMode,
) -> Result<Algebra> {
    assert!(length_cap >= 1, "length cap must be positive");
    validate_presentation(p)?;
    let q = &p.quiver;
    let nv = q.vertices.len();
    for n in 1..=length_cap + 1 {
        let paths = enumerate_paths(q, n)?;
        // columns: largest paths first
        let mut ordered: Vec<&Path> = paths.iter().flatten().collect();
        ordered.sort_by(|a, b| b.cmp_graded(a));
        let mut column = BTreeMap::new();
        let mut trivial_column = vec![0; nv];
        for (i, path) in ordered.iter().enumerate() {
            if path.arrows.is_empty() {
                trivial_column[path.source] = i;
            } else {
                column.insert(path.arrows.clone(), i);
            }
        }
        let rows = relation_ideal_rows(p, &paths, &column, &trivial_column, n, field);
        let ncols = ordered.len();
        let ideal = if rows.is_empty() {
            Matrix::zeros(0, ncols)
        } else {
            Matrix::from_rows(rows)
        };
        let rank = ideal.rank();
        let top: Vec<usize> = paths[n].iter().map(|path| column[&path.arrows]).collect();
        let mut extended = ideal.clone();
        if !top.is_empty() {
            let mut units = Matrix::zeros(top.len(), ncols);
            for (i, &c) in top.iter().enumerate() {
                units.set(i, c, Scalar::one());
            }
            extended = Matrix::vstack(&[&ideal, &units]);
        }
        if extended.rank() != rank {
            continue;
        }
        // all length-n paths vanish: drop them and reduce what is left
        let keep: Vec<usize> = (0..ncols).filter(|c| !top.contains(c)).collect();
        let truncated = ideal.select_columns(&keep);
        let reduced = truncated.rref();
        let kept_paths: Vec<&Path> = keep.iter().map(|&c| ordered[c]).collect();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; keep.len()];
            for &pc in &reduced.pivots {
                v[pc] = true;
            }
            v
        };
        let mut basis_cols: Vec<usize> = (0..keep.len()).filter(|&c| !pivot_set[c]).collect();
        basis_cols.sort_by(|&a, &b| kept_paths[a].cmp_graded(kept_paths[b]));
        let mut basis_index = vec![usize::MAX; keep.len()];
        for (i, &c) in basis_cols.iter().enumerate() {
            basis_index[c] = i;
        }
        let dim = basis_cols.len();
        // normal form of each kept column
        let mut nf: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); keep.len()];
        for c in 0..keep.len() {
            if !pivot_set[c] {
                nf[c] = vec![(basis_index[c], Scalar::one())];
            }
        }
        for (row, &pc) in reduced.pivots.iter().enumerate() {
            let mut terms = Vec::new();
            for c in 0..keep.len() {
                if c != pc && !pivot_set[c] {
                    let v = reduced.reduced.get(row, c);
                    if !v.is_zero() {
                        terms.push((basis_index[c], -v));
                    }
                }
            }
            terms.sort_by_key(|t| t.0);
            nf[pc] = terms;
        }
        let mut kept_col = BTreeMap::new();
        let mut kept_trivial = vec![0; nv];
        for (c, path) in kept_paths.iter().enumerate() {
            if path.arrows.is_empty() {
                kept_trivial[path.source] = c;
            } else {
                kept_col.insert(path.arrows.clone(), c);
            }
        }
        let basis_paths: Vec<&Path> = basis_cols.iter().map(|&c| kept_paths[c]).collect();
        let mut products = vec![vec![Vec::new(); dim]; dim];
        for (i, bi) in basis_paths.iter().enumerate() {
            for (j, bj) in basis_paths.iter().enumerate() {
                // b_i * b_j: traverse b_j, then b_i
                if bj.target != bi.source {
                    continue;
                }
                let col = if bj.arrows.is_empty() && bi.arrows.is_empty() {
                    Some(kept_trivial[bi.source])
                } else {
                    let mut full = bj.arrows.clone();
                    full.extend_from_slice(&bi.arrows);
                    kept_col.get(&full).copied()
                };
                if let Some(c) = col {
                    products[i][j] = nf[c].clone();
                }
            }
        }
        let labels = basis_paths
            .iter()
            .map(|b| path_label(q, &b.arrows, b.source))
            .collect();
        let vertex_basis: Vec<usize> = (0..nv).map(|v| basis_index[kept_trivial[v]]).collect();
        let arrow_basis: Vec<usize> = (0..q.arrows.len())
            .map(|a| basis_index[kept_col[&vec![a]]])
            .collect();
        if arrow_basis.contains(&usize::MAX) {
            return Err(Error::MalformedRelation(
                "an arrow lies in the relation ideal".into(),
            ));
        }
        let mut unit = vec![Scalar::zero(); dim];
        let idempotents: Vec<Vec<Scalar>> = vertex_basis
            .iter()
            .map(|&b| {
                unit[b] = Scalar::one();
                unit_vector(dim, b)
            })
            .collect();
        let relations = p
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, t)| (field.embed(c.clone()), t.clone()))
                    .collect(),
            })
            .collect();
        let quiver = QuiverData {
            quiver: q.clone(),
            relations,
            paths: basis_paths.iter().map(|b| b.arrows.clone()).collect(),
            ends: basis_paths.iter().map(|b| (b.source, b.target)).collect(),
            vertex_basis,
            arrow_basis,
        };
        return Algebra::assemble(
            p.name.clone(),
            field,
            labels,
            products,
            unit,
            idempotents,
            Some(quiver),
        );
    }
    Err(Error::NotFiniteDimensional(length_cap))
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

fn add_scaled(acc: &mut [Scalar], terms: &[(usize, Scalar)], s: &Scalar) {
    for (k, c) in terms {
        acc[*k] = &acc[*k] + &(s * c);
    }
}

impl Algebra {
    fn assemble(
        name: String,
        field: FieldMode,
        labels: Vec<String>,
        products: Vec<Vec<Vec<(usize, Scalar)>>>,
        unit: Vec<Scalar>,
        idempotents: Vec<Vec<Scalar>>,
        quiver: Option<QuiverData>,
    ) -> Result<Algebra> {
        let a = Algebra {
            name,
            field,
            labels,
            products,
            unit,
            idempotents,
            quiver,
            opposite: OnceLock::new(),
            origin: OnceLock::new(),
        };
        a.check_associative()?;
        a.check_unit_and_idempotents()?;
        Ok(a)
    }

    /// Abstract algebra from dense structure constants `c[i][j][k]`.
    pub fn from_structure_constants(
        name: impl Into<String>,
        field: FieldMode,
        labels: Vec<String>,
        constants: &[Vec<Vec<Scalar>>],
        unit: Vec<Scalar>,
        idempotents: Vec<Vec<Scalar>>,
    ) -> Result<Algebra> {
        let products = constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (k, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::assemble(
            name.into(),
            field,
            labels,
            products,
            unit,
            idempotents,
            None,
        )
    }

    /// The algebra spanned by a composition-closed family of square matrices
    /// containing the identity. With `opposite`, the product is `x * y = y . x`.
    pub fn from_matrix_basis(
        name: impl Into<String>,
        field: FieldMode,
        basis: &[Matrix],
        idempotents: &[Matrix],
        opposite: bool,
    ) -> Result<Algebra> {
        let k = basis.len();
        let flat: Vec<Vec<Scalar>> = basis.iter().map(Matrix::to_vec).collect();
        let rows = flat.first().map_or(0, Vec::len);
        let span = Matrix::from_columns(rows, &flat);
        let mut targets = Vec::with_capacity(k * k + 1 + idempotents.len());
        for i in 0..k {
            for j in 0..k {
                let prod = if opposite {
                    basis[j].mul(&basis[i])
                } else {
                    basis[i].mul(&basis[j])
                };
                targets.push(prod.to_vec());
            }
        }
        let n = basis.first().map_or(0, Matrix::rows);
        targets.push(Matrix::identity(n).to_vec());
        for e in idempotents {
            targets.push(e.to_vec());
        }
        let coords = span
            .solve_matrix(&Matrix::from_columns(rows, &targets))
            .ok_or_else(|| {
                Error::CrossCheckFailure("matrix family is not closed under composition".into())
            })?;
        let mut products = vec![vec![Vec::new(); k]; k];
        for i in 0..k {
            for j in 0..k {
                let col = coords.column(i * k + j);
                products[i][j] = col
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
            }
        }
        let unit = coords.column(k * k);
        let idem: Vec<Vec<Scalar>> = (0..idempotents.len())
            .map(|i| coords.column(k * k + 1 + i))
            .collect();
        let idem = if idem.is_empty() {
            vec![unit.clone()]
        } else {
            idem
        };
        let labels = (0..k).map(|i| format!("E{i}")).collect();
        Self::assemble(name.into(), field, labels, products, unit, idem, None)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.products[i][j];
                for k in 0..n {
                    let mut left = vec![Scalar::zero(); n];
                    for (m, c) in ij {
                        add_scaled(&mut left, &self.products[*m][k], c);
                    }
                    let mut right = vec![Scalar::zero(); n];
                    for (m, c) in &self.products[j][k] {
                        add_scaled(&mut right, &self.products[i][*m], c);
                    }
                    if left != right {
                        return Err(Error::NotAssociative((i, j, k)));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit_and_idempotents(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            let b = unit_vector(n, i);
            if self.multiply(&self.unit, &b) != b || self.multiply(&b, &self.unit) != b {
                return Err(Error::InvalidRepresentation(format!(
                    "unit fails on basis element {i}"
                )));
            }
        }
        let mut sum = vec![Scalar::zero(); n];
        for (a, e) in self.idempotents.iter().enumerate() {
            for (b, f) in self.idempotents.iter().enumerate() {
                let p = self.multiply(e, f);
                let expect = if a == b {
                    e.clone()
                } else {
                    vec![Scalar::zero(); n]
                };
                if p != expect {
                    return Err(Error::InvalidRepresentation(
                        "idempotents are not orthogonal".into(),
                    ));
                }
            }
            for (s, x) in sum.iter_mut().zip(e) {
                *s = &*s + x;
            }
        }
        if sum != self.unit {
            return Err(Error::InvalidRepresentation(
                "idempotents do not sum to the unit".into(),
            ));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> FieldMode {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn idempotents(&self) -> &[Vec<Scalar>] {
        &self.idempotents
    }

    pub fn quiver(&self) -> Option<&QuiverData> {
        self.quiver.as_ref()
    }

    pub fn is_quiver_algebra(&self) -> bool {
        self.quiver.is_some()
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i][j]
    }

    pub fn basis_element(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.dim(), i)
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        assert!(
            a.len() == n && b.len() == n,
            "element of a different algebra"
        );
        let mut out = vec![Scalar::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                add_scaled(&mut out, &self.products[i][j], &(x * y));
            }
        }
        out
    }

    /// Dense `c[i][j][k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![Scalar::zero(); n];
                        add_scaled(&mut v, &self.products[i][j], &Scalar::one());
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix of `x -> a * x`.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.multiply(a, &unit_vector(n, j)))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of `x -> x * a`.
    pub fn right_multiplication(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.multiply(&unit_vector(n, j), a))
            .collect();
        Matrix::from_columns(n, &cols)
    }

    /// Same basis, transposed structure constants. Quiver data is reversed
    /// so the result is again a path algebra (of the opposite quiver).
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(origin) = self.origin.get().and_then(Weak::upgrade) {
            return origin;
        }
        self.opposite
            .get_or_init(|| {
                let n = self.dim();
                let products = (0..n)
                    .map(|i| (0..n).map(|j| self.products[j][i].clone()).collect())
                    .collect();
                let quiver = self.quiver.as_ref().map(|qd| {
                    let mut q = qd.quiver.clone();
                    for a in &mut q.arrows {
                        std::mem::swap(&mut a.source, &mut a.target);
                    }
                    QuiverData {
                        quiver: q,
                        relations: qd
                            .relations
                            .iter()
                            .map(|r| Relation {
                                terms: r
                                    .terms
                                    .iter()
                                    .map(|(c, t)| (c.clone(), t.iter().rev().copied().collect()))
                                    .collect(),
                            })
                            .collect(),
                        paths: qd
                            .paths
                            .iter()
                            .map(|p| p.iter().rev().copied().collect())
                            .collect(),
                        ends: qd.ends.iter().map(|&(s, t)| (t, s)).collect(),
                        vertex_basis: qd.vertex_basis.clone(),
                        arrow_basis: qd.arrow_basis.clone(),
                    }
                });
                let labels = match &quiver {
                    Some(qd) => (0..n)
                        .map(|i| path_label(&qd.quiver, &qd.paths[i], qd.ends[i].0))
                        .collect(),
                    None => self.labels.clone(),
                };
                let name = match self.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.name),
                };
                let op = Arc::new(
                    Algebra::assemble(
                        name,
                        self.field,
                        labels,
                        products,
                        self.unit.clone(),
                        self.idempotents.clone(),
                        quiver,
                    )
                    .expect("opposite of an associative algebra is associative"),
                );
                let _ = op.origin.set(Arc::downgrade(self));
                op
            })
            .clone()
    }

    /// Basis (as columns) of the two-sided ideal generated by `gens`.
    pub fn ideal_closure(&self, gens: &[Vec<Scalar>]) -> Matrix {
        let n = self.dim();
        let mut vectors: Vec<Vec<Scalar>> = gens
            .iter()
            .filter(|g| g.iter().any(|x| !x.is_zero()))
            .cloned()
            .collect();
        if vectors.is_empty() {
            return Matrix::zeros(n, 0);
        }
        let mut basis = Matrix::from_columns(n, &vectors).column_space();
        loop {
            let current = basis.columns();
            let mut grown = current.clone();
            for x in &current {
                for i in 0..n {
                    let b = unit_vector(n, i);
                    grown.push(self.multiply(&b, x));
                    grown.push(self.multiply(x, &b));
                }
            }
            let next = Matrix::from_columns(n, &grown).column_space();
            if next.cols() == basis.cols() {
                return basis;
            }
            vectors = next.columns();
            basis = Matrix::from_columns(n, &vectors);
        }
    }

    /// `A / <gens>` on a complement basis of standard basis vectors, together
    /// with the projection matrix `A -> A / <gens>`.
    pub fn quotient_by_ideal(&self, gens: &[Vec<Scalar>]) -> Result<(Algebra, Matrix)> {
        let n = self.dim();
        let ideal = self.ideal_closure(gens);
        let reduced = ideal.transpose().rref();
        let complement: Vec<usize> = (0..n).filter(|c| !reduced.pivots.contains(c)).collect();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let mut w = v.to_vec();
            for (row, &p) in reduced.pivots.iter().enumerate() {
                let f = w[p].clone();
                if f.is_zero() {
                    continue;
                }
                for (c, x) in w.iter_mut().enumerate() {
                    let r = reduced.reduced.get(row, c);
                    if !r.is_zero() {
                        *x = &*x - &(&f * r);
                    }
                }
            }
            complement.iter().map(|&c| w[c].clone()).collect()
        };
        let q = complement.len();
        let proj_cols: Vec<Vec<Scalar>> = (0..n).map(|j| project(&unit_vector(n, j))).collect();
        let projection = Matrix::from_columns(q, &proj_cols);
        let mut constants = vec![vec![vec![Scalar::zero(); q]; q]; q];
        for (a, &ca) in complement.iter().enumerate() {
            for (b, &cb) in complement.iter().enumerate() {
                let prod = self.multiply(&unit_vector(n, ca), &unit_vector(n, cb));
                constants[a][b] = project(&prod);
            }
        }
        let unit = project(&self.unit);
        let idempotents: Vec<Vec<Scalar>> = self
            .idempotents
            .iter()
            .map(|e| project(e))
            .filter(|e| e.iter().any(|x| !x.is_zero()))
            .collect();
        let labels = complement.iter().map(|&c| self.labels[c].clone()).collect();
        let alg = Algebra::from_structure_constants(
            format!("{}/I", self.name),
            self.field,
            labels,
            &constants,
            unit,
            idempotents,
        )?;
        Ok((alg, projection))
    }

    /// Basis (columns, as coefficient vectors) of the Jacobson radical, via the
    /// trace form of the left regular representation.
    pub fn jacobson_radical(&self) -> Result<Matrix> {
        if self.field != FieldMode::Rational {
            return Err(Error::UnsupportedCharacteristic);
        }
        let n = self.dim();
        let mats: Vec<Matrix> = (0..n)
            .map(|i| self.left_multiplication(&unit_vector(n, i)))
            .collect();
        Ok(trace_radical(&mats))
    }

    /// Is `x` in the span of `ideal_basis`, multiplicatively closed on both sides?
    pub fn is_two_sided_ideal(&self, basis: &Matrix) -> bool {
        let n = self.dim();
        if basis.cols() == 0 {
            return true;
        }
        let rank = basis.rank();
        for x in basis.columns() {
            for i in 0..n {
                let b = unit_vector(n, i);
                for prod in [self.multiply(&b, &x), self.multiply(&x, &b)] {
                    let ext = Matrix::hstack(&[basis, &Matrix::column_vector(prod)]);
                    if ext.rank() != rank {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Coefficient vectors `x` with `tr(X_x X_y) = 0` for all `y`, where `X_i` are
/// the given matrices spanning a unital algebra acting faithfully. In
/// characteristic zero this is the Jacobson radical.
pub fn trace_radical(mats: &[Matrix]) -> Matrix {
    let k = mats.len();
    let mut gram = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = trace_of_product(&mats[i], &mats[j]);
            gram.set(i, j, t.clone());
            gram.set(j, i, t);
        }
    }
    gram.kernel_basis()
}

fn trace_of_product(a: &Matrix, b: &Matrix) -> Scalar {
    let n = a.rows();
    let mut acc = Scalar::zero();
    for r in 0..n {
        for c in 0..a.cols() {
            let x = a.get(r, c);
            if x.is_zero() {
                continue;
            }
            let y = b.get(c, r);
            if !y.is_zero() {
                acc += &(x * y);
            }
        }
    }
    acc
}

/// Multiplicities of the indecomposable summands of the left regular module,
/// largest first.
pub fn regular_multiplicities(alg: &Arc<Algebra>) -> Result<Vec<usize>> {
    let (reg, _) = crate::repmod::Representation::regular(alg.clone())?;
    let mut out: Vec<usize> = crate::repmod::decompose(&reg)?
        .into_iter()
        .map(|(_, k)| k)
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Isomorphism classes of indecomposable summands of the left regular module.
pub fn count_simple_modules(alg: &Arc<Algebra>) -> Result<usize> {
    Ok(regular_multiplicities(alg)?.len())
}

/// The zero ring.
pub fn zero_algebra(name: impl Into<String>, field: FieldMode) -> Algebra {
    Algebra::from_structure_constants(name, field, Vec::new(), &[], Vec::new(), Vec::new())
        .expect("the zero ring is an algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn alg_a() -> AlgebraPresentation {
        AlgebraPresentation {
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
        }
    }

    fn loop_algebra(relation: bool) -> AlgebraPresentation {
        AlgebraPresentation {
            name: "loop".into(),
            quiver: Quiver {
                vertices: vec!["1".into()],
                arrows: vec![Arrow {
                    name: "x".into(),
                    source: 0,
                    target: 0,
                }],
            },
            relations: if relation {
                vec![Relation {
                    terms: vec![(Scalar::one(), vec![0, 0])],
                }]
            } else {
                vec![]
            },
        }
    }

    #[test]
    fn alg_a_basis() {
        let a = build_algebra(&alg_a(), DEFAULT_LENGTH_CAP, FieldMode::Rational).unwrap();
        assert_eq!(a.labels(), &["e1", "e2", "e3", "a", "b"]);
        let (alpha, beta) = (a.basis_element(3), a.basis_element(4));
        assert!(a.multiply(&beta, &alpha).iter().all(Scalar::is_zero));
        assert_eq!(a.multiply(&alpha, &a.basis_element(0)), alpha);
    }

    #[test]
    fn a2_and_dual_numbers() {
        let mut p = alg_a();
        p.quiver.vertices.pop();
        p.quiver.arrows.pop();
        p.relations.clear();
        assert_eq!(build_algebra(&p, 64, FieldMode::Rational).unwrap().dim(), 3);
        let d = build_algebra(&loop_algebra(true), 64, FieldMode::Rational).unwrap();
        assert_eq!(d.labels(), &["e1", "x"]);
    }

    #[test]
    fn infinite_dimensional_is_rejected() {
        assert!(matches!(
            build_algebra(&loop_algebra(false), 8, FieldMode::Rational),
            Err(Error::NotFiniteDimensional(8))
        ));
    }

    #[test]
    fn malformed_relation_is_rejected() {
        let mut p = alg_a();
        p.relations = vec![Relation {
            terms: vec![(Scalar::one(), vec![1, 0])],
        }];
        assert!(matches!(
            build_algebra(&p, 8, FieldMode::Rational),
            Err(Error::MalformedRelation(_))
        ));
    }

    #[test]
    fn non_monomial_relation() {
        // commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with ba = dc
        let p = AlgebraPresentation {
            name: "square".into(),
            quiver: Quiver {
                vertices: ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect(),
                arrows: vec![
                    Arrow {
                        name: "a".into(),
                        source: 0,
                        target: 1,
                    },
                    Arrow {
                        name: "b".into(),
                        source: 1,
                        target: 3,
                    },
                    Arrow {
                        name: "c".into(),
                        source: 0,
                        target: 2,
                    },
                    Arrow {
                        name: "d".into(),
                        source: 2,
                        target: 3,
                    },
                ],
            },
            relations: vec![Relation {
                terms: vec![
                    (Scalar::one(), vec![0, 1]),
                    (Scalar::from_i64(-1), vec![2, 3]),
                ],
            }],
        };
        let a = build_algebra(&p, 64, FieldMode::Rational).unwrap();
        assert_eq!(a.dim(), 9);
        let ba = a.multiply(
            &a.basis_element(a.quiver().unwrap().arrow_basis[1]),
            &a.basis_element(a.quiver().unwrap().arrow_basis[0]),
        );
        let dc = a.multiply(
            &a.basis_element(a.quiver().unwrap().arrow_basis[3]),
            &a.basis_element(a.quiver().unwrap().arrow_basis[2]),
        );
        assert_eq!(ba, dc);
        assert!(ba.iter().any(|x| !x.is_zero()));
    }

    #[test]
    fn opposite_is_involutive() {
        let a = Arc::new(build_algebra(&alg_a(), 64, FieldMode::Rational).unwrap());
        let op = a.opposite();
        assert_eq!(op.dim(), 5);
        assert_eq!(op.quiver().unwrap().quiver.arrows[0].source, 1);
        let opop = op.opposite();
        assert!(Arc::ptr_eq(&opop, &a));
        let fresh = Arc::new(build_algebra(&alg_a(), 64, FieldMode::Rational).unwrap());
        assert_eq!(*fresh.opposite().opposite(), *fresh);
    }

    #[test]
    fn quotient_and_radical() {
        let a = build_algebra(&alg_a(), 64, FieldMode::Rational).unwrap();
        let (q, proj) = a.quotient_by_ideal(&[a.basis_element(4)]).unwrap();
        assert_eq!(q.dim(), 4);
        assert_eq!(proj.rows(), 4);
        let (same, _) = a.quotient_by_ideal(&[vec![Scalar::zero(); 5]]).unwrap();
        assert_eq!(same.dim(), 5);
        let (zero, _) = a.quotient_by_ideal(&[a.unit().to_vec()]).unwrap();
        assert_eq!(zero.dim(), 0);

        let rad = a.jacobson_radical().unwrap();
        assert_eq!(rad.cols(), 2);
        assert!(a.is_two_sided_ideal(&rad));
        let d = build_algebra(&loop_algebra(true), 64, FieldMode::Rational).unwrap();
        assert_eq!(
            d.jacobson_radical().unwrap().columns(),
            vec![d.basis_element(1)]
        );
    }

    #[test]
    fn prime_mode_has_no_radical() {
        let a = build_algebra(&alg_a(), 64, FieldMode::Prime(7)).unwrap();
        assert!(matches!(
            a.jacobson_radical(),
            Err(Error::UnsupportedCharacteristic)
        ));
    }

    fn matrix_unit(n: usize, r: usize, c: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        m.set(r, c, Scalar::one());
        m
    }

    #[test]
    fn simple_counts() {
        let blocks = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)];
        let basis: Vec<Matrix> = blocks.iter().map(|&(r, c)| matrix_unit(3, r, c)).collect();
        let m2k = Arc::new(
            Algebra::from_matrix_basis("M2xK", FieldMode::Rational, &basis, &[], false).unwrap(),
        );
        assert_eq!(count_simple_modules(&m2k).unwrap(), 2);
        assert_eq!(regular_multiplicities(&m2k).unwrap(), vec![2, 1]);

        let diag: Vec<Matrix> = (0..3).map(|i| matrix_unit(3, i, i)).collect();
        let k3 = Arc::new(
            Algebra::from_matrix_basis("K3", FieldMode::Rational, &diag, &[], false).unwrap(),
        );
        assert_eq!(count_simple_modules(&k3).unwrap(), 3);

        let a = Arc::new(build_algebra(&alg_a(), 64, FieldMode::Rational).unwrap());
        assert_eq!(count_simple_modules(&a).unwrap(), 3);
        let zero = Arc::new(zero_algebra("0", FieldMode::Rational));
        assert_eq!(count_simple_modules(&zero).unwrap(), 0);
    }
}
