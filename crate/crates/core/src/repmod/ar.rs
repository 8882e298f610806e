//! Auslander–Reiten translates, first extension groups and almost split
//! sequences.

use super::decompose::decompose_with_known;
use super::hom::{
    combine, end_radical, factor_through_injection, factor_through_surjection, hom_basis,
};
use super::projective::{idempotent_coordinates, minimal_presentation, Presentation};
use super::{direct_sum_with_maps, ModuleMap, Representation, ShortExactSequence};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};

/// `τM = D Tr M`, the kernel of `ν(σ)` for the minimal presentation `σ`.
pub fn tau(m: &Representation) -> Result<Representation> {
    if m.is_zero() {
        return Ok(m.clone());
    }
    let p = minimal_presentation(m)?;
    let transposed = p.projective_map().transpose();
    let op = m.algebra().opposite();
    let (_, _, f) = transposed.realise(&op);
    Ok(f.dual().kernel().0)
}

/// `τ⁻M = D τ (D M)`, computed over the opposite algebra.
pub fn tau_minus(m: &Representation) -> Result<Representation> {
    Ok(tau(&m.dual())?.dual())
}

/// `Ext¹(M, N)` as `Hom(ΩM, N)` modulo maps extending to the projective cover.
///
/// Cochains are compared through their values on the generators of `ΩM`
/// coming from `P1`, which identifies `Hom(ΩM, N)` with a subspace of
/// `Hom(P1, N) = ⊕ e_j N`; coboundaries are then the image of `Hom(σ, N)`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub presentation: Presentation,
    pub target: Representation,
    /// Basis of `Hom(ΩM, N)`.
    pub cochains: Vec<ModuleMap>,
    /// Cochains representing a basis of the extension group.
    pub cocycles: Vec<ModuleMap>,
    generators: Vec<Vec<Scalar>>,
    /// Columns spanning the coboundaries, in generator coordinates.
    coboundaries: Matrix,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.cocycles.len()
    }

    /// Values of a cochain on the generators of the syzygy.
    pub fn coordinates(&self, c: &ModuleMap) -> Vec<Scalar> {
        let total = c.total_matrix();
        let mut out = Vec::new();
        for (g, &j) in self.generators.iter().zip(self.presentation.p1.vertices()) {
            out.extend(idempotent_coordinates(&self.target, j, &total.apply(g)));
        }
        out
    }

    pub fn is_coboundary(&self, c: &ModuleMap) -> bool {
        let v = self.coordinates(c);
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        self.coboundaries.cols() > 0 && self.coboundaries.solve(&v).is_some()
    }

    /// Coordinates of the classes of `cs` in the basis `cocycles`.
    pub fn classes(&self, cs: &[ModuleMap]) -> Matrix {
        let e = self.dim();
        if cs.is_empty() || e == 0 {
            return Matrix::zeros(e, cs.len());
        }
        let len = self.coboundaries.rows();
        let mut basis = if self.coboundaries.cols() == 0 {
            Vec::new()
        } else {
            self.coboundaries.column_space().columns()
        };
        let b = basis.len();
        basis.extend(self.cocycles.iter().map(|c| self.coordinates(c)));
        let targets: Vec<Vec<Scalar>> = cs.iter().map(|c| self.coordinates(c)).collect();
        let x = Matrix::from_columns(len, &basis)
            .solve_matrix(&Matrix::from_columns(len, &targets))
            .expect("cochains lie in the span of coboundaries and cocycles");
        x.select_rows(&(b..b + e).collect::<Vec<_>>())
    }
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext1> {
    let presentation = minimal_presentation(m)?;
    let cochains = hom_basis(&presentation.syzygy, n);
    let cover = presentation.syzygy_cover.total_matrix();
    let generators: Vec<Vec<Scalar>> = (0..presentation.p1.vertices().len())
        .map(|l| cover.apply(presentation.p1.generator(l)))
        .collect();
    let coboundaries = presentation.projective_map().hom_matrix(n);
    let mut ext = Ext1 {
        presentation,
        target: n.clone(),
        cochains,
        cocycles: Vec::new(),
        generators,
        coboundaries,
    };
    if !ext.cochains.is_empty() {
        let b = ext.coboundaries.cols();
        let mut columns = ext.coboundaries.columns();
        columns.extend(ext.cochains.iter().map(|c| ext.coordinates(c)));
        let pivots = Matrix::from_columns(ext.coboundaries.rows(), &columns)
            .rref()
            .pivots;
        ext.cocycles = pivots
            .into_iter()
            .filter(|&p| p >= b)
            .map(|p| ext.cochains[p - b].clone())
            .collect();
    }
    Ok(ext)
}

/// The pushout `0 -> N -> E -> M -> 0` of a cocycle `c : ΩM -> N`.
pub fn extension_middle_term(ext: &Ext1, cocycle: &ModuleMap) -> ShortExactSequence {
    let p = &ext.presentation;
    let n = &ext.target;
    let (sum, inj, proj) = direct_sum_with_maps(&[n.clone(), p.p0.rep().clone()]);
    let h = inj[0]
        .after(cocycle)
        .add(&inj[1].after(&p.syzygy_inclusion).neg());
    let image: Vec<Matrix> = h.blocks().iter().map(Matrix::column_space).collect();
    let (_, q) = sum.quotient(&image);
    let left = q.after(&inj[0]);
    let right = factor_through_surjection(&q, &p.cover.after(&proj[1]))
        .expect("cover vanishes on the relations");
    ShortExactSequence { left, right }
}

#[derive(Clone, Debug)]
pub struct ARSequence {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub sequence: ShortExactSequence,
    pub middle_summands: Vec<(Representation, usize)>,
}

/// `0 -> τX -> E -> X -> 0` from a cocycle in the socle of `Ext¹(X, τX)` as
/// a right `End(X)`-module.
pub fn almost_split_sequence(x: &Representation) -> Result<ARSequence> {
    almost_split_sequence_with(x, &[])
}

/// [`almost_split_sequence`] with indecomposables expected in the middle
/// term, which makes its decomposition cheaper when they are right.
pub fn almost_split_sequence_with(
    x: &Representation,
    known: &[Representation],
) -> Result<ARSequence> {
    let pres = minimal_presentation(x)?;
    if pres.syzygy.is_zero() {
        return Err(Error::IsProjective);
    }
    let left = tau(x)?;
    if left.is_zero() {
        return Err(Error::IsProjective);
    }
    let ext = ext1(x, &left)?;
    if ext.dim() == 0 {
        return Err(Error::InvalidRepresentation(
            "no extension of X by its translate".into(),
        ));
    }
    let (end_basis, rad) = end_radical(x);
    let radicals: Vec<ModuleMap> = rad
        .columns()
        .iter()
        .map(|c| combine(&end_basis, c))
        .collect();
    let cocycle = if radicals.is_empty() {
        ext.cocycles[0].clone()
    } else {
        socle_cocycle(&ext, &pres, &radicals)?
    };
    let sequence = extension_middle_term(&ext, &cocycle);
    let middle = sequence.middle().clone();
    let middle_summands = decompose_with_known(&middle, known)?;
    Ok(ARSequence {
        left,
        middle,
        right: x.clone(),
        sequence,
        middle_summands,
    })
}

fn socle_cocycle(ext: &Ext1, pres: &Presentation, radicals: &[ModuleMap]) -> Result<ModuleMap> {
    let restricted: Vec<ModuleMap> = radicals
        .iter()
        .map(|r| {
            let lifted = pres
                .p0
                .lift(&pres.cover, &r.after(&pres.cover))
                .expect("projective cover lifts");
            factor_through_injection(
                &pres.syzygy_inclusion,
                &lifted.after(&pres.syzygy_inclusion),
            )
            .expect("lift preserves the syzygy")
        })
        .collect();
    let e = ext.dim();
    let pulled: Vec<ModuleMap> = restricted
        .iter()
        .flat_map(|r| ext.cocycles.iter().map(move |c| c.after(r)))
        .collect();
    // Column `e*k + i` holds the class of `c_i ∘ r_k`.
    let coords = ext.classes(&pulled);
    let mut stacked = Matrix::zeros(e * restricted.len(), e);
    for k in 0..restricted.len() {
        for i in 0..e {
            for j in 0..e {
                stacked.set(e * k + j, i, coords.get(j, e * k + i).clone());
            }
        }
    }
    let socle = stacked.kernel_basis();
    if socle.cols() == 0 {
        return Err(Error::InvalidRepresentation(
            "extension socle is empty".into(),
        ));
    }
    Ok(combine(&ext.cocycles, &socle.column(0)))
}
