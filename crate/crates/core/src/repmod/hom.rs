use super::{generator_ends, ModuleMap, Representation};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::exactlin::{Matrix, Scalar};

fn intertwining_system(m: &Representation, n: &Representation) -> (Matrix, Vec<usize>) {
    let dm = m.dims();
    let dn = n.dims();
    let mut unknown_offset = Vec::with_capacity(dm.len());
    let mut count = 0;
    for s in 0..dm.len() {
        unknown_offset.push(count);
        count += dn[s] * dm[s];
    }
    let mut rows = Vec::new();
    for (g, &(s, t)) in generator_ends(m.algebra()).iter().enumerate() {
        let mg = m.map(g);
        let ng = n.map(g);
        // X_t M_g - N_g X_s = 0, entry (i, j)
        for i in 0..dn[t] {
            for j in 0..dm[s] {
                let mut row = vec![Scalar::zero(); count];
                for k in 0..dm[t] {
                    let c = mg.get(k, j);
                    if !c.is_zero() {
                        let idx = unknown_offset[t] + i * dm[t] + k;
                        row[idx] = &row[idx] + c;
                    }
                }
                for k in 0..dn[s] {
                    let c = ng.get(i, k);
                    if !c.is_zero() {
                        let idx = unknown_offset[s] + k * dm[s] + j;
                        row[idx] = &row[idx] - c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, count)
    } else {
        Matrix::from_rows(rows)
    };
    (system, unknown_offset)
}

/// Basis of `Hom(M, N)`. Over a quiver algebra the unknowns are the images of
/// top generators of `M`; otherwise every slot matrix is unknown.
pub fn hom_basis(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    assert!(
        super::same_algebra(m.algebra(), n.algebra()),
        "Hom between modules over different algebras"
    );
    if m.is_zero() || n.is_zero() {
        return Vec::new();
    }
    if m.algebra().quiver().is_some() {
        return presented_hom(m, n);
    }
    intertwining_hom(m, n)
}

pub(crate) fn intertwining_hom(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    let (system, offset) = intertwining_system(m, n);
    let kernel = system.kernel_basis();
    let dm = m.dims();
    let dn = n.dims();
    (0..kernel.cols())
        .map(|c| {
            let v = kernel.column(c);
            let blocks = (0..dm.len())
                .map(|s| {
                    Matrix::new(
                        dn[s],
                        dm[s],
                        v[offset[s]..offset[s] + dn[s] * dm[s]].to_vec(),
                    )
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), blocks)
        })
        .collect()
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    if m.is_zero() || n.is_zero() {
        return 0;
    }
    if m.algebra().quiver().is_some() {
        return presented_hom(m, n).len();
    }
    let (system, _) = intertwining_system(m, n);
    system.cols() - system.rank()
}

/// A spanning family `p·g` of `M` at one vertex, with `g` running over top
/// generators and `p` over basis paths out of the generator's vertex.
struct Spanning {
    /// (generator, basis path) per column of `matrix`.
    labels: Vec<(usize, usize)>,
    matrix: Matrix,
}

fn presented_hom(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    let alg = m.algebra();
    let q = alg.quiver().expect("quiver algebra");
    let slots = m.dims().len();
    let mut gens: Vec<(usize, usize)> = Vec::new();
    for v in 0..slots {
        let incoming: Vec<&Matrix> = q
            .quiver
            .arrows
            .iter()
            .enumerate()
            .filter(|(_, a)| a.target == v)
            .map(|(g, _)| m.map(g))
            .collect();
        let rad = if incoming.is_empty() {
            Matrix::zeros(m.dims()[v], 0)
        } else {
            Matrix::hstack(&incoming)
        };
        gens.extend(rad.complement_units().into_iter().map(|c| (v, c)));
    }
    let m_paths: Vec<Matrix> = (0..alg.dim())
        .map(|b| m.path_matrix(&q.paths[b], q.ends[b].0))
        .collect();
    let n_paths: Vec<Matrix> = (0..alg.dim())
        .map(|b| n.path_matrix(&q.paths[b], q.ends[b].0))
        .collect();
    let spanning: Vec<Spanning> = (0..slots)
        .map(|v| {
            let mut labels = Vec::new();
            let mut cols = Vec::new();
            for (k, &(i, c)) in gens.iter().enumerate() {
                for b in (0..alg.dim()).filter(|&b| q.ends[b] == (i, v)) {
                    labels.push((k, b));
                    cols.push(m_paths[b].column(c));
                }
            }
            let matrix = if cols.is_empty() {
                Matrix::zeros(m.dims()[v], 0)
            } else {
                Matrix::from_columns(m.dims()[v], &cols)
            };
            Spanning { labels, matrix }
        })
        .collect();

    let mut offset = Vec::with_capacity(gens.len());
    let mut unknowns = 0;
    for &(i, _) in &gens {
        offset.push(unknowns);
        unknowns += n.dims()[i];
    }
    // Each linear relation among the spanning vectors must hold among the images.
    let mut rows = Vec::new();
    for (v, sp) in spanning.iter().enumerate() {
        let kernel = sp.matrix.kernel_basis();
        for w in kernel.columns() {
            for r in 0..n.dims()[v] {
                let mut row = vec![Scalar::zero(); unknowns];
                for (j, coeff) in w.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (k, b) = sp.labels[j];
                    let np = &n_paths[b];
                    for c in 0..np.cols() {
                        let e = np.get(r, c);
                        if !e.is_zero() {
                            let idx = offset[k] + c;
                            row[idx] = &row[idx] + &(coeff * e);
                        }
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, unknowns)
    } else {
        Matrix::from_rows(rows)
    };
    let solutions = system.kernel_basis();

    let bases: Vec<(Vec<usize>, Matrix)> = spanning
        .iter()
        .map(|sp| {
            let pivots = sp.matrix.rref().pivots;
            if pivots.is_empty() {
                return (pivots, Matrix::zeros(0, 0));
            }
            let inv = sp
                .matrix
                .select_columns(&pivots)
                .inverse()
                .expect("spanning family has full rank");
            (pivots, inv)
        })
        .collect();
    solutions
        .columns()
        .into_iter()
        .map(|y| {
            let blocks = (0..slots)
                .map(|v| {
                    let (pivots, inv) = &bases[v];
                    let images: Vec<Vec<Scalar>> = pivots
                        .iter()
                        .map(|&j| {
                            let (k, b) = spanning[v].labels[j];
                            let i = gens[k].0;
                            n_paths[b].apply(&y[offset[k]..offset[k] + n.dims()[i]])
                        })
                        .collect();
                    if images.is_empty() {
                        Matrix::zeros(n.dims()[v], m.dims()[v])
                    } else {
                        Matrix::from_columns(n.dims()[v], &images).mul(inv)
                    }
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), blocks)
        })
        .collect()
}

/// Sum of the images of all maps from members of `w` into `x`.
pub fn trace_submodule(w: &[Representation], x: &Representation) -> (Representation, ModuleMap) {
    let mut per_slot: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); x.dims().len()];
    for y in w {
        for f in hom_basis(y, x) {
            for (s, b) in f.blocks().iter().enumerate() {
                per_slot[s].extend(
                    b.columns()
                        .into_iter()
                        .filter(|c| c.iter().any(|e| !e.is_zero())),
                );
            }
        }
    }
    let basis = per_slot
        .into_iter()
        .zip(x.dims())
        .map(|(cols, &d)| {
            if cols.is_empty() {
                Matrix::zeros(d, 0)
            } else {
                Matrix::from_columns(d, &cols).column_space()
            }
        })
        .collect();
    x.submodule(basis)
}

/// The `g` with `inclusion ∘ g = f`, when the image of `f` lies in that of the
/// injective map `inclusion`.
pub fn factor_through_injection(inclusion: &ModuleMap, f: &ModuleMap) -> Option<ModuleMap> {
    let blocks = inclusion
        .blocks()
        .iter()
        .zip(f.blocks())
        .map(|(i, b)| i.solve_matrix(b))
        .collect::<Option<Vec<_>>>()?;
    Some(ModuleMap::new_unchecked(
        f.source.clone(),
        inclusion.source.clone(),
        blocks,
    ))
}

/// The `g` with `g ∘ surjection = f`, when `f` vanishes on the kernel.
pub fn factor_through_surjection(surjection: &ModuleMap, f: &ModuleMap) -> Option<ModuleMap> {
    let blocks = surjection
        .blocks()
        .iter()
        .zip(f.blocks())
        .map(|(p, b)| {
            p.transpose()
                .solve_matrix(&b.transpose())
                .map(|x| x.transpose())
        })
        .collect::<Option<Vec<_>>>()?;
    Some(ModuleMap::new_unchecked(
        surjection.target.clone(),
        f.target.clone(),
        blocks,
    ))
}

/// `End(M)` as an abstract algebra on a Hom basis, optionally opposite.
pub fn endomorphism_algebra(
    m: &Representation,
    opposite: bool,
) -> Result<(Algebra, Vec<ModuleMap>)> {
    let basis = hom_basis(m, m);
    let mats: Vec<Matrix> = basis.iter().map(ModuleMap::total_matrix).collect();
    let name = if opposite { "End^op" } else { "End" };
    let alg = Algebra::from_matrix_basis(name, m.algebra().field(), &mats, &[], opposite)?;
    Ok((alg, basis))
}

/// For indecomposable `x` and `y`, an isomorphism `x -> y` if one exists: some
/// composite `g ∘ f` of basis maps is not nilpotent exactly when they are
/// isomorphic, and then `f` is split injective between equal dimensions.
pub fn indecomposable_isomorphism(x: &Representation, y: &Representation) -> Option<ModuleMap> {
    if x.dims() != y.dims() {
        return None;
    }
    if x.is_zero() {
        return Some(ModuleMap::zero(x.clone(), y.clone()));
    }
    let forward = hom_basis(x, y);
    if forward.is_empty() {
        return None;
    }
    if let Some(f) = forward.iter().find(|f| f.is_isomorphism()) {
        return Some(f.clone());
    }
    let backward = hom_basis(y, x);
    for f in &forward {
        for g in &backward {
            if !g.after(f).total_matrix().is_nilpotent() {
                return Some(f.clone());
            }
        }
    }
    None
}

pub(crate) fn end_radical(m: &Representation) -> (Vec<ModuleMap>, Matrix) {
    let basis = hom_basis(m, m);
    let mats: Vec<Matrix> = basis.iter().map(ModuleMap::total_matrix).collect();
    let rad = crate::algebra::trace_radical(&mats);
    (basis, rad)
}

/// `dim End(M) / rad End(M)`; 1 exactly for modules with local, split endomorphism ring.
pub fn end_top_dim(m: &Representation) -> usize {
    let (basis, rad) = end_radical(m);
    basis.len() - rad.cols()
}

pub(crate) fn combine(basis: &[ModuleMap], coeffs: &[Scalar]) -> ModuleMap {
    let mut acc = ModuleMap::zero(basis[0].source.clone(), basis[0].target.clone());
    for (f, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&f.scale(c));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::tests::alg_a;
    use crate::repmod::{projective_module, simple_module};

    #[test]
    fn hom_dimensions_in_alg_a() {
        let a = alg_a();
        let p1 = projective_module(&a, 0);
        let s1 = simple_module(&a, 0);
        let s2 = simple_module(&a, 1);
        assert_eq!(hom_dim(&p1, &s1), 1);
        assert_eq!(hom_dim(&s1, &s2), 0);
        assert_eq!(hom_dim(&s1, &s1), 1);
        assert_eq!(hom_basis(&p1, &s1).len(), 1);
    }

    #[test]
    fn traces_in_alg_a() {
        let a = alg_a();
        let p1 = projective_module(&a, 0);
        let s1 = simple_module(&a, 0);
        assert!(trace_submodule(std::slice::from_ref(&s1), &p1).0.is_zero());
        assert_eq!(trace_submodule(std::slice::from_ref(&p1), &s1).0.dims(), s1.dims());
        assert_eq!(trace_submodule(std::slice::from_ref(&p1), &p1).0.dims(), p1.dims());
    }

    #[test]
    fn projective_hom_dimension_matches_slot() {
        let a = alg_a();
        let (reg, _) = Representation::regular(a.clone()).unwrap();
        for i in 0..3 {
            assert_eq!(hom_dim(&projective_module(&a, i), &reg), reg.dims()[i]);
        }
    }

    #[test]
    fn generator_images_agree_with_intertwiners() {
        let a = alg_a();
        let (reg, _) = Representation::regular(a.clone()).unwrap();
        let mut modules = vec![reg.clone()];
        modules.extend((0..3).map(|i| simple_module(&a, i)));
        modules.extend((0..3).map(|i| projective_module(&a, i)));
        modules.push(Representation::direct_sum(&[
            crate::repmod::injective_module(&a, 2),
            simple_module(&a, 1),
        ]));
        for x in &modules {
            for y in &modules {
                let fast = hom_basis(x, y);
                assert_eq!(fast.len(), intertwining_hom(x, y).len());
                for f in fast {
                    assert!(ModuleMap::new(x.clone(), y.clone(), f.blocks().to_vec()).is_ok());
                }
            }
        }
    }
}
