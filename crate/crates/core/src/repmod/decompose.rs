//! Fitting decomposition into indecomposable summands.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{combine, end_radical, end_top_dim, hom_basis, indecomposable_isomorphism};
use super::{ModuleMap, Representation};
use crate::algebra::FieldMode;
use crate::error::{Error, Result};
use crate::exactlin::{coprime_split, Matrix, Scalar};

const SPLIT_SEED: u64 = 0x5eed_f177;
const RANDOM_ATTEMPTS: usize = 256;

#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Representation,
    pub inclusion: ModuleMap,
}

fn require_char_zero(m: &Representation) -> Result<()> {
    match m.algebra().field() {
        FieldMode::Rational => Ok(()),
        FieldMode::Prime(_) => Err(Error::UnsupportedCharacteristic),
    }
}

/// Try one endomorphism: per-slot generalised eigenspaces when its minimal
/// polynomial has at least two coprime factors.
fn split_by(phi: &ModuleMap) -> Option<Vec<Vec<Matrix>>> {
    let factors = coprime_split(&phi.total_matrix());
    if factors.len() < 2 {
        return None;
    }
    Some(
        factors
            .iter()
            .map(|f| {
                phi.blocks()
                    .iter()
                    .map(|b| f.factor.eval_matrix(b).kernel_basis())
                    .collect()
            })
            .collect(),
    )
}

/// Basis endomorphisms whose class modulo the radical is not a scalar, in
/// basis order. These are the ones that can have two coprime factors.
fn non_scalar_modulo_radical(
    basis: &[ModuleMap],
    rad: &Matrix,
    identity: &ModuleMap,
) -> Vec<usize> {
    let len = identity.flatten().len();
    let flat: Vec<Vec<Scalar>> = basis.iter().map(ModuleMap::flatten).collect();
    let Some(id) = Matrix::from_columns(len, &flat).solve(&identity.flatten()) else {
        return (0..basis.len()).collect();
    };
    let mut span: Vec<Vec<Scalar>> = rad.columns();
    span.push(id);
    let base_rank = crate::exactlin::span_rank(basis.len(), &span);
    (0..basis.len())
        .filter(|&i| {
            let mut with = span.clone();
            with.push(crate::algebra::unit_vector(basis.len(), i));
            crate::exactlin::span_rank(basis.len(), &with) > base_rank
        })
        .collect()
}

fn find_split(m: &Representation) -> Result<Option<Vec<Vec<Matrix>>>> {
    let (basis, rad) = end_radical(m);
    if basis.len() - rad.cols() == 1 {
        return Ok(None);
    }
    for i in non_scalar_modulo_radical(&basis, &rad, &m.identity()) {
        if let Some(parts) = split_by(&basis[i]) {
            return Ok(Some(parts));
        }
    }
    for f in &basis {
        if let Some(parts) = split_by(f) {
            return Ok(Some(parts));
        }
    }
    for f in &basis {
        for g in &basis {
            if let Some(parts) = split_by(&f.after(g)) {
                return Ok(Some(parts));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    for _ in 0..RANDOM_ATTEMPTS {
        let coeffs: Vec<Scalar> = (0..basis.len())
            .map(|_| Scalar::from_i64(rng.gen_range(-3..=3)))
            .collect();
        if let Some(parts) = split_by(&combine(&basis, &coeffs)) {
            return Ok(Some(parts));
        }
    }
    Err(Error::NonSplitEndomorphism(m.dimension_vector()))
}

/// Indecomposable summands with their inclusions into `m`.
pub fn split_indecomposables(m: &Representation) -> Result<Vec<Summand>> {
    require_char_zero(m)?;
    let mut done = Vec::new();
    let mut work = vec![Summand {
        module: m.clone(),
        inclusion: m.identity(),
    }];
    while let Some(s) = work.pop() {
        if s.module.is_zero() {
            continue;
        }
        match find_split(&s.module)? {
            None => done.push(s),
            Some(parts) => {
                for basis in parts.into_iter().rev() {
                    let (sub, inc) = s.module.submodule(basis);
                    work.push(Summand {
                        module: sub,
                        inclusion: s.inclusion.after(&inc),
                    });
                }
            }
        }
    }
    Ok(done)
}

pub fn is_indecomposable(m: &Representation) -> Result<bool> {
    require_char_zero(m)?;
    if m.is_zero() {
        return Ok(false);
    }
    Ok(find_split(m)?.is_none())
}

/// Isomorphism classes of indecomposable summands with multiplicities, in
/// order of first appearance.
pub fn decompose(m: &Representation) -> Result<Vec<(Representation, usize)>> {
    Ok(classes(split_indecomposables(m)?))
}

fn classes(summands: Vec<Summand>) -> Vec<(Representation, usize)> {
    let mut classes: Vec<(Representation, usize)> = Vec::new();
    for s in summands {
        match classes.iter_mut().find(|(x, _)| {
            x.dims() == s.module.dims() && indecomposable_isomorphism(x, &s.module).is_some()
        }) {
            Some(entry) => entry.1 += 1,
            None => classes.push((s.module, 1)),
        }
    }
    classes
}

/// `f : l -> m` and `g : m -> l` with `g ∘ f = 1`, when the indecomposable
/// `l` is a summand of `m`.
/// `tr(g ∘ f)` without forming the composite.
fn pairing_trace(g: &ModuleMap, f: &ModuleMap) -> Scalar {
    let mut t = Scalar::zero();
    for (gb, fb) in g.blocks().iter().zip(f.blocks()) {
        for i in 0..gb.rows() {
            for j in 0..gb.cols() {
                let a = gb.get(i, j);
                if !a.is_zero() {
                    let b = fb.get(j, i);
                    if !b.is_zero() {
                        t = t + a.clone() * b.clone();
                    }
                }
            }
        }
    }
    t
}

fn split_pair(l: &Representation, m: &Representation) -> Option<(ModuleMap, ModuleMap)> {
    if l.dims().iter().zip(m.dims()).any(|(a, b)| a > b) {
        return None;
    }
    let forward = hom_basis(l, m);
    if forward.is_empty() {
        return None;
    }
    let backward = hom_basis(m, l);
    if backward.is_empty() {
        return None;
    }
    let mut found = None;
    if end_top_dim(l) == 1 {
        // `g ∘ f` is a scalar plus a nilpotent, so its trace decides.
        'trace: for f in &forward {
            for g in &backward {
                if !pairing_trace(g, f).is_zero() {
                    found = Some((f.clone(), g.clone()));
                    break 'trace;
                }
            }
        }
    } else {
        let invertible = |c: &ModuleMap| {
            let t = c.total_matrix();
            !t.trace().is_zero() || !t.is_nilpotent()
        };
        'search: for f in &forward {
            for g in &backward {
                if invertible(&g.after(f)) {
                    found = Some((f.clone(), g.clone()));
                    break 'search;
                }
            }
        }
        if found.is_none() {
            let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
            for _ in 0..RANDOM_ATTEMPTS {
                let mut draw = |n: usize| -> Vec<Scalar> {
                    (0..n)
                        .map(|_| Scalar::from_i64(rng.gen_range(-3..=3)))
                        .collect()
                };
                let f = combine(&forward, &draw(forward.len()));
                let g = combine(&backward, &draw(backward.len()));
                if invertible(&g.after(&f)) {
                    found = Some((f, g));
                    break;
                }
            }
        }
    }
    let (f, g) = found?;
    let c = g.after(&f).total_matrix();
    let inv = ModuleMap::from_total(
        l.clone(),
        l.clone(),
        &c.inverse().expect("local endomorphism"),
    );
    Some((f, inv.after(&g)))
}

/// Like [`split_indecomposables`], first splitting off one copy of each
/// indecomposable in `known` that turns out to be a summand.
pub fn split_with_known(m: &Representation, known: &[Representation]) -> Result<Vec<Summand>> {
    require_char_zero(m)?;
    let mut done = Vec::new();
    let mut rest = Summand {
        module: m.clone(),
        inclusion: m.identity(),
    };
    for l in known {
        if l.is_zero() || rest.module.is_zero() {
            continue;
        }
        if let Some((f, g)) = split_pair(l, &rest.module) {
            let (k, inc) = g.kernel();
            done.push(Summand {
                module: l.clone(),
                inclusion: rest.inclusion.after(&f),
            });
            rest = Summand {
                module: k,
                inclusion: rest.inclusion.after(&inc),
            };
        }
    }
    for s in split_indecomposables(&rest.module)? {
        done.push(Summand {
            module: s.module,
            inclusion: rest.inclusion.after(&s.inclusion),
        });
    }
    Ok(done)
}

/// [`decompose`] seeded with likely summands.
pub fn decompose_with_known(
    m: &Representation,
    known: &[Representation],
) -> Result<Vec<(Representation, usize)>> {
    Ok(classes(split_with_known(m, known)?))
}

pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    Ok(dm.iter().all(|(x, k)| {
        dn.iter()
            .any(|(y, l)| k == l && indecomposable_isomorphism(x, y).is_some())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repmod::tests::alg_a;
    use crate::repmod::{projective_module, simple_module};

    #[test]
    fn two_copies_of_p1() {
        let a = alg_a();
        let p1 = projective_module(&a, 0);
        let d = decompose(&Representation::direct_sum(&[p1.clone(), p1.clone()])).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 2);
        assert!(is_isomorphic(&d[0].0, &p1).unwrap());
    }

    #[test]
    fn regular_module_splits_into_projectives() {
        let a = alg_a();
        let (reg, _) = Representation::regular(a.clone()).unwrap();
        let d = decompose(&reg).unwrap();
        assert_eq!(d.len(), 3);
        for i in 0..3 {
            let p = projective_module(&a, i);
            assert!(d
                .iter()
                .any(|(x, k)| *k == 1 && is_isomorphic(x, &p).unwrap()));
        }
        let sum = Representation::direct_sum(&d.iter().map(|(x, _)| x.clone()).collect::<Vec<_>>());
        assert!(is_isomorphic(&sum, &reg).unwrap());
    }

    #[test]
    fn simple_is_indecomposable() {
        let a = alg_a();
        let s1 = simple_module(&a, 0);
        assert!(is_indecomposable(&s1).unwrap());
        let d = decompose(&s1).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].1, 1);
    }
}
