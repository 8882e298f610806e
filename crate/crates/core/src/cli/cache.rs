//! Census cache: indecomposables stored as per-arrow matrices, keyed by a
//! hash of the normalised presentation and the caps.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::algebra::Algebra;
use crate::census::{Caps, Census};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::repmod::Representation;

#[derive(Serialize, Deserialize)]
struct StoredModule {
    dims: Vec<usize>,
    /// Per arrow, rows of entries.
    maps: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
struct Stored {
    schema: u32,
    key: String,
    modules: Vec<StoredModule>,
}

pub fn key(normal: &str, caps: Caps, length_cap: usize, field: &str) -> String {
    let mut h = Sha256::new();
    h.update(normal.as_bytes());
    h.update(
        format!(
            "dim_cap={}\ncount_cap={}\nlength_cap={length_cap}\nfield={field}\n",
            caps.dim_cap, caps.count_cap
        )
        .as_bytes(),
    );
    hex::encode(h.finalize())
}

fn corrupt(message: String) -> Error {
    Error::InvalidRepresentation(format!("cache entry: {message}"))
}

pub fn load(dir: &Path, key: &str, alg: &Arc<Algebra>, caps: Caps) -> Result<Option<Census>> {
    let path = dir.join(format!("{key}.json"));
    let Ok(text) = std::fs::read_to_string(&path) else {
        return Ok(None);
    };
    let stored: Stored = serde_json::from_str(&text).map_err(|e| corrupt(e.to_string()))?;
    if stored.schema != super::SCHEMA_VERSION || stored.key != key {
        return Ok(None);
    }
    let mut modules = Vec::with_capacity(stored.modules.len());
    for m in stored.modules {
        let maps = m
            .maps
            .into_iter()
            .map(|rows| {
                rows.into_iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| s.parse::<Scalar>().map_err(|e| corrupt(e.0)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let arrows = alg.quiver().map_or(0, |q| q.quiver.arrows.len());
        if maps.len() != arrows {
            return Err(corrupt("arrow count mismatch".into()));
        }
        let ends: Vec<(usize, usize)> = alg
            .quiver()
            .map(|q| q.quiver.arrows.iter().map(|a| (a.source, a.target)).collect())
            .unwrap_or_default();
        let maps = maps
            .into_iter()
            .zip(ends)
            .map(|(rows, (s, t))| {
                if rows.is_empty() {
                    Matrix::zeros(m.dims[t], m.dims[s])
                } else {
                    Matrix::from_rows(rows)
                }
            })
            .collect();
        modules.push(Representation::new(alg.clone(), m.dims, maps)?);
    }
    Ok(Some(Census::from_modules(alg, modules, caps)))
}

pub fn store(dir: &Path, key: &str, c: &Census) -> Result<()> {
    let modules = c
        .items()
        .iter()
        .map(|item| StoredModule {
            dims: item.module.dims().to_vec(),
            maps: item
                .module
                .maps()
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
                        .collect()
                })
                .collect(),
        })
        .collect();
    let stored = Stored {
        schema: super::SCHEMA_VERSION,
        key: key.into(),
        modules,
    };
    let write = || -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        let tmp = dir.join(format!("{key}.json.tmp"));
        std::fs::write(&tmp, serde_json::to_string(&stored).expect("json"))?;
        std::fs::rename(tmp, dir.join(format!("{key}.json")))
    };
    write().map_err(|e| corrupt(format!("cannot write cache: {e}")))
}
