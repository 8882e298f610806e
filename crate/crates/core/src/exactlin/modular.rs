//! Reduced row-echelon form through a large prime with rational
//! reconstruction. A candidate is accepted only after an exact check, so the
//! result always equals the one from rational elimination.

use super::{Matrix, Rref, Scalar};

const P: u64 = (1 << 61) - 1;
/// Reconstructed numerators and denominators stay below this.
const BOUND: i128 = 1 << 30;

fn mul(a: u64, b: u64) -> u64 {
    let x = a as u128 * b as u128;
    let r = (x as u64 & P) + (x >> 61) as u64;
    if r >= P {
        r - P
    } else {
        r
    }
}

fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn inv(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, P - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

/// `n/d` with `|n|, d < BOUND` congruent to `r`, if one exists.
fn reconstruct(r: u64) -> Option<Scalar> {
    let (mut r0, mut r1) = (P as i128, r as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 >= BOUND {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() >= BOUND {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some(Scalar::ratio(n as i64, d as i64))
}

fn rref_mod(a: &mut [u64], m: usize, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for col in 0..n {
        if pr >= m {
            break;
        }
        let Some(found) = (pr..m).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if found != pr {
            for j in 0..n {
                a.swap(found * n + j, pr * n + j);
            }
        }
        let iv = inv(a[pr * n + col]);
        for j in col..n {
            a[pr * n + j] = mul(a[pr * n + j], iv);
        }
        let pivot_row: Vec<(usize, u64)> = (col..n)
            .filter(|&j| a[pr * n + j] != 0)
            .map(|j| (j, a[pr * n + j]))
            .collect();
        for r in 0..m {
            let f = a[r * n + col];
            if r == pr || f == 0 {
                continue;
            }
            for &(j, v) in &pivot_row {
                a[r * n + j] = sub(a[r * n + j], mul(f, v));
            }
        }
        pivots.push(col);
        pr += 1;
    }
    pivots
}

/// The exact reduced row-echelon form of `a`, or `None` when the modular
/// candidate cannot be confirmed.
pub(super) fn rref(a: &Matrix) -> Option<Rref> {
    let (m, n) = (a.rows(), a.cols());
    let mut residues = Vec::with_capacity(m * n);
    for s in a.entries() {
        residues.push(s.reduce_mod(P)?);
    }
    let pivots = rref_mod(&mut residues, m, n);
    let rank = pivots.len();
    let mut reduced = Matrix::zeros(m, n);
    for (row, &p) in pivots.iter().enumerate() {
        reduced.set(row, p, Scalar::one());
        for j in p + 1..n {
            let r = residues[row * n + j];
            if r != 0 {
                reduced.set(row, j, reconstruct(r)?);
            }
        }
    }
    // Rank over Q is at least the modular rank, so rows of `a` lying in the
    // row space of `reduced` pins it down as the rational form.
    let free: Vec<usize> = (0..n)
        .filter(|c| pivots.binary_search(c).is_err())
        .collect();
    let nonzero: Vec<Vec<(usize, &Scalar)>> = (0..m)
        .map(|r| {
            (0..n)
                .map(|c| (c, a.get(r, c)))
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    for &f in &free {
        let mut k: Vec<(usize, Scalar)> = vec![(f, Scalar::one())];
        for (row, &p) in pivots.iter().enumerate() {
            let v = reduced.get(row, f);
            if !v.is_zero() {
                k.push((p, -v));
            }
        }
        let mut kv = vec![Scalar::zero(); n];
        for (i, v) in k {
            kv[i] = v;
        }
        for row in &nonzero {
            let mut acc = Scalar::zero();
            for (c, v) in row {
                if !kv[*c].is_zero() {
                    acc += &(*v * &kv[*c]);
                }
            }
            if !acc.is_zero() {
                return None;
            }
        }
    }
    Some(Rref {
        reduced,
        pivots,
        rank,
    })
}
