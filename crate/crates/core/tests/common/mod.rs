//! Test-only graded Betti numbers of `k[Γ]` from squarefree divisor
//! complexes: `β_{s,j} = dim H̃_{s-1}(Δ_j)`, where `Δ_j` is the set of
//! index subsets `S` with `j - Σ_{i in S} m_i` in the semigroup.
//! Shares no code with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Membership table of the semigroup generated by `gens`, long enough to
/// contain a run of `min(gens)` consecutive members at the end.
fn membership(gens: &[u64]) -> Vec<bool> {
    let m = *gens.iter().min().unwrap() as usize;
    let mut table = vec![true];
    let mut run = 0;
    while run < m || table.len() < 2 {
        let x = table.len();
        let member = gens.iter().any(|&g| (g as usize) <= x && table[x - g as usize]);
        table.push(member);
        run = if member { run + 1 } else { 0 };
    }
    table
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone() * inv.clone();
                for k in c..ncols {
                    let v = rows[r][k].clone() * f.clone();
                    rows[i][k] -= v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced homology dimensions `dim H̃_k` for `k = -1..=dim`, of the
/// complex whose faces are the bitmasks in `faces` (closed under subsets).
fn reduced_homology(nverts: usize, faces: &[u32]) -> Vec<usize> {
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); nverts + 1];
    for &f in faces {
        by_dim[f.count_ones() as usize].push(f);
    }
    // boundary from faces with k+1 vertices to faces with k vertices
    let boundary_rank = |k: usize| -> usize {
        if k == 0 || by_dim[k].is_empty() || by_dim[k - 1].is_empty() {
            return 0;
        }
        let index: BTreeMap<u32, usize> = by_dim[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut rows = vec![vec![BigRational::zero(); by_dim[k].len()]; by_dim[k - 1].len()];
        for (col, &f) in by_dim[k].iter().enumerate() {
            let mut pos = 0;
            for v in 0..nverts {
                if f & (1 << v) != 0 {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    rows[index[&(f & !(1 << v))]][col] = BigRational::from_integer(sign.into());
                    pos += 1;
                }
            }
        }
        rank(rows)
    };
    let ranks: Vec<usize> = (0..=nverts + 1).map(|k| if k <= nverts { boundary_rank(k) } else { 0 }).collect();
    (0..=nverts).map(|k| by_dim[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// Graded Betti table of `k[Γ]`, step -> sorted shifts (with multiplicity).
pub fn koszul_betti_table(terms: &[u64]) -> BTreeMap<usize, Vec<i64>> {
    let member = membership(terms);
    let frobenius = member.iter().rposition(|&b| !b).unwrap_or(0) as u64;
    let total: u64 = terms.iter().sum();
    let nv = terms.len();
    let in_gamma = |x: i64| x >= 0 && (x as usize >= member.len() || member[x as usize]);
    let mut out: BTreeMap<usize, Vec<i64>> = BTreeMap::new();
    for j in 0..=(frobenius + total + 1) as i64 {
        if !in_gamma(j) {
            continue;
        }
        let faces: Vec<u32> = (0u32..1 << nv)
            .filter(|&s| {
                let sum: i64 = (0..nv).filter(|&i| s & (1 << i) != 0).map(|i| terms[i] as i64).sum();
                in_gamma(j - sum)
            })
            .collect();
        // index k of reduced_homology is H̃_{k-1}, which gives β_k
        for (s, &dim) in reduced_homology(nv, &faces).iter().enumerate() {
            for _ in 0..dim {
                out.entry(s).or_default().push(j);
            }
        }
    }
    out
}

/// Ungraded Betti vector from a table.
pub fn betti_vector(table: &BTreeMap<usize, Vec<i64>>) -> Vec<u64> {
    let len = table.keys().max().copied().unwrap_or(0);
    (0..=len).map(|s| table.get(&s).map_or(0, |v| v.len() as u64)).collect()
}
