//! Matrix groups over small finite fields realized as permutation groups on
//! nonzero vectors or projective points (row vectors acting on the right).

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::gf::GfField;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldMatrix {
    pub dimension: usize,
    pub field_order: u16,
    /// Row-major entries, values in 0..field_order.
    pub entries: Vec<u16>,
}

impl FiniteFieldMatrix {
    pub fn new(dimension: usize, field_order: u16, entries: Vec<u16>) -> Result<Self> {
        if dimension == 0 || dimension > 8 {
            return Err(Error::RegimeExceeded("matrix dimension must be 1..8".into()));
        }
        if entries.len() != dimension * dimension {
            return Err(Error::RegimeExceeded("entry count mismatch".into()));
        }
        Ok(FiniteFieldMatrix {
            dimension,
            field_order,
            entries,
        })
    }

    pub fn identity(dimension: usize, field_order: u16) -> Self {
        let mut entries = vec![0u16; dimension * dimension];
        for i in 0..dimension {
            entries[i * dimension + i] = 1;
        }
        FiniteFieldMatrix {
            dimension,
            field_order,
            entries,
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u16 {
        self.entries[i * self.dimension + j]
    }

    pub fn is_invertible(&self, f: &GfField) -> bool {
        // Gaussian elimination rank check
        let d = self.dimension;
        let mut m = self.entries.clone();
        let mut rank = 0;
        for col in 0..d {
            let pivot = (rank..d).find(|&r| m[r * d + col] != 0);
            let Some(p) = pivot else { continue };
            for j in 0..d {
                m.swap(p * d + j, rank * d + j);
            }
            let inv = f.inv(m[rank * d + col]).unwrap();
            for j in 0..d {
                m[rank * d + j] = f.mul(m[rank * d + j], inv);
            }
            for r in 0..d {
                if r != rank && m[r * d + col] != 0 {
                    let c = m[r * d + col];
                    for j in 0..d {
                        let sub = f.mul(c, m[rank * d + j]);
                        m[r * d + j] = f.add(m[r * d + j], f.neg(sub));
                    }
                }
            }
            rank += 1;
        }
        rank == d
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatAction {
    NonzeroVectors,
    ProjectivePoints,
}

fn apply_row(v: &[u16], m: &FiniteFieldMatrix, f: &GfField) -> Vec<u16> {
    let d = m.dimension;
    (0..d)
        .map(|j| {
            let mut acc = 0u16;
            for (i, &vi) in v.iter().enumerate() {
                acc = f.add(acc, f.mul(vi, m.at(i, j)));
            }
            acc
        })
        .collect()
}

fn normalize_projective(v: &[u16], f: &GfField) -> Vec<u16> {
    let lead = v.iter().position(|&x| x != 0).expect("nonzero vector");
    let inv = f.inv(v[lead]).unwrap();
    v.iter().map(|&x| f.mul(x, inv)).collect()
}

/// Permutation action of matrix generators on the chosen point set, points
/// ordered lexicographically.
pub fn matgroup_to_perm(gens: &[FiniteFieldMatrix], action: MatAction) -> Result<PermGroup> {
    let first = gens
        .first()
        .ok_or_else(|| Error::RegimeExceeded("no matrix generators".into()))?;
    let d = first.dimension;
    let q = first.field_order;
    let f = GfField::new(q)?;
    for g in gens {
        if g.dimension != d || g.field_order != q {
            return Err(Error::DegreeMismatch(g.dimension, d));
        }
        if !g.is_invertible(&f) {
            return Err(Error::SingularMatrix);
        }
    }
    // enumerate nonzero vectors lexicographically
    let mut vectors: Vec<Vec<u16>> = Vec::new();
    let mut v = vec![0u16; d];
    loop {
        // increment base-q counter
        let mut i = d;
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if v[i] + 1 < q {
                v[i] += 1;
                for x in v.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                break;
            } else if i == 0 {
                v.clear();
                break;
            }
        }
        if v.is_empty() {
            break;
        }
        vectors.push(v.clone());
    }
    let points: Vec<Vec<u16>> = match action {
        MatAction::NonzeroVectors => vectors,
        MatAction::ProjectivePoints => {
            let mut pts: Vec<Vec<u16>> = vectors
                .iter()
                .map(|v| normalize_projective(v, &f))
                .collect();
            pts.sort();
            pts.dedup();
            pts
        }
    };
    let index: std::collections::HashMap<Vec<u16>, usize> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut perms = Vec::with_capacity(gens.len());
    for g in gens {
        let mut images = vec![0usize; points.len()];
        for (i, p) in points.iter().enumerate() {
            let w = apply_row(p, g, &f);
            let w = match action {
                MatAction::NonzeroVectors => w,
                MatAction::ProjectivePoints => normalize_projective(&w, &f),
            };
            images[i] = index[&w];
        }
        perms.push(Permutation::from_images(images)?);
    }
    PermGroup::new(points.len(), perms)
}

/// Elementary transvection generators of SL(d, q).
pub fn sl_gens(d: usize, q: u16) -> Result<Vec<FiniteFieldMatrix>> {
    let f = GfField::new(q)?;
    let mut lambdas = vec![1u16];
    // a field basis over the prime subfield
    if q == 4 || q == 8 || q == 9 {
        let g = f.generator();
        lambdas.push(g);
        if q == 8 {
            lambdas.push(f.mul(g, g));
        }
    }
    let mut out = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i == j {
                continue;
            }
            if i.abs_diff(j) != 1 {
                continue; // adjacent transvections suffice
            }
            for &l in &lambdas {
                let mut m = FiniteFieldMatrix::identity(d, q);
                m.entries[i * d + j] = l;
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// All symplectic transvections x -> x + t*B(x,v)*v for the standard
/// alternating form on F_q^(2m).
pub fn sp_transvections(m2: usize, q: u16) -> Result<Vec<FiniteFieldMatrix>> {
    if m2 % 2 != 0 {
        return Err(Error::RegimeExceeded("symplectic dimension must be even".into()));
    }
    let f = GfField::new(q)?;
    let d = m2;
    // B(x, y) = sum_i x_{2i} y_{2i+1} - x_{2i+1} y_{2i}
    let form = |x: &[u16], y: &[u16]| -> u16 {
        let mut acc = 0u16;
        for i in (0..d).step_by(2) {
            acc = f.add(acc, f.mul(x[i], y[i + 1]));
            acc = f.add(acc, f.neg(f.mul(x[i + 1], y[i])));
        }
        acc
    };
    // enumerate one vector per projective point
    let mut vectors: Vec<Vec<u16>> = Vec::new();
    let total = (q as u64).pow(d as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(d);
        let mut c = code;
        for _ in 0..d {
            v.push((c % q as u64) as u16);
            c /= q as u64;
        }
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            vectors.push(v);
        }
    }
    let mut out = Vec::new();
    let lambdas: Vec<u16> = (1..q).collect();
    for v in &vectors {
        for &t in &lambdas {
            let mut m = FiniteFieldMatrix::identity(d, q);
            // e_i -> e_i + t B(e_i, v) v
            for i in 0..d {
                let mut e = vec![0u16; d];
                e[i] = 1;
                let c = f.mul(t, form(&e, v));
                for j in 0..d {
                    m.entries[i * d + j] = f.add(m.entries[i * d + j], f.mul(c, v[j]));
                }
            }
            out.push(m);
        }
    }
    Ok(out)
}
