//! Automorphism enumeration for small groups by generator-image extension.
//!
//! A candidate image tuple (t_1..t_r) for generators (g_1..g_r) defines an
//! automorphism iff the diagonal subgroup generated by the paired
//! permutations g_i + t_i (acting on two disjoint copies of the domain) has
//! the same order as the group, and the images generate the group. That
//! makes the well-definedness check a plain stabilizer-chain computation,
//! with no presentation required.

use std::collections::HashMap;

use rand::SeedableRng;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Finds a generating set of at most `max_gens` elements (seeded search);
/// falls back to the existing generators.
pub fn reduce_generators(g: &PermGroup, max_gens: usize) -> Vec<Permutation> {
    let nontrivial: Vec<Permutation> = g
        .gens()
        .iter()
        .filter(|p| !p.is_identity())
        .cloned()
        .collect();
    if nontrivial.len() <= max_gens {
        return if nontrivial.is_empty() {
            g.gens().to_vec()
        } else {
            nontrivial
        };
    }
    let order = g.order();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC0FF_EE00);
    for count in 2..=max_gens {
        for _ in 0..300 {
            let cand: Vec<Permutation> = (0..count).map(|_| g.random_element(&mut rng)).collect();
            let chain = StabilizerChain::build(g.degree(), &cand);
            if *chain.order() == order {
                return cand;
            }
        }
    }
    nontrivial
}

/// Paired permutation acting as `a` on the first copy and `b` on the second.
fn paired(a: &Permutation, b: &Permutation) -> Permutation {
    let n = a.degree();
    let mut images = Vec::with_capacity(2 * n);
    images.extend(a.images().iter().copied());
    images.extend(b.images().iter().map(|&y| y + n));
    Permutation::from_images(images).unwrap()
}

/// All automorphisms of `h` (order <= 400), returned as image tuples of
/// `gens`; `gens` must generate `h`.
pub fn automorphism_images(
    h: &PermGroup,
    gens: &[Permutation],
) -> Result<Vec<Vec<Permutation>>> {
    let order = h
        .order_u64()
        .filter(|&o| o <= 400)
        .ok_or_else(|| Error::RegimeExceeded("automorphism search limited to order 400".into()))?;
    let elems = h
        .elements(order as usize)
        .expect("order bounded");

    // class invariant (order, class size) of every element
    let mut invariant: HashMap<Permutation, (u64, usize)> = HashMap::new();
    {
        let mut remaining: std::collections::HashSet<Permutation> =
            elems.iter().cloned().collect();
        while let Some(x) = remaining.iter().min().cloned() {
            let mut class = vec![x.clone()];
            let mut seen: std::collections::HashSet<Permutation> =
                class.iter().cloned().collect();
            while let Some(y) = class.pop() {
                remaining.remove(&y);
                for g in h.gens() {
                    let c = y.conjugate_by(g);
                    if seen.insert(c.clone()) {
                        class.push(c);
                    }
                }
            }
            let ord = x.order();
            for e in &seen {
                invariant.insert(e.clone(), (ord, seen.len()));
            }
        }
    }

    let mut candidates: Vec<Vec<Permutation>> = Vec::new();
    for g in gens {
        let inv = invariant
            .get(g)
            .ok_or_else(|| Error::NotSubgroup("generator outside group".into()))?;
        let mut c: Vec<Permutation> = elems
            .iter()
            .filter(|e| invariant.get(*e) == Some(inv))
            .cloned()
            .collect();
        c.sort();
        candidates.push(c);
    }

    // prefix orders of the generator sequence
    let degree = h.degree();
    let mut prefix_orders = Vec::new();
    for i in 1..=gens.len() {
        prefix_orders.push(StabilizerChain::build(degree, &gens[..i]).order().clone());
    }

    let mut out: Vec<Vec<Permutation>> = Vec::new();
    let mut stack: Vec<Vec<Permutation>> = vec![Vec::new()];
    while let Some(partial) = stack.pop() {
        let i = partial.len();
        if i == gens.len() {
            let full_ok =
                *StabilizerChain::build(degree, &partial).order() == BigUintFrom(order);
            if full_ok {
                out.push(partial);
            }
            continue;
        }
        // explore in reverse so the stack pops candidates in sorted order
        for t in candidates[i].iter().rev() {
            let mut tuple = partial.clone();
            tuple.push(t.clone());
            let pairs: Vec<Permutation> = gens[..=i]
                .iter()
                .zip(&tuple)
                .map(|(a, b)| paired(a, b))
                .collect();
            if *StabilizerChain::build(2 * degree, &pairs).order() == prefix_orders[i] {
                stack.push(tuple);
            }
        }
    }
    out.sort();
    Ok(out)
}

#[allow(non_snake_case)]
fn BigUintFrom(v: u64) -> num_bigint::BigUint {
    num_bigint::BigUint::from(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    #[test]
    fn aut_a5_has_order_120() {
        let a5 = builtin_group("A:5").unwrap();
        let gens = a5.gens().to_vec();
        let images = automorphism_images(&a5, &gens).unwrap();
        assert_eq!(images.len(), 120);
    }

    #[test]
    fn aut_s4_has_order_24() {
        let s4 = builtin_group("S:4").unwrap();
        let images = automorphism_images(&s4, &s4.gens().to_vec()).unwrap();
        assert_eq!(images.len(), 24);
    }

    #[test]
    fn aut_klein_four_is_s3() {
        let v = PermGroup::from_cycles(4, &["(0 1)(2 3)", "(0 2)(1 3)"]).unwrap();
        let images = automorphism_images(&v, &v.gens().to_vec()).unwrap();
        assert_eq!(images.len(), 6);
    }

    #[test]
    fn reduce_generators_finds_pairs() {
        let a6 = builtin_group("A:6").unwrap();
        // blow up the generating set artificially
        let mut gens = a6.gens().to_vec();
        for g in a6.gens() {
            gens.push(g.inverse());
            gens.push(g.compose(g));
        }
        let big = PermGroup::new(6, gens).unwrap();
        let reduced = reduce_generators(&big, 2);
        assert_eq!(reduced.len(), 2);
        let r = PermGroup::new(6, reduced).unwrap();
        assert_eq!(r.order_u64(), Some(360));
    }
}
