//! Subgroups of index exactly k, up to conjugacy, via transitive actions.
//!
//! Every index-k subgroup is a point stabilizer preimage of a transitive
//! homomorphism into the symmetric group of degree k, so we enumerate
//! generator-image tuples (the first image fixed to a cycle-type
//! representative, which costs nothing by conjugating the action) and keep
//! those whose paired diagonal group has the group's own order. Preimages of
//! conjugate homomorphisms are conjugate subgroups, and an index-k subgroup
//! has at most k conjugates, so the final merge is a cheap orbit computation
//! on element sets.

use std::collections::BTreeSet;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::exec;
use crate::group::{merge_conjugate_sets, PermGroup};
use crate::perm::Permutation;

use super::{group_from_elements, reduce_generators, SearchBudget};

fn partitions(k: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, maxpart: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(maxpart)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

fn partition_rep(parts: &[usize], k: usize) -> Permutation {
    let mut images: Vec<usize> = (0..k).collect();
    let mut at = 0;
    for &len in parts {
        for i in 0..len {
            images[at + i] = at + (i + 1) % len;
        }
        at += len;
    }
    Permutation::from_images(images).unwrap()
}

fn lcm_of(parts: &[usize]) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    parts.iter().fold(1u64, |acc, &p| {
        let p = p as u64;
        acc / gcd(acc, p) * p
    })
}

fn paired(a: &Permutation, b: &Permutation, n: usize, k: usize) -> Permutation {
    let mut images = Vec::with_capacity(n + k);
    images.extend(a.images().iter().copied());
    images.extend(b.images().iter().map(|&y| y + n));
    Permutation::from_images(images).unwrap()
}

/// One representative per conjugacy class of subgroups of index exactly `k`.
pub fn low_index_subgroups(
    g: &PermGroup,
    k: usize,
    _budget: &SearchBudget,
) -> Result<Vec<PermGroup>> {
    if k == 0 || k > 12 {
        return Err(Error::RegimeExceeded("index must be between 1 and 12".into()));
    }
    if k > 8 {
        return Err(Error::RegimeExceeded(
            "index above 8 is outside this build's enumeration regime".into(),
        ));
    }
    let order = g
        .order_u64()
        .filter(|&o| o <= 100_000)
        .ok_or_else(|| Error::RegimeExceeded("low-index needs order <= 10^5".into()))?;
    if k == 1 {
        return Ok(vec![g.clone()]);
    }
    if order % (k as u64) != 0 {
        return Ok(vec![]);
    }
    let n = g.degree();
    let gens = reduce_generators(g, 3);
    let g_order = g.order();

    // prefix orders |<g_1..g_i>|
    let mut prefix_orders = Vec::new();
    for i in 1..=gens.len() {
        prefix_orders.push(StabilizerChain::build(n, &gens[..i]).order().clone());
    }

    // all elements of the symmetric group of degree k
    let sym = crate::atlas::builtin_group(&format!("S:{k}"))?;
    let mut sym_elems = sym.elements(40_320).expect("k <= 8");
    sym_elems.sort();

    let first_reps: Vec<Permutation> = partitions(k)
        .into_iter()
        .filter(|parts| gens[0].order() % lcm_of(parts) == 0)
        .map(|parts| partition_rep(&parts, k))
        .collect();

    // depth-first over image tuples with a diagonal-order check per prefix
    let mut homs: Vec<Vec<Permutation>> = Vec::new();
    let mut stack: Vec<(Vec<Permutation>, Vec<Permutation>)> = Vec::new(); // (tuple, paired gens)
    for t1 in &first_reps {
        let pg = vec![paired(&gens[0], t1, n, k)];
        if *StabilizerChain::build(n + k, &pg).order() == prefix_orders[0] {
            stack.push((vec![t1.clone()], pg));
        }
    }
    while let Some((tuple, pgens)) = stack.pop() {
        let i = tuple.len();
        if i == gens.len() {
            homs.push(tuple);
            continue;
        }
        let gi_order = gens[i].order();
        let candidates: Vec<&Permutation> = sym_elems
            .iter()
            .filter(|t| gi_order % t.order() == 0)
            .collect();
        let checks = exec::map_collect(&candidates, |t| {
            let mut pg = pgens.clone();
            pg.push(paired(&gens[i], t, n, k));
            if *StabilizerChain::build(n + k, &pg).order() == prefix_orders[i] {
                Some(pg)
            } else {
                None
            }
        });
        for (t, pg) in candidates.iter().zip(checks) {
            if let Some(pg) = pg {
                let mut tuple2 = tuple.clone();
                tuple2.push((*t).clone());
                stack.push((tuple2, pg));
            }
        }
    }

    // extract stabilizer preimages of the transitive actions
    let mut found: Vec<BTreeSet<Permutation>> = Vec::new();
    let sub_order = order / k as u64;
    for tuple in homs {
        let image = PermGroup::new(k, tuple.clone())?;
        if !image.is_transitive() {
            continue;
        }
        let pgens: Vec<Permutation> = gens
            .iter()
            .zip(&tuple)
            .map(|(a, b)| paired(a, b, n, k))
            .collect();
        let diag = PermGroup::new(n + k, pgens)?;
        debug_assert_eq!(diag.order(), g_order);
        let stab = diag.point_stabilizer(n)?;
        let proj: Vec<Permutation> = stab
            .gens()
            .iter()
            .map(|p| Permutation::from_images(p.images()[..n].to_vec()).unwrap())
            .collect();
        let h = PermGroup::new(n, proj)?;
        if h.order_u64() != Some(sub_order) {
            return Err(Error::Hypothesis(
                "stabilizer preimage has wrong index".into(),
            ));
        }
        let set: BTreeSet<Permutation> = h
            .elements(sub_order as usize)
            .ok_or_else(|| Error::RegimeExceeded("subgroup enumeration".into()))?
            .into_iter()
            .collect();
        if !found.contains(&set) {
            found.push(set);
        }
    }
    found.sort();
    let classes = merge_conjugate_sets(found, g.gens());
    let mut out = Vec::new();
    for set in classes {
        out.push(group_from_elements(n, set.into_iter().collect())?);
    }
    Ok(out)
}
