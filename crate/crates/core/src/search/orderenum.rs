//! Exhaustive enumeration of subgroups of a fixed order m, up to conjugacy,
//! for ambient groups of order at most 21000.
//!
//! The search anchors on a fixed Sylow p-subgroup P for the largest prime p
//! whose p-part in m equals the p-part of |G|: every order-m subgroup then
//! contains a conjugate of P, so it is reached by closing P with extra
//! generators, one coset representative at a time, pruning closures whose
//! order fails to divide m (Lagrange inside the target). Conjugating by
//! N_G(P) fuses the found subgroups into G-classes: if H^g = K with both
//! containing P, then P and P^g are Sylow in K, so g can be corrected by an
//! element of K to normalize P.
//!
//! When no prime has its full part in m, the search falls back to anchoring
//! on each class of subgroups of prime order p (largest p dividing m) and
//! merges under full G-conjugation.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::exec;
use crate::group::{closure_capped, merge_conjugate_sets, p_part, PermGroup};
use crate::perm::Permutation;

use super::{group_from_elements, normalizer, right_transversal, sylow_subgroup, SearchBudget};

pub fn subgroups_of_order_exhaustive(
    g: &PermGroup,
    m: u64,
    budget: &SearchBudget,
) -> Result<Vec<PermGroup>> {
    let order = g
        .order_u64()
        .filter(|&o| o <= 21_000)
        .ok_or_else(|| Error::RegimeExceeded("order enumeration needs |G| <= 21000".into()))?;
    if m == 0 || order % m != 0 {
        return Err(Error::Hypothesis(format!("{m} does not divide {order}")));
    }
    if m == order {
        return Ok(vec![g.clone()]);
    }
    if m == 1 {
        return Ok(vec![PermGroup::trivial(g.degree())]);
    }

    let full_anchor_prime = crate::group::prime_factors(m)
        .into_iter()
        .rev()
        .find(|&p| p_part(m, p) == p_part(order, p));

    let (anchors, mergers): (Vec<PermGroup>, Vec<Permutation>) = match full_anchor_prime {
        Some(p) => {
            let sylow = sylow_subgroup(g, p)?;
            let n = normalizer(g, &sylow, budget)?;
            (vec![sylow], n.gens().to_vec())
        }
        None => {
            let p = *crate::group::prime_factors(m).last().unwrap();
            let mut anchors = Vec::new();
            for (rep, _) in g.conjugacy_classes()? {
                if rep.order() == p {
                    anchors.push(PermGroup::new(g.degree(), vec![rep])?);
                }
            }
            (anchors, g.gens().to_vec())
        }
    };

    let mut found: Vec<BTreeSet<Permutation>> = Vec::new();
    let mut seen: HashSet<BTreeSet<Permutation>> = HashSet::new();
    for anchor in anchors {
        grow(g, m, anchor, &mut found, &mut seen, budget)?;
    }
    found.sort();
    let classes = merge_conjugate_sets(found, &mergers);
    let mut out = Vec::new();
    for set in classes {
        let h = group_from_elements(g.degree(), set.into_iter().collect())?;
        debug_assert_eq!(h.order_u64(), Some(m));
        out.push(h);
    }
    Ok(out)
}

fn grow(
    g: &PermGroup,
    m: u64,
    anchor: PermGroup,
    found: &mut Vec<BTreeSet<Permutation>>,
    seen: &mut HashSet<BTreeSet<Permutation>>,
    budget: &SearchBudget,
) -> Result<()> {
    let degree = g.degree();
    let anchor_order = anchor.order_u64().unwrap();
    if m % anchor_order != 0 {
        return Ok(());
    }
    let anchor_set: BTreeSet<Permutation> = anchor
        .elements(anchor_order as usize)
        .unwrap()
        .into_iter()
        .collect();
    if anchor_order == m {
        if seen.insert(anchor_set.clone()) {
            found.push(anchor_set);
        }
        return Ok(());
    }
    let mut level: Vec<(PermGroup, BTreeSet<Permutation>)> = vec![(anchor, anchor_set.clone())];
    seen.insert(anchor_set);
    while let Some((cur, cur_set)) = level.pop() {
        let reps = right_transversal(g, &cur, budget)?;
        let gens = cur.gens().to_vec();
        let grown = exec::map_collect(&reps, |t| -> Option<BTreeSet<Permutation>> {
            if cur_set.contains(t) {
                return None;
            }
            let mut cand = gens.clone();
            cand.push(t.clone());
            let set = closure_capped(&cand, degree, m as usize)?;
            let len = set.len() as u64;
            if m % len != 0 {
                return None;
            }
            Some(set.into_iter().collect())
        });
        for set in grown.into_iter().flatten() {
            if !seen.insert(set.clone()) {
                continue;
            }
            if set.len() as u64 == m {
                found.push(set);
            } else {
                let sub = group_from_elements(degree, set.iter().cloned().collect())?;
                level.push((sub, set));
            }
        }
    }
    Ok(())
}
