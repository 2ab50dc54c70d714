//! Sylow p-subgroups.
//!
//! Small groups are handled by greedy growth over the enumerated p-elements
//! (a maximal p-subgroup is Sylow). Larger groups descend through centralizer
//! and normalizer computations; the randomized element sampling is seeded and
//! the final order is verified against the p-part of |G|, so the result is
//! deterministic and certified.

use rand::SeedableRng;

use crate::error::{Error, Result};
use crate::group::{closure_capped, p_part, PermGroup};
use crate::perm::Permutation;

use super::{centralizer_of_element, normalizer, SearchBudget};

const ENUM_CAP: u64 = 50_000;

pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let order = g
        .order_u64()
        .ok_or_else(|| Error::RegimeExceeded("sylow needs u64 order".into()))?;
    let target = p_part(order, p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    let result = sylow_rec(g, p, target, 0)?;
    debug_assert_eq!(result.order_u64(), Some(target));
    Ok(result)
}

fn sylow_rec(g: &PermGroup, p: u64, _outer_target: u64, depth: usize) -> Result<PermGroup> {
    if depth > 24 {
        return Err(Error::RegimeExceeded("sylow recursion depth".into()));
    }
    let order = g.order_u64().unwrap();
    let target = p_part(order, p);
    if target == 1 {
        return Ok(PermGroup::trivial(g.degree()));
    }
    if order <= ENUM_CAP {
        return sylow_by_enumeration(g, p, target);
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xAB1E ^ p);
    let budget = SearchBudget::default();
    for _ in 0..2000 {
        let r = g.random_element(&mut rng);
        let o = r.order();
        if o % p != 0 {
            continue;
        }
        let z = r.pow(o / p_part(o, p));
        debug_assert!(z.order() % p == 0);
        let cent = centralizer_of_element(g, &z, &budget)?;
        let co = cent
            .order_u64()
            .ok_or_else(|| Error::RegimeExceeded("centralizer order".into()))?;
        if co == order {
            continue; // central p-element: pick another seed element
        }
        let mut sub = sylow_rec(&cent, p, target, depth + 1)?;
        let mut guard = 0;
        while p_part(sub.order_u64().unwrap(), p) < target {
            guard += 1;
            if guard > 24 {
                return Err(Error::RegimeExceeded("sylow ascent".into()));
            }
            let n = normalizer(g, &sub, &budget)?;
            let no = n.order_u64().unwrap();
            if no == order || no == sub.order_u64().unwrap() {
                return Err(Error::RegimeExceeded(
                    "sylow ascent stalled (normal p-subgroup)".into(),
                ));
            }
            sub = sylow_rec(&n, p, target, depth + 1)?;
        }
        return Ok(sub);
    }
    Err(Error::RegimeExceeded(
        "no usable p-element found by sampling".into(),
    ))
}

fn sylow_by_enumeration(g: &PermGroup, p: u64, target: u64) -> Result<PermGroup> {
    let order = g.order_u64().unwrap();
    let elems = g
        .elements(order as usize)
        .ok_or_else(|| Error::RegimeExceeded("sylow enumeration".into()))?;
    let mut p_elems: Vec<&Permutation> = elems
        .iter()
        .filter(|e| {
            let o = e.order();
            o > 1 && o == p_part(o, p)
        })
        .collect();
    p_elems.sort();

    let mut gens: Vec<Permutation> = Vec::new();
    let mut current: std::collections::HashSet<Permutation> = std::collections::HashSet::new();
    current.insert(Permutation::identity(g.degree()));
    for z in p_elems {
        if current.len() as u64 == target {
            break;
        }
        if current.contains(z) {
            continue;
        }
        let mut cand = gens.clone();
        cand.push(z.clone());
        if let Some(set) = closure_capped(&cand, g.degree(), target as usize) {
            let len = set.len() as u64;
            if len == p_part(len, p) {
                gens = cand;
                current = set;
            }
        }
    }
    if current.len() as u64 != target {
        // a maximal p-subgroup is Sylow, so this cannot happen for correct input
        return Err(Error::Hypothesis(format!(
            "greedy sylow growth reached {} of {target}",
            current.len()
        )));
    }
    PermGroup::new(g.degree(), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    #[test]
    fn sylow_small_groups() {
        let s4 = builtin_group("S:4").unwrap();
        assert_eq!(sylow_subgroup(&s4, 2).unwrap().order_u64(), Some(8));
        assert_eq!(sylow_subgroup(&s4, 3).unwrap().order_u64(), Some(3));
        assert_eq!(sylow_subgroup(&s4, 5).unwrap().order_u64(), Some(1));

        let a7 = builtin_group("A:7").unwrap();
        assert_eq!(sylow_subgroup(&a7, 2).unwrap().order_u64(), Some(8));
        assert_eq!(sylow_subgroup(&a7, 3).unwrap().order_u64(), Some(9));
        assert_eq!(sylow_subgroup(&a7, 7).unwrap().order_u64(), Some(7));
    }

    #[test]
    fn sylow_of_a9_by_descent() {
        let a9 = builtin_group("A:9").unwrap(); // order 181440 forces the recursive route
        let p2 = sylow_subgroup(&a9, 2).unwrap();
        assert_eq!(p2.order_u64(), Some(64));
        assert!(a9.has_subgroup(&p2).unwrap());
        let p3 = sylow_subgroup(&a9, 3).unwrap();
        assert_eq!(p3.order_u64(), Some(81));
    }
}
