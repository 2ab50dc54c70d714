//! Existence of an inverse-closed union of nontrivial conjugacy classes of
//! total size exactly 7 that generates the group: the obstruction used to
//! rule out connection sets that are unions of classes.

use std::collections::HashSet;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// True iff some inverse-closed union of nontrivial conjugacy classes has
/// total size exactly 7 and generates the group.
pub fn conjclass_size7_check(k: &PermGroup) -> Result<bool> {
    let order = k
        .order_u64()
        .filter(|&o| o <= 100_000)
        .ok_or_else(|| Error::RegimeExceeded("class scan needs order <= 10^5".into()))?;
    let classes = k.conjugacy_classes()?;
    // only classes of size at most 7 can participate
    let mut small: Vec<(Permutation, Vec<Permutation>)> = Vec::new();
    for (rep, size) in classes {
        if rep.is_identity() || size > 7 {
            continue;
        }
        // materialize the class
        let mut class = vec![rep.clone()];
        let mut seen: HashSet<Permutation> = class.iter().cloned().collect();
        let mut head = 0;
        while head < class.len() {
            let x = class[head].clone();
            head += 1;
            for g in k.gens() {
                let y = x.conjugate_by(g);
                if seen.insert(y.clone()) {
                    class.push(y);
                }
            }
        }
        debug_assert_eq!(class.len() as u64, size);
        small.push((rep, class));
    }
    // subset scan
    let m = small.len();
    for mask in 1u32..(1 << m) {
        let mut union: Vec<Permutation> = Vec::new();
        for (i, (_, class)) in small.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union.extend(class.iter().cloned());
            }
        }
        if union.len() != 7 {
            continue;
        }
        let set: HashSet<&Permutation> = union.iter().collect();
        if !union.iter().all(|x| set.contains(&x.inverse())) {
            continue;
        }
        if *StabilizerChain::build(k.degree(), &union).order() == num_bigint::BigUint::from(order)
        {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    #[test]
    fn the_four_candidate_groups_all_fail() {
        for name in ["A:5", "A:6", "A:7", "PSL32@7"] {
            let g = builtin_group(name).unwrap();
            assert!(!conjclass_size7_check(&g).unwrap(), "{name}");
        }
    }

    #[test]
    fn smallest_nontrivial_class_sizes_exceed_7() {
        // the independent reason the check fails on those groups
        for (name, smallest) in [("A:5", 12), ("A:6", 40), ("A:7", 70), ("PSL32@7", 21)] {
            let g = builtin_group(name).unwrap();
            let min = g
                .conjugacy_classes()
                .unwrap()
                .into_iter()
                .filter(|c| c.1 > 1)
                .map(|c| c.1)
                .min()
                .unwrap();
            assert_eq!(min, smallest, "{name}");
        }
    }

    #[test]
    fn a_group_where_the_union_exists() {
        // Z8: seven nontrivial singleton classes, inverse-closed as a union,
        // generating the group
        let z8 = builtin_group("C:8").unwrap();
        assert!(conjclass_size7_check(&z8).unwrap());
    }
}
