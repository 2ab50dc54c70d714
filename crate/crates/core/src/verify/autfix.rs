//! Aut(G, S): group automorphisms fixing a subset setwise, realized as
//! permutations of the enumerated elements so they compose with the regular
//! representations.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::search::{automorphism_images, reduce_generators};

pub struct AutFixingSet {
    /// Sorted element enumeration; automorphism permutations act on these
    /// indices.
    pub elements: Vec<Permutation>,
    /// The automorphisms fixing S setwise, as permutations of the indices.
    pub group: PermGroup,
}

impl AutFixingSet {
    /// The right regular representation on the same element enumeration.
    pub fn right_regular(&self, g: &PermGroup) -> Result<PermGroup> {
        let index: HashMap<&Permutation, usize> =
            self.elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut gens = Vec::new();
        for gen in g.gens() {
            let images: Vec<usize> = self
                .elements
                .iter()
                .map(|x| index[&x.compose(gen)])
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        PermGroup::new(self.elements.len(), gens)
    }
}

/// All automorphisms of `g` (order <= 400) fixing `s` setwise; an empty `s`
/// means no constraint, so the full automorphism group is returned.
pub fn aut_fixing_set(g: &PermGroup, s: &[Permutation]) -> Result<AutFixingSet> {
    let order = g
        .order_u64()
        .filter(|&o| o <= 400)
        .ok_or_else(|| Error::RegimeExceeded("aut search limited to order 400".into()))?;
    let mut elements = g.elements(order as usize).expect("order bounded");
    elements.sort();
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    for x in s {
        if !index.contains_key(x) {
            return Err(Error::NotSubgroup("S must be a subset of G".into()));
        }
    }

    let gens = reduce_generators(g, 3);
    let tuples = automorphism_images(&PermGroup::new(g.degree(), gens.clone())?, &gens)?;

    // extend each generator-image tuple to the whole element list by a word
    // closure: alpha(x * gen) = alpha(x) * alpha(gen)
    let mut auts: Vec<Permutation> = Vec::new();
    let s_indices: std::collections::BTreeSet<usize> =
        s.iter().map(|x| index[x]).collect();
    for tuple in tuples {
        let mut map: Vec<Option<usize>> = vec![None; elements.len()];
        let id_idx = index[&Permutation::identity(g.degree())];
        map[id_idx] = Some(id_idx);
        let mut frontier = vec![id_idx];
        while let Some(xi) = frontier.pop() {
            let alpha_x = &elements[map[xi].unwrap()];
            for (gen, img) in gens.iter().zip(&tuple) {
                let y = elements[xi].compose(gen);
                let yi = index[&y];
                if map[yi].is_none() {
                    map[yi] = Some(index[&alpha_x.compose(img)]);
                    frontier.push(yi);
                }
            }
        }
        let images: Vec<usize> = map.into_iter().map(|v| v.expect("connected")).collect();
        let perm = Permutation::from_images(images)?;
        let fixes_s = s_indices.iter().all(|&i| s_indices.contains(&perm.apply(i)));
        if fixes_s {
            auts.push(perm);
        }
    }
    let count = auts.len() as u64;
    let group = PermGroup::new(elements.len(), auts)?;
    if group.order_u64() != Some(count.max(1)) {
        return Err(Error::Hypothesis(
            "setwise-fixing automorphisms failed to close into a group".into(),
        ));
    }
    Ok(AutFixingSet { elements, group })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    #[test]
    fn empty_s_gives_full_aut_of_a5() {
        let a5 = builtin_group("A:5").unwrap();
        let aut = aut_fixing_set(&a5, &[]).unwrap();
        assert_eq!(aut.group.order_u64(), Some(120));
    }

    #[test]
    fn s_equal_to_all_nonidentity_gives_full_aut() {
        let a4 = builtin_group("A:4").unwrap();
        let all: Vec<Permutation> = a4
            .elements(12)
            .unwrap()
            .into_iter()
            .filter(|e| !e.is_identity())
            .collect();
        let full = aut_fixing_set(&a4, &[]).unwrap().group.order_u64().unwrap();
        let fixed = aut_fixing_set(&a4, &all).unwrap().group.order_u64().unwrap();
        assert_eq!(full, fixed);
        assert_eq!(full, 24);
    }

    #[test]
    fn aut_gs_order_divides_full_aut_order() {
        use rand::SeedableRng;
        let a5 = builtin_group("A:5").unwrap();
        let full = aut_fixing_set(&a5, &[]).unwrap().group.order_u64().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..8 {
            // random inverse-closed subset
            let mut s = Vec::new();
            for _ in 0..3 {
                let x = a5.random_element(&mut rng);
                if !x.is_identity() && !s.contains(&x) {
                    s.push(x.inverse());
                    if !s.contains(&x) {
                        s.push(x);
                    }
                }
            }
            s.sort();
            s.dedup();
            let sub = aut_fixing_set(&a5, &s).unwrap().group.order_u64().unwrap();
            assert_eq!(full % sub, 0, "{s:?}");
        }
    }
}
