//! Right-coset machinery: canonical representatives via greedy minimization
//! through the subgroup's chain, transversals, coset actions, and cores.

use std::collections::HashMap;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::{intersection, SearchBudget};

/// Canonical representative of the right coset `H g`: the element minimizing
/// the image tuple of H's base points, found greedily level by level.
pub fn canonical_coset_rep(h_chain: &StabilizerChain, g: &Permutation) -> Permutation {
    let mut cur = g.clone();
    for level in 0..h_chain.num_levels() {
        let (mut best_x, mut best_val) = (usize::MAX, usize::MAX);
        for &x in h_chain.level_orbit(level) {
            let v = cur.apply(x);
            if v < best_val {
                best_val = v;
                best_x = x;
            }
        }
        let u = h_chain.level_transversal(level, best_x).unwrap();
        cur = u.compose(&cur);
    }
    cur
}

/// Right transversal of H in G: exactly |G:H| canonical representatives in
/// breadth-first discovery order starting from the identity coset.
pub fn right_transversal(g: &PermGroup, h: &PermGroup, budget: &SearchBudget) -> Result<Vec<Permutation>> {
    if !g.has_subgroup(h)? {
        return Err(Error::NotSubgroup("transversal needs H <= G".into()));
    }
    let index = (g.order() / h.order())
        .try_into()
        .map_err(|_| Error::RegimeExceeded("coset index overflows u64".into()))
        .and_then(|v: u64| {
            usize::try_from(v).map_err(|_| Error::RegimeExceeded("coset index".into()))
        })?;
    if index as u64 > budget.node_limit {
        return Err(Error::BudgetExceeded(format!(
            "transversal of index {index} exceeds node limit"
        )));
    }
    let h_chain = h.chain();
    let start = canonical_coset_rep(h_chain, &Permutation::identity(g.degree()));
    let mut seen: HashMap<Permutation, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    let mut reps = vec![start];
    let mut head = 0;
    while head < reps.len() {
        let r = reps[head].clone();
        head += 1;
        for gen in g.gens() {
            let c = canonical_coset_rep(h_chain, &r.compose(gen));
            if !seen.contains_key(&c) {
                seen.insert(c.clone(), reps.len());
                reps.push(c);
            }
        }
    }
    if reps.len() != index {
        return Err(Error::Hypothesis(format!(
            "transversal found {} cosets, expected {index}",
            reps.len()
        )));
    }
    Ok(reps)
}

pub struct CosetAction {
    /// Permutation action of the ambient group's generators on coset indices.
    pub action: PermGroup,
    /// Canonical representative of coset i.
    pub reps: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl CosetAction {
    pub fn coset_of(&self, h_chain: &StabilizerChain, g: &Permutation) -> Option<usize> {
        self.index.get(&canonical_coset_rep(h_chain, g)).copied()
    }
}

/// Action of M on the right cosets of H, with generators in M's order.
pub fn coset_action(m: &PermGroup, h: &PermGroup, budget: &SearchBudget) -> Result<CosetAction> {
    let reps = right_transversal(m, h, budget)?;
    let h_chain = h.chain();
    let index: HashMap<Permutation, usize> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    let mut gens = Vec::with_capacity(m.gens().len());
    for gen in m.gens() {
        let mut images = vec![0usize; reps.len()];
        for (i, r) in reps.iter().enumerate() {
            let c = canonical_coset_rep(h_chain, &r.compose(gen));
            images[i] = *index.get(&c).expect("coset closed under action");
        }
        gens.push(Permutation::from_images(images)?);
    }
    Ok(CosetAction {
        action: PermGroup::new(reps.len(), gens)?,
        reps,
        index,
    })
}

/// Largest normal subgroup of G inside H; H is core-free iff it is trivial.
pub fn core_of(g: &PermGroup, h: &PermGroup, budget: &SearchBudget) -> Result<PermGroup> {
    if !g.has_subgroup(h)? {
        return Err(Error::NotSubgroup("core needs H <= G".into()));
    }
    let mut cur = h.clone();
    loop {
        let mut changed = false;
        for gen in g.gens() {
            let conj_gens: Vec<Permutation> =
                cur.gens().iter().map(|x| x.conjugate_by(gen)).collect();
            let all_inside = {
                let mut ok = true;
                for c in &conj_gens {
                    if !cur.contains(c)? {
                        ok = false;
                        break;
                    }
                }
                ok
            };
            if !all_inside {
                let conj = PermGroup::new(g.degree(), conj_gens)?;
                cur = intersection(&cur, &conj, budget)?;
                changed = true;
                if cur.is_trivial() {
                    return Ok(cur);
                }
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn transversal_s4_over_a4() {
        let s4 = builtin_group("S:4").unwrap();
        let a4 = builtin_group("A:4").unwrap();
        let tr = right_transversal(&s4, &a4, &budget()).unwrap();
        assert_eq!(tr.len(), 2);
    }

    #[test]
    fn transversal_of_group_in_itself() {
        let g = builtin_group("A:5").unwrap();
        let tr = right_transversal(&g, &g, &budget()).unwrap();
        assert_eq!(tr.len(), 1);
        assert!(g.contains(&tr[0]).unwrap());
    }

    #[test]
    fn transversal_a5_over_a4_distinct_cosets() {
        let a5 = builtin_group("A:5").unwrap();
        let a4 = a5.point_stabilizer(4).unwrap();
        let tr = right_transversal(&a5, &a4, &budget()).unwrap();
        assert_eq!(tr.len(), 5);
        // pairwise distinct cosets: r s^-1 not in A4 for r != s
        for i in 0..tr.len() {
            for j in 0..tr.len() {
                if i != j {
                    let q = tr[i].compose(&tr[j].inverse());
                    assert!(!a4.contains(&q).unwrap());
                }
            }
        }
    }

    #[test]
    fn canonical_rep_is_coset_invariant() {
        use rand::SeedableRng;
        let a5 = builtin_group("A:5").unwrap();
        let a4 = a5.point_stabilizer(4).unwrap();
        let chain = a4.chain();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let g = a5.random_element(&mut rng);
            let h = a4.random_element(&mut rng);
            let c1 = canonical_coset_rep(chain, &g);
            let c2 = canonical_coset_rep(chain, &h.compose(&g));
            assert_eq!(c1, c2);
        }
    }

    #[test]
    fn coset_action_of_a5_on_a4_cosets() {
        let a5 = builtin_group("A:5").unwrap();
        let a4 = a5.point_stabilizer(4).unwrap();
        let act = coset_action(&a5, &a4, &budget()).unwrap();
        assert_eq!(act.action.degree(), 5);
        assert!(act.action.is_transitive());
        assert_eq!(act.action.order_u64(), Some(60));
    }

    #[test]
    fn core_examples() {
        let bud = budget();
        let a5 = builtin_group("A:5").unwrap();
        let a4 = a5.point_stabilizer(4).unwrap();
        assert_eq!(core_of(&a5, &a4, &bud).unwrap().order_u64(), Some(1));

        let g = builtin_group("A:5").unwrap();
        assert_eq!(core_of(&g, &g, &bud).unwrap().order_u64(), Some(60));

        let s4 = builtin_group("S:4").unwrap();
        let klein = PermGroup::from_cycles(4, &["(0 1)(2 3)", "(0 2)(1 3)"]).unwrap();
        let core = core_of(&s4, &klein, &bud).unwrap();
        assert_eq!(core.order_u64(), Some(4));
        // normality brute check
        for g in s4.gens() {
            for k in klein.gens() {
                assert!(core.contains(&k.conjugate_by(g)).unwrap());
            }
        }
    }
}
