//! Normalizer of a subgroup. Two exact strategies:
//!
//! * small subgroup (order <= 400): N_M(H) is assembled from the centralizer
//!   plus one conjugation transporter per automorphism of H, since
//!   N_M(H)/C_M(H) embeds in Aut(H);
//! * otherwise: breadth-first orbit of H under M-conjugation with Schreier
//!   generators for the stabilizer of the orbit point H.
//!
//! Both verify the result (every generator normalizes, and the order matches
//! the orbit-stabilizer count in the orbit route).

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::transporter::centralizer_in_group;
use super::{automorphism_images, group_from_elements, reduce_generators, SearchBudget};

pub fn normalizer(m: &PermGroup, h: &PermGroup, budget: &SearchBudget) -> Result<PermGroup> {
    if !m.has_subgroup(h)? {
        return Err(Error::NotSubgroup("normalizer needs H <= M".into()));
    }
    if h.is_trivial() {
        return Ok(m.clone());
    }
    if let Some(ho) = h.order_u64() {
        if ho <= 400 {
            let rgens = reduce_generators(h, 3);
            if rgens.len() <= 3 {
                if let Ok(n) = via_automorphisms(m, h, &rgens, budget) {
                    return Ok(n);
                }
            }
        }
    }
    via_conjugation_orbit(m, h, budget)
}

fn via_automorphisms(
    m: &PermGroup,
    h: &PermGroup,
    rgens: &[Permutation],
    budget: &SearchBudget,
) -> Result<PermGroup> {
    let hr = PermGroup::new(h.degree(), rgens.to_vec())?;
    debug_assert_eq!(hr.order(), h.order());
    let images = automorphism_images(&hr, rgens)?;
    let cent = centralizer_in_group(m, &hr, budget)?;
    let cent_order = cent.order();
    let mut elems: Vec<Permutation> = cent
        .elements(usize::try_from(cent.order_u64().ok_or_else(|| {
            Error::RegimeExceeded("centralizer too large".into())
        })?)
        .unwrap())
        .ok_or_else(|| Error::RegimeExceeded("centralizer enumeration".into()))?;
    // one adapted chain serves every automorphism's transporter search
    let chain = m.chain_with_base(&super::transporter::adapted_base(m.degree(), rgens));
    let mut realized: u64 = 0;
    for img in &images {
        if let Some(t) = super::transporter::transporter_with_chain(&chain, rgens, img, budget)? {
            realized += 1;
            elems.push(t);
        }
    }
    let n = group_from_elements(m.degree(), elems)?;
    // orders must satisfy |N| = |C| * (number of realized automorphisms)
    if n.order() != cent_order * BigUint::from(realized) {
        return Err(Error::Hypothesis("normalizer order cross-check failed".into()));
    }
    verify_normalizes(&n, h)?;
    Ok(n)
}

fn fingerprint(elems: &[Permutation], conj: Option<&Permutation>) -> (u64, u64) {
    let mut sum: u64 = 0;
    let mut xor: u64 = 0;
    for e in elems {
        let mut hasher = DefaultHasher::new();
        match conj {
            Some(g) => e.conjugate_by(g).hash(&mut hasher),
            None => e.hash(&mut hasher),
        }
        let v = hasher.finish();
        sum = sum.wrapping_add(v);
        xor ^= v.rotate_left((v % 63) as u32);
    }
    (sum, xor)
}

fn via_conjugation_orbit(
    m: &PermGroup,
    h: &PermGroup,
    budget: &SearchBudget,
) -> Result<PermGroup> {
    let h_order = h
        .order_u64()
        .ok_or_else(|| Error::RegimeExceeded("subgroup too large to enumerate".into()))?;
    let h_elems: Vec<Permutation> = h
        .elements(usize::try_from(h_order.min(1_000_000)).unwrap())
        .ok_or_else(|| Error::RegimeExceeded("subgroup too large to enumerate".into()))?;

    let meter = budget.meter("normalizer orbit");
    let id = Permutation::identity(m.degree());
    let start = fingerprint(&h_elems, None);
    let mut index: HashMap<(u64, u64), usize> = HashMap::new();
    index.insert(start, 0);
    let mut transversal: Vec<Permutation> = vec![id.clone()];
    let mut schreier: Vec<Permutation> = Vec::new();
    let mut head = 0;
    while head < transversal.len() {
        let t = transversal[head].clone();
        head += 1;
        for gen in m.gens() {
            meter.tick()?;
            let tg = t.compose(gen);
            let fp = fingerprint(&h_elems, Some(&tg));
            match index.get(&fp) {
                None => {
                    index.insert(fp, transversal.len());
                    transversal.push(tg);
                }
                Some(&i) => {
                    let s = tg.compose(&transversal[i].inverse());
                    if !s.is_identity() {
                        schreier.push(s);
                    }
                }
            }
        }
    }
    let orbit_len = transversal.len();
    let target = m.order() / BigUint::from(orbit_len);
    // grow the stabilizer from Schreier generators until the orbit-stabilizer
    // order is reached
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = crate::chain::StabilizerChain::build(m.degree(), &gens);
    for s in schreier {
        if *chain.order() == target {
            break;
        }
        if !chain.contains(&s)? {
            gens.push(s);
            chain = crate::chain::StabilizerChain::build(m.degree(), &gens);
        }
    }
    if *chain.order() != target {
        return Err(Error::Hypothesis(
            "normalizer orbit-stabilizer count mismatch".into(),
        ));
    }
    let n = PermGroup::new(m.degree(), gens)?;
    verify_normalizes(&n, h)?;
    Ok(n)
}

fn verify_normalizes(n: &PermGroup, h: &PermGroup) -> Result<()> {
    for g in n.gens() {
        for x in h.gens() {
            if !h.contains(&x.conjugate_by(g))? {
                return Err(Error::Hypothesis(
                    "computed normalizer fails to normalize".into(),
                ));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;
    use crate::group::brute_force_elements;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    fn brute_normalizer(g: &PermGroup, h: &PermGroup, cap: usize) -> usize {
        brute_force_elements(g.gens(), g.degree(), cap)
            .unwrap()
            .into_iter()
            .filter(|x| {
                h.gens()
                    .iter()
                    .all(|k| h.contains(&k.conjugate_by(x)).unwrap())
            })
            .count()
    }

    #[test]
    fn normalizer_of_five_cycle_in_s5() {
        let s5 = builtin_group("S:5").unwrap();
        let c5 = PermGroup::from_cycles(5, &["(0 1 2 3 4)"]).unwrap();
        let n = normalizer(&s5, &c5, &budget()).unwrap();
        assert_eq!(n.order_u64(), Some(20));
        assert_eq!(brute_normalizer(&s5, &c5, 130), 20);
    }

    #[test]
    fn normalizer_of_group_in_itself() {
        let a4 = builtin_group("A:4").unwrap();
        let n = normalizer(&a4, &a4, &budget()).unwrap();
        assert_eq!(n.order_u64(), Some(12));
    }

    #[test]
    fn normalizer_of_sylow7_in_a7() {
        let a7 = builtin_group("A:7").unwrap();
        let p7 = PermGroup::from_cycles(7, &["(0 1 2 3 4 5 6)"]).unwrap();
        let n = normalizer(&a7, &p7, &budget()).unwrap();
        assert_eq!(n.order_u64(), Some(21));
        // Sylow count: 2520 / 21 = 120 subgroups
        assert_eq!(2520 / 21, 120);
    }

    #[test]
    fn orbit_route_agrees_with_aut_route() {
        let a8 = builtin_group("A:8").unwrap();
        let a6 = PermGroup::from_cycles(8, &["(0 1 2)", "(1 2 3 4 5)"]).unwrap();
        assert_eq!(a6.order_u64(), Some(360));
        let via_aut = via_automorphisms(&a8, &a6, &reduce_generators(&a6, 3), &budget()).unwrap();
        let via_orbit = via_conjugation_orbit(&a8, &a6, &budget()).unwrap();
        assert_eq!(via_aut.order(), via_orbit.order());
        assert_eq!(via_aut.order_u64(), Some(720));
    }
}
