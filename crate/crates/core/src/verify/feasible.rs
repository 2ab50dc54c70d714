//! The feasible-element scan behind the "g exists?" column.
//!
//! For each conjugacy class of index-7 subgroups K of Mv, provided
//! <Mv, N_M(K)> = M, the right transversal of K in N_M(K) is scanned for
//! elements g with |Mv meet Mv^g| * 7 = |Mv|, <Mv, g> = M and g^2 in Mv.
//! Each reported g is re-verified independently against all four coset-graph
//! conditions, including g in N_M(Mv meet Mv^g). The generation gate cannot
//! hide a feasible g (any such g already forces <Mv, N_M(K)> = M); the
//! paranoid mode rescans without the gate to confirm that empirically.



use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::exec;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::search::{
    core_of, intersection, low_index_subgroups, normalizer, right_transversal, SearchBudget,
};

#[derive(Clone, Debug)]
pub struct SubgroupScan {
    pub class_id: usize,
    pub normalizer_order: u64,
    pub gate_passed: bool,
    pub feasible_count: u64,
}

#[derive(Clone, Debug, Default)]
pub struct FeasibleReport {
    pub feasible_g_count: u64,
    pub feasible_2element_g_count: u64,
    pub per_subgroup: Vec<SubgroupScan>,
    /// The feasible elements themselves, for coset-graph round trips.
    pub witnesses: Vec<Permutation>,
}

pub fn feasible_elements(
    m: &PermGroup,
    mv: &PermGroup,
    paranoid: bool,
    budget: &SearchBudget,
) -> Result<FeasibleReport> {
    if !m.has_subgroup(mv)? {
        return Err(Error::NotSubgroup("feasible scan needs Mv <= M".into()));
    }
    let core = core_of(m, mv, budget)?;
    if !core.is_trivial() {
        return Err(Error::Hypothesis("Mv is not core-free in M".into()));
    }
    let mv_order = mv
        .order_u64()
        .ok_or_else(|| Error::RegimeExceeded("stabilizer order overflow".into()))?;
    if mv_order % 7 != 0 {
        return Ok(FeasibleReport::default());
    }
    let m_order = m.order();

    let mut classes = low_index_subgroups(mv, 7, budget)?;
    // deterministic class ids: sort by element sets
    classes.sort_by_cached_key(|k| {
        k.elements(mv_order as usize / 7)
            .map(|mut v| {
                v.sort();
                v
            })
            .unwrap_or_default()
    });

    let mut report = FeasibleReport::default();
    for (class_id, k) in classes.iter().enumerate() {
        let n_k = normalizer(m, k, budget)?;
        let mut span_gens = mv.gens().to_vec();
        span_gens.extend(n_k.gens().iter().cloned());
        let gate_passed =
            *StabilizerChain::build(m.degree(), &span_gens).order() == m_order;
        let mut scan = SubgroupScan {
            class_id,
            normalizer_order: n_k.order_u64().unwrap_or(u64::MAX),
            gate_passed,
            feasible_count: 0,
        };
        if gate_passed || paranoid {
            let reps = right_transversal(&n_k, k, budget)?;
            let found = exec::map_collect(&reps, |g| -> Option<Permutation> {
                if !mv.contains(&g.compose(g)).ok()? {
                    return None;
                }
                let conj = PermGroup::new(
                    m.degree(),
                    mv.gens().iter().map(|x| x.conjugate_by(g)).collect(),
                )
                .ok()?;
                let meet = intersection(mv, &conj, budget).ok()?;
                if meet.order_u64()? * 7 != mv_order {
                    return None;
                }
                let mut span = mv.gens().to_vec();
                span.push(g.clone());
                if *StabilizerChain::build(m.degree(), &span).order() != m_order {
                    return None;
                }
                Some(g.clone())
            });
            for g in found.into_iter().flatten() {
                verify_feasible(m, mv, &g, budget)?;
                scan.feasible_count += 1;
                report.feasible_g_count += 1;
                if g.is_two_element() {
                    report.feasible_2element_g_count += 1;
                }
                report.witnesses.push(g);
            }
        }
        report.per_subgroup.push(scan);
    }
    Ok(report)
}

/// Independent recheck of the four coset-graph conditions.
fn verify_feasible(
    m: &PermGroup,
    mv: &PermGroup,
    g: &Permutation,
    budget: &SearchBudget,
) -> Result<()> {
    let conj = PermGroup::new(
        m.degree(),
        mv.gens().iter().map(|x| x.conjugate_by(g)).collect(),
    )?;
    let meet = intersection(mv, &conj, budget)?;
    let mv_order = mv.order_u64().unwrap();
    let ok_index = meet.order_u64() == Some(mv_order / 7);
    let ok_square = mv.contains(&g.compose(g))?;
    let mut span = mv.gens().to_vec();
    span.push(g.clone());
    let ok_gen = *StabilizerChain::build(m.degree(), &span).order() == m.order();
    // g must normalize Mv meet Mv^g
    let ok_norm = {
        let mut ok = true;
        for x in meet.gens() {
            if !meet.contains(&x.conjugate_by(g))? {
                ok = false;
            }
        }
        ok
    };
    if ok_index && ok_square && ok_gen && ok_norm {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!(
            "feasible element failed recheck (index {ok_index}, square {ok_square}, generation {ok_gen}, normalizer {ok_norm})"
        )))
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
    fn a8_with_point_stabilizer_has_a_feasible_element() {
        let a8 = builtin_group("A:8").unwrap();
        let a7 = a8.point_stabilizer(7).unwrap();
        let rep = feasible_elements(&a8, &a7, false, &budget()).unwrap();
        assert!(rep.feasible_g_count > 0);
        assert_eq!(rep.feasible_g_count, rep.feasible_2element_g_count);
        assert_eq!(rep.per_subgroup.len(), 1); // one class of index-7 subgroups of A7
    }

    #[test]
    fn a7_with_psl32_has_no_feasible_element() {
        let a7 = builtin_group("A:7").unwrap();
        // a transitive degree-7 copy: PSL32@7 acts on 7 points
        let l = builtin_group("PSL32@7").unwrap();
        assert!(a7.has_subgroup(&l).unwrap());
        let rep = feasible_elements(&a7, &l, false, &budget()).unwrap();
        assert_eq!(rep.feasible_g_count, 0);
    }

    #[test]
    fn paranoid_mode_agrees_with_gated_scan() {
        let a8 = builtin_group("A:8").unwrap();
        let a7 = a8.point_stabilizer(7).unwrap();
        let gated = feasible_elements(&a8, &a7, false, &budget()).unwrap();
        let paranoid = feasible_elements(&a8, &a7, true, &budget()).unwrap();
        assert_eq!(gated.feasible_g_count, paranoid.feasible_g_count);
        assert_eq!(
            gated.feasible_2element_g_count,
            paranoid.feasible_2element_g_count
        );
    }
}
