//! Cayley-graph normality: whether the right regular representation is
//! normal in the full automorphism group, with the normalizer-order
//! cross-check |N_A(R(G))| = |G| * |Aut(G, S)| computed from two independent
//! sides.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{cayley_graph, graph_automorphisms};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::search::{normalizer, SearchBudget};

use super::autfix::aut_fixing_set;

#[derive(Clone, Debug)]
pub struct NormalityReport {
    pub vertex_count: usize,
    pub valency: Option<usize>,
    pub aut_order: BigUint,
    pub r_normal: bool,
    pub normalizer_order: BigUint,
    pub aut_gs_order: u64,
    /// |N_A(R(G))| == |G| * |Aut(G,S)|.
    pub godsil_cross_check: bool,
    /// r_normal iff the normalizer is the whole automorphism group.
    pub internally_consistent: bool,
}

pub fn cayley_normality_check(
    g: &PermGroup,
    s: &[Permutation],
    budget: &SearchBudget,
) -> Result<NormalityReport> {
    let order = g
        .order_u64()
        .filter(|&o| o <= 200)
        .ok_or_else(|| Error::RegimeExceeded("normality check limited to order 200".into()))?;
    let cg = cayley_graph(g, s)?;
    if !cg.graph.is_connected() {
        return Err(Error::Hypothesis(
            "connection set does not generate the group".into(),
        ));
    }
    let aut = graph_automorphisms(&cg.graph)?;
    let r = &cg.right_action;
    for gen in r.gens() {
        if !aut.contains(gen)? {
            return Err(Error::Hypothesis(
                "right action is not an automorphism group member".into(),
            ));
        }
    }
    let r_normal = {
        let mut ok = true;
        'outer: for a in aut.gens() {
            for x in r.gens() {
                if !r.contains(&x.conjugate_by(a))? {
                    ok = false;
                    break 'outer;
                }
            }
        }
        ok
    };
    let n = normalizer(&aut, r, budget)?;
    let afs = aut_fixing_set(g, s)?;
    let aut_gs_order = afs.group.order_u64().unwrap();
    let godsil = n.order() == BigUint::from(order) * BigUint::from(aut_gs_order);
    let consistent = r_normal == (n.order() == aut.order());
    Ok(NormalityReport {
        vertex_count: cg.graph.vertex_count(),
        valency: cg.graph.regular_valency(),
        aut_order: aut.order(),
        r_normal,
        normalizer_order: n.order(),
        aut_gs_order,
        godsil_cross_check: godsil,
        internally_consistent: consistent,
    })
}
