//! Sabidussi coset graphs Cos(M, H, HgH).

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::search::{core_of, coset_action, intersection, SearchBudget};

use super::Graph;

pub struct CosetGraph {
    pub graph: Graph,
    /// M acting on the right cosets of H (vertex 0 is the coset H).
    pub action: PermGroup,
    /// |H : H meet H^g| when g^2 lies in H, else the out-valency of H.
    pub valency: usize,
    /// Whether <H, g> = M, equivalently whether the graph is connected.
    pub generates: bool,
}

/// Builds the coset graph: vertices are right cosets of H in M, and Hx is
/// adjacent to Hy iff y x^-1 lies in HgH or Hg^-1H.
pub fn coset_graph(
    m: &PermGroup,
    h: &PermGroup,
    g: &Permutation,
    budget: &SearchBudget,
) -> Result<CosetGraph> {
    if !m.has_subgroup(h)? {
        return Err(Error::NotSubgroup("coset graph needs H <= M".into()));
    }
    if !m.contains(g)? {
        return Err(Error::NotSubgroup("g must lie in M".into()));
    }
    let core = core_of(m, h, budget)?;
    if !core.is_trivial() {
        return Err(Error::Hypothesis(format!(
            "H is not core-free (core order {})",
            core.order()
        )));
    }
    if h.contains(g)? {
        return Err(Error::DegenerateCosetGraph(
            "g lies in H, so HgH = H and the graph has no edges".into(),
        ));
    }
    let act = coset_action(m, h, budget)?;
    let n = act.action.degree();
    let h_chain = h.chain();
    let base_targets = [
        act.coset_of(h_chain, g)
            .ok_or_else(|| Error::Hypothesis("coset of g not found".into()))?,
        act.coset_of(h_chain, &g.inverse())
            .ok_or_else(|| Error::Hypothesis("coset of g^-1 not found".into()))?,
    ];
    let origin = act
        .coset_of(h_chain, &Permutation::identity(m.degree()))
        .expect("identity coset");

    // edges are the action orbits of the base arcs (H, Hg) and (H, Hg^-1)
    let mut edges: std::collections::BTreeSet<(usize, usize)> = std::collections::BTreeSet::new();
    let mut frontier: Vec<(usize, usize)> = Vec::new();
    for &t in &base_targets {
        let arc = if origin < t { (origin, t) } else { (t, origin) };
        if edges.insert(arc) {
            frontier.push(arc);
        }
    }
    while let Some((u, v)) = frontier.pop() {
        for gen in act.action.gens() {
            let (a, b) = (gen.apply(u), gen.apply(v));
            let arc = if a < b { (a, b) } else { (b, a) };
            if edges.insert(arc) {
                frontier.push(arc);
            }
        }
    }
    let edge_vec: Vec<(usize, usize)> = edges.into_iter().collect();
    let graph = Graph::from_edges(n, &edge_vec)?;

    let conj = PermGroup::new(
        m.degree(),
        h.gens().iter().map(|x| x.conjugate_by(g)).collect(),
    )?;
    let meet = intersection(h, &conj, budget)?;
    let valency = u64::try_from(&(h.order() / meet.order()))
        .ok()
        .and_then(|v| usize::try_from(v).ok())
        .ok_or_else(|| Error::RegimeExceeded("valency overflow".into()))?;

    let mut span_gens = h.gens().to_vec();
    span_gens.push(g.clone());
    let span = PermGroup::new(m.degree(), span_gens)?;
    let generates = span.order() == m.order();

    Ok(CosetGraph {
        graph,
        action: act.action,
        valency,
        generates,
    })
}
