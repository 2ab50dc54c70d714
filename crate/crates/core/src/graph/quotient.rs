//! Normal quotients: vertices of the quotient are the orbits of a normal
//! subgroup of the acting group; the cover report states semiregularity and
//! valency preservation.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Point;

use super::{Graph, GroupAction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub orbit_count: usize,
    pub semiregular: bool,
    /// Valency preserved, i.e. the quotient is a normal cover base.
    pub valency_preserved: bool,
}

/// Quotient of the graph by the orbits of a normal subgroup with at least
/// three orbits.
pub fn quotient_graph(
    graph: &Graph,
    action: &GroupAction,
    normal: &PermGroup,
) -> Result<(Graph, CoverReport)> {
    if normal.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch(
            normal.degree(),
            graph.vertex_count(),
        ));
    }
    // normality check on generators
    for g in action.group.gens() {
        for x in normal.gens() {
            if !normal.contains(&x.conjugate_by(g))? {
                return Err(Error::Hypothesis(
                    "subgroup is not normalized by the action".into(),
                ));
            }
        }
    }
    let orbits = normal.orbits();
    if orbits.len() <= 2 {
        return Err(Error::Hypothesis(format!(
            "normal subgroup has {} orbit(s); at least three are required",
            orbits.len()
        )));
    }
    let mut block_of = vec![0usize; graph.vertex_count()];
    for (b, orbit) in orbits.iter().enumerate() {
        for &v in orbit {
            block_of[v] = b;
        }
    }
    let mut edges: Vec<(Point, Point)> = Vec::new();
    for u in 0..graph.vertex_count() {
        for &v in graph.neighbors(u) {
            if block_of[u] != block_of[v] {
                edges.push((block_of[u], block_of[v]));
            }
        }
    }
    let quotient = Graph::from_edges(orbits.len(), &edges)?;
    let report = CoverReport {
        orbit_count: orbits.len(),
        semiregular: normal.is_semiregular(),
        valency_preserved: graph.regular_valency().is_some()
            && graph.regular_valency() == quotient.regular_valency(),
    };
    Ok((quotient, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;
    use crate::perm::Permutation;

    /// Bipartite double cover of K8 with its arc-transitive group A8 x Z2.
    fn double_cover_of_k8() -> (Graph, GroupAction, PermGroup) {
        // vertices (v, i) encoded as v + 8i
        let mut edges = Vec::new();
        for v in 0..8usize {
            for w in 0..8usize {
                if v != w {
                    edges.push((v, w + 8));
                }
            }
        }
        let cover = Graph::from_edges(16, &edges).unwrap();
        let a8 = builtin_group("A:8").unwrap();
        let mut gens = Vec::new();
        for g in a8.gens() {
            let images: Vec<usize> = (0..16)
                .map(|x| {
                    let (v, i) = (x % 8, x / 8);
                    g.apply(v) + 8 * i
                })
                .collect();
            gens.push(Permutation::from_images(images).unwrap());
        }
        // the deck transformation swapping the two sheets
        let swap =
            Permutation::from_images((0..16).map(|x| (x + 8) % 16).collect()).unwrap();
        gens.push(swap.clone());
        let group = PermGroup::new(16, gens).unwrap();
        let action = GroupAction::new(group, &cover).unwrap();
        let deck = PermGroup::new(16, vec![swap]).unwrap();
        (cover, action, deck)
    }

    #[test]
    fn double_cover_quotients_back_to_k8() {
        let (cover, action, deck) = double_cover_of_k8();
        assert_eq!(cover.regular_valency(), Some(7));
        let (q, report) = quotient_graph(&cover, &action, &deck).unwrap();
        assert_eq!(q, Graph::complete(8));
        assert_eq!(report.orbit_count, 8);
        assert!(report.semiregular);
        assert!(report.valency_preserved);
    }

    #[test]
    fn trivial_subgroup_gives_the_graph_itself() {
        let k5 = Graph::complete(5);
        let a5 = builtin_group("A:5").unwrap();
        let action = GroupAction::new(a5, &k5).unwrap();
        let triv = PermGroup::trivial(5);
        let (q, report) = quotient_graph(&k5, &action, &triv).unwrap();
        assert_eq!(q, k5);
        assert!(report.valency_preserved);
    }

    #[test]
    fn two_orbit_subgroup_rejected() {
        let k8 = Graph::complete(8);
        let z8 = builtin_group("C:8").unwrap();
        let action = GroupAction::new(z8.clone(), &k8).unwrap();
        // index-2 subgroup of the regular Z8 has two orbits of size 4
        let z4 = PermGroup::from_cycles(8, &["(0 2 4 6)(1 3 5 7)"]).unwrap();
        let err = quotient_graph(&k8, &action, &z4).unwrap_err();
        assert!(err.to_string().contains("orbit"));
    }
}
