//! Cayley graphs on enumerated group elements, with the right and left
//! regular representations as vertex actions.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::Graph;

pub struct CayleyGraph {
    pub graph: Graph,
    /// Vertex i is the group element labels[i]; vertex 0 is the identity.
    pub labels: Vec<Permutation>,
    /// Right regular representation R(G) acting on vertex indices.
    pub right_action: PermGroup,
    /// Left regular representation L(G) acting on vertex indices.
    pub left_action: PermGroup,
}

/// Builds Cay(G, S): vertices are the elements of G, with x adjacent to y
/// iff y x^-1 lies in S. Vertex enumeration is breadth-first from the
/// identity over the sorted connection set, then over any remaining
/// components, so adjacency output is reproducible.
pub fn cayley_graph(group: &PermGroup, connection: &[Permutation]) -> Result<CayleyGraph> {
    let order = group
        .order_u64()
        .filter(|&o| o <= 20_000)
        .ok_or_else(|| Error::RegimeExceeded("cayley graphs limited to order 20000".into()))?;

    let mut set: Vec<Permutation> = connection.to_vec();
    set.sort();
    set.dedup();
    if set.len() != connection.len() {
        return Err(Error::Hypothesis("connection set has repeats".into()));
    }
    if set.iter().any(|s| s.is_identity()) {
        return Err(Error::Hypothesis("identity in connection set".into()));
    }
    for s in &set {
        if !set.contains(&s.inverse()) {
            return Err(Error::Hypothesis(
                "connection set is not inverse-closed".into(),
            ));
        }
        if !group.contains(s)? {
            return Err(Error::NotSubgroup(
                "connection element outside the group".into(),
            ));
        }
    }

    // breadth-first enumeration from the identity over sorted S
    let mut all = group
        .elements(order as usize)
        .expect("order bounded above");
    all.sort();
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut labels: Vec<Permutation> = Vec::with_capacity(order as usize);
    let push = |e: Permutation,
                    labels: &mut Vec<Permutation>,
                    index: &mut HashMap<Permutation, usize>| {
        if !index.contains_key(&e) {
            index.insert(e.clone(), labels.len());
            labels.push(e);
        }
    };
    let mut seed_at = 0usize;
    push(
        Permutation::identity(group.degree()),
        &mut labels,
        &mut index,
    );
    loop {
        let mut head = labels.len() - 1;
        // BFS of the current component
        let mut frontier = vec![labels[head].clone()];
        while let Some(x) = frontier.pop() {
            for s in &set {
                let y = s.compose(&x);
                if !index.contains_key(&y) {
                    push(y.clone(), &mut labels, &mut index);
                    frontier.push(y);
                }
            }
        }
        head = labels.len();
        if head as u64 == order {
            break;
        }
        // disconnected: seed the next component with the smallest unvisited
        while index.contains_key(&all[seed_at]) {
            seed_at += 1;
        }
        push(all[seed_at].clone(), &mut labels, &mut index);
    }

    let n = labels.len();
    let mut edges = Vec::new();
    for (i, x) in labels.iter().enumerate() {
        for s in &set {
            let y = s.compose(x);
            let j = index[&y];
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(n, &edges)?;

    // R(g): x -> x g ; L(g): x -> g^-1 x
    let mut right_gens = Vec::new();
    let mut left_gens = Vec::new();
    for g in group.gens() {
        let ginv = g.inverse();
        let mut r_images = vec![0usize; n];
        let mut l_images = vec![0usize; n];
        for (i, x) in labels.iter().enumerate() {
            r_images[i] = index[&x.compose(g)];
            l_images[i] = index[&ginv.compose(x)];
        }
        right_gens.push(Permutation::from_images(r_images)?);
        left_gens.push(Permutation::from_images(l_images)?);
    }
    Ok(CayleyGraph {
        graph,
        labels,
        right_action: PermGroup::new(n, right_gens)?,
        left_action: PermGroup::new(n, left_gens)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    #[test]
    fn complete_cayley_graph_on_z8() {
        let z8 = builtin_group("C:8").unwrap();
        let elems = z8.elements(8).unwrap();
        let s: Vec<Permutation> = elems.into_iter().filter(|e| !e.is_identity()).collect();
        let cg = cayley_graph(&z8, &s).unwrap();
        assert_eq!(cg.graph.vertex_count(), 8);
        assert_eq!(cg.graph.regular_valency(), Some(7));
        assert!(cg.graph.is_connected());
        assert!(cg.right_action.is_regular());
        assert!(cg.left_action.is_regular());
    }

    #[test]
    fn left_and_right_actions_centralize() {
        let a4 = builtin_group("A:4").unwrap();
        // inverse-closed set: two 3-cycles and their inverses
        let s = vec![
            Permutation::parse("(0 1 2)", 4).unwrap(),
            Permutation::parse("(0 2 1)", 4).unwrap(),
            Permutation::parse("(1 2 3)", 4).unwrap(),
            Permutation::parse("(1 3 2)", 4).unwrap(),
        ];
        let cg = cayley_graph(&a4, &s).unwrap();
        // L(G) centralizes R(G) element-wise in the symmetric group on the
        // vertices; both are regular
        for r in cg.right_action.gens() {
            for l in cg.left_action.gens() {
                assert_eq!(r.compose(l), l.compose(r));
            }
        }
        assert!(cg.right_action.is_regular());
        assert!(cg.left_action.is_regular());
        // right translations are always graph automorphisms
        for g in cg.right_action.gens() {
            assert!(cg.graph.is_automorphism(g));
        }
    }

    #[test]
    fn bad_connection_sets_rejected() {
        let a4 = builtin_group("A:4").unwrap();
        let id = Permutation::identity(4);
        assert!(cayley_graph(&a4, &[id]).is_err());
        // not inverse closed
        let s = vec![Permutation::parse("(0 1 2)", 4).unwrap()];
        assert!(cayley_graph(&a4, &s).is_err());
    }

    #[test]
    fn disconnected_when_set_generates_proper_subgroup() {
        let a4 = builtin_group("A:4").unwrap();
        let s = vec![Permutation::parse("(0 1)(2 3)", 4).unwrap()];
        let cg = cayley_graph(&a4, &s).unwrap();
        assert_eq!(cg.graph.vertex_count(), 12);
        assert!(!cg.graph.is_connected());
    }
}
