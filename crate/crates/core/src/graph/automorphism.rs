//! Full automorphism groups of small graphs by equitable-partition
//! refinement with individualization backtracking.
//!
//! Cells are refined by neighbor counts until stable; the search then
//! individualizes one vertex of the first smallest non-singleton cell.
//! Discrete partitions are compared against the first leaf; the induced
//! vertex map is kept when it preserves edges. Branches are pruned to orbit
//! representatives of the group found so far (stabilizing the individualized
//! prefix), and subtrees whose refined cell-size shape differs from the first
//! path are cut. Every returned generator is verified as an automorphism and
//! the group order is cross-checked against orbit-stabilizer counts along
//! the first path.

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

use super::Graph;

type Partition = Vec<Vec<Point>>;

fn refine(graph: &Graph, mut partition: Partition) -> Partition {
    loop {
        let mut changed = false;
        'outer: for target in 0..partition.len() {
            let in_target = {
                let mut mask = vec![false; graph.vertex_count()];
                for &v in &partition[target] {
                    mask[v] = true;
                }
                mask
            };
            for ci in 0..partition.len() {
                if partition[ci].len() <= 1 {
                    continue;
                }
                let counts: Vec<usize> = partition[ci]
                    .iter()
                    .map(|&v| graph.neighbors(v).iter().filter(|&&w| in_target[w]).count())
                    .collect();
                if counts.windows(2).all(|w| w[0] == w[1]) {
                    continue;
                }
                // split the cell by count, ascending
                let mut pairs: Vec<(usize, Point)> = counts
                    .iter()
                    .copied()
                    .zip(partition[ci].iter().copied())
                    .collect();
                pairs.sort_unstable();
                let mut subcells: Vec<Vec<Point>> = Vec::new();
                let mut last = usize::MAX;
                for (c, v) in pairs {
                    if c != last {
                        subcells.push(Vec::new());
                        last = c;
                    }
                    subcells.last_mut().unwrap().push(v);
                }
                partition.splice(ci..=ci, subcells);
                changed = true;
                break 'outer;
            }
        }
        if !changed {
            return partition;
        }
    }
}

fn shape(partition: &Partition) -> Vec<usize> {
    partition.iter().map(|c| c.len()).collect()
}

struct Search<'g> {
    graph: &'g Graph,
    first_leaf: Option<Vec<Point>>,
    first_shapes: Vec<(Vec<usize>, usize)>, // (cell sizes, branch cell index) per depth
    first_base: Vec<Point>,
    gens: Vec<Permutation>,
    chain: StabilizerChain,
}

impl Search<'_> {
    fn group(&self) -> PermGroup {
        PermGroup::new(self.graph.vertex_count(), self.gens.clone()).unwrap()
    }

    fn orbit_min_under_prefix_stab(&self, prefix: &[Point]) -> Vec<Point> {
        let n = self.graph.vertex_count();
        let stab = self
            .group()
            .pointwise_stabilizer(prefix)
            .expect("prefix in range");
        let mut min: Vec<Point> = (0..n).collect();
        let mut seen = vec![false; n];
        for p in 0..n {
            if seen[p] {
                continue;
            }
            let mut orb = vec![p];
            seen[p] = true;
            let mut head = 0;
            while head < orb.len() {
                let x = orb[head];
                head += 1;
                for g in stab.gens() {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
            }
            for &x in &orb {
                min[x] = p;
            }
        }
        min
    }

    fn dfs(&mut self, partition: Partition, depth: usize, prefix: &mut Vec<Point>) {
        let refined = refine(self.graph, partition);
        let sh = shape(&refined);
        let target = refined
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);

        if depth == self.first_shapes.len() && self.first_leaf.is_none() {
            self.first_shapes.push((sh.clone(), target.unwrap_or(0)));
        } else if depth < self.first_shapes.len() && self.first_shapes[depth].0 != sh {
            return; // cannot correspond to the first path under any automorphism
        }

        let Some(ti) = target else {
            // discrete partition: candidate labeling
            let leaf: Vec<Point> = refined.iter().map(|c| c[0]).collect();
            match &self.first_leaf {
                None => self.first_leaf = Some(leaf),
                Some(first) => {
                    let n = self.graph.vertex_count();
                    let mut images = vec![0usize; n];
                    for (a, b) in first.iter().zip(&leaf) {
                        images[*a] = *b;
                    }
                    if let Ok(q) = Permutation::from_images(images) {
                        if !q.is_identity()
                            && self.graph.is_automorphism(&q)
                            && !self.chain.contains(&q).unwrap()
                        {
                            self.gens.push(q);
                            self.chain = StabilizerChain::build(n, &self.gens);
                        }
                    }
                }
            }
            return;
        };

        if self.first_leaf.is_none() {
            self.first_base.push(refined[ti][0]);
        }
        let orbit_min = self.orbit_min_under_prefix_stab(prefix);
        let mut cell = refined[ti].clone();
        cell.sort_unstable();
        for v in cell {
            if orbit_min[v] != v {
                continue;
            }
            let mut child = refined.clone();
            let rest: Vec<Point> = child[ti].iter().copied().filter(|&w| w != v).collect();
            child.splice(ti..=ti, [vec![v], rest]);
            prefix.push(v);
            self.dfs(child, depth + 1, prefix);
            prefix.pop();
        }
    }
}

/// The full automorphism group of a graph with at most 300 vertices.
pub fn graph_automorphisms(graph: &Graph) -> Result<PermGroup> {
    let n = graph.vertex_count();
    if n > 300 {
        return Err(Error::RegimeExceeded(format!(
            "automorphism search limited to 300 vertices, got {n}"
        )));
    }
    if n == 0 {
        return PermGroup::new(0, vec![]);
    }
    let mut search = Search {
        graph,
        first_leaf: None,
        first_shapes: Vec::new(),
        first_base: Vec::new(),
        gens: Vec::new(),
        chain: StabilizerChain::build(n, &[]),
    };
    search.dfs(vec![(0..n).collect()], 0, &mut Vec::new());
    let group = search.group();

    // cross-check: orbit-stabilizer along the first-path base must multiply
    // to the group order, and every generator must preserve edges
    for g in group.gens() {
        if !graph.is_automorphism(g) {
            return Err(Error::Hypothesis("non-automorphism generator".into()));
        }
    }
    let mut product = num_bigint::BigUint::from(1u32);
    for i in 0..search.first_base.len() {
        let stab = group.pointwise_stabilizer(&search.first_base[..i])?;
        let orbit = stab.orbit(search.first_base[i])?;
        product *= num_bigint::BigUint::from(orbit.len());
    }
    if product != group.order() {
        return Err(Error::Hypothesis(
            "orbit-stabilizer cross-check failed in automorphism search".into(),
        ));
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graphs_have_full_symmetric_groups() {
        let mut factorial = 1u64;
        for n in 1..=8usize {
            factorial *= n as u64;
            let aut = graph_automorphisms(&Graph::complete(n)).unwrap();
            assert_eq!(aut.order_u64(), Some(factorial), "K{n}");
        }
    }

    #[test]
    fn six_cycle_has_dihedral_group() {
        let aut = graph_automorphisms(&Graph::cycle(6)).unwrap();
        assert_eq!(aut.order_u64(), Some(12));
    }

    #[test]
    fn petersen_graph_has_order_120() {
        // Kneser graph on 2-subsets of a 5-set, disjointness adjacency
        let mut pairs = Vec::new();
        for a in 0..5usize {
            for b in a + 1..5 {
                pairs.push((a, b));
            }
        }
        let mut edges = Vec::new();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for (j, &(c, d)) in pairs.iter().enumerate() {
                if i < j && a != c && a != d && b != c && b != d {
                    edges.push((i, j));
                }
            }
        }
        let petersen = Graph::from_edges(10, &edges).unwrap();
        let aut = graph_automorphisms(&petersen).unwrap();
        assert_eq!(aut.order_u64(), Some(120));
    }

    #[test]
    fn path_graph_has_one_reflection() {
        let path = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let aut = graph_automorphisms(&path).unwrap();
        assert_eq!(aut.order_u64(), Some(2));
    }

    #[test]
    fn asymmetric_graph_has_trivial_group() {
        // smallest asymmetric graph: 6 vertices
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (0, 3)],
        )
        .unwrap();
        let aut = graph_automorphisms(&g).unwrap();
        assert_eq!(aut.order_u64(), Some(1));
    }
}
