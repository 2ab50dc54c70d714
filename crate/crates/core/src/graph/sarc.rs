//! s-arc transitivity: an s-arc is an ordered (s+1)-tuple of vertices with
//! consecutive ones adjacent and no immediate backtracking. Transitivity is
//! tested by comparing the orbit of one s-arc with the total count, so the
//! orbit computation short-circuits the full enumeration.

use crate::error::{Error, Result};
use crate::perm::Point;

use super::{Graph, GroupAction};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SArcReport {
    pub vertex_transitive: bool,
    /// Largest s <= s_max with the group transitive on s-arcs; 0 when the
    /// action is not arc-transitive.
    pub s: usize,
    /// Total number of s-arcs for s = 1..=s_max (until counting stopped).
    pub arc_counts: Vec<u64>,
}

fn count_arcs(graph: &Graph, s: usize, cap: u64) -> Result<u64> {
    // dynamic program over directed arcs
    let n = graph.vertex_count();
    let mut arcs: Vec<(Point, Point)> = Vec::new();
    for u in 0..n {
        for &v in graph.neighbors(u) {
            arcs.push((u, v));
        }
    }
    let index: std::collections::HashMap<(Point, Point), usize> = arcs
        .iter()
        .enumerate()
        .map(|(i, &a)| (a, i))
        .collect();
    let mut count: Vec<u64> = vec![1; arcs.len()];
    for _ in 1..s {
        let mut next = vec![0u64; arcs.len()];
        for (i, &(u, v)) in arcs.iter().enumerate() {
            if count[i] == 0 {
                continue;
            }
            for &w in graph.neighbors(v) {
                if w != u {
                    let j = index[&(v, w)];
                    next[j] = next[j]
                        .checked_add(count[i])
                        .ok_or_else(|| Error::RegimeExceeded("s-arc count overflow".into()))?;
                }
            }
        }
        count = next;
    }
    let total: u64 = count.iter().sum();
    if total > cap {
        return Err(Error::RegimeExceeded(format!(
            "s-arc count {total} exceeds cap {cap}"
        )));
    }
    Ok(total)
}

fn first_arc(graph: &Graph, s: usize) -> Option<Vec<Point>> {
    // lexicographically first s-arc by depth-first extension
    fn extend(graph: &Graph, tuple: &mut Vec<Point>, s: usize) -> bool {
        if tuple.len() == s + 1 {
            return true;
        }
        let v = *tuple.last().unwrap();
        let prev = if tuple.len() >= 2 {
            Some(tuple[tuple.len() - 2])
        } else {
            None
        };
        for &w in graph.neighbors(v) {
            if Some(w) != prev {
                tuple.push(w);
                if extend(graph, tuple, s) {
                    return true;
                }
                tuple.pop();
            }
        }
        false
    }
    for v in 0..graph.vertex_count() {
        let mut tuple = vec![v];
        if extend(graph, &mut tuple, s) {
            return Some(tuple);
        }
    }
    None
}

fn orbit_size(action: &GroupAction, start: &[Point], cap: u64) -> Result<u64> {
    let mut seen: std::collections::HashSet<Vec<Point>> = std::collections::HashSet::new();
    seen.insert(start.to_vec());
    let mut frontier = vec![start.to_vec()];
    while let Some(t) = frontier.pop() {
        for g in action.group.gens() {
            let img: Vec<Point> = t.iter().map(|&p| g.apply(p)).collect();
            if !seen.contains(&img) {
                if seen.len() as u64 >= cap {
                    return Err(Error::RegimeExceeded("arc orbit exceeds cap".into()));
                }
                seen.insert(img.clone());
                frontier.push(img);
            }
        }
    }
    Ok(seen.len() as u64)
}

/// Largest s <= s_max such that the action is transitive on s-arcs.
pub fn s_arc_transitivity(
    action: &GroupAction,
    graph: &Graph,
    s_max: usize,
) -> Result<SArcReport> {
    const CAP: u64 = 10_000_000;
    let vertex_transitive = action.group.is_transitive();
    let mut s = 0;
    let mut arc_counts = Vec::new();
    for k in 1..=s_max {
        let total = count_arcs(graph, k, CAP)?;
        arc_counts.push(total);
        if total == 0 {
            break;
        }
        let Some(start) = first_arc(graph, k) else {
            break;
        };
        let orbit = orbit_size(action, &start, CAP)?;
        debug_assert!(orbit <= total);
        if orbit == total {
            s = k;
        } else {
            break;
        }
    }
    Ok(SArcReport {
        vertex_transitive,
        s,
        arc_counts,
    })
}
