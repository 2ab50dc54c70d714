//! Conjugation transporter search: elements g of M with `source[i]^g =
//! target[i]` for every i.
//!
//! The DFS walks M's stabilizer chain, choosing images of base points from
//! fundamental orbits. Each assignment `g(x) = y` propagates through the
//! constraints (`g(s(x)) = t(g(x))` and the inverse direction), so most of
//! the map is forced after a few choices. Leaves are verified in full, so
//! pruning can only lose speed, never correctness.

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

use super::{group_from_elements, BudgetMeter, SearchBudget};

struct Problem<'a> {
    chain: &'a StabilizerChain,
    source: Vec<Permutation>,
    target: Vec<Permutation>,
    source_inv: Vec<Permutation>,
    target_inv: Vec<Permutation>,
}

#[derive(Clone)]
struct PartialMap {
    img: Vec<Option<Point>>,
    pre: Vec<Option<Point>>,
}

impl PartialMap {
    fn new(n: usize) -> Self {
        PartialMap {
            img: vec![None; n],
            pre: vec![None; n],
        }
    }

    /// Assigns g(x) = y and propagates; false on contradiction.
    fn assign(&mut self, x: Point, y: Point, prob: &Problem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (self.img[x], self.pre[y]) {
                (Some(y0), _) if y0 != y => return false,
                (_, Some(x0)) if x0 != x => return false,
                (Some(_), _) => continue,
                _ => {}
            }
            self.img[x] = Some(y);
            self.pre[y] = Some(x);
            for i in 0..prob.source.len() {
                queue.push((prob.source[i].apply(x), prob.target[i].apply(y)));
                queue.push((prob.source_inv[i].apply(x), prob.target_inv[i].apply(y)));
            }
        }
        true
    }
}

fn satisfies(g: &Permutation, prob: &Problem) -> bool {
    prob.source
        .iter()
        .zip(&prob.target)
        .all(|(s, t)| s.conjugate_by(g) == *t)
}

fn dfs(
    prob: &Problem,
    level: usize,
    map: &PartialMap,
    t: &Permutation,
    meter: &BudgetMeter,
    out: &mut Vec<Permutation>,
    all: bool,
) -> Result<bool> {
    meter.tick()?;
    if level == prob.chain.num_levels() {
        if satisfies(t, prob) {
            out.push(t.clone());
            return Ok(!all);
        }
        return Ok(false);
    }
    let b = prob.chain.level_base_point(level);
    if let Some(beta) = map.img[b] {
        // the image of this base point is already forced
        let x = t.inverse().apply(beta);
        if let Some(u) = prob.chain.level_transversal(level, x) {
            let t2 = u.compose(t);
            return dfs(prob, level + 1, map, &t2, meter, out, all);
        }
        return Ok(false);
    }
    let mut orbit: Vec<Point> = prob.chain.level_orbit(level).to_vec();
    orbit.sort_unstable();
    for x in orbit {
        let beta = t.apply(x);
        if map.pre[beta].is_some() {
            continue;
        }
        let mut map2 = map.clone();
        if !map2.assign(b, beta, prob) {
            continue;
        }
        let u = prob.chain.level_transversal(level, x).unwrap();
        let t2 = u.compose(t);
        if dfs(prob, level + 1, &map2, &t2, meter, out, all)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Base ordering adapted to the constraints: points grouped by the orbits of
/// the source tuple (largest orbit first), so one assignment per orbit forces
/// the rest of it through propagation.
pub(crate) fn adapted_base(degree: usize, source: &[Permutation]) -> Vec<Point> {
    let mut seen = vec![false; degree];
    let mut orbits: Vec<Vec<Point>> = Vec::new();
    for p in 0..degree {
        if seen[p] {
            continue;
        }
        let mut orb = vec![p];
        seen[p] = true;
        let mut head = 0;
        while head < orb.len() {
            let x = orb[head];
            head += 1;
            for s in source {
                for y in [s.apply(x), s.inverse().apply(x)] {
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
            }
        }
        orbits.push(orb);
    }
    orbits.sort_by_key(|o| (std::cmp::Reverse(o.len()), o[0]));
    orbits.into_iter().flatten().collect()
}

fn solve_with_chain(
    chain: &StabilizerChain,
    source: &[Permutation],
    target: &[Permutation],
    budget: &SearchBudget,
    all: bool,
) -> Result<Vec<Permutation>> {
    debug_assert_eq!(source.len(), target.len());
    let degree = chain.degree();
    let prob = Problem {
        chain,
        source: source.to_vec(),
        target: target.to_vec(),
        source_inv: source.iter().map(|p| p.inverse()).collect(),
        target_inv: target.iter().map(|p| p.inverse()).collect(),
    };
    let meter = budget.meter("transporter");
    let mut out = Vec::new();
    let map = PartialMap::new(degree);
    dfs(
        &prob,
        0,
        &map,
        &Permutation::identity(degree),
        &meter,
        &mut out,
        all,
    )?;
    Ok(out)
}

fn solve(
    m: &PermGroup,
    source: &[Permutation],
    target: &[Permutation],
    budget: &SearchBudget,
    all: bool,
) -> Result<Vec<Permutation>> {
    let chain = m.chain_with_base(&adapted_base(m.degree(), source));
    solve_with_chain(&chain, source, target, budget, all)
}

/// Transporter search against a prebuilt chain (callers scanning many target
/// tuples against one source reuse the adapted chain).
pub fn transporter_with_chain(
    chain: &StabilizerChain,
    source: &[Permutation],
    target: &[Permutation],
    budget: &SearchBudget,
) -> Result<Option<Permutation>> {
    for (s, t) in source.iter().zip(target) {
        if s.cycle_lengths() != t.cycle_lengths() {
            return Ok(None);
        }
    }
    Ok(solve_with_chain(chain, source, target, budget, false)?
        .into_iter()
        .next())
}

/// First element g of `m` with `source[i]^g = target[i]` for all i, if any.
pub fn transporter(
    m: &PermGroup,
    source: &[Permutation],
    target: &[Permutation],
    budget: &SearchBudget,
) -> Result<Option<Permutation>> {
    if source.len() != target.len() {
        return Err(Error::Hypothesis("transporter tuple lengths differ".into()));
    }
    for (s, t) in source.iter().zip(target) {
        if s.cycle_lengths() != t.cycle_lengths() {
            return Ok(None);
        }
    }
    Ok(solve(m, source, target, budget, false)?.into_iter().next())
}

/// Centralizer of `h` in `m`: all elements commuting with every generator.
pub fn centralizer_in_group(
    m: &PermGroup,
    h: &PermGroup,
    budget: &SearchBudget,
) -> Result<PermGroup> {
    let gens: Vec<Permutation> = h
        .gens()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    if gens.is_empty() {
        return Ok(m.clone());
    }
    let elems = solve(m, &gens, &gens, budget, true)?;
    group_from_elements(m.degree(), elems)
}

pub fn centralizer_of_element(
    m: &PermGroup,
    x: &Permutation,
    budget: &SearchBudget,
) -> Result<PermGroup> {
    let gens = vec![x.clone()];
    let elems = solve(m, &gens, &gens, budget, true)?;
    group_from_elements(m.degree(), elems)
}

/// Whether x and y are conjugate inside g.
pub fn are_conjugate(
    g: &PermGroup,
    x: &Permutation,
    y: &Permutation,
    budget: &SearchBudget,
) -> Result<bool> {
    Ok(transporter(g, &[x.clone()], &[y.clone()], budget)?.is_some())
}
