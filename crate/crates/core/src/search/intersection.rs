//! Subgroup intersection by backtracking over two stabilizer chains that
//! share one base sequence. Candidate base images must lie in both sides'
//! fundamental-orbit images; a side whose current stabilizer fixes the point
//! forces the image outright. Leaves yield the element when both partial
//! products agree.

use std::collections::BTreeSet;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

use super::{BudgetMeter, SearchBudget};

struct Side {
    chain: StabilizerChain,
}

struct State {
    level_g: usize,
    level_h: usize,
    t_g: Permutation,
    t_h: Permutation,
}

struct Search<'a> {
    combined: Vec<Point>,
    g: &'a Side,
    h: &'a Side,
    meter: BudgetMeter<'a>,
    found: Vec<Permutation>,
    found_chain: StabilizerChain,
    orbit_min: Vec<Point>,
    degree: usize,
}

impl Search<'_> {
    fn orbit_min_recompute(&mut self) {
        // smallest point of each orbit under the found subgroup
        let n = self.degree;
        let mut min = (0..n).collect::<Vec<Point>>();
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
                for gperm in &self.found {
                    let y = gperm.apply(x);
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
        self.orbit_min = min;
    }

    fn dfs(&mut self, j: usize, st: &State) -> Result<()> {
        self.meter.tick()?;
        if j == self.combined.len() {
            debug_assert_eq!(st.level_g, self.g.chain.num_levels());
            debug_assert_eq!(st.level_h, self.h.chain.num_levels());
            if st.t_g == st.t_h && !st.t_g.is_identity() && !self.found_chain.contains(&st.t_g)? {
                self.found.push(st.t_g.clone());
                self.found_chain =
                    StabilizerChain::build(self.degree, &self.found);
                self.orbit_min_recompute();
            }
            return Ok(());
        }
        let b = self.combined[j];
        let g_active = st.level_g < self.g.chain.num_levels()
            && self.g.chain.level_base_point(st.level_g) == b;
        let h_active = st.level_h < self.h.chain.num_levels()
            && self.h.chain.level_base_point(st.level_h) == b;

        // candidate images of b from each side
        let candidates: Vec<Point> = if g_active {
            let mut v: Vec<Point> = self
                .g
                .chain
                .level_orbit(st.level_g)
                .iter()
                .map(|&x| st.t_g.apply(x))
                .collect();
            v.sort_unstable();
            v
        } else {
            vec![st.t_g.apply(b)]
        };
        let h_forced = if h_active { None } else { Some(st.t_h.apply(b)) };

        for beta in candidates {
            if let Some(hb) = h_forced {
                if hb != beta {
                    continue;
                }
            }
            if j == 0 && self.orbit_min[beta] != beta {
                continue; // only the first point of each found-subgroup orbit
            }
            let mut next = State {
                level_g: st.level_g,
                level_h: st.level_h,
                t_g: st.t_g.clone(),
                t_h: st.t_h.clone(),
            };
            if g_active {
                let x = st.t_g.inverse().apply(beta);
                match self.g.chain.level_transversal(st.level_g, x) {
                    Some(u) => {
                        next.t_g = u.compose(&st.t_g);
                        next.level_g += 1;
                    }
                    None => continue,
                }
            }
            if h_active {
                let x = st.t_h.inverse().apply(beta);
                match self.h.chain.level_transversal(st.level_h, x) {
                    Some(u) => {
                        next.t_h = u.compose(&st.t_h);
                        next.level_h += 1;
                    }
                    None => continue,
                }
            }
            self.dfs(j + 1, &next)?;
        }
        Ok(())
    }
}

/// Exact intersection of two groups of equal degree.
pub fn intersection(g: &PermGroup, h: &PermGroup, budget: &SearchBudget) -> Result<PermGroup> {
    if g.degree() != h.degree() {
        return Err(Error::DegreeMismatch(g.degree(), h.degree()));
    }
    if g.has_subgroup(h)? {
        return Ok(h.clone());
    }
    if h.has_subgroup(g)? {
        return Ok(g.clone());
    }
    let degree = g.degree();

    // one base sequence covering both chains
    let mut combined: Vec<Point> = g.chain().base().to_vec();
    let (cg, ch) = loop {
        let cg = g.chain_with_base(&combined);
        let ch = h.chain_with_base(&combined);
        let mut extended = false;
        for &b in cg.base().iter().chain(ch.base()) {
            if !combined.contains(&b) {
                combined.push(b);
                extended = true;
            }
        }
        if !extended {
            break (cg, ch);
        }
    };
    // keep only points that are a base point of at least one side, in order
    let in_base: BTreeSet<Point> = cg.base().iter().chain(ch.base()).copied().collect();
    let combined: Vec<Point> = combined.into_iter().filter(|b| in_base.contains(b)).collect();

    let side_g = Side { chain: cg };
    let side_h = Side { chain: ch };
    let mut search = Search {
        combined,
        g: &side_g,
        h: &side_h,
        meter: budget.meter("intersection"),
        found: Vec::new(),
        found_chain: StabilizerChain::build(degree, &[]),
        orbit_min: (0..degree).collect(),
        degree,
    };
    let st = State {
        level_g: 0,
        level_h: 0,
        t_g: Permutation::identity(degree),
        t_h: Permutation::identity(degree),
    };
    search.dfs(0, &st)?;
    PermGroup::new(degree, search.found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;
    use crate::group::brute_force_elements;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn a4_meets_cyclic4() {
        let a4 = builtin_group("A:4").unwrap();
        let z4 = PermGroup::from_cycles(4, &["(0 1 2 3)"]).unwrap();
        let i = intersection(&a4, &z4, &budget()).unwrap();
        assert_eq!(i.order_u64(), Some(2));
        assert!(i
            .contains(&Permutation::parse("(0 2)(1 3)", 4).unwrap())
            .unwrap());
    }

    #[test]
    fn self_intersection() {
        let g = builtin_group("A:5").unwrap();
        let i = intersection(&g, &g, &budget()).unwrap();
        assert_eq!(i.order_u64(), Some(60));
    }

    #[test]
    fn against_brute_force_on_pairs() {
        use rand::SeedableRng;
        let s6 = builtin_group("S:6").unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let all: std::collections::HashSet<_> = brute_force_elements(s6.gens(), 6, 800)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(all.len(), 720);
        for _ in 0..12 {
            let g = PermGroup::new(
                6,
                vec![s6.random_element(&mut rng), s6.random_element(&mut rng)],
            )
            .unwrap();
            let h = PermGroup::new(
                6,
                vec![s6.random_element(&mut rng), s6.random_element(&mut rng)],
            )
            .unwrap();
            let i = intersection(&g, &h, &budget()).unwrap();
            let brute: Vec<_> = all
                .iter()
                .filter(|p| g.contains(p).unwrap() && h.contains(p).unwrap())
                .cloned()
                .collect();
            assert_eq!(i.order_u64(), Some(brute.len() as u64));
            for p in brute {
                assert!(i.contains(&p).unwrap());
            }
        }
    }

    #[test]
    fn psl32_on_8_meets_point_stabilizer_of_a8() {
        // index-8 realization of the degree-3 linear group meets a point
        // stabilizer of A8 in a subgroup of order 21
        let l = builtin_group("PSL32@8").unwrap();
        let a8 = builtin_group("A:8").unwrap();
        let stab = a8.point_stabilizer(0).unwrap();
        let i = intersection(&l, &stab, &budget()).unwrap();
        assert_eq!(i.order_u64(), Some(21));
    }
}
