//! Deterministic Schreier-Sims stabilizer chains.
//!
//! A single strong-generator list is shared across levels; level `i` acts
//! with every strong generator fixing the base prefix `b_0..b_{i-1}`. The
//! build verifies Schreier generators level by level (deepest dirty level
//! first) and only terminates on a clean pass, so `order` and membership are
//! exact. Base points follow the smallest-moved-point rule, optionally after
//! a caller-prescribed prefix, which makes chains reproducible.

use num_bigint::BigUint;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

#[derive(Clone)]
struct Level {
    base_point: Point,
    /// Indices into `strong_gens` of the generators acting at this level.
    gen_idx: Vec<usize>,
    /// BFS order of the fundamental orbit.
    orbit: Vec<Point>,
    /// Transversal element per point: maps `base_point` to that point.
    transversal: Vec<Option<Permutation>>,
}

#[derive(Clone)]
pub struct StabilizerChain {
    degree: usize,
    strong_gens: Vec<Permutation>,
    base: Vec<Point>,
    levels: Vec<Level>,
    order: BigUint,
}

impl StabilizerChain {
    pub fn build(degree: usize, gens: &[Permutation]) -> StabilizerChain {
        Self::build_with_base(degree, gens, &[])
    }

    /// Builds with a prescribed base prefix (used by point stabilizers and
    /// the intersection/backtrack machinery); remaining base points follow
    /// the smallest-moved-point rule.
    pub fn build_with_base(
        degree: usize,
        gens: &[Permutation],
        base_hint: &[Point],
    ) -> StabilizerChain {
        let strong_gens: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabilizerChain {
            degree,
            strong_gens,
            base: Vec::new(),
            levels: Vec::new(),
            order: BigUint::from(1u32),
        };
        chain.rebuild_from(0, base_hint);
        chain.fix(base_hint);
        chain.order = chain
            .levels
            .iter()
            .map(|l| BigUint::from(l.orbit.len()))
            .product();
        chain
    }

    fn fixes_prefix(&self, g: &Permutation, len: usize) -> bool {
        self.base[..len].iter().all(|&b| g.apply(b) == b)
    }

    /// Recomputes base points and orbits for levels `from..`.
    fn rebuild_from(&mut self, from: usize, base_hint: &[Point]) {
        self.base.truncate(from);
        self.levels.truncate(from);
        loop {
            let i = self.base.len();
            let gen_idx: Vec<usize> = (0..self.strong_gens.len())
                .filter(|&k| self.fixes_prefix(&self.strong_gens[k], i))
                .collect();
            if gen_idx.is_empty() {
                break;
            }
            let hinted = base_hint
                .iter()
                .find(|&&b| {
                    !self.base.contains(&b)
                        && gen_idx.iter().any(|&k| self.strong_gens[k].apply(b) != b)
                })
                .copied();
            let base_point = hinted.unwrap_or_else(|| {
                gen_idx
                    .iter()
                    .filter_map(|&k| self.strong_gens[k].smallest_moved_point())
                    .min()
                    .unwrap()
            });
            self.base.push(base_point);
            let level = self.make_level(base_point, gen_idx);
            self.levels.push(level);
        }
    }

    fn make_level(&self, base_point: Point, gen_idx: Vec<usize>) -> Level {
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        let mut orbit = vec![base_point];
        transversal[base_point] = Some(Permutation::identity(self.degree));
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &k in &gen_idx {
                let g = &self.strong_gens[k];
                let y = g.apply(x);
                if transversal[y].is_none() {
                    transversal[y] = Some(transversal[x].as_ref().unwrap().compose(g));
                    orbit.push(y);
                }
            }
        }
        Level {
            base_point,
            gen_idx,
            orbit,
            transversal,
        }
    }

    /// Verifies Schreier generators from the deepest level upward; on a
    /// failure the residue joins the strong generators and verification
    /// restarts at its level.
    fn fix(&mut self, base_hint: &[Point]) {
        let mut lev = self.levels.len();
        'outer: while lev > 0 {
            lev -= 1;
            let nlevel = self.levels.len();
            for oi in 0..self.levels[lev].orbit.len() {
                for gi in 0..self.levels[lev].gen_idx.len() {
                    let x = self.levels[lev].orbit[oi];
                    let k = self.levels[lev].gen_idx[gi];
                    let g = &self.strong_gens[k];
                    let ux = self.levels[lev].transversal[x].as_ref().unwrap();
                    let y = g.apply(x);
                    let uy = self.levels[lev].transversal[y].as_ref().unwrap();
                    let schreier = ux.compose(g).compose(&uy.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, at) = self.sift_from(schreier, lev + 1);
                    if !residue.is_identity() {
                        self.strong_gens.push(residue);
                        self.rebuild_from(lev + 1, base_hint);
                        // re-verify everything from the deepest level again;
                        // levels above `lev` were not yet verified anyway
                        lev = self.levels.len();
                        continue 'outer;
                    }
                    debug_assert!(at <= nlevel + 1);
                }
            }
        }
    }

    fn sift_from(&self, mut p: Permutation, start: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = p.apply(level.base_point);
            if x == level.base_point {
                continue;
            }
            match &level.transversal[x] {
                None => return (p, i),
                Some(u) => p = p.compose(&u.inverse()),
            }
        }
        (p, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(&self.order).ok()
    }

    pub fn base(&self) -> &[Point] {
        &self.base
    }

    pub fn strong_gens(&self) -> &[Permutation] {
        &self.strong_gens
    }

    /// Strong generators fixing the first `i` base points (the level-`i` group).
    pub fn level_gens(&self, i: usize) -> Vec<Permutation> {
        self.strong_gens
            .iter()
            .filter(|g| self.fixes_prefix(g, i))
            .cloned()
            .collect()
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level_base_point(&self, i: usize) -> Point {
        self.levels[i].base_point
    }

    pub fn level_orbit(&self, i: usize) -> &[Point] {
        &self.levels[i].orbit
    }

    pub fn level_transversal(&self, i: usize, point: Point) -> Option<&Permutation> {
        self.levels[i].transversal[point].as_ref()
    }

    /// Sifts `p`; membership holds iff the residue is the identity.
    pub fn sift(&self, p: &Permutation) -> Permutation {
        self.sift_from(p.clone(), 0).0
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(p.degree(), self.degree));
        }
        Ok(self.sift(p).is_identity())
    }

    /// Enumerates all elements when the order is at most `cap`.
    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        let order = self.order_u64()?;
        if order > cap as u64 {
            return None;
        }
        let mut out = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for h in &out {
                for &x in &level.orbit {
                    // h runs over the deeper subgroup: element = h * u
                    next.push(h.compose(level.transversal[x].as_ref().unwrap()));
                }
            }
            out = next;
        }
        debug_assert_eq!(out.len() as u64, order);
        Some(out)
    }

    /// Uniformly random element (product of random transversal elements).
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let x = level.orbit[rng.gen_range(0..level.orbit.len())];
            acc = acc.compose(level.transversal[x].as_ref().unwrap());
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(specs: &[&str], n: usize) -> Vec<Permutation> {
        specs.iter().map(|s| Permutation::parse(s, n).unwrap()).collect()
    }

    /// Brute-force closure, independent of the chain machinery.
    fn closure_count(gens: &[Permutation], n: usize, cap: usize) -> usize {
        let mut set = std::collections::HashSet::new();
        set.insert(Permutation::identity(n));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(n)];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.compose(g);
                if set.insert(y.clone()) {
                    assert!(set.len() <= cap, "closure cap exceeded");
                    frontier.push(y);
                }
            }
        }
        set.len()
    }

    #[test]
    fn a8_order() {
        let gens = perms(&["(0 1 2)", "(1 2 3 4 5 6 7)"], 8);
        let ch = StabilizerChain::build(8, &gens);
        assert_eq!(ch.order_u64(), Some(20160));
    }

    #[test]
    fn single_cycle_order() {
        let gens = perms(&["(0 1 2 3 4 5 6)"], 7);
        assert_eq!(StabilizerChain::build(7, &gens).order_u64(), Some(7));
    }

    #[test]
    fn trivial_group() {
        let ch = StabilizerChain::build(5, &[Permutation::identity(5)]);
        assert_eq!(ch.order_u64(), Some(1));
        assert_eq!(ch.base().len(), 0);
        assert!(ch.contains(&Permutation::identity(5)).unwrap());
        assert!(!ch.contains(&Permutation::parse("(0 1)", 5).unwrap()).unwrap());
    }

    #[test]
    fn chain_order_equals_brute_force_closure() {
        let cases: Vec<(Vec<&str>, usize)> = vec![
            (vec!["(0 1 2)", "(0 1 2 3 4 5 6)"], 7),
            (vec!["(0 1)", "(0 1 2 3 4 5 6)"], 7),
            (vec!["(0 1 2 3)", "(0 1)"], 4),
            (vec!["(0 1)(2 3)", "(0 2)(1 3)"], 4),
            (vec!["(0 1 2)", "(3 4)"], 5),
            (vec!["(0 1 2 3 4)", "(0 1)(3 4)"], 5),
            (vec!["(0 1 2 3 4 5)"], 6),
        ];
        for (specs, n) in cases {
            let gens = perms(&specs, n);
            let ch = StabilizerChain::build(n, &gens);
            let brute = closure_count(&gens, n, 50_000);
            assert_eq!(ch.order_u64(), Some(brute as u64), "{specs:?}");
        }
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let gens = perms(&["(0 1 2)", "(1 2 3)"], 4); // A4
        let ch = StabilizerChain::build(4, &gens);
        assert_eq!(ch.order_u64(), Some(12));
        assert!(ch
            .contains(&Permutation::parse("(0 1)(2 3)", 4).unwrap())
            .unwrap());
        assert!(!ch.contains(&Permutation::parse("(0 1)", 4).unwrap()).unwrap());
        let elems = ch.elements(100).unwrap();
        assert_eq!(elems.len(), 12);
        let mut sorted = elems.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 12, "element enumeration must not repeat");
        for e in &elems {
            assert!(ch.contains(e).unwrap());
        }
    }

    #[test]
    fn prescribed_base_prefix() {
        let gens = perms(&["(0 1 2)", "(1 2 3 4 5 6 7)"], 8);
        let ch = StabilizerChain::build_with_base(8, &gens, &[5, 3]);
        assert_eq!(&ch.base()[..2], &[5, 3]);
        assert_eq!(ch.order_u64(), Some(20160));
    }

    #[test]
    fn random_elements_are_members() {
        use rand::SeedableRng;
        let gens = perms(&["(0 1 2 3 4)", "(2 3 4)"], 5); // A5
        let ch = StabilizerChain::build(5, &gens);
        assert_eq!(ch.order_u64(), Some(60));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let e = ch.random_element(&mut rng);
            assert!(ch.contains(&e).unwrap());
        }
    }
}
