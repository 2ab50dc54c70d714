//! Permutation groups: generators plus a lazily built stabilizer chain.
//!
//! A `PermGroup` with a completed chain is immutable and shareable across
//! threads; first access to the chain is serialized by a once-only latch.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::Rng;

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::perm::{Permutation, Point};

pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<Arc<StabilizerChain>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(Arc::clone(c));
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            chain,
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup(degree {}, {} gens)", self.degree, self.gens.len())
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(g.degree(), degree));
            }
        }
        let gens = if gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            gens
        };
        Ok(PermGroup {
            degree,
            gens,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, vec![]).unwrap()
    }

    pub fn from_cycles(degree: usize, cycles: &[&str]) -> Result<Self> {
        let gens = cycles
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &Arc<StabilizerChain> {
        self.chain
            .get_or_init(|| Arc::new(StabilizerChain::build(self.degree, &self.gens)))
    }

    /// Fresh chain whose base starts with the given points.
    pub fn chain_with_base(&self, base: &[Point]) -> StabilizerChain {
        StabilizerChain::build_with_base(self.degree, &self.gens, base)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order().clone()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.chain().order_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(|g| g.is_identity())
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.chain().contains(p)
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn has_subgroup(&self, other: &PermGroup) -> Result<bool> {
        if other.degree != self.degree {
            return Err(Error::DegreeMismatch(other.degree, self.degree));
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_group(&self, other: &PermGroup) -> Result<bool> {
        Ok(self.order() == other.order() && self.has_subgroup(other)?)
    }

    pub fn orbit(&self, point: Point) -> Result<BTreeSet<Point>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut orb = BTreeSet::new();
        orb.insert(point);
        let mut frontier = vec![point];
        while let Some(x) = frontier.pop() {
            for g in &self.gens {
                let y = g.apply(x);
                if orb.insert(y) {
                    frontier.push(y);
                }
            }
        }
        Ok(orb)
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<Point>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let orb = self.orbit(p).unwrap();
                for &x in &orb {
                    seen[x] = true;
                }
                out.push(orb.into_iter().collect());
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbit(0).map(|o| o.len() == self.degree).unwrap_or(false)
    }

    pub fn is_transitive_on(&self, points: &[Point]) -> bool {
        if points.is_empty() {
            return true;
        }
        let orb = self.orbit(points[0]).unwrap();
        points.iter().all(|p| orb.contains(p))
    }

    /// All point stabilizers trivial.
    pub fn is_semiregular(&self) -> bool {
        match self.order_u64() {
            Some(o) => self
                .orbits()
                .iter()
                .all(|orb| orb.len() as u64 == o || (orb.len() == 1 && o == 1)),
            None => false,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.is_semiregular()
    }

    pub fn point_stabilizer(&self, point: Point) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        if self.gens.iter().all(|g| g.apply(point) == point) {
            return Ok(self.clone());
        }
        let chain = self.chain_with_base(&[point]);
        debug_assert_eq!(chain.base()[0], point);
        let gens = chain.level_gens(1);
        PermGroup::new(self.degree, gens)
    }

    /// Pointwise stabilizer of a set of points.
    pub fn pointwise_stabilizer(&self, points: &[Point]) -> Result<PermGroup> {
        let chain = self.chain_with_base(points);
        // the chain prefers hinted points whenever the current level moves
        // one, so once a non-hint base point appears, the level group fixes
        // every remaining hint point
        let mut cut = 0;
        while cut < chain.base().len() && points.contains(&chain.base()[cut]) {
            cut += 1;
        }
        let gens = chain.level_gens(cut);
        let stab = PermGroup::new(self.degree, gens)?;
        debug_assert!(points
            .iter()
            .all(|&p| stab.gens().iter().all(|g| g.apply(p) == p)));
        Ok(stab)
    }

    /// Smallest normal subgroup of `self` containing `sub`.
    pub fn normal_closure(&self, sub: &PermGroup) -> Result<PermGroup> {
        if !self.has_subgroup(sub)? {
            return Err(Error::NotSubgroup(
                "normal_closure argument is not contained in the group".into(),
            ));
        }
        let mut gens: Vec<Permutation> = sub
            .gens
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        if gens.is_empty() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let mut chain = StabilizerChain::build(self.degree, &gens);
        let target = self.order();
        loop {
            let mut added = false;
            'scan: for i in 0..gens.len() {
                for g in &self.gens {
                    let c = gens[i].conjugate_by(g);
                    if !chain.contains(&c)? {
                        gens.push(c);
                        chain = StabilizerChain::build(self.degree, &gens);
                        added = true;
                        if *chain.order() == target {
                            return Ok(self.clone());
                        }
                        break 'scan;
                    }
                }
            }
            if !added {
                return PermGroup::new(self.degree, gens);
            }
        }
    }

    /// Derived subgroup: normal closure of generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = a.commutator(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        if comms.is_empty() {
            return PermGroup::trivial(self.degree);
        }
        let sub = PermGroup::new(self.degree, comms).unwrap();
        self.normal_closure(&sub).unwrap()
    }

    /// G, G', G'', ... ending with the repeated stable term (a single entry
    /// for the trivial group).
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                return series;
            }
            let next = last.derived_subgroup();
            let stable = next.order() == last.order();
            series.push(next);
            if stable {
                return series;
            }
        }
    }

    pub fn is_perfect(&self) -> bool {
        !self.is_trivial() && self.derived_subgroup().order() == self.order()
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> PermGroup {
        crate::search::centralizer_in_group(self, self, &crate::search::SearchBudget::default())
            .expect("centralizer of the group in itself cannot exceed budget")
    }

    pub fn elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        self.chain().elements(cap)
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        self.chain().random_element(rng)
    }

    /// Conjugacy classes as (representative, size), deterministic order.
    ///
    /// Full element enumeration up to 10^5; random representatives certified
    /// by centralizer orders up to 10^6.
    pub fn conjugacy_classes(&self) -> Result<Vec<(Permutation, u64)>> {
        let order = self
            .order_u64()
            .ok_or_else(|| Error::RegimeExceeded("conjugacy classes need u64 order".into()))?;
        if order <= 100_000 {
            return Ok(self.classes_by_enumeration(order));
        }
        if order <= 1_000_000 {
            return self.classes_by_certified_sampling(order);
        }
        Err(Error::RegimeExceeded(format!(
            "conjugacy classes limited to order 10^6, got {order}"
        )))
    }

    fn classes_by_enumeration(&self, order: u64) -> Vec<(Permutation, u64)> {
        let elems = self.elements(order as usize).expect("order checked");
        let mut remaining: HashSet<Permutation> = elems.into_iter().collect();
        let mut classes = Vec::new();
        while let Some(seed) = remaining.iter().min().cloned() {
            let mut class = HashSet::new();
            class.insert(seed.clone());
            let mut frontier = vec![seed.clone()];
            while let Some(x) = frontier.pop() {
                for g in &self.gens {
                    let y = x.conjugate_by(g);
                    if class.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            for e in &class {
                remaining.remove(e);
            }
            classes.push((seed, class.len() as u64));
        }
        classes.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        classes
    }

    fn classes_by_certified_sampling(&self, order: u64) -> Result<Vec<(Permutation, u64)>> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let budget = crate::search::SearchBudget::default();
        let mut classes: Vec<(Permutation, u64)> = Vec::new();
        let mut covered: u64 = 0;
        let mut attempts = 0usize;
        while covered < order {
            attempts += 1;
            if attempts > 2_000_000 {
                return Err(Error::BudgetExceeded(
                    "certified conjugacy-class sampling did not converge".into(),
                ));
            }
            // random elements plus their powers help reach small classes
            let r = self.random_element(&mut rng);
            let mut candidates = vec![r.clone()];
            let o = r.order();
            for k in 2..o {
                if o % k == 0 {
                    candidates.push(r.pow(k));
                }
            }
            for x in candidates {
                if x.is_identity() {
                    continue;
                }
                if classes.iter().any(|(rep, _)| {
                    rep.cycle_lengths() == x.cycle_lengths()
                        && crate::search::are_conjugate(self, rep, &x, &budget).unwrap_or(false)
                }) {
                    continue;
                }
                let cent = crate::search::centralizer_of_element(self, &x, &budget)?;
                let size = order
                    / cent.order_u64().ok_or_else(|| {
                        Error::RegimeExceeded("centralizer order overflow".into())
                    })?;
                covered += size;
                classes.push((x, size));
            }
            if classes.iter().map(|c| c.1).sum::<u64>() + 1 >= order && covered + 1 >= order {
                // identity class
                break;
            }
        }
        classes.push((Permutation::identity(self.degree), 1));
        let total: u64 = classes.iter().map(|c| c.1).sum();
        if total != order {
            return Err(Error::BudgetExceeded(format!(
                "class sizes sum to {total}, expected {order}"
            )));
        }
        classes.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
        Ok(classes)
    }

    /// Exact simplicity test.
    ///
    /// Up to order 10^5 every conjugacy-class representative is checked by
    /// normal closure. Beyond that, representatives of all prime-order
    /// classes are swept instead: each prime-order element is conjugate into
    /// a fixed Sylow subgroup, and a nontrivial normal subgroup contains an
    /// element of prime order, so closing over the Sylow members is enough.
    pub fn is_simple(&self) -> Result<bool> {
        let order = self
            .order_u64()
            .ok_or_else(|| Error::RegimeExceeded("simplicity test needs u64 order".into()))?;
        if order == 1 {
            return Err(Error::Hypothesis("trivial group".into()));
        }
        if order <= 100_000 {
            for (rep, _) in self.classes_by_enumeration(order) {
                if rep.is_identity() {
                    continue;
                }
                let cyc = PermGroup::new(self.degree, vec![rep])?;
                if self.normal_closure(&cyc)?.order_u64() != Some(order) {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        let z = self.center();
        if z.order_u64() != Some(1) {
            return Ok(false); // nontrivial proper center (order > 10^5 is not prime)
        }
        for p in prime_factors(order) {
            let sylow = crate::search::sylow_subgroup(self, p)?;
            let sy_order = sylow.order_u64().unwrap();
            let sy_elems = sylow
                .elements(sy_order as usize)
                .ok_or_else(|| Error::RegimeExceeded("sylow enumeration".into()))?;
            // dedupe order-p elements by conjugacy inside the Sylow subgroup
            let mut remaining: HashSet<Permutation> = sy_elems
                .into_iter()
                .filter(|e| e.order() == p)
                .collect();
            while let Some(x) = remaining.iter().min().cloned() {
                let mut class = vec![x.clone()];
                let mut seen: HashSet<Permutation> = class.iter().cloned().collect();
                while let Some(y) = class.pop() {
                    remaining.remove(&y);
                    for g in sylow.gens() {
                        let c = y.conjugate_by(g);
                        if seen.insert(c.clone()) {
                            class.push(c);
                        }
                    }
                }
                let cyc = PermGroup::new(self.degree, vec![x])?;
                if self.normal_closure(&cyc)?.order_u64() != Some(order) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

/// Deterministic brute-force closure; test oracle and small-group helper.
pub fn brute_force_elements(gens: &[Permutation], degree: usize, cap: usize) -> Option<Vec<Permutation>> {
    let mut set = HashSet::new();
    set.insert(Permutation::identity(degree));
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if !set.contains(&y) {
                if set.len() >= cap {
                    return None;
                }
                set.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    let mut v: Vec<Permutation> = set.into_iter().collect();
    v.sort();
    Some(v)
}

/// Closure as a set with an early-abort cap; used by subgroup growers.
pub fn closure_capped(
    gens: &[Permutation],
    degree: usize,
    cap: usize,
) -> Option<HashSet<Permutation>> {
    let mut set = HashSet::new();
    set.insert(Permutation::identity(degree));
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if !set.contains(&y) {
                if set.len() >= cap {
                    return None;
                }
                set.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Some(set)
}

/// Groups a list of subgroup element-sets into conjugacy classes under the
/// conjugation action of the listed conjugators (orbit BFS on sets).
pub(crate) fn merge_conjugate_sets(
    found: Vec<BTreeSet<Permutation>>,
    conjugators: &[Permutation],
) -> Vec<BTreeSet<Permutation>> {
    let mut reps: Vec<BTreeSet<Permutation>> = Vec::new();
    let mut seen: HashMap<BTreeSet<Permutation>, usize> = HashMap::new();
    for set in found {
        if seen.contains_key(&set) {
            continue;
        }
        let id = reps.len();
        reps.push(set.clone());
        let mut frontier = vec![set.clone()];
        seen.insert(set, id);
        while let Some(s) = frontier.pop() {
            for g in conjugators {
                let c: BTreeSet<Permutation> =
                    s.iter().map(|x| x.conjugate_by(g)).collect();
                if !seen.contains_key(&c) {
                    seen.insert(c.clone(), id);
                    frontier.push(c);
                }
            }
        }
    }
    reps
}
