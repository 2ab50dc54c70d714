//! Backtrack searches over stabilizer chains: intersections, centralizers,
//! normalizers, transversals, cores, Sylow subgroups, and the two bounded
//! subgroup enumerations (low index, fixed order).

mod aut;
mod censym;
mod cosets;
mod intersection;
mod lowindex;
mod normalizer;
mod orderenum;
mod sylow;
mod transporter;

pub use aut::{automorphism_images, reduce_generators};
pub use censym::centralizer_in_sym;
pub use cosets::{canonical_coset_rep, core_of, coset_action, right_transversal, CosetAction};
pub use intersection::intersection;
pub use lowindex::low_index_subgroups;
pub use normalizer::normalizer;
pub use orderenum::subgroups_of_order_exhaustive;
pub use sylow::sylow_subgroup;
pub use transporter::{
    are_conjugate, centralizer_in_group, centralizer_of_element, transporter,
    transporter_with_chain,
};

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Node/time budget for backtrack searches. Exceeding it is reported as a
/// distinct outcome, never as a truncated answer.
#[derive(Clone, Debug)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            node_limit: 20_000_000,
            time_limit: None,
        }
    }
}

impl SearchBudget {
    pub fn with_nodes(node_limit: u64) -> Self {
        SearchBudget {
            node_limit,
            time_limit: None,
        }
    }

    pub(crate) fn meter(&self, what: &'static str) -> BudgetMeter<'_> {
        BudgetMeter {
            budget: self,
            nodes: AtomicU64::new(0),
            started: Instant::now(),
            what,
        }
    }
}

pub(crate) struct BudgetMeter<'a> {
    budget: &'a SearchBudget,
    nodes: AtomicU64,
    started: Instant,
    what: &'static str,
}

impl BudgetMeter<'_> {
    #[inline]
    pub fn tick(&self) -> Result<()> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.budget.node_limit {
            return Err(Error::BudgetExceeded(format!(
                "{}: node limit {}",
                self.what, self.budget.node_limit
            )));
        }
        if n % 4096 == 0 {
            if let Some(limit) = self.budget.time_limit {
                if self.started.elapsed() > limit {
                    return Err(Error::BudgetExceeded(format!(
                        "{}: time limit {:?}",
                        self.what, limit
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Builds a group from an element list, keeping only a short generating set.
pub(crate) fn group_from_elements(
    degree: usize,
    mut elems: Vec<Permutation>,
) -> Result<PermGroup> {
    elems.sort_unstable();
    elems.dedup();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = crate::chain::StabilizerChain::build(degree, &gens);
    for e in elems {
        if e.is_identity() || chain.contains(&e)? {
            continue;
        }
        gens.push(e);
        chain = crate::chain::StabilizerChain::build(degree, &gens);
    }
    PermGroup::new(degree, gens)
}
