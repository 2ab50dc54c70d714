//! The verdict layer: row-by-row factorization and feasibility checks, the
//! conjugacy-class obstruction, normality cross-checks, covering-group
//! subgroup facts, stabilizer profiles, and the admissible-degree list.

mod autfix;
mod classes7;
mod covering;
mod factorization;
mod feasible;
mod nlist;
mod normality;
mod profile;
mod rows;

pub use autfix::{aut_fixing_set, AutFixingSet};
pub use classes7::conjclass_size7_check;
pub use covering::{covering_group_checks, CoverSubgroupReport, CoveringReport};
pub use factorization::{check_factorization, impossibility_certificate, Certificate};
pub use feasible::{feasible_elements, FeasibleReport, SubgroupScan};
pub use nlist::{
    admissible_n_list, excluded_solvable_orders, StabilizerShape, SOLVABLE_ADMISSIBLE,
    STABILIZER_SHAPES,
};
pub use normality::{cayley_normality_check, NormalityReport};
pub use profile::{stabilizer_profile, StabilizerProfile};
pub use rows::{parse_manifest, verify_row, MethodTag, RowResult, RowSpec, Verdict};
