//! Covering-group subgroup checks: the index-7 subgroup structure of the
//! double and triple covers of the degree-7 alternating group.

use crate::atlas::Catalog;
use crate::error::{Error, Result};
use crate::search::{low_index_subgroups, SearchBudget};

#[derive(Clone, Debug)]
pub struct CoverSubgroupReport {
    pub cover_name: String,
    pub class_count: usize,
    pub subgroup_orders: Vec<u64>,
    pub all_perfect: bool,
    pub center_orders: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct CoveringReport {
    pub triple: CoverSubgroupReport,
    pub double: CoverSubgroupReport,
    pub plain: CoverSubgroupReport,
    /// The triple cover has exactly one index-7 class, perfect of order 1080
    /// (which excludes the direct product with the cyclic group of order 3,
    /// whose derived subgroup has order 360).
    pub triple_ok: bool,
    /// Every index-7 subgroup of the double cover is perfect of order 720
    /// with a center of order 2 (the double-cover-of-A6 signature, excluding
    /// the direct product with a central involution, which is not perfect).
    pub double_ok: bool,
}

pub fn covering_group_checks(catalog: &Catalog, budget: &SearchBudget) -> Result<CoveringReport> {
    let missing = |f: &str| Error::Witness {
        name: f.to_string(),
        problem: "witness file is required for the covering-group checks".into(),
    };
    let path3 = catalog.witness_path("cover3a7.wit");
    let path2 = catalog.witness_path("cover2a7.wit");
    if !path3.exists() {
        return Err(missing("cover3a7.wit"));
    }
    if !path2.exists() {
        return Err(missing("cover2a7.wit"));
    }
    let triple_group = catalog.group("cover3a7.wit")?;
    let double_group = catalog.group("cover2a7.wit")?;
    let plain_group = crate::atlas::builtin_group("A:7")?;

    let survey = |name: &str, g: &crate::group::PermGroup| -> Result<CoverSubgroupReport> {
        let classes = low_index_subgroups(g, 7, budget)?;
        let mut orders = Vec::new();
        let mut centers = Vec::new();
        let mut all_perfect = true;
        for k in &classes {
            orders.push(k.order_u64().unwrap());
            centers.push(k.center().order_u64().unwrap());
            if !k.is_perfect() {
                all_perfect = false;
            }
        }
        Ok(CoverSubgroupReport {
            cover_name: name.to_string(),
            class_count: classes.len(),
            subgroup_orders: orders,
            all_perfect,
            center_orders: centers,
        })
    };

    let triple = survey("3.A7", &triple_group)?;
    let double = survey("2.A7", &double_group)?;
    let plain = survey("A7", &plain_group)?;

    let triple_ok = triple.class_count == 1
        && triple.subgroup_orders == vec![1080]
        && triple.all_perfect;
    let double_ok = double.class_count >= 1
        && double.subgroup_orders.iter().all(|&o| o == 720)
        && double.center_orders.iter().all(|&z| z == 2)
        && double.all_perfect;

    Ok(CoveringReport {
        triple,
        double,
        plain,
        triple_ok,
        double_ok,
    })
}
