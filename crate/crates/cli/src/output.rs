//! Record formatting: fixed TSV columns and the line-per-object JSON mirror.

use heptasym_core::verify::{MethodTag, RowResult, Verdict};

pub const TSV_HEADER: &str =
    "row\tM\t|G|\t|Mv|\tfactorization\tg_count\tg2elt_count\tmethod\texpected\tmatch";

fn expected_str(r: &RowResult) -> String {
    let f = if r.spec.expected_factorization { "yes" } else { "no" };
    match r.spec.expected_g_exists {
        Some(true) => format!("{f},yes"),
        Some(false) => format!("{f},no"),
        None => f.to_string(),
    }
}

fn count_str(c: Option<u64>) -> String {
    match c {
        Some(v) => v.to_string(),
        None => "-".to_string(),
    }
}

pub fn row_tsv(r: &RowResult) -> String {
    let match_col = match r.matches_expected {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    };
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        r.spec.row_id,
        r.spec.m_descriptor,
        r.spec.g_order,
        r.spec.mv_order,
        r.factorization,
        count_str(r.feasible_g_count),
        count_str(r.feasible_2element_g_count),
        r.method,
        expected_str(r),
        match_col,
    )
}

pub fn row_json(r: &RowResult) -> String {
    let mut obj = serde_json::Map::new();
    obj.insert("row".into(), r.spec.row_id.into());
    obj.insert("m".into(), r.spec.m_descriptor.clone().into());
    obj.insert("m_order".into(), r.m_order.to_string().into());
    obj.insert("g_order".into(), r.spec.g_order.into());
    obj.insert("mv_order".into(), r.spec.mv_order.into());
    obj.insert("factorization".into(), r.factorization.to_string().into());
    obj.insert(
        "g_count".into(),
        match r.feasible_g_count {
            Some(v) => v.into(),
            None => serde_json::Value::Null,
        },
    );
    obj.insert(
        "g2elt_count".into(),
        match r.feasible_2element_g_count {
            Some(v) => v.into(),
            None => serde_json::Value::Null,
        },
    );
    obj.insert("method".into(), r.method.to_string().into());
    obj.insert("expected".into(), expected_str(r).into());
    obj.insert(
        "match".into(),
        match r.matches_expected {
            Some(b) => b.into(),
            None => serde_json::Value::Null,
        },
    );
    let breakdown: Vec<serde_json::Value> = r
        .per_subgroup
        .iter()
        .map(|s| {
            serde_json::json!({
                "class": s.class_id,
                "normalizer_order": s.normalizer_order,
                "gate_passed": s.gate_passed,
                "feasible": s.feasible_count,
            })
        })
        .collect();
    obj.insert("per_subgroup".into(), breakdown.into());
    serde_json::Value::Object(obj).to_string()
}

pub fn is_unknown(r: &RowResult) -> bool {
    matches!(r.method, MethodTag::Unknown(_)) || r.factorization == Verdict::Unknown
}
