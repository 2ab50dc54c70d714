//! Stabilizer profile of an arc-transitive action on a connected 7-valent
//! graph, matched against the transcribed stabilizer-order lists.

use crate::error::Result;
use crate::graph::{s_arc_transitivity, Graph, GroupAction};

use super::nlist::STABILIZER_SHAPES;

#[derive(Clone, Debug)]
pub struct StabilizerProfile {
    pub stabilizer_order: Option<u64>,
    pub s: usize,
    /// The matching case (s tier, shape name), or None with a reason.
    pub case: Option<(u8, &'static str)>,
    pub reason: Option<String>,
}

pub fn stabilizer_profile(action: &GroupAction, graph: &Graph) -> Result<StabilizerProfile> {
    if graph.regular_valency() != Some(7) || !graph.is_connected() {
        return Ok(StabilizerProfile {
            stabilizer_order: None,
            s: 0,
            case: None,
            reason: Some("graph is not connected 7-valent".into()),
        });
    }
    let rep = s_arc_transitivity(action, graph, 3)?;
    if rep.s == 0 {
        return Ok(StabilizerProfile {
            stabilizer_order: action.group.point_stabilizer(0)?.order_u64(),
            s: 0,
            case: None,
            reason: Some("action is not arc-transitive".into()),
        });
    }
    let stab = action.group.point_stabilizer(0)?.order_u64();
    let case = stab.and_then(|o| {
        STABILIZER_SHAPES
            .iter()
            .find(|sh| sh.s as usize == rep.s && sh.order == o)
            .map(|sh| (sh.s, sh.name))
    });
    Ok(StabilizerProfile {
        stabilizer_order: stab,
        s: rep.s,
        case,
        reason: if case.is_none() {
            Some("stabilizer order missing from the transcribed lists".into())
        } else {
            None
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::builtin_group;

    #[test]
    fn a8_on_k8_matches_the_a7_case() {
        let k8 = Graph::complete(8);
        let a8 = builtin_group("A:8").unwrap();
        let action = GroupAction::new(a8, &k8).unwrap();
        let p = stabilizer_profile(&action, &k8).unwrap();
        assert_eq!(p.stabilizer_order, Some(2520));
        assert_eq!(p.s, 2);
        assert_eq!(p.case, Some((2, "A7")));
    }

    #[test]
    fn regular_action_is_rejected() {
        let k8 = Graph::complete(8);
        let z8 = builtin_group("C:8").unwrap();
        let action = GroupAction::new(z8, &k8).unwrap();
        let p = stabilizer_profile(&action, &k8).unwrap();
        assert_eq!(p.s, 0);
        assert!(p.case.is_none());
    }

    #[test]
    fn non_seven_valent_graph_is_rejected() {
        let k5 = Graph::complete(5);
        let a5 = builtin_group("A:5").unwrap();
        let action = GroupAction::new(a5, &k5).unwrap();
        let p = stabilizer_profile(&action, &k5).unwrap();
        assert!(p.case.is_none());
        assert!(p.reason.is_some());
    }
}
