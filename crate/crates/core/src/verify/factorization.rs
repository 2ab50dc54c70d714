//! The factorization criterion M = G * Mv and the order-forced impossibility
//! certificate for "no" verdicts beyond the exhaustive regime.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::search::{intersection, subgroups_of_order_exhaustive, SearchBudget};

/// True iff |M| * |G meet H| = |G| * |H|, the exact condition for M = GH.
pub fn check_factorization(
    m: &PermGroup,
    g: &PermGroup,
    h: &PermGroup,
    budget: &SearchBudget,
) -> Result<bool> {
    if !m.has_subgroup(g)? || !m.has_subgroup(h)? {
        return Err(Error::NotSubgroup(
            "factorization check needs G, H <= M".into(),
        ));
    }
    let meet = intersection(g, h, budget)?;
    Ok(m.order() * meet.order() == g.order() * h.order())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// No factorization of M with factors of these orders and a point
    /// stabilizer of this isomorphism type can exist.
    Impossible,
    Inconclusive,
}

/// Order-forced certificate: a factorization M = G * Mv needs
/// |G meet Mv| = |G| * |Mv| / |M|, and that intersection sits inside Mv. If
/// the forced order is not an integer, does not divide |Mv|, or Mv has no
/// subgroup of that order (checked exhaustively), the factorization is
/// impossible for every choice of the factors with these orders.
pub fn impossibility_certificate(
    m_order: &BigUint,
    g_order: u64,
    mv: &PermGroup,
    budget: &SearchBudget,
) -> Result<Certificate> {
    let mv_order = mv
        .order_u64()
        .filter(|&o| o <= 21_000)
        .ok_or_else(|| Error::RegimeExceeded("certificate needs |Mv| <= 21000".into()))?;
    let product = BigUint::from(g_order) * BigUint::from(mv_order);
    if &product % m_order != BigUint::from(0u32) {
        return Ok(Certificate::Impossible);
    }
    let d_big = product / m_order;
    let Ok(d) = u64::try_from(&d_big) else {
        return Err(Error::RegimeExceeded("forced intersection order overflow".into()));
    };
    if d == 0 || mv_order % d != 0 {
        return Ok(Certificate::Impossible);
    }
    let candidates = subgroups_of_order_exhaustive(mv, d, budget)?;
    if candidates.is_empty() {
        Ok(Certificate::Impossible)
    } else {
        Ok(Certificate::Inconclusive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{builtin_group, load_witness};
    use std::path::Path;

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    fn data(file: &str) -> std::path::PathBuf {
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../data")
            .join(file)
    }

    #[test]
    fn a8_factors_as_psl32_times_point_stabilizer() {
        let a8 = builtin_group("A:8").unwrap();
        let l = builtin_group("PSL32@8").unwrap();
        let stab = a8.point_stabilizer(0).unwrap();
        assert!(check_factorization(&a8, &l, &stab, &budget()).unwrap());
    }

    #[test]
    fn sp62_with_a7_stabilizer_is_impossible() {
        // forced intersection order 20160 * 2520 / 1451520 = 35, and the
        // degree-7 alternating group has no subgroup of order 35
        let sp62 = builtin_group("SP62@63").unwrap();
        let a7 = builtin_group("A:7").unwrap();
        let cert =
            impossibility_certificate(&sp62.order(), 20_160, &a7, &budget()).unwrap();
        assert_eq!(cert, Certificate::Impossible);
    }

    #[test]
    fn sp62_with_s7_stabilizer_is_impossible() {
        let sp62 = builtin_group("SP62@63").unwrap();
        let s7 = builtin_group("S:7").unwrap();
        let cert =
            impossibility_certificate(&sp62.order(), 20_160, &s7, &budget()).unwrap();
        assert_eq!(cert, Certificate::Impossible);
    }

    #[test]
    fn a8_with_sl32_stabilizer_is_inconclusive() {
        // d = 360 * 168 / 20160 = 3 and order-3 subgroups exist
        let a8 = builtin_group("A:8").unwrap();
        let l = builtin_group("PSL32@7").unwrap();
        let cert = impossibility_certificate(&a8.order(), 360, &l, &budget()).unwrap();
        assert_eq!(cert, Certificate::Inconclusive);
    }

    #[test]
    fn a7_equals_a5_times_psl32_when_witnesses_align() {
        // the known exact factorization behind Row 15's "Yes": pick the
        // classes exhaustively and find a factorizing pair
        let a7 = builtin_group("A:7").unwrap();
        let bud = budget();
        let gs = crate::search::subgroups_of_order_exhaustive(&a7, 60, &bud).unwrap();
        let mvs = crate::search::subgroups_of_order_exhaustive(&a7, 168, &bud).unwrap();
        assert!(!gs.is_empty() && !mvs.is_empty());
        let mut found = false;
        for g in &gs {
            for mv in &mvs {
                if check_factorization(&a7, g, mv, &bud).unwrap() {
                    found = true;
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn m11_inside_a11_gives_trivial_intersection() {
        let m11_path = data("m11.wit");
        if !m11_path.exists() {
            panic!("witness data directory must be present");
        }
        let a11 = builtin_group("A:11").unwrap();
        let m11 = load_witness(&m11_path).unwrap();
        let a7 = a11.pointwise_stabilizer(&[7, 8, 9, 10]).unwrap();
        assert_eq!(a7.order_u64(), Some(2520));
        let bud = budget();
        let meet = intersection(&m11, &a7, &bud).unwrap();
        assert_eq!(meet.order_u64(), Some(1));
        assert!(check_factorization(&a11, &m11, &a7, &bud).unwrap());
    }
}
