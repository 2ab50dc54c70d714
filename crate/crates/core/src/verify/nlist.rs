//! The admissible-degree list: stabilizer orders of connected 7-valent
//! arc-transitive actions, filtered by the divisibility bound and the
//! transcribed solvable-stabilizer exclusion.

/// One stabilizer shape from the 7-valent classification: its order, the
/// tier s of arc-transitivity it belongs to, and whether the group is
/// solvable.
#[derive(Clone, Copy, Debug)]
pub struct StabilizerShape {
    pub s: u8,
    pub name: &'static str,
    pub order: u64,
    pub solvable: bool,
}

/// The full transcribed stabilizer table for valency 7 (cases s = 1, 2, 3).
pub const STABILIZER_SHAPES: &[StabilizerShape] = &[
    StabilizerShape { s: 1, name: "Z7", order: 7, solvable: true },
    StabilizerShape { s: 1, name: "D14", order: 14, solvable: true },
    StabilizerShape { s: 1, name: "F21", order: 21, solvable: true },
    StabilizerShape { s: 1, name: "D28", order: 28, solvable: true },
    StabilizerShape { s: 1, name: "F21xZ3", order: 63, solvable: true },
    StabilizerShape { s: 2, name: "F42", order: 42, solvable: true },
    StabilizerShape { s: 2, name: "F42xZ2", order: 84, solvable: true },
    StabilizerShape { s: 2, name: "F42xZ3", order: 126, solvable: true },
    StabilizerShape { s: 2, name: "PSL(3,2)", order: 168, solvable: false },
    StabilizerShape { s: 2, name: "A7", order: 2520, solvable: false },
    StabilizerShape { s: 2, name: "S7", order: 5040, solvable: false },
    StabilizerShape { s: 2, name: "2^3:SL(3,2)", order: 1344, solvable: false },
    StabilizerShape { s: 2, name: "2^4:SL(3,2)", order: 2688, solvable: false },
    StabilizerShape { s: 3, name: "F42xZ6", order: 252, solvable: true },
    StabilizerShape { s: 3, name: "PSL(3,2)xS4", order: 4032, solvable: false },
    StabilizerShape { s: 3, name: "A7xA6", order: 907_200, solvable: false },
    StabilizerShape { s: 3, name: "S7xS6", order: 3_628_800, solvable: false },
    StabilizerShape { s: 3, name: "(A7xA6):2", order: 1_814_400, solvable: false },
    StabilizerShape { s: 3, name: "2^6:(SL(2,2)xSL(3,2))", order: 64_512, solvable: false },
    StabilizerShape { s: 3, name: "2^20:(SL(2,2)xSL(3,2))", order: 1_056_964_608, solvable: false },
];

/// Solvable-stabilizer degrees that do occur (transcribed from the solvable
/// case classification); the remaining solvable orders are excluded.
pub const SOLVABLE_ADMISSIBLE: &[u64] = &[7, 21, 63, 84];

/// n divides 2^24 * 3^4 * 5^2 * 7.
fn divides_bound(mut n: u64) -> bool {
    for (p, e) in [(2u64, 24u32), (3, 4), (5, 2), (7, 1)] {
        for _ in 0..e {
            if n % p == 0 {
                n /= p;
            }
        }
    }
    n == 1
}

/// The 15 admissible degrees n with (T, R(G)) = (A_n, A_{n-1}), sorted.
pub fn admissible_n_list() -> Vec<u64> {
    let mut out: Vec<u64> = STABILIZER_SHAPES
        .iter()
        .filter(|s| s.order % 7 == 0)
        .filter(|s| divides_bound(s.order))
        .filter(|s| !s.solvable || SOLVABLE_ADMISSIBLE.contains(&s.order))
        .map(|s| s.order)
        .collect();
    out.sort_unstable();
    out.dedup();
    assert_eq!(out.len(), 15, "the admissible list must have 15 values");
    out
}

/// The solvable orders removed by the exclusion.
pub fn excluded_solvable_orders() -> Vec<u64> {
    let mut out: Vec<u64> = STABILIZER_SHAPES
        .iter()
        .filter(|s| s.solvable && !SOLVABLE_ADMISSIBLE.contains(&s.order))
        .map(|s| s.order)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
