//! Named catalog groups in their standard actions.
//!
//! Grammar: `S:n`, `A:n`, `C:n` (n <= 48), `AGL32`, `PSL32@7`, `PSL32@8`,
//! `PSL28@9`, plus the matrix-derived actions `SL42@15`, `SP62@63`,
//! `PSL34@21`, `PSP43@40`.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

use super::matgroup::{matgroup_to_perm, sl_gens, sp_transvections, MatAction};

pub fn builtin_group(name: &str) -> Result<PermGroup> {
    if let Some(rest) = name.strip_prefix("S:") {
        let n = parse_n(rest, name)?;
        if n == 1 {
            return Ok(PermGroup::trivial(1));
        }
        let mut gens = vec![Permutation::parse("(0 1)", n)?];
        if n > 2 {
            gens.push(cycle(0, n, n));
        }
        return PermGroup::new(n, gens);
    }
    if let Some(rest) = name.strip_prefix("A:") {
        let n = parse_n(rest, name)?;
        if n <= 2 {
            return Ok(PermGroup::trivial(n));
        }
        if n == 3 {
            return PermGroup::from_cycles(3, &["(0 1 2)"]);
        }
        let three = Permutation::parse("(0 1 2)", n)?;
        let big = if n % 2 == 1 {
            cycle(0, n, n) // the n-cycle is even for odd n
        } else {
            cycle(1, n, n) // the (n-1)-cycle on 1..n-1 is even for even n
        };
        return PermGroup::new(n, vec![three, big]);
    }
    if let Some(rest) = name.strip_prefix("C:") {
        let n = parse_n(rest, name)?;
        if n == 1 {
            return Ok(PermGroup::trivial(1));
        }
        return PermGroup::new(n, vec![cycle(0, n, n)]);
    }
    match name {
        "AGL32" => agl32(),
        "PSL32@7" => matgroup_to_perm(&sl_gens(3, 2)?, MatAction::NonzeroVectors),
        "PSL32@8" => psl27_on_line(),
        "PSL28@9" => psl28_on_line(),
        "SL42@15" => matgroup_to_perm(&sl_gens(4, 2)?, MatAction::ProjectivePoints),
        "SP62@63" => matgroup_to_perm(&sp_transvections(6, 2)?, MatAction::NonzeroVectors),
        "PSL34@21" => matgroup_to_perm(&sl_gens(3, 4)?, MatAction::ProjectivePoints),
        "PSP43@40" => matgroup_to_perm(&sp_transvections(4, 3)?, MatAction::ProjectivePoints),
        _ => Err(Error::UnknownGroup(name.to_string())),
    }
}

fn parse_n(text: &str, name: &str) -> Result<usize> {
    let n: usize = text
        .parse()
        .map_err(|_| Error::UnknownGroup(name.to_string()))?;
    if n == 0 || n > 48 {
        return Err(Error::UnknownGroup(name.to_string()));
    }
    Ok(n)
}

fn cycle(from: Point, to: Point, degree: usize) -> Permutation {
    let mut images: Vec<Point> = (0..degree).collect();
    for i in from..to {
        images[i] = if i + 1 < to { i + 1 } else { from };
    }
    Permutation::from_images(images).unwrap()
}

/// Affine group on the 8 vectors of a 3-dimensional binary space: vector i is
/// the bit mask of its coordinates.
fn agl32() -> Result<PermGroup> {
    let mut gens = Vec::new();
    for e in [1usize, 2, 4] {
        let images: Vec<Point> = (0..8).map(|x| x ^ e).collect();
        gens.push(Permutation::from_images(images)?);
    }
    // linear part: invertible maps generated by elementary row operations
    // acting on bit-vectors x = (x0, x1, x2)
    let linear = |f: &dyn Fn(usize) -> usize| -> Permutation {
        Permutation::from_images((0..8).map(f).collect()).unwrap()
    };
    // x0 += x1 and x1 += x2 and their transposes generate GL(3,2)
    gens.push(linear(&|x| {
        let (a, b, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        (a ^ b) | (b << 1) | (c << 2)
    }));
    gens.push(linear(&|x| {
        let (a, b, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        a | ((b ^ a) << 1) | (c << 2)
    }));
    gens.push(linear(&|x| {
        let (a, b, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        a | ((b ^ c) << 1) | (c << 2)
    }));
    gens.push(linear(&|x| {
        let (a, b, c) = (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        a | (b << 1) | ((c ^ b) << 2)
    }));
    PermGroup::new(8, gens)
}

/// Projective line over GF(7): points 0..6 are field elements, 7 is infinity.
fn psl27_on_line() -> Result<PermGroup> {
    const P: usize = 7;
    let n = P + 1;
    let inf = P;
    let add: Vec<Point> = (0..P).map(|x| (x + 1) % P).chain([inf]).collect();
    let mul2: Vec<Point> = (0..P).map(|x| x * 2 % P).chain([inf]).collect();
    let mut neginv = vec![0usize; n];
    for x in 1..P {
        // -1/x mod 7
        let inv = (1..P).find(|&y| x * y % P == 1).unwrap();
        neginv[x] = (P - inv) % P;
    }
    neginv[0] = inf;
    neginv[inf] = 0;
    PermGroup::new(
        n,
        vec![
            Permutation::from_images(add)?,
            Permutation::from_images(mul2)?,
            Permutation::from_images(neginv)?,
        ],
    )
}

/// Projective line over GF(8): elements are polynomial bit masks modulo
/// t^3 + t + 1; point 8 is infinity.
fn psl28_on_line() -> Result<PermGroup> {
    fn mul8(a: usize, b: usize) -> usize {
        let mut r = 0usize;
        for i in 0..3 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        for i in (3..6).rev() {
            if r >> i & 1 == 1 {
                r ^= 0b1011 << (i - 3);
            }
        }
        r
    }
    let n = 9;
    let inf = 8;
    let add1: Vec<Point> = (0..8).map(|x| x ^ 1).chain([inf]).collect();
    let mulg: Vec<Point> = (0..8).map(|x| mul8(x, 2)).chain([inf]).collect();
    let mut invp = vec![0usize; n];
    for x in 1..8 {
        invp[x] = (1..8).find(|&y| mul8(x, y) == 1).unwrap();
    }
    invp[0] = inf;
    invp[inf] = 0;
    PermGroup::new(
        n,
        vec![
            Permutation::from_images(add1)?,
            Permutation::from_images(mulg)?,
            Permutation::from_images(invp)?,
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_and_symmetric_orders() {
        assert_eq!(builtin_group("A:8").unwrap().order_u64(), Some(20160));
        assert_eq!(builtin_group("A:7").unwrap().order_u64(), Some(2520));
        assert_eq!(builtin_group("S:7").unwrap().order_u64(), Some(5040));
        assert_eq!(builtin_group("A:4").unwrap().order_u64(), Some(12));
        assert_eq!(builtin_group("C:12").unwrap().order_u64(), Some(12));
    }

    #[test]
    fn named_groups() {
        assert_eq!(builtin_group("PSL32@7").unwrap().order_u64(), Some(168));
        assert_eq!(builtin_group("PSL32@8").unwrap().order_u64(), Some(168));
        assert_eq!(builtin_group("PSL28@9").unwrap().order_u64(), Some(504));
        assert_eq!(builtin_group("AGL32").unwrap().order_u64(), Some(1344));
        assert_eq!(builtin_group("PSP43@40").unwrap().order_u64(), Some(25920));
    }

    #[test]
    fn unknown_names_error() {
        assert!(builtin_group("Q:5").is_err());
        assert!(builtin_group("A:49").is_err());
        assert!(builtin_group("A:x").is_err());
    }

    #[test]
    fn alternating_groups_contain_only_even_permutations() {
        let a6 = builtin_group("A:6").unwrap();
        assert!(!a6.contains(&Permutation::parse("(0 1)", 6).unwrap()).unwrap());
        assert!(a6
            .contains(&Permutation::parse("(0 1)(2 3)", 6).unwrap())
            .unwrap());
    }

    #[test]
    fn big_degree_order_uses_big_integers() {
        use num_bigint::BigUint;
        let a48 = builtin_group("A:48").unwrap();
        let factorial: BigUint = (1u64..=48).map(BigUint::from).product();
        assert_eq!(a48.order(), factorial / BigUint::from(2u32));
        assert!(a48.order_u64().is_none());
    }
}
