//! Permutations of `{0, ..., n-1}` stored as flat image vectors.
//!
//! Products compose left-to-right: `(p * q)(x) = q(p(x))`, matching the right
//! action `x^g` used everywhere else in the crate.

use std::fmt;

use crate::error::{Error, Result};

pub type Point = usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<Point>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image vector, checking bijectivity.
    pub fn from_images(images: Vec<Point>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::PointOutOfRange {
                    point: y,
                    degree: n,
                });
            }
            if seen[y] {
                return Err(Error::NotBijective);
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`, or `id`.
    /// Unmentioned points are fixed.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        let mut images: Vec<Point> = (0..degree).collect();
        if text == "id" || text.is_empty() || text == "()" {
            return Ok(Permutation { images });
        }
        if !text.starts_with('(') || !text.ends_with(')') {
            return Err(Error::ParseCycles(text.to_string()));
        }
        let mut touched = vec![false; degree];
        for cyc in text[1..text.len() - 1].split(")(") {
            let mut pts = Vec::new();
            for tok in cyc.split([' ', ',']) {
                let tok = tok.trim();
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::ParseCycles(text.to_string()))?;
                if p >= degree {
                    return Err(Error::PointOutOfRange {
                        point: p,
                        degree,
                    });
                }
                if touched[p] {
                    return Err(Error::RepeatedPoint(p));
                }
                touched[p] = true;
                pts.push(p);
            }
            if pts.is_empty() {
                return Err(Error::ParseCycles(text.to_string()));
            }
            for w in 0..pts.len() {
                images[pts[w]] = pts[(w + 1) % pts.len()];
            }
        }
        Ok(Permutation { images })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: Point) -> Point {
        self.images[x]
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    /// `(self * other)(x) = other(self(x))`: apply `self` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        }
    }

    /// Degree-checked composition for API boundaries.
    pub fn checked_compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0; self.degree()];
        for x in 0..self.degree() {
            images[g.images[x]] = g.images[self.images[x]];
        }
        Permutation { images }
    }

    /// Commutator `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn order(&self) -> u64 {
        let mut o: u64 = 1;
        for len in self.cycle_lengths() {
            o = lcm(o, len as u64);
        }
        o
    }

    pub fn is_two_element(&self) -> bool {
        self.order().is_power_of_two()
    }

    /// Lengths of all cycles, including fixed points, sorted.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if !seen[i] {
                let mut len = 0;
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    j = self.images[j];
                    len += 1;
                }
                out.push(len);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn smallest_moved_point(&self) -> Option<Point> {
        self.images.iter().enumerate().find(|(x, &y)| *x != y).map(|(x, _)| x)
    }

    pub fn fixed_points(&self) -> Vec<Point> {
        (0..self.degree()).filter(|&x| self.images[x] == x).collect()
    }

    /// Power `self^k` for k >= 0.
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            k >>= 1;
        }
        acc
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for i in 0..n {
            if !seen[i] && self.images[i] != i {
                write!(f, "(")?;
                let mut j = i;
                let mut first = true;
                while !seen[j] {
                    seen[j] = true;
                    if !first {
                        write!(f, " ")?;
                    }
                    write!(f, "{j}")?;
                    first = false;
                    j = self.images[j];
                }
                write!(f, ")")?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "id")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_cycle_examples() {
        let p = Permutation::parse("(0 1 2)", 5).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 3);
        assert_eq!(p.apply(4), 4);

        let id = Permutation::parse("id", 4).unwrap();
        assert!(id.is_identity());

        let invol = Permutation::parse("(0 4)(1 2)", 5).unwrap();
        assert_eq!(invol.apply(0), 4);
        assert_eq!(invol.apply(1), 2);
        assert_eq!(invol.order(), 2);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(0 1 0)", 5),
            Err(Error::RepeatedPoint(0))
        ));
        assert!(matches!(
            Permutation::parse("(0 9)", 5),
            Err(Error::PointOutOfRange { .. })
        ));
        assert!(Permutation::parse("(0 1", 5).is_err());
        assert!(Permutation::parse("(0 x)", 5).is_err());
    }

    #[test]
    fn compose_is_left_to_right() {
        let p = Permutation::parse("(0 1 2)", 3).unwrap();
        let sq = p.compose(&p);
        assert_eq!(sq, Permutation::parse("(0 2 1)", 3).unwrap());

        // (0 1) * (1 2) applies (0 1) first: 0 -> 1 -> 2, so 0 -> 2.
        let a = Permutation::parse("(0 1)", 3).unwrap();
        let b = Permutation::parse("(1 2)", 3).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab, Permutation::parse("(0 2 1)", 3).unwrap());
    }

    #[test]
    fn compose_matches_two_line_oracle() {
        // independent two-line-form multiplication over all of S4
        fn all_perms(n: usize) -> Vec<Permutation> {
            let mut out = vec![Permutation::identity(n)];
            for _ in 0..n * n * n {
                let mut next = Vec::new();
                for p in &out {
                    for i in 0..n - 1 {
                        let mut im = p.images().to_vec();
                        im.swap(i, i + 1);
                        next.push(Permutation::from_images(im).unwrap());
                    }
                }
                out.extend(next);
                out.sort();
                out.dedup();
                if out.len() == 24 {
                    break;
                }
            }
            out
        }
        for p in all_perms(4) {
            for q in all_perms(4) {
                let r = p.compose(&q);
                for x in 0..4 {
                    assert_eq!(r.apply(x), q.apply(p.apply(x)));
                }
            }
        }
    }

    #[test]
    fn inverse_and_conjugate() {
        let p = Permutation::parse("(0 1 2 3)", 6).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let g = Permutation::parse("(0 4)(1 5)", 6).unwrap();
        let c = p.conjugate_by(&g);
        // conjugation relabels points through g
        assert_eq!(c, Permutation::parse("(4 5 2 3)", 6).unwrap());
    }

    #[test]
    fn order_and_two_element() {
        assert_eq!(Permutation::parse("(0 1)(2 3 4)", 5).unwrap().order(), 6);
        assert!(Permutation::parse("(0 1)(2 3)", 5).unwrap().is_two_element());
        assert!(!Permutation::parse("(0 1 2)", 5).unwrap().is_two_element());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["(0 1 2)(3 4)", "(0 5)(1 2 3)", "id"] {
            let p = Permutation::parse(s, 6).unwrap();
            let q = Permutation::parse(&p.to_string(), 6).unwrap();
            assert_eq!(p, q);
        }
    }
}
