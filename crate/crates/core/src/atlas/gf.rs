//! Arithmetic in the small finite fields GF(q), q in {2,3,4,5,7,8,9}.
//! Non-prime fields use log/antilog tables over a fixed primitive element.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GfField {
    pub q: u16,
    p: u16,
    log: Vec<u16>,     // log[x] for x != 0
    antilog: Vec<u16>, // antilog[i] = g^i
}

const IRREDUCIBLE: &[(u16, u16, &[u16])] = &[
    // q, p, irreducible polynomial coefficients (低 to high), monic
    (4, 2, &[1, 1, 1]),    // x^2 + x + 1
    (8, 2, &[1, 1, 0, 1]), // x^3 + x + 1
    (9, 3, &[1, 0, 1]),    // x^2 + 1
];

impl GfField {
    pub fn new(q: u16) -> Result<GfField> {
        match q {
            2 | 3 | 5 | 7 => Ok(Self::prime(q)),
            4 | 8 | 9 => Ok(Self::extension(q)),
            _ => Err(Error::RegimeExceeded(format!(
                "field order {q} not supported (need q in 2..9, prime power)"
            ))),
        }
    }

    fn prime(p: u16) -> GfField {
        let mut f = GfField {
            q: p,
            p,
            log: vec![0; p as usize],
            antilog: Vec::new(),
        };
        // find a primitive root
        'root: for g in 2..p {
            let mut seen = vec![false; p as usize];
            let mut x = 1u16;
            for _ in 0..p - 1 {
                if seen[x as usize] {
                    continue 'root;
                }
                seen[x as usize] = true;
                x = x * g % p;
            }
            f.fill_tables(|a, b| a * b % p, g);
            return f;
        }
        // p = 2 or 3: 1 is primitive for p = 2
        f.fill_tables(|a, b| a * b % p, if p == 2 { 1 } else { 2 });
        f
    }

    fn extension(q: u16) -> GfField {
        let &(_, p, poly) = IRREDUCIBLE.iter().find(|&&(qq, _, _)| qq == q).unwrap();
        let deg = poly.len() - 1;
        // element encoding: digits base p
        let to_digits = |mut x: u16| -> Vec<u16> {
            let mut d = vec![0u16; deg];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let from_digits = |d: &[u16]| -> u16 {
            d.iter().rev().fold(0u16, |acc, &v| acc * p + v)
        };
        let mul = |a: u16, b: u16| -> u16 {
            let da = to_digits(a);
            let db = to_digits(b);
            let mut prod = vec![0u16; 2 * deg];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // reduce by the monic irreducible
            for i in (deg..2 * deg).rev() {
                let c = prod[i];
                if c != 0 {
                    prod[i] = 0;
                    for (k, &pc) in poly.iter().enumerate().take(deg) {
                        let idx = i - deg + k;
                        prod[idx] = (prod[idx] + c * (p - pc % p) % p) % p;
                    }
                }
            }
            from_digits(&prod[..deg])
        };
        let mut f = GfField {
            q,
            p,
            log: vec![0; q as usize],
            antilog: Vec::new(),
        };
        'root: for g in 1..q {
            let mut seen = vec![false; q as usize];
            let mut x = 1u16;
            for _ in 0..q - 1 {
                if seen[x as usize] {
                    continue 'root;
                }
                seen[x as usize] = true;
                x = mul(x, g);
            }
            f.fill_tables(mul, g);
            return f;
        }
        unreachable!("extension field has a primitive element");
    }

    fn fill_tables(&mut self, mul: impl Fn(u16, u16) -> u16, g: u16) {
        self.antilog = Vec::with_capacity(self.q as usize - 1);
        let mut x = 1u16;
        for i in 0..self.q - 1 {
            self.antilog.push(x);
            self.log[x as usize] = i;
            x = mul(x, g);
        }
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        if self.p == self.q {
            (a + b) % self.p
        } else if self.p == 2 {
            a ^ b
        } else {
            // componentwise base-p addition (p = 3, deg 2)
            let (a0, a1) = (a % self.p, a / self.p);
            let (b0, b1) = (b % self.p, b / self.p);
            (a0 + b0) % self.p + self.p * ((a1 + b1) % self.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        if self.p == self.q {
            (self.p - a) % self.p
        } else if self.p == 2 {
            a
        } else {
            let (a0, a1) = (a % self.p, a / self.p);
            (self.p - a0) % self.p + self.p * ((self.p - a1) % self.p)
        }
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        let i = self.log[a as usize] as u32 + self.log[b as usize] as u32;
        self.antilog[(i % (self.q as u32 - 1)) as usize]
    }

    pub fn inv(&self, a: u16) -> Result<u16> {
        if a == 0 {
            return Err(Error::SingularMatrix);
        }
        let i = self.log[a as usize];
        Ok(self.antilog[((self.q - 1 - i) % (self.q - 1)) as usize])
    }

    /// A fixed primitive element.
    pub fn generator(&self) -> u16 {
        self.antilog[1 % self.antilog.len()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_hold() {
        for q in [2u16, 3, 4, 5, 7, 8, 9] {
            let f = GfField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0, "q={q}");
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q}");
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn generators_are_primitive() {
        for q in [4u16, 8, 9] {
            let f = GfField::new(q).unwrap();
            let g = f.generator();
            let mut x = 1u16;
            let mut seen = std::collections::HashSet::new();
            for _ in 0..q - 1 {
                assert!(seen.insert(x));
                x = f.mul(x, g);
            }
            assert_eq!(seen.len(), q as usize - 1);
        }
    }
}
