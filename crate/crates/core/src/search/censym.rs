//! Centralizer of a transitive group in the full symmetric group on its
//! domain: an element of the centralizer is determined by the image of one
//! point, so all candidates are enumerated directly.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{Permutation, Point};

pub fn centralizer_in_sym(g: &PermGroup) -> Result<PermGroup> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = g.degree();
    let mut elems: Vec<Permutation> = Vec::new();
    'candidates: for y0 in 0..n {
        // c(0) = y0 forces c on the whole orbit via c(h(x)) = h(c(x))
        let mut img: Vec<Option<Point>> = vec![None; n];
        img[0] = Some(y0);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            let y = img[x].unwrap();
            for h in g.gens() {
                let (hx, hy) = (h.apply(x), h.apply(y));
                match img[hx] {
                    None => {
                        img[hx] = Some(hy);
                        frontier.push(hx);
                    }
                    Some(v) if v != hy => continue 'candidates,
                    _ => {}
                }
            }
        }
        let images: Vec<Point> = img.into_iter().map(|v| v.unwrap()).collect();
        let Ok(c) = Permutation::from_images(images) else {
            continue;
        };
        if g.gens().iter().all(|h| c.compose(h) == h.compose(&c)) {
            elems.push(c);
        }
    }
    super::group_from_elements(n, elems)
}
