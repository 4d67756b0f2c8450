//! Brute-force canonical labeling for small graphs.
//!
//! The certificate is the lexicographically least upper-triangle bit string
//! (column order, as in graph6) over all vertex orderings. It is found level
//! by level: every surviving partial ordering is extended by each unused
//! vertex, and only the extensions whose next column is minimal survive.
//! Because columns have fixed lengths, this yields exactly the global
//! minimum over all `n!` orderings.

use super::{bits, Graph};
use crate::limits::{check_cap, Limits};
use crate::Result;

/// Most vertices for which the bit string fits a `u128`.
const ISO_HARD_CAP: usize = 16;

#[derive(Clone, Copy)]
struct Partial {
    used: u64,
    // position -> vertex, four bits per slot
    order: u64,
}

impl Partial {
    #[inline]
    fn at(&self, pos: usize) -> usize {
        (self.order >> (4 * pos) & 0xf) as usize
    }
}

/// Returns the minimal bit string (left-aligned in a u128) and one ordering
/// that achieves it.
pub(crate) fn canonical_bits(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    assert!(n <= ISO_HARD_CAP);
    if n == 0 {
        return (0, Vec::new());
    }
    let mut frontier: Vec<Partial> = (0..n)
        .map(|v| Partial {
            used: 1 << v,
            order: v as u64,
        })
        .collect();
    let mut prefix: u128 = 0;
    let mut len = 0usize;
    let mut next = Vec::new();
    for pos in 1..n {
        let mut best = u32::MAX;
        next.clear();
        for p in &frontier {
            let free = g.vertex_mask() & !p.used;
            for v in bits(free) {
                let mut col = 0u32;
                for i in 0..pos {
                    col = col << 1 | g.has_edge(p.at(i), v) as u32;
                }
                if col < best {
                    best = col;
                    next.clear();
                }
                if col == best {
                    next.push(Partial {
                        used: p.used | 1 << v,
                        order: p.order | (v as u64) << (4 * pos),
                    });
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        prefix |= (best as u128) << (128 - len - pos);
        len += pos;
    }
    let first = frontier[0];
    (prefix, (0..n).map(|i| first.at(i)).collect())
}

fn certificate_bytes(n: usize, bits: u128) -> Vec<u8> {
    let total = n * n.saturating_sub(1) / 2;
    let nbytes = total.div_ceil(8);
    let mut out = Vec::with_capacity(1 + nbytes);
    out.push(n as u8);
    out.extend_from_slice(&bits.to_be_bytes()[..nbytes]);
    out
}

/// Canonical certificate: equal for two graphs iff they are isomorphic.
pub fn canonical_certificate(g: &Graph) -> Result<Vec<u8>> {
    canonical_form(g).map(|(cert, _)| cert)
}

/// Certificate together with the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<(Vec<u8>, Graph)> {
    canonical_form_with(g, &Limits::default())
}

pub fn canonical_form_with(g: &Graph, limits: &Limits) -> Result<(Vec<u8>, Graph)> {
    check_cap("isomorphism", g.n(), limits.iso.min(ISO_HARD_CAP))?;
    let (cert, order) = canonical_bits(g);
    // order[pos] = vertex; relabel wants vertex -> pos
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok((certificate_bytes(g.n(), cert), g.relabel(&perm)))
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_with(g1, g2, &Limits::default())
}

pub fn are_isomorphic_with(g1: &Graph, g2: &Graph, limits: &Limits) -> Result<bool> {
    let cap = limits.iso.min(ISO_HARD_CAP);
    check_cap("isomorphism", g1.n(), cap)?;
    check_cap("isomorphism", g2.n(), cap)?;
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return Ok(false);
    }
    let mut d1 = g1.degrees();
    let mut d2 = g2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    Ok(canonical_bits(g1).0 == canonical_bits(g2).0)
}
