use std::fmt;

use crate::graph::{low_bits, Graph, VertexSet};
use crate::{Error, Result};

/// Ordered list of disjoint nonempty parts covering `0..n`. Parts are kept
/// sorted by smallest member.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    parts: Vec<VertexSet>,
}

impl Partition {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self> {
        let mut seen = 0u64;
        for p in &parts {
            if p.host_n() != n {
                return Err(Error::HostMismatch {
                    set_n: p.host_n(),
                    graph_n: n,
                });
            }
            if p.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            if seen & p.mask() != 0 {
                let v = (seen & p.mask()).trailing_zeros();
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            seen |= p.mask();
        }
        if seen != low_bits(n) {
            let v = (low_bits(n) & !seen).trailing_zeros();
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        let mut parts = parts;
        parts.sort_by_key(|p| p.min());
        Ok(Partition { n, parts })
    }

    pub fn from_masks(n: usize, masks: &[u64]) -> Result<Self> {
        let parts = masks
            .iter()
            .map(|&m| VertexSet::new(m, n))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(n, parts)
    }

    /// From a label per vertex (e.g. a restricted growth string). Labels
    /// need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let n = labels.len();
        let top = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut masks = vec![0u64; top];
        for (v, &l) in labels.iter().enumerate() {
            masks[l] |= 1 << v;
        }
        masks.retain(|&m| m != 0);
        Partition::from_masks(n, &masks)
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            parts: (0..n)
                .map(|v| VertexSet::from_mask_unchecked(1 << v, n))
                .collect(),
        }
    }

    /// Parts separated by `|`, members by `,`; whitespace ignored.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Partition::new(n, Vec::new());
        }
        let mut parts = Vec::new();
        for (i, chunk) in compact.split('|').enumerate() {
            if chunk.is_empty() {
                return Err(Error::parse(format!("part {i}"), "empty part"));
            }
            let mut mask = 0u64;
            for tok in chunk.split(',') {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(format!("part {i}"), format!("bad vertex {tok:?}")))?;
                if v >= n {
                    return Err(Error::parse(
                        format!("part {i}"),
                        format!("vertex {v} out of range for n = {n}"),
                    ));
                }
                if mask >> v & 1 == 1 {
                    return Err(Error::parse(format!("part {i}"), format!("vertex {v} repeated")));
                }
                mask |= 1 << v;
            }
            parts.push(VertexSet::from_mask_unchecked(mask, n));
        }
        Partition::new(n, parts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> VertexSet {
        self.parts[i]
    }

    pub fn masks(&self) -> Vec<u64> {
        self.parts.iter().map(|p| p.mask()).collect()
    }

    /// Index of the part holding `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    /// Restricted growth string: label of each vertex in part order.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, p) in self.parts.iter().enumerate() {
            for v in p.iter() {
                out[v] = i;
            }
        }
        out
    }

    pub(crate) fn check_host(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            Err(Error::HostMismatch {
                set_n: self.n,
                graph_n: g.n(),
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}
