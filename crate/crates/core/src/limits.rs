//! Size caps for the exponential searches.

/// Hard ceiling on graph order for the bit-mask representation.
pub const MAX_N: usize = 24;

/// Search caps. The defaults keep every exact search in the sub-second to
/// few-second range; callers may raise them explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Independence number branch and bound.
    pub search: usize,
    /// Domatic number backtracking.
    pub domatic: usize,
    /// Set-partition search for the coalition number and count.
    pub partition: usize,
    /// Brute-force canonical certificates.
    pub iso: usize,
    /// Graph enumeration.
    pub enumeration: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            search: 20,
            domatic: 12,
            partition: 12,
            iso: 10,
            enumeration: 7,
        }
    }
}

impl Limits {
    /// Everything raised to the representation ceiling.
    pub fn unbounded() -> Self {
        Limits {
            search: MAX_N,
            domatic: MAX_N,
            partition: MAX_N,
            iso: 16,
            enumeration: 10,
        }
    }
}

pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> crate::Result<()> {
    if n > cap {
        Err(crate::Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
