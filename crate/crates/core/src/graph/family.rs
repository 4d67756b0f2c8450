use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::{Error, Result};

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `Star(n)` is K_{1,n-1}, center 0.
    Star(usize),
    Empty(usize),
    /// (K_f + pK_1) ∪ qK_1: clique `0..f`, dominated independents
    /// `f..f+p`, isolates last.
    FullPlusIndependents { f: usize, p: usize, q: usize },
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Empty(n) => n,
            FamilySpec::FullPlusIndependents { f, p, q } => f + p + q,
        }
    }
}

pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    let invalid = |msg: &str| Err(Error::InvalidFamily(format!("{spec}: {msg}")));
    match *spec {
        FamilySpec::Path(n) => {
            if n < 1 {
                return invalid("path needs n >= 1");
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return invalid("cycle needs n >= 3");
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete(n) => {
            if n < 1 {
                return invalid("complete graph needs n >= 1");
            }
            Graph::complete(n)
        }
        FamilySpec::Star(n) => {
            if n < 2 {
                return invalid("star needs n >= 2");
            }
            let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Empty(n) => {
            if n < 1 {
                return invalid("empty graph needs n >= 1");
            }
            Graph::empty(n)
        }
        FamilySpec::FullPlusIndependents { f, p, q } => {
            if f + p + q < 1 {
                return invalid("needs f + p + q >= 1");
            }
            let core = Graph::complete(f)?.join(&Graph::empty(p)?)?;
            core.union(&Graph::empty(q)?)
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(fm, "path:{n}"),
            FamilySpec::Cycle(n) => write!(fm, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(fm, "complete:{n}"),
            FamilySpec::Star(n) => write!(fm, "star:{n}"),
            FamilySpec::Empty(n) => write!(fm, "empty:{n}"),
            FamilySpec::FullPlusIndependents { f, p, q } => write!(fm, "fpq:{f},{p},{q}"),
        }
    }
}

/// `name:arg[,arg...]`, e.g. `cycle:4`, `star:5`, `fpq:2,2,1`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::InvalidFamily(msg);
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| bad(format!("{s:?}: expected name:args")))?;
        let args: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad(format!("{s:?}: arguments must be non-negative integers")))?;
        let one = || -> Result<usize> {
            match args.as_slice() {
                [n] => Ok(*n),
                _ => Err(bad(format!("{s:?}: {name} takes one argument"))),
            }
        };
        let spec = match name.trim() {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "star" => FamilySpec::Star(one()?),
            "empty" => FamilySpec::Empty(one()?),
            "fpq" | "full_plus_independents" => match args.as_slice() {
                [f, p, q] => FamilySpec::FullPlusIndependents { f: *f, p: *p, q: *q },
                _ => return Err(bad(format!("{s:?}: fpq takes f,p,q"))),
            },
            other => return Err(bad(format!("unknown family {other:?}"))),
        };
        Ok(spec)
    }
}
