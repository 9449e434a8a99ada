//! Simply-laced Dynkin diagrams, Cartan matrices and positive roots.
//!
//! Node numbering is fixed per family:
//!
//! * `A_n`: the path `0 - 1 - ... - (n-1)`.
//! * `D_n`: node `1` is the branch node with leaves `0` and `2`; the tail
//!   `1 - 3 - 4 - ... - (n-1)` hangs off it.
//! * `E_n`: the path `0 - 2 - 3 - ... - (n-1)` with node `1` attached to node `3`.
//!
//! Contracted node sets in [`DynkinData`] refer to these ids.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::D => "D",
            Family::E => "E",
        })
    }
}

/// A simply-laced Dynkin diagram. Construction checks the rank bounds, so
/// every value is valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidType { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Undirected diagram edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut edges = match self.family {
            Family::A => (1..n).map(|i| (i - 1, i)).collect(),
            Family::D => {
                let mut e = vec![(0, 1), (1, 2), (1, 3)];
                e.extend((4..n).map(|i| (i - 1, i)));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((3..n).map(|i| (i - 1, i)));
                e
            }
        };
        edges.sort_unstable();
        edges
    }

    /// All simply-laced types of rank at most `max_rank`, ordered A, D, E by rank.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        [Family::A, Family::D, Family::E]
            .into_iter()
            .flat_map(|family| (1..=max_rank).filter_map(move |rank| DynkinType::new(family, rank).ok()))
            .collect()
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(Error::Parse(format!("unknown Dynkin family in {s:?}"))),
        };
        let rank = parse_index(chars.as_str()).ok_or_else(|| Error::Parse(format!("bad rank in {s:?}")))?;
        DynkinType::new(family, rank)
    }
}

/// Decimal without sign, leading zeros or whitespace.
fn parse_index(s: &str) -> Option<usize> {
    let canonical = !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if canonical {
        s.parse().ok()
    } else {
        None
    }
}

/// Cartan matrix in the fixed node numbering.
pub fn cartan_matrix(t: DynkinType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in t.edges() {
        m[i][j] = -1;
        m[j][i] = -1;
    }
    m
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    /// `s_i(β) = β − ⟨β, α_i⟩ α_i`.
    pub fn reflect(&self, cartan: &[Vec<i64>], i: usize) -> Root {
        let pairing: i64 = self.0.iter().zip(cartan).map(|(b, row)| b * row[i]).sum();
        let mut v = self.0.clone();
        v[i] -= pairing;
        Root(v)
    }
}

/// Positive roots by closing the simple roots under simple reflections,
/// sorted lexicographically.
pub fn positive_roots(t: DynkinType) -> Vec<Root> {
    let cartan = cartan_matrix(t);
    let n = t.rank();
    let mut seen: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            let image = beta.reflect(&cartan, i);
            if image.0.iter().all(|&c| c >= 0) && !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    seen.into_iter().collect()
}

/// A Dynkin diagram together with the set `J` of contracted nodes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinData {
    delta: DynkinType,
    contracted: BTreeSet<usize>,
}

impl DynkinData {
    pub fn new(delta: DynkinType, contracted: impl IntoIterator<Item = usize>) -> Result<Self> {
        let contracted: BTreeSet<usize> = contracted.into_iter().collect();
        if let Some(&node) = contracted.iter().find(|&&i| i >= delta.rank()) {
            return Err(Error::UnknownNode { node, rank: delta.rank() });
        }
        Ok(Self { delta, contracted })
    }

    pub fn delta(&self) -> DynkinType {
        self.delta
    }

    pub fn contracted(&self) -> &BTreeSet<usize> {
        &self.contracted
    }

    /// Surviving nodes `J^c` in increasing order.
    pub fn surviving(&self) -> Vec<usize> {
        (0..self.delta.rank()).filter(|i| !self.contracted.contains(i)).collect()
    }
}

impl fmt::Display for DynkinData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:J={{", self.delta)?;
        for (k, i) in self.contracted.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Parses the canonical form `<family><rank>:J={i,j,...}`. Node ids must be
/// strictly increasing so that parsing and printing round-trip exactly.
impl FromStr for DynkinData {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("{why} in Dynkin data {s:?}"));
        let (ty, rest) = s.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let delta: DynkinType = ty.parse()?;
        let body = rest.strip_prefix("J={").and_then(|r| r.strip_suffix('}')).ok_or_else(|| bad("expected J={...}"))?;
        let mut nodes = Vec::new();
        if !body.is_empty() {
            for part in body.split(',') {
                let node = parse_index(part).ok_or_else(|| bad(&format!("bad node id {part:?}")))?;
                if nodes.last().is_some_and(|&prev| prev >= node) {
                    return Err(bad("node ids must be strictly increasing"));
                }
                nodes.push(node);
            }
        }
        DynkinData::new(delta, nodes)
    }
}

impl From<DynkinType> for DynkinData {
    fn from(delta: DynkinType) -> Self {
        Self { delta, contracted: BTreeSet::new() }
    }
}
