//! Permutations of `{0, …, n-1}` written in cycle notation.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Elements of a finite group that assignments can take values in.
pub trait GroupElement: Clone + Eq {
    /// Group product `self · rhs`.
    fn mul(&self, rhs: &Self) -> Self;
    /// Identity of the group `self` belongs to.
    fn identity_like(&self) -> Self;
}

/// A permutation stored as its image list. Products compose right to left:
/// `(p · q)(i) = p(q(i))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || core::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images })
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Self { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Parses cycle notation such as `(0 1 2)(3 4)`, `(0,1)` or `()`.
    pub fn parse_cycles(degree: usize, s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidPermutation(format!("{why}: {s:?}"));
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = alloc::vec![false; degree];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let body = &body[..body_end - 1];
            let points: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<_>>()?;
            for &p in &points {
                if p >= degree {
                    return Err(bad("point out of range"));
                }
                if core::mem::replace(&mut used[p], true) {
                    return Err(bad("cycles are not disjoint"));
                }
            }
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()];
            }
            rest = rest[body_end + 1..].trim_start();
        }
        Ok(Self { images })
    }

    /// Disjoint cycles, each starting at its smallest point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = alloc::vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl GroupElement for Permutation {
    fn mul(&self, rhs: &Self) -> Self {
        Self { images: rhs.images.iter().map(|&i| self.images[i]).collect() }
    }

    fn identity_like(&self) -> Self {
        Self::identity(self.degree())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let parts: Vec<String> = cycle.iter().map(|p| format!("{p}")).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
