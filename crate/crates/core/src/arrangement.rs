//! Finite and windowed affine arrangements built from Dynkin data.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::dynkin::{positive_roots, DynkinData, DynkinType};
use crate::error::{Error, Result};
use crate::rational::{floor_strict, int, Rational};

/// The affine hyperplane `{x : normal·x = level}` with a primitive,
/// sign-normalized integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    normal: Vec<i64>,
    level: i64,
}

impl Hyperplane {
    /// Checks the invariants without normalizing.
    pub fn new(normal: Vec<i64>, level: i64) -> Result<Self> {
        let Some(&lead) = normal.iter().find(|&&a| a != 0) else {
            return Err(Error::InvalidHyperplane("zero normal".into()));
        };
        if lead < 0 {
            return Err(Error::InvalidHyperplane(format!("first nonzero entry of {normal:?} is negative")));
        }
        if content(&normal) != 1 {
            return Err(Error::InvalidHyperplane(format!("normal {normal:?} is not primitive")));
        }
        Ok(Self { normal, level })
    }

    /// The central hyperplane orthogonal to `v`, normalized. `None` for `v = 0`.
    pub fn through_origin(v: &[i64]) -> Option<Self> {
        let g = content(v);
        if g == 0 {
            return None;
        }
        let lead = v.iter().find(|&&a| a != 0).copied()?;
        let s = if lead < 0 { -g } else { g };
        Some(Self { normal: v.iter().map(|a| a / s).collect(), level: 0 })
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn translate(&self, level: i64) -> Self {
        Self { normal: self.normal.clone(), level }
    }

    /// `normal·x − level`.
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.normal.iter().zip(x).fold(-int(self.level), |acc, (&a, v)| acc + int(a) * v)
    }

    /// Augmented row `[normal | level]` over the rationals.
    pub(crate) fn augmented_row(&self) -> Vec<Rational> {
        self.normal.iter().map(|&a| int(a)).chain([int(self.level)]).collect()
    }

    /// Whether the hyperplane meets the open box `(−radius, radius)^dim`.
    pub fn meets_open_box(&self, radius: &Rational) -> bool {
        let reach: i64 = self.normal.iter().map(|a| a.abs()).sum();
        int(self.level.abs()) < radius * int(reach)
    }

    fn embed(&self, offset: usize, dim: usize) -> Self {
        let mut normal = alloc::vec![0; dim];
        normal[offset..offset + self.normal.len()].copy_from_slice(&self.normal);
        Self { normal, level: self.level }
    }
}

fn content(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &a| g.gcd(&a))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementKind {
    Central,
    /// Truncation of an infinite affine arrangement to the open box
    /// `(−radius, radius)^dim`.
    AffineWindow {
        radius: Rational,
    },
}

impl ArrangementKind {
    pub fn is_window(&self) -> bool {
        matches!(self, ArrangementKind::AffineWindow { .. })
    }

    pub fn radius(&self) -> Option<&Rational> {
        match self {
            ArrangementKind::Central => None,
            ArrangementKind::AffineWindow { radius } => Some(radius),
        }
    }
}

/// A finite, sorted, duplicate-free set of hyperplanes in `R^dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    kind: ArrangementKind,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Sorts the hyperplanes and validates every invariant.
    pub fn new(dim: usize, kind: ArrangementKind, mut hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let invalid = |msg: alloc::string::String| Err(Error::InvalidArrangement(msg));
        if dim == 0 {
            return invalid("dimension must be positive".into());
        }
        if let ArrangementKind::AffineWindow { radius } = &kind {
            if !radius.is_positive() {
                return Err(Error::NonPositiveRadius);
            }
        }
        hyperplanes.sort();
        for (k, h) in hyperplanes.iter().enumerate() {
            if h.dim() != dim {
                return invalid(format!("hyperplane {k} has dimension {} instead of {dim}", h.dim()));
            }
            if k > 0 && hyperplanes[k - 1] == *h {
                return invalid(format!("duplicate hyperplane {:?}", h));
            }
            match &kind {
                ArrangementKind::Central if h.level != 0 => {
                    return invalid(format!("central arrangement has level {} hyperplane", h.level));
                }
                ArrangementKind::AffineWindow { radius } if !h.meets_open_box(radius) => {
                    return invalid(format!("hyperplane {:?} misses the window", h));
                }
                _ => {}
            }
        }
        Ok(Self { dim, kind, hyperplanes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &ArrangementKind {
        &self.kind
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn is_central(&self) -> bool {
        self.kind == ArrangementKind::Central
    }

    /// The level-zero hyperplanes.
    pub fn central_part(&self) -> Vec<Hyperplane> {
        self.hyperplanes.iter().filter(|h| h.level == 0).cloned().collect()
    }
}

/// Nonzero restrictions of the positive roots to the surviving nodes, in
/// root order. Proportional duplicates are kept.
pub fn restrict_roots(data: &DynkinData) -> Result<Vec<Vec<i64>>> {
    let surviving = data.surviving();
    if surviving.is_empty() {
        return Err(Error::EmptySurvivingSet);
    }
    Ok(positive_roots(data.delta())
        .into_iter()
        .map(|root| surviving.iter().map(|&i| root.coords()[i]).collect::<Vec<_>>())
        .filter(|v| v.iter().any(|&a| a != 0))
        .collect())
}

/// The finite arrangement of restricted-root hyperplanes.
pub fn build_finite(data: &DynkinData) -> Result<Arrangement> {
    let restricted = restrict_roots(data)?;
    let dim = data.surviving().len();
    let planes: BTreeSet<Hyperplane> = restricted.iter().filter_map(|v| Hyperplane::through_origin(v)).collect();
    Arrangement::new(dim, ArrangementKind::Central, planes.into_iter().collect())
}

/// Every integer translate of the finite hyperplanes that meets the open
/// box `(−radius, radius)^dim`.
pub fn build_affine(data: &DynkinData, radius: &Rational) -> Result<Arrangement> {
    if !radius.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let finite = build_finite(data)?;
    let mut planes = Vec::new();
    for h in finite.hyperplanes() {
        let reach: i64 = h.normal().iter().map(|a| a.abs()).sum();
        // largest integer strictly below radius·reach
        let top = floor_strict(&(radius * int(reach)))
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::InvalidArrangement("window radius too large".into()))?;
        planes.extend((-top..=top).map(|k| h.translate(k)));
    }
    Arrangement::new(finite.dim(), ArrangementKind::AffineWindow { radius: radius.clone() }, planes)
}

/// Product arrangement: each factor's hyperplanes are embedded on its own
/// block of coordinates.
pub fn product_arrangement(parts: &[Arrangement]) -> Result<Arrangement> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidArrangement("empty product".into()));
    };
    if parts.iter().any(|p| p.kind != first.kind) {
        return Err(Error::MixedKinds);
    }
    let dim = parts.iter().map(Arrangement::dim).sum();
    let mut planes = Vec::new();
    let mut offset = 0;
    for part in parts {
        planes.extend(part.hyperplanes.iter().map(|h| h.embed(offset, dim)));
        offset += part.dim;
    }
    Arrangement::new(dim, first.kind.clone(), planes)
}

/// Every `(Δ, J)` with exactly two surviving nodes, over simply-laced types
/// of rank at most `max_rank`, whose finite arrangement has `lines` lines.
pub fn search_rank_two(max_rank: usize, lines: usize) -> Vec<DynkinData> {
    let mut found = Vec::new();
    if lines == 0 {
        return found;
    }
    for delta in DynkinType::all_up_to(max_rank) {
        let n = delta.rank();
        for a in 0..n {
            for b in a + 1..n {
                let contracted = (0..n).filter(|&i| i != a && i != b);
                let Ok(data) = DynkinData::new(delta, contracted) else { continue };
                if build_finite(&data).is_ok_and(|arr| arr.len() == lines) {
                    found.push(data);
                }
            }
        }
    }
    found
}
