//! Intersection poset and Möbius function, used as an independent region
//! count for the chamber enumeration.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arrangement::Arrangement;
use crate::linalg::FlatKey;

/// A nonempty intersection of hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    pub dim: usize,
    /// Every hyperplane containing the flat, by arrangement index.
    pub hyperplanes: Vec<usize>,
    pub mobius: i64,
}

/// Flats ordered by reverse inclusion; index 0 is the ambient space.
#[derive(Debug, Clone)]
pub struct IntersectionPoset {
    flats: Vec<Flat>,
    sets: Vec<Bits>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(alloc::vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn is_proper_subset_of(&self, other: &Bits) -> bool {
        self != other && self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

impl IntersectionPoset {
    /// All flats of the full (untruncated) hyperplane set, grown one
    /// codimension at a time, with Möbius values from the recursion
    /// `μ(V) = 1`, `Σ_{V ≤ y ≤ x} μ(y) = 0`.
    pub fn build(arr: &Arrangement) -> Self {
        let rows: Vec<_> = arr.hyperplanes().iter().map(|h| h.augmented_row()).collect();
        let m = rows.len();
        let ambient = FlatKey(Vec::new());
        let mut keys = alloc::vec![ambient.clone()];
        let mut sets = alloc::vec![Bits::new(m)];
        let mut flats = alloc::vec![Flat { dim: arr.dim(), hyperplanes: Vec::new(), mobius: 1 }];

        let mut layer = alloc::vec![0usize];
        while !layer.is_empty() {
            let mut seen: BTreeMap<FlatKey, usize> = BTreeMap::new();
            let mut next = Vec::new();
            for &f in &layer {
                for (h, row) in rows.iter().enumerate() {
                    if flats[f].hyperplanes.binary_search(&h).is_ok() {
                        continue;
                    }
                    let Some(key) = keys[f].with_row(row) else { continue };
                    if seen.contains_key(&key) {
                        continue;
                    }
                    let members: Vec<usize> = (0..m).filter(|&j| key.contains_row(&rows[j])).collect();
                    let mut bits = Bits::new(m);
                    members.iter().for_each(|&j| bits.set(j));
                    let idx = flats.len();
                    flats.push(Flat { dim: arr.dim() - key.codim(), hyperplanes: members, mobius: 0 });
                    sets.push(bits);
                    seen.insert(key.clone(), idx);
                    keys.push(key);
                    next.push(idx);
                }
            }
            layer = next;
        }

        // flats are stored by increasing codimension, so every y < x precedes x
        for x in 1..flats.len() {
            let total: i64 = (0..x).filter(|&y| sets[y].is_proper_subset_of(&sets[x])).map(|y| flats[y].mobius).sum();
            flats[x].mobius = -total;
        }
        Self { flats, sets }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    /// `y ≤ x`: flat `x` is contained in flat `y`.
    pub fn below(&self, y: usize, x: usize) -> bool {
        y == x || self.sets[y].is_proper_subset_of(&self.sets[x])
    }

    /// Zaslavsky's count `Σ |μ(x)|` of regions of the full complement.
    pub fn region_count(&self) -> u64 {
        self.flats.iter().map(|f| f.mobius.unsigned_abs()).sum()
    }
}

/// Number of regions of `R^dim` cut out by all hyperplanes of `arr`,
/// ignoring any window.
pub fn region_count_zaslavsky(arr: &Arrangement) -> u64 {
    IntersectionPoset::build(arr).region_count()
}
