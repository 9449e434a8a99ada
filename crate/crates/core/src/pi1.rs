//! Loops `ℓ_{α,i}` generating the fundamental group of the complexified
//! complement, atom-pair relations of the Deligne groupoid, the crossing
//! count homomorphism, and relation checking for candidate representations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use crate::chambers::{walls, ChamberGraph, ChamberId, EdgeId};
use crate::error::{Error, Result};
use crate::galleries::{atoms_from_distances, distances, PositivePath, DEFAULT_ATOM_CAP};
use crate::permutation::GroupElement;

/// An edge traversed forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedEdge {
    pub edge: EdgeId,
    pub inverse: bool,
}

impl SignedEdge {
    pub fn forward(edge: EdgeId) -> Self {
        Self { edge, inverse: false }
    }

    pub fn backward(edge: EdgeId) -> Self {
        Self { edge, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Self { edge: self.edge, inverse: !self.inverse }
    }
}

/// `+e` for a forward edge, `-e` for an inverse one.
impl fmt::Display for SignedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.inverse { '-' } else { '+' }, self.edge)
    }
}

/// A word in the free groupoid on the chamber graph's edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupoidWord {
    base: ChamberId,
    end: ChamberId,
    letters: Vec<SignedEdge>,
}

impl GroupoidWord {
    pub fn empty(base: ChamberId) -> Self {
        Self { base, end: base, letters: Vec::new() }
    }

    pub fn new(g: &ChamberGraph, base: ChamberId, letters: Vec<SignedEdge>) -> Result<Self> {
        g.chamber(base)?;
        let mut at = base;
        for l in &letters {
            let e = g.edge(l.edge)?;
            let (from, to) = if l.inverse { (e.to, e.from) } else { (e.from, e.to) };
            if from != at {
                return Err(Error::NonComposable);
            }
            at = to;
        }
        Ok(Self { base, end: at, letters })
    }

    pub fn from_path(p: &PositivePath) -> Self {
        Self { base: p.source(), end: p.target(), letters: p.edges().iter().map(|&e| SignedEdge::forward(e)).collect() }
    }

    pub fn base(&self) -> ChamberId {
        self.base
    }

    pub fn end(&self) -> ChamberId {
        self.end
    }

    pub fn letters(&self) -> &[SignedEdge] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.base == self.end
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &GroupoidWord) -> Result<GroupoidWord> {
        if self.end != other.base {
            return Err(Error::NonComposable);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { base: self.base, end: other.end, letters })
    }

    pub fn inverse(&self) -> GroupoidWord {
        Self { base: self.end, end: self.base, letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }
}

/// `ν(w)`: net number of forward crossings of each hyperplane.
pub fn crossing_homomorphism(g: &ChamberGraph, w: &GroupoidWord) -> Result<Vec<i64>> {
    let mut nu = alloc::vec![0i64; g.arrangement().len()];
    for l in w.letters() {
        let h = g.edge(l.edge)?.hyperplane;
        nu[h] += if l.inverse { -1 } else { 1 };
    }
    Ok(nu)
}

/// The chamber containing the seed point.
pub fn base_chamber(_g: &ChamberGraph) -> ChamberId {
    ChamberId(0)
}

/// `ℓ_{α,i}`: the atom `α` from the base chamber to `D`, once around wall
/// `i` of `D` (out across it and straight back), then `α` reversed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Generator {
    pub atom: PositivePath,
    pub wall: usize,
    pub loop_word: GroupoidWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generators {
    pub generators: Vec<Pi1Generator>,
    /// Atoms skipped because they visit a window-boundary chamber.
    pub excluded_atoms: usize,
}

/// One generator per chamber `D`, atom `α: C₊ → D` and wall `i` of `D`,
/// ordered by chamber id, then atom, then wall.
pub fn generators(g: &ChamberGraph, max_atoms_per_chamber: usize) -> Result<Generators> {
    let mut out = Vec::new();
    let mut excluded_atoms = 0;
    if g.arrangement().is_empty() {
        return Ok(Generators { generators: out, excluded_atoms });
    }
    let base = base_chamber(g);
    let dist = distances(g, base)?;
    for d in g.chambers() {
        if dist[d.id.0].is_none() {
            continue;
        }
        let atoms = atoms_from_distances(g, base, d.id, &dist, max_atoms_per_chamber)?;
        if atoms.touches_boundary {
            excluded_atoms += atoms.len();
            continue;
        }
        let wall_list = walls(d.id, g)?;
        for atom in atoms.paths {
            let there = GroupoidWord::from_path(&atom);
            for &i in &wall_list {
                let e = g.edge_between(d.id, i).ok_or(Error::UnknownEdge(i))?;
                let f = g.reverse(e)?;
                let around = GroupoidWord {
                    base: d.id,
                    end: d.id,
                    letters: alloc::vec![SignedEdge::forward(e), SignedEdge::forward(f)],
                };
                let loop_word = there.concat(&around)?.concat(&there.inverse())?;
                out.push(Pi1Generator { atom: atom.clone(), wall: i, loop_word });
            }
        }
    }
    Ok(Generators { generators: out, excluded_atoms })
}

/// Two atoms with common endpoints, identified in the Deligne groupoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub left: PositivePath,
    pub right: PositivePath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relations {
    pub relations: Vec<Relation>,
    /// Chamber pairs skipped because their atoms visit a boundary chamber.
    pub excluded_pairs: usize,
}

/// For every ordered pair of chambers at distance `1..=length_cap`, every
/// unordered pair of distinct atoms between them. Ordered by source, target,
/// then atom order.
pub fn relations(g: &ChamberGraph, length_cap: usize) -> Result<Relations> {
    relations_with_cap(g, length_cap, DEFAULT_ATOM_CAP)
}

pub fn relations_with_cap(g: &ChamberGraph, length_cap: usize, atom_cap: usize) -> Result<Relations> {
    let mut out = Vec::new();
    let mut excluded_pairs = 0;
    for a in g.chambers() {
        let dist = distances(g, a.id)?;
        for b in g.chambers() {
            let Some(d) = dist[b.id.0] else { continue };
            if d < 2 || d > length_cap {
                continue;
            }
            let atoms = atoms_from_distances(g, a.id, b.id, &dist, atom_cap)?;
            if atoms.touches_boundary {
                excluded_pairs += 1;
                continue;
            }
            for (i, p) in atoms.paths.iter().enumerate() {
                for q in &atoms.paths[i + 1..] {
                    out.push(Relation { left: p.clone(), right: q.clone() });
                }
            }
        }
    }
    Ok(Relations { relations: out, excluded_pairs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure<G> {
    /// Index into the checked relation list.
    pub index: usize,
    pub left: G,
    pub right: G,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport<G> {
    pub checked: usize,
    pub failures: Vec<RelationFailure<G>>,
}

impl<G> RepresentationReport<G> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Product `ρ(a_1) · ρ(a_2) · … · ρ(a_n)` along a path.
fn path_product<G: GroupElement>(p: &PositivePath, assignment: &BTreeMap<EdgeId, G>, identity: &G) -> G {
    p.edges().iter().fold(identity.clone(), |acc, e| acc.mul(&assignment[e]))
}

/// Checks that both sides of every relation have equal products.
pub fn check_representation<G: GroupElement>(
    g: &ChamberGraph,
    assignment: &BTreeMap<EdgeId, G>,
    rels: &[Relation],
) -> Result<RepresentationReport<G>> {
    if let Some(missing) = g.edges().iter().find(|e| !assignment.contains_key(&e.id)) {
        return Err(Error::MissingEdgeAssignment(missing.id.0));
    }
    let mut failures = Vec::new();
    if let Some(sample) = assignment.values().next() {
        let identity = sample.identity_like();
        for (index, rel) in rels.iter().enumerate() {
            let left = path_product(&rel.left, assignment, &identity);
            let right = path_product(&rel.right, assignment, &identity);
            if left != right {
                failures.push(RelationFailure { index, left, right });
            }
        }
    }
    Ok(RepresentationReport { checked: rels.len(), failures })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordEquality {
    /// A chain of cancellations and atom swaps joins the words.
    ProvenEqual {
        rewrites: usize,
    },
    Unknown,
}

/// Frontier bound for [`equal_in_groupoid`]; exceeding it yields `Unknown`.
pub const WORD_SEARCH_LIMIT: usize = 200_000;

/// Bounded word problem: searches from both words with free cancellation
/// (`e e⁻¹ = 1`) and atom swaps (`word(p) ↔ word(q)` for each relation, also
/// inverted) and reports equality if the two searches meet within `depth`
/// total rewrites. Every rewrite is an identity in the groupoid, so
/// `ProvenEqual` is never wrong.
pub fn equal_in_groupoid(
    w1: &GroupoidWord,
    w2: &GroupoidWord,
    rels: &[Relation],
    depth: usize,
) -> Result<WordEquality> {
    if w1.base != w2.base {
        return Err(Error::BaseMismatch);
    }
    if w1.end != w2.end {
        return Err(Error::EndpointMismatch);
    }
    let swaps = swap_rules(rels);

    let mut left: BTreeMap<Vec<SignedEdge>, usize> = BTreeMap::from([(w1.letters.clone(), 0)]);
    let mut right: BTreeMap<Vec<SignedEdge>, usize> = BTreeMap::from([(w2.letters.clone(), 0)]);
    let mut left_frontier = alloc::vec![w1.letters.clone()];
    let mut right_frontier = alloc::vec![w2.letters.clone()];
    let (mut dl, mut dr) = (0, 0);

    loop {
        if let Some(total) = meeting(&left, &right) {
            return Ok(WordEquality::ProvenEqual { rewrites: total });
        }
        if dl + dr >= depth {
            return Ok(WordEquality::Unknown);
        }
        // grow the smaller side
        if left_frontier.is_empty() && right_frontier.is_empty() {
            return Ok(WordEquality::Unknown);
        }
        let grow_left =
            right_frontier.is_empty() || (!left_frontier.is_empty() && left_frontier.len() <= right_frontier.len());
        let (seen, frontier, d) = if grow_left {
            (&mut left, &mut left_frontier, &mut dl)
        } else {
            (&mut right, &mut right_frontier, &mut dr)
        };
        *d += 1;
        let mut next = Vec::new();
        for word in frontier.iter() {
            for rewritten in rewrites(word, &swaps) {
                if !seen.contains_key(&rewritten) {
                    seen.insert(rewritten.clone(), *d);
                    next.push(rewritten);
                }
            }
            if seen.len() > WORD_SEARCH_LIMIT {
                return Ok(WordEquality::Unknown);
            }
        }
        if next.is_empty() {
            // an exhausted side spends no depth
            *d -= 1;
        }
        *frontier = next;
    }
}

fn meeting(left: &BTreeMap<Vec<SignedEdge>, usize>, right: &BTreeMap<Vec<SignedEdge>, usize>) -> Option<usize> {
    left.iter().filter_map(|(w, a)| right.get(w).map(|b| a + b)).min()
}

fn swap_rules(rels: &[Relation]) -> Vec<(Vec<SignedEdge>, Vec<SignedEdge>)> {
    let mut rules = BTreeSet::new();
    for rel in rels {
        let p = GroupoidWord::from_path(&rel.left);
        let q = GroupoidWord::from_path(&rel.right);
        for (a, b) in [(&p, &q), (&q, &p)] {
            rules.insert((a.letters.clone(), b.letters.clone()));
            rules.insert((a.inverse().letters, b.inverse().letters));
        }
    }
    rules.into_iter().collect()
}

fn rewrites(word: &[SignedEdge], swaps: &[(Vec<SignedEdge>, Vec<SignedEdge>)]) -> Vec<Vec<SignedEdge>> {
    let mut out = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        if word[i].edge == word[i + 1].edge && word[i].inverse != word[i + 1].inverse {
            let mut w = word[..i].to_vec();
            w.extend_from_slice(&word[i + 2..]);
            out.push(w);
        }
    }
    for (from, to) in swaps {
        if from.is_empty() || from.len() > word.len() {
            continue;
        }
        for i in 0..=word.len() - from.len() {
            if word[i..i + from.len()] == from[..] {
                let mut w = word[..i].to_vec();
                w.extend_from_slice(to);
                w.extend_from_slice(&word[i + from.len()..]);
                out.push(w);
            }
        }
    }
    out
}
