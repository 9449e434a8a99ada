//! Positive paths in the chamber graph: composition, atoms, reducedness,
//! separating sets and mutation-label transport.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::chambers::{walls, ChamberGraph, ChamberId, EdgeId};
use crate::error::{Error, Result};
use crate::linalg::FlatKey;

/// Default bound on the number of atoms enumerated between two chambers.
pub const DEFAULT_ATOM_CAP: usize = 1_000_000;

/// A composable sequence of directed edges `a_n ∘ … ∘ a_1`, stored in
/// traversal order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PositivePath {
    source: ChamberId,
    target: ChamberId,
    edges: Vec<EdgeId>,
    crossings: Vec<usize>,
}

impl PositivePath {
    pub fn empty(at: ChamberId) -> Self {
        Self { source: at, target: at, edges: Vec::new(), crossings: Vec::new() }
    }

    /// Validates that `edges` compose starting at `source`.
    pub fn new(g: &ChamberGraph, source: ChamberId, edges: Vec<EdgeId>) -> Result<Self> {
        g.chamber(source)?;
        let mut at = source;
        let mut crossings = Vec::with_capacity(edges.len());
        for &id in &edges {
            let e = g.edge(id)?;
            if e.from != at {
                return Err(Error::NonComposable);
            }
            crossings.push(e.hyperplane);
            at = e.to;
        }
        Ok(Self { source, target: at, edges, crossings })
    }

    pub fn source(&self) -> ChamberId {
        self.source
    }

    pub fn target(&self) -> ChamberId {
        self.target
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Hyperplane crossed at each step.
    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// No hyperplane is crossed twice.
    pub fn is_reduced(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.crossings.iter().all(|h| seen.insert(*h))
    }
}

/// `q ∘ p`: first `p`, then `q`.
pub fn compose(p: &PositivePath, q: &PositivePath) -> Result<PositivePath> {
    if p.target != q.source {
        return Err(Error::NonComposable);
    }
    let mut out = p.clone();
    out.edges.extend_from_slice(&q.edges);
    out.crossings.extend_from_slice(&q.crossings);
    out.target = q.target;
    Ok(out)
}

pub fn is_reduced(p: &PositivePath) -> bool {
    p.is_reduced()
}

/// Hyperplanes on which the sign vectors of `a` and `b` differ.
pub fn separating_set(g: &ChamberGraph, a: ChamberId, b: ChamberId) -> Result<BTreeSet<usize>> {
    let (sa, sb) = (&g.chamber(a)?.signs, &g.chamber(b)?.signs);
    Ok(sa.iter().zip(sb).enumerate().filter(|(_, (x, y))| x != y).map(|(h, _)| h).collect())
}

/// Minimal positive paths between two chambers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atoms {
    /// Lexicographic by edge sequence.
    pub paths: Vec<PositivePath>,
    /// Some minimal path visits a boundary chamber of a window; truncation
    /// may have changed the true minimal paths.
    pub touches_boundary: bool,
}

impl Atoms {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Breadth-first distances from `from`; `None` where unreachable.
pub fn distances(g: &ChamberGraph, from: ChamberId) -> Result<Vec<Option<usize>>> {
    g.chamber(from)?;
    let mut dist = alloc::vec![None; g.len()];
    dist[from.0] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(c) = queue.pop_front() {
        let d = dist[c.0].unwrap_or_default();
        for &e in g.outgoing(c)? {
            let to = g.edges()[e.0].to;
            if dist[to.0].is_none() {
                dist[to.0] = Some(d + 1);
                queue.push_back(to);
            }
        }
    }
    Ok(dist)
}

/// All atoms from `from` to `to`, at most [`DEFAULT_ATOM_CAP`].
pub fn atoms(g: &ChamberGraph, from: ChamberId, to: ChamberId) -> Result<Atoms> {
    atoms_with_cap(g, from, to, DEFAULT_ATOM_CAP)
}

pub fn atoms_with_cap(g: &ChamberGraph, from: ChamberId, to: ChamberId, cap: usize) -> Result<Atoms> {
    g.chamber(to)?;
    let dist = distances(g, from)?;
    atoms_from_distances(g, from, to, &dist, cap)
}

/// Atoms to `to` given the distance table of `from`. Shortest paths are
/// walked backwards through the layered predecessor DAG.
pub fn atoms_from_distances(
    g: &ChamberGraph,
    from: ChamberId,
    to: ChamberId,
    dist: &[Option<usize>],
    cap: usize,
) -> Result<Atoms> {
    let Some(length) = dist.get(to.0).copied().flatten() else {
        return Err(Error::Unreachable { from: from.0, to: to.0 });
    };
    let mut touches_boundary = false;
    let mut paths: Vec<Vec<EdgeId>> = Vec::new();
    // stack of (chamber, reversed partial path)
    let mut stack: Vec<(ChamberId, Vec<EdgeId>)> = alloc::vec![(to, Vec::with_capacity(length))];
    while let Some((at, rev)) = stack.pop() {
        touches_boundary |= g.chambers()[at.0].boundary;
        if at == from {
            if paths.len() == cap {
                return Err(Error::Overflow { cap });
            }
            paths.push(rev.into_iter().rev().collect());
            continue;
        }
        let d = dist[at.0].unwrap_or_default();
        for &out in g.outgoing(at)? {
            // the reverse of an outgoing edge enters `at`
            let e = g.edges()[out.0];
            if dist[e.to.0] == Some(d - 1) {
                let mut next = rev.clone();
                next.push(g.reverse(out)?);
                stack.push((e.to, next));
            }
        }
    }
    paths.sort();
    let paths = paths.into_iter().map(|edges| PositivePath::new(g, from, edges)).collect::<Result<Vec<_>>>()?;
    Ok(Atoms { paths, touches_boundary })
}

/// A formal summand: an initial symbol or a mutation `ν_h` applied to one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    Initial(String),
    Mutated { wall: usize, inner: Box<Summand> },
}

impl Summand {
    /// `ν_h`, cancelling `ν_h ν_h`.
    pub fn mutate(self, wall: usize) -> Summand {
        match self {
            Summand::Mutated { wall: w, inner } if w == wall => *inner,
            other => Summand::Mutated { wall, inner: Box::new(other) },
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Initial(name) => f.write_str(name),
            Summand::Mutated { wall, inner } => write!(f, "nu{wall}({inner})"),
        }
    }
}

/// Formal summand tuple attached to a chamber; slot 0 is the distinguished
/// summand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MutationLabel(pub Vec<Summand>);

impl MutationLabel {
    /// `N0, N1, …` with one slot per wall of `c`.
    pub fn initial(g: &ChamberGraph, c: ChamberId) -> Result<Self> {
        let n = walls(c, g)?.len();
        Ok(Self((0..n).map(|i| Summand::Initial(format!("N{i}"))).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MutationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str(")")
    }
}

/// Wall-to-slot assignment for the chamber currently carrying the label.
type SlotMap = BTreeMap<usize, usize>;

/// Transports `start_label` along `p`. Crossing wall `h` replaces the
/// summand in the slot of `h` by `ν_h` of it.
///
/// In the starting chamber, walls take slots in increasing hyperplane order.
/// After crossing `h`, the wall `h` keeps its slot and every other wall `w'`
/// of the new chamber inherits the slot of the old wall `w` that cuts the
/// shared facet in the same flat (`w ∩ h = w' ∩ h`). This is the
/// opposite-vertex correspondence for simplicial chambers, so crossing a
/// wall and crossing back always uses the same slot. Walls left unmatched
/// (at a window boundary) take the free slots in increasing order.
pub fn mutation_walk(g: &ChamberGraph, start_label: &MutationLabel, p: &PositivePath) -> Result<Vec<MutationLabel>> {
    let start_walls = walls(p.source(), g)?;
    if start_walls.len() != start_label.len() {
        return Err(Error::LabelMismatch { label: start_label.len(), walls: start_walls.len() });
    }
    let mut slots: SlotMap = start_walls.into_iter().enumerate().map(|(slot, w)| (w, slot)).collect();
    let mut label = start_label.clone();
    let mut out = alloc::vec![label.clone()];
    for &id in p.edges() {
        let e = *g.edge(id)?;
        let slot = slots[&e.hyperplane];
        let old = label.0[slot].clone();
        label.0[slot] = old.mutate(e.hyperplane);
        slots = transport_slots(g, &slots, e.from, e.to, e.hyperplane, label.len())?;
        out.push(label.clone());
    }
    Ok(out)
}

fn transport_slots(
    g: &ChamberGraph,
    slots: &SlotMap,
    from: ChamberId,
    to: ChamberId,
    h: usize,
    width: usize,
) -> Result<SlotMap> {
    let planes = g.arrangement().hyperplanes();
    let ridge = |w: usize| FlatKey::from_rows(alloc::vec![planes[w].augmented_row(), planes[h].augmented_row()]);

    let mut by_ridge: BTreeMap<Option<FlatKey>, Vec<usize>> = BTreeMap::new();
    for w in walls(from, g)?.into_iter().filter(|&w| w != h) {
        by_ridge.entry(ridge(w)).or_default().push(w);
    }
    let target_walls = walls(to, g)?;
    if target_walls.len() > width {
        return Err(Error::LabelMismatch { label: width, walls: target_walls.len() });
    }
    let mut new_by_ridge: BTreeMap<Option<FlatKey>, Vec<usize>> = BTreeMap::new();
    for &w in target_walls.iter().filter(|&&w| w != h) {
        new_by_ridge.entry(ridge(w)).or_default().push(w);
    }

    let mut next = SlotMap::new();
    next.insert(h, slots[&h]);
    for (key, new_walls) in &new_by_ridge {
        if let (Some(old), [single]) = (by_ridge.get(key), new_walls.as_slice()) {
            if let [w] = old.as_slice() {
                next.insert(*single, slots[w]);
            }
        }
    }
    let used: BTreeSet<usize> = next.values().copied().collect();
    let mut free = (0..width).filter(|s| !used.contains(s));
    for &w in &target_walls {
        if let alloc::collections::btree_map::Entry::Vacant(v) = next.entry(w) {
            v.insert(free.next().ok_or(Error::LabelMismatch { label: width, walls: target_walls.len() })?);
        }
    }
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{build_affine, build_finite};
    use crate::chambers::enumerate_chambers;
    use crate::dynkin::DynkinData;
    use crate::rational::int;
    use alloc::vec;

    fn graph(s: &str) -> ChamberGraph {
        enumerate_chambers(&build_finite(&s.parse::<DynkinData>().unwrap()).unwrap()).unwrap()
    }

    fn window(s: &str, r: i64) -> ChamberGraph {
        enumerate_chambers(&build_affine(&s.parse::<DynkinData>().unwrap(), &int(r)).unwrap()).unwrap()
    }

    /// Chamber of the window graph containing the given point of the line.
    fn interval(g: &ChamberGraph, lo: i64) -> ChamberId {
        g.chambers().iter().find(|c| c.witness[0] > int(lo) && c.witness[0] < int(lo + 1)).unwrap().id
    }

    #[test]
    fn composition() {
        let g = graph("A1:J={}");
        let there = PositivePath::new(&g, ChamberId(0), vec![g.outgoing(ChamberId(0)).unwrap()[0]]).unwrap();
        let back = PositivePath::new(&g, ChamberId(1), vec![g.outgoing(ChamberId(1)).unwrap()[0]]).unwrap();
        let round = compose(&there, &back).unwrap();
        assert_eq!(round.len(), 2);
        assert_eq!(round.target(), ChamberId(0));
        assert!(!round.is_reduced());
        assert_eq!(compose(&there, &PositivePath::empty(ChamberId(1))).unwrap(), there);
        assert_eq!(compose(&there, &there), Err(Error::NonComposable));
        assert!(PositivePath::empty(ChamberId(0)).is_reduced());

        let five = compose(&round, &compose(&there, &back).and_then(|p| compose(&p, &there)).unwrap()).unwrap();
        assert_eq!(five.len(), 5);
    }

    #[test]
    fn a2_antipodal_atoms() {
        let g = graph("A2:J={}");
        let antipode =
            g.chambers().iter().find(|c| c.signs.iter().all(|s| *s == crate::chambers::Sign::Negative)).unwrap().id;
        let a = atoms(&g, ChamberId(0), antipode).unwrap();
        assert_eq!(a.len(), 2);
        for p in &a.paths {
            assert_eq!(p.len(), 3);
            assert!(p.is_reduced());
            let crossed: BTreeSet<usize> = p.crossings().iter().copied().collect();
            assert_eq!(crossed, separating_set(&g, ChamberId(0), antipode).unwrap());
        }
        assert_eq!(separating_set(&g, ChamberId(0), antipode).unwrap().len(), 3);
        assert!(separating_set(&g, ChamberId(0), ChamberId(0)).unwrap().is_empty());

        let same = atoms(&g, ChamberId(2), ChamberId(2)).unwrap();
        assert_eq!(same.paths, vec![PositivePath::empty(ChamberId(2))]);
    }

    #[test]
    fn window_path_graph_atom() {
        let g = window("A1:J={}", 4);
        let a = atoms(&g, interval(&g, 0), interval(&g, 2)).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.paths[0].len(), 2);
        assert!(!a.touches_boundary);
        let far = atoms(&g, interval(&g, 0), interval(&g, 3)).unwrap();
        assert!(far.touches_boundary);
    }

    #[test]
    fn atom_cap() {
        let g = graph("A2:J={}");
        let antipode = ChamberId(g.len() - 1);
        assert_eq!(atoms_with_cap(&g, ChamberId(0), antipode, 1), Err(Error::Overflow { cap: 1 }));
    }

    #[test]
    fn unknown_chamber() {
        let g = graph("A1:J={}");
        assert_eq!(separating_set(&g, ChamberId(0), ChamberId(9)), Err(Error::UnknownChamber(9)));
        assert_eq!(atoms(&g, ChamberId(9), ChamberId(0)), Err(Error::UnknownChamber(9)));
    }

    #[test]
    fn mutation_there_and_back() {
        let g = window("A1:J={}", 4);
        let start = interval(&g, 0);
        let label = MutationLabel::initial(&g, start).unwrap();
        assert_eq!(label.len(), 2);
        assert_eq!(mutation_walk(&g, &label, &PositivePath::empty(start)).unwrap(), vec![label.clone()]);
        let e = g.outgoing(start).unwrap()[1];
        let back = g.reverse(e).unwrap();
        let p = PositivePath::new(&g, start, vec![e, back]).unwrap();
        let labels = mutation_walk(&g, &label, &p).unwrap();
        assert_eq!(labels.len(), 3);
        assert_ne!(labels[1], label);
        assert_eq!(labels[2], label);
    }

    #[test]
    fn mutation_alternates_on_a_line() {
        let g = window("A1:J={}", 4);
        let start = interval(&g, -1);
        let target = interval(&g, 2);
        let p = atoms(&g, start, target).unwrap().paths.remove(0);
        assert_eq!(p.len(), 3);
        let label = MutationLabel::initial(&g, start).unwrap();
        let labels = mutation_walk(&g, &label, &p).unwrap();
        assert_eq!(labels.len(), 4);
        let mut changed = Vec::new();
        for pair in labels.windows(2) {
            let diff: Vec<usize> = (0..2).filter(|&i| pair[0].0[i] != pair[1].0[i]).collect();
            assert_eq!(diff.len(), 1);
            changed.push(diff[0]);
        }
        // alternating wall types on the path graph
        assert_eq!(changed, vec![1, 0, 1]);
    }

    #[test]
    fn label_mismatch() {
        let g = graph("A2:J={}");
        let bad = MutationLabel(vec![Summand::Initial("R".into())]);
        assert!(matches!(
            mutation_walk(&g, &bad, &PositivePath::empty(ChamberId(0))),
            Err(Error::LabelMismatch { .. })
        ));
    }

    #[test]
    fn nested_backtrack_returns_home() {
        let g = graph("A2:J={}");
        let e1 = g.outgoing(ChamberId(0)).unwrap()[0];
        let mid = g.edges()[e1.0].to;
        let e2 = g.outgoing(mid).unwrap()[1];
        let (r1, r2) = (g.reverse(e1).unwrap(), g.reverse(e2).unwrap());
        let p = PositivePath::new(&g, ChamberId(0), vec![e1, e2, r2, r1]).unwrap();
        let label = MutationLabel::initial(&g, ChamberId(0)).unwrap();
        let labels = mutation_walk(&g, &label, &p).unwrap();
        assert_eq!(labels.len(), 5);
        assert_eq!(labels[4], label);
        assert_eq!(labels[1], labels[3]);
    }
}
