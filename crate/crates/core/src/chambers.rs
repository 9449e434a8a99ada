//! Chambers of an arrangement and the oriented chamber graph.
//!
//! Chambers are discovered breadth first from a generic seed point. Every
//! adjacency and witness is decided with exact rational feasibility; no
//! floating point enters any decision.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::feasibility::{Constraint, LinearSystem, Relation};
use crate::rational::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChamberId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for ChamberId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Positive => 1,
        }
    }

    fn of(value: &Rational) -> Option<Sign> {
        if value.is_positive() {
            Some(Sign::Positive)
        } else if value.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

/// Strict side of every hyperplane, indexed like the arrangement.
pub type SignVector = Vec<Sign>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub id: ChamberId,
    pub signs: SignVector,
    /// Exact point strictly inside the chamber (and the window, if any).
    pub witness: Vec<Rational>,
    /// Set when the closure meets the window boundary. Always false for
    /// central arrangements.
    pub boundary: bool,
}

/// Directed adjacency `from → to` across hyperplane `hyperplane`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    pub from: ChamberId,
    pub to: ChamberId,
    pub hyperplane: usize,
}

/// Chambers with both directed edges for every adjacent pair. Edges are
/// sorted by `(from, hyperplane)`; edge ids are positions in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChamberGraph {
    arrangement: Arrangement,
    chambers: Vec<Chamber>,
    edges: Vec<Edge>,
    outgoing: Vec<Vec<EdgeId>>,
    lookup: BTreeMap<(ChamberId, usize), EdgeId>,
}

impl ChamberGraph {
    /// Reassembles a graph from stored parts, checking structural
    /// consistency (ids, symmetric adjacency, witnesses). It does not redo
    /// the enumeration.
    pub fn from_parts(
        arrangement: Arrangement,
        chambers: Vec<Chamber>,
        edges: Vec<(ChamberId, ChamberId, usize)>,
    ) -> Result<Self> {
        let invalid = |msg: alloc::string::String| Error::InvalidGraph(msg);
        let m = arrangement.len();
        for (k, c) in chambers.iter().enumerate() {
            if c.id != ChamberId(k) {
                return Err(invalid(format!("chamber at position {k} has id {}", c.id)));
            }
            if c.signs.len() != m || c.witness.len() != arrangement.dim() {
                return Err(invalid(format!("chamber {k} has the wrong shape")));
            }
            if !witness_ok(&arrangement, &c.signs, &c.witness) {
                return Err(invalid(format!("witness of chamber {k} violates its signs")));
            }
        }
        let mut sorted = edges;
        sorted.sort_by_key(|&(from, _, h)| (from, h));
        let graph = Self::assemble(arrangement, chambers, sorted)?;
        for e in &graph.edges {
            let (a, b) = (&graph.chambers[e.from.0].signs, &graph.chambers[e.to.0].signs);
            let differing: Vec<usize> = (0..m).filter(|&i| a[i] != b[i]).collect();
            if differing != [e.hyperplane] {
                return Err(invalid(format!("edge {} does not cross exactly its hyperplane", e.id)));
            }
            if graph.edge_between(e.to, e.hyperplane).is_none() {
                return Err(invalid(format!("edge {} has no reverse", e.id)));
            }
        }
        Ok(graph)
    }

    fn assemble(
        arrangement: Arrangement,
        chambers: Vec<Chamber>,
        sorted: Vec<(ChamberId, ChamberId, usize)>,
    ) -> Result<Self> {
        let n = chambers.len();
        let mut outgoing = alloc::vec![Vec::new(); n];
        let mut lookup = BTreeMap::new();
        let mut edges = Vec::with_capacity(sorted.len());
        for (k, (from, to, hyperplane)) in sorted.into_iter().enumerate() {
            if from.0 >= n || to.0 >= n || hyperplane >= arrangement.len() {
                return Err(Error::InvalidGraph(format!("edge {k} is out of range")));
            }
            let id = EdgeId(k);
            if lookup.insert((from, hyperplane), id).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate edge from {from} across {hyperplane}")));
            }
            outgoing[from.0].push(id);
            edges.push(Edge { id, from, to, hyperplane });
        }
        Ok(Self { arrangement, chambers, edges, outgoing, lookup })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.chambers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chambers.is_empty()
    }

    pub fn chamber(&self, id: ChamberId) -> Result<&Chamber> {
        self.chambers.get(id.0).ok_or(Error::UnknownChamber(id.0))
    }

    pub fn edge(&self, id: EdgeId) -> Result<&Edge> {
        self.edges.get(id.0).ok_or(Error::UnknownEdge(id.0))
    }

    /// Outgoing edges of `id` in increasing hyperplane order.
    pub fn outgoing(&self, id: ChamberId) -> Result<&[EdgeId]> {
        self.outgoing.get(id.0).map(Vec::as_slice).ok_or(Error::UnknownChamber(id.0))
    }

    /// The edge leaving `from` across `hyperplane`, if that hyperplane is a wall.
    pub fn edge_between(&self, from: ChamberId, hyperplane: usize) -> Option<EdgeId> {
        self.lookup.get(&(from, hyperplane)).copied()
    }

    /// The oppositely oriented edge.
    pub fn reverse(&self, id: EdgeId) -> Result<EdgeId> {
        let e = self.edge(id)?;
        self.edge_between(e.to, e.hyperplane).ok_or_else(|| Error::InvalidGraph(format!("edge {id} has no reverse")))
    }

    pub fn find_by_signs(&self, signs: &[Sign]) -> Option<ChamberId> {
        self.chambers.iter().find(|c| c.signs == signs).map(|c| c.id)
    }
}

/// Facet hyperplanes of `c`: the labels of its outgoing edges.
pub fn walls(c: ChamberId, g: &ChamberGraph) -> Result<BTreeSet<usize>> {
    Ok(g.outgoing(c)?.iter().map(|&e| g.edges[e.0].hyperplane).collect())
}

fn witness_ok(arr: &Arrangement, signs: &[Sign], x: &[Rational]) -> bool {
    let in_window = match arr.kind().radius() {
        None => true,
        Some(r) => x.iter().all(|v| v.abs() < *r),
    };
    in_window && arr.hyperplanes().iter().zip(signs).all(|(h, &s)| Sign::of(&h.evaluate(x)) == Some(s))
}

const SEED_PRIMES: usize = 64;

fn primes(count: usize) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(count);
    let mut n = 2i64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= n).all(|&p| n % p != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// The chamber containing the first point `(t, t², …, t^d)` with `t = 1/N`,
/// `N` running over the first 64 primes, that avoids every hyperplane and
/// lies inside the window.
pub fn seed_chamber(arr: &Arrangement) -> Result<Chamber> {
    for n in primes(SEED_PRIMES) {
        let t = Rational::new(One::one(), n.into());
        let mut point = Vec::with_capacity(arr.dim());
        let mut power = Rational::one();
        for _ in 0..arr.dim() {
            power = &power * &t;
            point.push(power.clone());
        }
        if let Some(r) = arr.kind().radius() {
            if point.iter().any(|v| v.abs() >= *r) {
                continue;
            }
        }
        let signs: Option<SignVector> = arr.hyperplanes().iter().map(|h| Sign::of(&h.evaluate(&point))).collect();
        if let Some(signs) = signs {
            return Ok(Chamber { id: ChamberId(0), signs, witness: point, boundary: false });
        }
    }
    Err(Error::WindowTooSmall)
}

/// Per-hyperplane side constraints for a fixed arrangement.
struct Sides<'a> {
    arr: &'a Arrangement,
    rows: Vec<(Vec<Rational>, Rational)>,
}

impl<'a> Sides<'a> {
    fn new(arr: &'a Arrangement) -> Self {
        let rows =
            arr.hyperplanes().iter().map(|h| (h.normal().iter().map(|&a| int(a)).collect(), int(h.level()))).collect();
        Self { arr, rows }
    }

    /// `s·(normal·x − level) ⊳ 0`.
    fn side(&self, h: usize, s: Sign, relation: Relation) -> Constraint {
        let (normal, level) = &self.rows[h];
        let sign = int(s.as_i8().into());
        Constraint::new(normal.iter().map(|a| a * &sign).collect(), -(level * &sign), relation)
    }

    fn on(&self, h: usize) -> Constraint {
        let (normal, level) = &self.rows[h];
        Constraint::new(normal.clone(), -level.clone(), Relation::Equal)
    }

    fn window(&self, sys: &mut LinearSystem, relation: Relation, skip: Option<usize>) {
        let Some(r) = self.arr.kind().radius() else { return };
        let d = self.arr.dim();
        for i in (0..d).filter(|&i| Some(i) != skip) {
            for s in [1, -1] {
                let mut coeffs = alloc::vec![Rational::zero(); d];
                coeffs[i] = int(s);
                sys.push(Constraint::new(coeffs, r.clone(), relation));
            }
        }
    }

    fn chamber_system(&self, signs: &[Sign], skip: Option<usize>, relation: Relation) -> LinearSystem {
        let mut sys = LinearSystem::new(self.arr.dim());
        for (h, &s) in signs.iter().enumerate() {
            if Some(h) != skip {
                sys.push(self.side(h, s, relation));
            }
        }
        sys
    }

    /// Hyperplane `h` is a wall: the relatively open facet on `h` is
    /// nonempty (inside the open window, if any).
    fn is_wall(&self, signs: &[Sign], h: usize) -> bool {
        let mut sys = self.chamber_system(signs, Some(h), Relation::Strict);
        sys.push(self.on(h));
        self.window(&mut sys, Relation::Strict, None);
        sys.is_feasible()
    }

    fn witness(&self, signs: &[Sign]) -> Option<Vec<Rational>> {
        let mut sys = self.chamber_system(signs, None, Relation::Strict);
        self.window(&mut sys, Relation::Strict, None);
        sys.solve()
    }

    /// The closure of the chamber touches a face of the window box.
    fn touches_boundary(&self, signs: &[Sign]) -> bool {
        let Some(r) = self.arr.kind().radius() else { return false };
        let d = self.arr.dim();
        for i in 0..d {
            for s in [1, -1] {
                let mut sys = self.chamber_system(signs, None, Relation::NonStrict);
                self.window(&mut sys, Relation::NonStrict, Some(i));
                let mut coeffs = alloc::vec![Rational::zero(); d];
                coeffs[i] = int(s);
                sys.push(Constraint::new(coeffs, -r.clone(), Relation::Equal));
                if sys.is_feasible() {
                    return true;
                }
            }
        }
        false
    }
}

/// Breadth-first enumeration of all chambers (meeting the window, for
/// windowed arrangements) and their adjacencies.
///
/// Chamber ids follow discovery order, expanding neighbors by increasing
/// hyperplane index, so the output is fully deterministic.
pub fn enumerate_chambers(arr: &Arrangement) -> Result<ChamberGraph> {
    let sides = Sides::new(arr);
    let mut seed = seed_chamber(arr)?;
    seed.boundary = sides.touches_boundary(&seed.signs);

    let mut index: BTreeMap<SignVector, ChamberId> = BTreeMap::new();
    index.insert(seed.signs.clone(), ChamberId(0));
    let mut chambers = alloc::vec![seed];
    let mut adjacency: Vec<(ChamberId, ChamberId, usize)> = Vec::new();
    let mut queue = VecDeque::from([ChamberId(0)]);

    while let Some(current) = queue.pop_front() {
        let signs = chambers[current.0].signs.clone();
        for h in 0..arr.len() {
            if !sides.is_wall(&signs, h) {
                continue;
            }
            let mut next = signs.clone();
            next[h] = next[h].flip();
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let witness = sides
                        .witness(&next)
                        .ok_or_else(|| Error::InvalidGraph(format!("wall {h} of chamber {current} has no far side")))?;
                    let id = ChamberId(chambers.len());
                    let boundary = sides.touches_boundary(&next);
                    index.insert(next.clone(), id);
                    chambers.push(Chamber { id, signs: next, witness, boundary });
                    queue.push_back(id);
                    id
                }
            };
            adjacency.push((current, id, h));
        }
    }
    // BFS already emits edges in (from, hyperplane) order
    ChamberGraph::assemble(arr.clone(), chambers, adjacency)
}

/// Whether `h` is a wall of the chamber with the given signs. Exposed for
/// independent checks of the enumerated graph.
pub fn is_facet(arr: &Arrangement, signs: &[Sign], h: usize) -> bool {
    Sides::new(arr).is_wall(signs, h)
}

/// Witness for a sign vector, or `None` if no such chamber meets the window.
pub fn chamber_witness(arr: &Arrangement, signs: &[Sign]) -> Option<Vec<Rational>> {
    Sides::new(arr).witness(signs)
}
