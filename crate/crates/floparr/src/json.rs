//! JSON forms of arrangements, chamber graphs, paths, loop listings and
//! representation assignments.
//!
//! Every writer emits pretty-printed JSON with a trailing newline; field and
//! element order is fixed, so equal values serialize to equal bytes.

use std::collections::BTreeMap;

use floparr_core::chambers::Sign;
use floparr_core::pi1::{Generators, Relations, RepresentationReport};
use floparr_core::{
    format_rational, parse_rational, Arrangement, ArrangementKind, Chamber, ChamberGraph, ChamberId, EdgeId,
    GroupoidWord, Hyperplane, Permutation, PositivePath,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementJson {
    pub dim: usize,
    pub kind: KindJson,
    pub hyperplanes: Vec<HyperplaneJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindJson {
    Central,
    Affine { radius: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneJson {
    pub normal: Vec<i64>,
    pub level: i64,
}

impl From<&Arrangement> for ArrangementJson {
    fn from(arr: &Arrangement) -> Self {
        let kind = match arr.kind() {
            ArrangementKind::Central => KindJson::Central,
            ArrangementKind::AffineWindow { radius } => KindJson::Affine { radius: format_rational(radius) },
        };
        let hyperplanes = arr
            .hyperplanes()
            .iter()
            .map(|h| HyperplaneJson { normal: h.normal().to_vec(), level: h.level() })
            .collect();
        Self { dim: arr.dim(), kind, hyperplanes }
    }
}

impl ArrangementJson {
    /// Validates and sorts through [`Arrangement::new`].
    pub fn to_arrangement(&self) -> Result<Arrangement, CliError> {
        let kind = match &self.kind {
            KindJson::Central => ArrangementKind::Central,
            KindJson::Affine { radius } => ArrangementKind::AffineWindow { radius: parse_rational(radius)? },
        };
        let hyperplanes = self
            .hyperplanes
            .iter()
            .map(|h| Hyperplane::new(h.normal.clone(), h.level))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Arrangement::new(self.dim, kind, hyperplanes)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChamberGraphJson {
    pub count: usize,
    pub chambers: Vec<ChamberJson>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChamberJson {
    pub id: usize,
    pub signs: Vec<i8>,
    pub witness: Vec<String>,
    pub boundary: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub hyperplane: usize,
}

impl From<&ChamberGraph> for ChamberGraphJson {
    fn from(g: &ChamberGraph) -> Self {
        let chambers = g
            .chambers()
            .iter()
            .map(|c| ChamberJson {
                id: c.id.0,
                signs: c.signs.iter().map(|s| s.as_i8()).collect(),
                witness: c.witness.iter().map(format_rational).collect(),
                boundary: c.boundary,
            })
            .collect();
        let edges =
            g.edges().iter().map(|e| EdgeJson { from: e.from.0, to: e.to.0, hyperplane: e.hyperplane }).collect();
        Self { count: g.len(), chambers, edges }
    }
}

impl ChamberGraphJson {
    pub fn to_graph(&self, arr: Arrangement) -> Result<ChamberGraph, CliError> {
        if self.count != self.chambers.len() {
            return Err(CliError::Json(format!("count {} but {} chambers", self.count, self.chambers.len())));
        }
        let chambers = self
            .chambers
            .iter()
            .map(|c| {
                let signs = c
                    .signs
                    .iter()
                    .map(|&s| match s {
                        1 => Ok(Sign::Positive),
                        -1 => Ok(Sign::Negative),
                        other => Err(CliError::Json(format!("sign must be 1 or -1, got {other}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let witness = c.witness.iter().map(|w| parse_rational(w)).collect::<Result<Vec<_>, _>>()?;
                Ok(Chamber { id: ChamberId(c.id), signs, witness, boundary: c.boundary })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let edges = self.edges.iter().map(|e| (ChamberId(e.from), ChamberId(e.to), e.hyperplane)).collect();
        Ok(ChamberGraph::from_parts(arr, chambers, edges)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathJson {
    pub source: usize,
    pub edges: Vec<usize>,
}

impl From<&PositivePath> for PathJson {
    fn from(p: &PositivePath) -> Self {
        Self { source: p.source().0, edges: p.edges().iter().map(|e| e.0).collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomsJson {
    pub source: usize,
    pub target: usize,
    pub length: usize,
    pub touches_boundary: bool,
    pub count: usize,
    pub atoms: Vec<PathJson>,
}

/// Letters as `"+e"` / `"-e"`.
pub fn signed_letters(w: &GroupoidWord) -> Vec<String> {
    w.letters().iter().map(|l| l.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub atom: PathJson,
    pub wall: usize,
    #[serde(rename = "loop")]
    pub loop_word: Vec<String>,
    pub nu: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub source: usize,
    pub target: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Json {
    pub base: usize,
    pub generators: Vec<GeneratorJson>,
    pub excluded_atoms: usize,
    pub relations: Vec<RelationJson>,
    pub excluded_pairs: usize,
}

impl Pi1Json {
    pub fn new(g: &ChamberGraph, base: ChamberId, gens: &Generators, rels: &Relations) -> Result<Self, CliError> {
        let generators = gens
            .generators
            .iter()
            .map(|x| {
                Ok(GeneratorJson {
                    atom: PathJson::from(&x.atom),
                    wall: x.wall,
                    loop_word: signed_letters(&x.loop_word),
                    nu: floparr_core::crossing_homomorphism(g, &x.loop_word)?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let relations = rels
            .relations
            .iter()
            .map(|r| RelationJson {
                source: r.left.source().0,
                target: r.left.target().0,
                left: r.left.edges().iter().map(|e| e.0).collect(),
                right: r.right.edges().iter().map(|e| e.0).collect(),
            })
            .collect();
        Ok(Self {
            base: base.0,
            generators,
            excluded_atoms: gens.excluded_atoms,
            relations,
            excluded_pairs: rels.excluded_pairs,
        })
    }
}

/// Assignment of a permutation to every edge. Either the full form
/// `{"degree": n, "default": "()", "edges": {"0": "(0 1)", …}}`, where
/// `default` fills unlisted edges, or a bare map `{"0": "(0 1)", …}` whose
/// degree is one more than the largest point mentioned.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum RepresentationJson {
    Full {
        degree: usize,
        #[serde(default)]
        default: Option<String>,
        edges: BTreeMap<String, String>,
    },
    Bare(BTreeMap<String, String>),
}

impl RepresentationJson {
    pub fn assignment(&self, g: &ChamberGraph) -> Result<BTreeMap<EdgeId, Permutation>, CliError> {
        let (degree, default, edges) = match self {
            RepresentationJson::Full { degree, default, edges } => (*degree, default.as_deref(), edges),
            RepresentationJson::Bare(edges) => (implied_degree(edges), None, edges),
        };
        let mut out = BTreeMap::new();
        for (key, cycles) in edges {
            let id: usize = key.parse().map_err(|_| CliError::Json(format!("edge id {key:?} is not an integer")))?;
            g.edge(EdgeId(id))?;
            out.insert(EdgeId(id), Permutation::parse_cycles(degree, cycles)?);
        }
        if let Some(default) = default {
            let p = Permutation::parse_cycles(degree, default)?;
            for e in g.edges() {
                out.entry(e.id).or_insert_with(|| p.clone());
            }
        }
        Ok(out)
    }
}

fn implied_degree(edges: &BTreeMap<String, String>) -> usize {
    edges
        .values()
        .flat_map(|c| c.split(|ch: char| !ch.is_ascii_digit()))
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .map_or(1, |m| m + 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureJson {
    pub relation: usize,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub checked: usize,
    pub failures: Vec<FailureJson>,
}

impl From<&RepresentationReport<Permutation>> for CheckJson {
    fn from(r: &RepresentationReport<Permutation>) -> Self {
        let failures = r
            .failures
            .iter()
            .map(|f| FailureJson { relation: f.index, left: f.left.to_string(), right: f.right.to_string() })
            .collect();
        Self { checked: r.checked, failures }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
}
