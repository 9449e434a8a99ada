//! Argument parsing and subcommand drivers.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use floparr_core::galleries::atoms_with_cap;
use floparr_core::pi1::relations_with_cap;
use floparr_core::{
    base_chamber, build_affine, build_finite, check_representation, enumerate_chambers, format_rational, generators,
    parse_rational, product_arrangement, search_rank_two, Arrangement, ChamberGraph, ChamberId, DynkinData,
    DEFAULT_ATOM_CAP,
};

use crate::error::CliError;
use crate::json::{
    from_text, to_text, ArrangementJson, AtomsJson, ChamberGraphJson, CheckJson, PathJson, Pi1Json, RepresentationJson,
};
use crate::svg::{render, PlotOptions};
use crate::workspace::Workspace;

pub const DEFAULT_RADIUS: &str = "7/2";

#[derive(Debug, Parser)]
#[command(name = "floparr", version, about = "Hyperplane arrangements from Dynkin data with contracted nodes")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the arrangement as JSON.
    Build(Source),
    /// Enumerate chambers and adjacency.
    Chambers(Source),
    /// List the minimal positive paths between two chambers.
    Atoms {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Maximum number of atoms before giving up.
        #[arg(long, default_value_t = DEFAULT_ATOM_CAP)]
        cap: usize,
    },
    /// List loop generators and atom relations.
    Pi1 {
        #[command(flatten)]
        source: Source,
        /// Longest atoms used for relations.
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ATOM_CAP)]
        cap: usize,
    },
    /// Check a permutation assignment against the atom relations.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "FILE")]
        rep: PathBuf,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ATOM_CAP)]
        cap: usize,
    },
    /// Render a planar arrangement as SVG.
    Plot {
        #[command(flatten)]
        source: Source,
        /// Mark a witness point in every chamber.
        #[arg(long)]
        chambers: bool,
    },
    /// Find rank-two restrictions with a given number of lines.
    SearchFigure {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long)]
        lines: usize,
    },
}

/// Where an arrangement comes from: Dynkin data (several give a product)
/// or a JSON arrangement file.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Dynkin data such as `D4:J={0,2}`, or an arrangement JSON file.
    #[arg(required = true, value_name = "INPUT")]
    pub inputs: Vec<String>,
    #[arg(long, conflicts_with = "affine")]
    pub central: bool,
    #[arg(long)]
    pub affine: bool,
    /// Window radius `p/q` for affine arrangements; implies `--affine`.
    #[arg(long, conflicts_with = "central")]
    pub radius: Option<String>,
    /// Draw the window outline (plot only).
    #[arg(long)]
    pub window: bool,
}

/// Text to emit and the process status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

struct Loaded {
    arr: Arrangement,
    /// Cache identity; `None` for file inputs.
    key: Option<[String; 3]>,
}

impl Source {
    fn is_file(&self) -> bool {
        match self.inputs.as_slice() {
            [one] => one.ends_with(".json") || (!one.contains(':') && Path::new(one).is_file()),
            _ => false,
        }
    }

    fn load(&self, ws: &Workspace) -> Result<Loaded, CliError> {
        if self.is_file() {
            if self.affine || self.radius.is_some() {
                return Err(CliError::Usage("--affine/--radius apply to Dynkin data, not JSON files".into()));
            }
            let path = PathBuf::from(&self.inputs[0]);
            let text = fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;
            let arr = from_text::<ArrangementJson>(&text)?.to_arrangement()?;
            return Ok(Loaded { arr, key: None });
        }
        let data = self.inputs.iter().map(|s| s.parse::<DynkinData>()).collect::<Result<Vec<_>, _>>()?;
        let radius = if self.affine || self.radius.is_some() {
            let r = parse_rational(self.radius.as_deref().unwrap_or(DEFAULT_RADIUS))?;
            Some(r)
        } else {
            None
        };
        let names: Vec<String> = data.iter().map(|d| d.to_string()).collect();
        let key = [
            names.join(" "),
            if radius.is_some() { "affine" } else { "central" }.to_string(),
            radius.as_ref().map(format_rational).unwrap_or_default(),
        ];
        let cache_key = Workspace::key("arrangement", &key[0], &key[1], &key[2]);
        let text = ws.get_or_compute(&cache_key, || {
            let parts = data
                .iter()
                .map(|d| match &radius {
                    Some(r) => build_affine(d, r),
                    None => build_finite(d),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let arr = match parts.len() {
                1 => parts.into_iter().next().unwrap(),
                _ => product_arrangement(&parts)?,
            };
            Ok(to_text(&ArrangementJson::from(&arr)))
        })?;
        let arr = from_text::<ArrangementJson>(&text)?.to_arrangement()?;
        Ok(Loaded { arr, key: Some(key) })
    }
}

impl Loaded {
    fn graph_text(&self, ws: &Workspace) -> Result<String, CliError> {
        let compute = || Ok(to_text(&ChamberGraphJson::from(&enumerate_chambers(&self.arr)?)));
        match &self.key {
            Some([data, kind, radius]) => ws.get_or_compute(&Workspace::key("chambers", data, kind, radius), compute),
            None => compute(),
        }
    }

    fn graph(&self, ws: &Workspace) -> Result<ChamberGraph, CliError> {
        from_text::<ChamberGraphJson>(&self.graph_text(ws)?)?.to_graph(self.arr.clone())
    }
}

pub fn run(cli: &Cli, ws: &Workspace) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Build(source) => {
            let loaded = source.load(ws)?;
            Ok(Outcome::ok(to_text(&ArrangementJson::from(&loaded.arr))))
        }
        Command::Chambers(source) => Ok(Outcome::ok(source.load(ws)?.graph_text(ws)?)),
        Command::Atoms { source, from, to, cap } => {
            let g = source.load(ws)?.graph(ws)?;
            let found = atoms_with_cap(&g, ChamberId(*from), ChamberId(*to), *cap)?;
            let report = AtomsJson {
                source: *from,
                target: *to,
                length: found.paths.first().map_or(0, |p| p.len()),
                touches_boundary: found.touches_boundary,
                count: found.len(),
                atoms: found.paths.iter().map(PathJson::from).collect(),
            };
            Ok(Outcome::ok(to_text(&report)))
        }
        Command::Pi1 { source, depth, cap } => {
            let g = source.load(ws)?.graph(ws)?;
            let gens = generators(&g, *cap)?;
            let rels = relations_with_cap(&g, depth.unwrap_or(usize::MAX), *cap)?;
            let listing = Pi1Json::new(&g, base_chamber(&g), &gens, &rels)?;
            Ok(Outcome::ok(to_text(&listing)))
        }
        Command::Check { source, rep, depth, cap } => {
            let g = source.load(ws)?.graph(ws)?;
            let text = fs::read_to_string(rep).map_err(|source| CliError::Io { path: rep.clone(), source })?;
            let assignment = from_text::<RepresentationJson>(&text)?.assignment(&g)?;
            let rels = relations_with_cap(&g, depth.unwrap_or(usize::MAX), *cap)?;
            let report = check_representation(&g, &assignment, &rels.relations)?;
            let status = if report.passed() { 0 } else { 1 };
            Ok(Outcome { text: to_text(&CheckJson::from(&report)), status })
        }
        Command::Plot { source, chambers } => {
            let loaded = source.load(ws)?;
            if loaded.arr.dim() != 2 {
                return Err(CliError::NotRankTwo(loaded.arr.dim()));
            }
            let g = if *chambers { Some(loaded.graph(ws)?) } else { None };
            let svg = render(&loaded.arr, g.as_ref(), &PlotOptions { window: source.window })?;
            Ok(Outcome::ok(svg))
        }
        Command::SearchFigure { max_rank, lines } => {
            let found: Vec<String> = search_rank_two(*max_rank, *lines).iter().map(|d| d.to_string()).collect();
            Ok(Outcome::ok(to_text(&found)))
        }
    }
}
