//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails, other than those listed in `KNOWN_FAILURES`. A known
//! failure that starts passing is also reported as an error so the list
//! cannot go stale.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use floparr_core::chambers::Sign;
use floparr_core::galleries::{atoms_from_distances, distances, separating_set};
use floparr_core::pi1::{equal_in_groupoid, relations, GroupoidWord, SignedEdge, WordEquality};
use floparr_core::rational::{int, ratio};
use floparr_core::{
    atoms, build_affine, build_finite, check_representation, crossing_homomorphism, enumerate_chambers, generators,
    positive_roots, product_arrangement, region_count_zaslavsky, Arrangement, ChamberGraph, ChamberId, DynkinData,
    DynkinType, EdgeId, Permutation, Rational,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const ROOTS_BUDGET: Duration = Duration::from_secs(1);
const ORACLE_BUDGET: Duration = Duration::from_secs(10);
const FUZZ_WORDS: u32 = 1000;
const ATOM_CAP: usize = 1_000_000;

/// Criteria expected to fail, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] =
    &[(9, "the open-box window keeps 5 lines for A2 at radius 1; x = ±1 and y = ±1 only touch the closed box")];

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn data(s: &str) -> DynkinData {
    s.parse().unwrap()
}

fn finite(s: &str) -> Arrangement {
    build_finite(&data(s)).unwrap()
}

fn affine(s: &str, r: Rational) -> Arrangement {
    build_affine(&data(s), &r).unwrap()
}

fn product(parts: &[&str]) -> Arrangement {
    product_arrangement(&parts.iter().map(|s| finite(s)).collect::<Vec<_>>()).unwrap()
}

fn graph(arr: &Arrangement) -> ChamberGraph {
    enumerate_chambers(arr).unwrap()
}

fn antipode(g: &ChamberGraph) -> ChamberId {
    g.find_by_signs(&vec![Sign::Negative; g.arrangement().len()]).unwrap()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let expected = [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("D4", 12), ("E6", 36)];
    for (name, count) in expected {
        let t: DynkinType = name.parse().unwrap();
        let got = positive_roots(t).len();
        ensure(got == count, format!("{name}: {got} roots, expected {count}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ROOTS_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("6 types in {} ms", elapsed.as_millis()))
}

fn central_suite() -> Vec<(String, Arrangement)> {
    let mut suite: Vec<(String, Arrangement)> =
        ["A1:J={}", "A2:J={}", "A3:J={}", "A3:J={1}", "A4:J={0,1}", "A4:J={1,2}"]
            .iter()
            .map(|s| (s.to_string(), finite(s)))
            .collect();
    for parts in [&["A1:J={}", "A1:J={}"][..], &["A1:J={}", "A1:J={}", "A1:J={}"], &["A2:J={}", "A1:J={}"]] {
        suite.push((parts.join(" x "), product(parts)));
    }
    suite
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let suite = central_suite();
    for (name, arr) in &suite {
        let chambers = graph(arr).len() as u64;
        let oracle = region_count_zaslavsky(arr);
        ensure(chambers == oracle, format!("{name}: {chambers} chambers, oracle {oracle}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_BUDGET, format!("took {elapsed:?}"))?;
    Ok(format!("{} arrangements in {} ms", suite.len(), elapsed.as_millis()))
}

fn criterion_3() -> Check {
    for (name, count) in [("A1:J={}", 2), ("A2:J={}", 6), ("A3:J={}", 24)] {
        let got = graph(&finite(name)).len();
        ensure(got == count, format!("{name}: {got} chambers, expected {count}"))?;
    }
    Ok("2, 6, 24".into())
}

/// Checks every ordered chamber pair; returns (pairs checked, pairs excluded).
fn atom_law(g: &ChamberGraph) -> Result<(usize, usize), String> {
    let (mut checked, mut excluded) = (0, 0);
    for a in g.chambers() {
        let dist = distances(g, a.id).map_err(|e| e.to_string())?;
        for b in g.chambers() {
            let found = atoms_from_distances(g, a.id, b.id, &dist, ATOM_CAP).map_err(|e| e.to_string())?;
            if found.touches_boundary {
                excluded += 1;
                continue;
            }
            let sep = separating_set(g, a.id, b.id).map_err(|e| e.to_string())?;
            let lengths: BTreeSet<usize> = found.paths.iter().map(|p| p.len()).collect();
            ensure(lengths.len() == 1, format!("{} -> {}: atom lengths {lengths:?}", a.id, b.id))?;
            for p in &found.paths {
                let mut crossed = p.crossings().to_vec();
                crossed.sort();
                let expected: Vec<usize> = sep.iter().copied().collect();
                ensure(p.is_reduced(), format!("{} -> {}: non-reduced atom", a.id, b.id))?;
                ensure(
                    crossed == expected,
                    format!("{} -> {}: crosses {crossed:?}, separating {expected:?}", a.id, b.id),
                )?;
            }
            checked += 1;
        }
    }
    Ok((checked, excluded))
}

fn criterion_4() -> Check {
    let mut suite: Vec<(String, Arrangement)> = central_suite().into_iter().filter(|(_, arr)| arr.dim() <= 2).collect();
    for name in ["A1:J={}", "A2:J={}"] {
        for r in [ratio(1, 2), int(1), ratio(3, 2), ratio(5, 2), ratio(7, 2)] {
            suite.push((format!("{name} r={r}"), affine(name, r)));
        }
    }
    let (mut checked, mut excluded) = (0, 0);
    for (name, arr) in &suite {
        let (c, x) = atom_law(&graph(arr)).map_err(|e| format!("{name}: {e}"))?;
        checked += c;
        excluded += x;
    }
    Ok(format!("{} arrangements, {checked} pairs checked, {excluded} boundary pairs excluded", suite.len()))
}

fn criterion_5() -> Check {
    let suite = [
        ("A1:J={} central", finite("A1:J={}")),
        ("A2:J={} central", finite("A2:J={}")),
        ("A1:J={} affine", affine("A1:J={}", ratio(7, 2))),
    ];
    let mut total = 0;
    for (name, arr) in &suite {
        let g = graph(arr);
        let gens = generators(&g, ATOM_CAP).map_err(|e| e.to_string())?;
        ensure(!gens.generators.is_empty(), format!("{name}: no generators"))?;
        for x in &gens.generators {
            let mut expected = vec![0; arr.len()];
            expected[x.wall] = 2;
            let nu = crossing_homomorphism(&g, &x.loop_word).map_err(|e| e.to_string())?;
            ensure(nu == expected, format!("{name}: wall {} has nu {nu:?}", x.wall))?;
        }
        total += gens.generators.len();
    }
    Ok(format!("{total} generators"))
}

fn transpositions(g: &ChamberGraph) -> BTreeMap<EdgeId, Permutation> {
    let by_line = [(0, 1), (1, 2), (0, 2)];
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = by_line[e.hyperplane];
            (e.id, Permutation::transposition(3, a, b))
        })
        .collect()
}

fn criterion_6() -> Check {
    let g = graph(&finite("A2:J={}"));
    let rels = relations(&g, usize::MAX).map_err(|e| e.to_string())?.relations;
    let good = transpositions(&g);
    let first = check_representation(&g, &good, &rels).map_err(|e| e.to_string())?;
    let again = check_representation(&g, &good, &rels).map_err(|e| e.to_string())?;
    ensure(first == again, "report differs between runs")?;
    ensure(first.passed(), format!("{} failures", first.failures.len()))?;

    let mut bad = good;
    bad.insert(EdgeId(0), Permutation::parse_cycles(3, "(0 1 2)").unwrap());
    let corrupted = check_representation(&g, &bad, &rels).map_err(|e| e.to_string())?;
    ensure(!corrupted.failures.is_empty(), "corrupted assignment passed")?;
    Ok(format!("{} relations hold; corrupted assignment fails {}", first.checked, corrupted.failures.len()))
}

fn criterion_7() -> Check {
    let got = graph(&product(&["A2:J={}", "A1:J={}"])).len();
    ensure(got == 12, format!("{got} chambers"))?;
    Ok("6 x 2 = 12".into())
}

fn criterion_8() -> Check {
    let g = graph(&affine("A1:J={}", ratio(5, 2)));
    ensure(g.len() == 6, format!("{} chambers", g.len()))?;
    let boundary = g.chambers().iter().filter(|c| c.boundary).count();
    ensure(boundary == 2, format!("{boundary} boundary chambers"))?;
    let mut interiors = Vec::new();
    for c in g.chambers().iter().filter(|c| !c.boundary) {
        let x = &c.witness[0];
        let lo = x.floor();
        ensure(&lo != x && x.ceil() - &lo == int(1), format!("witness {x} not inside a unit interval"))?;
        interiors.push(lo);
    }
    interiors.sort();
    ensure(interiors == vec![int(-2), int(-1), int(0), int(1)], format!("interior alcoves start at {interiors:?}"))?;

    let mut degree = vec![0; g.len()];
    for e in g.edges() {
        degree[e.from.0] += 1;
    }
    let mut shape = degree.clone();
    shape.sort();
    ensure(shape == vec![1, 1, 2, 2, 2, 2], format!("degrees {degree:?}"))?;
    ensure(g.edges().len() == 10, format!("{} directed edges", g.edges().len()))?;
    for a in g.chambers() {
        for b in g.chambers() {
            let n = atoms(&g, a.id, b.id).map_err(|e| e.to_string())?.len();
            ensure(n == 1, format!("{} -> {}: {n} atoms", a.id, b.id))?;
        }
    }
    Ok("6 chambers, path graph, unique atoms".into())
}

struct Cli {
    cache: tempfile::TempDir,
    files: tempfile::TempDir,
}

impl Cli {
    fn new() -> Self {
        Self { cache: tempfile::tempdir().unwrap(), files: tempfile::tempdir().unwrap() }
    }

    fn run_in(&self, cache: &Path, args: &[&str]) -> (Vec<u8>, i32) {
        let out = Command::new(env!("CARGO_BIN_EXE_floparr"))
            .args(args)
            .env("FLOPARR_CACHE", cache)
            .current_dir(self.files.path())
            .output()
            .unwrap();
        (out.stdout, out.status.code().unwrap_or(-1))
    }

    fn run(&self, args: &[&str]) -> (Vec<u8>, i32) {
        self.run_in(self.cache.path(), args)
    }
}

fn rep_file(assignment: &BTreeMap<EdgeId, Permutation>) -> String {
    let edges: BTreeMap<String, String> = assignment.iter().map(|(e, p)| (e.0.to_string(), p.to_string())).collect();
    serde_json::json!({ "degree": 3, "edges": edges }).to_string()
}

fn criterion_9() -> Check {
    let cli = Cli::new();
    let g = graph(&finite("A2:J={}"));
    std::fs::write(cli.files.path().join("s3.json"), rep_file(&transpositions(&g))).unwrap();
    std::fs::write(cli.files.path().join("identity.json"), r#"{"degree": 3, "default": "()", "edges": {}}"#).unwrap();
    let far = antipode(&g).0.to_string();

    let commands: Vec<Vec<&str>> = vec![
        vec!["build", "A2:J={}", "--central"],
        vec!["build", "A3:J={1}"],
        vec!["build", "A1:J={}", "--affine", "--radius", "5/2"],
        vec!["build", "A2:J={}", "A1:J={}"],
        vec!["chambers", "A2:J={}"],
        vec!["chambers", "A1:J={}", "--affine", "--radius", "5/2"],
        vec!["chambers", "A2:J={}", "--affine", "--radius", "3/2"],
        vec!["atoms", "A2:J={}", "--from", "0", "--to", &far],
        vec!["atoms", "A1:J={}", "--affine", "--radius", "5/2", "--from", "1", "--to", "4"],
        vec!["pi1", "A2:J={}"],
        vec!["pi1", "A1:J={}", "--affine", "--radius", "5/2"],
        vec!["check", "A2:J={}", "--rep", "s3.json"],
        vec!["check", "A2:J={}", "--rep", "identity.json"],
        vec!["plot", "A2:J={}"],
        vec!["plot", "A2:J={}", "--affine", "--radius", "1", "--chambers", "--window"],
        vec!["plot", "A3:J={1}", "--chambers"],
        vec!["search-figure", "--max-rank", "6", "--lines", "3"],
    ];
    for args in &commands {
        let cold = tempfile::tempdir().unwrap();
        let first = cli.run(args);
        let warm = cli.run(args);
        let fresh = cli.run_in(cold.path(), args);
        ensure(first.1 == 0, format!("{args:?} exited {}", first.1))?;
        ensure(first == warm && first == fresh, format!("{args:?} output differs between runs"))?;
    }

    // build output reloaded from a file serializes to the same bytes
    let (built, _) = cli.run(&["build", "A3:J={1}"]);
    std::fs::write(cli.files.path().join("a3.json"), &built).unwrap();
    let (reloaded, code) = cli.run(&["build", "a3.json"]);
    ensure(code == 0 && reloaded == built, "build round trip differs")?;

    for (args, code) in [
        (vec!["build", "A1:J={0}"], 3),
        (vec!["build", "A1:J=0"], 2),
        (vec!["plot", "A1:J={}"], 6),
        (vec!["atoms", "A2:J={}", "--to", "40"], 5),
        (vec!["atoms", "A2:J={}", "--to", &far, "--cap", "1"], 4),
    ] {
        let got = cli.run(&args).1;
        ensure(got == code, format!("{args:?} exited {got}, expected {code}"))?;
    }

    let (svg, _) = cli.run(&["plot", "A2:J={}"]);
    let svg = String::from_utf8(svg).unwrap();
    ensure(svg.matches("<line ").count() == 3, "A2 central plot should have 3 lines")?;

    let (svg, _) = cli.run(&["plot", "A2:J={}", "--affine", "--radius", "1"]);
    let svg = String::from_utf8(svg).unwrap();
    let lines = svg.matches("<line ").count();
    let level0 = svg.matches(r#"<line class="finite""#).count();
    ensure(
        lines == 9 && level0 == 3,
        format!("A2 affine radius 1 plot has {lines} line elements ({level0} level-0), expected 9 (3 level-0)"),
    )?;
    Ok(format!("{} commands byte-identical across runs and caches", commands.len()))
}

fn criterion_10() -> Check {
    let g = graph(&finite("A2:J={}"));
    let rels = relations(&g, usize::MAX).map_err(|e| e.to_string())?.relations;
    let base = ChamberId(0);
    let err = |e: floparr_core::Error| e.to_string();

    for &e in g.outgoing(base).map_err(err)? {
        let w = GroupoidWord::new(&g, base, vec![SignedEdge::forward(e), SignedEdge::backward(e)]).map_err(err)?;
        let r = equal_in_groupoid(&w, &GroupoidWord::empty(base), &rels, 1).map_err(err)?;
        ensure(matches!(r, WordEquality::ProvenEqual { .. }), format!("e e^-1 not proven for edge {e}"))?;
    }
    let pair = atoms(&g, base, antipode(&g)).map_err(err)?.paths;
    ensure(pair.len() == 2, format!("{} antipodal atoms", pair.len()))?;
    let (p, q) = (GroupoidWord::from_path(&pair[0]), GroupoidWord::from_path(&pair[1]));
    let r = equal_in_groupoid(&p, &q, &rels, 1).map_err(err)?;
    ensure(matches!(r, WordEquality::ProvenEqual { .. }), "antipodal atoms not proven equal at depth 1")?;

    // random words from the base, steered to a common endpoint
    let walk = |choices: &[(bool, usize)], target: usize| {
        let mut at = base;
        let mut letters = Vec::new();
        for &(back, k) in choices {
            let out = g.outgoing(at).unwrap();
            let e = out[k % out.len()];
            letters.push(if back { SignedEdge::backward(g.reverse(e).unwrap()) } else { SignedEdge::forward(e) });
            at = g.edge(e).unwrap().to;
        }
        let w = GroupoidWord::new(&g, base, letters).unwrap();
        let tail = &atoms(&g, at, ChamberId(target)).unwrap().paths[0];
        w.concat(&GroupoidWord::from_path(tail)).unwrap()
    };
    let choice = (any::<bool>(), 0usize..8);
    let strategy = (prop::collection::vec(choice.clone(), 0..8), prop::collection::vec(choice, 0..8), 0usize..6);
    let mut runner = TestRunner::new_with_rng(
        Config { cases: FUZZ_WORDS, failure_persistence: None, ..Config::default() },
        proptest::test_runner::TestRng::deterministic_rng(proptest::test_runner::RngAlgorithm::ChaCha),
    );
    let proven = std::cell::Cell::new(0);
    let distinct = std::cell::Cell::new(0);
    runner
        .run(&strategy, |(c1, c2, target)| {
            let (w1, w2) = (walk(&c1, target), walk(&c2, target));
            let (n1, n2) = (crossing_homomorphism(&g, &w1).unwrap(), crossing_homomorphism(&g, &w2).unwrap());
            if n1 != n2 {
                distinct.set(distinct.get() + 1);
            }
            if let WordEquality::ProvenEqual { .. } = equal_in_groupoid(&w1, &w2, &rels, 3).unwrap() {
                proven.set(proven.get() + 1);
                prop_assert_eq!(n1, n2);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    Ok(format!(
        "{FUZZ_WORDS} word pairs: {} proven equal, {} with distinct crossings, none equated",
        proven.get(),
        distinct.get()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "positive root counts", criterion_1),
        (2, "chamber count matches Zaslavsky", criterion_2),
        (3, "Weyl chamber counts", criterion_3),
        (4, "atom law", criterion_4),
        (5, "generator abelianization", criterion_5),
        (6, "relation certification", criterion_6),
        (7, "product law", criterion_7),
        (8, "affine window sanity", criterion_8),
        (9, "CLI determinism and plot", criterion_9),
        (10, "groupoid equality", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    panic::set_hook(Box::new(|_| {}));

    let mut unexpected = 0;
    for (n, name, run) in criteria {
        let label = format!("criterion {n}");
        if !filter.is_empty() && !filter.iter().any(|f| label.contains(f.as_str()) || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(format!("panic: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n).map(|(_, why)| *why);
        match (result, known) {
            (Ok(detail), None) => println!("{label:<13} PASS  {name}: {detail} [{ms} ms]"),
            (Err(why), None) => {
                unexpected += 1;
                println!("{label:<13} FAIL  {name}: {why} [{ms} ms]");
            }
            (Err(why), Some(reason)) => {
                println!("{label:<13} FAIL  {name}: {why} [{ms} ms] (known: {reason})");
            }
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                println!("{label:<13} PASS  {name}: {detail} [{ms} ms] (listed as a known failure; update the list)");
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected result(s)");
        ExitCode::FAILURE
    }
}
