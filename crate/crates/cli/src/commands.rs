//! Subcommands. Each returns one JSON report or a domain error.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use stressforge::census::{classify_k4, lambda4_arrangement, lambda5_census, strata_table};
use stressforge::conditions::{check_condition_detailed, minimal_witnesses, sample_off, sample_on, witness_subgraph_search, ConditionId, SearchOptions};
use stressforge::signature::fiber_signature;
use stressforge::stress::self_stress_space;
use stressforge::surgery::{edge_exchange_check, surgery1_apply, surgery2_verify, surgery3d_verify, two_sum, SurgerySite};
use stressforge::{Configuration, Edge, Error, Graph, Result};

use crate::model_file::{model_json, parse_model, Model};
use crate::report::*;
use crate::svg::export_svg;

#[derive(Debug, Parser)]
#[command(name = "stressforge", version, about = "Exact self-stress spaces, fiber signatures and strata of tensegrity frameworks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension and canonical basis of the self-stress space.
    Stress { model: PathBuf },
    /// Fiber signature (covectors of the stress space).
    Signature { model: PathBuf },
    /// Locate a four-point configuration on the sphere of K4 strata.
    #[command(name = "classify-k4")]
    ClassifyK4 { model: PathBuf },
    /// Strata tables and cell complexes.
    Census(CensusArgs),
    /// Check a projective condition on the model's points.
    Condition {
        /// Condition tag (collinear3, concurrent3, conic6, k7-concurrency, k7-conic).
        #[arg(long)]
        id: String,
        /// Comma-separated labels bound to the condition's roles.
        #[arg(long)]
        bind: Option<String>,
        model: PathBuf,
    },
    /// Subgraphs of K_n whose stress space detects a condition.
    #[command(name = "witness-search")]
    WitnessSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        condition: String,
        /// Directory with `on/*.json` and `off/*.json` model files.
        #[arg(long)]
        samples: Option<PathBuf>,
        /// Random samples per side when no directory is given.
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Apply or verify a surgery.
    #[command(subcommand)]
    Surgery(SurgeryCommand),
    /// Write the SVG of the K4 strata sphere.
    Export {
        #[arg(long)]
        svg: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Number of points (2 to 5).
    #[arg(long, conflicts_with_all = ["lambda4", "lambda5"], required_unless_present_any = ["lambda4", "lambda5"])]
    pub n: Option<usize>,
    /// The cell complex of four-point configurations.
    #[arg(long, conflicts_with = "lambda5")]
    pub lambda4: bool,
    /// Codimension 0 and 1 strata of five points.
    #[arg(long)]
    pub lambda5: bool,
}

#[derive(Debug, Subcommand)]
pub enum SurgeryCommand {
    /// Compare dim W(G - e1) and dim W(G - e2).
    #[command(name = "edge-exchange")]
    EdgeExchange {
        model: PathBuf,
        /// Edges of the subgraph H, e.g. `1-2,1-3,2-3`.
        #[arg(long)]
        subgraph: String,
        #[arg(long)]
        e1: String,
        #[arg(long)]
        e2: String,
    },
    /// 2-sum along an edge of each framework.
    #[command(name = "two-sum")]
    TwoSum {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        edge1: String,
        #[arg(long)]
        edge2: String,
    },
    /// Surgery I; roles p, q, v2, v3, v4 from the model or `--site`.
    Surgery1 {
        model: PathBuf,
        #[arg(long)]
        site: Option<String>,
    },
    /// Surgery II on a before/after pair; roles p, q, r, s, v1, v4.
    Surgery2 {
        before: PathBuf,
        after: PathBuf,
        #[arg(long)]
        site: Option<String>,
    },
    /// Surgery in space; roles v2, v3, v4, e1..e6.
    Surgery3d {
        model: PathBuf,
        #[arg(long)]
        site: Option<String>,
    },
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("expected an edge like 1,2 or 1-2, got {s:?}"));
    let (a, b) = s.split_once([',', '-']).ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_edge(s: &str) -> Result<Edge> {
    let (a, b) = parse_pair(s)?;
    if a == b || a == 0 || b == 0 {
        return Err(Error::Parse(format!("not an edge: {s:?}")));
    }
    Ok(Edge::new(a, b))
}

fn parse_site(s: &str) -> Result<SurgerySite> {
    let mut roles = BTreeMap::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse(format!("expected role=label, got {part:?}")))?;
        let v: usize = v.trim().parse().map_err(|_| Error::Parse(format!("bad label in {part:?}")))?;
        roles.insert(k.trim().to_string(), v);
    }
    Ok(SurgerySite { roles })
}

fn site_for(model: &Model, flag: &Option<String>) -> Result<SurgerySite> {
    match flag {
        Some(s) => parse_site(s),
        None => Ok(model.site()),
    }
}

fn model_input(path: &Path, m: &Model) -> Value {
    json!({ "path": path_str(path), "model": model_json(&m.framework, &m.roles) })
}

fn site_json(s: &SurgerySite) -> Value {
    json!(s.roles)
}

fn load_dir(dir: &Path, n: usize) -> Result<Vec<Configuration>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    files
        .iter()
        .map(|p| {
            let m = parse_model(p)?;
            if m.framework.vertex_count() != n || m.framework.dim() != 2 {
                return Err(Error::Schema(format!("{}: expected {n} planar points", p.display())));
            }
            Ok(m.framework.config().clone())
        })
        .collect()
}

pub fn run(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Stress { model } => {
            let m = parse_model(model)?;
            let space = self_stress_space(&m.framework);
            Ok(report("stress", model_input(model, &m), stress_json(&space), json!({})))
        }
        Command::Signature { model } => {
            let m = parse_model(model)?;
            let sig = fiber_signature(&m.framework)?;
            Ok(report("signature", model_input(model, &m), signature_json(&sig), json!({})))
        }
        Command::ClassifyK4 { model } => {
            let m = parse_model(model)?;
            if m.framework.vertex_count() != 4 || m.framework.dim() != 2 {
                return Err(Error::DimensionMismatch("classify-k4 needs four planar points".into()));
            }
            let c = classify_k4(m.framework.config())?;
            Ok(report("classify-k4", model_input(model, &m), k4_json(&c), json!({})))
        }
        Command::Census(args) => census(args),
        Command::Condition { id, bind, model } => {
            let m = parse_model(model)?;
            let text = match bind {
                Some(b) => format!("{id}:{b}"),
                None => id.clone(),
            };
            let cid: ConditionId = text.parse()?;
            cid.validate(m.framework.vertex_count())?;
            if m.framework.dim() != 2 {
                return Err(Error::UnsupportedDimension(m.framework.dim()));
            }
            let r = check_condition_detailed(&cid, m.framework.config())?;
            Ok(report("condition", json!({ "condition": cid.to_string(), "model": model_input(model, &m) }), condition_json(&cid, &r), json!({})))
        }
        Command::WitnessSearch { n, condition, samples, count, seed } => {
            let cid: ConditionId = condition.parse()?;
            let (on, off, provenance) = match samples {
                Some(dir) => (load_dir(&dir.join("on"), *n)?, load_dir(&dir.join("off"), *n)?, json!({ "samples": path_str(dir) })),
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    let on = (0..*count).map(|_| sample_on(&cid, *n, &mut rng)).collect::<Result<Vec<_>>>()?;
                    let off = (0..*count).map(|_| sample_off(&cid, *n, &mut rng)).collect::<Result<Vec<_>>>()?;
                    (on, off, json!({ "seed": seed, "count": count }))
                }
            };
            let r = witness_subgraph_search(*n, &cid, &on, &off, &SearchOptions { seed: None, prime_seed: *seed })?;
            let minimal = minimal_witnesses(&r.witnesses);
            Ok(report("witness-search", json!({ "n": n, "condition": cid.to_string() }), search_json(&r, &minimal), provenance))
        }
        Command::Surgery(s) => surgery(s),
        Command::Export { svg } => {
            let complex = lambda4_arrangement();
            let text = export_svg(&complex)?;
            std::fs::write(svg, &text).map_err(|e| Error::Io(format!("{}: {e}", svg.display())))?;
            let results = json!({ "written": path_str(svg), "bytes": text.len(), "arc_groups": complex.arc_groups(), "faces": complex.count(2), "arcs": complex.count(1) });
            Ok(report("export", json!({ "svg": path_str(svg) }), results, json!({})))
        }
    }
}

fn census(args: &CensusArgs) -> Result<Value> {
    if args.lambda4 {
        return Ok(report("census", json!({ "lambda4": true }), complex_json(&lambda4_arrangement()), json!({})));
    }
    if args.lambda5 {
        return Ok(report("census", json!({ "lambda5": true }), lambda5_json(&lambda5_census()?), json!({})));
    }
    let n = args.n.expect("clap requires --n here");
    Ok(report("census", json!({ "n": n }), strata_json(&strata_table(n)?), json!({})))
}

fn surgery(cmd: &SurgeryCommand) -> Result<Value> {
    match cmd {
        SurgeryCommand::EdgeExchange { model, subgraph, e1, e2 } => {
            let m = parse_model(model)?;
            let n = m.framework.vertex_count();
            let mut h = Graph::empty(n);
            for part in subgraph.split(',').filter(|p| !p.trim().is_empty()) {
                let e = parse_edge(part)?;
                h.add_edge(e.0, e.1)?;
            }
            let (e1, e2) = (parse_edge(e1)?, parse_edge(e2)?);
            let v = edge_exchange_check(m.framework.graph(), &h, e1, e2, m.framework.config())?;
            let inputs = json!({ "model": model_input(model, &m), "subgraph": subgraph, "e1": e1.to_string(), "e2": e2.to_string() });
            Ok(report("surgery edge-exchange", inputs, verdict_json(&v), json!({})))
        }
        SurgeryCommand::TwoSum { first, second, edge1, edge2 } => {
            let (a, b) = (parse_model(first)?, parse_model(second)?);
            let (sum, v) = two_sum(&a.framework, parse_pair(edge1)?, &b.framework, parse_pair(edge2)?)?;
            let inputs = json!({ "first": model_input(first, &a), "second": model_input(second, &b), "edge1": edge1, "edge2": edge2 });
            let results = json!({ "verdict": verdict_json(&v), "framework": model_json(&sum, &BTreeMap::new()) });
            Ok(report("surgery two-sum", inputs, results, json!({})))
        }
        SurgeryCommand::Surgery1 { model, site } => {
            let m = parse_model(model)?;
            let site = site_for(&m, site)?;
            let (after, v) = surgery1_apply(&m.framework, &site)?;
            let inputs = json!({ "model": model_input(model, &m), "site": site_json(&site) });
            let results = json!({ "verdict": verdict_json(&v), "framework": model_json(&after, &BTreeMap::new()) });
            Ok(report("surgery surgery1", inputs, results, json!({})))
        }
        SurgeryCommand::Surgery2 { before, after, site } => {
            let (a, b) = (parse_model(before)?, parse_model(after)?);
            let site = site_for(&a, site)?;
            let v = surgery2_verify(&a.framework, &b.framework, &site)?;
            let inputs = json!({ "before": model_input(before, &a), "after": model_input(after, &b), "site": site_json(&site) });
            Ok(report("surgery surgery2", inputs, verdict_json(&v), json!({})))
        }
        SurgeryCommand::Surgery3d { model, site } => {
            let m = parse_model(model)?;
            let site = site_for(&m, site)?;
            let s = surgery3d_verify(&m.framework, &site)?;
            let v1: Vec<String> = s.v1.iter().map(stressforge::scalar::format_rational).collect();
            let inputs = json!({ "model": model_input(model, &m), "site": site_json(&site) });
            let results = json!({ "verdict": verdict_json(&s.verdict), "v1": v1, "framework": model_json(&s.after, &BTreeMap::new()) });
            Ok(report("surgery surgery3d", inputs, results, json!({})))
        }
    }
}
