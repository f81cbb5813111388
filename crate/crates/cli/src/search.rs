use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use edf_forge::edf::{EdfWitness, SetFamily, WitnessDigraph};
use edf_forge::families::{complete_bipartite, cycle, ladder, matching, path, sun};
use edf_forge::graph::tree::spider;
use edf_forge::graph::{natural_orientation, Digraph, Graph, Labelling};
use edf_forge::oracle::{
    exhaustive_trees_near_alpha, search_graph, search_oriented_beta, SearchClass, SearchConfig,
};
use edf_forge::zmod::ZSubset;

use crate::document::{Document, LabellingDoc};
use crate::verify::ClassName;
use crate::Outcome;

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Document whose digraph is searched (its underlying graph for undirected classes)
    #[arg(long, conflicts_with = "generator")]
    pub graph: Option<PathBuf>,
    /// Generator spec: path:M, cycle:M, dicycle:M, kpq:P,Q, spider:A,B,..,
    /// matching:K, ladder:K, sun:K
    #[arg(long = "gen")]
    pub generator: Option<String>,
    /// Run near-alpha search over every tree with this many vertices
    #[arg(long, conflicts_with_all = ["graph", "generator"])]
    pub trees: Option<usize>,
    /// Valuation class to search for
    #[arg(long, value_enum, default_value_t = ClassName::Beta)]
    pub class: ClassName,
    /// Vertex bound; overrides EDF_FORGE_MAX_SEARCH
    #[arg(long)]
    pub max_vertices: Option<usize>,
    /// Write the labelling found as a document
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub enum Shape {
    Undirected(Graph),
    Directed(Digraph),
}

fn numbers(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse().with_context(|| format!("bad number {x:?} in generator")))
        .collect()
}

pub fn generate(spec: &str) -> Result<Shape> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let args = if rest.is_empty() { Vec::new() } else { numbers(rest)? };
    let one = || -> Result<usize> {
        match args.as_slice() {
            [x] => Ok(*x),
            _ => bail!("generator {kind} takes one number"),
        }
    };
    let g = match kind {
        "path" => path(one()?)?,
        "cycle" => cycle(one()?)?,
        "kpq" => match args.as_slice() {
            [p, q] => complete_bipartite(*p, *q)?,
            _ => bail!("generator kpq takes two numbers"),
        },
        "spider" => spider(&args)?,
        "matching" => matching(one()?)?,
        "ladder" => ladder(one()?)?,
        "sun" => sun(one()?)?,
        "dicycle" => {
            let m = one()?;
            if m < 2 {
                bail!("a directed cycle needs at least 2 vertices");
            }
            return Ok(Shape::Directed(Digraph::with_vertex_count(m, (0..m).map(|i| (i, (i + 1) % m)))?));
        }
        "arc" => return Ok(Shape::Directed(Digraph::with_vertex_count(2, [(0, 1)])?)),
        _ => bail!("unknown generator {kind:?}"),
    };
    Ok(Shape::Undirected(g))
}

fn config(args: &SearchArgs) -> Result<SearchConfig> {
    match args.max_vertices {
        Some(max_vertices) => Ok(SearchConfig { max_vertices }),
        None => Ok(SearchConfig::from_env()?),
    }
}

fn found_document(d: &Digraph, b: &Labelling, class: ClassName) -> Result<Document> {
    let n = d.arc_count() as u64 + 1;
    let sets = b
        .labels()
        .iter()
        .map(|&x| ZSubset::new(n, [x as i64]))
        .collect::<edf_forge::Result<Vec<_>>>()?;
    let w = EdfWitness::new(WitnessDigraph::from(d), SetFamily::new(n, sets)?, 1);
    Ok(Document::from_witness(&w).with_labelling(LabellingDoc {
        class: class.as_str().to_string(),
        labels: b.labels().to_vec(),
        threshold: None,
        flipped: None,
    }))
}

pub fn run_search(args: &SearchArgs, out: &mut impl Write) -> Result<Outcome> {
    let cfg = config(args)?;
    if let Some(n) = args.trees {
        let r = exhaustive_trees_near_alpha(n, &cfg)?;
        writeln!(out, "{} trees on {n} vertices, {} without a near-alpha valuation", r.trees, r.failures.len())?;
        return Ok(if r.all_pass() { Outcome::Success } else { Outcome::NotFound });
    }
    let shape = match (&args.graph, &args.generator) {
        (Some(p), _) => Shape::Directed(Document::read(p)?.simple_digraph()?),
        (None, Some(spec)) => generate(spec)?,
        (None, None) => bail!("one of --graph, --gen or --trees is required"),
    };
    let (outcome, digraph) = match (args.class, shape) {
        (ClassName::OrientedBeta, Shape::Directed(d)) => (search_oriented_beta(&d, &cfg)?, Some(d)),
        (ClassName::OrientedBeta, Shape::Undirected(_)) => bail!("oriented-beta search needs a digraph"),
        (ClassName::OrientedNearAlpha, _) => bail!("search supports beta, alpha, near-alpha and oriented-beta"),
        (class, shape) => {
            let g = match shape {
                Shape::Undirected(g) => g,
                Shape::Directed(d) => d.underlying()?,
            };
            let c = match class {
                ClassName::Alpha => SearchClass::Alpha,
                ClassName::NearAlpha => SearchClass::NearAlpha,
                _ => SearchClass::Beta,
            };
            let o = search_graph(&g, c, &cfg)?;
            let d = o.labelling.as_ref().map(|b| natural_orientation(&g, b)).transpose()?;
            (o, d)
        }
    };
    match (&outcome.labelling, digraph) {
        (Some(b), Some(d)) => {
            writeln!(out, "found {b} after {} nodes", outcome.nodes)?;
            if let Some(path) = &args.out {
                found_document(&d, b, args.class)?.write(path)?;
            }
            Ok(Outcome::Success)
        }
        (Some(_), None) => Err(anyhow!("labelling found without a digraph")),
        (None, _) => {
            writeln!(out, "exhausted {} nodes: no labelling exists", outcome.nodes)?;
            Ok(Outcome::NotFound)
        }
    }
}
