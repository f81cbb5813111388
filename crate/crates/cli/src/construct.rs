use std::collections::BTreeSet;

use anyhow::{anyhow, bail, Result};
use clap::{Args, ValueEnum};
use edf_forge::edf::{
    build_2cedf, edf_from_near_alpha, edf_from_oriented_near_alpha, unidirectional_path_family,
    EdfWitness, PassOrder, SetFamily, WitnessDigraph,
};
use edf_forge::families::{self, Labelled, OrientedLabelled};
use edf_forge::graph::{natural_orientation, Digraph, Labelling};
use edf_forge::valuation::{check_near_alpha, classify_digraph, classify_graph, ValuationClass};
use edf_forge::zmod::ZSubset;

use crate::document::{Document, LabellingDoc};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    CycleOriented,
    Kpq,
    CyclotomicTree,
    StarPath,
    #[value(name = "2cycles")]
    TwoCycles,
    #[value(name = "2cycles-clockwise")]
    TwoCyclesClockwise,
    Ladder,
    Sun,
    SunDirected,
    PathEdf,
    #[value(name = "2cedf")]
    TwoCedf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    SmallFirst,
    LargeFirst,
}

impl From<Order> for PassOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::SmallFirst => PassOrder::SmallFirst,
            Order::LargeFirst => PassOrder::LargeFirst,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    /// Family to build
    pub family: FamilyName,
    /// Vertex count or cycle length
    #[arg(long)]
    pub m: Option<usize>,
    /// Prime, or first side of K_{p,q}
    #[arg(long)]
    pub p: Option<u64>,
    /// Second side of K_{p,q}
    #[arg(long)]
    pub q: Option<usize>,
    /// Size index for 2cycles, ladder, sun, sun-directed and 2cedf
    #[arg(long)]
    pub k: Option<usize>,
    /// Primitive root for star-path (default: the smallest one)
    #[arg(long)]
    pub alpha: Option<u64>,
    /// Use cycles of length 4k+2 instead of 4k (2cycles only)
    #[arg(long)]
    pub plus_two: bool,
    /// Blow-up factor: every vertex becomes a set of this size
    #[arg(long, default_value_t = 1)]
    pub l: usize,
    /// Which side is blown up first
    #[arg(long, value_enum, default_value_t = Order::SmallFirst)]
    pub order: Order,
}

fn need<T>(v: Option<T>, flag: &str, family: FamilyName) -> Result<T> {
    v.ok_or_else(|| anyhow!("--{flag} is required for {}", family_name(family)))
}

fn family_name(f: FamilyName) -> String {
    f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn class_doc(class: &ValuationClass, labels: &Labelling, flipped: Option<&BTreeSet<u64>>) -> LabellingDoc {
    LabellingDoc {
        class: class.name().to_string(),
        labels: labels.labels().to_vec(),
        threshold: match class {
            ValuationClass::Alpha { threshold } => Some(*threshold),
            _ => None,
        },
        flipped: flipped.filter(|f| !f.is_empty()).map(|f| f.iter().copied().collect()),
    }
}

/// EDF over `d` whose sets are the single labels, which is what an
/// oriented β-valuation is.
fn singleton_witness(d: &Digraph, b: &Labelling) -> Result<EdfWitness> {
    let n = d.arc_count() as u64 + 1;
    let sets = b
        .labels()
        .iter()
        .map(|&x| ZSubset::new(n, [x as i64]))
        .collect::<edf_forge::Result<Vec<_>>>()?;
    Ok(EdfWitness::new(WitnessDigraph::from(d), SetFamily::new(n, sets)?, 1))
}

fn from_graph(g: &Labelled, args: &ConstructArgs) -> Result<Document> {
    let class = classify_graph(&g.graph, &g.labelling);
    let w = if check_near_alpha(&g.graph, &g.labelling).is_some() {
        edf_from_near_alpha(&g.graph, &g.labelling, args.l, args.order.into())?
    } else if args.l == 1 {
        singleton_witness(&natural_orientation(&g.graph, &g.labelling)?, &g.labelling)?
    } else {
        bail!("blow-ups need a near-alpha valuation; this one is {class}");
    };
    Ok(Document::from_witness(&w).with_labelling(class_doc(&class, &g.labelling, None)))
}

fn from_digraph(o: &OrientedLabelled, args: &ConstructArgs) -> Result<Document> {
    let class = classify_digraph(&o.digraph, &o.labelling);
    let w = match class {
        ValuationClass::OrientedNearAlpha(_) => {
            edf_from_oriented_near_alpha(&o.digraph, &o.labelling, args.l, args.order.into())?
        }
        _ if args.l == 1 => singleton_witness(&o.digraph, &o.labelling)?,
        _ => bail!("blow-ups need an oriented near-alpha valuation; this one is {class}"),
    };
    Ok(Document::from_witness(&w).with_labelling(class_doc(&class, &o.labelling, Some(&o.flipped))))
}

/// Build the requested family; the result is not yet verified.
pub fn build(args: &ConstructArgs) -> Result<Document> {
    let f = args.family;
    match f {
        FamilyName::Path => from_graph(&families::path_alpha(need(args.m, "m", f)?)?, args),
        FamilyName::Cycle => {
            let m = need(args.m, "m", f)?;
            match families::cycle_alpha(m) {
                Ok(c) => from_graph(&c, args),
                Err(e) if m % 4 == 2 && m >= 6 => {
                    Err(anyhow!("{e}\nhint: construct cycle-oriented --m {m}"))
                }
                Err(e) => Err(e.into()),
            }
        }
        FamilyName::CycleOriented => from_digraph(&families::cycle_oriented_near_alpha(need(args.m, "m", f)?)?, args),
        FamilyName::Kpq => {
            let p = need(args.p, "p", f)? as usize;
            from_graph(&families::complete_bipartite_alpha(p, need(args.q, "q", f)?)?, args)
        }
        FamilyName::CyclotomicTree => from_graph(&families::cyclotomic_near_alpha_tree(need(args.p, "p", f)?)?, args),
        FamilyName::StarPath => from_digraph(&families::star_path_oriented_beta(need(args.p, "p", f)?, args.alpha)?, args),
        FamilyName::TwoCycles => {
            let k = need(args.k, "k", f)?;
            let g = if args.plus_two {
                families::two_cycles_alpha_4k2(k)?
            } else {
                families::two_cycles_alpha(k)?
            };
            from_graph(&g, args)
        }
        FamilyName::TwoCyclesClockwise => from_digraph(&families::two_cycles_clockwise(need(args.m, "m", f)?)?, args),
        FamilyName::Ladder => from_digraph(&families::ladder_oriented(need(args.k, "k", f)?)?, args),
        FamilyName::Sun => from_graph(&families::sun_alpha(need(args.k, "k", f)?)?, args),
        FamilyName::SunDirected => from_digraph(&families::sun_semi_directed(need(args.k, "k", f)?)?, args),
        FamilyName::PathEdf => {
            let w = unidirectional_path_family(need(args.m, "m", f)?, args.l)?;
            Ok(Document::from_witness(&w))
        }
        FamilyName::TwoCedf => {
            let k = need(args.k, "k", f)?;
            let t = build_2cedf(2 * k, args.l)?;
            Ok(Document::from_witness(&t.report.witness))
        }
    }
}
