use std::io::Write;

use anyhow::{bail, Result};
use clap::ValueEnum;
use edf_forge::edf::{verify_ccedf, EdfWitness};
use edf_forge::valuation::{
    check_alpha, check_beta, check_near_alpha, check_oriented_beta, check_oriented_near_alpha,
};
use edf_forge::zmod::ZMultiset;
use edf_forge::Error;

use crate::document::Document;
use crate::Outcome;

const MAX_DEFECT_LINES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Edf,
    Ccedf,
    Valuation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassName {
    Beta,
    Alpha,
    NearAlpha,
    OrientedBeta,
    OrientedNearAlpha,
}

impl ClassName {
    pub fn parse(s: &str) -> Result<Self> {
        match ClassName::from_str(s, false) {
            Ok(c) => Ok(c),
            Err(_) => bail!("unknown valuation class {s:?}"),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassName::Beta => "beta",
            ClassName::Alpha => "alpha",
            ClassName::NearAlpha => "near-alpha",
            ClassName::OrientedBeta => "oriented-beta",
            ClassName::OrientedNearAlpha => "oriented-near-alpha",
        }
    }
}

fn name(w: &EdfWitness, v: usize) -> &str {
    w.digraph.names.get(v).map_or("?", String::as_str)
}

fn write_defects(out: &mut impl Write, union: &ZMultiset, lambda: u64) -> Result<()> {
    let bad: Vec<(u64, u64)> = (0..union.modulus())
        .map(|r| (r, union.count(r)))
        .filter(|&(r, c)| if r == 0 { c != 0 } else { c != lambda })
        .collect();
    for &(r, c) in bad.iter().take(MAX_DEFECT_LINES) {
        let expected = if r == 0 { 0 } else { lambda };
        let what = if c > expected { "duplicated" } else { "missing" };
        writeln!(out, "  residue {r} {what}: covered {c} times, expected {expected}")?;
    }
    if bad.len() > MAX_DEFECT_LINES {
        writeln!(out, "  ... and {} more residues", bad.len() - MAX_DEFECT_LINES)?;
    }
    Ok(())
}

/// Family of the document, or a reported failure when the sets themselves
/// are not a valid family.
fn witness_or_fail(doc: &Document, out: &mut impl Write) -> Result<Option<EdfWitness>> {
    match doc.witness() {
        Ok(w) => Ok(Some(w)),
        Err(e @ (Error::DuplicateResidue { .. } | Error::Parameter(_))) => {
            writeln!(out, "FAILED: {e}")?;
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn verify_edf_doc(doc: &Document, out: &mut impl Write) -> Result<Outcome> {
    let Some(w) = witness_or_fail(doc, out)? else {
        return Ok(Outcome::Failed);
    };
    let v = w.verify()?;
    writeln!(out, "EDF {} over {} arcs", w.params, w.digraph.arcs.len())?;
    for r in &v.records {
        writeln!(out, "  {} -> {}: {}", name(&w, r.tail), name(&w, r.head), r.summary)?;
    }
    if v.verified {
        writeln!(out, "verified")?;
        Ok(Outcome::Success)
    } else {
        writeln!(out, "FAILED: differences do not cover Z_{} \\ {{0}} exactly {} times", w.params.n, w.params.lambda)?;
        write_defects(out, &v.union, w.params.lambda)?;
        Ok(Outcome::Failed)
    }
}

pub fn verify_ccedf_doc(doc: &Document, c: Option<usize>, out: &mut impl Write) -> Result<Outcome> {
    let Some(c) = c.or(doc.params.c) else {
        bail!("--c is required when the file does not record params.c");
    };
    let Some(w) = witness_or_fail(doc, out)? else {
        return Ok(Outcome::Failed);
    };
    let report = verify_ccedf(&w.family, c, w.params.lambda)?;
    let m = w.family.len();
    writeln!(out, "{c}-CEDF check on {m} sets in Z_{}", w.family.modulus())?;
    writeln!(out, "direct: A_(i+{c}) - A_i for every i")?;
    for r in &report.verification.records {
        writeln!(out, "  {} -> {}: {}", r.tail, r.head, r.summary)?;
    }
    writeln!(out, "grouped into {} chains:", report.chains.len())?;
    for (chain, block) in report.chains.iter().zip(&report.blocks) {
        let idx: Vec<String> = chain.iter().map(usize::to_string).collect();
        writeln!(out, "  chain ({}): {} differences, {} distinct", idx.join(","), block.total(), block.support_len())?;
    }
    writeln!(out, "groupings agree: {}", if report.groupings_agree { "yes" } else { "no" })?;
    if report.verified {
        writeln!(out, "verified")?;
        Ok(Outcome::Success)
    } else {
        writeln!(out, "FAILED")?;
        write_defects(out, &report.verification.union, w.params.lambda)?;
        Ok(Outcome::Failed)
    }
}

pub fn verify_valuation_doc(doc: &Document, class: Option<ClassName>, out: &mut impl Write) -> Result<Outcome> {
    let Some(b) = doc.labelling() else {
        bail!("file carries no labelling");
    };
    let class = match (class, &doc.labelling) {
        (Some(c), _) => c,
        (None, Some(l)) => ClassName::parse(&l.class)?,
        (None, None) => unreachable!(),
    };
    let d = doc.simple_digraph()?;
    let ok = match class {
        ClassName::OrientedBeta => check_oriented_beta(&d, &b),
        ClassName::OrientedNearAlpha => check_oriented_near_alpha(&d, &b).is_some(),
        undirected => {
            let g = d.underlying()?;
            match undirected {
                ClassName::Beta => check_beta(&g, &b),
                ClassName::Alpha => {
                    let x = check_alpha(&g, &b);
                    if let Some(x) = x {
                        writeln!(out, "threshold x = {x}")?;
                    }
                    x.is_some()
                }
                _ => check_near_alpha(&g, &b).is_some(),
            }
        }
    };
    let shown = class.as_str();
    if ok {
        writeln!(out, "labelling is {shown}: verified")?;
        Ok(Outcome::Success)
    } else {
        writeln!(out, "FAILED: labelling is not {shown}")?;
        Ok(Outcome::Failed)
    }
}

pub fn verify_doc(doc: &Document, mode: Mode, c: Option<usize>, class: Option<ClassName>, out: &mut impl Write) -> Result<Outcome> {
    match mode {
        Mode::Edf => verify_edf_doc(doc, out),
        Mode::Ccedf => verify_ccedf_doc(doc, c, out),
        Mode::Valuation => verify_valuation_doc(doc, class, out),
    }
}
