//! JSON payload shared by every subcommand: an H-defined family, optionally
//! with the vertex labelling it came from.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use edf_forge::edf::{EdfParams, EdfWitness, SetFamily, Verification, WitnessDigraph};
use edf_forge::graph::{Digraph, Labelling};
use edf_forge::zmod::ZSubset;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: u64,
    pub m: usize,
    pub l: usize,
    pub lambda: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigraphDoc {
    pub vertices: Vec<String>,
    pub arcs: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabellingDoc {
    /// One of beta, alpha, near-alpha, oriented-beta, oriented-near-alpha.
    pub class: String,
    pub labels: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flipped: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptLine {
    pub tail: usize,
    pub head: usize,
    pub differences: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub version: u32,
    pub params: Params,
    pub digraph: DigraphDoc,
    pub family: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labelling: Option<LabellingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcript: Option<Vec<TranscriptLine>>,
}

impl Document {
    pub fn from_witness(w: &EdfWitness) -> Self {
        let p = w.params;
        Self {
            version: SCHEMA_VERSION,
            params: Params {
                n: p.n,
                m: p.m,
                l: p.l,
                lambda: p.lambda,
                c: p.c,
            },
            digraph: DigraphDoc {
                vertices: w.digraph.names.clone(),
                arcs: w.digraph.arcs.iter().map(|&(a, b)| [a, b]).collect(),
            },
            family: w.family.to_lists(),
            labelling: None,
            transcript: None,
        }
    }

    pub fn with_labelling(mut self, labelling: LabellingDoc) -> Self {
        self.labelling = Some(labelling);
        self
    }

    pub fn with_transcript(mut self, v: &Verification) -> Self {
        self.transcript = Some(
            v.records
                .iter()
                .map(|r| TranscriptLine {
                    tail: r.tail,
                    head: r.head,
                    differences: r.summary.to_string(),
                })
                .collect(),
        );
        self
    }

    /// Shape checks that make the payload unusable rather than merely wrong.
    pub fn check_shape(&self) -> Result<()> {
        if self.version != SCHEMA_VERSION {
            bail!("unsupported schema version {}", self.version);
        }
        let p = &self.params;
        if p.n == 0 {
            bail!("params.n must be positive");
        }
        let m = self.digraph.vertices.len();
        if p.m != m || self.family.len() != m {
            bail!(
                "params.m = {} but the digraph has {} vertices and the family {} sets",
                p.m,
                m,
                self.family.len()
            );
        }
        if let Some(&[a, b]) = self.digraph.arcs.iter().find(|[a, b]| *a >= m || *b >= m) {
            bail!("arc [{a},{b}] refers to a missing vertex");
        }
        if let Some(r) = self.family.iter().flatten().find(|&&r| r >= p.n) {
            bail!("{r} is not a residue modulo {}", p.n);
        }
        if let Some(lab) = &self.labelling {
            if lab.labels.len() != m {
                bail!("labelling has {} labels for {} vertices", lab.labels.len(), m);
            }
        }
        Ok(())
    }

    /// Family as given. Overlaps and uneven sizes are reported as errors of
    /// the family, not of the file.
    pub fn family(&self) -> edf_forge::Result<SetFamily> {
        let sets = self
            .family
            .iter()
            .map(|s| ZSubset::new(self.params.n, s.iter().map(|&x| x as i64)))
            .collect::<edf_forge::Result<Vec<_>>>()?;
        SetFamily::new(self.params.n, sets)
    }

    pub fn witness_digraph(&self) -> WitnessDigraph {
        WitnessDigraph::new(
            self.digraph.vertices.clone(),
            self.digraph.arcs.iter().map(|&[a, b]| (a, b)).collect(),
        )
    }

    pub fn witness(&self) -> edf_forge::Result<EdfWitness> {
        let p = &self.params;
        Ok(EdfWitness {
            params: EdfParams {
                n: p.n,
                m: p.m,
                l: p.l,
                lambda: p.lambda,
                c: p.c,
            },
            digraph: self.witness_digraph(),
            family: self.family()?,
            expected_intervals: None,
        })
    }

    /// Simple digraph view, for valuation checks.
    pub fn simple_digraph(&self) -> Result<Digraph> {
        Digraph::new(
            self.digraph.vertices.clone(),
            self.digraph.arcs.iter().map(|&[a, b]| (a, b)),
        )
        .context("digraph is not simple")
    }

    pub fn labelling(&self) -> Option<Labelling> {
        self.labelling.as_ref().map(|l| Labelling::new(l.labels.clone()))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc: Document = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        doc.check_shape()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()).with_context(|| format!("writing {}", path.display()))
    }
}
