//! Digraph-defined external difference families: carriers, exact
//! verification with per-arc transcripts, and the blow-up pipelines.

mod blowup;
mod cedf;

use std::fmt;

use rayon::prelude::*;

use crate::error::{param, Error, Result};
use crate::graph::Digraph;
use crate::zmod::{
    external_difference, multiset_union, CoverDefect, DifferenceSummary, ZMultiset, ZSubset,
};

pub use blowup::{
    blow_up_labelled, blow_up_labelled_large, blow_up_labelled_small, edf_from_near_alpha,
    edf_from_oriented_near_alpha, BlownLabelled, LabelledShape, PassOrder,
};
pub use cedf::{build_2cedf, unidirectional_path_family, verify_ccedf, CcedfReport, TwoCedf};

/// Ordered, pairwise disjoint subsets of `Z_n` of one common size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFamily {
    modulus: u64,
    sets: Vec<ZSubset>,
}

impl SetFamily {
    pub fn new(modulus: u64, sets: Vec<ZSubset>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if let Some(s) = sets.iter().find(|s| s.modulus() != modulus) {
            return Err(Error::ModulusMismatch {
                left: modulus,
                right: s.modulus(),
            });
        }
        if let Some(first) = sets.first() {
            if sets.iter().any(|s| s.len() != first.len()) {
                return Err(param("sets in a family must all have the same size"));
            }
        }
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                if !sets[i].is_disjoint(&sets[j]) {
                    return Err(param(format!("sets {i} and {j} are not disjoint")));
                }
            }
        }
        Ok(Self { modulus, sets })
    }

    /// Family from plain integer lists, reduced modulo `modulus`.
    pub fn from_lists(modulus: u64, lists: &[Vec<i64>]) -> Result<Self> {
        let sets = lists
            .iter()
            .map(|l| ZSubset::new(modulus, l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(modulus, sets)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn sets(&self) -> &[ZSubset] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &ZSubset {
        &self.sets[i]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set_size(&self) -> usize {
        self.sets.first().map_or(0, ZSubset::len)
    }

    pub fn to_lists(&self) -> Vec<Vec<u64>> {
        self.sets.iter().map(|s| s.elements().to_vec()).collect()
    }
}

/// `(n, m, l, λ)` and, for circular families, the shift `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdfParams {
    pub n: u64,
    pub m: usize,
    pub l: usize,
    pub lambda: u64,
    pub c: Option<usize>,
}

impl fmt::Display for EdfParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.m, self.l, self.lambda)?;
        if let Some(c) = self.c {
            write!(f, "-{c}-CEDF")?;
        }
        Ok(())
    }
}

/// Arc list over family indices. Unlike [`Digraph`], opposite arcs may both
/// be present, which the doubled λ = 2 witnesses need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessDigraph {
    pub names: Vec<String>,
    pub arcs: Vec<(usize, usize)>,
}

impl WitnessDigraph {
    pub fn new(names: Vec<String>, arcs: Vec<(usize, usize)>) -> Self {
        Self { names, arcs }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }
}

impl From<&Digraph> for WitnessDigraph {
    fn from(d: &Digraph) -> Self {
        Self {
            names: d.names().to_vec(),
            arcs: d.arcs().to_vec(),
        }
    }
}

/// One line of a verification transcript: the differences `A_head - A_tail`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcRecord {
    pub tail: usize,
    pub head: usize,
    pub summary: DifferenceSummary,
    pub expected: Option<(u64, u64)>,
}

impl ArcRecord {
    pub fn matches_expected(&self) -> bool {
        match self.expected {
            None => true,
            Some((lo, hi)) => self.summary == DifferenceSummary::Interval { lo, hi },
        }
    }
}

/// Outcome of checking an EDF equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub records: Vec<ArcRecord>,
    pub union: ZMultiset,
    pub defect: Option<CoverDefect>,
    pub verified: bool,
}

impl Verification {
    /// First arc whose differences disagree with its expected interval.
    pub fn first_bad_arc(&self) -> Option<&ArcRecord> {
        self.records.iter().find(|r| !r.matches_expected())
    }
}

/// A claimed `(n, m, l, λ; H)`-EDF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdfWitness {
    pub params: EdfParams,
    pub digraph: WitnessDigraph,
    pub family: SetFamily,
    /// Per-arc intervals the construction promises, in arc order.
    pub expected_intervals: Option<Vec<(u64, u64)>>,
}

impl EdfWitness {
    /// Witness whose parameters are read off the family.
    pub fn new(digraph: WitnessDigraph, family: SetFamily, lambda: u64) -> Self {
        let params = EdfParams {
            n: family.modulus(),
            m: family.len(),
            l: family.set_size(),
            lambda,
            c: None,
        };
        Self {
            params,
            digraph,
            family,
            expected_intervals: None,
        }
    }

    pub fn structural_check(&self) -> Result<()> {
        let p = &self.params;
        if p.n != self.family.modulus() {
            return Err(Error::Structural(format!(
                "n = {} but the family lives in Z_{}",
                p.n,
                self.family.modulus()
            )));
        }
        if p.m != self.family.len() || p.m != self.digraph.vertex_count() {
            return Err(Error::Structural(format!(
                "m = {} but the family has {} sets and the digraph {} vertices",
                p.m,
                self.family.len(),
                self.digraph.vertex_count()
            )));
        }
        if p.l != self.family.set_size() {
            return Err(Error::Structural(format!(
                "l = {} but the sets have size {}",
                p.l,
                self.family.set_size()
            )));
        }
        if let Some(&(i, j)) = self.digraph.arcs.iter().find(|&&(i, j)| i >= p.m || j >= p.m) {
            return Err(Error::Structural(format!("arc ({i},{j}) is outside 0..{}", p.m)));
        }
        if let Some(e) = &self.expected_intervals {
            if e.len() != self.digraph.arcs.len() {
                return Err(Error::Structural("one expected interval per arc is required".into()));
            }
        }
        Ok(())
    }

    pub fn verify(&self) -> Result<Verification> {
        self.structural_check()?;
        let sets = self.family.sets();
        let parts: Vec<ZMultiset> = self
            .digraph
            .arcs
            .par_iter()
            .map(|&(i, j)| external_difference(&sets[j], &sets[i]))
            .collect::<Result<_>>()?;
        let records = self
            .digraph
            .arcs
            .iter()
            .zip(&parts)
            .enumerate()
            .map(|(k, (&(tail, head), diff))| ArcRecord {
                tail,
                head,
                summary: DifferenceSummary::of(diff),
                expected: self.expected_intervals.as_ref().map(|e| e[k]),
            })
            .collect::<Vec<_>>();
        let union = multiset_union(&parts, Some(self.family.modulus()))?;
        let defect = union.cover_defect(self.params.lambda);
        let verified = defect.is_none() && records.iter().all(ArcRecord::matches_expected);
        Ok(Verification {
            records,
            union,
            defect,
            verified,
        })
    }

    /// λ = 2 witness on the underlying graph: every arc together with its reverse.
    pub fn doubled(&self) -> EdfWitness {
        let arcs = self
            .digraph
            .arcs
            .iter()
            .copied()
            .chain(self.digraph.arcs.iter().map(|&(i, j)| (j, i)))
            .collect();
        let mut params = self.params;
        params.lambda *= 2;
        EdfWitness {
            params,
            digraph: WitnessDigraph::new(self.digraph.names.clone(), arcs),
            family: self.family.clone(),
            expected_intervals: None,
        }
    }
}

pub fn verify_edf(w: &EdfWitness) -> Result<Verification> {
    w.verify()
}
