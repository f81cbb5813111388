use std::io::Write;
use std::path::Path;

use anyhow::Result;
use edf_forge::edf::{build_2cedf, edf_from_near_alpha, edf_from_oriented_near_alpha, EdfWitness, PassOrder};
use edf_forge::families::{five_vertex_near_alpha, six_vertex_oriented_near_alpha};

use crate::document::Document;
use crate::Outcome;

/// A worked example: how to build it and the sets it must produce.
pub struct Example {
    pub name: &'static str,
    pub file: &'static str,
    pub expected: Vec<Vec<u64>>,
    pub build: fn() -> edf_forge::Result<EdfWitness>,
}

fn five_vertex() -> edf_forge::Result<EdfWitness> {
    let g = five_vertex_near_alpha()?;
    edf_from_near_alpha(&g.graph, &g.labelling, 3, PassOrder::LargeFirst)
}

fn six_vertex() -> edf_forge::Result<EdfWitness> {
    let d = six_vertex_oriented_near_alpha()?;
    edf_from_oriented_near_alpha(&d.digraph, &d.labelling, 3, PassOrder::SmallFirst)
}

fn two_cedf() -> edf_forge::Result<EdfWitness> {
    Ok(build_2cedf(4, 3)?.report.witness)
}

pub fn examples() -> Vec<Example> {
    vec![
        Example {
            name: "(46,5,3,1)-EDF from a five-vertex near-alpha graph",
            file: "edf-46-5-3-1.json",
            expected: vec![vec![0, 1, 2], vec![21, 24, 27], vec![18, 19, 20], vec![30, 33, 36], vec![39, 42, 45]],
            build: five_vertex,
        },
        Example {
            name: "(73,6,3,1)-EDF from a six-vertex oriented near-alpha digraph",
            file: "edf-73-6-3-1.json",
            expected: vec![
                vec![0, 3, 6],
                vec![36, 39, 42],
                vec![9, 12, 15],
                vec![61, 62, 63],
                vec![70, 71, 72],
                vec![43, 44, 45],
            ],
            build: six_vertex,
        },
        Example {
            name: "(73,8,3,1)-2-CEDF from two directed 4-cycles",
            file: "cedf-73-8-3-1.json",
            expected: vec![
                vec![0, 3, 6],
                vec![27, 30, 33],
                vec![70, 71, 72],
                vec![61, 62, 63],
                vec![9, 12, 15],
                vec![36, 39, 42],
                vec![52, 53, 54],
                vec![43, 44, 45],
            ],
            build: two_cedf,
        },
    ]
}

/// Rebuild every worked example, compare set for set and verify.
pub fn run_reproduce(out_dir: Option<&Path>, out: &mut impl Write) -> Result<Outcome> {
    let mut all = true;
    for ex in examples() {
        let w = (ex.build)()?;
        let v = w.verify()?;
        let matches = w.family.to_lists() == ex.expected;
        writeln!(out, "{}", ex.name)?;
        for (name, set) in w.digraph.names.iter().zip(w.family.sets()) {
            writeln!(out, "  {name}: {set}")?;
        }
        writeln!(
            out,
            "  sets match: {}, verified: {}",
            if matches { "yes" } else { "no" },
            if v.verified { "yes" } else { "no" }
        )?;
        all &= matches && v.verified;
        if let Some(dir) = out_dir {
            std::fs::create_dir_all(dir)?;
            Document::from_witness(&w).with_transcript(&v).write(&dir.join(ex.file))?;
        }
    }
    Ok(if all { Outcome::Success } else { Outcome::Failed })
}
