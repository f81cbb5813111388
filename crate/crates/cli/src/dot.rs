use std::fmt::Write;

use edf_forge::zmod::{external_difference, sub_mod, DifferenceSummary};

use crate::document::Document;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn set_text(s: &[u64]) -> String {
    let items: Vec<String> = s.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// One node per vertex of the witness digraph. Nodes show the vertex label
/// when the document has a labelling and the set otherwise; edges show the
/// arc label or the differences the arc contributes.
pub fn witness_dot(doc: &Document) -> String {
    let mut out = String::from("digraph witness {\n");
    let labels = doc.labelling.as_ref().map(|l| &l.labels);
    for (v, name) in doc.digraph.vertices.iter().enumerate() {
        let text = match labels {
            Some(ls) => format!("{name}\n{}", ls[v]),
            None => format!("{name}\n{}", set_text(&doc.family[v])),
        };
        let _ = writeln!(out, "  {v} [label={}];", quote(&text));
    }
    let arc_modulus = doc.digraph.arcs.len() as u64 + 1;
    let family = doc.family().ok();
    for &[a, b] in &doc.digraph.arcs {
        let text = match (labels, &family) {
            (Some(ls), _) => sub_mod(ls[b] % arc_modulus, ls[a] % arc_modulus, arc_modulus).to_string(),
            (None, Some(f)) => match external_difference(f.set(b), f.set(a)) {
                Ok(d) => DifferenceSummary::of(&d).to_string(),
                Err(_) => String::new(),
            },
            (None, None) => String::new(),
        };
        let _ = writeln!(out, "  {a} -> {b} [label={}];", quote(&text));
    }
    out.push_str("}\n");
    out
}

/// The blown-up digraph: one node per set element, one edge per element
/// pair along each arc, labelled by its difference modulo `n`.
pub fn blown_dot(doc: &Document) -> String {
    let n = doc.params.n;
    let mut out = String::from("digraph blown {\n");
    for (v, set) in doc.family.iter().enumerate() {
        for (i, x) in set.iter().enumerate() {
            let text = format!("{}.{i}\n{x}", doc.digraph.vertices[v]);
            let _ = writeln!(out, "  \"{v}_{i}\" [label={}];", quote(&text));
        }
    }
    for &[a, b] in &doc.digraph.arcs {
        for (i, &x) in doc.family[a].iter().enumerate() {
            for (j, &y) in doc.family[b].iter().enumerate() {
                let _ = writeln!(out, "  \"{a}_{i}\" -> \"{b}_{j}\" [label=\"{}\"];", sub_mod(y, x, n));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Node and edge counts of DOT text produced by this module.
pub fn count_dot(text: &str) -> (usize, usize) {
    let lines = text.lines().map(str::trim).filter(|l| l.ends_with("];"));
    lines.fold((0, 0), |(nodes, edges), l| {
        if l.contains(" -> ") {
            (nodes, edges + 1)
        } else {
            (nodes + 1, edges)
        }
    })
}
