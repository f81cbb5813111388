use super::{checked_alpha, reorient, Labelled, OrientedLabelled};
use crate::error::{param, Error, Result};
use crate::graph::{Digraph, Graph};

/// Sun graph on `8k` vertices: cycle `v0 .. v{4k-1}` (closing edge last),
/// then pendant edges `{vi, ui}`.
pub fn sun(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(param("k must be at least 1"));
    }
    let c = 4 * k;
    let names = (0..c)
        .map(|i| format!("v{i}"))
        .chain((0..c).map(|i| format!("u{i}")))
        .collect();
    let edges = (0..c).map(|i| (i, (i + 1) % c)).chain((0..c).map(|i| (i, c + i)));
    Graph::new(names, edges)
}

fn cycle_label(k: u64, i: u64) -> u64 {
    match (i % 2, i < 2 * k) {
        (0, true) => i / 2,
        (1, true) => 8 * k - (i + 1) / 2,
        (0, false) => i / 2 + 2 * k - 1,
        _ => 6 * k - (i + 1) / 2,
    }
}

fn pendant_label(k: u64, i: u64) -> u64 {
    match i {
        0 => 8 * k,
        _ if i == 2 * k - 1 => k,
        _ if i == 2 * k => 5 * k,
        _ if i == 4 * k - 1 => 4 * k - 1,
        _ if i < 2 * k && i % 2 == 0 => 6 * k - i / 2,
        _ if i < 2 * k => 2 * k + (i - 1) / 2,
        _ if i % 2 == 0 => 8 * k - i / 2,
        _ => (i + 1) / 2,
    }
}

/// α-valuation of the sun graph on `8k` vertices, threshold `4k - 1`.
pub fn sun_alpha(k: usize) -> Result<Labelled> {
    let graph = sun(k)?;
    let k = k as u64;
    let labels = (0..4 * k)
        .map(|i| cycle_label(k, i))
        .chain((0..4 * k).map(|i| pendant_label(k, i)))
        .collect();
    checked_alpha(graph, labels, "sun")
}

fn semi_directed(k: usize, forward: bool, phase: usize) -> Result<Digraph> {
    let g = sun(k)?;
    let c = 4 * k;
    let arcs = g.edges().iter().enumerate().map(|(pos, &(a, b))| {
        if pos < c {
            let (tail, head) = (pos, (pos + 1) % c);
            if forward {
                (tail, head)
            } else {
                (head, tail)
            }
        } else if (a + phase) % 2 == 0 {
            (b, a)
        } else {
            (a, b)
        }
    });
    Digraph::new(g.names().to_vec(), arcs)
}

/// Semi-directed sun: unidirectional cycle, pendant arcs alternating in and
/// out. The first orientation (cycle direction, pendant phase) reachable from
/// the natural orientation by label flips is returned with its flip set.
pub fn sun_semi_directed(k: usize) -> Result<OrientedLabelled> {
    let base = sun_alpha(k)?;
    for forward in [true, false] {
        for phase in [0, 1] {
            let target = semi_directed(k, forward, phase)?;
            if let Ok(found) = reorient(&base, &target, "semi-directed sun") {
                return Ok(found);
            }
        }
    }
    Err(Error::Construction(format!(
        "no flip set orients the sun graph for k = {k} as a semi-directed sun"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{arc_labels, check_alpha, edge_labels};

    #[test]
    fn smallest_sun() {
        let s = sun_alpha(1).unwrap();
        assert_eq!(s.labelling.labels(), &[0, 7, 2, 4, 8, 1, 5, 3]);
        assert_eq!(edge_labels(&s.graph, &s.labelling), vec![7, 5, 2, 4, 8, 6, 3, 1]);
        assert_eq!(check_alpha(&s.graph, &s.labelling), Some(3));
    }

    #[test]
    fn sun_on_24_vertices() {
        let s = sun_alpha(3).unwrap();
        let cycle: Vec<u64> = s.labelling.labels()[..12].to_vec();
        assert_eq!(cycle, vec![0, 23, 1, 22, 2, 21, 8, 14, 9, 13, 10, 12]);
        let pendants: Vec<u64> = s.labelling.labels()[12..].to_vec();
        assert_eq!(pendants, vec![24, 6, 17, 7, 16, 3, 15, 4, 20, 5, 19, 11]);
        assert_eq!(check_alpha(&s.graph, &s.labelling), Some(11));
    }

    #[test]
    fn semi_directed_suns() {
        for k in 1..=3 {
            let s = sun_semi_directed(k).unwrap();
            let mut diffs = arc_labels(&s.digraph, &s.labelling);
            diffs.sort();
            assert_eq!(diffs, (1..=8 * k as u64).collect::<Vec<_>>());
            let c = 4 * k;
            let ins = (0..c).filter(|&i| s.digraph.has_arc(c + i, i)).count();
            assert_eq!(ins, c / 2);
            for i in 0..c {
                assert!(s.digraph.has_arc(c + i, i) != s.digraph.has_arc(c + (i + 1) % c, (i + 1) % c));
            }
        }
    }
}
