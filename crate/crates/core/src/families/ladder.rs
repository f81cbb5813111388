use super::{checked_alpha, reorient, Labelled, OrientedLabelled};
use crate::error::{param, Result};
use crate::graph::{Digraph, Graph};

/// Ladder with `2k+1` rungs: top rail `u0 .. u2k`, bottom rail `v0 .. v2k`.
/// Edges are the top rail, the bottom rail, then the rungs `{ui, vi}`.
pub fn ladder(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(param("k must be at least 1"));
    }
    let r = 2 * k + 1;
    let names = (0..r)
        .map(|i| format!("u{i}"))
        .chain((0..r).map(|i| format!("v{i}")))
        .collect();
    let edges = (0..r - 1)
        .map(|i| (i, i + 1))
        .chain((0..r - 1).map(|i| (r + i, r + i + 1)))
        .chain((0..r).map(|i| (i, r + i)));
    Graph::new(names, edges)
}

fn ladder_alpha(k: usize) -> Result<Labelled> {
    let graph = ladder(k)?;
    let k = k as u64;
    let r = 2 * k + 1;
    let u = (0..r).map(|j| if j % 2 == 0 { 2 * k + j / 2 } else { 4 * k - j / 2 });
    let v = (0..r).map(|j| if j % 2 == 0 { 6 * k + 1 - j / 2 } else { j / 2 });
    checked_alpha(graph, u.chain(v).collect(), "ladder")
}

/// Ladder with rails oriented left to right and rungs bottom to top,
/// labelled modulo `6k+2`.
pub fn ladder_oriented(k: usize) -> Result<OrientedLabelled> {
    let base = ladder_alpha(k)?;
    let r = 2 * k + 1;
    let target = Digraph::new(
        base.graph.names().to_vec(),
        base.graph
            .edges()
            .iter()
            .map(|&(a, b)| if b == a + r { (b, a) } else { (a, b) }),
    )?;
    reorient(&base, &target, "ladder")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{arc_labels, check_alpha};

    #[test]
    fn one_step_ladder() {
        let a = ladder_alpha(1).unwrap();
        assert_eq!(a.labelling.labels(), &[2, 4, 3, 7, 0, 6]);
        assert_eq!(check_alpha(&a.graph, &a.labelling), Some(3));
        let o = ladder_oriented(1).unwrap();
        let mut diffs = arc_labels(&o.digraph, &o.labelling);
        diffs.sort();
        assert_eq!(diffs, (1..8).collect::<Vec<_>>());
        assert!(o.digraph.has_arc(3, 0) && o.digraph.has_arc(0, 1) && o.digraph.has_arc(4, 5));
    }

    #[test]
    fn larger_ladders() {
        for k in 2..=4 {
            let o = ladder_oriented(k).unwrap();
            assert_eq!(o.digraph.arc_count(), 6 * k + 1);
        }
    }
}
