use std::collections::BTreeSet;

use super::{Labelled, OrientedLabelled};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph, Labelling};
use crate::valuation::{check_near_alpha, check_oriented_beta, check_oriented_near_alpha};

fn by_labels(labels: &[u64], pairs: &[(u64, u64)]) -> Result<(Digraph, Labelling)> {
    let b = Labelling::new(labels.to_vec());
    let at = |l: u64| b.vertex_with(l).expect("label present");
    let names = (1..=labels.len()).map(|i| format!("v{i}")).collect();
    let d = Digraph::new(names, pairs.iter().map(|&(x, y)| (at(x), at(y))))?;
    Ok((d, b))
}

/// Five vertices, edges `v1v2, v2v3, v3v4, v1v4, v1v5`, labels `0,3,2,4,5`.
pub fn five_vertex_near_alpha() -> Result<Labelled> {
    let graph = Graph::new(
        (1..=5).map(|i| format!("v{i}")).collect(),
        [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)],
    )?;
    let labelling = Labelling::new(vec![0, 3, 2, 4, 5]);
    let sides = check_near_alpha(&graph, &labelling)
        .ok_or_else(|| Error::Construction("five-vertex labelling is not near-alpha".into()))?;
    Ok(Labelled {
        graph,
        labelling: labelling.with_bipartition(sides),
    })
}

/// Six vertices and seven arcs with an oriented β-valuation that is not
/// oriented near-α.
pub fn six_vertex_oriented_beta() -> Result<OrientedLabelled> {
    let (digraph, labelling) = by_labels(
        &[0, 5, 3, 6, 4, 2],
        &[(0, 3), (2, 4), (2, 3), (0, 5), (0, 4), (6, 4), (6, 5)],
    )?;
    if !check_oriented_beta(&digraph, &labelling) {
        return Err(Error::Construction("six-vertex labelling is not oriented beta".into()));
    }
    Ok(OrientedLabelled {
        digraph,
        labelling,
        flipped: BTreeSet::new(),
    })
}

/// Six vertices and eight arcs with an oriented near-α-valuation.
pub fn six_vertex_oriented_near_alpha() -> Result<OrientedLabelled> {
    let (digraph, labelling) = by_labels(
        &[0, 4, 1, 7, 8, 5],
        &[(0, 7), (0, 8), (4, 8), (0, 5), (4, 7), (4, 5), (1, 7), (8, 1)],
    )?;
    let sides = check_oriented_near_alpha(&digraph, &labelling)
        .ok_or_else(|| Error::Construction("six-vertex labelling is not oriented near-alpha".into()))?;
    Ok(OrientedLabelled {
        digraph,
        labelling: labelling.with_bipartition(sides),
        flipped: BTreeSet::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples_build() {
        assert_eq!(five_vertex_near_alpha().unwrap().graph.edge_count(), 5);
        let b = six_vertex_oriented_beta().unwrap();
        assert_eq!(b.digraph.arc_count(), 7);
        assert!(check_oriented_near_alpha(&b.digraph, &b.labelling).is_none());
        assert_eq!(six_vertex_oriented_near_alpha().unwrap().digraph.arc_count(), 8);
    }
}
