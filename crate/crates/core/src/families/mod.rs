//! Explicit labelled families: each constructor returns a graph or digraph
//! together with a labelling that the matching checker accepts.

mod cyclotomy;
mod cycles;
mod ladder;
mod small;
mod sun;

use std::collections::BTreeSet;

use crate::error::{param, Error, Result};
use crate::graph::{natural_orientation, Digraph, Graph, Labelling};
use crate::valuation::{check_alpha, check_oriented_near_alpha, flip_arcs, orient_towards};

pub use crate::edf::unidirectional_path_family;
pub use cyclotomy::{
    cyclotomic_near_alpha_tree, is_prime, is_primitive_root, nonzero_squares, pow_mod,
    smallest_primitive_root, star_path_oriented_beta, valid_cyclotomic_prime,
};
pub use cycles::{two_cycles, two_cycles_alpha, two_cycles_alpha_4k2, two_cycles_clockwise};
pub use ladder::{ladder, ladder_oriented};
pub use small::{five_vertex_near_alpha, six_vertex_oriented_beta, six_vertex_oriented_near_alpha};
pub use sun::{sun, sun_alpha, sun_semi_directed};

/// An undirected graph with a labelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labelled {
    pub graph: Graph,
    pub labelling: Labelling,
}

/// A digraph with a labelling, and the arc labels reversed relative to the
/// natural orientation when it was derived from one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedLabelled {
    pub digraph: Digraph,
    pub labelling: Labelling,
    pub flipped: BTreeSet<u64>,
}

/// Path on `m` vertices `v1 .. vm`.
pub fn path(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(param("a path needs at least 2 vertices"));
    }
    Graph::new(
        (1..=m).map(|i| format!("v{i}")).collect(),
        (0..m - 1).map(|i| (i, i + 1)),
    )
}

/// Cycle on `m` vertices `v1 .. vm`; the closing edge `{vm, v1}` is last.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(param("a cycle needs at least 3 vertices"));
    }
    Graph::new(
        (1..=m).map(|i| format!("v{i}")).collect(),
        (0..m).map(|i| (i, (i + 1) % m)),
    )
}

/// `K_{p,q}` with sides `v1..vp` then `u1..uq`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p == 0 || q == 0 {
        return Err(param("both sides of K_{p,q} must be non-empty"));
    }
    let names = (1..=p)
        .map(|i| format!("v{i}"))
        .chain((1..=q).map(|j| format!("u{j}")))
        .collect();
    let edges = (0..p).flat_map(|i| (0..q).map(move |j| (i, p + j)));
    Graph::new(names, edges)
}

/// Disjoint edges.
pub fn matching(count: usize) -> Result<Graph> {
    if count == 0 {
        return Err(param("a matching needs at least one edge"));
    }
    Graph::with_vertex_count(2 * count, (0..count).map(|i| (2 * i, 2 * i + 1)))
}

fn checked_alpha(graph: Graph, labels: Vec<u64>, what: &str) -> Result<Labelled> {
    let labelling = Labelling::new(labels);
    if check_alpha(&graph, &labelling).is_none() {
        return Err(Error::Construction(format!("{what} labelling is not an alpha-valuation")));
    }
    Ok(Labelled { graph, labelling })
}

pub fn path_alpha(m: usize) -> Result<Labelled> {
    let graph = path(m)?;
    let m = m as u64;
    let labels = (1..=m)
        .map(|i| if i % 2 == 1 { (i - 1) / 2 } else { m - i / 2 })
        .collect();
    checked_alpha(graph, labels, "path")
}

pub fn complete_bipartite_alpha(p: usize, q: usize) -> Result<Labelled> {
    let graph = complete_bipartite(p, q)?;
    let labels = (0..p as u64)
        .chain((1..=q as u64).map(|j| j * p as u64))
        .collect();
    checked_alpha(graph, labels, "complete bipartite")
}

fn cycle_labels(m: u64) -> Vec<u64> {
    (1..=m)
        .map(|i| {
            if i % 2 == 1 {
                (i - 1) / 2
            } else if i <= m / 2 {
                m + 1 - i / 2
            } else {
                m - i / 2
            }
        })
        .collect()
}

pub fn cycle_alpha(m: usize) -> Result<Labelled> {
    if m < 4 || m % 4 != 0 {
        return Err(param(format!(
            "cycle alpha-valuations need m divisible by 4, got {m}; for m = 2 mod 4 use the oriented cycle"
        )));
    }
    checked_alpha(cycle(m)?, cycle_labels(m as u64), "cycle")
}

/// Cycle with `m = 2 mod 4`: natural orientation with the closing arc reversed.
pub fn cycle_oriented_near_alpha(m: usize) -> Result<OrientedLabelled> {
    if m < 6 || m % 4 != 2 {
        return Err(param(format!("oriented cycle needs m = 2 mod 4 and m >= 6, got {m}")));
    }
    let graph = cycle(m)?;
    let labelling = Labelling::new(cycle_labels(m as u64));
    let natural = natural_orientation(&graph, &labelling)?;
    let flipped: BTreeSet<u64> = [m as u64 / 2].into_iter().collect();
    let digraph = flip_arcs(&natural, &labelling, &flipped)?;
    finish_oriented(digraph, labelling, flipped, "oriented cycle")
}

fn finish_oriented(
    digraph: Digraph,
    labelling: Labelling,
    flipped: BTreeSet<u64>,
    what: &str,
) -> Result<OrientedLabelled> {
    match check_oriented_near_alpha(&digraph, &labelling) {
        Some(sides) => Ok(OrientedLabelled {
            digraph,
            labelling: labelling.with_bipartition(sides),
            flipped,
        }),
        None => Err(Error::Construction(format!("{what} is not oriented near-alpha"))),
    }
}

/// Reorient a labelled graph's natural orientation to `target` by flipping
/// arc labels through [`flip_arcs`].
fn reorient(base: &Labelled, target: &Digraph, what: &str) -> Result<OrientedLabelled> {
    let natural = natural_orientation(&base.graph, &base.labelling)?;
    let (_, flipped) = orient_towards(&natural, &base.labelling, target)?;
    let digraph = flip_arcs(&natural, &base.labelling, &flipped)?;
    if digraph.arcs() != target.arcs() {
        return Err(Error::Construction(format!("{what}: flips did not reach the target orientation")));
    }
    finish_oriented(digraph, base.labelling.clone(), flipped, what)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{arc_labels, check_near_alpha, edge_labels};

    #[test]
    fn path_values() {
        assert_eq!(path_alpha(2).unwrap().labelling.labels(), &[0, 1]);
        let p4 = path_alpha(4).unwrap();
        assert_eq!(p4.labelling.labels(), &[0, 3, 1, 2]);
        assert_eq!(edge_labels(&p4.graph, &p4.labelling), vec![3, 2, 1]);
        assert_eq!(path_alpha(7).unwrap().labelling.labels(), &[0, 6, 1, 5, 2, 4, 3]);
        assert!(path_alpha(1).is_err());
    }

    #[test]
    fn complete_bipartite_values() {
        assert_eq!(complete_bipartite_alpha(1, 1).unwrap().labelling.labels(), &[0, 1]);
        let k = complete_bipartite_alpha(2, 2).unwrap();
        assert_eq!(k.labelling.labels(), &[0, 1, 2, 4]);
        assert_eq!(edge_labels(&k.graph, &k.labelling), vec![2, 4, 1, 3]);
        let k = complete_bipartite_alpha(3, 2).unwrap();
        assert_eq!(check_alpha(&k.graph, &k.labelling), Some(2));
        assert_eq!(edge_labels(&k.graph, &k.labelling), vec![3, 6, 2, 5, 1, 4]);
    }

    #[test]
    fn cycle_values() {
        let c4 = cycle_alpha(4).unwrap();
        assert_eq!(c4.labelling.labels(), &[0, 4, 1, 2]);
        assert_eq!(edge_labels(&c4.graph, &c4.labelling), vec![4, 3, 1, 2]);
        assert_eq!(cycle_alpha(8).unwrap().labelling.labels(), &[0, 8, 1, 7, 2, 5, 3, 4]);
        assert!(cycle_alpha(12).is_ok());
        assert!(cycle_alpha(6).is_err());
    }

    #[test]
    fn oriented_cycle_values() {
        let c6 = cycle_oriented_near_alpha(6).unwrap();
        assert_eq!(c6.labelling.labels(), &[0, 6, 1, 4, 2, 3]);
        assert_eq!(arc_labels(&c6.digraph, &c6.labelling), vec![6, 5, 3, 2, 1, 4]);
        assert!(c6.digraph.has_arc(5, 0));
        assert!(cycle_oriented_near_alpha(10).is_ok());
        assert!(cycle_oriented_near_alpha(4).is_err());
        assert!(check_near_alpha(&cycle(6).unwrap(), &c6.labelling).is_none());
    }

    #[test]
    fn matching_has_no_graceful_labelling_space() {
        let g = matching(2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 2));
    }
}
