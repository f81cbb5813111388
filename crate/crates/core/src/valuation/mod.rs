//! Valuation classes of labelled graphs and digraphs, and the transformations
//! that move between them.

mod transform;

use std::fmt;

use crate::graph::{Bipartition, Digraph, Graph, Labelling, Side};
use crate::zmod::sub_mod;

pub use crate::graph::tree::in_rosa_class_s24;
pub use transform::{
    affine_transform, enumerate_flip_family, flip_arcs, flip_units, near_alpha_weak_tensor,
    orient_towards, FlipFamily,
};

/// The strongest class a labelling was found to belong to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValuationClass {
    Beta,
    Alpha { threshold: u64 },
    NearAlpha(Bipartition),
    OrientedBeta,
    OrientedNearAlpha(Bipartition),
    None,
}

impl ValuationClass {
    pub fn name(&self) -> &'static str {
        match self {
            ValuationClass::Beta => "beta",
            ValuationClass::Alpha { .. } => "alpha",
            ValuationClass::NearAlpha(_) => "near-alpha",
            ValuationClass::OrientedBeta => "oriented-beta",
            ValuationClass::OrientedNearAlpha(_) => "oriented-near-alpha",
            ValuationClass::None => "none",
        }
    }
}

impl fmt::Display for ValuationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationClass::Alpha { threshold } => write!(f, "alpha (x = {threshold})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Absolute label differences along the edges, in edge order.
pub fn edge_labels(g: &Graph, b: &Labelling) -> Vec<u64> {
    g.edges()
        .iter()
        .map(|&(u, v)| b.label(u).abs_diff(b.label(v)))
        .collect()
}

/// Arc labels `b(head) - b(tail) mod n+1`, in arc order.
pub fn arc_labels(d: &Digraph, b: &Labelling) -> Vec<u64> {
    let modulus = d.arc_count() as u64 + 1;
    d.arcs()
        .iter()
        .map(|&(u, v)| sub_mod(b.label(v) % modulus, b.label(u) % modulus, modulus))
        .collect()
}

fn covers_once(labels: &[u64], n: u64) -> bool {
    let mut seen = vec![false; n as usize + 1];
    labels.len() as u64 == n
        && labels.iter().all(|&l| {
            (1..=n).contains(&l) && !std::mem::replace(&mut seen[l as usize], true)
        })
}

fn well_formed(vertex_count: usize, n: usize, b: &Labelling) -> bool {
    b.validate(vertex_count, n as u64).is_ok()
}

/// Graceful: edge differences are exactly 1..=n.
pub fn check_beta(g: &Graph, b: &Labelling) -> bool {
    well_formed(g.vertex_count(), g.edge_count(), b)
        && covers_once(&edge_labels(g, b), g.edge_count() as u64)
}

/// Smallest threshold `x` with every edge straddling it, for a β-valuation.
pub fn check_alpha(g: &Graph, b: &Labelling) -> Option<u64> {
    if !check_beta(g, b) || g.edge_count() == 0 {
        return None;
    }
    let lowest_top = g.edges().iter().map(|&(u, v)| b.label(u).max(b.label(v))).min()?;
    let x = g.edges().iter().map(|&(u, v)| b.label(u).min(b.label(v))).max()?;
    (x < lowest_top).then_some(x)
}

fn extremum_sides(vertex_count: usize, neighbours: impl Fn(usize) -> Vec<usize>, b: &Labelling) -> Option<Bipartition> {
    let sides = (0..vertex_count)
        .map(|v| {
            let nb = neighbours(v);
            if nb.iter().all(|&w| b.label(w) > b.label(v)) {
                Some(Side::Small)
            } else if nb.iter().all(|&w| b.label(w) < b.label(v)) {
                Some(Side::Large)
            } else {
                None
            }
        })
        .collect::<Option<Vec<_>>>()?;
    Some(Bipartition::new(sides))
}

/// β-valuation in which every vertex is a strict local minimum or maximum;
/// returns the induced small/large sides.
pub fn check_near_alpha(g: &Graph, b: &Labelling) -> Option<Bipartition> {
    if !check_beta(g, b) {
        return None;
    }
    extremum_sides(g.vertex_count(), |v| g.neighbors(v).to_vec(), b)
}

/// Arc differences modulo `n+1` are exactly the non-zero residues.
pub fn check_oriented_beta(d: &Digraph, b: &Labelling) -> bool {
    well_formed(d.vertex_count(), d.arc_count(), b)
        && covers_once(&arc_labels(d, b), d.arc_count() as u64)
}

pub fn check_oriented_near_alpha(d: &Digraph, b: &Labelling) -> Option<Bipartition> {
    if !check_oriented_beta(d, b) {
        return None;
    }
    extremum_sides(d.vertex_count(), |v| d.neighbors(v), b)
}

/// Strongest undirected class: alpha, then near-alpha, then beta.
pub fn classify_graph(g: &Graph, b: &Labelling) -> ValuationClass {
    if let Some(threshold) = check_alpha(g, b) {
        ValuationClass::Alpha { threshold }
    } else if let Some(sides) = check_near_alpha(g, b) {
        ValuationClass::NearAlpha(sides)
    } else if check_beta(g, b) {
        ValuationClass::Beta
    } else {
        ValuationClass::None
    }
}

/// Strongest oriented class: oriented near-alpha, then oriented beta.
pub fn classify_digraph(d: &Digraph, b: &Labelling) -> ValuationClass {
    if let Some(sides) = check_oriented_near_alpha(d, b) {
        ValuationClass::OrientedNearAlpha(sides)
    } else if check_oriented_beta(d, b) {
        ValuationClass::OrientedBeta
    } else {
        ValuationClass::None
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::tree::spider;

    fn path(m: usize) -> Graph {
        Graph::with_vertex_count(m, (0..m - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(m: usize) -> Graph {
        Graph::with_vertex_count(m, (0..m).map(|i| (i, (i + 1) % m))).unwrap()
    }

    fn lab(v: &[u64]) -> Labelling {
        Labelling::new(v.to_vec())
    }

    pub(crate) fn orbeta() -> (Digraph, Labelling) {
        let b = lab(&[0, 5, 3, 6, 4, 2]);
        // Arcs given by label pairs.
        let pairs = [(0, 3), (2, 4), (2, 3), (0, 5), (0, 4), (6, 4), (6, 5)];
        let at = |l: u64| b.vertex_with(l).unwrap();
        let d = Digraph::with_vertex_count(6, pairs.iter().map(|&(x, y)| (at(x), at(y)))).unwrap();
        (d, b)
    }

    pub(crate) fn oralp() -> (Digraph, Labelling) {
        let b = lab(&[0, 4, 1, 7, 8, 5]);
        let pairs = [(0, 7), (0, 8), (4, 8), (0, 5), (4, 7), (4, 5), (1, 7), (8, 1)];
        let at = |l: u64| b.vertex_with(l).unwrap();
        let d = Digraph::with_vertex_count(6, pairs.iter().map(|&(x, y)| (at(x), at(y)))).unwrap();
        (d, b)
    }

    #[test]
    fn beta_examples() {
        assert!(check_beta(&path(4), &lab(&[0, 3, 1, 2])));
        assert!(check_beta(&cycle(8), &lab(&[0, 8, 1, 7, 2, 5, 3, 4])));
        let two_edges = Graph::with_vertex_count(4, [(0, 1), (2, 3)]).unwrap();
        for a in 0..3u64 {
            for c in 0..3u64 {
                for e in 0..3u64 {
                    for f in 0..3u64 {
                        assert!(!check_beta(&two_edges, &lab(&[a, c, e, f])));
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_thresholds() {
        let k22 = Graph::with_vertex_count(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(check_alpha(&k22, &lab(&[0, 1, 2, 4])), Some(1));
        // Ladder on three rungs: u = (2,4,3), v = (7,0,6).
        let ladder = Graph::with_vertex_count(
            6,
            [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(check_alpha(&ladder, &lab(&[2, 4, 3, 7, 0, 6])), Some(3));
    }

    #[test]
    fn near_alpha_examples() {
        // Root, then middles (5,3,6), then leaves (4,1,2) on the matching legs.
        let s = spider(&[2, 2, 2]).unwrap();
        let b = lab(&[0, 5, 4, 3, 1, 6, 2]);
        let sides = check_near_alpha(&s, &b).unwrap();
        let small: Vec<u64> = sides.small().iter().map(|&v| b.label(v)).collect();
        assert_eq!(small, vec![0, 4, 1, 2]);
        assert_eq!(check_alpha(&s, &b), None);
        assert!(check_near_alpha(&path(3), &lab(&[1, 0, 2])).is_some());
        assert!(check_near_alpha(&path(4), &lab(&[0, 1, 3, 2])).is_none());
    }

    #[test]
    fn oriented_examples() {
        let (d, b) = orbeta();
        assert!(check_oriented_beta(&d, &b));
        assert!(!check_beta(&d.underlying().unwrap(), &b));
        assert_eq!(arc_labels(&d, &b), vec![3, 2, 1, 5, 4, 6, 7]);

        let (d, b) = oralp();
        let sides = check_oriented_near_alpha(&d, &b).unwrap();
        let small: Vec<u64> = sides.small().iter().map(|&v| b.label(v)).collect();
        assert_eq!(small, vec![0, 4, 1]);
        assert!(check_near_alpha(&d.underlying().unwrap(), &b).is_none());

        let c6 = lab(&[0, 6, 1, 4, 2, 3]);
        let d = Digraph::with_vertex_count(6, [(0, 1), (2, 1), (2, 3), (4, 3), (4, 5), (5, 0)]).unwrap();
        assert!(check_oriented_near_alpha(&d, &c6).is_some());
        let broken = d.with_reversed(&[0].into_iter().collect());
        assert!(check_oriented_near_alpha(&broken, &c6).is_none());
    }

    #[test]
    fn classify_picks_strongest() {
        assert_eq!(classify_graph(&path(2), &lab(&[0, 1])), ValuationClass::Alpha { threshold: 0 });
        assert_eq!(classify_graph(&path(3), &lab(&[0, 1, 2])), ValuationClass::None);
        let (d, b) = orbeta();
        assert_eq!(classify_digraph(&d, &b), ValuationClass::OrientedBeta);
    }
}
