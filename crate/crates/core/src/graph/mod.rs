//! Finite simple graphs, oriented digraphs and vertex labellings.
//!
//! Vertices are identified by their index in creation order; names are kept
//! only for display and export. Every construction that maps one graph onto
//! another returns the explicit vertex correspondence, and equality claims are
//! checked through that correspondence rather than by isomorphism search.

mod blowup;
mod product;
pub mod tree;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use blowup::{blow_up, digraph_blow_up, lexicographic_with_empty, Replacement};
pub use product::{weak_tensor_product, WeakTensor};

/// Side of a bipartition. For valuation witnesses `Small` is V_small;
/// for general bipartite witnesses it plays the role of the first side S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Small,
    Large,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Small => Side::Large,
            Side::Large => Side::Small,
        }
    }
}

/// A two-colouring of the vertex set, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    sides: Vec<Side>,
}

/// Bipartition used as a witness that a graph is bipartite (sides S and T).
pub type BipartiteWitness = Bipartition;

impl Bipartition {
    pub fn new(sides: Vec<Side>) -> Self {
        Self { sides }
    }

    /// Bipartition of `vertex_count` vertices with the listed ones on the small side.
    pub fn from_small(vertex_count: usize, small: &[usize]) -> Self {
        let mut sides = vec![Side::Large; vertex_count];
        for &v in small {
            sides[v] = Side::Small;
        }
        Self { sides }
    }

    pub fn side(&self, v: usize) -> Side {
        self.sides[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.sides
    }

    pub fn len(&self) -> usize {
        self.sides.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sides.is_empty()
    }

    pub fn small(&self) -> Vec<usize> {
        self.members(Side::Small)
    }

    pub fn large(&self) -> Vec<usize> {
        self.members(Side::Large)
    }

    pub fn members(&self, side: Side) -> Vec<usize> {
        (0..self.sides.len()).filter(|&v| self.sides[v] == side).collect()
    }

    /// Sides cover all vertices and every edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.sides.len() == g.vertex_count()
            && g.edges().iter().all(|&(u, v)| self.sides[u] != self.sides[v])
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<()> {
    if u >= n || v >= n {
        return Err(Error::InvalidGraph(format!(
            "edge ({u},{v}) refers to a vertex outside 0..{n}"
        )));
    }
    if u == v {
        return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
    }
    Ok(())
}

/// A finite simple graph with no loops and no isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph; edges are stored as `(min, max)` in the given order.
    pub fn new<I>(names: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = names.len();
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            check_pair(n, u, v)?;
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {{{},{}}}",
                    names[e.0], names[e.1]
                )));
            }
            stored.push(e);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        if let Some(v) = (0..n).find(|&v| adjacency[v].is_empty()) {
            return Err(Error::InvalidGraph(format!("isolated vertex {}", names[v])));
        }
        Ok(Self {
            names,
            edges: stored,
            adjacency,
        })
    }

    /// Graph on vertices named `v0 .. v{n-1}`.
    pub fn with_vertex_count<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(&v)
    }

    /// Connected components; each listed in BFS order from its smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Two-colouring with the first vertex of each component on the S side,
    /// or `None` when the graph has an odd cycle.
    pub fn bipartition(&self) -> Option<BipartiteWitness> {
        let n = self.vertex_count();
        let mut side: Vec<Option<Side>> = vec![None; n];
        for comp in self.components() {
            let root = comp[0];
            side[root] = Some(Side::Small);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].expect("coloured before enqueue");
                for &w in &self.adjacency[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(su.opposite());
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(Bipartition::new(side.into_iter().map(|s| s.unwrap()).collect()))
    }

    /// Disjoint union; the other graph's vertices follow this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + offset, v + offset)));
        Graph::new(names, edges).expect("union of valid graphs is valid")
    }

    /// Orient each edge as `(u, v)` or `(v, u)` according to `towards_second`.
    pub fn orient<F>(&self, mut towards_second: F) -> Digraph
    where
        F: FnMut(usize, usize) -> bool,
    {
        let arcs = self
            .edges
            .iter()
            .map(|&(u, v)| if towards_second(u, v) { (u, v) } else { (v, u) });
        Digraph::new(self.names.clone(), arcs).expect("orientation of a simple graph is oriented")
    }
}

/// An oriented graph: no loops, and at most one of `(u, v)`, `(v, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    names: Vec<String>,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new<I>(names: Vec<String>, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = names.len();
        let mut seen = HashSet::new();
        let mut stored = Vec::new();
        for (u, v) in arcs {
            check_pair(n, u, v)?;
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!(
                    "arc ({},{}) duplicates or opposes an existing arc",
                    names[u], names[v]
                )));
            }
            stored.push((u, v));
        }
        Ok(Self {
            names,
            arcs: stored,
        })
    }

    pub fn with_vertex_count<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new((0..n).map(|i| format!("v{i}")).collect(), arcs)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Underlying undirected graph, edges in arc order.
    pub fn underlying(&self) -> Result<Graph> {
        Graph::new(self.names.clone(), self.arcs.iter().copied())
    }

    /// Neighbours in the underlying graph.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Copy with the arcs at the given positions reversed.
    pub fn with_reversed(&self, positions: &BTreeSet<usize>) -> Digraph {
        let arcs = self.arcs.iter().enumerate().map(|(i, &(u, v))| {
            if positions.contains(&i) {
                (v, u)
            } else {
                (u, v)
            }
        });
        Digraph::new(self.names.clone(), arcs).expect("reversal keeps the digraph oriented")
    }

    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let offset = self.vertex_count();
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let arcs = self
            .arcs
            .iter()
            .copied()
            .chain(other.arcs.iter().map(|&(u, v)| (u + offset, v + offset)));
        Digraph::new(names, arcs).expect("union of valid digraphs is valid")
    }
}

/// An injective vertex labelling, indexed by vertex, with an optional
/// small/large bipartition attached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labelling {
    labels: Vec<u64>,
    bipartition: Option<Bipartition>,
}

impl Labelling {
    pub fn new(labels: Vec<u64>) -> Self {
        Self {
            labels,
            bipartition: None,
        }
    }

    pub fn with_bipartition(mut self, b: Bipartition) -> Self {
        self.bipartition = Some(b);
        self
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.labels.len());
        self.labels.iter().all(|l| seen.insert(*l))
    }

    /// Complete, injective, and bounded by `max_label` (inclusive).
    pub fn validate(&self, vertex_count: usize, max_label: u64) -> Result<()> {
        if self.labels.len() != vertex_count {
            return Err(Error::InvalidLabelling(format!(
                "{} labels for {} vertices",
                self.labels.len(),
                vertex_count
            )));
        }
        if let Some(&l) = self.labels.iter().find(|&&l| l > max_label) {
            return Err(Error::InvalidLabelling(format!(
                "label {l} exceeds {max_label}"
            )));
        }
        if !self.is_injective() {
            return Err(Error::InvalidLabelling("labels are not distinct".into()));
        }
        if let Some(b) = &self.bipartition {
            if b.len() != vertex_count {
                return Err(Error::InvalidLabelling(
                    "bipartition does not cover every vertex".into(),
                ));
            }
        }
        Ok(())
    }

    /// Vertex carrying the given label, if any.
    pub fn vertex_with(&self, label: u64) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ")")
    }
}

/// Orient every edge towards its endpoint with the larger label.
pub fn natural_orientation(g: &Graph, b: &Labelling) -> Result<Digraph> {
    b.validate(g.vertex_count(), u64::MAX)?;
    Ok(g.orient(|u, v| b.label(u) < b.label(v)))
}
