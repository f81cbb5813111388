//! Exhaustive backtracking searches used as ground truth for the
//! constructors and checkers.

use rayon::prelude::*;

use crate::edf::EdfWitness;
use crate::error::{param, Error, Result};
use crate::graph::tree::enumerate_trees;
use crate::graph::{Digraph, Graph, Labelling};
use crate::valuation::{check_alpha, check_beta, check_near_alpha, check_oriented_beta};

pub const DEFAULT_MAX_VERTICES: usize = 12;
pub const MAX_SEARCH_ENV: &str = "EDF_FORGE_MAX_SEARCH";

/// Size bound for exhaustive search. Larger inputs are refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl SearchConfig {
    /// Default bound, raised or lowered by `EDF_FORGE_MAX_SEARCH` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_SEARCH_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|max_vertices| Self { max_vertices })
                .map_err(|_| param(format!("{MAX_SEARCH_ENV} must be a vertex count, got {v:?}"))),
            Err(_) => Ok(Self::default()),
        }
    }

    fn admit(&self, vertices: usize) -> Result<()> {
        if vertices > self.max_vertices {
            return Err(Error::SearchBound {
                vertices,
                bound: self.max_vertices,
            });
        }
        Ok(())
    }
}

/// Undirected valuation classes the graph search can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchClass {
    Beta,
    Alpha,
    NearAlpha,
}

impl std::str::FromStr for SearchClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "beta" => Ok(Self::Beta),
            "alpha" => Ok(Self::Alpha),
            "near-alpha" => Ok(Self::NearAlpha),
            _ => Err(param(format!("unknown search class {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Undirected(SearchClass),
    Oriented,
}

struct Problem {
    mode: Mode,
    modulus: u64,
    max_label: u64,
    order: Vec<usize>,
    /// Neighbours of each vertex; `true` when the arc points toward the neighbour.
    adjacency: Vec<Vec<(usize, bool)>>,
    edges: Vec<(usize, usize)>,
}

impl Problem {
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>, mode: Mode) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push((v, true));
            adjacency[v].push((u, false));
        }
        let mut order: Vec<usize> = (0..vertex_count).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(adjacency[v].len()));
        let n = edges.len() as u64;
        Self {
            mode,
            modulus: n + 1,
            max_label: n,
            order,
            adjacency,
            edges,
        }
    }

    fn difference(&self, from: u64, to: u64, forward: bool) -> u64 {
        match self.mode {
            Mode::Undirected(_) => from.abs_diff(to),
            Mode::Oriented if forward => (to + self.modulus - from) % self.modulus,
            Mode::Oriented => (from + self.modulus - to) % self.modulus,
        }
    }

    fn extremal(&self, w: usize, labels: &[Option<u64>]) -> bool {
        let Some(own) = labels[w] else { return true };
        let (mut lo, mut hi) = (false, false);
        for &(u, _) in &self.adjacency[w] {
            match labels[u] {
                Some(x) if x < own => lo = true,
                Some(_) => hi = true,
                None => {}
            }
        }
        !(lo && hi)
    }

    fn threshold_possible(&self, labels: &[Option<u64>]) -> bool {
        let mut low = 0;
        let mut high = u64::MAX;
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (labels[u], labels[v]) {
                low = low.max(a.min(b));
                high = high.min(a.max(b));
            }
        }
        low < high
    }

    fn consistent(&self, v: usize, labels: &[Option<u64>]) -> bool {
        let Mode::Undirected(class) = self.mode else {
            return true;
        };
        if class == SearchClass::Beta {
            return true;
        }
        let local = std::iter::once(v)
            .chain(self.adjacency[v].iter().map(|&(u, _)| u))
            .all(|w| self.extremal(w, labels));
        local && (class != SearchClass::Alpha || self.threshold_possible(labels))
    }

    /// Depth-first extension of a partial assignment at position `depth`.
    fn extend(
        &self,
        depth: usize,
        labels: &mut [Option<u64>],
        used: &mut [bool],
        diffs: &mut [bool],
        nodes: &mut u64,
    ) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let mut fresh = Vec::with_capacity(self.adjacency[v].len());
        for x in 0..=self.max_label {
            if used[x as usize] {
                continue;
            }
            *nodes += 1;
            fresh.clear();
            let mut ok = true;
            for &(u, forward) in &self.adjacency[v] {
                if let Some(y) = labels[u] {
                    let d = self.difference(x, y, forward);
                    if d == 0 || diffs[d as usize] || fresh.contains(&d) {
                        ok = false;
                        break;
                    }
                    fresh.push(d);
                }
            }
            if !ok {
                continue;
            }
            labels[v] = Some(x);
            if self.consistent(v, labels) {
                used[x as usize] = true;
                for &d in &fresh {
                    diffs[d as usize] = true;
                }
                if self.extend(depth + 1, labels, used, diffs, nodes) {
                    return true;
                }
                used[x as usize] = false;
                for &d in &fresh {
                    diffs[d as usize] = false;
                }
            }
            labels[v] = None;
        }
        false
    }

    fn run(&self) -> SearchOutcome {
        let vertices = self.adjacency.len();
        if vertices as u64 > self.max_label + 1 || vertices == 0 {
            return SearchOutcome {
                labelling: None,
                nodes: 0,
            };
        }
        let first = self.order[0];
        let branches: Vec<(Option<Vec<u64>>, u64)> = (0..=self.max_label)
            .into_par_iter()
            .map(|x| {
                let mut labels = vec![None; vertices];
                let mut used = vec![false; self.max_label as usize + 1];
                let mut diffs = vec![false; self.modulus as usize];
                labels[first] = Some(x);
                used[x as usize] = true;
                let mut nodes = 1;
                let found = self.extend(1, &mut labels, &mut used, &mut diffs, &mut nodes);
                let result = found.then(|| labels.iter().map(|l| l.expect("complete")).collect());
                (result, nodes)
            })
            .collect();
        let nodes = branches.iter().map(|b| b.1).sum();
        let labelling = branches.into_iter().find_map(|b| b.0).map(Labelling::new);
        SearchOutcome { labelling, nodes }
    }
}

/// Result of an exhaustive search. `labelling` is `None` only when the whole
/// space was explored without success.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub labelling: Option<Labelling>,
    pub nodes: u64,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.labelling.is_some()
    }
}

/// First labelling of `g` in the requested class, in search order:
/// vertices by descending degree, labels ascending.
pub fn search_graph(g: &Graph, class: SearchClass, config: &SearchConfig) -> Result<SearchOutcome> {
    config.admit(g.vertex_count())?;
    let problem = Problem::new(g.vertex_count(), g.edges().to_vec(), Mode::Undirected(class));
    let mut out = problem.run();
    if let Some(b) = out.labelling.take() {
        let accepted = match class {
            SearchClass::Beta => check_beta(g, &b),
            SearchClass::Alpha => check_alpha(g, &b).is_some(),
            SearchClass::NearAlpha => check_near_alpha(g, &b).is_some(),
        };
        if !accepted {
            return Err(Error::CheckFailed(format!("search produced a labelling the {class:?} checker rejects")));
        }
        out.labelling = Some(match check_near_alpha(g, &b) {
            Some(sides) if class != SearchClass::Beta => b.with_bipartition(sides),
            _ => b,
        });
    }
    Ok(out)
}

pub fn search_beta(g: &Graph, config: &SearchConfig) -> Result<SearchOutcome> {
    search_graph(g, SearchClass::Beta, config)
}

/// First oriented β-valuation of `d`, arc differences taken mod `n+1`.
pub fn search_oriented_beta(d: &Digraph, config: &SearchConfig) -> Result<SearchOutcome> {
    config.admit(d.vertex_count())?;
    let problem = Problem::new(d.vertex_count(), d.arcs().to_vec(), Mode::Oriented);
    let out = problem.run();
    if let Some(b) = &out.labelling {
        if !check_oriented_beta(d, b) {
            return Err(Error::CheckFailed("search produced a labelling the oriented beta checker rejects".into()));
        }
    }
    Ok(out)
}

/// Near-α search over every non-isomorphic tree of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReport {
    pub vertices: usize,
    pub trees: usize,
    pub failures: Vec<Graph>,
    pub nodes: u64,
}

impl TreeReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn exhaustive_trees_near_alpha(vertices: usize, config: &SearchConfig) -> Result<TreeReport> {
    config.admit(vertices)?;
    let trees = enumerate_trees(vertices)?;
    let outcomes = trees
        .iter()
        .map(|t| search_graph(t, SearchClass::NearAlpha, config))
        .collect::<Result<Vec<_>>>()?;
    Ok(TreeReport {
        vertices,
        trees: trees.len(),
        nodes: outcomes.iter().map(|o| o.nodes).sum(),
        failures: trees
            .into_iter()
            .zip(&outcomes)
            .filter(|(_, o)| !o.found())
            .map(|(t, _)| t)
            .collect(),
    })
}

/// Recount the EDF equation with plain loops over integers, independent of
/// the multiset code.
pub fn naive_edf_check(w: &EdfWitness) -> bool {
    let n = w.family.modulus() as usize;
    let sets = w.family.to_lists();
    let mut counts = vec![0u64; n];
    for &(i, j) in &w.digraph.arcs {
        let (Some(tail), Some(head)) = (sets.get(i), sets.get(j)) else {
            return false;
        };
        for &x in head {
            for &y in tail {
                counts[((x as usize + n) - y as usize) % n] += 1;
            }
        }
    }
    counts[0] == 0 && counts[1..].iter().all(|&c| c == w.params.lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, matching};
    use crate::graph::tree::spider;
    use crate::valuation::tests::orbeta;

    fn cfg() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn cycles_follow_residue_rule() {
        for m in 3..=9 {
            let found = search_beta(&cycle(m).unwrap(), &cfg()).unwrap().found();
            assert_eq!(found, m % 4 == 0 || m % 4 == 3, "C_{m}");
        }
    }

    #[test]
    fn spider_alpha_and_near_alpha() {
        let s = spider(&[2, 2, 2]).unwrap();
        assert!(!search_graph(&s, SearchClass::Alpha, &cfg()).unwrap().found());
        let near = search_graph(&s, SearchClass::NearAlpha, &cfg()).unwrap();
        assert!(near.labelling.unwrap().bipartition().is_some());
    }

    #[test]
    fn two_edges_have_no_beta() {
        assert!(!search_beta(&matching(2).unwrap(), &cfg()).unwrap().found());
    }

    #[test]
    fn oriented_small_cases() {
        let arc = Digraph::with_vertex_count(2, [(0, 1)]).unwrap();
        let out = search_oriented_beta(&arc, &cfg()).unwrap();
        assert_eq!(out.labelling.unwrap().labels(), &[0, 1]);
        let (d, _) = orbeta();
        assert!(search_oriented_beta(&d, &cfg()).unwrap().found());
    }

    #[test]
    fn unidirectional_triangle_matches_enumeration() {
        let d = Digraph::with_vertex_count(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let mut any = false;
        for a in 0..4u64 {
            for b in 0..4u64 {
                for c in 0..4u64 {
                    if a != b && b != c && a != c {
                        any |= check_oriented_beta(&d, &Labelling::new(vec![a, b, c]));
                    }
                }
            }
        }
        assert_eq!(search_oriented_beta(&d, &cfg()).unwrap().found(), any);
        assert!(!any);
    }

    #[test]
    fn bound_is_enforced() {
        let c = cycle(13).unwrap();
        assert!(matches!(search_beta(&c, &cfg()), Err(Error::SearchBound { vertices: 13, bound: 12 })));
        let small = SearchConfig { max_vertices: 4 };
        assert!(search_beta(&cycle(5).unwrap(), &small).is_err());
    }

    #[test]
    fn search_is_deterministic() {
        let c = cycle(8).unwrap();
        let a = search_beta(&c, &cfg()).unwrap();
        let b = search_beta(&c, &cfg()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn small_trees_all_near_alpha() {
        for n in 2..=7 {
            let r = exhaustive_trees_near_alpha(n, &cfg()).unwrap();
            assert!(r.all_pass());
        }
        assert_eq!(exhaustive_trees_near_alpha(7, &cfg()).unwrap().trees, 11);
    }
}
