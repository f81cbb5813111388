//! Trees: recognition, distances, Rosa's S(2,4) test, and isomorphism-free
//! enumeration through canonical encodings rooted at the centre.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::Graph;
use crate::error::{param, Result};

pub fn is_tree(g: &Graph) -> bool {
    g.vertex_count() >= 2 && g.edge_count() + 1 == g.vertex_count() && g.is_connected()
}

fn distances(adj: &[Vec<usize>], alive: &[bool], from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[from] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &w in &adj[u] {
            if alive[w] && dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Largest distance between two vertices; `None` for disconnected graphs.
pub fn diameter(g: &Graph) -> Option<usize> {
    let adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    let alive = vec![true; adj.len()];
    let mut best = 0;
    for v in 0..adj.len() {
        for d in distances(&adj, &alive, v) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Vertices remaining after one round of leaf removal.
fn strip_leaves(adj: &[Vec<usize>], alive: &[bool]) -> Vec<bool> {
    let degree = |v: usize| adj[v].iter().filter(|&&w| alive[w]).count();
    let count = alive.iter().filter(|&&a| a).count();
    (0..adj.len())
        .map(|v| alive[v] && (count == 1 || degree(v) > 1))
        .collect()
}

fn is_path(adj: &[Vec<usize>], alive: &[bool]) -> bool {
    let count = alive.iter().filter(|&&a| a).count();
    let edges: usize = (0..adj.len())
        .filter(|&v| alive[v])
        .map(|v| adj[v].iter().filter(|&&w| alive[w]).count())
        .sum::<usize>()
        / 2;
    let max_degree = (0..adj.len())
        .filter(|&v| alive[v])
        .map(|v| adj[v].iter().filter(|&&w| alive[w]).count())
        .max()
        .unwrap_or(0);
    count >= 1 && edges + 1 == count && max_degree <= 2
}

/// Membership in Rosa's class S(2,4): diameter 4, stripping the leaves
/// leaves a non-path, stripping again leaves a single vertex.
pub fn in_rosa_class_s24(g: &Graph) -> bool {
    if !is_tree(g) || diameter(g) != Some(4) {
        return false;
    }
    let adj: Vec<Vec<usize>> = (0..g.vertex_count()).map(|v| g.neighbors(v).to_vec()).collect();
    let once = strip_leaves(&adj, &vec![true; adj.len()]);
    if is_path(&adj, &once) {
        return false;
    }
    let twice = strip_leaves(&adj, &once);
    twice.iter().filter(|&&a| a).count() == 1
}

/// Centre of a tree: one or two vertices.
pub fn centre(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            alive[v] = false;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    (0..n).filter(|&v| alive[v]).collect()
}

fn encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut parts: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| encode(g, w, Some(v)))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

/// Canonical string of a tree: equal strings iff isomorphic trees.
pub fn canonical_form(g: &Graph) -> String {
    centre(g)
        .into_iter()
        .map(|c| encode(g, c, None))
        .min()
        .unwrap_or_default()
}

/// Relabel a tree in BFS order from its (first) centre.
fn normalise(g: &Graph) -> Graph {
    let root = centre(g)[0];
    let n = g.vertex_count();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        let mut kids: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !seen[w]).collect();
        kids.sort_by_key(|&w| std::cmp::Reverse(g.degree(w)));
        for w in kids {
            seen[w] = true;
            queue.push_back(w);
        }
    }
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let edges: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (rank[u].min(rank[v]), rank[u].max(rank[v])))
        .collect();
    Graph::with_vertex_count(n, edges).expect("relabelled tree is valid")
}

/// All trees on `n` vertices up to isomorphism, for `n >= 2`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n < 2 {
        return Err(param("trees are enumerated from 2 vertices"));
    }
    let mut level = vec![Graph::with_vertex_count(2, [(0, 1)]).unwrap()];
    for size in 3..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.vertex_count() {
                let edges = t.edges().iter().copied().chain([(v, size - 1)]);
                let grown = Graph::with_vertex_count(size, edges).expect("leaf extension is a tree");
                if seen.insert(canonical_form(&grown)) {
                    next.push(normalise(&grown));
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Spider: a root joined to one path per entry of `legs` (leg lengths in edges).
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(param("spider legs must be non-empty with positive lengths"));
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::with_vertex_count(next, edges)
}
