use super::{Digraph, Graph};
use crate::error::{param, Result};

/// Correspondence between a graph and its blow-up: each original vertex owns
/// a run of consecutive new vertices, listed by child index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    children: Vec<Vec<usize>>,
    parent: Vec<usize>,
    index: Vec<usize>,
}

impl Replacement {
    fn from_sizes(sizes: &[usize]) -> Self {
        let mut children = Vec::with_capacity(sizes.len());
        let mut parent = Vec::new();
        let mut index = Vec::new();
        for (v, &k) in sizes.iter().enumerate() {
            let start = parent.len();
            children.push((start..start + k).collect());
            parent.extend(std::iter::repeat_n(v, k));
            index.extend(0..k);
        }
        Self {
            children,
            parent,
            index,
        }
    }

    /// Identity replacement on `n` vertices.
    pub fn identity(n: usize) -> Self {
        Self::from_sizes(&vec![1; n])
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn parent(&self, child: usize) -> usize {
        self.parent[child]
    }

    /// Position of `child` within its parent's run.
    pub fn child_index(&self, child: usize) -> usize {
        self.index[child]
    }

    pub fn original_count(&self) -> usize {
        self.children.len()
    }

    pub fn blown_count(&self) -> usize {
        self.parent.len()
    }

    /// Replacement for applying `self` and then `next` to the result.
    /// Children of an original vertex are listed in the order `next` lists them.
    pub fn then(&self, next: &Replacement) -> Replacement {
        let mut children = Vec::with_capacity(self.children.len());
        let mut parent = vec![0; next.blown_count()];
        let mut index = vec![0; next.blown_count()];
        for (v, mid) in self.children.iter().enumerate() {
            let run: Vec<usize> = mid
                .iter()
                .flat_map(|&c| next.children(c).iter().copied())
                .collect();
            for (i, &c) in run.iter().enumerate() {
                parent[c] = v;
                index[c] = i;
            }
            children.push(run);
        }
        Replacement {
            children,
            parent,
            index,
        }
    }
}

fn child_names(names: &[String], sizes: &[usize]) -> Vec<String> {
    names
        .iter()
        .zip(sizes)
        .flat_map(|(name, &k)| (0..k).map(move |i| format!("{name}.{i}")))
        .collect()
}

fn check_sizes(vertex_count: usize, sizes: &[usize]) -> Result<()> {
    if sizes.len() != vertex_count {
        return Err(param(format!(
            "{} blow-up sizes for {} vertices",
            sizes.len(),
            vertex_count
        )));
    }
    if let Some(v) = sizes.iter().position(|&k| k == 0) {
        return Err(param(format!("blow-up size 0 at vertex {v}")));
    }
    Ok(())
}

fn blown_pairs(
    pairs: &[(usize, usize)],
    rep: &Replacement,
) -> Vec<(usize, usize)> {
    pairs
        .iter()
        .flat_map(|&(u, v)| {
            rep.children(u)
                .iter()
                .flat_map(move |&a| rep.children(v).iter().map(move |&b| (a, b)))
        })
        .collect()
}

/// Replace each vertex `s` by `sizes[s]` independent vertices, joining two
/// runs completely whenever their parents are adjacent.
pub fn blow_up(g: &Graph, sizes: &[usize]) -> Result<(Graph, Replacement)> {
    check_sizes(g.vertex_count(), sizes)?;
    let rep = Replacement::from_sizes(sizes);
    let graph = Graph::new(child_names(g.names(), sizes), blown_pairs(g.edges(), &rep))?;
    Ok((graph, rep))
}

/// Oriented blow-up: every arc `(u, v)` becomes all arcs from the run of `u`
/// to the run of `v`.
pub fn digraph_blow_up(d: &Digraph, sizes: &[usize]) -> Result<(Digraph, Replacement)> {
    check_sizes(d.vertex_count(), sizes)?;
    let rep = Replacement::from_sizes(sizes);
    let digraph = Digraph::new(child_names(d.names(), sizes), blown_pairs(d.arcs(), &rep))?;
    Ok((digraph, rep))
}

/// Lexicographic product with the edgeless graph on `l` vertices. Vertex
/// `(x, i)` has index `x * l + i`.
pub fn lexicographic_with_empty(g: &Graph, l: usize) -> Result<Graph> {
    if l == 0 {
        return Err(param("lexicographic factor must be positive"));
    }
    let n = g.vertex_count();
    let names = (0..n * l)
        .map(|p| format!("({},{})", g.name(p / l), p % l))
        .collect();
    let mut edges = Vec::new();
    for p in 0..n * l {
        for q in p + 1..n * l {
            let (x, y) = (p / l, q / l);
            if x != y && g.has_edge(x, y) {
                edges.push((p, q));
            }
        }
    }
    Graph::new(names, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
        g.edges().iter().copied().collect()
    }

    fn cycle(m: usize) -> Graph {
        Graph::with_vertex_count(m, (0..m).map(|i| (i, (i + 1) % m))).unwrap()
    }

    #[test]
    fn unit_sizes_give_identity() {
        let g = cycle(5);
        let (h, rep) = blow_up(&g, &[1; 5]).unwrap();
        assert_eq!(edge_set(&h), edge_set(&g));
        assert_eq!(rep, Replacement::identity(5));
    }

    #[test]
    fn edge_blown_to_complete_bipartite() {
        let g = Graph::with_vertex_count(2, [(0, 1)]).unwrap();
        let (h, rep) = blow_up(&g, &[2, 3]).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.edge_count(), 6);
        for &a in rep.children(0) {
            for &b in rep.children(1) {
                assert!(h.has_edge(a, b));
            }
        }
        assert!(!h.has_edge(0, 1));
        assert_eq!(h.name(4), "v1.2");
    }

    #[test]
    fn balanced_c4_by_two() {
        let (h, _) = blow_up(&cycle(4), &[2; 4]).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (8, 16));
    }

    #[test]
    fn zero_size_rejected() {
        assert!(blow_up(&cycle(3), &[1, 0, 1]).is_err());
        assert!(blow_up(&cycle(3), &[1, 1]).is_err());
    }

    #[test]
    fn lexicographic_matches_balanced_blow_up() {
        for l in 1..4 {
            let g = cycle(4);
            let lex = lexicographic_with_empty(&g, l).unwrap();
            let (bl, _) = blow_up(&g, &vec![l; 4]).unwrap();
            assert_eq!(edge_set(&lex), edge_set(&bl));
        }
        let p2 = Graph::with_vertex_count(2, [(0, 1)]).unwrap();
        let lex = lexicographic_with_empty(&p2, 2).unwrap();
        // 2-regular and connected on 4 vertices: the 4-cycle 0-2-1-3.
        assert_eq!(lex.edge_count(), 4);
        assert!(lex.is_connected() && (0..4).all(|v| lex.degree(v) == 2));
        assert!(lex.bipartition().is_some());
        assert_eq!(lexicographic_with_empty(&cycle(4), 3).unwrap().edge_count(), 36);
    }

    #[test]
    fn digraph_blow_up_of_single_arc() {
        let d = Digraph::with_vertex_count(2, [(0, 1)]).unwrap();
        let (h, _) = digraph_blow_up(&d, &[1, 3]).unwrap();
        assert_eq!(h.arcs(), &[(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn composition_matches_product_sizes() {
        let g = cycle(4);
        let s1 = [1, 2, 3, 1];
        let (g1, r1) = blow_up(&g, &s1).unwrap();
        let s2: Vec<usize> = (0..g1.vertex_count()).map(|c| 1 + r1.parent(c) % 2).collect();
        let (g2, r2) = blow_up(&g1, &s2).unwrap();
        let whole = r1.then(&r2);
        let product: Vec<usize> = (0..4).map(|v| whole.children(v).len()).collect();
        let (direct, rd) = blow_up(&g, &product).unwrap();
        // Pair children by (parent, index).
        let pairing: Vec<usize> = (0..g2.vertex_count())
            .map(|c| rd.children(whole.parent(c))[whole.child_index(c)])
            .collect();
        let mapped: BTreeSet<_> = g2
            .edges()
            .iter()
            .map(|&(a, b)| (pairing[a].min(pairing[b]), pairing[a].max(pairing[b])))
            .collect();
        assert_eq!(mapped, edge_set(&direct));
    }
}
