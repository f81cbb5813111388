use super::{BipartiteWitness, Graph, Side};
use crate::error::{param, Result};

/// Weak tensor product of two bipartite graphs.
///
/// Vertices are the pairs (small, small) followed by the pairs (large, large),
/// each block in row-major order; `pairs[i]` gives the factor vertices of
/// product vertex `i`. `(x, y)` and `(u, v)` are adjacent iff `x ~ u` and `y ~ v`.
#[derive(Debug, Clone)]
pub struct WeakTensor {
    pub graph: Graph,
    pub pairs: Vec<(usize, usize)>,
}

pub fn weak_tensor_product(
    g: &Graph,
    gw: &BipartiteWitness,
    h: &Graph,
    hw: &BipartiteWitness,
) -> Result<WeakTensor> {
    if !gw.is_valid_for(g) {
        return Err(param("bipartition is not valid for the first factor"));
    }
    if !hw.is_valid_for(h) {
        return Err(param("bipartition is not valid for the second factor"));
    }
    if g.edge_count() == 0 || h.edge_count() == 0 {
        return Err(param("weak tensor product of an edgeless factor has isolated vertices"));
    }
    let mut pairs = Vec::new();
    for side in [Side::Small, Side::Large] {
        for x in gw.members(side) {
            for y in hw.members(side) {
                pairs.push((x, y));
            }
        }
    }
    let position = |x: usize, y: usize| pairs.iter().position(|&p| p == (x, y));
    let mut edges = Vec::with_capacity(g.edge_count() * h.edge_count());
    for &(a, b) in g.edges() {
        let (x, u) = if gw.side(a) == Side::Small { (a, b) } else { (b, a) };
        for &(c, d) in h.edges() {
            let (y, v) = if hw.side(c) == Side::Small { (c, d) } else { (d, c) };
            let p = position(x, y).expect("small pair present");
            let q = position(u, v).expect("large pair present");
            edges.push((p, q));
        }
    }
    let names = pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", g.name(x), h.name(y)))
        .collect();
    let graph = Graph::new(names, edges)?;
    Ok(WeakTensor { graph, pairs })
}
