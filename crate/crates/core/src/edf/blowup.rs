use super::{EdfWitness, SetFamily, WitnessDigraph};
use crate::error::{param, Error, Result};
use crate::graph::{
    blow_up, digraph_blow_up, natural_orientation, Bipartition, Digraph, Graph, Labelling,
    Replacement, Side,
};
use crate::valuation::{arc_labels, check_near_alpha, check_oriented_near_alpha};
use crate::zmod::ZSubset;

/// Which side of the bipartition is blown up first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum PassOrder {
    #[default]
    SmallFirst,
    LargeFirst,
}

impl PassOrder {
    fn sides(self) -> [Side; 2] {
        match self {
            PassOrder::SmallFirst => [Side::Small, Side::Large],
            PassOrder::LargeFirst => [Side::Large, Side::Small],
        }
    }
}

/// Graphs and digraphs that carry a near-α style labelling and can be blown up.
pub trait LabelledShape: Sized {
    fn vertex_count(&self) -> usize;
    /// Edge or arc count.
    fn size(&self) -> usize;
    /// Near-α sides for a graph, oriented near-α sides for a digraph.
    fn near_alpha_sides(&self, b: &Labelling) -> Option<Bipartition>;
    fn replace(&self, sizes: &[usize]) -> Result<(Self, Replacement)>;
}

impl LabelledShape for Graph {
    fn vertex_count(&self) -> usize {
        Graph::vertex_count(self)
    }

    fn size(&self) -> usize {
        self.edge_count()
    }

    fn near_alpha_sides(&self, b: &Labelling) -> Option<Bipartition> {
        check_near_alpha(self, b)
    }

    fn replace(&self, sizes: &[usize]) -> Result<(Self, Replacement)> {
        blow_up(self, sizes)
    }
}

impl LabelledShape for Digraph {
    fn vertex_count(&self) -> usize {
        Digraph::vertex_count(self)
    }

    fn size(&self) -> usize {
        self.arc_count()
    }

    fn near_alpha_sides(&self, b: &Labelling) -> Option<Bipartition> {
        check_oriented_near_alpha(self, b)
    }

    fn replace(&self, sizes: &[usize]) -> Result<(Self, Replacement)> {
        digraph_blow_up(self, sizes)
    }
}

/// A blown-up shape, its labelling, and the map from original vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlownLabelled<S> {
    pub shape: S,
    pub labelling: Labelling,
    pub replacement: Replacement,
}

fn blow_side<S: LabelledShape>(shape: &S, b: &Labelling, l: usize, side: Side) -> Result<BlownLabelled<S>> {
    if l == 0 {
        return Err(param("blow-up factor must be at least 1"));
    }
    if b.len() != shape.vertex_count() {
        return Err(param(format!(
            "labelling has {} entries for {} vertices",
            b.len(),
            shape.vertex_count()
        )));
    }
    let sides = shape
        .near_alpha_sides(b)
        .ok_or_else(|| param("labelling has no near-alpha bipartition"))?;
    let sizes: Vec<usize> = (0..shape.vertex_count())
        .map(|v| if sides.side(v) == side { l } else { 1 })
        .collect();
    let (out, replacement) = shape.replace(&sizes)?;
    let l = l as u64;
    let labels = (0..replacement.blown_count())
        .map(|c| {
            let v = replacement.parent(c);
            let i = replacement.child_index(c) as u64;
            let base = l * b.label(v);
            match (sides.side(v) == side, side) {
                (false, _) => base,
                (true, Side::Small) => base + i,
                (true, Side::Large) => base - i,
            }
        })
        .collect();
    let labelling = Labelling::new(labels);
    let sides = out.near_alpha_sides(&labelling).ok_or_else(|| {
        Error::CheckFailed(format!("blow-up of the {side:?} side lost the near-alpha property"))
    })?;
    Ok(BlownLabelled {
        shape: out,
        labelling: labelling.with_bipartition(sides),
        replacement,
    })
}

/// Replace every small vertex by `l` copies. Small `x` goes to `l·b(x) + i`,
/// large `y` to `l·b(y)`.
pub fn blow_up_labelled_small<S: LabelledShape>(shape: &S, b: &Labelling, l: usize) -> Result<BlownLabelled<S>> {
    blow_side(shape, b, l, Side::Small)
}

/// Replace every large vertex by `l` copies. Large `y` goes to `l·b(y) - i`,
/// small `x` to `l·b(x)`.
pub fn blow_up_labelled_large<S: LabelledShape>(shape: &S, b: &Labelling, l: usize) -> Result<BlownLabelled<S>> {
    blow_side(shape, b, l, Side::Large)
}

/// Both passes in the given order; every vertex ends up with `l` copies.
pub fn blow_up_labelled<S: LabelledShape>(
    shape: &S,
    b: &Labelling,
    l: usize,
    order: PassOrder,
) -> Result<BlownLabelled<S>> {
    let [first, second] = order.sides();
    let one = blow_side(shape, b, l, first)?;
    let two = blow_side(&one.shape, &one.labelling, l, second)?;
    Ok(BlownLabelled {
        replacement: one.replacement.then(&two.replacement),
        shape: two.shape,
        labelling: two.labelling,
    })
}

fn witness_from<S: LabelledShape>(h: &Digraph, b: &Labelling, blown: &BlownLabelled<S>, l: usize) -> Result<EdfWitness> {
    let l2 = (l * l) as u64;
    let modulus = h.arc_count() as u64 * l2 + 1;
    let sets = (0..h.vertex_count())
        .map(|v| {
            let labels = blown
                .replacement
                .children(v)
                .iter()
                .map(|&c| blown.labelling.label(c) as i64);
            ZSubset::new(modulus, labels)
        })
        .collect::<Result<Vec<_>>>()?;
    let family = SetFamily::new(modulus, sets)?;
    let expected = arc_labels(h, b)
        .into_iter()
        .map(|k| (l2 * (k - 1) + 1, l2 * k))
        .collect();
    let mut w = EdfWitness::new(WitnessDigraph::from(h), family, 1);
    w.expected_intervals = Some(expected);
    Ok(w)
}

/// `(n l² + 1, m, l, 1; H)`-EDF from a near-α-valuation of `g`, where `H`
/// is the natural orientation of `g`. Arc `k` of `H` receives exactly the
/// differences `l²(k-1)+1 ..= l²k`.
pub fn edf_from_near_alpha(g: &Graph, b: &Labelling, l: usize, order: PassOrder) -> Result<EdfWitness> {
    let blown = blow_up_labelled(g, b, l, order)?;
    let h = natural_orientation(g, b)?;
    witness_from(&h, b, &blown, l)
}

/// `(n l² + 1, m, l, 1; d)`-EDF from an oriented near-α-valuation of `d`.
pub fn edf_from_oriented_near_alpha(d: &Digraph, b: &Labelling, l: usize, order: PassOrder) -> Result<EdfWitness> {
    let blown = blow_up_labelled(d, b, l, order)?;
    witness_from(d, b, &blown, l)
}
