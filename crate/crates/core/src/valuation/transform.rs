use std::collections::BTreeSet;

use super::{arc_labels, check_near_alpha, check_oriented_beta};
use crate::error::{param, Error, Result};
use crate::graph::{weak_tensor_product, Digraph, Graph, Labelling, Side, WeakTensor};
use crate::zmod::reduce;

/// Reverse, for each requested label `e`, the last arc (in arc order) that
/// currently carries `e`. The result must again be an oriented β-valuation.
pub fn flip_arcs(d: &Digraph, b: &Labelling, labels_to_flip: &BTreeSet<u64>) -> Result<Digraph> {
    let modulus = d.arc_count() as u64 + 1;
    let labels = arc_labels(d, b);
    let mut positions = BTreeSet::new();
    for &e in labels_to_flip {
        if e == 0 || e >= modulus {
            return Err(param(format!("label {e} is not a non-zero residue mod {modulus}")));
        }
        let pos = labels
            .iter()
            .rposition(|&l| l == e)
            .ok_or_else(|| param(format!("no arc is labelled {e} mod {modulus}")))?;
        positions.insert(pos);
    }
    let flipped = d.with_reversed(&positions);
    if !check_oriented_beta(&flipped, b) {
        return Err(Error::CheckFailed(format!(
            "flipping labels {labels_to_flip:?} does not give an oriented beta-valuation"
        )));
    }
    Ok(flipped)
}

/// Reorient `d` to match `target` (same underlying edges), returning the
/// reoriented digraph and the labels of the arcs that were reversed.
pub fn orient_towards(d: &Digraph, b: &Labelling, target: &Digraph) -> Result<(Digraph, BTreeSet<u64>)> {
    let labels = arc_labels(d, b);
    let mut positions = BTreeSet::new();
    let mut flipped_labels = BTreeSet::new();
    for (i, &(u, v)) in d.arcs().iter().enumerate() {
        if target.has_arc(v, u) {
            positions.insert(i);
            flipped_labels.insert(labels[i]);
        } else if !target.has_arc(u, v) {
            return Err(param(format!("target has no arc between {} and {}", d.name(u), d.name(v))));
        }
    }
    if target.arc_count() != d.arc_count() {
        return Err(param("target orientation has a different arc count"));
    }
    let out = d.with_reversed(&positions);
    if !check_oriented_beta(&out, b) {
        return Err(Error::CheckFailed(
            "target orientation is not an oriented beta-valuation".into(),
        ));
    }
    Ok((out, flipped_labels))
}

/// Independent flip units mod `n+1`: the pairs `{e, -e}` with `e < -e`,
/// and the self-negative label when `n+1` is even.
pub fn flip_units(n: u64) -> Vec<Vec<u64>> {
    let modulus = n + 1;
    (1..=n)
        .filter(|&e| 2 * e <= modulus)
        .map(|e| {
            if 2 * e == modulus {
                vec![e]
            } else {
                vec![e, modulus - e]
            }
        })
        .collect()
}

/// Lazily enumerated family of orientations reachable by flipping units.
#[derive(Debug, Clone)]
pub struct FlipFamily {
    base: Digraph,
    unit_positions: Vec<BTreeSet<usize>>,
    next: u64,
    end: u64,
}

impl FlipFamily {
    pub fn unit_count(&self) -> usize {
        self.unit_positions.len()
    }
}

impl Iterator for FlipFamily {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let positions: BTreeSet<usize> = self
            .unit_positions
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .flat_map(|(_, p)| p.iter().copied())
            .collect();
        Some(self.base.with_reversed(&positions))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for FlipFamily {}

/// Every orientation obtained by reversing any collection of flip units.
pub fn enumerate_flip_family(d: &Digraph, b: &Labelling) -> Result<FlipFamily> {
    if !check_oriented_beta(d, b) {
        return Err(param("flip family needs an oriented beta-valuation"));
    }
    let labels = arc_labels(d, b);
    let units = flip_units(d.arc_count() as u64);
    if units.len() >= 64 {
        return Err(param(format!("{} flip units is too many to enumerate", units.len())));
    }
    let unit_positions = units
        .iter()
        .map(|u| {
            u.iter()
                .map(|e| labels.iter().position(|l| l == e).expect("every label present"))
                .collect()
        })
        .collect();
    Ok(FlipFamily {
        base: d.clone(),
        unit_positions,
        next: 0,
        end: 1u64 << units.len(),
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `v -> k*b(v) + shift mod n+1` where `n` is the arc count of `d`.
pub fn affine_transform(d: &Digraph, b: &Labelling, k: i64, shift: i64) -> Result<Labelling> {
    let modulus = d.arc_count() as u64 + 1;
    let k = reduce(k, modulus);
    if gcd(k, modulus) != 1 {
        return Err(param(format!("multiplier {k} is not invertible mod {modulus}")));
    }
    let shift = reduce(shift, modulus);
    let labels = b
        .labels()
        .iter()
        .map(|&l| ((k as u128 * l as u128 + shift as u128) % modulus as u128) as u64)
        .collect();
    let out = Labelling::new(labels);
    if check_oriented_beta(d, b) && !check_oriented_beta(d, &out) {
        return Err(Error::CheckFailed("affine image lost the oriented beta property".into()));
    }
    Ok(out)
}

/// Labelling of the weak tensor product of two near-α-labelled graphs.
/// (small, small) pairs get `m*δ(w) + γ(v)` and (large, large) pairs get
/// `m*(δ(w) - 1) + γ(v)`, with `m` the edge count of the first factor.
pub fn near_alpha_weak_tensor(
    g: &Graph,
    gamma: &Labelling,
    h: &Graph,
    delta: &Labelling,
) -> Result<(WeakTensor, Labelling)> {
    let gs = check_near_alpha(g, gamma).ok_or_else(|| param("first factor is not near-alpha"))?;
    let hs = check_near_alpha(h, delta).ok_or_else(|| param("second factor is not near-alpha"))?;
    let product = weak_tensor_product(g, &gs, h, &hs)?;
    let m = g.edge_count() as u64;
    let labels = product
        .pairs
        .iter()
        .map(|&(v, w)| match gs.side(v) {
            Side::Small => m * delta.label(w) + gamma.label(v),
            Side::Large => m * (delta.label(w) - 1) + gamma.label(v),
        })
        .collect();
    let sigma = Labelling::new(labels);
    match check_near_alpha(&product.graph, &sigma) {
        Some(sides) => Ok((product, sigma.with_bipartition(sides))),
        None => Err(Error::CheckFailed("product labelling is not near-alpha".into())),
    }
}
