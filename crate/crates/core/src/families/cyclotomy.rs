use std::collections::BTreeSet;

use super::{Labelled, OrientedLabelled};
use crate::error::{param, Error, Result};
use crate::graph::{Digraph, Graph, Labelling};
use crate::valuation::{check_near_alpha, check_oriented_beta, check_oriented_near_alpha};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `alpha` generates the multiplicative group mod the prime `p`.
pub fn is_primitive_root(alpha: u64, p: u64) -> bool {
    if !is_prime(p) || alpha % p == 0 {
        return false;
    }
    if p == 2 {
        return true;
    }
    prime_factors(p - 1)
        .into_iter()
        .all(|q| pow_mod(alpha, (p - 1) / q, p) != 1)
}

pub fn smallest_primitive_root(p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(param(format!("{p} is not prime")));
    }
    (1..p)
        .find(|&a| is_primitive_root(a, p))
        .ok_or_else(|| param(format!("no primitive root mod {p}")))
}

/// Non-zero squares mod `p`.
pub fn nonzero_squares(p: u64) -> BTreeSet<u64> {
    (1..p).map(|x| x * x % p).collect()
}

/// Primes accepted by the cyclotomic tree construction.
pub fn valid_cyclotomic_prime(p: u64) -> bool {
    p >= 11 && is_prime(p) && p % 8 != 1 && p % 8 != 7
}

/// Tree on `p` vertices: root 0, first level the non-squares and the squares
/// above `p/2`, second level each square `s < p/2` hanging from `2s`.
/// Vertex `v` carries label `v`.
pub fn cyclotomic_near_alpha_tree(p: u64) -> Result<Labelled> {
    if !valid_cyclotomic_prime(p) {
        return Err(param(format!(
            "cyclotomic tree needs a prime p >= 11 with p != +-1 mod 8, got {p}"
        )));
    }
    let squares = nonzero_squares(p);
    let edges = (1..p).map(|x| {
        if squares.contains(&x) && 2 * x < p {
            (2 * x as usize, x as usize)
        } else {
            (0, x as usize)
        }
    });
    let graph = Graph::new((0..p).map(|x| format!("x{x}")).collect(), edges)?;
    let labelling = Labelling::new((0..p).collect());
    match check_near_alpha(&graph, &labelling) {
        Some(sides) => Ok(Labelled {
            graph,
            labelling: labelling.with_bipartition(sides),
        }),
        None => Err(Error::Construction(format!("cyclotomic tree for p = {p} is not near-alpha"))),
    }
}

/// Oriented β-valuation of the spider with `(p-1)/2` legs of length two.
/// Vertices: root, then `u_0 .. u_{h-1}`, then `v_0 .. v_{h-1}` with `h = (p-1)/2`.
pub fn star_path_oriented_beta(p: u64, alpha: Option<u64>) -> Result<OrientedLabelled> {
    if p < 3 || !is_prime(p) {
        return Err(param(format!("star-path construction needs an odd prime, got {p}")));
    }
    let alpha = match alpha {
        Some(a) if is_primitive_root(a, p) => a % p,
        Some(a) => return Err(param(format!("{a} is not a primitive root mod {p}"))),
        None => smallest_primitive_root(p)?,
    };
    let h = ((p - 1) / 2) as usize;
    let minus_one_square = nonzero_squares(p).contains(&((alpha + p - 1) % p));
    let power = |e: usize| pow_mod(alpha, e as u64, p);
    let (u_exp, v_exp): (fn(usize) -> usize, fn(usize) -> usize) = if minus_one_square {
        (|i| 2 * i + 1, |i| 2 * i)
    } else {
        (|i| 2 * i, |i| 2 * i + 1)
    };
    let mut labels = vec![0];
    labels.extend((0..h).map(|i| power(u_exp(i))));
    labels.extend((0..h).map(|i| power(v_exp(i))));
    let names = std::iter::once("r".to_string())
        .chain((0..h).map(|i| format!("u{i}")))
        .chain((0..h).map(|i| format!("v{i}")))
        .collect();
    let arcs = (0..h).map(|i| (0, 1 + i)).chain((0..h).map(|i| {
        let (u, v) = (1 + i, 1 + h + i);
        if minus_one_square {
            (v, u)
        } else {
            (u, v)
        }
    }));
    let digraph = Digraph::new(names, arcs)?;
    let labelling = Labelling::new(labels);
    if !check_oriented_beta(&digraph, &labelling) {
        return Err(Error::Construction(format!(
            "star-path labelling for p = {p}, alpha = {alpha} is not oriented beta"
        )));
    }
    let labelling = match check_oriented_near_alpha(&digraph, &labelling) {
        Some(sides) => labelling.with_bipartition(sides),
        None => labelling,
    };
    Ok(OrientedLabelled {
        digraph,
        labelling,
        flipped: BTreeSet::new(),
    })
}
