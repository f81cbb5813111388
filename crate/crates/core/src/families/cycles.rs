use super::{checked_alpha, reorient, Labelled, OrientedLabelled};
use crate::error::{param, Result};
use crate::graph::{Digraph, Graph};

/// Two disjoint cycles of length `len`: `v0 .. v{len-1}` then `u0 .. u{len-1}`,
/// each listed in cycle order with its closing edge last.
pub fn two_cycles(len: usize) -> Result<Graph> {
    if len < 3 {
        return Err(param("cycles need at least 3 vertices"));
    }
    let names = (0..len)
        .map(|i| format!("v{i}"))
        .chain((0..len).map(|i| format!("u{i}")))
        .collect();
    let edges = (0..2 * len).map(|p| {
        let base = p / len * len;
        (p, base + (p - base + 1) % len)
    });
    Graph::new(names, edges)
}

fn clockwise(len: usize) -> Result<Digraph> {
    let g = two_cycles(len)?;
    Digraph::new(g.names().to_vec(), g.edges().iter().map(|&(a, b)| {
        // Closing edges were stored as (first, last); point them back to the first.
        if b == a + len - 1 && a % len == 0 {
            (b, a)
        } else {
            (a, b)
        }
    }))
}

const FOUR_K_TABLE: [(&[u64], &[u64]); 3] = [
    (&[0, 8, 1, 6], &[3, 7, 4, 5]),
    (
        &[0, 15, 1, 11, 2, 14, 3, 16],
        &[5, 12, 6, 10, 7, 9, 8, 13],
    ),
    (
        &[0, 23, 1, 22, 2, 16, 3, 21, 4, 20, 5, 24],
        &[7, 18, 8, 17, 9, 15, 10, 14, 11, 13, 12, 19],
    ),
];

/// Closed-form labels of two `4k`-cycles; valid for every `k >= 1`.
pub(crate) fn four_k_formula(k: u64) -> Vec<u64> {
    let len = 4 * k;
    let v = (0..len).map(|i| match i {
        _ if i == 2 * k => 5 * k + 1,
        _ if i % 2 == 1 => (i - 1) / 2,
        _ if i <= 2 * k - 2 => 8 * k - i / 2,
        _ => 8 * k - i / 2 + 1,
    });
    let u = (0..len).map(|i| match i {
        _ if i == 2 * k => 5 * k,
        _ if i % 2 == 1 => 2 * k + 1 + (i - 1) / 2,
        _ if i <= 2 * k - 2 => 6 * k + 1 - i / 2,
        _ => 6 * k - i / 2,
    });
    v.chain(u).collect()
}

/// Closed-form labels of two `(4k+2)`-cycles; valid for every `k >= 1`.
pub(crate) fn four_k_plus_two_formula(k: u64) -> Vec<u64> {
    let len = 4 * k + 2;
    let v = (0..len).map(|i| {
        if i % 2 == 0 {
            if i <= 2 * k - 2 {
                2 * k + 2 + i / 2
            } else {
                2 * k - i / 2
            }
        } else if i + 3 <= 2 * k {
            6 * k + 3 - (i - 1) / 2
        } else {
            6 * k + 3 + (i + 1) / 2
        }
    });
    let u = (0..len).map(|i| {
        if i % 2 == 0 {
            if i <= 2 * k + 2 {
                5 * k + 4 - i / 2
            } else {
                5 * k + 2 + i / 2
            }
        } else if i <= 2 * k + 1 {
            3 * k + 2 + (i - 1) / 2
        } else {
            3 * k + 1 - (i - 1) / 2
        }
    });
    v.chain(u).collect()
}

/// α-valuation of two `4k`-cycles: tables for `k <= 3`, closed form beyond.
pub fn two_cycles_alpha(k: usize) -> Result<Labelled> {
    if k == 0 {
        return Err(param("k must be at least 1"));
    }
    let labels = match FOUR_K_TABLE.get(k - 1) {
        Some((v, u)) => v.iter().chain(u.iter()).copied().collect(),
        None => four_k_formula(k as u64),
    };
    checked_alpha(two_cycles(4 * k)?, labels, "two 4k-cycles")
}

/// α-valuation of two `(4k+2)`-cycles: table for `k = 1`, closed form beyond.
pub fn two_cycles_alpha_4k2(k: usize) -> Result<Labelled> {
    if k == 0 {
        return Err(param("k must be at least 1"));
    }
    let labels = if k == 1 {
        vec![0, 11, 1, 10, 4, 12, 5, 9, 2, 7, 6, 8]
    } else {
        four_k_plus_two_formula(k as u64)
    };
    checked_alpha(two_cycles(4 * k + 2)?, labels, "two (4k+2)-cycles")
}

/// Both cycles oriented in their listed (clockwise) order, for any even
/// cycle length `len >= 4`.
pub fn two_cycles_clockwise(len: usize) -> Result<OrientedLabelled> {
    let base = match len % 4 {
        _ if len < 4 => return Err(param(format!("cycle length must be at least 4, got {len}"))),
        0 => two_cycles_alpha(len / 4)?,
        2 => two_cycles_alpha_4k2((len - 2) / 4)?,
        _ => return Err(param(format!("cycle length must be even, got {len}"))),
    };
    reorient(&base, &clockwise(len)?, "clockwise two cycles")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valuation::{arc_labels, check_alpha};

    #[test]
    fn tables_are_alpha() {
        for k in 1..=3 {
            assert!(two_cycles_alpha(k).is_ok());
        }
        let t = two_cycles_alpha(1).unwrap();
        assert_eq!(t.labelling.labels(), &[0, 8, 1, 6, 3, 7, 4, 5]);
        assert!(two_cycles_alpha_4k2(1).is_ok());
    }

    #[test]
    fn closed_forms_beyond_tables() {
        for k in 4..=8 {
            assert!(two_cycles_alpha(k).is_ok(), "4k, k = {k}");
        }
        for k in 2..=8 {
            assert!(two_cycles_alpha_4k2(k).is_ok(), "4k+2, k = {k}");
        }
    }

    #[test]
    fn closed_forms_also_cover_small_k() {
        for k in 1..=3 {
            let g = two_cycles(4 * k).unwrap();
            let b = crate::graph::Labelling::new(four_k_formula(k as u64));
            assert!(check_alpha(&g, &b).is_some(), "4k, k = {k}");
        }
        let g = two_cycles(6).unwrap();
        let b = crate::graph::Labelling::new(four_k_plus_two_formula(1));
        assert!(check_alpha(&g, &b).is_some());
    }

    #[test]
    fn clockwise_differences() {
        let c = two_cycles_clockwise(4).unwrap();
        assert_eq!(arc_labels(&c.digraph, &c.labelling), vec![8, 2, 5, 3, 4, 6, 1, 7]);
        assert_eq!(c.digraph.arcs()[3], (3, 0));
        for len in [6, 8, 10, 12, 14, 16, 18, 20] {
            let c = two_cycles_clockwise(len).unwrap();
            let n = c.digraph.arc_count();
            assert_eq!(n, 2 * len);
            for i in 0..2 * len {
                let (a, b) = c.digraph.arcs()[i];
                assert_eq!(b, a / len * len + (a % len + 1) % len);
            }
        }
        assert!(two_cycles_clockwise(5).is_err());
        assert!(two_cycles_clockwise(2).is_err());
    }
}
