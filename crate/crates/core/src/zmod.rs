//! Residue arithmetic and multiset bookkeeping over the cyclic group Z_n.
//!
//! Every correctness claim made elsewhere in the crate (valuations, blow-ups,
//! difference families) is eventually reduced to an equation between
//! [`ZMultiset`]s.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Reduce an arbitrary integer into `{0, .., n-1}`.
pub fn reduce(value: i64, modulus: u64) -> u64 {
    debug_assert!(modulus > 0);
    (value as i128).rem_euclid(modulus as i128) as u64
}

/// Difference `x - y` taken in Z_n, for residues already in range.
pub fn sub_mod(x: u64, y: u64, modulus: u64) -> u64 {
    let (x, y) = (x % modulus, y % modulus);
    if x >= y {
        x - y
    } else {
        modulus - (y - x)
    }
}

/// A sorted set of distinct residues of Z_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZSubset {
    modulus: u64,
    elements: Vec<u64>,
}

impl ZSubset {
    /// Builds a subset from arbitrary integers, reducing each mod `modulus`.
    /// Two inputs that collide after reduction are an error.
    pub fn new<I>(modulus: u64, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut elements: Vec<u64> = elements.into_iter().map(|e| reduce(e, modulus)).collect();
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateResidue {
                residue: w[0],
                modulus,
            });
        }
        Ok(Self { modulus, elements })
    }

    pub fn from_residues<I>(modulus: u64, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Self::new(
            modulus,
            elements.into_iter().map(|e| (e % modulus) as i64),
        )
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, residue: u64) -> bool {
        self.elements.binary_search(&residue).is_ok()
    }

    pub fn is_disjoint(&self, other: &ZSubset) -> bool {
        self.elements.iter().all(|e| !other.contains(*e))
    }
}

impl fmt::Display for ZSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// A multiset of residues mod n, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZMultiset {
    modulus: u64,
    counts: BTreeMap<u64, u64>,
    total: u64,
}

/// The first residue at which a multiset fails to be a λ-cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverDefect {
    pub residue: u64,
    pub count: u64,
    pub expected: u64,
}

impl fmt::Display for CoverDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "residue {} occurs {} time(s), expected {}",
            self.residue, self.count, self.expected
        )
    }
}

impl ZMultiset {
    pub fn empty(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Self {
            modulus,
            counts: BTreeMap::new(),
            total: 0,
        })
    }

    /// Multiset of the given integers reduced mod `modulus`, with repetition.
    pub fn from_values<I>(modulus: u64, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let mut m = Self::empty(modulus)?;
        for v in values {
            m.add(reduce(v, modulus), 1);
        }
        Ok(m)
    }

    /// Multiset from explicit `(residue, multiplicity)` pairs.
    pub fn from_counts<I>(modulus: u64, counts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut m = Self::empty(modulus)?;
        for (r, c) in counts {
            m.add(r % modulus, c);
        }
        Ok(m)
    }

    fn add(&mut self, residue: u64, count: u64) {
        if count == 0 {
            return;
        }
        *self.counts.entry(residue).or_insert(0) += count;
        self.total += count;
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn count(&self, residue: u64) -> u64 {
        self.counts.get(&(residue % self.modulus)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of distinct residues present.
    pub fn support_len(&self) -> usize {
        self.counts.len()
    }

    /// `(residue, multiplicity)` pairs in ascending residue order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&r, &c)| (r, c))
    }

    /// True iff 0 is absent and every non-zero residue occurs exactly `lambda` times.
    pub fn is_lambda_cover(&self, lambda: u64) -> bool {
        self.cover_defect(lambda).is_none()
    }

    /// Locates the smallest residue violating the λ-cover condition.
    pub fn cover_defect(&self, lambda: u64) -> Option<CoverDefect> {
        let n = self.modulus;
        if self.count(0) != 0 {
            return Some(CoverDefect {
                residue: 0,
                count: self.count(0),
                expected: 0,
            });
        }
        if lambda == 0 {
            return self.counts.iter().next().map(|(&r, &c)| CoverDefect {
                residue: r,
                count: c,
                expected: 0,
            });
        }
        // Walk residues 1..n in order; any gap or wrong count is reported.
        let mut expected_next = 1u64;
        for (&r, &c) in &self.counts {
            if r > expected_next {
                return Some(CoverDefect {
                    residue: expected_next,
                    count: 0,
                    expected: lambda,
                });
            }
            if c != lambda {
                return Some(CoverDefect {
                    residue: r,
                    count: c,
                    expected: lambda,
                });
            }
            expected_next = r + 1;
        }
        if expected_next < n {
            return Some(CoverDefect {
                residue: expected_next,
                count: 0,
                expected: lambda,
            });
        }
        None
    }

    /// If this multiset is exactly the integer interval `[lo, hi]` (each
    /// residue once, no wrap-around), returns the endpoints.
    pub fn as_interval(&self) -> Option<(u64, u64)> {
        let lo = *self.counts.keys().next()?;
        let hi = *self.counts.keys().next_back()?;
        let width = hi - lo + 1;
        let exact = self.total == width
            && self.counts.len() as u64 == width
            && self.counts.values().all(|&c| c == 1);
        exact.then_some((lo, hi))
    }

    /// Residues with their repetitions, ascending.
    pub fn to_sorted_vec(&self) -> Vec<u64> {
        self.counts
            .iter()
            .flat_map(|(&r, &c)| std::iter::repeat_n(r, c as usize))
            .collect()
    }
}

/// Δ(A, B) = { x − y : x ∈ A, y ∈ B } as a multiset mod n.
pub fn external_difference(a: &ZSubset, b: &ZSubset) -> Result<ZMultiset> {
    if a.modulus != b.modulus {
        return Err(Error::ModulusMismatch {
            left: a.modulus,
            right: b.modulus,
        });
    }
    let n = a.modulus;
    let mut m = ZMultiset::empty(n)?;
    for &x in &a.elements {
        for &y in &b.elements {
            m.add(sub_mod(x, y, n), 1);
        }
    }
    Ok(m)
}

/// Pointwise sum of multiplicities. An empty list requires `modulus`.
pub fn multiset_union(parts: &[ZMultiset], modulus: Option<u64>) -> Result<ZMultiset> {
    let n = match (parts.first(), modulus) {
        (Some(first), Some(n)) if first.modulus != n => {
            return Err(Error::ModulusMismatch {
                left: n,
                right: first.modulus,
            })
        }
        (Some(first), _) => first.modulus,
        (None, Some(n)) => n,
        (None, None) => return Err(Error::EmptyUnion),
    };
    let mut out = ZMultiset::empty(n)?;
    for p in parts {
        if p.modulus != n {
            return Err(Error::ModulusMismatch {
                left: n,
                right: p.modulus,
            });
        }
        for (r, c) in p.iter() {
            out.add(r, c);
        }
    }
    Ok(out)
}

/// Lazily rendered summary of a multiset: an interval when it is one,
/// otherwise the explicit residue list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DifferenceSummary {
    Interval { lo: u64, hi: u64 },
    Residues(Vec<u64>),
}

impl DifferenceSummary {
    pub fn of(m: &ZMultiset) -> Self {
        match m.as_interval() {
            Some((lo, hi)) => Self::Interval { lo, hi },
            None => Self::Residues(m.to_sorted_vec()),
        }
    }
}

impl fmt::Display for DifferenceSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Interval { lo, hi } => write!(f, "[{lo},{hi}]"),
            Self::Residues(rs) => {
                write!(f, "{{")?;
                for (i, r) in rs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{r}")?;
                }
                write!(f, "}}")
            }
        }
    }
}
