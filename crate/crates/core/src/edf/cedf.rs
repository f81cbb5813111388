use super::{edf_from_oriented_near_alpha, EdfWitness, PassOrder, SetFamily, Verification, WitnessDigraph};
use crate::error::{param, Result};
use crate::families::{two_cycles_clockwise, OrientedLabelled};
use crate::zmod::{external_difference, multiset_union, ZMultiset, ZSubset};

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Result of checking the `c`-circular EDF equation both directly and
/// split into `gcd(c, m)` chains of indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CcedfReport {
    pub c: usize,
    pub chains: Vec<Vec<usize>>,
    pub blocks: Vec<ZMultiset>,
    pub witness: EdfWitness,
    pub verification: Verification,
    pub groupings_agree: bool,
    pub verified: bool,
}

/// Check that `Δ(A_{i+c}, A_i)` over all `i mod m` covers every non-zero
/// residue `lambda` times.
pub fn verify_ccedf(family: &SetFamily, c: usize, lambda: u64) -> Result<CcedfReport> {
    let m = family.len();
    if m < 2 {
        return Err(param("a circular family needs at least 2 sets"));
    }
    if c == 0 || c >= m {
        return Err(param(format!("shift c must lie in 1..{m}, got {c}")));
    }
    let arcs = (0..m).map(|i| (i, (i + c) % m)).collect();
    let names = (0..m).map(|i| format!("A{i}")).collect();
    let mut witness = EdfWitness::new(WitnessDigraph::new(names, arcs), family.clone(), lambda);
    witness.params.c = Some(c);
    let verification = witness.verify()?;

    let d = gcd(c, m);
    let chains: Vec<Vec<usize>> = (0..d)
        .map(|j| (0..m / d).map(|i| (i * c + j) % m).collect())
        .collect();
    let sets = family.sets();
    let blocks = chains
        .iter()
        .map(|chain| {
            let parts = chain
                .iter()
                .map(|&t| external_difference(&sets[(t + c) % m], &sets[t]))
                .collect::<Result<Vec<_>>>()?;
            multiset_union(&parts, Some(family.modulus()))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut covered: Vec<usize> = chains.iter().flatten().copied().collect();
    covered.sort_unstable();
    let partition = covered == (0..m).collect::<Vec<_>>();
    let groupings_agree = partition && multiset_union(&blocks, Some(family.modulus()))? == verification.union;
    let verified = verification.verified && groupings_agree;
    Ok(CcedfReport {
        c,
        chains,
        blocks,
        witness,
        verification,
        groupings_agree,
        verified,
    })
}

/// A 2-CEDF assembled from two clockwise cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCedf {
    pub source: OrientedLabelled,
    /// EDF over the two directed cycles before interleaving.
    pub witness: EdfWitness,
    /// `(A_0, B_0, A_1, B_1, ...)`.
    pub family: SetFamily,
    pub report: CcedfReport,
}

/// `(2 len l² + 1, 2 len, l, 1)`-2-CEDF for even `len >= 4`.
pub fn build_2cedf(len: usize, l: usize) -> Result<TwoCedf> {
    let source = two_cycles_clockwise(len)?;
    let witness = edf_from_oriented_near_alpha(&source.digraph, &source.labelling, l, PassOrder::SmallFirst)?;
    let sets = witness.family.sets();
    let interleaved: Vec<ZSubset> = (0..len)
        .flat_map(|i| [sets[i].clone(), sets[len + i].clone()])
        .collect();
    let family = SetFamily::new(witness.family.modulus(), interleaved)?;
    let report = verify_ccedf(&family, 2, 1)?;
    Ok(TwoCedf {
        source,
        witness,
        family,
        report,
    })
}

/// `((m-1) l² + 1, m, l, 1)`-EDF over the unidirectional path on `m` vertices,
/// `m` even. Even-indexed sets are arithmetic progressions with step `l`,
/// odd-indexed sets are runs of `l` consecutive residues.
pub fn unidirectional_path_family(m: usize, l: usize) -> Result<EdfWitness> {
    if m < 2 || m % 2 != 0 {
        return Err(param(format!("path family needs an even number of sets, got {m}")));
    }
    if l == 0 {
        return Err(param("set size must be at least 1"));
    }
    let l2 = (l * l) as i64;
    let modulus = (m as u64 - 1) * l2 as u64 + 1;
    let sets = (0..m)
        .map(|i| {
            let i64i = i as i64;
            let elems: Vec<i64> = (0..l as i64)
                .map(|j| {
                    if i % 2 == 0 {
                        i64i * l2 / 2 + j * l as i64
                    } else {
                        (m as i64 - (i64i + 1) / 2) * l2 - j
                    }
                })
                .collect();
            ZSubset::new(modulus, elems)
        })
        .collect::<Result<Vec<_>>>()?;
    let family = SetFamily::new(modulus, sets)?;
    let names = (0..m).map(|i| format!("A{i}")).collect();
    let arcs = (0..m - 1).map(|i| (i, i + 1)).collect();
    Ok(EdfWitness::new(WitnessDigraph::new(names, arcs), family, 1))
}
