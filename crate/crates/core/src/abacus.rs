//! ℓ-abaci for ℓ-core partitions.
//!
//! A partition with `s` parts has structure numbers `B_i = λ_i - i + s`
//! (its first-column hook lengths). Writing `B_i = ℓ(r_i - 1) + c_i`, each
//! structure number becomes a bead in row `r_i` of rod `c_i`. A partition
//! is an ℓ-core exactly when every rod is filled from the top without gaps,
//! so an ℓ-core is described by its rod heights `(b_0, …, b_{ℓ-1})`.
//!
//! Two abaci `(b_0, …, b_{ℓ-1})` and `(b_{ℓ-1} + 1, b_0, …, b_{ℓ-2})` give
//! the same core; the canonical representative has `b_0 = 0`.

use std::collections::BTreeSet;
use std::fmt;

use crate::partition::{count_p, enumerate_partitions, to_count};
use crate::series::{eta_quotient, EulerFactor};
use crate::{BigCount, Error, Partition, Result};

/// Rod heights of a flush ℓ-abacus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Abacus {
    ell: usize,
    cols: Vec<usize>,
}

/// Strictly decreasing first-column hook lengths `B_1 > … > B_s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureNumbers(Vec<usize>);

impl StructureNumbers {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Rebuilds the partition via `λ_i = B_i + i - s`, dropping zero parts.
    pub fn to_partition(&self) -> Partition {
        beta_to_partition(&self.0)
    }
}

/// Structure numbers of `lam`; the empty partition has none.
pub fn structure_numbers(lam: &Partition) -> StructureNumbers {
    let s = lam.len();
    StructureNumbers(
        lam.parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part + s - (i + 1))
            .collect(),
    )
}

/// Partition from a beta-set given in strictly decreasing order.
pub(crate) fn beta_to_partition(beta: &[usize]) -> Partition {
    let s = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b + i + 1 - s)
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted(parts)
}

impl Abacus {
    pub fn new(ell: usize, cols: Vec<usize>) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidModulus {
                ell,
                reason: "abacus needs at least two rods",
            });
        }
        if cols.len() != ell {
            return Err(Error::InvalidAbacus(format!(
                "expected {ell} rods, got {}",
                cols.len()
            )));
        }
        Ok(Self { ell, cols })
    }

    /// The abacus with no beads, representing the empty partition.
    pub fn zero(ell: usize) -> Result<Self> {
        Self::new(ell, vec![0; ell])
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Total number of beads `s`.
    pub fn bead_count(&self) -> usize {
        self.cols.iter().sum()
    }

    pub fn is_canonical(&self) -> bool {
        self.cols[0] == 0
    }

    /// `(b_0, …, b_{ℓ-1}) ↦ (b_{ℓ-1} + 1, b_0, …, b_{ℓ-2})`: shift every bead
    /// one position and add a bead at position 0. Same core.
    pub fn rotate(&self) -> Abacus {
        let mut cols = Vec::with_capacity(self.ell);
        cols.push(self.cols[self.ell - 1] + 1);
        cols.extend_from_slice(&self.cols[..self.ell - 1]);
        Abacus {
            ell: self.ell,
            cols,
        }
    }

    /// Inverse of [`rotate`](Self::rotate) applied until rod 0 is empty.
    pub fn canonicalize(&self) -> Abacus {
        let mut cols = self.cols.clone();
        // Removing the bead at position 0 and shifting down by one is the
        // inverse rotation; each step drops one bead, so this terminates.
        while cols[0] > 0 {
            let b0 = cols.remove(0);
            cols.push(b0 - 1);
        }
        Abacus {
            ell: self.ell,
            cols,
        }
    }

    /// Bead positions `ℓ(m - 1) + i`, strictly decreasing.
    pub fn beta_set(&self) -> Vec<usize> {
        let mut beta: Vec<usize> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(i, &b)| (0..b).map(move |m| self.ell * m + i))
            .collect();
        beta.sort_unstable_by(|a, b| b.cmp(a));
        beta
    }

    /// `|λ| = Σ B_k - s(s-1)/2`, summed rod by rod.
    ///
    /// Also valid for non-canonical flush abaci, since rotation does not
    /// change the represented partition.
    pub fn size(&self) -> usize {
        let ell = self.ell as u128;
        let mut sum_b: u128 = 0;
        for (i, &b) in self.cols.iter().enumerate() {
            let b = b as u128;
            sum_b += ell * b * (b.saturating_sub(1)) / 2 + i as u128 * b;
        }
        let s = self.bead_count() as u128;
        (sum_b - s * s.saturating_sub(1) / 2) as usize
    }

    pub fn to_partition(&self) -> Result<Partition> {
        from_abacus(self)
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, b) in self.cols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// Canonical abacus of an ℓ-core.
pub fn to_abacus(lam: &Partition, ell: usize) -> Result<Abacus> {
    if ell < 2 {
        return Err(Error::InvalidModulus {
            ell,
            reason: "abacus needs at least two rods",
        });
    }
    let mut cols = vec![0usize; ell];
    let beta: BTreeSet<usize> = structure_numbers(lam).0.into_iter().collect();
    for &b in &beta {
        cols[b % ell] += 1;
    }
    // Flush test: rod c holds exactly the positions c, c+ℓ, …, c+ℓ(b_c - 1).
    let flush = beta.iter().all(|&b| b < ell || beta.contains(&(b - ell)));
    if !flush {
        return Err(Error::NotACore { ell });
    }
    Ok(Abacus::new(ell, cols)?.canonicalize())
}

/// The ℓ-core represented by a canonical abacus.
pub fn from_abacus(ab: &Abacus) -> Result<Partition> {
    if !ab.is_canonical() {
        return Err(Error::NonCanonicalAbacus { beads: ab.cols[0] });
    }
    Ok(beta_to_partition(&ab.beta_set()))
}

/// `|from_abacus(ab)|` without materialising the partition.
pub fn abacus_size(ab: &Abacus) -> usize {
    ab.size()
}

/// Visits every ℓ-core of size `≤ bound` as `(size, canonical abacus)`.
///
/// Cores are enumerated through their charge vectors: integer vectors
/// `c ∈ Z^ℓ` with `Σ c_i = 0`, mapped to the flush abacus with rod heights
/// `c_i + M`. The size is `(ℓ/2) Σ c_i² + Σ i c_i`, which after scaling by
/// `2ℓ` is `Σ (ℓc_i + i)² - Σ i²`; partial sums of the squares prune the
/// search.
pub fn for_each_core_abacus(bound: usize, ell: usize, mut visit: impl FnMut(usize, Abacus)) {
    assert!(ell >= 2, "core modulus must be at least 2");
    let l = ell as i64;
    let shift: i64 = (0..l).map(|i| i * i).sum();
    let budget = 2 * l * bound as i64 + shift;
    let mut charges = vec![0i64; ell];
    charge_search(0, l, budget, 0, &mut charges, &mut |charges| {
        let scaled: i64 = charges
            .iter()
            .enumerate()
            .map(|(i, &c)| (l * c + i as i64).pow(2))
            .sum::<i64>()
            - shift;
        debug_assert!(scaled >= 0 && scaled % (2 * l) == 0);
        let size = (scaled / (2 * l)) as usize;
        if size > bound {
            return;
        }
        let lift = -charges.iter().copied().min().unwrap_or(0);
        let cols = charges.iter().map(|&c| (c + lift) as usize).collect();
        let ab = Abacus { ell, cols }.canonicalize();
        visit(size, ab);
    });
}

fn charge_search(
    i: usize,
    l: i64,
    budget: i64,
    partial_sum: i64,
    charges: &mut [i64],
    leaf: &mut impl FnMut(&[i64]),
) {
    let ell = charges.len();
    if i == ell - 1 {
        let c = -partial_sum;
        let term = (l * c + i as i64).pow(2);
        if term <= budget {
            charges[i] = c;
            leaf(charges);
        }
        return;
    }
    // Lower bound on the squares still to come, by Cauchy–Schwarz on the
    // remaining coordinates j > i whose charges must sum to -(partial + c).
    let rest = (ell - i - 1) as i64;
    let rest_offset: i64 = ((i + 1) as i64..l).sum();
    let isqrt = (budget as f64).sqrt() as i64 + 1;
    let lo = (-isqrt - i as i64) / l - 1;
    let hi = (isqrt - i as i64) / l + 1;
    for c in lo..=hi {
        let term = (l * c + i as i64).pow(2);
        if term > budget {
            continue;
        }
        let remaining_sum = l * -(partial_sum + c) + rest_offset;
        let floor = (remaining_sum * remaining_sum + rest - 1) / rest;
        if term + floor > budget {
            continue;
        }
        charges[i] = c;
        charge_search(i + 1, l, budget - term, partial_sum + c, charges, leaf);
    }
}

/// All ℓ-cores of each size `0..=bound`, each list in reverse-lexicographic order.
pub fn cores_up_to(bound: usize, ell: usize) -> Vec<Vec<Partition>> {
    let mut by_size = vec![Vec::new(); bound + 1];
    for_each_core_abacus(bound, ell, |size, ab| {
        let lam = from_abacus(&ab).expect("canonical by construction");
        debug_assert_eq!(lam.size(), size);
        by_size[size].push(lam);
    });
    for v in &mut by_size {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    by_size
}

/// ℓ-cores of `n` from abacus enumeration, reverse-lexicographic.
pub fn enumerate_cores_by_abacus(n: usize, ell: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_core_abacus(n, ell, |size, ab| {
        if size == n {
            out.push(from_abacus(&ab).expect("canonical by construction"));
        }
    });
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// ℓ-cores of `n` by filtering all partitions of `n`, reverse-lexicographic.
pub fn enumerate_cores_by_filter(n: usize, ell: usize) -> Vec<Partition> {
    enumerate_partitions(n).filter(|p| p.is_core(ell)).collect()
}

/// Above this many partitions of `n`, core enumeration goes through abaci.
pub const FILTER_CROSSOVER: u64 = 1_000_000;

/// Every ℓ-core of `n` exactly once, reverse-lexicographic.
pub fn enumerate_cores(n: usize, ell: usize) -> Vec<Partition> {
    assert!(ell >= 2, "core modulus must be at least 2");
    if count_p(n) > BigCount::from(FILTER_CROSSOVER) {
        enumerate_cores_by_abacus(n, ell)
    } else {
        enumerate_cores_by_filter(n, ell)
    }
}

/// `c_t(0), …, c_t(n_max)` from `∏ (1 - q^{tk})^t / (1 - q^k)`.
///
/// `t` need not be prime.
pub fn core_counts(n_max: usize, t: usize) -> Vec<BigCount> {
    assert!(t >= 1, "core modulus must be positive");
    eta_quotient(
        n_max,
        &[EulerFactor::new(1, -1), EulerFactor::new(t, t as i32)],
    )
    .into_iter()
    .map(to_count)
    .collect()
}

/// `c_t(n)`, exact.
pub fn count_cores(n: usize, t: usize) -> BigCount {
    core_counts(n, t).pop().expect("table has n+1 entries")
}

/// Certificate that an abacus satisfies the gap condition of the bead-jump
/// argument, with a part of the core that is divisible by ℓ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeadJump {
    /// Every rod height is `≤ k` or `≥ k + ℓ`.
    pub k: usize,
    /// A rod with height `≥ k + ℓ`.
    pub column: usize,
    /// A part of the partition divisible by ℓ.
    pub part: usize,
}

/// Smallest `k ≥ 0` such that every rod `1..ℓ` has height `≤ k` or `≥ k + ℓ`,
/// with at least one tall rod, together with the divisible part it forces.
///
/// The part is located among the beads of the tall rod in rows
/// `k+1 ..= k+ℓ`; their parts run through all residues mod ℓ when ℓ is prime.
/// Returns `None` when no such `k` exists (or, for composite ℓ, when no
/// divisible part turns up among those beads).
pub fn bead_jump_witness(ab: &Abacus) -> Option<BeadJump> {
    let ell = ab.ell;
    let rods = &ab.cols[1..];
    let max = rods.iter().copied().max().unwrap_or(0);
    let k = (0..=max).find(|&k| {
        rods.iter().all(|&b| b <= k || b >= k + ell) && rods.iter().any(|&b| b >= k + ell)
    })?;
    let column = 1 + rods.iter().position(|&b| b >= k + ell)?;

    let beta = ab.beta_set();
    let s = beta.len();
    (k..k + ell).find_map(|row| {
        let pos = ell * row + column;
        let idx = beta.iter().position(|&b| b == pos)?;
        let part = pos + idx + 1 - s;
        (part > 0 && part % ell == 0).then_some(BeadJump { k, column, part })
    })
}

/// Exchanges rods `i < j` where `b_j < b_i`; the resulting core is strictly larger.
pub fn swap_columns(ab: &Abacus, i: usize, j: usize) -> Result<Abacus> {
    if !(1 <= i && i < j && j < ab.ell && ab.cols[j] < ab.cols[i]) {
        return Err(Error::SwapPrecondition { i, j });
    }
    let mut cols = ab.cols.clone();
    cols.swap(i, j);
    Ok(Abacus { ell: ab.ell, cols })
}

/// `N_ℓ = (ℓ⁶ - 2ℓ⁵ + 2ℓ⁴ - 3ℓ² + 2ℓ) / 24`.
pub fn n_ell(ell: usize) -> u64 {
    assert!(ell >= 2);
    let l = ell as u128;
    let num = l.pow(6) + 2 * l.pow(4) + 2 * l - 2 * l.pow(5) - 3 * l.pow(2);
    debug_assert_eq!(num % 24, 0);
    (num / 24) as u64
}

/// `(0, ℓ-1, 2(ℓ-1), …, (ℓ-1)²)`: dominates every weakly increasing abacus
/// of an ℓ-regular ℓ-core.
pub fn extremal_abacus(ell: usize) -> Abacus {
    assert!(ell >= 2);
    Abacus {
        ell,
        cols: (0..ell).map(|i| i * (ell - 1)).collect(),
    }
}

/// Largest `n ≤ bound` that has a partition which is both an ℓ-core and
/// ℓ-regular, by exhaustive scan.
pub fn search_max_regular_core(ell: usize, bound: usize) -> Option<usize> {
    regular_core_sizes(ell, bound).into_iter().next_back()
}

/// Every `n` in `1..=bound` admitting an ℓ-regular ℓ-core, ascending.
pub fn regular_core_sizes(ell: usize, bound: usize) -> BTreeSet<usize> {
    let mut sizes = BTreeSet::new();
    for_each_core_abacus(bound, ell, |size, ab| {
        if size == 0 || sizes.contains(&size) {
            return;
        }
        let lam = from_abacus(&ab).expect("canonical by construction");
        if lam.is_regular(ell) {
            sizes.insert(size);
        }
    });
    sizes
}
