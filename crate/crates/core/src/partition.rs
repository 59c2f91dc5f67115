//! Integer partitions, Young-diagram hook lengths and partition counting.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::series::{eta_quotient, EulerFactor};
use crate::{BigCount, Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
///
/// Ordering is lexicographic on the parts, so sorting descending gives
/// reverse-lexicographic order, e.g. `(3) > (2,1) > (1,1,1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with no zero entries.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part in {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    /// The unique partition of 0.
    pub fn empty() -> Self {
        Self {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram: `λ'_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut cols = Vec::with_capacity(width);
        for j in 1..=width {
            cols.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Self::from_sorted(cols)
    }

    /// All hook lengths `h(k,j) = (λ_k - k) + (λ'_j - j) + 1`, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n);
        for (k, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - k - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    pub fn hook_multiset(&self) -> HookMultiset {
        let mut counts = BTreeMap::new();
        for h in self.hook_lengths() {
            *counts.entry(h).or_insert(0) += 1;
        }
        HookMultiset {
            counts,
            total: self.n,
        }
    }

    /// True iff no hook length is divisible by `ell`.
    pub fn is_core(&self, ell: usize) -> bool {
        assert!(ell >= 2, "core modulus must be at least 2");
        self.hook_lengths().iter().all(|h| h % ell != 0)
    }

    /// True iff no part is divisible by `a` (not the repeated-parts convention).
    pub fn is_regular(&self, a: usize) -> bool {
        assert!(a >= 2, "regularity modulus must be at least 2");
        self.parts.iter().all(|p| p % a != 0)
    }

    /// Multiplicity of each part size, ascending by size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,4,1`, `(5,4,1)`, `5 4 1` or `()`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Multiset of hook lengths of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookMultiset {
    counts: BTreeMap<usize, usize>,
    total: usize,
}

impl HookMultiset {
    /// Hook length → multiplicity.
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// Number of cells.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn contains(&self, h: usize) -> bool {
        self.counts.contains_key(&h)
    }

    pub fn multiplicity(&self, h: usize) -> usize {
        self.counts.get(&h).copied().unwrap_or(0)
    }

    pub fn max(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// Product of all hook lengths.
    pub fn product(&self) -> BigUint {
        let mut acc = BigUint::from(1u32);
        for (&h, &m) in &self.counts {
            acc *= BigUint::from(h).pow(m as u32);
        }
        acc
    }

    /// Sorted (ascending) list of hook lengths with repetition.
    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.counts
            .iter()
            .flat_map(|(&h, &m)| std::iter::repeat_n(h, m))
            .collect()
    }
}

/// Partitions of `n` in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition::from_sorted(current))
    }
}

impl std::iter::FusedIterator for Partitions {}

fn successor(parts: &[usize]) -> Option<Vec<usize>> {
    let mut next = parts.to_vec();
    let mut freed = 0;
    while next.last() == Some(&1) {
        next.pop();
        freed += 1;
    }
    let last = next.pop()?;
    let x = last - 1;
    freed += 1;
    next.push(x);
    while freed >= x {
        next.push(x);
        freed -= x;
    }
    if freed > 0 {
        next.push(freed);
    }
    Some(next)
}

/// Every partition of `n` exactly once, in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

/// `p(0), …, p(n_max)` by Euler's pentagonal-number recurrence.
pub fn partition_counts(n_max: usize) -> Vec<BigCount> {
    let mut table: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    table.push(BigInt::from(1));
    for i in 1..=n_max {
        let mut sum = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let odd = k % 2 == 1;
            for g in [g1, g2] {
                if g <= i {
                    if odd {
                        sum += &table[i - g];
                    } else {
                        sum -= &table[i - g];
                    }
                }
            }
        }
        table.push(sum);
    }
    table.into_iter().map(to_count).collect()
}

/// `p(n)`, exact.
pub fn count_p(n: usize) -> BigCount {
    partition_counts(n).pop().expect("table has n+1 entries")
}

/// `p_A(0), …, p_A(n_max)` from `∏ (1 - q^{Ak}) / (1 - q^k)`.
pub fn regular_counts(n_max: usize, a: usize) -> Vec<BigCount> {
    assert!(a >= 2, "regularity modulus must be at least 2");
    eta_quotient(
        n_max,
        &[EulerFactor::new(1, -1), EulerFactor::new(a, 1)],
    )
    .into_iter()
    .map(to_count)
    .collect()
}

/// `p_A(n)`: partitions of `n` with no part divisible by `A`.
pub fn count_p_regular(n: usize, a: usize) -> BigCount {
    regular_counts(n, a).pop().expect("table has n+1 entries")
}

pub(crate) fn to_count(x: BigInt) -> BigCount {
    assert!(!x.is_negative(), "negative coefficient in a counting series");
    x.magnitude().clone()
}

/// Hardy–Ramanujan main term `exp(π√(2n/3)) / (4n√3)`.
pub fn hr_estimate(n: usize) -> f64 {
    assert!(n >= 1);
    let n = n as f64;
    (std::f64::consts::PI * (2.0 * n / 3.0).sqrt()).exp() / (4.0 * n * 3f64.sqrt())
}

/// Main term of Hagis' asymptotic for `p_A(n)`, without the `1 + O(n^{-1/2})` factor.
pub fn hagis_estimate(n: usize, a: usize) -> f64 {
    assert!(n >= 1 && a >= 2);
    let (n, a) = (n as f64, a as f64);
    let c = std::f64::consts::PI * (2.0f64 / 3.0).sqrt();
    let c_a = 12f64.sqrt() * a.powf(-0.75) * (a - 1.0).powf(0.25);
    let arg = (a - 1.0) / a * (n + (a - 1.0) / 24.0);
    c_a * (24.0 * n - 1.0 + a).powf(-0.75) * (c * arg.sqrt()).exp()
}
