//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.
//!
//! Border strips are found on the beta-set of `λ`: removing a strip of
//! length `k` moves one bead from position `B` to an empty position `B - k`,
//! and the height of the strip is the number of beads strictly between.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::abacus::{beta_to_partition, structure_numbers};
use crate::{BigCount, CharValue, Error, Partition, Result};

/// A character table entry `χ_λ(μ)` with `|λ| = |μ|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharQuery {
    lam: Partition,
    mu: Partition,
}

impl CharQuery {
    pub fn new(lam: Partition, mu: Partition) -> Result<Self> {
        if lam.size() != mu.size() {
            return Err(Error::SizeMismatch {
                lam: lam.size(),
                mu: mu.size(),
            });
        }
        Ok(Self { lam, mu })
    }

    pub fn lam(&self) -> &Partition {
        &self.lam
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }
}

/// A rim hook of `λ` together with what is left after removing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderStrip {
    pub length: usize,
    /// Rows spanned minus one.
    pub height: usize,
    pub remainder: Partition,
}

/// Every border strip of length `k` in `lam`.
pub fn border_strips(lam: &Partition, k: usize) -> Vec<BorderStrip> {
    if k == 0 {
        return Vec::new();
    }
    let beta = structure_numbers(lam);
    let beta = beta.values();
    let mut strips = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        // beta is strictly decreasing: beads above `target` start at index 0.
        let passed = beta.partition_point(|&x| x > target);
        if passed < beta.len() && beta[passed] == target {
            continue;
        }
        let height = passed - idx - 1;
        let mut moved: Vec<usize> = beta.to_vec();
        moved.remove(idx);
        moved.insert(passed - 1, target);
        strips.push(BorderStrip {
            length: k,
            height,
            remainder: beta_to_partition(&moved),
        });
    }
    strips
}

/// Memoised evaluation of one character-table column `χ_·(μ)`.
///
/// The memo is keyed on (remaining shape, parts of `μ` consumed) and lives
/// as long as the evaluator, so reuse one evaluator for all rows of a
/// column and drop it before moving to the next.
#[derive(Debug)]
pub struct ColumnEvaluator {
    parts: Vec<usize>,
    size: usize,
    memo: HashMap<(Vec<usize>, usize), BigInt>,
}

impl ColumnEvaluator {
    pub fn new(mu: &Partition) -> Self {
        // Partition parts are already largest-first.
        Self {
            parts: mu.parts().to_vec(),
            size: mu.size(),
            memo: HashMap::new(),
        }
    }

    pub fn column_size(&self) -> usize {
        self.size
    }

    pub fn eval(&mut self, lam: &Partition) -> Result<CharValue> {
        if lam.size() != self.size {
            return Err(Error::SizeMismatch {
                lam: lam.size(),
                mu: self.size,
            });
        }
        Ok(self.eval_from(lam, 0))
    }

    fn eval_from(&mut self, lam: &Partition, consumed: usize) -> BigInt {
        if consumed == self.parts.len() {
            debug_assert!(lam.is_empty());
            return BigInt::one();
        }
        let key = (lam.parts().to_vec(), consumed);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let k = self.parts[consumed];
        let mut total = BigInt::zero();
        for strip in border_strips(lam, k) {
            let sub = self.eval_from(&strip.remainder, consumed + 1);
            if strip.height % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Exact `χ_λ(μ)`.
pub fn mn_character(q: &CharQuery) -> CharValue {
    ColumnEvaluator::new(&q.mu)
        .eval(&q.lam)
        .expect("sizes checked by CharQuery")
}

/// True when some part of `μ` is not a hook length of `λ`, which forces
/// `χ_λ(μ) = 0`. A false result says nothing.
pub fn quick_vanish(q: &CharQuery) -> bool {
    let hooks = q.lam.hook_multiset();
    q.mu.parts().iter().any(|&m| !hooks.contains(m))
}

/// `f^λ = n! / ∏ h`.
pub fn dimension(lam: &Partition) -> BigCount {
    factorial(lam.size()) / lam.hook_multiset().product()
}

/// `z_μ = ∏ i^{m_i} m_i!`.
pub fn centralizer_order(mu: &Partition) -> BigCount {
    mu.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (i, m)| {
            acc * BigUint::from(i).pow(m as u32) * factorial(m)
        })
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}
