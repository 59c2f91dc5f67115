//! Zero counts in character tables with ℓ-core row index, and the sweep
//! that tabulates them.
//!
//! - `Z_ℓ(n)`: pairs `(λ, μ)` with `λ` an ℓ-core of `n`, `μ ⊢ n`, `χ_λ(μ) = 0`.
//! - `Z*_ℓ(n)`: the same with `μ` also an ℓ-core.
//!
//! Exact counts evaluate one column `χ_·(μ)` per task, so columns can be
//! spread across worker threads without sharing any memo state.

mod cache;
mod record;
pub mod verify;

use std::fs;
use std::io::BufWriter;
use std::path::PathBuf;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rayon::prelude::*;

use crate::abacus::{core_counts, enumerate_cores, n_ell};
use crate::characters::{quick_vanish, CharQuery, ColumnEvaluator};
use crate::numtheory::{is_prime, main_term_with, EllParams};
use crate::partition::{enumerate_partitions, partition_counts, regular_counts};
use crate::{BigCount, Error, Partition, Result};

pub use cache::{CacheKind, ColumnCache};
pub use record::{write_records, CensusRecord, Format, CSV_HEADER};

/// Default largest `n` for [`z_exact`].
pub const DEFAULT_CAP_EXACT: usize = 18;
/// Default largest `n` for [`z_star_exact`].
pub const DEFAULT_CAP_STAR: usize = 60;

/// `(p(n) - p_ℓ(n)) · c_ℓ(n)`: every non-ℓ-regular `μ` vanishes on every ℓ-core.
pub fn z_lower_bound(n: usize, ell: usize) -> BigCount {
    let p = partition_counts(n).pop().expect("n+1 entries");
    let p_reg = regular_counts(n, ell).pop().expect("n+1 entries");
    let c = core_counts(n, ell).pop().expect("n+1 entries");
    (p - p_reg) * c
}

/// Number of rows in `rows` on which column `mu` vanishes.
fn column_zeros(rows: &[Partition], mu: &Partition, prefilter: bool) -> u64 {
    let mut evaluator = ColumnEvaluator::new(mu);
    rows.iter()
        .filter(|lam| {
            if prefilter {
                let q = CharQuery::new((*lam).clone(), mu.clone()).expect("equal sizes");
                if quick_vanish(&q) {
                    return true;
                }
            }
            evaluator
                .eval(lam)
                .expect("equal sizes")
                .eq(&BigInt::from(0))
        })
        .count() as u64
}

fn column_counts(
    rows: &[Partition],
    cols: &[Partition],
    prefilter: bool,
    kind: CacheKind,
    n: usize,
    ell: usize,
    cache: Option<&ColumnCache>,
) -> Result<Vec<u64>> {
    if let Some(cache) = cache {
        if let Some(hit) = cache.load(kind, n, ell)? {
            if hit.len() == cols.len() {
                return Ok(hit);
            }
            return Err(Error::CorruptCache {
                path: cache.path(kind, n, ell),
                reason: format!("{} columns cached, {} expected", hit.len(), cols.len()),
            });
        }
    }
    let counts: Vec<u64> = cols
        .par_iter()
        .map(|mu| column_zeros(rows, mu, prefilter))
        .collect();
    if let Some(cache) = cache {
        cache.store(kind, n, ell, &counts)?;
    }
    Ok(counts)
}

/// Per-column zero counts of `Z_ℓ(n)`, columns in reverse-lexicographic order.
pub fn z_exact_columns(
    n: usize,
    ell: usize,
    cap: usize,
    cache: Option<&ColumnCache>,
) -> Result<Vec<u64>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let rows = enumerate_cores(n, ell);
    let cols: Vec<Partition> = enumerate_partitions(n).collect();
    column_counts(&rows, &cols, true, CacheKind::Z, n, ell, cache)
}

/// Exact `Z_ℓ(n)`; refuses `n > cap`.
pub fn z_exact(n: usize, ell: usize, cap: usize) -> Result<BigCount> {
    Ok(z_exact_columns(n, ell, cap, None)?.into_iter().sum::<u64>().into())
}

/// Per-column zero counts of `Z*_ℓ(n)`.
///
/// Every entry is evaluated through the Murnaghan–Nakayama recursion with
/// no hook-length shortcut.
pub fn z_star_exact_columns(
    n: usize,
    ell: usize,
    cap: usize,
    cache: Option<&ColumnCache>,
) -> Result<Vec<u64>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let cores = enumerate_cores(n, ell);
    column_counts(&cores, &cores, false, CacheKind::ZStar, n, ell, cache)
}

/// Exact `Z*_ℓ(n)`; refuses `n > cap`.
pub fn z_star_exact(n: usize, ell: usize, cap: usize) -> Result<BigCount> {
    Ok(z_star_exact_columns(n, ell, cap, None)?
        .into_iter()
        .sum::<u64>()
        .into())
}

/// `c_ℓ(n)²`, valid once `n > N_ℓ`.
pub fn z_star_closed(n: usize, ell: usize) -> Result<BigCount> {
    let threshold = n_ell(ell);
    if (n as u64) <= threshold {
        return Err(Error::BelowThreshold { n, ell, threshold });
    }
    let c = core_counts(n, ell).pop().expect("n+1 entries");
    Ok(&c * &c)
}

/// Exact `Z(n)`: all vanishing entries of the full character table.
pub fn z_total(n: usize, cap: usize) -> Result<BigCount> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let all: Vec<Partition> = enumerate_partitions(n).collect();
    let total: u64 = all.par_iter().map(|mu| column_zeros(&all, mu, true)).sum();
    Ok(total.into())
}

/// Parameters of a census sweep.
#[derive(Debug, Clone)]
pub struct CensusConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub ells: Vec<usize>,
    pub cap_exact: usize,
    pub cap_star: usize,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
}

impl Default for CensusConfig {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 14,
            ells: vec![2, 3, 5],
            cap_exact: DEFAULT_CAP_EXACT,
            cap_star: DEFAULT_CAP_STAR,
            jobs: None,
            format: Format::Csv,
            out: None,
            cache_dir: None,
        }
    }
}

impl CensusConfig {
    fn validate(&self) -> Result<()> {
        if self.n_min == 0 {
            return Err(Error::InvalidConfig("n-min must be at least 1".into()));
        }
        if self.ells.is_empty() {
            return Err(Error::InvalidConfig("no moduli given".into()));
        }
        for &ell in &self.ells {
            if !is_prime(ell) {
                return Err(Error::InvalidModulus {
                    ell,
                    reason: "not prime",
                });
            }
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Runs a sweep over `n_min..=n_max` × `ells`, writes the table if `out`
/// is set, and returns the records ordered by `(n, ℓ)`.
///
/// Caching never changes the output: a warm and a cold run produce
/// identical bytes.
pub fn run_census(config: &CensusConfig) -> Result<Vec<CensusRecord>> {
    config.validate()?;
    let cache = config
        .cache_dir
        .as_ref()
        .map(ColumnCache::open)
        .transpose()?;

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = config.jobs {
        builder = builder.num_threads(jobs);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;

    let records = pool.install(|| compute_records(config, cache.as_ref()))?;

    if let Some(path) = &config.out {
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
        let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
        write_records(BufWriter::new(file), &records, config.format)
            .map_err(|e| Error::io(path, e))?;
    }
    Ok(records)
}

fn compute_records(config: &CensusConfig, cache: Option<&ColumnCache>) -> Result<Vec<CensusRecord>> {
    if config.n_min > config.n_max {
        return Ok(Vec::new());
    }
    let n_max = config.n_max;
    let p = partition_counts(n_max);

    let mut ells = config.ells.clone();
    ells.sort_unstable();
    ells.dedup();

    let mut per_ell = Vec::with_capacity(ells.len());
    for &ell in &ells {
        let params = if ell >= 5 { Some(EllParams::new(ell)?) } else { None };
        per_ell.push((
            ell,
            regular_counts(n_max, ell),
            core_counts(n_max, ell),
            params,
        ));
    }

    let jobs: Vec<(usize, usize)> = (config.n_min..=n_max)
        .flat_map(|n| (0..per_ell.len()).map(move |i| (n, i)))
        .collect();
    let records = jobs
        .par_iter()
        .map(|&(n, i)| {
            let (ell, p_reg, cores, params) = &per_ell[i];
            build_record(n, *ell, &p[n], &p_reg[n], &cores[n], params.as_ref(), config, cache)
        })
        .collect::<Result<Vec<_>>>()?;

    for r in &records {
        if let Err(msg) = r.check() {
            panic!("census invariant violated: {msg}");
        }
    }
    Ok(records)
}

#[allow(clippy::too_many_arguments)]
fn build_record(
    n: usize,
    ell: usize,
    p_n: &BigUint,
    p_ell_n: &BigUint,
    c_ell_n: &BigUint,
    params: Option<&EllParams>,
    config: &CensusConfig,
    cache: Option<&ColumnCache>,
) -> Result<CensusRecord> {
    let z_lower = (p_n - p_ell_n) * c_ell_n;
    let sum = |cols: Vec<u64>| -> BigCount { cols.into_iter().sum::<u64>().into() };
    let z_exact = (n <= config.cap_exact)
        .then(|| z_exact_columns(n, ell, config.cap_exact, cache).map(sum))
        .transpose()?;
    let z_star_exact = (n <= config.cap_star)
        .then(|| z_star_exact_columns(n, ell, config.cap_star, cache).map(sum))
        .transpose()?;
    let z_star_closed = ((n as u64) > n_ell(ell)).then(|| c_ell_n * c_ell_n);
    let main_term = params.map(|params| {
        main_term_with(n, params) * BigRational::from_integer(BigInt::from(p_n.clone()))
    });
    Ok(CensusRecord {
        n,
        ell,
        p_n: p_n.clone(),
        p_ell_n: p_ell_n.clone(),
        c_ell_n: c_ell_n.clone(),
        z_lower,
        z_exact,
        z_star_exact,
        z_star_closed,
        main_term_num: main_term.as_ref().map(|m| m.numer().clone()),
        main_term_den: main_term
            .as_ref()
            .map(|m| m.denom().magnitude().clone()),
    })
}
