//! Named self-check suites with machine-readable reports.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::abacus::{
    core_counts, cores_up_to, enumerate_cores, enumerate_cores_by_abacus, enumerate_cores_by_filter,
    from_abacus, n_ell, regular_core_sizes, search_max_regular_core, to_abacus,
};
use crate::census::{z_exact, z_lower_bound, z_star_exact};
use crate::characters::{centralizer_order, dimension, ColumnEvaluator};
use crate::numtheory::{c2_closed, c3_closed, delta_ell, inv_alpha, inv_alpha_numeric, sigma_twisted};
use crate::partition::{enumerate_partitions, Partition};
use crate::{Error, Result};

pub const SUITES: [&str; 6] = [
    "theorem2",
    "lemma1",
    "closed-forms",
    "orthogonality",
    "abacus",
    "constants",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            passed: true,
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs one named suite.
pub fn verify(suite: &str) -> Result<Report> {
    match suite {
        "theorem2" => core_window(),
        "lemma1" => lower_bound(),
        "closed-forms" => closed_forms(),
        "orthogonality" => orthogonality(),
        "abacus" => abacus(),
        "constants" => constants(),
        other => Err(Error::UnknownSuite {
            name: other.to_string(),
            available: SUITES.join(", "),
        }),
    }
}

fn is_zero(v: &BigInt) -> bool {
    v == &BigInt::from(0)
}

fn core_window() -> Result<Report> {
    let mut r = Report::new("theorem2");
    let ell = 3;
    let threshold = n_ell(ell) as usize;
    r.push("N_3", threshold == 16, format!("N_3 = {threshold}"));
    let cores = cores_up_to(60, ell);
    for (n, these) in cores.iter().enumerate().skip(threshold + 1) {
        let mut nonzero = 0usize;
        for mu in these {
            let mut column = ColumnEvaluator::new(mu);
            for lam in these {
                if !is_zero(&column.eval(lam)?) {
                    nonzero += 1;
                }
            }
        }
        let c = these.len();
        let star = z_star_exact(n, ell, 60)?;
        let ok = nonzero == 0 && star == BigUint::from(c * c);
        r.push(
            format!("n={n}"),
            ok,
            format!("c_3 = {c}, nonzero entries = {nonzero}, Z* = {star}"),
        );
    }
    let below = (1..=threshold).any(|n| {
        let these = &cores[n];
        these.iter().any(|mu| {
            let mut column = ColumnEvaluator::new(mu);
            these
                .iter()
                .any(|lam| !is_zero(&column.eval(lam).expect("equal sizes")))
        })
    });
    r.push(
        "some nonzero core/core entry at n <= N_3",
        below,
        "scan of 1..=16",
    );
    Ok(r)
}

fn lower_bound() -> Result<Report> {
    let mut r = Report::new("lemma1");
    for ell in [2, 3, 5, 7] {
        for n in 1..=14 {
            let exact = z_exact(n, ell, 14)?;
            let lower = z_lower_bound(n, ell);
            r.push(
                format!("Z_{ell}({n}) >= lower"),
                exact >= lower,
                format!("exact {exact}, lower {lower}"),
            );
        }
        for n in 1..=12 {
            let cores = enumerate_cores(n, ell);
            let mut bad = 0;
            for mu in enumerate_partitions(n).filter(|mu| !mu.is_regular(ell)) {
                let mut column = ColumnEvaluator::new(&mu);
                for lam in &cores {
                    if !is_zero(&column.eval(lam)?) {
                        bad += 1;
                    }
                }
            }
            r.push(
                format!("core x non-regular vanish, ell={ell} n={n}"),
                bad == 0,
                format!("{bad} nonzero entries"),
            );
        }
    }
    Ok(r)
}

fn closed_forms() -> Result<Report> {
    let mut r = Report::new("closed-forms");
    let c2 = core_counts(500, 2);
    let c3 = core_counts(500, 3);
    let bad2: Vec<usize> = (0..=500)
        .filter(|&n| BigUint::from(c2_closed(n)) != c2[n])
        .collect();
    let bad3: Vec<usize> = (0..=500)
        .filter(|&n| BigUint::from(c3_closed(n)) != c3[n])
        .collect();
    r.push("c_2 triangular rule, n <= 500", bad2.is_empty(), format!("mismatches: {bad2:?}"));
    r.push("c_3 divisor sum, n <= 500", bad3.is_empty(), format!("mismatches: {bad3:?}"));
    let c5 = core_counts(300, 5);
    let bad5: Vec<usize> = (0..=300)
        .filter(|&n| BigInt::from(c5[n].clone()) != sigma_twisted(n + 1, 5))
        .collect();
    r.push("c_5(n) = sigma_5(n+1), n <= 300", bad5.is_empty(), format!("mismatches: {bad5:?}"));
    Ok(r)
}

fn orthogonality() -> Result<Report> {
    let mut r = Report::new("orthogonality");
    for n in 1..=10 {
        let rows: Vec<Partition> = enumerate_partitions(n).collect();
        for mu in &rows {
            let mut column = ColumnEvaluator::new(mu);
            let mut sum = BigInt::from(0);
            for lam in &rows {
                let v = column.eval(lam)?;
                sum += &v * &v;
            }
            let z = BigInt::from(centralizer_order(mu));
            r.push(
                format!("sum chi^2 over column {mu}"),
                sum == z,
                format!("sum {sum}, z_mu {z}"),
            );
        }
    }
    for n in 1..=12 {
        let ones = Partition::column(n);
        let mut column = ColumnEvaluator::new(&ones);
        let bad = enumerate_partitions(n)
            .filter(|lam| {
                column.eval(lam).expect("equal sizes") != BigInt::from(dimension(lam))
            })
            .count();
        r.push(
            format!("identity column n={n}"),
            bad == 0,
            format!("{bad} mismatches against hook length formula"),
        );
    }
    Ok(r)
}

fn abacus() -> Result<Report> {
    let mut r = Report::new("abacus");
    for ell in [2, 3, 5, 7] {
        let mut failures = 0;
        for n in 0..=40 {
            for lam in enumerate_cores(n, ell) {
                let back = to_abacus(&lam, ell).and_then(|a| from_abacus(&a));
                if back.ok().as_ref() != Some(&lam) {
                    failures += 1;
                }
            }
        }
        r.push(
            format!("roundtrip ell={ell}, n <= 40"),
            failures == 0,
            format!("{failures} failures"),
        );
        let counts = core_counts(60, ell);
        let by_abacus = cores_up_to(60, ell);
        let bad: Vec<usize> = (0..=60)
            .filter(|&n| BigUint::from(by_abacus[n].len()) != counts[n])
            .collect();
        r.push(
            format!("abacus enumeration = gf, ell={ell}, n <= 60"),
            bad.is_empty(),
            format!("mismatches: {bad:?}"),
        );
        let agree = (0..=30)
            .all(|n| enumerate_cores_by_abacus(n, ell) == enumerate_cores_by_filter(n, ell));
        r.push(
            format!("abacus and filter paths agree, ell={ell}, n <= 30"),
            agree,
            "",
        );
    }
    r.push("N_3 = 16", n_ell(3) == 16, format!("{}", n_ell(3)));
    let max = search_max_regular_core(3, 200);
    r.push("max 3-regular 3-core size", max == Some(10), format!("{max:?}"));
    let above: Vec<usize> = regular_core_sizes(3, 200).into_iter().filter(|&n| n > 10).collect();
    r.push(
        "no 3-regular 3-core in (10, 200]",
        above.is_empty(),
        format!("{above:?}"),
    );
    Ok(r)
}

fn constants() -> Result<Report> {
    let mut r = Report::new("constants");
    for (ell, want) in [(5usize, 1u64), (7, 8), (11, 1275), (13, 33463)] {
        match inv_alpha(ell) {
            Ok(v) => {
                let numeric = inv_alpha_numeric(ell)?;
                r.push(
                    format!("1/alpha_{ell}"),
                    v == BigUint::from(want),
                    format!("exact {v}, numeric {numeric:.9}, expected {want}"),
                );
            }
            Err(e) => r.push(format!("1/alpha_{ell}"), false, e.to_string()),
        }
    }
    for (ell, want) in [(5usize, 1usize), (7, 2), (13, 7)] {
        let d = delta_ell(ell)?;
        r.push(format!("delta_{ell}"), d == want, format!("{d}"));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_lists_available() {
        match verify("nope") {
            Err(Error::UnknownSuite { available, .. }) => {
                assert!(available.contains("theorem2"));
                assert!(available.contains("constants"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constants_suite_passes() {
        let report = verify("constants").unwrap();
        assert!(report.passed, "{:?}", report.failures().collect::<Vec<_>>());
        assert_eq!(report.checks.len(), 7);
    }
}
