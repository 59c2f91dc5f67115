//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its wall time; the process exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use corz::abacus::{
    bead_jump_witness, core_counts, cores_up_to, enumerate_cores, from_abacus, n_ell,
    regular_core_sizes, search_max_regular_core, swap_columns, to_abacus, Abacus,
};
use corz::census::{z_exact, z_lower_bound, z_star_closed, z_star_exact};
use corz::characters::{centralizer_order, dimension, ColumnEvaluator};
use corz::numtheory::{
    c2_closed, c3_closed, core_main_term, inv_alpha, inv_alpha_exact, inv_alpha_numeric,
    lower_bound_holds, sigma_twisted,
};
use corz::partition::{
    enumerate_partitions, hagis_estimate, hr_estimate, partition_counts, regular_counts,
};
use corz::Partition;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: corz::Error) -> String {
    e.to_string()
}

fn c1_constants() -> Outcome {
    for (ell, want) in [(5usize, 1u64), (7, 8), (11, 1275), (13, 33463)] {
        let v = inv_alpha(ell).map_err(err)?;
        ensure(v == BigUint::from(want), || format!("1/alpha_{ell} = {v}, want {want}"))?;
        let exact = inv_alpha_exact(ell).map_err(err)?;
        ensure(exact.is_integer(), || format!("1/alpha_{ell} exact = {exact}"))?;
        let numeric = inv_alpha_numeric(ell).map_err(err)?;
        let gap = (numeric - want as f64).abs();
        ensure(gap < 1e-6, || format!("numeric 1/alpha_{ell} = {numeric}, off by {gap:e}"))?;
    }
    Ok("1/alpha = 1, 8, 1275, 33463; numeric within 1e-6".into())
}

fn c2_sigma_identity() -> Outcome {
    let c5 = core_counts(300, 5);
    for (n, c) in c5.iter().enumerate() {
        let s = sigma_twisted(n + 1, 5);
        ensure(BigInt::from(c.clone()) == s, || format!("n={n}: c_5 = {c}, sigma = {s}"))?;
    }
    Ok("301 values equal".into())
}

fn c3_closed_forms() -> Outcome {
    let c2 = core_counts(500, 2);
    let c3 = core_counts(500, 3);
    for n in 0..=500 {
        ensure(BigUint::from(c2_closed(n)) == c2[n], || {
            format!("c_2({n}): closed {} vs {}", c2_closed(n), c2[n])
        })?;
        ensure(BigUint::from(c3_closed(n)) == c3[n], || {
            format!("c_3({n}): closed {} vs {}", c3_closed(n), c3[n])
        })?;
    }
    Ok("n <= 500 exact for t = 2, 3".into())
}

fn c4_regular_cores() -> Outcome {
    ensure(n_ell(3) == 16, || format!("N_3 = {}", n_ell(3)))?;
    let max = search_max_regular_core(3, 200);
    ensure(max == Some(10), || format!("max = {max:?}"))?;
    let sizes = regular_core_sizes(3, 200);
    let above: Vec<_> = sizes.iter().filter(|&&n| n > 10).collect();
    ensure(above.is_empty(), || format!("sizes above 10: {above:?}"))?;
    // Independent scan over every partition of 11..=16.
    for n in 11..=16 {
        if let Some(lam) = enumerate_partitions(n).find(|l| l.is_core(3) && l.is_regular(3)) {
            return Err(format!("filter scan found {lam}"));
        }
    }
    Ok(format!("sizes {sizes:?}"))
}

fn c5_core_window() -> Outcome {
    let cores = cores_up_to(60, 3);
    let mut pairs = 0usize;
    for (n, these) in cores.iter().enumerate().skip(17) {
        for mu in these {
            let mut column = ColumnEvaluator::new(mu);
            for lam in these {
                let v = column.eval(lam).map_err(err)?;
                ensure(v.is_zero(), || format!("chi_{lam}({mu}) = {v}"))?;
                pairs += 1;
            }
        }
        let c = BigUint::from(these.len());
        let star = z_star_exact(n, 3, 60).map_err(err)?;
        ensure(star == &c * &c, || format!("n={n}: Z* = {star}, c_3^2 = {}", &c * &c))?;
        let closed = z_star_closed(n, 3).map_err(err)?;
        ensure(closed == star, || format!("n={n}: closed {closed}"))?;
    }
    Ok(format!("{pairs} core pairs over n in (16, 60] all vanish"))
}

fn c6_lower_bound() -> Outcome {
    for ell in [2, 3, 5, 7] {
        for n in 1..=14 {
            let exact = z_exact(n, ell, 14).map_err(err)?;
            let lower = z_lower_bound(n, ell);
            ensure(exact >= lower, || format!("ell={ell} n={n}: {exact} < {lower}"))?;
        }
        for n in 1..=12 {
            let cores = enumerate_cores(n, ell);
            for mu in enumerate_partitions(n).filter(|m| !m.is_regular(ell)) {
                let mut column = ColumnEvaluator::new(&mu);
                for lam in &cores {
                    let v = column.eval(lam).map_err(err)?;
                    ensure(v.is_zero(), || format!("ell={ell}: chi_{lam}({mu}) = {v}"))?;
                }
            }
        }
    }
    Ok("bound holds for n <= 14; core x non-regular entries vanish for n <= 12".into())
}

fn c7_characters() -> Outcome {
    for n in 1..=10 {
        let rows: Vec<Partition> = enumerate_partitions(n).collect();
        for mu in &rows {
            let mut column = ColumnEvaluator::new(mu);
            let mut sum = BigInt::zero();
            for lam in &rows {
                let v = column.eval(lam).map_err(err)?;
                sum += &v * &v;
            }
            let z = BigInt::from(centralizer_order(mu));
            ensure(sum == z, || format!("column {mu}: sum {sum}, z {z}"))?;

            let trivial = column.eval(&Partition::row(n)).map_err(err)?;
            ensure(trivial.is_one(), || format!("trivial at {mu} = {trivial}"))?;
            let sign = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
            let got = column.eval(&Partition::column(n)).map_err(err)?;
            ensure(got == BigInt::from(sign), || format!("sign at {mu} = {got}"))?;
        }
    }
    for n in 1..=12 {
        let mut column = ColumnEvaluator::new(&Partition::column(n));
        for lam in enumerate_partitions(n) {
            let v = column.eval(&lam).map_err(err)?;
            let d = BigInt::from(dimension(&lam));
            ensure(v == d, || format!("dim {lam}: {v} vs {d}"))?;
        }
    }
    Ok("orthogonality n <= 10, dimensions n <= 12, trivial/sign n <= 10".into())
}

fn random_canonical(rng: &mut StdRng, ell: usize, max_height: usize) -> Abacus {
    let mut cols: Vec<usize> = (0..ell).map(|_| rng.gen_range(0..=max_height)).collect();
    cols[0] = 0;
    Abacus::new(ell, cols).expect("ell rods")
}

fn c8_abacus() -> Outcome {
    for ell in [2, 3, 5, 7] {
        for n in 0..=40 {
            for lam in enumerate_cores(n, ell) {
                let ab = to_abacus(&lam, ell).map_err(err)?;
                let back = from_abacus(&ab).map_err(err)?;
                ensure(back == lam, || format!("ell={ell}: {lam} -> {ab} -> {back}"))?;
            }
        }
        let listed = cores_up_to(60, ell);
        let gf = core_counts(60, ell);
        for n in 0..=60 {
            ensure(BigUint::from(listed[n].len()) == gf[n], || {
                format!("ell={ell} n={n}: {} listed vs {}", listed[n].len(), gf[n])
            })?;
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut swaps = 0;
    while swaps < 500 {
        let ell = [3, 5, 7, 11][rng.gen_range(0..4)];
        let ab = random_canonical(&mut rng, ell, 8);
        let i = rng.gen_range(1..ell - 1);
        let j = rng.gen_range(i + 1..ell);
        if ab.cols()[j] >= ab.cols()[i] {
            ensure(swap_columns(&ab, i, j).is_err(), || format!("{ab}: swap {i},{j} accepted"))?;
            continue;
        }
        let swapped = swap_columns(&ab, i, j).map_err(err)?;
        let (before, after) = (ab.size(), swapped.size());
        ensure(after > before, || format!("{ab} -> {swapped}: {before} -> {after}"))?;
        let lam = from_abacus(&swapped).map_err(err)?;
        ensure(lam.size() == after && lam.is_core(ell), || format!("{swapped} -> {lam}"))?;
        swaps += 1;
    }

    let mut jumps = 0;
    while jumps < 500 {
        let ell = [3, 5, 7][rng.gen_range(0..3)];
        let k = rng.gen_range(0..5);
        let mut cols = vec![0usize; ell];
        for c in cols.iter_mut().skip(1) {
            *c = if rng.gen_bool(0.5) {
                rng.gen_range(0..=k)
            } else {
                rng.gen_range(k + ell..k + ell + 4)
            };
        }
        if cols[1..].iter().all(|&b| b < k + ell) {
            continue;
        }
        let ab = Abacus::new(ell, cols).map_err(err)?;
        let w = bead_jump_witness(&ab).ok_or_else(|| format!("{ab}: no witness"))?;
        let lam = from_abacus(&ab).map_err(err)?;
        ensure(w.part % ell == 0, || format!("{ab}: part {} not divisible", w.part))?;
        ensure(lam.parts().contains(&w.part), || format!("{ab}: {} not a part of {lam}", w.part))?;
        jumps += 1;
    }
    Ok("roundtrips n <= 40, counts n <= 60, 500 swaps, 500 witnesses".into())
}

fn ratio(a: &BigUint, b: f64) -> f64 {
    b / a.to_f64().expect("finite")
}

fn c9_trends() -> Outcome {
    let p = partition_counts(500);
    let p5 = regular_counts(500, 5);
    let hr = |n: usize| (ratio(&p[n], hr_estimate(n)) - 1.0).abs();
    let hg = |n: usize| (ratio(&p5[n], hagis_estimate(n, 5)) - 1.0).abs();
    ensure(hr(400) < hr(50), || format!("p(n): error {} at 50, {} at 400", hr(50), hr(400)))?;
    ensure(hg(400) < hg(50), || format!("p_5(n): error {} at 50, {} at 400", hg(50), hg(400)))?;

    let c5 = core_counts(500, 5);
    let half = BigRational::new(1.into(), 2.into());
    let two = BigRational::from_integer(2.into());
    let (mut lo, mut hi) = (f64::INFINITY, 0f64);
    for n in 100..=500 {
        let num = BigInt::from(&p[n] - &p5[n]) * BigInt::from(c5[n].clone());
        let main = core_main_term(n, 5).map_err(err)?;
        let r = BigRational::from_integer(num) / (main * BigInt::from(p[n].clone()));
        ensure(r >= half && r <= two, || format!("n={n}: ratio {r} outside [0.5, 2]"))?;
        let f = r.to_f64().unwrap_or(f64::NAN);
        lo = lo.min(f);
        hi = hi.max(f);
    }
    Ok(format!(
        "errors p {:.4}->{:.4}, p_5 {:.4}->{:.4}; main-term ratio in [{lo:.4}, {hi:.4}]",
        hr(50),
        hr(400),
        hg(50),
        hg(400)
    ))
}

fn c10_positivity() -> Outcome {
    for t in 4..=9 {
        let counts = core_counts(500, t);
        if let Some(n) = counts.iter().position(|c| c.is_zero()) {
            return Err(format!("c_{t}({n}) = 0"));
        }
    }
    let c11 = core_counts(1000, 11);
    let inv = inv_alpha(11).map_err(err)?;
    for n in 100..=1000 {
        ensure(lower_bound_holds(&c11[n], n, 11, &inv), || {
            format!("lower bound fails at n={n}: c_11 = {}", c11[n])
        })?;
    }
    Ok("c_t > 0 for 4 <= t <= 9, n <= 500; bound holds for ell=11 on [100, 1000]".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 10] = [
        ("1 constants", c1_constants, Duration::from_secs(10)),
        ("2 sigma identity", c2_sigma_identity, Duration::from_secs(10)),
        ("3 closed forms", c3_closed_forms, Duration::from_secs(10)),
        ("4 regular cores", c4_regular_cores, Duration::from_secs(60)),
        ("5 core window", c5_core_window, Duration::from_secs(300)),
        ("6 lower bound", c6_lower_bound, Duration::from_secs(300)),
        ("7 characters", c7_characters, Duration::from_secs(300)),
        ("8 abacus", c8_abacus, Duration::from_secs(120)),
        ("9 trends", c9_trends, Duration::from_secs(60)),
        ("10 positivity", c10_positivity, Duration::from_secs(30)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > limit => Err(format!("{detail}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({took:.2?}): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name} ({took:.2?}): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
