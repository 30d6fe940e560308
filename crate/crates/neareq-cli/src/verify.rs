//! The built-in verification suite: seven checks covering the grid
//! equilibria of the security game, the mixed-strategy bound, Monte
//! Carlo agreement, the TCP gain identities, the formation-game
//! stability results, the ε-band behavior and end-to-end determinism.
//!
//! Each check writes its CSV artifacts under the output directory and
//! reports deterministic detail lines; wall-clock timing is kept out of
//! the details so summaries compare bytewise across runs.

use std::path::Path;
use std::time::Instant;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use neareq::equilibrium::{
    check_epsilon_equilibrium, mc_expected_utility, PlayerId, PointMass, StrategyDistribution,
};
use neareq::grid;
use neareq::netform::{
    epsilon_band_scan, make_topology, verify_full_graph, verify_star, DeviationMode, NetFormParams,
    TopologyKind,
};
use neareq::security::{
    enumerate_grid_nash, expected_utility_closed_form, mixed_epsilon_gain, security_cdf,
    SecurityCdf, SecurityGame, SecurityParams,
};
use neareq::tcp::{tcp_deviation_gain, tcp_epsilon_bound, tcp_utility, TcpGame, TcpParams};

use crate::csvfmt::fmt_f64;
use crate::oracle;

/// How much work each check does; `Small` keeps the whole suite under a
/// couple of minutes, `Full` runs the nominal sample counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

#[derive(Debug, Clone)]
pub struct CriterionReport {
    pub id: usize,
    pub label: &'static str,
    pub passed: bool,
    /// Deterministic: key values and any failure descriptions.
    pub details: Vec<String>,
    pub seconds: f64,
}

/// Collects detail lines and failure flags for one criterion.
#[derive(Default)]
struct Check {
    details: Vec<String>,
    failures: usize,
}

impl Check {
    fn note(&mut self, line: String) {
        self.details.push(line);
    }

    fn require(&mut self, ok: bool, what: String) {
        if !ok {
            self.failures += 1;
            self.details.push(format!("FAIL {what}"));
        }
    }

    fn into_report(self, id: usize, label: &'static str, started: Instant) -> CriterionReport {
        CriterionReport {
            id,
            label,
            passed: self.failures == 0,
            details: self.details,
            seconds: started.elapsed().as_secs_f64(),
        }
    }
}

fn write_csv(dir: &Path, name: &str, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut writer = csv::Writer::from_path(dir.join(name))?;
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    writer.flush()?;
    Ok(())
}

/// The grid equilibria of the security game, derived by hand and
/// confirmed by brute force: the all-P profile, every profile on
/// {P-δ, P} with minimum P-δ, and each single-player dip to P-2δ with
/// the rest at P-δ.
fn grid_nash_family(n: usize, p: f64, delta: f64) -> Vec<Vec<f64>> {
    let mut set = Vec::new();
    for mask in 1u32..1 << n {
        set.push(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { p - delta } else { p })
                .collect(),
        );
    }
    if p - 2.0 * delta >= 0.0 {
        for low in 0..n {
            set.push(
                (0..n)
                    .map(|i| if i == low { p - 2.0 * delta } else { p - delta })
                    .collect(),
            );
        }
    }
    set.push(vec![p; n]);
    set.sort_by(|a, b| a.partial_cmp(b).unwrap());
    set
}

fn levels_rows(set: &[Vec<f64>]) -> Vec<Vec<String>> {
    set.iter()
        .map(|profile| {
            vec![profile
                .iter()
                .map(|&s| fmt_f64(s))
                .collect::<Vec<_>>()
                .join(",")]
        })
        .collect()
}

// ---------------------------------------------------------------------
// 1. grid Nash enumeration vs the naive oracle
// ---------------------------------------------------------------------

fn criterion_1(scale: Scale, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();
    let (n, p) = (3usize, 10.0f64);
    let params = SecurityParams::new(n, p)?;

    let deltas: &[(f64, &str)] = match scale {
        Scale::Full => &[(0.5, "c1_grid_nash_d05.csv"), (0.1, "c1_grid_nash_d01.csv")],
        Scale::Small => &[(0.5, "c1_grid_nash_d05.csv")],
    };

    for &(delta, artifact) in deltas {
        let set = enumerate_grid_nash(&params, delta)?;
        let expected = grid_nash_family(n, p, delta);
        check.require(
            set == expected,
            format!(
                "delta={}: enumeration disagrees with the derived family",
                fmt_f64(delta)
            ),
        );
        let lowest = set.iter().flatten().copied().fold(f64::INFINITY, f64::min);
        check.require(
            (lowest - (p - 2.0 * delta)).abs() <= 1e-12,
            format!(
                "delta={}: spread should be 2 steps, lowest {}",
                fmt_f64(delta),
                fmt_f64(lowest)
            ),
        );
        check.require(
            set.contains(&vec![p; n]),
            format!("delta={}: all-P profile missing", fmt_f64(delta)),
        );
        check.note(format!(
            "delta={}: {} equilibria, lowest level {}",
            fmt_f64(delta),
            set.len(),
            fmt_f64(lowest)
        ));
        write_csv(out, artifact, &["levels"], &levels_rows(&set))?;
    }

    // the naive double loop confirms the enumeration
    let naive = oracle::security_grid_nash_naive(n, p, 0.5);
    let fast = enumerate_grid_nash(&params, 0.5)?;
    check.require(naive == fast, "naive oracle disagrees at delta=0.5".into());

    // the all-P profile is a Nash point of the grid game
    let game = SecurityGame::new(params, 0.5)?;
    let deviations = vec![game.level_grid().to_vec(); n];
    let verdict = check_epsilon_equilibrium(&game, &vec![p; n], 0.0, &deviations)?;
    check.require(verdict.passed, "all-P profile fails the ε=0 check".into());
    check.note(format!("all-P max gain {}", fmt_f64(verdict.max_gain)));

    Ok(check.into_report(1, "security-grid-nash", started))
}

// ---------------------------------------------------------------------
// 2. mixed-strategy bound
// ---------------------------------------------------------------------

fn criterion_2(_scale: Scale, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();
    let p = 10.0;

    // closed-form expected utility peaks at P/2 with value -3P/4 and
    // bottoms out at -P on both ends
    let params = SecurityParams::new(2, p)?;
    let mut sup = f64::NEG_INFINITY;
    let mut arg = f64::NAN;
    let mut inf = f64::INFINITY;
    for &s in &grid::linear(0.0, p, 1000) {
        let eu = expected_utility_closed_form(s, &params)?;
        if eu > sup {
            sup = eu;
            arg = s;
        }
        inf = inf.min(eu);
    }
    check.require(
        (sup - (-0.75 * p)).abs() <= 1e-9,
        format!(
            "sup Eu is {}, expected {}",
            fmt_f64(sup),
            fmt_f64(-0.75 * p)
        ),
    );
    check.require(arg == 0.5 * p, format!("argmax at {}", fmt_f64(arg)));
    check.require(inf == -p, format!("grid minimum {}", fmt_f64(inf)));
    check.require(
        expected_utility_closed_form(0.0, &params)? == -p
            && expected_utility_closed_form(p, &params)? == -p,
        "endpoints should sit at -P".into(),
    );
    check.note(format!("sup Eu {} at s={}", fmt_f64(sup), fmt_f64(arg)));

    let mut rows = Vec::new();
    for n in [2usize, 3, 5, 10] {
        let params = SecurityParams::new(n, p)?;
        let gain = mixed_epsilon_gain(&params, &SecurityCdf::new(params), p / 1000.0)?;
        check.require(
            gain <= 0.25 * p + 1e-6,
            format!("n={n}: gain {} exceeds P/4", fmt_f64(gain)),
        );
        if n == 2 {
            check.require(
                (gain - 0.8333).abs() <= 1e-3,
                format!("n=2 gain {} should be 0.8333±1e-3", fmt_f64(gain)),
            );
        }
        check.note(format!("n={n} gain {}", fmt_f64(gain)));
        rows.push(vec![n.to_string(), fmt_f64(gain)]);
    }
    write_csv(out, "c2_mixed_gain.csv", &["n", "gain"], &rows)?;

    Ok(check.into_report(2, "security-mixed-bound", started))
}

// ---------------------------------------------------------------------
// 3. Monte Carlo agreement with the closed form
// ---------------------------------------------------------------------

fn criterion_3(scale: Scale, seed: u64, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();
    let (n, p) = (3usize, 10.0);
    let params = SecurityParams::new(n, p)?;
    let game = SecurityGame::with_default_grid(params);
    let opponents = SecurityCdf::new(params);

    let samples: u64 = match scale {
        Scale::Full => 100_000,
        Scale::Small => 20_000,
    };
    let mut rows = Vec::new();
    for s in [0.0, 0.25 * p, 0.5 * p, 0.75 * p] {
        let own = PointMass(s);
        let mixed: Vec<&dyn StrategyDistribution> = vec![&own, &opponents, &opponents];
        let estimate = mc_expected_utility(&game, &mixed, PlayerId(0), samples, seed)?;
        let closed = expected_utility_closed_form(s, &params)?;
        let slack = 3.0 * estimate.std_error + 1e-12;
        check.require(
            (estimate.mean - closed).abs() <= slack,
            format!(
                "s={}: mc {} vs closed {} (slack {})",
                fmt_f64(s),
                fmt_f64(estimate.mean),
                fmt_f64(closed),
                fmt_f64(slack)
            ),
        );
        check.note(format!(
            "s={}: mc {} closed {} se {}",
            fmt_f64(s),
            fmt_f64(estimate.mean),
            fmt_f64(closed),
            fmt_f64(estimate.std_error)
        ));
        rows.push(vec![
            fmt_f64(s),
            fmt_f64(closed),
            fmt_f64(estimate.mean),
            fmt_f64(estimate.std_error),
            samples.to_string(),
        ]);
    }
    write_csv(
        out,
        "c3_mixed_mc.csv",
        &["s", "eu_closed", "eu_mc", "std_err", "samples"],
        &rows,
    )?;

    // empirical distribution of quantile samples vs the cdf
    let draws_n = 100_000usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x05ee_dcdf);
    let mut draws: Vec<f64> = (0..draws_n)
        .map(|_| opponents.quantile(rng.gen()))
        .collect();
    draws.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut sup = 0.0_f64;
    for (k, &x) in draws.iter().enumerate() {
        let f = security_cdf(x, &params);
        sup = sup
            .max((k + 1) as f64 / draws_n as f64 - f)
            .max(f - k as f64 / draws_n as f64);
    }
    check.require(sup <= 0.01, format!("cdf sup distance {}", fmt_f64(sup)));
    check.note(format!("cdf sup distance {}", fmt_f64(sup)));

    Ok(check.into_report(3, "security-monte-carlo", started))
}

// ---------------------------------------------------------------------
// 4. TCP gain identity and capped-deviation bounds
// ---------------------------------------------------------------------

fn criterion_4(scale: Scale, seed: u64, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();

    // closed-form gain vs direct utility difference on random draws
    let draws = match scale {
        Scale::Full => 10_000,
        Scale::Small => 2_000,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7cb);
    let mut worst = 0.0_f64;
    for _ in 0..draws {
        let alpha = rng.gen::<f64>() * 100.0;
        let alpha_prime = rng.gen::<f64>() * 100.0;
        let a = 0.01 + rng.gen::<f64>() * 100.0;
        let c = 0.1 + rng.gen::<f64>() * 100.0;
        let closed = tcp_deviation_gain(alpha, alpha_prime, a, c)?;
        let direct = c * alpha_prime / (a + alpha_prime) - c * alpha / (a + alpha);
        worst = worst.max((closed - direct).abs());
    }
    check.require(worst <= 1e-12, format!("identity residual {worst:e}"));
    check.note(format!(
        "{draws} draws, worst identity residual {:.1e}",
        worst
    ));

    // capped best deviation from the all-ones default
    let c = 100.0;
    let mut rows = Vec::new();
    for n in 2..=20usize {
        for k in 1..=10usize {
            let kf = k as f64;
            let window = grid::from_step(0.0, kf + 1.0, (kf + 1.0) / 1000.0)?;
            let params = TcpParams::new(n, c, kf)?;
            let all_ones = vec![1.0; n];
            let base = tcp_utility(&all_ones, &params, PlayerId(0))?;
            let mut max_gain = f64::NEG_INFINITY;
            for &alpha_prime in &window {
                let mut profile = all_ones.clone();
                profile[0] = alpha_prime;
                max_gain = max_gain.max(tcp_utility(&profile, &params, PlayerId(0))? - base);
            }
            let nf = n as f64;
            let formula = c * (nf - 1.0) * kf / (nf * (nf + kf));
            let bound = c * kf / nf;
            check.require(
                (max_gain - formula).abs() <= 1e-9,
                format!(
                    "n={n} K={k}: max gain {} vs formula {}",
                    fmt_f64(max_gain),
                    fmt_f64(formula)
                ),
            );
            check.require(
                max_gain <= bound,
                format!(
                    "n={n} K={k}: max gain {} above cK/n {}",
                    fmt_f64(max_gain),
                    fmt_f64(bound)
                ),
            );
            rows.push(vec![
                n.to_string(),
                k.to_string(),
                fmt_f64(max_gain),
                fmt_f64(bound),
            ]);
        }
    }
    write_csv(
        out,
        "c4_tcp_bounds.csv",
        &["n", "k", "max_gain", "bound"],
        &rows,
    )?;

    // unbounded scan from alpha = 0 approaches the full capacity
    let a = 9.0;
    let mut scan_rows = Vec::new();
    let mut alpha_prime = 1.0;
    let mut last_gain = 0.0;
    while alpha_prime <= 1e6 {
        last_gain = tcp_deviation_gain(0.0, alpha_prime, a, c)?;
        scan_rows.push(vec![fmt_f64(alpha_prime), fmt_f64(last_gain)]);
        alpha_prime *= 10.0;
    }
    check.require(
        last_gain >= 0.99 * c,
        format!("alpha-scan peak gain {}", fmt_f64(last_gain)),
    );
    check.note(format!("alpha-scan gain at 1e6: {}", fmt_f64(last_gain)));
    write_csv(
        out,
        "c4_alpha_scan.csv",
        &["alpha_prime", "gain"],
        &scan_rows,
    )?;

    // the verdict flips exactly between the achieved gain and cK/n
    let params = TcpParams::new(10, c, 5.0)?;
    let game = TcpGame::with_default_grid(params);
    let window = grid::from_step(0.0, 6.0, 6.0 / 1000.0)?;
    let deviations = vec![window; 10];
    let profile = vec![1.0; 10];
    let loose =
        check_epsilon_equilibrium(&game, &profile, tcp_epsilon_bound(&params), &deviations)?;
    let achieved = c * 9.0 * 5.0 / (10.0 * 15.0);
    let tight = check_epsilon_equilibrium(&game, &profile, achieved - 1e-6, &deviations)?;
    check.require(loose.passed, "all-ones must pass at cK/n".into());
    check.require(
        !tight.passed,
        "all-ones must fail just under the achieved gain".into(),
    );

    Ok(check.into_report(4, "tcp-bounds", started))
}

// ---------------------------------------------------------------------
// 5. formation-game equilibria vs the naive oracle
// ---------------------------------------------------------------------

fn criterion_5(scale: Scale, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();
    let sizes: &[usize] = match scale {
        Scale::Full => &[3, 4, 5],
        Scale::Small => &[3, 4],
    };
    // l divisible by every n keeps l/n and all cost terms exactly
    // representable, so the m = l/n boundary cell is exact arithmetic
    // in both the checker and the oracle (1/3 and 1/5 have no binary
    // representation and would make the boundary verdict a rounding
    // accident)
    let (s, l, r) = (60.0, 60.0, 0.0);
    let mut rows = Vec::new();

    for &n in sizes {
        let crossover = l / n as f64;
        let cells = [
            (crossover - 0.01, true, false),
            (crossover, true, true),
            (crossover + 0.01, false, true),
        ];
        for (m, full_expected, star_expected) in cells {
            let params = NetFormParams::new(s, l, r, m)?;

            let full = verify_full_graph(&params, n, 0.0, DeviationMode::FullSubset)?;
            check.require(
                full.passed == full_expected,
                format!("full graph n={n} m={}: passed={}", fmt_f64(m), full.passed),
            );
            let full_t = make_topology(TopologyKind::Full, n)?;
            let naive =
                oracle::netform_check_naive(&full_t, &params, 0.0, DeviationMode::FullSubset);
            check.require(
                naive.passed == full.passed,
                format!("full graph n={n} m={}: oracle verdict differs", fmt_f64(m)),
            );
            for (report, oracle_gain) in full.per_player.iter().zip(&naive.gains) {
                check.require(
                    gains_agree(report.gain, *oracle_gain),
                    format!(
                        "full graph n={n} m={} player {}: gain {} vs oracle {}",
                        fmt_f64(m),
                        report.player,
                        fmt_f64(report.gain),
                        fmt_f64(*oracle_gain)
                    ),
                );
            }
            rows.push(vec![
                n.to_string(),
                "full".into(),
                fmt_f64(m),
                fmt_f64(full.max_gain),
                full.passed.to_string(),
            ]);

            let star = verify_star(&params, n, 0.0)?;
            check.require(
                star.passed == star_expected,
                format!("star n={n} m={}: passed={}", fmt_f64(m), star.passed),
            );
            let star_t = make_topology(TopologyKind::Star, n)?;
            let naive =
                oracle::netform_check_naive(&star_t, &params, 0.0, DeviationMode::FullSubset);
            check.require(
                naive.passed == star.passed,
                format!("star n={n} m={}: oracle verdict differs", fmt_f64(m)),
            );
            for (report, oracle_gain) in star.per_player.iter().zip(&naive.gains) {
                check.require(
                    gains_agree(report.gain, *oracle_gain),
                    format!(
                        "star n={n} m={} player {}: gain {} vs oracle {}",
                        fmt_f64(m),
                        report.player,
                        fmt_f64(report.gain),
                        fmt_f64(*oracle_gain)
                    ),
                );
            }
            rows.push(vec![
                n.to_string(),
                "star".into(),
                fmt_f64(m),
                fmt_f64(star.max_gain),
                star.passed.to_string(),
            ]);
        }
        check.note(format!(
            "n={n}: full/star verdicts as predicted, oracle agrees"
        ));
    }
    write_csv(
        out,
        "c5_netform_props.csv",
        &["n", "topology", "m", "max_gain", "passed"],
        &rows,
    )?;

    Ok(check.into_report(5, "netform-stability", started))
}

fn gains_agree(a: f64, b: f64) -> bool {
    if a.is_finite() && b.is_finite() {
        (a - b).abs() <= 1e-12
    } else {
        a == b
    }
}

// ---------------------------------------------------------------------
// 6. the ε-band around m = l/n
// ---------------------------------------------------------------------

fn criterion_6(_scale: Scale, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();
    let epsilon = 0.05;
    let (s, l, r) = (1.0, 1.0, 0.0);

    // full graph and star, n = 4: the whole band holds
    let center = l / 4.0;
    let m_grid = grid::linear(center - epsilon, center + epsilon, 10);
    for (kind, artifact, label) in [
        (TopologyKind::Full, "c6_band_full.csv", "full"),
        (TopologyKind::Star, "c6_band_star.csv", "star"),
    ] {
        let t = make_topology(kind, 4)?;
        let rows = epsilon_band_scan(&t, s, l, r, epsilon, &m_grid, DeviationMode::SingleLink)?;
        let all_passed = rows.iter().all(|row| row.passed);
        check.require(all_passed, format!("{label}: a band point failed"));
        check.note(format!(
            "{label}: 11/11 band points {}",
            if all_passed { "pass" } else { "FAIL" }
        ));
        let rows: Vec<Vec<String>> = rows
            .iter()
            .map(|row| {
                vec![
                    fmt_f64(row.m),
                    fmt_f64(row.max_gain),
                    row.passed.to_string(),
                ]
            })
            .collect();
        write_csv(out, artifact, &["m", "max_gain", "passed"], &rows)?;
    }

    // the directed 6-ring breaks inside its own band: a long chord cuts
    // the distance sum far more than one hop per node
    let ring = make_topology(TopologyKind::DirectedRing, 6)?;
    let ring_center = l / 6.0;
    let ring_grid = grid::linear(ring_center - epsilon, ring_center + epsilon, 10);
    let rows = epsilon_band_scan(
        &ring,
        s,
        l,
        r,
        epsilon,
        &ring_grid,
        DeviationMode::SingleLink,
    )?;
    let failures = rows.iter().filter(|row| !row.passed).count();
    check.require(
        failures > 0,
        "ring should break somewhere in the band".into(),
    );
    check.note(format!("ring: {failures}/11 band points fail"));
    let rows: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            vec![
                fmt_f64(row.m),
                fmt_f64(row.max_gain),
                row.passed.to_string(),
            ]
        })
        .collect();
    write_csv(out, "c6_band_ring.csv", &["m", "max_gain", "passed"], &rows)?;

    Ok(check.into_report(6, "netform-epsilon-band", started))
}

// ---------------------------------------------------------------------
// 7. determinism of the whole suite
// ---------------------------------------------------------------------

fn criterion_7(seed: u64, out: &Path) -> Result<CriterionReport> {
    let started = Instant::now();
    let mut check = Check::default();

    let dir_a = out.join("c7_run_a");
    let dir_b = out.join("c7_run_b");
    let run_a = run_criteria_1_to_6(Scale::Small, seed, &dir_a)?;
    let run_b = run_criteria_1_to_6(Scale::Small, seed, &dir_b)?;

    let summary_a = summary_lines(&run_a);
    let summary_b = summary_lines(&run_b);
    check.require(
        summary_a == summary_b,
        "summaries differ between runs".into(),
    );

    let files_a = collect_files(&dir_a)?;
    let files_b = collect_files(&dir_b)?;
    check.require(
        files_a.iter().map(|(name, _)| name).collect::<Vec<_>>()
            == files_b.iter().map(|(name, _)| name).collect::<Vec<_>>(),
        "artifact listings differ".into(),
    );
    let mut compared = 0usize;
    for ((name, bytes_a), (_, bytes_b)) in files_a.iter().zip(&files_b) {
        check.require(
            bytes_a == bytes_b,
            format!("artifact {name} differs between runs"),
        );
        compared += 1;
    }
    check.note(format!(
        "{compared} artifacts byte-identical across two runs"
    ));

    Ok(check.into_report(7, "determinism", started))
}

fn collect_files(dir: &Path) -> Result<Vec<(String, Vec<u8>)>> {
    let mut files = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(current) = stack.pop() {
        let mut entries: Vec<_> = std::fs::read_dir(&current)?.collect::<std::io::Result<_>>()?;
        entries.sort_by_key(|e| e.file_name());
        for entry in entries {
            let path = entry.path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let name = path
                    .strip_prefix(dir)
                    .expect("under the root")
                    .to_string_lossy()
                    .into_owned();
                files.push((name, std::fs::read(&path)?));
            }
        }
    }
    files.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(files)
}

// ---------------------------------------------------------------------
// suite driver
// ---------------------------------------------------------------------

fn run_criteria_1_to_6(scale: Scale, seed: u64, out: &Path) -> Result<Vec<CriterionReport>> {
    Ok(vec![
        criterion_1(scale, out)?,
        criterion_2(scale, out)?,
        criterion_3(scale, seed, out)?,
        criterion_4(scale, seed, out)?,
        criterion_5(scale, out)?,
        criterion_6(scale, out)?,
    ])
}

/// Run one criterion by number (1-7) at the given scale.
pub fn run_criterion(id: usize, scale: Scale, seed: u64, out: &Path) -> Result<CriterionReport> {
    match id {
        1 => criterion_1(scale, out),
        2 => criterion_2(scale, out),
        3 => criterion_3(scale, seed, out),
        4 => criterion_4(scale, seed, out),
        5 => criterion_5(scale, out),
        6 => criterion_6(scale, out),
        7 => criterion_7(seed, out),
        other => anyhow::bail!("no criterion {other}"),
    }
}

/// Run the whole suite.
pub fn run_all(scale: Scale, seed: u64, out: &Path) -> Result<Vec<CriterionReport>> {
    let mut reports = run_criteria_1_to_6(scale, seed, out)?;
    reports.push(criterion_7(seed, out)?);
    Ok(reports)
}

/// Deterministic per-criterion lines (no timing).
pub fn summary_lines(reports: &[CriterionReport]) -> Vec<String> {
    let mut lines: Vec<String> = reports
        .iter()
        .map(|r| {
            format!(
                "C{} {} {}",
                r.id,
                if r.passed { "PASS" } else { "FAIL" },
                r.label
            )
        })
        .collect();
    let passed = reports.iter().filter(|r| r.passed).count();
    lines.push(format!("{passed}/{} criteria passed", reports.len()));
    lines
}
