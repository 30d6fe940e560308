//! Dispatch a validated config to the right analysis and emit CSV.

use std::collections::BTreeSet;
use std::path::Path;

use anyhow::{Context, Result};

use neareq::equilibrium::{
    best_response_dynamics, check_epsilon_equilibrium, mc_expected_utility, EquilibriumVerdict,
    GameModel, PlayerId, PlayerOrder, PointMass, StrategyDistribution,
};
use neareq::grid;
use neareq::netform::{check_topology, epsilon_band_scan, NetFormParams};
use neareq::security::{
    enumerate_grid_nash, expected_utility_closed_form, SecurityCdf, SecurityGame, SecurityParams,
};
use neareq::tcp::{TcpGame, TcpParams};

use crate::config::{AnalysisKind, ExperimentConfig, GameKind};
use crate::csvfmt::fmt_f64;

/// Whether the analysis's verdict held. Descriptive analyses are
/// always `Clean`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Clean,
    CheckFailed,
}

fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    let mut writer =
        csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    writer.flush()?;
    Ok(())
}

fn verdict_rows<S, F: Fn(&S) -> String>(
    verdict: &EquilibriumVerdict<S>,
    show: F,
) -> Vec<Vec<String>> {
    verdict
        .per_player
        .iter()
        .map(|report| {
            vec![
                report.player.0.to_string(),
                show(&report.best_alternative),
                fmt_f64(report.gain),
                fmt_f64(verdict.epsilon),
                (report.gain <= verdict.epsilon).to_string(),
            ]
        })
        .collect()
}

const VERDICT_HEADER: [&str; 5] = ["player", "best_alternative", "gain", "epsilon", "passed"];

fn link_set_cell(set: &BTreeSet<usize>) -> String {
    set.iter()
        .map(|j| j.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Execute the analysis and write its CSV to `config.output_path` (or
/// the override). Returns whether an equilibrium check failed.
pub fn run(config: &ExperimentConfig, out_override: Option<&Path>) -> Result<RunStatus> {
    let out = out_override.unwrap_or(&config.output_path).to_path_buf();
    match (config.game, config.analysis) {
        (GameKind::Security, AnalysisKind::PureNash) => {
            let params = config.security_params()?;
            let sp = SecurityParams::new(params.n, params.p)?;
            let step = config.grid_step.expect("validated");
            let nash = enumerate_grid_nash(&sp, step)?;
            let rows: Vec<Vec<String>> = nash
                .iter()
                .map(|profile| {
                    vec![profile
                        .iter()
                        .map(|&s| fmt_f64(s))
                        .collect::<Vec<_>>()
                        .join(",")]
                })
                .collect();
            write_csv(&out, &["levels"], &rows)?;
            Ok(RunStatus::Clean)
        }
        (GameKind::Security, AnalysisKind::EpsilonCheck) => {
            let params = config.security_params()?;
            let sp = SecurityParams::new(params.n, params.p)?;
            let step = config.grid_step.unwrap_or(params.p / 1000.0);
            let game = SecurityGame::new(sp, step)?;
            let profile = config
                .profile
                .clone()
                .unwrap_or_else(|| vec![params.p; params.n]);
            // rejects wrong lengths and out-of-range levels up front
            neareq::security::security_utility(&profile, &sp)?;
            let deviations = vec![game.level_grid().to_vec(); params.n];
            let verdict = check_epsilon_equilibrium(
                &game,
                &profile,
                config.epsilon.expect("validated"),
                &deviations,
            )?;
            write_csv(
                &out,
                &VERDICT_HEADER,
                &verdict_rows(&verdict, |s| fmt_f64(*s)),
            )?;
            Ok(status_of(verdict.passed))
        }
        (GameKind::Security, AnalysisKind::MixedMc) => {
            let params = config.security_params()?;
            let sp = SecurityParams::new(params.n, params.p)?;
            let game = SecurityGame::with_default_grid(sp);
            let opponents = SecurityCdf::new(sp);
            let samples = config.samples.expect("validated");
            let levels = config
                .s_values
                .clone()
                .unwrap_or_else(|| vec![0.0, params.p / 4.0, params.p / 2.0, 0.75 * params.p]);
            let mut rows = Vec::new();
            for s in levels {
                let own = PointMass(s);
                let mut mixed: Vec<&dyn StrategyDistribution> = vec![&opponents; params.n];
                mixed[0] = &own;
                let estimate =
                    mc_expected_utility(&game, &mixed, PlayerId(0), samples, config.seed())?;
                rows.push(vec![
                    fmt_f64(s),
                    fmt_f64(expected_utility_closed_form(s, &sp)?),
                    fmt_f64(estimate.mean),
                    fmt_f64(estimate.std_error),
                    samples.to_string(),
                ]);
            }
            write_csv(
                &out,
                &["s", "eu_closed", "eu_mc", "std_err", "samples"],
                &rows,
            )?;
            Ok(RunStatus::Clean)
        }
        (GameKind::Security, AnalysisKind::BrDynamics) => {
            let params = config.security_params()?;
            let sp = SecurityParams::new(params.n, params.p)?;
            let step = config.grid_step.unwrap_or(params.p / 1000.0);
            let game = SecurityGame::new(sp, step)?;
            let initial = config.profile.clone().expect("validated");
            let dynamics = best_response_dynamics(
                &game,
                &initial,
                PlayerOrder::RoundRobin,
                config.rounds.expect("validated"),
            )?;
            write_csv(
                &out,
                &["round", "player", "strategy", "utility"],
                &trajectory_rows(&game, &dynamics.trajectory),
            )?;
            Ok(RunStatus::Clean)
        }
        (GameKind::Tcp, AnalysisKind::EpsilonCheck) => {
            let params = config.tcp_params()?;
            let tp = match params.alpha_max {
                Some(cap) => TcpParams::with_alpha_max(params.n, params.c, params.k, cap)?,
                None => TcpParams::new(params.n, params.c, params.k)?,
            };
            let step = config.grid_step.unwrap_or((params.k + 1.0) / 1000.0);
            let game = TcpGame::new(tp, step)?;
            let profile = config
                .profile
                .clone()
                .unwrap_or_else(|| vec![1.0; params.n]);
            neareq::tcp::tcp_utility(&profile, &tp, PlayerId(0))?;
            let window = grid::from_step(0.0, params.k + 1.0, step)?;
            let deviations = vec![window; params.n];
            let verdict = check_epsilon_equilibrium(
                &game,
                &profile,
                config.epsilon.expect("validated"),
                &deviations,
            )?;
            write_csv(
                &out,
                &VERDICT_HEADER,
                &verdict_rows(&verdict, |s| fmt_f64(*s)),
            )?;
            Ok(status_of(verdict.passed))
        }
        (GameKind::Tcp, AnalysisKind::Escalation) => {
            let params = config.tcp_params()?;
            let tp = match params.alpha_max {
                Some(cap) => TcpParams::with_alpha_max(params.n, params.c, params.k, cap)?,
                None => TcpParams::new(params.n, params.c, params.k)?,
            };
            let step = config.grid_step.unwrap_or((params.k + 1.0) / 1000.0);
            let game = TcpGame::new(tp, step)?;
            let initial = vec![1.0; params.n];
            let dynamics = best_response_dynamics(
                &game,
                &initial,
                PlayerOrder::RoundRobin,
                config.rounds.expect("validated"),
            )?;
            write_csv(
                &out,
                &["round", "player", "strategy", "utility"],
                &trajectory_rows(&game, &dynamics.trajectory),
            )?;
            Ok(RunStatus::Clean)
        }
        (GameKind::Netform, AnalysisKind::EpsilonCheck) => {
            let params = config.netform_params()?;
            let topology = params.topology(config.seed())?;
            let np =
                NetFormParams::new(params.s, params.l, params.r, params.m.expect("validated"))?;
            let verdict = check_topology(
                &topology,
                &np,
                config.epsilon.expect("validated"),
                config.deviation_mode.expect("validated").into(),
            )?;
            write_csv(
                &out,
                &VERDICT_HEADER,
                &verdict_rows(&verdict, link_set_cell),
            )?;
            Ok(status_of(verdict.passed))
        }
        (GameKind::Netform, AnalysisKind::BandScan) => {
            let params = config.netform_params()?;
            let topology = params.topology(config.seed())?;
            let rows = epsilon_band_scan(
                &topology,
                params.s,
                params.l,
                params.r,
                config.epsilon.expect("validated"),
                config.m_grid.as_ref().expect("validated"),
                config.deviation_mode.expect("validated").into(),
            )?;
            let all_passed = rows.iter().all(|row| row.passed);
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
            write_csv(&out, &["m", "max_gain", "passed"], &rows)?;
            Ok(status_of(all_passed))
        }
        (game, analysis) => anyhow::bail!("analysis {analysis:?} is not defined for {game:?}"),
    }
}

fn status_of(passed: bool) -> RunStatus {
    if passed {
        RunStatus::Clean
    } else {
        RunStatus::CheckFailed
    }
}

fn trajectory_rows<G: GameModel<Strategy = f64>>(
    game: &G,
    trajectory: &[Vec<f64>],
) -> Vec<Vec<String>> {
    let mut rows = Vec::new();
    for (round, profile) in trajectory.iter().enumerate() {
        for i in 0..game.n_players() {
            rows.push(vec![
                round.to_string(),
                i.to_string(),
                fmt_f64(profile[i]),
                fmt_f64(game.utility(profile, PlayerId(i)).as_f64()),
            ]);
        }
    }
    rows
}
