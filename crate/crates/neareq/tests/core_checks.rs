//! The generic checkers exercised through the concrete games.

use neareq::equilibrium::{
    best_deviation_gain, best_response_dynamics, check_epsilon_equilibrium,
    inverse_transform_sample, mc_expected_utility, PlayerId, PlayerOrder, PointMass,
    StrategyDistribution,
};
use neareq::grid;
use neareq::netform::{verify_full_graph, DeviationMode, NetFormParams};
use neareq::security::{SecurityCdf, SecurityGame, SecurityParams};
use neareq::tcp::{TcpGame, TcpParams};

fn security(n: usize, p: f64, step: f64) -> SecurityGame {
    SecurityGame::new(SecurityParams::new(n, p).unwrap(), step).unwrap()
}

#[test]
fn no_profitable_move_from_the_all_p_profile() {
    let game = security(3, 10.0, 0.5);
    let grid = game.level_grid().to_vec();
    let report = best_deviation_gain(&game, &[10.0, 10.0, 10.0], PlayerId(0), &grid).unwrap();
    assert_eq!(report.gain, 0.0);
}

#[test]
fn best_deviation_steps_just_above_the_opponent() {
    let game = security(2, 10.0, 1.0);
    let grid = game.level_grid().to_vec();
    let report = best_deviation_gain(&game, &[3.0, 5.0], PlayerId(0), &grid).unwrap();
    assert_eq!(report.best_alternative, 6.0);
    assert_eq!(report.gain, 4.0);
}

#[test]
fn identity_deviation_gains_nothing() {
    let game = security(2, 10.0, 1.0);
    let report = best_deviation_gain(&game, &[3.0, 5.0], PlayerId(1), &[5.0]).unwrap();
    assert_eq!(report.gain, 0.0);
}

#[test]
fn empty_deviation_set_is_an_error() {
    let game = security(2, 10.0, 1.0);
    assert!(best_deviation_gain(&game, &[3.0, 5.0], PlayerId(0), &[]).is_err());
}

#[test]
fn all_p_profile_is_nash() {
    let game = security(3, 10.0, 0.5);
    let grid = game.level_grid().to_vec();
    let deviations = vec![grid.clone(); 3];
    let verdict = check_epsilon_equilibrium(&game, &[10.0, 10.0, 10.0], 0.0, &deviations).unwrap();
    assert!(verdict.passed);
    assert_eq!(verdict.max_gain, 0.0);
}

#[test]
fn tcp_default_profile_holds_at_the_capped_threshold() {
    let params = TcpParams::new(10, 100.0, 5.0).unwrap();
    let game = TcpGame::with_default_grid(params);
    let window = grid::linear(0.0, params.k + 1.0, 1000);
    let deviations = vec![window; 10];
    let profile = vec![1.0; 10];

    let epsilon = neareq::tcp::tcp_epsilon_bound(&params);
    assert_eq!(epsilon, 50.0);
    let verdict = check_epsilon_equilibrium(&game, &profile, epsilon, &deviations).unwrap();
    assert!(verdict.passed);
    // the binding deviation is the top of the window: gain c(n-1)K/(n(n+K))
    assert!((verdict.max_gain - 30.0).abs() < 1e-9);

    let tight = check_epsilon_equilibrium(&game, &profile, 30.0 - 1e-6, &deviations).unwrap();
    assert!(!tight.passed);
}

#[test]
fn expensive_links_break_the_full_graph() {
    let params = NetFormParams::new(1.0, 1.0, 0.0, 0.3).unwrap();
    let verdict = verify_full_graph(&params, 4, 0.0, DeviationMode::SingleLink).unwrap();
    assert!(!verdict.passed);
    assert!((verdict.max_gain - 0.05).abs() < 1e-12);
}

#[test]
fn epsilon_monotonicity_on_a_failing_profile() {
    let game = security(2, 10.0, 1.0);
    let grid = game.level_grid().to_vec();
    let deviations = vec![grid.clone(); 2];
    let profile = [3.0, 5.0];
    let strict = check_epsilon_equilibrium(&game, &profile, 0.0, &deviations).unwrap();
    assert!(!strict.passed);
    // passes exactly from the max gain upward
    let at_gain = check_epsilon_equilibrium(&game, &profile, strict.max_gain, &deviations).unwrap();
    assert!(at_gain.passed);
}

#[test]
fn security_escalation_runs_to_the_grid_equilibrium() {
    // exhaustive best responses from (3, 5) climb pairwise and stop at
    // (8, 9): one step below the top still pins the mover at -P, so the
    // last profitable move is to 9
    let game = security(2, 10.0, 1.0);
    let run = best_response_dynamics(&game, &[3.0, 5.0], PlayerOrder::RoundRobin, 50).unwrap();
    assert!(run.converged);
    assert_eq!(
        run.trajectory,
        vec![vec![3.0, 5.0], vec![6.0, 7.0], vec![8.0, 9.0]]
    );
    // the endpoint is itself a grid equilibrium
    let grid = game.level_grid().to_vec();
    let verdict =
        check_epsilon_equilibrium(&game, run.final_profile(), 0.0, &[grid.clone(), grid]).unwrap();
    assert!(verdict.passed);
}

#[test]
fn dynamics_at_a_fixed_point_stop_immediately() {
    let game = security(3, 10.0, 0.5);
    let run =
        best_response_dynamics(&game, &[10.0, 10.0, 10.0], PlayerOrder::RoundRobin, 10).unwrap();
    assert!(run.converged);
    assert_eq!(run.trajectory.len(), 1);
}

#[test]
fn random_order_dynamics_are_seed_deterministic() {
    let game = security(3, 10.0, 0.5);
    let start = [1.0, 4.0, 7.0];
    let a = best_response_dynamics(&game, &start, PlayerOrder::Random { seed: 9 }, 20).unwrap();
    let b = best_response_dynamics(&game, &start, PlayerOrder::Random { seed: 9 }, 20).unwrap();
    assert_eq!(a, b);
}

#[test]
fn tcp_dynamics_alphas_never_decrease() {
    let params = TcpParams::new(3, 100.0, 2.0).unwrap();
    let game = TcpGame::with_default_grid(params);
    let run = best_response_dynamics(&game, &[1.0, 1.0, 1.0], PlayerOrder::RoundRobin, 5).unwrap();
    for pair in run.trajectory.windows(2) {
        for (before, after) in pair[0].iter().zip(&pair[1]) {
            assert!(after >= before);
        }
    }
}

#[test]
fn inverse_transform_hits_the_support_ends() {
    let dist = SecurityCdf::new(SecurityParams::new(3, 10.0).unwrap());
    assert_eq!(inverse_transform_sample(&dist, 0.0).unwrap(), 0.0);
    assert_eq!(inverse_transform_sample(&dist, 1.0).unwrap(), 10.0);
    assert!((inverse_transform_sample(&dist, 0.5).unwrap() - 7.5).abs() < 1e-12);
}

#[test]
fn mc_estimate_matches_the_expected_utility_integral() {
    // n = 2 with both players on the dispersed cdf: the own-draw average
    // of Eu(s) = -P + s(1 - s/P) over the uniform density is -P + P/6
    let params = SecurityParams::new(2, 10.0).unwrap();
    let game = SecurityGame::with_default_grid(params);
    let dist = SecurityCdf::new(params);
    let mixed: Vec<&dyn StrategyDistribution> = vec![&dist, &dist];
    let estimate = mc_expected_utility(&game, &mixed, PlayerId(0), 20_000, 42).unwrap();
    let exact = -10.0 + 10.0 / 6.0;
    assert!(
        (estimate.mean - exact).abs() <= 3.0 * estimate.std_error,
        "mean {} vs {exact} (3se = {})",
        estimate.mean,
        3.0 * estimate.std_error
    );
}

#[test]
fn degenerate_mixed_profile_reproduces_the_pure_utility() {
    let params = SecurityParams::new(3, 10.0).unwrap();
    let game = SecurityGame::with_default_grid(params);
    let a = PointMass(4.0);
    let b = PointMass(7.0);
    let c = PointMass(9.0);
    let mixed: Vec<&dyn StrategyDistribution> = vec![&a, &b, &c];
    let estimate = mc_expected_utility(&game, &mixed, PlayerId(1), 500, 7).unwrap();
    assert_eq!(estimate.mean, -7.0);
    assert_eq!(estimate.std_error, 0.0);
}

#[test]
fn mc_is_bit_identical_for_equal_seeds() {
    let params = SecurityParams::new(3, 10.0).unwrap();
    let game = SecurityGame::with_default_grid(params);
    let dist = SecurityCdf::new(params);
    let mixed: Vec<&dyn StrategyDistribution> = vec![&dist, &dist, &dist];
    let a = mc_expected_utility(&game, &mixed, PlayerId(0), 4000, 123).unwrap();
    let b = mc_expected_utility(&game, &mixed, PlayerId(0), 4000, 123).unwrap();
    assert_eq!(a, b);
    let c = mc_expected_utility(&game, &mixed, PlayerId(0), 4000, 124).unwrap();
    assert_ne!(a.mean, c.mean);
}

#[test]
fn mc_rejects_support_outside_the_strategy_space() {
    let params = SecurityParams::new(2, 10.0).unwrap();
    let game = SecurityGame::with_default_grid(params);
    let inside = PointMass(5.0);
    let outside = PointMass(11.0);
    let mixed: Vec<&dyn StrategyDistribution> = vec![&inside, &outside];
    assert!(mc_expected_utility(&game, &mixed, PlayerId(0), 100, 1).is_err());
}
