//! Frozen grid-equilibrium sets for the security game.
//!
//! The sets below were derived by hand and confirmed with an exhaustive
//! double-loop brute force (every profile, every grid deviation,
//! utilities recomputed from scratch). Three families survive:
//! the all-P profile, every profile on {P-δ, P} whose minimum is P-δ,
//! and each profile with a single player at P-2δ and everyone else at
//! P-δ — in that last family the one-step escape still lands on the
//! compromised payoff, so nobody can strictly improve.

use neareq::security::{enumerate_grid_nash, SecurityParams};

fn family(n: usize, p: f64, delta: f64) -> Vec<Vec<f64>> {
    let mut set = Vec::new();
    // all levels in {P-δ, P}, at least one at P-δ
    for mask in 1u32..1 << n {
        set.push(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { p - delta } else { p })
                .collect(),
        );
    }
    // one player two steps down, the rest one step down
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

#[test]
fn frozen_set_for_three_players_at_half_steps() {
    let params = SecurityParams::new(3, 10.0).unwrap();
    let nash = enumerate_grid_nash(&params, 0.5).unwrap();
    let expected = vec![
        vec![9.0, 9.5, 9.5],
        vec![9.5, 9.0, 9.5],
        vec![9.5, 9.5, 9.0],
        vec![9.5, 9.5, 9.5],
        vec![9.5, 9.5, 10.0],
        vec![9.5, 10.0, 9.5],
        vec![9.5, 10.0, 10.0],
        vec![10.0, 9.5, 9.5],
        vec![10.0, 9.5, 10.0],
        vec![10.0, 10.0, 9.5],
        vec![10.0, 10.0, 10.0],
    ];
    assert_eq!(nash, expected);
    assert_eq!(nash, family(3, 10.0, 0.5));
}

#[test]
fn family_formula_holds_across_sizes() {
    for (n, p, delta) in [(2, 10.0, 2.5), (2, 10.0, 1.0), (3, 6.0, 1.0), (4, 2.0, 0.5)] {
        let params = SecurityParams::new(n, p).unwrap();
        let nash = enumerate_grid_nash(&params, delta).unwrap();
        assert_eq!(nash, family(n, p, delta), "n={n} P={p} delta={delta}");
    }
}

#[test]
fn shrinking_the_step_tightens_the_spread_toward_all_p() {
    let params = SecurityParams::new(3, 10.0).unwrap();
    let spread = |set: &[Vec<f64>]| -> f64 {
        10.0 - set.iter().flatten().copied().fold(f64::INFINITY, f64::min)
    };
    let coarse = enumerate_grid_nash(&params, 0.5).unwrap();
    let fine = enumerate_grid_nash(&params, 0.1).unwrap();
    // lowest level in any equilibrium sits two steps below P
    assert_eq!(spread(&coarse), 1.0);
    assert!((spread(&fine) - 0.2).abs() < 1e-12);
    assert_eq!(fine, family(3, 10.0, 0.1));
}
