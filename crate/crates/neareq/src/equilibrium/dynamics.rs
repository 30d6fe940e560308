//! Sequential best-response dynamics.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::deviation::best_deviation_gain;
use super::game::{GameModel, PlayerId};

/// Order in which players move within a round.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayerOrder {
    RoundRobin,
    /// Fresh seeded shuffle every round.
    Random {
        seed: u64,
    },
}

/// Trajectory produced by [`best_response_dynamics`].
#[derive(Debug, Clone, PartialEq)]
pub struct Dynamics<S> {
    /// Initial profile followed by one snapshot per round that changed
    /// at least one strategy.
    pub trajectory: Vec<Vec<S>>,
    /// True iff a full round produced no strict improvement.
    pub converged: bool,
    pub rounds_run: usize,
}

impl<S> Dynamics<S> {
    pub fn final_profile(&self) -> &[S] {
        self.trajectory
            .last()
            .expect("trajectory holds the initial profile")
    }
}

/// Iterate one-player best responses from `initial`.
///
/// Within a round each player in turn switches to their best deviation
/// from [`GameModel::deviation_space`] when it is a strict improvement
/// (gain > 0); weakly-equal alternatives never trigger a move, which
/// rules out cycling among payoff-equal profiles. Players with an empty
/// deviation space simply stay. Stops after a round with no move
/// (converged) or after `max_rounds` (not an error).
pub fn best_response_dynamics<G: GameModel>(
    game: &G,
    initial: &[G::Strategy],
    order: PlayerOrder,
    max_rounds: usize,
) -> Result<Dynamics<G::Strategy>> {
    if max_rounds == 0 {
        return Err(Error::ZeroRounds);
    }
    if initial.len() != game.n_players() {
        return Err(Error::ProfileLength {
            expected: game.n_players(),
            found: initial.len(),
        });
    }

    let n = game.n_players();
    let mut rng = match order {
        PlayerOrder::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        PlayerOrder::RoundRobin => None,
    };

    let mut current = initial.to_vec();
    let mut trajectory = vec![current.clone()];
    let mut converged = false;
    let mut rounds_run = 0;

    for _ in 0..max_rounds {
        let mut turn: Vec<usize> = (0..n).collect();
        if let Some(rng) = rng.as_mut() {
            turn.shuffle(rng);
        }

        let mut moved = false;
        for &i in &turn {
            let player = PlayerId(i);
            let space = game.deviation_space(player, &current);
            if space.is_empty() {
                continue;
            }
            let report = best_deviation_gain(game, &current, player, &space)?;
            if report.gain > 0.0 {
                current[i] = report.best_alternative;
                moved = true;
            }
        }
        rounds_run += 1;
        if moved {
            trajectory.push(current.clone());
        } else {
            converged = true;
            break;
        }
    }

    Ok(Dynamics {
        trajectory,
        converged,
        rounds_run,
    })
}
