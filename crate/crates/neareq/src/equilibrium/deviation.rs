//! Deviation gains and Nash/ε-equilibrium verdicts.

use crate::error::{Error, Result};

use super::game::{GameModel, PlayerId};

/// Best unilateral deviation found for one player.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationReport<S> {
    pub player: PlayerId,
    pub best_alternative: S,
    /// Utility gain of the best alternative relative to the current
    /// profile. Can be negative when the supplied set excludes "stay",
    /// `+inf` when the deviation escapes a `NegInf` baseline.
    pub gain: f64,
}

/// Outcome of an ε-equilibrium check over a pure profile.
#[derive(Debug, Clone, PartialEq)]
pub struct EquilibriumVerdict<S> {
    pub epsilon: f64,
    pub per_player: Vec<DeviationReport<S>>,
    /// Maximum gain over all players.
    pub max_gain: f64,
    /// `max_gain <= epsilon`.
    pub passed: bool,
}

fn validate_profile<G: GameModel>(game: &G, profile: &[G::Strategy]) -> Result<()> {
    if profile.len() != game.n_players() {
        return Err(Error::ProfileLength {
            expected: game.n_players(),
            found: profile.len(),
        });
    }
    Ok(())
}

/// Best deviation for `player` over an explicit set of alternatives.
///
/// Returns the argmax alternative and its gain relative to `profile`;
/// ties are broken by the first strictly-better entry in the set's
/// iteration order. The set may include the current strategy (gain 0)
/// and must be nonempty.
pub fn best_deviation_gain<G: GameModel>(
    game: &G,
    profile: &[G::Strategy],
    player: PlayerId,
    deviations: &[G::Strategy],
) -> Result<DeviationReport<G::Strategy>> {
    validate_profile(game, profile)?;
    if player.0 >= game.n_players() {
        return Err(Error::PlayerOutOfRange {
            player: player.0,
            n: game.n_players(),
        });
    }
    if deviations.is_empty() {
        return Err(Error::EmptyDeviationSet { player: player.0 });
    }

    let mut best: Option<(f64, G::Strategy)> = None;
    for alt in deviations {
        let gain = game.deviation_gain(profile, player, alt);
        match &best {
            Some((g, _)) if gain <= *g => {}
            _ => best = Some((gain, alt.clone())),
        }
    }
    let (gain, best_alternative) = best.expect("nonempty deviation set");
    Ok(DeviationReport {
        player,
        best_alternative,
        gain,
    })
}

/// ε-equilibrium check: pass iff no player can gain more than `epsilon`
/// by switching to one of their supplied alternatives. `epsilon = 0`
/// reproduces the pure Nash condition.
pub fn check_epsilon_equilibrium<G: GameModel>(
    game: &G,
    profile: &[G::Strategy],
    epsilon: f64,
    deviations: &[Vec<G::Strategy>],
) -> Result<EquilibriumVerdict<G::Strategy>> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(Error::InvalidEpsilon { epsilon });
    }
    validate_profile(game, profile)?;
    if deviations.len() != game.n_players() {
        return Err(Error::ProfileLength {
            expected: game.n_players(),
            found: deviations.len(),
        });
    }

    let mut per_player = Vec::with_capacity(game.n_players());
    let mut max_gain = f64::NEG_INFINITY;
    for (i, player_deviations) in deviations.iter().enumerate() {
        let report = best_deviation_gain(game, profile, PlayerId(i), player_deviations)?;
        if report.gain > max_gain {
            max_gain = report.gain;
        }
        per_player.push(report);
    }
    Ok(EquilibriumVerdict {
        epsilon,
        passed: max_gain <= epsilon,
        per_player,
        max_gain,
    })
}
