//! The game interface the generic checkers run against.

use std::fmt;

use super::value::ExtendedValue;

/// Index of a player in an n-player game; valid indices are `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(pub usize);

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A normal-form game with pure strategies of type `Strategy`.
///
/// `utility` must be a pure function of its arguments: the checkers rely
/// on re-evaluating it for candidate deviation profiles.
pub trait GameModel {
    type Strategy: Clone + PartialEq + fmt::Debug;

    fn n_players(&self) -> usize;

    /// Utility of `player` under `profile` (one strategy per player).
    fn utility(&self, profile: &[Self::Strategy], player: PlayerId) -> ExtendedValue;

    /// Alternative pure strategies available to `player` at `profile`.
    ///
    /// This is the game's own deviation set, used by best-response
    /// dynamics; the ε-checkers also accept caller-supplied sets. The
    /// returned order is the canonical tie-breaking order.
    fn deviation_space(&self, player: PlayerId, profile: &[Self::Strategy]) -> Vec<Self::Strategy>;

    /// Gain for `player` of switching to `alternative`, everyone else
    /// fixed.
    ///
    /// The default evaluates both utilities and subtracts. Games whose
    /// gains telescope may override to cancel shared cost terms before
    /// rounding; an override must agree with the default to 1e-12 and
    /// reproduce its infinities exactly.
    fn deviation_gain(
        &self,
        profile: &[Self::Strategy],
        player: PlayerId,
        alternative: &Self::Strategy,
    ) -> f64 {
        let baseline = self.utility(profile, player);
        let mut candidate = profile.to_vec();
        candidate[player.0] = alternative.clone();
        self.utility(&candidate, player).gain_over(baseline)
    }
}

/// Games whose strategies are real numbers from a fixed interval.
///
/// Required by the Monte Carlo estimator, which validates that mixed
/// strategies are supported inside the strategy space.
pub trait RealStrategyGame: GameModel<Strategy = f64> {
    /// Closed interval of admissible strategies for `player`; the upper
    /// bound may be `f64::INFINITY` for unbounded spaces.
    fn strategy_interval(&self, player: PlayerId) -> (f64, f64);
}
