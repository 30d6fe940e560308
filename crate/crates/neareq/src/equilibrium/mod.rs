//! Game-agnostic equilibrium machinery.
//!
//! A game implements [`GameModel`]; the checkers in this module then
//! compute per-player deviation gains, Nash/ε-equilibrium verdicts and
//! best-response trajectories without knowing anything about the game's
//! strategy type. Mixed strategies over real intervals are covered by
//! [`StrategyDistribution`] together with inverse-transform sampling and
//! a seed-deterministic Monte Carlo estimator.

mod deviation;
mod distribution;
mod dynamics;
mod game;
mod monte_carlo;
mod value;

pub use deviation::{
    best_deviation_gain, check_epsilon_equilibrium, DeviationReport, EquilibriumVerdict,
};
pub use distribution::{inverse_transform_sample, PointMass, StrategyDistribution};
pub use dynamics::{best_response_dynamics, Dynamics, PlayerOrder};
pub use game::{GameModel, PlayerId, RealStrategyGame};
pub use monte_carlo::{mc_expected_utility, MonteCarloEstimate};
pub use value::ExtendedValue;
