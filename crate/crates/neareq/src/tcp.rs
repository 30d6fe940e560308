//! Goodput competition between TCP senders at a shared bottleneck.
//!
//! Each sender controls its additive-increase parameter α ≥ 0 and
//! receives the goodput `u_i = c α_i / (A + α_i)` with
//! `A = Σ_{j≠i} α_j`; the multiplicative-decrease parameter stays at
//! its stock value and is not part of the strategy space. Utility is
//! strictly increasing in the own α, so unconstrained best responses
//! escalate without bound; capping each adjustment at `K` bounds every
//! unilateral gain by `c K / n` from the all-ones default.

use crate::equilibrium::{
    best_response_dynamics, ExtendedValue, GameModel, PlayerId, PlayerOrder, RealStrategyGame,
};
use crate::error::{Error, Result};

/// Sender count, bottleneck capacity, per-deviation cap on α increases
/// and the grid ceiling used for unbounded deviation scans.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TcpParams {
    pub n: usize,
    pub c: f64,
    pub k: f64,
    pub alpha_max: f64,
}

impl TcpParams {
    pub const DEFAULT_ALPHA_MAX: f64 = 1e6;

    pub fn new(n: usize, c: f64, k: f64) -> Result<Self> {
        Self::with_alpha_max(n, c, k, Self::DEFAULT_ALPHA_MAX)
    }

    pub fn with_alpha_max(n: usize, c: f64, k: f64, alpha_max: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: n as f64,
            });
        }
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "c",
                value: c,
            });
        }
        // k = 0 is admitted: it freezes escalation (empty adjustment window)
        if !k.is_finite() || k < 0.0 {
            return Err(Error::InvalidParameter {
                name: "k",
                value: k,
            });
        }
        if !alpha_max.is_finite() || alpha_max <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "alpha_max",
                value: alpha_max,
            });
        }
        Ok(TcpParams { n, c, k, alpha_max })
    }
}

fn validate_alphas(alphas: &[f64], n: usize) -> Result<()> {
    if alphas.len() != n {
        return Err(Error::ProfileLength {
            expected: n,
            found: alphas.len(),
        });
    }
    for &a in alphas {
        if !a.is_finite() || a < 0.0 {
            return Err(Error::NegativeAlpha { alpha: a });
        }
    }
    Ok(())
}

/// Goodput of sender `i`: `c α_i / (A + α_i)`; defined as 0 when
/// `α_i = 0` (a sender that never increases sends nothing, which also
/// settles the 0/0 corner of the all-zero profile).
pub fn tcp_utility(alphas: &[f64], params: &TcpParams, i: PlayerId) -> Result<f64> {
    validate_alphas(alphas, params.n)?;
    if i.0 >= params.n {
        return Err(Error::PlayerOutOfRange {
            player: i.0,
            n: params.n,
        });
    }
    Ok(goodput(alphas, params.c, i.0))
}

fn goodput(alphas: &[f64], c: f64, i: usize) -> f64 {
    let alpha = alphas[i];
    if alpha == 0.0 {
        return 0.0;
    }
    let total: f64 = alphas.iter().sum();
    c * alpha / total
}

/// Closed-form gain of moving from `alpha_i` to `alpha_prime` against a
/// fixed opponent aggregate `A > 0`:
/// `c A (α' - α) / ((A + α')(A + α))`.
///
/// Algebraically identical to the direct utility difference; kept as an
/// independent route for consistency checks.
pub fn tcp_deviation_gain(alpha_i: f64, alpha_prime: f64, a: f64, c: f64) -> Result<f64> {
    for (name, v) in [("alpha_i", alpha_i), ("alpha_prime", alpha_prime), ("c", c)] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidParameter { name, value: v });
        }
    }
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::ZeroAggregate);
    }
    Ok(c * a * (alpha_prime - alpha_i) / ((a + alpha_prime) * (a + alpha_i)))
}

/// The ε threshold that makes the all-ones default an ε-equilibrium
/// under deviations capped at `K`: `ε >= c K / n`.
pub fn tcp_epsilon_bound(params: &TcpParams) -> f64 {
    params.c * params.k / params.n as f64
}

/// Deviation gains from `alpha_i` against aggregate `a` over a
/// geometric α' grid `1, 10, ..., alpha_max`: the machine-checkable
/// stand-in for letting α' grow without bound. The final gain sits
/// within 1% of the analytic limit `c a / (a + α_i)` once `alpha_max`
/// is large enough.
pub fn tcp_gain_scan(params: &TcpParams, alpha_i: f64, a: f64) -> Result<Vec<(f64, f64)>> {
    let mut scan = Vec::new();
    let mut alpha_prime = 1.0;
    while alpha_prime <= params.alpha_max {
        scan.push((
            alpha_prime,
            tcp_deviation_gain(alpha_i, alpha_prime, a, params.c)?,
        ));
        alpha_prime *= 10.0;
    }
    Ok(scan)
}

/// The TCP game wired into the generic checkers. The deviation space is
/// the capped adjustment window `(α_i, α_i + K]`, discretized with
/// `grid_step` so that the window's top end is always on the grid.
#[derive(Debug, Clone)]
pub struct TcpGame {
    params: TcpParams,
    grid_step: f64,
}

impl TcpGame {
    pub fn new(params: TcpParams, grid_step: f64) -> Result<Self> {
        if !grid_step.is_finite() || grid_step <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "grid_step",
                value: grid_step,
            });
        }
        Ok(TcpGame { params, grid_step })
    }

    /// Default step `(K + 1) / 1000`.
    pub fn with_default_grid(params: TcpParams) -> Self {
        TcpGame {
            grid_step: (params.k + 1.0) / 1000.0,
            params,
        }
    }

    pub fn params(&self) -> &TcpParams {
        &self.params
    }
}

impl GameModel for TcpGame {
    type Strategy = f64;

    fn n_players(&self) -> usize {
        self.params.n
    }

    fn utility(&self, profile: &[f64], player: PlayerId) -> ExtendedValue {
        debug_assert_eq!(profile.len(), self.params.n);
        ExtendedValue::finite(goodput(profile, self.params.c, player.0))
    }

    fn deviation_space(&self, player: PlayerId, profile: &[f64]) -> Vec<f64> {
        let alpha = profile[player.0];
        let k = self.params.k;
        if k <= 0.0 {
            return Vec::new();
        }
        let intervals = (k / self.grid_step).round().max(1.0) as usize;
        (1..=intervals)
            .map(|j| alpha + k * j as f64 / intervals as f64)
            .collect()
    }
}

impl RealStrategyGame for TcpGame {
    fn strategy_interval(&self, _player: PlayerId) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }
}

/// Best-response escalation from the all-ones default: each round every
/// sender raises α to the top of its `(α, α + K]` window. Returns the
/// profile after every round, starting with the initial one.
pub fn tcp_escalation(params: &TcpParams, rounds: usize) -> Result<Vec<Vec<f64>>> {
    let game = TcpGame::with_default_grid(*params);
    let initial = vec![1.0; params.n];
    let dynamics = best_response_dynamics(&game, &initial, PlayerOrder::RoundRobin, rounds)?;
    Ok(dynamics.trajectory)
}
