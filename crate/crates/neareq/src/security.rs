//! Security-level game.
//!
//! Each of n players picks a security level from `[0, P]`. The players
//! at the lowest level are compromised and pay the fixed penalty `P`;
//! everyone else pays their own level. The pure game escalates to the
//! all-`P` profile, while the mixed strategy given by [`SecurityCdf`]
//! spreads levels over the whole interval at a bounded deviation gain.
//!
//! Tie semantics: in the pure game every player attaining the minimum
//! is compromised. The expected-utility formulas instead count a player
//! as compromised only when all opponents are strictly above her level;
//! under a continuous opponent distribution the two rules differ on a
//! measure-zero event, which Monte Carlo absorbs in its tolerance.

use crate::equilibrium::{GameModel, PlayerId, RealStrategyGame, StrategyDistribution};
use crate::error::{Error, Result};
use crate::grid;

/// Player count and penalty. The strategy space is `[0, P]`: levels
/// above `P` cost more than being compromised and are never rational.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecurityParams {
    pub n: usize,
    pub p: f64,
}

impl SecurityParams {
    pub fn new(n: usize, p: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: n as f64,
            });
        }
        if !p.is_finite() || p <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "p",
                value: p,
            });
        }
        Ok(SecurityParams { n, p })
    }
}

fn validate_levels(levels: &[f64], params: &SecurityParams) -> Result<()> {
    if levels.len() != params.n {
        return Err(Error::ProfileLength {
            expected: params.n,
            found: levels.len(),
        });
    }
    for &s in levels {
        if !(0.0..=params.p).contains(&s) {
            return Err(Error::LevelOutOfRange {
                level: s,
                max: params.p,
            });
        }
    }
    Ok(())
}

/// All players attaining the minimum level; ties mean everyone tied at
/// the minimum is compromised.
pub fn compromised_set(levels: &[f64]) -> Vec<PlayerId> {
    let Some(min) = levels.iter().copied().reduce(f64::min) else {
        return Vec::new();
    };
    levels
        .iter()
        .enumerate()
        .filter(|(_, &s)| s == min)
        .map(|(i, _)| PlayerId(i))
        .collect()
}

/// Per-player utilities: `-P` for the compromised set, `-s_i` otherwise.
pub fn security_utility(levels: &[f64], params: &SecurityParams) -> Result<Vec<f64>> {
    validate_levels(levels, params)?;
    let min = levels.iter().copied().reduce(f64::min).unwrap();
    Ok(levels
        .iter()
        .map(|&s| if s == min { -params.p } else { -s })
        .collect())
}

/// CDF of the dispersed mixed strategy:
/// `F(s) = 1 - (1 - s/P)^(1/(n-1))` on `[0, P)`, clamped to 0 below and
/// 1 above.
pub fn security_cdf(s: f64, params: &SecurityParams) -> f64 {
    if s <= 0.0 {
        0.0
    } else if s >= params.p {
        1.0
    } else {
        1.0 - (1.0 - s / params.p).powf(1.0 / (params.n - 1) as f64)
    }
}

/// Inverse of [`security_cdf`]: `s = P (1 - (1 - u)^(n-1))`.
pub fn security_quantile(u: f64, params: &SecurityParams) -> Result<f64> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::ProbabilityOutOfRange { value: u });
    }
    Ok(params.p * (1.0 - (1.0 - u).powi((params.n - 1) as i32)))
}

/// The dispersed mixed strategy as a [`StrategyDistribution`].
#[derive(Debug, Clone, Copy)]
pub struct SecurityCdf {
    params: SecurityParams,
}

impl SecurityCdf {
    pub fn new(params: SecurityParams) -> Self {
        SecurityCdf { params }
    }
}

impl StrategyDistribution for SecurityCdf {
    fn support(&self) -> (f64, f64) {
        (0.0, self.params.p)
    }

    fn cdf(&self, s: f64) -> f64 {
        security_cdf(s, &self.params)
    }

    fn quantile(&self, u: f64) -> f64 {
        debug_assert!((0.0..=1.0).contains(&u));
        self.params.p * (1.0 - (1.0 - u).powi((self.params.n - 1) as i32))
    }
}

/// Expected utility of playing level `s` when every opponent draws from
/// [`SecurityCdf`]: `Eu(s) = -P + s (1 - s/P)`.
pub fn expected_utility_closed_form(s: f64, params: &SecurityParams) -> Result<f64> {
    if !(0.0..=params.p).contains(&s) {
        return Err(Error::LevelOutOfRange {
            level: s,
            max: params.p,
        });
    }
    Ok(-params.p + s * (1.0 - s / params.p))
}

/// Expected utility of playing level `s` against n-1 opponents drawing
/// i.i.d. from `opponent_cdf`:
/// `Eu(s) = -P (1 - F(s))^(n-1) - s (1 - (1 - F(s))^(n-1))`.
pub fn expected_utility_general(
    s: f64,
    opponent_cdf: &dyn StrategyDistribution,
    params: &SecurityParams,
) -> Result<f64> {
    if !(0.0..=params.p).contains(&s) {
        return Err(Error::LevelOutOfRange {
            level: s,
            max: params.p,
        });
    }
    let (lo, hi) = opponent_cdf.support();
    if lo < 0.0 || hi > params.p {
        return Err(Error::SupportOutsideSpace {
            lo,
            hi,
            space_lo: 0.0,
            space_hi: params.p,
        });
    }
    let all_above = (1.0 - opponent_cdf.cdf(s)).powi((params.n - 1) as i32);
    Ok(-params.p * all_above - s * (1.0 - all_above))
}

/// Result of [`mixed_epsilon_gain_detailed`]: the gain plus an estimate
/// of the quadrature error in its expectation term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedGainReport {
    pub gain: f64,
    /// Richardson estimate `|I_h - I_2h| / 3` of the trapezoid error.
    pub quadrature_error: f64,
}

/// Largest expected gain any player can realize by replacing the shared
/// mixed strategy with one pure level from the grid.
///
/// Returns `sup_s Eu(s) - E[Eu]` where the supremum runs over the grid
/// with the given step and the expectation over the player's own draw.
/// The expectation integrates in quantile space (trapezoid over an
/// equally fine u-grid), which sidesteps the unbounded density the
/// dispersed strategy has at `s = P` for n >= 3.
pub fn mixed_epsilon_gain(
    params: &SecurityParams,
    strategy: &dyn StrategyDistribution,
    s_grid_step: f64,
) -> Result<f64> {
    Ok(mixed_epsilon_gain_detailed(params, strategy, s_grid_step)?.gain)
}

/// [`mixed_epsilon_gain`] with the quadrature tolerance reported
/// alongside (the integral recomputed at half resolution bounds the
/// trapezoid error).
pub fn mixed_epsilon_gain_detailed(
    params: &SecurityParams,
    strategy: &dyn StrategyDistribution,
    s_grid_step: f64,
) -> Result<MixedGainReport> {
    let s_grid = grid::from_step(0.0, params.p, s_grid_step)?;

    let mut sup = f64::NEG_INFINITY;
    for &s in &s_grid {
        let eu = expected_utility_general(s, strategy, params)?;
        if eu > sup {
            sup = eu;
        }
    }

    let points = s_grid.len();
    let u_grid = grid::linear(0.0, 1.0, points - 1);
    let integrand: Vec<f64> = u_grid
        .iter()
        .map(|&u| expected_utility_general(strategy.quantile(u), strategy, params))
        .collect::<Result<_>>()?;
    let expected = uniform_trapezoid(&integrand);

    // half-resolution pass (the final interval absorbs an odd point)
    let mut coarse_idx: Vec<usize> = (0..points).step_by(2).collect();
    if *coarse_idx.last().expect("grid nonempty") != points - 1 {
        coarse_idx.push(points - 1);
    }
    let coarse: f64 = coarse_idx
        .windows(2)
        .map(|pair| {
            0.5 * (u_grid[pair[1]] - u_grid[pair[0]]) * (integrand[pair[0]] + integrand[pair[1]])
        })
        .sum();

    Ok(MixedGainReport {
        gain: sup - expected,
        quadrature_error: (expected - coarse).abs() / 3.0,
    })
}

/// Trapezoid rule over equally spaced samples of the unit interval; the
/// single final division keeps constant integrands exact.
fn uniform_trapezoid(values: &[f64]) -> f64 {
    let intervals = (values.len() - 1) as f64;
    let mut acc = 0.5 * (values[0] + values[values.len() - 1]);
    for &v in &values[1..values.len() - 1] {
        acc += v;
    }
    acc / intervals
}

/// Every profile on the `[0, P]` grid with step `delta` where no player
/// has a strictly profitable grid deviation, in lexicographic order.
///
/// The check per player is exact index arithmetic: with `m` the
/// smallest opponent index, the best reply on the grid is `m + 1` when
/// that exists (stepping just above the compromised band) and anything
/// at or below `m` otherwise. Enumeration is guarded at 1e8 profiles.
pub fn enumerate_grid_nash(params: &SecurityParams, delta: f64) -> Result<Vec<Vec<f64>>> {
    let levels = grid::from_step(0.0, params.p, delta)?;
    let steps = levels.len() - 1;

    let limit: u128 = 100_000_000;
    let mut profiles: u128 = 1;
    for _ in 0..params.n {
        profiles = profiles.saturating_mul((steps + 1) as u128);
        if profiles > limit {
            return Err(Error::EnumerationTooLarge { profiles, limit });
        }
    }

    let n = params.n;
    let mut idx = vec![0usize; n];
    let mut nash = Vec::new();
    loop {
        if grid_profile_is_nash(&idx, steps) {
            nash.push(idx.iter().map(|&j| levels[j]).collect());
        }
        // odometer, most-significant digit first for lexicographic order
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(nash);
            }
            pos -= 1;
            if idx[pos] < steps {
                idx[pos] += 1;
                for slot in idx[pos + 1..].iter_mut() {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// No player can strictly improve: compromised players need the next
/// grid point above the opponents' minimum to already cost `P`, and
/// safe players must sit exactly one step above it.
fn grid_profile_is_nash(idx: &[usize], steps: usize) -> bool {
    for i in 0..idx.len() {
        let others_min = idx
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, &v)| v)
            .min()
            .expect("n >= 2");
        if idx[i] <= others_min {
            // compromised; escaping to others_min + 1 must not beat -P
            if others_min + 1 < steps {
                return false;
            }
        } else if idx[i] > others_min + 1 {
            // can drop to others_min + 1 and pay strictly less
            return false;
        }
    }
    true
}

/// The security game wired into the generic checkers: strategies are
/// levels on the `[0, P]` grid with the configured step.
#[derive(Debug, Clone)]
pub struct SecurityGame {
    params: SecurityParams,
    level_grid: Vec<f64>,
}

impl SecurityGame {
    pub fn new(params: SecurityParams, grid_step: f64) -> Result<Self> {
        let level_grid = grid::from_step(0.0, params.p, grid_step)?;
        Ok(SecurityGame { params, level_grid })
    }

    /// Grid with the default step `P/1000`.
    pub fn with_default_grid(params: SecurityParams) -> Self {
        SecurityGame {
            level_grid: grid::linear(0.0, params.p, 1000),
            params,
        }
    }

    pub fn params(&self) -> &SecurityParams {
        &self.params
    }

    pub fn level_grid(&self) -> &[f64] {
        &self.level_grid
    }
}

impl GameModel for SecurityGame {
    type Strategy = f64;

    fn n_players(&self) -> usize {
        self.params.n
    }

    fn utility(&self, profile: &[f64], player: PlayerId) -> crate::equilibrium::ExtendedValue {
        debug_assert_eq!(profile.len(), self.params.n);
        let min = profile.iter().copied().reduce(f64::min).unwrap();
        let s = profile[player.0];
        crate::equilibrium::ExtendedValue::finite(if s == min { -self.params.p } else { -s })
    }

    fn deviation_space(&self, _player: PlayerId, _profile: &[f64]) -> Vec<f64> {
        self.level_grid.clone()
    }
}

impl RealStrategyGame for SecurityGame {
    fn strategy_interval(&self, _player: PlayerId) -> (f64, f64) {
        (0.0, self.params.p)
    }
}
