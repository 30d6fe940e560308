//! Seed-deterministic Monte Carlo estimation of expected utility.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::distribution::StrategyDistribution;
use super::game::{PlayerId, RealStrategyGame};

/// Estimate of an expected utility from independent samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub mean: f64,
    /// Sample standard deviation divided by sqrt(samples).
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
}

/// SplitMix64 finalizer; decorrelates consecutive sub-seeds.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// RNG for one sample, derived from the master seed and the sample
/// counter. Sample k always sees the same stream no matter how the
/// sample loop is scheduled.
fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(index)))
}

/// Expected utility of `player` when every player draws independently
/// from their entry in `mixed`, via inverse-transform sampling.
///
/// Deterministic given `(seed, samples)`: per-sample RNGs are derived
/// from the seed and the sample counter. Errors when a distribution's
/// support leaves the game's strategy space.
pub fn mc_expected_utility<G: RealStrategyGame>(
    game: &G,
    mixed: &[&dyn StrategyDistribution],
    player: PlayerId,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    let n = game.n_players();
    if mixed.len() != n {
        return Err(Error::ProfileLength {
            expected: n,
            found: mixed.len(),
        });
    }
    if player.0 >= n {
        return Err(Error::PlayerOutOfRange {
            player: player.0,
            n,
        });
    }
    if samples == 0 {
        return Err(Error::ZeroSamples);
    }
    for (i, dist) in mixed.iter().enumerate() {
        let (lo, hi) = dist.support();
        let (space_lo, space_hi) = game.strategy_interval(PlayerId(i));
        if lo < space_lo || hi > space_hi {
            return Err(Error::SupportOutsideSpace {
                lo,
                hi,
                space_lo,
                space_hi,
            });
        }
    }

    // Welford accumulation keeps the variance single-pass.
    let mut mean = 0.0_f64;
    let mut m2 = 0.0_f64;
    let mut profile = vec![0.0_f64; n];
    for k in 0..samples {
        let mut rng = sample_rng(seed, k);
        for (slot, dist) in profile.iter_mut().zip(mixed) {
            let u: f64 = rng.gen();
            *slot = dist.quantile(u);
        }
        let value = game.utility(&profile, player).as_f64();
        let count = (k + 1) as f64;
        let delta = value - mean;
        mean += delta / count;
        m2 += delta * (value - mean);
    }

    let std_error = if samples > 1 {
        (m2 / (samples - 1) as f64).sqrt() / (samples as f64).sqrt()
    } else {
        0.0
    };
    Ok(MonteCarloEstimate {
        mean,
        std_error,
        samples,
        seed,
    })
}
