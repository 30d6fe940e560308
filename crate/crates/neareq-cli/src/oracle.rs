//! Independent reference implementations for cross-checking verdicts.
//!
//! Everything here is deliberately naive and recomputed from first
//! principles: distances come from Floyd-Warshall rather than BFS,
//! betweenness from sigma-product path counting rather than dependency
//! accumulation, and every candidate deviation is evaluated by building
//! the whole alternative state from scratch. Slow by design; used only
//! at verification scale.

use std::collections::BTreeSet;

use neareq::netform::{link_deviations, DeviationMode, NetFormParams, Topology};

// ---------------------------------------------------------------------
// security: exhaustive grid equilibria
// ---------------------------------------------------------------------

fn naive_security_utility(levels: &[f64], p: f64, i: usize) -> f64 {
    let min = levels.iter().copied().fold(f64::INFINITY, f64::min);
    if levels[i] == min {
        -p
    } else {
        -levels[i]
    }
}

/// Every grid profile with no strictly profitable grid deviation, by
/// double loop over profiles and deviations.
pub fn security_grid_nash_naive(n: usize, p: f64, delta: f64) -> Vec<Vec<f64>> {
    let steps = (p / delta).round() as usize;
    let grid: Vec<f64> = (0..=steps)
        .map(|j| {
            if j == steps {
                p
            } else {
                p * j as f64 / steps as f64
            }
        })
        .collect();

    let mut nash = Vec::new();
    let mut idx = vec![0usize; n];
    'outer: loop {
        let profile: Vec<f64> = idx.iter().map(|&j| grid[j]).collect();
        let mut stable = true;
        'players: for i in 0..n {
            let current = naive_security_utility(&profile, p, i);
            for &alt in &grid {
                let mut candidate = profile.clone();
                candidate[i] = alt;
                if naive_security_utility(&candidate, p, i) > current {
                    stable = false;
                    break 'players;
                }
            }
        }
        if stable {
            nash.push(profile);
        }

        let mut pos = n;
        loop {
            if pos == 0 {
                break 'outer;
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
    nash
}

// ---------------------------------------------------------------------
// netform: Floyd-Warshall + sigma-product betweenness
// ---------------------------------------------------------------------

const UNREACHABLE: u64 = u64::MAX / 4;

fn floyd_warshall(t: &Topology) -> Vec<Vec<u64>> {
    let n = t.n();
    let mut dist = vec![vec![UNREACHABLE; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(i, j) in t.links() {
        dist[i][j] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
    dist
}

/// Shortest-path counts between all ordered pairs, from the distance
/// matrix: process targets in order of distance and sum the counts of
/// predecessor neighbors on shortest paths.
fn path_counts(t: &Topology, dist: &[Vec<u64>]) -> Vec<Vec<f64>> {
    let n = t.n();
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(i, j) in t.links() {
        into[j].push(i);
    }
    let mut sigma = vec![vec![0.0_f64; n]; n];
    for source in 0..n {
        sigma[source][source] = 1.0;
        let mut order: Vec<usize> = (0..n).filter(|&k| dist[source][k] < UNREACHABLE).collect();
        order.sort_by_key(|&k| dist[source][k]);
        for &target in &order {
            if target == source {
                continue;
            }
            sigma[source][target] = into[target]
                .iter()
                .filter(|&&v| dist[source][v] + 1 == dist[source][target])
                .map(|&v| sigma[source][v])
                .sum();
        }
    }
    sigma
}

/// Fraction of shortest `j -> k` paths through `i`, averaged over the
/// `(n-1)(n-2)` ordered pairs avoiding `i`: paths through an interior
/// node factor as `sigma(j,i) * sigma(i,k)` when the distances add up.
fn naive_betweenness(t: &Topology, i: usize) -> f64 {
    let n = t.n();
    if n <= 2 {
        return 0.0;
    }
    let dist = floyd_warshall(t);
    let sigma = path_counts(t, &dist);
    let mut acc = 0.0;
    for j in 0..n {
        for k in 0..n {
            if j == k || j == i || k == i {
                continue;
            }
            if dist[j][k] >= UNREACHABLE || sigma[j][k] == 0.0 {
                continue;
            }
            if dist[j][i] + dist[i][k] == dist[j][k] {
                acc += sigma[j][i] * sigma[i][k] / sigma[j][k];
            }
        }
    }
    acc / ((n - 1) * (n - 2)) as f64
}

/// Node utility recomputed from scratch; `None` marks divergence.
pub fn naive_node_utility(t: &Topology, i: usize, params: &NetFormParams) -> Option<f64> {
    let n = t.n();
    let dist = floyd_warshall(t);
    let mut hops: u64 = 0;
    for (j, &d) in dist[i].iter().enumerate() {
        if j == i {
            continue;
        }
        if d >= UNREACHABLE {
            return None;
        }
        hops += d;
    }
    let nf = n as f64;
    let cost = params.s / nf
        + params.l * hops as f64 / nf
        + params.r * naive_betweenness(t, i)
        + params.m * t.out_degree(i) as f64;
    Some(-cost)
}

/// Per-player best gains and the ε verdict, everything rebuilt per
/// deviation.
#[derive(Debug, Clone, PartialEq)]
pub struct NaiveVerdict {
    pub gains: Vec<f64>,
    pub max_gain: f64,
    pub passed: bool,
}

pub fn netform_check_naive(
    t: &Topology,
    params: &NetFormParams,
    epsilon: f64,
    mode: DeviationMode,
) -> NaiveVerdict {
    let n = t.n();
    let strategies = t.to_strategies();
    let mut gains = Vec::with_capacity(n);
    for i in 0..n {
        let base = naive_node_utility(t, i, params);
        let mut best = f64::NEG_INFINITY;
        for deviation in link_deviations(t, i, mode).expect("oracle sizes stay under the guard") {
            let mut alt: Vec<BTreeSet<usize>> = strategies.clone();
            alt[i] = deviation;
            let alt_t = Topology::from_strategies(&alt).expect("valid link sets");
            let alt_u = naive_node_utility(&alt_t, i, params);
            let gain = match (alt_u, base) {
                (Some(a), Some(b)) => a - b,
                (Some(_), None) => f64::INFINITY,
                (None, Some(_)) => f64::NEG_INFINITY,
                (None, None) => 0.0,
            };
            if gain > best {
                best = gain;
            }
        }
        gains.push(best);
    }
    let max_gain = gains.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    NaiveVerdict {
        gains,
        max_gain,
        passed: max_gain <= epsilon,
    }
}
