//! Cost model, deviation enumeration and equilibrium checks for the
//! formation game.

use std::collections::BTreeSet;

use crate::equilibrium::{
    check_epsilon_equilibrium, EquilibriumVerdict, ExtendedValue, GameModel, PlayerId,
};
use crate::error::{Error, Result};

use super::metrics::{betweenness, total_distance};
use super::topology::{make_topology, Topology, TopologyKind};

/// Nominal costs: storing an item (`s`), retrieving one a hop away
/// (`l`), routing a request between two other nodes (`r`), maintaining
/// one outgoing link (`m`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetFormParams {
    pub s: f64,
    pub l: f64,
    pub r: f64,
    pub m: f64,
}

impl NetFormParams {
    pub fn new(s: f64, l: f64, r: f64, m: f64) -> Result<Self> {
        for (name, v) in [("s", s), ("l", l), ("r", r), ("m", m)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidParameter { name, value: v });
            }
        }
        Ok(NetFormParams { s, l, r, m })
    }
}

/// Cost breakdown for one node. The retrieval term is `None` when some
/// node is unreachable, which makes the total infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeCost {
    pub storage: f64,
    pub retrieval: Option<f64>,
    pub routing: f64,
    pub maintenance: f64,
}

impl NodeCost {
    /// `-(storage + retrieval + routing + maintenance)`, or `NegInf`
    /// when retrieval diverges.
    pub fn utility(&self) -> ExtendedValue {
        match self.retrieval {
            None => ExtendedValue::NegInf,
            Some(retrieval) => {
                ExtendedValue::finite(-(self.storage + retrieval + self.routing + self.maintenance))
            }
        }
    }
}

/// Cost of node `i` in topology `t`:
/// `C_i = s/n + l·Ed_i + r·Eb_i + m·deg_out(i)`.
///
/// The retrieval term is evaluated as `(l · Σd) / n` with the hop sum
/// kept integral, so integer-friendly parameter choices stay exact in
/// floating point.
pub fn node_cost(t: &Topology, i: usize, params: &NetFormParams) -> NodeCost {
    let n = t.n() as f64;
    let retrieval = total_distance(t, i).map(|sum| params.l * sum as f64 / n);
    NodeCost {
        storage: params.s / n,
        retrieval,
        routing: params.r * betweenness(t, i),
        maintenance: params.m * t.out_degree(i) as f64,
    }
}

/// Utility of node `i`: the negated cost, `NegInf` when disconnected.
pub fn node_utility(t: &Topology, i: usize, params: &NetFormParams) -> (ExtendedValue, NodeCost) {
    let cost = node_cost(t, i, params);
    (cost.utility(), cost)
}

/// How far deviation enumeration explores a node's link choices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeviationMode {
    /// Toggle one link at a time (all single additions and removals).
    SingleLink,
    /// Every one of the `2^(n-1)` outgoing-link sets.
    FullSubset,
}

/// Node count above which full-subset enumeration is refused.
pub const FULL_SUBSET_MAX_NODES: usize = 16;

/// Alternative outgoing-link sets for node `i`, in canonical order
/// (single toggles by ascending target; subsets lexicographically by
/// sorted target list).
pub fn link_deviations(
    t: &Topology,
    i: usize,
    mode: DeviationMode,
) -> Result<Vec<BTreeSet<usize>>> {
    let n = t.n();
    let current: BTreeSet<usize> = t.out_neighbors(i).collect();
    match mode {
        DeviationMode::SingleLink => Ok((0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let mut set = current.clone();
                if !set.insert(j) {
                    set.remove(&j);
                }
                set
            })
            .collect()),
        DeviationMode::FullSubset => {
            if n > FULL_SUBSET_MAX_NODES {
                return Err(Error::SubsetGuard {
                    n,
                    limit: FULL_SUBSET_MAX_NODES,
                });
            }
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let mut subsets: Vec<BTreeSet<usize>> = (0u32..1 << others.len())
                .map(|mask| {
                    others
                        .iter()
                        .enumerate()
                        .filter(|(bit, _)| mask >> bit & 1 == 1)
                        .map(|(_, &j)| j)
                        .collect()
                })
                .collect();
            subsets.sort_by(|a, b| a.iter().cmp(b.iter()));
            Ok(subsets)
        }
    }
}

/// The formation game wired into the generic checkers: a strategy is a
/// node's outgoing-link set.
#[derive(Debug, Clone)]
pub struct NetFormGame {
    params: NetFormParams,
    n: usize,
    mode: DeviationMode,
}

impl NetFormGame {
    pub fn new(params: NetFormParams, n: usize, mode: DeviationMode) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTopology {
                reason: format!("need at least 2 nodes, got {n}"),
            });
        }
        if mode == DeviationMode::FullSubset && n > FULL_SUBSET_MAX_NODES {
            return Err(Error::SubsetGuard {
                n,
                limit: FULL_SUBSET_MAX_NODES,
            });
        }
        Ok(NetFormGame { params, n, mode })
    }

    pub fn params(&self) -> &NetFormParams {
        &self.params
    }

    pub fn mode(&self) -> DeviationMode {
        self.mode
    }

    fn topology(&self, profile: &[BTreeSet<usize>]) -> Topology {
        Topology::from_strategies(profile).expect("profiles carry valid link sets")
    }

    /// Deviation sets for every node of `t`, in player order.
    pub fn deviations_for(&self, t: &Topology) -> Result<Vec<Vec<BTreeSet<usize>>>> {
        (0..self.n)
            .map(|i| link_deviations(t, i, self.mode))
            .collect()
    }
}

impl GameModel for NetFormGame {
    type Strategy = BTreeSet<usize>;

    fn n_players(&self) -> usize {
        self.n
    }

    fn utility(&self, profile: &[BTreeSet<usize>], player: PlayerId) -> ExtendedValue {
        node_utility(&self.topology(profile), player.0, &self.params).0
    }

    fn deviation_space(
        &self,
        player: PlayerId,
        profile: &[BTreeSet<usize>],
    ) -> Vec<BTreeSet<usize>> {
        link_deviations(&self.topology(profile), player.0, self.mode)
            .expect("mode guard checked at construction")
    }

    /// Cost deltas instead of a utility difference: the storage term and
    /// the unchanged part of the retrieval sum cancel exactly, so gains
    /// like `±(l/n - m)` come out of a single small-magnitude
    /// subtraction instead of the difference of two rounded totals.
    fn deviation_gain(
        &self,
        profile: &[BTreeSet<usize>],
        player: PlayerId,
        alternative: &BTreeSet<usize>,
    ) -> f64 {
        let i = player.0;
        let base_t = self.topology(profile);
        let mut alt_profile = profile.to_vec();
        alt_profile[i] = alternative.clone();
        let alt_t = self.topology(&alt_profile);
        match (total_distance(&alt_t, i), total_distance(&base_t, i)) {
            (None, None) => 0.0,
            (None, Some(_)) => f64::NEG_INFINITY,
            (Some(_), None) => f64::INFINITY,
            (Some(alt_sum), Some(base_sum)) => {
                let n = self.n as f64;
                let d_retrieval = self.params.l * (alt_sum as f64 - base_sum as f64) / n;
                let d_maintenance =
                    self.params.m * (alt_t.out_degree(i) as f64 - base_t.out_degree(i) as f64);
                let d_routing = if self.params.r == 0.0 {
                    0.0
                } else {
                    self.params.r * (betweenness(&alt_t, i) - betweenness(&base_t, i))
                };
                -(d_retrieval + d_maintenance + d_routing)
            }
        }
    }
}

/// ε-check of an arbitrary topology under the given deviation mode.
pub fn check_topology(
    t: &Topology,
    params: &NetFormParams,
    epsilon: f64,
    mode: DeviationMode,
) -> Result<EquilibriumVerdict<BTreeSet<usize>>> {
    let game = NetFormGame::new(*params, t.n(), mode)?;
    let profile = t.to_strategies();
    let deviations = game.deviations_for(t)?;
    check_epsilon_equilibrium(&game, &profile, epsilon, &deviations)
}

/// ε-check of the fully connected network. With `r = 0`, removing `q`
/// links gains exactly `q (m - l/n)`, so the ε = 0 check passes iff
/// `m <= l/n`.
pub fn verify_full_graph(
    params: &NetFormParams,
    n: usize,
    epsilon: f64,
    mode: DeviationMode,
) -> Result<EquilibriumVerdict<BTreeSet<usize>>> {
    check_topology(
        &make_topology(TopologyKind::Full, n)?,
        params,
        epsilon,
        mode,
    )
}

/// ε-check of the star (bidirectional spokes around node 0) under
/// full-subset deviations. Dropping a spoke disconnects someone
/// (infinite cost), and a peripheral chord changes the adder's utility
/// by exactly `-m + l/n`, so the ε = 0 check passes when `m >= l/n`.
pub fn verify_star(
    params: &NetFormParams,
    n: usize,
    epsilon: f64,
) -> Result<EquilibriumVerdict<BTreeSet<usize>>> {
    check_topology(
        &make_topology(TopologyKind::Star, n)?,
        params,
        epsilon,
        DeviationMode::FullSubset,
    )
}

/// One row of an ε-band scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandRow {
    pub m: f64,
    pub max_gain: f64,
    pub passed: bool,
}

/// Re-run the ε-check of `t` for every maintenance cost in `m_grid`,
/// holding `s`, `l`, `r` fixed. Makes the band claim — that any
/// topology holds up for `m` within ε of `l/n` — testable per topology.
pub fn epsilon_band_scan(
    t: &Topology,
    s: f64,
    l: f64,
    r: f64,
    epsilon: f64,
    m_grid: &[f64],
    mode: DeviationMode,
) -> Result<Vec<BandRow>> {
    let mut rows = Vec::with_capacity(m_grid.len());
    for &m in m_grid {
        let params = NetFormParams::new(s, l, r, m)?;
        let verdict = check_topology(t, &params, epsilon, mode)?;
        rows.push(BandRow {
            m,
            max_gain: verdict.max_gain,
            passed: verdict.passed,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn full(n: usize) -> Topology {
        make_topology(TopologyKind::Full, n).unwrap()
    }

    fn star(n: usize) -> Topology {
        make_topology(TopologyKind::Star, n).unwrap()
    }

    #[test]
    fn full_graph_cost_breakdown() {
        let params = NetFormParams::new(1.0, 1.0, 1.0, 0.2).unwrap();
        let (u, cost) = node_utility(&full(4), 0, &params);
        assert_eq!(cost.storage, 0.25);
        assert_eq!(cost.retrieval, Some(0.75));
        assert_eq!(cost.routing, 0.0);
        assert!((cost.maintenance - 0.6).abs() < 1e-12);
        assert!((u.as_f64() + 1.6).abs() < 1e-12);
    }

    #[test]
    fn node_without_outgoing_links_diverges() {
        let params = NetFormParams::new(1.0, 1.0, 0.0, 0.1).unwrap();
        let t = Topology::new(3, [(1, 0), (1, 2), (2, 1)]).unwrap();
        assert!(node_utility(&t, 0, &params).0.is_neg_inf());
    }

    #[test]
    fn star_center_spoke_removal_diverges() {
        let params = NetFormParams::new(1.0, 1.0, 0.0, 0.3).unwrap();
        let t = star(4);
        let mut links: Vec<_> = t.links().iter().copied().collect();
        links.retain(|&l| l != (0, 3));
        let cut = Topology::new(4, links).unwrap();
        assert!(node_utility(&cut, 0, &params).0.is_neg_inf());
    }

    #[test]
    fn single_link_deviation_counts() {
        let t = Topology::new(4, [(0, 1), (0, 2), (1, 0), (2, 0), (3, 0)]).unwrap();
        // node 0 has links to 1 and 2: two removals plus the addition of 3
        let devs = link_deviations(&t, 0, DeviationMode::SingleLink).unwrap();
        assert_eq!(devs.len(), 3);
        let full = full(4);
        let removals = link_deviations(&full, 0, DeviationMode::SingleLink).unwrap();
        assert_eq!(removals.len(), 3);
        assert!(removals.iter().all(|set| set.len() == 2));
    }

    #[test]
    fn full_subset_enumerates_everything() {
        let devs = link_deviations(&full(4), 1, DeviationMode::FullSubset).unwrap();
        assert_eq!(devs.len(), 8);
        assert_eq!(devs[0], BTreeSet::new());
        // lexicographic by sorted target list
        let listed: Vec<Vec<usize>> = devs.iter().map(|s| s.iter().copied().collect()).collect();
        let mut sorted = listed.clone();
        sorted.sort();
        assert_eq!(listed, sorted);
    }

    #[test]
    fn full_subset_guard() {
        let t = make_topology(TopologyKind::DirectedRing, 17).unwrap();
        assert!(matches!(
            link_deviations(&t, 0, DeviationMode::FullSubset),
            Err(Error::SubsetGuard { .. })
        ));
    }

    #[test]
    fn full_graph_verdicts() {
        let n = 4;
        let cheap = NetFormParams::new(1.0, 1.0, 0.0, 0.2).unwrap();
        assert!(
            verify_full_graph(&cheap, n, 0.0, DeviationMode::FullSubset)
                .unwrap()
                .passed
        );

        let dear = NetFormParams::new(1.0, 1.0, 0.0, 0.3).unwrap();
        let verdict = verify_full_graph(&dear, n, 0.0, DeviationMode::SingleLink).unwrap();
        assert!(!verdict.passed);
        assert!((verdict.max_gain - 0.05).abs() < 1e-12);
        assert!(
            verify_full_graph(&dear, n, 0.05, DeviationMode::SingleLink)
                .unwrap()
                .passed
        );
    }

    #[test]
    fn star_verdicts() {
        let n = 4;
        let dear = NetFormParams::new(1.0, 1.0, 0.0, 0.3).unwrap();
        assert!(verify_star(&dear, n, 0.0).unwrap().passed);

        let cheap = NetFormParams::new(1.0, 1.0, 0.0, 0.2).unwrap();
        let verdict = verify_star(&cheap, n, 0.0).unwrap();
        assert!(!verdict.passed);
        // best deviation keeps the spoke and adds both chords
        assert!((verdict.max_gain - 0.1).abs() < 1e-12);

        // routing cost does not change the verdict: a peripheral chord
        // creates no transit through its adder
        let routed = NetFormParams::new(1.0, 1.0, 1.0, 0.3).unwrap();
        assert!(verify_star(&routed, n, 0.0).unwrap().passed);
    }

    #[test]
    fn band_scan_full_and_star_hold_ring_breaks() {
        let epsilon = 0.05;
        let center = 0.25;
        let m_grid = crate::grid::linear(center - epsilon, center + epsilon, 10);

        for rows in [
            epsilon_band_scan(
                &full(4),
                1.0,
                1.0,
                0.0,
                epsilon,
                &m_grid,
                DeviationMode::SingleLink,
            )
            .unwrap(),
            epsilon_band_scan(
                &star(4),
                1.0,
                1.0,
                0.0,
                epsilon,
                &m_grid,
                DeviationMode::SingleLink,
            )
            .unwrap(),
        ] {
            assert!(rows.iter().all(|row| row.passed), "{rows:?}");
        }

        let ring = make_topology(TopologyKind::DirectedRing, 6).unwrap();
        let m = 1.0 / 6.0;
        let rows =
            epsilon_band_scan(&ring, 1.0, 1.0, 0.0, 0.01, &[m], DeviationMode::SingleLink).unwrap();
        assert!(!rows[0].passed);
        // the chord 0 -> 3 cuts the distance sum by 6: gain l - m
        assert!((rows[0].max_gain - (1.0 - m)).abs() < 1e-12);
    }

    #[test]
    fn removing_q_links_costs_exactly_q_times_the_margin() {
        // with r = 0 each dropped link trades l/n of retrieval for m of
        // maintenance
        for n in 3..=6usize {
            let m = 0.1;
            let params = NetFormParams::new(2.0, 1.0, 0.0, m).unwrap();
            let t = full(n);
            let (base, _) = node_utility(&t, 0, &params);
            // q = n-1 would disconnect node 0 outright
            for q in 1..=2usize.min(n - 2) {
                let mut links: Vec<_> = t.links().iter().copied().collect();
                links.retain(|&(i, j)| !(i == 0 && j <= q));
                let cut = Topology::new(n, links).unwrap();
                let (after, _) = node_utility(&cut, 0, &params);
                let delta = after.as_f64() - base.as_f64();
                let expected = q as f64 * (m - 1.0 / n as f64);
                assert!(
                    (delta - expected).abs() <= 1e-12,
                    "n={n} q={q}: {delta} vs {expected}"
                );
            }
        }
    }

    #[test]
    fn star_chord_changes_no_transit_for_the_adder() {
        for n in 3..=6usize {
            let t = star(n);
            let mut links: Vec<_> = t.links().iter().copied().collect();
            links.push((1, 2));
            let chorded = Topology::new(n, links).unwrap();
            assert_eq!(betweenness(&t, 1), 0.0);
            assert_eq!(betweenness(&chorded, 1), 0.0);

            // so the utility delta is -m + l/n regardless of r
            for r in [0.0, 1.0, 3.5] {
                let params = NetFormParams::new(1.0, 1.0, r, 0.3).unwrap();
                let delta = node_utility(&chorded, 1, &params).0.as_f64()
                    - node_utility(&t, 1, &params).0.as_f64();
                let expected = -0.3 + 1.0 / n as f64;
                assert!((delta - expected).abs() <= 1e-12, "n={n} r={r}: {delta}");
            }
        }
    }

    #[test]
    fn max_gain_moves_monotonically_with_m() {
        // removals bind on the full graph (gain rises with m), additions
        // on the star (gain falls with m)
        let m_grid: Vec<f64> = (0..=8).map(|j| 0.05 + 0.05 * j as f64).collect();
        let full_rows = epsilon_band_scan(
            &full(4),
            1.0,
            1.0,
            0.0,
            0.0,
            &m_grid,
            DeviationMode::SingleLink,
        )
        .unwrap();
        let star_rows = epsilon_band_scan(
            &star(4),
            1.0,
            1.0,
            0.0,
            0.0,
            &m_grid,
            DeviationMode::SingleLink,
        )
        .unwrap();
        for pair in full_rows.windows(2) {
            assert!(pair[1].max_gain >= pair[0].max_gain);
        }
        for pair in star_rows.windows(2) {
            assert!(pair[1].max_gain <= pair[0].max_gain);
        }
    }

    #[test]
    fn vertex_transitive_topologies_have_uniform_utilities() {
        let params = NetFormParams::new(1.0, 1.0, 0.5, 0.2).unwrap();
        for t in [
            full(5),
            make_topology(TopologyKind::DirectedRing, 5).unwrap(),
        ] {
            let utilities: Vec<f64> = (0..5)
                .map(|i| node_utility(&t, i, &params).0.as_f64())
                .collect();
            for &u in &utilities[1..] {
                assert!((u - utilities[0]).abs() < 1e-12);
            }
        }
    }
}
