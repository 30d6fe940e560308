//! Network-formation game over directed topologies.
//!
//! Nodes choose which outgoing links to maintain; items, routing and
//! request handling are not strategic. A node's cost combines storage,
//! expected retrieval distance, transit routing load and per-link
//! maintenance; disconnection drives utility to negative infinity.
//! Cheap links make the full graph the equilibrium, expensive links the
//! star, and near the crossover `m = l/n` both hold up to small ε.

mod game;
mod metrics;
mod topology;

pub use game::{
    check_topology, epsilon_band_scan, link_deviations, node_cost, node_utility, verify_full_graph,
    verify_star, BandRow, DeviationMode, NetFormGame, NetFormParams, NodeCost,
    FULL_SUBSET_MAX_NODES,
};
pub use metrics::{
    all_pairs_distance, betweenness, betweenness_all, expected_distance, total_distance,
};
pub use topology::{make_topology, Topology, TopologyKind};
