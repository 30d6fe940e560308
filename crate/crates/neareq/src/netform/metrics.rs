//! Distance and betweenness metrics over directed topologies.

use std::collections::VecDeque;

use super::topology::Topology;

/// Hop counts between all ordered pairs via BFS from every source;
/// `None` marks an unreachable target, the diagonal is 0.
pub fn all_pairs_distance(t: &Topology) -> Vec<Vec<Option<u32>>> {
    let n = t.n();
    let adj = adjacency(t);
    (0..n).map(|s| bfs_distances(&adj, s)).collect()
}

fn adjacency(t: &Topology) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); t.n()];
    for &(i, j) in t.links() {
        adj[i].push(j);
    }
    adj
}

fn bfs_distances(adj: &[Vec<usize>], source: usize) -> Vec<Option<u32>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Total hop count from `i` to all other nodes; `None` when some node
/// is unreachable.
pub fn total_distance(t: &Topology, i: usize) -> Option<u64> {
    let adj = adjacency(t);
    let dist = bfs_distances(&adj, i);
    let mut sum: u64 = 0;
    for (j, d) in dist.iter().enumerate() {
        if j == i {
            continue;
        }
        sum += u64::from((*d)?);
    }
    Some(sum)
}

/// Mean hop count from `i` to the other nodes, normalized by `n` (the
/// node itself contributes distance 0). `None` when some node is
/// unreachable, which sends the node's utility to negative infinity.
pub fn expected_distance(t: &Topology, i: usize) -> Option<f64> {
    total_distance(t, i).map(|sum| sum as f64 / t.n() as f64)
}

/// Probability that node `i` lies strictly inside a shortest path
/// between two uniformly chosen other nodes.
///
/// Fractional counting over all shortest paths, ordered pairs `(j, k)`
/// with `j, k != i`, normalized by `(n-1)(n-2)`; pairs with no path
/// contribute 0.
pub fn betweenness(t: &Topology, i: usize) -> f64 {
    betweenness_all(t)[i]
}

/// Betweenness of every node at once (Brandes' accumulation: BFS from
/// each source, then back-propagate dependency scores).
pub fn betweenness_all(t: &Topology) -> Vec<f64> {
    let n = t.n();
    let adj = adjacency(t);
    let mut score = vec![0.0_f64; n];

    for s in 0..n {
        let mut stack: Vec<usize> = Vec::new();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut sigma = vec![0.0_f64; n];
        let mut dist = vec![-1_i64; n];
        sigma[s] = 1.0;
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in &adj[v] {
                if dist[w] < 0 {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] += sigma[v];
                    preds[w].push(v);
                }
            }
        }

        let mut delta = vec![0.0_f64; n];
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                score[w] += delta[w];
            }
        }
    }

    if n <= 2 {
        // no pair excludes a third node
        return vec![0.0; n];
    }
    let pairs = ((n - 1) * (n - 2)) as f64;
    score.iter().map(|&raw| raw / pairs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netform::topology::{make_topology, TopologyKind};

    #[test]
    fn full_graph_distances_all_one() {
        let t = make_topology(TopologyKind::Full, 4).unwrap();
        let d = all_pairs_distance(&t);
        for (i, row) in d.iter().enumerate() {
            for (j, &hops) in row.iter().enumerate() {
                assert_eq!(hops, Some(u32::from(i != j)));
            }
        }
    }

    #[test]
    fn ring_distances_count_hops() {
        let t = make_topology(TopologyKind::DirectedRing, 3).unwrap();
        let d = all_pairs_distance(&t);
        assert_eq!(d[0][1], Some(1));
        assert_eq!(d[0][2], Some(2));
        assert_eq!(d[2][1], Some(2));
    }

    #[test]
    fn star_peripheral_to_peripheral_is_two() {
        let t = make_topology(TopologyKind::Star, 4).unwrap();
        let d = all_pairs_distance(&t);
        assert_eq!(d[1][2], Some(2));
        assert_eq!(d[1][0], Some(1));
    }

    #[test]
    fn unreachable_is_none() {
        let t = Topology::new(3, [(0, 1)]).unwrap();
        let d = all_pairs_distance(&t);
        assert_eq!(d[0][2], None);
        assert_eq!(d[1][0], None);
    }

    #[test]
    fn expected_distance_full_graph() {
        let t = make_topology(TopologyKind::Full, 4).unwrap();
        assert_eq!(expected_distance(&t, 0), Some(0.75));
    }

    #[test]
    fn expected_distance_after_one_removal_rises_by_one_over_n() {
        let t = make_topology(TopologyKind::Full, 4).unwrap();
        let mut links: Vec<_> = t.links().iter().copied().collect();
        links.retain(|&l| l != (0, 1));
        let t2 = Topology::new(4, links).unwrap();
        assert_eq!(expected_distance(&t2, 0), Some(1.0));
    }

    #[test]
    fn expected_distance_star_peripheral() {
        let t = make_topology(TopologyKind::Star, 4).unwrap();
        assert_eq!(expected_distance(&t, 1), Some(1.25));
    }

    #[test]
    fn expected_distance_none_when_disconnected() {
        let t = Topology::new(3, [(0, 1)]).unwrap();
        assert_eq!(expected_distance(&t, 0), None);
    }

    #[test]
    fn betweenness_full_graph_is_zero() {
        let t = make_topology(TopologyKind::Full, 4).unwrap();
        for i in 0..4 {
            assert_eq!(betweenness(&t, i), 0.0);
        }
    }

    #[test]
    fn betweenness_star_center_is_one() {
        let t = make_topology(TopologyKind::Star, 4).unwrap();
        assert_eq!(betweenness(&t, 0), 1.0);
        assert_eq!(betweenness(&t, 1), 0.0);
    }

    #[test]
    fn betweenness_ring_node() {
        // of the two ordered pairs avoiding node 0, only 2 -> 1 transits it
        let t = make_topology(TopologyKind::DirectedRing, 3).unwrap();
        assert_eq!(betweenness(&t, 0), 0.5);
    }
}
