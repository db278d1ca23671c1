//! Finite simple connected graphs with shortest-path combinatorics.
//!
//! Graphs are the raw material for every certified family: girth, balls and
//! boundaries here are exact integer computations, and the metric-space layer
//! ([`crate::metric`]) wraps the BFS distance table produced here.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// Length of the shortest simple cycle; `Infinite` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

impl Girth {
    pub fn as_finite(self) -> Option<u32> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    /// `true` when `self >= bound` (infinite girth exceeds every bound).
    pub fn at_least(self, bound: u32) -> bool {
        match self {
            Girth::Finite(g) => g >= bound,
            Girth::Infinite => true,
        }
    }
}

impl PartialOrd for Girth {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Girth {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Girth::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// A finite simple connected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adj: Vec<Vec<u32>>,
}

impl FiniteGraph {
    /// Builds a graph, validating simplicity and connectivity.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut norm: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            if u as usize >= n {
                return Err(Error::InvalidIndex { index: u as usize, size: n });
            }
            if v as usize >= n {
                return Err(Error::InvalidIndex { index: v as usize, size: n });
            }
            if u == v {
                return Err(Error::InvalidInput { what: format!("loop at vertex {u}") });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        let before = norm.len();
        norm.dedup();
        if norm.len() != before {
            return Err(Error::InvalidInput { what: "duplicate edge".into() });
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let g = FiniteGraph { n, edges: norm, adj };
        if n == 0 {
            return Err(Error::InvalidInput { what: "empty vertex set".into() });
        }
        if !g.is_connected() {
            return Err(Error::InvalidInput { what: "graph is not connected".into() });
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n).all(|v| self.degree(v) == d)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// BFS distances from `src`. The graph is connected, so all entries are finite.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src as u32]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Row-major all-pairs shortest-path table.
    pub fn apsp(&self) -> Vec<u32> {
        let mut table = vec![0u32; self.n * self.n];
        for v in 0..self.n {
            let row = self.bfs_distances(v);
            table[v * self.n..(v + 1) * self.n].copy_from_slice(&row);
        }
        table
    }

    /// Girth via per-root BFS: every non-tree edge closes a walk of length
    /// `dist(u) + dist(w) + 1` which contains a simple cycle no longer than
    /// that, and the walk is tight when the root lies on a shortest cycle.
    pub fn girth(&self) -> Girth {
        match self.shortest_cycle_below(u32::MAX) {
            Some(g) => Girth::Finite(g),
            None => Girth::Infinite,
        }
    }

    /// Length of the shortest cycle if it is `< bound`, else `None`.
    /// Used as a fast rejection test when hunting for large-girth graphs.
    pub fn shortest_cycle_below(&self, bound: u32) -> Option<u32> {
        let mut best = bound;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![u32::MAX; self.n];
        let mut touched: Vec<u32> = Vec::new();
        for root in 0..self.n {
            for &t in &touched {
                dist[t as usize] = u32::MAX;
                parent[t as usize] = u32::MAX;
            }
            touched.clear();
            dist[root] = 0;
            touched.push(root as u32);
            let mut queue = VecDeque::from([root as u32]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                // No cycle through the root shorter than `best` can be found
                // beyond this depth.
                if 2 * du + 1 >= best {
                    break;
                }
                for &w in &self.adj[u as usize] {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = du + 1;
                        parent[w as usize] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u as usize] != w {
                        let cand = du + dist[w as usize] + 1;
                        if cand < best {
                            best = cand;
                        }
                    }
                }
            }
        }
        (best < bound).then_some(best)
    }

    /// Shortest cycle length among cycles through edge `(u, v)`:
    /// `1 + d(u, v)` in the graph with that edge removed. `None` if the edge
    /// lies on no cycle.
    pub fn shortest_cycle_through_edge(&self, u: u32, v: u32) -> Option<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[u as usize] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &w in &self.adj[x as usize] {
                if (x == u && w == v) || (x == v && w == u) {
                    continue;
                }
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[x as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        (dist[v as usize] != u32::MAX).then(|| dist[v as usize] + 1)
    }

    pub fn diameter(&self) -> u32 {
        (0..self.n)
            .map(|v| self.bfs_distances(v).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Decodes LCF notation: a Hamiltonian cycle on `pattern.len() * reps`
    /// vertices plus the chords `i -> i + pattern[i mod len]`.
    pub fn from_lcf(pattern: &[i64], reps: usize) -> Result<Self> {
        let k = pattern.len();
        let n = k * reps;
        if n == 0 {
            return Err(Error::InvalidInput { what: "empty LCF pattern".into() });
        }
        let mut edges = Vec::with_capacity(n + n / 2);
        for i in 0..n {
            edges.push((i as u32, ((i + 1) % n) as u32));
        }
        for i in 0..n {
            let step = pattern[i % k];
            let j = (i as i64 + step).rem_euclid(n as i64) as u32;
            let (a, b) = ((i as u32).min(j), (i as u32).max(j));
            edges.push((a, b));
        }
        // Chord list contains each chord twice (once from each endpoint);
        // FiniteGraph::new rejects duplicates, so dedupe here.
        edges.sort_unstable();
        edges.dedup();
        FiniteGraph::new(n, edges)
    }

    /// Cyclic cover: vertex `(v, i)` for `i` in `Z_m`, and for the `e`-th base
    /// edge `(u, v)` with voltage `a = voltages[e]`, edges `(u, i) ~ (v, i + a)`.
    pub fn cyclic_lift(&self, m: u32, voltages: &[u32]) -> Result<Self> {
        if voltages.len() != self.edges.len() {
            return Err(Error::InvalidInput {
                what: format!(
                    "expected {} voltages, got {}",
                    self.edges.len(),
                    voltages.len()
                ),
            });
        }
        if m == 0 {
            return Err(Error::InvalidInput { what: "modulus must be positive".into() });
        }
        let n = self.n * m as usize;
        let mut edges = Vec::with_capacity(self.edges.len() * m as usize);
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let a = voltages[e] % m;
            for i in 0..m {
                let x = u as usize * m as usize + i as usize;
                let y = v as usize * m as usize + ((i + a) % m) as usize;
                edges.push((x as u32, y as u32));
            }
        }
        FiniteGraph::new(n, edges)
    }
}

/// Named constructions used across tests and the block catalog.
pub mod named {
    use super::*;

    pub fn complete(n: usize) -> FiniteGraph {
        let edges = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect::<Vec<_>>();
        FiniteGraph::new(n, edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> FiniteGraph {
        assert!(n >= 3);
        let edges = (0..n as u32).map(|u| (u, (u + 1) % n as u32));
        FiniteGraph::new(n, edges).expect("cycle graph")
    }

    pub fn path(n: usize) -> FiniteGraph {
        assert!(n >= 1);
        let edges = (0..n.saturating_sub(1) as u32).map(|u| (u, u + 1));
        FiniteGraph::new(n, edges).expect("path graph")
    }

    /// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
    pub fn petersen() -> FiniteGraph {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        FiniteGraph::new(10, edges).expect("petersen")
    }

    /// Heawood graph: 14 vertices, girth 6.
    pub fn heawood() -> FiniteGraph {
        FiniteGraph::from_lcf(&[5, -5], 7).expect("heawood")
    }

    /// McGee graph: 24 vertices, girth 7.
    pub fn mcgee() -> FiniteGraph {
        FiniteGraph::from_lcf(&[12, 7, -7], 8).expect("mcgee")
    }

    /// Pappus graph: 18 vertices, girth 6.
    pub fn pappus() -> FiniteGraph {
        FiniteGraph::from_lcf(&[5, 7, -7, 7, -7, -5], 3).expect("pappus")
    }

    /// Desargues graph: 20 vertices, girth 6.
    pub fn desargues() -> FiniteGraph {
        FiniteGraph::from_lcf(&[5, -5, 9, -9], 5).expect("desargues")
    }

    /// Tutte–Coxeter graph: 30 vertices, girth 8.
    pub fn tutte_coxeter() -> FiniteGraph {
        FiniteGraph::from_lcf(&[-13, -9, 7, -7, 9, 13], 5).expect("tutte-coxeter")
    }

    /// Foster graph: 90 vertices, girth 10.
    pub fn foster() -> FiniteGraph {
        FiniteGraph::from_lcf(&[17, -9, 37, -37, 9, -17], 15).expect("foster")
    }

    /// Cubic graph on 126 vertices with girth 12 (the smallest possible size
    /// for that girth).
    pub fn twelve_cage() -> FiniteGraph {
        FiniteGraph::from_lcf(
            &[
                17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11, -21, -57, 59, -17,
            ],
            7,
        )
        .expect("twelve-cage")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    /// Exhaustive shortest-simple-cycle search; independent of the BFS girth.
    fn girth_oracle(g: &FiniteGraph) -> Girth {
        let n = g.n();
        let mut best = u32::MAX;
        // Enumerate simple paths starting at their minimal vertex.
        fn dfs(
            g: &FiniteGraph,
            start: u32,
            current: u32,
            visited: &mut Vec<bool>,
            len: u32,
            best: &mut u32,
        ) {
            for &w in g.neighbors(current as usize) {
                if w == start && len >= 2 {
                    if len + 1 < *best {
                        *best = len + 1;
                    }
                } else if w > start && !visited[w as usize] && len + 1 < *best {
                    visited[w as usize] = true;
                    dfs(g, start, w, visited, len + 1, best);
                    visited[w as usize] = false;
                }
            }
        }
        for start in 0..n as u32 {
            let mut visited = vec![false; n];
            visited[start as usize] = true;
            dfs(g, start, start, &mut visited, 0, &mut best);
        }
        if best == u32::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    #[test]
    fn girth_trivial_examples() {
        assert_eq!(complete(3).girth(), Girth::Finite(3));
        assert_eq!(cycle(6).girth(), Girth::Finite(6));
        assert_eq!(path(5).girth(), Girth::Infinite);
        assert_eq!(petersen().girth(), Girth::Finite(5));
    }

    #[test]
    fn girth_matches_oracle_on_small_graphs() {
        let mut graphs = vec![complete(4), complete(5), cycle(5), cycle(9), path(7), petersen()];
        // A few pseudo-random connected graphs on <= 10 vertices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        'outer: for _ in 0..40 {
            let n = 4 + (next() % 7) as usize;
            let mut edges = Vec::new();
            for u in 1..n as u32 {
                edges.push((next() as u32 % u, u)); // random spanning tree
            }
            for _ in 0..(next() % 6) {
                let u = (next() % n as u64) as u32;
                let v = (next() % n as u64) as u32;
                if u != v {
                    edges.push((u.min(v), u.max(v)));
                }
            }
            edges.sort_unstable();
            edges.dedup();
            match FiniteGraph::new(n, edges) {
                Ok(g) => graphs.push(g),
                Err(_) => continue 'outer,
            }
        }
        for g in &graphs {
            assert_eq!(g.girth(), girth_oracle(g), "graph on {} vertices", g.n());
        }
    }

    #[test]
    fn named_graphs_have_expected_parameters() {
        let cases: [(&str, FiniteGraph, usize, u32); 7] = [
            ("heawood", heawood(), 14, 6),
            ("mcgee", mcgee(), 24, 7),
            ("pappus", pappus(), 18, 6),
            ("desargues", desargues(), 20, 6),
            ("tutte-coxeter", tutte_coxeter(), 30, 8),
            ("foster", foster(), 90, 10),
            ("twelve-cage", twelve_cage(), 126, 12),
        ];
        for (name, g, n, girth) in cases {
            assert_eq!(g.n(), n, "{name}: vertex count");
            assert!(g.is_regular(3), "{name}: cubic");
            assert_eq!(g.girth(), Girth::Finite(girth), "{name}: girth");
        }
    }

    #[test]
    fn cycle_through_edge() {
        let g = petersen();
        for &(u, v) in g.edges() {
            assert_eq!(g.shortest_cycle_through_edge(u, v), Some(5));
        }
        let p = path(4);
        assert_eq!(p.shortest_cycle_through_edge(0, 1), None);
    }

    #[test]
    fn cyclic_lift_covers_base() {
        let base = heawood();
        let volts = vec![0u32; base.edges().len()];
        // Zero voltages give m disjoint copies, which fails connectivity.
        assert!(base.cyclic_lift(3, &volts).is_err());
        // A lift with some nonzero voltages stays cubic and can only raise girth.
        let mut volts = vec![0u32; base.edges().len()];
        for (i, v) in volts.iter_mut().enumerate() {
            *v = (i as u32 * 5 + 1) % 7;
        }
        if let Ok(lift) = base.cyclic_lift(7, &volts) {
            assert_eq!(lift.n(), 98);
            assert!(lift.is_regular(3));
            assert!(lift.girth() >= base.girth());
        }
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(FiniteGraph::new(3, [(0, 0)]).is_err());
        assert!(FiniteGraph::new(3, [(0, 1), (0, 1)]).is_err());
        assert!(FiniteGraph::new(3, [(0, 1)]).is_err()); // disconnected
        assert!(FiniteGraph::new(2, [(0, 5)]).is_err());
    }
}
