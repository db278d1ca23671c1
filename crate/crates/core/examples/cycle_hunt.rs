//! Fast voltage-lift search with explicit cycle constraints.
//!
//! For a base of girth g and a target girth T <= 2g, a Z_m lift has girth
//! >= T iff every simple base cycle of length < T has nonzero signed voltage
//! sum mod m (shorter non-simple closed walks cannot exist below 2g, and a
//! repeated cycle doubles its length). The search enumerates those cycles
//! once and runs WalkSAT-style min-conflicts on the per-edge voltages with
//! incremental sum maintenance, then re-verifies the winner by a full girth
//! computation on the lifted graph.
//!
//! ```text
//! cargo run --release -p coarsecert --example cycle_hunt -- \
//!     --base twelve-cage --modulus 16 --target 16 --seed 1
//! ```

use coarsecert::catalog;
use coarsecert::graph::FiniteGraph;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::HashMap;

/// All simple cycles of length exactly `len`, as (edge, sign) lists.
fn cycles_of_length(g: &FiniteGraph, len: usize) -> Vec<Vec<(u32, i8)>> {
    let n = g.n();
    let mut edge_index = HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edge_index.insert((u, v), (e as u32, 1i8));
        edge_index.insert((v, u), (e as u32, -1i8));
    }
    let mut cycles = Vec::new();
    let mut path: Vec<u32> = Vec::with_capacity(len + 1);
    let mut on_path = vec![false; n];
    for start in 0..n as u32 {
        let dist = g.bfs_distances(start as usize);
        path.clear();
        path.push(start);
        on_path[start as usize] = true;
        dfs(g, start, len, &dist, &mut path, &mut on_path, &mut cycles, &edge_index);
        on_path[start as usize] = false;
    }
    cycles
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &FiniteGraph,
    start: u32,
    len: usize,
    dist: &[u32],
    path: &mut Vec<u32>,
    on_path: &mut Vec<bool>,
    cycles: &mut Vec<Vec<(u32, i8)>>,
    edge_index: &HashMap<(u32, u32), (u32, i8)>,
) {
    let current = *path.last().unwrap();
    let t = path.len() - 1;
    for &w in g.neighbors(current as usize) {
        if w == start && t == len - 1 {
            if path[1] < current {
                let mut edges: Vec<(u32, i8)> =
                    path.windows(2).map(|p| edge_index[&(p[0], p[1])]).collect();
                edges.push(edge_index[&(current, start)]);
                cycles.push(edges);
            }
            continue;
        }
        if w <= start || on_path[w as usize] || t + 1 >= len {
            continue;
        }
        if dist[w as usize] as usize > len - (t + 1) {
            continue;
        }
        path.push(w);
        on_path[w as usize] = true;
        dfs(g, start, len, dist, path, on_path, cycles, edge_index);
        path.pop();
        on_path[w as usize] = false;
    }
}

struct System {
    m: u32,
    /// cycle -> (edge, sign)
    cycles: Vec<Vec<(u32, i8)>>,
    /// edge -> (cycle, sign)
    through: Vec<Vec<(u32, i8)>>,
    sums: Vec<u32>,
    violated: Vec<u32>,
    index_in_violated: Vec<u32>,
}

const NOT_VIOLATED: u32 = u32::MAX;

impl System {
    fn new(cycles: Vec<Vec<(u32, i8)>>, num_edges: usize, m: u32, voltages: &[u32]) -> Self {
        let mut through = vec![Vec::new(); num_edges];
        for (c, cyc) in cycles.iter().enumerate() {
            for &(e, s) in cyc {
                through[e as usize].push((c as u32, s));
            }
        }
        let mut sys = System {
            m,
            cycles,
            through,
            sums: Vec::new(),
            violated: Vec::new(),
            index_in_violated: Vec::new(),
        };
        sys.reset(voltages);
        sys
    }

    fn reset(&mut self, voltages: &[u32]) {
        let m = self.m;
        self.sums = self
            .cycles
            .iter()
            .map(|cyc| {
                let mut s = 0i64;
                for &(e, sign) in cyc {
                    s += sign as i64 * voltages[e as usize] as i64;
                }
                s.rem_euclid(m as i64) as u32
            })
            .collect();
        self.violated.clear();
        self.index_in_violated = vec![NOT_VIOLATED; self.cycles.len()];
        for c in 0..self.cycles.len() {
            if self.sums[c] == 0 {
                self.index_in_violated[c] = self.violated.len() as u32;
                self.violated.push(c as u32);
            }
        }
    }

    fn count(&self) -> usize {
        self.violated.len()
    }

    fn set_sum(&mut self, c: usize, new: u32) {
        let was = self.sums[c] == 0;
        let is = new == 0;
        self.sums[c] = new;
        if was && !is {
            let pos = self.index_in_violated[c] as usize;
            let last = *self.violated.last().unwrap();
            self.violated[pos] = last;
            self.index_in_violated[last as usize] = pos as u32;
            self.violated.pop();
            self.index_in_violated[c] = NOT_VIOLATED;
        } else if !was && is {
            self.index_in_violated[c] = self.violated.len() as u32;
            self.violated.push(c as u32);
        }
    }

    /// Applies `voltage[e] += delta (mod m)`, updating affected cycles.
    fn apply(&mut self, e: usize, delta: u32) {
        let m = self.m as i64;
        let through = std::mem::take(&mut self.through[e]);
        for &(c, sign) in &through {
            let new = (self.sums[c as usize] as i64 + sign as i64 * delta as i64).rem_euclid(m);
            self.set_sum(c as usize, new as u32);
        }
        self.through[e] = through;
    }

    /// Violations among cycles through `e` if `delta` were applied.
    fn probe(&self, e: usize, delta: u32) -> usize {
        let m = self.m as i64;
        self.through[e]
            .iter()
            .filter(|&&(c, sign)| {
                (self.sums[c as usize] as i64 + sign as i64 * delta as i64).rem_euclid(m) == 0
            })
            .count()
    }
}

fn main() {
    let mut base_name = String::from("twelve-cage");
    let mut m: u32 = 16;
    let mut target: u32 = 16;
    let mut seed: u64 = 1;
    let mut budget: u64 = 50_000_000;
    let mut greedy: f64 = 0.8;

    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        let mut value = || args.next().expect("missing value");
        match arg.as_str() {
            "--base" => base_name = value(),
            "--modulus" => m = value().parse().expect("modulus"),
            "--target" => target = value().parse().expect("target"),
            "--seed" => seed = value().parse().expect("seed"),
            "--budget" => budget = value().parse().expect("budget"),
            "--greedy" => greedy = value().parse().expect("greedy"),
            other => panic!("unknown argument {other}"),
        }
    }

    let base = catalog::by_name(&base_name).expect("catalog block");
    let girth = base.girth().as_finite().expect("finite girth");
    assert!(
        target <= 2 * girth,
        "cycle constraints are exact only up to twice the base girth"
    );
    eprintln!(
        "hunting girth >= {target}: base {base_name} ({}v, girth {girth}), modulus {m} -> {}v",
        base.n(),
        base.n() * m as usize
    );

    let t = std::time::Instant::now();
    let mut all_cycles = Vec::new();
    let mut len = girth;
    while len < target {
        let cyc = cycles_of_length(&base, len as usize);
        eprintln!("  {} cycles of length {len}", cyc.len());
        all_cycles.extend(cyc);
        len += if girth % 2 == 0 { 2 } else { 1 };
    }
    eprintln!("  enumeration took {:?}", t.elapsed());

    let ne = base.edges().len();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut voltages: Vec<u32> = (0..ne).map(|_| rng.gen_range(0..m)).collect();
    let mut sys = System::new(all_cycles, ne, m, &voltages);
    eprintln!("  initial violations: {}", sys.count());

    // Restart when no improvement for this many steps.
    const STALE_LIMIT: u64 = 4_000_000;
    let mut best = usize::MAX;
    let mut best_since_restart = usize::MAX;
    let mut last_improvement = 0u64;
    let t = std::time::Instant::now();
    for step in 0..budget {
        if sys.count() == 0 {
            eprintln!("solved after {step} steps ({:?})", t.elapsed());
            finish(&base, &base_name, m, &voltages, target, seed);
            return;
        }
        if step - last_improvement > STALE_LIMIT {
            for v in voltages.iter_mut() {
                *v = rng.gen_range(0..m);
            }
            sys.reset(&voltages);
            best_since_restart = usize::MAX;
            last_improvement = step;
            eprintln!("  restart at step {step} (best {best})");
        }
        // Pick a violated cycle, then an edge on it.
        let c = sys.violated[rng.gen_range(0..sys.violated.len())] as usize;
        let cyc = &sys.cycles[c];
        let (e, _) = cyc[rng.gen_range(0..cyc.len())];
        let delta = if rng.gen_bool(greedy) {
            // Greedy: a delta minimizing violations among cycles through e,
            // ties broken randomly.
            let mut best_delta = 1;
            let mut best_cost = usize::MAX;
            let mut ties = 0u32;
            for d in 1..m {
                let cost = sys.probe(e as usize, d);
                if cost < best_cost {
                    best_cost = cost;
                    best_delta = d;
                    ties = 1;
                } else if cost == best_cost {
                    ties += 1;
                    if rng.gen_range(0..ties) == 0 {
                        best_delta = d;
                    }
                }
            }
            best_delta
        } else {
            rng.gen_range(1..m)
        };
        sys.apply(e as usize, delta);
        voltages[e as usize] = (voltages[e as usize] + delta) % m;
        if sys.count() < best_since_restart {
            best_since_restart = sys.count();
            last_improvement = step;
            if best_since_restart < best {
                best = best_since_restart;
                if best < 40 {
                    eprintln!("  {} violations after {step} steps", best);
                }
            }
        }
    }
    eprintln!("budget exhausted (best {best})");
    std::process::exit(1);
}

fn finish(base: &FiniteGraph, base_name: &str, m: u32, voltages: &[u32], target: u32, seed: u64) {
    let lift = base.cyclic_lift(m, voltages).expect("connected lift");
    let girth = lift.girth();
    assert!(girth.at_least(target), "verification failed: girth {girth}");
    println!(
        "FOUND base={base_name} m={m} n={} girth={girth} target={target} seed={seed}",
        lift.n()
    );
    println!("voltages = {voltages:?};");
}
