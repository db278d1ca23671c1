//! Search for cyclic voltage lifts of small cubic graphs with prescribed girth.
//!
//! The catalog's high-girth blocks were found with this tool and are frozen as
//! voltage assignments; rerunning with the recorded base/modulus/seed
//! reproduces them. Usage:
//!
//! ```text
//! cargo run --release -p coarsecert --example lift_hunt -- \
//!     --base twelve-cage --modulus 17 --target 16 --seed 1 [--budget 2000000]
//! ```
//!
//! A lift of a girth-g base has girth >= g, and a cycle in the lift projects
//! to a closed walk in the base whose voltage sum is zero, so raising girth
//! means choosing voltages that break every short closed walk. The search is
//! a min-conflicts hill climb: pruned BFS counts short-cycle witnesses and
//! attributes them to base edges, and moves re-randomize a conflicted edge.

use coarsecert::graph::{named, FiniteGraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::VecDeque;

fn base_by_name(name: &str) -> Option<FiniteGraph> {
    Some(match name {
        "heawood" => named::heawood(),
        "mcgee" => named::mcgee(),
        "pappus" => named::pappus(),
        "desargues" => named::desargues(),
        "tutte-coxeter" => named::tutte_coxeter(),
        "foster" => named::foster(),
        "twelve-cage" => named::twelve_cage(),
        "petersen" => named::petersen(),
        _ => return None,
    })
}

/// Reads a plain `u v` edge list (one edge per line, `#` comments).
fn base_from_file(path: &str) -> FiniteGraph {
    let text = std::fs::read_to_string(path).expect("read base file");
    let mut edges = Vec::new();
    let mut max = 0u32;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let u: u32 = it.next().expect("u").parse().expect("u");
        let v: u32 = it.next().expect("v").parse().expect("v");
        max = max.max(u).max(v);
        edges.push((u, v));
    }
    FiniteGraph::new(max as usize + 1, edges).expect("valid base graph")
}

struct LiftScorer {
    n_base: usize,
    m: u32,
    /// adjacency as (neighbor, base edge index, direction)
    adj: Vec<Vec<(u32, u32, i8)>>,
}

struct Score {
    violations: u64,
    by_edge: Vec<u64>,
}

impl LiftScorer {
    fn new(base: &FiniteGraph, m: u32) -> Self {
        let mut adj = vec![Vec::new(); base.n()];
        for (e, &(u, v)) in base.edges().iter().enumerate() {
            adj[u as usize].push((v, e as u32, 1));
            adj[v as usize].push((u, e as u32, -1));
        }
        LiftScorer { n_base: base.n(), m, adj }
    }

    fn lift_n(&self) -> usize {
        self.n_base * self.m as usize
    }

    /// Counts BFS witnesses of cycles shorter than `target` and attributes
    /// each witness to the base edges on its closing walk.
    fn score(&self, voltages: &[u32], target: u32) -> Score {
        let n = self.lift_n();
        let m = self.m;
        let ne = self.adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut parent_edge = vec![u32::MAX; n];
        let mut touched: Vec<u32> = Vec::new();
        let mut queue: VecDeque<u32> = VecDeque::new();
        let mut violations = 0u64;
        let mut by_edge = vec![0u64; ne];
        for root in 0..n as u32 {
            for &t in &touched {
                dist[t as usize] = u32::MAX;
                parent[t as usize] = u32::MAX;
                parent_edge[t as usize] = u32::MAX;
            }
            touched.clear();
            queue.clear();
            dist[root as usize] = 0;
            touched.push(root);
            queue.push_back(root);
            while let Some(x) = queue.pop_front() {
                let dx = dist[x as usize];
                if 2 * dx + 1 >= target {
                    break;
                }
                let (bv, bi) = ((x as usize) / m as usize, (x % m) as u32);
                for &(w, e, sgn) in &self.adj[bv] {
                    let shift =
                        if sgn > 0 { voltages[e as usize] % m } else { m - voltages[e as usize] % m };
                    let wi = (bi + shift) % m;
                    let wl = (w as usize * m as usize + wi as usize) as u32;
                    if dist[wl as usize] == u32::MAX {
                        dist[wl as usize] = dx + 1;
                        parent[wl as usize] = x;
                        parent_edge[wl as usize] = e;
                        touched.push(wl);
                        queue.push_back(wl);
                    } else if parent[x as usize] != wl && dx + dist[wl as usize] + 1 < target {
                        violations += 1;
                        by_edge[e as usize] += 1;
                        let mut cur = x;
                        while parent[cur as usize] != u32::MAX {
                            by_edge[parent_edge[cur as usize] as usize] += 1;
                            cur = parent[cur as usize];
                        }
                        let mut cur = wl;
                        while parent[cur as usize] != u32::MAX {
                            by_edge[parent_edge[cur as usize] as usize] += 1;
                            cur = parent[cur as usize];
                        }
                    }
                }
            }
        }
        Score { violations, by_edge }
    }
}

fn weighted_pick(rng: &mut StdRng, weights: &[u64]) -> Option<usize> {
    let total: u64 = weights.iter().sum();
    if total == 0 {
        return None;
    }
    let mut roll = rng.gen_range(0..total);
    for (i, &w) in weights.iter().enumerate() {
        if roll < w {
            return Some(i);
        }
        roll -= w;
    }
    None
}

fn main() {
    let mut base_name = String::from("twelve-cage");
    let mut m: u32 = 17;
    let mut target: u32 = 16;
    let mut seed: u64 = 1;
    let mut budget: u64 = 2_000_000;
    let mut emit_edges = false;

    let mut base_file: Option<String> = None;
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        let mut value = || args.next().expect("missing value");
        match arg.as_str() {
            "--base" => base_name = value(),
            "--base-file" => base_file = Some(value()),
            "--modulus" => m = value().parse().expect("modulus"),
            "--target" => target = value().parse().expect("target"),
            "--seed" => seed = value().parse().expect("seed"),
            "--budget" => budget = value().parse().expect("budget"),
            "--emit-edges" => emit_edges = true,
            other => panic!("unknown argument {other}"),
        }
    }

    let base = match &base_file {
        Some(path) => {
            base_name = format!("file:{path}");
            base_from_file(path)
        }
        None => base_by_name(&base_name).expect("unknown base graph"),
    };
    let scorer = LiftScorer::new(&base, m);
    eprintln!(
        "hunting girth >= {target}: base {base_name} ({}v), modulus {m} -> {} vertices",
        base.n(),
        scorer.lift_n()
    );

    let ne = base.edges().len();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut voltages: Vec<u32> = (0..ne).map(|_| rng.gen_range(0..m)).collect();
    let mut current = scorer.score(&voltages, target);
    let mut best = current.violations;
    let mut stale = 0u64;

    for evals in 0..budget {
        if current.violations == 0 {
            report(&base, &base_name, m, &voltages, target, emit_edges, seed, evals);
            return;
        }
        // Min-conflicts: mostly re-randomize an edge that lies on violations.
        let e = if rng.gen_bool(0.85) {
            weighted_pick(&mut rng, &current.by_edge).unwrap_or_else(|| rng.gen_range(0..ne))
        } else {
            rng.gen_range(0..ne)
        };
        let old = voltages[e];
        voltages[e] = rng.gen_range(0..m);
        let cand = scorer.score(&voltages, target);
        if cand.violations <= current.violations {
            stale = if cand.violations < current.violations { 0 } else { stale + 1 };
            current = cand;
        } else {
            voltages[e] = old;
            stale += 1;
        }
        if current.violations < best {
            best = current.violations;
            eprintln!("  score {best} after {evals} evals");
        }
        if stale > 600 {
            // Plateau: kick the most conflicted edges.
            for _ in 0..2 {
                if let Some(e) = weighted_pick(&mut rng, &current.by_edge) {
                    voltages[e] = rng.gen_range(0..m);
                }
            }
            current = scorer.score(&voltages, target);
            stale = 0;
        }
    }
    eprintln!("budget exhausted (best score {best})");
    std::process::exit(1);
}

#[allow(clippy::too_many_arguments)]
fn report(
    base: &FiniteGraph,
    base_name: &str,
    m: u32,
    voltages: &[u32],
    target: u32,
    emit_edges: bool,
    seed: u64,
    evals: u64,
) {
    let lift = base.cyclic_lift(m, voltages).expect("connected lift");
    let girth = lift.girth();
    println!(
        "FOUND base={base_name} m={m} n={} girth={girth} target={target} seed={seed} evals={evals}",
        lift.n()
    );
    println!("voltages = {voltages:?};");
    if emit_edges {
        for &(u, v) in lift.edges() {
            println!("{u} {v}");
        }
    }
}
