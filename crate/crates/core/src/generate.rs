//! Seeded random generation of large-girth cubic families.
//!
//! Strategy: configuration-model 3-regular graphs followed by girth-driven
//! double-edge swaps. A swap removes an edge lying on a short cycle and is
//! accepted only if the two replacement edges lie on no short cycle and the
//! graph stays simple and connected, so the number of short cycles strictly
//! decreases. Infeasible targets are rejected up front by the Moore bound.
//! Explicit constructions beyond the generator's reach are ingested from
//! files or taken from [`crate::catalog`].

use crate::error::{Error, Result};
use crate::graph::FiniteGraph;
use crate::metric::SpaceFamily;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Smallest order of a graph with minimum degree 3 and the given girth
/// (Moore bound; `d = 3`).
pub fn moore_minimum_order(girth: u32) -> usize {
    if girth <= 3 {
        return 4;
    }
    if girth % 2 == 1 {
        // 1 + 3 * (2^((g-1)/2) - 1)
        let r = (girth - 1) / 2;
        1 + 3 * ((1usize << r) - 1)
    } else {
        // 2 * (2^(g/2) - 1)
        let r = girth / 2;
        2 * ((1usize << r) - 1)
    }
}

/// Generates a family of connected 3-regular graphs with girth at least the
/// per-block targets, deterministically from `seed`.
pub fn generate_large_girth_family(
    degree_bound: u32,
    girth_targets: &[u32],
    sizes: &[usize],
    seed: u64,
) -> Result<SpaceFamily> {
    if degree_bound < 3 {
        return Err(Error::InvalidInput { what: "degree bound must be at least 3".into() });
    }
    if girth_targets.is_empty() || girth_targets.len() != sizes.len() {
        return Err(Error::InvalidInput {
            what: "need one size per girth target, at least one block".into(),
        });
    }
    for w in girth_targets.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::InvalidInput { what: "girth targets must increase".into() });
        }
    }
    let mut graphs = Vec::with_capacity(sizes.len());
    let mut prev_girth = 0u32;
    for (i, (&target, &n)) in girth_targets.iter().zip(sizes).enumerate() {
        // The family invariant needs strictly increasing girth, so each block
        // must beat its predecessor even if that block overshot its target.
        let need = target.max(prev_girth + 1);
        let g = generate_block(n, need, seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(i as u64 + 1)))?;
        prev_girth = match g.girth() {
            crate::graph::Girth::Finite(v) => v,
            crate::graph::Girth::Infinite => u32::MAX,
        };
        graphs.push(g);
    }
    SpaceFamily::new_large_girth(graphs, degree_bound)
}

/// One 3-regular block of order `n` with girth at least `target`.
pub fn generate_block(n: usize, target: u32, seed: u64) -> Result<FiniteGraph> {
    if n < 4 {
        return Err(Error::GenerationFailure {
            reason: format!("no 3-regular graph on {n} vertices"),
        });
    }
    if n % 2 == 1 {
        return Err(Error::GenerationFailure {
            reason: format!("3-regular graphs need even order, got {n}"),
        });
    }
    let moore = moore_minimum_order(target);
    if n < moore {
        return Err(Error::GenerationFailure {
            reason: format!(
                "girth {target} needs at least {moore} vertices at degree 3 (Moore bound), got {n}"
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    const RESTARTS: usize = 60;
    for _ in 0..RESTARTS {
        let Some(g) = configuration_model(n, &mut rng) else { continue };
        if let Some(g) = raise_girth(g, target, &mut rng) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailure {
        reason: format!(
            "could not reach girth {target} on {n} vertices within the retry budget"
        ),
    })
}

/// Random simple connected 3-regular graph via stub matching.
fn configuration_model(n: usize, rng: &mut ChaCha8Rng) -> Option<FiniteGraph> {
    let mut stubs: Vec<u32> = (0..n as u32).flat_map(|v| [v, v, v]).collect();
    'attempt: for _ in 0..200 {
        stubs.shuffle(rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'attempt;
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                continue 'attempt;
            }
        }
        if let Ok(g) = FiniteGraph::new(n, edges) {
            return Some(g);
        }
    }
    None
}

/// Double-edge swaps until every cycle has length >= target.
fn raise_girth(g: FiniteGraph, target: u32, rng: &mut ChaCha8Rng) -> Option<FiniteGraph> {
    let n = g.n();
    let mut edges: Vec<(u32, u32)> = g.edges().to_vec();
    let budget = 400 * n.max(50);
    let mut current = g;
    for _ in 0..budget {
        let short: Vec<usize> = (0..edges.len())
            .filter(|&e| {
                current
                    .shortest_cycle_through_edge(edges[e].0, edges[e].1)
                    .is_some_and(|c| c < target)
            })
            .collect();
        if short.is_empty() {
            return Some(current);
        }
        let &bad = short.choose(rng)?;
        let other = rng.gen_range(0..edges.len());
        if other == bad {
            continue;
        }
        let (a, b) = edges[bad];
        let (c, d) = if rng.gen_bool(0.5) { edges[other] } else { (edges[other].1, edges[other].0) };
        if a == c || a == d || b == c || b == d {
            continue;
        }
        // Propose replacing {a-b, c-d} by {a-c, b-d}.
        let mut proposal = edges.clone();
        let (hi, lo) = (bad.max(other), bad.min(other));
        proposal.swap_remove(hi);
        proposal.swap_remove(lo);
        proposal.push((a.min(c), a.max(c)));
        proposal.push((b.min(d), b.max(d)));
        let Ok(candidate) = FiniteGraph::new(n, proposal.clone()) else { continue };
        let ok_new = |u: u32, v: u32| {
            candidate.shortest_cycle_through_edge(u, v).is_none_or(|cyc| cyc >= target)
        };
        if ok_new(a, c) && ok_new(b, d) {
            edges = proposal;
            current = candidate;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn moore_bound_values() {
        assert_eq!(moore_minimum_order(3), 4);
        assert_eq!(moore_minimum_order(5), 10);
        assert_eq!(moore_minimum_order(6), 14);
        assert_eq!(moore_minimum_order(8), 30);
        assert_eq!(moore_minimum_order(12), 126);
        assert_eq!(moore_minimum_order(14), 254);
        assert_eq!(moore_minimum_order(16), 510);
    }

    #[test]
    fn k4_block() {
        let g = generate_block(4, 3, 7).unwrap();
        assert_eq!(g.n(), 4);
        assert!(g.is_regular(3));
        assert_eq!(g.girth(), Girth::Finite(3));
    }

    #[test]
    fn petersen_sized_block_reaches_girth_5() {
        let g = generate_block(10, 5, 42).unwrap();
        assert!(g.is_regular(3));
        assert!(g.girth().at_least(5));
    }

    #[test]
    fn infeasible_target_fails_fast() {
        // Girth above 2 log2(size) + 2 is impossible; the exact Moore bound
        // rejects it without any search.
        let err = generate_block(10, 7, 1).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("Moore"), "{msg}");
        assert!(generate_large_girth_family(3, &[20], &[100], 1).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate_block(16, 5, 5).unwrap();
        let b = generate_block(16, 5, 5).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = generate_block(16, 5, 6).unwrap();
        // Different seeds virtually always give different graphs; only the
        // determinism of equal seeds is load-bearing.
        let _ = c;
    }

    #[test]
    fn family_has_increasing_girth() {
        let fam = generate_large_girth_family(3, &[3, 4, 5], &[8, 12, 14], 11).unwrap();
        let girths: Vec<u32> =
            fam.girths().iter().map(|g| g.unwrap().as_finite().unwrap()).collect();
        assert!(girths.windows(2).all(|w| w[0] < w[1]), "{girths:?}");
        assert_eq!(fam.degree_bound(), Some(3));
    }
}
