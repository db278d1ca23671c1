//! Exact Z_2-lift construction: doubles a bipartite girth-g graph into a
//! girth-(g+2) one by solving a GF(2) linear system.
//!
//! In a Z_2 voltage lift, a cycle of the base survives at its own length iff
//! its voltage sum is even. For a bipartite base of girth g, the only cycles
//! shorter than g+2 are the g-cycles, so requiring every g-cycle to carry odd
//! total voltage is a linear system over GF(2) in the edge voltages. When
//! consistent, any solution yields a double cover of girth >= g+2.
//!
//! ```text
//! cargo run --release -p coarsecert --example xor_lift -- girth14
//! ```

use coarsecert::catalog;
use coarsecert::graph::FiniteGraph;

/// All simple cycles of length exactly `len`, as edge-index sets.
/// Canonical form: smallest vertex first, smaller neighbour second.
fn cycles_of_length(g: &FiniteGraph, len: usize) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut edge_index = std::collections::HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edge_index.insert((u, v), e as u32);
        edge_index.insert((v, u), e as u32);
    }
    let mut cycles = Vec::new();
    let mut path: Vec<u32> = Vec::with_capacity(len + 1);
    let mut on_path = vec![false; n];

    // Distance-to-start pruning: a path of length t can only close into an
    // exactly-len cycle if dist(start, current) <= len - t.
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
    cycles: &mut Vec<Vec<u32>>,
    edge_index: &std::collections::HashMap<(u32, u32), u32>,
) {
    let current = *path.last().unwrap();
    let t = path.len() - 1;
    for &w in g.neighbors(current as usize) {
        if w == start && t == len - 1 {
            // Canonical direction: second vertex smaller than last.
            if path[1] < current {
                let mut edges: Vec<u32> = path
                    .windows(2)
                    .map(|p| edge_index[&(p[0], p[1])])
                    .collect();
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

/// Solves `A x = 1` over GF(2) where each row of `A` is a cycle's edge set.
/// Returns any solution, or `None` if inconsistent.
fn solve_gf2(rows: &[Vec<u32>], num_vars: usize) -> Option<Vec<u32>> {
    let width = num_vars / 64 + 1; // last partial word holds the RHS bit
    let rhs_word = num_vars / 64;
    let rhs_bit = num_vars % 64;
    let mut mat: Vec<Vec<u64>> = rows
        .iter()
        .map(|cycle| {
            let mut row = vec![0u64; width];
            for &e in cycle {
                row[e as usize / 64] ^= 1u64 << (e as usize % 64);
            }
            row[rhs_word] ^= 1u64 << rhs_bit;
            row
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; num_vars];
    let mut rank_rows: Vec<usize> = Vec::new();
    for r in 0..mat.len() {
        // Find leading variable of row r after elimination by earlier pivots.
        for &p in &rank_rows {
            let lead = leading_var(&mat[p], num_vars).unwrap();
            if bit(&mat[r], lead) {
                let (a, b) = split_rows(&mut mat, r, p);
                xor_into(a, b);
            }
        }
        match leading_var(&mat[r], num_vars) {
            Some(lead) => {
                pivot_of_col[lead] = Some(r);
                rank_rows.push(r);
            }
            None => {
                if bit(&mat[r], num_vars) {
                    return None; // 0 = 1
                }
            }
        }
    }
    // Back-substitute with free variables set to 0.
    let mut x = vec![0u32; num_vars];
    for &p in rank_rows.iter().rev() {
        let lead = leading_var(&mat[p], num_vars).unwrap();
        let mut acc = bit(&mat[p], num_vars) as u32;
        for v in (lead + 1)..num_vars {
            if bit(&mat[p], v) {
                acc ^= x[v];
            }
        }
        x[lead] = acc;
    }
    Some(x)
}

fn bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

fn leading_var(row: &[u64], num_vars: usize) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            let i = w * 64 + word.trailing_zeros() as usize;
            if i < num_vars {
                return Some(i);
            }
        }
    }
    None
}

fn split_rows<'a>(mat: &'a mut [Vec<u64>], i: usize, j: usize) -> (&'a mut [u64], &'a [u64]) {
    assert_ne!(i, j);
    if i < j {
        let (a, b) = mat.split_at_mut(j);
        (&mut a[i], &b[0])
    } else {
        let (a, b) = mat.split_at_mut(i);
        (&mut b[0], &a[j])
    }
}

fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn load_base(name: &str) -> FiniteGraph {
    if let Some(path) = name.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).expect("read base file");
        let mut edges = Vec::new();
        let mut max = 0u32;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u: u32 = it.next().unwrap().parse().unwrap();
            let v: u32 = it.next().unwrap().parse().unwrap();
            max = max.max(u).max(v);
            edges.push((u, v));
        }
        FiniteGraph::new(max as usize + 1, edges).expect("valid base graph")
    } else {
        catalog::by_name(name).expect("catalog block")
    }
}

/// One doubling step; returns the double cover if the parity system is
/// consistent and actually raises girth.
fn double_once(base: &FiniteGraph) -> Option<(FiniteGraph, Vec<u32>)> {
    let girth = base.girth().as_finite().expect("finite girth");
    let odd_girth_walks = girth % 2 == 1;
    let mut cycles = cycles_of_length(base, girth as usize);
    if odd_girth_walks {
        // Non-bipartite base: also kill (girth+1)-cycles, since an odd
        // g-cycle forced to double leaves g+1 as the next threat.
        cycles.extend(cycles_of_length(base, girth as usize + 1));
    }
    eprintln!("  {} short cycles to break", cycles.len());
    let x = solve_gf2(&cycles, base.edges().len())?;
    let lift = base.cyclic_lift(2, &x).ok()?;
    Some((lift, x))
}

fn main() {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "foster".into());
    let steps: usize = args.next().map(|s| s.parse().expect("steps")).unwrap_or(1);
    let emit_prefix = args.next();

    let mut g = load_base(&name);
    eprintln!("base {name}: {} vertices, girth {}", g.n(), g.girth());
    for step in 1..=steps {
        let t = std::time::Instant::now();
        match double_once(&g) {
            None => {
                eprintln!("step {step}: parity system inconsistent; stopping");
                break;
            }
            Some((lift, x)) => {
                eprintln!(
                    "step {step}: n={} girth={} ({:?})",
                    lift.n(),
                    lift.girth(),
                    t.elapsed()
                );
                println!(
                    "STEP {step} base_n={} n={} girth={} voltages={x:?}",
                    g.n(),
                    lift.n(),
                    lift.girth()
                );
                if let Some(prefix) = &emit_prefix {
                    let path = format!("{prefix}_n{}_g{}.edges", lift.n(), lift.girth());
                    let mut out = String::new();
                    for &(u, v) in lift.edges() {
                        out.push_str(&format!("{u} {v}\n"));
                    }
                    std::fs::write(&path, out).expect("write edges");
                    eprintln!("  wrote {path}");
                }
                g = lift;
            }
        }
    }
}
