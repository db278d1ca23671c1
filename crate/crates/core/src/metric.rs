//! Finite metric spaces, families of blocks, and coarse disjoint unions.
//!
//! Distances are exact: integer tables for graph-induced metrics, rational
//! tables for explicit ones. Radii are rational throughout; on integer tables
//! a comparison `d <= r` reduces to `d <= floor(r)`, so ball queries stay in
//! integer arithmetic on the hot paths.

use crate::error::{Error, Result};
use crate::graph::{FiniteGraph, Girth};
use crate::par::{self, ExecMode};
use crate::rat::{self, rat_u, Rat};
use num::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Debug, Clone, PartialEq, Eq)]
enum DistTable {
    /// Row-major integer distances (graph metrics, nets of graphs).
    Ints(Vec<u32>),
    /// Row-major rational distances (explicit tables).
    Rats(Vec<Rat>),
}

/// A finite uniformly discrete metric space on points `0..n`.
///
/// Invariants checked at construction: symmetry, `d(x,y) = 0` iff `x = y`,
/// and a minimum positive distance of at least 1. The triangle inequality is
/// checked exhaustively for small spaces and on a deterministic sample of
/// triples for larger ones.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace {
    n: usize,
    dist: DistTable,
    graph: Option<FiniteGraph>,
}

/// Exhaustive triangle-inequality verification cutoff.
const TRIANGLE_EXHAUSTIVE_MAX: usize = 100;
/// Sampled triples used above the cutoff.
const TRIANGLE_SAMPLES: usize = 10_000;

impl FiniteMetricSpace {
    /// Shortest-path metric of a connected graph.
    pub fn from_graph(graph: FiniteGraph) -> Self {
        let n = graph.n();
        let rows = par::map_collect(n, ExecMode::default(), |v| graph.bfs_distances(v));
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            table.extend_from_slice(&row);
        }
        FiniteMetricSpace { n, dist: DistTable::Ints(table), graph: Some(graph) }
    }

    /// Explicit rational distance table (row-major, length `n * n`).
    pub fn from_table(n: usize, table: Vec<Rat>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput { what: "empty point set".into() });
        }
        if table.len() != n * n {
            return Err(Error::InvalidInput {
                what: format!("expected {} distances, got {}", n * n, table.len()),
            });
        }
        let space = FiniteMetricSpace { n, dist: DistTable::Rats(table), graph: None };
        space.validate()?;
        Ok(space)
    }

    /// Integer distance table; `graph` records the inducing graph when known.
    pub(crate) fn from_int_table(
        n: usize,
        table: Vec<u32>,
        graph: Option<FiniteGraph>,
    ) -> Result<Self> {
        if n == 0 || table.len() != n * n {
            return Err(Error::InvalidInput { what: "malformed integer table".into() });
        }
        let space = FiniteMetricSpace { n, dist: DistTable::Ints(table), graph };
        space.validate()?;
        Ok(space)
    }

    fn validate(&self) -> Result<()> {
        let fail = |what: String| Err(Error::InvalidInput { what });
        for x in 0..self.n {
            if !self.dist_is_zero(x, x) {
                return fail(format!("nonzero diagonal at {x}"));
            }
            for y in (x + 1)..self.n {
                if self.dist_is_zero(x, y) {
                    return fail(format!("zero distance between distinct points {x}, {y}"));
                }
                if !self.dist_symmetric(x, y) {
                    return fail(format!("asymmetric distance at ({x}, {y})"));
                }
                if self.dist_lt_one(x, y) {
                    return fail(format!(
                        "distance below 1 between {x} and {y}: space is not uniformly discrete"
                    ));
                }
            }
        }
        // Triangle inequality: exhaustive when cheap, sampled otherwise.
        if self.n <= TRIANGLE_EXHAUSTIVE_MAX {
            self.verify_triangle_exhaustive()?;
        } else {
            let mut rng = StdRng::seed_from_u64(0x7269616e676c65);
            for _ in 0..TRIANGLE_SAMPLES {
                let (x, y, z) = (
                    rng.gen_range(0..self.n),
                    rng.gen_range(0..self.n),
                    rng.gen_range(0..self.n),
                );
                self.check_triangle(x, y, z)?;
            }
        }
        Ok(())
    }

    fn dist_is_zero(&self, x: usize, y: usize) -> bool {
        match &self.dist {
            DistTable::Ints(t) => t[x * self.n + y] == 0,
            DistTable::Rats(t) => t[x * self.n + y].is_zero(),
        }
    }

    fn dist_symmetric(&self, x: usize, y: usize) -> bool {
        match &self.dist {
            DistTable::Ints(t) => t[x * self.n + y] == t[y * self.n + x],
            DistTable::Rats(t) => t[x * self.n + y] == t[y * self.n + x],
        }
    }

    fn dist_lt_one(&self, x: usize, y: usize) -> bool {
        match &self.dist {
            DistTable::Ints(t) => t[x * self.n + y] < 1,
            DistTable::Rats(t) => {
                let d = &t[x * self.n + y];
                d.is_negative() || *d < Rat::one()
            }
        }
    }

    fn check_triangle(&self, x: usize, y: usize, z: usize) -> Result<()> {
        let ok = match &self.dist {
            DistTable::Ints(t) => {
                t[x * self.n + y] as u64 <= t[x * self.n + z] as u64 + t[z * self.n + y] as u64
            }
            DistTable::Rats(t) => {
                t[x * self.n + y] <= &t[x * self.n + z] + &t[z * self.n + y]
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput {
                what: format!("triangle inequality fails on ({x}, {y}, {z})"),
            })
        }
    }

    /// Exhaustive triangle check, used by tests and small constructions.
    pub fn verify_triangle_exhaustive(&self) -> Result<()> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    self.check_triangle(x, y, z)?;
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The inducing graph, when this metric came from one.
    pub fn graph(&self) -> Option<&FiniteGraph> {
        self.graph.as_ref()
    }

    /// `true` when distances are integers (graph metrics and their nets).
    pub fn is_integral(&self) -> bool {
        matches!(self.dist, DistTable::Ints(_))
    }

    pub fn dist(&self, x: usize, y: usize) -> Rat {
        match &self.dist {
            DistTable::Ints(t) => rat_u(t[x * self.n + y] as u64),
            DistTable::Rats(t) => t[x * self.n + y].clone(),
        }
    }

    /// Integer distance fast path.
    pub fn dist_int(&self, x: usize, y: usize) -> Option<u32> {
        match &self.dist {
            DistTable::Ints(t) => Some(t[x * self.n + y]),
            DistTable::Rats(_) => None,
        }
    }

    /// `d(x, y) <= r`, allocation-free on integer tables.
    pub fn dist_le(&self, x: usize, y: usize, r: &Radius) -> bool {
        match (&self.dist, r) {
            (DistTable::Ints(t), Radius::IntFloor(f)) => (t[x * self.n + y] as u64) <= *f,
            (DistTable::Ints(t), _) => r.ge_int(t[x * self.n + y]),
            (DistTable::Rats(t), _) => r.ge_rat(&t[x * self.n + y]),
        }
    }

    /// Closed ball `{ y : d(x, y) <= r }`.
    pub fn ball(&self, x: usize, r: &Rat) -> Result<Vec<u32>> {
        if x >= self.n {
            return Err(Error::InvalidIndex { index: x, size: self.n });
        }
        if r.is_negative() {
            return Err(Error::InvalidInput { what: "negative radius".into() });
        }
        let radius = Radius::for_space(self, r);
        Ok((0..self.n)
            .filter(|&y| self.dist_le(x, y, &radius))
            .map(|y| y as u32)
            .collect())
    }

    /// `R`-boundary `{ z : 0 < d(z, F) <= R }`; disjoint from `F`.
    pub fn r_boundary(&self, f: &[u32], r: &Rat) -> Result<Vec<u32>> {
        if f.is_empty() {
            return Err(Error::EmptySet { context: "r_boundary" });
        }
        for &x in f {
            if x as usize >= self.n {
                return Err(Error::InvalidIndex { index: x as usize, size: self.n });
            }
        }
        if !r.is_positive() {
            return Err(Error::InvalidInput { what: "boundary radius must be positive".into() });
        }
        let radius = Radius::for_space(self, r);
        let mut in_f = vec![false; self.n];
        for &x in f {
            in_f[x as usize] = true;
        }
        Ok((0..self.n)
            .filter(|&z| {
                !in_f[z] && f.iter().any(|&x| self.dist_le(z, x as usize, &radius))
            })
            .map(|z| z as u32)
            .collect())
    }

    /// Maximum pairwise distance within `F`.
    pub fn diameter_of(&self, f: &[u32]) -> Result<Rat> {
        if f.is_empty() {
            return Err(Error::EmptySet { context: "diameter" });
        }
        let mut best = Rat::zero();
        for (i, &x) in f.iter().enumerate() {
            if x as usize >= self.n {
                return Err(Error::InvalidIndex { index: x as usize, size: self.n });
            }
            for &y in &f[i + 1..] {
                let d = self.dist(x as usize, y as usize);
                if d > best {
                    best = d;
                }
            }
        }
        Ok(best)
    }

    /// Integer diameter of a subset, when the table is integral.
    pub fn diameter_of_int(&self, f: &[u32]) -> Option<u32> {
        let DistTable::Ints(t) = &self.dist else { return None };
        let mut best = 0u32;
        for (i, &x) in f.iter().enumerate() {
            for &y in &f[i + 1..] {
                best = best.max(t[x as usize * self.n + y as usize]);
            }
        }
        Some(best)
    }

    /// Diameter of the whole space.
    pub fn diameter(&self) -> Rat {
        let all: Vec<u32> = (0..self.n as u32).collect();
        self.diameter_of(&all).expect("nonempty space")
    }

    /// Bounded-geometry profile: the largest ball of radius `r`.
    pub fn max_ball_size(&self, r: &Rat) -> usize {
        let radius = Radius::for_space(self, r);
        (0..self.n)
            .map(|x| (0..self.n).filter(|&y| self.dist_le(x, y, &radius)).count())
            .max()
            .unwrap_or(0)
    }

    /// Induced submetric on `points` (indices into this space, in order).
    pub fn induced(&self, points: &[u32]) -> Result<FiniteMetricSpace> {
        if points.is_empty() {
            return Err(Error::EmptySet { context: "induced submetric" });
        }
        let m = points.len();
        match &self.dist {
            DistTable::Ints(t) => {
                let mut table = Vec::with_capacity(m * m);
                for &x in points {
                    for &y in points {
                        table.push(t[x as usize * self.n + y as usize]);
                    }
                }
                FiniteMetricSpace::from_int_table(m, table, None)
            }
            DistTable::Rats(t) => {
                let mut table = Vec::with_capacity(m * m);
                for &x in points {
                    for &y in points {
                        table.push(t[x as usize * self.n + y as usize].clone());
                    }
                }
                FiniteMetricSpace::from_table(m, table)
            }
        }
    }
}

/// A radius prepared for repeated comparisons against one space's table.
pub enum Radius {
    /// Integer table: `d <= r` iff `d <= floor(r)`.
    IntFloor(u64),
    /// Rational comparison.
    Exact(Rat),
}

impl Radius {
    pub fn for_space(space: &FiniteMetricSpace, r: &Rat) -> Radius {
        match &space.dist {
            DistTable::Ints(_) if !r.is_negative() => {
                Radius::IntFloor(r.floor().to_integer().to_u64().unwrap_or(u64::MAX))
            }
            _ => Radius::Exact(r.clone()),
        }
    }

    fn ge_int(&self, d: u32) -> bool {
        match self {
            Radius::IntFloor(f) => d as u64 <= *f,
            Radius::Exact(r) => rat_u(d as u64) <= *r,
        }
    }

    fn ge_rat(&self, d: &Rat) -> bool {
        match self {
            Radius::IntFloor(f) => *d <= rat_u(*f),
            Radius::Exact(r) => d <= r,
        }
    }
}

/// One block of a family: a metric space plus its recorded girth when the
/// block is graph-backed.
#[derive(Debug, Clone)]
pub struct SpaceBlock {
    pub space: FiniteMetricSpace,
    pub girth: Option<Girth>,
}

impl SpaceBlock {
    pub fn from_graph(graph: FiniteGraph) -> Self {
        let girth = graph.girth();
        SpaceBlock { space: FiniteMetricSpace::from_graph(graph), girth: Some(girth) }
    }

    pub fn from_space(space: FiniteMetricSpace) -> Self {
        let girth = space.graph().map(|g| g.girth());
        SpaceBlock { space, girth }
    }
}

/// An ordered family of metric blocks, optionally tagged as a large-girth
/// graph family with vertex degrees in `[3, D]`.
#[derive(Debug, Clone)]
pub struct SpaceFamily {
    blocks: Vec<SpaceBlock>,
    degree_bound: Option<u32>,
    large_girth: bool,
}

impl SpaceFamily {
    /// Plain family of blocks; no growth or degree constraints.
    pub fn new(blocks: Vec<SpaceBlock>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(SpaceFamily { blocks, degree_bound: None, large_girth: false })
    }

    /// Large-girth graph family: every block graph-backed and connected with
    /// degrees in `[3, D]`, girths strictly increasing, sizes non-decreasing.
    pub fn new_large_girth(graphs: Vec<FiniteGraph>, degree_bound: u32) -> Result<Self> {
        if graphs.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if degree_bound < 3 {
            return Err(Error::InvalidInput { what: "degree bound must be at least 3".into() });
        }
        let mut prev_girth: Option<Girth> = None;
        let mut prev_size = 0usize;
        for (i, g) in graphs.iter().enumerate() {
            if g.min_degree() < 3 || g.max_degree() > degree_bound as usize {
                return Err(Error::PreconditionViolation {
                    what: format!(
                        "block {i}: vertex degrees must lie in [3, {degree_bound}] (found [{}, {}])",
                        g.min_degree(),
                        g.max_degree()
                    ),
                });
            }
            let girth = g.girth();
            if let Some(p) = prev_girth {
                if girth <= p {
                    return Err(Error::PreconditionViolation {
                        what: format!("block {i}: girth must strictly increase along the family"),
                    });
                }
            }
            if g.n() < prev_size {
                return Err(Error::PreconditionViolation {
                    what: format!("block {i}: cardinalities must be non-decreasing"),
                });
            }
            prev_girth = Some(girth);
            prev_size = g.n();
        }
        if graphs.len() >= 2 && graphs.last().unwrap().n() <= graphs[0].n() {
            return Err(Error::PreconditionViolation {
                what: "family cardinalities must grow from first to last block".into(),
            });
        }
        let blocks = graphs.into_iter().map(SpaceBlock::from_graph).collect();
        Ok(SpaceFamily { blocks, degree_bound: Some(degree_bound), large_girth: true })
    }

    pub fn blocks(&self) -> &[SpaceBlock] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, i: usize) -> &SpaceBlock {
        &self.blocks[i]
    }

    pub fn degree_bound(&self) -> Option<u32> {
        self.degree_bound
    }

    pub fn is_large_girth(&self) -> bool {
        self.large_girth
    }

    pub fn girths(&self) -> Vec<Option<Girth>> {
        self.blocks.iter().map(|b| b.girth).collect()
    }
}

/// The blocks of a family assembled into one metric space: within-block
/// distances are untouched and points in distinct blocks `i != j` sit at
/// distance `s_i + s_j`.
#[derive(Debug, Clone)]
pub struct CoarseDisjointUnion {
    family: SpaceFamily,
    offsets: Vec<Rat>,
}

impl CoarseDisjointUnion {
    pub fn family(&self) -> &SpaceFamily {
        &self.family
    }

    pub fn offsets(&self) -> &[Rat] {
        &self.offsets
    }

    pub fn total_points(&self) -> usize {
        self.family.blocks().iter().map(|b| b.space.n()).sum()
    }

    /// Distance between `(block i, point x)` and `(block j, point y)`.
    pub fn dist(&self, i: usize, x: usize, j: usize, y: usize) -> Rat {
        if i == j {
            self.family.block(i).space.dist(x, y)
        } else {
            &self.offsets[i] + &self.offsets[j]
        }
    }

    /// Materializes the assembled metric (intended for small unions).
    pub fn to_metric_space(&self) -> Result<FiniteMetricSpace> {
        let sizes: Vec<usize> = self.family.blocks().iter().map(|b| b.space.n()).collect();
        let total: usize = sizes.iter().sum();
        let mut table = vec![Rat::zero(); total * total];
        let mut base_i = 0;
        for (i, bi) in self.family.blocks().iter().enumerate() {
            let mut base_j = 0;
            for (j, bj) in self.family.blocks().iter().enumerate() {
                for x in 0..bi.space.n() {
                    for y in 0..bj.space.n() {
                        table[(base_i + x) * total + (base_j + y)] = self.dist(i, x, j, y);
                    }
                }
                base_j += bj.space.n();
            }
            base_i += bi.space.n();
        }
        FiniteMetricSpace::from_table(total, table)
    }
}

/// Assembles the coarse disjoint union with offsets
/// `s_i = s_{i-1} + i + diam(X_i)` (1-based `i`), which satisfy
/// `s_i >= i + sum of diameters up to i`, so cross-block distances grow
/// without bound. The assembled metric is checked on a deterministic sample
/// of triples (exhaustively for small unions).
pub fn assemble_union(family: SpaceFamily) -> Result<CoarseDisjointUnion> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut offsets = Vec::with_capacity(family.len());
    let mut s = Rat::zero();
    for (idx, block) in family.blocks().iter().enumerate() {
        let diam = block.space.diameter();
        s = &s + rat_u(idx as u64 + 1) + diam;
        offsets.push(s.clone());
    }
    let union = CoarseDisjointUnion { family, offsets };
    verify_union_metric(&union)?;
    Ok(union)
}

fn verify_union_metric(union: &CoarseDisjointUnion) -> Result<()> {
    let total = union.total_points();
    let locate = |p: usize| -> (usize, usize) {
        let mut rest = p;
        for (i, b) in union.family.blocks().iter().enumerate() {
            if rest < b.space.n() {
                return (i, rest);
            }
            rest -= b.space.n();
        }
        unreachable!()
    };
    let check = |p: usize, q: usize, r: usize| -> Result<()> {
        let (pi, px) = locate(p);
        let (qi, qx) = locate(q);
        let (ri, rx) = locate(r);
        let lhs = union.dist(pi, px, qi, qx);
        let rhs = union.dist(pi, px, ri, rx) + union.dist(ri, rx, qi, qx);
        if lhs <= rhs {
            Ok(())
        } else {
            Err(Error::InternalInconsistency {
                what: format!("union triangle inequality fails on ({p}, {q}, {r})"),
            })
        }
    };
    if total <= 60 {
        for p in 0..total {
            for q in 0..total {
                for r in 0..total {
                    check(p, q, r)?;
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x756e696f6e);
        for _ in 0..TRIANGLE_SAMPLES {
            check(rng.gen_range(0..total), rng.gen_range(0..total), rng.gen_range(0..total))?;
        }
    }
    Ok(())
}

/// Greedy net of `space`: scanning points in index order, keep those at
/// distance `> r` from every point already kept. The result is maximal, so
/// every point lies within `r` of the net.
pub fn greedy_net(space: &FiniteMetricSpace, r: &Rat) -> Vec<u32> {
    let radius = Radius::for_space(space, r);
    let mut net: Vec<u32> = Vec::new();
    for x in 0..space.n() {
        if net.iter().all(|&c| !space.dist_le(x, c as usize, &radius)) {
            net.push(x as u32);
        }
    }
    net
}

/// Formats a rational distance for diagnostics.
pub fn display_dist(d: &Rat) -> String {
    rat::display(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::rat::{rat, ratio};

    fn petersen_space() -> FiniteMetricSpace {
        FiniteMetricSpace::from_graph(named::petersen())
    }

    #[test]
    fn ball_examples() {
        let s = petersen_space();
        // r = 0 gives the singleton.
        assert_eq!(s.ball(3, &rat(0)).unwrap(), vec![3]);
        // r >= diam gives everything.
        assert_eq!(s.ball(0, &rat(2)).unwrap().len(), 10);
        // 3-regular, r = 1: the center plus its 3 neighbours.
        assert_eq!(s.ball(0, &rat(1)).unwrap().len(), 4);
        assert!(s.ball(99, &rat(1)).is_err());
    }

    #[test]
    fn boundary_examples() {
        let s = petersen_space();
        let whole: Vec<u32> = (0..10).collect();
        assert!(s.r_boundary(&whole, &rat(1)).unwrap().is_empty());
        assert_eq!(s.r_boundary(&[0], &rat(1)).unwrap().len(), 3);
        assert!(s.r_boundary(&[], &rat(1)).is_err());

        let p5 = FiniteMetricSpace::from_graph(named::path(5));
        assert_eq!(p5.r_boundary(&[2], &rat(2)).unwrap(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn diameter_examples() {
        let c6 = FiniteMetricSpace::from_graph(named::cycle(6));
        assert_eq!(c6.diameter_of(&[0]).unwrap(), rat(0));
        assert_eq!(c6.diameter_of(&[0, 1]).unwrap(), rat(1));
        assert_eq!(c6.diameter_of(&[0, 3]).unwrap(), rat(3));
        assert_eq!(c6.diameter(), rat(3));
    }

    #[test]
    fn explicit_table_validation() {
        // Valid 2-point space.
        let ok = FiniteMetricSpace::from_table(
            2,
            vec![rat(0), rat(2), rat(2), rat(0)],
        );
        assert!(ok.is_ok());
        // Sub-unit distances violate uniform discreteness.
        let bad = FiniteMetricSpace::from_table(
            2,
            vec![rat(0), ratio(1, 2), ratio(1, 2), rat(0)],
        );
        assert!(bad.is_err());
        // Triangle violation.
        let tri = FiniteMetricSpace::from_table(
            3,
            vec![
                rat(0), rat(1), rat(5),
                rat(1), rat(0), rat(1),
                rat(5), rat(1), rat(0),
            ],
        );
        assert!(tri.is_err());
    }

    #[test]
    fn union_offsets_match_formula() {
        // Blocks with diameters 2 and 4: offsets 3 and 9, cross distance 12.
        let b1 = SpaceBlock::from_graph(named::path(3));
        let b2 = SpaceBlock::from_graph(named::path(5));
        assert_eq!(b1.space.diameter(), rat(2));
        assert_eq!(b2.space.diameter(), rat(4));
        let fam = SpaceFamily::new(vec![b1, b2]).unwrap();
        let union = assemble_union(fam).unwrap();
        assert_eq!(union.offsets(), &[rat(3), rat(9)]);
        assert_eq!(union.dist(0, 0, 1, 0), rat(12));
        // Materialized union passes full metric validation.
        union.to_metric_space().unwrap().verify_triangle_exhaustive().unwrap();
    }

    #[test]
    fn union_single_block_is_isometric() {
        let b = SpaceBlock::from_graph(named::cycle(6));
        let fam = SpaceFamily::new(vec![b]).unwrap();
        let union = assemble_union(fam).unwrap();
        let space = union.to_metric_space().unwrap();
        let c6 = FiniteMetricSpace::from_graph(named::cycle(6));
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(space.dist(x, y), c6.dist(x, y));
            }
        }
    }

    #[test]
    fn large_girth_family_constraints() {
        let fam = SpaceFamily::new_large_girth(
            vec![named::heawood(), named::twelve_cage()],
            3,
        )
        .unwrap();
        assert!(fam.is_large_girth());
        assert_eq!(
            fam.girths(),
            vec![Some(Girth::Finite(6)), Some(Girth::Finite(12))]
        );
        // Degree-2 blocks are rejected.
        assert!(SpaceFamily::new_large_girth(vec![named::cycle(8)], 3).is_err());
        // Non-increasing girth is rejected.
        assert!(SpaceFamily::new_large_girth(
            vec![named::twelve_cage(), named::heawood()],
            3
        )
        .is_err());
    }

    #[test]
    fn greedy_net_of_petersen() {
        let s = petersen_space();
        let net = greedy_net(&s, &rat(1));
        assert!(net.len() <= 4);
        // Coverage: everything within distance 1 of the net.
        for x in 0..10 {
            assert!(net.iter().any(|&c| s.dist(x, c as usize) <= rat(1)));
        }
        // Zero radius keeps every point.
        assert_eq!(greedy_net(&s, &rat(0)).len(), 10);
    }

    #[test]
    fn induced_submetric() {
        let s = petersen_space();
        let sub = s.induced(&[0, 2, 6]).unwrap();
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.dist(0, 1), s.dist(0, 2));
        assert!(sub.is_integral());
    }
}
