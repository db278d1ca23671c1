//! Scale-R Laplacians, localized spectral gaps and weak-expansion
//! certificates.
//!
//! The Laplacian at scale R is `degree - adjacency` where adjacency means
//! `0 < d(x, y) <= R`, so its quadratic form is the sum over unordered
//! in-scale pairs of `|f(x) - f(y)|^2`. Localization is ball-based: the
//! minimum Rayleigh quotient over vectors supported on a set of diameter at
//! most S is lower-bounded by scanning principal submatrices on balls of
//! radius S (certify side) and refuted by balls of radius floor(S/2), whose
//! vectors genuinely have support diameter at most S (refute side). The
//! exhaustive subset minimum always lies between the two; tests pin this.

use crate::eigen::{self, Tolerances};
use crate::error::{Error, Result};
use crate::metric::{FiniteMetricSpace, SpaceFamily};
use crate::par::{self, ExecMode};
use crate::rat::{self, Rat};
use nalgebra::DMatrix;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Laplacian of a metric space at a fixed scale.
pub struct ScaledLaplacian<'a> {
    space: &'a FiniteMetricSpace,
    r: Rat,
    /// Unordered pairs with `0 < d <= R`.
    pairs: Vec<(u32, u32)>,
    /// Number of in-scale partners per point (diagonal entries).
    scale_degree: Vec<u32>,
}

impl<'a> ScaledLaplacian<'a> {
    pub fn build(space: &'a FiniteMetricSpace, r: &Rat) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::InvalidInput { what: "scale must be positive".into() });
        }
        let n = space.n();
        let radius = crate::metric::Radius::for_space(space, r);
        let mut pairs = Vec::new();
        let mut scale_degree = vec![0u32; n];
        for x in 0..n {
            for y in (x + 1)..n {
                if space.dist_le(x, y, &radius) {
                    pairs.push((x as u32, y as u32));
                    scale_degree[x] += 1;
                    scale_degree[y] += 1;
                }
            }
        }
        Ok(ScaledLaplacian { space, r: r.clone(), pairs, scale_degree })
    }

    pub fn space(&self) -> &FiniteMetricSpace {
        self.space
    }

    pub fn scale(&self) -> &Rat {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn entry(&self, x: usize, y: usize) -> f64 {
        if x == y {
            return self.scale_degree[x] as f64;
        }
        let radius = crate::metric::Radius::for_space(self.space, &self.r);
        if self.space.dist_le(x, y, &radius) {
            -1.0
        } else {
            0.0
        }
    }

    /// Materializes the full matrix (small spaces, tests, functional work).
    pub fn matrix(&self) -> DMatrix<f64> {
        let n = self.n();
        let mut m = DMatrix::zeros(n, n);
        for x in 0..n {
            m[(x, x)] = self.scale_degree[x] as f64;
        }
        for &(x, y) in &self.pairs {
            m[(x as usize, y as usize)] = -1.0;
            m[(y as usize, x as usize)] = -1.0;
        }
        m
    }

    /// Principal submatrix on `indices`.
    pub fn submatrix(&self, indices: &[u32]) -> DMatrix<f64> {
        principal_submatrix(self.space, &self.r, &self.scale_degree, indices)
    }

    /// `<L f, f>` as the unordered-pair sum of squared differences.
    pub fn quadratic_form(&self, f: &[f64]) -> f64 {
        self.pairs
            .iter()
            .map(|&(x, y)| {
                let d = f[x as usize] - f[y as usize];
                d * d
            })
            .sum()
    }

    /// Pairs within scale (unordered).
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }
}

fn principal_submatrix(
    space: &FiniteMetricSpace,
    r: &Rat,
    scale_degree: &[u32],
    indices: &[u32],
) -> DMatrix<f64> {
    let radius = crate::metric::Radius::for_space(space, r);
    let k = indices.len();
    let mut m = DMatrix::zeros(k, k);
    for (i, &x) in indices.iter().enumerate() {
        m[(i, i)] = scale_degree[x as usize] as f64;
        for (j, &y) in indices.iter().enumerate().skip(i + 1) {
            if space.dist_le(x as usize, y as usize, &radius) {
                m[(i, j)] = -1.0;
                m[(j, i)] = -1.0;
            }
        }
    }
    m
}

/// Localized eigenvector witness: the achieving ball and vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BallWitness {
    pub center: u32,
    pub support: Vec<u32>,
    pub values: Vec<f64>,
    pub rayleigh: f64,
}

/// Minimum over ball centers of the smallest eigenvalue of the principal
/// submatrix on `B(center, s)`, with the achieving eigenvector.
///
/// The returned value lower-bounds the Rayleigh quotient of every vector
/// whose support has diameter at most `s` (such a support lies inside some
/// ball of radius `s`); the witness itself has support diameter at most `2s`.
pub fn localized_min_rayleigh(
    lap: &ScaledLaplacian<'_>,
    s: &Rat,
    mode: ExecMode,
) -> Result<(f64, BallWitness)> {
    if s.is_negative() {
        return Err(Error::InvalidInput { what: "support bound must be nonnegative".into() });
    }
    min_over_balls(lap.space, s, mode, |idx| lap.submatrix(idx))
}

/// Shared scan: smallest ball-submatrix eigenvalue over all centers, with a
/// deterministic tie-break on the center index.
pub(crate) fn min_over_balls<F>(
    space: &FiniteMetricSpace,
    radius: &Rat,
    mode: ExecMode,
    submatrix: F,
) -> Result<(f64, BallWitness)>
where
    F: Fn(&[u32]) -> DMatrix<f64> + Sync + Send,
{
    let n = space.n();
    let per_center = par::map_collect(n, mode, |x| {
        let ball = space.ball(x, radius).expect("valid center");
        let sub = submatrix(&ball);
        let (val, vec) = eigen::min_eigenpair(&sub);
        (val, x as u32, ball, vec)
    });
    let mut best: Option<(f64, u32, Vec<u32>, nalgebra::DVector<f64>)> = None;
    for item in per_center {
        let better = match &best {
            None => true,
            Some((bv, bc, _, _)) => item.0 < *bv || (item.0 == *bv && item.1 < *bc),
        };
        if better {
            best = Some(item);
        }
    }
    let (val, center, support, vec) = best.ok_or(Error::EmptySet { context: "ball scan" })?;
    Ok((
        val,
        BallWitness {
            center,
            support,
            values: vec.iter().copied().collect(),
            rayleigh: val,
        },
    ))
}

/// Searches balls of radius `floor(s/2)` for a vector violating the gap:
/// any hit has support diameter at most `s` and Rayleigh quotient below
/// `epsilon`, so it is a genuine refutation. Returns `None` if no ball of
/// that radius contains one.
pub fn refute_localized_gap(
    lap: &ScaledLaplacian<'_>,
    s: &Rat,
    epsilon: f64,
    mode: ExecMode,
) -> Result<Option<BallWitness>> {
    if epsilon <= 0.0 {
        return Err(Error::InvalidInput { what: "epsilon must be positive".into() });
    }
    if s.is_negative() {
        return Err(Error::InvalidInput { what: "support bound must be nonnegative".into() });
    }
    let half = rat::floor(&(s / rat::rat(2)));
    let (val, witness) = min_over_balls(lap.space, &half, mode, |idx| lap.submatrix(idx))?;
    Ok((val < epsilon).then_some(witness))
}

/// Per-block record of a weak-expansion certificate.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BlockRayleigh {
    pub index: usize,
    pub min_rayleigh: f64,
    pub ball_center: u32,
}

/// Outcome of [`certify_weak_expansion`].
///
/// Serialized shape: `{R, epsilon, S, i_S, per_block, witness?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralCertificate {
    #[serde(rename = "R", with = "rat::serde_rat")]
    pub r: Rat,
    pub epsilon: f64,
    #[serde(rename = "S", with = "rat::serde_rat")]
    pub s: Rat,
    #[serde(rename = "i_S")]
    pub threshold: Option<usize>,
    pub per_block: Vec<BlockRayleigh>,
    pub witness: Option<BallWitness>,
    pub passed: bool,
}

/// Finds the least block index `i_S` such that every later block's localized
/// minimum Rayleigh value certifiably exceeds `epsilon` at support bound `S`.
/// The strict inequality is read as a Rayleigh-quotient bound and enforced
/// with the eigenvalue tolerance: a block passes when
/// `min_rayleigh >= epsilon + tol.eig`.
pub fn certify_weak_expansion(
    family: &SpaceFamily,
    r: &Rat,
    epsilon: f64,
    s: &Rat,
    tol: &Tolerances,
    mode: ExecMode,
) -> Result<SpectralCertificate> {
    let mut per_block = Vec::with_capacity(family.len());
    for (i, block) in family.blocks().iter().enumerate() {
        let lap = ScaledLaplacian::build(&block.space, r)?;
        let (val, w) = localized_min_rayleigh(&lap, s, mode)?;
        per_block.push(BlockRayleigh { index: i, min_rayleigh: val, ball_center: w.center });
    }
    let passes = |b: &BlockRayleigh| b.min_rayleigh >= epsilon + tol.eig;
    let mut threshold = None;
    for i in (0..per_block.len()).rev() {
        if passes(&per_block[i]) {
            threshold = Some(i);
        } else {
            break;
        }
    }
    let passed = threshold.is_some();
    let witness = if passed {
        None
    } else {
        // The last block is the obstruction; a refutation witness from it has
        // support diameter at most S when one exists at radius floor(S/2).
        let last = family.len() - 1;
        let lap = ScaledLaplacian::build(&family.block(last).space, r)?;
        refute_localized_gap(&lap, s, epsilon, mode)?
    };
    Ok(SpectralCertificate {
        r: r.clone(),
        epsilon,
        s: s.clone(),
        threshold,
        per_block,
        witness,
        passed,
    })
}

/// Largest support bound `S` per block at which the localized minimum
/// Rayleigh value still certifiably exceeds `c`; `None` where even `S = 0`
/// fails. Candidate bounds are the realized distances, where the ball
/// structure actually changes.
pub fn expansion_profile(
    family: &SpaceFamily,
    r: &Rat,
    c: f64,
    tol: &Tolerances,
    mode: ExecMode,
) -> Result<Vec<Option<Rat>>> {
    if c <= 0.0 {
        return Err(Error::InvalidInput { what: "profile constant must be positive".into() });
    }
    let mut out = Vec::with_capacity(family.len());
    for block in family.blocks() {
        let space = &block.space;
        let lap = ScaledLaplacian::build(space, r)?;
        let mut candidates: Vec<Rat> = vec![Rat::zero()];
        for x in 0..space.n() {
            for y in (x + 1)..space.n() {
                candidates.push(space.dist(x, y));
            }
        }
        candidates.sort();
        candidates.dedup();
        // Localized minimum is non-increasing in S: scan ascending, stop at
        // the first failure.
        let mut best: Option<Rat> = None;
        for s in candidates {
            let (val, _) = localized_min_rayleigh(&lap, &s, mode)?;
            if val >= c + tol.eig {
                best = Some(s);
            } else {
                break;
            }
        }
        out.push(best);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::metric::SpaceBlock;
    use crate::rat::rat;
    use approx::assert_relative_eq;

    fn space_of(g: crate::graph::FiniteGraph) -> FiniteMetricSpace {
        FiniteMetricSpace::from_graph(g)
    }

    #[test]
    fn p3_scale_1_matrix() {
        let s = space_of(named::path(3));
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        let m = lap.matrix();
        let expect =
            DMatrix::from_row_slice(3, 3, &[1.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 1.0]);
        assert_eq!(m, expect);
    }

    #[test]
    fn large_scale_is_complete_graph() {
        let s = space_of(named::path(4));
        let lap = ScaledLaplacian::build(&s, &rat(10)).unwrap();
        let m = lap.matrix();
        for i in 0..4 {
            assert_eq!(m[(i, i)], 3.0);
            for j in 0..4 {
                if i != j {
                    assert_eq!(m[(i, j)], -1.0);
                }
            }
        }
    }

    #[test]
    fn constants_in_kernel() {
        let s = space_of(named::petersen());
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        let ones = vec![1.0; 10];
        assert_eq!(lap.quadratic_form(&ones), 0.0);
        // PSD with zero row sums.
        let m = lap.matrix();
        for i in 0..10 {
            let row_sum: f64 = (0..10).map(|j| m[(i, j)]).sum();
            assert_eq!(row_sum, 0.0);
        }
        let (min, _) = eigen::min_eigenpair(&m);
        assert!(min.abs() < 1e-9);
    }

    #[test]
    fn localized_s0_is_min_degree() {
        let s = space_of(named::petersen());
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        let (val, w) = localized_min_rayleigh(&lap, &rat(0), ExecMode::Sequential).unwrap();
        assert_relative_eq!(val, 3.0, epsilon = 1e-12);
        assert_eq!(w.support.len(), 1);
    }

    #[test]
    fn localized_whole_space_is_zero() {
        let s = space_of(named::path(3));
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        let (val, _) = localized_min_rayleigh(&lap, &rat(2), ExecMode::Sequential).unwrap();
        assert!(val.abs() < 1e-10);
    }

    #[test]
    fn localized_petersen_star() {
        let s = space_of(named::petersen());
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        let (val, _) = localized_min_rayleigh(&lap, &rat(1), ExecMode::Sequential).unwrap();
        // Closed star of a vertex in a 3-regular triangle-free graph:
        // submatrix is 3I + (e1 e^T + e e1^T)-shaped; smallest eigenvalue
        // 3 - sqrt(3).
        assert_relative_eq!(val, 3.0 - 3.0f64.sqrt(), epsilon = 1e-9);
    }

    #[test]
    fn refutation_on_cycle() {
        let s = space_of(named::cycle(12));
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        // Whole cycle fits in a ball of radius 6: constants give Rayleigh 0.
        let w = refute_localized_gap(&lap, &rat(12), 0.1, ExecMode::Sequential)
            .unwrap()
            .expect("cycle must refute");
        assert!(w.rayleigh < 0.1);
        let diam = s.diameter_of(&w.support).unwrap();
        assert!(diam <= rat(12));
        // Epsilon must be positive.
        assert!(refute_localized_gap(&lap, &rat(4), 0.0, ExecMode::Sequential).is_err());
    }

    #[test]
    fn refutation_absent_on_expanding_balls() {
        let s = space_of(named::foster());
        let lap = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        // Balls of radius 2 in a girth-10 cubic graph are trees; padded
        // submatrices sit well above 1/12.
        let none = refute_localized_gap(&lap, &rat(4), 1.0 / 12.0, ExecMode::Sequential).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn certify_complete_family() {
        let fam = SpaceFamily::new(vec![
            SpaceBlock::from_graph(named::complete(3)),
            SpaceBlock::from_graph(named::complete(4)),
            SpaceBlock::from_graph(named::complete(6)),
        ])
        .unwrap();
        let cert = certify_weak_expansion(
            &fam,
            &rat(1),
            2.0,
            &rat(0),
            &Tolerances::default(),
            ExecMode::Sequential,
        )
        .unwrap();
        assert!(cert.passed);
        // K3 has degree 2 = epsilon, which does not certifiably exceed it;
        // the K4 block is the threshold.
        assert_eq!(cert.threshold, Some(1));
    }

    #[test]
    fn certify_cycle_family_fails() {
        let fam = SpaceFamily::new(vec![
            SpaceBlock::from_graph(named::cycle(6)),
            SpaceBlock::from_graph(named::cycle(8)),
        ])
        .unwrap();
        let cert = certify_weak_expansion(
            &fam,
            &rat(1),
            0.05,
            &rat(8),
            &Tolerances::default(),
            ExecMode::Sequential,
        )
        .unwrap();
        assert!(!cert.passed);
        assert!(cert.threshold.is_none());
        let w = cert.witness.expect("constants witness");
        assert!(w.rayleigh < 0.05);
    }

    #[test]
    fn monotone_in_s_and_r() {
        let s = space_of(named::petersen());
        let lap1 = ScaledLaplacian::build(&s, &rat(1)).unwrap();
        let lap2 = ScaledLaplacian::build(&s, &rat(2)).unwrap();
        let mut prev = f64::INFINITY;
        for sv in 0..3 {
            let (v1, _) = localized_min_rayleigh(&lap1, &rat(sv), ExecMode::Sequential).unwrap();
            assert!(v1 <= prev + 1e-12, "non-increasing in S");
            prev = v1;
            let (v2, _) = localized_min_rayleigh(&lap2, &rat(sv), ExecMode::Sequential).unwrap();
            assert!(v2 + 1e-12 >= v1, "non-decreasing in R");
        }
    }

    #[test]
    fn profile_examples() {
        let fam = SpaceFamily::new(vec![SpaceBlock::from_graph(named::petersen())]).unwrap();
        // c above the max scale-degree: even singletons fail.
        let p = expansion_profile(
            &fam,
            &rat(1),
            5.0,
            &Tolerances::default(),
            ExecMode::Sequential,
        )
        .unwrap();
        assert!(p[0].is_none());
        // Small c: some S works but S = diam fails (constants).
        let p = expansion_profile(
            &fam,
            &rat(1),
            0.01,
            &Tolerances::default(),
            ExecMode::Sequential,
        )
        .unwrap();
        let s = p[0].clone().expect("positive profile");
        assert!(s < fam.block(0).space.diameter());
    }
}
