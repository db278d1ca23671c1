//! Almost quasi-isometric embeddings between block families.
//!
//! An embedding is a per-block map table `phi_i : X_i -> Y_i` with constants
//! `(a, k, b_i)` satisfying `a d(x,y) - b_i <= d(phi x, phi y) <= k d(x,y)`
//! on every pair, plus a finite smallness surrogate for the `b_i` sequence:
//! the ratios `b_i / girth(X_i)` must be non-increasing, and in families with
//! at least two blocks the final ratio must be at most half the initial one.
//! All comparisons are exact rational arithmetic.

use crate::error::{Error, Result};
use crate::metric::{FiniteMetricSpace, SpaceBlock, SpaceFamily};
use crate::par::{self, ExecMode};
use crate::rat::{self, Rat};
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Which side of the two-sided inequality a witness violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundSide {
    Lower,
    Upper,
}

/// Witness for a failed verification: a concrete pair in a concrete block.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairWitness {
    pub block: usize,
    pub x: u32,
    pub y: u32,
    pub side: BoundSide,
    /// `d(x, y)` and `d(phi x, phi y)` as exact rationals.
    pub domain_dist: String,
    pub image_dist: String,
}

/// Outcome of [`AqiEmbedding::verify`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AqiReport {
    pub passed: bool,
    #[serde(with = "rat::serde_rat")]
    pub a: Rat,
    #[serde(with = "rat::serde_rat")]
    pub k: Rat,
    #[serde(with = "rat::serde_rat_vec")]
    pub b: Vec<Rat>,
    /// `b_i / girth(X_i)` per block (0 where girth is infinite).
    pub ratio_sequence: Vec<String>,
    pub pair_witness: Option<PairWitness>,
    pub proxy_failure: Option<String>,
}

impl AqiReport {
    fn failed_pair(mut self, w: PairWitness) -> Self {
        self.passed = false;
        self.pair_witness = Some(w);
        self
    }
}

/// A family of maps `phi_i : X_i -> Y_i` with AQI constants.
#[derive(Debug, Clone)]
pub struct AqiEmbedding {
    domain: SpaceFamily,
    codomain: SpaceFamily,
    /// `maps[i][x]` is the image of point `x` of block `i`.
    maps: Vec<Vec<u32>>,
    a: Rat,
    k: Rat,
    b: Vec<Rat>,
}

impl AqiEmbedding {
    pub fn new(
        domain: SpaceFamily,
        codomain: SpaceFamily,
        maps: Vec<Vec<u32>>,
        a: Rat,
        k: Rat,
        b: Vec<Rat>,
    ) -> Result<Self> {
        if domain.len() != codomain.len() {
            return Err(Error::BlockCountMismatch {
                domain: domain.len(),
                codomain: codomain.len(),
            });
        }
        if maps.len() != domain.len() || b.len() != domain.len() {
            return Err(Error::InvalidInput {
                what: "need one map table and one b per block".into(),
            });
        }
        if !a.is_positive() || !k.is_positive() {
            return Err(Error::InvalidInput { what: "constants a, k must be positive".into() });
        }
        if b.iter().any(|bi| bi.is_negative()) {
            return Err(Error::InvalidInput { what: "constants b_i must be nonnegative".into() });
        }
        for (i, map) in maps.iter().enumerate() {
            if map.len() != domain.block(i).space.n() {
                return Err(Error::InvalidInput {
                    what: format!("map table on block {i} is not total"),
                });
            }
            let m = codomain.block(i).space.n();
            if let Some(&bad) = map.iter().find(|&&y| y as usize >= m) {
                return Err(Error::InvalidIndex { index: bad as usize, size: m });
            }
        }
        Ok(AqiEmbedding { domain, codomain, maps, a, k, b })
    }

    /// Identity embedding of a family into itself (`a = k = 1`, `b = 0`).
    pub fn identity(family: SpaceFamily) -> Self {
        let maps = family
            .blocks()
            .iter()
            .map(|b| (0..b.space.n() as u32).collect())
            .collect();
        let b = vec![Rat::zero(); family.len()];
        AqiEmbedding {
            domain: family.clone(),
            codomain: family,
            maps,
            a: rat::rat(1),
            k: rat::rat(1),
            b,
        }
    }

    pub fn domain(&self) -> &SpaceFamily {
        &self.domain
    }

    pub fn codomain(&self) -> &SpaceFamily {
        &self.codomain
    }

    pub fn map(&self, block: usize) -> &[u32] {
        &self.maps[block]
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn k(&self) -> &Rat {
        &self.k
    }

    pub fn b(&self, block: usize) -> &Rat {
        &self.b[block]
    }

    pub fn b_all(&self) -> &[Rat] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Preimage of a point set `F` in codomain block `i`.
    pub fn preimage(&self, block: usize, f: &[u32]) -> Vec<u32> {
        let mut in_f = vec![false; self.codomain.block(block).space.n()];
        for &y in f {
            in_f[y as usize] = true;
        }
        self.maps[block]
            .iter()
            .enumerate()
            .filter(|(_, &y)| in_f[y as usize])
            .map(|(x, _)| x as u32)
            .collect()
    }

    /// Fiber sizes `|phi^{-1}(y)|` for codomain block `i`.
    pub fn fiber_sizes(&self, block: usize) -> Vec<usize> {
        let mut sizes = vec![0usize; self.codomain.block(block).space.n()];
        for &y in &self.maps[block] {
            sizes[y as usize] += 1;
        }
        sizes
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.len()).all(|i| self.fiber_sizes(i).iter().all(|&s| s > 0))
    }

    /// Verifies both displayed inequalities on every pair of every block plus
    /// the `b_i` smallness surrogate. Failure carries a witness.
    pub fn verify(&self) -> Result<AqiReport> {
        self.verify_with(ExecMode::default())
    }

    pub fn verify_with(&self, mode: ExecMode) -> Result<AqiReport> {
        let ratios = self.b_girth_ratios()?;
        let report = AqiReport {
            passed: true,
            a: self.a.clone(),
            k: self.k.clone(),
            b: self.b.clone(),
            ratio_sequence: ratios.iter().map(rat::display).collect(),
            pair_witness: None,
            proxy_failure: None,
        };

        let witnesses = par::map_collect(self.len(), mode, |i| self.check_block_pairs(i));
        if let Some(w) = witnesses.into_iter().flatten().next() {
            return Ok(report.failed_pair(w));
        }

        // Smallness surrogate on the ratio sequence.
        for w in ratios.windows(2) {
            if w[1] > w[0] {
                let mut r = report;
                r.passed = false;
                r.proxy_failure = Some(format!(
                    "b/girth ratios increase: {} -> {}",
                    rat::display(&w[0]),
                    rat::display(&w[1])
                ));
                return Ok(r);
            }
        }
        if ratios.len() >= 2 {
            let first = &ratios[0];
            let last = &ratios[ratios.len() - 1];
            if last.clone() * rat::rat(2) > *first {
                let mut r = report;
                r.passed = false;
                r.proxy_failure = Some(format!(
                    "final b/girth ratio {} exceeds half the initial ratio {}",
                    rat::display(last),
                    rat::display(first)
                ));
                return Ok(r);
            }
        }
        Ok(report)
    }

    fn b_girth_ratios(&self) -> Result<Vec<Rat>> {
        let mut out = Vec::with_capacity(self.len());
        for (i, block) in self.domain.blocks().iter().enumerate() {
            let ratio = match block.girth {
                Some(crate::graph::Girth::Finite(g)) => &self.b[i] / rat::rat_u(g as u64),
                Some(crate::graph::Girth::Infinite) => Rat::zero(),
                None => {
                    return Err(Error::PreconditionViolation {
                        what: format!(
                            "block {i} has no girth data; the smallness surrogate needs girths"
                        ),
                    })
                }
            };
            out.push(ratio);
        }
        Ok(out)
    }

    /// First violating pair in block `i`, if any.
    fn check_block_pairs(&self, i: usize) -> Option<PairWitness> {
        let dom = &self.domain.block(i).space;
        let cod = &self.codomain.block(i).space;
        let map = &self.maps[i];
        let (a, k, b) = (&self.a, &self.k, &self.b[i]);
        for x in 0..dom.n() {
            for y in (x + 1)..dom.n() {
                let d = dom.dist(x, y);
                let d_img = cod.dist(map[x] as usize, map[y] as usize);
                let side = if d_img < a * d.clone() - b.clone() {
                    Some(BoundSide::Lower)
                } else if d_img > k * d.clone() {
                    Some(BoundSide::Upper)
                } else {
                    None
                };
                if let Some(side) = side {
                    return Some(PairWitness {
                        block: i,
                        x: x as u32,
                        y: y as u32,
                        side,
                        domain_dist: rat::display(&d),
                        image_dist: rat::display(&d_img),
                    });
                }
            }
        }
        None
    }

    /// Restricts each codomain block to the image of its map, with the
    /// induced metric; constants are unchanged. Already-surjective
    /// embeddings are returned as-is, which makes the operation idempotent.
    pub fn surjectivize(&self) -> Result<AqiEmbedding> {
        if self.is_surjective() {
            return Ok(self.clone());
        }
        let mut new_blocks = Vec::with_capacity(self.len());
        let mut new_maps = Vec::with_capacity(self.len());
        for (i, map) in self.maps.iter().enumerate() {
            let cod = &self.codomain.block(i).space;
            let mut hit = vec![false; cod.n()];
            for &y in map {
                hit[y as usize] = true;
            }
            let image: Vec<u32> =
                (0..cod.n() as u32).filter(|&y| hit[y as usize]).collect();
            let mut reindex = vec![u32::MAX; cod.n()];
            for (new, &old) in image.iter().enumerate() {
                reindex[old as usize] = new as u32;
            }
            let induced = cod.induced(&image)?;
            new_blocks.push(SpaceBlock::from_space(induced));
            new_maps.push(map.iter().map(|&y| reindex[y as usize]).collect());
        }
        Ok(AqiEmbedding {
            domain: self.domain.clone(),
            codomain: SpaceFamily::new(new_blocks)?,
            maps: new_maps,
            a: self.a.clone(),
            k: self.k.clone(),
            b: self.b.clone(),
        })
    }

    /// Upper bound `(diam F + b_i) / a` on the diameter of `phi^{-1}(F)`.
    /// The bound is re-checked against the exact preimage diameter.
    pub fn preimage_diameter_bound(&self, block: usize, f: &[u32]) -> Result<Rat> {
        if f.is_empty() {
            return Err(Error::EmptySet { context: "preimage_diameter_bound" });
        }
        let diam_f = self.codomain.block(block).space.diameter_of(f)?;
        let bound = (diam_f + &self.b[block]) / self.a.clone();
        let pre = self.preimage(block, f);
        if !pre.is_empty() {
            let actual = self.domain.block(block).space.diameter_of(&pre)?;
            if actual > bound {
                return Err(Error::InternalInconsistency {
                    what: format!(
                        "preimage diameter {} exceeds bound {} on block {block}",
                        rat::display(&actual),
                        rat::display(&bound)
                    ),
                });
            }
        }
        Ok(bound)
    }

    /// Least block index `i` such that `(S + b_j)/a <= girth(X_j)/2` for all
    /// recorded `j >= i`.
    pub fn threshold_index(&self, s: &Rat) -> Result<usize> {
        let girths = self.domain.girths();
        let mut idx = None;
        for j in (0..self.len()).rev() {
            let ok = match girths[j] {
                Some(crate::graph::Girth::Finite(g)) => {
                    (s + &self.b[j]) / self.a.clone() <= rat::rat_u(g as u64) / rat::rat(2)
                }
                Some(crate::graph::Girth::Infinite) => true,
                None => false,
            };
            if ok {
                idx = Some(j);
            } else {
                break;
            }
        }
        idx.ok_or_else(|| Error::NoSuchIndex { s: rat::display(s) })
    }
}

/// Net-quotient embedding: codomain block `i` is a greedy `r_i`-net of
/// `X_i` with the induced metric, `phi_i` maps each point to its nearest net
/// point (ties to the lowest index), and the constants are `a = 1`,
/// `k = 1 + 2 max r_i`, `b_i = 2 r_i`.
pub fn net_quotient(family: &SpaceFamily, radii: &[Rat]) -> Result<AqiEmbedding> {
    if radii.len() != family.len() {
        return Err(Error::InvalidInput { what: "need one net radius per block".into() });
    }
    if radii.iter().any(|r| r.is_negative()) {
        return Err(Error::InvalidInput { what: "net radii must be nonnegative".into() });
    }
    let mut blocks = Vec::with_capacity(family.len());
    let mut maps = Vec::with_capacity(family.len());
    for (block, r) in family.blocks().iter().zip(radii) {
        let space = &block.space;
        let net = crate::metric::greedy_net(space, r);
        let map: Vec<u32> = (0..space.n())
            .map(|x| {
                let mut best: Option<(Rat, u32)> = None;
                for (j, &c) in net.iter().enumerate() {
                    let d = space.dist(x, c as usize);
                    match &best {
                        Some((bd, _)) if *bd <= d => {}
                        _ => best = Some((d, j as u32)),
                    }
                }
                best.expect("nonempty net").1
            })
            .collect();
        let induced = space.induced(&net)?;
        blocks.push(SpaceBlock::from_space(induced));
        maps.push(map);
    }
    let k = rat::rat(1) + rat::rat(2) * radii.iter().max().cloned().unwrap_or_else(Rat::zero);
    let b = radii.iter().map(|r| rat::rat(2) * r).collect();
    AqiEmbedding::new(
        family.clone(),
        SpaceFamily::new(blocks)?,
        maps,
        rat::rat(1),
        k,
        b,
    )
}
