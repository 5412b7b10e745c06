//! Incidence structures, 2-design verification, flags, and flag-transitivity
//! testing.

use crate::error::{Error, Result};
use crate::permgroup::{PermGroup, Permutation};
use std::collections::{HashSet, VecDeque};
use std::fmt;

/// Points {0, .., v-1} and a multiset of blocks, each a sorted point set.
/// Duplicate blocks are permitted; verification reports lambda over the
/// multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<u32>>,
}

impl IncidenceStructure {
    /// Builds a structure; blocks are sorted, must be nonempty, in range, and
    /// free of repeated points.
    pub fn new(v: usize, blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for (i, block) in blocks.into_iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidArgument(format!("block {i} is empty")));
            }
            let mut b = block;
            b.sort_unstable();
            for w in b.windows(2) {
                if w[0] == w[1] {
                    return Err(Error::InvalidArgument(format!(
                        "block {i} repeats point {}",
                        w[0]
                    )));
                }
            }
            if let Some(&max) = b.last() {
                if max as usize >= v {
                    return Err(Error::IndexOutOfRange {
                        index: max,
                        degree: v,
                    });
                }
            }
            sorted_blocks.push(b);
        }
        Ok(IncidenceStructure {
            v,
            blocks: sorted_blocks,
        })
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }
}

/// The verified parameter signature of a 2-design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DesignParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
    pub symmetric: bool,
    pub nontrivial: bool,
}

/// Why a structure failed 2-design verification; names the first violating
/// block or pair encountered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignFailure {
    TooFewPoints {
        v: usize,
    },
    NoBlocks,
    UnequalBlockSize {
        block: usize,
        size: usize,
        expected: usize,
    },
    PairCoverage {
        pair: (u32, u32),
        count: u64,
        expected: u64,
    },
    ReplicationNotConstant {
        point: u32,
        count: u64,
        expected: u64,
    },
    FisherViolated {
        v: u64,
        b: u64,
        r: u64,
        k: u64,
    },
}

impl fmt::Display for DesignFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignFailure::TooFewPoints { v } => write!(f, "need at least 2 points, have {v}"),
            DesignFailure::NoBlocks => write!(f, "structure has no blocks"),
            DesignFailure::UnequalBlockSize {
                block,
                size,
                expected,
            } => write!(f, "block {block} has size {size}, expected {expected}"),
            DesignFailure::PairCoverage {
                pair,
                count,
                expected,
            } => write!(
                f,
                "pair {{{}, {}}} lies in {count} blocks, expected {expected}",
                pair.0, pair.1
            ),
            DesignFailure::ReplicationNotConstant {
                point,
                count,
                expected,
            } => write!(
                f,
                "point {point} lies in {count} blocks, expected {expected}"
            ),
            DesignFailure::FisherViolated { v, b, r, k } => write!(
                f,
                "degenerate parameters (v={v}, b={b}, r={r}, k={k}): need b >= v and r >= k"
            ),
        }
    }
}

/// Checks that all blocks share one size k and every unordered point pair
/// lies in exactly lambda blocks; the replication number r is derived and
/// cross-checked as constant per point, and the admissibility conclusions
/// b >= v, r >= k must hold.
pub fn verify_2design(
    structure: &IncidenceStructure,
) -> std::result::Result<DesignParams, DesignFailure> {
    let v = structure.v;
    if v < 2 {
        return Err(DesignFailure::TooFewPoints { v });
    }
    if structure.blocks.is_empty() {
        return Err(DesignFailure::NoBlocks);
    }
    let k = structure.blocks[0].len();
    for (i, block) in structure.blocks.iter().enumerate() {
        if block.len() != k {
            return Err(DesignFailure::UnequalBlockSize {
                block: i,
                size: block.len(),
                expected: k,
            });
        }
    }
    // pair counts in a triangular table, O(b k^2)
    let mut pair_count = vec![0u64; v * (v - 1) / 2];
    let pair_index = |a: u32, b: u32| -> usize {
        let (a, b) = (a as usize, b as usize);
        // a < b
        b * (b - 1) / 2 + a
    };
    let mut point_count = vec![0u64; v];
    for block in &structure.blocks {
        for (i, &a) in block.iter().enumerate() {
            point_count[a as usize] += 1;
            for &b in &block[i + 1..] {
                pair_count[pair_index(a, b)] += 1;
            }
        }
    }
    let lambda = pair_count[pair_index(0, 1)];
    for b in 1..v as u32 {
        for a in 0..b {
            let count = pair_count[pair_index(a, b)];
            if count != lambda {
                return Err(DesignFailure::PairCoverage {
                    pair: (a, b),
                    count,
                    expected: lambda,
                });
            }
        }
    }
    if lambda == 0 {
        return Err(DesignFailure::PairCoverage {
            pair: (0, 1),
            count: 0,
            expected: 1,
        });
    }
    let r = point_count[0];
    for (point, &count) in point_count.iter().enumerate() {
        if count != r {
            return Err(DesignFailure::ReplicationNotConstant {
                point: point as u32,
                count,
                expected: r,
            });
        }
    }
    let params = DesignParams {
        v: v as u64,
        b: structure.blocks.len() as u64,
        r,
        k: k as u64,
        lambda,
        symmetric: structure.blocks.len() == v,
        nontrivial: 2 < k && k < v,
    };
    debug_assert_eq!(params.r * (params.k - 1), params.lambda * (params.v - 1));
    debug_assert_eq!(params.b * params.k, params.v * params.r);
    if params.b < params.v || params.r < params.k {
        return Err(DesignFailure::FisherViolated {
            v: params.v,
            b: params.b,
            r: params.r,
            k: params.k,
        });
    }
    Ok(params)
}

/// Blocks become their complements; block count preserved. Fails if some
/// block already covers the whole point set.
pub fn complement_design(structure: &IncidenceStructure) -> Result<IncidenceStructure> {
    let v = structure.v;
    let mut blocks = Vec::with_capacity(structure.blocks.len());
    for (i, block) in structure.blocks.iter().enumerate() {
        if block.len() == v {
            return Err(Error::InvalidArgument(format!(
                "block {i} equals the whole point set"
            )));
        }
        let members: HashSet<u32> = block.iter().copied().collect();
        let complement: Vec<u32> = (0..v as u32).filter(|x| !members.contains(x)).collect();
        blocks.push(complement);
    }
    IncidenceStructure::new(v, blocks)
}

/// An incident (point, block) pair, by block index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Flag {
    pub point: u32,
    pub block: usize,
}

/// All flags, ordered by (block, point).
pub fn flags(structure: &IncidenceStructure) -> Vec<Flag> {
    let mut out = Vec::new();
    for (bi, block) in structure.blocks.iter().enumerate() {
        for &p in block {
            out.push(Flag {
                point: p,
                block: bi,
            });
        }
    }
    out.sort_by_key(|f| (f.block, f.point));
    out
}

/// True iff the block multiset is invariant under `g`.
pub fn is_automorphism(g: &Permutation, structure: &IncidenceStructure) -> Result<bool> {
    if g.degree() != structure.v {
        return Err(Error::DegreeMismatch {
            expected: structure.v,
            found: g.degree(),
        });
    }
    let mut original: Vec<&Vec<u32>> = structure.blocks.iter().collect();
    original.sort();
    let mut mapped: Vec<Vec<u32>> = structure
        .blocks
        .iter()
        .map(|block| g.apply_set(block))
        .collect();
    mapped.sort();
    Ok(original.iter().zip(&mapped).all(|(a, b)| **a == *b))
}

/// Flag-transitivity via a single-flag orbit: true iff the G-orbit of one
/// flag under the induced action on (point, canonical-block) pairs has size
/// b*k. Every generator must be an automorphism of the structure.
pub fn is_flag_transitive(group: &PermGroup, structure: &IncidenceStructure) -> Result<bool> {
    if group.degree() != structure.v {
        return Err(Error::DegreeMismatch {
            expected: structure.v,
            found: group.degree(),
        });
    }
    for g in group.generators() {
        if !is_automorphism(g, structure)? {
            return Err(Error::NotAutomorphism);
        }
    }
    let all = flags(structure);
    let Some(first) = all.first() else {
        return Ok(false);
    };
    let total = all.len();
    let start = (first.point, structure.blocks[first.block].clone());
    let mut seen: HashSet<(u32, Vec<u32>)> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some((point, block)) = queue.pop_front() {
        for g in group.generators() {
            let image = (g.apply(point), g.apply_set(&block));
            if !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    Ok(seen.len() == total)
}

/// Renders the design file format: `v <int>` then one block per line as
/// space-separated ascending 0-based indices.
pub fn write_design_file(structure: &IncidenceStructure) -> String {
    let mut out = format!("v {}\n", structure.v);
    for block in &structure.blocks {
        let toks: Vec<String> = block.iter().map(|x| x.to_string()).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the design file format. Lines starting with `#` are comments.
pub fn parse_design_file(text: &str) -> Result<IncidenceStructure> {
    let mut v: Option<usize> = None;
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = i + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if v.is_none() {
            let rest = line.strip_prefix('v').ok_or(Error::Parse {
                line: lineno,
                message: "expected `v <int>` header".into(),
            })?;
            let value: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid point count `{}`", rest.trim()),
            })?;
            v = Some(value);
            continue;
        }
        let block: Vec<u32> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("invalid point `{tok}`"),
                })
            })
            .collect::<Result<_>>()?;
        let bound = v.unwrap();
        if let Some(&bad) = block.iter().find(|&&x| x as usize >= bound) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("point {bad} out of range for v = {bound}"),
            });
        }
        blocks.push(block);
    }
    let v = v.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `v <int>` header".into(),
    })?;
    IncidenceStructure::new(v, blocks)
}
