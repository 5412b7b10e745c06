//! Builders for the specific designs under study: derived designs of linear
//! spaces, projective point-line designs, the Fano complement, and a 16-point
//! biplane with a flag-transitive, point-imprimitive group.

use crate::design::{
    complement_design, is_flag_transitive, verify_2design, DesignParams, IncidenceStructure,
};
use crate::error::{Error, Result};
use crate::finitegeom::{psl_action, ActionObject, FieldSpec};
use crate::permgroup::{PermGroup, Permutation, DEFAULT_ORBIT_BUDGET};

/// A 2-(v,k,1) design: every point pair lies on a unique line.
#[derive(Debug, Clone)]
pub struct LinearSpace {
    structure: IncidenceStructure,
    params: DesignParams,
}

impl LinearSpace {
    pub fn new(structure: IncidenceStructure) -> Result<Self> {
        let params = verify_2design(&structure)
            .map_err(|e| Error::InvalidArgument(format!("not a 2-design: {e}")))?;
        if params.lambda != 1 {
            return Err(Error::InvalidArgument(format!(
                "lambda = {}, expected 1",
                params.lambda
            )));
        }
        Ok(LinearSpace { structure, params })
    }

    pub fn structure(&self) -> &IncidenceStructure {
        &self.structure
    }

    pub fn params(&self) -> DesignParams {
        self.params
    }

    pub fn line_size(&self) -> usize {
        self.params.k as usize
    }
}

/// Replaces each line l by all sets l minus one point. The result is a
/// 2-(v, k-1, k-2) design with k * (line count) blocks, non-symmetric;
/// blocks are ordered by (source line index, removed point).
pub fn derived_design(space: &LinearSpace) -> Result<IncidenceStructure> {
    let k = space.line_size();
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "line size {k} too small; need k >= 3"
        )));
    }
    let structure = space.structure();
    let mut blocks = Vec::with_capacity(structure.b() * k);
    for line in structure.blocks() {
        for &removed in line {
            blocks.push(line.iter().copied().filter(|&x| x != removed).collect());
        }
    }
    IncidenceStructure::new(structure.v(), blocks)
}

/// The design of points and lines of PG(proj_dim, q): points are the
/// 1-spaces of GF(q)^{proj_dim+1} in canonical order (matching the points
/// action of the group), lines are the point sets of 2-spaces.
pub fn pg_point_line_design(proj_dim: usize, field: &FieldSpec) -> Result<LinearSpace> {
    pg_point_line_design_with_budget(proj_dim, field, DEFAULT_ORBIT_BUDGET)
}

pub fn pg_point_line_design_with_budget(
    proj_dim: usize,
    field: &FieldSpec,
    budget: usize,
) -> Result<LinearSpace> {
    let n = proj_dim + 1;
    if n < 3 {
        return Err(Error::InvalidArgument(
            "need projective dimension >= 2".into(),
        ));
    }
    let points = crate::finitegeom::enumerate_subspaces(field, n, 1, budget)?;
    let lines = crate::finitegeom::enumerate_subspaces(field, n, 2, budget)?;
    let blocks: Vec<Vec<u32>> = lines
        .iter()
        .map(|line| {
            let mut block: Vec<u32> = line
                .projective_points(field)
                .iter()
                .map(|p| points.binary_search(p).expect("point enumerated") as u32)
                .collect();
            block.sort_unstable();
            block
        })
        .collect();
    LinearSpace::new(IncidenceStructure::new(points.len(), blocks)?)
}

/// The complement of the Fano plane together with the natural group on its
/// 7 points. The pair passes `is_flag_transitive`.
pub fn fano_complement() -> (IncidenceStructure, PermGroup) {
    let field = FieldSpec::new(2, 1).expect("GF(2)");
    let space = pg_point_line_design(2, &field).expect("Fano plane");
    let complement = complement_design(space.structure()).expect("proper blocks");
    let action = psl_action(3, &field, ActionObject::Points).expect("points action");
    (complement, action.group)
}

/// A 6-element difference set in the rank-4 elementary abelian 2-group:
/// every nonzero g has exactly two ordered representations g = d + d'.
#[derive(Debug, Clone)]
pub struct DifferenceSet {
    elements: Vec<u16>,
}

impl DifferenceSet {
    pub fn elements(&self) -> &[u16] {
        &self.elements
    }

    /// Counts ordered representations g = d + d' with d != d' for every
    /// nonzero g; a (16, 6, 2) difference set yields exactly 2 throughout.
    pub fn is_lambda2_difference_set(&self) -> bool {
        let mut counts = [0u32; 16];
        for &d in &self.elements {
            for &e in &self.elements {
                if d != e {
                    counts[(d ^ e) as usize] += 1;
                }
            }
        }
        counts[0] == 0 && counts[1..].iter().all(|&c| c == 2)
    }
}

/// Points of F_2^4 are packed as integers 0..15 with x1 the most significant
/// bit; the quadric set is {x : x1 x2 + x3 x4 = 1}.
pub fn quadric_difference_set() -> DifferenceSet {
    let elements: Vec<u16> = (0u16..16)
        .filter(|&x| {
            let (x1, x2, x3, x4) = (x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1);
            (x1 & x2) ^ (x3 & x4) == 1
        })
        .collect();
    DifferenceSet { elements }
}

/// 4x4 GF(2) matrix as row bitmasks (bit j of row i = entry (i, j) with the
/// same MSB-first packing as the points).
type BitMatrix = [u16; 4];

fn bit_apply(m: &BitMatrix, x: u16) -> u16 {
    let mut y = 0;
    for (i, &row) in m.iter().enumerate() {
        if x >> (3 - i) & 1 == 1 {
            y ^= row;
        }
    }
    y
}

fn bit_invertible(m: &BitMatrix) -> bool {
    let mut rows = *m;
    let mut rank = 0;
    for bit in (0..4).rev() {
        let Some(pos) = (rank..4).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pos);
        for i in 0..4 {
            if i != rank && rows[i] >> bit & 1 == 1 {
                rows[i] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank == 4
}

fn set_image(m: &BitMatrix, set_mask: u16) -> u16 {
    let mut out = 0;
    for x in 0..16 {
        if set_mask >> x & 1 == 1 {
            out |= 1 << bit_apply(m, x);
        }
    }
    out
}

fn affine_permutation(m: &BitMatrix, shift: u16) -> Permutation {
    Permutation::from_images(
        (0..16)
            .map(|x| (bit_apply(m, x as u16) ^ shift) as u32)
            .collect(),
    )
    .expect("affine map is a bijection")
}

/// The 16-point biplane from the quadric difference set, with a
/// flag-transitive point-imprimitive group of automorphisms.
///
/// All 20160 invertible 4x4 matrices over GF(2) are scanned for those mapping
/// the difference set D onto a translate D + c; lifted to x -> xA + c these
/// all preserve the block set, but together with the translations they
/// generate a 2-transitive (hence point-primitive) group. To return an
/// imprimitive flag-transitive group instead, the lifted maps are restricted
/// to those preserving a 2-dimensional subspace W, taking the first W in
/// canonical order for which the restricted group is still flag-transitive;
/// its coset partition is then a block system.
pub fn biplane16() -> (IncidenceStructure, PermGroup) {
    let dset = quadric_difference_set();
    debug_assert!(dset.is_lambda2_difference_set());
    let d_mask: u16 = dset.elements().iter().fold(0, |m, &x| m | 1 << x);

    let blocks: Vec<Vec<u32>> = (0u16..16)
        .map(|g| dset.elements().iter().map(|&d| (d ^ g) as u32).collect())
        .collect();
    let structure = IncidenceStructure::new(16, blocks).expect("valid blocks");

    // translate mask -> shift
    let mut translate_shift = std::collections::HashMap::new();
    for g in 0u16..16 {
        let mask = dset.elements().iter().fold(0u16, |m, &x| m | 1 << (x ^ g));
        translate_shift.insert(mask, g);
    }
    debug_assert!(translate_shift.contains_key(&d_mask));

    // exhaustive scan of GL(4,2)
    let mut lifted: Vec<(BitMatrix, u16)> = Vec::new();
    let mut invertible_count = 0u32;
    for a in 0u16..16 {
        for b in 0u16..16 {
            for c in 0u16..16 {
                for d in 0u16..16 {
                    let m: BitMatrix = [a, b, c, d];
                    if !bit_invertible(&m) {
                        continue;
                    }
                    invertible_count += 1;
                    if let Some(&shift) = translate_shift.get(&set_image(&m, d_mask)) {
                        lifted.push((m, shift));
                    }
                }
            }
        }
    }
    debug_assert_eq!(invertible_count, 20160);

    let translations: Vec<Permutation> = [8u16, 4, 2, 1]
        .iter()
        .map(|&t| affine_permutation(&[8, 4, 2, 1], t))
        .collect();

    // 2-dimensional subspaces {0, a, b, a^b} in canonical order
    let mut subspaces: Vec<[u16; 4]> = Vec::new();
    for a in 1u16..16 {
        for b in a + 1..16 {
            let mut cells = [0, a, b, a ^ b];
            cells.sort_unstable();
            if cells[1] == a && !subspaces.contains(&cells) {
                subspaces.push(cells);
            }
        }
    }
    subspaces.sort_unstable();

    for w in &subspaces {
        let w_mask: u16 = w.iter().fold(0, |m, &x| m | 1 << x);
        let mut gens = translations.clone();
        for (m, shift) in &lifted {
            if set_image(m, w_mask) == w_mask {
                gens.push(affine_permutation(m, *shift));
            }
        }
        let group = PermGroup::new(16, gens).expect("degree 16 permutations");
        if is_flag_transitive(&group, &structure).expect("generators are automorphisms")
            && !group
                .is_primitive()
                .expect("transitive on 16 points")
                .is_primitive()
        {
            return (structure, group);
        }
    }
    unreachable!("some stabilized subspace yields a flag-transitive group")
}
