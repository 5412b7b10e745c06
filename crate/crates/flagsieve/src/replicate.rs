//! Independent brute-force reproduction of recorded computer-verified facts
//! about the groups and designs in this crate. Each reproduction compares a
//! frozen expected value against a value recomputed from scratch with the
//! permutation-group primitives; matching is exact string equality.

use crate::construct::biplane16;
use crate::design::{flags, is_flag_transitive, verify_2design, IncidenceStructure};
use crate::error::{Error, Result};
use crate::finitegeom::{
    extend_to_pgammal, psl_action, sl_generators, ActionObject, FieldSpec, MatrixGL,
};
use crate::permgroup::{PermGroup, Permutation};
use std::time::Instant;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplicationReport {
    pub claim: &'static str,
    pub expected: String,
    pub computed: String,
    pub matched: bool,
    pub wall_ms: u128,
}

impl ReplicationReport {
    fn finish(claim: &'static str, expected: String, computed: String, start: Instant) -> Self {
        ReplicationReport {
            claim,
            matched: expected == computed,
            expected,
            computed,
            wall_ms: start.elapsed().as_millis(),
        }
    }
}

pub const CLAIM_IDS: [&str; 4] = [
    "psl34-orbits",
    "sp42-subdegrees",
    "psl32-block-search",
    "biplane16",
];

/// Checks documented as out of reach for this library.
pub fn unreplicated_claims() -> &'static [(&'static str, &'static str)] {
    &[(
        "psl33-degree144-block-stabilizers",
        "requires enumerating every subgroup of index 312 in a degree-144 group; \
         this library provides no subgroup enumeration and no desk-scale subset \
         exhaustion is feasible at C(144,12)",
    )]
}

/// Orbit lengths of the subfield subgroup SL(3,2) < SL(3,4) on the 105
/// incident point-line flags of PG(2,4); expected lengths 14, 14, 21, 56.
pub fn replicate_psl34_orbits() -> Result<ReplicationReport> {
    let start = Instant::now();
    let f4 = FieldSpec::new(2, 2)?;
    let action = psl_action(3, &f4, ActionObject::IncidentFlags)?;
    let f2 = FieldSpec::new(2, 1)?;
    // the SL(3,2) generators have entries 0/1, which encode identically in GF(4)
    let sub_gens: Vec<Permutation> = sl_generators(&f2, 3)
        .iter()
        .map(|m| {
            let entries: Vec<u32> = (0..3)
                .flat_map(|i| (0..3).map(move |j| m.entry(i, j)))
                .collect();
            let over_f4 = MatrixGL::new(&f4, 3, entries)?;
            action.permutation_of_matrix(&over_f4)
        })
        .collect::<Result<_>>()?;
    let subgroup = PermGroup::new(action.degree(), sub_gens)?;
    let mut lengths: Vec<usize> = subgroup.orbits().iter().map(|o| o.len()).collect();
    lengths.sort_unstable();
    let total: usize = lengths.iter().sum();
    let expected = "degree=105 orbits=[14, 14, 21, 56]".to_string();
    let computed = format!("degree={total} orbits={lengths:?}");
    Ok(ReplicationReport::finish(
        "psl34-orbits",
        expected,
        computed,
        start,
    ))
}

/// Subdegrees of PSL(4,2) on the 28 cosets of its symplectic subgroup,
/// realized as the congruence orbit of the standard alternating form;
/// expected 1, 12, 15, and the elimination gcd(24,30) = 6 with 36 < 56.
pub fn replicate_sp42_subdegrees() -> Result<ReplicationReport> {
    let start = Instant::now();
    let field = FieldSpec::new(2, 1)?;
    let group = symplectic_coset_action(&field)?;
    let degree = group.degree();
    let order = group.order();
    let subdegrees = group.subdegrees(0)?;
    let nontrivial: Vec<u64> = subdegrees
        .iter()
        .filter(|&&s| s > 1)
        .map(|&s| s as u64)
        .collect();
    let divisor = nontrivial
        .iter()
        .map(|&s| 2 * s)
        .fold(0u64, crate::finitegeom::arith::gcd_u64);
    let eliminated = (divisor as u128) * (divisor as u128) < 2 * degree as u128;
    let expected =
        "degree=28 order=20160 subdegrees=[1, 12, 15] r_divisor=6 eliminated=true".to_string();
    let computed = format!(
        "degree={degree} order={order} subdegrees={subdegrees:?} r_divisor={divisor} eliminated={eliminated}"
    );
    Ok(ReplicationReport::finish(
        "sp42-subdegrees",
        expected,
        computed,
        start,
    ))
}

/// The permutation group induced by SL(4,2) on the congruence orbit
/// M -> A M A^T of the standard alternating form (antidiagonal 2x2 blocks):
/// the coset action on its symplectic subgroup.
fn symplectic_coset_action(field: &FieldSpec) -> Result<PermGroup> {
    let gens = sl_generators(field, 4);
    let j = MatrixGL::new(
        field,
        4,
        vec![0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
    )?;
    let mut forms = vec![j];
    let mut index = std::collections::HashMap::new();
    index.insert(key_of(&forms[0]), 0usize);
    let mut head = 0;
    while head < forms.len() {
        let current = forms[head].clone();
        head += 1;
        for a in &gens {
            let image = a.mul(field, &current).mul(field, &a.transpose());
            let key = key_of(&image);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                e.insert(forms.len());
                forms.push(image);
            }
        }
    }
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|a| {
            let images: Vec<u32> = forms
                .iter()
                .map(|m| {
                    let image = a.mul(field, m).mul(field, &a.transpose());
                    index[&key_of(&image)] as u32
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect::<Result<_>>()?;
    PermGroup::new(forms.len(), perms)
}

fn key_of(m: &MatrixGL) -> Vec<u32> {
    (0..m.n())
        .flat_map(|i| (0..m.n()).map(move |j| m.entry(i, j)))
        .collect()
}

const SUBSET_SIZE: usize = 6;
const FLAG_COUNT: usize = 21;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The index-th 6-subset of {0..20} in colexicographic order.
fn colex_unrank(mut index: u64) -> Vec<u32> {
    let mut out = vec![0u32; SUBSET_SIZE];
    for i in (1..=SUBSET_SIZE as u64).rev() {
        // largest a with C(a, i) <= index
        let mut a = i - 1;
        while binomial(a + 1, i) <= index {
            a += 1;
        }
        index -= binomial(a, i);
        out[i as usize - 1] = a as u32;
    }
    out
}

/// Exhausts all C(21,6) = 54264 six-subsets of the 21 flags of PG(2,2) under
/// the duality-extended group of order 336: counts subsets whose orbit has
/// length exactly 28 and, among those, orbits forming a 2-(21,6,2) design.
/// The expected success count is zero.
///
/// The scan partitions the colexicographic index range across `jobs` workers;
/// each worker owns a disjoint range and the counts are merged in range order.
pub fn replicate_psl32_block_search(jobs: usize) -> Result<ReplicationReport> {
    let start = Instant::now();
    let jobs = jobs.max(1);
    let field = FieldSpec::new(2, 1)?;
    let action = psl_action(3, &field, ActionObject::IncidentFlags)?;
    let group = extend_to_pgammal(&action, true)?.group;
    if group.degree() != FLAG_COUNT || group.order() != 336 {
        return Err(Error::InvalidArgument(format!(
            "unexpected flag action: degree {}, order {}",
            group.degree(),
            group.order()
        )));
    }
    let total = binomial(FLAG_COUNT as u64, SUBSET_SIZE as u64);
    let chunk = total.div_ceil(jobs as u64);
    let group_ref = &group;
    let results: Vec<(u64, u64, u64)> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for worker in 0..jobs as u64 {
            let lo = worker * chunk;
            let hi = total.min(lo + chunk);
            handles.push(scope.spawn(move || scan_range(group_ref, lo, hi)));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let (mut scanned, mut orbit28, mut successes) = (0u64, 0u64, 0u64);
    for (s, o, d) in results {
        scanned += s;
        orbit28 += o;
        successes += d;
    }
    // 84 = three orbits of length 28 among the 54264 subsets
    let expected = format!("scanned={total} orbit28_subsets=84 successes=0");
    let computed = format!("scanned={scanned} orbit28_subsets={orbit28} successes={successes}");
    Ok(ReplicationReport::finish(
        "psl32-block-search",
        expected,
        computed,
        start,
    ))
}

fn scan_range(group: &PermGroup, lo: u64, hi: u64) -> (u64, u64, u64) {
    let mut scanned = 0;
    let mut orbit28 = 0;
    let mut successes = 0;
    for index in lo..hi {
        scanned += 1;
        let subset = colex_unrank(index);
        // a budget of 28 makes any longer orbit bail out early
        let orbit = match group.orbit_of_set_with_budget(&subset, 28) {
            Ok(orbit) => orbit,
            Err(_) => continue,
        };
        if orbit.len() != 28 {
            continue;
        }
        orbit28 += 1;
        let candidate = IncidenceStructure::new(FLAG_COUNT, orbit).expect("orbit blocks are valid");
        if let Ok(params) = verify_2design(&candidate) {
            if (params.v, params.b, params.r, params.k, params.lambda) == (21, 28, 8, 6, 2) {
                successes += 1;
            }
        }
    }
    (scanned, orbit28, successes)
}

/// Builds the 16-point biplane and checks its verified parameters,
/// flag-transitivity and point-imprimitivity, reporting the order of the
/// constructed group.
pub fn replicate_biplane16_properties() -> Result<ReplicationReport> {
    let start = Instant::now();
    let (structure, group) = biplane16();
    let params = verify_2design(&structure)
        .map_err(|e| Error::InvalidArgument(format!("biplane16 failed verification: {e}")))?;
    let flag_count = flags(&structure).len();
    let ft = is_flag_transitive(&group, &structure)?;
    let primitive = group.is_primitive()?.is_primitive();
    let order = group.order();
    let expected = "params=(16,16,6,6,2) flags=96 flag_transitive=true point_primitive=false \
                    order=768"
        .to_string();
    let computed = format!(
        "params=({},{},{},{},{}) flags={} flag_transitive={} point_primitive={} order={}",
        params.v, params.b, params.r, params.k, params.lambda, flag_count, ft, primitive, order
    );
    Ok(ReplicationReport::finish(
        "biplane16",
        expected,
        computed,
        start,
    ))
}

pub fn replicate_claim(claim: &str, jobs: usize) -> Result<ReplicationReport> {
    match claim {
        "psl34-orbits" => replicate_psl34_orbits(),
        "sp42-subdegrees" => replicate_sp42_subdegrees(),
        "psl32-block-search" => replicate_psl32_block_search(jobs),
        "biplane16" => replicate_biplane16_properties(),
        other => Err(Error::InvalidArgument(format!(
            "unknown claim `{other}`; known: {}",
            CLAIM_IDS.join(", ")
        ))),
    }
}

pub fn replicate_all(jobs: usize) -> Result<Vec<ReplicationReport>> {
    CLAIM_IDS
        .iter()
        .map(|claim| replicate_claim(claim, jobs))
        .collect()
}
