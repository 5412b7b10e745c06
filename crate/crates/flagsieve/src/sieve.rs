//! Executable form of the arithmetic feasibility conditions on design and
//! group parameters. Candidates are annotated rather than deleted, so a
//! report retains the full elimination trail.

use crate::error::{Error, Result};
use crate::finitegeom::arith::{gcd_u128, prime_of};
use crate::finitegeom::{classical_order, ClassicalKind};

fn gcd(a: u64, b: u64) -> u64 {
    gcd_u128(a as u128, b as u128) as u64
}

/// Which filter eliminated a candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterId {
    /// r must divide gcd(lambda (v-1), |G_alpha|).
    Stabilizer,
    /// r must divide s gcd(r, lambda) for every nontrivial subdegree s.
    Subdegree,
}

impl std::fmt::Display for FilterId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FilterId::Stabilizer => write!(f, "stabilizer-divisibility"),
            FilterId::Subdegree => write!(f, "subdegree-divisibility"),
        }
    }
}

/// An (r, k, b) triple surviving the basic counting conditions, with its
/// elimination status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveCandidate {
    pub r: u64,
    pub k: u64,
    pub b: u64,
    pub eliminated_by: Option<FilterId>,
}

impl SieveCandidate {
    pub fn passes(&self) -> bool {
        self.eliminated_by.is_none()
    }
}

/// All (r, k, b) with 2 < k < v, r(k-1) = lambda(v-1), b = vr/k integral,
/// b >= v, r >= k and r^2 > lambda v, sorted by k. Iterates over the divisors
/// r of lambda(v-1).
pub fn admissible_rk(v: u64, lambda: u64) -> Result<Vec<SieveCandidate>> {
    if v < 4 || lambda < 1 {
        return Err(Error::InvalidArgument("need v >= 4 and lambda >= 1".into()));
    }
    let target = lambda * (v - 1);
    let mut out = Vec::new();
    for r in 1..=target {
        if !target.is_multiple_of(r) {
            continue;
        }
        let k = target / r + 1;
        if k <= 2 || k >= v {
            continue;
        }
        if !(v * r).is_multiple_of(k) {
            continue;
        }
        let b = v * r / k;
        if b < v || r < k {
            continue;
        }
        if r as u128 * r as u128 <= lambda as u128 * v as u128 {
            continue;
        }
        out.push(SieveCandidate {
            r,
            k,
            b,
            eliminated_by: None,
        });
    }
    out.sort_by_key(|c| c.k);
    Ok(out)
}

/// Marks failed every candidate whose r does not divide
/// gcd(lambda(v-1), stab_order). Already-eliminated candidates keep their
/// original filter tag.
pub fn filter_stabilizer(candidates: &mut [SieveCandidate], v: u64, lambda: u64, stab_order: u128) {
    let bound = gcd_u128((lambda * (v - 1)) as u128, stab_order);
    for c in candidates.iter_mut() {
        if c.eliminated_by.is_none() && !bound.is_multiple_of(c.r as u128) {
            c.eliminated_by = Some(FilterId::Stabilizer);
        }
    }
}

/// Marks failed every candidate where some nontrivial subdegree s has
/// r not dividing s gcd(r, lambda).
pub fn filter_subdegrees(candidates: &mut [SieveCandidate], lambda: u64, subdegrees: &[u64]) {
    for c in candidates.iter_mut() {
        if c.eliminated_by.is_some() {
            continue;
        }
        let g = gcd(c.r, lambda);
        if subdegrees.iter().any(|&s| !(s * g).is_multiple_of(c.r)) {
            c.eliminated_by = Some(FilterId::Subdegree);
        }
    }
}

/// Group-theoretic data for a socle PSL(n, q) with q = p^f: the stabilizer
/// order |X_alpha|, and optionally a nontrivial subdegree list and the order
/// of a two-point-stabilizer subgroup H.
#[derive(Debug, Clone)]
pub struct GroupData {
    pub n: u32,
    pub q: u64,
    pub p: u64,
    pub f: u32,
    pub d: u64,
    pub stabilizer_order: u128,
    pub subdegrees: Option<Vec<u64>>,
    pub subgroup_order: Option<u128>,
}

impl GroupData {
    pub fn new(n: u32, q: u64, f: u32, stabilizer_order: u128) -> Result<Self> {
        let p = prime_of(q, f)?;
        if n < 3 {
            return Err(Error::InvalidArgument("need n >= 3".into()));
        }
        if stabilizer_order == 0 {
            return Err(Error::InvalidArgument(
                "stabilizer order must be positive".into(),
            ));
        }
        Ok(GroupData {
            n,
            q,
            p,
            f,
            d: gcd(n as u64, q - 1),
            stabilizer_order,
            subdegrees: None,
            subgroup_order: None,
        })
    }

    pub fn with_subgroup_order(mut self, h: u128) -> Self {
        self.subgroup_order = Some(h);
        self
    }

    fn socle_order(&self) -> Result<u128> {
        classical_order(ClassicalKind::Psl, self.n, self.q)
    }
}

/// p'-part of n: n with every factor p removed.
pub fn p_prime_part(mut n: u128, p: u128) -> u128 {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n
}

/// Report of the socle-order feasibility conditions:
/// (i)  |X| < 2 (df)^2 |X_alpha|^3 (a surviving candidate satisfies this);
/// (ii) r divides 2 d f |X_alpha|;
/// (iii) when p | v: r divides 2 d f |X_alpha|_{p'} and
///       |X| < 2 (df)^2 |X_alpha|_{p'}^2 |X_alpha|.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PslBoundsReport {
    pub socle_order: u128,
    pub order_bound_holds: bool,
    pub r_divisor_bound: u128,
    pub p_divides_v: bool,
    pub refined_r_divisor_bound: Option<u128>,
    pub refined_order_bound_holds: Option<bool>,
}

pub fn psl_bounds(gd: &GroupData) -> Result<PslBoundsReport> {
    let socle = gd.socle_order()?;
    if socle % gd.stabilizer_order != 0 {
        return Err(Error::InvalidArgument(format!(
            "stabilizer order {} does not divide |PSL({},{})| = {}",
            gd.stabilizer_order, gd.n, gd.q, socle
        )));
    }
    let v = socle / gd.stabilizer_order;
    let df = gd.d as u128 * gd.f as u128;
    let cube = gd.stabilizer_order.checked_pow(3).ok_or(Error::Overflow)?;
    let order_bound_holds = socle
        < 2u128
            .checked_mul(df * df)
            .ok_or(Error::Overflow)?
            .checked_mul(cube)
            .ok_or(Error::Overflow)?;
    let r_divisor_bound = 2 * df * gd.stabilizer_order;
    let p_divides_v = v.is_multiple_of(gd.p as u128);
    let (refined_r_divisor_bound, refined_order_bound_holds) = if p_divides_v {
        let stab_p_prime = p_prime_part(gd.stabilizer_order, gd.p as u128);
        let refined_bound = 2 * df * stab_p_prime;
        let rhs = 2u128
            .checked_mul(df * df)
            .and_then(|x| x.checked_mul(stab_p_prime))
            .and_then(|x| x.checked_mul(stab_p_prime))
            .and_then(|x| x.checked_mul(gd.stabilizer_order))
            .ok_or(Error::Overflow)?;
        (Some(refined_bound), Some(socle < rhs))
    } else {
        (None, None)
    };
    Ok(PslBoundsReport {
        socle_order: socle,
        order_bound_holds,
        r_divisor_bound,
        p_divides_v,
        refined_r_divisor_bound,
        refined_order_bound_holds,
    })
}

/// The divisor bound 4 d f |X_alpha| / |H| for r, by exact division.
pub fn subgroup_div_bound(gd: &GroupData) -> Result<u128> {
    let h = gd
        .subgroup_order
        .ok_or_else(|| Error::InvalidArgument("no subgroup order |H| provided".into()))?;
    let numerator = 4 * gd.d as u128 * gd.f as u128 * gd.stabilizer_order;
    if !numerator.is_multiple_of(h) {
        return Err(Error::NonIntegralQuotient {
            numerator,
            denominator: h,
        });
    }
    Ok(numerator / h)
}

/// One solution family of the flag-transitive point-imprimitive parameter
/// derivation for lambda = 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImprimitiveFamily {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub ell: u64,
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub divisibility_ok: bool,
    pub note: &'static str,
}

/// Replays the lambda = 2 derivation: a block meets each nontrivial cell it
/// touches in ell points; counting forces z = 1, ell = 2, r = 2x-2, y = x,
/// v = x^2, k = x+2 and b = 2x^2(x-1)/(x+2), so (x+2) | 24 with x even and
/// x >= 4. Exactly x in {4, 6, 10, 22} survive.
pub fn imprimitive_families(lambda: u64) -> Result<Vec<ImprimitiveFamily>> {
    if lambda != 2 {
        return Err(Error::InvalidArgument(
            "the imprimitive derivation is specific to lambda = 2".into(),
        ));
    }
    let mut out = Vec::new();
    for x in 4..=22u64 {
        if x % 2 != 0 || 24 % (x + 2) != 0 {
            continue;
        }
        let (z, ell) = (1u64, 2u64);
        let r = 2 * x - 2;
        let y = x;
        let v = x * x;
        let k = x + 2;
        let b = 2 * x * x * (x - 1) / (x + 2);
        let divisibility_ok = (2 * x * x * (x - 1)) % (x + 2) == 0;
        // the counting identities the derivation rests on
        assert_eq!(2 * (x - 1), r * (ell - 1));
        assert_eq!(r * z, 2 * (y - 1));
        assert_eq!(2 * (k - ell - z), r * z * (ell - 1));
        assert_eq!(r * (k - 1), 2 * (v - 1));
        assert_eq!(b * k, v * r);
        let note = match x {
            4 => "realized by the 16-point biplane",
            6 => "eliminated externally: no 2-(36,8,2) design exists (Handbook of Combinatorial Designs II.1.35)",
            _ => "eliminated externally: classification of 2-transitive groups of degree 2p",
        };
        out.push(ImprimitiveFamily {
            x,
            y,
            z,
            ell,
            v,
            b,
            r,
            k,
            divisibility_ok,
            note,
        });
    }
    Ok(out)
}

/// The extension-field row for socle PSL(3,q): v = q^3 (q^2-1)(q-1)/3 and
/// R = gcd(6f (q^2+q+1), 2(v-1)), the divisor bound bracketing r.
pub fn table3_row(q: u64, f: u32) -> Result<(u128, u128)> {
    prime_of(q, f)?;
    let q = q as u128;
    let v = q * q * q * (q * q - 1) * (q - 1) / 3;
    let r_bound = gcd_u128(6 * f as u128 * (q * q + q + 1), 2 * (v - 1));
    Ok((v, r_bound))
}

/// The q values the extension-field inequality admits, with their f.
pub const TABLE3_Q: [(u64, u32); 9] = [
    (2, 1),
    (3, 1),
    (4, 2),
    (5, 1),
    (7, 1),
    (8, 3),
    (9, 2),
    (16, 4),
    (32, 5),
];

pub fn table3_rows() -> Vec<(u64, u128, u128)> {
    TABLE3_Q
        .iter()
        .map(|&(q, f)| {
            let (v, r) = table3_row(q, f).expect("prime powers");
            (q, v, r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triples(cands: &[SieveCandidate]) -> Vec<(u64, u64, u64)> {
        cands.iter().map(|c| (c.r, c.k, c.b)).collect()
    }

    #[test]
    fn admissible_rk_examples() {
        assert_eq!(
            triples(&admissible_rk(7, 2).unwrap()),
            vec![(6, 3, 14), (4, 4, 7)]
        );
        assert_eq!(
            triples(&admissible_rk(13, 2).unwrap()),
            vec![(12, 3, 52), (8, 4, 26)]
        );
        let sixteen = admissible_rk(16, 2).unwrap();
        assert!(triples(&sixteen).contains(&(6, 6, 16)));
    }

    #[test]
    fn admissible_rk_against_brute_force() {
        // Oracle: scan all (r, k) pairs directly.
        for v in 4..=200u64 {
            for lambda in 1..=3u64 {
                let mut expected = Vec::new();
                for r in 1..=lambda * (v - 1) {
                    for k in 3..v {
                        if r * (k - 1) != lambda * (v - 1) {
                            continue;
                        }
                        if (v * r) % k != 0 {
                            continue;
                        }
                        let b = v * r / k;
                        if b < v || r < k || r * r <= lambda * v {
                            continue;
                        }
                        expected.push((r, k, b));
                    }
                }
                expected.sort_by_key(|&(_, k, _)| k);
                assert_eq!(
                    triples(&admissible_rk(v, lambda).unwrap()),
                    expected,
                    "v={v} lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn stabilizer_filter_examples() {
        // v=13, lambda=2, point stabilizer of order 432: r=12 passes
        let mut cands = admissible_rk(13, 2).unwrap();
        filter_stabilizer(&mut cands, 13, 2, 432);
        let twelve = cands.iter().find(|c| c.r == 12).unwrap();
        assert!(twelve.passes());
        // stabilizer of order 39: r=12 does not divide gcd(24, 39) = 3
        let mut cands = admissible_rk(13, 2).unwrap();
        filter_stabilizer(&mut cands, 13, 2, 39);
        let twelve = cands.iter().find(|c| c.r == 12).unwrap();
        assert_eq!(twelve.eliminated_by, Some(FilterId::Stabilizer));
        // stab_order = lambda(v-1): nothing eliminated
        let mut cands = admissible_rk(13, 2).unwrap();
        filter_stabilizer(&mut cands, 13, 2, 24);
        assert!(cands.iter().all(|c| c.passes()));
    }

    #[test]
    fn subdegree_filter_kills_all_28_point_candidates() {
        let mut cands = admissible_rk(28, 2).unwrap();
        assert!(!cands.is_empty());
        filter_subdegrees(&mut cands, 2, &[12, 15]);
        assert!(cands.iter().all(|c| !c.passes()));
    }

    #[test]
    fn subdegree_filter_direct_cases() {
        let mut cands = vec![SieveCandidate {
            r: 12,
            k: 3,
            b: 52,
            eliminated_by: None,
        }];
        filter_subdegrees(&mut cands, 2, &[6]);
        assert!(cands[0].passes(), "12 divides 6 * gcd(12, 2)");
        // a 2-transitive subdegree v-1 never eliminates: r | lambda(v-1)
        for v in [13u64, 16, 21] {
            let mut cands = admissible_rk(v, 2).unwrap();
            filter_subdegrees(&mut cands, 2, &[v - 1]);
            assert!(cands.iter().all(|c| c.passes()), "v={v}");
        }
    }

    #[test]
    fn psl_bounds_examples() {
        // PSL(3,11) with a PSL(2,7)-type stabilizer of order 168: fails (i)
        let gd = GroupData::new(3, 11, 1, 168).unwrap();
        let report = psl_bounds(&gd).unwrap();
        assert!(!report.order_bound_holds);
        // PSL(4,2) with an A7 stabilizer of order 2520: survives (i)
        let gd = GroupData::new(4, 2, 1, 2520).unwrap();
        let report = psl_bounds(&gd).unwrap();
        assert!(report.order_bound_holds);
        assert_eq!(report.r_divisor_bound, 2 * 2520);
        // stabilizer equal to the whole socle: trivially holds
        let socle = classical_order(ClassicalKind::Psl, 3, 2).unwrap();
        let gd = GroupData::new(3, 2, 1, socle).unwrap();
        assert!(psl_bounds(&gd).unwrap().order_bound_holds);
    }

    #[test]
    fn psl_bounds_p_part_refinement() {
        // PSL(3,4), extension-field style stabilizer of order 21:
        // v = 20160/21 = 960 is even, so the p'-part bound applies.
        let gd = GroupData::new(3, 4, 2, 21).unwrap();
        let report = psl_bounds(&gd).unwrap();
        assert!(report.p_divides_v);
        assert_eq!(report.refined_r_divisor_bound, Some(2 * 3 * 2 * 21));
    }

    #[test]
    fn subgroup_div_bound_examples() {
        // 4 d f |X_alpha| / |H| with d = f = 1, |X_alpha| = 24, |H| = 4
        let gd = GroupData::new(3, 2, 1, 24).unwrap().with_subgroup_order(4);
        assert_eq!(subgroup_div_bound(&gd).unwrap(), 24);
        let gd = GroupData::new(3, 2, 1, 24).unwrap().with_subgroup_order(1);
        assert_eq!(subgroup_div_bound(&gd).unwrap(), 4 * 24);
        // subfield case q0=2, q=4, n=3: |X_alpha| = |PGL(3,2)| = 168 and
        // H = SL(1,2) trivial; the bound 4 d f |X_alpha| = 4032 agrees with
        // the closed form 4 f d0 q0^3 (q0^3-1)(q0^2-1).
        let gd = GroupData::new(3, 4, 2, 168).unwrap().with_subgroup_order(1);
        let bound = subgroup_div_bound(&gd).unwrap();
        assert_eq!(bound, 4032);
        assert_eq!(bound, 4 * 2 * 3 * 8 * 7 * 3);
    }

    #[test]
    fn imprimitive_families_are_the_four_known() {
        let fams = imprimitive_families(2).unwrap();
        let tuples: Vec<(u64, u64, u64, u64)> = fams.iter().map(|f| (f.v, f.b, f.r, f.k)).collect();
        assert_eq!(
            tuples,
            vec![
                (16, 16, 6, 6),
                (36, 45, 10, 8),
                (100, 150, 18, 12),
                (484, 847, 42, 24)
            ]
        );
        for f in &fams {
            assert_eq!(f.v, f.x * f.y);
            assert_eq!(2 * (f.x - 1), f.r * (f.ell - 1));
            assert!(f.divisibility_ok);
            assert_eq!(f.z, f.k - 1 - f.y * (f.ell - 1));
        }
        assert!(imprimitive_families(1).is_err());
    }

    #[test]
    fn table3_reproduces_all_nine_rows() {
        let expected: Vec<(u64, u128, u128)> = vec![
            (2, 8, 14),
            (3, 144, 26),
            (4, 960, 14),
            (5, 4000, 186),
            (7, 32928, 38),
            (8, 75264, 146),
            (9, 155520, 182),
            (16, 5222400, 182),
            (32, 346390528, 6342),
        ];
        assert_eq!(table3_rows(), expected);
    }

    #[test]
    fn table3_elimination_condition() {
        // R^2 < 2v exactly for q outside {2, 3, 5}
        for (q, v, r) in table3_rows() {
            let eliminated = r * r < 2 * v;
            assert_eq!(eliminated, ![2, 3, 5].contains(&q), "q={q}");
        }
    }

    #[test]
    fn table3_rejects_bad_prime_powers() {
        assert!(table3_row(12, 1).is_err());
        assert!(table3_row(8, 2).is_err());
    }
}
