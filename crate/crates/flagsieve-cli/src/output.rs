//! Serialization types. Field order is fixed so identical invocations
//! produce byte-identical output; all values are integers, booleans or
//! strings.

use flagsieve::design::DesignParams;
use flagsieve::replicate::ReplicationReport;
use flagsieve::sieve::{ImprimitiveFamily, PslBoundsReport, SieveCandidate};
use serde::Serialize;

#[derive(Serialize)]
pub struct DesignParamsOut {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
    pub symmetric: bool,
    pub nontrivial: bool,
}

impl From<DesignParams> for DesignParamsOut {
    fn from(p: DesignParams) -> Self {
        DesignParamsOut {
            v: p.v,
            b: p.b,
            r: p.r,
            k: p.k,
            lambda: p.lambda,
            symmetric: p.symmetric,
            nontrivial: p.nontrivial,
        }
    }
}

impl DesignParamsOut {
    pub fn text(&self) -> String {
        format!(
            "2-({}, {}, {}) design: b = {}, r = {}, symmetric = {}, nontrivial = {}",
            self.v, self.k, self.lambda, self.b, self.r, self.symmetric, self.nontrivial
        )
    }
}

#[derive(Serialize)]
pub struct VerifyFailureOut {
    pub verified: bool,
    pub reason: String,
}

#[derive(Serialize)]
pub struct FlagTransitiveOut {
    pub flag_transitive: bool,
    pub flags: u64,
}

#[derive(Serialize)]
pub struct PrimitivityOut {
    pub primitive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub block_system: Option<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
pub struct CandidateOut {
    pub r: u64,
    pub k: u64,
    pub b: u64,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eliminated_by: Option<String>,
}

impl From<&SieveCandidate> for CandidateOut {
    fn from(c: &SieveCandidate) -> Self {
        CandidateOut {
            r: c.r,
            k: c.k,
            b: c.b,
            status: if c.passes() { "pass" } else { "fail" },
            eliminated_by: c.eliminated_by.map(|f| f.to_string()),
        }
    }
}

#[derive(Serialize)]
pub struct Table3RowOut {
    pub q: u64,
    pub v: u128,
    pub r_bound: u128,
}

#[derive(Serialize)]
pub struct ImprimitiveFamilyOut {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub ell: u64,
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub divisibility_ok: bool,
    pub note: String,
}

impl From<&ImprimitiveFamily> for ImprimitiveFamilyOut {
    fn from(f: &ImprimitiveFamily) -> Self {
        ImprimitiveFamilyOut {
            x: f.x,
            y: f.y,
            z: f.z,
            ell: f.ell,
            v: f.v,
            b: f.b,
            r: f.r,
            k: f.k,
            divisibility_ok: f.divisibility_ok,
            note: f.note.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct BoundsOut {
    pub n: u32,
    pub q: u64,
    pub stabilizer_order: u128,
    pub socle_order: u128,
    pub order_bound_holds: bool,
    pub r_divisor_bound: u128,
    pub p_divides_v: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_r_divisor_bound: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refined_order_bound_holds: Option<bool>,
}

impl BoundsOut {
    pub fn new(n: u32, q: u64, stab: u128, report: PslBoundsReport) -> Self {
        BoundsOut {
            n,
            q,
            stabilizer_order: stab,
            socle_order: report.socle_order,
            order_bound_holds: report.order_bound_holds,
            r_divisor_bound: report.r_divisor_bound,
            p_divides_v: report.p_divides_v,
            refined_r_divisor_bound: report.refined_r_divisor_bound,
            refined_order_bound_holds: report.refined_order_bound_holds,
        }
    }
}

#[derive(Serialize)]
pub struct ReplicationOut {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub matched: bool,
    pub wall_ms: u128,
}

impl From<&ReplicationReport> for ReplicationOut {
    fn from(r: &ReplicationReport) -> Self {
        ReplicationOut {
            claim: r.claim.to_string(),
            expected: r.expected.clone(),
            computed: r.computed.clone(),
            matched: r.matched,
            wall_ms: r.wall_ms,
        }
    }
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}
