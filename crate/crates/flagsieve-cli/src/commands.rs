use crate::output::*;
use crate::{ConstructCmd, SieveCmd, VerifyCmd};
use flagsieve::construct::{
    biplane16, derived_design, fano_complement, pg_point_line_design_with_budget, LinearSpace,
};
use flagsieve::design::{
    is_flag_transitive, parse_design_file, verify_2design, write_design_file, IncidenceStructure,
};
use flagsieve::finitegeom::{psl_action_with_budget, ActionObject, FieldSpec};
use flagsieve::permgroup::{parse_group_file, write_group_file, PermGroup, DEFAULT_ORBIT_BUDGET};
use flagsieve::sieve;
use std::fmt;
use std::fs;

pub struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<flagsieve::Error> for CliError {
    fn from(e: flagsieve::Error) -> Self {
        CliError(e.to_string())
    }
}

type CmdResult = Result<bool, CliError>;

/// Orbit/enumeration budget, overridable through FLAGSIEVE_ORBIT_BUDGET.
fn orbit_budget() -> usize {
    std::env::var("FLAGSIEVE_ORBIT_BUDGET")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_ORBIT_BUDGET)
}

fn read_file(path: &str) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError(format!("{path}: {e}")))
}

fn read_design(path: &str) -> Result<IncidenceStructure, CliError> {
    parse_design_file(&read_file(path)?).map_err(|e| CliError(format!("{path}: {e}")))
}

fn read_group(path: &str) -> Result<PermGroup, CliError> {
    parse_group_file(&read_file(path)?).map_err(|e| CliError(format!("{path}: {e}")))
}

fn write_file(path: &str, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError(format!("{path}: {e}")))
}

fn emit_files(
    name: &str,
    structure: &IncidenceStructure,
    group: Option<&PermGroup>,
    design_out: Option<String>,
    group_out: Option<String>,
    json: bool,
) -> CmdResult {
    let design_path = design_out.unwrap_or_else(|| format!("{name}.design"));
    write_file(&design_path, &write_design_file(structure))?;
    let mut written = vec![design_path];
    if let Some(g) = group {
        let group_path = group_out.unwrap_or_else(|| format!("{name}.group"));
        write_file(&group_path, &write_group_file(g))?;
        written.push(group_path);
    }
    let params = verify_2design(structure).map_err(|e| CliError(e.to_string()))?;
    let out = DesignParamsOut::from(params);
    if json {
        #[derive(serde::Serialize)]
        struct ConstructOut {
            construction: String,
            files: Vec<String>,
            params: DesignParamsOut,
        }
        print_json(&ConstructOut {
            construction: name.to_string(),
            files: written,
            params: out,
        });
    } else {
        println!("{name}: wrote {}", written.join(", "));
        println!("{}", out.text());
    }
    Ok(true)
}

pub fn construct(cmd: ConstructCmd, json: bool) -> CmdResult {
    match cmd {
        ConstructCmd::PgDesign {
            n,
            q,
            design_out,
            group_out,
        } => {
            if n < 3 {
                return Err(CliError("need n >= 3".into()));
            }
            let field = FieldSpec::from_order(q)?;
            let space = pg_point_line_design_with_budget(n - 1, &field, orbit_budget())?;
            let action = psl_action_with_budget(n, &field, ActionObject::Points, orbit_budget())?;
            emit_files(
                &format!("pg-design-{}-{}", n, q),
                space.structure(),
                Some(&action.group),
                design_out,
                group_out,
                json,
            )
        }
        ConstructCmd::Derived { file, design_out } => {
            let structure = read_design(&file)?;
            let space = LinearSpace::new(structure)?;
            let derived = derived_design(&space)?;
            emit_files("derived", &derived, None, design_out, None, json)
        }
        ConstructCmd::FanoComplement {
            design_out,
            group_out,
        } => {
            let (structure, group) = fano_complement();
            emit_files(
                "fano-complement",
                &structure,
                Some(&group),
                design_out,
                group_out,
                json,
            )
        }
        ConstructCmd::Biplane16 {
            design_out,
            group_out,
        } => {
            let (structure, group) = biplane16();
            emit_files(
                "biplane16",
                &structure,
                Some(&group),
                design_out,
                group_out,
                json,
            )
        }
    }
}

pub fn verify(cmd: VerifyCmd, json: bool) -> CmdResult {
    match cmd {
        VerifyCmd::Design { file } => {
            let structure = read_design(&file)?;
            match verify_2design(&structure) {
                Ok(params) => {
                    let out = DesignParamsOut::from(params);
                    if json {
                        print_json(&out);
                    } else {
                        println!("{}", out.text());
                    }
                    Ok(true)
                }
                Err(failure) => {
                    let out = VerifyFailureOut {
                        verified: false,
                        reason: failure.to_string(),
                    };
                    if json {
                        print_json(&out);
                    } else {
                        println!("not a 2-design: {}", out.reason);
                    }
                    Ok(false)
                }
            }
        }
        VerifyCmd::FlagTransitive { design, group } => {
            let structure = read_design(&design)?;
            let g = read_group(&group)?;
            let ft = is_flag_transitive(&g, &structure)?;
            let out = FlagTransitiveOut {
                flag_transitive: ft,
                flags: flagsieve::design::flags(&structure).len() as u64,
            };
            if json {
                print_json(&out);
            } else {
                println!(
                    "flag-transitive: {} ({} flags)",
                    out.flag_transitive, out.flags
                );
            }
            Ok(ft)
        }
        VerifyCmd::Primitive { group } => {
            let g = read_group(&group)?;
            let primitivity = g.is_primitive()?;
            let out = PrimitivityOut {
                primitive: primitivity.is_primitive(),
                block_system: primitivity.witness().map(|w| w.parts().to_vec()),
            };
            if json {
                print_json(&out);
            } else if out.primitive {
                println!("primitive");
            } else {
                println!(
                    "imprimitive; block system {:?}",
                    out.block_system.as_ref().unwrap()
                );
            }
            Ok(out.primitive)
        }
    }
}

pub fn sieve(cmd: SieveCmd, json: bool) -> CmdResult {
    match cmd {
        SieveCmd::Rk { v, lambda } => {
            let candidates = sieve::admissible_rk(v, lambda)?;
            let out: Vec<CandidateOut> = candidates.iter().map(CandidateOut::from).collect();
            if json {
                print_json(&out);
            } else {
                for c in &out {
                    println!("r={} k={} b={} {}", c.r, c.k, c.b, c.status);
                }
            }
            Ok(true)
        }
        SieveCmd::Table3 => {
            let rows: Vec<Table3RowOut> = sieve::table3_rows()
                .into_iter()
                .map(|(q, v, r_bound)| Table3RowOut { q, v, r_bound })
                .collect();
            if json {
                print_json(&rows);
            } else {
                println!("q v R");
                for row in &rows {
                    println!("{} {} {}", row.q, row.v, row.r_bound);
                }
            }
            Ok(true)
        }
        SieveCmd::Imprimitive => {
            let families = sieve::imprimitive_families(2)?;
            let out: Vec<ImprimitiveFamilyOut> =
                families.iter().map(ImprimitiveFamilyOut::from).collect();
            if json {
                print_json(&out);
            } else {
                for f in &out {
                    println!(
                        "x={} (v,b,r,k)=({},{},{},{}) {}",
                        f.x, f.v, f.b, f.r, f.k, f.note
                    );
                }
            }
            Ok(true)
        }
        SieveCmd::Bounds { n, q, stab } => {
            let (_, f) = flagsieve::finitegeom::field::factor_prime_power(q)
                .ok_or_else(|| CliError(format!("{q} is not a prime power")))?;
            let gd = sieve::GroupData::new(n, q, f, stab)?;
            let report = sieve::psl_bounds(&gd)?;
            let out = BoundsOut::new(n, q, stab, report);
            if json {
                print_json(&out);
            } else {
                println!(
                    "|X| = {}, order bound holds: {}, r | {}{}",
                    out.socle_order,
                    out.order_bound_holds,
                    out.r_divisor_bound,
                    match out.refined_r_divisor_bound {
                        Some(b) => format!(", refined r | {b}"),
                        None => String::new(),
                    }
                );
            }
            Ok(true)
        }
    }
}

pub fn replicate(claim: &str, jobs: usize, json: bool) -> CmdResult {
    let reports = if claim == "all" {
        flagsieve::replicate::replicate_all(jobs)?
    } else {
        vec![flagsieve::replicate::replicate_claim(claim, jobs)?]
    };
    let mut all_matched = true;
    for report in &reports {
        all_matched &= report.matched;
        let out = ReplicationOut::from(report);
        if json {
            print_json(&out);
        } else {
            println!(
                "{}: {} (expected {}, computed {}, {} ms)",
                out.claim,
                if out.matched { "match" } else { "MISMATCH" },
                out.expected,
                out.computed,
                out.wall_ms
            );
        }
    }
    if claim == "all" && !json {
        for (id, reason) in flagsieve::replicate::unreplicated_claims() {
            println!("{id}: not replicated ({reason})");
        }
    }
    Ok(all_matched)
}
