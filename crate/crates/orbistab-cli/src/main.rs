//! Command-line front end: character tables, correction coefficients, root
//! data, parameter gates with kernel certificates, wall scans, and a
//! one-shot verification checklist.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 negative mathematical
//! verdict (gate or checklist failure), 3 internal consistency assertion.

mod render;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;

use orbistab::groups::KleinianGroup;
use orbistab::rootdata::{enumerate_roots, toeplitz_lemma_check, RootSystem};
use orbistab::stability::{
    kernel_negdef_certificate, params_gate, profile_from_json, CentralChargeValue,
    StabilityParams,
};
use orbistab::trr::{self, TCoefficients};
use orbistab::walls::{
    chamber_membership, is_regular, restrict, scan_slice, scan_to_csv, sigma_zero_charge,
    PointClass, SliceSpec,
};
use orbistab::{rat_from_str, rat_to_string, Error, Rat, Result};

#[derive(Parser)]
#[command(
    name = "orbistab",
    version,
    about = "Exact lattice-level data for stability conditions on Kleinian (ADE) orbisurfaces",
    after_help = "Group specs: A:N (cyclic of order N), D:n (binary dihedral of order 4n), E6, E7, E8.\n\
                  Rationals are written num/den, e.g. 1/2 or -3.\n\
                  ORBISTAB_FORMAT sets the default output format."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn default_format() -> Format {
    match std::env::var("ORBISTAB_FORMAT").as_deref() {
        Ok("json") => Format::Json,
        _ => Format::Text,
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group with its validation report
    Table {
        /// Group spec: A:N, D:n, E6, E7, E8
        spec: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Print the exact correction coefficients T_i
    Trr {
        spec: String,
        /// Also evaluate the printed closed forms against the direct sum
        #[arg(long)]
        closed_form_report: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Root-system data, root counts, and definiteness certificates
    Roots {
        spec: String,
        /// List every root
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Evaluate the parameter gate and the kernel definiteness certificate
    #[command(name = "check-params")]
    CheckParams {
        spec: String,
        /// Path to the surface-profile JSON file
        #[arg(long)]
        profile: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        re_w: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        im_w: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Scan a slice of charge space and emit wall-indicator CSV
    Walls {
        spec: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        re_w: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        im_w: String,
        /// Deform the base charge upward by this amount (sigma_0-style)
        #[arg(long)]
        deform: Option<String>,
        /// Slice direction 1: `im`, `re`, `rho0:im`, `rho0:re`, or an
        /// explicit list re:im,re:im,... (rho0 first, then each alpha)
        #[arg(long, default_value = "im")]
        dir1: String,
        #[arg(long, default_value = "re")]
        dir2: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        x_start: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/4")]
        x_step: String,
        #[arg(long, default_value = "9")]
        x_count: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "-1")]
        y_start: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1/4")]
        y_step: String,
        #[arg(long, default_value = "9")]
        y_count: usize,
        /// Append exact num/den coordinate columns
        #[arg(long)]
        exact: bool,
        /// Decimal digits for the coordinate columns
        #[arg(long, default_value = "6")]
        decimals: usize,
        /// Write the CSV here instead of standard output
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Run the built-in reference checklist
    Verify {
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Inconsistency(_) | Error::TableValidation(_) | Error::DegenerateCharge(_) => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

struct GroupData {
    g: KleinianGroup,
    tc: TCoefficients,
    rs: RootSystem,
}

fn load(spec: &str) -> Result<GroupData> {
    let g = KleinianGroup::from_spec(spec)?;
    let tc = trr::t_coefficients(&g)?;
    let rs = RootSystem::for_group(&g)?;
    Ok(GroupData { g, tc, rs })
}

fn parse_params(gamma: &str, re_w: &str, im_w: &str) -> Result<StabilityParams> {
    Ok(StabilityParams::new(
        rat_from_str(re_w)?,
        rat_from_str(im_w)?,
        rat_from_str(gamma)?,
    ))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Table { spec, format } => {
            let data = load(&spec)?;
            let fmt = format.unwrap_or_else(default_format);
            match fmt {
                Format::Text => print!("{}", render::table_text(&data.g, &data.rs)?),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&render::table_json(&data.g, &data.rs)?).unwrap()
                ),
            }
            Ok(0)
        }
        Command::Trr { spec, closed_form_report, format } => {
            let data = load(&spec)?;
            let report = if closed_form_report {
                Some(trr::closed_form_report(&data.g, &data.tc)?)
            } else {
                None
            };
            match format.unwrap_or_else(default_format) {
                Format::Text => {
                    let line: Vec<String> = data.tc.values.iter().map(rat_to_string).collect();
                    println!("{}", line.join(" "));
                    if let Some(rows) = &report {
                        for r in rows {
                            println!(
                                "{}: direct {} vs closed form {} -> {}",
                                r.label,
                                rat_to_string(&r.direct),
                                rat_to_string(&r.closed_form),
                                if r.matches { "match" } else { "MISMATCH" }
                            );
                        }
                    }
                }
                Format::Json => {
                    let mut v = trr::t_coefficients_json(&data.tc);
                    if let Some(rows) = &report {
                        v["closed_form_report"] = rows
                            .iter()
                            .map(|r| {
                                serde_json::json!({
                                    "label": r.label,
                                    "direct": rat_to_string(&r.direct),
                                    "closed_form": rat_to_string(&r.closed_form),
                                    "matches": r.matches,
                                })
                            })
                            .collect();
                    }
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(0)
        }
        Command::Roots { spec, list, format } => {
            let data = load(&spec)?;
            let roots = enumerate_roots(&data.rs);
            let report = toeplitz_lemma_check(&data.rs, data.g.order)?;
            match format.unwrap_or_else(default_format) {
                Format::Text => {
                    println!(
                        "{}: rank {}, Coxeter number {}, {} roots",
                        data.rs.label,
                        data.rs.rank,
                        data.rs.coxeter,
                        roots.len()
                    );
                    println!(
                        "highest root {:?} (= nontrivial irrep dimensions)",
                        data.rs.highest_root
                    );
                    println!(
                        "H + rr^T/N^2 negative definite: {} (minors of the negated form: {})",
                        report.certificate.negative_definite,
                        report
                            .certificate
                            .minors
                            .iter()
                            .map(rat_to_string)
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    println!(
                        "floating bound -2 + 2cos(pi/h) + (h-1)/N^2 = {:.9} ({})",
                        report.weyl_bound,
                        if report.weyl_bound_negative { "negative" } else { "not negative" }
                    );
                    if list {
                        for r in &roots {
                            println!("{:?}", r.coords);
                        }
                    }
                }
                Format::Json => {
                    let mut v = serde_json::json!({
                        "label": data.rs.label,
                        "rank": data.rs.rank,
                        "cartan": data.rs.cartan,
                        "highest_root": data.rs.highest_root,
                        "coxeter": data.rs.coxeter,
                        "root_count": roots.len(),
                        "rank_one_correction_negative_definite":
                            report.certificate.negative_definite,
                        "sylvester_minors": report
                            .certificate
                            .minors
                            .iter()
                            .map(rat_to_string)
                            .collect::<Vec<_>>(),
                        "weyl_bound": report.weyl_bound,
                        "weyl_bound_negative": report.weyl_bound_negative,
                    });
                    if list {
                        v["roots"] = roots.iter().map(|r| serde_json::json!(r.coords)).collect();
                    }
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(0)
        }
        Command::CheckParams { spec, profile, gamma, re_w, im_w, format } => {
            let data = load(&spec)?;
            let text = std::fs::read_to_string(&profile)
                .map_err(|e| Error::Parse(format!("cannot read {profile}: {e}")))?;
            let profile = profile_from_json(&text)?;
            let params = parse_params(&gamma, &re_w, &im_w)?;
            let gate = params_gate(&params, &data.g, &data.tc, &profile)?;
            let cert = kernel_negdef_certificate(&params, &profile, &data.g, &data.tc, &data.rs)?;
            let ok = gate.theorem_valid && cert.negative_definite;
            match format.unwrap_or_else(default_format) {
                Format::Text => {
                    println!(
                        "theorem gate: {}",
                        if gate.theorem_valid { "valid" } else { "invalid" }
                    );
                    println!(
                        "pre-stability gate: {}",
                        if gate.prestab_valid { "valid" } else { "invalid" }
                    );
                    for r in &gate.reasons {
                        println!("  reason: {r}");
                    }
                    println!(
                        "kernel rank {}, discriminant form negative definite: {}",
                        cert.kernel_rank, cert.negative_definite
                    );
                    println!(
                        "pivots: {}",
                        cert.pivots.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
                    );
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "theorem_valid": gate.theorem_valid,
                        "prestab_valid": gate.prestab_valid,
                        "reasons": gate.reasons,
                        "kernel_rank": cert.kernel_rank,
                        "kernel_negative_definite": cert.negative_definite,
                        "pivots": cert.pivots.iter().map(rat_to_string).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(if ok { 0 } else { 2 })
        }
        Command::Walls {
            spec,
            gamma,
            re_w,
            im_w,
            deform,
            dir1,
            dir2,
            x_start,
            x_step,
            x_count,
            y_start,
            y_step,
            y_count,
            exact,
            decimals,
            output,
        } => {
            let data = load(&spec)?;
            let params = parse_params(&gamma, &re_w, &im_w)?;
            let base = match deform {
                Some(eps) => sigma_zero_charge(&params, &data.g, &rat_from_str(&eps)?)?,
                None => restrict(&params, &data.g)?,
            };
            let m = base.rank();
            let slice = SliceSpec {
                dir1: parse_direction(&dir1, m)?,
                dir2: parse_direction(&dir2, m)?,
                x_start: rat_from_str(&x_start)?,
                x_step: rat_from_str(&x_step)?,
                x_count,
                y_start: rat_from_str(&y_start)?,
                y_step: rat_from_str(&y_step)?,
                y_count,
            };
            let cluster = PointClass::cluster(&data.g);
            let rows = scan_slice(&base, &slice, &cluster, &data.rs)?;
            let csv = scan_to_csv(&rows, m, decimals, exact);
            match output {
                Some(path) => {
                    let mut f = std::fs::File::create(&path)
                        .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
                    f.write_all(csv.as_bytes())
                        .map_err(|e| Error::Parse(format!("cannot write {path}: {e}")))?;
                }
                None => print!("{csv}"),
            }
            // informational summary on stderr so the CSV stays clean
            let membership = chamber_membership(&base);
            eprintln!(
                "base charge: regular = {}, in U = {}, boundary components = {:?}",
                is_regular(&base, &data.rs),
                membership.in_u,
                membership.boundary_components
            );
            Ok(0)
        }
        Command::Verify { format } => {
            let checks = verify::run_all()?;
            let failed = checks.iter().any(|c| matches!(c.status, verify::Status::Fail));
            match format.unwrap_or_else(default_format) {
                Format::Text => {
                    for c in &checks {
                        let tag = match c.status {
                            verify::Status::Pass => "PASS",
                            verify::Status::Fail => "FAIL",
                            verify::Status::DocumentedMismatch => "DOCUMENTED MISMATCH",
                        };
                        println!("{:<20} {}", tag, c.label);
                        if !c.detail.is_empty() {
                            println!("{:<20}   {}", "", c.detail);
                        }
                    }
                    let passed = checks
                        .iter()
                        .filter(|c| matches!(c.status, verify::Status::Pass))
                        .count();
                    let documented = checks
                        .iter()
                        .filter(|c| matches!(c.status, verify::Status::DocumentedMismatch))
                        .count();
                    println!(
                        "{} checks: {} passed, {} documented mismatches, {} failed",
                        checks.len(),
                        passed,
                        documented,
                        checks.len() - passed - documented
                    );
                }
                Format::Json => {
                    let v: Vec<serde_json::Value> = checks
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "label": c.label,
                                "status": match c.status {
                                    verify::Status::Pass => "pass",
                                    verify::Status::Fail => "fail",
                                    verify::Status::DocumentedMismatch => "documented_mismatch",
                                },
                                "detail": c.detail,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).unwrap());
                }
            }
            Ok(if failed { 2 } else { 0 })
        }
    }
}

/// Direction specs: `im` and `re` act on every alpha, `rho0:im` and
/// `rho0:re` on the plain-skyscraper value, and an explicit
/// `re:im,re:im,...` list (rho0 first) sets everything.
fn parse_direction(spec: &str, m: usize) -> Result<Vec<CentralChargeValue>> {
    let zero = CentralChargeValue::zero;
    match spec {
        "im" => Ok(std::iter::once(zero())
            .chain((0..m).map(|_| CentralChargeValue::new(Rat::zero(), orbistab::rat_int(1))))
            .collect()),
        "re" => Ok(std::iter::once(zero())
            .chain((0..m).map(|_| CentralChargeValue::new(orbistab::rat_int(1), Rat::zero())))
            .collect()),
        "rho0:im" => Ok(std::iter::once(CentralChargeValue::new(Rat::zero(), orbistab::rat_int(1)))
            .chain((0..m).map(|_| zero()))
            .collect()),
        "rho0:re" => Ok(std::iter::once(CentralChargeValue::new(orbistab::rat_int(1), Rat::zero()))
            .chain((0..m).map(|_| zero()))
            .collect()),
        list => {
            let parts: Vec<&str> = list.split(',').collect();
            if parts.len() != m + 1 {
                return Err(Error::Parse(format!(
                    "direction needs {} entries (rho0 plus {} alphas), got {}",
                    m + 1,
                    m,
                    parts.len()
                )));
            }
            parts
                .iter()
                .map(|p| {
                    let (re, im) = p
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("expected re:im, got `{p}`")))?;
                    Ok(CentralChargeValue::new(rat_from_str(re)?, rat_from_str(im)?))
                })
                .collect()
        }
    }
}
