//! `finalg` — exact structure computations for small finite groups and rings.
//!
//! Subcommands build a group or ring from a textual expression and report
//! structure (unit group, Jacobson radical, center, isomorphism tests), or
//! run the named verification checks from the library.
//!
//! Exit codes: 0 success (or all checks pass); 1 a verification check failed
//! or an internal invariant broke; 2 usage or parse error; 3 the requested
//! object exceeds the configured size bounds.

mod parse;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use finalg::groups::{identify_with, is_isomorphic_with, FiniteGroup};
use finalg::rings::{build_ring_with, FiniteRing};
use finalg::verifier::{self, CheckOptions, CheckStatus};
use finalg::{Error, Limits};

#[derive(Parser)]
#[command(
    name = "finalg",
    version,
    about = "Exact computations with small finite groups and rings",
    after_help = "EXPRESSIONS:\n  \
        groups: C<n>, D<m>, Q8, S<n>, Hol(<n>), AGL1(<q>), GL2(<q>), SL2(<q>), UC(<q>)\n  \
        rings:  Z<n>, F<q>, M(<k>,<ring>), U(<k>,<ring>), TP(<ring>,<k>), GR(<t>,<group>), End(<d1>,...,<dr>)\n  \
        combine either kind with 'x' for direct/ring products; parentheses group."
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Override the element-count bound for structure commands (default
    /// 1000000), or the sweep range for verification checks that take one
    /// (hol-facts, theorem-neat, char0-obstruction).
    #[arg(long)]
    bound: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the unit group of a ring.
    Units {
        /// Ring expression, e.g. "M(2,F2)" or "Z4 x End(4,2)".
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the Jacobson radical of a ring.
    Radical {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the center of a ring.
    Center {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Describe a group: order, exponent, center, catalog name.
    GroupInfo {
        /// Group expression, e.g. "Hol(12)" or "D8 x D6".
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether two groups are isomorphic.
    Iso {
        left: String,
        right: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification checks (all of them by default).
    Verify {
        /// "all" or the name of a single check.
        #[arg(default_value = "all")]
        target: String,
        /// Run only the named checks (repeatable); overrides the target.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Cap the number of worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::NonPrime(_) | Error::BadParameter(_) => 2,
            Error::SizeExceeded { .. } => 3,
            // Everything else signals a broken invariant, not a usage slip.
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<parse::ParseError> for Failure {
    fn from(e: parse::ParseError) -> Failure {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn limits_for(common: &Common) -> Limits {
    match common.bound {
        Some(b) => Limits::with_max_elements(b),
        None => Limits::default(),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Cmd::Units { expr, common } => units(&expr, &common),
        Cmd::Radical { expr, common } => radical(&expr, &common),
        Cmd::Center { expr, common } => center(&expr, &common),
        Cmd::GroupInfo { expr, common } => group_info(&expr, &common),
        Cmd::Iso {
            left,
            right,
            common,
        } => iso(&left, &right, &common),
        Cmd::Verify {
            target,
            checks,
            jobs,
            common,
        } => verify(&target, &checks, jobs, &common),
    }
}

fn build_ring_arg(expr: &str, common: &Common) -> Result<FiniteRing, Failure> {
    let parsed = parse::parse_ring_expr(expr)?;
    Ok(build_ring_with(&parsed, &limits_for(common))?)
}

fn build_group_arg(expr: &str, common: &Common) -> Result<FiniteGroup, Failure> {
    let parsed = parse::parse_group_expr(expr)?;
    Ok(parsed.build(&limits_for(common))?)
}

/// "order 6, isomorphic to S3 = D6" or, unnamed, "order 48" plus invariants.
fn group_summary(g: &FiniteGroup, limits: &Limits) -> Result<String, Failure> {
    match identify_with(g, limits)? {
        Some(name) => Ok(format!("order {}, isomorphic to {}", g.order(), name)),
        None => Ok(format!(
            "order {} (no catalog name; abelian: {}, exponent: {}, center order: {})",
            g.order(),
            g.is_abelian(),
            g.exponent(),
            g.center().order()
        )),
    }
}

fn units(expr: &str, common: &Common) -> Result<(), Failure> {
    let limits = limits_for(common);
    let ring = build_ring_arg(expr, common)?;
    let result = ring.units()?;
    let name = identify_with(&result.group, &limits)?;
    let generators: Vec<String> = result
        .group
        .generators()
        .iter()
        .map(|&u| ring.describe(result.embed(u)))
        .collect();
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "ring": ring.label(),
                "ring_size": ring.size(),
                "characteristic": ring.characteristic(),
                "unit_group": {
                    "order": result.order(),
                    "name": name,
                    "generators": generators,
                },
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "ring {}: {} elements, characteristic {}",
            ring.label(),
            ring.size(),
            ring.characteristic()
        );
        println!("unit group: {}", group_summary(&result.group, &limits)?);
        println!("generators: {}", generators.join(", "));
    }
    Ok(())
}

/// At most this many ring elements are listed in text output.
const LIST_CAP: usize = 16;

fn element_list(ring: &FiniteRing, elems: &[usize]) -> String {
    let shown: Vec<String> = elems
        .iter()
        .take(LIST_CAP)
        .map(|&x| ring.describe(x))
        .collect();
    if elems.len() > LIST_CAP {
        format!("{}, … ({} more)", shown.join(", "), elems.len() - LIST_CAP)
    } else {
        shown.join(", ")
    }
}

fn radical(expr: &str, common: &Common) -> Result<(), Failure> {
    let ring = build_ring_arg(expr, common)?;
    let rad = ring.jacobson_radical()?;
    if common.json {
        let elems: Vec<String> = rad.iter().map(|&x| ring.describe(x)).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "ring": ring.label(),
                "ring_size": ring.size(),
                "radical_size": rad.len(),
                "elements": elems,
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "ring {}: {} elements, characteristic {}",
            ring.label(),
            ring.size(),
            ring.characteristic()
        );
        println!(
            "jacobson radical: {} element{}",
            rad.len(),
            if rad.len() == 1 { "" } else { "s" }
        );
        println!("elements: {}", element_list(&ring, &rad));
    }
    Ok(())
}

fn center(expr: &str, common: &Common) -> Result<(), Failure> {
    let ring = build_ring_arg(expr, common)?;
    let z = ring.center();
    if common.json {
        let elems: Vec<String> = z.iter().map(|&x| ring.describe(x)).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "ring": ring.label(),
                "ring_size": ring.size(),
                "commutative": ring.is_commutative(),
                "center_size": z.len(),
                "elements": elems,
            }))
            .expect("serializable")
        );
    } else {
        println!(
            "ring {}: {} elements, characteristic {}",
            ring.label(),
            ring.size(),
            ring.characteristic()
        );
        if ring.is_commutative() {
            println!("center: the whole ring ({} elements, commutative)", z.len());
        } else {
            println!("center: {} elements", z.len());
            println!("elements: {}", element_list(&ring, &z));
        }
    }
    Ok(())
}

fn group_info(expr: &str, common: &Common) -> Result<(), Failure> {
    let limits = limits_for(common);
    let g = build_group_arg(expr, common)?;
    let name = identify_with(&g, &limits)?;
    let spectrum: Vec<(u64, usize)> = g.order_spectrum().into_iter().collect();
    if common.json {
        let spec_json: Vec<serde_json::Value> = spectrum
            .iter()
            .map(|(o, c)| json!({"order": o, "count": c}))
            .collect();
        let generators: Vec<String> = g.generators().iter().map(|&x| g.describe(x)).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": g.label(),
                "order": g.order(),
                "name": name,
                "abelian": g.is_abelian(),
                "exponent": g.exponent(),
                "center_order": g.center().order(),
                "order_spectrum": spec_json,
                "generators": generators,
            }))
            .expect("serializable")
        );
    } else {
        println!("group {}: {}", g.label(), group_summary(&g, &limits)?);
        println!(
            "abelian: {}, exponent: {}, center order: {}",
            g.is_abelian(),
            g.exponent(),
            g.center().order()
        );
        let spec: Vec<String> = spectrum
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect();
        println!("element orders (order:count): {}", spec.join(", "));
        let gens: Vec<String> = g.generators().iter().map(|&x| g.describe(x)).collect();
        println!("generators: {}", gens.join(", "));
    }
    Ok(())
}

fn iso(left: &str, right: &str, common: &Common) -> Result<(), Failure> {
    let limits = limits_for(common);
    let g = build_group_arg(left, common)?;
    let h = build_group_arg(right, common)?;
    let result = is_isomorphic_with(&g, &h, &limits)?;
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "left": g.label(),
                "right": h.label(),
                "isomorphic": result.isomorphic,
                "obstruction": result.obstruction,
                "witness": result.witness,
            }))
            .expect("serializable")
        );
    } else if result.isomorphic {
        println!(
            "{} ≅ {} (isomorphism verified on all {} products)",
            g.label(),
            h.label(),
            g.order() * g.order()
        );
    } else {
        println!(
            "{} ≇ {}: {}",
            g.label(),
            h.label(),
            result
                .obstruction
                .unwrap_or_else(|| "no multiplicative bijection exists".into())
        );
    }
    Ok(())
}

fn verify(
    target: &str,
    checks: &[String],
    jobs: Option<usize>,
    common: &Common,
) -> Result<(), Failure> {
    let opts = CheckOptions {
        limits: Limits::default(),
        bound: common.bound,
    };
    let selected: Vec<&str> = if !checks.is_empty() {
        checks.iter().map(String::as_str).collect()
    } else if target == "all" {
        verifier::all_check_names()
    } else {
        vec![target]
    };
    let summary = verifier::run_selected(&selected, &opts, jobs)?;
    if common.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&summary).expect("serializable")
        );
    } else {
        for report in &summary.reports {
            println!(
                "{:<4} {:<26} {:>4}/{:<4} cases {:>6} ms",
                report.status.to_string().to_uppercase(),
                report.check_name,
                report.cases_examined,
                report.cases_total,
                report.wall_time_ms
            );
            if report.status == CheckStatus::Fail {
                for w in report.witnesses.iter().filter(|w| w.starts_with("FAIL")) {
                    println!("     {w}");
                }
            }
        }
        println!(
            "overall: {} ({} checks)",
            summary.status,
            summary.reports.len()
        );
    }
    if summary.status == CheckStatus::Fail {
        return Err(Failure {
            code: 1,
            message: "verification found failing cases (see report above)".into(),
        });
    }
    Ok(())
}
