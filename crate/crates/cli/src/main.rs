mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use macdonald::ctengine::{ct_norm_check, ct_norm_closed, integral_check, integral_rep_p, scalar_prime};
use macdonald::fock::{skew_via_diffop, skew_via_fock};
use macdonald::kostka::{dual_schur_qt, dual_schur_t, kostka_matrix, m_function};
use macdonald::macdonald::{b_coeff, family, load_cache, p_of, q_of, save_cache, seed_family, skew_q};
use macdonald::partition::Partition;
use macdonald::symfunc::{Basis, SymFunc};

use report::{Check, Report, Status};
use suites::{run_suite, SuiteConfig, SUITES};

#[derive(Parser, Debug)]
#[command(name = "macd", version, about = "Exact Macdonald polynomials and identity checks")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Total (q,t)-order M for series computations.
    #[arg(long, default_value_t = 6, global = true)]
    order: u32,
    /// JSON Lines file memoizing P_λ; read if present, rewritten afterwards.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    /// P_λ(x;q,t)
    P,
    /// Q_λ(x;q,t)
    Q,
    /// M_λ = h_λ P_λ
    M,
    /// S_λ(x;t)
    St,
    /// S_λ(x;q,t)
    S,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand one member of a family in a chosen basis.
    Expand {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Family::P)]
        family: Family,
        #[arg(long, default_value = "m")]
        basis: Basis,
    },
    /// b_λ, <P_λ,P_λ> and the closed form of <P_λ,P_λ>'_n.
    Norm {
        #[arg(long)]
        lambda: Partition,
        /// Variable count; defaults to |λ|.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Q_{λ/μ} by three routes.
    Skew {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
    },
    /// The (q,t)-Kostka table of one degree.
    Kostka {
        #[arg(long)]
        degree: u32,
    },
    /// P_λ and P_λ'(t,q) by nested constant terms.
    Integral {
        #[arg(long)]
        lambda: Partition,
    },
    /// A named verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        maxweight: u32,
    },
}

fn family_member(lam: &Partition, fam: Family) -> Result<SymFunc, String> {
    let d = lam.weight();
    let pick = |v: Vec<(Partition, SymFunc)>| v.into_iter().find(|(l, _)| l == lam).map(|(_, f)| f).unwrap();
    Ok(match fam {
        Family::P => p_of(lam),
        Family::Q => q_of(lam),
        Family::M => m_function(lam),
        Family::St => pick(dual_schur_t(d).map_err(|e| e.to_string())?),
        Family::S => pick(dual_schur_qt(d).map_err(|e| e.to_string())?),
    })
}

/// Largest degree whose family this command builds.
fn degree_used(cmd: &Command) -> u32 {
    match cmd {
        Command::Expand { lambda, .. } | Command::Norm { lambda, .. } | Command::Integral { lambda } => lambda.weight(),
        Command::Skew { lambda, .. } => lambda.weight(),
        Command::Kostka { degree } => *degree,
        Command::Verify { maxweight, .. } => *maxweight,
    }
}

fn run(cli: &Cli) -> Result<Report, String> {
    let order = cli.order;
    let header = |extra: Value| -> Value {
        let mut h = json!({"order": order, "format": format!("{:?}", cli.format).to_lowercase()});
        if let Some(p) = &cli.cache {
            h["cache"] = json!(p.display().to_string());
        }
        if let Value::Object(m) = extra {
            for (k, v) in m {
                h[k] = v;
            }
        }
        h
    };
    let text = cli.format == Format::Text;
    let report = match &cli.command {
        Command::Expand { lambda, family, basis } => {
            let f = family_member(lambda, *family)?.convert(*basis);
            let result = if text { json!(f.to_string()) } else { f.to_json() };
            let h = header(json!({"lambda": lambda.to_string(), "family": format!("{family:?}"), "basis": basis}));
            Report::new("expand", h, vec![], Some(result))
        }
        Command::Norm { lambda, n } => {
            let n = n.unwrap_or(lambda.weight() as usize).max(lambda.len()).max(1);
            let b = b_coeff(lambda);
            let closed = ct_norm_closed(lambda, n);
            let p = p_of(lambda);
            let series = scalar_prime(&p, &p, n, order).map_err(|e| e.to_string())?;
            let mut params = json!({"lambda": lambda.to_string(), "n": n});
            let check = Check::run("ct-norm", params.clone(), Some(order), || {
                match ct_norm_check(lambda, n, order) {
                    Ok(true) => None,
                    Ok(false) => Some(format!("<P{lambda},P{lambda}>' n = {n}")),
                    Err(e) => Some(e.to_string()),
                }
            });
            let result = json!({
                "b": b.to_string(),
                "norm": b.inv().expect("b is nonzero").to_string(),
                "ct_norm_closed": closed.to_string(),
                "ct_norm_series": series.to_string(),
            });
            let result = if text {
                json!(format!(
                    "b = {}\n<P,P> = {}\n<P,P>'_{n} = {}\n<P,P>'_{n} = {}\n",
                    result["b"].as_str().unwrap(),
                    result["norm"].as_str().unwrap(),
                    result["ct_norm_closed"].as_str().unwrap(),
                    result["ct_norm_series"].as_str().unwrap()
                ))
            } else {
                result
            };
            params["order"] = json!(order);
            Report::new("norm", header(params), vec![check], Some(result))
        }
        Command::Skew { lambda, mu } => {
            let a = skew_q(lambda, mu);
            let b = skew_via_fock(lambda, mu);
            let c = skew_via_diffop(lambda, mu);
            let params = json!({"lambda": lambda.to_string(), "mu": mu.to_string()});
            let check = Check::run("skew-three-routes", params.clone(), None, || {
                (!(a.equals(&b) && a.equals(&c))).then(|| format!("Q{lambda}/{mu}"))
            });
            let result = if text {
                json!(format!("Q{lambda}/{mu} = {a}\n"))
            } else {
                json!({"structure": a.to_json(), "fock": b.to_json(), "diffop": c.to_json(), "agree": check.status == Status::Pass})
            };
            Report::new("skew", header(params), vec![check], Some(result))
        }
        Command::Kostka { degree } => {
            let params = json!({"degree": degree});
            let mut table = None;
            let check = Check::run("kostka-reconstruction", params.clone(), None, || {
                match kostka_matrix(*degree) {
                    Ok(t) => {
                        table = Some(t);
                        None
                    }
                    Err(e) => Some(e.to_string()),
                }
            });
            let result = table.map(|t| if text { json!(t.to_tsv()) } else { t.to_json() });
            Report::new("kostka", header(params), vec![check], result)
        }
        Command::Integral { lambda } => {
            let params = json!({"lambda": lambda.to_string()});
            let check = Check::run("integral-rep", params.clone(), Some(order), || {
                match integral_check(lambda, order) {
                    Ok((true, true)) => None,
                    Ok((a, b)) => Some(format!("P{lambda}: direct {a}, dual {b}")),
                    Err(e) => Some(e.to_string()),
                }
            });
            let series = integral_rep_p(lambda, order, lambda.weight()).map_err(|e| e.to_string())?;
            Report::new("integral", header(params), vec![check], Some(json!(series.to_string())))
        }
        Command::Verify { suite, maxweight } => {
            let cfg = SuiteConfig {
                max_weight: *maxweight,
                order,
            };
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut checks = Vec::new();
            for name in names {
                checks.extend(
                    run_suite(name, cfg).ok_or_else(|| format!("unknown suite {name:?}; one of {SUITES:?} or all"))?,
                );
            }
            Report::new(
                "verify",
                header(json!({"suite": suite, "maxweight": maxweight})),
                checks,
                None,
            )
        }
    };
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.cache {
        if path.exists() {
            match load_cache(path) {
                Ok(fams) => {
                    for (d, pairs) in fams {
                        seed_family(d, pairs);
                    }
                }
                Err(e) => {
                    eprintln!("macd: {e}");
                    return ExitCode::from(2);
                }
            }
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("macd: {e}");
            return ExitCode::from(2);
        }
    };
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
    }
    if let Some(path) = &cli.cache {
        let pairs: Vec<_> = (0..=degree_used(&cli.command))
            .flat_map(|d| family(d).to_vec())
            .collect();
        if let Err(e) = save_cache(path, &pairs) {
            eprintln!("macd: {e}");
        }
    }
    if let Some(c) = report.first_failure() {
        eprintln!(
            "first counterexample: {} {} {}",
            c.identity,
            c.parameters,
            c.counterexample.as_deref().unwrap_or("")
        );
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
