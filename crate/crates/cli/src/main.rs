//! Command-line surface of the engine: analyze algebra specs, replay the
//! catalog, run bounded grid searches, and run the product / hypo /
//! half-flat checks.

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use so3ni::catalog;
use so3ni::error::Error;
use so3ni::liealg::{spec_from_json, spec_to_json, LieAlgebraSpec};
use so3ni::report::{analyze, analyze_product, AnalysisReport};
use so3ni::scalar::Scalar;
use so3ni::search::{search, SearchConfig, SearchFilter};
use so3ni::su3::{halfflat_check, hypo_check, Factor};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "so3ni", version, about = "exact analysis of invariant SO(3) structures on 5-dimensional Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an algebra spec file and print the full report
    Analyze {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// fail (exit nonzero) when the Jacobi identity does not hold
        #[arg(long)]
        require_jacobi: bool,
        /// accepted for interface parity; the 5-dimensional analysis has no
        /// deep mode
        #[arg(long)]
        deep: bool,
    },
    /// Catalog of the classified families
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Bounded grid search over structure constants
    Search {
        /// JSON: {"support": [slots...], "values": [...]} or a bare slot array
        #[arg(long)]
        support: PathBuf,
        /// comma-separated scalar values, e.g. "0,1,-1,0/1+1/2*r3"
        #[arg(long)]
        values: Option<String>,
        #[arg(long)]
        filter: Option<String>,
        /// abort when the grid exceeds this many points
        #[arg(long, default_value_t = 2_000_000)]
        cap: u128,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Analyze the 8-dimensional product of a base spec with R^3 or so(3)
    Su3 {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "so3")]
        factor: FactorArg,
        #[arg(long)]
        deep: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Check the hypo conditions for a 5-dimensional spec
    Hypo { spec: PathBuf },
    /// Check the half-flat conditions of the 6-dimensional extension
    Halfflat { spec: PathBuf },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum FactorArg {
    Abelian3,
    So3,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List all entries
    List,
    /// Write one entry as a standalone algebra-spec JSON to stdout
    Dump {
        id: String,
        /// comma-separated parameter values (defaults to the entry sample)
        #[arg(long)]
        params: Option<String>,
    },
    /// Replay the stated values of all (or matching) entries
    Verify {
        /// id or prefix pattern ("ST-*")
        pattern: Option<String>,
    },
}

fn parse_params(entry: &catalog::CatalogEntry, params: &Option<String>) -> Result<Vec<Scalar>, Error> {
    match params {
        None => Ok(entry.default_params()),
        Some(p) if p.trim().is_empty() => Ok(vec![]),
        Some(p) => p.split(',').map(|s| Scalar::from_str(s.trim())).collect(),
    }
}

fn load_spec(path: &PathBuf) -> Result<LieAlgebraSpec, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    spec_from_json(&value)
}

fn print_report(report: &AnalysisReport, format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
        }
        OutputFormat::Text => {
            println!("jacobi: {}", report.jacobi);
            println!("nearly integrable: {}", report.ni);
            if let Some(t) = &report.torsion {
                println!("torsion: {t}");
            }
            if let Some(ty) = report.torsion_type {
                println!("torsion type: {ty:?}");
            }
            if let Some(dt) = &report.d_t {
                println!("dT: {dt}");
            }
            if let Some(dst) = &report.d_star_t {
                println!("d*T: {dst}");
            }
            if let Some(g) = &report.gamma {
                for (i, f) in g.iter().enumerate() {
                    let parts: Vec<String> = f.iter().map(|c| c.to_string()).collect();
                    println!("gamma{}: [{}]", i + 1, parts.join(", "));
                }
            }
            if let Some(f) = &report.f {
                println!("F: {f} (model {:?})", report.model.as_ref().unwrap());
            }
            if let Some(kp) = &report.k_p {
                println!("k(p): {kp}");
            }
            if let Some(p) = report.parallel_torsion {
                println!("parallel torsion: {p}");
            }
            if let Some(v) = &report.parallel_vectors {
                println!("parallel vectors: {}", v.len());
            }
            if let Some(c) = report.so3_conditions {
                println!("split conditions: {c}");
            }
            println!(
                "symmetric pair (l,h): {}; (l,p): {}",
                report.symmetric_pair_h, report.symmetric_pair_p
            );
            if let Some(d) = &report.derived_series_dims {
                println!("derived series dims: {d:?}");
            }
            if let Some(su3) = &report.su3 {
                println!(
                    "product: ni8 = {}, factor = {:?}, psi closed = {}",
                    su3.ni8, su3.factor, su3.psi_closed
                );
            }
        }
    }
}

fn run() -> Result<bool, Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            spec,
            format,
            require_jacobi,
            deep: _,
        } => {
            let spec = load_spec(&spec)?;
            let report = analyze(&spec)?;
            if require_jacobi && !report.jacobi {
                let cert = spec.jacobi_certificate();
                eprintln!("Jacobi identity fails; certificate:");
                for (k, idx, c) in cert {
                    eprintln!("  d(de^{k}) has coefficient {c} on e^{idx:?}");
                }
                return Ok(false);
            }
            print_report(&report, format);
            Ok(true)
        }
        Command::Catalog { command } => match command {
            CatalogCommand::List => {
                for entry in catalog::entries() {
                    println!(
                        "{:10} params: [{}]  {}",
                        entry.id,
                        entry.param_names.join(", "),
                        entry.title
                    );
                }
                Ok(true)
            }
            CatalogCommand::Dump { id, params } => {
                let entry = catalog::find(&id)?;
                let params = parse_params(&entry, &params)?;
                let spec = entry.build_validated(&params)?;
                println!("{}", serde_json::to_string_pretty(&spec_to_json(&spec)).unwrap());
                Ok(true)
            }
            CatalogCommand::Verify { pattern } => {
                let matcher = |id: &str| match &pattern {
                    None => true,
                    Some(p) => {
                        if let Some(prefix) = p.strip_suffix('*') {
                            id.starts_with(prefix)
                        } else {
                            id == p
                        }
                    }
                };
                let selected: Vec<_> = catalog::entries().into_iter().filter(|e| matcher(e.id)).collect();
                if selected.is_empty() {
                    return Err(Error::UnknownEntry(pattern.unwrap_or_else(|| "*".into())));
                }
                let outcomes: Vec<_> = selected
                    .par_iter()
                    .map(|entry| catalog::verify(entry, &entry.default_params()))
                    .collect::<Result<_, _>>()?;
                let mut all_passed = true;
                for outcome in outcomes {
                    let status = if outcome.passed { "pass" } else { "FAIL" };
                    println!("{:10} {}", outcome.id, status);
                    for diff in &outcome.diffs {
                        println!(
                            "    {}: stated {} vs engine {}",
                            diff.field, diff.expected, diff.actual
                        );
                    }
                    all_passed &= outcome.passed;
                }
                Ok(all_passed)
            }
        },
        Command::Search {
            support,
            values,
            filter,
            cap,
            format,
        } => {
            let text = std::fs::read_to_string(&support)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", support.display())))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
            let (slots, file_values) = parse_support(&value)?;
            let values = match (values, file_values) {
                (Some(list), _) => list
                    .split(',')
                    .map(|s| Scalar::from_str(s.trim()))
                    .collect::<Result<Vec<_>, _>>()?,
                (None, Some(v)) => v,
                (None, None) => {
                    return Err(Error::Parse(
                        "no values: pass --values or put a values array in the support file".into(),
                    ))
                }
            };
            let filter = filter.map(|f| SearchFilter::from_str(&f)).transpose()?;
            let config = SearchConfig {
                support: slots,
                values,
                filter,
                cap,
            };
            let hits = search(&config)?;
            match format {
                OutputFormat::Json => {
                    let list: Vec<serde_json::Value> = hits
                        .iter()
                        .map(|h| {
                            serde_json::json!({
                                "b": h.b.0,
                                "report": serde_json::to_value(&h.report).unwrap(),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&list).unwrap());
                }
                OutputFormat::Text => {
                    for h in &hits {
                        let nonzero: Vec<String> = h
                            .b
                            .0
                            .iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(i, v)| format!("b{}={}", i + 1, v))
                            .collect();
                        println!("{}  type {:?}", nonzero.join(" "), h.report.torsion_type.unwrap());
                    }
                    println!("{} hit(s)", hits.len());
                }
            }
            Ok(true)
        }
        Command::Su3 {
            spec,
            factor,
            deep,
            format,
        } => {
            let spec = load_spec(&spec)?;
            let factor = match factor {
                FactorArg::Abelian3 => Factor::Abelian3,
                FactorArg::So3 => Factor::So3,
            };
            let report = analyze_product(&spec, factor, deep)?;
            print_report(&report, format);
            Ok(true)
        }
        Command::Hypo { spec } => {
            let spec = load_spec(&spec)?;
            println!("hypo: {}", hypo_check(&spec)?);
            Ok(true)
        }
        Command::Halfflat { spec } => {
            let spec = load_spec(&spec)?;
            println!("half-flat: {}", halfflat_check(&spec)?);
            Ok(true)
        }
    }
}

fn parse_support(value: &serde_json::Value) -> Result<(Vec<usize>, Option<Vec<Scalar>>), Error> {
    match value {
        serde_json::Value::Array(slots) => {
            let slots = slots
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::Parse(format!("bad slot {v}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok((slots, None))
        }
        serde_json::Value::Object(map) => {
            let slots = map
                .get("support")
                .and_then(|v| v.as_array())
                .ok_or_else(|| Error::Parse("support file needs a support array".into()))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::Parse(format!("bad slot {v}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let values = match map.get("values") {
                None => None,
                Some(serde_json::Value::Array(vs)) => Some(
                    vs.iter()
                        .map(|v| match v {
                            serde_json::Value::String(s) => Scalar::from_str(s),
                            other => so3ni::scalar::scalar_from_json(other),
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                Some(other) => return Err(Error::Parse(format!("bad values field {other}"))),
            };
            Ok((slots, values))
        }
        other => Err(Error::Parse(format!("bad support file {other}"))),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
