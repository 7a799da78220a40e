//! `predim`: set systems, their pregeometries, presentations and gammoids
//! from the command line.
//!
//! Exit status: 0 when the command succeeds or the tested property holds,
//! 1 when the property fails, 2 on unreadable input or bad usage.

mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use predim::alpha::{certificate, is_flat_geometry, min_presentation_arity, AlphaTable};
use predim::amalgam::{free_amalgam, weak_canonical_base, zeta_table};
use predim::gammoid::{
    cotransversal_check, is_gammoid_bruteforce, strict_gammoid, system_to_digraph, GammoidVerdict,
};
use predim::io::{
    alpha_rows, parse_digraph, parse_matroid, parse_set_system, presentation_file, read_text, DigraphFile,
    MatroidFile, SetSystemFile,
};
use predim::synthesis::{relative_condition_check, synthesize_presentation, synthesize_relative};
use predim::{Error, Ground, Matroid, SetSystem, Subset};

#[derive(Parser, Debug)]
#[command(
    name = "predim",
    version,
    about = "Predimension, flat matroids and strict gammoids"
)]
struct Cli {
    /// Largest ground set accepted (at most 24).
    #[arg(long, global = true, default_value_t = predim::subset::SOFT_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..=predim::subset::HARD_CAP as u64))]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SetArg {
    /// Comma-separated element labels (defaults to the whole ground set).
    #[arg(long)]
    set: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Whether every subset has nonnegative predimension.
    Check {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// A transversal (system of distinct representatives) of the relations.
    Transversal { file: PathBuf },
    /// Dimension, predimension and self-sufficient closure of a subset.
    Dim {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Closure of a subset in the induced pregeometry.
    Closure {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Reads any matroid file and prints it as a basis list.
    Matroid { file: PathBuf },
    /// The lattice of flats.
    Flats { file: PathBuf },
    /// α on every union of flats.
    Alpha { file: PathBuf },
    /// Whether α is nonnegative on every union of flats.
    #[command(name = "flat?")]
    Flat { file: PathBuf },
    /// A set system inducing the matroid.
    Present {
        file: PathBuf,
        /// Fail unless all relations can have at most this size.
        #[arg(long)]
        max_arity: Option<usize>,
    },
    /// A presentation in which the anchor is self-sufficient.
    #[command(name = "present-rel")]
    PresentRel {
        file: PathBuf,
        #[arg(long)]
        anchor: String,
    },
    /// Smallest relation size over all presentations.
    #[command(name = "min-arity")]
    MinArity { file: PathBuf },
    /// The dual matroid.
    Dual { file: PathBuf },
    /// Compares the cotransversal bases of a set system with its pregeometry.
    #[command(name = "cotrans-check")]
    CotransCheck { file: PathBuf },
    /// The digraph whose strict gammoid is the induced pregeometry.
    #[command(name = "to-digraph")]
    ToDigraph { file: PathBuf },
    /// The strict gammoid of a digraph.
    #[command(name = "from-digraph")]
    FromDigraph { file: PathBuf },
    /// Searches for a flat extension by at most `--extra` elements.
    #[command(name = "gammoid?")]
    Gammoid {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        extra: usize,
    },
    /// Free amalgam of two set systems over shared labels.
    Amalgam {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        base: String,
    },
    /// Weak canonical base of a tuple over a flat.
    Canbase {
        file: PathBuf,
        /// The closed set.
        #[arg(long)]
        flat: String,
        /// The tuple, as comma-separated labels.
        #[arg(long)]
        tuple: String,
    },
    /// Runs every applicable consistency check on a set system.
    #[command(name = "verify-all")]
    VerifyAll {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Also screen this many seeded random systems.
        #[arg(long)]
        seed: Option<u64>,
    },
}

/// Report plus whether the tested property held.
struct Outcome {
    report: Value,
    holds: bool,
}

fn pass(report: Value) -> Outcome {
    Outcome { report, holds: true }
}

fn labels_arg(list: &str) -> Vec<String> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

fn subset_arg(ground: &Ground, list: Option<&str>) -> Result<Subset, Error> {
    match list {
        None => Ok(ground.full()),
        Some(l) => ground.subset(labels_arg(l)),
    }
}

fn capped(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        return Err(Error::Input(format!(
            "ground set has {n} elements, above the cap of {cap}"
        )));
    }
    Ok(())
}

fn load_system(path: &PathBuf, cap: usize) -> Result<SetSystem, Error> {
    let sys = parse_set_system(&read_text(path)?)?;
    capped(sys.n(), cap)?;
    Ok(sys)
}

fn load_matroid(path: &PathBuf, cap: usize) -> Result<Matroid, Error> {
    let text = read_text(path)?;
    let value: Value = serde_json::from_str(&text)?;
    let n = ["elements", "vertices"]
        .iter()
        .find_map(|k| value.get(k).and_then(Value::as_array).map(Vec::len))
        .unwrap_or(0);
    capped(n, cap)?;
    parse_matroid(&text)
}

fn labels(g: &Ground, s: Subset) -> Value {
    json!(g.labels(s))
}

fn matroid_value(m: &Matroid) -> Value {
    serde_json::to_value(MatroidFile::from_matroid(m)).expect("plain data")
}

fn system_value(sys: &SetSystem) -> Value {
    serde_json::to_value(SetSystemFile::from_system(sys)).expect("plain data")
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let cap = cli.cap as usize;
    Ok(match cli.command {
        Command::Check { file, set } => {
            let sys = load_system(&file, cap)?;
            let g = sys.ground();
            let rep = sys.in_class_c();
            let x = subset_arg(g, set.set.as_deref())?;
            let report = json!({
                "member": rep.member,
                "violator": rep.violator.map(|v| labels(g, v)),
                "subset": labels(g, x),
                "predimension": sys.predimension(x),
            });
            Outcome {
                report,
                holds: rep.member,
            }
        }
        Command::Transversal { file } => {
            let sys = load_system(&file, cap)?;
            let g = sys.ground();
            match sys.find_transversal() {
                Some(t) => pass(json!({
                    "transversal": t.assignment.iter().zip(sys.relations()).map(|(&x, &r)| json!({
                        "relation": labels(g, r),
                        "element": g.element(x).label(),
                    })).collect::<Vec<_>>(),
                })),
                None => Outcome {
                    report: json!({ "transversal": null, "violator": sys.in_class_c().violator.map(|v| labels(g, v)) }),
                    holds: false,
                },
            }
        }
        Command::Dim { file, set } => {
            let sys = load_system(&file, cap)?;
            let g = sys.ground();
            let x = subset_arg(g, set.set.as_deref())?;
            pass(json!({
                "subset": labels(g, x),
                "predimension": sys.predimension(x),
                "dimension": sys.dimension(x)?,
                "self_sufficient": sys.is_self_sufficient(x)?,
                "self_sufficient_closure": labels(g, sys.self_sufficient_closure(x)?),
            }))
        }
        Command::Closure { file, set } => {
            let sys = load_system(&file, cap)?;
            let g = sys.ground();
            let x = subset_arg(g, set.set.as_deref())?;
            pass(json!({ "subset": labels(g, x), "closure": labels(g, sys.closure(x)?) }))
        }
        Command::Matroid { file } => pass(matroid_value(&load_matroid(&file, cap)?)),
        Command::Flats { file } => {
            let m = load_matroid(&file, cap)?;
            let g = m.ground();
            let lat = m.flats();
            pass(json!({
                "flats": lat.flats().iter().zip(lat.dims()).map(|(&f, &d)| json!({
                    "flat": labels(g, f),
                    "dim": d,
                })).collect::<Vec<_>>(),
                "covers": lat.covers(),
            }))
        }
        Command::Alpha { file } => {
            let m = load_matroid(&file, cap)?;
            pass(serde_json::to_value(alpha_rows(&m, &AlphaTable::new(&m)))?)
        }
        Command::Flat { file } => {
            let m = load_matroid(&file, cap)?;
            let cert = is_flat_geometry(&m);
            Outcome {
                report: json!({
                    "flat": cert.verdict,
                    "witness": cert.witness.map(|(x, a)| json!({ "subset": labels(m.ground(), x), "alpha": a })),
                }),
                holds: cert.verdict,
            }
        }
        Command::Present { file, max_arity } => {
            let m = load_matroid(&file, cap)?;
            let table = AlphaTable::new(&m);
            let cert = certificate(&table);
            if !cert.verdict {
                let (x, a) = cert.witness.expect("non-flat has a witness");
                return Ok(Outcome {
                    report: json!({ "flat": false, "witness": { "subset": labels(m.ground(), x), "alpha": a } }),
                    holds: false,
                });
            }
            let need = min_presentation_arity(&m)?;
            if max_arity.is_some_and(|k| k < need) {
                return Ok(Outcome {
                    report: json!({ "flat": true, "min_arity": need }),
                    holds: false,
                });
            }
            let p = synthesize_presentation(&m)?
                .ok_or_else(|| Error::Internal("flat matroid without a presentation".into()))?;
            pass(serde_json::to_value(presentation_file(&p))?)
        }
        Command::PresentRel { file, anchor } => {
            let m = load_matroid(&file, cap)?;
            if !is_flat_geometry(&m).verdict {
                return Ok(Outcome {
                    report: json!({ "flat": false }),
                    holds: false,
                });
            }
            let c = m.ground().subset(labels_arg(&anchor))?;
            match synthesize_relative(&m, c)? {
                Some(p) => pass(serde_json::to_value(presentation_file(&p))?),
                None => {
                    let rep = relative_condition_check(&m, c)?;
                    Outcome {
                        report: json!({
                            "anchored": labels(m.ground(), c),
                            "restriction_nonnegative": rep.restriction_nonnegative,
                            "violations": rep.violations.iter().map(|&(x, lhs, rhs)| json!({
                                "subset": labels(m.ground(), x), "alpha": lhs, "required": rhs,
                            })).collect::<Vec<_>>(),
                        }),
                        holds: false,
                    }
                }
            }
        }
        Command::MinArity { file } => {
            let m = load_matroid(&file, cap)?;
            if !is_flat_geometry(&m).verdict {
                return Ok(Outcome {
                    report: json!({ "flat": false, "min_arity": null }),
                    holds: false,
                });
            }
            pass(json!({ "flat": true, "min_arity": min_presentation_arity(&m)? }))
        }
        Command::Dual { file } => pass(matroid_value(&load_matroid(&file, cap)?.dual())),
        Command::CotransCheck { file } => {
            let sys = load_system(&file, cap)?;
            let rep = cotransversal_check(&sys)?;
            Outcome {
                report: json!({
                    "bases_match": rep.bases_match,
                    "dual_match": rep.dual_match,
                    "transversal_count": rep.transversal_count,
                    "basis_count": rep.basis_count,
                }),
                holds: rep.holds(),
            }
        }
        Command::ToDigraph { file } => {
            let sys = load_system(&file, cap)?;
            pass(serde_json::to_value(DigraphFile::from_digraph(
                &system_to_digraph(&sys)?,
            ))?)
        }
        Command::FromDigraph { file } => {
            let g = parse_digraph(&read_text(&file)?)?;
            capped(g.ground().len(), cap)?;
            pass(matroid_value(&strict_gammoid(&g)?))
        }
        Command::Gammoid { file, extra } => {
            let m = load_matroid(&file, cap)?;
            let rep = is_gammoid_bruteforce(&m, extra)?;
            let verdict = match rep.verdict {
                GammoidVerdict::Yes => "yes",
                GammoidVerdict::NoWithinBudget => "no-within-budget",
                GammoidVerdict::Unknown => "unknown",
            };
            Outcome {
                report: json!({
                    "verdict": verdict,
                    "explored": rep.explored,
                    "witness": rep.witness.as_ref().map(matroid_value),
                }),
                holds: rep.is_gammoid(),
            }
        }
        Command::Amalgam { first, second, base } => {
            let s1 = load_system(&first, cap)?;
            let s2 = load_system(&second, cap)?;
            let r = free_amalgam(&s1, &s2, &labels_arg(&base))?;
            capped(r.merged.n(), cap)?;
            let zeta = zeta_table(&r)?;
            let dims = r.merged.dimension_table()?;
            let zeta_matches = zeta.iter().zip(&dims).all(|(&z, &d)| z == d as i32);
            Outcome {
                report: json!({
                    "merged": system_value(&r.merged),
                    "report": {
                        "in_class": r.merged.is_in_class_c(),
                        "first_self_sufficient": r.merged.is_self_sufficient(r.left)?,
                        "second_self_sufficient": r.merged.is_self_sufficient(r.right)?,
                        "zeta_matches": zeta_matches,
                    },
                }),
                holds: zeta_matches,
            }
        }
        Command::Canbase { file, flat, tuple } => {
            let m = load_matroid(&file, cap)?;
            let g = m.ground();
            let b = g.subset(labels_arg(&flat))?;
            let a = g.subset(labels_arg(&tuple))?;
            let cb = weak_canonical_base(&m, b, a)?;
            pass(json!({
                "flat": labels(g, b),
                "tuple": labels(g, a),
                "base_flat": labels(g, cb.base_flat),
                "qualifying": cb.qualifying,
                "closed_checked": cb.closed_checked,
            }))
        }
        Command::VerifyAll { file, threads, seed } => {
            let sys = load_system(&file, cap)?;
            let mut systems = vec![sys];
            if let Some(seed) = seed {
                systems.extend(predim::corpus::random_systems(seed, 20, 6, 6));
            }
            let (report, holds) = verify::verify_all(&systems, threads.max(1));
            Outcome { report, holds }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.report);
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": e.to_string() }));
            match e {
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
