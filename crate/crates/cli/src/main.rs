//! Command-line front end: builds crystals and faces, expands canonical
//! basis elements and path vectors, runs the closed-form classifiers, and
//! drives the verification suites. Exit codes: 0 success, 1 verification
//! failure, 2 usage error, 3 internal invariant breach.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use qcrystal::canonical::CanonicalCtx;
use qcrystal::closedform::{classify_face_mps, count_face_mps, FaceParams};
use qcrystal::crystal::{build_crystal, CrystalGraph, FaceSpec};
use qcrystal::fock::FockVector;
use qcrystal::partitions::{Multicharge, Multipartition};
use qcrystal::verify::{self, CriterionReport};
use qcrystal::weights::{render_content, render_hub, DominantWeight};
use qcrystal::{Error, Result};

#[derive(Parser)]
#[command(name = "qcrystal", version, about = "Exact crystal and q-Fock-space toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the block-reduced crystal down to a degree bound.
    Crystal {
        #[arg(long)]
        e: usize,
        /// Base coefficients a0,a1,...  (comma separated).
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        max_degree: u64,
        /// Residues the lowering operators may use (default: all).
        #[arg(long)]
        restrict: Option<String>,
        /// Keep the multipartitions at each vertex.
        #[arg(long)]
        mps: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Build the finite face of an interval of residues.
    Face {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        lambda: String,
        /// Interval residues, cyclically consecutive (comma separated).
        #[arg(long)]
        interval: String,
        #[arg(long)]
        mps: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand a canonical basis element in the q-Fock space.
    Cbe {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        lambda: String,
        /// Leading multipartition, e.g. "[[2], [1], [1], [1], []]".
        #[arg(long)]
        mu: String,
        /// Read/write the expansion cache (see QCRYSTAL_CACHE_DIR).
        #[arg(long)]
        cache: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply a word of divided lowering operators to the vacuum.
    FockPath {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        lambda: String,
        /// Word, leftmost applied first: "2^1,1^2,2^2" (bare residue = ^1).
        #[arg(long)]
        path: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Shape generating function of a canonical basis element.
    Shape {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        cache: bool,
    },
    /// Classify the reachable multipartitions at a two-residue face content.
    Enumerate {
        #[arg(long, default_value = "4")]
        e: usize,
        #[arg(long)]
        a1: i64,
        #[arg(long)]
        a2: i64,
        #[arg(long)]
        j1: i64,
        #[arg(long)]
        j2: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Count the reachable multipartitions at a two-residue face content.
    Count {
        #[arg(long, default_value = "4")]
        e: usize,
        #[arg(long)]
        a1: i64,
        #[arg(long)]
        a2: i64,
        #[arg(long)]
        j1: i64,
        #[arg(long)]
        j2: i64,
    },
    /// Run verification suites (all, ac1..ac9, closed-fock, tau, shapes).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        /// Interval-coefficient bound for the sweep suites.
        #[arg(long)]
        max_a: Option<i64>,
        #[arg(long)]
        e: Option<usize>,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        interval: Option<String>,
        /// Worker threads for the full suite (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Write a crystal or face graph to a file.
    Export {
        #[arg(long)]
        e: usize,
        #[arg(long)]
        lambda: String,
        /// Build a face instead of a bounded crystal.
        #[arg(long)]
        interval: Option<String>,
        #[arg(long)]
        max_degree: Option<u64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pager closes the pipe instead of
    // panicking inside println!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Domain(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn parse_i64_list(text: &str, what: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Error::domain(format!("bad {what} entry {p:?}")))
        })
        .collect()
}

fn parse_usize_list(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("bad {what} entry {p:?}")))
        })
        .collect()
}

fn parse_base(e: usize, lambda: &str) -> Result<DominantWeight> {
    DominantWeight::new(e, parse_i64_list(lambda, "lambda")?)
}

/// "2^3,1^4" → [(2, 3), (1, 4)]; a bare residue means multiplicity one.
fn parse_path(text: &str) -> Result<Vec<(usize, u64)>> {
    text.split(',')
        .map(|piece| {
            let piece = piece.trim();
            let (res, mult) = match piece.split_once('^') {
                Some((r, m)) => (r, m),
                None => (piece, "1"),
            };
            let res = res
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::domain(format!("bad residue in path step {piece:?}")))?;
            let mult = mult
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::domain(format!("bad multiplicity in path step {piece:?}")))?;
            Ok((res, mult))
        })
        .collect()
}

fn print_graph(graph: &CrystalGraph, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&graph.to_json()).unwrap()),
        Format::Dot => println!("{}", graph.to_dot()),
        Format::Text => {
            println!(
                "{} vertices, {} edges, max degree {}",
                graph.vertices().len(),
                graph.edges().len(),
                graph.max_degree()
            );
            println!("{:<20} {:<20} {:>6} {:>6}", "content", "hub", "defect", "count");
            for v in graph.vertices() {
                println!(
                    "{:<20} {:<20} {:>6} {:>6}",
                    render_content(&v.content),
                    render_hub(&v.hub),
                    v.defect,
                    v.count
                );
                if let Some(mps) = &v.mps {
                    for mp in mps {
                        println!("    {mp}");
                    }
                }
            }
        }
    }
    Ok(())
}

/// FNV-1a over the cache key; names the per-element cache file.
fn content_address(key: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in key.bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{h:016x}")
}

fn cache_dir() -> PathBuf {
    std::env::var_os("QCRYSTAL_CACHE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".qcrystal-cache"))
}

fn cbe_vector(charge: &Multicharge, mu: &Multipartition, cache: bool) -> Result<FockVector> {
    let key = format!(
        "e={};charge={:?};mu={}",
        charge.e(),
        charge.residues(),
        mu
    );
    let path = cache_dir().join(format!("{}.json", content_address(&key)));
    if cache {
        if let Ok(text) = fs::read_to_string(&path) {
            let stored: serde_json::Value = serde_json::from_str(&text)
                .map_err(|_| Error::integrity("unreadable cache entry"))?;
            if stored.get("key").and_then(|k| k.as_str()) == Some(key.as_str()) {
                let rendered = stored
                    .get("element")
                    .and_then(|v| v.as_str())
                    .ok_or_else(|| Error::integrity("cache entry without element"))?;
                return FockVector::parse(charge.clone(), rendered);
            }
        }
    }
    let mut ctx = CanonicalCtx::new(charge.clone());
    let vector = ctx.canonical_basis(mu)?.vector().clone();
    if cache {
        let dir = cache_dir();
        fs::create_dir_all(&dir)
            .map_err(|err| Error::integrity(format!("cannot create cache dir: {err}")))?;
        let entry = serde_json::json!({ "key": key, "element": vector.render() });
        fs::write(&path, serde_json::to_string(&entry).unwrap())
            .map_err(|err| Error::integrity(format!("cannot write cache entry: {err}")))?;
    }
    Ok(vector)
}

fn suite_reports(
    suite: &str,
    max_a: Option<i64>,
    e: Option<usize>,
    lambda: Option<String>,
    interval: Option<String>,
) -> Result<Vec<CriterionReport>> {
    let single = |id: &'static str, details: Result<String>| {
        vec![match details {
            Ok(details) => CriterionReport { id, passed: true, details },
            Err(err) => CriterionReport { id, passed: false, details: err.to_string() },
        }]
    };
    match suite {
        "all" => Ok(verify::CRITERIA.par_iter().map(|(_, run)| run()).collect()),
        "shapes" => Ok(single("shapes", verify::gaussian_shape_details(max_a.unwrap_or(6)))),
        "closed-fock" => Ok(single(
            "closed-fock",
            verify::closed_fock_details(e.unwrap_or(4), max_a.unwrap_or(3)),
        )),
        "tau" => {
            let e = e.ok_or_else(|| Error::domain("tau suite needs --e"))?;
            let lambda = lambda.ok_or_else(|| Error::domain("tau suite needs --lambda"))?;
            let interval = interval.ok_or_else(|| Error::domain("tau suite needs --interval"))?;
            Ok(single(
                "tau",
                verify::tau_face_details(
                    e,
                    parse_i64_list(&lambda, "lambda")?,
                    parse_usize_list(&interval, "interval")?,
                ),
            ))
        }
        name => {
            let hit = verify::CRITERIA.iter().find(|(id, _)| *id == name);
            match hit {
                Some((_, run)) => Ok(vec![run()]),
                None => Err(Error::domain(format!("unknown suite {name:?}"))),
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode> {
    match cmd {
        Cmd::Crystal { e, lambda, max_degree, restrict, mps, format } => {
            let base = parse_base(e, &lambda)?;
            let allowed = restrict
                .map(|r| parse_usize_list(&r, "restrict"))
                .transpose()?;
            let graph = build_crystal(&base, max_degree, allowed.as_deref(), mps)?;
            print_graph(&graph, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Face { e, lambda, interval, mps, format } => {
            let base = parse_base(e, &lambda)?;
            let spec = FaceSpec::new(base, parse_usize_list(&interval, "interval")?)?;
            let graph = spec.crystal(mps)?;
            if format == Format::Text {
                println!(
                    "lowest vertex: hub {} at degree {}",
                    render_hub(&spec.rho_hub()?),
                    spec.rho_degree()?
                );
            }
            print_graph(&graph, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Cbe { e, lambda, mu, cache, format } => {
            let charge = parse_base(e, &lambda)?.multicharge();
            let mu = Multipartition::parse(charge.clone(), &mu)?;
            let vector = cbe_vector(&charge, &mu, cache)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&vector.to_json()).unwrap()
                ),
                _ => {
                    println!("G({mu}) = {}", vector.render());
                    println!("shape: {}", vector.shape()?.render_asc("z"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::FockPath { e, lambda, path, format } => {
            let charge = parse_base(e, &lambda)?.multicharge();
            let word = parse_path(&path)?;
            let vector = FockVector::eval_path(charge, &word)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&vector.to_json()).unwrap()
                ),
                _ => {
                    println!("{}", vector.render());
                    println!("shape: {}", vector.shape()?.render_asc("z"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Shape { e, lambda, mu, cache } => {
            let charge = parse_base(e, &lambda)?.multicharge();
            let mu = Multipartition::parse(charge.clone(), &mu)?;
            let vector = cbe_vector(&charge, &mu, cache)?;
            println!("{}", vector.shape()?.render_asc("z"));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate { e, a1, a2, j1, j2, format } => {
            let p = FaceParams::new(e, a1, a2, j1, j2)?;
            let classes = classify_face_mps(&p)?;
            match format {
                Format::Json => {
                    let items: Vec<serde_json::Value> = classes
                        .iter()
                        .map(|c| {
                            serde_json::json!({
                                "w": c.w,
                                "mu": c.mu.to_string(),
                                "path": c.path,
                                "u": c.u,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&items).unwrap());
                }
                _ => {
                    for c in &classes {
                        println!("w={}: {} via u={} path {:?}", c.w, c.mu, c.u, c.path);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Count { e, a1, a2, j1, j2 } => {
            let p = FaceParams::new(e, a1, a2, j1, j2)?;
            println!("{}", count_face_mps(&p));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite, max_a, e, lambda, interval, jobs, format } => {
            if let Some(jobs) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build_global()
                    .map_err(|err| Error::domain(format!("cannot set worker count: {err}")))?;
            }
            let reports = suite_reports(&suite, max_a, e, lambda, interval)?;
            let all_passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Json => {
                    let items: Vec<serde_json::Value> =
                        reports.iter().map(|r| r.to_json()).collect();
                    println!("{}", serde_json::to_string_pretty(&items).unwrap());
                }
                _ => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
            }
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Export { e, lambda, interval, max_degree, out, format } => {
            let base = parse_base(e, &lambda)?;
            let graph = match (interval, max_degree) {
                (Some(interval), None) => {
                    FaceSpec::new(base, parse_usize_list(&interval, "interval")?)?.crystal(false)?
                }
                (None, Some(depth)) => build_crystal(&base, depth, None, false)?,
                _ => {
                    return Err(Error::domain(
                        "export needs exactly one of --interval or --max-degree",
                    ))
                }
            };
            let payload = match format {
                Format::Dot => graph.to_dot(),
                _ => serde_json::to_string_pretty(&graph.to_json()).unwrap(),
            };
            fs::write(&out, payload)
                .map_err(|err| Error::integrity(format!("cannot write {}: {err}", out.display())))?;
            println!(
                "wrote {} ({} vertices, {} edges)",
                out.display(),
                graph.vertices().len(),
                graph.edges().len()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}
