mod args;

use std::fs;
use std::io::{self, BufReader, Read};
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use args::{Args, Command, GraphInput, Mode, ScanArgs};
use clap::Parser;
use serde::Serialize;

use sachs_core::critical_structure::{critical_difference, fast_critical_difference};
use sachs_core::criticality::{
    criticality_report, is_minimal_k_sachs_critical, BoundContext, FactorMode, FailureCertificate,
};
use sachs_core::graph::{emit_edge_list, parse_edge_list, parse_graph6};
use sachs_core::harness::{
    find_extremal_examples, read_graph6_stream, run_campaign, run_hunt, CampaignResult, Certificate, ExtremalProfile,
    FixtureRegistry, GraphSource, ScanConfig, SCHEMA,
};
use sachs_core::matching::{is_k_factor_critical, BRUTE_FORCE_LIMIT};
use sachs_core::planarity::{is_k_planar, is_planar, PlanarityVerdict};
use sachs_core::sachs::{deficiency_from_hall, has_one_two_factor, FactorOutcome};
use sachs_core::{Error, Graph, Result};

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const USAGE: u8 = 2;
const CONTRADICTION: u8 = 3;

/// JSON report for a single-graph command.
#[derive(Serialize)]
struct SingleReport<'a, V: Serialize> {
    schema: &'static str,
    task: &'a str,
    graph6: String,
    k: Option<usize>,
    holds: bool,
    verdict: V,
    certificates: Vec<Certificate>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ContradictionDetected(_) => CONTRADICTION,
                _ => USAGE,
            })
        }
    }
}

fn read_stdin() -> Result<String> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    Ok(text)
}

fn load_graph(input: &GraphInput) -> Result<Graph> {
    if let Some(g6) = &input.graph6 {
        return parse_graph6(g6.as_bytes());
    }
    if let Some(path) = &input.edges {
        return parse_edge_list(&fs::read_to_string(path)?);
    }
    let mut graphs = read_graph6_stream(read_stdin()?.as_bytes())?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        found => Err(Error::StreamParse {
            line: 1,
            reason: format!("expected one graph on standard input, found {found}"),
        }),
    }
}

fn write_json<T: Serialize>(path: Option<&Path>, value: &T) -> Result<()> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
        fs::write(path, text)?;
    }
    Ok(())
}

fn single<V: Serialize>(
    args: &Args,
    task: &str,
    g: &Graph,
    k: Option<usize>,
    holds: bool,
    verdict: V,
    certificates: Vec<Certificate>,
) -> Result<u8> {
    write_json(
        args.json.as_deref(),
        &SingleReport {
            schema: SCHEMA,
            task,
            graph6: g.to_graph6(),
            k,
            holds,
            verdict,
            certificates,
        },
    )?;
    Ok(if holds { HOLDS } else { FAILS })
}

fn factor_mode(mode: Mode) -> FactorMode {
    match mode {
        Mode::Sachs => FactorMode::Sachs,
        Mode::Matching => FactorMode::PerfectMatching,
    }
}

fn failure_certificate(k: usize, failure: FailureCertificate) -> Certificate {
    match failure {
        FailureCertificate::Sachs(failure) => Certificate::CriticalityFailure { k, failure },
        FailureCertificate::PerfectMatching(failure) => Certificate::FactorCriticalFailure { k, failure },
    }
}

fn run(args: &Args) -> Result<u8> {
    match &args.command {
        Command::Factor { input } => {
            let g = load_graph(input)?;
            match has_one_two_factor(&g) {
                FactorOutcome::Factor(factor) => {
                    let parts: Vec<String> = factor.components.iter().map(|c| c.to_string()).collect();
                    println!("factor: {}", parts.join(" + "));
                    single(args, "factor", &g, None, true, "factor", vec![Certificate::Factor { factor }])
                }
                FactorOutcome::Violator(v) => {
                    let certificate = deficiency_from_hall(&g, &v)?;
                    println!(
                        "no {{1,2}}-factor: S = {}, i(G - S) = {} > |S|",
                        certificate.set, certificate.isolated
                    );
                    single(args, "factor", &g, None, false, "no_factor", vec![Certificate::Deficiency { certificate }])
                }
            }
        }
        Command::Critical { k, mode, input } => {
            let g = load_graph(input)?;
            let report = criticality_report(&g, *k, factor_mode(*mode), false)?;
            let holds = report.is_critical;
            if holds {
                println!("{k}-critical ({})", factor_mode(*mode));
            } else {
                println!("not {k}-critical ({})", factor_mode(*mode));
            }
            let certs = report.failure.clone().map(|f| failure_certificate(*k, f)).into_iter().collect();
            single(args, "critical", &g, Some(*k), holds, &report, certs)
        }
        Command::Minimal { k, mode, input } => {
            let g = load_graph(input)?;
            let mode = factor_mode(*mode);
            let report = criticality_report(&g, *k, mode, true)?;
            let mut certs = Vec::new();
            if let Some(f) = report.failure.clone() {
                println!("not {k}-critical ({mode})");
                certs.push(failure_certificate(*k, f));
            } else if let Some(edge) = report.non_minimal_edge {
                println!("{k}-critical but not minimal: G - {edge} is still {k}-critical");
                certs.push(Certificate::RemovableEdge { k: *k, mode, edge });
            } else {
                if let Some(d) = report.min_degree {
                    println!("minimal {k}-critical ({mode}), δ = {} at vertex {}", d.delta, d.vertex);
                }
                match mode {
                    FactorMode::Sachs => {
                        for d in is_minimal_k_sachs_critical(&g, *k)?.destroying {
                            certs.push(Certificate::BreakingEdge {
                                k: *k,
                                edge: d.edge,
                                failure: d.failure,
                            });
                        }
                    }
                    FactorMode::PerfectMatching => {
                        for edge in g.edges().collect::<Vec<_>>() {
                            if let Some(failure) = is_k_factor_critical(&g.delete_edge(edge)?, *k)?.failure {
                                certs.push(Certificate::MatchingBreakingEdge { k: *k, edge, failure });
                            }
                        }
                    }
                }
            }
            let holds = report.is_minimal == Some(true);
            single(args, "minimal", &g, Some(*k), holds, &report, certs)
        }
        Command::Planar { input } => {
            let g = load_graph(input)?;
            let verdict = is_planar(&g);
            let cert = match &verdict {
                PlanarityVerdict::Planar(rotation) => {
                    println!("planar");
                    Certificate::Embedding {
                        rotation: rotation.clone(),
                    }
                }
                PlanarityVerdict::NonPlanar(witness) => {
                    println!("non-planar: {} subdivision on {:?}", witness.kind, witness.branch_vertices);
                    Certificate::Kuratowski {
                        witness: witness.clone(),
                    }
                }
            };
            single(args, "planar", &g, None, verdict.is_planar(), "planarity", vec![cert])
        }
        Command::Kplanar { k, input } => {
            let g = load_graph(input)?;
            let verdict = is_k_planar(&g, *k)?;
            let mut certs = Vec::new();
            match (&verdict.deleted, &verdict.witness) {
                (Some(deleted), Some(witness)) => {
                    println!("not {k}-planar: G - {deleted} contains a {} subdivision", witness.kind);
                    certs.push(Certificate::KPlanarFailure {
                        deleted: deleted.clone(),
                        witness: witness.clone(),
                    });
                }
                _ => println!("{k}-planar"),
            }
            single(args, "kplanar", &g, Some(*k), verdict.k_planar, &verdict, certs)
        }
        Command::Critdiff { input } => {
            let g = load_graph(input)?;
            if g.order() <= BRUTE_FORCE_LIMIT {
                let pair = critical_difference(&g)?;
                println!(
                    "d = {}, id = {}, critical set {}, critical independent set {}",
                    pair.d, pair.id, pair.critical_set, pair.critical_independent_set
                );
                single(args, "critdiff", &g, None, true, "critical_difference", vec![Certificate::CriticalPair { pair }])
            } else {
                let d = fast_critical_difference(&g);
                println!("d = {d}");
                single(args, "critdiff", &g, None, true, d, Vec::new())
            }
        }
        Command::Campaign { name, scan } => {
            let cfg = scan_config(args, scan)?;
            let result = run_campaign(name.parse()?, &cfg)?;
            finish_scan(args, &result)
        }
        Command::Hunt { name, scan } => {
            let cfg = scan_config(args, scan)?;
            let result = run_hunt(name.parse()?, &cfg)?;
            finish_scan(args, &result)
        }
        Command::Fixtures => {
            let registry = FixtureRegistry::load()?;
            for c in registry.checks() {
                println!("ok  {:<24} {}", c.fixture, c.property);
            }
            write_json(args.json.as_deref(), &registry)?;
            Ok(HOLDS)
        }
        Command::Encode { file } => {
            let text = match file {
                Some(path) => fs::read_to_string(path)?,
                None => read_stdin()?,
            };
            println!("{}", parse_edge_list(&text)?.to_graph6());
            Ok(HOLDS)
        }
        Command::Decode { graph6 } => {
            let g = match graph6 {
                Some(s) => parse_graph6(s.as_bytes())?,
                None => load_graph(&GraphInput {
                    graph6: None,
                    edges: None,
                })?,
            };
            print!("{}", emit_edge_list(&g));
            Ok(HOLDS)
        }
        Command::Extremal { k, gap, context, n_max } => {
            let context: BoundContext = context.parse()?;
            let profile = ExtremalProfile {
                k: *k,
                gap: *gap,
                criticality: context.criticality,
                planarity: context.planarity,
            };
            let found = find_extremal_examples(profile, *n_max)?;
            let codes: Vec<String> = found.iter().map(Graph::to_graph6).collect();
            for code in &codes {
                println!("{code}");
            }
            eprintln!("{} graph(s) with δ = {} under {context}", codes.len(), k + gap);
            write_json(args.json.as_deref(), &codes)?;
            Ok(if codes.is_empty() { FAILS } else { HOLDS })
        }
    }
}

fn scan_config(args: &Args, scan: &ScanArgs) -> Result<ScanConfig> {
    let source = match &scan.stream {
        Some(path) if path.as_os_str() == "-" => GraphSource::Graphs(read_graph6_stream(read_stdin()?.as_bytes())?),
        Some(path) => GraphSource::Graphs(read_graph6_stream(BufReader::new(fs::File::open(path)?))?),
        None => GraphSource::Builtin {
            n_min: scan.n_min,
            n_max: scan.n_max,
        },
    };
    Ok(ScanConfig {
        source,
        k_max: scan.k_max,
        workers: args.workers,
        time_budget: scan.time_budget.map(Duration::from_millis),
    })
}

fn finish_scan(args: &Args, result: &CampaignResult) -> Result<u8> {
    println!(
        "{}: {} graphs, {} checks, {} meeting hypotheses, {} passed, {} violations, {} skipped",
        result.campaign,
        result.graphs_scanned,
        result.checks,
        result.hypothesis_satisfied,
        result.passes,
        result.violations,
        result.skipped
    );
    for cx in &result.counterexamples {
        println!("counterexample {}: {}", cx.graph6, cx.reason);
    }
    println!("digest {}", result.digest);
    write_json(args.json.as_deref(), result)?;
    Ok(if result.is_clean() { HOLDS } else { CONTRADICTION })
}
