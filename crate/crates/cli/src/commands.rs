//! Subcommand implementations. Each returns the text for standard output and
//! the process exit code; failures become [`CliError`] and exit code 2.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use dualcolor::fpt::{Branch, MAX_DP_GROUND};
use dualcolor::graph::maximum_antimatching;
use dualcolor::kernel::{claim_report, compute_classes, kernel_bound, kernelize, ClaimCheck, Rule};
use dualcolor::lab::interval::interval_report;
use dualcolor::lab::random::{planted_instance, random_graph, random_intervals, random_split};
use dualcolor::lab::setcover::reduction_profile;
use dualcolor::lab::{gen_tight_general, gen_tight_interval, split_partition, split_report};
use dualcolor::oracle::{Oracle, DEFAULT_CAP};
use dualcolor::{solve_dual, weighted_chromatic_number, Coloring, DualInstance, Verdict, Weight};

use crate::format::{self, FormatError, Instance};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Model(#[from] dualcolor::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

/// Text for standard output plus the exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

/// Milliseconds to the microsecond.
fn round_ms(ms: f64) -> f64 {
    (ms * 1e3).round() / 1e3
}

fn json<T: Serialize>(value: &T, code: i32) -> Output {
    let mut stdout = serde_json::to_string_pretty(value).expect("plain data serializes");
    stdout.push('\n');
    Output { stdout, code }
}

fn one_indexed(classes: &Coloring) -> Vec<Vec<usize>> {
    classes
        .clone()
        .normalized()
        .into_classes()
        .into_iter()
        .map(|c| c.into_iter().map(|v| v + 1).collect())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Solver {
    Fpt,
    Oracle,
    Both,
}

impl Solver {
    fn name(self) -> &'static str {
        match self {
            Solver::Fpt => "fpt",
            Solver::Oracle => "oracle",
            Solver::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SolveOptions {
    pub solver: Solver,
    pub emit_certificate: bool,
    pub cap: Option<usize>,
}

#[derive(Serialize)]
struct SolveStats {
    antimatching_size: Option<usize>,
    clique_size: Option<usize>,
    n: usize,
    m: usize,
    branch: &'static str,
    runtime_ms: f64,
}

#[derive(Serialize)]
struct SolveReport {
    answer: String,
    sigma: Option<Weight>,
    weight_sum: Weight,
    k: u64,
    solver: &'static str,
    certificate: Option<Vec<Vec<usize>>>,
    stats: SolveStats,
}

struct FptRun {
    verdict: Verdict,
    sigma: Option<Weight>,
    certificate: Option<Coloring>,
    antimatching: Option<usize>,
    branch: Branch,
}

/// The decision, then `sigma` and an optimal coloring from the subset
/// program whenever `V(M)` is small enough, even if a shortcut decided.
fn run_fpt(inst: &DualInstance) -> Result<FptRun> {
    let ans = solve_dual(inst)?;
    let mut run = FptRun {
        verdict: ans.verdict,
        sigma: ans.sigma,
        certificate: ans.certificate,
        antimatching: ans.stats.antimatching_size,
        branch: ans.stats.branch,
    };
    if run.sigma.is_none() {
        let m = maximum_antimatching(&inst.graph);
        run.antimatching = Some(m.len());
        if 2 * m.len() <= MAX_DP_GROUND {
            let (sigma, coloring) = weighted_chromatic_number(&inst.graph)?;
            run.sigma = Some(sigma);
            run.certificate = Some(coloring);
        }
    }
    Ok(run)
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Trivial => "trivial",
        Branch::Antimatching => "antimatching",
        Branch::DynamicProgram => "dynamic-program",
    }
}

pub fn solve(instance: &Instance, opts: SolveOptions) -> Result<Output> {
    let inst = instance.to_dual()?;
    let g = &inst.graph;
    let start = Instant::now();
    let oracle_sigma = match opts.solver {
        Solver::Fpt => None,
        _ => Some(Oracle::new(opts.cap.unwrap_or(DEFAULT_CAP)).sigma(g)?),
    };
    let fpt = match opts.solver {
        Solver::Oracle => None,
        _ => Some(run_fpt(&inst)?),
    };
    let runtime_ms = round_ms(start.elapsed().as_secs_f64() * 1e3);

    let (verdict, sigma, certificate, antimatching, branch) = match (&fpt, oracle_sigma) {
        (Some(run), oracle) => {
            if let Some(exact) = oracle {
                let agrees = run.verdict == Verdict::from_bool(inst.accepts(exact))
                    && run.sigma.is_none_or(|s| s == exact);
                if !agrees {
                    return Err(CliError::Usage(format!(
                        "solvers disagree: fpt {} (sigma {:?}), oracle sigma {exact}",
                        run.verdict, run.sigma
                    )));
                }
            }
            (run.verdict, run.sigma.or(oracle), run.certificate.clone(), run.antimatching, branch_name(run.branch))
        }
        (None, Some(exact)) => {
            let m = maximum_antimatching(g).len();
            (Verdict::from_bool(inst.accepts(exact)), Some(exact), None, Some(m), "oracle")
        }
        (None, None) => unreachable!("some solver always runs"),
    };
    let report = SolveReport {
        answer: verdict.to_string(),
        sigma,
        weight_sum: g.total_weight(),
        k: inst.k,
        solver: opts.solver.name(),
        certificate: certificate.filter(|_| opts.emit_certificate).map(|c| one_indexed(&c)),
        stats: SolveStats {
            antimatching_size: antimatching,
            clique_size: antimatching.map(|m| g.n() - 2 * m),
            n: g.n(),
            m: g.edge_count(),
            branch,
            runtime_ms,
        },
    };
    Ok(json(&report, if verdict.is_yes() { 0 } else { 1 }))
}

#[derive(Serialize)]
struct ReducedJson {
    n: usize,
    m: usize,
    k: u64,
    weights: Vec<Weight>,
    edges: Vec<(usize, usize)>,
    file: String,
}

#[derive(Serialize)]
struct LogEntry {
    rule: u8,
    name: &'static str,
    deleted: Vec<usize>,
}

#[derive(Serialize)]
struct Bound {
    value: usize,
    limit: Option<u64>,
}

#[derive(Serialize)]
struct KernelReport {
    original: SizeJson,
    reduced: ReducedJson,
    shortcut: Option<String>,
    log: Option<Vec<LogEntry>>,
    vertex_map: Option<Vec<usize>>,
    bound: Bound,
}

#[derive(Serialize)]
struct SizeJson {
    n: usize,
    m: usize,
    k: u64,
}

pub fn kernelize_cmd(instance: &Instance, emit_trace: bool) -> Result<Output> {
    let inst = instance.to_dual()?;
    let trace = kernelize(&inst);
    let r = &trace.reduced;
    let report = KernelReport {
        original: SizeJson {
            n: inst.graph.n(),
            m: inst.graph.edge_count(),
            k: inst.k,
        },
        reduced: ReducedJson {
            n: r.graph.n(),
            m: r.graph.edge_count(),
            k: r.k,
            weights: r.graph.weights().to_vec(),
            edges: r.graph.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect(),
            file: format::write_dwc(r, None),
        },
        shortcut: trace.shortcut.map(|v| v.to_string()),
        log: emit_trace.then(|| {
            trace
                .log
                .iter()
                .map(|a| LogEntry {
                    rule: a.rule.id(),
                    name: match a.rule {
                        Rule::Universal => "universal",
                        Rule::ClassTrim => "class-trim",
                    },
                    deleted: a.deleted.iter().map(|v| v + 1).collect(),
                })
                .collect()
        }),
        vertex_map: emit_trace.then(|| trace.vertex_map.iter().map(|v| v + 1).collect()),
        bound: Bound {
            value: r.graph.n(),
            limit: kernel_bound(inst.k).and_then(|b| u64::try_from(b).ok()),
        },
    };
    Ok(json(&report, 0))
}

/// What `generate` should produce.
#[derive(Clone, Debug)]
pub enum GenerateKind {
    TightGeneral { k: u64 },
    TightInterval { k: u64 },
    SetCover { input: Instance },
    Random { n: usize, p: f64, k: u64, max_weight: Weight, seed: u64 },
    RandomSplit { clique: usize, stable: usize, d: usize, k: u64, max_weight: Weight, seed: u64 },
    RandomInterval { n: usize, span: i64, max_len: i64, k: u64, max_weight: Weight, seed: u64 },
    Planted { n: usize, pairs: usize, palette: usize, k: u64, max_weight: Weight, seed: u64 },
}

pub fn generate(kind: GenerateKind) -> Result<Output> {
    let text = match kind {
        GenerateKind::TightGeneral { k } => {
            format::write_dwc(&gen_tight_general(k)?, Some(&format!("tight general instance, k = {k}")))
        }
        GenerateKind::TightInterval { k } => {
            let (_, rep) = gen_tight_interval(k)?;
            format::write_interval(k, &rep, Some(&format!("tight interval instance, k = {k}")))
        }
        GenerateKind::SetCover { input } => {
            let Instance::SetCover(sc) = &input else {
                return Err(CliError::Usage(format!("expected a setcover file, found {}", input.kind())));
            };
            let inst = dualcolor::lab::reduce_setcover(sc)?;
            let comment = format!(
                "set cover reduction: sets 1..{}, elements {}..{}",
                sc.sets().len(),
                sc.sets().len() + 1,
                inst.graph.n()
            );
            format::write_dwc(&inst, Some(&comment))
        }
        GenerateKind::Random { n, p, k, max_weight, seed } => {
            let g = random_graph(n, p, max_weight, seed)?;
            format::write_dwc(&DualInstance::new(g, k)?, Some(&format!("G(n, p) n = {n} p = {p} seed = {seed}")))
        }
        GenerateKind::RandomSplit { clique, stable, d, k, max_weight, seed } => {
            let (g, _) = random_split(clique, stable, d, max_weight, seed)?;
            let comment = format!("split: clique 1..{clique}, d = {d}, seed = {seed}");
            format::write_dwc(&DualInstance::new(g, k)?, Some(&comment))
        }
        GenerateKind::RandomInterval { n, span, max_len, k, max_weight, seed } => {
            let rep = random_intervals(n, span, max_len, max_weight, seed)?;
            format::write_interval(k, &rep, Some(&format!("random intervals, seed = {seed}")))
        }
        GenerateKind::Planted { n, pairs, palette, k, max_weight, seed } => {
            let g = planted_instance(n, pairs, palette, max_weight, seed)?;
            let comment = format!("planted antimatching of {pairs} pairs, seed = {seed}");
            format::write_dwc(&DualInstance::new(g, k)?, Some(&comment))
        }
    };
    Ok(Output { stdout: text, code: 0 })
}

#[derive(Serialize)]
struct CheckJson {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn checks_json(checks: &[ClaimCheck]) -> Vec<CheckJson> {
    checks
        .iter()
        .map(|c| CheckJson {
            name: c.name,
            passed: c.passed,
            detail: c.detail.clone(),
        })
        .collect()
}

#[derive(Serialize)]
struct ClaimsJson {
    kernel_n: usize,
    shortcut: Option<String>,
    classes: Option<usize>,
    special_classes: Option<usize>,
    normal_classes: Option<usize>,
    special_non_edges: Option<usize>,
    normal_non_edges: Option<usize>,
    checks: Vec<CheckJson>,
}

#[derive(Serialize)]
struct IntervalJson {
    cliques: usize,
    antimatching_size: usize,
    kernel_size: Option<usize>,
    kernel_limit: u128,
    kernel_cliques: Option<usize>,
    kernel_classes: Option<usize>,
    checks: Vec<CheckJson>,
}

#[derive(Serialize)]
struct SplitJson {
    clique: usize,
    stable: usize,
    d: usize,
    kernel_size: Option<usize>,
    kernel_limit: u128,
    residual_clique: Option<usize>,
    checks: Vec<CheckJson>,
}

#[derive(Serialize)]
struct AuditReport {
    passed: bool,
    claims: Option<ClaimsJson>,
    interval: Option<IntervalJson>,
    split: Option<SplitJson>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AuditOptions {
    pub claims: bool,
    pub interval: bool,
    pub split: bool,
}

pub fn audit(instance: &Instance, opts: AuditOptions) -> Result<Output> {
    if !(opts.claims || opts.interval || opts.split) {
        return Err(CliError::Usage("choose at least one of --claims, --interval, --split".into()));
    }
    let inst = instance.to_dual()?;
    let mut passed = true;

    let claims = opts.claims.then(|| {
        let trace = kernelize(&inst);
        let g = &trace.reduced.graph;
        let mut out = ClaimsJson {
            kernel_n: g.n(),
            shortcut: trace.shortcut.map(|v| v.to_string()),
            classes: None,
            special_classes: None,
            normal_classes: None,
            special_non_edges: None,
            normal_non_edges: None,
            checks: Vec::new(),
        };
        if trace.shortcut.is_some() {
            return out;
        }
        let m = maximum_antimatching(g);
        match compute_classes(g, &m) {
            Ok(part) => {
                let report = claim_report(g, &m, &part);
                out.classes = Some(report.classes);
                out.special_classes = Some(report.special_classes);
                out.normal_classes = Some(report.normal_classes);
                out.special_non_edges = Some(report.special_non_edges);
                out.normal_non_edges = Some(report.normal_non_edges);
                out.checks = checks_json(&report.checks);
            }
            Err(e) => out.checks.push(CheckJson {
                name: "class-structure",
                passed: false,
                detail: e.to_string(),
            }),
        }
        out
    });
    if let Some(c) = &claims {
        passed &= c.checks.iter().all(|c| c.passed);
    }

    let interval = if opts.interval {
        let Instance::Interval(inst, rep) = instance else {
            return Err(CliError::Usage("--interval needs an interval file".into()));
        };
        let r = interval_report(inst, rep);
        passed &= r.all_passed();
        Some(IntervalJson {
            cliques: r.cliques,
            antimatching_size: r.antimatching_size,
            kernel_size: r.kernel_size,
            kernel_limit: r.kernel_limit,
            kernel_cliques: r.kernel_cliques,
            kernel_classes: r.kernel_classes,
            checks: checks_json(&r.checks),
        })
    } else {
        None
    };

    let split = if opts.split {
        let profile = match instance {
            Instance::SetCover(sc) => reduction_profile(sc, &inst)?,
            _ => split_partition(&inst.graph).ok_or_else(|| CliError::Usage("the graph is not split".into()))?,
        };
        let r = split_report(&inst, &profile);
        passed &= r.all_passed();
        Some(SplitJson {
            clique: profile.clique.len(),
            stable: profile.stable.len(),
            d: r.d,
            kernel_size: r.kernel_size,
            kernel_limit: r.kernel_limit,
            residual_clique: r.residual_clique,
            checks: checks_json(&r.checks),
        })
    } else {
        None
    };

    let report = AuditReport {
        passed,
        claims,
        interval,
        split,
    };
    Ok(json(&report, if passed { 0 } else { 1 }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// `n = 200`, `k = 2..=8`.
    FptScaling,
    /// `k = 6`, `n` doubling from 50 to 800.
    FptScalingN,
    /// Kernelization of mixed random instances.
    Kernel,
}

#[derive(Clone, Copy, Debug)]
pub struct BenchOptions {
    pub jobs: usize,
    pub seed: u64,
    pub reps: usize,
}

#[derive(Serialize)]
struct BenchRow {
    suite: &'static str,
    index: usize,
    seed: u64,
    n: usize,
    m: usize,
    k: u64,
    antimatching_size: usize,
    verdict: Option<String>,
    sigma: Option<Weight>,
    kernel_n: Option<usize>,
    kernel_limit: Option<u64>,
    runtime_ms: f64,
}

enum Job {
    Solve(DualInstance),
    Kernel(DualInstance),
}

fn bench_jobs(suite: Suite, seed: u64) -> Result<Vec<(u64, Job)>> {
    let mut jobs = Vec::new();
    match suite {
        Suite::FptScaling => {
            for k in 2..=8u64 {
                let s = seed + k;
                let g = planted_instance(200, k as usize - 1, 24, 50, s)?;
                jobs.push((s, Job::Solve(DualInstance::new(g, k)?)));
            }
        }
        Suite::FptScalingN => {
            for (i, n) in [50usize, 100, 200, 400, 800].into_iter().enumerate() {
                let s = seed + i as u64;
                let g = planted_instance(n, 5, 24, 50, s)?;
                jobs.push((s, Job::Solve(DualInstance::new(g, 6)?)));
            }
        }
        Suite::Kernel => {
            for i in 0..48u64 {
                let s = seed + i;
                let k = 2 + i % 5;
                let n = 20 + 10 * (i % 8) as usize;
                let g = if i % 2 == 0 {
                    random_graph(n, 0.9, 10, s)?
                } else {
                    planted_instance(n, k as usize - 1, 6, 10, s)?
                };
                jobs.push((s, Job::Kernel(DualInstance::new(g, k)?)));
            }
        }
    }
    Ok(jobs)
}

fn median_ms(reps: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..reps.max(1))
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    round_ms(times[times.len() / 2])
}

fn run_job(suite: &'static str, index: usize, seed: u64, job: &Job, reps: usize) -> Result<BenchRow> {
    let (inst, mut row) = match job {
        Job::Solve(inst) | Job::Kernel(inst) => (
            inst,
            BenchRow {
                suite,
                index,
                seed,
                n: inst.graph.n(),
                m: inst.graph.edge_count(),
                k: inst.k,
                antimatching_size: maximum_antimatching(&inst.graph).len(),
                verdict: None,
                sigma: None,
                kernel_n: None,
                kernel_limit: None,
                runtime_ms: 0.0,
            },
        ),
    };
    match job {
        Job::Solve(_) => {
            let ans = solve_dual(inst)?;
            row.verdict = Some(ans.verdict.to_string());
            row.sigma = ans.sigma;
            row.runtime_ms = median_ms(reps, || {
                solve_dual(inst).expect("solved once already");
            });
        }
        Job::Kernel(_) => {
            let trace = kernelize(inst);
            row.verdict = trace.shortcut.map(|v| v.to_string());
            row.kernel_n = Some(trace.reduced.graph.n());
            row.kernel_limit = kernel_bound(inst.k).and_then(|b| u64::try_from(b).ok());
            row.runtime_ms = median_ms(reps, || {
                kernelize(inst);
            });
        }
    }
    Ok(row)
}

/// Runs a suite on a pool of `jobs` threads. Rows follow input order, so
/// everything but `runtime_ms` is independent of the pool size.
pub fn bench(suite: Suite, opts: BenchOptions) -> Result<Output> {
    let name = match suite {
        Suite::FptScaling => "fpt-scaling",
        Suite::FptScalingN => "fpt-scaling-n",
        Suite::Kernel => "kernel",
    };
    let jobs = bench_jobs(suite, opts.seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<BenchRow> = pool.install(|| {
        jobs.par_iter()
            .enumerate()
            .map(|(i, (seed, job))| run_job(name, i, *seed, job, opts.reps))
            .collect::<Result<_>>()
    })?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        writer.serialize(row).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(Output {
        stdout: String::from_utf8(bytes).expect("csv output is UTF-8"),
        code: 0,
    })
}
