//! `lss`: validate instances, compute spectra and the functors Ω / Σ, and run
//! the law suites from the command line.
//!
//! Exit codes: 0 when every checked law holds, 1 when some law fails or an
//! instance is invalid, 2 on usage, I/O or JSON syntax errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lss_core::bits::{self, PointSet};
use lss_core::duality::{
    self, check_naturality_counit, check_naturality_unit, check_triangle_pair, check_triangle_space,
    hofmann_lawson_pair, hofmann_lawson_space, run_suite, stone_roundtrip_pair, stone_roundtrip_space,
    AdjunctionReport, SuiteReport,
};
use lss_core::generate;
use lss_core::io::{self, FormatError, Instance, InstanceBundle, Provenance};
use lss_core::realline::{self, classify_map, frame_hom_verdict};
use lss_core::spectrum::{check_delta_frame_hom, spectrum_space};
use lss_core::{Bounds, FramePair, LocallySmallSpace, SpaceMap, SpecialLocalicMap};

#[derive(Parser)]
#[command(name = "lss", version, about = "Frames, spectra and locally small spaces, checked exactly")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for suite runs (defaults to all cores).
    #[arg(long, env = "LSS_JOBS", global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate an instance file of any kind.
    Validate { file: PathBuf },
    /// Primes, the Δ table and the hull-kernel topology of a lattice or frame pair.
    Spectrum { file: PathBuf },
    /// Bounded / continuous / weakly continuous for a space map or catalog map.
    ClassifyMap { file: PathBuf },
    /// The frame pair Ω(X) of a locally small space.
    Omega { file: PathBuf },
    /// The locally small space Σ(P) of a frame pair.
    Sigma { file: PathBuf },
    /// Stone-type round trip for a space or frame pair.
    Roundtrip { file: PathBuf },
    /// Triangle identities and naturality for an object or morphism.
    Adjunction { file: PathBuf },
    /// Hofmann–Lawson certificates over generated instances.
    HlSuite(HlArgs),
    /// The classification table of the real-line catalog maps.
    #[command(name = "realline-table")]
    RealLineTable,
}

#[derive(Args)]
struct HlArgs {
    /// Enumerate every poset (and topology) on up to `n` points.
    #[arg(long, conflicts_with_all = ["seed", "count"])]
    exhaustive: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// Points per random poset / space.
    #[arg(long, default_value_t = 4)]
    size: usize,
}

/// The result of one command: a JSON document, its text rendering, and
/// whether every checked law held.
struct Outcome {
    json: Value,
    text: String,
    passed: bool,
}

impl Outcome {
    fn info(json: Value, text: String) -> Self {
        Outcome { json, text, passed: true }
    }

    fn suite(report: SuiteReport) -> Self {
        let text = render_suite(&report);
        Outcome {
            passed: report.passed(),
            json: serde_json::to_value(&report).expect("reports serialize"),
            text,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let bounds = Bounds::from_env();
    match run(&cli.command, &bounds) {
        Ok(out) => {
            match cli.global.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON prints")),
                Format::Text => print!("{}", out.text),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let invalid = e.downcast_ref::<FormatError>().is_some_and(|f| !matches!(f, FormatError::Json { .. }));
            match cli.global.format {
                Format::Json => println!("{}", json!({ "error": format!("{e:#}"), "valid": !invalid })),
                Format::Text => eprintln!("error: {e:#}"),
            }
            ExitCode::from(if invalid { 1 } else { 2 })
        }
    }
}

fn load(path: &Path, bounds: &Bounds) -> Result<InstanceBundle> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut bundle = io::parse_instance(&text, bounds).map_err(anyhow::Error::new)?;
    bundle.provenance.get_or_insert(Provenance::File(path.display().to_string()));
    Ok(bundle)
}

fn run(cmd: &Command, b: &Bounds) -> Result<Outcome> {
    match cmd {
        Command::Validate { file } => validate(&load(file, b)?),
        Command::Spectrum { file } => spectrum(&as_pair(load(file, b)?)?, b),
        Command::ClassifyMap { file } => classify(load(file, b)?),
        Command::Omega { file } => omega(&as_space(load(file, b)?)?),
        Command::Sigma { file } => sigma(&as_pair(load(file, b)?)?, b),
        Command::Roundtrip { file } => roundtrip(load(file, b)?, b),
        Command::Adjunction { file } => adjunction(load(file, b)?, b),
        Command::HlSuite(args) => hl_suite(args, b),
        Command::RealLineTable => realline_table(),
    }
}

fn as_pair(bundle: InstanceBundle) -> Result<FramePair> {
    match bundle.instance {
        Instance::FramePair(p) => Ok(p),
        Instance::Lattice(l) => Ok(FramePair::full(l)?),
        other => Err(anyhow!("expected a lattice or frame pair, found a {}", other.kind())),
    }
}

fn as_space(bundle: InstanceBundle) -> Result<LocallySmallSpace> {
    match bundle.instance {
        Instance::Space(x) => Ok(x),
        Instance::Topology(t) => Ok(LocallySmallSpace::new(t.labels().to_vec(), t.opens().to_vec())?),
        other => Err(anyhow!("expected a space, found a {}", other.kind())),
    }
}

// ---------------------------------------------------------------------------
// Rendering helpers.

fn set_labels(labels: &[String], set: PointSet) -> Vec<String> {
    bits::points(set).map(|i| labels[i].clone()).collect()
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn render_report(out: &mut String, r: &AdjunctionReport) {
    for law in &r.laws {
        let mark = if law.pass { "pass" } else { "FAIL" };
        let _ = writeln!(out, "  {mark}  {}", law.name);
        if let Some(w) = &law.witness {
            let _ = writeln!(out, "        witness: {w}");
        }
    }
}

fn render_suite(s: &SuiteReport) -> String {
    let mut out = String::new();
    if s.reports.len() <= 8 {
        for r in &s.reports {
            let _ = writeln!(out, "{}", r.instance);
            render_report(&mut out, r);
        }
    } else {
        for r in s.failing() {
            let _ = writeln!(out, "{}", r.instance);
            render_report(&mut out, r);
        }
    }
    let _ = writeln!(
        out,
        "{} instance(s), {} law check(s), {} failure(s)",
        s.reports.len(),
        s.law_count(),
        s.failure_count()
    );
    out
}

fn error_report(id: &str, e: impl std::fmt::Display) -> AdjunctionReport {
    let mut r = AdjunctionReport::new(id);
    r.error("precondition", e);
    r
}

// ---------------------------------------------------------------------------
// Commands.

fn validate(bundle: &InstanceBundle) -> Result<Outcome> {
    let kind = bundle.instance.kind();
    let summary = match &bundle.instance {
        Instance::Lattice(l) => format!("{} elements", l.size()),
        Instance::FramePair(p) => format!("{} elements, {} designated", p.frame().size(), p.designated().len()),
        Instance::Topology(t) => format!("{} points, {} opens", t.points(), t.opens().len()),
        Instance::Space(x) => format!("{} points, {} smops", x.points(), x.smops().len()),
        Instance::SpaceMap(f) => format!("{} → {} points", f.source().points(), f.target().points()),
        Instance::FrameHom(h) => format!("{} → {} elements", h.source().frame().size(), h.target().frame().size()),
        Instance::RealSet(s) => s.to_string(),
        Instance::CatalogMap(m) => m.name(),
    };
    Ok(Outcome::info(
        json!({ "valid": true, "kind": kind, "summary": summary, "instance": io::instance_to_value(bundle) }),
        format!("valid {kind}: {summary}\n"),
    ))
}

fn spectrum(p: &FramePair, b: &Bounds) -> Result<Outcome> {
    let l = p.frame();
    let s = spectrum_space(l, p.designated())?;
    let check = check_delta_frame_hom(l, b)?;
    let prime_labels: Vec<String> = s.spectrum.primes().iter().map(|&q| l.label(q)).collect();
    let delta: Vec<(String, Vec<String>)> = l
        .elements()
        .map(|a| (l.label(a), set_labels(&prime_labels, s.spectrum.delta(a))))
        .collect();
    let opens: Vec<Vec<String>> = s.topology.opens().iter().map(|&u| set_labels(&prime_labels, u)).collect();

    let mut text = format!("Spec = {}\nΔ:\n", braces(&prime_labels));
    for (a, d) in &delta {
        let _ = writeln!(text, "  {a} ↦ {}", braces(d));
    }
    let _ = writeln!(
        text,
        "hull-kernel topology: {}",
        opens.iter().map(|o| braces(o)).collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(
        text,
        "Δ frame homomorphism onto the topology: {}",
        if check.holds() { "pass" } else { "FAIL" }
    );
    let json = json!({
        "primes": prime_labels,
        "delta": delta.iter().map(|(a, d)| json!({ "element": a, "primes": d })).collect::<Vec<_>>(),
        "topology": { "carrier": prime_labels, "opens": opens },
        "delta_check": check,
    });
    Ok(Outcome { json, text, passed: check.holds() })
}

fn classify(bundle: InstanceBundle) -> Result<Outcome> {
    match bundle.instance {
        Instance::SpaceMap(f) => {
            let c = f.classify();
            let src = f.source().labels();
            let tgt = f.target().labels();
            let bounded_w = f.boundedness_failure().map(|u| set_labels(src, u));
            let cont_w = f
                .continuity_failure()
                .map(|(v, u)| json!({ "target_smop": set_labels(tgt, v), "source_smop": set_labels(src, u) }));
            let weak_w = f.weak_continuity_failure().map(|v| set_labels(tgt, v));
            // Bounded and continuous maps are weakly continuous.
            let consistent = !(c.bounded && c.continuous) || c.weakly_continuous;
            let mut text = String::new();
            let line = |name: &str, v: bool| format!("{name}: {}\n", if v { "yes" } else { "no" });
            text += &line("bounded", c.bounded);
            text += &line("continuous", c.continuous);
            text += &line("weakly continuous", c.weakly_continuous);
            if let Some(w) = &bounded_w {
                let _ = writeln!(text, "  unbounded on smop {}", braces(w));
            }
            if let Some(w) = &cont_w {
                let _ = writeln!(text, "  continuity witness: {w}");
            }
            if let Some(w) = &weak_w {
                let _ = writeln!(text, "  preimage of {} is not weakly open", braces(w));
            }
            Ok(Outcome {
                json: json!({
                    "bounded": c.bounded,
                    "continuous": c.continuous,
                    "weakly_continuous": c.weakly_continuous,
                    "witnesses": { "bounded": bounded_w, "continuous": cont_w, "weakly_continuous": weak_w },
                }),
                text,
                passed: consistent,
            })
        }
        Instance::CatalogMap(m) => {
            let c = classify_map(&m)?;
            let v = frame_hom_verdict(&m)?;
            let mut text = format!(
                "{}: bounded {}, continuous {}, weakly continuous {}; Ω-hom dominating {}, compatible {}\n",
                c.map, c.bounded, c.continuous, c.weakly_continuous, v.dominating, v.compatible
            );
            for w in c.witnesses.iter().chain(&v.witnesses) {
                let _ = writeln!(text, "  {} = {}: {}", w.property, w.holds, w.explanation);
            }
            let passed = c.bounded == v.dominating && c.continuous == v.compatible;
            Ok(Outcome { json: json!({ "classification": c, "verdict": v }), text, passed })
        }
        other => Err(anyhow!("expected a space map or catalog map, found a {}", other.kind())),
    }
}

fn omega(x: &LocallySmallSpace) -> Result<Outcome> {
    let o = duality::omega_object(x)?;
    let bundle = InstanceBundle { instance: Instance::FramePair(o.pair.clone()), provenance: None };
    let opens: Vec<String> = o.opens.iter().map(|&u| x.set_label(u)).collect();
    let designated: Vec<String> = o.pair.designated().iter().map(|&i| o.pair.frame().label(i)).collect();
    let text = format!(
        "Ω(X): {} weakly open sets {}\ndesignated (smops): {}\n",
        opens.len(),
        opens.join(", "),
        designated.join(", ")
    );
    Ok(Outcome::info(io::instance_to_value(&bundle), text))
}

fn sigma(p: &FramePair, b: &Bounds) -> Result<Outcome> {
    let s = duality::sigma_object(p, b)?;
    let bundle = InstanceBundle { instance: Instance::Space(s.space.clone()), provenance: None };
    let smops: Vec<String> = s.space.smops().iter().map(|&u| s.space.set_label(u)).collect();
    let text = format!(
        "Σ(P): points {}\nsmops: {}\n",
        braces(s.space.labels()),
        smops.join(", ")
    );
    Ok(Outcome::info(io::instance_to_value(&bundle), text))
}

fn roundtrip(bundle: InstanceBundle, b: &Bounds) -> Result<Outcome> {
    let report = match bundle.instance {
        Instance::Space(x) => stone_roundtrip_space("space", &x, b).unwrap_or_else(|e| error_report("space", e)),
        Instance::Topology(_) => {
            let x = as_space(bundle)?;
            stone_roundtrip_space("space", &x, b).unwrap_or_else(|e| error_report("space", e))
        }
        _ => {
            let p = as_pair(bundle)?;
            stone_roundtrip_pair("frame pair", &p, b).unwrap_or_else(|e| error_report("frame pair", e))
        }
    };
    Ok(Outcome::suite(SuiteReport::from_reports(vec![report])))
}

fn space_object_laws(id: &str, x: &LocallySmallSpace, b: &Bounds) -> AdjunctionReport {
    let mut r = check_triangle_space(id, x, b);
    r.absorb(check_naturality_unit(id, &SpaceMap::identity(x), b));
    r
}

fn pair_object_laws(id: &str, p: &FramePair, b: &Bounds) -> AdjunctionReport {
    let mut r = check_triangle_pair(id, p, b);
    r.absorb(check_naturality_counit(id, &SpecialLocalicMap::identity(p), b));
    r
}

fn adjunction(bundle: InstanceBundle, b: &Bounds) -> Result<Outcome> {
    let reports = match bundle.instance {
        Instance::SpaceMap(f) => vec![
            space_object_laws("source", f.source(), b),
            space_object_laws("target", f.target(), b),
            check_naturality_unit("map", &f, b),
        ],
        Instance::FrameHom(h) => {
            let mut reports = vec![
                pair_object_laws("source", h.source(), b),
                pair_object_laws("target", h.target(), b),
            ];
            match h.right_adjoint() {
                Ok(m) => reports.push(check_naturality_counit("localic map", &m, b)),
                Err(e) => reports.push(error_report("localic map", e)),
            }
            reports
        }
        Instance::Space(x) => vec![space_object_laws("space", &x, b)],
        Instance::Topology(_) => vec![space_object_laws("space", &as_space(bundle)?, b)],
        _ => vec![pair_object_laws("frame pair", &as_pair(bundle)?, b)],
    };
    Ok(Outcome::suite(SuiteReport::from_reports(reports)))
}

fn hl_suite(args: &HlArgs, b: &Bounds) -> Result<Outcome> {
    let (pairs, spaces, label) = match (args.exhaustive, args.seed) {
        (Some(n), _) => {
            let pairs = generate::frame_suite(n, b)?;
            let spaces = generate::space_suite(n.min(generate::EXHAUSTIVE_SPACE_POINTS))?;
            (pairs, spaces, format!("exhaustive ≤ {n}"))
        }
        (None, Some(seed)) => {
            let pairs = generate::random_frames(seed, args.count, args.size, b)?;
            let spaces = generate::random_spaces(seed, args.count, args.size)?;
            (pairs, spaces, format!("seed {seed}, {} of size {}", args.count, args.size))
        }
        (None, None) => return Err(anyhow!("pass --exhaustive <n> or --seed <s> [--count <k>]")),
    };
    let t0: Vec<LocallySmallSpace> = spaces.into_iter().filter(LocallySmallSpace::is_t0).collect();
    let ids: Vec<(usize, &FramePair)> = pairs.iter().enumerate().collect();
    let r1 = run_suite(&ids, |(i, p)| {
        let id = format!("frame pair #{i:04}");
        hofmann_lawson_pair(&id, p, b).unwrap_or_else(|e| error_report(&id, e))
    });
    let xs: Vec<(usize, &LocallySmallSpace)> = t0.iter().enumerate().collect();
    let r2 = run_suite(&xs, |(i, x)| {
        let id = format!("space #{i:04}");
        hofmann_lawson_space(&id, x, b).unwrap_or_else(|e| error_report(&id, e))
    });
    let report = r1.merge(r2);
    let mut out = Outcome::suite(report);
    out.text = format!(
        "Hofmann–Lawson certificates ({label}): {} frame pairs, {} T0 spaces\n{}",
        pairs.len(),
        t0.len(),
        out.text
    );
    Ok(out)
}

fn realline_table() -> Result<Outcome> {
    let table = realline::classification_table()?;
    let yn = |v: bool| if v { "yes" } else { "no" };
    let mut text = format!(
        "{:<8} {:<8} {:<11} {:<18} {:<11} {:<10}\n",
        "map", "bounded", "continuous", "weakly continuous", "dominating", "compatible"
    );
    for r in &table {
        let _ = writeln!(
            text,
            "{:<8} {:<8} {:<11} {:<18} {:<11} {:<10}",
            r.map,
            yn(r.bounded),
            yn(r.continuous),
            yn(r.weakly_continuous),
            yn(r.dominating),
            yn(r.compatible)
        );
    }
    text += "\nwitnesses:\n";
    for r in &table {
        for w in r.classification.witnesses.iter().chain(&r.verdict.witnesses).filter(|w| !w.holds) {
            let _ = writeln!(text, "  {} not {}: {}", r.map, w.property, w.explanation);
        }
    }
    Ok(Outcome::info(serde_json::to_value(&table)?, text))
}
