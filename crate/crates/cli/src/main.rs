use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use susyext_core::descriptor::{DescriptorCase, Model, PotentialDescriptor};
use susyext_core::eop::{eop_solve, EopExport};
use susyext_core::exactmath::{parse_rational, rational_to_f64, Rational};
use susyext_core::golden::golden_suite;
use susyext_core::numerics::{self, orthogonality_integral, SolverConfig};
use susyext_core::report::VerificationReport;
use susyext_core::susy::{distinct_classes, enumerate_candidates, Convention};
use susyext_core::verify;

/// Rationally extended radial oscillators and their exceptional polynomials.
#[derive(Parser)]
#[command(name = "susyext", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a potential and write its descriptor.
    Construct(ConstructArgs),
    /// Print bound-state energies.
    Spectrum(SpectrumArgs),
    /// Emit exceptional polynomial coefficients as JSON.
    Eop(EopArgs),
    /// Run identity and numeric checks.
    Verify(VerifyArgs),
    /// Compare the cubic examples with their closed forms.
    Golden(GoldenArgs),
    /// Write the potential and normalised wavefunctions on a grid as CSV.
    Sample(SampleArgs),
    /// List candidate degree-μ denominators and group them by equality.
    #[command(name = "explore-mu4")]
    ExploreMu4(ExploreArgs),
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct ConstructArgs {
    /// base, i, ii or iii
    #[arg(long)]
    case: DescriptorCase,
    #[arg(long)]
    l: u32,
    #[arg(long, default_value_t = 0)]
    m1: u32,
    #[arg(long, default_value_t = 0)]
    m2: u32,
    #[arg(long, default_value = "1", value_parser = rational)]
    omega: Rational,
    /// partner or constant-dropped
    #[arg(long, default_value = "partner")]
    convention: Convention,
    /// Descriptor path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SpectrumArgs {
    pot_file: PathBuf,
    #[arg(long, default_value_t = 5)]
    levels: usize,
    /// Also solve numerically and report relative errors.
    #[arg(long)]
    numeric: bool,
    /// Overrides the descriptor's convention.
    #[arg(long)]
    convention: Option<Convention>,
}

#[derive(Args)]
struct EopArgs {
    pot_file: PathBuf,
    /// Number of members, starting at degree μ.
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to the checks for one descriptor.
    pot_file: Option<PathBuf>,
    /// Run the whole manifest (the default without a descriptor).
    #[arg(long)]
    all: bool,
    /// Comma-separated α values for the manifest.
    #[arg(long, value_delimiter = ',', value_parser = rational)]
    alpha_set: Vec<Rational>,
    /// Check kinds to keep; repeat or separate with commas.
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<String>,
    /// Report path (JSON).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GoldenArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    pot_file: PathBuf,
    /// Defaults to 12/√ω.
    #[arg(long)]
    x_max: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    points: usize,
    /// Comma-separated levels ν.
    #[arg(long, value_delimiter = ',', default_value = "0")]
    nus: Vec<usize>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    convention: Option<Convention>,
}

#[derive(Args)]
struct ExploreArgs {
    #[arg(long, value_parser = rational, default_value = "7/2")]
    alpha: Rational,
    #[arg(long, default_value_t = 4)]
    mu: u32,
}

/// Error that maps to exit status 1 rather than 2.
#[derive(Debug)]
struct VerificationFailed(Vec<String>);

impl std::fmt::Display for VerificationFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} check(s) failed: {}", self.0.len(), self.0.join(", "))
    }
}

impl std::error::Error for VerificationFailed {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<VerificationFailed>() => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<()> {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Eop(a) => eop(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Golden(a) => golden(a),
        Command::Sample(a) => sample(a),
        Command::ExploreMu4(a) => explore(a),
    }
}

fn load(path: &Path) -> anyhow::Result<(PotentialDescriptor, Model)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = PotentialDescriptor::from_json(&text).with_context(|| format!("loading {}", path.display()))?;
    let m = d.model()?;
    Ok((d, m))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut s = io::stdout().lock();
            s.write_all(text.as_bytes())?;
            s.write_all(b"\n")?;
            Ok(())
        }
    }
}

fn construct(a: ConstructArgs) -> anyhow::Result<()> {
    let model = Model::build(a.case, a.l, a.m1, a.m2, a.omega)?;
    let d = PotentialDescriptor::from_model(&model, a.convention);
    eprintln!("mu = {}", d.mu);
    eprintln!("C = {}", d.c);
    eprintln!("admissible: yes (g has no zeros on z > 0)");
    if d.mu == 0 && d.case != DescriptorCase::Base {
        eprintln!("note: g is constant; the extension is a pure oscillator");
    }
    emit(a.out.as_deref(), &d.to_json())
}

fn spectrum(a: SpectrumArgs) -> anyhow::Result<()> {
    let (d, model) = load(&a.pot_file)?;
    let conv = a.convention.unwrap_or(d.convention);
    let formula = model.energies(a.levels, conv);
    let mut out = io::stdout().lock();
    if !a.numeric {
        writeln!(out, "nu\tenergy")?;
        for (nu, e) in formula.iter().enumerate() {
            writeln!(out, "{nu}\t{e}")?;
        }
        return Ok(());
    }
    let cfg = SolverConfig {
        n_eigen: a.levels.max(1),
        ..SolverConfig::for_omega(model.omega())
    };
    let rep = numerics::spectrum_report(&model.potential(conv), &formula, &cfg)?;
    writeln!(out, "nu\tenergy\tnumeric\trel_error")?;
    for (nu, ((e, n), r)) in formula.iter().zip(&rep.eigenvalues).zip(rep.relative_errors()).enumerate() {
        writeln!(out, "{nu}\t{e}\t{n:.12}\t{r:.3e}")?;
    }
    writeln!(out, "max_rel_error\t{:.3e}", rep.max_rel_error)?;
    Ok(())
}

fn eop(a: EopArgs) -> anyhow::Result<()> {
    let (_, model) = load(&a.pot_file)?;
    let fam = model.family();
    let rows = (0..a.count)
        .map(|nu| eop_solve(&fam, fam.mu + nu).map(|y| EopExport::new(&fam, &y)))
        .collect::<Result<Vec<_>, _>>()?;
    emit(a.out.as_deref(), &serde_json::to_string_pretty(&rows)?)
}

fn finish(report: VerificationReport, out: Option<&Path>) -> anyhow::Result<()> {
    let mut stdout = io::stdout().lock();
    for e in &report.entries {
        writeln!(stdout, "{e}")?;
    }
    if let Some(p) = out {
        fs::write(p, serde_json::to_string_pretty(&report)?).with_context(|| format!("writing {}", p.display()))?;
    }
    let passed = report.entries.iter().filter(|e| e.passed()).count();
    writeln!(stdout, "{passed}/{} passed", report.entries.len())?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(VerificationFailed(report.failing_ids().into_iter().map(String::from).collect()).into())
    }
}

fn verify_cmd(a: VerifyArgs) -> anyhow::Result<()> {
    let manifest = match (&a.pot_file, a.all) {
        (Some(_), true) => bail!("give either a descriptor or --all, not both"),
        (Some(p), false) => match load(p)?.1 {
            Model::Extended(pot) => verify::potential_manifest(&pot),
            Model::Oscillator { .. } => bail!("the bare oscillator has no construction to verify"),
        },
        (None, _) if a.alpha_set.is_empty() => verify::full_manifest(&verify::default_alphas()),
        (None, _) => verify::full_manifest(&a.alpha_set),
    };
    let checks = verify::select(manifest, &a.checks)?;
    if checks.is_empty() {
        bail!("no checks selected");
    }
    finish(verify::run(&checks), a.out.as_deref())
}

fn golden(a: GoldenArgs) -> anyhow::Result<()> {
    finish(golden_suite().into_iter().collect(), a.out.as_deref())
}

fn sample(a: SampleArgs) -> anyhow::Result<()> {
    if a.points == 0 {
        bail!("--points must be positive");
    }
    let (d, model) = load(&a.pot_file)?;
    let conv = a.convention.unwrap_or(d.convention);
    let omega = rational_to_f64(model.omega());
    let x_max = a.x_max.unwrap_or(12.0 / omega.sqrt());
    if !(x_max > 0.0 && x_max.is_finite()) {
        bail!("--x-max must be positive");
    }
    let pot = model.potential(conv);
    let fam = model.family();
    let mut waves = Vec::new();
    for &nu in &a.nus {
        let y = eop_solve(&fam, fam.mu + nu)?;
        let norm_z = orthogonality_integral(&fam, &y, &y, 150)?.doubled;
        let scale = 1.0 / (norm_z / (2.0 * omega).sqrt()).sqrt();
        waves.push((y, scale));
    }
    let mut csv = String::from("x,V");
    for nu in &a.nus {
        csv.push_str(&format!(",psi_{nu}"));
    }
    csv.push('\n');
    for i in 1..=a.points {
        let x = x_max * i as f64 / a.points as f64;
        csv.push_str(&format!("{x:.16e},{:.16e}", pot.eval(x)?));
        for (y, scale) in &waves {
            csv.push_str(&format!(",{:.16e}", scale * numerics::wavefunction(&fam, y, omega, x)?));
        }
        csv.push('\n');
    }
    fs::write(&a.out, csv).with_context(|| format!("writing {}", a.out.display()))
}

fn explore(a: ExploreArgs) -> anyhow::Result<()> {
    let cands = enumerate_candidates(&a.alpha, a.mu)?;
    let mut out = io::stdout().lock();
    writeln!(out, "alpha = {}, mu = {}: {} candidate(s)", a.alpha, a.mu, cands.len())?;
    for (k, class) in distinct_classes(&cands).iter().enumerate() {
        let c = class[0];
        writeln!(
            out,
            "class {k}: g = {}  admissible={}  realizable={}",
            c.g,
            c.admissible,
            class.iter().any(|c| c.realizable)
        )?;
        for c in class {
            writeln!(out, "    {}{}", c.label, if c.realizable { "" } else { "  (not realizable)" })?;
        }
    }
    Ok(())
}
