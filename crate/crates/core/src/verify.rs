//! The verification manifest: a fixed, ordered list of check instances over
//! a chosen set of `α` values, run in parallel with results kept in manifest
//! order.

use std::fmt;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::descriptor::Model;
use crate::eop::{alt_ode_check, eop_solve, gbar_build, reduction_check, EopFamily, Reduction};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};
use crate::numerics::{self, SolverConfig};
use crate::report::{CheckEntry, VerificationReport};
use crate::susy::{build_extension, wronskian3_identities, Case, Convention, ExtendedPotential, ExtensionSpec};

/// Relative tolerance for numeric spectra.
pub const SPECTRUM_TOL: f64 = 1e-6;
/// Off-diagonal Gram entries relative to the geometric mean of the norms.
pub const ORTHOGONALITY_TOL: f64 = 1e-8;
/// Levels compared numerically.
pub const NUMERIC_LEVELS: usize = 5;
/// Members of a family entering the Gram matrix (`ν = 0..=6`).
pub const GRAM_SIZE: usize = 7;
/// Highest `ν` solved in the exact polynomial checks.
pub const EOP_MAX_NU: usize = 10;
/// Largest `m₁ + m₂` in the auxiliary-Wronskian sweep.
pub const GBAR_MAX_M: u32 = 8;
const QUADRATURE_NODES: usize = 150;

/// Check kinds, as accepted by `--check`.
pub const KINDS: [&str; 16] = [
    "ssusy",
    "seed-wronskian",
    "reduction-a",
    "reduction-b",
    "reduction-c",
    "reduction-d",
    "reduction-e",
    "distinct-cubic",
    "gbar",
    "alt-ode",
    "eop-ode",
    "k3",
    "spectrum",
    "isospectral",
    "orthogonality",
    "nodes",
];

/// An algebraic family given by its seed indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyKey {
    pub case: Case,
    pub alpha: Rational,
    pub m1: u32,
    pub m2: u32,
}

impl FamilyKey {
    fn family(&self) -> Result<EopFamily> {
        EopFamily::algebraic(self.case, self.alpha.clone(), self.m1, self.m2)
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case={},alpha={},m1={},m2={}", self.case, self.alpha, self.m1, self.m2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Ssusy(ExtensionSpec),
    SeedWronskian(ExtensionSpec),
    Reduction(Reduction, Rational),
    GBar(FamilyKey),
    AltOde(FamilyKey),
    EopOde(FamilyKey),
    K3(Rational),
    Spectrum(ExtensionSpec),
    Isospectral(ExtensionSpec),
    Orthogonality(ExtensionSpec),
    Nodes(ExtensionSpec),
}

fn spec_label(s: &ExtensionSpec) -> String {
    format!("case={},l={},m1={},m2={},omega={}", s.case, s.l, s.m1, s.m2, s.omega)
}

impl Check {
    pub fn kind(&self) -> &'static str {
        match self {
            Check::Ssusy(_) => "ssusy",
            Check::SeedWronskian(_) => "seed-wronskian",
            Check::Reduction(r, _) => r.id(),
            Check::GBar(_) => "gbar",
            Check::AltOde(_) => "alt-ode",
            Check::EopOde(_) => "eop-ode",
            Check::K3(_) => "k3",
            Check::Spectrum(_) => "spectrum",
            Check::Isospectral(_) => "isospectral",
            Check::Orthogonality(_) => "orthogonality",
            Check::Nodes(_) => "nodes",
        }
    }

    pub fn id(&self) -> String {
        let args = match self {
            Check::Ssusy(s)
            | Check::SeedWronskian(s)
            | Check::Spectrum(s)
            | Check::Isospectral(s)
            | Check::Orthogonality(s)
            | Check::Nodes(s) => spec_label(s),
            Check::Reduction(_, a) | Check::K3(a) => format!("alpha={a}"),
            Check::GBar(k) | Check::AltOde(k) | Check::EopOde(k) => k.to_string(),
        };
        format!("{}[{args}]", self.kind())
    }

    /// Never panics on a failing identity: errors become failing entries.
    pub fn run(&self) -> CheckEntry {
        let id = self.id();
        match self.evaluate() {
            Ok(mut e) => {
                e.check_id = id;
                e
            }
            Err(err) => CheckEntry::exact_fail(id, err.to_string()),
        }
    }

    fn evaluate(&self) -> Result<CheckEntry> {
        match self {
            Check::Ssusy(s) => build_extension(s)?.ssusy_check(),
            Check::SeedWronskian(s) => build_extension(s)?.seed_wronskian_check(),
            Check::Reduction(r, a) => reduction_check(*r, a),
            Check::GBar(k) => gbar_build(&k.family()?).map(|_| CheckEntry::exact_pass("")),
            Check::AltOde(k) => {
                let fam = k.family()?;
                for nu in 0..=3 {
                    alt_ode_check(&fam, &eop_solve(&fam, fam.mu + nu)?)?;
                }
                Ok(CheckEntry::exact_pass(""))
            }
            Check::EopOde(k) => eop_ode(&k.family()?, EOP_MAX_NU),
            Check::K3(a) => wronskian3_identities(a),
            Check::Spectrum(s) => spectrum(&build_extension(s)?),
            Check::Isospectral(s) => isospectral(&build_extension(s)?),
            Check::Orthogonality(s) => orthogonality(&Model::Extended(Box::new(build_extension(s)?))),
            Check::Nodes(s) => nodes(&Model::Extended(Box::new(build_extension(s)?))),
        }
    }
}

/// Unique monic solutions of exact degree with zero residual, `ν = 0..=max_nu`.
pub fn eop_ode(fam: &EopFamily, max_nu: usize) -> Result<CheckEntry> {
    for nu in 0..=max_nu {
        let n = fam.mu + nu;
        let y = eop_solve(fam, n)?;
        if y.y.degree() != Some(n) || y.y.leading() != Some(&rat(1, 1)) {
            return Err(Error::identity(format!("eop-ode n={n}"), "not monic of exact degree"));
        }
        let r = fam.residual(&y.y, n);
        if !r.is_zero() {
            return Err(Error::identity(format!("eop-ode n={n}"), r));
        }
    }
    Ok(CheckEntry::exact_pass("").with_detail(format!("nu=0..{max_nu}")))
}

fn numeric_config(omega: &Rational) -> SolverConfig {
    SolverConfig {
        n_eigen: NUMERIC_LEVELS,
        ..SolverConfig::for_omega(omega)
    }
}

/// Numeric levels of the extended potential against the closed-form energies,
/// under both conventions.
pub fn spectrum(pot: &ExtendedPotential) -> Result<CheckEntry> {
    let cfg = numeric_config(pot.omega());
    let mut worst = 0.0f64;
    for conv in [Convention::Partner, Convention::ConstantDropped] {
        let formula: Vec<Rational> = (0..NUMERIC_LEVELS as u32).map(|nu| pot.spectrum_energy(nu, conv)).collect();
        let rep = numerics::spectrum_report(&pot.v2(conv), &formula, &cfg)?;
        worst = worst.max(rep.max_rel_error);
    }
    Ok(CheckEntry::numeric("", worst, SPECTRUM_TOL))
}

/// Numeric levels of the starting and extended potentials agree.
pub fn isospectral(pot: &ExtendedPotential) -> Result<CheckEntry> {
    let cfg = numeric_config(pot.omega());
    let a = numerics::eig_solve(&pot.v1(), &cfg)?;
    let b = numerics::eig_solve(&pot.v2(Convention::Partner), &cfg)?;
    Ok(CheckEntry::numeric("", numerics::max_relative_gap(&a, &b), SPECTRUM_TOL))
}

/// Gram matrix of the first [`GRAM_SIZE`] members is diagonal.
pub fn orthogonality(model: &Model) -> Result<CheckEntry> {
    let fam = model.family();
    let ys = crate::eop::eop_sequence(&fam, GRAM_SIZE)?;
    let gram = numerics::gram_matrix(&fam, &ys, QUADRATURE_NODES)?;
    Ok(CheckEntry::numeric("", numerics::max_offdiagonal_ratio(&gram), ORTHOGONALITY_TOL))
}

/// The `ν`-th numeric eigenvector and `ψ_ν` built from `y_{μ+ν}` both have `ν` sign changes.
pub fn nodes(model: &Model) -> Result<CheckEntry> {
    let omega = model.omega().to_f64().expect("finite omega");
    let cfg = numeric_config(model.omega());
    let fam = model.family();
    let (xs, h) = numerics::grid(cfg.x_max, cfg.n_points);
    let samples = numerics::sample_potential(&model.potential(Convention::ConstantDropped), &xs)?;
    let pairs = numerics::fd_eigenpairs(&samples, h, NUMERIC_LEVELS);
    for (nu, (_, vec)) in pairs.iter().enumerate() {
        let y = eop_solve(&fam, fam.mu + nu)?;
        let psi = xs
            .iter()
            .map(|&x| numerics::wavefunction(&fam, &y, omega, x))
            .collect::<Result<Vec<_>>>()?;
        let numeric = numerics::sign_changes(vec, 1e-8);
        let built = numerics::sign_changes(&psi, 1e-8);
        if numeric != nu || built != nu {
            return Err(Error::identity(
                format!("nodes nu={nu}"),
                format!("numeric eigenvector has {numeric}, wavefunction has {built}"),
            ));
        }
    }
    Ok(CheckEntry::exact_pass(""))
}

fn l_of_alpha(alpha: &Rational) -> Option<u32> {
    let l = alpha - rat(1, 2);
    (l.is_integer() && l >= rat(0, 1)).then(|| l.to_integer().to_u32()).flatten()
}

/// Small valid constructions at `l`, at most three per case.
fn small_specs(l: u32) -> Vec<ExtensionSpec> {
    let pairs: [(Case, [(u32, u32); 3]); 3] = [
        (Case::I, [(0, 1), (1, 2), (1, 3)]),
        (Case::II, [(0, 2), (1, 2), (1, 3)]),
        (Case::III, [(0, 0), (1, 1), (2, 1)]),
    ];
    pairs
        .iter()
        .flat_map(|(case, ms)| ms.iter().map(move |&(m1, m2)| ExtensionSpec::new(*case, l, m1, m2, rat(1, 1))))
        .filter(|s| build_extension(s).is_ok())
        .collect()
}

/// One numeric instance per case at `l`, preferring `(1, 2)` for cases i/ii and `(1, 1)` for case iii.
fn numeric_specs(l: u32) -> Vec<ExtensionSpec> {
    [(Case::I, 1, 2), (Case::II, 1, 2), (Case::III, 1, 1)]
        .into_iter()
        .map(|(c, m1, m2)| ExtensionSpec::new(c, l, m1, m2, rat(1, 1)))
        .filter(|s| build_extension(s).is_ok())
        .collect()
}

fn gbar_families(alpha: &Rational) -> Vec<FamilyKey> {
    let mut out = Vec::new();
    for case in [Case::I, Case::II] {
        for m2 in 1..=GBAR_MAX_M {
            for m1 in 0..m2.min(GBAR_MAX_M - m2 + 1) {
                let key = FamilyKey {
                    case,
                    alpha: alpha.clone(),
                    m1,
                    m2,
                };
                if key.family().is_ok() {
                    out.push(key);
                }
            }
        }
    }
    out
}

fn eop_families(alpha: &Rational) -> Vec<FamilyKey> {
    [
        (Case::I, 0, 2),
        (Case::I, 1, 2),
        (Case::I, 1, 3),
        (Case::II, 0, 2),
        (Case::II, 1, 2),
        (Case::III, 0, 1),
        (Case::III, 1, 0),
        (Case::III, 1, 1),
    ]
    .into_iter()
    .map(|(case, m1, m2)| FamilyKey {
        case,
        alpha: alpha.clone(),
        m1,
        m2,
    })
    .filter(|k| k.family().is_ok())
    .collect()
}

pub fn default_alphas() -> Vec<Rational> {
    vec![rat(3, 2), rat(5, 2), rat(7, 2), rat(9, 2)]
}

/// Every check instance for the given `α` values, in a fixed order.
pub fn full_manifest(alphas: &[Rational]) -> Vec<Check> {
    let mut out = Vec::new();
    for a in alphas {
        let specs = l_of_alpha(a).map(small_specs).unwrap_or_default();
        out.extend(specs.iter().cloned().map(Check::Ssusy));
        out.extend(specs.into_iter().map(Check::SeedWronskian));
        out.extend(Reduction::ALL.iter().map(|r| Check::Reduction(*r, a.clone())));
        let gb = gbar_families(a);
        out.extend(gb.iter().cloned().map(Check::GBar));
        out.extend(gb.into_iter().map(Check::AltOde));
        out.extend(eop_families(a).into_iter().map(Check::EopOde));
        out.push(Check::K3(a.clone()));
        let numeric = l_of_alpha(a).map(numeric_specs).unwrap_or_default();
        out.extend(numeric.iter().cloned().map(Check::Spectrum));
        out.extend(numeric.iter().cloned().map(Check::Isospectral));
        out.extend(numeric.iter().cloned().map(Check::Orthogonality));
        out.extend(numeric.into_iter().map(Check::Nodes));
    }
    out
}

/// The checks that concern one constructed potential.
pub fn potential_manifest(pot: &ExtendedPotential) -> Vec<Check> {
    let s = pot.spec.clone();
    let key = FamilyKey {
        case: s.case,
        alpha: pot.alpha.clone(),
        m1: s.m1,
        m2: s.m2,
    };
    let mut out = vec![
        Check::Ssusy(s.clone()),
        Check::SeedWronskian(s.clone()),
        Check::EopOde(key.clone()),
    ];
    if s.case != Case::III {
        out.push(Check::GBar(key.clone()));
        out.push(Check::AltOde(key));
    }
    out.extend([
        Check::Spectrum(s.clone()),
        Check::Isospectral(s.clone()),
        Check::Orthogonality(s.clone()),
        Check::Nodes(s),
    ]);
    out
}

/// Keeps checks whose kind is in `kinds` (all when empty).
pub fn select(checks: Vec<Check>, kinds: &[String]) -> Result<Vec<Check>> {
    if let Some(bad) = kinds.iter().find(|k| !KINDS.contains(&k.as_str())) {
        return Err(Error::Parse(format!("unknown check kind `{bad}`")));
    }
    Ok(checks
        .into_iter()
        .filter(|c| kinds.is_empty() || kinds.iter().any(|k| k == c.kind()))
        .collect())
}

/// Runs in parallel; entries come back in manifest order.
pub fn run(checks: &[Check]) -> VerificationReport {
    checks.par_iter().map(Check::run).collect::<Vec<_>>().into_iter().collect()
}
