//! JSON descriptor for a constructed potential. Every derived field is
//! recomputed on load and must agree with what was stored.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::eop::EopFamily;
use crate::error::{Error, Result};
use crate::exactmath::{Poly, Rational};
use crate::qrf::Potential;
use crate::susy::{alpha_of, build_extension, oscillator_energy, Case, Convention, ExtendedPotential, ExtensionSpec};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DescriptorCase {
    /// The bare radial oscillator.
    Base,
    I,
    Ii,
    Iii,
}

impl DescriptorCase {
    pub fn as_case(&self) -> Option<Case> {
        match self {
            DescriptorCase::Base => None,
            DescriptorCase::I => Some(Case::I),
            DescriptorCase::Ii => Some(Case::II),
            DescriptorCase::Iii => Some(Case::III),
        }
    }
}

impl From<Case> for DescriptorCase {
    fn from(c: Case) -> Self {
        match c {
            Case::I => DescriptorCase::I,
            Case::II => DescriptorCase::Ii,
            Case::III => DescriptorCase::Iii,
        }
    }
}

impl fmt::Display for DescriptorCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_case() {
            None => f.write_str("base"),
            Some(c) => c.fmt(f),
        }
    }
}

impl FromStr for DescriptorCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("base") {
            Ok(DescriptorCase::Base)
        } else {
            s.parse::<Case>().map(Into::into)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialDescriptor {
    pub schema_version: u32,
    pub case: DescriptorCase,
    pub l: u32,
    pub m1: u32,
    pub m2: u32,
    #[serde(with = "crate::exactmath::rational_str")]
    pub omega: Rational,
    #[serde(with = "crate::exactmath::rational_str")]
    pub alpha: Rational,
    pub mu: usize,
    #[serde(rename = "C", with = "crate::exactmath::rational_str")]
    pub c: Rational,
    #[serde(with = "crate::exactmath::rational_str::vec")]
    pub g_coeffs: Vec<Rational>,
    #[serde(rename = "E1", with = "crate::exactmath::rational_str")]
    pub e1: Rational,
    #[serde(rename = "E2", with = "crate::exactmath::rational_str")]
    pub e2: Rational,
    pub convention: Convention,
}

/// What a descriptor stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Model {
    Oscillator { l: u32, omega: Rational },
    Extended(Box<ExtendedPotential>),
}

impl Model {
    pub fn build(case: DescriptorCase, l: u32, m1: u32, m2: u32, omega: Rational) -> Result<Self> {
        match case.as_case() {
            None => {
                if !omega.is_positive() {
                    return Err(Error::ConstraintViolation(format!("omega must be positive, got {omega}")));
                }
                Ok(Model::Oscillator { l, omega })
            }
            Some(c) => Ok(Model::Extended(Box::new(build_extension(&ExtensionSpec::new(c, l, m1, m2, omega))?))),
        }
    }

    pub fn omega(&self) -> &Rational {
        match self {
            Model::Oscillator { omega, .. } => omega,
            Model::Extended(p) => p.omega(),
        }
    }

    pub fn l(&self) -> u32 {
        match self {
            Model::Oscillator { l, .. } => *l,
            Model::Extended(p) => p.spec.l,
        }
    }

    pub fn mu(&self) -> usize {
        match self {
            Model::Oscillator { .. } => 0,
            Model::Extended(p) => p.mu,
        }
    }

    pub fn g(&self) -> Poly {
        match self {
            Model::Oscillator { .. } => Poly::one(),
            Model::Extended(p) => p.g.clone(),
        }
    }

    /// The final potential.
    pub fn potential(&self, convention: Convention) -> Potential {
        match self {
            Model::Oscillator { l, omega } => Potential::oscillator(*l as i64, omega.clone()),
            Model::Extended(p) => p.v2(convention),
        }
    }

    /// The starting potential, when there is one.
    pub fn partner(&self) -> Option<Potential> {
        match self {
            Model::Oscillator { .. } => None,
            Model::Extended(p) => Some(p.v1()),
        }
    }

    pub fn energy(&self, nu: u32, convention: Convention) -> Rational {
        match self {
            Model::Oscillator { l, omega } => oscillator_energy(*l, omega, nu),
            Model::Extended(p) => p.spectrum_energy(nu, convention),
        }
    }

    pub fn energies(&self, levels: usize, convention: Convention) -> Vec<Rational> {
        (0..levels as u32).map(|nu| self.energy(nu, convention)).collect()
    }

    pub fn family(&self) -> EopFamily {
        match self {
            Model::Oscillator { l, .. } => EopFamily::classical(alpha_of(*l)),
            Model::Extended(p) => EopFamily::from_extension(p),
        }
    }
}

impl PotentialDescriptor {
    pub fn from_model(model: &Model, convention: Convention) -> Self {
        match model {
            Model::Oscillator { l, omega } => PotentialDescriptor {
                schema_version: SCHEMA_VERSION,
                case: DescriptorCase::Base,
                l: *l,
                m1: 0,
                m2: 0,
                omega: omega.clone(),
                alpha: alpha_of(*l),
                mu: 0,
                c: Rational::zero(),
                g_coeffs: vec![Rational::one()],
                e1: Rational::zero(),
                e2: Rational::zero(),
                convention,
            },
            Model::Extended(p) => PotentialDescriptor {
                schema_version: SCHEMA_VERSION,
                case: p.spec.case.into(),
                l: p.spec.l,
                m1: p.spec.m1,
                m2: p.spec.m2,
                omega: p.omega().clone(),
                alpha: p.alpha.clone(),
                mu: p.mu,
                c: p.c_shift.clone(),
                g_coeffs: p.g.coeffs().to_vec(),
                e1: p.e1.clone(),
                e2: p.e2.clone(),
                convention,
            },
        }
    }

    /// Rebuilds the model from the defining fields and checks every derived one.
    pub fn model(&self) -> Result<Model> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                self.schema_version
            )));
        }
        let model = Model::build(self.case, self.l, self.m1, self.m2, self.omega.clone())?;
        let rebuilt = PotentialDescriptor::from_model(&model, self.convention);
        let base = self.case == DescriptorCase::Base;
        let mismatch = [
            ("alpha", self.alpha != rebuilt.alpha),
            ("mu", self.mu != rebuilt.mu),
            ("C", self.c != rebuilt.c),
            ("g_coeffs", self.g_coeffs != rebuilt.g_coeffs),
            ("E1", self.e1 != rebuilt.e1),
            ("E2", self.e2 != rebuilt.e2),
            ("m1", base && self.m1 != 0),
            ("m2", base && self.m2 != 0),
        ]
        .into_iter()
        .filter(|(_, bad)| *bad)
        .map(|(f, _)| f)
        .collect::<Vec<_>>();
        if !mismatch.is_empty() {
            return Err(Error::Parse(format!(
                "descriptor fields disagree with the reconstruction: {}",
                mismatch.join(", ")
            )));
        }
        Ok(model)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serialises")
    }

    /// Parses and validates.
    pub fn from_json(s: &str) -> Result<Self> {
        let d: PotentialDescriptor = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        d.model()?;
        Ok(d)
    }
}
