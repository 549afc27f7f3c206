//! Fixtures shared by the benchmarks.

use susyext_core::eop::EopFamily;
use susyext_core::exactmath::rat;
use susyext_core::susy::{build_extension, Case, ExtendedPotential, ExtensionSpec};

/// `(case, l, m1, m2)` instances at `ω = 1`.
pub const INSTANCES: [(Case, u32, u32, u32); 4] = [
    (Case::I, 2, 1, 2),
    (Case::II, 1, 1, 2),
    (Case::III, 1, 1, 1),
    (Case::III, 3, 2, 2),
];

pub fn spec(case: Case, l: u32, m1: u32, m2: u32) -> ExtensionSpec {
    ExtensionSpec::new(case, l, m1, m2, rat(1, 1))
}

pub fn extension(case: Case, l: u32, m1: u32, m2: u32) -> ExtendedPotential {
    build_extension(&spec(case, l, m1, m2)).expect("benchmark instances are admissible")
}

pub fn cubic() -> ExtendedPotential {
    extension(Case::III, 1, 1, 1)
}

pub fn cubic_family() -> EopFamily {
    EopFamily::from_extension(&cubic())
}

pub fn label(case: Case, l: u32, m1: u32, m2: u32) -> String {
    format!("{case}/l{l}/{m1},{m2}")
}
