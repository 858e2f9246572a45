//! Worked example families, the scenario file format, claim evaluation and
//! the suite runner with its text and JSON reports.

mod builders;
mod claims;
mod extension;
mod file;
mod report;
mod suite;

pub use builders::{build_crossed_product, build_radical_example, CrossedProduct, FactorTable};
pub use claims::{evaluate, Claim, ClaimId, Expected};
pub use extension::FiniteExtension;
pub use file::{parse_scenario, read_scenario_file};
pub use report::{Report, ReportEntry, Summary, Verdict};
pub use suite::{run_suite, SuiteConfig, SUITES};

use crate::exactfield::PrimeField;
use crate::groupcore::Subgroup;
use crate::repmod::Representation;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("t^{m} - {a} is reducible over F_{p}")]
    ReducibleRadical { p: u64, m: usize, a: u64 },
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("factor table violates the cocycle identity at ({s}, {t}, {u})")]
    InvalidCocycle { s: usize, t: usize, u: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("{0}")]
    Io(String),
}

/// A group, a normal subgroup, a module of the normal subgroup, and the
/// claims to check about them.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub id: String,
    pub field: PrimeField,
    pub group: Subgroup,
    pub normal: Subgroup,
    pub module_w: Representation,
    pub expected: Vec<Claim>,
    /// Present for crossed-product scenarios; enables the `crossed-*` claims.
    pub crossed: Option<CrossedProduct>,
}
