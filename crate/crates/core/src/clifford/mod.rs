//! Witness-producing verifiers for Clifford theory: inertia groups, the two
//! Clifford stages, the correspondence, gluing hypotheses, Gallagher, direct
//! products and Frobenius reciprocity.

mod forma;
mod frobenius;
mod inertia;
mod narr;
mod products;
mod stages;

pub use forma::factor_intertwiner;
pub use frobenius::{frobenius_hat, frobenius_unhat, verify_frobenius};
pub use inertia::{
    enumerate_irreducibles, inertia_group, lies_over, normal_conjugation_witness, InertiaResult,
};
pub use narr::{find_complement, narr_conditions, Condition, NarrReport};
pub use products::{outer_tensor, verify_direct_product, verify_gallagher, DirectProductReport};
pub use stages::{
    verify_correspondence, verify_stage1, verify_stage2, CorrespondenceReport, Stage1Report,
};

use crate::cocycle::CocycleError;
use crate::groupcore::GroupError;
use crate::meataxe::MeataxeError;
use crate::repmod::RepError;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CliffordError {
    #[error("module is reducible")]
    Reducible,
    #[error("endomorphism ring is not the base field")]
    NotScalarEnd,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("matrix is not an intertwiner")]
    NotIntertwiner,
    #[error("intertwiner does not factor as S (x) 1")]
    NotFactorizable,
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Rep(#[from] RepError),
    #[error("{0}")]
    Meataxe(#[from] MeataxeError),
    #[error("{0}")]
    Cocycle(#[from] CocycleError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The clause cannot be decided here; the reason is reported.
    NotEvaluated(String),
}

/// Clause-by-clause outcome of one verifier run, in evaluation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub clauses: Vec<(String, Outcome)>,
}

impl Verification {
    pub fn check(&mut self, id: &str, ok: bool, detail: impl FnOnce() -> String) {
        let outcome = if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(detail())
        };
        self.clauses.push((id.to_string(), outcome));
    }

    pub fn skip(&mut self, id: &str, reason: impl Into<String>) {
        self.clauses
            .push((id.to_string(), Outcome::NotEvaluated(reason.into())));
    }

    pub fn extend(&mut self, prefix: &str, other: Verification) {
        for (id, outcome) in other.clauses {
            self.clauses.push((format!("{prefix}{id}"), outcome));
        }
    }

    /// No clause failed.
    pub fn passed(&self) -> bool {
        !self
            .clauses
            .iter()
            .any(|(_, o)| matches!(o, Outcome::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &str)> {
        self.clauses.iter().filter_map(|(id, o)| match o {
            Outcome::Fail(m) => Some((id.as_str(), m.as_str())),
            _ => None,
        })
    }
}
