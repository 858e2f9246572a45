use super::frobenius::frobenius_hat;
use super::inertia::inertia_group;
use super::{CliffordError, Verification};
use crate::cocycle::{extend_to_projective, is_coboundary, quotient_factor_set};
use crate::exactfield::{EchelonBasis, Matrix};
use crate::groupcore::{all_subgroups, quotient_group, Subgroup};
use crate::meataxe::{end_ring, hom_basis_reps, is_irreducible};
use crate::repmod::{induce, Representation};

/// Status of one sufficient condition for `T = N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    Holds,
    Fails(String),
    NotEvaluated(String),
}

impl Condition {
    pub fn holds(&self) -> bool {
        matches!(self, Condition::Holds)
    }
}

#[derive(Clone, Debug)]
pub struct NarrReport {
    pub inertia: Subgroup,
    /// Post-composition with `w -> 1 (x) w` followed by the hat map sends
    /// `End_N(W)` onto `End_G(ind W)`.
    pub surjective: Condition,
    /// The action of `N` on `W` extends to the inertia group.
    pub extends: Condition,
    /// `W` is one-dimensional and the inertia group splits over `N`.
    pub split_linear: Condition,
    /// Conditions that cannot be decided over a finite field, with the reason.
    pub untestable: Vec<(String, String)>,
    /// One clause per condition: holding implies `T = N`.
    pub verification: Verification,
}

/// A subgroup `H` of `group` with `H N = group` and `H ∩ N = 1`.
pub fn find_complement(group: &Subgroup, normal: &Subgroup) -> Option<Subgroup> {
    let wanted = group.order() / normal.order();
    all_subgroups(group)
        .into_iter()
        .find(|h| h.order() == wanted && h.intersect(normal).is_trivial())
}

fn surjective(w: &Representation, v: &Representation) -> Result<Condition, CliffordError> {
    let field = w.field();
    let ends = end_ring(&w.to_algebra_module())?.basis;
    let big = hom_basis_reps(v, v)?.basis;
    // w -> 1 (x) w: the identity coset comes first in the induced basis.
    let mut inclusion = Matrix::zeros(field, v.dim(), w.dim());
    for k in 0..w.dim() {
        inclusion.set(k, k, 1);
    }
    let mut span = EchelonBasis::new(field, v.dim() * v.dim());
    for d in &ends {
        span.insert(frobenius_hat(&(&inclusion * d), w, v)?.entries());
    }
    Ok(if span.len() == big.len() {
        Condition::Holds
    } else {
        Condition::Fails(format!(
            "image has dimension {}, End_G(V) has dimension {}",
            span.len(),
            big.len()
        ))
    })
}

fn extends(w: &Representation, t: &Subgroup) -> Result<Condition, CliffordError> {
    if !end_ring(&w.to_algebra_module())?.is_scalar {
        return Ok(Condition::NotEvaluated(
            "End_N(W) is larger than the base field".into(),
        ));
    }
    let x = extend_to_projective(w, t)?;
    let quotient = quotient_group(t, w.group())?;
    let gamma = quotient_factor_set(x.factor_set(), &quotient)?;
    Ok(match is_coboundary(&gamma) {
        Some(_) => Condition::Holds,
        None => Condition::Fails("obstruction class on T/N is nontrivial".into()),
    })
}

fn split_linear(w: &Representation, t: &Subgroup) -> Condition {
    if w.dim() != 1 {
        return Condition::Fails(format!("W has dimension {}", w.dim()));
    }
    match find_complement(t, w.group()) {
        Some(_) => Condition::Holds,
        None => Condition::Fails("T has no complement to N".into()),
    }
}

/// Evaluates the sufficient conditions for `T = N` under the hypothesis
/// that `ind W` is irreducible, and checks each one that holds.
pub fn narr_conditions(w: &Representation, group: &Subgroup) -> Result<NarrReport, CliffordError> {
    let normal = w.group();
    normal.normal_in(group)?;
    let v = induce(w, group);
    if !is_irreducible(&v.to_algebra_module())?.is_irreducible() {
        return Err(CliffordError::Precondition(
            "the induced module is reducible".into(),
        ));
    }
    let t = inertia_group(w, group)?.subgroup;
    let surjective = surjective(w, &v)?;
    let extends = extends(w, &t)?;
    let split_linear = split_linear(w, &t);
    let mut verification = Verification::default();
    let t_is_n = t == *normal;
    for (id, c) in [("a", &surjective), ("e", &extends), ("f", &split_linear)] {
        match c {
            Condition::NotEvaluated(reason) => verification.skip(id, reason.clone()),
            _ => verification.check(id, !c.holds() || t_is_n, || {
                format!("condition holds but T has order {} and N order {}", t.order(), normal.order())
            }),
        }
    }
    let reason = "every finite field has proper finite extensions";
    let untestable = ["b", "c", "d"]
        .iter()
        .map(|id| (id.to_string(), reason.to_string()))
        .collect();
    Ok(NarrReport {
        inertia: t,
        surjective,
        extends,
        split_linear,
        untestable,
        verification,
    })
}
