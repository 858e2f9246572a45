use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use super::report::{ReportEntry, Verdict};
use super::{Scenario, ScenarioError};
use crate::clifford::{
    enumerate_irreducibles, find_complement, inertia_group, lies_over, narr_conditions,
    verify_correspondence, verify_stage1, Condition,
};
use crate::cocycle::{extend_to_projective, is_coboundary, quotient_factor_set};
use crate::groupcore::quotient_group;
use crate::meataxe::{
    end_ring, hom_basis_reps, is_irreducible, is_isomorphic_reps, recognize_field_extension,
    FieldRecognition, Irreducibility, NotFieldWitness,
};
use crate::repmod::{conjugate_module, induce, restrict, Representation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// `W^g ~ W` for every `g`.
    Invariant,
    InertiaOrder,
    InducedIrreducible,
    /// `End_G(ind W)` is a field of the given degree.
    EndFieldDegree,
    /// The action of `N` on `W` extends to `G`.
    Extends,
    /// `G` splits over `N`.
    Split,
    /// Which sufficient conditions for `T = N` hold.
    NarrHolding,
    Stage1,
    Correspondence,
    CrossedDivision,
    /// Induced irreducibility agrees with the crossed product being a division ring.
    CrossedIff,
    EndDims,
}

impl ClaimId {
    pub const ALL: [ClaimId; 12] = [
        ClaimId::Invariant,
        ClaimId::InertiaOrder,
        ClaimId::InducedIrreducible,
        ClaimId::EndFieldDegree,
        ClaimId::Extends,
        ClaimId::Split,
        ClaimId::NarrHolding,
        ClaimId::Stage1,
        ClaimId::Correspondence,
        ClaimId::CrossedDivision,
        ClaimId::CrossedIff,
        ClaimId::EndDims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Invariant => "invariant",
            ClaimId::InertiaOrder => "inertia-order",
            ClaimId::InducedIrreducible => "induced-irreducible",
            ClaimId::EndFieldDegree => "end-field-degree",
            ClaimId::Extends => "extends",
            ClaimId::Split => "split",
            ClaimId::NarrHolding => "narr-holding",
            ClaimId::Stage1 => "stage1",
            ClaimId::Correspondence => "correspondence",
            ClaimId::CrossedDivision => "crossed-division",
            ClaimId::CrossedIff => "crossed-iff",
            ClaimId::EndDims => "end-dims",
        }
    }

    pub fn parse(name: &str) -> Option<ClaimId> {
        ClaimId::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Claims that only make sense with crossed-product data attached.
    pub fn needs_crossed(self) -> bool {
        matches!(
            self,
            ClaimId::CrossedDivision | ClaimId::CrossedIff | ClaimId::EndDims
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Bool(bool),
    Count(usize),
    /// Sorted subset of `{a, e, f}`.
    Conditions(Vec<char>),
    Pass,
    /// Recorded as information, never pass or fail.
    Record,
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Bool(b) => write!(f, "{b}"),
            Expected::Count(n) => write!(f, "{n}"),
            Expected::Conditions(c) if c.is_empty() => write!(f, "none"),
            Expected::Conditions(c) => {
                let parts: Vec<String> = c.iter().map(char::to_string).collect();
                write!(f, "{}", parts.join(","))
            }
            Expected::Pass => write!(f, "pass"),
            Expected::Record => write!(f, "record"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: ClaimId,
    pub expected: Expected,
}

impl Claim {
    /// Parses `<claim-id> <expected>`.
    pub fn parse(line: usize, text: &str) -> Result<Claim, ScenarioError> {
        let err = |message: String| ScenarioError::Parse { line, message };
        let mut toks = text.split_whitespace();
        let (Some(name), Some(value), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(err("claim must be `<id> <expected>`".into()));
        };
        let id = ClaimId::parse(name).ok_or_else(|| err(format!("unknown claim `{name}`")))?;
        let bad = || err(format!("bad expected value `{value}` for {name}"));
        let expected = match id {
            ClaimId::Invariant
            | ClaimId::InducedIrreducible
            | ClaimId::Extends
            | ClaimId::Split
            | ClaimId::CrossedDivision
            | ClaimId::CrossedIff => Expected::Bool(value.parse().map_err(|_| bad())?),
            ClaimId::InertiaOrder | ClaimId::EndFieldDegree => {
                Expected::Count(value.parse().map_err(|_| bad())?)
            }
            ClaimId::NarrHolding => {
                if value == "none" {
                    Expected::Conditions(Vec::new())
                } else {
                    let mut set = Vec::new();
                    for part in value.split(',') {
                        match part {
                            "a" | "e" | "f" => set.push(part.chars().next().unwrap()),
                            _ => return Err(bad()),
                        }
                    }
                    set.sort_unstable();
                    set.dedup();
                    Expected::Conditions(set)
                }
            }
            ClaimId::Stage1 | ClaimId::Correspondence if value == "pass" => Expected::Pass,
            ClaimId::EndDims if value == "record" => Expected::Record,
            _ => return Err(bad()),
        };
        Ok(Claim { id, expected })
    }
}

/// Evaluates every claim of the scenario, in order.
pub fn evaluate(scenario: &Scenario) -> Vec<ReportEntry> {
    scenario
        .expected
        .par_iter()
        .map(|claim| {
            let start = Instant::now();
            let (verdict, witness) = match check(scenario, claim) {
                Ok(v) => v,
                Err(message) => (Verdict::Fail, format!("error: {message}")),
            };
            ReportEntry {
                scenario: scenario.id.clone(),
                claim: claim.id.name().to_string(),
                verdict,
                witness,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

type Outcome = Result<(Verdict, String), String>;

fn compare<T: PartialEq + fmt::Debug>(expected: T, actual: T, witness: String) -> (Verdict, String) {
    if expected == actual {
        (Verdict::Pass, witness)
    } else {
        (
            Verdict::Fail,
            format!("expected {expected:?}, found {actual:?}; {witness}"),
        )
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn irreducible(v: &Representation) -> Result<(bool, String), String> {
    match is_irreducible(&v.to_algebra_module()).map_err(err)? {
        Irreducibility::Irreducible => Ok((true, format!("irreducible of dimension {}", v.dim()))),
        Irreducibility::Reducible { submodule } => Ok((
            false,
            format!(
                "invariant subspace of dimension {} in dimension {}",
                submodule.len(),
                v.dim()
            ),
        )),
    }
}

fn check(s: &Scenario, claim: &Claim) -> Outcome {
    let (g, w) = (&s.group, &s.module_w);
    match (claim.id, &claim.expected) {
        (ClaimId::Invariant, Expected::Bool(b)) => {
            let t = inertia_group(w, g).map_err(err)?.subgroup;
            let mut witness = format!("inertia group of order {} in {}", t.order(), g.order());
            if let Some(cp) = &s.crossed {
                // w -> x_sigma w^sigma: the inverse Frobenius carries W to W^{x_sigma}.
                let r = cp.extension.degree();
                for j in 1..cp.gamma_order {
                    let x = cp.element(j, 0);
                    let map = cp.extension.frobenius_matrix((r - cp.frobenius_exponent(j)) % r);
                    let conj = conjugate_module(w, x).map_err(err)?;
                    if !w.intertwines_to(&conj, &map) {
                        return Ok((
                            Verdict::Fail,
                            format!("Frobenius map fails to intertwine W with W^x for j = {j}"),
                        ));
                    }
                }
                witness.push_str("; Frobenius maps intertwine W with every W^x");
            }
            Ok(compare(*b, t == *g, witness))
        }
        (ClaimId::InertiaOrder, Expected::Count(n)) => {
            let t = inertia_group(w, g).map_err(err)?.subgroup;
            Ok(compare(*n, t.order(), format!("members {:?}", t.members())))
        }
        (ClaimId::InducedIrreducible, Expected::Bool(b)) => {
            let (ok, witness) = irreducible(&induce(w, g))?;
            Ok(compare(*b, ok, witness))
        }
        (ClaimId::EndFieldDegree, Expected::Count(m)) => {
            let ring = end_ring(&induce(w, g).to_algebra_module()).map_err(err)?;
            let (degree, witness) = match recognize_field_extension(&ring) {
                FieldRecognition::Field {
                    degree, min_poly, ..
                } => (
                    Some(degree),
                    format!(
                        "End_G(V) of dimension {} generated by an element with minimal polynomial {min_poly}",
                        ring.dim()
                    ),
                ),
                FieldRecognition::NotField(NotFieldWitness::ZeroDivisor { .. }) => {
                    (None, format!("End_G(V) of dimension {} has zero divisors", ring.dim()))
                }
                FieldRecognition::NotField(NotFieldWitness::NonCommutative { .. }) => {
                    (None, format!("End_G(V) of dimension {} is not commutative", ring.dim()))
                }
                FieldRecognition::BudgetExhausted => {
                    (None, "no primitive element found within the budget".to_string())
                }
            };
            Ok(compare(Some(*m), degree, witness))
        }
        (ClaimId::Extends, Expected::Bool(b)) => extends(s, *b),
        (ClaimId::Split, Expected::Bool(b)) => {
            let complement = find_complement(g, &s.normal);
            let witness = match &complement {
                Some(h) => format!("complement {:?}", h.members()),
                None => "no subgroup of the right order meets N trivially".into(),
            };
            Ok(compare(*b, complement.is_some(), witness))
        }
        (ClaimId::NarrHolding, Expected::Conditions(want)) => {
            let report = narr_conditions(w, g).map_err(err)?;
            if !report.verification.passed() {
                let failures: Vec<String> = report
                    .verification
                    .failures()
                    .map(|(id, m)| format!("{id}: {m}"))
                    .collect();
                return Ok((Verdict::Fail, failures.join("; ")));
            }
            let mut holding = Vec::new();
            let mut notes = Vec::new();
            for (c, cond) in [
                ('a', &report.surjective),
                ('e', &report.extends),
                ('f', &report.split_linear),
            ] {
                match cond {
                    Condition::Holds => {
                        holding.push(c);
                        notes.push(format!("{c} holds"));
                    }
                    Condition::Fails(why) => notes.push(format!("{c} fails: {why}")),
                    Condition::NotEvaluated(why) => notes.push(format!("{c} not evaluated: {why}")),
                }
            }
            notes.push(format!("T of order {}", report.inertia.order()));
            Ok(compare(want.clone(), holding, notes.join("; ")))
        }
        (ClaimId::Stage1, Expected::Pass) => {
            let mut checked = 0;
            for v in enumerate_irreducibles(g, s.field).map_err(err)? {
                if !lies_over(&v, w).map_err(err)? {
                    continue;
                }
                let report = verify_stage1(&v, &s.normal).map_err(err)?;
                if let Some((id, m)) = report.verification.failures().next() {
                    return Ok((Verdict::Fail, format!("{id}: {m}")));
                }
                let back = induce(report.s.as_ref().expect("passing report has S"), g);
                if is_isomorphic_reps(&back, &v).map_err(err)?.is_none() {
                    return Ok((Verdict::Fail, "re-induction does not recover V".into()));
                }
                checked += 1;
            }
            Ok((Verdict::Pass, format!("{checked} irreducibles over W")))
        }
        (ClaimId::Correspondence, Expected::Pass) => {
            let r = verify_correspondence(w, g).map_err(err)?;
            let witness = format!(
                "T of order {}: {} classes over W in T, {} in G",
                r.inertia.order(),
                r.over_w_in_t.len(),
                r.over_w_in_g.len()
            );
            Ok(compare(true, r.round_trip_ok, witness))
        }
        (ClaimId::CrossedDivision, Expected::Bool(b)) => {
            let cp = s.crossed.as_ref().ok_or("no crossed product attached")?;
            let ok = is_irreducible(&cp.algebra).map_err(err)?.is_irreducible();
            Ok(compare(*b, ok, format!("algebra of dimension {}", cp.dim())))
        }
        (ClaimId::CrossedIff, Expected::Bool(b)) => {
            let cp = s.crossed.as_ref().ok_or("no crossed product attached")?;
            let division = is_irreducible(&cp.algebra).map_err(err)?.is_irreducible();
            let (induced, _) = irreducible(&induce(w, g))?;
            let witness = format!("ind W irreducible: {induced}; division ring: {division}");
            Ok(compare(*b, induced == division, witness))
        }
        (ClaimId::EndDims, Expected::Record) => {
            let cp = s.crossed.as_ref().ok_or("no crossed product attached")?;
            let v = induce(w, g);
            let on_n = hom_basis_reps(&restrict(&v, &s.normal), &restrict(&v, &s.normal))
                .map_err(err)?
                .dim();
            let on_g = hom_basis_reps(&v, &v).map_err(err)?.dim();
            let yes = |d: usize| if d == cp.dim() { "equal" } else { "different" };
            Ok((
                Verdict::Info,
                format!(
                    "dim End_N(V) = {on_n} ({}), dim End_G(V) = {on_g} ({}), dim crossed product = {}",
                    yes(on_n),
                    yes(on_g),
                    cp.dim()
                ),
            ))
        }
        (id, e) => Err(format!("claim {} cannot expect {e}", id.name())),
    }
}

/// Decided through the factor set of the quotient; when it is a
/// coboundary the genuine extension is built and checked.
fn extends(s: &Scenario, expected: bool) -> Outcome {
    let (g, w) = (&s.group, &s.module_w);
    let t = inertia_group(w, g).map_err(err)?.subgroup;
    if t != *g {
        return Ok(compare(expected, false, "W is not G-invariant".into()));
    }
    if !end_ring(&w.to_algebra_module()).map_err(err)?.is_scalar {
        return Ok((Verdict::Skip, "End_N(W) is not the base field".into()));
    }
    let x = extend_to_projective(w, g).map_err(err)?;
    let quotient = quotient_group(g, &s.normal).map_err(err)?;
    let gamma = quotient_factor_set(x.factor_set(), &quotient).map_err(err)?;
    let Some(mu) = is_coboundary(&gamma) else {
        return Ok(compare(
            expected,
            false,
            "factor set on G/N is not a coboundary".into(),
        ));
    };
    let field = s.field;
    let gens: Vec<_> = g
        .generators()
        .iter()
        .map(|&e| (e, x.image(e).scale(field.inv(mu[quotient.project(e)]))))
        .collect();
    let rep = Representation::from_generators(g, field, w.dim(), &gens).map_err(err)?;
    if !restrict(&rep, &s.normal).same_matrices(w) {
        return Ok((Verdict::Fail, "rescaled extension does not restrict to W".into()));
    }
    Ok(compare(expected, true, "extension built and checked".into()))
}
