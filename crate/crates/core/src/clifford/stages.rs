use super::inertia::{enumerate_irreducibles, inertia_group, lies_over};
use super::{CliffordError, Verification};
use crate::exactfield::Matrix;
use crate::groupcore::{left_transversal, Subgroup};
use crate::meataxe::{
    is_irreducible, is_isomorphic_reps, isotypic_decomposition, IsotypicDecomposition,
    MeataxeError,
};
use crate::repmod::{induce, restrict, subspace_representation, Representation};

#[derive(Clone, Debug)]
pub struct Stage1Report {
    pub decomposition: Option<IsotypicDecomposition>,
    /// Stabilizer of the first homogeneous component.
    pub inertia: Option<Subgroup>,
    /// The first homogeneous component as a module of `inertia`.
    pub s: Option<Representation>,
    /// Invertible intertwiner `induce(S) -> V`.
    pub iso: Option<Matrix>,
    pub verification: Verification,
}

/// Checks for an irreducible `V` and normal `N`: (a) the restriction is
/// semisimple, (b) `G` permutes the homogeneous components transitively,
/// (c) each component's stabilizer is the inertia group of its constituent,
/// (d) `V` is induced from the first component `S`, which is irreducible.
pub fn verify_stage1(v: &Representation, normal: &Subgroup) -> Result<Stage1Report, CliffordError> {
    let group = v.group();
    if !is_irreducible(&v.to_algebra_module())?.is_irreducible() {
        return Err(CliffordError::Reducible);
    }
    let mut verification = Verification::default();
    let mut report = Stage1Report {
        decomposition: None,
        inertia: None,
        s: None,
        iso: None,
        verification: Verification::default(),
    };
    let d = match isotypic_decomposition(v, normal) {
        Ok(d) => d,
        Err(MeataxeError::NotSemisimple { socle, dim }) => {
            verification.check("a-semisimple", false, || {
                format!("socle of dimension {socle} in a {dim}-dimensional restriction")
            });
            report.verification = verification;
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    verification.check("a-semisimple", true, String::new);
    let orbits = d.orbits();
    verification.check("b-transitive", orbits.len() == 1, || {
        format!("{} orbits on {} components", orbits.len(), d.components.len())
    });
    let table = group.parent();
    let mut stabilizers = Vec::with_capacity(d.components.len());
    for (i, c) in d.components.iter().enumerate() {
        let members: Vec<usize> = group
            .members()
            .iter()
            .copied()
            .filter(|&g| d.action(g, i) == i)
            .collect();
        let inertia = inertia_group(&c.factor, group)?.subgroup;
        verification.check(&format!("c-stabilizer-{i}"), inertia.members() == members, || {
            format!(
                "stabilizer has order {}, inertia group has order {}",
                members.len(),
                inertia.order()
            )
        });
        stabilizers.push(inertia);
    }
    let t = stabilizers.swap_remove(0);
    let component = &d.components[0];
    let s = subspace_representation(&restrict(v, &t), &component.basis);
    let s_irreducible = is_irreducible(&s.to_algebra_module())?.is_irreducible();
    verification.check("d-s-irreducible", s_irreducible, || "S is reducible".into());
    // x_i (x) s  ->  rho_V(x_i) s
    let transversal = left_transversal(group, &t);
    let mut columns = Vec::with_capacity(v.dim());
    for &x in transversal.reps() {
        for b in &component.basis {
            columns.push(v.act(x, b));
        }
    }
    let iso = Matrix::from_columns(v.field(), v.dim(), &columns);
    let induced = induce(&s, group);
    let ok = iso.is_invertible() && induced.intertwines_to(v, &iso);
    verification.check("d-induced", ok, || {
        format!("x (x) s -> xs is not an isomorphism from ind of an order-{} subgroup", t.order())
    });
    debug_assert!(table.order() >= group.order());
    report.decomposition = Some(d);
    report.inertia = Some(t);
    report.s = Some(s);
    report.iso = Some(iso);
    report.verification = verification;
    Ok(report)
}

/// For `T` the inertia group of `W` and an irreducible `S` of `T` lying over
/// `W`, checks that `induce(S, G)` is irreducible.
pub fn verify_stage2(
    s: &Representation,
    w: &Representation,
    group: &Subgroup,
) -> Result<Verification, CliffordError> {
    let t = inertia_group(w, group)?.subgroup;
    if *s.group() != t {
        return Err(CliffordError::Precondition(
            "S does not act through the inertia group of W".into(),
        ));
    }
    if !is_irreducible(&s.to_algebra_module())?.is_irreducible() {
        return Err(CliffordError::Precondition("S is reducible".into()));
    }
    if !lies_over(s, w)? {
        return Err(CliffordError::Precondition("S does not lie over W".into()));
    }
    let mut verification = Verification::default();
    let induced = induce(s, group);
    let ok = is_irreducible(&induced.to_algebra_module())?.is_irreducible();
    verification.check("induced-irreducible", ok, || {
        format!("induce(S) of dimension {} is reducible", induced.dim())
    });
    Ok(verification)
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub inertia: Subgroup,
    pub over_w_in_t: Vec<Representation>,
    pub over_w_in_g: Vec<Representation>,
    /// `forward[i]`: index in `over_w_in_g` of `induce(over_w_in_t[i])`.
    pub forward: Vec<Option<usize>>,
    /// `backward[j]`: index in `over_w_in_t` of the `W`-homogeneous component of `over_w_in_g[j]`.
    pub backward: Vec<Option<usize>>,
    pub round_trip_ok: bool,
}

fn find_class(candidates: &[Representation], m: &Representation) -> Result<Option<usize>, CliffordError> {
    for (i, c) in candidates.iter().enumerate() {
        if c.dim() == m.dim() && is_isomorphic_reps(c, m)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// The `W`-homogeneous component of `V` restricted to `N`, as a `T`-module.
fn homogeneous_component(
    v: &Representation,
    w: &Representation,
    t: &Subgroup,
) -> Result<Option<Representation>, CliffordError> {
    let d = isotypic_decomposition(v, w.group())?;
    for c in &d.components {
        if is_isomorphic_reps(&c.factor, w)?.is_some() {
            return Ok(Some(subspace_representation(&restrict(v, t), &c.basis)));
        }
    }
    Ok(None)
}

pub fn verify_correspondence(
    w: &Representation,
    group: &Subgroup,
) -> Result<CorrespondenceReport, CliffordError> {
    let field = w.field();
    let t = inertia_group(w, group)?.subgroup;
    let mut over_w_in_t = Vec::new();
    for s in enumerate_irreducibles(&t, field)? {
        if lies_over(&s, w)? {
            over_w_in_t.push(s);
        }
    }
    let mut over_w_in_g = Vec::new();
    for v in enumerate_irreducibles(group, field)? {
        if lies_over(&v, w)? {
            over_w_in_g.push(v);
        }
    }
    let mut forward = Vec::with_capacity(over_w_in_t.len());
    for s in &over_w_in_t {
        forward.push(find_class(&over_w_in_g, &induce(s, group))?);
    }
    let mut backward = Vec::with_capacity(over_w_in_g.len());
    for v in &over_w_in_g {
        backward.push(match homogeneous_component(v, w, &t)? {
            Some(s) => find_class(&over_w_in_t, &s)?,
            None => None,
        });
    }
    let round_trip_ok = forward.len() == backward.len()
        && forward
            .iter()
            .enumerate()
            .all(|(i, f)| f.is_some_and(|j| backward[j] == Some(i)))
        && backward
            .iter()
            .enumerate()
            .all(|(j, b)| b.is_some_and(|i| forward[i] == Some(j)));
    Ok(CorrespondenceReport {
        inertia: t,
        over_w_in_t,
        over_w_in_g,
        forward,
        backward,
        round_trip_ok,
    })
}
