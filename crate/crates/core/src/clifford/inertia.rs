use super::CliffordError;
use crate::exactfield::{Matrix, PrimeField};
use crate::groupcore::{left_transversal, Elem, Subgroup};
use crate::meataxe::{chop, is_irreducible, is_isomorphic, is_isomorphic_reps};
use crate::repmod::{conjugate_module, regular_rep, restrict, Representation};

#[derive(Clone, Debug)]
pub struct InertiaResult {
    pub subgroup: Subgroup,
    /// Per coset representative of `N`: an intertwiner `W -> W^g` when `g`
    /// lies in the inertia group, `None` when `W^g` is not isomorphic to `W`.
    pub witnesses: Vec<(Elem, Option<Matrix>)>,
}

/// `R(n)` intertwines `W` with `W^n` for `n` in the acting group of `W`,
/// which is why only coset representatives need testing.
pub fn normal_conjugation_witness(w: &Representation, n: Elem) -> Matrix {
    w.image(n).clone()
}

pub fn inertia_group(w: &Representation, group: &Subgroup) -> Result<InertiaResult, CliffordError> {
    let normal = w.group();
    normal.normal_in(group)?;
    if !is_irreducible(&w.to_algebra_module())?.is_irreducible() {
        return Err(CliffordError::Reducible);
    }
    let transversal = left_transversal(group, normal);
    let mut witnesses = Vec::with_capacity(transversal.len());
    let mut inside = Vec::new();
    for &t in transversal.reps() {
        let conj = conjugate_module(w, t)?;
        let iso = is_isomorphic_reps(w, &conj)?;
        if let Some(m) = &iso {
            debug_assert!(w.intertwines_to(&conj, m));
            inside.push(t);
        }
        witnesses.push((t, iso));
    }
    let subgroup = normal.join(&inside);
    // Closure must not add cosets that were refuted.
    let expected = inside.len() * normal.order();
    if subgroup.order() != expected {
        return Err(CliffordError::Precondition(format!(
            "stabilizer of W is not closed: {} elements expected, closure has {}",
            expected,
            subgroup.order()
        )));
    }
    Ok(InertiaResult { subgroup, witnesses })
}

/// Whether some composition factor of the restriction to `w`'s group is
/// isomorphic to `w`.
pub fn lies_over(v: &Representation, w: &Representation) -> Result<bool, CliffordError> {
    let res = restrict(v, w.group());
    let target = w.to_algebra_module();
    for (factor, _) in chop(&res.to_algebra_module())?.classes {
        if is_isomorphic(&factor, &target)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// One representative per isomorphism class of irreducible modules, taken
/// from the composition factors of the regular module.
pub fn enumerate_irreducibles(
    group: &Subgroup,
    field: PrimeField,
) -> Result<Vec<Representation>, CliffordError> {
    if group.order().is_multiple_of(field.modulus() as usize) {
        log::warn!(
            "enumerating irreducibles of an order-{} group in characteristic {}: not semisimple",
            group.order(),
            field.modulus()
        );
    }
    let reg = regular_rep(group, field);
    let mut out = Vec::new();
    for (m, _) in chop(&reg.to_algebra_module())?.classes {
        out.push(Representation::from_module(group, &m)?);
    }
    out.sort_by_key(Representation::dim);
    Ok(out)
}
