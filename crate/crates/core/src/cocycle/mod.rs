//! Factor sets, projective representations and twisted group algebras.

mod coboundary;
mod projective;
pub mod text;
mod twisted;

pub use coboundary::{is_coboundary, solve_mod};
pub use projective::{
    extend_to_projective, glue, glue_all, lift_to_projective, strict_equivalence, Glued,
    ProjectiveRep,
};
pub use twisted::{twisted_group_algebra, twisted_irreducibles, TwistedAlgebra};

use crate::exactfield::PrimeField;
use crate::groupcore::{Elem, GroupError, QuotientGroup, Subgroup};
use crate::meataxe::MeataxeError;
use crate::repmod::RepError;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CocycleError {
    #[error("factor set table must be {order}x{order}")]
    Shape { order: usize },
    #[error("factor set value at ({g}, {h}) is zero")]
    ZeroValue { g: Elem, h: Elem },
    #[error("cocycle identity fails on ({g}, {h}, {k})")]
    Violation { g: Elem, h: Elem, k: Elem },
    #[error("factor set is not constant on cosets: ({g1}, {g2}) differs from ({g1x}, {g2x})")]
    NotCosetConstant {
        g1: Elem,
        g2: Elem,
        g1x: Elem,
        g2x: Elem,
    },
    #[error("module is not invariant: its conjugate by {element} is not isomorphic to it")]
    NotInvariant { element: Elem },
    #[error("endomorphism ring is not the base field")]
    NotScalarEnd,
    #[error("module is reducible")]
    Reducible,
    #[error("factor sets do not match at ({g}, {h})")]
    FactorSetMismatch { g: Elem, h: Elem },
    #[error("projective images violate the factor set at ({g}, {h})")]
    NotProjective { g: Elem, h: Elem },
    #[error("objects live over different groups or fields")]
    Incompatible,
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("{0}")]
    Rep(#[from] RepError),
    #[error("{0}")]
    Meataxe(#[from] MeataxeError),
}

/// A 2-cocycle `G x G -> F_p^*`, stored by member positions of `group`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSet {
    group: Subgroup,
    field: PrimeField,
    values: Vec<u32>,
}

impl FactorSet {
    pub fn trivial(group: &Subgroup, field: PrimeField) -> Self {
        let k = group.order();
        FactorSet {
            group: group.clone(),
            field,
            values: vec![1; k * k],
        }
    }

    /// Builds from a function of member pairs, verifying the cocycle identity.
    pub fn from_fn(
        group: &Subgroup,
        field: PrimeField,
        f: impl Fn(Elem, Elem) -> u32,
    ) -> Result<Self, CocycleError> {
        let members = group.members();
        let rows: Vec<Vec<u32>> = members
            .iter()
            .map(|&g| members.iter().map(|&h| f(g, h)).collect())
            .collect();
        validate_cocycle(group, field, &rows)
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// `alpha(g, h)` for members `g`, `h`.
    pub fn value(&self, g: Elem, h: Elem) -> u32 {
        let k = self.group.order();
        let i = self.group.position(g).expect("element outside the group");
        let j = self.group.position(h).expect("element outside the group");
        self.values[i * k + j]
    }

    /// Rows indexed by member positions.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.values
            .chunks(self.group.order().max(1))
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    /// First pair where the pointwise product with `other` is not 1.
    pub fn cancels_against(&self, other: &FactorSet) -> Result<(), CocycleError> {
        if self.group != other.group || self.field != other.field {
            return Err(CocycleError::Incompatible);
        }
        let k = self.group.order();
        match (0..k * k).find(|&i| self.field.mul(self.values[i], other.values[i]) != 1) {
            None => Ok(()),
            Some(i) => Err(CocycleError::FactorSetMismatch {
                g: self.group.element(i / k),
                h: self.group.element(i % k),
            }),
        }
    }

    /// First pair where the two factor sets differ.
    pub fn agrees_with(&self, other: &FactorSet) -> Result<(), CocycleError> {
        if self.group != other.group || self.field != other.field {
            return Err(CocycleError::Incompatible);
        }
        let k = self.group.order();
        match (0..k * k).find(|&i| self.values[i] != other.values[i]) {
            None => Ok(()),
            Some(i) => Err(CocycleError::FactorSetMismatch {
                g: self.group.element(i / k),
                h: self.group.element(i % k),
            }),
        }
    }
}

/// Checks nonzero entries and the cocycle identity
/// `a(g,h) a(gh,k) = a(g,hk) a(h,k)` on every triple, in member order.
pub fn validate_cocycle(
    group: &Subgroup,
    field: PrimeField,
    rows: &[Vec<u32>],
) -> Result<FactorSet, CocycleError> {
    let k = group.order();
    if rows.len() != k || rows.iter().any(|r| r.len() != k) {
        return Err(CocycleError::Shape { order: k });
    }
    let values: Vec<u32> = rows
        .iter()
        .flatten()
        .map(|&v| v % field.modulus())
        .collect();
    if let Some(i) = values.iter().position(|&v| v == 0) {
        return Err(CocycleError::ZeroValue {
            g: group.element(i / k),
            h: group.element(i % k),
        });
    }
    let table = group.parent();
    let pos = |x: Elem| group.position(x).unwrap();
    let at = |i: usize, j: usize| values[i * k + j];
    for i in 0..k {
        let g = group.element(i);
        for j in 0..k {
            let h = group.element(j);
            let gh = pos(table.mul(g, h));
            let left_gh = at(i, j);
            for l in 0..k {
                let x = group.element(l);
                let hk = pos(table.mul(h, x));
                let lhs = field.mul(left_gh, at(gh, l));
                let rhs = field.mul(at(i, hk), at(j, l));
                if lhs != rhs {
                    return Err(CocycleError::Violation { g, h, k: x });
                }
            }
        }
    }
    Ok(FactorSet {
        group: group.clone(),
        field,
        values,
    })
}

/// Whether `a(g1 x1, g2 x2) = a(g1, g2)` for all `g1, g2` and `x1, x2` in `normal`.
pub fn is_coset_constant(alpha: &FactorSet, normal: &Subgroup) -> bool {
    coset_constancy_witness(alpha, normal).is_ok()
}

pub(crate) fn coset_constancy_witness(
    alpha: &FactorSet,
    normal: &Subgroup,
) -> Result<(), CocycleError> {
    let group = &alpha.group;
    let table = group.parent();
    for &g1 in group.members() {
        for &g2 in group.members() {
            let base = alpha.value(g1, g2);
            for &x1 in normal.members() {
                let g1x = table.mul(g1, x1);
                for &x2 in normal.members() {
                    let g2x = table.mul(g2, x2);
                    if alpha.value(g1x, g2x) != base {
                        return Err(CocycleError::NotCosetConstant { g1, g2, g1x, g2x });
                    }
                }
            }
        }
    }
    Ok(())
}

/// `gamma(gN, hN) = alpha(g, h)` evaluated on the minimal-index section.
pub fn quotient_factor_set(
    alpha: &FactorSet,
    quotient: &QuotientGroup,
) -> Result<FactorSet, CocycleError> {
    if alpha.group != *quotient.group() {
        return Err(CocycleError::Incompatible);
    }
    coset_constancy_witness(alpha, quotient.normal())?;
    let q = Subgroup::full(quotient.table().clone());
    FactorSet::from_fn(&q, alpha.field, |a, b| {
        alpha.value(quotient.section(a), quotient.section(b))
    })
}

/// Pointwise inverse.
pub fn invert_factor_set(alpha: &FactorSet) -> FactorSet {
    FactorSet {
        group: alpha.group.clone(),
        field: alpha.field,
        values: alpha.values.iter().map(|&v| alpha.field.inv(v)).collect(),
    }
}

#[cfg(test)]
mod tests;
