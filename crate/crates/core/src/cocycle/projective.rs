use super::{
    coset_constancy_witness, invert_factor_set, quotient_factor_set, twisted_group_algebra,
    twisted_irreducibles, validate_cocycle, CocycleError, FactorSet, TwistedAlgebra,
};
use crate::exactfield::{Matrix, PrimeField};
use crate::groupcore::{left_transversal, quotient_group, Elem, Subgroup};
use crate::meataxe::{end_ring, hom_basis_reps, is_irreducible, is_isomorphic};
use crate::repmod::{conjugate_module, AlgebraModule, Representation};

/// `g -> X(g)` with `X(g) X(h) = alpha(g,h) X(gh)` and `X(e) = 1`.
#[derive(Clone, Debug)]
pub struct ProjectiveRep {
    group: Subgroup,
    field: PrimeField,
    dim: usize,
    images: Vec<Matrix>,
    factor_set: FactorSet,
}

impl ProjectiveRep {
    /// Verifies the projective law on every pair.
    pub fn new(
        group: &Subgroup,
        field: PrimeField,
        dim: usize,
        images: Vec<Matrix>,
        factor_set: FactorSet,
    ) -> Result<Self, CocycleError> {
        if images.len() != group.order()
            || factor_set.group() != group
            || factor_set.field() != field
            || images.iter().any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(CocycleError::Incompatible);
        }
        let table = group.parent();
        let e = table.identity();
        if !images[0].is_identity() {
            return Err(CocycleError::NotProjective { g: e, h: e });
        }
        for (i, &g) in group.members().iter().enumerate() {
            for (j, &h) in group.members().iter().enumerate() {
                let gh = group.position(table.mul(g, h)).unwrap();
                let lhs = &images[i] * &images[j];
                if lhs != images[gh].scale(factor_set.value(g, h)) {
                    return Err(CocycleError::NotProjective { g, h });
                }
            }
        }
        Ok(ProjectiveRep {
            group: group.clone(),
            field,
            dim,
            images,
            factor_set,
        })
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn factor_set(&self) -> &FactorSet {
        &self.factor_set
    }

    pub fn image(&self, g: Elem) -> &Matrix {
        &self.images[self.group.position(g).expect("element outside the group")]
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    fn generator_module(&self) -> AlgebraModule {
        let gens = self
            .group
            .generators()
            .iter()
            .map(|&g| self.image(g).clone())
            .collect();
        AlgebraModule::new(self.field, self.dim, gens, "projective")
    }
}

/// Extends an invariant, absolutely irreducible module of a normal subgroup
/// to a projective representation of `group`.
///
/// On the minimal-index transversal, `X(t)` is the intertwiner from `W` to
/// `W^t` scaled so its first nonzero entry (row-major) is 1. Elsewhere
/// `X(t x) = X(t) R(x)`, which makes the factor set constant on cosets.
pub fn extend_to_projective(
    w: &Representation,
    group: &Subgroup,
) -> Result<ProjectiveRep, CocycleError> {
    let normal = w.group();
    normal.normal_in(group)?;
    let module = w.to_algebra_module();
    if !is_irreducible(&module)?.is_irreducible() {
        return Err(CocycleError::Reducible);
    }
    if !end_ring(&module)?.is_scalar {
        return Err(CocycleError::NotScalarEnd);
    }
    let field = w.field();
    let transversal = left_transversal(group, normal);
    let mut on_reps = Vec::with_capacity(transversal.len());
    for &t in transversal.reps() {
        let conj = conjugate_module(w, t)?;
        let hom = hom_basis_reps(w, &conj)?;
        let Some(x) = hom.basis.first() else {
            return Err(CocycleError::NotInvariant { element: t });
        };
        let (_, lead) = x.first_nonzero().expect("hom basis elements are nonzero");
        on_reps.push(x.scale(field.inv(lead)));
    }
    let images: Vec<Matrix> = group
        .members()
        .iter()
        .map(|&g| {
            let (i, h) = transversal.decompose(g);
            &on_reps[i] * w.image(h)
        })
        .collect();
    let table = group.parent();
    let k = group.order();
    let mut rows = vec![vec![0u32; k]; k];
    for (i, &g) in group.members().iter().enumerate() {
        for (j, &h) in group.members().iter().enumerate() {
            let gh = group.position(table.mul(g, h)).unwrap();
            let c = (&images[i] * &images[j])
                .scalar_ratio(&images[gh])
                .ok_or(CocycleError::NotProjective { g, h })?;
            rows[i][j] = c;
        }
    }
    let alpha = validate_cocycle(group, field, &rows)?;
    coset_constancy_witness(&alpha, normal)?;
    ProjectiveRep::new(group, field, w.dim(), images, alpha)
}

/// `Y(g)` is the action on `u` of the basis element of the coset `gN`, so
/// `Y` is 1 on `N` and has factor set `beta`.
pub fn lift_to_projective(
    u: &AlgebraModule,
    algebra: &TwistedAlgebra,
    beta: &FactorSet,
) -> Result<ProjectiveRep, CocycleError> {
    let quotient = algebra.quotient();
    let group = quotient.group();
    if beta.group() != group || u.field() != algebra.field() {
        return Err(CocycleError::Incompatible);
    }
    coset_constancy_witness(beta, quotient.normal())?;
    let delta = algebra.factor_set();
    for &a in delta.group().members() {
        for &b in delta.group().members() {
            if delta.value(a, b) != beta.value(quotient.section(a), quotient.section(b)) {
                return Err(CocycleError::FactorSetMismatch {
                    g: quotient.section(a),
                    h: quotient.section(b),
                });
            }
        }
    }
    let on_quotient = algebra.basis_action(u)?;
    let images = group
        .members()
        .iter()
        .map(|&g| on_quotient[quotient.project(g)].clone())
        .collect();
    ProjectiveRep::new(group, u.field(), u.dim(), images, beta.clone())
}

/// `S(g) = Y(g) (x) X(g)`; a genuine representation when the factor sets cancel.
pub fn glue(y: &ProjectiveRep, x: &ProjectiveRep) -> Result<Representation, CocycleError> {
    if y.group != x.group || y.field != x.field {
        return Err(CocycleError::Incompatible);
    }
    y.factor_set.cancels_against(&x.factor_set)?;
    let images = y
        .images
        .iter()
        .zip(&x.images)
        .map(|(a, b)| a.kronecker(b))
        .collect();
    Ok(Representation::from_table(
        &y.group,
        y.field,
        y.dim * x.dim,
        images,
    ))
}

/// An invertible `f` with `f Y1(g) = Y2(g) f` exactly, if one is found.
pub fn strict_equivalence(
    y1: &ProjectiveRep,
    y2: &ProjectiveRep,
) -> Result<Option<Matrix>, CocycleError> {
    if y1.group != y2.group || y1.field != y2.field {
        return Err(CocycleError::Incompatible);
    }
    y1.factor_set.agrees_with(&y2.factor_set)?;
    if y1.dim != y2.dim {
        return Ok(None);
    }
    Ok(is_isomorphic(
        &y1.generator_module(),
        &y2.generator_module(),
    )?)
}

/// One irreducible module of the twisted quotient algebra, its lift and the
/// ordinary representation glued from it.
#[derive(Clone, Debug)]
pub struct Glued {
    pub twisted: AlgebraModule,
    pub lift: ProjectiveRep,
    pub module: Representation,
}

/// The whole chain for an invariant, absolutely irreducible `W`: extend to
/// `X`, pass to the quotient factor set, invert, take the irreducibles of
/// the twisted quotient algebra, lift each with the inverse factor set of
/// `X`, and glue.
pub fn glue_all(w: &Representation, group: &Subgroup) -> Result<Vec<Glued>, CocycleError> {
    let x = extend_to_projective(w, group)?;
    let alpha = x.factor_set();
    let quotient = quotient_group(group, w.group())?;
    let delta = invert_factor_set(&quotient_factor_set(alpha, &quotient)?);
    let beta = invert_factor_set(alpha);
    let algebra = twisted_group_algebra(&quotient, &delta)?;
    let mut out = Vec::new();
    for u in twisted_irreducibles(&algebra)? {
        let lift = lift_to_projective(&u, &algebra, &beta)?;
        let module = glue(&lift, &x)?;
        out.push(Glued {
            twisted: u,
            lift,
            module,
        });
    }
    Ok(out)
}
