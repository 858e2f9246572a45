use std::sync::Arc;

use super::inertia::{enumerate_irreducibles, lies_over};
use super::{CliffordError, Verification};
use crate::exactfield::PrimeField;
use crate::groupcore::{direct_product, quotient_group, subgroup_generated, GroupTable, Subgroup};
use crate::meataxe::{chop, end_ring, is_irreducible, is_isomorphic_reps};
use crate::repmod::{inflate, restrict, tensor, Representation};

/// `V1 (x) V2` as a module of `product`, whose table must be
/// `direct_product(G1, G2)` with `(a, b)` at index `a * |G2| + b`.
pub fn outer_tensor(
    v1: &Representation,
    v2: &Representation,
    product: &Subgroup,
) -> Result<Representation, CliffordError> {
    let (g1, g2) = (v1.group(), v2.group());
    if !g1.is_full() || !g2.is_full() || !product.is_full() {
        return Err(CliffordError::Precondition(
            "outer tensor needs modules of whole groups".into(),
        ));
    }
    let nb = g2.order();
    if product.order() != g1.order() * nb || v1.field() != v2.field() {
        return Err(CliffordError::Precondition(
            "product group does not match the factors".into(),
        ));
    }
    let images = product
        .members()
        .iter()
        .map(|&u| v1.image(u / nb).kronecker(v2.image(u % nb)))
        .collect();
    Ok(Representation::from_table(
        product,
        v1.field(),
        v1.dim() * v2.dim(),
        images,
    ))
}

fn is_scalar_end(v: &Representation) -> Result<bool, CliffordError> {
    Ok(end_ring(&v.to_algebra_module())?.is_scalar)
}

fn position_of(
    candidates: &[Representation],
    m: &Representation,
) -> Result<Option<usize>, CliffordError> {
    for (i, c) in candidates.iter().enumerate() {
        if c.dim() == m.dim() && is_isomorphic_reps(c, m)?.is_some() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Outcome of [`verify_direct_product`].
#[derive(Clone, Debug)]
pub struct DirectProductReport {
    pub product: Subgroup,
    /// `(i, j, V1_i (x) V2_j)` for every pair with `End(V2_j)` scalar.
    pub pairs: Vec<(usize, usize, Representation)>,
    pub irreducibles: Vec<Representation>,
    pub verification: Verification,
}

/// Clauses: (a) `V1 (x) V2` is irreducible whenever `End(V2)` is scalar,
/// (b) every irreducible of `G1 x G2` whose `G2`-constituent has scalar End
/// is such a product, (c) the pairing is injective, and the counts and
/// dimensions match `enumerate_irreducibles` when every `G2` module has
/// scalar End.
pub fn verify_direct_product(
    g1: &Arc<GroupTable>,
    g2: &Arc<GroupTable>,
    field: PrimeField,
) -> Result<DirectProductReport, CliffordError> {
    let table = Arc::new(direct_product(g1, g2));
    let product = Subgroup::full(table.clone());
    let nb = g2.order();
    let irr1 = enumerate_irreducibles(&Subgroup::full(g1.clone()), field)?;
    let irr2 = enumerate_irreducibles(&Subgroup::full(g2.clone()), field)?;
    let scalar2 = irr2
        .iter()
        .map(is_scalar_end)
        .collect::<Result<Vec<_>, _>>()?;
    let mut verification = Verification::default();
    let mut pairs = Vec::new();
    for (i, v1) in irr1.iter().enumerate() {
        for (j, v2) in irr2.iter().enumerate() {
            if !scalar2[j] {
                continue;
            }
            let v = outer_tensor(v1, v2, &product)?;
            let ok = is_irreducible(&v.to_algebra_module())?.is_irreducible();
            verification.check(&format!("a-irreducible-{i}-{j}"), ok, || {
                format!("V1_{i} (x) V2_{j} is reducible")
            });
            pairs.push((i, j, v));
        }
    }
    let tensors: Vec<Representation> = pairs.iter().map(|(_, _, v)| v.clone()).collect();
    let irreducibles = enumerate_irreducibles(&product, field)?;
    let second: Vec<usize> = (0..nb).collect();
    let second = subgroup_generated(&table, &second);
    for (k, v) in irreducibles.iter().enumerate() {
        let res = restrict(v, &second);
        let classes = chop(&res.to_algebra_module())?.classes;
        let factor = Representation::from_module(&second, &classes[0].0)?;
        if !is_scalar_end(&factor)? {
            verification.skip(
                &format!("b-arises-{k}"),
                "constituent on the second factor has non-scalar End",
            );
            continue;
        }
        let found = position_of(&tensors, v)?;
        verification.check(&format!("b-arises-{k}"), found.is_some(), || {
            format!("irreducible {k} of dimension {} is not an outer tensor", v.dim())
        });
    }
    let mut injective = true;
    for a in 0..tensors.len() {
        for b in a + 1..tensors.len() {
            if tensors[a].dim() == tensors[b].dim()
                && is_isomorphic_reps(&tensors[a], &tensors[b])?.is_some()
            {
                injective = false;
            }
        }
    }
    verification.check("c-injective", injective, || {
        "two different pairs give isomorphic products".into()
    });
    if scalar2.iter().all(|&s| s) {
        let mut left: Vec<usize> = tensors.iter().map(Representation::dim).collect();
        let mut right: Vec<usize> = irreducibles.iter().map(Representation::dim).collect();
        left.sort_unstable();
        right.sort_unstable();
        verification.check("classification", left == right, || {
            format!("outer tensor dims {left:?}, irreducible dims {right:?}")
        });
    } else {
        verification.skip("classification", "some G2 irreducible has non-scalar End");
    }
    Ok(DirectProductReport {
        product,
        pairs,
        irreducibles,
        verification,
    })
}

/// For `s_ext` a module of `group` extending the scalar-End module `W` of
/// the normal subgroup `N`: (a) every irreducible over `W` is some
/// `U (x) s_ext` with `U` inflated from `G/N`, (b) each such product is
/// irreducible, (c) non-isomorphic `U` give non-isomorphic products.
pub fn verify_gallagher(
    w: &Representation,
    s_ext: &Representation,
    group: &Subgroup,
) -> Result<Verification, CliffordError> {
    let normal = w.group();
    normal.normal_in(group)?;
    if s_ext.group() != group {
        return Err(CliffordError::Precondition(
            "extension does not act through the group".into(),
        ));
    }
    if !is_scalar_end(w)? {
        return Err(CliffordError::NotScalarEnd);
    }
    if is_isomorphic_reps(&restrict(s_ext, normal), w)?.is_none() {
        return Err(CliffordError::Precondition(
            "extension does not restrict to W".into(),
        ));
    }
    let field = w.field();
    let quotient = quotient_group(group, normal)?;
    let irr_q = enumerate_irreducibles(&Subgroup::full(quotient.table().clone()), field)?;
    let mut products = Vec::with_capacity(irr_q.len());
    let mut verification = Verification::default();
    for (i, u) in irr_q.iter().enumerate() {
        let v = tensor(&inflate(u, &quotient), s_ext)?;
        let ok = is_irreducible(&v.to_algebra_module())?.is_irreducible();
        verification.check(&format!("b-irreducible-{i}"), ok, || {
            format!("U_{i} (x) S is reducible")
        });
        products.push(v);
    }
    let mut over = 0;
    for (k, v) in enumerate_irreducibles(group, field)?.iter().enumerate() {
        if !lies_over(v, w)? {
            continue;
        }
        over += 1;
        let found = position_of(&products, v)?;
        verification.check(&format!("a-arises-{k}"), found.is_some(), || {
            format!("irreducible {k} over W is not of the form U (x) S")
        });
    }
    let mut injective = true;
    for a in 0..products.len() {
        for b in a + 1..products.len() {
            if products[a].dim() == products[b].dim()
                && is_isomorphic_reps(&products[a], &products[b])?.is_some()
            {
                injective = false;
            }
        }
    }
    verification.check("c-injective", injective, || {
        "non-isomorphic U give isomorphic products".into()
    });
    verification.check("count", over == irr_q.len(), || {
        format!("{over} irreducibles over W, {} of G/N", irr_q.len())
    });
    Ok(verification)
}
