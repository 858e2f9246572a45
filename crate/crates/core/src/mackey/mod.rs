//! Mackey decompositions with explicit intertwiners. Every witness is built
//! from the orbit maps `v -> x v`, never by solving for a hom space.

use std::fmt::Write as _;

use crate::exactfield::{Matrix, SparseRows};
use crate::groupcore::{double_cosets, left_transversal, Elem, Subgroup};
use crate::repmod::{
    direct_sum, induce, permutation_module, restrict, tensor, trivial_rep, RepError,
    Representation,
};

#[cfg(test)]
mod tests;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum MackeyError {
    #[error("the local map of block {block} is not equivariant")]
    NotEquivariant { block: usize },
    #[error("assembled map is not invertible")]
    NotInvertible,
    #[error("isomorphism fails to intertwine at element {element}")]
    NotIntertwining { element: Elem },
    #[error("{0}")]
    Rep(#[from] RepError),
}

/// Provenance of one summand of the right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyBlock {
    /// Double-coset representative indexing the block.
    pub rep: Elem,
    /// The pair `(x, y)` used for the block (`x` alone for restriction).
    pub pair: (Elem, Elem),
    /// The subgroup the block is induced from.
    pub subgroup: Subgroup,
    pub offset: usize,
    pub dim: usize,
    pub construction: String,
}

#[derive(Clone, Debug)]
pub struct MackeyWitness {
    pub lhs: Representation,
    pub rhs: Representation,
    /// `iso rho_lhs(g) = rho_rhs(g) iso` on every member of the acting group.
    pub iso: Matrix,
    pub block_map: Vec<MackeyBlock>,
}

impl MackeyWitness {
    /// Re-checks invertibility and intertwining on the whole acting group.
    pub fn verify(&self) -> Result<(), MackeyError> {
        check_iso(&self.lhs, &self.rhs, &self.iso)
    }

    /// One `block <d-rep> dim <n> from <construction>` line per block.
    pub fn provenance(&self) -> String {
        let table = self.lhs.group().parent();
        let mut s = String::new();
        for b in &self.block_map {
            writeln!(
                s,
                "block {} dim {} from {}",
                table.label(b.rep),
                b.dim,
                b.construction
            )
            .unwrap();
        }
        s
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.block_map.iter().map(|b| b.dim).collect()
    }
}

fn check_iso(lhs: &Representation, rhs: &Representation, iso: &Matrix) -> Result<(), MackeyError> {
    if !iso.is_square() || iso.rows() != lhs.dim() || !iso.is_invertible() {
        return Err(MackeyError::NotInvertible);
    }
    if let Some(element) = lhs.intertwining_failure(rhs, iso) {
        return Err(MackeyError::NotIntertwining { element });
    }
    Ok(())
}

/// `V^x` on `on`, a subgroup of `x H x^{-1}`: `h` acts as `rho_V(x^{-1} h x)`.
pub fn twist(v: &Representation, x: Elem, on: &Subgroup) -> Representation {
    let table = v.group().parent();
    let xinv = table.inv(x);
    v.pullback(on, |h| table.conj(xinv, h))
}

/// `x H x^{-1}`.
fn conjugate(h: &Subgroup, x: Elem) -> Subgroup {
    h.conjugate(x)
}

/// Inclusion of `W` as the identity-coset block `1 (x) W` of an induced module.
fn identity_block(induced_dim: usize, w: &Representation) -> Matrix {
    let mut m = Matrix::zeros(w.field(), induced_dim, w.dim());
    for k in 0..w.dim() {
        m.set(k, k, 1);
    }
    m
}

struct Piece {
    induced: Representation,
    columns: SparseRows,
    block: MackeyBlock,
}

/// Induces the equivariant map `local -> ambient` (given by `phi0`) up to the
/// acting group of `ambient`: `z_k (x) u -> rho(z_k) phi0(u)`.
fn induced_piece(
    ambient: &Representation,
    local: &Representation,
    phi0: &Matrix,
    block: MackeyBlock,
    index: usize,
) -> Result<Piece, MackeyError> {
    let sub = local.group();
    if !local.intertwines_to(&restrict(ambient, sub), phi0) {
        return Err(MackeyError::NotEquivariant { block: index });
    }
    let group = ambient.group();
    let transversal = left_transversal(group, sub);
    let phi0 = SparseRows::from_dense(phi0);
    let parts: Vec<SparseRows> = transversal
        .reps()
        .iter()
        .map(|&z| ambient.sparse_images()[group.position(z).unwrap()].mul(&phi0))
        .collect();
    let refs: Vec<&SparseRows> = parts.iter().collect();
    let columns = SparseRows::hstack(ambient.field(), &refs);
    let induced = induce(local, group);
    Ok(Piece {
        block: MackeyBlock {
            dim: induced.dim(),
            ..block
        },
        induced,
        columns,
    })
}

fn assemble(lhs: Representation, pieces: Vec<Piece>) -> Result<MackeyWitness, MackeyError> {
    let field = lhs.field();
    let parts: Vec<&Representation> = pieces.iter().map(|p| &p.induced).collect();
    let rhs = direct_sum(&parts)?;
    let cols: Vec<&SparseRows> = pieces.iter().map(|p| &p.columns).collect();
    let phi = SparseRows::hstack(field, &cols);
    if phi.rows() != phi.cols() || phi.rows() != lhs.dim() {
        return Err(MackeyError::NotInvertible);
    }
    let iso = match phi.monomial_inverse() {
        Some(inv) => inv.to_dense(),
        None => phi.to_dense().inverse().ok_or(MackeyError::NotInvertible)?,
    };
    let mut offset = 0;
    let block_map = pieces
        .into_iter()
        .map(|p| {
            let b = MackeyBlock { offset, ..p.block };
            offset += b.dim;
            b
        })
        .collect();
    let witness = MackeyWitness {
        lhs,
        rhs,
        iso,
        block_map,
    };
    witness.verify()?;
    Ok(witness)
}

/// `V(x, y) = ind_{H^(x,y)}^G (V1^x (x) V2^y)` with
/// `H^(x,y) = x H1 x^{-1} ∩ y H2 y^{-1}`, for any pair `(x, y)`.
pub fn mackey_block(
    v1: &Representation,
    v2: &Representation,
    group: &Subgroup,
    x: Elem,
    y: Elem,
) -> Result<Representation, MackeyError> {
    let sub = conjugate(v1.group(), x).intersect(&conjugate(v2.group(), y));
    let local = tensor(&twist(v1, x, &sub), &twist(v2, y, &sub))?;
    Ok(induce(&local, group))
}

/// `ind V1 (x) ind V2` as the sum over `(H1, H2)` double cosets `H1 d H2` of
/// `ind_{H1 ∩ d H2 d^{-1}}^G (V1 (x) V2^d)`, with the pair `(e, d)`.
pub fn mackey_tensor(
    v1: &Representation,
    v2: &Representation,
    group: &Subgroup,
) -> Result<MackeyWitness, MackeyError> {
    let table = group.parent();
    let (h1, h2) = (v1.group(), v2.group());
    let (ind1, ind2) = (induce(v1, group), induce(v2, group));
    let lhs = tensor(&ind1, &ind2)?;
    let incl1 = identity_block(ind1.dim(), v1);
    let incl2 = identity_block(ind2.dim(), v2);
    let mut pieces = Vec::new();
    for (i, &d) in double_cosets(group, h1, h2).reps().iter().enumerate() {
        let sub = h1.intersect(&conjugate(h2, d));
        let local = tensor(&restrict(v1, &sub), &twist(v2, d, &sub))?;
        // v1 (x) v2 -> (1 (x) v1) (x) (d (x) v2)
        let phi0 = incl1.kronecker(&(ind2.image(d) * &incl2));
        let block = MackeyBlock {
            rep: d,
            pair: (table.identity(), d),
            subgroup: sub.clone(),
            offset: 0,
            dim: 0,
            construction: format!(
                "ind from order {} of V1 (x) V2^{}",
                sub.order(),
                table.label(d)
            ),
        };
        pieces.push(induced_piece(&lhs, &local, &phi0, block, i)?);
    }
    assemble(lhs, pieces)
}

/// `res_K ind_H V` as the sum over `(K, H)` double cosets `K x H` of
/// `ind_{K ∩ x H x^{-1}}^K V^x`.
pub fn mackey_restriction(
    v: &Representation,
    k: &Subgroup,
    group: &Subgroup,
) -> Result<MackeyWitness, MackeyError> {
    let table = group.parent();
    let h = v.group();
    let ind = induce(v, group);
    let lhs = restrict(&ind, k);
    let incl = identity_block(ind.dim(), v);
    let mut pieces = Vec::new();
    for (i, &x) in double_cosets(group, k, h).reps().iter().enumerate() {
        let sub = k.intersect(&conjugate(h, x));
        let local = twist(v, x, &sub);
        // v -> x (x) v
        let phi0 = ind.image(x) * &incl;
        let block = MackeyBlock {
            rep: x,
            pair: (x, x),
            subgroup: sub.clone(),
            offset: 0,
            dim: 0,
            construction: format!("ind from order {} of V^{}", sub.order(), table.label(x)),
        };
        pieces.push(induced_piece(&lhs, &local, &phi0, block, i)?);
    }
    assemble(lhs, pieces)
}

/// `(ind_H W) (x) V ≅ ind_H (W (x) res_H V)` via
/// `(x_i (x) w) (x) v -> x_i (x) (w (x) x_i^{-1} v)`.
pub fn resext_iso(w: &Representation, v: &Representation) -> Result<MackeyWitness, MackeyError> {
    let group = v.group();
    let table = group.parent();
    let ind = induce(w, group);
    let lhs = tensor(&ind, v)?;
    let local = tensor(w, &restrict(v, w.group()))?;
    let phi0 = identity_block(ind.dim(), w).kronecker(&Matrix::identity(v.field(), v.dim()));
    let block = MackeyBlock {
        rep: table.identity(),
        pair: (table.identity(), table.identity()),
        subgroup: w.group().clone(),
        offset: 0,
        dim: 0,
        construction: format!("ind from order {} of W (x) res V", w.group().order()),
    };
    let piece = induced_piece(&lhs, &local, &phi0, block, 0)?;
    assemble(lhs, vec![piece])
}

/// `P (x) ind_{H2} V2 ≅ ind_{H1} res_{H1} ind_{H2} V2` for the permutation
/// module `P` on `G/H1`, composed along the chain: the tensor theorem with
/// trivial `V1`, transitivity of induction block by block, and the
/// restriction theorem induced up from `H1`.
pub fn perm_tensor_corollary(
    h1: &Subgroup,
    v2: &Representation,
    group: &Subgroup,
) -> Result<MackeyWitness, MackeyError> {
    let field = v2.field();
    let ind2 = induce(v2, group);
    let lhs = tensor(&permutation_module(group, h1, field), &ind2)?;
    let rhs = induce(&restrict(&ind2, h1), group);

    let tensor_step = mackey_tensor(&trivial_rep(h1, field), v2, group)?;
    let restriction_step = mackey_restriction(v2, h1, group)?;
    // ind_{H1}^G of the restriction decomposition, as an H1-module sum.
    let middle = induce(&restriction_step.rhs, group);
    let mut parts = Vec::new();
    for (a, b) in tensor_step
        .block_map
        .iter()
        .zip(&restriction_step.block_map)
    {
        debug_assert_eq!(a.rep, b.rep);
        let local = twist(v2, a.rep, &a.subgroup);
        // u -> e (x) (incl_d (e (x) u))
        let mut phi0 = Matrix::zeros(field, middle.dim(), local.dim());
        for k in 0..local.dim() {
            phi0.set(b.offset + k, k, 1);
        }
        let block = a.clone();
        let piece = induced_piece(&middle, &local, &phi0, block, parts.len())?;
        parts.push(piece.columns);
    }
    let refs: Vec<&SparseRows> = parts.iter().collect();
    let transitivity = SparseRows::hstack(field, &refs);
    let back = restriction_step
        .iso
        .inverse()
        .ok_or(MackeyError::NotInvertible)?;
    let lifted = SparseRows::from_dense(&Matrix::identity(field, group.order() / h1.order()))
        .kronecker(&SparseRows::from_dense(&back));
    let iso = lifted
        .mul(&transitivity)
        .mul(&SparseRows::from_dense(&tensor_step.iso))
        .to_dense();
    let witness = MackeyWitness {
        lhs,
        rhs,
        iso,
        block_map: tensor_step.block_map,
    };
    witness.verify()?;
    Ok(witness)
}
