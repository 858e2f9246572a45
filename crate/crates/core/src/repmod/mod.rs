//! Matrix representations of subgroups of a table group, and the
//! constructions that combine them.
//!
//! Conventions: column vectors, left action. Induced modules use the
//! minimal-index left transversal `x_0 = e, x_1, ...`; basis vector
//! `x_i ⊗ e_j` sits at index `i * dim W + j`. Tensor products use the
//! row-major Kronecker index `i1 * dim2 + i2`.

mod algebra;
pub mod text;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::exactfield::{Matrix, PrimeField, ProductChecker, SparseRows};
use crate::groupcore::{left_transversal, Elem, GroupError, QuotientGroup, Subgroup};

pub use algebra::AlgebraModule;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("generator images disagree at element {element}: two words give different matrices")]
    Inconsistent { element: Elem },
    #[error("the listed generators do not generate the group")]
    NotGenerating,
    #[error("expected {expected} generator images, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("image of {element} has shape {rows}x{cols}, expected {dim}x{dim}")]
    Shape {
        element: Elem,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error("modules act through different groups")]
    GroupMismatch,
    #[error("modules live over different fields")]
    FieldMismatch,
    #[error("{0}")]
    Group(#[from] GroupError),
}

/// A representation `g -> rho(g)` of a subgroup of a [`crate::groupcore::GroupTable`].
///
/// The full image table is stored, indexed by position in the acting
/// subgroup's member list. `rho(e)` is the identity and
/// `rho(g) rho(h) = rho(gh)` holds for all members (checked at construction).
#[derive(Clone)]
pub struct Representation {
    group: Subgroup,
    field: PrimeField,
    dim: usize,
    images: Arc<ImageTable>,
    labels: Option<Arc<BasisLabels>>,
}

/// Basis vector names, rendered on first request.
struct BasisLabels {
    render: Box<dyn Fn() -> Vec<String> + Send + Sync>,
    rendered: OnceLock<Vec<String>>,
}

/// Each image in dense and row-compressed form, either filled on demand
/// from the other. Invariant: if `sparse` is unset, every dense slot is set.
struct ImageTable {
    dense: Vec<OnceLock<Matrix>>,
    sparse: OnceLock<Vec<SparseRows>>,
}

impl ImageTable {
    fn from_dense(images: Vec<Matrix>) -> Self {
        ImageTable {
            dense: images.into_iter().map(OnceLock::from).collect(),
            sparse: OnceLock::new(),
        }
    }

    fn from_sparse(images: Vec<SparseRows>) -> Self {
        ImageTable {
            dense: (0..images.len()).map(|_| OnceLock::new()).collect(),
            sparse: OnceLock::from(images),
        }
    }

    fn dense(&self, pos: usize) -> &Matrix {
        self.dense[pos].get_or_init(|| self.sparse.get().expect("image table invariant")[pos].to_dense())
    }

    fn sparse(&self) -> &[SparseRows] {
        self.sparse.get_or_init(|| {
            self.dense
                .iter()
                .map(|m| SparseRows::from_dense(m.get().expect("image table invariant")))
                .collect()
        })
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Representation(dim {} over {} of order-{} subgroup of {})",
            self.dim,
            self.field,
            self.group.order(),
            self.group.parent().name()
        )
    }
}

impl Representation {
    /// Builds the image table from generator images by breadth-first word
    /// evaluation. Every pair `(g, s)` with `s` a generator is checked, which
    /// together with `rho(e) = 1` is equivalent to the full homomorphism law.
    pub fn from_generators(
        group: &Subgroup,
        field: PrimeField,
        dim: usize,
        generator_images: &[(Elem, Matrix)],
    ) -> Result<Self, RepError> {
        let table = group.parent().clone();
        for (g, m) in generator_images {
            if m.rows() != dim || m.cols() != dim {
                return Err(RepError::Shape {
                    element: *g,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim,
                });
            }
            if m.field() != field {
                return Err(RepError::FieldMismatch);
            }
            if !group.contains(*g) {
                return Err(RepError::NotGenerating);
            }
        }
        let mut images: Vec<Option<Matrix>> = vec![None; group.order()];
        images[0] = Some(Matrix::identity(field, dim));
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let a = queue[i];
            let img_a = images[group.position(a).unwrap()].clone().unwrap();
            for (s, img_s) in generator_images {
                let b = table.mul(a, *s);
                let prod = &img_a * img_s;
                let slot = &mut images[group.position(b).unwrap()];
                match slot {
                    None => {
                        *slot = Some(prod);
                        queue.push(b);
                    }
                    Some(existing) if *existing != prod => {
                        return Err(RepError::Inconsistent { element: b })
                    }
                    Some(_) => {}
                }
            }
            i += 1;
        }
        if queue.len() != group.order() {
            return Err(RepError::NotGenerating);
        }
        Ok(Representation {
            group: group.clone(),
            field,
            dim,
            images: Arc::new(ImageTable::from_dense(
                images.into_iter().map(Option::unwrap).collect(),
            )),
            labels: None,
        })
    }

    /// Images listed in the order of `group.generators()`.
    pub fn from_generator_list(
        group: &Subgroup,
        field: PrimeField,
        dim: usize,
        images: Vec<Matrix>,
    ) -> Result<Self, RepError> {
        if images.len() != group.generators().len() {
            return Err(RepError::GeneratorCount {
                expected: group.generators().len(),
                found: images.len(),
            });
        }
        let pairs: Vec<(Elem, Matrix)> = group.generators().iter().copied().zip(images).collect();
        Self::from_generators(group, field, dim, &pairs)
    }

    /// Wraps a complete image table produced by a construction whose
    /// homomorphism law holds by design. Builds with debug assertions
    /// re-verify the law on generators.
    pub(crate) fn from_table(
        group: &Subgroup,
        field: PrimeField,
        dim: usize,
        images: Vec<Matrix>,
    ) -> Self {
        Self::from_image_table(group, field, dim, ImageTable::from_dense(images))
    }

    /// [`Representation::from_table`] for row-compressed images.
    pub(crate) fn from_sparse_table(
        group: &Subgroup,
        field: PrimeField,
        dim: usize,
        images: Vec<SparseRows>,
    ) -> Self {
        Self::from_image_table(group, field, dim, ImageTable::from_sparse(images))
    }

    fn from_image_table(group: &Subgroup, field: PrimeField, dim: usize, images: ImageTable) -> Self {
        assert_eq!(images.dense.len(), group.order());
        let rep = Representation {
            group: group.clone(),
            field,
            dim,
            images: Arc::new(images),
            labels: None,
        };
        debug_assert!(
            rep.check_law().is_ok(),
            "construction produced a non-homomorphism"
        );
        rep
    }

    /// The representation of `group` sending `g` to `rho(map(g))`; the
    /// caller guarantees this is a homomorphism.
    pub(crate) fn pullback(&self, group: &Subgroup, map: impl Fn(Elem) -> Elem) -> Self {
        let pos = |g: Elem| {
            self.group
                .position(map(g))
                .unwrap_or_else(|| panic!("element {g} maps outside the acting group"))
        };
        let table = match self.images.sparse.get() {
            Some(sparse) => {
                ImageTable::from_sparse(group.members().iter().map(|&g| sparse[pos(g)].clone()).collect())
            }
            None => ImageTable::from_dense(
                group.members().iter().map(|&g| self.images.dense(pos(g)).clone()).collect(),
            ),
        };
        Self::from_image_table(group, self.field, self.dim, table)
    }

    /// `rho(e) = 1` and `rho(g) rho(s) = rho(gs)` for every member `g` and
    /// generator `s`.
    pub fn check_law(&self) -> Result<(), RepError> {
        if !self.images.dense(0).is_identity() {
            return Err(RepError::Inconsistent { element: 0 });
        }
        let table = self.group.parent();
        let sparse = self.sparse_images();
        let mut checker = ProductChecker::new(self.field, self.dim);
        for (i, &g) in self.group.members().iter().enumerate() {
            for &s in self.group.generators() {
                let gs = table.mul(g, s);
                let (si, gsi) = (self.group.position(s).unwrap(), self.group.position(gs).unwrap());
                if !checker.product_equals(&sparse[i], &sparse[si], &sparse[gsi]) {
                    return Err(RepError::Inconsistent { element: gs });
                }
            }
        }
        Ok(())
    }

    /// Images in row-compressed form, by member position.
    pub fn sparse_images(&self) -> &[SparseRows] {
        self.images.sparse()
    }

    /// The law on all `|G|^2` pairs; quadratic in the order, for tests.
    pub fn check_law_all_pairs(&self) -> Result<(), RepError> {
        let table = self.group.parent();
        for &g in self.group.members() {
            for &h in self.group.members() {
                if self.image(g) * self.image(h) != *self.image(table.mul(g, h)) {
                    return Err(RepError::Inconsistent {
                        element: table.mul(g, h),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.with_lazy_labels(move || labels.clone())
    }

    /// Labels from `render`, which must return `dim` names.
    fn with_lazy_labels(mut self, render: impl Fn() -> Vec<String> + Send + Sync + 'static) -> Self {
        self.labels = Some(Arc::new(BasisLabels {
            render: Box::new(render),
            rendered: OnceLock::new(),
        }));
        self
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

    /// `rho(g)` for a member `g` (a parent-table index).
    pub fn image(&self, g: Elem) -> &Matrix {
        let pos = self
            .group
            .position(g)
            .unwrap_or_else(|| panic!("element {g} is outside the acting group"));
        self.images.dense(pos)
    }

    /// Images in member order.
    pub fn images(&self) -> impl Iterator<Item = &Matrix> {
        (0..self.group.order()).map(|i| self.images.dense(i))
    }

    pub fn generator_images(&self) -> Vec<Matrix> {
        self.group
            .generators()
            .iter()
            .map(|&g| self.image(g).clone())
            .collect()
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.labels.as_ref().map(|l| {
            let names = l.rendered.get_or_init(|| (l.render)());
            debug_assert_eq!(names.len(), self.dim);
            names.as_slice()
        })
    }

    pub fn act(&self, g: Elem, v: &[u32]) -> Vec<u32> {
        self.image(g).mul_vec(v)
    }

    /// Inverse of [`Representation::to_algebra_module`]: generator matrices
    /// are read in the order of `group.generators()`.
    pub fn from_module(group: &Subgroup, m: &AlgebraModule) -> Result<Self, RepError> {
        Self::from_generator_list(group, m.field(), m.dim(), m.generators().to_vec())
    }

    /// The module over the enveloping algebra of the generator images.
    pub fn to_algebra_module(&self) -> AlgebraModule {
        AlgebraModule::new(
            self.field,
            self.dim,
            self.generator_images(),
            format!("{:?}", self),
        )
    }

    /// `P^{-1} rho(g) P`, i.e. the same module in the basis given by the
    /// columns of `P`.
    pub fn change_basis(&self, p: &Matrix) -> Self {
        let inv = p.inverse().expect("change of basis must be invertible");
        let images = self.images().map(|m| &(&inv * m) * p).collect();
        Representation::from_table(&self.group, self.field, self.dim, images)
    }

    /// Matrices equal on every member.
    pub fn same_matrices(&self, other: &Representation) -> bool {
        self.group == other.group && self.sparse_images() == other.sparse_images()
    }

    /// Whether `t` (target dim x source dim) satisfies
    /// `t rho_self(g) = rho_target(g) t` for every member of the acting group.
    pub fn intertwines_to(&self, target: &Representation, t: &Matrix) -> bool {
        self.group == target.group
            && t.rows() == target.dim
            && t.cols() == self.dim
            && self.intertwining_failure(target, t).is_none()
    }

    /// First member `g` with `t rho_self(g) != rho_target(g) t`; shapes and
    /// groups must already agree.
    pub fn intertwining_failure(&self, target: &Representation, t: &Matrix) -> Option<Elem> {
        let t = SparseRows::from_dense(t);
        let (src, tgt) = (self.sparse_images(), target.sparse_images());
        let mut checker = ProductChecker::new(self.field, self.dim);
        self.group
            .members()
            .iter()
            .enumerate()
            .find(|&(i, _)| !checker.products_agree(&t, &src[i], &tgt[i], &t))
            .map(|(_, &g)| g)
    }
}

pub fn trivial_rep(group: &Subgroup, field: PrimeField) -> Representation {
    let images = vec![Matrix::identity(field, 1); group.order()];
    Representation::from_table(group, field, 1, images)
}

/// Left-regular module with basis `e_h` indexed by member position:
/// `rho(g) e_h = e_{gh}`.
pub fn regular_rep(group: &Subgroup, field: PrimeField) -> Representation {
    let table = group.parent();
    let n = group.order();
    let images = group
        .members()
        .iter()
        .map(|&g| {
            // Row `i` holds the single column `j` with `g h_j = h_i`.
            let ginv = table.inv(g);
            SparseRows::build(field, n, n, |i, out| {
                let j = group.position(table.mul(ginv, group.element(i))).unwrap();
                out.push((j, 1));
            })
        })
        .collect();
    let members = group.clone();
    Representation::from_sparse_table(group, field, n, images).with_lazy_labels(move || {
        let table = members.parent();
        members.members().iter().map(|&h| table.label(h)).collect()
    })
}

/// Permutation module on the left cosets of `sub`, basis ordered by the
/// minimal-index transversal.
pub fn permutation_module(group: &Subgroup, sub: &Subgroup, field: PrimeField) -> Representation {
    induce(&trivial_rep(sub, field), group)
}

/// Restriction to a subgroup of the acting group.
pub fn restrict(v: &Representation, sub: &Subgroup) -> Representation {
    assert!(
        sub.is_subgroup_of(&v.group),
        "restriction to a non-subgroup"
    );
    let mut rep = v.pullback(sub, |g| g);
    rep.labels = v.labels.clone();
    rep
}

/// Induction from the acting group `H` of `w` up to `group`:
/// `g (x_i ⊗ w) = x_k ⊗ h w` where `g x_i = x_k h`.
pub fn induce(w: &Representation, group: &Subgroup) -> Representation {
    let sub = w.group();
    let trans = left_transversal(group, sub);
    let table = group.parent();
    let (m, d) = (trans.len(), w.dim);
    let local = w.sparse_images();
    let images = group
        .members()
        .iter()
        .map(|&g| {
            // Block row `k` receives block column `i` through `rho_W(h)`.
            let mut source = vec![(0, 0); m];
            for (i, &x) in trans.reps().iter().enumerate() {
                let (k, h) = trans.decompose(table.mul(g, x));
                source[k] = (i, sub.position(h).unwrap());
            }
            SparseRows::build(w.field, m * d, m * d, |r, out| {
                let (i, h) = source[r / d];
                out.extend(local[h].row(r % d).iter().map(|&(c, x)| (i * d + c, x)));
            })
        })
        .collect();
    let (reps, table) = (trans.reps().to_vec(), table.clone());
    Representation::from_sparse_table(group, w.field, m * d, images).with_lazy_labels(move || {
        reps.iter()
            .flat_map(|&x| (0..d).map(move |j| (x, j)))
            .map(|(x, j)| format!("{} ⊗ e{}", table.label(x), j))
            .collect()
    })
}

/// Inner tensor product with Kronecker images.
pub fn tensor(v1: &Representation, v2: &Representation) -> Result<Representation, RepError> {
    if v1.group != v2.group {
        return Err(RepError::GroupMismatch);
    }
    if v1.field != v2.field {
        return Err(RepError::FieldMismatch);
    }
    let images = v1
        .sparse_images()
        .iter()
        .zip(v2.sparse_images())
        .map(|(a, b)| a.kronecker(b))
        .collect();
    Ok(Representation::from_sparse_table(
        &v1.group,
        v1.field,
        v1.dim * v2.dim,
        images,
    ))
}

/// Action on an invariant subspace, in the coordinates of `basis`.
pub fn subspace_representation(v: &Representation, basis: &[Vec<u32>]) -> Representation {
    let b = Matrix::from_columns(v.field, v.dim, basis);
    let images = v
        .images()
        .map(|m| b.solve(&(m * &b)).expect("subspace must be invariant"))
        .collect();
    Representation::from_table(&v.group, v.field, basis.len(), images)
}

/// Block-diagonal sum in argument order.
pub fn direct_sum(parts: &[&Representation]) -> Result<Representation, RepError> {
    let first = parts.first().expect("direct sum of nothing");
    if parts.iter().any(|p| p.group != first.group) {
        return Err(RepError::GroupMismatch);
    }
    if parts.iter().any(|p| p.field != first.field) {
        return Err(RepError::FieldMismatch);
    }
    let dim = parts.iter().map(|p| p.dim).sum();
    let images = (0..first.group.order())
        .map(|i| {
            let blocks: Vec<&SparseRows> = parts.iter().map(|p| &p.sparse_images()[i]).collect();
            SparseRows::block_diagonal(first.field, &blocks)
        })
        .collect();
    Ok(Representation::from_sparse_table(
        &first.group,
        first.field,
        dim,
        images,
    ))
}

/// `W^g`: same space, `x` acting as `rho_W(g x g^{-1})`. Requires `g` to
/// normalize the acting group.
pub fn conjugate_module(w: &Representation, g: Elem) -> Result<Representation, RepError> {
    let table = w.group.parent();
    for &x in w.group.generators() {
        if !w.group.contains(table.conj(g, x)) {
            return Err(GroupError::NotNormal {
                conjugator: g,
                element: x,
            }
            .into());
        }
    }
    Ok(w.pullback(&w.group, |x| table.conj(g, x)))
}

/// Inflation of a quotient module: `g` acts as `u(gN)`.
pub fn inflate(u: &Representation, quotient: &QuotientGroup) -> Representation {
    assert!(Arc::ptr_eq(u.group.parent(), quotient.table()) && u.group.is_full());
    u.pullback(quotient.group(), |g| quotient.project(g))
}

/// Contragredient module, `g -> rho(g^{-1})^T`.
pub fn dual(v: &Representation) -> Representation {
    let table = v.group.parent();
    let images = v
        .group
        .members()
        .iter()
        .map(|&g| v.image(table.inv(g)).transpose())
        .collect();
    Representation::from_table(&v.group, v.field, v.dim, images)
}

#[cfg(test)]
mod tests;
