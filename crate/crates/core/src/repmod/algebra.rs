use std::fmt;

use crate::exactfield::{Matrix, PrimeField};

/// A module over the algebra generated by a list of square matrices.
///
/// Generators need not be invertible; the enveloping algebra always contains
/// the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraModule {
    field: PrimeField,
    dim: usize,
    generators: Vec<Matrix>,
    tag: String,
}

impl fmt::Debug for AlgebraModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AlgebraModule(dim {} over {}, {} generators: {})",
            self.dim,
            self.field,
            self.generators.len(),
            self.tag
        )
    }
}

impl AlgebraModule {
    pub fn new(
        field: PrimeField,
        dim: usize,
        generators: Vec<Matrix>,
        tag: impl Into<String>,
    ) -> Self {
        for g in &generators {
            assert!(
                g.rows() == dim && g.cols() == dim,
                "generator shape must be {dim}x{dim}"
            );
            assert_eq!(g.field(), field, "generator over the wrong field");
        }
        AlgebraModule {
            field,
            dim,
            generators,
            tag: tag.into(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }

    /// Same module written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Self {
        let inv = p.inverse().expect("change of basis must be invertible");
        let generators = self.generators.iter().map(|g| &(&inv * g) * p).collect();
        AlgebraModule::new(self.field, self.dim, generators, self.tag.clone())
    }

    /// Whether `t` (target dim x source dim) commutes with the actions.
    pub fn intertwines_to(&self, target: &AlgebraModule, t: &Matrix) -> bool {
        self.generators.len() == target.generators.len()
            && t.rows() == target.dim
            && t.cols() == self.dim
            && self
                .generators
                .iter()
                .zip(&target.generators)
                .all(|(a, b)| t * a == b * t)
    }

    /// Transposed generators, the dual module of the opposite algebra.
    pub fn transposed(&self) -> Self {
        AlgebraModule::new(
            self.field,
            self.dim,
            self.generators.iter().map(Matrix::transpose).collect(),
            format!("{}^T", self.tag),
        )
    }
}
