use super::{CocycleError, FactorSet};
use crate::exactfield::{Matrix, PrimeField};
use crate::groupcore::{Elem, QuotientGroup, Subgroup};
use crate::meataxe::chop;
use crate::repmod::AlgebraModule;

/// The twisted group algebra `F^delta[Q]` with basis `u_q` and
/// `u_a u_b = delta(a,b) u_{ab}`, given through its left regular module.
#[derive(Clone, Debug)]
pub struct TwistedAlgebra {
    quotient: QuotientGroup,
    factor_set: FactorSet,
    regular_module: AlgebraModule,
}

impl TwistedAlgebra {
    pub fn quotient(&self) -> &QuotientGroup {
        &self.quotient
    }

    pub fn field(&self) -> PrimeField {
        self.factor_set.field()
    }

    pub fn factor_set(&self) -> &FactorSet {
        &self.factor_set
    }

    /// Generators are left multiplications by `u_s`, `s` running over the
    /// generators of the quotient table.
    pub fn regular_module(&self) -> &AlgebraModule {
        &self.regular_module
    }

    /// Left multiplication by `u_q` on the basis `{u_h}`.
    pub fn left_multiplication(&self, q: Elem) -> Matrix {
        left_mult(&self.factor_set, q)
    }

    /// Action of every `u_q` (indexed by quotient element) on a module whose
    /// generators are the actions of `u_s` for the quotient generators.
    pub fn basis_action(&self, u: &AlgebraModule) -> Result<Vec<Matrix>, CocycleError> {
        let q = self.factor_set.group();
        let table = q.parent();
        let gens = table.generators();
        if u.generators().len() != gens.len() || u.field() != self.field() {
            return Err(CocycleError::Incompatible);
        }
        let field = self.field();
        let e = table.identity();
        let mut act: Vec<Option<Matrix>> = vec![None; table.order()];
        act[e] = Some(Matrix::scalar(field, u.dim(), self.factor_set.value(e, e)));
        let mut queue = vec![e];
        let mut i = 0;
        while i < queue.len() {
            let a = queue[i];
            for (&s, gen) in gens.iter().zip(u.generators()) {
                let b = table.mul(a, s);
                if act[b].is_none() {
                    let c = field.inv(self.factor_set.value(a, s));
                    act[b] = Some((act[a].as_ref().unwrap() * gen).scale(c));
                    queue.push(b);
                }
            }
            i += 1;
        }
        Ok(act
            .into_iter()
            .map(|m| m.expect("generators generate the quotient"))
            .collect())
    }
}

fn left_mult(delta: &FactorSet, q: Elem) -> Matrix {
    let group = delta.group();
    let table = group.parent();
    let n = table.order();
    let mut m = Matrix::zeros(delta.field(), n, n);
    for h in table.elements() {
        m.set(table.mul(q, h), h, delta.value(q, h));
    }
    m
}

pub fn twisted_group_algebra(
    quotient: &QuotientGroup,
    delta: &FactorSet,
) -> Result<TwistedAlgebra, CocycleError> {
    let q = Subgroup::full(quotient.table().clone());
    if *delta.group() != q {
        return Err(CocycleError::Incompatible);
    }
    let table = quotient.table();
    let mults: Vec<Matrix> = table.elements().map(|a| left_mult(delta, a)).collect();
    for a in table.elements() {
        for b in table.elements() {
            if &mults[a] * &mults[b] != mults[table.mul(a, b)].scale(delta.value(a, b)) {
                return Err(CocycleError::NotProjective { g: a, h: b });
            }
        }
    }
    let generators = table
        .generators()
        .iter()
        .map(|&s| mults[s].clone())
        .collect();
    let regular_module = AlgebraModule::new(
        delta.field(),
        table.order(),
        generators,
        "twisted regular module",
    );
    Ok(TwistedAlgebra {
        quotient: quotient.clone(),
        factor_set: delta.clone(),
        regular_module,
    })
}

/// One representative per isomorphism class of composition factors of the
/// regular module.
pub fn twisted_irreducibles(algebra: &TwistedAlgebra) -> Result<Vec<AlgebraModule>, CocycleError> {
    Ok(chop(&algebra.regular_module)?
        .classes
        .into_iter()
        .map(|(m, _)| m)
        .collect())
}
