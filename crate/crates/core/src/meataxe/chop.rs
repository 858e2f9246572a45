use super::hom::is_isomorphic;
use super::irreducible::{is_irreducible, Irreducibility};
use super::MeataxeError;
use crate::exactfield::{EchelonBasis, Matrix};
use crate::repmod::AlgebraModule;

/// Composition factors of a module together with their isomorphism classes.
#[derive(Clone, Debug)]
pub struct Chop {
    /// Factors bottom-up along the composition series that was found.
    pub factors: Vec<AlgebraModule>,
    /// One representative per isomorphism class, with multiplicity.
    pub classes: Vec<(AlgebraModule, usize)>,
}

pub fn chop(m: &AlgebraModule) -> Result<Chop, MeataxeError> {
    let factors = composition_factors(m)?;
    let classes = distinct_factors(&factors)?;
    Ok(Chop { factors, classes })
}

/// Irreducible subquotients, found by recursively splitting along the
/// submodule witnesses returned by the irreducibility test.
pub fn composition_factors(m: &AlgebraModule) -> Result<Vec<AlgebraModule>, MeataxeError> {
    let mut out = Vec::new();
    collect(m, &mut out)?;
    Ok(out)
}

fn collect(m: &AlgebraModule, out: &mut Vec<AlgebraModule>) -> Result<(), MeataxeError> {
    if m.dim() == 0 {
        return Ok(());
    }
    match is_irreducible(m)? {
        Irreducibility::Irreducible => out.push(m.clone()),
        Irreducibility::Reducible { submodule } => {
            collect(&subspace_action(m, &submodule), out)?;
            collect(&quotient_action(m, &submodule), out)?;
        }
    }
    Ok(())
}

/// Groups irreducible modules into isomorphism classes, keeping first-seen order.
pub fn distinct_factors(
    factors: &[AlgebraModule],
) -> Result<Vec<(AlgebraModule, usize)>, MeataxeError> {
    let mut classes: Vec<(AlgebraModule, usize)> = Vec::new();
    'next: for f in factors {
        for (rep, count) in classes.iter_mut() {
            if is_isomorphic(rep, f)?.is_some() {
                *count += 1;
                continue 'next;
            }
        }
        classes.push((f.clone(), 1));
    }
    Ok(classes)
}

/// Action on an invariant subspace, in the coordinates of `basis`.
pub fn subspace_action(m: &AlgebraModule, basis: &[Vec<u32>]) -> AlgebraModule {
    let field = m.field();
    let b = Matrix::from_columns(field, m.dim(), basis);
    let generators = m
        .generators()
        .iter()
        .map(|g| b.solve(&(g * &b)).expect("subspace must be invariant"))
        .collect();
    AlgebraModule::new(field, basis.len(), generators, format!("sub({})", m.tag()))
}

/// Action on the quotient by an invariant subspace, in the coordinates of
/// the standard basis vectors that complete `basis`.
pub fn quotient_action(m: &AlgebraModule, basis: &[Vec<u32>]) -> AlgebraModule {
    let field = m.field();
    let n = m.dim();
    let k = basis.len();
    let mut span = EchelonBasis::new(field, n);
    let mut columns: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in basis {
        assert!(span.insert(v), "submodule basis must be independent");
        columns.push(v.clone());
    }
    for i in 0..n {
        let mut e = vec![0u32; n];
        e[i] = 1;
        if span.insert(&e) {
            columns.push(e);
        }
    }
    let p = Matrix::from_columns(field, n, &columns);
    let inv = p.inverse().expect("completed basis is invertible");
    let generators = m
        .generators()
        .iter()
        .map(|g| (&(&inv * g) * &p).submatrix(k..n, k..n))
        .collect();
    AlgebraModule::new(field, n - k, generators, format!("quot({})", m.tag()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::PrimeField;
    use crate::groupcore::{catalog_entry, Subgroup};
    use crate::repmod::{regular_rep, trivial_rep, Representation};

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn dims(c: &Chop) -> Vec<(usize, usize)> {
        let mut d: Vec<_> = c.classes.iter().map(|(m, k)| (m.dim(), *k)).collect();
        d.sort();
        d
    }

    #[test]
    fn irreducible_is_its_own_factor() {
        let g = Subgroup::full(catalog_entry("S3").unwrap().into_arc());
        let t = trivial_rep(&g, f(7)).to_algebra_module();
        assert_eq!(composition_factors(&t).unwrap().len(), 1);
    }

    #[test]
    fn regular_c2_splits_into_trivial_and_sign() {
        let g = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
        let c = chop(&regular_rep(&g, f(3)).to_algebra_module()).unwrap();
        assert_eq!(dims(&c), vec![(1, 1), (1, 1)]);
        let triv = trivial_rep(&g, f(3)).to_algebra_module();
        let sign = Representation::from_generator_list(
            &g,
            f(3),
            1,
            vec![Matrix::from_rows(f(3), &[[-1]])],
        )
        .unwrap()
        .to_algebra_module();
        for target in [&triv, &sign] {
            assert!(c
                .factors
                .iter()
                .any(|x| is_isomorphic(x, target).unwrap().is_some()));
        }
    }

    #[test]
    fn regular_s3_over_f7() {
        let g = Subgroup::full(catalog_entry("S3").unwrap().into_arc());
        let c = chop(&regular_rep(&g, f(7)).to_algebra_module()).unwrap();
        assert_eq!(dims(&c), vec![(1, 1), (1, 1), (2, 2)]);
    }

    #[test]
    fn quotient_and_sub_dimensions_add_up() {
        let g = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
        let m = regular_rep(&g, f(3)).to_algebra_module();
        let sub = vec![vec![1, 1]];
        let s = subspace_action(&m, &sub);
        let q = quotient_action(&m, &sub);
        assert_eq!(s.generators()[0], Matrix::from_rows(f(3), &[[1]]));
        assert_eq!(q.generators()[0], Matrix::from_rows(f(3), &[[-1]]));
    }
}
