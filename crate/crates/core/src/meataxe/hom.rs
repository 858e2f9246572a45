use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MeataxeError;
use crate::exactfield::{linear_combination, Matrix, PrimeField};
use crate::repmod::{AlgebraModule, RepError, Representation};

const RANDOM_COMBINATIONS: usize = 64;
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;
const SEED: u64 = 0x686f_6d73;

/// Basis of the intertwiners `T` (target dim x source dim) with
/// `T a_i = b_i T` for every generator pair.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub source: AlgebraModule,
    pub target: AlgebraModule,
    pub basis: Vec<Matrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

pub fn hom_basis(source: &AlgebraModule, target: &AlgebraModule) -> Result<HomBasis, MeataxeError> {
    if source.field() != target.field() || source.generators().len() != target.generators().len() {
        return Err(MeataxeError::Incompatible);
    }
    let pairs: Vec<(&Matrix, &Matrix)> = source
        .generators()
        .iter()
        .zip(target.generators())
        .collect();
    let basis = intertwiners(source.field(), source.dim(), target.dim(), &pairs);
    Ok(HomBasis {
        source: source.clone(),
        target: target.clone(),
        basis,
    })
}

pub fn hom_basis_reps(
    source: &Representation,
    target: &Representation,
) -> Result<HomBasis, MeataxeError> {
    check_reps(source, target)?;
    hom_basis(&source.to_algebra_module(), &target.to_algebra_module())
}

/// Same space as [`hom_basis_reps`], but solved from one stacked system
/// with a constraint block for every group element. Used as a cross-check.
pub fn hom_basis_all_elements(
    source: &Representation,
    target: &Representation,
) -> Result<Vec<Matrix>, MeataxeError> {
    check_reps(source, target)?;
    let field = source.field();
    let (n1, n2) = (source.dim(), target.dim());
    let left = Matrix::identity(field, n2);
    let right = Matrix::identity(field, n1);
    let blocks: Vec<Matrix> = source
        .group()
        .members()
        .iter()
        .map(|&g| {
            left.kronecker(&source.image(g).transpose())
                .sub_matrix(&target.image(g).kronecker(&right))
        })
        .collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(field, &refs);
    Ok(system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_vec(field, n2, n1, v))
        .collect())
}

fn check_reps(source: &Representation, target: &Representation) -> Result<(), MeataxeError> {
    if source.group() != target.group() {
        return Err(RepError::GroupMismatch.into());
    }
    if source.field() != target.field() {
        return Err(RepError::FieldMismatch.into());
    }
    Ok(())
}

/// Solves generator by generator, shrinking the coefficient space each time
/// instead of building the full Kronecker system.
fn intertwiners(
    field: PrimeField,
    n1: usize,
    n2: usize,
    pairs: &[(&Matrix, &Matrix)],
) -> Vec<Matrix> {
    let mut basis: Vec<Matrix> = (0..n1 * n2)
        .map(|i| {
            let mut t = Matrix::zeros(field, n2, n1);
            t.set(i / n1, i % n1, 1);
            t
        })
        .collect();
    for (a, b) in pairs {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<u32>> = basis
            .iter()
            .map(|t| (t * *a).sub_matrix(&(*b * t)).entries().to_vec())
            .collect();
        let system = Matrix::from_columns(field, n1 * n2, &images);
        let kernel = system.nullspace();
        basis = kernel
            .iter()
            .map(|c| linear_combination(field, c, &basis))
            .collect();
    }
    basis
}

/// An invertible intertwiner, if one is found.
///
/// For irreducible modules the answer is exact: any nonzero hom is
/// invertible. Otherwise the search tries basis elements, seeded random
/// combinations and, when the hom space has at most 2^16 elements, every
/// element; beyond that a `None` is inconclusive.
pub fn is_isomorphic(
    m1: &AlgebraModule,
    m2: &AlgebraModule,
) -> Result<Option<Matrix>, MeataxeError> {
    if m1.dim() != m2.dim() {
        return Ok(None);
    }
    if m1.field() != m2.field() || m1.generators().len() != m2.generators().len() {
        return Err(MeataxeError::Incompatible);
    }
    let hom = hom_basis(m1, m2)?;
    if hom.basis.is_empty() {
        return Ok(None);
    }
    if let Some(t) = hom.basis.iter().find(|t| t.is_invertible()) {
        return Ok(Some(t.clone()));
    }
    let field = m1.field();
    let p = field.modulus();
    let k = hom.basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_COMBINATIONS {
        let coeffs: Vec<u32> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        let t = linear_combination(field, &coeffs, &hom.basis);
        if t.is_invertible() {
            return Ok(Some(t));
        }
    }
    let space = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(p as u64));
    if space.is_some_and(|s| s <= EXHAUSTIVE_LIMIT) {
        let mut coeffs = vec![0u32; k];
        loop {
            let mut i = 0;
            while i < k {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            let t = linear_combination(field, &coeffs, &hom.basis);
            if t.is_invertible() {
                return Ok(Some(t));
            }
        }
    } else {
        log::warn!("is_isomorphic: hom space of dimension {k} too large for exhaustive search");
    }
    Ok(None)
}

pub fn is_isomorphic_reps(
    r1: &Representation,
    r2: &Representation,
) -> Result<Option<Matrix>, MeataxeError> {
    check_reps(r1, r2)?;
    is_isomorphic(&r1.to_algebra_module(), &r2.to_algebra_module())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupcore::{catalog_entry, subgroup_generated, Subgroup};
    use crate::repmod::{induce, regular_rep, restrict, trivial_rep};

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn small_hom_spaces() {
        let c2 = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
        let triv = trivial_rep(&c2, f(5));
        let sign = Representation::from_generator_list(
            &c2,
            f(5),
            1,
            vec![Matrix::from_rows(f(5), &[[-1]])],
        )
        .unwrap();
        assert_eq!(hom_basis_reps(&triv, &triv).unwrap().dim(), 1);
        assert_eq!(hom_basis_reps(&triv, &sign).unwrap().dim(), 0);
        assert!(is_isomorphic_reps(&triv, &sign).unwrap().is_none());
        let reg = regular_rep(&c2, f(5));
        assert_eq!(hom_basis_reps(&reg, &reg).unwrap().dim(), 2);
        assert_eq!(hom_basis_all_elements(&reg, &reg).unwrap().len(), 2);
    }

    #[test]
    fn multiplicity_in_restricted_induced() {
        let t = catalog_entry("S3").unwrap().into_arc();
        let r = t.elements().find(|&e| t.label(e) == "(0 1 2)").unwrap();
        let a3 = subgroup_generated(&t, &[r]);
        let w =
            Representation::from_generators(&a3, f(7), 1, &[(r, Matrix::from_rows(f(7), &[[2]]))])
                .unwrap();
        let v = induce(&w, &Subgroup::full(t.clone()));
        let res = restrict(&v, &a3);
        assert_eq!(hom_basis_reps(&w, &res).unwrap().dim(), 1);
        let w4 =
            Representation::from_generators(&a3, f(7), 1, &[(r, Matrix::from_rows(f(7), &[[4]]))])
                .unwrap();
        assert!(is_isomorphic_reps(&w, &w4).unwrap().is_none());
        let id = is_isomorphic_reps(&v, &v).unwrap().unwrap();
        assert!(v.intertwines_to(&v, &id));
    }

    #[test]
    fn incompatible_modules_are_rejected() {
        let a = AlgebraModule::new(f(3), 1, vec![], "a");
        let b = AlgebraModule::new(f(5), 1, vec![], "b");
        assert_eq!(hom_basis(&a, &b).unwrap_err(), MeataxeError::Incompatible);
    }
}
