use super::hom::hom_basis;
use super::MeataxeError;
use crate::exactfield::{factor, linear_combination, EchelonBasis, Matrix, Polynomial};
use crate::repmod::AlgebraModule;

/// Candidate elements examined by [`recognize_field_extension`].
const FIELD_SEARCH_BUDGET: usize = 5000;

#[derive(Clone, Debug)]
pub struct EndRing {
    pub module: AlgebraModule,
    pub basis: Vec<Matrix>,
    pub is_scalar: bool,
    /// Set when the ring was recognized as a field extension of the base field.
    pub field_degree: Option<usize>,
}

impl EndRing {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotFieldWitness {
    /// Nonzero `a`, `b` with `a b = 0`.
    ZeroDivisor { a: Matrix, b: Matrix },
    /// `a b != b a`.
    NonCommutative { a: Matrix, b: Matrix },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldRecognition {
    Field {
        degree: usize,
        min_poly: Polynomial,
        generator: Matrix,
    },
    NotField(NotFieldWitness),
    /// No primitive element and no witness within the search budget.
    BudgetExhausted,
}

/// Endomorphism ring as the self-hom space; closure under products is checked.
pub fn end_ring(m: &AlgebraModule) -> Result<EndRing, MeataxeError> {
    if m.dim() == 0 {
        return Err(MeataxeError::ZeroDimension);
    }
    let basis = hom_basis(m, m)?.basis;
    let n = m.dim();
    let mut span = EchelonBasis::new(m.field(), n * n);
    for b in &basis {
        span.insert(b.entries());
    }
    assert!(span.contains(Matrix::identity(m.field(), n).entries()));
    for a in &basis {
        for b in &basis {
            assert!(
                span.contains((a * b).entries()),
                "endomorphisms must be closed under products"
            );
        }
    }
    let mut ring = EndRing {
        module: m.clone(),
        is_scalar: basis.len() == 1,
        basis,
        field_degree: None,
    };
    if let FieldRecognition::Field { degree, .. } = recognize_field_extension(&ring) {
        ring.field_degree = Some(degree);
    }
    Ok(ring)
}

/// Looks for a primitive element: an element whose minimal polynomial is
/// irreducible of degree equal to the ring dimension. Basis elements come
/// first, then two-term combinations `b_i + c b_j`, then three-term ones.
pub fn recognize_field_extension(ring: &EndRing) -> FieldRecognition {
    let basis = &ring.basis;
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if a * b != b * a {
                return FieldRecognition::NotField(NotFieldWitness::NonCommutative {
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }
    }
    let field = ring.module.field();
    let d = basis.len();
    let p = field.modulus();
    let check = |x: &Matrix| -> Option<FieldRecognition> {
        let min_poly = Polynomial::min_poly(x).expect("endomorphisms are square");
        let factors = factor(&min_poly);
        if factors.len() > 1 || factors[0].1 > 1 {
            let g = factors[0].0.clone();
            let a = g.eval_matrix(x);
            let b = min_poly.exact_div(&g).eval_matrix(x);
            return Some(FieldRecognition::NotField(NotFieldWitness::ZeroDivisor {
                a,
                b,
            }));
        }
        (min_poly.degree() == Some(d)).then(|| FieldRecognition::Field {
            degree: d,
            min_poly,
            generator: x.clone(),
        })
    };
    let mut tried = 0;
    let singles = (0..d).map(|i| vec![(i, 1u32)]);
    let pairs = (0..d)
        .flat_map(move |i| (i + 1..d).flat_map(move |j| (1..p).map(move |c| vec![(i, 1), (j, c)])));
    let three = (0..d).flat_map(move |i| {
        (i + 1..d).flat_map(move |j| {
            (j + 1..d).flat_map(move |k| {
                (1..p).flat_map(move |c| (1..p).map(move |e| vec![(i, 1), (j, c), (k, e)]))
            })
        })
    });
    for terms in singles.chain(pairs).chain(three) {
        if tried >= FIELD_SEARCH_BUDGET {
            return FieldRecognition::BudgetExhausted;
        }
        tried += 1;
        let mut coeffs = vec![0u32; d];
        for (i, c) in terms {
            coeffs[i] = c;
        }
        let x = linear_combination(field, &coeffs, basis);
        if let Some(verdict) = check(&x) {
            return verdict;
        }
    }
    FieldRecognition::BudgetExhausted
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

    #[test]
    fn scalar_endomorphisms() {
        let g = Subgroup::full(catalog_entry("S3").unwrap().into_arc());
        let e = end_ring(&trivial_rep(&g, f(7)).to_algebra_module()).unwrap();
        assert!(e.is_scalar);
        assert_eq!(e.field_degree, Some(1));
    }

    #[test]
    fn companion_module_has_quadratic_field() {
        let g = Subgroup::full(catalog_entry("C4").unwrap().into_arc());
        let c = Polynomial::from_i64(f(3), &[-2, 0, 1]).companion();
        let m = Representation::from_generator_list(&g, f(3), 2, vec![c])
            .unwrap()
            .to_algebra_module();
        let e = end_ring(&m).unwrap();
        assert_eq!(e.dim(), 2);
        assert_eq!(e.field_degree, Some(2));
        match recognize_field_extension(&e) {
            FieldRecognition::Field {
                degree, min_poly, ..
            } => {
                assert_eq!(degree, 2);
                assert!(min_poly.is_irreducible().unwrap());
            }
            other => panic!("expected a field, got {other:?}"),
        }
    }

    #[test]
    fn regular_c2_has_zero_divisors() {
        let g = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
        let e = end_ring(&regular_rep(&g, f(3)).to_algebra_module()).unwrap();
        assert_eq!(e.dim(), 2);
        match recognize_field_extension(&e) {
            FieldRecognition::NotField(NotFieldWitness::ZeroDivisor { a, b }) => {
                assert!(!a.is_zero() && !b.is_zero() && (&a * &b).is_zero());
            }
            other => panic!("expected a zero divisor, got {other:?}"),
        }
    }

    #[test]
    fn noncommutative_endomorphisms() {
        let m = AlgebraModule::new(f(2), 2, vec![], "bare");
        let e = end_ring(&m).unwrap();
        assert_eq!(e.dim(), 4);
        assert!(matches!(
            recognize_field_extension(&e),
            FieldRecognition::NotField(NotFieldWitness::NonCommutative { .. })
        ));
    }
}
