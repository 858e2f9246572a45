//! Norton's irreducibility criterion in the Holt–Rees form.
//!
//! For an algebra element `c` and an irreducible factor `g` of its minimal
//! polynomial with `nullity g(c) = deg g`, the kernel of `g(c)` is a simple
//! `F[c]`-module. Then the module is irreducible iff one nonzero kernel
//! vector spins to everything and one nonzero kernel vector of the transpose
//! spins to everything under the dual action.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::spin::spin_basis;
use super::MeataxeError;
use crate::exactfield::{factor, linear_combination, EchelonBasis, Matrix, Polynomial, PrimeField};
use crate::repmod::AlgebraModule;

/// Random algebra elements tried before the deterministic fallback.
pub const RANDOM_TRIES: usize = 200;
const SEED: u64 = 0x6e6f_7274_6f6e;
const SWEEP_BUDGET: usize = 5000;
const LINE_BUDGET: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace, verified before it is returned.
    Reducible {
        submodule: Vec<Vec<u32>>,
    },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

pub fn is_irreducible(m: &AlgebraModule) -> Result<Irreducibility, MeataxeError> {
    let n = m.dim();
    if n == 0 {
        return Err(MeataxeError::ZeroDimension);
    }
    if n == 1 {
        return Ok(Irreducibility::Irreducible);
    }
    let field = m.field();
    let mut e0 = vec![0u32; n];
    e0[0] = 1;
    let first = spin_basis(field, m.generators(), n, &[e0]);
    if first.len() < n {
        return Ok(reducible(m, first.into_vectors()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let gens = m.generators();
    let mut pool: Vec<Matrix> = if gens.is_empty() {
        vec![Matrix::identity(field, n)]
    } else {
        gens.to_vec()
    };
    for _ in 0..RANDOM_TRIES {
        if !gens.is_empty() {
            let a = &pool[rng.gen_range(0..pool.len())];
            let b = &gens[rng.gen_range(0..gens.len())];
            let word = a * b;
            pool.push(word);
        }
        let terms = rng.gen_range(1..=3.min(pool.len()));
        let picks: Vec<Matrix> = (0..terms)
            .map(|_| pool[rng.gen_range(0..pool.len())].clone())
            .collect();
        let coeffs: Vec<u32> = (0..terms)
            .map(|_| rng.gen_range(1..field.modulus().max(2)))
            .collect();
        let element = linear_combination(field, &coeffs, &picks);
        if let Probe::Decided(v) = probe(m, &element) {
            return Ok(v);
        }
    }
    log::debug!(
        "meataxe: random phase inconclusive on {:?}, using fallback",
        m
    );
    fallback(m)
}

enum Probe {
    Decided(Irreducibility),
    /// A singular element whose kernel is not a simple `F[c]`-module; kept
    /// for the exhaustive Norton test.
    Singular(Matrix),
    Nothing,
}

fn probe(m: &AlgebraModule, element: &Matrix) -> Probe {
    let n = m.dim();
    let minimal = Polynomial::min_poly(element).expect("algebra elements are square");
    let mut best: Option<(usize, Matrix)> = None;
    for (g, _) in factor(&minimal) {
        let deg = g.degree().unwrap();
        let b = g.eval_matrix(element);
        let kernel = b.nullspace();
        let sub = spin_basis(m.field(), m.generators(), n, &kernel[..1]);
        if sub.len() < n {
            return Probe::Decided(reducible(m, sub.into_vectors()));
        }
        if kernel.len() == deg {
            let w = b.transpose().nullspace();
            let transposed: Vec<Matrix> = m.generators().iter().map(Matrix::transpose).collect();
            let dual = spin_basis(m.field(), &transposed, n, &w[..1]);
            if dual.len() < n {
                return Probe::Decided(reducible(m, annihilator(m.field(), n, dual.vectors())));
            }
            return Probe::Decided(Irreducibility::Irreducible);
        }
        if kernel.len() < n && best.as_ref().is_none_or(|(k, _)| kernel.len() < *k) {
            best = Some((kernel.len(), b));
        }
    }
    match best {
        Some((_, b)) => Probe::Singular(b),
        None => Probe::Nothing,
    }
}

/// Deterministic completion: Burnside's criterion on the enveloping algebra,
/// a budgeted sweep of algebra elements, then Norton's test over every line
/// of the smallest kernel found.
fn fallback(m: &AlgebraModule) -> Result<Irreducibility, MeataxeError> {
    let n = m.dim();
    let field = m.field();
    let algebra = enveloping_algebra(m);
    if algebra.len() == n * n {
        return Ok(Irreducibility::Irreducible);
    }
    let mut best: Option<Matrix> = None;
    let consider = |c: &Matrix, best: &mut Option<Matrix>| -> Option<Irreducibility> {
        match probe(m, c) {
            Probe::Decided(v) => Some(v),
            Probe::Singular(b) => {
                let nullity = n - b.rank();
                if best.as_ref().is_none_or(|x| nullity < n - x.rank()) {
                    *best = Some(b);
                }
                None
            }
            Probe::Nothing => None,
        }
    };
    let mut tried = 0;
    'sweep: for i in 0..algebra.len() {
        if let Some(v) = consider(&algebra[i], &mut best) {
            return Ok(v);
        }
        tried += 1;
        for j in i + 1..algebra.len() {
            for c in 1..field.modulus() {
                if tried >= SWEEP_BUDGET {
                    break 'sweep;
                }
                let x =
                    linear_combination(field, &[1, c], &[algebra[i].clone(), algebra[j].clone()]);
                if let Some(v) = consider(&x, &mut best) {
                    return Ok(v);
                }
                tried += 1;
            }
        }
    }
    match best {
        Some(b) => exhaustive_norton(m, &b),
        None => Err(MeataxeError::Undecided),
    }
}

fn exhaustive_norton(m: &AlgebraModule, singular: &Matrix) -> Result<Irreducibility, MeataxeError> {
    let n = m.dim();
    let field = m.field();
    let kernel = singular.nullspace();
    let co_kernel = singular.transpose().nullspace();
    let lines = |k: usize| -> u64 {
        let p = field.modulus() as u64;
        (0..k).fold(0u64, |acc, _| acc.saturating_mul(p).saturating_add(1))
    };
    if lines(kernel.len()).max(lines(co_kernel.len())) > LINE_BUDGET {
        return Err(MeataxeError::Undecided);
    }
    for v in each_line(field, &kernel) {
        let sub = spin_basis(field, m.generators(), n, &[v]);
        if sub.len() < n {
            return Ok(reducible(m, sub.into_vectors()));
        }
    }
    let transposed: Vec<Matrix> = m.generators().iter().map(Matrix::transpose).collect();
    for w in each_line(field, &co_kernel) {
        let dual = spin_basis(field, &transposed, n, &[w]);
        if dual.len() < n {
            return Ok(reducible(m, annihilator(field, n, dual.vectors())));
        }
    }
    Ok(Irreducibility::Irreducible)
}

/// One vector per line of the span of `basis` (leading coefficient 1).
fn each_line(field: PrimeField, basis: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = field.modulus();
    let k = basis.len();
    let mut out = Vec::new();
    for lead in 0..k {
        let free = k - lead - 1;
        let mut coeffs = vec![0u32; free];
        loop {
            let mut v = basis[lead].clone();
            for (c, b) in coeffs.iter().zip(&basis[lead + 1..]) {
                if *c != 0 {
                    for (x, &y) in v.iter_mut().zip(b) {
                        *x = field.add(*x, field.mul(*c, y));
                    }
                }
            }
            out.push(v);
            let mut i = 0;
            while i < free {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
            if i == free {
                break;
            }
        }
    }
    out
}

/// Basis of the span of all words in the generators (identity included).
pub(crate) fn enveloping_algebra(m: &AlgebraModule) -> Vec<Matrix> {
    let n = m.dim();
    let field = m.field();
    let mut basis = EchelonBasis::new(field, n * n);
    let identity = Matrix::identity(field, n);
    basis.insert(identity.entries());
    let mut out = vec![identity];
    let mut i = 0;
    while i < out.len() && out.len() < n * n {
        let x = out[i].clone();
        for g in m.generators() {
            let y = g * &x;
            if basis.insert(y.entries()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// `{v : <u, v> = 0 for all u in rows}`.
pub(crate) fn annihilator(field: PrimeField, n: usize, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    Matrix::from_row_vectors(field, n, rows).nullspace()
}

fn reducible(m: &AlgebraModule, submodule: Vec<Vec<u32>>) -> Irreducibility {
    assert!(
        verify_submodule(m, &submodule),
        "meataxe produced an invalid submodule witness"
    );
    Irreducibility::Reducible { submodule }
}

/// Nonzero, proper and mapped into itself by every generator.
pub(crate) fn verify_submodule(m: &AlgebraModule, basis: &[Vec<u32>]) -> bool {
    if basis.is_empty() || basis.len() >= m.dim() {
        return false;
    }
    let mut span = EchelonBasis::new(m.field(), m.dim());
    for v in basis {
        if !span.insert(v) {
            return false;
        }
    }
    m.generators()
        .iter()
        .all(|g| basis.iter().all(|v| span.contains(&g.mul_vec(v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let m = AlgebraModule::new(f(5), 1, vec![Matrix::from_rows(f(5), &[[3]])], "char");
        assert!(is_irreducible(&m).unwrap().is_irreducible());
        let z = AlgebraModule::new(f(5), 0, vec![], "zero");
        assert_eq!(is_irreducible(&z), Err(MeataxeError::ZeroDimension));
    }

    #[test]
    fn regular_c2_is_reducible_with_fixed_line() {
        let m = AlgebraModule::new(
            f(3),
            2,
            vec![Matrix::from_rows(f(3), &[[0, 1], [1, 0]])],
            "reg",
        );
        match is_irreducible(&m).unwrap() {
            Irreducibility::Reducible { submodule } => {
                assert_eq!(submodule.len(), 1);
                let v = &submodule[0];
                assert!(v == &vec![1, 1] || v == &vec![1, 2]);
            }
            other => panic!("expected reducible, got {other:?}"),
        }
    }

    #[test]
    fn companion_of_irreducible_quadratic() {
        let c = Polynomial::from_i64(f(3), &[-2, 0, 1]).companion();
        let m = AlgebraModule::new(f(3), 2, vec![c], "t^2-2");
        assert!(is_irreducible(&m).unwrap().is_irreducible());
    }

    #[test]
    fn fallback_agrees_with_random_phase() {
        let c = Polynomial::from_i64(f(3), &[-2, 0, 1]).companion();
        let irr = AlgebraModule::new(f(3), 2, vec![c.clone()], "t^2-2");
        assert!(fallback(&irr).unwrap().is_irreducible());
        let split = AlgebraModule::new(
            f(3),
            4,
            vec![Matrix::block_diagonal(f(3), &[&c, &c])],
            "two copies",
        );
        assert!(!fallback(&split).unwrap().is_irreducible());
        assert!(!is_irreducible(&split).unwrap().is_irreducible());
    }

    #[test]
    fn line_enumeration_counts() {
        let field = f(3);
        let basis = vec![vec![1, 0, 0], vec![0, 1, 0]];
        assert_eq!(each_line(field, &basis).len(), 4);
    }

    #[test]
    fn scalar_only_module_is_reducible() {
        let m = AlgebraModule::new(f(2), 3, vec![], "bare");
        assert!(!is_irreducible(&m).unwrap().is_irreducible());
    }
}
