use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Matrix, PolyError, PrimeField};

/// Univariate polynomial over `F_p`, coefficients in ascending degree.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and every other value has a nonzero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}t^{d}")?,
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.modulus();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Polynomial {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    /// The indeterminate `t`.
    pub fn t(field: PrimeField) -> Self {
        Self::new(field, vec![0, 1])
    }

    pub fn monomial(field: PrimeField, c: u32, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            f,
            (0..n)
                .map(|i| f.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            f,
            (0..n)
                .map(|i| f.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let p = self.field.modulus() as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(self.field, out.into_iter().map(|x| x as u32).collect())
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let f = self.field;
        let dd = divisor.degree().expect("polynomial division by zero");
        let inv_lead = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        (Self::new(f, quot), Self::new(f, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact quotient; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        self.mul(other).exact_div(&self.gcd(other)).monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.reduce(i as u64)))
                .collect(),
        )
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.field).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus);
            }
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        assert!(m.is_square());
        let n = m.rows();
        let f = self.field;
        let mut acc = Matrix::zeros(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = &acc * m;
            if c != 0 {
                acc = &acc + &Matrix::scalar(f, n, c);
            }
        }
        acc
    }

    /// Companion matrix of a monic polynomial of positive degree, acting on
    /// column vectors: `e_i -> e_{i+1}` and `e_{m-1} -> -sum a_i e_i`.
    pub fn companion(&self) -> Matrix {
        let m = self.degree().expect("companion of zero polynomial");
        assert!(
            m >= 1 && self.is_monic(),
            "companion needs a monic polynomial"
        );
        let f = self.field;
        let mut c = Matrix::zeros(f, m, m);
        for i in 1..m {
            c.set(i, i - 1, 1);
        }
        for i in 0..m {
            c.set(i, m - 1, f.neg(self.coeff(i)));
        }
        c
    }

    /// Irreducibility over `F_p`: no factor of degree `i <= deg/2` divides
    /// `t^{p^i} - t`. Constants are not irreducible.
    pub fn is_irreducible(&self) -> Result<bool, PolyError> {
        let deg = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        if deg == 0 {
            return Ok(false);
        }
        let f = self.monic();
        let t = Self::t(self.field);
        let p = self.field.modulus() as u64;
        let mut frob = t.rem(&f);
        for _ in 1..=deg / 2 {
            frob = frob.pow_mod(p, &f);
            if !f.gcd(&frob.sub(&t)).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal polynomial of a square matrix, as the least common multiple of
    /// the local minimal polynomials of vectors whose cyclic subspaces span.
    pub fn min_poly(m: &Matrix) -> Result<Self, PolyError> {
        if !m.is_square() {
            return Err(PolyError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let f = m.field();
        let n = m.rows();
        let mut spanned = super::EchelonBasis::new(f, n);
        let mut acc = Self::one(f);
        for i in 0..n {
            let mut e = vec![0u32; n];
            e[i] = 1;
            if spanned.contains(&e) {
                continue;
            }
            let (local, krylov) = local_min_poly(m, &e);
            for v in krylov {
                spanned.insert(&v);
            }
            acc = acc.lcm(&local);
            if spanned.len() == n {
                break;
            }
        }
        Ok(acc)
    }
}

/// Local minimal polynomial of `v` under `m`, plus the Krylov vectors visited.
fn local_min_poly(m: &Matrix, v: &[u32]) -> (Polynomial, Vec<Vec<u32>>) {
    let f = m.field();
    let n = v.len();
    // Each stored row keeps its vector (normalized at the pivot) and the
    // polynomial `c` with `vector = c(m) v`.
    let mut rows: Vec<(Vec<u32>, usize, Polynomial)> = Vec::new();
    let mut krylov = Vec::new();
    let mut w = v.to_vec();
    for k in 0..=n {
        krylov.push(w.clone());
        let mut vec = w.clone();
        let mut combo = Polynomial::monomial(f, 1, k);
        for (rv, pc, rc) in &rows {
            let c = vec[*pc];
            if c != 0 {
                for (x, &y) in vec.iter_mut().zip(rv) {
                    *x = f.sub(*x, f.mul(c, y));
                }
                combo = combo.sub(&rc.scale(c));
            }
        }
        match vec.iter().position(|&x| x != 0) {
            None => return (combo.monic(), krylov),
            Some(pc) => {
                let inv = f.inv(vec[pc]);
                let vec = vec.iter().map(|&x| f.mul(x, inv)).collect();
                rows.push((vec, pc, combo.scale(inv)));
            }
        }
        w = m.mul_vec(&w);
    }
    unreachable!("Krylov sequence exceeds the ambient dimension")
}

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients. Deterministic; the equal-degree splitting uses a fixed seed.
pub(crate) fn factor(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    let mut out = Vec::new();
    for (sq, mult) in squarefree(&f.monic()) {
        for (part, d) in distinct_degree(&sq) {
            for g in equal_degree(&part, d, &mut rng) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), &a.0.coeffs, a.1).cmp(&(b.0.degree(), &b.0.coeffs, b.1)));
    // Separate squarefree layers can contribute the same factor.
    let mut merged: Vec<(Polynomial, usize)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += m,
            _ => merged.push((g, m)),
        }
    }
    merged
}

fn squarefree(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let field = f.field();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        let p = field.modulus() as usize;
        let root = Polynomial::new(field, c.coeffs.iter().step_by(p).copied().collect());
        for (g, m) in squarefree(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of a
/// common degree.
fn distinct_degree(f: &Polynomial) -> Vec<(Polynomial, usize)> {
    let field = f.field();
    let p = field.modulus() as u64;
    let t = Polynomial::t(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = t.rem(&rest);
    let mut i = 1;
    while rest.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&t));
        if !g.is_one() {
            rest = rest.exact_div(&g).monic();
            h = h.rem(&rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let d = rest.degree().unwrap();
        out.push((rest, d));
    }
    out
}

fn equal_degree(f: &Polynomial, d: usize, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.monic()];
    }
    let field = f.field();
    let p = field.modulus() as u64;
    loop {
        let a = Polynomial::new(
            field,
            (0..n).map(|_| rng.gen_range(0..field.modulus())).collect(),
        );
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let probe = if p == 2 {
            // Absolute trace a + a^2 + ... + a^{2^{d-1}} lands in F_2 on each factor.
            let mut term = a.rem(f);
            let mut trace = term.clone();
            for _ in 1..d {
                term = term.mul_mod(&term, f);
                trace = trace.add(&term);
            }
            trace
        } else {
            // a^{(p^d - 1)/2} = norm(a)^{(p-1)/2}, with the norm a product of
            // Frobenius images; avoids exponents beyond 64 bits.
            let mut term = a.rem(f);
            let mut norm = term.clone();
            for _ in 1..d {
                term = term.pow_mod(p, f);
                norm = norm.mul_mod(&term, f);
            }
            norm.pow_mod((p - 1) / 2, f).sub(&Polynomial::one(field))
        };
        let g = f.gcd(&probe);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.exact_div(&g).monic(), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        assert!(Polynomial::from_i64(f(3), &[1, 0, 1])
            .is_irreducible()
            .unwrap());
        assert!(!Polynomial::from_i64(f(5), &[1, 0, 1])
            .is_irreducible()
            .unwrap());
        assert!(Polynomial::from_i64(f(5), &[-3, 1])
            .is_irreducible()
            .unwrap());
        assert_eq!(
            Polynomial::zero(f(5)).is_irreducible(),
            Err(PolyError::ZeroPolynomial)
        );
        assert!(!Polynomial::constant(f(5), 2).is_irreducible().unwrap());
    }

    #[test]
    fn min_poly_examples() {
        let id = Matrix::identity(f(7), 4);
        assert_eq!(
            Polynomial::min_poly(&id).unwrap(),
            Polynomial::from_i64(f(7), &[-1, 1])
        );
        let t2m2 = Polynomial::from_i64(f(3), &[-2, 0, 1]);
        assert_eq!(Polynomial::min_poly(&t2m2.companion()).unwrap(), t2m2);
        let z = Matrix::zeros(f(3), 3, 3);
        assert_eq!(Polynomial::min_poly(&z).unwrap(), Polynomial::t(f(3)));
        assert!(matches!(
            Polynomial::min_poly(&Matrix::zeros(f(3), 2, 3)),
            Err(PolyError::NotSquare { .. })
        ));
    }

    #[test]
    fn factor_recovers_products() {
        let field = f(3);
        let a = Polynomial::from_i64(field, &[1, 0, 1]);
        let b = Polynomial::from_i64(field, &[1, 1]);
        let c = Polynomial::from_i64(field, &[2, 1, 0, 1]);
        let prod = a.mul(&a).mul(&b).mul(&b).mul(&b).mul(&c);
        let fac = factor(&prod);
        let rebuilt = fac.iter().fold(Polynomial::one(field), |acc, (g, m)| {
            (0..*m).fold(acc, |acc, _| acc.mul(g))
        });
        assert_eq!(rebuilt, prod.monic());
        for (g, _) in &fac {
            assert!(g.is_irreducible().unwrap());
        }
    }

    #[test]
    fn factor_handles_characteristic_two_and_pth_powers() {
        let field = f(2);
        // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over F_2.
        let g = Polynomial::from_i64(field, &[1, 0, 1, 0, 1]);
        let fac = factor(&g);
        assert_eq!(fac, vec![(Polynomial::from_i64(field, &[1, 1, 1]), 2)]);
        // t^15 - 1 splits into 5 irreducibles over F_2.
        let h = Polynomial::monomial(field, 1, 15).sub(&Polynomial::one(field));
        assert_eq!(factor(&h).len(), 5);
    }

    #[test]
    fn eval_matrix_agrees_with_scalar_eval() {
        let field = f(7);
        let poly = Polynomial::from_i64(field, &[3, 0, 2, 1]);
        let m = Matrix::scalar(field, 2, 5);
        assert_eq!(poly.eval_matrix(&m), Matrix::scalar(field, 2, poly.eval(5)));
    }

    /// Irreducible iff no monic factor of degree at most half divides it.
    fn irreducible_by_trial_division(poly: &Polynomial) -> bool {
        let field = poly.field();
        let degree = poly.degree().unwrap();
        let p = field.modulus() as usize;
        (1..=degree / 2).all(|d| {
            (0..p.pow(d as u32)).all(|mut code| {
                let mut coeffs: Vec<u32> = (0..d)
                    .map(|_| {
                        let c = (code % p) as u32;
                        code /= p;
                        c
                    })
                    .collect();
                coeffs.push(1);
                !poly.rem(&Polynomial::new(field, coeffs)).is_zero()
            })
        })
    }

    proptest! {
        #[test]
        fn irreducibility_matches_trial_division(
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
            coeffs in prop::collection::vec(0u32..7, 1..=6),
            lead in 1u32..7,
        ) {
            let field = f(p);
            let mut c: Vec<u32> = coeffs.iter().map(|&x| x % p as u32).collect();
            c.push(lead % (p as u32 - 1) + 1);
            let poly = Polynomial::new(field, c);
            prop_assert_eq!(poly.is_irreducible().unwrap(), irreducible_by_trial_division(&poly));
        }
    }
}
