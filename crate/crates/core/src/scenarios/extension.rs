//! `F_{p^r}` as `F_p[t]/(g)` with `g` the first monic irreducible of degree
//! `r` in lexicographic coefficient order.

use crate::exactfield::{Matrix, Polynomial, PrimeField};

/// Elements are coefficient vectors of length `r`, ascending degree.
#[derive(Clone, Debug)]
pub struct FiniteExtension {
    field: PrimeField,
    degree: usize,
    modulus: Polynomial,
    primitive: Vec<u32>,
    /// `log[code(a)]` for nonzero `a`, relative to `primitive`.
    log: Vec<u64>,
    /// `powers[e] = primitive^e`.
    powers: Vec<Vec<u32>>,
}

impl FiniteExtension {
    /// `None` when `degree == 0`.
    pub fn new(field: PrimeField, degree: usize) -> Option<Self> {
        if degree == 0 {
            return None;
        }
        let p = field.modulus();
        let modulus = (0..(p as u64).pow(degree as u32))
            .map(|code| {
                let mut coeffs = digits(code, p, degree);
                coeffs.push(1);
                Polynomial::new(field, coeffs)
            })
            .find(|g| g.is_irreducible().unwrap_or(false))
            .expect("irreducible polynomials exist in every degree");
        let mut ext = FiniteExtension {
            field,
            degree,
            modulus,
            primitive: Vec::new(),
            log: Vec::new(),
            powers: Vec::new(),
        };
        let order = ext.order() - 1;
        for code in 1..ext.order() {
            let a = digits(code, p, degree);
            let powers: Vec<Vec<u32>> = std::iter::successors(Some(ext.one()), |x| {
                Some(ext.mul(x, &a)).filter(|y| *y != ext.one())
            })
            .collect();
            if powers.len() as u64 == order {
                let mut log = vec![u64::MAX; ext.order() as usize];
                for (e, x) in powers.iter().enumerate() {
                    log[ext.code(x) as usize] = e as u64;
                }
                ext.primitive = a;
                ext.log = log;
                ext.powers = powers;
                return Some(ext);
            }
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn base(&self) -> PrimeField {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `p^r`.
    pub fn order(&self) -> u64 {
        (self.field.modulus() as u64).pow(self.degree as u32)
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.modulus
    }

    pub fn primitive(&self) -> &[u32] {
        &self.primitive
    }

    pub fn one(&self) -> Vec<u32> {
        let mut v = vec![0; self.degree];
        v[0] = 1;
        v
    }

    pub fn code(&self, a: &[u32]) -> u64 {
        let p = self.field.modulus() as u64;
        a.iter().rev().fold(0, |acc, &c| acc * p + c as u64)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let pa = Polynomial::new(self.field, a.to_vec());
        let pb = Polynomial::new(self.field, b.to_vec());
        self.pad(&pa.mul_mod(&pb, &self.modulus))
    }

    /// `primitive^e`.
    pub fn exp(&self, e: u64) -> Vec<u32> {
        self.powers[(e % (self.order() - 1)) as usize].clone()
    }

    /// Discrete log of a nonzero element.
    pub fn log(&self, a: &[u32]) -> u64 {
        let l = self.log[self.code(a) as usize];
        assert!(l != u64::MAX, "log of zero");
        l
    }

    /// `a^{p^k}`.
    pub fn frobenius(&self, a: &[u32], k: usize) -> Vec<u32> {
        let pa = Polynomial::new(self.field, a.to_vec());
        let e = (self.field.modulus() as u64).pow(k as u32);
        self.pad(&pa.pow_mod(e, &self.modulus))
    }

    /// Matrix of `x -> a x` on the basis `1, t, ..., t^{r-1}`.
    pub fn multiplication_matrix(&self, a: &[u32]) -> Matrix {
        let columns: Vec<Vec<u32>> = (0..self.degree)
            .map(|j| self.mul(a, &self.basis_vector(j)))
            .collect();
        Matrix::from_columns(self.field, self.degree, &columns)
    }

    /// Matrix of `x -> x^{p^k}`.
    pub fn frobenius_matrix(&self, k: usize) -> Matrix {
        let columns: Vec<Vec<u32>> = (0..self.degree)
            .map(|j| self.frobenius(&self.basis_vector(j), k))
            .collect();
        Matrix::from_columns(self.field, self.degree, &columns)
    }

    fn basis_vector(&self, j: usize) -> Vec<u32> {
        let mut v = vec![0; self.degree];
        v[j] = 1;
        v
    }

    fn pad(&self, poly: &Polynomial) -> Vec<u32> {
        let mut v = poly.coefficients().to_vec();
        v.resize(self.degree, 0);
        v
    }
}

fn digits(mut code: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push((code % p as u64) as u32);
        code /= p as u64;
    }
    out
}
