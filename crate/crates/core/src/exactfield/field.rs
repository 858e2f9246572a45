use std::fmt;

use super::FieldError;

/// A prime field `F_p` with `2 <= p <= 2^31`.
///
/// Elements are plain `u32` values kept in canonical form `[0, p)`. All
/// arithmetic goes through the field value so that matrices, polynomials and
/// cocycle tables can share one representation without a wrapper per scalar.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.p)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PrimeField {
    pub const MAX_MODULUS: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !(2..=Self::MAX_MODULUS).contains(&p) {
            return Err(FieldError::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.p as u64) as u32
    }

    #[inline]
    pub fn from_i64(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.p as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in {self}");
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.from_i64(t0)
    }

    #[inline]
    pub fn div(self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(self, a: u32) -> u64 {
        assert!(!a.is_multiple_of(self.p), "order of zero");
        let group_order = self.p as u64 - 1;
        let mut order = group_order;
        for q in prime_divisors(group_order) {
            while order.is_multiple_of(q) && self.pow(a, order / q) == 1 {
                order /= q;
            }
        }
        order
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u32 {
        if self.p == 2 {
            return 1;
        }
        let group_order = self.p as u64 - 1;
        let divisors = prime_divisors(group_order);
        (2..self.p)
            .find(|&g| divisors.iter().all(|&q| self.pow(g, group_order / q) != 1))
            .expect("every prime field has a primitive root")
    }

    /// Canonical representative printed as a signed value when that is shorter,
    /// e.g. `p - 1` prints as `-1`. Only used for labels.
    pub fn signed(self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Discrete logarithm table for `F_p^*` relative to its smallest generator.
#[derive(Clone, Debug)]
pub struct DiscreteLog {
    field: PrimeField,
    generator: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
}

impl DiscreteLog {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// `log(x)` in `Z/(p-1)`. Panics on zero.
    pub fn log(&self, x: u32) -> u32 {
        assert!(x != 0, "discrete log of zero");
        self.log[x as usize]
    }

    /// `generator^k`, with `k` taken modulo `p - 1`.
    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % self.exp.len() as u64) as usize]
    }

    /// Order of the multiplicative group, `p - 1`.
    pub fn group_order(&self) -> u64 {
        self.exp.len() as u64
    }
}

/// Builds the full table; intended for the small moduli used by the cocycle
/// machinery (memory is linear in `p`).
pub fn dlog_table(field: PrimeField) -> DiscreteLog {
    let p = field.modulus();
    let generator = field.primitive_root();
    let n = (p - 1) as usize;
    let mut log = vec![u32::MAX; p as usize];
    let mut exp = Vec::with_capacity(n);
    let mut x = 1 % p;
    for k in 0..n {
        exp.push(x);
        log[x as usize] = k as u32;
        x = field.mul(x, generator);
    }
    DiscreteLog {
        field,
        generator,
        log,
        exp,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_range() {
        assert!(matches!(
            PrimeField::new(1),
            Err(FieldError::ModulusOutOfRange(1))
        ));
        assert!(matches!(PrimeField::new(9), Err(FieldError::NotPrime(9))));
        assert!(PrimeField::new((1 << 31) - 1).is_ok());
        assert!(PrimeField::new((1 << 31) + 11).is_err());
    }

    #[test]
    fn inverse_and_pow() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.pow(3, 6), 1);
        assert_eq!(f.element_order(2), 3);
        assert_eq!(f.element_order(3), 6);
    }

    #[test]
    fn dlog_examples() {
        let f2 = dlog_table(PrimeField::new(2).unwrap());
        assert_eq!(f2.generator(), 1);
        assert_eq!(f2.log(1), 0);

        let f7 = dlog_table(PrimeField::new(7).unwrap());
        assert_eq!(f7.generator(), 3);
        assert_eq!(f7.log(2), 2);

        let f3 = dlog_table(PrimeField::new(3).unwrap());
        assert_eq!(f3.generator(), 2);
        assert_eq!(f3.log(2), 1);
    }

    #[test]
    fn dlog_round_trips() {
        for p in [2u64, 3, 5, 7, 11, 13, 101] {
            let f = PrimeField::new(p).unwrap();
            let t = dlog_table(f);
            assert_eq!(f.element_order(t.generator()), p - 1);
            for x in 1..p as u32 {
                assert_eq!(t.exp(t.log(x) as u64), x);
            }
        }
    }
}
