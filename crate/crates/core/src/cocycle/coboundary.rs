use super::FactorSet;
use crate::exactfield::{dlog_table, prime_divisors};

/// `mu` (by member position) with `alpha(g,h) = mu(g) mu(h) / mu(gh)`, if any.
///
/// Taking discrete logs turns this into a linear system over `Z/(p-1)`.
/// Only the pairs `(g, s)` with `s` a generator, plus `(e, e)`, are imposed:
/// for a cocycle `beta` that is 1 on those pairs the identity
/// `beta(g,h) beta(gh,s) = beta(g,hs) beta(h,s)` forces `beta(g,h) = beta(g,hs)`,
/// so `beta` is 1 everywhere.
pub fn is_coboundary(alpha: &FactorSet) -> Option<Vec<u32>> {
    let group = alpha.group();
    let field = alpha.field();
    let table = group.parent();
    let logs = dlog_table(field);
    let modulus = logs.group_order();
    let k = group.order();
    let mut pairs = vec![(table.identity(), table.identity())];
    for &g in group.members() {
        for &s in group.generators() {
            pairs.push((g, s));
        }
    }
    let mut rows = Vec::with_capacity(pairs.len());
    let mut rhs = Vec::with_capacity(pairs.len());
    for (g, s) in pairs {
        let mut row = vec![0u64; k];
        let gs = group.position(table.mul(g, s)).unwrap();
        row[group.position(g).unwrap()] += 1;
        row[group.position(s).unwrap()] += 1;
        row[gs] += modulus - 1;
        rows.push(row.into_iter().map(|x| x % modulus).collect());
        rhs.push(logs.log(alpha.value(g, s)) as u64);
    }
    let x = solve_mod(&rows, &rhs, modulus)?;
    let mu: Vec<u32> = x.into_iter().map(|e| logs.exp(e)).collect();
    debug_assert!(group
        .members()
        .iter()
        .all(|&g| group.members().iter().all(|&h| {
            let gh = group.position(table.mul(g, h)).unwrap();
            let (i, j) = (group.position(g).unwrap(), group.position(h).unwrap());
            alpha.value(g, h) == field.div(field.mul(mu[i], mu[j]), mu[gh])
        })));
    Some(mu)
}

/// Some solution of `rows * x = rhs` over `Z/modulus`, if one exists.
///
/// Solved separately modulo each prime power dividing `modulus` and glued by
/// the Chinese remainder theorem.
pub fn solve_mod(rows: &[Vec<u64>], rhs: &[u64], modulus: u64) -> Option<Vec<u64>> {
    assert!((1..1 << 32).contains(&modulus));
    let cols = rows.first().map_or(0, Vec::len);
    if modulus == 1 {
        return Some(vec![0; cols]);
    }
    let mut solution = vec![0u64; cols];
    let mut done = 1u64;
    for q in prime_divisors(modulus) {
        let mut e = 0;
        let mut qe = 1;
        while modulus.is_multiple_of(qe * q) {
            qe *= q;
            e += 1;
        }
        let local = solve_prime_power(rows, rhs, q, e)?;
        // x = solution (mod done), x = local (mod qe)
        let inv = inverse_mod(done % qe, qe);
        for (s, l) in solution.iter_mut().zip(local) {
            let t = (l + qe - *s % qe) % qe * inv % qe;
            *s += done * t;
        }
        done *= qe;
    }
    Some(solution)
}

fn valuation(mut x: u64, q: u64) -> u32 {
    let mut v = 0;
    while x.is_multiple_of(q) {
        x /= q;
        v += 1;
    }
    v
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut r0, mut r1) = (m as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not a unit modulo {m}");
    t0.rem_euclid(m as i64) as u64
}

/// Diagonalizes over the chain ring `Z/q^e` by pivoting on an entry of least
/// `q`-valuation; every other entry is then a multiple of the pivot.
fn solve_prime_power(rows: &[Vec<u64>], rhs: &[u64], q: u64, e: u32) -> Option<Vec<u64>> {
    let m = q.pow(e);
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x % m).collect())
        .collect();
    let mut b: Vec<u64> = rhs.iter().map(|&x| x % m).collect();
    // x = c y, tracking the column operations.
    let mut c: Vec<Vec<u64>> = (0..n_cols)
        .map(|i| (0..n_cols).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut pivots = Vec::new();
    for r in 0..n_rows.min(n_cols) {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(r) {
            for (j, &x) in row.iter().enumerate().skip(r) {
                if x != 0 {
                    let v = valuation(x, q);
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                    }
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        a.swap(r, i);
        b.swap(r, i);
        for row in a.iter_mut() {
            row.swap(r, j);
        }
        for row in c.iter_mut() {
            row.swap(r, j);
        }
        let qv = q.pow(v);
        let unit_inv = inverse_mod(a[r][r] / qv % m, m);
        for x in a[r].iter_mut() {
            *x = *x * unit_inv % m;
        }
        b[r] = b[r] * unit_inv % m;
        for i in 0..n_rows {
            if i != r && a[i][r] != 0 {
                let f = a[i][r] / qv;
                for j in 0..n_cols {
                    a[i][j] = (a[i][j] + (m - f * a[r][j] % m)) % m;
                }
                b[i] = (b[i] + (m - f * b[r] % m)) % m;
            }
        }
        for j in r + 1..n_cols {
            if a[r][j] != 0 {
                let f = a[r][j] / qv;
                a[r][j] = 0;
                for row in c.iter_mut() {
                    row[j] = (row[j] + (m - f * row[r] % m)) % m;
                }
            }
        }
        pivots.push(qv);
    }
    let rank = pivots.len();
    if b[rank..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut y = vec![0u64; n_cols];
    for (r, &qv) in pivots.iter().enumerate() {
        if !b[r].is_multiple_of(qv) {
            return None;
        }
        y[r] = b[r] / qv;
    }
    Some(
        c.iter()
            .map(|row| {
                row.iter()
                    .zip(&y)
                    .map(|(&ci, &yi)| ci * yi % m)
                    .sum::<u64>()
                    % m
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(rows: &[Vec<u64>], rhs: &[u64], m: u64, x: &[u64]) -> bool {
        rows.iter()
            .zip(rhs)
            .all(|(r, &b)| r.iter().zip(x).map(|(&a, &xi)| a * xi % m).sum::<u64>() % m == b % m)
    }

    fn brute(rows: &[Vec<u64>], rhs: &[u64], m: u64) -> bool {
        let n = rows[0].len();
        let total = m.pow(n as u32);
        (0..total).any(|mut code| {
            let x: Vec<u64> = (0..n)
                .map(|_| {
                    let d = code % m;
                    code /= m;
                    d
                })
                .collect();
            check(rows, rhs, m, &x)
        })
    }

    #[test]
    fn small_congruences() {
        // 2x = 1 mod 4 has no solution, 2x = 2 mod 4 does.
        assert!(solve_mod(&[vec![2]], &[1], 4).is_none());
        let x = solve_mod(&[vec![2]], &[2], 4).unwrap();
        assert!(check(&[vec![2]], &[2], 4, &x));
        let rows = vec![vec![3, 4], vec![6, 2]];
        let x = solve_mod(&rows, &[5, 4], 12).unwrap();
        assert!(check(&rows, &[5, 4], 12, &x));
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration(
            m in prop::sample::select(vec![2u64, 4, 6, 8, 9, 12]),
            entries in prop::collection::vec(0u64..12, 6),
            rhs in prop::collection::vec(0u64..12, 3),
        ) {
            let rows: Vec<Vec<u64>> = entries.chunks(2).map(|c| c.iter().map(|x| x % m).collect()).collect();
            let rhs: Vec<u64> = rhs.iter().map(|x| x % m).collect();
            let found = solve_mod(&rows, &rhs, m);
            prop_assert_eq!(found.is_some(), brute(&rows, &rhs, m));
            if let Some(x) = found {
                prop_assert!(check(&rows, &rhs, m, &x));
            }
        }
    }
}
