//! Built-in groups.
//!
//! Constructions: `Cn` is addition mod n; non-cyclic abelian groups are
//! direct products of cyclic groups named by invariant factors (`C2xC4`);
//! `Dn` (n >= 4, order 2n) is generated by the rotation `i -> i+1` and the
//! reflection `i -> -i` on n points; `S3`, `A4` and `S4` are permutation
//! groups; `Q8` is the unit quaternion group `{±1, ±i, ±j, ±k}`.

use std::sync::Arc;

use super::{Elem, GroupTable};

pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let gens = if n > 1 { vec![1] } else { vec![] };
    GroupTable::from_table(&rows)
        .expect("cyclic tables are groups")
        .with_name(format!("C{n}"))
        .with_labels(labels)
        .with_generators(gens)
}

/// `a x b` with element `(x, y)` at index `x * |b| + y`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            (0..n)
                .map(|v| a.mul(u / nb, v / nb) * nb + b.mul(u % nb, v % nb))
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|u| format!("({},{})", a.label(u / nb), b.label(u % nb)))
        .collect();
    let mut gens: Vec<Elem> = a.generators().iter().map(|&g| g * nb).collect();
    gens.extend(b.generators().iter().copied());
    let table = GroupTable::from_table(&rows).expect("direct products of groups are groups");
    table
        .with_name(format!("{}x{}", a.name(), b.name()))
        .with_labels(labels)
        .with_generators(gens)
}

fn abelian(factors: &[usize]) -> GroupTable {
    factors[1..].iter().fold(cyclic(factors[0]), |acc, &n| {
        direct_product(&acc, &cyclic(n))
    })
}

fn dihedral(n: usize) -> GroupTable {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    GroupTable::from_permutations(n, &[rotation, reflection])
        .expect("dihedral groups fit the cap")
        .with_name(format!("D{n}"))
}

fn symmetric3() -> GroupTable {
    GroupTable::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
        .unwrap()
        .with_name("S3")
}

fn alternating4() -> GroupTable {
    GroupTable::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
        .unwrap()
        .with_name("A4")
}

fn symmetric4() -> GroupTable {
    GroupTable::from_permutations(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]])
        .unwrap()
        .with_name("S4")
}

fn quaternion() -> GroupTable {
    // Index 2*unit + sign, unit in {1, i, j, k}, sign 1 meaning negative.
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    let rows: Vec<Vec<usize>> = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, s) = UNIT[a / 2][b / 2];
                    2 * u + ((a % 2) ^ (b % 2) ^ s)
                })
                .collect()
        })
        .collect();
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|a| format!("{}{}", if a % 2 == 1 { "-" } else { "" }, names[a / 2]))
        .collect();
    GroupTable::from_table(&rows)
        .unwrap()
        .with_name("Q8")
        .with_labels(labels)
        .with_generators(vec![2, 4])
}

/// Invariant-factor lists `n1 | n2 | ... | nk` with `k >= 2` and product `n`.
fn invariant_factor_lists(n: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, last: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            if prefix.len() >= 2 {
                out.push(prefix.clone());
            }
            return;
        }
        for d in 2..=rest {
            if rest.is_multiple_of(d) && d % last == 0 {
                prefix.push(d);
                extend(rest / d, d, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(n, 1, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every built-in group of order at most `max_order`, ordered by order and
/// then by family (cyclic, other abelian, dihedral, the named groups).
pub fn catalog(max_order: usize) -> Vec<Arc<GroupTable>> {
    let mut out = Vec::new();
    for n in 1..=max_order.min(super::DEFAULT_ORDER_CAP) {
        out.push(cyclic(n));
        for factors in invariant_factor_lists(n) {
            out.push(abelian(&factors));
        }
        if n % 2 == 0 && n / 2 >= 4 {
            out.push(dihedral(n / 2));
        }
        match n {
            6 => out.push(symmetric3()),
            8 => out.push(quaternion()),
            12 => out.push(alternating4()),
            24 => out.push(symmetric4()),
            _ => {}
        }
    }
    out.into_iter().map(Arc::new).collect()
}

/// Looks up a group by catalog name. Names joined by `x` build direct
/// products, so `S3xC2` and `C2xC2` both resolve.
pub fn catalog_entry(name: &str) -> Option<GroupTable> {
    let parts: Vec<&str> = name.split('x').collect();
    if parts.len() > 1 {
        let tables = parts
            .iter()
            .map(|p| catalog_entry(p))
            .collect::<Option<Vec<_>>>()?;
        let mut acc = tables[0].clone();
        for t in &tables[1..] {
            acc = direct_product(&acc, t);
        }
        return Some(acc.with_name(name));
    }
    match name {
        "S3" => return Some(symmetric3()),
        "Q8" => return Some(quaternion()),
        "A4" => return Some(alternating4()),
        "S4" => return Some(symmetric4()),
        _ => {}
    }
    if name.len() < 2 || !name.is_ascii() {
        return None;
    }
    let (family, digits) = name.split_at(1);
    let n: usize = digits.parse().ok()?;
    match family {
        "C" if (1..=super::DEFAULT_ORDER_CAP).contains(&n) => Some(cyclic(n)),
        "D" if (4..=super::DEFAULT_ORDER_CAP / 2).contains(&n) => Some(dihedral(n)),
        _ => None,
    }
}
