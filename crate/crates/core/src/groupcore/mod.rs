//! Finite groups as full multiplication tables.
//!
//! Element indices are `usize` in every API and `u16` in storage; the
//! identity is always index 0.

mod catalog;
mod cosets;
mod subgroup;
pub mod text;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub use catalog::{catalog, catalog_entry, cyclic, direct_product};
pub use cosets::{
    double_cosets, left_transversal, quotient_group, DoubleCosetDecomposition, QuotientGroup,
    Transversal,
};
pub use subgroup::{all_subgroups, is_normal, subgroup_generated, Subgroup};

/// Index of a group element inside its [`GroupTable`].
pub type Elem = usize;

/// Default bound on group orders accepted by the constructors.
pub const DEFAULT_ORDER_CAP: usize = 256;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator {index} is not a bijection on {degree} points")]
    NotBijective { index: usize, degree: usize },
    #[error("closure exceeds the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("multiplication table is not square (row {row} has {len} entries, expected {order})")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    #[error(
        "index 0 is not a two-sided identity: 0*{element} or {element}*0 differs from {element}"
    )]
    MissingIdentity { element: Elem },
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: Elem },
    #[error("associativity fails: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Elem, b: Elem, c: Elem },
    #[error("subgroup is not normal: conjugating {element} by {conjugator} leaves it")]
    NotNormal { conjugator: Elem, element: Elem },
    #[error("subgroups belong to different groups or are not nested")]
    NotNested,
    #[error("empty group table")]
    Empty,
}

/// A finite group stored as its complete multiplication table.
#[derive(Clone)]
pub struct GroupTable {
    name: String,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    generators: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.name, self.order)
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Closure of permutation generators under composition, `(a*b)(i) = a(b(i))`,
    /// with the default order cap.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        Self::from_permutations_capped(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self, GroupError> {
        let cap = cap.min(u16::MAX as usize + 1);
        for (index, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree
                || g.iter()
                    .any(|&i| i >= degree || std::mem::replace(&mut seen[i], true))
            {
                return Err(GroupError::NotBijective { index, degree });
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let compose =
            |a: &[usize], b: &[usize]| -> Vec<usize> { b.iter().map(|&i| a[i]).collect() };
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for g in generators {
                let next = compose(g, &current);
                if !index.contains_key(&next) {
                    if elements.len() == cap {
                        return Err(GroupError::OrderCapExceeded { cap });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            frontier += 1;
        }
        let n = elements.len();
        let mut mul = vec![0u16; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mul[i * n + j] = index[&compose(a, b)] as u16;
            }
        }
        let labels = elements.iter().map(|p| cycle_notation(p)).collect();
        let mut gens: Vec<Elem> = Vec::new();
        for g in generators {
            let i = index[g];
            if i != 0 && !gens.contains(&i) {
                gens.push(i);
            }
        }
        let mut table = Self::assemble(format!("perm{degree}"), n, mul)?;
        table.generators = gens;
        table.labels = Some(labels);
        Ok(table)
    }

    /// Validates a raw multiplication table with the identity at index 0.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > u16::MAX as usize + 1 {
            return Err(GroupError::OrderCapExceeded {
                cap: u16::MAX as usize + 1,
            });
        }
        let mut mul = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare {
                    row,
                    len: r.len(),
                    order: n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::EntryOutOfRange { row, col, value });
                }
                mul.push(value as u16);
            }
        }
        let table = Self::assemble(format!("table{n}"), n, mul)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table.mul(a, b);
                for c in 0..n {
                    if table.mul(ab, c) != table.mul(a, table.mul(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(table)
    }

    /// Checks identity and inverses and derives a greedy generating set.
    /// Associativity is the caller's responsibility.
    fn assemble(name: String, n: usize, mul: Vec<u16>) -> Result<Self, GroupError> {
        for element in 0..n {
            if mul[element] as usize != element || mul[element * n] as usize != element {
                return Err(GroupError::MissingIdentity { element });
            }
        }
        let mut inv = vec![0u16; n];
        for (a, slot) in inv.iter_mut().enumerate() {
            let b = (0..n)
                .find(|&b| mul[a * n + b] == 0)
                .ok_or(GroupError::NoInverse { element: a })?;
            if mul[b * n + a] != 0 {
                return Err(GroupError::NoInverse { element: a });
            }
            *slot = b as u16;
        }
        let mut table = GroupTable {
            name,
            order: n,
            mul,
            inv,
            generators: Vec::new(),
            labels: None,
        };
        table.generators = table.greedy_generators(0..n);
        Ok(table)
    }

    /// Scans `candidates` in order, keeping each element outside the span of
    /// those kept so far.
    pub(crate) fn greedy_generators(
        &self,
        candidates: impl IntoIterator<Item = Elem>,
    ) -> Vec<Elem> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut gens = Vec::new();
        for g in candidates {
            if inside[g] {
                continue;
            }
            gens.push(g);
            members = self.closure(&members, &gens, &mut inside);
        }
        gens
    }

    /// Extends the closed set `members` (flags in `inside`) by `gens`.
    pub(crate) fn closure(
        &self,
        members: &[Elem],
        gens: &[Elem],
        inside: &mut [bool],
    ) -> Vec<Elem> {
        let mut out = members.to_vec();
        let mut i = 0;
        // Multiplying every member by every generator on the right until
        // nothing new appears yields the generated subgroup (finite order).
        let mut queue: Vec<Elem> = out.clone();
        while i < queue.len() {
            let a = queue[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !inside[b] {
                    inside[b] = true;
                    out.push(b);
                    queue.push(b);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    pub fn with_generators(mut self, generators: Vec<Elem>) -> Self {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        assert_eq!(
            self.closure(&[0], &generators, &mut inside).len(),
            self.order,
            "generators must generate the table"
        );
        self.generators = generators.into_iter().filter(|&g| g != 0).collect();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as Elem
    }

    /// `g x g^{-1}`.
    #[inline]
    pub fn conj(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: Elem, e: usize) -> Elem {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None if a == 0 => "e".to_string(),
            None => format!("g{a}"),
        }
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Evaluates a word of element indices left to right.
    pub fn product(&self, word: &[Elem]) -> Elem {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn into_arc(self) -> Arc<GroupTable> {
        Arc::new(self)
    }
}

/// Cycle notation with 0-based points; the identity prints as `()`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut i = perm[start];
        while i != start {
            seen[i] = true;
            cycle.push(i);
            i = perm[i];
        }
        let parts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
        out.push('(');
        out.push_str(&parts.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
