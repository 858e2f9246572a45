use std::sync::Arc;

use super::{Elem, GroupError, GroupTable, Subgroup};

const ABSENT: u32 = u32::MAX;

/// Left transversal of `sub` in `group`: one minimal-index representative
/// per left coset, listed in increasing order (so the identity comes first).
#[derive(Clone, Debug)]
pub struct Transversal {
    group: Subgroup,
    sub: Subgroup,
    reps: Vec<Elem>,
    coset: Vec<u32>,
}

impl Transversal {
    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Index of the coset containing `g`.
    pub fn coset_index(&self, g: Elem) -> usize {
        let c = self.coset[g];
        assert!(c != ABSENT, "element {g} is outside the ambient group");
        c as usize
    }

    /// Writes `g = x_i h` with `h` in the subgroup; returns `(i, h)`.
    pub fn decompose(&self, g: Elem) -> (usize, Elem) {
        let i = self.coset_index(g);
        let table = self.group.parent();
        (i, table.mul(table.inv(self.reps[i]), g))
    }
}

/// Minimal-index left transversal of `sub` in `group`.
pub fn left_transversal(group: &Subgroup, sub: &Subgroup) -> Transversal {
    assert!(sub.is_subgroup_of(group), "transversal of a non-subgroup");
    let table = group.parent();
    let mut coset = vec![ABSENT; table.order()];
    let mut reps = Vec::with_capacity(group.order() / sub.order());
    for &g in group.members() {
        if coset[g] != ABSENT {
            continue;
        }
        let i = reps.len() as u32;
        reps.push(g);
        for &h in sub.members() {
            coset[table.mul(g, h)] = i;
        }
    }
    Transversal {
        group: group.clone(),
        sub: sub.clone(),
        reps,
        coset,
    }
}

/// Partition of a group into `(H, K)` double cosets `H d K`.
#[derive(Clone, Debug)]
pub struct DoubleCosetDecomposition {
    left: Subgroup,
    right: Subgroup,
    reps: Vec<Elem>,
    class: Vec<u32>,
    sizes: Vec<usize>,
}

impl DoubleCosetDecomposition {
    pub fn left(&self) -> &Subgroup {
        &self.left
    }

    pub fn right(&self) -> &Subgroup {
        &self.right
    }

    /// Minimal-index representatives in increasing order.
    pub fn reps(&self) -> &[Elem] {
        &self.reps
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn class_index(&self, g: Elem) -> usize {
        let c = self.class[g];
        assert!(c != ABSENT, "element {g} is outside the ambient group");
        c as usize
    }

    /// Representative of the double coset containing `g`.
    pub fn rep_of(&self, g: Elem) -> Elem {
        self.reps[self.class_index(g)]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }
}

/// `(H, K)` double cosets of `group`.
pub fn double_cosets(group: &Subgroup, h: &Subgroup, k: &Subgroup) -> DoubleCosetDecomposition {
    assert!(
        h.is_subgroup_of(group) && k.is_subgroup_of(group),
        "double cosets of non-subgroups"
    );
    let table = group.parent();
    let mut class = vec![ABSENT; table.order()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for &g in group.members() {
        if class[g] != ABSENT {
            continue;
        }
        let i = reps.len() as u32;
        reps.push(g);
        let mut size = 0;
        for &a in h.members() {
            let ag = table.mul(a, g);
            for &b in k.members() {
                let x = table.mul(ag, b);
                if class[x] == ABSENT {
                    class[x] = i;
                    size += 1;
                }
            }
        }
        sizes.push(size);
    }
    DoubleCosetDecomposition {
        left: h.clone(),
        right: k.clone(),
        reps,
        class,
        sizes,
    }
}

/// `G/N` as its own table, with the projection and a minimal-index section.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    group: Subgroup,
    normal: Subgroup,
    table: Arc<GroupTable>,
    transversal: Transversal,
}

impl QuotientGroup {
    pub fn table(&self) -> &Arc<GroupTable> {
        &self.table
    }

    pub fn group(&self) -> &Subgroup {
        &self.group
    }

    pub fn normal(&self) -> &Subgroup {
        &self.normal
    }

    /// Image of `g` in the quotient.
    pub fn project(&self, g: Elem) -> Elem {
        self.transversal.coset_index(g)
    }

    /// Minimal-index representative of quotient element `q`.
    pub fn section(&self, q: Elem) -> Elem {
        self.transversal.reps()[q]
    }

    pub fn transversal(&self) -> &Transversal {
        &self.transversal
    }
}

/// Quotient by a normal subgroup; quotient elements are numbered by their
/// minimal representatives, so the identity coset is 0.
pub fn quotient_group(group: &Subgroup, normal: &Subgroup) -> Result<QuotientGroup, GroupError> {
    normal.normal_in(group)?;
    let transversal = left_transversal(group, normal);
    let g = group.parent();
    let n = transversal.len();
    let rows: Vec<Vec<usize>> = transversal
        .reps()
        .iter()
        .map(|&a| {
            transversal
                .reps()
                .iter()
                .map(|&b| transversal.coset_index(g.mul(a, b)))
                .collect()
        })
        .collect();
    let labels = transversal
        .reps()
        .iter()
        .map(|&r| format!("{}N", g.label(r)))
        .collect();
    let mut gens: Vec<Elem> = Vec::new();
    for &s in group.generators() {
        let q = transversal.coset_index(s);
        if q != 0 && !gens.contains(&q) {
            gens.push(q);
        }
    }
    let table = GroupTable::from_table(&rows)?
        .with_name(format!("{}/N{}", g.name(), normal.order()))
        .with_labels(labels)
        .with_generators(gens);
    debug_assert_eq!(table.order(), n);
    Ok(QuotientGroup {
        group: group.clone(),
        normal: normal.clone(),
        table: Arc::new(table),
        transversal,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{subgroup_generated, GroupTable};
    use super::*;

    fn s3() -> Arc<GroupTable> {
        GroupTable::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
            .unwrap()
            .into_arc()
    }

    fn find(g: &GroupTable, label: &str) -> Elem {
        g.elements().find(|&e| g.label(e) == label).unwrap()
    }

    fn c4() -> Arc<GroupTable> {
        let rows: Vec<Vec<usize>> = (0..4)
            .map(|i| (0..4).map(|j| (i + j) % 4).collect())
            .collect();
        GroupTable::from_table(&rows).unwrap().into_arc()
    }

    #[test]
    fn transversal_examples() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        assert_eq!(left_transversal(&full, &full).reps(), &[0]);
        let h = subgroup_generated(&g, &[find(&g, "(0 1)")]);
        let t = left_transversal(&full, &h);
        assert_eq!(t.len(), 3);
        assert_eq!(t.reps()[0], 0);
        for x in g.elements() {
            let (i, hh) = t.decompose(x);
            assert!(h.contains(hh));
            assert_eq!(g.mul(t.reps()[i], hh), x);
        }
        let c = c4();
        let c2 = subgroup_generated(&c, &[2]);
        assert_eq!(left_transversal(&Subgroup::full(c), &c2).len(), 2);
    }

    #[test]
    fn double_coset_examples() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        assert_eq!(double_cosets(&full, &full, &full).len(), 1);
        let h = subgroup_generated(&g, &[find(&g, "(0 1)")]);
        let d = double_cosets(&full, &h, &h);
        let mut sizes = d.sizes().to_vec();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 4]);
        let e = Subgroup::trivial(g.clone());
        assert_eq!(double_cosets(&full, &e, &e).len(), 6);
    }

    #[test]
    fn quotient_examples() {
        let g = s3();
        let full = Subgroup::full(g.clone());
        assert_eq!(quotient_group(&full, &full).unwrap().table().order(), 1);
        let a3 = subgroup_generated(&g, &[find(&g, "(0 1 2)")]);
        let q = quotient_group(&full, &a3).unwrap();
        assert_eq!(q.table().order(), 2);
        for a in g.elements() {
            for b in g.elements() {
                assert_eq!(
                    q.project(g.mul(a, b)),
                    q.table().mul(q.project(a), q.project(b))
                );
            }
        }
        let h = subgroup_generated(&g, &[find(&g, "(0 1)")]);
        assert!(matches!(
            quotient_group(&full, &h),
            Err(GroupError::NotNormal { .. })
        ));
        let c = c4();
        let c2 = subgroup_generated(&c, &[2]);
        assert_eq!(
            quotient_group(&Subgroup::full(c), &c2)
                .unwrap()
                .table()
                .order(),
            2
        );
    }
}
