use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::{Elem, GroupError, GroupTable};

const ABSENT: u32 = u32::MAX;

/// A subgroup of a shared [`GroupTable`], stored as its sorted member list.
///
/// Cloning is cheap. Two subgroups compare equal when they have the same
/// parent table and the same members.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<GroupTable>,
    members: Arc<Vec<Elem>>,
    position: Arc<Vec<u32>>,
    generators: Arc<Vec<Elem>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} in {}: {:?})",
            self.order(),
            self.parent.name(),
            self.members
        )
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    /// Wraps a member set already known to be closed. `members` must be
    /// sorted and contain the identity.
    fn from_closed(parent: Arc<GroupTable>, members: Vec<Elem>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]) && members[0] == 0);
        let mut position = vec![ABSENT; parent.order()];
        for (i, &m) in members.iter().enumerate() {
            position[m] = i as u32;
        }
        let generators = parent.greedy_generators(members.iter().copied());
        Subgroup {
            parent,
            members: Arc::new(members),
            position: Arc::new(position),
            generators: Arc::new(generators),
        }
    }

    pub fn full(parent: Arc<GroupTable>) -> Self {
        let members = parent.elements().collect();
        let mut s = Self::from_closed(parent.clone(), members);
        s.generators = Arc::new(parent.generators().to_vec());
        s
    }

    pub fn trivial(parent: Arc<GroupTable>) -> Self {
        Self::from_closed(parent, vec![0])
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn same_parent(&self, other: &Subgroup) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || *self.parent == *other.parent
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, g: Elem) -> bool {
        self.position[g] != ABSENT
    }

    /// Position of `g` in the sorted member list.
    #[inline]
    pub fn position(&self, g: Elem) -> Option<usize> {
        let p = self.position[g];
        (p != ABSENT).then_some(p as usize)
    }

    /// Member at a position of the sorted member list.
    #[inline]
    pub fn element(&self, i: usize) -> Elem {
        self.members[i]
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.same_parent(other) && self.members.iter().all(|&g| other.contains(g))
    }

    /// `[self : sub]`; panics unless `sub` is contained in `self`.
    pub fn index_of(&self, sub: &Subgroup) -> usize {
        assert!(sub.is_subgroup_of(self), "index of a non-subgroup");
        self.order() / sub.order()
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        assert!(self.same_parent(other));
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&g| other.contains(g))
            .collect();
        Self::from_closed(self.parent.clone(), members)
    }

    /// `g self g^{-1}`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        let mut members: Vec<Elem> = self
            .members
            .iter()
            .map(|&x| self.parent.conj(g, x))
            .collect();
        members.sort_unstable();
        Self::from_closed(self.parent.clone(), members)
    }

    /// Smallest subgroup containing `self` and `extra`.
    pub fn join(&self, extra: &[Elem]) -> Subgroup {
        let mut inside = vec![false; self.parent.order()];
        for &m in self.members.iter() {
            inside[m] = true;
        }
        let mut gens = self.generators.to_vec();
        gens.extend_from_slice(extra);
        let members = self.parent.closure(&self.members, &gens, &mut inside);
        Self::from_closed(self.parent.clone(), members)
    }

    /// Whether `self` is normalized by every element of `over`. The witness
    /// pair is returned on failure.
    pub fn normal_in(&self, over: &Subgroup) -> Result<(), GroupError> {
        if !self.is_subgroup_of(over) {
            return Err(GroupError::NotNested);
        }
        for &g in over.generators().iter() {
            for &x in self.generators().iter() {
                if !self.contains(self.parent.conj(g, x)) {
                    return Err(GroupError::NotNormal {
                        conjugator: g,
                        element: x,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_normal_in(&self, over: &Subgroup) -> bool {
        self.normal_in(over).is_ok()
    }

    pub fn center(&self) -> Subgroup {
        let g = &self.parent;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&z| self.generators.iter().all(|&s| g.mul(z, s) == g.mul(s, z)))
            .collect();
        Self::from_closed(self.parent.clone(), members)
    }

    /// The subgroup as a standalone table (members renumbered by position)
    /// together with the embedding position -> parent element.
    pub fn to_table(&self) -> (GroupTable, Vec<Elem>) {
        let g = &self.parent;
        let rows: Vec<Vec<usize>> = self
            .members
            .iter()
            .map(|&a| {
                self.members
                    .iter()
                    .map(|&b| self.position(g.mul(a, b)).unwrap())
                    .collect()
            })
            .collect();
        let table = GroupTable::from_table(&rows)
            .expect("subgroup tables are groups")
            .with_labels(self.members.iter().map(|&a| g.label(a)).collect());
        (table, self.members.to_vec())
    }
}

/// `<seeds>` inside `parent`.
pub fn subgroup_generated(parent: &Arc<GroupTable>, seeds: &[Elem]) -> Subgroup {
    Subgroup::trivial(parent.clone()).join(seeds)
}

/// Whether `h` is normal in the whole parent group.
pub fn is_normal(h: &Subgroup) -> bool {
    h.is_normal_in(&Subgroup::full(h.parent().clone()))
}

/// Every subgroup of `within`, sorted by order then member list.
pub fn all_subgroups(within: &Subgroup) -> Vec<Subgroup> {
    let mut seen: BTreeSet<(usize, Vec<Elem>)> = BTreeSet::new();
    let trivial = Subgroup::trivial(within.parent().clone());
    seen.insert((1, vec![0]));
    let mut queue = vec![trivial];
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i].clone();
        for &g in within.members() {
            if a.contains(g) {
                continue;
            }
            let b = a.join(&[g]);
            if seen.insert((b.order(), b.members().to_vec())) {
                queue.push(b);
            }
        }
        i += 1;
    }
    queue.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
    queue
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<GroupTable> {
        GroupTable::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])
            .unwrap()
            .into_arc()
    }

    fn find(g: &GroupTable, label: &str) -> Elem {
        g.elements().find(|&e| g.label(e) == label).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        assert_eq!(subgroup_generated(&g, &[]).order(), 1);
        let a3 = subgroup_generated(&g, &[find(&g, "(0 1 2)")]);
        assert_eq!(a3.order(), 3);
        let all: Vec<_> = g.elements().collect();
        assert!(subgroup_generated(&g, &all).is_full());
    }

    #[test]
    fn normality() {
        let g = s3();
        let a3 = subgroup_generated(&g, &[find(&g, "(0 1 2)")]);
        assert!(is_normal(&a3));
        let h = subgroup_generated(&g, &[find(&g, "(0 1)")]);
        assert!(!is_normal(&h));
        assert!(is_normal(&Subgroup::full(g)));
    }

    #[test]
    fn subgroup_lattice_of_s3() {
        let g = s3();
        let subs = all_subgroups(&Subgroup::full(g));
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn to_table_is_isomorphic_copy() {
        let g = s3();
        let a3 = subgroup_generated(&g, &[find(&g, "(0 1 2)")]);
        let (t, embed) = a3.to_table();
        assert_eq!(t.order(), 3);
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(embed[t.mul(a, b)], g.mul(embed[a], embed[b]));
            }
        }
    }
}
