use std::sync::Arc;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactfield::PrimeField;
use crate::groupcore::{all_subgroups, catalog, catalog_entry, subgroup_generated, GroupTable};
use crate::meataxe::is_isomorphic_reps;
use crate::repmod::regular_rep;

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn s3() -> (Arc<GroupTable>, Subgroup) {
    let t = catalog_entry("S3").unwrap().into_arc();
    (t.clone(), Subgroup::full(t))
}

fn transposition(t: &GroupTable) -> Subgroup {
    let a = t.elements().find(|&a| t.element_order(a) == 2).unwrap();
    subgroup_generated(&Arc::new(t.clone()), &[a])
}

fn a3_character(t: &Arc<GroupTable>) -> Representation {
    let r = t.elements().find(|&a| t.element_order(a) == 3).unwrap();
    let a3 = subgroup_generated(t, &[r]);
    Representation::from_generators(&a3, f(7), 1, &[(r, Matrix::from_rows(f(7), &[[2]]))]).unwrap()
}

#[test]
fn s3_ledger_nine_is_three_plus_six() {
    let (t, g) = s3();
    let a = t.elements().find(|&a| t.element_order(a) == 2).unwrap();
    let h = subgroup_generated(&t, &[a]);
    let triv = trivial_rep(&h, f(5));
    let w = mackey_tensor(&triv, &triv, &g).unwrap();
    assert_eq!(w.lhs.dim(), 9);
    assert_eq!(w.block_dims(), [3, 6]);
    assert_eq!(w.block_map[1].subgroup.order(), 1);
    assert_eq!(w.block_map[0].pair, (0, 0));
    let provenance = w.provenance();
    let lines: Vec<&str> = provenance.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("block ") && lines[1].contains(" dim 6 from "));
}

#[test]
fn whole_group_gives_one_block() {
    let (_, g) = s3();
    let v = regular_rep(&g, f(7));
    let w = mackey_tensor(&v, &trivial_rep(&g, f(7)), &g).unwrap();
    assert_eq!(w.block_dims(), [6]);
    assert!(w.iso.is_identity());
}

/// With `H2 = 1` the blocks are indexed by `H1 \ G`, one per coset, each
/// induced from the trivial subgroup.
#[test]
fn trivial_second_subgroup_pins_the_convention() {
    let (t, g) = s3();
    let h1 = transposition(&t);
    let e = Subgroup::trivial(t.clone());
    let w = mackey_tensor(&trivial_rep(&h1, f(5)), &trivial_rep(&e, f(5)), &g).unwrap();
    assert_eq!(w.lhs.dim(), 3 * 6);
    assert_eq!(w.block_dims(), [6, 6, 6]);
    assert!(w.block_map.iter().all(|b| b.subgroup.is_trivial()));
}

#[test]
fn restriction_examples() {
    let (t, g) = s3();
    let h = transposition(&t);
    let r = t.elements().find(|&a| t.element_order(a) == 3).unwrap();
    let a3 = subgroup_generated(&t, &[r]);
    let w = mackey_restriction(&trivial_rep(&h, f(7)), &a3, &g).unwrap();
    assert_eq!(w.block_dims(), [3]);
    assert!(w.block_map[0].subgroup.is_trivial());

    let w = mackey_restriction(&trivial_rep(&h, f(7)), &g, &g).unwrap();
    assert_eq!(w.block_dims(), [3]);

    let e = Subgroup::trivial(t.clone());
    let w = mackey_restriction(&trivial_rep(&h, f(7)), &e, &g).unwrap();
    assert_eq!(w.block_dims(), [1, 1, 1]);
}

#[test]
fn resext_examples() {
    let (t, g) = s3();
    let w = a3_character(&t);
    let v = induce(&w, &g);
    let wit = resext_iso(&w, &v).unwrap();
    assert_eq!(wit.lhs.dim(), 4);
    let wit = resext_iso(&w, &trivial_rep(&g, f(7))).unwrap();
    assert_eq!(wit.rhs.dim(), 2);
    let wit = resext_iso(&v, &v).unwrap();
    assert_eq!(wit.lhs.dim(), 4);
}

#[test]
fn corollary_examples() {
    let (t, g) = s3();
    let h1 = transposition(&t);
    let v2 = a3_character(&t);
    let w = perm_tensor_corollary(&h1, &v2, &g).unwrap();
    assert_eq!((w.lhs.dim(), w.rhs.dim()), (6, 6));
    let w = perm_tensor_corollary(&g, &v2, &g).unwrap();
    assert_eq!(w.lhs.dim(), 2);
    let v = induce(&v2, &g);
    let w = perm_tensor_corollary(&h1, &v, &g).unwrap();
    assert_eq!(w.lhs.dim(), 6);
}

#[test]
fn witnesses_detect_tampering() {
    let (t, g) = s3();
    let h = transposition(&t);
    let mut w = mackey_tensor(&trivial_rep(&h, f(5)), &trivial_rep(&h, f(5)), &g).unwrap();
    let mut bad = w.iso.clone();
    bad.set(0, 0, w.iso.field().add(w.iso.get(0, 0), 1));
    w.iso = bad;
    assert!(matches!(
        w.verify(),
        Err(MackeyError::NotIntertwining { .. }) | Err(MackeyError::NotInvertible)
    ));
}

/// Any pair `(x, y)` with `H1 x^{-1} y H2 = H1 d H2` gives a block isomorphic to the canonical one.
#[test]
fn block_independent_of_pair_choice() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in catalog(8).into_iter().filter(|t| t.order() >= 6) {
        let g = Subgroup::full(t.clone());
        let subs = all_subgroups(&g);
        for _ in 0..10 {
            let h1 = &subs[rng.gen_range(0..subs.len())];
            let h2 = &subs[rng.gen_range(0..subs.len())];
            let v1 = regular_rep(h1, f(5));
            let v2 = trivial_rep(h2, f(5));
            let dc = crate::groupcore::double_cosets(&g, h1, h2);
            let x = rng.gen_range(0..t.order());
            let y = rng.gen_range(0..t.order());
            let d = dc.rep_of(t.mul(t.inv(x), y));
            let canonical = mackey_block(&v1, &v2, &g, 0, d).unwrap();
            let other = mackey_block(&v1, &v2, &g, x, y).unwrap();
            assert!(is_isomorphic_reps(&canonical, &other).unwrap().is_some());
        }
    }
}

fn modules(h: &Subgroup, field: PrimeField) -> Vec<Representation> {
    let mut out = vec![trivial_rep(h, field), regular_rep(h, field)];
    out.extend(crate::clifford::enumerate_irreducibles(h, field).unwrap());
    out
}

#[test]
fn all_theorems_on_order_six() {
    for name in ["S3", "C6"] {
        let t = catalog_entry(name).unwrap().into_arc();
        let g = Subgroup::full(t);
        let subs = all_subgroups(&g);
        for p in [2, 3, 7] {
            for h1 in &subs {
                for h2 in &subs {
                    for v1 in modules(h1, f(p)) {
                        let v2 = &modules(h2, f(p))[1];
                        let w = mackey_tensor(&v1, v2, &g).unwrap();
                        let ledger: usize = w
                            .block_map
                            .iter()
                            .map(|b| g.order() / b.subgroup.order() * v1.dim() * v2.dim())
                            .sum();
                        assert_eq!(ledger, w.lhs.dim());
                        mackey_restriction(&v1, h2, &g).unwrap();
                        perm_tensor_corollary(h2, &v1, &g).unwrap();
                        resext_iso(&v1, &induce(v2, &g)).unwrap();
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_tensor_instances(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let groups = catalog(12);
        let t = groups[rng.gen_range(0..groups.len())].clone();
        let g = Subgroup::full(t);
        let subs = all_subgroups(&g);
        let h1 = &subs[rng.gen_range(0..subs.len())];
        let h2 = &subs[rng.gen_range(0..subs.len())];
        let m1 = modules(h1, f(p));
        let m2 = modules(h2, f(p));
        let v1 = &m1[rng.gen_range(0..m1.len())];
        let v2 = &m2[rng.gen_range(0..m2.len())];
        let w = mackey_tensor(v1, v2, &g).unwrap();
        prop_assert_eq!(w.block_dims().iter().sum::<usize>(), w.lhs.dim());
        let r = mackey_restriction(v1, h2, &g).unwrap();
        for b in &r.block_map {
            prop_assert_eq!(b.dim, h2.order() / b.subgroup.order() * v1.dim());
        }
    }
}
