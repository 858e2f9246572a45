use std::sync::Arc;

use super::*;
use crate::groupcore::{catalog_entry, subgroup_generated, GroupTable};

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn s3() -> Arc<GroupTable> {
    catalog_entry("S3").unwrap().into_arc()
}

fn find(g: &GroupTable, label: &str) -> Elem {
    g.elements().find(|&e| g.label(e) == label).unwrap()
}

fn a3_character(g: &Arc<GroupTable>, root: i64) -> Representation {
    let a3 = subgroup_generated(g, &[find(g, "(0 1 2)")]);
    Representation::from_generators(
        &a3,
        f(7),
        1,
        &[(find(g, "(0 1 2)"), Matrix::from_rows(f(7), &[[root]]))],
    )
    .unwrap()
}

#[test]
fn generator_images_examples() {
    let c2 = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
    let sign =
        Representation::from_generator_list(&c2, f(5), 1, vec![Matrix::from_rows(f(5), &[[-1]])])
            .unwrap();
    assert_eq!(sign.image(1).get(0, 0), 4);
    let bad =
        Representation::from_generator_list(&c2, f(5), 1, vec![Matrix::from_rows(f(5), &[[2]])]);
    assert_eq!(bad.unwrap_err(), RepError::Inconsistent { element: 0 });

    let g = Subgroup::full(s3());
    let ones = vec![Matrix::identity(f(3), 2); g.generators().len()];
    let triv = Representation::from_generator_list(&g, f(3), 2, ones).unwrap();
    assert!(triv.images().all(Matrix::is_identity));
}

#[test]
fn trivial_and_regular() {
    let g = Subgroup::full(s3());
    assert_eq!(trivial_rep(&g, f(5)).dim(), 1);
    let c2 = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
    let reg = regular_rep(&c2, f(3));
    assert_eq!(*reg.image(1), Matrix::from_rows(f(3), &[[0, 1], [1, 0]]));
    let c1 = Subgroup::full(catalog_entry("C1").unwrap().into_arc());
    assert!(regular_rep(&c1, f(3)).same_matrices(&trivial_rep(&c1, f(3))));
}

#[test]
fn permutation_modules() {
    let t = s3();
    let g = Subgroup::full(t.clone());
    assert!(permutation_module(&g, &g, f(5)).same_matrices(&trivial_rep(&g, f(5))));
    let h = subgroup_generated(&t, &[find(&t, "(0 1)")]);
    let p = permutation_module(&g, &h, f(5));
    assert_eq!(p.dim(), 3);
    assert!(p.check_law_all_pairs().is_ok());
    let e = Subgroup::trivial(t);
    assert!(permutation_module(&g, &e, f(5)).same_matrices(&regular_rep(&g, f(5))));
}

#[test]
fn restriction_and_induction() {
    let t = s3();
    let g = Subgroup::full(t.clone());
    let reg = regular_rep(&g, f(7));
    assert!(restrict(&reg, &g).same_matrices(&reg));
    let w = a3_character(&t, 2);
    assert!(induce(&w, w.group()).same_matrices(&w));
    let v = induce(&w, &g);
    assert_eq!(v.dim(), 2);
    assert!(v.check_law_all_pairs().is_ok());
    let h = subgroup_generated(&t, &[find(&t, "(0 1)")]);
    assert!(induce(&trivial_rep(&h, f(7)), &g).same_matrices(&permutation_module(&g, &h, f(7))));
    let e = Subgroup::trivial(t);
    let r = restrict(&v, &e);
    assert!(r.image(0).is_identity() && r.dim() == 2);
}

#[test]
fn tensor_and_sum() {
    let c2 = Subgroup::full(catalog_entry("C2").unwrap().into_arc());
    let sign =
        Representation::from_generator_list(&c2, f(3), 1, vec![Matrix::from_rows(f(3), &[[-1]])])
            .unwrap();
    let triv = trivial_rep(&c2, f(3));
    assert!(tensor(&sign, &triv).unwrap().same_matrices(&sign));
    assert!(tensor(&sign, &sign).unwrap().same_matrices(&triv));
    let sum = direct_sum(&[&triv, &sign]).unwrap();
    let p = Matrix::from_rows(f(3), &[[1, 1], [1, -1]]);
    assert!(regular_rep(&c2, f(3)).change_basis(&p).same_matrices(&sum));
    assert!(direct_sum(&[&sign]).unwrap().same_matrices(&sign));
}

#[test]
fn conjugate_modules() {
    let t = s3();
    let w = a3_character(&t, 2);
    assert!(conjugate_module(&w, 0).unwrap().same_matrices(&w));
    let g = find(&t, "(0 1 2)");
    let wg = conjugate_module(&w, g).unwrap();
    // w -> R(g) w carries W onto W^g.
    assert!(w.intertwines_to(&wg, w.image(g)));
    let swapped = conjugate_module(&w, find(&t, "(0 1)")).unwrap();
    assert!(swapped.same_matrices(&a3_character(&t, 4)));
    let h = subgroup_generated(&t, &[find(&t, "(0 1)")]);
    let not_normal = trivial_rep(&h, f(7));
    assert!(conjugate_module(&not_normal, g).is_err());
}

#[test]
fn iterated_conjugation_composes() {
    let t = s3();
    let w = a3_character(&t, 2);
    for g in t.elements() {
        for h in t.elements() {
            let twice = conjugate_module(&conjugate_module(&w, g).unwrap(), h).unwrap();
            assert!(twice.same_matrices(&conjugate_module(&w, t.mul(g, h)).unwrap()));
        }
    }
}

#[test]
fn rep_file_round_trip() {
    let t = s3();
    let g = Subgroup::full(t.clone());
    let v = induce(&a3_character(&t, 2), &g);
    let s = text::write_representation(&v, "S3");
    let back = text::parse_representation(&s, |r| (r == "S3").then(|| g.clone())).unwrap();
    assert!(back.same_matrices(&v));
    let err = text::parse_representation("rep S3 dim 2 mod 7\nmatrix 2 2 mod 7\n1 0\n", |_| {
        Some(g.clone())
    })
    .unwrap_err();
    assert_eq!(err.line, 3);
}
