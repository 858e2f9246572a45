use std::sync::Arc;

use proptest::prelude::*;

use super::text::{parse_factor_set, write_factor_set};
use super::*;
use crate::exactfield::Matrix;
use crate::groupcore::{catalog_entry, quotient_group, subgroup_generated, GroupTable};
use crate::meataxe::{is_irreducible, is_isomorphic_reps};
use crate::repmod::{induce, trivial_rep, Representation};

fn f(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn full(name: &str) -> Subgroup {
    Subgroup::full(catalog_entry(name).unwrap().into_arc())
}

fn c2_alpha(p: u64, cc: u32) -> FactorSet {
    validate_cocycle(&full("C2"), f(p), &[vec![1, 1], vec![1, cc]]).unwrap()
}

/// C4 = <x>, N = <x^2>, W: x^2 -> 2 over F_3.
fn c4_setup() -> (Arc<GroupTable>, Subgroup, Subgroup, Representation) {
    let t = catalog_entry("C4").unwrap().into_arc();
    let g = Subgroup::full(t.clone());
    let n = subgroup_generated(&t, &[2]);
    let w = Representation::from_generators(&n, f(3), 1, &[(2, Matrix::from_rows(f(3), &[[2]]))])
        .unwrap();
    (t, g, n, w)
}

#[test]
fn validation_examples() {
    let c2 = full("C2");
    assert!(FactorSet::trivial(&c2, f(3)).is_trivial());
    assert!(validate_cocycle(&c2, f(3), &[vec![1, 1], vec![1, 1]]).is_ok());
    assert_eq!(c2_alpha(3, 2).value(1, 1), 2);
    let err = validate_cocycle(&c2, f(3), &[vec![1, 2], vec![1, 2]]).unwrap_err();
    assert_eq!(err, CocycleError::Violation { g: 0, h: 0, k: 1 });
    let err = validate_cocycle(&c2, f(3), &[vec![1, 0], vec![1, 1]]).unwrap_err();
    assert_eq!(err, CocycleError::ZeroValue { g: 0, h: 1 });
}

#[test]
fn extension_of_c4_example() {
    let (_, g, n, w) = c4_setup();
    let x = extend_to_projective(&w, &g).unwrap();
    assert_eq!(*x.image(1), Matrix::from_rows(f(3), &[[1]]));
    let alpha = x.factor_set();
    assert_eq!(alpha.value(1, 1), 2);
    assert!(is_coset_constant(alpha, &n));
    let q = quotient_group(&g, &n).unwrap();
    let gamma = quotient_factor_set(alpha, &q).unwrap();
    assert_eq!(gamma.value(1, 1), alpha.value(1, 1));
    // alpha itself is a coboundary on C4, but no trivializer is 1 on N:
    // the obstruction lives in the quotient factor set.
    let mu = is_coboundary(alpha).unwrap();
    assert_ne!(mu[2], 1);
    assert!(is_coboundary(&gamma).is_none());
}

#[test]
fn extension_trivial_cases() {
    let s3 = full("S3");
    let triv = trivial_rep(&s3, f(7));
    let x = extend_to_projective(&triv, &s3).unwrap();
    assert!(x.factor_set().is_trivial());
    let (t, g, _, _) = c4_setup();
    let c4_faithful =
        Representation::from_generators(&g, f(5), 1, &[(1, Matrix::from_rows(f(5), &[[2]]))])
            .unwrap();
    let x = extend_to_projective(&c4_faithful, &g).unwrap();
    assert!(x.factor_set().is_trivial());
    assert!(x
        .images()
        .iter()
        .zip(c4_faithful.images())
        .all(|(a, b)| a == b));
    let e = Subgroup::trivial(t);
    let x = extend_to_projective(&trivial_rep(&e, f(3)), &g).unwrap();
    assert!(x.images().iter().all(Matrix::is_identity));
}

#[test]
fn extension_rejects_non_invariant() {
    let s3 = catalog_entry("S3").unwrap().into_arc();
    let r = s3.elements().find(|&e| s3.label(e) == "(0 1 2)").unwrap();
    let a3 = subgroup_generated(&s3, &[r]);
    let w = Representation::from_generators(&a3, f(7), 1, &[(r, Matrix::from_rows(f(7), &[[2]]))])
        .unwrap();
    let err = extend_to_projective(&w, &Subgroup::full(s3.clone())).unwrap_err();
    assert!(matches!(err, CocycleError::NotInvariant { .. }));
}

#[test]
fn quotient_and_inversion() {
    let (_, g, n, _) = c4_setup();
    let q = quotient_group(&g, &n).unwrap();
    assert!(quotient_factor_set(&FactorSet::trivial(&g, f(3)), &q)
        .unwrap()
        .is_trivial());
    let e = Subgroup::trivial(g.parent().clone());
    let qe = quotient_group(&g, &e).unwrap();
    let x = extend_to_projective(&c4_setup().3, &g).unwrap();
    let gamma = quotient_factor_set(x.factor_set(), &qe).unwrap();
    assert_eq!(gamma.rows(), x.factor_set().rows());
    let alpha = c2_alpha(3, 2);
    assert_eq!(invert_factor_set(&alpha).value(1, 1), 2);
    assert_eq!(invert_factor_set(&invert_factor_set(&alpha)), alpha);
    assert!(invert_factor_set(&FactorSet::trivial(&g, f(5))).is_trivial());
}

#[test]
fn coboundary_examples() {
    let mu = is_coboundary(&FactorSet::trivial(&full("S3"), f(7))).unwrap();
    assert!(mu.iter().all(|&m| m == 1));
    assert!(is_coboundary(&c2_alpha(3, 2)).is_none());
    let mu = is_coboundary(&c2_alpha(5, 4)).unwrap();
    assert_eq!(mu[0], 1);
    assert_eq!(f(5).mul(mu[1], mu[1]), 4);
}

#[test]
fn twisted_algebras() {
    let c2 = full("C2");
    let e = Subgroup::trivial(c2.parent().clone());
    let q = quotient_group(&c2, &e).unwrap();
    let qfull = Subgroup::full(q.table().clone());
    let plain = twisted_group_algebra(&q, &FactorSet::trivial(&qfull, f(3))).unwrap();
    assert_eq!(
        plain.regular_module().generators()[0],
        Matrix::from_rows(f(3), &[[0, 1], [1, 0]])
    );
    assert_eq!(twisted_irreducibles(&plain).unwrap().len(), 2);
    let f9 = validate_cocycle(&qfull, f(3), &[vec![1, 1], vec![1, 2]]).unwrap();
    let t9 = twisted_group_algebra(&q, &f9).unwrap();
    assert!(is_irreducible(t9.regular_module())
        .unwrap()
        .is_irreducible());
    let irr = twisted_irreducibles(&t9).unwrap();
    assert_eq!(irr.len(), 1);
    assert_eq!(irr[0].dim(), 2);
    let split = validate_cocycle(&qfull, f(5), &[vec![1, 1], vec![1, 4]]).unwrap();
    let t5 = twisted_group_algebra(&q, &split).unwrap();
    assert!(!is_irreducible(t5.regular_module())
        .unwrap()
        .is_irreducible());
    let c1 = full("C1");
    let q1 = quotient_group(&c1, &c1).unwrap();
    let t1 = twisted_group_algebra(
        &q1,
        &FactorSet::trivial(&Subgroup::full(q1.table().clone()), f(3)),
    )
    .unwrap();
    let irr = twisted_irreducibles(&t1).unwrap();
    assert_eq!((irr.len(), irr[0].dim()), (1, 1));
}

#[test]
fn gluing_recovers_induced_module() {
    let (_, g, n, w) = c4_setup();
    let x = extend_to_projective(&w, &g).unwrap();
    let alpha = x.factor_set().clone();
    let q = quotient_group(&g, &n).unwrap();
    let delta = invert_factor_set(&quotient_factor_set(&alpha, &q).unwrap());
    let beta = invert_factor_set(&alpha);
    let algebra = twisted_group_algebra(&q, &delta).unwrap();
    let irr = twisted_irreducibles(&algebra).unwrap();
    assert_eq!(irr.len(), 1);
    let y = lift_to_projective(&irr[0], &algebra, &beta).unwrap();
    assert!(y.image(2).is_identity());
    assert_eq!(*y.image(1), irr[0].generators()[0]);
    let s = glue(&y, &x).unwrap();
    assert_eq!(s.dim(), 2);
    assert!(is_irreducible(&s.to_algebra_module())
        .unwrap()
        .is_irreducible());
    let v = induce(&w, &g);
    let iso = is_isomorphic_reps(&s, &v).unwrap().unwrap();
    assert!(s.intertwines_to(&v, &iso));
    assert!(strict_equivalence(&y, &y).unwrap().unwrap().is_invertible());
    let plain = ProjectiveRep::new(
        &g,
        f(3),
        1,
        vec![Matrix::identity(f(3), 1); 4],
        FactorSet::trivial(&g, f(3)),
    )
    .unwrap();
    let err = glue(&y, &plain).unwrap_err();
    assert!(matches!(err, CocycleError::FactorSetMismatch { .. }));
}

#[test]
fn lift_over_full_normal_subgroup() {
    let g = full("S3");
    let q = quotient_group(&g, &g).unwrap();
    let qfull = Subgroup::full(q.table().clone());
    let algebra = twisted_group_algebra(&q, &FactorSet::trivial(&qfull, f(5))).unwrap();
    let u = &twisted_irreducibles(&algebra).unwrap()[0];
    let y = lift_to_projective(u, &algebra, &FactorSet::trivial(&g, f(5))).unwrap();
    assert!(y.images().iter().all(Matrix::is_identity));
}

#[test]
fn factor_set_file_round_trip() {
    let alpha = c2_alpha(3, 2);
    let text = write_factor_set(&alpha, "C2");
    assert_eq!(text, "cocycle C2 mod 3\n1 1\n1 2\n");
    let back = parse_factor_set(&text, |r| (r == "C2").then(|| full("C2"))).unwrap();
    assert_eq!(back, alpha);
    let bad = parse_factor_set("cocycle C2 mod 3\n1 1\n1\n", |_| Some(full("C2"))).unwrap_err();
    assert_eq!(bad.line, 3);
}

/// Every `mu` with values in `F_p^*`, checked directly.
fn brute_force_coboundary(alpha: &FactorSet) -> bool {
    let group = alpha.group();
    let field = alpha.field();
    let table = group.parent();
    let k = group.order();
    let p = field.modulus();
    let total = ((p - 1) as u64).pow(k as u32);
    (0..total).any(|mut code| {
        let mu: Vec<u32> = (0..k)
            .map(|_| {
                let d = (code % (p as u64 - 1)) as u32 + 1;
                code /= p as u64 - 1;
                d
            })
            .collect();
        group.members().iter().enumerate().all(|(i, &g)| {
            group.members().iter().enumerate().all(|(j, &h)| {
                let gh = group.position(table.mul(g, h)).unwrap();
                alpha.value(g, h) == field.div(field.mul(mu[i], mu[j]), mu[gh])
            })
        })
    })
}

/// Coboundary of random `mu` times a carry cocycle `zeta^[i + j >= n]` on a
/// cyclic group, or a bicharacter on C2xC2.
fn sample_cocycle(name: &str, p: u64, zeta: u32, mu: &[u32]) -> FactorSet {
    let group = full(name);
    let field = f(p);
    let table = group.parent().clone();
    let n = table.order();
    let m = |g: usize| mu[g % mu.len()] % (p as u32 - 1).max(1) + 1;
    let twist = |g: usize, h: usize| -> u32 {
        let z = zeta % (p as u32 - 1).max(1) + 1;
        if name == "C2xC2" {
            if (g / 2) * (h % 2) == 1 {
                field.neg(1)
            } else {
                1
            }
        } else if name.starts_with('C') && g + h >= n {
            z
        } else {
            1
        }
    };
    FactorSet::from_fn(&group, field, |g, h| {
        let d = field.div(field.mul(m(g), m(h)), m(table.mul(g, h)));
        field.mul(d, twist(g, h))
    })
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coboundary_matches_enumeration(
        name in prop::sample::select(vec!["C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "S3"]),
        p in prop::sample::select(vec![2u64, 3, 5, 7]),
        zeta in 0u32..6,
        mu in prop::collection::vec(0u32..6, 6),
    ) {
        let alpha = sample_cocycle(name, p, zeta, &mu);
        let found = is_coboundary(&alpha);
        prop_assert_eq!(found.is_some(), brute_force_coboundary(&alpha));
    }

    #[test]
    fn inversion_preserves_cocycles(
        name in prop::sample::select(vec!["C2", "C3", "C4", "C2xC2"]),
        zeta in 0u32..6,
        mu in prop::collection::vec(0u32..6, 6),
    ) {
        let alpha = sample_cocycle(name, 7, zeta, &mu);
        let beta = invert_factor_set(&alpha);
        prop_assert!(validate_cocycle(alpha.group(), alpha.field(), &beta.rows()).is_ok());
        prop_assert!(beta.cancels_against(&alpha).is_ok());
    }
}
