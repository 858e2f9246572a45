use super::{CliffordError, Verification};
use crate::exactfield::{EchelonBasis, Matrix};
use crate::groupcore::left_transversal;
use crate::meataxe::hom_basis_reps;
use crate::repmod::{induce, restrict, Representation};

/// `f_hat(x_i (x) w) = rho_V(x_i) f(w)` on the coset basis of
/// `induce(W, G)`, where `G` is the acting group of `v`.
pub fn frobenius_hat(
    f: &Matrix,
    w: &Representation,
    v: &Representation,
) -> Result<Matrix, CliffordError> {
    let sub = w.group();
    if !sub.is_subgroup_of(v.group()) {
        return Err(CliffordError::Precondition(
            "W does not act through a subgroup of the group of V".into(),
        ));
    }
    if !w.intertwines_to(&restrict(v, sub), f) {
        return Err(CliffordError::NotIntertwiner);
    }
    let transversal = left_transversal(v.group(), sub);
    let mut columns = Vec::with_capacity(transversal.len() * w.dim());
    for &x in transversal.reps() {
        for col in f.columns() {
            columns.push(v.act(x, &col));
        }
    }
    Ok(Matrix::from_columns(v.field(), v.dim(), &columns))
}

/// Restriction of `f_hat` to the block `1 (x) W`. The identity is the
/// minimal-index representative of its coset, so that block comes first.
pub fn frobenius_unhat(f_hat: &Matrix, w: &Representation) -> Matrix {
    f_hat.submatrix(0..f_hat.rows(), 0..w.dim())
}

/// Checks that the hat map is a bijection `Hom_H(W, res V) -> Hom_G(ind W, V)`
/// and that it commutes with the action of `Z(G)` intersected with `H`.
pub fn verify_frobenius(
    w: &Representation,
    v: &Representation,
) -> Result<Verification, CliffordError> {
    let sub = w.group();
    let group = v.group();
    let induced = induce(w, group);
    let small = hom_basis_reps(w, &restrict(v, sub))?.basis;
    let big = hom_basis_reps(&induced, v)?.basis;
    let mut verification = Verification::default();
    verification.check("dimensions", small.len() == big.len(), || {
        format!("Hom_H has dimension {}, Hom_G has dimension {}", small.len(), big.len())
    });
    let mut images = EchelonBasis::new(v.field(), v.dim() * induced.dim());
    let mut intertwining = true;
    let mut round_trip = true;
    for f in &small {
        let hat = frobenius_hat(f, w, v)?;
        intertwining &= induced.intertwines_to(v, &hat);
        round_trip &= frobenius_unhat(&hat, w) == *f;
        images.insert(hat.entries());
    }
    for e in &big {
        let back = frobenius_unhat(e, w);
        round_trip &= frobenius_hat(&back, w, v)? == *e;
    }
    verification.check("hat-intertwines", intertwining, || {
        "some f_hat is not a G-map".into()
    });
    verification.check("round-trip", round_trip, || {
        "unhat(hat(f)) or hat(unhat(e)) differs from its input".into()
    });
    verification.check("hat-injective", images.len() == small.len(), || {
        format!("{} independent images of {} basis elements", images.len(), small.len())
    });
    let central = group.center().intersect(sub);
    let mut commutes = true;
    for &z in central.members() {
        let rz = v.image(z);
        for f in &small {
            commutes &= frobenius_hat(&(rz * f), w, v)? == rz * &frobenius_hat(f, w, v)?;
        }
    }
    verification.check("central-linear", commutes, || {
        format!("hat map does not commute with Z(G) ∩ H of order {}", central.order())
    });
    Ok(verification)
}
