use super::CliffordError;
use crate::exactfield::Matrix;
use crate::meataxe::end_ring;
use crate::repmod::AlgebraModule;

/// Recovers `S` from an intertwiner `t: U1 (x) W -> U2 (x) W` for the
/// action `a (u (x) w) = u (x) a w`, so that `t = S (x) 1`.
///
/// Kronecker indexing: basis vector `u_i (x) w_k` sits at `i * dim W + k`.
/// With `End(W)` scalar every block `t[i, j]` is a scalar multiple of the
/// identity, and `S[i][j]` is read off the block diagonal.
pub fn factor_intertwiner(
    t: &Matrix,
    dim_u1: usize,
    dim_u2: usize,
    w: &AlgebraModule,
) -> Result<Matrix, CliffordError> {
    let field = w.field();
    let dw = w.dim();
    if t.rows() != dim_u2 * dw || t.cols() != dim_u1 * dw || t.field() != field {
        return Err(CliffordError::NotIntertwiner);
    }
    if !end_ring(w)?.is_scalar {
        return Err(CliffordError::NotScalarEnd);
    }
    for a in w.generators() {
        let left = Matrix::identity(field, dim_u1).kronecker(a);
        let right = Matrix::identity(field, dim_u2).kronecker(a);
        if t * &left != &right * t {
            return Err(CliffordError::NotIntertwiner);
        }
    }
    let s = Matrix::from_fn(field, dim_u2, dim_u1, |i, j| t.get(i * dw, j * dw));
    if s.kronecker(&Matrix::identity(field, dw)) != *t {
        return Err(CliffordError::NotFactorizable);
    }
    Ok(s)
}
