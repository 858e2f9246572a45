use super::MeataxeError;
use crate::exactfield::{EchelonBasis, Matrix, PrimeField};
use crate::repmod::AlgebraModule;

/// Basis of the smallest generator-stable subspace containing `seed`.
pub fn spin(m: &AlgebraModule, seed: &[u32]) -> Result<Vec<Vec<u32>>, MeataxeError> {
    if seed.iter().all(|&x| x == 0) {
        return Err(MeataxeError::ZeroSeed);
    }
    Ok(spin_basis(m.field(), m.generators(), m.dim(), &[seed.to_vec()]).into_vectors())
}

/// Spin under the transposed generators (the dual action).
pub fn spin_transposed(m: &AlgebraModule, seed: &[u32]) -> Result<Vec<Vec<u32>>, MeataxeError> {
    if seed.iter().all(|&x| x == 0) {
        return Err(MeataxeError::ZeroSeed);
    }
    let transposed: Vec<Matrix> = m.generators().iter().map(Matrix::transpose).collect();
    Ok(spin_basis(m.field(), &transposed, m.dim(), &[seed.to_vec()]).into_vectors())
}

/// Semi-echelon basis of the subspace generated by `seeds` under `generators`.
/// Every new basis vector is pushed through each generator exactly once.
pub fn spin_basis(
    field: PrimeField,
    generators: &[Matrix],
    dim: usize,
    seeds: &[Vec<u32>],
) -> EchelonBasis {
    let mut basis = EchelonBasis::new(field, dim);
    let mut queue: Vec<Vec<u32>> = Vec::new();
    for s in seeds {
        if basis.insert(s) {
            queue.push(s.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() && basis.len() < dim {
        let v = queue[i].clone();
        for g in generators {
            let w = g.mul_vec(&v);
            if basis.insert(&w) {
                queue.push(w);
            }
        }
        i += 1;
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_examples() {
        let f = PrimeField::new(3).unwrap();
        let swap = Matrix::from_rows(f, &[[0, 1], [1, 0]]);
        let reg = AlgebraModule::new(f, 2, vec![swap], "regular C2");
        assert_eq!(spin(&reg, &[1, 1]).unwrap().len(), 1);
        assert_eq!(spin(&reg, &[1, 0]).unwrap().len(), 2);
        assert_eq!(spin(&reg, &[0, 0]), Err(MeataxeError::ZeroSeed));
        let bare = AlgebraModule::new(f, 3, vec![], "no generators");
        assert_eq!(spin(&bare, &[1, 2, 0]).unwrap().len(), 1);
    }
}
