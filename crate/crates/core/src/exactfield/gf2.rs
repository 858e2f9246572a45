//! Bit-packed elimination for p = 2. Rows are `u64` words; a row operation is
//! one XOR per word.

use super::{Matrix, Rref};

pub(super) fn rref(m: &Matrix) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let words = cols.div_ceil(64);
    let mut packed: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut w = vec![0u64; words];
            for (c, &x) in m.row(r).iter().enumerate() {
                if x != 0 {
                    w[c / 64] |= 1 << (c % 64);
                }
            }
            w
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let Some(pr) = (rank..rows).find(|&r| packed[r][wi] & bit != 0) else {
            continue;
        };
        packed.swap(pr, rank);
        let pivot = packed[rank].clone();
        for (r, row) in packed.iter_mut().enumerate() {
            if r != rank && row[wi] & bit != 0 {
                for (x, &y) in row.iter_mut().zip(&pivot).skip(wi) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let data = packed
        .iter()
        .flat_map(|w| (0..cols).map(move |c| ((w[c / 64] >> (c % 64)) & 1) as u32))
        .collect();
    Rref {
        reduced: Matrix::from_vec(m.field(), rows, cols, data),
        rank,
        pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::super::PrimeField;
    use super::*;

    #[test]
    fn packed_path_matches_hand_elimination() {
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::from_rows(f, &[[1, 1, 0], [1, 1, 0], [0, 1, 1]]);
        let r = rref(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(
            r.reduced,
            Matrix::from_rows(f, &[[1, 0, 1], [0, 1, 1], [0, 0, 0]])
        );
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::from_fn(f, 70, 130, |r, c| {
            u32::from((r * 7 + c * 3) % 5 == 0 || r == c)
        });
        assert_eq!(rref(&m), m.rref_dense());
    }
}
