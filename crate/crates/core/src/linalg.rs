//! Dense linear algebra over `F_p` on row-major `Vec<Vec<u64>>` matrices.

use crate::field::PrimeField;

/// Reduces `rows` in place to reduced row echelon form, drops zero rows and
/// returns the pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, f: &PrimeField) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(sel) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv(rows[r][col]).expect("pivot is nonzero");
        if inv != 1 {
            for x in rows[r][col..].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = f.sub(*x, f.mul(factor, y));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ v : M v^T = 0 }` for an RREF matrix with the given pivots.
pub(crate) fn null_space_of_rref(
    rref_rows: &[Vec<u64>],
    pivots: &[usize],
    ncols: usize,
    f: &PrimeField,
) -> Vec<Vec<u64>> {
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (row, &pc) in rref_rows.iter().zip(pivots) {
                v[pc] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

pub(crate) fn null_space(rows: &[Vec<u64>], ncols: usize, f: &PrimeField) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, f);
    null_space_of_rref(&m, &pivots, ncols, f)
}

pub(crate) fn dot(a: &[u64], b: &[u64], f: &PrimeField) -> u64 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Determinant by elimination (square matrices only).
pub(crate) fn determinant(m: &[Vec<u64>], f: &PrimeField) -> u64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = 1u64;
    for col in 0..n {
        let Some(sel) = (col..n).find(|&i| a[i][col] != 0) else {
            return 0;
        };
        if sel != col {
            a.swap(sel, col);
            det = f.neg(det);
        }
        det = f.mul(det, a[col][col]);
        let inv = f.inv(a[col][col]).expect("nonzero pivot");
        for i in col + 1..n {
            let factor = f.mul(a[i][col], inv);
            if factor == 0 {
                continue;
            }
            for j in col..n {
                a[i][j] = f.sub(a[i][j], f.mul(factor, a[col][j]));
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_kernel() {
        let f = PrimeField::new(7).unwrap();
        let mut m = vec![vec![1, 1, 1, 1, 1], vec![2, 2, 2, 2, 2], vec![0, 0, 0, 0, 0]];
        let piv = rref(&mut m, &f);
        assert_eq!(piv, vec![0]);
        assert_eq!(m, vec![vec![1, 1, 1, 1, 1]]);
        let ker = null_space_of_rref(&m, &piv, 5, &f);
        assert_eq!(ker.len(), 4);
        for v in &ker {
            assert_eq!(dot(v, &m[0], &f), 0);
        }
    }

    #[test]
    fn determinant_small() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(determinant(&[vec![1, 2], vec![3, 4]], &f), f.from_i64(-2));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]], &f), 6);
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]], &f), 0);
    }
}
