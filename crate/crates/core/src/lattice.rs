//! Integer and rational linear algebra used for simplex volumes: fraction-free
//! determinants, column-style Hermite normal form with a unimodular
//! transform, and saturated lattice bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{common_denominator, Rational};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Scale each row of a rational matrix to integers. Returns the integer
/// matrix and the product of the row scale factors.
pub fn clear_row_denominators(rows: &[Vec<Rational>]) -> (IntMatrix, BigInt) {
    let mut scale = BigInt::one();
    let ints = rows
        .iter()
        .map(|row| {
            let l = common_denominator(row);
            scale *= &l;
            row.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    (ints, scale)
}

/// Determinant of a square rational matrix.
pub fn rational_determinant(rows: &[Vec<Rational>]) -> Rational {
    let (ints, scale) = clear_row_denominators(rows);
    Rational::new(bareiss_determinant(&ints), scale)
}

/// Column-style Hermite normal form: finds a unimodular `U` with `A·U = H`,
/// where `H` is lower echelon with positive pivots and reduced entries left
/// of each pivot. Returns `(H, U, rank)`; columns `rank..` of `H` are zero,
/// so the same columns of `U` form a basis of the integer kernel of `A`.
pub fn column_hnf(matrix: &[Vec<BigInt>], cols: usize) -> (IntMatrix, IntMatrix, usize) {
    let rows = matrix.len();
    let mut h: IntMatrix = matrix.to_vec();
    let mut u: IntMatrix = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from((i == j) as u8)).collect())
        .collect();
    let mut pivot = 0;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        // bring a nonzero entry into the pivot column
        let Some(first) = (pivot..cols).find(|&c| !h[r][c].is_zero()) else {
            continue;
        };
        swap_columns(&mut h, pivot, first);
        swap_columns(&mut u, pivot, first);
        for c in pivot + 1..cols {
            if h[r][c].is_zero() {
                continue;
            }
            let a = h[r][pivot].clone();
            let b = h[r][c].clone();
            let e = a.extended_gcd(&b);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let p = -(&b / &g);
            let q = &a / &g;
            combine_columns(&mut h, pivot, c, &x, &y, &p, &q);
            combine_columns(&mut u, pivot, c, &x, &y, &p, &q);
        }
        if h[r][pivot].is_negative() {
            negate_column(&mut h, pivot);
            negate_column(&mut u, pivot);
        }
        let piv = h[r][pivot].clone();
        for c in 0..pivot {
            let quot = h[r][c].div_floor(&piv);
            if !quot.is_zero() {
                sub_column(&mut h, c, pivot, &quot);
                sub_column(&mut u, c, pivot, &quot);
            }
        }
        pivot += 1;
    }
    (h, u, pivot)
}

fn swap_columns(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

fn negate_column(m: &mut IntMatrix, c: usize) {
    for row in m.iter_mut() {
        row[c] = -&row[c];
    }
}

/// `col_a ← col_a - q·col_b`
fn sub_column(m: &mut IntMatrix, a: usize, b: usize, q: &BigInt) {
    for row in m.iter_mut() {
        row[a] = &row[a] - q * &row[b];
    }
}

/// `(col_a, col_b) ← (x·col_a + y·col_b, p·col_a + q·col_b)`
fn combine_columns(m: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
    for row in m.iter_mut() {
        let va = &row[a];
        let vb = &row[b];
        let na = x * va + y * vb;
        let nb = p * va + q * vb;
        row[a] = na;
        row[b] = nb;
    }
}

/// Integer basis of the kernel of the `rows × cols` integer matrix, as
/// column vectors. The basis generates every integer kernel vector.
pub fn integer_kernel(matrix: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let (_, u, rank) = column_hnf(matrix, cols);
    (rank..cols)
        .map(|c| u.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// Rank of an integer matrix.
pub fn integer_rank(matrix: &[Vec<BigInt>], cols: usize) -> usize {
    column_hnf(matrix, cols).2
}

/// Basis of the lattice `span(rows) ∩ Z^n`, returned as vectors of length
/// `cols`. The input rows must be linearly independent.
pub fn saturated_basis(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<BigInt>> {
    let kernel = integer_kernel(rows, cols);
    if kernel.is_empty() {
        return (0..cols)
            .map(|i| (0..cols).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();
    }
    // span(rows) = ker(Kᵀ) where K spans ker(rows)
    integer_kernel(&kernel, cols)
}

/// Solve `Σ_j coords_j · basis_j = target` exactly; `None` if `target` is
/// outside the span. The basis vectors must be linearly independent.
pub fn coordinates_in_basis(basis: &[Vec<BigInt>], target: &[Rational]) -> Option<Vec<Rational>> {
    let d = basis.len();
    let n = target.len();
    // augmented n × (d+1) system
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|b| Rational::from_integer(b[i].clone())).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(d);
    for col in 0..d {
        let sel = (pivot_row..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, sel);
        let inv = a[pivot_row][col].recip();
        for v in a[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..n {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                let (pivot, target) = if r < pivot_row {
                    let (lo, hi) = a.split_at_mut(pivot_row);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = a.split_at_mut(r);
                    (&lo[pivot_row], &mut hi[0])
                };
                for (t, p) in target[col..=d].iter_mut().zip(&pivot[col..=d]) {
                    *t -= &f * p;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|row| !row[d].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][d].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        let k = b.len();
        let cols = b[0].len();
        a.iter()
            .map(|row| (0..cols).map(|j| (0..k).map(|t| &row[t] * &b[t][j]).sum()).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        assert_eq!(bareiss_determinant(&m(&[&[2, 0], &[0, 3]])), BigInt::from(6));
        assert_eq!(bareiss_determinant(&m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            bareiss_determinant(&m(&[&[2, -3, 1], &[2, 0, -1], &[1, 4, 5]])),
            BigInt::from(49)
        );
        assert_eq!(bareiss_determinant(&m(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(bareiss_determinant(&[]), BigInt::from(1));
    }

    #[test]
    fn rational_determinant_scales() {
        let rows = vec![vec![rat(1, 2), int(0)], vec![int(0), rat(2, 3)]];
        assert_eq!(rational_determinant(&rows), rat(1, 3));
    }

    #[test]
    fn hnf_transform_is_consistent() {
        let a = m(&[&[4, 6, 10], &[3, 9, 12]]);
        let (h, u, rank) = column_hnf(&a, 3);
        assert_eq!(rank, 2);
        assert_eq!(mat_mul(&a, &u), h);
        assert_eq!(bareiss_determinant(&u).abs(), BigInt::from(1));
        // kernel column
        for row in &h {
            assert!(row[2].is_zero());
        }
    }

    #[test]
    fn saturation_of_diagonal() {
        // span{(2,2,0)} ∩ Z^3 is generated by (1,1,0)
        let b = saturated_basis(&m(&[&[2, 2, 0]]), 3);
        assert_eq!(b.len(), 1);
        let v: Vec<i64> = b[0].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(v == vec![1, 1, 0] || v == vec![-1, -1, 0]);
    }

    #[test]
    fn coordinates_solve() {
        let basis = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let c = coordinates_in_basis(&basis, &[int(2), int(5), int(3)]).unwrap();
        assert_eq!(c, vec![int(2), int(3)]);
        assert!(coordinates_in_basis(&basis, &[int(1), int(0), int(0)]).is_none());
    }
}
