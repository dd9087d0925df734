//! Exact integer linear algebra: Hermite and Smith normal forms, lattice
//! membership and invariant factors of finitely presented abelian groups.
//!
//! Everything here runs on unbounded integers. Lattices are always spanned by
//! the *rows* of a matrix.

mod elim;
mod hnf;
mod matrix;
mod snf;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use hnf::{hnf, hnf_basis, Hnf};
pub use matrix::IntMatrix;
pub use snf::{snf, snf_right, SnfData};

/// Finds `x` with `x·L = v`, or `None` when `v` is not in the row lattice of `L`.
pub fn member(l: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    member_with(&hnf(l), v)
}

/// Membership against a precomputed Hermite form (which must carry its transform).
pub fn member_with(h: &Hnf, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let y = h.solve_rows(v)?;
    let u = h.u.as_ref().expect("membership certificate needs the Hermite transform");
    let mut x = vec![BigInt::zero(); u.cols()];
    for (k, yk) in y.iter().enumerate() {
        if yk.is_zero() {
            continue;
        }
        for (xi, uk) in x.iter_mut().zip(u.row(k)) {
            if !uk.is_zero() {
                *xi += yk * uk;
            }
        }
    }
    Some(x)
}

/// Invariants of `Z^n / rowspan(R)`: free rank and torsion coefficients
/// `t_1 | t_2 | ...`, all at least 2.
pub fn quotient_invariants(n: usize, relations: &IntMatrix) -> (usize, Vec<BigInt>) {
    assert_eq!(relations.cols(), n, "relation width must equal the ambient rank");
    invariants_from_diag(n, &snf_right(relations).diag)
}

pub fn invariants_from_diag(n: usize, diag: &[BigInt]) -> (usize, Vec<BigInt>) {
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let torsion = diag.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
    (n - rank, torsion)
}

/// Basis (as rows) of the left kernel `{x : x·M = 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let h = hnf(m);
    let u = h.u.expect("tracked transform");
    let rows: Vec<Vec<BigInt>> = (h.rank..m.rows()).map(|i| u.row(i).to_vec()).collect();
    IntMatrix::from_big_rows(m.rows(), rows)
}

/// Convenience conversion for small vectors.
pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_examples() {
        let l = IntMatrix::from_rows(2, &[vec![2i64, 0], vec![0, 2]]);
        assert_eq!(member(&l, &big_vec(&[0, 0])), Some(big_vec(&[0, 0])));
        assert_eq!(member(&l, &big_vec(&[1, 0])), None);
        let i = IntMatrix::identity(3);
        assert_eq!(member(&i, &big_vec(&[3, -1, 7])), Some(big_vec(&[3, -1, 7])));
    }

    #[test]
    fn member_certificate_is_exact() {
        let l = IntMatrix::from_rows(3, &[vec![3i64, 1, 4], vec![1, 5, 9], vec![2, 6, 5], vec![4, 6, 13]]);
        let v = big_vec(&[7, 17, 27]); // 2*row0 + row1 + ... check by certificate
        if let Some(x) = member(&l, &v) {
            assert_eq!(l.left_mul_vec(&x), v);
        }
        let v = l.left_mul_vec(&big_vec(&[1, -2, 3, 0]));
        let x = member(&l, &v).expect("constructed from rows");
        assert_eq!(l.left_mul_vec(&x), v);
    }

    #[test]
    fn quotient_invariants_examples() {
        assert_eq!(quotient_invariants(3, &IntMatrix::zeros(0, 3)), (3, vec![]));
        assert_eq!(
            quotient_invariants(1, &IntMatrix::from_rows(1, &[vec![5i64]])),
            (0, vec![BigInt::from(5)])
        );
        assert_eq!(
            quotient_invariants(2, &IntMatrix::from_rows(2, &[vec![2i64, 0], vec![0, 3]])),
            (0, vec![BigInt::from(6)])
        );
    }

    #[test]
    fn left_kernel_annihilates() {
        let m = IntMatrix::from_rows(1, &[vec![4i64], vec![6], vec![10]]);
        let k = left_kernel(&m);
        assert_eq!(k.rows(), 2);
        assert!(k.mul(&m).is_zero());
    }
}
