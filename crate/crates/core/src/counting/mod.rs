//! Exact counting: transfer-matrix powers, characteristic polynomials,
//! recurrences, rational generating functions and the identities that tie
//! the boundary sequences to the string and array families.

pub mod matrix;
pub mod named;
pub mod poly;
pub mod quotient;
pub mod sequences;
pub mod series;

pub use matrix::{mat_pow_vec, mat_pow_vec_stepwise, BigVector, IntMatrix};
pub use named::MatrixSet;
pub use poly::{char_poly, Polynomial};
pub use quotient::quotient_diagram_check;
pub use sequences::{full_count, left_sequence, left_weighted_count, right_count, Sequence};
pub use series::{gf_expand, rec_eval, LinearRecurrence, RationalGf};

use crate::error::Result;

/// True iff `p(m)·v = 0` exactly.
pub fn kernel_check(m: &IntMatrix, p: &Polynomial, v: &BigVector) -> Result<bool> {
    Ok(p.apply_to_vector(m, v)?.is_zero())
}

/// True iff the swap `R<->l`, `r<->L` (fixing `S`) commutes with the
/// boundary transfer matrix.
pub fn symmetry_check() -> bool {
    let set = MatrixSet::standard();
    symmetry_holds(&set)
}

pub(crate) fn symmetry_holds(set: &MatrixSet) -> bool {
    set.boundary
        .conjugate_by(&set.swap)
        .map(|conj| conj == set.boundary)
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_cubic_factor() {
        let m = MatrixSet::standard().boundary;
        let cubic = Polynomial::from_i64s(&[-2, 0, -1, 1]);
        assert!(kernel_check(&m, &cubic, &BigVector::from_i64s(&[0, 1, 1, 0, 0])).unwrap());
        assert!(!kernel_check(&m, &cubic, &BigVector::from_i64s(&[1, 0, 0, 0, 0])).unwrap());
    }

    #[test]
    fn cubic_factor_matrix_display() {
        let m = MatrixSet::standard().boundary;
        let cubic = Polynomial::from_i64s(&[-2, 0, -1, 1]);
        let expected = IntMatrix::from_rows(&[
            [-1, 0, 0, 1, 0],
            [0, -1, 1, 0, 0],
            [0, 1, -1, 0, 0],
            [1, 0, 0, -1, 0],
            [0, 0, 0, 0, 0],
        ]);
        assert_eq!(cubic.eval_matrix(&m).unwrap(), expected);
    }

    #[test]
    fn kernel_dimension_mismatch() {
        let m = MatrixSet::standard().boundary;
        assert!(kernel_check(&m, &Polynomial::one(), &BigVector::zeros(3)).is_err());
    }

    #[test]
    fn symmetry_and_involution() {
        let set = MatrixSet::standard();
        assert!(symmetry_check());
        assert_eq!(set.swap.mul(&set.swap).unwrap(), IntMatrix::identity(5));
    }

    #[test]
    fn symmetric_axioms_count_alike() {
        let set = MatrixSet::standard();
        let ones = BigVector::ones(5);
        let mut r = BigVector::basis(5, 1);
        let mut l = BigVector::basis(5, 2);
        for _ in 0..=20 {
            assert_eq!(ones.dot(&r).unwrap(), ones.dot(&l).unwrap());
            r = set.boundary.mul_vec(&r).unwrap();
            l = set.boundary.mul_vec(&l).unwrap();
        }
        assert_eq!(ones.dot(&l).unwrap(), right_count(21));
    }
}
