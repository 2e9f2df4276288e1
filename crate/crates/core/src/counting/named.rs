//! The fixed integer matrices used throughout, collected so that checks can
//! run against a tampered copy.

use super::matrix::{BigVector, IntMatrix};

/// Transfer matrices and quotient maps. Row/column orders:
/// boundary `R,r,L,l,S`; binary types `A..E`; array rows `A..G`;
/// array groups `X,Y,Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSet {
    /// Boundary letter transfer matrix.
    pub boundary: IntMatrix,
    /// Permutation swapping `R<->l` and `r<->L`.
    pub swap: IntMatrix,
    /// Type transitions of the run-length strings.
    pub binary_types: IntMatrix,
    /// Last-row type transitions of the ternary arrays (type H dropped).
    pub array_rows: IntMatrix,
    /// Transitions between the row groups X, Y, Z.
    pub array_groups: IntMatrix,
    /// Inclusion of groups into row types (7x3).
    pub inclusion: IntMatrix,
    /// Quotient of row types onto groups (3x7).
    pub quotient: IntMatrix,
    /// Initial row-type vector (type B).
    pub row_seed: BigVector,
    /// Initial group vector (group Z).
    pub group_seed: BigVector,
    /// Row-type totalling functional.
    pub row_total: BigVector,
    /// Group totalling functional.
    pub group_total: BigVector,
}

impl MatrixSet {
    pub fn standard() -> Self {
        Self {
            boundary: IntMatrix::from_rows(&[
                [1, 0, 0, 0, 1],
                [1, 0, 0, 0, 0],
                [0, 0, 0, 1, 0],
                [0, 0, 0, 1, 1],
                [0, 1, 1, 0, 0],
            ]),
            swap: IntMatrix::from_rows(&[
                [0, 0, 0, 1, 0],
                [0, 0, 1, 0, 0],
                [0, 1, 0, 0, 0],
                [1, 0, 0, 0, 0],
                [0, 0, 0, 0, 1],
            ]),
            binary_types: IntMatrix::from_rows(&[
                [0, 1, 0, 0, 0],
                [0, 0, 1, 0, 1],
                [1, 0, 0, 0, 0],
                [0, 1, 0, 0, 0],
                [0, 0, 1, 1, 1],
            ]),
            array_rows: IntMatrix::from_rows(&[
                [0, 0, 0, 1, 0, 1, 0],
                [0, 0, 0, 0, 1, 0, 1],
                [0, 0, 0, 0, 0, 0, 1],
                [1, 1, 1, 0, 0, 0, 0],
                [1, 0, 0, 0, 0, 0, 0],
                [0, 0, 0, 0, 1, 0, 0],
                [0, 0, 0, 1, 0, 0, 0],
            ]),
            array_groups: IntMatrix::from_rows(&[[1, 0, 1], [1, 0, 0], [0, 2, 0]]),
            // Representatives: X -> A, Y -> E, Z -> B.
            inclusion: IntMatrix::from_rows(&[
                [1, 0, 0],
                [0, 0, 1],
                [0, 0, 0],
                [0, 0, 0],
                [0, 1, 0],
                [0, 0, 0],
                [0, 0, 0],
            ]),
            quotient: IntMatrix::from_rows(&[[1, 0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 0]]),
            row_seed: BigVector::basis(7, 1),
            group_seed: BigVector::basis(3, 2),
            row_total: BigVector::ones(7),
            group_total: BigVector::ones(3),
        }
    }

    /// Inclusion with the Y and Z representatives listed as B, E. With this
    /// column order `V·U` is a transposition rather than the identity.
    pub fn inclusion_b_e_order() -> IntMatrix {
        IntMatrix::from_rows(&[
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 0],
            [0, 0, 0],
            [0, 0, 1],
            [0, 0, 0],
            [0, 0, 0],
        ])
    }
}

impl Default for MatrixSet {
    fn default() -> Self {
        Self::standard()
    }
}
