//! Identities showing that the 7-state array automaton collapses onto the
//! 3-state group automaton without changing the counts.

use serde::Serialize;

use super::matrix::{BigVector, IntMatrix};
use super::named::MatrixSet;

/// How many levels of the commuting diagram are compared.
pub const DIAGRAM_LEVELS: u64 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    /// `V·U = I₃`
    pub left_inverse: bool,
    /// `P = V·N·U`
    pub restricted: bool,
    /// `Q = V·R`
    pub seeds: bool,
    /// `T = S·V`
    pub totals: bool,
    /// `P·V = V·N`
    pub intertwines: bool,
    /// `T·N^(n-1)·R = S·P^(n-1)·Q` for n = 1..=30
    pub diagram: bool,
}

impl QuotientReport {
    pub fn all(&self) -> bool {
        self.left_inverse && self.restricted && self.seeds && self.totals && self.intertwines && self.diagram
    }
}

fn as_column(v: &BigVector) -> IntMatrix {
    IntMatrix::from_columns(std::slice::from_ref(v)).expect("single column")
}

fn as_row(v: &BigVector) -> IntMatrix {
    as_column(v).transpose()
}

fn equal(a: Option<IntMatrix>, b: Option<IntMatrix>) -> bool {
    matches!((a, b), (Some(x), Some(y)) if x == y)
}

pub fn quotient_report(set: &MatrixSet) -> QuotientReport {
    let (n, p, u, v) = (&set.array_rows, &set.array_groups, &set.inclusion, &set.quotient);
    let r = as_column(&set.row_seed);
    let q = as_column(&set.group_seed);
    let t = as_row(&set.row_total);
    let s = as_row(&set.group_total);

    let left_inverse = equal(v.mul(u).ok(), Some(IntMatrix::identity(p.rows())));
    let restricted = equal(v.mul(n).and_then(|vn| vn.mul(u)).ok(), Some(p.clone()));
    let seeds = equal(v.mul(&r).ok(), Some(q));
    let totals = equal(s.mul(v).ok(), Some(t));
    let intertwines = equal(p.mul(v).ok(), v.mul(n).ok());
    let diagram = diagram_commutes(set, DIAGRAM_LEVELS);

    QuotientReport {
        left_inverse,
        restricted,
        seeds,
        totals,
        intertwines,
        diagram,
    }
}

/// Compares the 7-state and 3-state totals level by level.
pub fn diagram_commutes(set: &MatrixSet, levels: u64) -> bool {
    let mut rows = set.row_seed.clone();
    let mut groups = set.group_seed.clone();
    for level in 1..=levels {
        let lhs = set.row_total.dot(&rows);
        let rhs = set.group_total.dot(&groups);
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => {}
            _ => return false,
        }
        if level == levels {
            break;
        }
        match (set.array_rows.mul_vec(&rows), set.array_groups.mul_vec(&groups)) {
            (Ok(a), Ok(b)) => {
                rows = a;
                groups = b;
            }
            _ => return false,
        }
    }
    true
}

/// True iff every quotient identity holds for the standard matrices.
pub fn quotient_diagram_check() -> bool {
    quotient_report(&MatrixSet::standard()).all()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{char_poly, kernel_check, Polynomial};

    #[test]
    fn standard_identities_hold() {
        let report = quotient_report(&MatrixSet::standard());
        assert!(report.all(), "{report:?}");
    }

    #[test]
    fn b_e_ordered_inclusion_breaks_left_inverse() {
        let mut set = MatrixSet::standard();
        set.inclusion = MatrixSet::inclusion_b_e_order();
        let report = quotient_report(&set);
        assert!(!report.left_inverse);
        assert!(!report.restricted);
        // The remaining identities do not involve the inclusion.
        assert!(report.seeds && report.totals && report.intertwines && report.diagram);
    }

    #[test]
    fn group_matrix_char_poly() {
        let p = MatrixSet::standard().array_groups;
        assert_eq!(char_poly(&p).unwrap(), Polynomial::from_i64s(&[-2, 0, -1, 1]));
    }

    #[test]
    fn kernel_basis_of_array_matrix() {
        // N·(N^3 + N^2 - I) annihilates the group-difference vectors.
        let n = MatrixSet::standard().array_rows;
        let p = Polynomial::from_i64s(&[0, -1, 0, 1, 1]);
        for v in [
            [1, 0, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, -1],
            [0, 1, -1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, -1, 0],
        ] {
            assert!(kernel_check(&n, &p, &BigVector::from_i64s(&v)).unwrap());
        }
    }

    #[test]
    fn tampered_entry_is_detected() {
        let mut set = MatrixSet::standard();
        set.array_groups[(2, 1)] = 3.into();
        let report = quotient_report(&set);
        assert!(!report.restricted);
        assert!(!report.diagram);
    }
}
