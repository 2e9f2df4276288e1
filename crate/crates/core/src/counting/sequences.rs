//! The named integer sequences, each reachable by a matrix route and a
//! recurrence route.
//!
//! Indexing differs between families, so every sequence carries its own
//! first index:
//!
//! | sequence | first index | first terms          |
//! |----------|-------------|----------------------|
//! | left     | 0           | 2, 4, 8, 16, 28, ... |
//! | right    | 0           | 1, 1, 2, 4, 6, 10    |
//! | full     | 0           | 2, 3, 5, 9, 15, ...  |
//! | binary   | 1           | 1, 2, 4, 6, 10       |
//! | arrays   | 1           | 1, 1, 2, 4, 6        |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::matrix::{mat_pow_vec, BigVector, IntMatrix};
use super::named::MatrixSet;
use super::poly::Polynomial;
use super::series::{LinearRecurrence, RationalGf};
use crate::error::Result;

/// Weights turning boundary letters into curve-segment counts: `R,r -> 1`,
/// `L,l -> 3`, `S -> 2`.
pub const LEFT_SEGMENT_WEIGHTS: [i64; 5] = [1, 1, 3, 3, 2];

fn boundary() -> IntMatrix {
    MatrixSet::standard().boundary
}

fn total(m: &IntMatrix, n: u64, weights: &BigVector, seed: &BigVector) -> BigInt {
    let v = mat_pow_vec(m, n, seed).expect("dimensions fixed");
    weights.dot(&v).expect("dimensions fixed")
}

/// `(1,1,3,3,2)·M^n·e_R`: curve segments on the left side of the n-th dragon.
pub fn left_weighted_count(n: u64) -> BigInt {
    total(
        &boundary(),
        n,
        &BigVector::from_i64s(&LEFT_SEGMENT_WEIGHTS),
        &BigVector::basis(5, 0),
    )
}

/// The left sequence 2, 4, 8, 16, 28, ..., equal to the weighted count one
/// level up.
pub fn left_sequence(n: u64) -> BigInt {
    left_weighted_count(n + 1)
}

/// `1·M^n·e_L`: letters on the right side of the n-th polyomino.
pub fn right_count(n: u64) -> BigInt {
    total(&boundary(), n, &BigVector::ones(5), &BigVector::basis(5, 2))
}

/// `1·M^n·(e_R + e_r)`: letters on the whole boundary.
pub fn full_count(n: u64) -> BigInt {
    total(
        &boundary(),
        n,
        &BigVector::ones(5),
        &BigVector::from_i64s(&[1, 1, 0, 0, 0]),
    )
}

/// Generating function `2(1+x^2) / ((1-x)(1-x-2x^3))` of the left sequence.
pub fn left_gf() -> RationalGf {
    let num = Polynomial::from_i64s(&[2, 0, 2]);
    let den = Polynomial::from_i64s(&[1, -1]).mul(&Polynomial::from_i64s(&[1, -1, 0, -2]));
    RationalGf::new(num, den).expect("constant term 1")
}

/// Generating function `x(1+x^2) / (1-x-2x^3)`; its coefficient at `n+1` is
/// the right count at `n`.
pub fn right_gf() -> RationalGf {
    RationalGf::new(
        Polynomial::from_i64s(&[0, 1, 0, 1]),
        Polynomial::from_i64s(&[1, -1, 0, -2]),
    )
    .expect("constant term 1")
}

/// `a(n) = 2a(n-1) - a(n-2) + 2a(n-3) - 2a(n-4)` from 2, 4, 8, 16.
pub fn left_recurrence() -> LinearRecurrence {
    LinearRecurrence::from_i64s(&[2, -1, 2, -2], &[2, 4, 8, 16], 0).expect("valid")
}

/// The same recurrence on the weighted count, which starts one index
/// earlier and therefore needs the fifth term 16 stored explicitly.
pub fn left_weighted_recurrence() -> LinearRecurrence {
    LinearRecurrence::from_i64s(&[2, -1, 2, -2], &[1, 2, 4, 8, 16], 0).expect("valid")
}

/// `a(n) = a(n-1) + 2a(n-3)` from 1, 1, 2.
pub fn right_recurrence() -> LinearRecurrence {
    LinearRecurrence::from_i64s(&[1, 0, 2], &[1, 1, 2], 0).expect("valid")
}

/// Full boundary: Cayley-Hamilton on the boundary matrix gives the order-4
/// recurrence from index 5 on. The five seed terms come from the matrix.
pub fn full_recurrence() -> LinearRecurrence {
    LinearRecurrence::new(
        vec![2.into(), (-1).into(), 2.into(), (-2).into()],
        (0..5).map(full_count).collect(),
        0,
    )
    .expect("valid")
}

/// `c(n) = c(n-1) + 2c(n-3)` from `c(1..=3)` = 1, 2, 4.
pub fn binary_recurrence() -> LinearRecurrence {
    LinearRecurrence::from_i64s(&[1, 0, 2], &[1, 2, 4], 1).expect("valid")
}

/// `d(n) = d(n-1) + 2d(n-3)` from `d(1..=3)` = 1, 1, 2.
pub fn arrays_recurrence() -> LinearRecurrence {
    LinearRecurrence::from_i64s(&[1, 0, 2], &[1, 1, 2], 1).expect("valid")
}

/// Route for the array count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrayRoute {
    /// The 7-state row-type automaton.
    RowTypes,
    /// The 3-state group automaton.
    Groups,
}

/// `1·K^(n-1)·e_C` over the string-type automaton. `n >= 1`.
pub fn binary_count(n: u64) -> BigInt {
    assert!(n >= 1, "string lengths start at 1");
    total(
        &MatrixSet::standard().binary_types,
        n - 1,
        &BigVector::ones(5),
        &BigVector::basis(5, 2),
    )
}

/// Array count by either automaton. `n >= 1`.
pub fn arrays_count(n: u64, route: ArrayRoute) -> BigInt {
    assert!(n >= 1, "array heights start at 1");
    let set = MatrixSet::standard();
    match route {
        ArrayRoute::RowTypes => total(&set.array_rows, n - 1, &set.row_total, &set.row_seed),
        ArrayRoute::Groups => total(&set.array_groups, n - 1, &set.group_total, &set.group_seed),
    }
}

/// One of the exported sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sequence {
    Left,
    Right,
    Full,
    Binary,
    Arrays,
}

impl Sequence {
    pub const ALL: [Sequence; 5] = [Self::Left, Self::Right, Self::Full, Self::Binary, Self::Arrays];

    pub fn name(self) -> &'static str {
        match self {
            Self::Left => "left",
            Self::Right => "right",
            Self::Full => "full",
            Self::Binary => "binary",
            Self::Arrays => "arrays",
        }
    }

    /// OEIS identifier, where the sequence has one.
    pub fn oeis(self) -> Option<&'static str> {
        match self {
            Self::Left => Some("A227036"),
            Self::Right | Self::Binary | Self::Arrays => Some("A203175"),
            Self::Full => None,
        }
    }

    pub fn first_index(self) -> u64 {
        match self {
            Self::Left | Self::Right | Self::Full => 0,
            Self::Binary | Self::Arrays => 1,
        }
    }

    pub fn recurrence(self) -> LinearRecurrence {
        match self {
            Self::Left => left_recurrence(),
            Self::Right => right_recurrence(),
            Self::Full => full_recurrence(),
            Self::Binary => binary_recurrence(),
            Self::Arrays => arrays_recurrence(),
        }
    }

    /// Transfer matrix, start vector and totalling functional.
    pub fn automaton(self) -> (IntMatrix, BigVector, BigVector) {
        let set = MatrixSet::standard();
        match self {
            // Seeded one level up: left(n) = weighted(n+1).
            Self::Left => {
                let seed = set.boundary.mul_vec(&BigVector::basis(5, 0)).expect("5x5");
                (set.boundary, seed, BigVector::from_i64s(&LEFT_SEGMENT_WEIGHTS))
            }
            Self::Right => (set.boundary, BigVector::basis(5, 2), BigVector::ones(5)),
            Self::Full => (set.boundary, BigVector::from_i64s(&[1, 1, 0, 0, 0]), BigVector::ones(5)),
            Self::Binary => (set.binary_types, BigVector::basis(5, 2), BigVector::ones(5)),
            Self::Arrays => (set.array_rows, set.row_seed, set.row_total),
        }
    }

    /// Single term by binary matrix powering.
    pub fn by_matrix(self, n: u64) -> Result<BigInt> {
        let first = self.first_index();
        if n < first {
            return Err(crate::error::Error::BelowStart { n, start: first });
        }
        let (m, seed, weights) = self.automaton();
        weights.dot(&mat_pow_vec(&m, n - first, &seed)?)
    }

    /// Single term by stepping the recurrence.
    pub fn by_recurrence(self, n: u64) -> Result<BigInt> {
        self.recurrence().eval(n)
    }

    /// Terms `first..=n` by repeated matrix-vector products.
    pub fn matrix_table(self, n: u64) -> Result<Vec<BigInt>> {
        let first = self.first_index();
        if n < first {
            return Err(crate::error::Error::BelowStart { n, start: first });
        }
        let (m, mut state, weights) = self.automaton();
        let mut out = Vec::with_capacity((n - first + 1) as usize);
        for i in first..=n {
            out.push(weights.dot(&state)?);
            if i < n {
                state = m.mul_vec(&state)?;
            }
        }
        Ok(out)
    }

    /// Terms `first..=n` by the recurrence.
    pub fn recurrence_table(self, n: u64) -> Result<Vec<BigInt>> {
        self.recurrence().table(n)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown sequence {s:?}"))
    }
}

/// Real root of `x^3 - x^2 - 2`, the growth rate shared by all the
/// sequences. Informational only.
pub fn growth_constant() -> f64 {
    let mut x = 1.7_f64;
    for _ in 0..50 {
        x -= (x * x * x - x * x - 2.0) / (3.0 * x * x - 2.0 * x);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn first_terms() {
        let weighted: Vec<_> = (0..6).map(left_weighted_count).collect();
        assert_eq!(weighted, ints(&[1, 2, 4, 8, 16, 28]));
        let right: Vec<_> = (0..6).map(right_count).collect();
        assert_eq!(right, ints(&[1, 1, 2, 4, 6, 10]));
        assert_eq!(full_count(0), BigInt::from(2));
        assert_eq!(full_count(2), BigInt::from(5));
        let binary: Vec<_> = (1..=5).map(binary_count).collect();
        assert_eq!(binary, ints(&[1, 2, 4, 6, 10]));
        for route in [ArrayRoute::RowTypes, ArrayRoute::Groups] {
            let arrays: Vec<_> = (1..=5).map(|n| arrays_count(n, route)).collect();
            assert_eq!(arrays, ints(&[1, 1, 2, 4, 6]));
        }
    }

    #[test]
    fn matrix_example_vectors() {
        let m = boundary();
        let e_r = BigVector::basis(5, 0);
        assert_eq!(mat_pow_vec(&m, 0, &e_r).unwrap(), e_r);
        assert_eq!(
            mat_pow_vec(&m, 1, &e_r).unwrap(),
            BigVector::from_i64s(&[1, 1, 0, 0, 0])
        );
        assert_eq!(
            mat_pow_vec(&m, 2, &e_r).unwrap(),
            BigVector::from_i64s(&[1, 1, 0, 0, 1])
        );
    }

    #[test]
    fn gf_expansions() {
        assert_eq!(left_gf().expand(6).unwrap(), ints(&[2, 4, 8, 16, 28, 48, 84]));
        assert_eq!(right_gf().expand(7).unwrap(), ints(&[0, 1, 1, 2, 4, 6, 10, 18]));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(left_recurrence().eval(4).unwrap(), BigInt::from(28));
        assert_eq!(right_recurrence().eval(6).unwrap(), BigInt::from(18));
        assert_eq!(left_recurrence().eval(2).unwrap(), BigInt::from(8));
    }

    #[test]
    fn weighted_recurrence_threshold() {
        // Stepping the order-4 rule one index early lands on 14, not 16.
        let b: Vec<_> = (0..4).map(left_weighted_count).collect();
        let early = BigInt::from(2) * &b[3] - &b[2] + BigInt::from(2) * &b[1] - BigInt::from(2) * &b[0];
        assert_eq!(early, BigInt::from(14));
        assert_eq!(left_weighted_count(4), BigInt::from(16));
        let terms: Vec<_> = (0..40).map(left_weighted_count).collect();
        assert!(left_weighted_recurrence().holds_on(&terms, 0, 5));
        assert!(!left_weighted_recurrence().holds_on(&terms, 0, 4));
    }

    #[test]
    fn routes_agree_for_every_sequence() {
        for seq in Sequence::ALL {
            let matrix = seq.matrix_table(80).unwrap();
            let rec = seq.recurrence_table(80).unwrap();
            assert_eq!(matrix, rec, "{seq}");
            assert_eq!(seq.by_matrix(80).unwrap(), seq.by_recurrence(80).unwrap(), "{seq}");
        }
    }

    #[test]
    fn below_first_index() {
        assert!(Sequence::Binary.by_matrix(0).is_err());
        assert!(Sequence::Arrays.by_recurrence(0).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("left".parse::<Sequence>().unwrap(), Sequence::Left);
        assert!("middle".parse::<Sequence>().is_err());
    }

    #[test]
    fn growth_root() {
        let g = growth_constant();
        assert!((g * g * g - g * g - 2.0).abs() < 1e-12);
        assert!((g - 1.6956).abs() < 1e-3);
    }
}
