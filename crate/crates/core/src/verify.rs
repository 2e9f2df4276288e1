//! Named self-checks over every module, run against a [`MatrixSet`] so a
//! tampered matrix shows up as a failing check.

use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use crate::counting::quotient::{diagram_commutes, quotient_report, DIAGRAM_LEVELS};
use crate::counting::sequences::{
    arrays_recurrence, binary_recurrence, full_recurrence, left_gf, left_recurrence, right_gf, right_recurrence,
    LEFT_SEGMENT_WEIGHTS,
};
use crate::counting::{char_poly, kernel_check, symmetry_holds, BigVector, IntMatrix, MatrixSet, Polynomial};
use crate::curve::{ab_alternation_check, check_self_avoiding, dragon_path};
use crate::enumeration::{
    aligned_listing, bin_type_matrix, enumerate_a, enumerate_s, partition_check, row_type_matrix, ALIGNED_CAP,
};
use crate::error::Result;
use crate::lsystem::{
    boundary_full, boundary_left, boundary_productions, boundary_right, boundary_right_traced, dragon, letter_counts,
    transition_matrix, BOUNDARY_COUNT_ORDER,
};
use crate::polyomino::TracedBoundary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "quick" => Ok(Self::Quick),
            "full" => Ok(Self::Full),
            _ => Err(format!("unknown level {s:?}")),
        }
    }
}

/// Upper indices each family is checked to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub geometry: usize,
    pub strings: usize,
    pub arrays: usize,
    pub partition: usize,
    pub series: u64,
}

impl Level {
    pub fn limits(self) -> Limits {
        match self {
            Self::Quick => Limits {
                geometry: 10,
                strings: 12,
                arrays: 12,
                partition: 11,
                series: 60,
            },
            Self::Full => Limits {
                geometry: 14,
                strings: 20,
                arrays: 14,
                partition: 15,
                series: 200,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub level: Level,
    pub limits: Limits,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Outcome = Result<(bool, String)>;
type Check<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// `weights·m^k·seed` for k = 0..len.
fn orbit(m: &IntMatrix, seed: &BigVector, weights: &BigVector, len: usize) -> Result<Vec<BigInt>> {
    let mut state = seed.clone();
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        out.push(weights.dot(&state)?);
        if k + 1 < len {
            state = m.mul_vec(&state)?;
        }
    }
    Ok(out)
}

/// Left sequence from index 0: weighted letters of the left word one level up.
fn left_terms(set: &MatrixSet, len: usize) -> Result<Vec<BigInt>> {
    let seed = set.boundary.mul_vec(&BigVector::basis(5, 0))?;
    orbit(&set.boundary, &seed, &BigVector::from_i64s(&LEFT_SEGMENT_WEIGHTS), len)
}

fn right_terms(set: &MatrixSet, len: usize) -> Result<Vec<BigInt>> {
    orbit(&set.boundary, &BigVector::basis(5, 2), &BigVector::ones(5), len)
}

fn full_terms(set: &MatrixSet, len: usize) -> Result<Vec<BigInt>> {
    orbit(
        &set.boundary,
        &BigVector::from_i64s(&[1, 1, 0, 0, 0]),
        &BigVector::ones(5),
        len,
    )
}

/// `c(1..)` by the string-type automaton.
fn string_terms(set: &MatrixSet, len: usize) -> Result<Vec<BigInt>> {
    orbit(&set.binary_types, &BigVector::basis(5, 2), &BigVector::ones(5), len)
}

/// `d(1..)` by the row-type automaton.
fn array_terms(set: &MatrixSet, len: usize) -> Result<Vec<BigInt>> {
    orbit(&set.array_rows, &set.row_seed, &set.row_total, len)
}

fn group_terms(set: &MatrixSet, len: usize) -> Result<Vec<BigInt>> {
    orbit(&set.array_groups, &set.group_seed, &set.group_total, len)
}

/// Every shift `s` in `-max..=max` with `a(n) = b(n + s)` wherever both
/// are defined, requiring an overlap of at least `min_overlap` terms.
/// `a` and `b` start at indices `a_first` and `b_first`.
pub fn matching_offsets(
    a: &[BigInt],
    a_first: i64,
    b: &[BigInt],
    b_first: i64,
    max: i64,
    min_overlap: usize,
) -> Vec<i64> {
    (-max..=max)
        .filter(|&s| {
            let pairs: Vec<_> = a
                .iter()
                .enumerate()
                .filter_map(|(i, x)| {
                    let j = a_first + i as i64 + s - b_first;
                    (j >= 0).then(|| b.get(j as usize).map(|y| (x, y))).flatten()
                })
                .collect();
            pairs.len() >= min_overlap && pairs.iter().all(|(x, y)| x == y)
        })
        .collect()
}

/// Shifts aligning the right-boundary count (from index 0) with the string
/// count (from 1), the right generating function coefficients (from 0) and
/// the array count (from 1), found by search. Index `n` of the right count
/// matches index `n + shift` of the other sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignmentOffsets {
    pub strings: Vec<i64>,
    pub taylor: Vec<i64>,
    pub arrays: Vec<i64>,
}

impl AlignmentOffsets {
    pub fn unique(&self) -> Option<(i64, i64, i64)> {
        match (&self.strings[..], &self.taylor[..], &self.arrays[..]) {
            ([s], [t], [a]) => Some((*s, *t, *a)),
            _ => None,
        }
    }
}

/// Finds the alignment shifts using brute-force set sizes for strings
/// (lengths `1..=strings`) and arrays (heights `1..=arrays`).
pub fn alignment_offsets(set: &MatrixSet, strings: usize, arrays: usize) -> Result<AlignmentOffsets> {
    let right = right_terms(set, strings.max(arrays) + 2)?;
    let c: Vec<BigInt> = (1..=strings)
        .map(|n| enumerate_s(n).map(|v| BigInt::from(v.len())))
        .collect::<Result<_>>()?;
    let d: Vec<BigInt> = (1..=arrays)
        .map(|n| enumerate_a(n).map(|v| BigInt::from(v.len())))
        .collect::<Result<_>>()?;
    let taylor = right_gf().expand(right.len() + 4)?;
    let min = strings.min(arrays).min(8);
    Ok(AlignmentOffsets {
        strings: matching_offsets(&right, 0, &c, 1, 3, min),
        taylor: matching_offsets(&right, 0, &taylor, 0, 3, min),
        arrays: matching_offsets(&right, 0, &d, 1, 3, min),
    })
}

pub fn run(level: Level) -> Report {
    run_with(&MatrixSet::standard(), level)
}

pub fn run_with(set: &MatrixSet, level: Level) -> Report {
    let lim = level.limits();
    let series = lim.series as usize + 1;
    let checks: Vec<Check<'_>> = vec![
        (
            "left.taylor_prefix",
            Box::new(|| {
                let got = left_gf().expand(6)?;
                Ok((got == ints(&[2, 4, 8, 16, 28, 48, 84]), join(&got)))
            }),
        ),
        (
            "left.matrix_vs_gf",
            Box::new(move || {
                let ok = left_terms(set, series)? == left_gf().expand(series - 1)?;
                Ok((ok, format!("n=0..{}", lim.series)))
            }),
        ),
        (
            "left.recurrence",
            Box::new(move || {
                let terms = left_terms(set, series)?;
                let rec = left_recurrence();
                let ok = rec.holds_on(&terms, 0, 4) && rec.table(lim.series)? == terms;
                Ok((ok, format!("from n={}", rec.threshold())))
            }),
        ),
        (
            "right.prefix",
            Box::new(|| {
                let got = right_terms(set, 6)?;
                Ok((got == ints(&[1, 1, 2, 4, 6, 10]), join(&got)))
            }),
        ),
        (
            "right.recurrence",
            Box::new(move || {
                let terms = right_terms(set, series)?;
                let ok = right_recurrence().holds_on(&terms, 0, 3) && right_recurrence().table(lim.series)? == terms;
                Ok((ok, format!("n=3..{}", lim.series)))
            }),
        ),
        (
            "right.taylor_shift",
            Box::new(move || {
                let taylor = right_gf().expand(series)?;
                let terms = right_terms(set, series)?;
                let ok = taylor[1..] == terms[..] && taylor[7] == BigInt::from(18);
                Ok((ok, format!("x^7 coefficient {}", taylor[7])))
            }),
        ),
        (
            "full.recurrence",
            Box::new(move || {
                let terms = full_terms(set, series)?;
                Ok((full_recurrence().table(lim.series)? == terms, join(&terms[..6])))
            }),
        ),
        (
            "boundary.transition_matrix",
            Box::new(|| {
                let m = transition_matrix(&boundary_productions(), &BOUNDARY_COUNT_ORDER)?;
                Ok((m == set.boundary, "productions vs M".into()))
            }),
        ),
        (
            "boundary.letter_counts",
            Box::new(move || {
                let sys = boundary_full();
                let start = BigVector::from_i64s(&[1, 1, 0, 0, 0]);
                for n in 0..=lim.geometry {
                    let counts = letter_counts(&sys.iterate(n), &BOUNDARY_COUNT_ORDER)?;
                    if counts.counts() != &crate::counting::mat_pow_vec(&set.boundary, n as u64, &start)? {
                        return Ok((false, format!("n={n}")));
                    }
                }
                Ok((true, format!("n=0..{}", lim.geometry)))
            }),
        ),
        (
            "geometry.curve",
            Box::new(move || {
                for n in 0..=lim.geometry {
                    let w = dragon().iterate(n);
                    let p = dragon_path(&w);
                    let ok = p.edge_count() == 1 << n
                        && check_self_avoiding(&p)
                        && ab_alternation_check(&w, &p)
                        && p.end().norm_squared() == 1 << n;
                    if !ok {
                        return Ok((false, format!("n={n}")));
                    }
                }
                Ok((true, format!("n=0..{}", lim.geometry)))
            }),
        ),
        (
            "geometry.boundary",
            Box::new(move || {
                let (full, left, right, right0) = (
                    boundary_full(),
                    boundary_left(),
                    boundary_right(),
                    boundary_right_traced(),
                );
                for n in 0..=lim.geometry {
                    let t = TracedBoundary::of_iterate(n)?;
                    let ok = t.cycle.is_simple()
                        && t.cells.is_simply_connected()
                        && t.full.parities_consistent()
                        && t.full.word == full.iterate(n)
                        && t.left.word == left.iterate(n)
                        && t.right.word == right0.iterate(n)
                        && (n == 0 || t.right.word == right.iterate(n));
                    if !ok {
                        return Ok((false, format!("n={n}")));
                    }
                }
                Ok((true, format!("n=0..{}", lim.geometry)))
            }),
        ),
        (
            "strings.brute_vs_matrix",
            Box::new(move || {
                let matrix = string_terms(set, lim.strings)?;
                let rec = binary_recurrence().table(lim.strings as u64)?;
                for n in 1..=lim.strings {
                    let brute = BigInt::from(enumerate_s(n)?.len());
                    if brute != matrix[n - 1] || brute != rec[n - 1] {
                        return Ok((false, format!("n={n}")));
                    }
                }
                let ok = matrix[..5] == ints(&[1, 2, 4, 6, 10])[..];
                Ok((ok, format!("n=1..{}", lim.strings)))
            }),
        ),
        (
            "strings.partition",
            Box::new(move || {
                for n in 1..=lim.partition {
                    if !partition_check(n)? {
                        return Ok((false, format!("n={n}")));
                    }
                }
                Ok((true, format!("n=1..{}", lim.partition)))
            }),
        ),
        (
            "strings.type_table",
            Box::new(|| Ok((bin_type_matrix() == set.binary_types, "table vs matrix".into()))),
        ),
        (
            "arrays.brute_vs_matrix",
            Box::new(move || {
                let rows = array_terms(set, lim.arrays)?;
                let groups = group_terms(set, lim.arrays)?;
                let rec = arrays_recurrence().table(lim.arrays as u64)?;
                for n in 1..=lim.arrays {
                    let brute = BigInt::from(enumerate_a(n)?.len());
                    if brute != rows[n - 1] || brute != groups[n - 1] || brute != rec[n - 1] {
                        return Ok((false, format!("n={n}")));
                    }
                }
                let ok = rows[..5] == ints(&[1, 1, 2, 4, 6])[..];
                Ok((ok, format!("n=1..{}", lim.arrays)))
            }),
        ),
        (
            "arrays.type_table",
            Box::new(|| Ok((row_type_matrix() == set.array_rows, "table vs matrix".into()))),
        ),
        (
            "matrix.char_polys",
            Box::new(|| {
                let cubic = Polynomial::from_i64s(&[-2, 0, -1, 1]);
                let want = [
                    (&set.boundary, Polynomial::from_i64s(&[0, 2, -2, 1, -2, 1])),
                    (&set.binary_types, Polynomial::from_i64s(&[0, 0, 1]).mul(&cubic)),
                    (
                        &set.array_rows,
                        Polynomial::product([&Polynomial::x(), &cubic, &Polynomial::from_i64s(&[-1, 0, 1, 1])]),
                    ),
                    (&set.array_groups, cubic.clone()),
                ];
                let mut detail = Vec::new();
                let mut ok = true;
                for (m, p) in want {
                    let got = char_poly(m)?;
                    ok &= got == p;
                    detail.push(got.to_string());
                }
                Ok((ok, detail.join("; ")))
            }),
        ),
        (
            "matrix.symmetry",
            Box::new(|| Ok((symmetry_holds(set), "PMP = M".into()))),
        ),
        (
            "matrix.kernel",
            Box::new(|| {
                let cubic = Polynomial::from_i64s(&[-2, 0, -1, 1]);
                let ok = kernel_check(&set.boundary, &cubic, &BigVector::from_i64s(&[0, 1, 1, 0, 0]))?;
                Ok((ok, "(M^3 - M^2 - 2I)(0,1,1,0,0) = 0".into()))
            }),
        ),
        (
            "matrix.quotient",
            Box::new(|| {
                let r = quotient_report(set);
                Ok((r.all() && diagram_commutes(set, DIAGRAM_LEVELS), format!("{r:?}")))
            }),
        ),
        (
            "alignment.offsets",
            Box::new(move || {
                let off = alignment_offsets(set, lim.strings.min(14), lim.arrays)?;
                let ok = off.unique() == Some((0, 1, 1));
                Ok((
                    ok,
                    format!(
                        "strings {:?}, taylor {:?}, arrays {:?}",
                        off.strings, off.taylor, off.arrays
                    ),
                ))
            }),
        ),
        (
            "alignment.matrices",
            Box::new(move || {
                let right = right_terms(set, series + 1)?;
                let c = string_terms(set, series)?;
                let d = array_terms(set, series + 1)?;
                let g = group_terms(set, series + 1)?;
                let taylor = right_gf().expand(series + 1)?;
                // right(n) = c(n) = taylor(n+1) = d(n+1); c and d start at 1.
                let ok = (1..series)
                    .all(|n| right[n] == c[n - 1] && right[n] == taylor[n + 1] && right[n] == d[n] && d[n] == g[n]);
                Ok((ok, format!("n=1..{}", series - 1)))
            }),
        ),
        (
            "enumeration.aligned",
            Box::new(move || {
                let top = ALIGNED_CAP.min(lim.arrays - 1).min(lim.strings);
                for n in 1..=top {
                    aligned_listing(n)?;
                }
                Ok((true, format!("levels 1..{top}")))
            }),
        ),
    ];

    let results: Vec<CheckResult> = checks
        .into_iter()
        .map(|(name, check)| {
            let t = Instant::now();
            let (passed, detail) = match check() {
                Ok(r) => r,
                Err(e) => (false, e.to_string()),
            };
            CheckResult {
                name,
                passed,
                detail,
                millis: t.elapsed().as_millis(),
            }
        })
        .collect();
    Report {
        level,
        limits: lim,
        passed: results.iter().all(|c| c.passed),
        checks: results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes() {
        let r = run(Level::Quick);
        let failed: Vec<_> = r.failures().map(|c| (c.name, c.detail.clone())).collect();
        assert!(r.passed, "{failed:?}");
    }

    #[test]
    fn tampered_boundary_fails() {
        let mut set = MatrixSet::standard();
        set.boundary[(0, 0)] += 1;
        let r = run_with(&set, Level::Quick);
        assert!(!r.passed);
        for name in [
            "boundary.transition_matrix",
            "matrix.char_polys",
            "left.matrix_vs_gf",
            "right.prefix",
        ] {
            assert!(!r.get(name).unwrap().passed, "{name}");
        }
        assert!(r.get("geometry.curve").unwrap().passed);
    }

    #[test]
    fn tampered_quotient_fails() {
        let mut set = MatrixSet::standard();
        set.inclusion = MatrixSet::inclusion_b_e_order();
        let r = run_with(&set, Level::Quick);
        assert!(!r.get("matrix.quotient").unwrap().passed);
        assert!(r.get("arrays.brute_vs_matrix").unwrap().passed);
    }

    #[test]
    fn tampered_rows_fail() {
        let mut set = MatrixSet::standard();
        set.array_rows[(6, 3)] = 0.into();
        let r = run_with(&set, Level::Quick);
        assert!(!r.get("arrays.type_table").unwrap().passed);
        assert!(!r.get("arrays.brute_vs_matrix").unwrap().passed);
    }

    #[test]
    fn offsets_search() {
        let a = ints(&[1, 1, 2, 4, 6, 10]);
        let b = ints(&[1, 2, 4, 6, 10]);
        assert_eq!(matching_offsets(&a, 0, &b, 1, 3, 4), vec![0]);
        assert_eq!(matching_offsets(&a, 0, &b, 0, 3, 4), vec![-1]);
    }
}
