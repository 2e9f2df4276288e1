//! The two families counted by the right-boundary sequence: binary strings
//! with no zero-run of length 1 mod 3, and two-column arrays over {0,1,2}.
//!
//! Brute force lives next to the type automata so each can check the other.
//! The brute-force generators only ever look at the membership rules.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::counting::sequences::{arrays_count, binary_count, ArrayRoute};
use crate::counting::IntMatrix;
use crate::error::{Error, Result};
use crate::lsystem::{boundary_right_traced, BoundarySymbol};

pub const STRING_CAP: usize = 24;
pub const ARRAY_CAP: usize = 14;
/// Largest level for [`aligned_listing`]; arrays run one row longer.
pub const ALIGNED_CAP: usize = ARRAY_CAP - 1;

fn check_cap(what: &'static str, n: usize, max: usize) -> Result<()> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::Cap { what, n, min: 1, max })
    }
}

// ---------------------------------------------------------------- strings

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryString {
    bits: Vec<bool>,
}

impl BinaryString {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The low `n` bits of `value`, most significant first.
    pub fn from_value(value: u64, n: usize) -> Self {
        Self::new((0..n).rev().map(|i| value >> i & 1 == 1).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Every maximal run of zeros has length ≢ 1 (mod 3).
    pub fn is_member(&self) -> bool {
        self.bits.split(|&b| b).all(|run| run.len() % 3 != 1)
    }

    fn trailing_zeros(bits: &[bool]) -> usize {
        bits.iter().rev().take_while(|&&b| !b).count()
    }

    fn pushed(&self, tail: &[bool]) -> Self {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(tail);
        Self::new(bits)
    }

    fn prefix(&self, len: usize) -> Self {
        Self::new(self.bits[..len].to_vec())
    }
}

impl fmt::Display for BinaryString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.bits
            .iter()
            .try_for_each(|&b| f.write_str(if b { "1" } else { "0" }))
    }
}

impl FromStr for BinaryString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::NotMember(format!("{s:?} (not a bit string)"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl Serialize for BinaryString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BinType {
    A,
    B,
    C,
    D,
    E,
}

impl BinType {
    pub const ALL: [BinType; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    pub fn letter(self) -> char {
        b"ABCDE"[self as usize] as char
    }

    /// Image types under one step of `f`, in the order `successors_f` emits.
    pub fn successors(self) -> &'static [BinType] {
        match self {
            Self::A => &[Self::C],
            Self::B => &[Self::A, Self::D],
            Self::C | Self::E => &[Self::E, Self::B],
            Self::D => &[Self::E],
        }
    }
}

impl fmt::Display for BinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

fn require_string(s: &BinaryString) -> Result<()> {
    if !s.is_empty() && s.is_member() {
        Ok(())
    } else {
        Err(Error::NotMember(format!("string {s:?}", s = s.to_string())))
    }
}

/// Type by trailing shape. A lone `1` (no zeros before it) counts as C.
pub fn classify_bin(s: &BinaryString) -> Result<BinType> {
    require_string(s)?;
    let bits = s.bits();
    let (&last, rest) = bits.split_last().expect("nonempty");
    Ok(if !last {
        if BinaryString::trailing_zeros(bits).is_multiple_of(3) {
            BinType::A
        } else {
            BinType::B
        }
    } else if rest.last() == Some(&true) {
        BinType::E
    } else if BinaryString::trailing_zeros(rest).is_multiple_of(3) {
        BinType::C
    } else {
        BinType::D
    })
}

/// The map taking a length-n member to its children of length n+1.
pub fn successors_f(s: &BinaryString) -> Result<Vec<BinaryString>> {
    Ok(match classify_bin(s)? {
        BinType::A | BinType::D => vec![s.pushed(&[true])],
        BinType::B => vec![s.pushed(&[false]), s.pushed(&[true])],
        // s = w01 or w11: keep s·1, and swap the final 1 for 00.
        BinType::C | BinType::E => vec![s.pushed(&[true]), s.prefix(s.len() - 1).pushed(&[false, false])],
    })
}

/// The unique `v` with `s` in `f(v)`; `None` at length 1.
pub fn parent_f(s: &BinaryString) -> Result<Option<BinaryString>> {
    let t = classify_bin(s)?;
    let n = s.len();
    if n == 1 {
        return Ok(None);
    }
    Ok(Some(match t {
        BinType::C | BinType::D | BinType::E | BinType::A => s.prefix(n - 1),
        // Undo the 1 -> 00 swap.
        BinType::B => s.prefix(n - 2).pushed(&[true]),
    }))
}

/// Types along the chain of ancestors under `f`, from length 1 up to `s`.
pub fn bin_type_history(s: &BinaryString) -> Result<Vec<BinType>> {
    let mut out = vec![classify_bin(s)?];
    let mut at = s.clone();
    while let Some(p) = parent_f(&at)? {
        out.push(classify_bin(&p)?);
        at = p;
    }
    out.reverse();
    Ok(out)
}

/// Members of length `n` by filtering all 2^n strings, largest value first.
pub fn enumerate_s(n: usize) -> Result<Vec<BinaryString>> {
    check_cap("string", n, STRING_CAP)?;
    Ok((0..1u64 << n)
        .rev()
        .filter(|&v| value_is_member(v, n))
        .map(|v| BinaryString::from_value(v, n))
        .collect())
}

fn value_is_member(v: u64, n: usize) -> bool {
    let mut run = 0;
    for i in (0..n).rev() {
        if v >> i & 1 == 1 {
            if run % 3 == 1 {
                return false;
            }
            run = 0;
        } else {
            run += 1;
        }
    }
    run % 3 != 1
}

/// The images `f(v)`, `v` of length `n`, are disjoint and cover length n+1.
pub fn partition_check(n: usize) -> Result<bool> {
    check_cap("string", n + 1, STRING_CAP)?;
    let next: HashSet<BinaryString> = enumerate_s(n + 1)?.into_iter().collect();
    let mut seen = HashSet::with_capacity(next.len());
    for v in enumerate_s(n)? {
        for x in successors_f(&v)? {
            if !next.contains(&x) || !seen.insert(x) {
                return Ok(false);
            }
        }
    }
    Ok(seen.len() == next.len())
}

/// Column-per-source transition matrix of a successor table.
fn matrix_from_table<T: Copy>(states: &[T], index: impl Fn(T) -> usize, succ: impl Fn(T) -> Vec<T>) -> IntMatrix {
    let k = states.len();
    let mut m = IntMatrix::zeros(k, k);
    for &from in states {
        for to in succ(from) {
            m[(index(to), index(from))] += 1;
        }
    }
    m
}

/// The 5×5 string-type matrix rebuilt from [`BinType::successors`].
pub fn bin_type_matrix() -> IntMatrix {
    matrix_from_table(&BinType::ALL, |t| t as usize, |t| t.successors().to_vec())
}

/// `|S_n|` through the type automaton, seeded at the string `1`.
pub fn count_s_matrix(n: u64) -> BigInt {
    binary_count(n)
}

// ----------------------------------------------------------------- arrays

pub type Row = [u8; 2];

/// Rows tried at each depth. The order makes the depth-first listing come
/// out sorted by row type.
pub const ROW_CANDIDATES: [Row; 9] = [[0, 1], [0, 2], [1, 0], [1, 2], [2, 0], [2, 1], [0, 0], [1, 1], [2, 2]];

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryArray {
    rows: Vec<Row>,
}

impl TernaryArray {
    pub fn new(rows: Vec<Row>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    /// Every entry satisfies the adjacency rules against what lies above
    /// and to its left.
    pub fn is_member(&self) -> bool {
        !self.rows.is_empty() && (0..self.rows.len()).all(|i| (0..2).all(|j| cell_ok(&self.rows, i, j)))
    }

    fn prefix(&self, len: usize) -> Self {
        Self::new(self.rows[..len].to_vec())
    }
}

/// Rules for entry (i, j), looking only at earlier entries:
/// a 1 needs a 0 directly above or to the left; a 0 has no 0 directly
/// above or to the left; a 2 has 1 above it and 0 above that.
fn cell_ok(rows: &[Row], i: usize, j: usize) -> bool {
    let above = |k: usize| (i >= k).then(|| rows[i - k][j]);
    let left = (j > 0).then(|| rows[i][j - 1]);
    match rows[i][j] {
        0 => above(1) != Some(0) && left != Some(0),
        1 => above(1) == Some(0) || left == Some(0),
        2 => above(1) == Some(1) && above(2) == Some(0),
        _ => false,
    }
}

impl fmt::Display for TernaryArray {
    /// Rows as digit pairs separated by spaces, e.g. `01 10 01`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b]) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}{b}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotMember(format!("{s:?} (not a list of digit pairs)"));
        s.split(|c: char| c.is_whitespace() || c == '/')
            .filter(|t| !t.is_empty())
            .map(|t| match t.as_bytes() {
                [a @ b'0'..=b'2', b @ b'0'..=b'2'] => Ok([a - b'0', b - b'0']),
                _ => Err(bad()),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl Serialize for TernaryArray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RowType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl RowType {
    pub const ALL: [RowType; 8] = [Self::A, Self::B, Self::C, Self::D, Self::E, Self::F, Self::G, Self::H];
    /// The types that actually occur; H never follows anything.
    pub const REACHABLE: [RowType; 7] = [Self::A, Self::B, Self::C, Self::D, Self::E, Self::F, Self::G];

    pub fn letter(self) -> char {
        b"ABCDEFGH"[self as usize] as char
    }

    /// Group of the 3-state quotient: X = {A,D}, Y = {E,G}, Z = {B,C,F}.
    /// H has no group.
    pub fn group(self) -> Option<char> {
        match self {
            Self::A | Self::D => Some('X'),
            Self::E | Self::G => Some('Y'),
            Self::B | Self::C | Self::F => Some('Z'),
            Self::H => None,
        }
    }
}

impl fmt::Display for RowType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub fn row_successors(rt: RowType) -> &'static [RowType] {
    use RowType::*;
    match rt {
        A => &[D, E],
        B | C => &[D],
        D => &[A, G],
        E => &[B, F],
        F => &[A],
        G => &[B, C],
        H => &[B],
    }
}

/// Type of the last row; a 1 in the second column is split by whether a 0
/// sits above it.
pub fn classify_row(t: &TernaryArray) -> Result<RowType> {
    let Some(&last) = t.rows().last() else {
        return Err(Error::NotMember("empty array".into()));
    };
    if matches!(last, [1, 1] | [2, 2]) {
        return Err(Error::ImpossibleRow(format!("{}{}", last[0], last[1])));
    }
    if !t.is_member() {
        return Err(Error::NotMember(format!("array {t}")));
    }
    let zero_above = t.height() >= 2 && t.rows()[t.height() - 2][1] == 0;
    Ok(match last {
        [0, 1] if zero_above => RowType::A,
        [0, 1] => RowType::B,
        [0, 2] => RowType::C,
        [1, 0] => RowType::D,
        [1, 2] => RowType::E,
        [2, 0] => RowType::F,
        [2, 1] if zero_above => RowType::G,
        [2, 1] => RowType::H,
        _ => unreachable!("member rows exclude 00"),
    })
}

pub fn row_type_history(t: &TernaryArray) -> Result<Vec<RowType>> {
    (1..=t.height()).map(|k| classify_row(&t.prefix(k))).collect()
}

/// Members of height `n` by depth-first search over all nine rows per
/// level, pruning as soon as a filled entry breaks a rule.
pub fn enumerate_a(n: usize) -> Result<Vec<TernaryArray>> {
    check_cap("array", n, ARRAY_CAP)?;
    let mut out = Vec::new();
    let mut rows = Vec::with_capacity(n);
    dfs(n, &mut rows, &mut out);
    Ok(out)
}

fn dfs(n: usize, rows: &mut Vec<Row>, out: &mut Vec<TernaryArray>) {
    if rows.len() == n {
        out.push(TernaryArray::new(rows.clone()));
        return;
    }
    let i = rows.len();
    for row in ROW_CANDIDATES {
        rows.push(row);
        if cell_ok(rows, i, 0) && cell_ok(rows, i, 1) {
            dfs(n, rows, out);
        }
        rows.pop();
    }
}

/// The 7×7 row-type matrix rebuilt from [`row_successors`], H dropped.
pub fn row_type_matrix() -> IntMatrix {
    matrix_from_table(
        &RowType::REACHABLE,
        |t| t as usize,
        |t| row_successors(t).iter().copied().filter(|&s| s != RowType::H).collect(),
    )
}

/// `|A_n|` through either automaton.
pub fn count_a(n: u64, via: ArrayRoute) -> BigInt {
    arrays_count(n, via)
}

// ---------------------------------------------------------------- listing

/// One position of the three-way correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignedEntry {
    pub index: usize,
    pub element: BoundarySymbol,
    pub string: BinaryString,
    pub string_types: String,
    pub array: TernaryArray,
    pub array_types: String,
}

fn letters<T: fmt::Display>(ts: &[T]) -> String {
    ts.iter().map(ToString::to_string).collect()
}

/// Right-boundary letters of iterate `n` paired with strings of length `n`
/// and arrays of height `n + 1`, each list in its canonical order.
pub fn aligned_listing(n: usize) -> Result<Vec<AlignedEntry>> {
    check_cap("aligned level", n, ALIGNED_CAP)?;
    let boundary = boundary_right_traced().iterate(n);
    let strings = enumerate_s(n)?;
    let arrays = enumerate_a(n + 1)?;
    if boundary.len() != strings.len() || strings.len() != arrays.len() {
        return Err(Error::Alignment {
            boundary: boundary.len(),
            strings: strings.len(),
            arrays: arrays.len(),
        });
    }
    boundary
        .symbols()
        .iter()
        .zip(strings)
        .zip(arrays)
        .enumerate()
        .map(|(index, ((&element, string), array))| {
            Ok(AlignedEntry {
                index,
                element,
                string_types: letters(&bin_type_history(&string)?),
                array_types: letters(&row_type_history(&array)?),
                string,
                array,
            })
        })
        .collect()
}
