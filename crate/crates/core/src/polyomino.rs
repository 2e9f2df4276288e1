//! The polyomino of a dragon iterate and its traced boundary.
//!
//! Each curve edge is the diagonal of one square. Rotating by 45° and scaling
//! by √2 with `phi(x, y) = (x + y, y - x)` turns those squares into unit cells
//! of Z², so the whole construction stays in integer arithmetic. A boundary
//! element (one boundary letter) is two unit steps of the traced cycle.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::Serialize;

use crate::curve::{CurvePath, LatticePoint};
use crate::error::{Error, Result};
use crate::lsystem::{BoundarySymbol, Turn, Word};

/// A vertex of the rotated lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Vertex {
    pub a: i64,
    pub b: i64,
}

impl Vertex {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Element endpoints are the images of curve lattice points.
    pub fn is_endpoint(self) -> bool {
        (self.a + self.b).rem_euclid(2) == 0
    }

    /// Parity of the corresponding curve point; meaningful on endpoints.
    pub fn is_odd(self) -> bool {
        self.a.rem_euclid(2) == 1
    }
}

pub fn phi(p: LatticePoint) -> Vertex {
    Vertex::new(p.x + p.y, p.y - p.x)
}

/// Inverse of [`phi`] on endpoint vertices.
pub fn phi_inverse(v: Vertex) -> Option<LatticePoint> {
    v.is_endpoint()
        .then(|| LatticePoint::new((v.a - v.b) / 2, (v.a + v.b) / 2))
}

/// Unit cell of the rotated lattice, named by its lower-left corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub a: i64,
    pub b: i64,
}

impl Cell {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// The cell whose diagonal is the image of the curve edge `u -> v`.
    pub fn from_edge(u: LatticePoint, v: LatticePoint) -> Self {
        let (pu, pv) = (phi(u), phi(v));
        Self::new(pu.a.min(pv.a), pu.b.min(pv.b))
    }

    fn neighbours(self) -> [Cell; 4] {
        [
            Cell::new(self.a + 1, self.b),
            Cell::new(self.a - 1, self.b),
            Cell::new(self.a, self.b + 1),
            Cell::new(self.a, self.b - 1),
        ]
    }

    /// Sides oriented clockwise (interior on the right), each paired with the
    /// cell across it.
    fn clockwise_sides(self) -> [(Vertex, Vertex, Cell); 4] {
        let ll = Vertex::new(self.a, self.b);
        let ul = Vertex::new(self.a, self.b + 1);
        let ur = Vertex::new(self.a + 1, self.b + 1);
        let lr = Vertex::new(self.a + 1, self.b);
        [
            (ll, ul, Cell::new(self.a - 1, self.b)),
            (ul, ur, Cell::new(self.a, self.b + 1)),
            (ur, lr, Cell::new(self.a + 1, self.b)),
            (lr, ll, Cell::new(self.a, self.b - 1)),
        ]
    }
}

/// A finite set of cells, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct CellSet {
    cells: BTreeSet<Cell>,
}

impl CellSet {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn iter(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    /// Inclusive bounds `(min_a, min_b, max_a, max_b)` of the cell corners.
    fn bounds(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.cells.iter();
        let first = it.next()?;
        Some(it.fold((first.a, first.b, first.a, first.b), |(a0, b0, a1, b1), c| {
            (a0.min(c.a), b0.min(c.b), a1.max(c.a), b1.max(c.b))
        }))
    }

    /// Flood fill across shared sides reaches every cell.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.cells.iter().next() else {
            return false;
        };
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbours() {
                if self.contains(n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.len()
    }

    /// Flood fill of the complement from outside the bounding box reaches
    /// every non-member cell inside it.
    pub fn is_simply_connected(&self) -> bool {
        let Some((a0, b0, a1, b1)) = self.bounds() else {
            return true;
        };
        let (a0, b0, a1, b1) = (a0 - 1, b0 - 1, a1 + 1, b1 + 1);
        let inside = |c: Cell| c.a >= a0 && c.a <= a1 && c.b >= b0 && c.b <= b1;
        let start = Cell::new(a0, b0);
        let mut seen = HashSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for n in c.neighbours() {
                if inside(n) && !self.contains(n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        let box_cells = ((a1 - a0 + 1) * (b1 - b0 + 1)) as usize;
        seen.len() + self.len() == box_cells
    }

    /// Number of cell sides not shared with another member.
    pub fn perimeter(&self) -> usize {
        self.iter()
            .map(|c| c.neighbours().iter().filter(|&&n| !self.contains(n)).count())
            .sum()
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        Self {
            cells: iter.into_iter().collect(),
        }
    }
}

/// One cell per curve edge.
pub fn cells_from_curve(p: &CurvePath) -> Result<CellSet> {
    let mut cells = BTreeSet::new();
    for (u, v) in p.edges() {
        let c = Cell::from_edge(u, v);
        if !cells.insert(c) {
            return Err(Error::DuplicateCell((c.a, c.b)));
        }
    }
    Ok(CellSet { cells })
}

/// Closed vertex sequence; the first vertex is repeated at the end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BoundaryCycle {
    vertices: Vec<Vertex>,
}

impl BoundaryCycle {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of unit steps.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Closed, unit-stepped, and no vertex visited twice.
    pub fn is_simple(&self) -> bool {
        let v = &self.vertices;
        if v.len() < 2 || v.first() != v.last() {
            return false;
        }
        let unit = v
            .windows(2)
            .all(|w| (w[0].a - w[1].a).abs() + (w[0].b - w[1].b).abs() == 1);
        let distinct: HashSet<_> = v[..v.len() - 1].iter().collect();
        unit && distinct.len() == v.len() - 1
    }
}

/// Follows the outer boundary clockwise (interior on the right) from the
/// origin, so the left side of the curve comes first.
pub fn trace_boundary(cs: &CellSet) -> Result<BoundaryCycle> {
    if !cs.is_connected() {
        return Err(Error::Disconnected);
    }
    if !cs.is_simply_connected() {
        return Err(Error::Hole);
    }
    let mut outgoing: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    let mut side_count = 0usize;
    for cell in cs.iter() {
        for (from, to, across) in cell.clockwise_sides() {
            if !cs.contains(across) {
                outgoing.entry(from).or_default().push(to);
                side_count += 1;
            }
        }
    }

    let start = Vertex::new(0, 0);
    let first = match outgoing.get(&start).map(Vec::as_slice) {
        None => return Err(Error::Geometry("start vertex is not on the boundary".into())),
        Some([only]) => *only,
        Some(_) => return Err(Error::Geometry("start vertex is a pinch point".into())),
    };

    let mut vertices = vec![start, first];
    let mut prev = start;
    let mut at = first;
    while at != start {
        if vertices.len() > side_count + 1 {
            return Err(Error::Geometry("boundary walk does not close".into()));
        }
        let heading = (at.a - prev.a, at.b - prev.b);
        let options = outgoing
            .get(&at)
            .ok_or_else(|| Error::Geometry(format!("dead end at {at:?}")))?;
        // At a pinch vertex take the sharpest right turn.
        let next = *options
            .iter()
            .min_by_key(|n| turn_rank(heading, (n.a - at.a, n.b - at.b)))
            .expect("nonempty");
        vertices.push(next);
        prev = at;
        at = next;
    }
    if vertices.len() - 1 != side_count {
        return Err(Error::Geometry(format!(
            "outer walk covers {} of {side_count} boundary sides",
            vertices.len() - 1
        )));
    }
    Ok(BoundaryCycle { vertices })
}

fn cross(d1: (i64, i64), d2: (i64, i64)) -> i64 {
    d1.0 * d2.1 - d1.1 * d2.0
}

fn turn_rank(d1: (i64, i64), d2: (i64, i64)) -> u8 {
    match cross(d1, d2).signum() {
        -1 => 0,
        0 if d1 == d2 => 1,
        1 => 2,
        _ => 3,
    }
}

fn turn_between(d1: (i64, i64), d2: (i64, i64)) -> Result<Turn> {
    match cross(d1, d2).signum() {
        -1 => Ok(Turn::Right),
        1 => Ok(Turn::Left),
        _ if d1 == d2 => Ok(Turn::Straight),
        _ => Err(Error::Geometry("boundary reverses on itself".into())),
    }
}

/// A decoded boundary word together with the parity observed at each
/// element's start vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryWord {
    pub word: Word<BoundarySymbol>,
    /// `1` for an odd start vertex, `0` for even.
    #[serde(serialize_with = "serialize_bits")]
    pub parities: Vec<bool>,
}

fn serialize_bits<S: serde::Serializer>(bits: &[bool], s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&bit_string(bits))
}

fn bit_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl BoundaryWord {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn parity_string(&self) -> String {
        bit_string(&self.parities)
    }

    /// Every symbol's own parity agrees with the recorded one.
    pub fn parities_consistent(&self) -> bool {
        self.word.len() == self.parities.len()
            && self
                .word
                .symbols()
                .iter()
                .zip(&self.parities)
                .all(|(s, &odd)| s.is_odd() == odd)
    }

    fn slice(&self, range: std::ops::Range<usize>) -> BoundaryWord {
        BoundaryWord {
            word: self.word.symbols()[range.clone()].to_vec().into(),
            parities: self.parities[range].to_vec(),
        }
    }
}

/// Reads consecutive step pairs as boundary elements.
pub fn word_from_cycle(bc: &BoundaryCycle) -> Result<BoundaryWord> {
    let steps = bc.len();
    if !steps.is_multiple_of(2) || steps == 0 {
        return Err(Error::Framing(steps));
    }
    let v = bc.vertices();
    let mut symbols = Vec::with_capacity(steps / 2);
    let mut parities = Vec::with_capacity(steps / 2);
    for k in 0..steps / 2 {
        let (p0, p1, p2) = (v[2 * k], v[2 * k + 1], v[2 * k + 2]);
        if !p0.is_endpoint() {
            return Err(Error::Framing(steps));
        }
        let turn = turn_between((p1.a - p0.a, p1.b - p0.b), (p2.a - p1.a, p2.b - p1.b))?;
        let odd = p0.is_odd();
        if k == 0 && odd {
            return Err(Error::Convention);
        }
        symbols.push(BoundarySymbol::new(turn, odd));
        parities.push(odd);
    }
    Ok(BoundaryWord {
        word: symbols.into(),
        parities,
    })
}

/// Splits the boundary at the curve's end point into the left side (origin
/// to end) and right side (end back to origin).
pub fn split_boundary(bc: &BoundaryCycle, endpoint: LatticePoint) -> Result<(BoundaryWord, BoundaryWord)> {
    let target = phi(endpoint);
    let word = word_from_cycle(bc)?;
    let at = bc
        .vertices()
        .iter()
        .step_by(2)
        .position(|&v| v == target)
        .filter(|&k| k < word.len())
        .ok_or_else(|| Error::Geometry(format!("end point {endpoint:?} is not an element boundary")))?;
    Ok((word.slice(0..at), word.slice(at..word.len())))
}

/// Boundary letter counts `(full, left, right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PerimeterCounts {
    pub full: usize,
    pub left: usize,
    pub right: usize,
}

pub fn perimeter_counts(cs: &CellSet, endpoint: LatticePoint) -> Result<PerimeterCounts> {
    let cycle = trace_boundary(cs)?;
    let (left, right) = split_boundary(&cycle, endpoint)?;
    Ok(PerimeterCounts {
        full: left.len() + right.len(),
        left: left.len(),
        right: right.len(),
    })
}

/// Everything derived geometrically from one dragon iterate.
#[derive(Debug, Clone, Serialize)]
pub struct TracedBoundary {
    pub n: usize,
    pub cells: CellSet,
    pub cycle: BoundaryCycle,
    pub full: BoundaryWord,
    pub left: BoundaryWord,
    pub right: BoundaryWord,
}

impl TracedBoundary {
    pub fn from_path(n: usize, path: &CurvePath) -> Result<Self> {
        let cells = cells_from_curve(path)?;
        let cycle = trace_boundary(&cells)?;
        let full = word_from_cycle(&cycle)?;
        let (left, right) = split_boundary(&cycle, path.end())?;
        Ok(Self {
            n,
            cells,
            cycle,
            full,
            left,
            right,
        })
    }

    pub fn of_iterate(n: usize) -> Result<Self> {
        let word = crate::lsystem::dragon().iterate(n);
        Self::from_path(n, &crate::curve::dragon_path(&word))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::dragon_path;
    use crate::lsystem::dragon;

    fn path(n: usize) -> CurvePath {
        dragon_path(&dragon().iterate(n))
    }

    #[test]
    fn single_cell() {
        let cells = cells_from_curve(&path(0)).unwrap();
        assert_eq!(cells.iter().collect::<Vec<_>>(), vec![Cell::new(0, -1)]);
        let cycle = trace_boundary(&cells).unwrap();
        assert_eq!(cycle.len(), 4);
        assert!(cycle.is_simple());
        assert_eq!(word_from_cycle(&cycle).unwrap().word.to_string(), "Rr");
    }

    #[test]
    fn small_cycle_lengths() {
        assert_eq!(trace_boundary(&cells_from_curve(&path(1)).unwrap()).unwrap().len(), 6);
        assert_eq!(trace_boundary(&cells_from_curve(&path(2)).unwrap()).unwrap().len(), 10);
    }

    #[test]
    fn decoded_words() {
        let t1 = TracedBoundary::of_iterate(1).unwrap();
        assert_eq!(t1.full.word.to_string(), "RrS");
        assert_eq!(
            (t1.left.word.to_string(), t1.right.word.to_string()),
            ("Rr".into(), "S".into())
        );
        let t2 = TracedBoundary::of_iterate(2).unwrap();
        assert_eq!(t2.full.word.to_string(), "RrSRl");
        assert_eq!(
            (t2.left.word.to_string(), t2.right.word.to_string()),
            ("RrS".into(), "Rl".into())
        );
        let t0 = TracedBoundary::of_iterate(0).unwrap();
        assert_eq!(
            (t0.left.word.to_string(), t0.right.word.to_string()),
            ("R".into(), "r".into())
        );
        let t4 = TracedBoundary::of_iterate(4).unwrap();
        assert_eq!(t4.left.word.to_string(), "RrSRlRrLl");
    }

    #[test]
    fn perimeter_examples() {
        let p0 = path(0);
        let c = perimeter_counts(&cells_from_curve(&p0).unwrap(), p0.end()).unwrap();
        assert_eq!(c.full, 2);
        let p5 = path(5);
        let c = perimeter_counts(&cells_from_curve(&p5).unwrap(), p5.end()).unwrap();
        assert_eq!(c.right, 10);
        assert_eq!(c.left + c.right, c.full);
    }

    #[test]
    fn cells_count_and_distinct() {
        let cells = cells_from_curve(&path(10)).unwrap();
        assert_eq!(cells.len(), 1024);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let p = CurvePath::new(vec![
            LatticePoint::new(0, 0),
            LatticePoint::new(1, 0),
            LatticePoint::new(0, 0),
        ]);
        assert!(matches!(cells_from_curve(&p), Err(Error::DuplicateCell(_))));
    }

    #[test]
    fn ring_has_hole() {
        let ring: CellSet = (0..3)
            .flat_map(|a| (0..3).map(move |b| Cell::new(a, b)))
            .filter(|&c| c != Cell::new(1, 1))
            .collect();
        assert!(ring.is_connected());
        assert!(!ring.is_simply_connected());
        assert_eq!(trace_boundary(&ring), Err(Error::Hole));
    }

    #[test]
    fn interior_start_rejected() {
        let block: CellSet = (-1..1).flat_map(|a| (-1..1).map(move |b| Cell::new(a, b))).collect();
        assert!(matches!(trace_boundary(&block), Err(Error::Geometry(_))));
    }

    #[test]
    fn framing_and_convention_errors() {
        let odd = BoundaryCycle::new(vec![
            Vertex::new(0, 0),
            Vertex::new(1, 0),
            Vertex::new(1, 1),
            Vertex::new(0, 0),
        ]);
        assert!(matches!(word_from_cycle(&odd), Err(Error::Framing(_))));
        // Diamond around a cell, started on the odd corner (1, -1).
        let shifted = BoundaryCycle::new(vec![
            Vertex::new(1, -1),
            Vertex::new(0, -1),
            Vertex::new(0, 0),
            Vertex::new(1, 0),
            Vertex::new(1, -1),
        ]);
        assert_eq!(word_from_cycle(&shifted), Err(Error::Convention));
    }

    #[test]
    fn phi_round_trip() {
        for (x, y) in [(0, 0), (3, -2), (-5, 7)] {
            let p = LatticePoint::new(x, y);
            assert_eq!(phi_inverse(phi(p)), Some(p));
            assert_eq!(phi(p).is_odd(), p.is_odd());
        }
        assert_eq!(phi_inverse(Vertex::new(1, 0)), None);
    }
}
