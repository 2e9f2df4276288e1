//! Turtle realization of the dragon word on the integer lattice.

use std::collections::HashSet;

use serde::Serialize;

use crate::lsystem::{CurveSymbol, Word};

/// A point of Z². Coordinates grow rightward and upward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Parity of `x + y`.
    pub fn is_odd(self) -> bool {
        (self.x + self.y).rem_euclid(2) == 1
    }

    pub fn step(self, heading: Heading) -> Self {
        let (dx, dy) = heading.delta();
        Self::new(self.x + dx, self.y + dy)
    }

    pub fn norm_squared(self) -> i64 {
        self.x * self.x + self.y * self.y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heading {
    East,
    North,
    West,
    South,
}

impl Heading {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Self::East => (1, 0),
            Self::North => (0, 1),
            Self::West => (-1, 0),
            Self::South => (0, -1),
        }
    }

    /// Clockwise quarter turn.
    pub fn right(self) -> Self {
        match self {
            Self::East => Self::South,
            Self::South => Self::West,
            Self::West => Self::North,
            Self::North => Self::East,
        }
    }

    pub fn left(self) -> Self {
        match self {
            Self::East => Self::North,
            Self::North => Self::West,
            Self::West => Self::South,
            Self::South => Self::East,
        }
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Self::East | Self::West)
    }
}

/// Vertex sequence of a lattice path with unit axis-parallel steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CurvePath {
    vertices: Vec<LatticePoint>,
}

impl CurvePath {
    pub fn new(vertices: Vec<LatticePoint>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn start(&self) -> LatticePoint {
        self.vertices[0]
    }

    pub fn end(&self) -> LatticePoint {
        *self.vertices.last().expect("path has a start vertex")
    }

    /// True iff consecutive vertices are unit steps apart.
    pub fn is_unit_stepped(&self) -> bool {
        self.edges().all(|(a, b)| (a.x - b.x).abs() + (a.y - b.y).abs() == 1)
    }

    /// Coordinates as `[[x, y], ...]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.vertices.iter().map(|p| serde_json::json!([p.x, p.y])).collect())
    }
}

/// Traces a curve word from the origin heading east. `A` and `B` advance one
/// unit, `+` turns clockwise and `-` counterclockwise.
pub fn dragon_path(w: &Word<CurveSymbol>) -> CurvePath {
    let mut at = LatticePoint::ORIGIN;
    let mut heading = Heading::East;
    let mut vertices = vec![at];
    for &s in w.symbols() {
        match s {
            CurveSymbol::A | CurveSymbol::B => {
                at = at.step(heading);
                vertices.push(at);
            }
            CurveSymbol::Plus => heading = heading.right(),
            CurveSymbol::Minus => heading = heading.left(),
        }
    }
    CurvePath::new(vertices)
}

fn undirected(a: LatticePoint, b: LatticePoint) -> (LatticePoint, LatticePoint) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// True iff no undirected edge is traversed twice. Vertices may repeat.
pub fn check_self_avoiding(p: &CurvePath) -> bool {
    let mut seen = HashSet::with_capacity(p.edge_count());
    p.edges().all(|(a, b)| seen.insert(undirected(a, b)))
}

/// True iff every `A` step of `w` is horizontal and every `B` step vertical
/// in `p`.
pub fn ab_alternation_check(w: &Word<CurveSymbol>, p: &CurvePath) -> bool {
    let letters = w
        .symbols()
        .iter()
        .filter(|s| matches!(s, CurveSymbol::A | CurveSymbol::B));
    let mut steps = p.edges();
    for &letter in letters {
        let Some((a, b)) = steps.next() else {
            return false;
        };
        let horizontal = a.y == b.y;
        if horizontal != (letter == CurveSymbol::A) {
            return false;
        }
    }
    steps.next().is_none()
}
