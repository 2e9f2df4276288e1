//! Deterministic context-free L-systems over small closed alphabets, with the
//! dragon-curve system and the boundary systems built in.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::counting::{BigVector, IntMatrix};
use crate::error::{Error, Result};

/// Default largest iterate that may be materialized as a word.
pub const DEFAULT_WORD_CAP: usize = 26;

/// A closed, ordered set of symbols with single-character glyphs.
pub trait Alphabet: Copy + Eq + Ord + Hash + fmt::Debug + 'static {
    const NAME: &'static str;
    const SYMBOLS: &'static [Self];

    fn glyph(self) -> char;

    fn index(self) -> usize {
        Self::SYMBOLS
            .iter()
            .position(|&s| s == self)
            .expect("symbol listed in its alphabet")
    }

    fn from_glyph(c: char) -> Option<Self> {
        Self::SYMBOLS.iter().copied().find(|s| s.glyph() == c)
    }
}

/// The dragon-curve alphabet: two drawing letters and two turns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveSymbol {
    /// Unit move; always horizontal along the dragon word.
    A,
    /// Unit move; always vertical along the dragon word.
    B,
    /// Quarter turn clockwise.
    Plus,
    /// Quarter turn counterclockwise.
    Minus,
}

impl Alphabet for CurveSymbol {
    const NAME: &'static str = "curve";
    const SYMBOLS: &'static [Self] = &[Self::A, Self::B, Self::Plus, Self::Minus];

    fn glyph(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::Plus => '+',
            Self::Minus => '-',
        }
    }
}

/// Middle turn of a boundary element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Turn {
    Right,
    Left,
    Straight,
}

/// Boundary alphabet. Each symbol is one boundary element: two diagonal
/// half-steps joined by a middle turn, starting on a vertex of given parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundarySymbol {
    /// `R`
    RightEven,
    /// `r`
    RightOdd,
    /// `L`
    LeftEven,
    /// `l`
    LeftOdd,
    /// `S`
    StraightEven,
    /// `s`
    StraightOdd,
}

impl BoundarySymbol {
    pub fn new(turn: Turn, odd: bool) -> Self {
        match (turn, odd) {
            (Turn::Right, false) => Self::RightEven,
            (Turn::Right, true) => Self::RightOdd,
            (Turn::Left, false) => Self::LeftEven,
            (Turn::Left, true) => Self::LeftOdd,
            (Turn::Straight, false) => Self::StraightEven,
            (Turn::Straight, true) => Self::StraightOdd,
        }
    }

    pub fn turn(self) -> Turn {
        match self {
            Self::RightEven | Self::RightOdd => Turn::Right,
            Self::LeftEven | Self::LeftOdd => Turn::Left,
            Self::StraightEven | Self::StraightOdd => Turn::Straight,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Self::RightOdd | Self::LeftOdd | Self::StraightOdd)
    }
}

impl Alphabet for BoundarySymbol {
    const NAME: &'static str = "boundary";
    const SYMBOLS: &'static [Self] = &[
        Self::RightEven,
        Self::RightOdd,
        Self::LeftEven,
        Self::LeftOdd,
        Self::StraightEven,
        Self::StraightOdd,
    ];

    fn glyph(self) -> char {
        match self {
            Self::RightEven => 'R',
            Self::RightOdd => 'r',
            Self::LeftEven => 'L',
            Self::LeftOdd => 'l',
            Self::StraightEven => 'S',
            Self::StraightOdd => 's',
        }
    }
}

impl Serialize for BoundarySymbol {
    fn serialize<Ser: serde::Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        serializer.serialize_char(self.glyph())
    }
}

/// Count order used by the boundary transfer matrix: `R, r, L, l, S`.
/// `s` is left out because no production emits it.
pub const BOUNDARY_COUNT_ORDER: [BoundarySymbol; 5] = [
    BoundarySymbol::RightEven,
    BoundarySymbol::RightOdd,
    BoundarySymbol::LeftEven,
    BoundarySymbol::LeftOdd,
    BoundarySymbol::StraightEven,
];

/// A finite word over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word<S>(Vec<S>);

impl<S: Alphabet> Word<S> {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn symbols(&self) -> &[S] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word<S>) -> Word<S> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, symbol: S) -> usize {
        self.0.iter().filter(|&&s| s == symbol).count()
    }
}

impl<S> From<Vec<S>> for Word<S> {
    fn from(v: Vec<S>) -> Self {
        Self(v)
    }
}

impl<S: Alphabet> FromIterator<S> for Word<S> {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<S: Alphabet> FromStr for Word<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                S::from_glyph(c).ok_or(Error::AlphabetMismatch {
                    glyph: c,
                    alphabet: S::NAME,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl<S: Alphabet> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.glyph()))
    }
}

impl<S: Alphabet> Serialize for Word<S> {
    fn serialize<Ser: serde::Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        serializer.collect_str(self)
    }
}

/// A total map from an alphabet to words over the same alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductionMap<S> {
    images: Vec<Word<S>>,
}

impl<S: Alphabet> ProductionMap<S> {
    /// Builds the map from a rule for every symbol; totality is by construction.
    pub fn from_fn(rule: impl Fn(S) -> Word<S>) -> Self {
        Self {
            images: S::SYMBOLS.iter().map(|&s| rule(s)).collect(),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(|s| Word(vec![s]))
    }

    pub fn image(&self, s: S) -> &Word<S> {
        &self.images[s.index()]
    }

    pub fn apply_once(&self, w: &Word<S>) -> Word<S> {
        let len = w.0.iter().map(|&s| self.image(s).len()).sum();
        let mut out = Vec::with_capacity(len);
        for &s in &w.0 {
            out.extend_from_slice(&self.image(s).0);
        }
        Word(out)
    }
}

/// Rewrites every symbol of `w` by its production, in order.
pub fn apply_once<S: Alphabet>(productions: &ProductionMap<S>, w: &Word<S>) -> Word<S> {
    productions.apply_once(w)
}

/// Glyph-level variant of [`apply_once`] that reports foreign glyphs.
pub fn apply_once_str<S: Alphabet>(productions: &ProductionMap<S>, w: &str) -> Result<Word<S>> {
    Ok(productions.apply_once(&w.parse()?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LSystem<S> {
    axiom: Word<S>,
    productions: ProductionMap<S>,
}

impl<S: Alphabet> LSystem<S> {
    pub fn new(axiom: Word<S>, productions: ProductionMap<S>) -> Result<Self> {
        if axiom.is_empty() {
            return Err(Error::EmptyAxiom);
        }
        Ok(Self { axiom, productions })
    }

    pub fn axiom(&self) -> &Word<S> {
        &self.axiom
    }

    pub fn productions(&self) -> &ProductionMap<S> {
        &self.productions
    }

    /// The n-th iterate of the axiom. Memory grows geometrically with `n`;
    /// use [`LSystem::iterate_capped`] for untrusted input.
    pub fn iterate(&self, n: usize) -> Word<S> {
        (0..n).fold(self.axiom.clone(), |w, _| self.productions.apply_once(&w))
    }

    pub fn iterate_capped(&self, n: usize, cap: usize) -> Result<Word<S>> {
        if n > cap {
            return Err(Error::WordCapExceeded { n, cap });
        }
        Ok(self.iterate(n))
    }
}

pub fn iterate<S: Alphabet>(sys: &LSystem<S>, n: usize) -> Word<S> {
    sys.iterate(n)
}

/// The dragon system: axiom `A`, `A -> A+B`, `B -> A-B`, turns fixed.
pub fn dragon() -> LSystem<CurveSymbol> {
    use CurveSymbol::*;
    let productions = ProductionMap::from_fn(|s| match s {
        A => Word(vec![A, Plus, B]),
        B => Word(vec![A, Minus, B]),
        Plus => Word(vec![Plus]),
        Minus => Word(vec![Minus]),
    });
    LSystem::new(Word(vec![A]), productions).expect("nonempty axiom")
}

/// Boundary productions: `R->Rr, r->S, L->S, l->Ll, S->Rl, s->Lr`.
pub fn boundary_productions() -> ProductionMap<BoundarySymbol> {
    use BoundarySymbol::*;
    ProductionMap::from_fn(|s| {
        Word(match s {
            RightEven => vec![RightEven, RightOdd],
            RightOdd => vec![StraightEven],
            LeftEven => vec![StraightEven],
            LeftOdd => vec![LeftEven, LeftOdd],
            StraightEven => vec![RightEven, LeftOdd],
            StraightOdd => vec![LeftEven, RightOdd],
        })
    })
}

fn boundary_system(axiom: &str) -> LSystem<BoundarySymbol> {
    LSystem::new(axiom.parse().expect("valid glyphs"), boundary_productions()).expect("nonempty axiom")
}

/// Whole polyomino boundary, axiom `Rr`.
pub fn boundary_full() -> LSystem<BoundarySymbol> {
    boundary_system("Rr")
}

/// Left side, axiom `R`.
pub fn boundary_left() -> LSystem<BoundarySymbol> {
    boundary_system("R")
}

/// Right side with the classical axiom `L`.
pub fn boundary_right() -> LSystem<BoundarySymbol> {
    boundary_system("L")
}

/// Right side with axiom `r`, which is what the traced geometry yields at
/// n = 0. Agrees with [`boundary_right`] for every n >= 1.
pub fn boundary_right_traced() -> LSystem<BoundarySymbol> {
    boundary_system("r")
}

/// Per-symbol occurrence counts in a fixed symbol order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountVector<S> {
    #[serde(skip)]
    order: Vec<S>,
    counts: BigVector,
}

impl<S: Alphabet> CountVector<S> {
    pub fn order(&self) -> &[S] {
        &self.order
    }

    pub fn counts(&self) -> &BigVector {
        &self.counts
    }

    pub fn total(&self) -> BigInt {
        self.counts.sum()
    }
}

fn check_order<S: Alphabet>(order: &[S]) -> Result<()> {
    for (i, s) in order.iter().enumerate() {
        if order[..i].contains(s) {
            return Err(Error::DuplicateSymbol(s.glyph()));
        }
    }
    Ok(())
}

pub fn letter_counts<S: Alphabet>(w: &Word<S>, order: &[S]) -> Result<CountVector<S>> {
    check_order(order)?;
    let mut tally = vec![0u64; S::SYMBOLS.len()];
    for &s in w.symbols() {
        tally[s.index()] += 1;
    }
    let counts = BigVector::from(order.iter().map(|s| BigInt::from(tally[s.index()])).collect::<Vec<_>>());
    Ok(CountVector {
        order: order.to_vec(),
        counts,
    })
}

/// Matrix whose k-th column counts the letters of `P(order[k])`, so that
/// `v(P(w)) = M·v(w)` for words over `order`.
pub fn transition_matrix<S: Alphabet>(productions: &ProductionMap<S>, order: &[S]) -> Result<IntMatrix> {
    check_order(order)?;
    let columns = order
        .iter()
        .map(|&from| {
            let image = productions.image(from);
            if let Some(&emitted) = image.symbols().iter().find(|s| !order.contains(s)) {
                return Err(Error::NotClosed {
                    from: from.glyph(),
                    emitted: emitted.glyph(),
                });
            }
            Ok(letter_counts(image, order)?.counts)
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_columns(&columns)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<S: Alphabet>(s: &str) -> Word<S> {
        s.parse().unwrap()
    }

    #[test]
    fn dragon_productions() {
        let p = dragon().productions().clone();
        assert_eq!(apply_once(&p, &w("A")).to_string(), "A+B");
        assert_eq!(apply_once(&p, &w("+")).to_string(), "+");
        assert_eq!(dragon().iterate(2).to_string(), "A+B+A-B");
    }

    #[test]
    fn boundary_words() {
        assert_eq!(apply_once(&boundary_productions(), &w("Rr")).to_string(), "RrS");
        // P(Rl) = Rr·Ll; the neighbouring iterates confirm it.
        assert_eq!(boundary_right().iterate(3).to_string(), "RrLl");
        assert_eq!(boundary_left().iterate(4).to_string(), "RrSRlRrLl");
        let firsts: Vec<String> = (0..6).map(|n| boundary_right().iterate(n).to_string()).collect();
        assert_eq!(firsts, ["L", "S", "Rl", "RrLl", "RrSSLl", "RrSRlRlSLl"]);
    }

    #[test]
    fn foreign_glyph_is_rejected() {
        assert_eq!(
            apply_once_str(&dragon().productions().clone(), "AxB"),
            Err(Error::AlphabetMismatch {
                glyph: 'x',
                alphabet: "curve"
            })
        );
        assert!("R+".parse::<Word<BoundarySymbol>>().is_err());
    }

    #[test]
    fn empty_axiom_rejected() {
        assert_eq!(
            LSystem::new(Word::<CurveSymbol>::empty(), ProductionMap::identity()),
            Err(Error::EmptyAxiom)
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            dragon().iterate_capped(30, 26),
            Err(Error::WordCapExceeded { n: 30, cap: 26 })
        );
        assert!(dragon().iterate_capped(3, 26).is_ok());
    }

    #[test]
    fn letter_count_examples() {
        let v = letter_counts(&w("R"), &BOUNDARY_COUNT_ORDER).unwrap();
        assert_eq!(v.counts(), &BigVector::from_i64s(&[1, 0, 0, 0, 0]));
        let e = letter_counts(&Word::<BoundarySymbol>::empty(), &BOUNDARY_COUNT_ORDER).unwrap();
        assert!(e.counts().is_zero());
        let five = letter_counts(&boundary_right().iterate(5), &BOUNDARY_COUNT_ORDER).unwrap();
        assert_eq!(five.total(), BigInt::from(10));
    }

    #[test]
    fn duplicate_order_rejected() {
        use BoundarySymbol::*;
        assert_eq!(
            letter_counts(&w("R"), &[RightEven, RightEven]),
            Err(Error::DuplicateSymbol('R'))
        );
    }

    #[test]
    fn boundary_matrix_matches_table() {
        let m = transition_matrix(&boundary_productions(), &BOUNDARY_COUNT_ORDER).unwrap();
        let expected = IntMatrix::from_rows(&[
            [1, 0, 0, 0, 1],
            [1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 1, 1],
            [0, 1, 1, 0, 0],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn identity_productions_give_identity_matrix() {
        let m = transition_matrix(&ProductionMap::<CurveSymbol>::identity(), CurveSymbol::SYMBOLS).unwrap();
        assert_eq!(m, IntMatrix::identity(4));
    }

    #[test]
    fn closure_violation_reported() {
        use BoundarySymbol::*;
        let err = transition_matrix(&boundary_productions(), &[RightEven, LeftOdd]).unwrap_err();
        assert_eq!(
            err,
            Error::NotClosed {
                from: 'R',
                emitted: 'r'
            }
        );
    }
}
