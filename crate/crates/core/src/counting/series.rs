//! Rational generating functions and linear recurrences with integer
//! coefficients.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::Polynomial;
use crate::error::{Error, Result};

/// A quotient of integer polynomials, expanded as a power series about 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf {
    numerator: Polynomial,
    denominator: Polynomial,
}

impl RationalGf {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::PoleAtOrigin);
        }
        Ok(Self { numerator, denominator })
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    /// First `k + 1` Taylor coefficients by exact long division.
    pub fn expand(&self, k: usize) -> Result<Vec<BigInt>> {
        let d0 = self.denominator.coeff(0);
        let den = self.denominator.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let mut acc = self.numerator.coeff(n);
            for (i, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    acc -= d * &out[n - i];
                }
            }
            let (q, r) = acc.div_rem(&d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralCoefficient { index: n });
            }
            out.push(q);
        }
        Ok(out)
    }
}

impl fmt::Display for RationalGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Expands `g` to `k + 1` terms.
pub fn gf_expand(g: &RationalGf, k: usize) -> Result<Vec<BigInt>> {
    g.expand(k)
}

/// `a(n) = c_1 a(n-1) + ... + c_k a(n-k)` for `n >= start + k`, with the
/// first `k` or more terms stored explicitly from index `start`.
///
/// Extra initial terms beyond the order are allowed; the recurrence then only
/// takes over after the last stored term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRecurrence {
    coefficients: Vec<BigInt>,
    initial: Vec<BigInt>,
    start: u64,
}

impl LinearRecurrence {
    pub fn new(coefficients: Vec<BigInt>, initial: Vec<BigInt>, start: u64) -> Result<Self> {
        if initial.len() < coefficients.len() || initial.is_empty() {
            return Err(Error::TooFewInitialTerms {
                order: coefficients.len().max(1),
                given: initial.len(),
            });
        }
        Ok(Self {
            coefficients,
            initial,
            start,
        })
    }

    pub fn from_i64s(coefficients: &[i64], initial: &[i64], start: u64) -> Result<Self> {
        Self::new(
            coefficients.iter().map(|&c| BigInt::from(c)).collect(),
            initial.iter().map(|&c| BigInt::from(c)).collect(),
            start,
        )
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    /// First index computed by the recurrence rather than read from storage.
    pub fn threshold(&self) -> u64 {
        self.start + self.initial.len() as u64
    }

    /// Characteristic polynomial `x^k - c_1 x^(k-1) - ... - c_k`.
    pub fn characteristic(&self) -> Polynomial {
        let k = self.order();
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::from(1);
        for (i, c) in self.coefficients.iter().enumerate() {
            coeffs[k - 1 - i] = -c.clone();
        }
        Polynomial::new(coeffs)
    }

    /// The term at index `n`. O(n) time, O(k) space.
    pub fn eval(&self, n: u64) -> Result<BigInt> {
        if n < self.start {
            return Err(Error::BelowStart { n, start: self.start });
        }
        let offset = (n - self.start) as usize;
        if let Some(v) = self.initial.get(offset) {
            return Ok(v.clone());
        }
        let mut last = None;
        self.walk(offset + 1, |v| last = Some(v.clone()));
        Ok(last.expect("walk visits at least one term"))
    }

    /// Terms for indices `start..=n`.
    pub fn table(&self, n: u64) -> Result<Vec<BigInt>> {
        if n < self.start {
            return Err(Error::BelowStart { n, start: self.start });
        }
        let count = (n - self.start) as usize + 1;
        let mut out = Vec::with_capacity(count);
        self.walk(count, |v| out.push(v.clone()));
        Ok(out)
    }

    fn walk(&self, count: usize, mut visit: impl FnMut(&BigInt)) {
        let k = self.order();
        let mut window: VecDeque<BigInt> = VecDeque::with_capacity(k + 1);
        for (i, v) in self.initial.iter().enumerate() {
            if i == count {
                return;
            }
            visit(v);
            window.push_back(v.clone());
            if window.len() > k {
                window.pop_front();
            }
        }
        for _ in self.initial.len()..count {
            // window holds a(n-k) .. a(n-1); coefficient c_i pairs with a(n-i).
            let next: BigInt = self
                .coefficients
                .iter()
                .zip(window.iter().rev())
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, a)| c * a)
                .sum();
            visit(&next);
            window.push_back(next);
            if window.len() > k {
                window.pop_front();
            }
        }
    }

    /// True iff `terms` (indexed from `first`) satisfy the recurrence at every
    /// index `n` with `n >= from` and all of `a(n-k)..a(n)` present.
    pub fn holds_on(&self, terms: &[BigInt], first: u64, from: u64) -> bool {
        let k = self.order();
        terms.iter().enumerate().all(|(i, a)| {
            let n = first + i as u64;
            if n < from || i < k {
                return true;
            }
            let rhs: BigInt = self
                .coefficients
                .iter()
                .enumerate()
                .map(|(j, c)| c * &terms[i - 1 - j])
                .sum();
            *a == rhs
        })
    }
}

/// Evaluates `r` at `n`.
pub fn rec_eval(r: &LinearRecurrence, n: u64) -> Result<BigInt> {
    r.eval(n)
}
