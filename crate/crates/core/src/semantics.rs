//! Worlds of the frame: finite-support ℓ-sequences, the accessibility
//! relations `R_n` and `R_n^α`, upward cones and forcing.
//!
//! `R_n^α` is decided coordinatewise in closed form: for `α = 1 + α'`,
//! `x R_n^α y` iff `x_n ≥ y_n + (1 + e(y_{n+1}))·α`, `x_m > y_m` for all
//! `m < n`, and `x_m ≥ y_m` for all `m > n`. `R_n^0` is equality.
//!
//! Every formula `φ` has a coordinatewise-least point `x_φ` whose upward cone
//! is exactly the set of worlds forcing `φ`; [`minimal_point`] builds it by
//! structural recursion and [`forces`] is membership in that cone.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::Formula;
use crate::ordinal::{parse_ordinal, Ordinal, ZERO};
use crate::syntax::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("not an l-sequence: coordinate {index} exceeds the logarithm of coordinate {}", .index - 1)]
    InvalidLSequence { index: usize },
    #[error(transparent)]
    Syntax(#[from] ParseError),
}

/// A world `⟨x_0, …, x_k, 0, 0, …⟩`. Stored trimmed: the last stored
/// coordinate is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Ordinal>,
}

impl Point {
    /// The all-zero point.
    pub fn zero() -> Self {
        Point::default()
    }

    pub fn new(coords: Vec<Ordinal>) -> Result<Self, PointError> {
        for i in 1..coords.len() {
            if coords[i] > *coords[i - 1].log() {
                return Err(PointError::InvalidLSequence { index: i });
            }
        }
        Ok(Point::trimmed(coords))
    }

    fn trimmed(mut coords: Vec<Ordinal>) -> Self {
        while coords.last().is_some_and(Ordinal::is_zero) {
            coords.pop();
        }
        Point { coords }
    }

    /// Coordinate `i`; zero beyond the stored support.
    pub fn get(&self, i: usize) -> &Ordinal {
        self.coords.get(i).unwrap_or(&ZERO)
    }

    pub fn coords(&self) -> &[Ordinal] {
        &self.coords
    }

    /// Number of stored coordinates; every coordinate at or beyond it is 0.
    pub fn support(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return f.write_str("[0]");
        }
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Point {
    type Err = PointError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        cur.expect('[')?;
        let mut coords = Vec::new();
        if !cur.eat(']') {
            loop {
                coords.push(parse_ordinal(&mut cur)?);
                if cur.eat(']') {
                    break;
                }
                cur.expect(',')?;
            }
        }
        cur.finish()?;
        Point::new(coords)
    }
}

/// `x R_n y`: strictly bigger at every coordinate up to `n`, at least as big beyond.
pub fn r_n(x: &Point, y: &Point, n: usize) -> bool {
    let len = x.support().max(y.support()).max(n + 1);
    (0..len).all(|i| {
        if i <= n {
            x.get(i) > y.get(i)
        } else {
            x.get(i) >= y.get(i)
        }
    })
}

/// `x R_{-1} y`: at least as big at every coordinate except coordinate 0.
pub fn r_minus_one(x: &Point, y: &Point) -> bool {
    let len = x.support().max(y.support());
    (1..len).all(|i| x.get(i) >= y.get(i))
}

/// The gap `(1 + e(y_{n+1}))·α` that coordinate `n` must clear for `α` many `R_n` steps.
pub(crate) fn step_gap(y: &Point, n: usize, a: &Ordinal) -> Ordinal {
    let unit = &Ordinal::one() + &y.get(n + 1).e();
    &unit * a
}

/// `x R_n^α y`, decided by the closed-form coordinatewise characterization.
pub fn r_n_alpha(x: &Point, y: &Point, n: usize, a: &Ordinal) -> bool {
    if a.is_zero() {
        return x == y;
    }
    let len = x.support().max(y.support()).max(n + 1);
    let far_enough = *x.get(n) >= y.get(n) + &step_gap(y, n, a);
    far_enough
        && (0..len).all(|i| match i.cmp(&n) {
            std::cmp::Ordering::Less => x.get(i) > y.get(i),
            std::cmp::Ordering::Equal => true,
            std::cmp::Ordering::Greater => x.get(i) >= y.get(i),
        })
}

/// `x ∈ ⟦base⟧`: coordinatewise at least as big as `base`.
pub fn in_cone(x: &Point, base: &Point) -> bool {
    base.coords.iter().enumerate().all(|(i, b)| x.get(i) >= b)
}

/// The coordinatewise-least point forcing `f`.
pub fn minimal_point(f: &Formula) -> Point {
    match f {
        Formula::Top => Point::zero(),
        Formula::Conj(a, b) => {
            let y = minimal_point(a);
            let z = minimal_point(b);
            let len = y.support().max(z.support());
            if len == 0 {
                return Point::zero();
            }
            let mut coords: Vec<Ordinal> =
                (0..len).map(|i| y.get(i).max(z.get(i)).clone()).collect();
            // coords[len - 1] is the rightmost nonzero coordinate of the max
            for i in (0..len - 1).rev() {
                coords[i] = coords[i].ceil_with_log_at_least(&coords[i + 1]);
            }
            finish(coords)
        }
        Formula::Diamond {
            base: n,
            exponent,
            body,
        } => {
            let y = minimal_point(body);
            let n = *n;
            let len = y.support().max(n + 1);
            let mut coords: Vec<Ordinal> = (0..len).map(|i| y.get(i).clone()).collect();
            coords[n] = y.get(n) + &step_gap(&y, n, exponent);
            // below n the point must sit strictly above y
            for i in (0..n).rev() {
                coords[i] = y.get(i).successor().ceil_with_log_at_least(&coords[i + 1]);
            }
            finish(coords)
        }
    }
}

fn finish(coords: Vec<Ordinal>) -> Point {
    debug_assert!(Point::new(coords.clone()).is_ok(), "{coords:?}");
    Point::trimmed(coords)
}

/// `x ⊩ f`.
pub fn forces(x: &Point, f: &Formula) -> bool {
    in_cone(x, &minimal_point(f))
}
