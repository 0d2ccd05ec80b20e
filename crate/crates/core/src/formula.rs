//! Strictly positive formulas: `⊤`, conjunction and ordinal diamonds `⟨n^α⟩φ`.
//!
//! Concrete syntax:
//!
//! ```text
//! formula := "T" | "(" formula ")" | "<" nat "^" ordinal ">" formula | formula "&" formula
//! ```
//!
//! `&` is left-associative and binds looser than the prefix modality.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::ordinal::{parse_ordinal, Ordinal};
use crate::syntax::{Cursor, ParseError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Top,
    Conj(Box<Formula>, Box<Formula>),
    Diamond {
        base: usize,
        exponent: Ordinal,
        body: Box<Formula>,
    },
}

impl Formula {
    pub fn top() -> Self {
        Formula::Top
    }

    pub fn conj(left: Formula, right: Formula) -> Self {
        Formula::Conj(Box::new(left), Box::new(right))
    }

    /// `⟨n^α⟩φ`; collapses to `φ` when `α = 0`.
    pub fn diamond(base: usize, exponent: Ordinal, body: Formula) -> Self {
        if exponent.is_zero() {
            body
        } else {
            Formula::Diamond {
                base,
                exponent,
                body: Box::new(body),
            }
        }
    }

    /// The monomial `⟨n^α⟩⊤`.
    pub fn monomial(base: usize, exponent: Ordinal) -> Self {
        Formula::diamond(base, exponent, Formula::Top)
    }

    /// Left-nested conjunction of the given formulas; `⊤` when empty.
    pub fn conj_all<I: IntoIterator<Item = Formula>>(parts: I) -> Self {
        let mut parts = parts.into_iter();
        let Some(first) = parts.next() else {
            return Formula::Top;
        };
        parts.fold(first, Formula::conj)
    }

    /// The set of modality bases occurring in the formula.
    pub fn n_mod(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        self.collect_bases(&mut out);
        out
    }

    fn collect_bases(&self, out: &mut BTreeSet<usize>) {
        match self {
            Formula::Top => {}
            Formula::Conj(a, b) => {
                a.collect_bases(out);
                b.collect_bases(out);
            }
            Formula::Diamond { base, body, .. } => {
                out.insert(*base);
                body.collect_bases(out);
            }
        }
    }

    /// The conjuncts of a (possibly nested) conjunction, left to right.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Formula::Conj(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                other => out.push(other),
            }
        }
        out
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Top => 0,
            Formula::Conj(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Diamond { body, .. } => 1 + body.depth(),
        }
    }

    /// Every subformula, including `self`, in pre-order.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = vec![self];
        match self {
            Formula::Top => {}
            Formula::Conj(a, b) => {
                out.extend(a.subformulas());
                out.extend(b.subformulas());
            }
            Formula::Diamond { body, .. } => out.extend(body.subformulas()),
        }
        out
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => f.write_str("T"),
            Formula::Conj(a, b) => {
                write!(f, "{a} & ")?;
                if matches!(**b, Formula::Conj(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Formula::Diamond {
                base,
                exponent,
                body,
            } => {
                write!(f, "<{base}^{}>", exponent.atom())?;
                if matches!(**body, Formula::Conj(..)) {
                    write!(f, "({body})")
                } else {
                    write!(f, "{body}")
                }
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let f = parse_formula(&mut cur)?;
        cur.finish()?;
        Ok(f)
    }
}

pub(crate) fn parse_formula(cur: &mut Cursor<'_>) -> Result<Formula, ParseError> {
    let mut acc = parse_unit(cur)?;
    while cur.eat('&') {
        let rhs = parse_unit(cur)?;
        acc = Formula::conj(acc, rhs);
    }
    Ok(acc)
}

fn parse_unit(cur: &mut Cursor<'_>) -> Result<Formula, ParseError> {
    if cur.eat('T') {
        Ok(Formula::Top)
    } else if cur.eat('(') {
        let inner = parse_formula(cur)?;
        cur.expect(')')?;
        Ok(inner)
    } else if cur.eat('<') {
        let base = cur.small_nat()?;
        cur.expect('^')?;
        let exponent = parse_ordinal(cur)?;
        cur.expect('>')?;
        let body = parse_unit(cur)?;
        Ok(Formula::diamond(base, exponent, body))
    } else {
        Err(cur.unexpected("a formula"))
    }
}
