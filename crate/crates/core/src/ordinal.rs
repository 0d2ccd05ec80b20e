//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` with strictly
//! decreasing exponents `e₁ > … > eₖ` (themselves ordinals in the same form)
//! and positive arbitrary-precision coefficients. The empty sum is 0. The
//! representation is canonical, so structural equality is ordinal equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::syntax::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrdinalError {
    #[error("0 cannot be written as 1 + a")]
    ZeroHasNoDecomposition,
    #[error("term exponents must be strictly decreasing")]
    NotDecreasing,
    #[error("term coefficients must be positive")]
    ZeroCoefficient,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// One summand `ω^exponent · coefficient` of a Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

pub(crate) static ZERO: Ordinal = Ordinal { terms: Vec::new() };

impl Term {
    pub fn exponent(&self) -> &Ordinal {
        &self.exponent
    }

    pub fn coefficient(&self) -> &BigUint {
        &self.coefficient
    }
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn one() -> Self {
        Ordinal::nat(1u32)
    }

    pub fn omega() -> Self {
        Ordinal::omega_pow(Ordinal::one())
    }

    pub fn nat(n: impl Into<BigUint>) -> Self {
        let n = n.into();
        if n.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent: Ordinal::zero(),
                coefficient: n,
            }],
        }
    }

    /// `ω^e`.
    pub fn omega_pow(exponent: Ordinal) -> Self {
        Ordinal::monomial(exponent, BigUint::one())
    }

    /// `ω^e · c`; returns 0 when `c = 0`.
    pub fn monomial(exponent: Ordinal, coefficient: impl Into<BigUint>) -> Self {
        let coefficient = coefficient.into();
        if coefficient.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term {
                exponent,
                coefficient,
            }],
        }
    }

    /// Builds an ordinal from an already-normal list of `(exponent, coefficient)` pairs.
    pub fn from_terms<I, C>(terms: I) -> Result<Self, OrdinalError>
    where
        I: IntoIterator<Item = (Ordinal, C)>,
        C: Into<BigUint>,
    {
        let mut out: Vec<Term> = Vec::new();
        for (exponent, coefficient) in terms {
            let coefficient = coefficient.into();
            if coefficient.is_zero() {
                return Err(OrdinalError::ZeroCoefficient);
            }
            if let Some(last) = out.last() {
                if last.exponent <= exponent {
                    return Err(OrdinalError::NotDecreasing);
                }
            }
            out.push(Term {
                exponent,
                coefficient,
            });
        }
        Ok(Ordinal { terms: out })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.terms.iter().all(|t| t.exponent.is_zero())
    }

    /// The value as a natural number, if finite.
    pub fn as_nat(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exponent.is_zero() => Some(t.coefficient.clone()),
            _ => None,
        }
    }

    pub fn as_u64(&self) -> Option<u64> {
        self.as_nat().and_then(|n| u64::try_from(n).ok())
    }

    /// Exponent of the leading term; 0 for 0.
    pub fn leading_exponent(&self) -> &Ordinal {
        self.terms.first().map_or(&ZERO, |t| &t.exponent)
    }

    /// The ordinal logarithm: the exponent of the last CNF term, with `ℓ(0) = 0`.
    pub fn log(&self) -> &Ordinal {
        self.terms.last().map_or(&ZERO, |t| &t.exponent)
    }

    pub fn is_successor(&self) -> bool {
        self.terms.last().is_some_and(|t| t.exponent.is_zero())
    }

    pub fn is_limit(&self) -> bool {
        self.terms.last().is_some_and(|t| !t.exponent.is_zero())
    }

    /// The finite part `n` of `λ + n`.
    pub fn finite_part(&self) -> BigUint {
        match self.terms.last() {
            Some(t) if t.exponent.is_zero() => t.coefficient.clone(),
            _ => BigUint::zero(),
        }
    }

    pub fn successor(&self) -> Ordinal {
        self + &Ordinal::one()
    }

    /// The `α'` with `1 + α' = self`.
    pub fn split_one_plus(&self) -> Result<Ordinal, OrdinalError> {
        if self.is_zero() {
            return Err(OrdinalError::ZeroHasNoDecomposition);
        }
        if self.is_finite() {
            // nonzero finite, so the single coefficient is at least 1
            let n = &self.terms[0].coefficient - 1u32;
            Ok(Ordinal::nat(n))
        } else {
            Ok(self.clone())
        }
    }

    /// The least `δ ≥ self` with `ℓ(δ) ≥ g`.
    pub fn ceil_with_log_at_least(&self, g: &Ordinal) -> Ordinal {
        if self.log() >= g {
            return self.clone();
        }
        let prefix = Ordinal {
            terms: self
                .terms
                .iter()
                .take_while(|t| &t.exponent >= g)
                .cloned()
                .collect(),
        };
        &prefix + &Ordinal::omega_pow(g.clone())
    }

    /// The unique `c` with `lhs + c = self`, if `lhs ≤ self`.
    pub fn checked_left_sub(&self, lhs: &Ordinal) -> Option<Ordinal> {
        if lhs > self {
            return None;
        }
        for (i, (a, b)) in self.terms.iter().zip(&lhs.terms).enumerate() {
            if a == b {
                continue;
            }
            // lhs < self, so at the first difference lhs's term is smaller
            let mut rest = Vec::with_capacity(self.terms.len() - i);
            if a.exponent == b.exponent {
                rest.push(Term {
                    exponent: a.exponent.clone(),
                    coefficient: &a.coefficient - &b.coefficient,
                });
            } else {
                rest.push(a.clone());
            }
            rest.extend(self.terms[i + 1..].iter().cloned());
            return Some(Ordinal { terms: rest });
        }
        Some(Ordinal {
            terms: self.terms[lhs.terms.len()..].to_vec(),
        })
    }

    /// The `ζ` with `ω^g · ζ = self`, if `self` is such a multiple.
    pub fn div_omega_pow(&self, g: &Ordinal) -> Option<Ordinal> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                exponent: t.exponent.checked_left_sub(g)?,
                coefficient: t.coefficient.clone(),
            });
        }
        Some(Ordinal { terms })
    }

    /// The hyper-exponential `e^n`: `e^0` is the identity, `e(α) = -1 + ω^α`.
    pub fn hyper_e(n: usize, a: &Ordinal) -> Ordinal {
        let mut out = a.clone();
        for _ in 0..n {
            if out.is_zero() {
                break;
            }
            out = Ordinal::omega_pow(out);
        }
        out
    }

    /// `e(α)`.
    pub fn e(&self) -> Ordinal {
        Ordinal::hyper_e(1, self)
    }

    /// Every ordinal `≤ bound` whose coefficients, at every nesting depth,
    /// are at most `max_coefficient`. Sorted ascending.
    pub fn enumerate_up_to(bound: &Ordinal, max_coefficient: u32) -> Vec<Ordinal> {
        if bound.is_finite() {
            let top = bound.as_nat().unwrap_or_default();
            let top = top.min(BigUint::from(max_coefficient));
            let top = u32::try_from(top).unwrap_or(max_coefficient);
            return (0..=top).map(Ordinal::nat).collect();
        }
        let exponents = Ordinal::enumerate_up_to(bound.leading_exponent(), max_coefficient);
        // sums over decreasing exponent subsets, built from the smallest exponent up
        let mut sums: Vec<Vec<Term>> = vec![Vec::new()];
        for exponent in &exponents {
            let mut next = sums.clone();
            for tail in &sums {
                for c in 1..=max_coefficient {
                    let mut terms = vec![Term {
                        exponent: exponent.clone(),
                        coefficient: BigUint::from(c),
                    }];
                    terms.extend(tail.iter().cloned());
                    next.push(terms);
                }
            }
            sums = next;
        }
        let mut out: Vec<Ordinal> = sums
            .into_iter()
            .map(|terms| Ordinal { terms })
            .filter(|o| o <= bound)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a
                .exponent
                .cmp(&b.exponent)
                .then_with(|| a.coefficient.cmp(&b.coefficient));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    fn add(self, rhs: &Ordinal) -> Ordinal {
        let Some(head) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .take_while(|t| t.exponent >= head.exponent)
            .cloned()
            .collect();
        match terms.last_mut() {
            Some(last) if last.exponent == head.exponent => {
                last.coefficient += &head.coefficient;
                terms.extend(rhs.terms[1..].iter().cloned());
            }
            _ => terms.extend(rhs.terms.iter().cloned()),
        }
        Ordinal { terms }
    }
}

impl Mul<&Ordinal> for &Ordinal {
    type Output = Ordinal;

    fn mul(self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = self.terms.first() else {
            return Ordinal::zero();
        };
        let mut out = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.exponent.is_zero() {
                // self · n multiplies the leading coefficient only
                let mut terms = self.terms.clone();
                terms[0].coefficient = &lead.coefficient * &t.coefficient;
                Ordinal { terms }
            } else {
                Ordinal::monomial(&lead.exponent + &t.exponent, t.coefficient.clone())
            };
            out = &out + &piece;
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Ordinal> for Ordinal {
            type Output = Ordinal;
            fn $m(self, rhs: Ordinal) -> Ordinal {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Ordinal> for Ordinal {
            type Output = Ordinal;
            fn $m(self, rhs: &Ordinal) -> Ordinal {
                (&self).$m(rhs)
            }
        }
        impl $tr<Ordinal> for &Ordinal {
            type Output = Ordinal;
            fn $m(self, rhs: Ordinal) -> Ordinal {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Mul, mul);

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}

impl From<u32> for Ordinal {
    fn from(n: u32) -> Self {
        Ordinal::nat(n)
    }
}

impl Ordinal {
    /// Prints in the restricted "atom" form: a natural, `w`, or a parenthesized ordinal.
    pub fn atom(&self) -> String {
        if self.is_finite() || *self == Ordinal::omega() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            f.write_str("w")?;
            if t.exponent != Ordinal::one() {
                write!(f, "^{}", t.exponent.atom())?;
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let o = parse_ordinal(&mut cur)?;
        cur.finish()?;
        Ok(o)
    }
}

pub(crate) fn parse_ordinal(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    if cur.at_digit() {
        let start = cur.position();
        let n = cur.nat()?;
        if n.is_zero() {
            if cur.peek() == Some('+') {
                return Err(ParseError::new(start, "0 is only allowed on its own"));
            }
            return Ok(Ordinal::zero());
        }
        return parse_sum_tail(cur, Ordinal::nat(n));
    }
    let first = parse_term(cur)?;
    parse_sum_tail(cur, first)
}

fn parse_sum_tail(cur: &mut Cursor<'_>, mut acc: Ordinal) -> Result<Ordinal, ParseError> {
    while cur.eat('+') {
        let t = parse_term(cur)?;
        acc = &acc + &t;
    }
    Ok(acc)
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    if cur.eat('w') {
        let exponent = if cur.eat('^') {
            parse_atom(cur)?
        } else {
            Ordinal::one()
        };
        let coefficient = if cur.eat('*') {
            positive_nat(cur)?
        } else {
            BigUint::one()
        };
        Ok(Ordinal::monomial(exponent, coefficient))
    } else if cur.eat('(') {
        let inner = parse_ordinal(cur)?;
        cur.expect(')')?;
        Ok(inner)
    } else if cur.at_digit() {
        Ok(Ordinal::nat(positive_nat(cur)?))
    } else {
        Err(cur.unexpected("an ordinal term"))
    }
}

fn parse_atom(cur: &mut Cursor<'_>) -> Result<Ordinal, ParseError> {
    if cur.eat('w') {
        Ok(Ordinal::omega())
    } else if cur.eat('(') {
        let inner = parse_ordinal(cur)?;
        cur.expect(')')?;
        Ok(inner)
    } else if cur.at_digit() {
        Ok(Ordinal::nat(cur.nat()?))
    } else {
        Err(cur.unexpected("an exponent"))
    }
}

fn positive_nat(cur: &mut Cursor<'_>) -> Result<BigUint, ParseError> {
    let start = cur.position();
    let n = cur.nat()?;
    if n.is_zero() {
        Err(ParseError::new(start, "coefficient must be at least 1"))
    } else {
        Ok(n)
    }
}
