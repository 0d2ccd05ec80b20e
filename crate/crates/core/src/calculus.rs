//! Monomial normal forms and the sequent decision procedure.
//!
//! A formula in monomial normal form is a base-increasing conjunction of
//! monomials `⟨n_0^{α_0}⟩⊤ ∧ … ∧ ⟨n_k^{α_k}⟩⊤` in which each exponent, apart
//! from the last, has the shape `e^{n_{i+1} − n_i}(α_{i+1})·(2 + δ)`. Normal
//! forms correspond one-to-one with finite-support worlds through their
//! projections, and `φ ⊢ ψ` holds exactly when the minimal world of `φ` lies
//! coordinatewise above the minimal world of `ψ`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::formula::{parse_formula, Formula};
use crate::ordinal::Ordinal;
use crate::par::{self, Execution};
use crate::semantics::{forces, in_cone, minimal_point, Point};
use crate::syntax::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MnfError {
    #[error("monomial at base {base} has exponent 0")]
    ZeroExponent { base: usize },
    #[error("bases must strictly increase ({previous} then {next})")]
    BasesNotIncreasing { previous: usize, next: usize },
    #[error("exponent {exponent} at base {base} is not a multiple e^{gap}({next})·(2+δ)")]
    SchmerlCondition {
        base: usize,
        exponent: Ordinal,
        gap: usize,
        next: Ordinal,
    },
    #[error("point {0} has no normal form")]
    NotRepresentable(Point),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub base: usize,
    pub exponent: Ordinal,
}

impl Monomial {
    pub fn new(base: usize, exponent: Ordinal) -> Self {
        Monomial { base, exponent }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}^{}>T", self.base, self.exponent.atom())
    }
}

/// A validated monomial normal form; the empty list is `⊤`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Mnf {
    monomials: Vec<Monomial>,
}

/// Whether `a = e^gap(next)·(2 + δ)` for some `δ`.
fn schmerl_multiple(a: &Ordinal, gap: usize, next: &Ordinal) -> bool {
    let unit = Ordinal::hyper_e(gap, next);
    if *a < &unit * &Ordinal::nat(2u32) {
        return false;
    }
    // gap ≥ 1 and next ≥ 1, so unit = ω^g with g = e^{gap-1}(next)
    let g = Ordinal::hyper_e(gap - 1, next);
    a.div_omega_pow(&g).is_some()
}

impl Mnf {
    pub fn top() -> Self {
        Mnf::default()
    }

    pub fn new(monomials: Vec<Monomial>) -> Result<Self, MnfError> {
        for m in &monomials {
            if m.exponent.is_zero() {
                return Err(MnfError::ZeroExponent { base: m.base });
            }
        }
        for pair in monomials.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            if lo.base >= hi.base {
                return Err(MnfError::BasesNotIncreasing {
                    previous: lo.base,
                    next: hi.base,
                });
            }
            let gap = hi.base - lo.base;
            if !schmerl_multiple(&lo.exponent, gap, &hi.exponent) {
                return Err(MnfError::SchmerlCondition {
                    base: lo.base,
                    exponent: lo.exponent.clone(),
                    gap,
                    next: hi.exponent.clone(),
                });
            }
        }
        Ok(Mnf { monomials })
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_top(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `π_m`: the explicit exponent at a base of the form, `e(π_{m+1})` in the
    /// gaps below the top base, and 0 above it.
    pub fn projection(&self, m: usize) -> Ordinal {
        match self.monomials.iter().find(|mono| mono.base >= m) {
            None => Ordinal::zero(),
            Some(next) => Ordinal::hyper_e(next.base - m, &next.exponent),
        }
    }

    /// The world `x_ψ = ⟨π_0(ψ), π_1(ψ), …⟩`.
    pub fn to_point(&self) -> Point {
        let Some(top) = self.monomials.last() else {
            return Point::zero();
        };
        let coords = (0..=top.base).map(|m| self.projection(m)).collect();
        Point::new(coords).expect("projections of a normal form form an l-sequence")
    }

    /// The unique normal form whose world is `x`.
    pub fn from_point(x: &Point) -> Result<Self, MnfError> {
        let len = x.support();
        let monomials = (0..len)
            .filter(|&n| n + 1 == len || *x.get(n) != x.get(n + 1).e())
            .map(|n| Monomial::new(n, x.get(n).clone()))
            .collect();
        let mnf = Mnf::new(monomials).map_err(|_| MnfError::NotRepresentable(x.clone()))?;
        if mnf.to_point() != *x {
            return Err(MnfError::NotRepresentable(x.clone()));
        }
        Ok(mnf)
    }

    /// The normal form as a formula (a left-nested conjunction of monomials).
    pub fn to_formula(&self) -> Formula {
        Formula::conj_all(
            self.monomials
                .iter()
                .map(|m| Formula::monomial(m.base, m.exponent.clone())),
        )
    }
}

impl fmt::Display for Mnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

impl fmt::Debug for Mnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The world of a normal form.
pub fn point_of_mnf(psi: &Mnf) -> Point {
    psi.to_point()
}

pub fn mnf_of_point(x: &Point) -> Result<Mnf, MnfError> {
    Mnf::from_point(x)
}

/// The unique normal form equivalent to `f`.
pub fn normalize(f: &Formula) -> Mnf {
    Mnf::from_point(&minimal_point(f)).expect("every finite-support world has a normal form")
}

/// Whether `f` is syntactically a normal form: `⊤`, or a conjunction of
/// monomials (any bracketing) with increasing bases and the exponent condition.
pub fn is_mnf(f: &Formula) -> bool {
    if *f == Formula::Top {
        return true;
    }
    let mut monomials = Vec::new();
    for part in f.conjuncts() {
        match part {
            Formula::Diamond {
                base,
                exponent,
                body,
            } if **body == Formula::Top => monomials.push(Monomial::new(*base, exponent.clone())),
            _ => return false,
        }
    }
    Mnf::new(monomials).is_ok()
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Sequent {
    pub fn new(lhs: Formula, rhs: Formula) -> Self {
        Sequent { lhs, rhs }
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

impl FromStr for Sequent {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        let lhs = parse_formula(&mut cur)?;
        if !cur.eat_str("|-") {
            return Err(cur.unexpected("'|-'"));
        }
        let rhs = parse_formula(&mut cur)?;
        cur.finish()?;
        Ok(Sequent { lhs, rhs })
    }
}

/// Outcome of deciding a sequent. A refuted sequent carries the minimal world
/// of its left-hand side, which forces the left side and not the right.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub derivable: bool,
    pub countermodel: Option<Point>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "derivable={}", self.derivable)?;
        if let Some(x) = &self.countermodel {
            write!(f, "; countermodel={x}")?;
        }
        Ok(())
    }
}

pub fn derives(s: &Sequent) -> Verdict {
    let x = minimal_point(&s.lhs);
    let derivable = in_cone(&x, &minimal_point(&s.rhs));
    debug_assert!(derivable || (forces(&x, &s.lhs) && !forces(&x, &s.rhs)));
    Verdict {
        derivable,
        countermodel: (!derivable).then_some(x),
    }
}

pub fn equiv(f: &Formula, g: &Formula) -> bool {
    minimal_point(f) == minimal_point(g)
}

/// Decides every sequent; results are in input order for either execution mode.
pub fn decide_batch(sequents: &[Sequent], exec: Execution) -> Vec<Verdict> {
    par::map(exec, sequents, derives)
}
