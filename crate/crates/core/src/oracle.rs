//! Brute-force semantics on finite fragments of the frame, independent of the
//! closed-form relation test in [`crate::semantics`].
//!
//! `R_n^α` is evaluated from its recursive definition: `R^0` is equality,
//! `R^{β+1} = R_n ∘ R^β`, and a limit stage is the intersection of the earlier
//! successor stages. Within a finite set of worlds the finite stages eventually
//! become empty, so limit stages cannot be read off a single fragment. The
//! oracle instead evaluates the recursion on a ladder of witness fragments of
//! growing depth (coefficients up to `d`, `2d`, `4d`): writing `ω·p + q` for an
//! exponent, `x R^{ω·p+q} y` holds iff some `R_n` chain of length `q` leads from
//! `x` into `T_p = {z : z R^{ω·p} y}`, and `z ∈ T_{p+1}` iff the longest chain
//! from `z` into `T_p` keeps growing when the witness fragment is enlarged.
//!
//! Coordinates are restricted to ordinals below `ω²` and exponents to ordinals
//! below `ω·3`.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::formula::Formula;
use crate::ordinal::Ordinal;
use crate::par::{self, Execution};
use crate::semantics::Point;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the coordinate universe must contain 0")]
    MissingZero,
    #[error("coordinate {0} is outside the supported range (below w^2)")]
    UnsupportedUniverse(Ordinal),
    #[error("exponent {0} is outside the supported range (below w*3)")]
    UnsupportedExponent(Ordinal),
    #[error("point {0} is not in the fragment")]
    NotInFragment(crate::semantics::Point),
}

/// A finite window onto the frame.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FragmentSpec {
    pub coordinate_universe: Vec<Ordinal>,
    pub max_support: usize,
    pub exponent_universe: Vec<Ordinal>,
}

impl FragmentSpec {
    pub fn new(
        coordinate_universe: Vec<Ordinal>,
        max_support: usize,
        exponent_universe: Vec<Ordinal>,
    ) -> Self {
        let mut coordinate_universe = coordinate_universe;
        coordinate_universe.sort();
        coordinate_universe.dedup();
        FragmentSpec {
            coordinate_universe,
            max_support,
            exponent_universe,
        }
    }
}

/// Every ℓ-sequence with coordinates in the universe and at most `max_support`
/// stored coordinates, sorted.
pub fn enumerate_points(spec: &FragmentSpec) -> Vec<Point> {
    ell_sequences(&spec.coordinate_universe, spec.max_support)
}

fn ell_sequences(values: &[Ordinal], max_support: usize) -> Vec<Point> {
    fn extend(
        values: &[Ordinal],
        max_support: usize,
        prefix: &mut Vec<Ordinal>,
        out: &mut Vec<Point>,
    ) {
        out.push(Point::new(prefix.clone()).expect("prefix is an l-sequence"));
        if prefix.len() == max_support {
            return;
        }
        let bound = prefix.last().map(|c| c.log().clone());
        for v in values {
            // a zero coordinate can only be followed by zeros
            if v.is_zero() || bound.as_ref().is_some_and(|b| v > b) {
                continue;
            }
            prefix.push(v.clone());
            extend(values, max_support, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(values, max_support, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Definition of a single step: strictly smaller up to `n`, no bigger beyond.
fn steps_to(x: &Point, y: &Point, n: usize) -> bool {
    let len = x.support().max(y.support()).max(n + 1);
    (0..len).all(|i| {
        if i <= n {
            x.get(i) > y.get(i)
        } else {
            x.get(i) >= y.get(i)
        }
    })
}

/// Split `α < ω·3` into `(p, q)` with `α = ω·p + q`.
fn stage_of(a: &Ordinal) -> Result<(usize, u64), OracleError> {
    let unsupported = || OracleError::UnsupportedExponent(a.clone());
    let mut p = 0usize;
    let mut q = 0u64;
    for t in a.terms() {
        let c = u64::try_from(t.coefficient().clone()).map_err(|_| unsupported())?;
        if t.exponent().is_zero() {
            q = c;
        } else if *t.exponent() == Ordinal::one() && c <= MAX_LIMIT_STAGE as u64 {
            p = c as usize;
        } else {
            return Err(unsupported());
        }
    }
    Ok((p, q))
}

const MAX_LIMIT_STAGE: usize = 2;
const LEVELS: usize = MAX_LIMIT_STAGE + 1;
const UNREACHABLE: i64 = -1;
const UNBOUNDED: i64 = i64::MAX;

struct Level {
    points: Vec<Point>,
    index: HashMap<Point, usize>,
    /// `lift[i]` is the index of `points[i]` in the next, deeper level.
    lift: Vec<usize>,
}

/// For one target `y` and base `n`: longest `R_n` chains from each fragment
/// point into `T_0`, `T_1`, `T_2` (with `UNBOUNDED` once growth is certified).
struct Stages {
    chains: [Vec<i64>; LEVELS],
}

pub struct Oracle {
    spec: FragmentSpec,
    points: Vec<Point>,
    index: HashMap<Point, usize>,
    /// `stages[n][y]`
    stages: Vec<Vec<Stages>>,
    depth: u64,
}

/// The pairs of fragment points related by some `R_n^α`, as indices into [`Oracle::points`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub pairs: BTreeSet<(usize, usize)>,
}

impl Oracle {
    pub fn new(spec: FragmentSpec) -> Result<Self, OracleError> {
        Oracle::build(spec, None, Execution::default())
    }

    /// Builds with an explicit witness depth (coefficient bound of the
    /// shallowest witness fragment) and execution mode.
    pub fn build(
        spec: FragmentSpec,
        depth: Option<u64>,
        exec: Execution,
    ) -> Result<Self, OracleError> {
        if !spec.coordinate_universe.iter().any(Ordinal::is_zero) {
            return Err(OracleError::MissingZero);
        }
        let omega_squared = Ordinal::omega_pow(Ordinal::nat(2u32));
        let mut max_coefficient = 0u64;
        for u in &spec.coordinate_universe {
            if *u >= omega_squared {
                return Err(OracleError::UnsupportedUniverse(u.clone()));
            }
            for t in u.terms() {
                let c = u64::try_from(t.coefficient().clone())
                    .map_err(|_| OracleError::UnsupportedUniverse(u.clone()))?;
                max_coefficient = max_coefficient.max(c);
            }
        }
        for a in &spec.exponent_universe {
            stage_of(a)?;
        }
        let depth = depth
            .unwrap_or(2 * max_coefficient + 8)
            .max(max_coefficient);
        let top = spec.coordinate_universe.last().cloned().unwrap_or_default();
        let omega_coefficient = top
            .terms()
            .iter()
            .find(|t| *t.exponent() == Ordinal::one())
            .map_or(0, |t| u64::try_from(t.coefficient().clone()).unwrap_or(0));

        let mut levels: Vec<Level> = (0..LEVELS)
            .map(|j| {
                let d = depth << j;
                let values: Vec<Ordinal> = (0..=omega_coefficient)
                    .flat_map(|a| {
                        (0..=d).map(move |b| Ordinal::monomial(Ordinal::one(), a) + Ordinal::nat(b))
                    })
                    .filter(|v| *v <= top)
                    .collect();
                let points = ell_sequences(&values, spec.max_support);
                let index = points
                    .iter()
                    .cloned()
                    .enumerate()
                    .map(|(i, p)| (p, i))
                    .collect();
                Level {
                    points,
                    index,
                    lift: Vec::new(),
                }
            })
            .collect();
        for j in 0..LEVELS - 1 {
            let lift = levels[j]
                .points
                .iter()
                .map(|p| levels[j + 1].index[p])
                .collect();
            levels[j].lift = lift;
        }

        let points = enumerate_points(&spec);
        let index: HashMap<Point, usize> = points
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let endpoints: Vec<usize> = points.iter().map(|p| levels[0].index[p]).collect();

        let stages = (0..spec.max_support)
            .map(|n| {
                let successors: Vec<Vec<Vec<usize>>> = levels
                    .iter()
                    .map(|lv| successor_lists(&lv.points, n))
                    .collect();
                par::map_range(exec, points.len(), |y| {
                    stages_for(
                        &levels,
                        &successors,
                        levels[0].index[&points[y]],
                        &endpoints,
                    )
                })
            })
            .collect();

        Ok(Oracle {
            spec,
            points,
            index,
            stages,
            depth,
        })
    }

    pub fn spec(&self) -> &FragmentSpec {
        &self.spec
    }

    /// The fragment's worlds, sorted.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn witness_depth(&self) -> u64 {
        self.depth
    }

    pub fn index_of(&self, x: &Point) -> Result<usize, OracleError> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| OracleError::NotInFragment(x.clone()))
    }

    fn related_idx(&self, x: usize, y: usize, n: usize, a: &Ordinal) -> Result<bool, OracleError> {
        let (p, q) = stage_of(a)?;
        if p == 0 && q == 0 {
            return Ok(x == y);
        }
        let Some(by_target) = self.stages.get(n) else {
            // coordinate n is 0 throughout the fragment
            return Ok(false);
        };
        let chains = &by_target[y].chains;
        Ok(if q > 0 {
            let len = chains[p][x];
            len != UNREACHABLE && len as u64 >= q
        } else {
            chains[p - 1][x] == UNBOUNDED
        })
    }

    /// Whether `x R_n^α y`, with both points in the fragment.
    pub fn related(
        &self,
        x: &Point,
        y: &Point,
        n: usize,
        a: &Ordinal,
    ) -> Result<bool, OracleError> {
        self.related_idx(self.index_of(x)?, self.index_of(y)?, n, a)
    }

    /// `R_n^α` restricted to the fragment.
    pub fn relation(&self, n: usize, a: &Ordinal) -> Result<Relation, OracleError> {
        let mut pairs = BTreeSet::new();
        for x in 0..self.points.len() {
            for y in 0..self.points.len() {
                if self.related_idx(x, y, n, a)? {
                    pairs.insert((x, y));
                }
            }
        }
        Ok(Relation { pairs })
    }

    /// For each fragment point, whether it forces `f`, with diamond witnesses
    /// searched inside the fragment.
    pub fn extension(&self, f: &Formula) -> Result<Vec<bool>, OracleError> {
        match f {
            Formula::Top => Ok(vec![true; self.points.len()]),
            Formula::Conj(a, b) => {
                let ea = self.extension(a)?;
                let eb = self.extension(b)?;
                Ok(ea.iter().zip(&eb).map(|(x, y)| *x && *y).collect())
            }
            Formula::Diamond {
                base,
                exponent,
                body,
            } => {
                let inner = self.extension(body)?;
                (0..self.points.len())
                    .map(|x| {
                        for (y, ok) in inner.iter().enumerate() {
                            if *ok && self.related_idx(x, y, *base, exponent)? {
                                return Ok(true);
                            }
                        }
                        Ok(false)
                    })
                    .collect()
            }
        }
    }

    pub fn forces(&self, x: &Point, f: &Formula) -> Result<bool, OracleError> {
        let i = self.index_of(x)?;
        Ok(self.extension(f)?[i])
    }

    /// A fragment point `y` with `x R_n^α y` and `y ⊩ φ`, for `f = ⟨n^α⟩φ`.
    pub fn witness(&self, x: &Point, f: &Formula) -> Result<Option<Point>, OracleError> {
        let Formula::Diamond {
            base,
            exponent,
            body,
        } = f
        else {
            return Ok(None);
        };
        let xi = self.index_of(x)?;
        let inner = self.extension(body)?;
        for (y, ok) in inner.iter().enumerate() {
            if *ok && self.related_idx(xi, y, *base, exponent)? {
                return Ok(Some(self.points[y].clone()));
            }
        }
        Ok(None)
    }

    /// `f ⊨ g` with the quantifier restricted to the fragment.
    pub fn entails(&self, f: &Formula, g: &Formula) -> Result<bool, OracleError> {
        let ef = self.extension(f)?;
        let eg = self.extension(g)?;
        Ok(ef.iter().zip(&eg).all(|(a, b)| !*a || *b))
    }

    /// Finite stages `R^1, R^2, …` computed by composition inside the fragment
    /// alone, up to and including the first repeated stage.
    pub fn successor_stages(&self, n: usize) -> Vec<BTreeSet<(usize, usize)>> {
        let len = self.points.len();
        let step: Vec<Vec<usize>> = (0..len)
            .map(|x| {
                (0..len)
                    .filter(|&z| steps_to(&self.points[x], &self.points[z], n))
                    .collect()
            })
            .collect();
        let first: BTreeSet<(usize, usize)> = step
            .iter()
            .enumerate()
            .flat_map(|(x, zs)| zs.iter().map(move |&z| (x, z)))
            .collect();
        let mut out = vec![first];
        loop {
            let prev = out.last().unwrap();
            let next: BTreeSet<(usize, usize)> = (0..len)
                .flat_map(|x| {
                    let step = &step;
                    (0..len)
                        .filter(move |&y| step[x].iter().any(|&z| prev.contains(&(z, y))))
                        .map(move |y| (x, y))
                })
                .collect();
            let done = next == *prev;
            out.push(next);
            if done {
                return out;
            }
        }
    }
}

/// `succ[i]` lists every `k` with `points[i] R_n points[k]`. Points are sorted,
/// and a step strictly lowers coordinate 0, so `k < i`.
fn successor_lists(points: &[Point], n: usize) -> Vec<Vec<usize>> {
    (0..points.len())
        .map(|i| {
            (0..i)
                .filter(|&k| steps_to(&points[i], &points[k], n))
                .collect()
        })
        .collect()
}

fn longest_chains(successors: &[Vec<usize>], targets: &[bool]) -> Vec<i64> {
    let mut out = vec![UNREACHABLE; targets.len()];
    for i in 0..targets.len() {
        let mut best = if targets[i] { 0 } else { UNREACHABLE };
        for &k in &successors[i] {
            if out[k] != UNREACHABLE {
                best = best.max(out[k] + 1);
            }
        }
        out[i] = best;
    }
    out
}

fn stages_for(
    levels: &[Level],
    successors: &[Vec<Vec<usize>>],
    y0: usize,
    endpoints: &[usize],
) -> Stages {
    // T_0 at every level is {y}
    let mut targets: Vec<Vec<bool>> = levels
        .iter()
        .enumerate()
        .map(|(j, lv)| {
            let mut y = y0;
            for below in &levels[..j] {
                y = below.lift[y];
            }
            let mut t = vec![false; lv.points.len()];
            t[y] = true;
            t
        })
        .collect();
    let mut chains: [Vec<i64>; LEVELS] = Default::default();
    for (p, stage) in chains.iter_mut().enumerate() {
        let depth = LEVELS - p;
        let lengths: Vec<Vec<i64>> = (0..depth)
            .map(|j| longest_chains(&successors[j], &targets[j]))
            .collect();
        let unbounded: Vec<Vec<bool>> = (0..depth - 1)
            .map(|j| {
                let lift = &levels[j].lift;
                (0..levels[j].points.len())
                    .map(|z| lengths[j + 1][lift[z]] > lengths[j][z])
                    .collect()
            })
            .collect();
        *stage = endpoints
            .iter()
            .map(|&x| match unbounded.first() {
                Some(u) if u[x] => UNBOUNDED,
                _ => lengths[0][x],
            })
            .collect();
        targets = unbounded;
    }
    Stages { chains }
}

/// The descending chain `x^0 = y, x^1, …, x^{β-1}` used to realise `β` many
/// `R_n` steps above `y`: beyond `n` the chain copies `y`, coordinate `n` climbs
/// in steps of `1 + e(y_{n+1})`, and each lower coordinate is the least value
/// above `y` whose logarithm reaches the coordinate after it.
pub fn chain_above(y: &Point, n: usize, beta: usize) -> Vec<Point> {
    let mut out = Vec::with_capacity(beta);
    if beta == 0 {
        return out;
    }
    out.push(y.clone());
    let unit = Ordinal::one() + y.get(n + 1).e();
    let len = y.support().max(n + 1);
    for gamma in 0..beta.saturating_sub(1) {
        let mut coords: Vec<Ordinal> = (0..len).map(|i| y.get(i).clone()).collect();
        coords[n] = y.get(n) + &unit * &Ordinal::nat(gamma as u64 + 1);
        for m in (0..n).rev() {
            coords[m] = y.get(m) + &coords[m + 1].e();
        }
        out.push(Point::new(coords).expect("chain points are l-sequences"));
    }
    out
}
