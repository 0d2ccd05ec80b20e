mod common;

use common::o;
use tsc_core::calculus::Sequent;
use tsc_core::oracle::{chain_above, enumerate_points, FragmentSpec, Oracle};
use tsc_core::semantics::{in_cone, minimal_point, r_minus_one, r_n, r_n_alpha, Point};
use tsc_core::{Formula, Ordinal};

/// Every world below `ω·3 + 3` with support at most 2, plus the minimal points
/// of some formulas with higher coordinates.
fn fragment() -> Vec<Point> {
    let universe = Ordinal::enumerate_up_to(&o("w*3 + 3"), 3);
    let mut points = enumerate_points(&FragmentSpec::new(universe, 2, Vec::new()));
    for f in [
        "<2^1>T",
        "<2^1>T & <1^2>T",
        "<0^1><2^1>T",
        "<1^w>T",
        "<2^2><0^1>T",
        "<1^1><1^1>T",
    ] {
        points.push(minimal_point(&f.parse().unwrap()));
    }
    points.sort();
    points.dedup();
    points
}

fn exponents() -> Vec<Ordinal> {
    ["1", "2", "3", "w", "w+1", "w*2", "w^2"]
        .iter()
        .map(|s| o(s))
        .collect()
}

#[test]
fn step_relations_are_transitive_acyclic_and_nested() {
    let pts = fragment();
    for n in 0..3 {
        for x in &pts {
            assert!(!r_n(x, x, n));
            for y in &pts {
                if r_n(x, y, n) {
                    assert!(x.get(0) > y.get(0));
                    for m in 0..n {
                        assert!(r_n(x, y, m), "R_{n} within R_{m} at {x}, {y}");
                    }
                    for z in &pts {
                        if r_n(y, z, n) {
                            assert!(r_n(x, z, n));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn iterated_relations_are_monotone_and_additive() {
    let pts = fragment();
    let exps = exponents();
    for n in 0..3 {
        for x in &pts {
            for y in &pts {
                for (i, a) in exps.iter().enumerate() {
                    if !r_n_alpha(x, y, n, a) {
                        continue;
                    }
                    assert!(*x.get(n) >= y.get(n) + a, "distance at {x}, {y}");
                    for b in &exps[..i] {
                        assert!(
                            r_n_alpha(x, y, n, b),
                            "exponent monotone at {x}, {y}, {a} > {b}"
                        );
                    }
                    for m in 0..n {
                        assert!(r_n_alpha(x, y, m, a), "base monotone at {x}, {y}");
                    }
                    for z in &pts {
                        for b in &exps {
                            if r_n_alpha(y, z, n, b) {
                                assert!(r_n_alpha(x, z, n, &(b + a)), "{x} {y} {z} {a} {b}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn lower_coordinates_get_substantially_bigger() {
    let pts = fragment();
    for m in 0..2 {
        for x in &pts {
            for y in &pts {
                if r_n(x, y, m + 1) {
                    assert!(*x.get(m) >= y.get(m) + &x.get(m + 1).e(), "{x} {y} {m}");
                }
            }
        }
    }
}

#[test]
fn single_step_distance_characterization() {
    let pts = fragment();
    let mut equal_coordinate_exceptions = 0;
    for n in 0..3 {
        for x in &pts {
            for y in &pts {
                let distance = *x.get(n) >= y.get(n) + &x.get(n + 1).e();
                if r_n(x, y, n) {
                    assert!(distance, "{x} R_{n} {y}");
                }
                let len = x.support().max(y.support()) + 1;
                let others = (0..len).all(|m| match m.cmp(&n) {
                    std::cmp::Ordering::Less => x.get(m) > y.get(m),
                    std::cmp::Ordering::Equal => true,
                    std::cmp::Ordering::Greater => x.get(m) >= y.get(m),
                });
                if distance && others && !r_n(x, y, n) {
                    // only possible when e(x_{n+1}) = 0 leaves x_n = y_n
                    assert!(
                        x.get(n + 1).is_zero() && x.get(n) == y.get(n),
                        "{x} {y} {n}"
                    );
                    equal_coordinate_exceptions += 1;
                }
            }
        }
    }
    assert!(equal_coordinate_exceptions > 0);
}

#[test]
fn lower_base_formulation_of_iterated_relations() {
    let pts = fragment();
    for n in 0..3 {
        for x in &pts {
            for y in &pts {
                for a in exponents() {
                    let rest = a.split_one_plus().unwrap();
                    let one_plus = Ordinal::one() + &rest;
                    let far = *x.get(n)
                        >= y.get(n) + &(&(Ordinal::one() + &y.get(n + 1).e()) * &one_plus);
                    let below = if n == 0 {
                        r_minus_one(x, y)
                    } else {
                        r_n_alpha(x, y, n - 1, &one_plus.e())
                    };
                    assert_eq!(r_n_alpha(x, y, n, &a), far && below, "{x} R_{n}^{a} {y}");
                }
            }
        }
    }
}

#[test]
fn successor_stage_is_one_more_step() {
    let pts = fragment();
    for n in 0..2 {
        for x in &pts {
            for y in &pts {
                for k in 0u64..4 {
                    let a = Ordinal::nat(k);
                    let holds = r_n_alpha(x, y, n, &a.successor());
                    let via_fragment = pts.iter().any(|z| r_n(x, z, n) && r_n_alpha(z, y, n, &a));
                    if via_fragment {
                        assert!(holds);
                    }
                    if holds {
                        let z = chain_above(y, n, k as usize + 1).pop().unwrap();
                        assert!(r_n(x, &z, n) && r_n_alpha(&z, y, n, &a), "{x} {y} {k}");
                    }
                }
            }
        }
    }
}

#[test]
fn omega_stage_is_the_intersection_of_finite_stages() {
    let pts = fragment();
    for n in 0..2 {
        for x in &pts {
            for y in &pts {
                let all_finite = (1u64..=40).all(|k| r_n_alpha(x, y, n, &Ordinal::nat(k)));
                assert_eq!(r_n_alpha(x, y, n, &o("w")), all_finite, "{x} {y}");
            }
        }
    }
}

#[test]
fn chains_exist_for_every_shorter_length() {
    let pts = fragment();
    for n in 0..2 {
        for x in &pts {
            for y in &pts {
                for k in 1usize..5 {
                    if !r_n_alpha(x, y, n, &Ordinal::nat(k as u64)) {
                        continue;
                    }
                    let chain = chain_above(y, n, k);
                    assert_eq!(chain[0], *y);
                    for (i, hi) in chain.iter().enumerate() {
                        assert!(r_n(x, hi, n));
                        assert!(chain[..i].iter().all(|lo| r_n(hi, lo, n)));
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_forcing_matches_minimal_point_cones() {
    let universe = Ordinal::enumerate_up_to(&o("w*4 + 4"), 4);
    let spec = FragmentSpec::new(universe, 2, Vec::new());
    let oracle = Oracle::new(spec).unwrap();
    let mut rng = common::rng(11);
    let pool = [o("1"), o("2"), o("3"), o("w"), o("w+1"), o("w*2")];
    let mut exponent =
        |r: &mut rand_chacha::ChaCha8Rng| pool[rand::Rng::gen_range(r, 0..pool.len())].clone();
    let mut checked = 0;
    while checked < 150 {
        let f: Formula = common::formula_with(&mut rng, 3, 1, &mut exponent);
        let inside = f
            .subformulas()
            .into_iter()
            .all(|g| oracle.index_of(&minimal_point(g)).is_ok());
        if !inside {
            continue;
        }
        checked += 1;
        let ext = oracle.extension(&f).unwrap();
        let base = minimal_point(&f);
        for (x, holds) in oracle.points().iter().zip(ext) {
            assert_eq!(holds, in_cone(x, &base), "{x} forces {f}");
        }
    }
}

#[test]
fn oracle_entailment_examples() {
    let universe = Ordinal::enumerate_up_to(&o("w*2 + 5"), 5);
    let oracle = Oracle::new(FragmentSpec::new(universe, 2, Vec::new())).unwrap();
    let f = |s: &str| s.parse::<Formula>().unwrap();
    assert!(oracle.entails(&f("<0^w>T & <0^5>T"), &f("<0^w>T")).unwrap());
    assert!(oracle.entails(&f("<0^w>T"), &f("<0^w>T & <0^5>T")).unwrap());
    let s: Sequent = "<0^w>T |- <1^1>T".parse().unwrap();
    assert!(!oracle.entails(&s.lhs, &s.rhs).unwrap());
}
