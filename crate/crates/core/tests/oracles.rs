//! Independent brute-force oracles, used to confirm the hard-coded values in
//! the unit tests and to cross-check the elimination-based engine.

use hypertoric::arrangement::{chamber, reorient, torus_data, SignVector, TorusData};
use hypertoric::combinatorics::combinations;
use hypertoric::feasibility::{cone_member, enumerate_vertices, is_bounded, is_feasible};
use hypertoric::fixtures;
use hypertoric::linalg::{rank, rat, IntMatrix, RatMatrix, Rational};
use hypertoric::quotient::{chart_complement, core, verify_covering, Guard};
use hypertoric::stability::{chart_semistable, hk_semistable_numeric, SupportPattern, SupportStatus};
use hypertoric::{Arrangement, SmoothArrangement};
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Caratheodory: `target` is in the cone iff it is a nonnegative combination
/// of some linearly independent subset of the generators.
fn cone_oracle(gens: &[Vec<Rational>], target: &[Rational]) -> bool {
    let m = target.len();
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    for k in 1..=gens.len().min(m) {
        for subset in combinations(gens.len(), k) {
            // m x k system
            let rows: Vec<Vec<Rational>> = (0..m).map(|r| subset.iter().map(|&j| gens[j][r].clone()).collect()).collect();
            let mat = RatMatrix::from_rows(rows, k).unwrap();
            if rank(&mat) < k {
                continue;
            }
            if let Some(c) = mat.solve(target) {
                if c.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

fn hk_oracle(td: &TorusData, p: &SupportPattern) -> bool {
    let mut gens = Vec::new();
    for (i, s) in p.statuses().iter().enumerate() {
        let g = td.generator(i);
        if matches!(s, SupportStatus::Z | SupportStatus::Both) {
            gens.push(g.clone());
        }
        if matches!(s, SupportStatus::W | SupportStatus::Both) {
            gens.push(g.iter().map(|v| -v).collect());
        }
    }
    cone_oracle(&gens, td.alpha())
}

fn chart_oracle(td: &TorusData, eps: &SignVector, p: &SupportPattern) -> bool {
    let mut gens = Vec::new();
    for (i, s) in p.statuses().iter().enumerate() {
        let g = td.generator(i);
        match eps.sign(i) {
            hypertoric::Sign::Plus if matches!(s, SupportStatus::Z | SupportStatus::Both) => gens.push(g),
            hypertoric::Sign::Minus if matches!(s, SupportStatus::W | SupportStatus::Both) => {
                gens.push(g.iter().map(|v| -v).collect())
            }
            _ => {}
        }
    }
    cone_oracle(&gens, td.alpha())
}

/// Vertices of a planar or linear chamber: all intersections of `n`
/// hyperplanes that satisfy every inequality.
fn chamber_vertices_oracle(arr: &Arrangement, eps: &SignVector) -> Vec<Vec<Rational>> {
    let n = arr.dim();
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for subset in combinations(arr.len(), n) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| arr.rational_normal(i)).collect();
        let mat = RatMatrix::from_rows(rows, n).unwrap();
        if rank(&mat) < n {
            continue;
        }
        let rhs: Vec<Rational> = subset.iter().map(|&i| -arr.lifts()[i].clone()).collect();
        let x = mat.solve(&rhs).unwrap();
        let inside = (0..arr.len()).all(|i| {
            let v = arr.evaluate(i, &x) * rat(eps.sign(i).factor(), 1);
            !v.is_negative()
        });
        if inside && !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort();
    out
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

#[test]
fn trapezoid_example_in_both_bases() {
    let arr = fixtures::hirzebruch();
    let other = TorusData::with_basis(&arr, IntMatrix::from_rows(&[vec![1, 0], vec![1, 1], vec![1, 0], vec![0, 1]])).unwrap();
    let pinned = torus_data(&arr).unwrap();
    assert_eq!(other.alpha(), &ints(&[3, 2])[..]);
    assert_eq!(pinned.alpha(), &ints(&[1, 2])[..]);
    for td in [&other, &pinned] {
        let bottom = SupportPattern::toric(4, &[0, 2, 3]).unwrap();
        let empty = SupportPattern::toric(4, &[1, 3]).unwrap();
        assert!(hk_oracle(td, &bottom));
        assert!(!hk_oracle(td, &empty));
    }
    // (3,2) = a(1,1) + b(0,1) forces b = -1
    assert!(!cone_oracle(&[ints(&[1, 1]), ints(&[0, 1])], &ints(&[3, 2])));
    assert!(cone_oracle(&[ints(&[1, 0]), ints(&[1, 0]), ints(&[0, 1])], &ints(&[3, 2])));
}

#[test]
fn frozen_chamber_geometry() {
    let arr = fixtures::three_points();
    let expect: [(&str, Option<(Rational, Rational)>); 4] = [
        ("+++", Some((rat(1, 2), rat(1, 1)))),
        ("+-+", Some((rat(0, 1), rat(1, 2)))),
        ("+--", None),
        ("-++", None),
    ];
    for (s, bounds) in expect {
        let eps: SignVector = s.parse().unwrap();
        let vs = chamber_vertices_oracle(&arr, &eps);
        match bounds {
            Some((a, b)) => assert_eq!(vs, vec![vec![a], vec![b]]),
            None => assert_eq!(vs.len(), 1),
        }
    }
    let sa = SmoothArrangement::new(arr.clone()).unwrap();
    let cpt = core(&sa, Guard::Default).unwrap();
    assert_eq!(cpt.len(), 2);
    for c in &cpt {
        assert_eq!(c.vertices.clone().unwrap(), chamber_vertices_oracle(&arr, &c.eps));
    }

    let h = fixtures::hirzebruch();
    assert_eq!(
        chamber_vertices_oracle(&h, &SignVector::all_plus(4)),
        vec![ints(&[-1, -1]), ints(&[-1, 1]), ints(&[0, 1]), ints(&[2, -1])]
    );
    assert_eq!(
        chamber_vertices_oracle(&h, &"+++-".parse().unwrap()),
        vec![ints(&[-1, 1]), ints(&[-1, 2]), ints(&[0, 1])]
    );
    let g = fixtures::glued_pair();
    assert_eq!(
        chamber_vertices_oracle(&g, &SignVector::all_plus(4)),
        vec![ints(&[-1, -1]), ints(&[-1, 0]), ints(&[1, 0]), ints(&[2, -1])]
    );
    assert_eq!(
        chamber_vertices_oracle(&g, &"+++-".parse().unwrap()),
        vec![ints(&[-1, 0]), ints(&[-1, 2]), ints(&[1, 0])]
    );
}

#[test]
fn frozen_complement_of_middle_segment() {
    let arr = fixtures::three_points();
    let td = torus_data(&arr).unwrap();
    let eps = SignVector::all_plus(3);
    let mut oracle = Vec::new();
    for p in SupportPattern::enumerate(&SupportStatus::NO_BOTH, 3) {
        if hk_oracle(&td, &p) && !chart_oracle(&td, &eps, &p) {
            oracle.push(p.to_string());
        }
    }
    assert_eq!(oracle, ["zww", "zw0"]);
    let r = chart_complement(&SmoothArrangement::new(arr).unwrap(), &eps, Guard::Default).unwrap();
    let lib: Vec<String> = r.excluded_patterns.iter().map(|p| p.to_string()).collect();
    assert_eq!(lib, oracle);
}

#[test]
fn chart_coefficients() {
    // (1/2, 1) = 1 (1,1) + 1/2 (-(1,0))
    let c = cone_member(&[ints(&[1, 1]), ints(&[-1, 0])], false, &[rat(1, 2), rat(1, 1)]).unwrap();
    assert_eq!(c.point(), Some(&[rat(1, 1), rat(1, 2)][..]));
    assert!(!cone_oracle(&[ints(&[1, 1])], &[rat(1, 2), rat(1, 1)]));
}

#[test]
fn numeric_oracles_agree_with_caratheodory() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    while done < 25 {
        let n = 1 + done % 3;
        let Some(arr) = fixtures::random_smooth(&mut rng, n, n + 2, 100) else { continue };
        done += 1;
        let td = torus_data(&arr).unwrap();
        let d = arr.len();
        for p in SupportPattern::enumerate(&SupportStatus::ALL, d) {
            assert_eq!(hk_semistable_numeric(&td, &p).unwrap().semistable, hk_oracle(&td, &p), "{p}");
        }
        for eps in SignVector::enumerate(d) {
            for p in SupportPattern::enumerate(&SupportStatus::NO_BOTH, d) {
                assert_eq!(chart_semistable(&td, &eps, &p).unwrap(), chart_oracle(&td, &eps, &p));
            }
        }
    }
}

#[test]
fn chamber_classification_matches_vertex_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 30 {
        let n = 1 + done % 2;
        let Some(arr) = fixtures::random_smooth(&mut rng, n, n + 3, 100) else { continue };
        done += 1;
        for eps in SignVector::enumerate(arr.len()) {
            let ch = chamber(&arr, &eps).unwrap();
            let vs = chamber_vertices_oracle(&arr, &eps);
            // the normals span, so every nonempty chamber has a vertex
            assert_eq!(is_feasible(&ch).is_feasible(), !vs.is_empty());
            if !vs.is_empty() && is_bounded(&ch) {
                assert_eq!(enumerate_vertices(&ch).unwrap(), vs);
            }
        }
    }
}

#[test]
fn covering_is_reorientation_invariant_on_glued_pair() {
    let arr = fixtures::glued_pair();
    for eps in SignVector::enumerate(4) {
        let r = reorient(&arr, &eps).unwrap();
        let report = verify_covering(&SmoothArrangement::new(r).unwrap(), Guard::Default).unwrap();
        assert!(report.covered);
        assert_eq!(report.theta_cpt.len(), 2);
    }
}
