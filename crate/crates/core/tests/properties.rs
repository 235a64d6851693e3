use hypertoric::arrangement::{
    arrangement_from_quotient, is_saturated, reorient, solution_space, torus_data, Arrangement, SignVector,
};
use hypertoric::feasibility::{is_feasible, Constraint, Polyhedron, Relation};
use hypertoric::fixtures;
use hypertoric::io::{parse, serialize};
use hypertoric::linalg::{det, dot, hermite_normal_form, kernel_lattice, rank, rat, IntMatrix, Rational};
use hypertoric::quotient::{core, Guard};
use hypertoric::stability::{
    chart_semistable, hk_semistable_numeric, reorient_pattern, toric_semistable_numeric, SupportPattern,
    SupportStatus,
};
use hypertoric::SmoothArrangement;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn int_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..4, 1usize..5).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-5i64..=5, c), r).prop_map(|rows| IntMatrix::from_rows(&rows))
    })
}

fn arrangement(max_n: usize, max_extra: usize) -> impl Strategy<Value = Arrangement> {
    (any::<u64>(), 1..=max_n, 0..=max_extra).prop_filter_map("no simple draw", |(seed, n, extra)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        fixtures::random_smooth(&mut rng, n, n + extra, 50)
    })
}

fn relation() -> impl Strategy<Value = Relation> {
    prop_oneof![4 => Just(Relation::Ge), 1 => Just(Relation::Eq), 1 => Just(Relation::Gt)]
}

fn polyhedron() -> impl Strategy<Value = Polyhedron> {
    (1usize..=3).prop_flat_map(|n| {
        proptest::collection::vec((proptest::collection::vec(-3i64..=3, n), relation(), -4i64..=4), 0..7).prop_map(
            move |rows| {
                let cs = rows
                    .into_iter()
                    .map(|(a, r, b)| Constraint::new(a.iter().map(|&v| rat(v, 1)).collect(), r, rat(b, 1)))
                    .collect();
                Polyhedron::with_constraints(n, cs).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hnf_is_reduced_and_unimodular(m in int_matrix()) {
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        prop_assert!(det(&u.to_rational()).unwrap().abs().is_one());
        prop_assert_eq!(hermite_normal_form(&h).0, h.clone());
        let mut last: Option<usize> = None;
        for r in 0..h.rows() {
            let Some(p) = (0..h.cols()).find(|&c| !h.get(r, c).is_zero()) else {
                // zero rows only at the bottom
                prop_assert!((r..h.rows()).all(|k| h.row(k).iter().all(Zero::is_zero)));
                break;
            };
            prop_assert!(last.is_none_or(|l| p > l));
            prop_assert!(h.get(r, p).is_positive());
            for above in 0..r {
                prop_assert!(!h.get(above, p).is_negative() && h.get(above, p) < h.get(r, p));
            }
            last = Some(p);
        }
    }

    #[test]
    fn kernel_is_saturated_and_complete(m in int_matrix()) {
        let k = kernel_lattice(&m);
        prop_assert_eq!(k.rows(), m.cols());
        prop_assert_eq!(k.cols(), m.cols() - rank(&m.to_rational()));
        if k.cols() > 0 {
            prop_assert!(m.mul(&k).unwrap().is_zero());
            prop_assert!(is_saturated(&k));
        }
    }

    #[test]
    fn certificates_verify(p in polyhedron()) {
        let c = is_feasible(&p);
        prop_assert!(c.verify(&p));
        if let Some(x) = c.point() {
            prop_assert!(p.contains(x));
        }
    }

    #[test]
    fn file_round_trip(arr in arrangement(3, 4)) {
        let text = serialize(&arr).unwrap();
        prop_assert_eq!(parse(text.as_bytes()).unwrap(), arr);
    }

    #[test]
    fn pattern_strings_round_trip(s in "[zw0*]{0,10}") {
        let p: SupportPattern = s.parse().unwrap();
        prop_assert_eq!(p.to_string(), s);
    }

    #[test]
    fn solution_space_reproduces_coordinates(arr in arrangement(3, 3), ys in proptest::collection::vec(-9i64..=9, 3)) {
        let td = torus_data(&arr).unwrap();
        let space = solution_space(&td).unwrap();
        let y: Vec<Rational> = ys[..arr.dim()].iter().map(|&v| rat(v, 2)).collect();
        let x = arr.to_coordinates(&y);
        prop_assert_eq!(td.a().mul_vec(&x), td.alpha().to_vec());
        let forms = space.coordinate_forms();
        let shifted: Vec<Rational> = space.projection_coords.iter().map(|&c| &x[c] - &arr.lifts()[c]).collect();
        for i in 0..arr.len() {
            prop_assert_eq!(dot(forms.row(i), &shifted), &x[i] - &arr.lifts()[i]);
        }
    }

    #[test]
    fn quotient_round_trip_keeps_verdicts(arr in arrangement(3, 3)) {
        let td = torus_data(&arr).unwrap();
        let back = arrangement_from_quotient(&td).unwrap();
        let td2 = torus_data(&back).unwrap();
        for p in SupportPattern::enumerate(&SupportStatus::NO_BOTH, arr.len()) {
            prop_assert_eq!(
                hk_semistable_numeric(&td, &p).unwrap().semistable,
                hk_semistable_numeric(&td2, &p).unwrap().semistable
            );
        }
    }

    #[test]
    fn reorientation_covariance(arr in arrangement(2, 3), mask in any::<u32>()) {
        let d = arr.len();
        let eps = SignVector::new((0..d).map(|i| if mask >> i & 1 == 1 { hypertoric::Sign::Minus } else { hypertoric::Sign::Plus }).collect());
        let flipped = reorient(&arr, &eps).unwrap();
        let (td, tf) = (torus_data(&arr).unwrap(), torus_data(&flipped).unwrap());
        for p in SupportPattern::enumerate(&SupportStatus::ALL, d) {
            let q = reorient_pattern(&p, &eps).unwrap();
            prop_assert_eq!(
                hk_semistable_numeric(&td, &p).unwrap().semistable,
                hk_semistable_numeric(&tf, &q).unwrap().semistable
            );
            let chart = SignVector::all_plus(d);
            prop_assert_eq!(
                chart_semistable(&td, &chart, &p).unwrap(),
                chart_semistable(&tf, &chart.compose(&eps), &q).unwrap()
            );
        }
        let theta = |a: &Arrangement| -> Vec<SignVector> {
            let sa = SmoothArrangement::new(a.clone()).unwrap();
            let mut v: Vec<SignVector> = core(&sa, Guard::Default).unwrap().into_iter().map(|c| c.eps).collect();
            v.sort();
            v
        };
        let mut expected: Vec<SignVector> = theta(&arr).iter().map(|e| e.compose(&eps)).collect();
        expected.sort();
        prop_assert_eq!(theta(&flipped), expected);
    }

    #[test]
    fn stability_is_monotone(arr in arrangement(3, 3)) {
        let td = torus_data(&arr).unwrap();
        let d = arr.len();
        for p in SupportPattern::enumerate(&SupportStatus::ALL, d) {
            if !hk_semistable_numeric(&td, &p).unwrap().semistable {
                continue;
            }
            for i in 0..d {
                let mut s = p.statuses().to_vec();
                s[i] = SupportStatus::Both;
                prop_assert!(hk_semistable_numeric(&td, &SupportPattern::new(s)).unwrap().semistable);
            }
        }
        for mask in 0u32..1 << d {
            let support: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
            if toric_semistable_numeric(&td, &support).unwrap().semistable {
                for j in (0..d).filter(|j| !support.contains(j)) {
                    let mut bigger = support.clone();
                    bigger.push(j);
                    prop_assert!(toric_semistable_numeric(&td, &bigger).unwrap().semistable);
                }
            }
        }
    }
}

#[test]
fn diagonal_circle_projects_to_triangle() {
    let td = fixtures::diagonal_circle();
    let arr = arrangement_from_quotient(&td).unwrap();
    assert_eq!(arr.lifts(), &[Rational::one(), Rational::one(), Rational::one()][..]);
    assert_eq!(serialize(&arr).unwrap(), r#"{"dim":2,"normals":[[1,0],[0,1],[-1,-1]],"lifts":["1","1","1"]}"#);
}
