//! Small named arrangements and a random generator of smooth ones.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrangement::{is_simple, Arrangement, TorusData};
use crate::linalg::{rank, rat, IntMatrix, Rational};

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x, 1)).collect()
}

/// Hirzebruch surface: the trapezoid `(-1,-1), (2,-1), (0,1), (-1,1)` with a
/// triangular bounded chamber above it.
pub fn hirzebruch() -> Arrangement {
    Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1], vec![-1, -1], vec![0, -1]], ints(&[1, 1, 1, 1]))
        .expect("valid")
        .with_name("hirzebruch")
}

/// Three points `-1 < 0 < 1/2 < 1` on the line cut out by normals `-1, 1, 1`.
pub fn three_points() -> Arrangement {
    Arrangement::from_ints(1, &[vec![-1], vec![1], vec![1]], vec![rat(1, 1), rat(-1, 2), rat(0, 1)])
        .expect("valid")
        .with_name("three-points")
}

/// Two parallel lines and a transverse one: hyperplane 3 is a trivial factor.
pub fn parallel_pair() -> Arrangement {
    Arrangement::from_ints(2, &[vec![1, 0], vec![1, 0], vec![0, 1]], ints(&[0, -1, 0]))
        .expect("valid")
        .with_name("parallel-pair")
}

/// A trapezoid and a projective plane triangle glued along the edge `y = 0`.
pub fn glued_pair() -> Arrangement {
    Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1], vec![-1, -1], vec![0, -1]], ints(&[1, 1, 1, 0]))
        .expect("valid")
        .with_name("glued-pair")
}

/// Same normals as [`glued_pair`], with the fourth line moved to `y = 3`.
pub fn far_line() -> Arrangement {
    Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1], vec![-1, -1], vec![0, -1]], ints(&[1, 1, 1, 3]))
        .expect("valid")
        .with_name("far-line")
}

/// The projective plane triangle `(-1,-1), (2,-1), (-1,2)`.
pub fn projective_plane() -> Arrangement {
    Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1], vec![-1, -1]], ints(&[1, 1, 1]))
        .expect("valid")
        .with_name("projective-plane")
}

/// Quotient data of the diagonal circle in `T^3` at level 3.
pub fn diagonal_circle() -> TorusData {
    TorusData::from_kernel_basis(IntMatrix::from_rows(&[vec![1], vec![1], vec![1]]), ints(&[1, 1, 1]))
        .expect("valid")
}

pub const NAMES: &[&str] = &[
    "hirzebruch",
    "three-points",
    "parallel-pair",
    "glued-pair",
    "far-line",
    "projective-plane",
];

pub fn named(name: &str) -> Option<Arrangement> {
    Some(match name {
        "hirzebruch" => hirzebruch(),
        "three-points" => three_points(),
        "parallel-pair" => parallel_pair(),
        "glued-pair" => glued_pair(),
        "far-line" => far_line(),
        "projective-plane" => projective_plane(),
        _ => return None,
    })
}

/// Normals `e_i`, `e_i - e_j` and their negatives. Any matrix built from them
/// is totally unimodular, so every arrangement drawn from this pool is regular.
fn unimodular_pool(n: usize) -> Vec<Vec<i64>> {
    let mut pool = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut e = vec![0; n];
            e[i] = s;
            pool.push(e);
        }
        for j in 0..n {
            if i != j {
                let mut e = vec![0; n];
                e[i] = 1;
                e[j] = -1;
                pool.push(e);
            }
        }
    }
    pool
}

/// Draws a smooth arrangement of `d` hyperplanes in dimension `n`.
/// Lifts are rationals with numerator in `[-6, 6]` and denominator in `[1, 3]`.
/// Returns `None` if no simple arrangement is found after `attempts` draws.
pub fn random_smooth<R: Rng>(rng: &mut R, n: usize, d: usize, attempts: usize) -> Option<Arrangement> {
    assert!(n >= 1 && d >= n, "need 1 <= n <= d");
    let pool = unimodular_pool(n);
    for _ in 0..attempts {
        let normals: Vec<Vec<i64>> = (0..d).map(|_| pool.choose(rng).expect("nonempty").clone()).collect();
        let q = crate::linalg::RatMatrix::from_int_rows(&normals);
        if rank(&q) < n {
            continue;
        }
        let lifts = (0..d).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect();
        let arr = Arrangement::from_ints(n, &normals, lifts).expect("pool vectors are primitive");
        if is_simple(&arr) {
            return Some(arr.with_name("random"));
        }
    }
    None
}
