//! Oriented rational hyperplane arrangements and the torus data they encode.
//!
//! Hyperplane `i` is `{x : <u_i, x> + lambda_i = 0}` with a primitive integer
//! normal `u_i` choosing the positive side. The normals define `pi: Z^d -> Z^n`;
//! its saturated kernel is the lattice of the subtorus, whose basis (the
//! columns of `iota_basis`) transposed gives the `m x d` matrix `A` and the
//! moment value `alpha = A * lifts`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::combinations;
use crate::error::{Error, Result};
use crate::feasibility::{Constraint, Polyhedron};
use crate::linalg::{
    det, is_primitive, kernel_lattice, rank, rat_int, IntMatrix, Integer, RatMatrix, Rational,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn apply(self, r: &Rational) -> Rational {
        match self {
            Sign::Plus => r.clone(),
            Sign::Minus => -r,
        }
    }
}

/// A map `{1..d} -> {+1, -1}`, written as a string over `+`/`-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self(signs)
    }

    pub fn all_plus(d: usize) -> Self {
        Self(vec![Sign::Plus; d])
    }

    /// All `2^d` sign vectors, lexicographic with `+` before `-`.
    pub fn enumerate(d: usize) -> impl Iterator<Item = SignVector> {
        (0u64..1 << d).map(move |mask| {
            SignVector(
                (0..d)
                    .map(|i| {
                        if mask >> (d - 1 - i) & 1 == 1 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect(),
            )
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sign(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Componentwise product.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| if a == b { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    }

    fn check_len(&self, d: usize) -> Result<()> {
        if self.len() != d {
            return Err(Error::DimensionMismatch {
                what: "sign vector",
                expected: d,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(if *s == Sign::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(Error::InvalidSignVector(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<Integer>>,
    lifts: Vec<Rational>,
    name: Option<String>,
}

impl Arrangement {
    /// Validates primitivity of every normal, `d >= n` and that the normals
    /// span `Q^n`.
    pub fn new(dim: usize, normals: Vec<Vec<Integer>>, lifts: Vec<Rational>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Format("dimension must be positive".into()));
        }
        let d = normals.len();
        if d < dim {
            return Err(Error::TooFewHyperplanes { n: dim, d });
        }
        if lifts.len() != d {
            return Err(Error::DimensionMismatch {
                what: "lifts",
                expected: d,
                found: lifts.len(),
            });
        }
        for (i, u) in normals.iter().enumerate() {
            if u.len() != dim {
                return Err(Error::DimensionMismatch {
                    what: "normal",
                    expected: dim,
                    found: u.len(),
                });
            }
            if !is_primitive(u).unwrap_or(false) {
                return Err(Error::NotPrimitive { index: i });
            }
        }
        let arr = Self {
            dim,
            normals,
            lifts,
            name: None,
        };
        if rank(&arr.normal_matrix().to_rational()) < dim {
            return Err(Error::NormalsDoNotSpan);
        }
        Ok(arr)
    }

    pub fn from_ints(dim: usize, normals: &[Vec<i64>], lifts: Vec<Rational>) -> Result<Self> {
        let normals = normals
            .iter()
            .map(|u| u.iter().map(|&v| Integer::from(v)).collect())
            .collect();
        Self::new(dim, normals, lifts)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes `d`.
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn normals(&self) -> &[Vec<Integer>] {
        &self.normals
    }

    pub fn normal(&self, i: usize) -> &[Integer] {
        &self.normals[i]
    }

    pub fn lifts(&self) -> &[Rational] {
        &self.lifts
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The `n x d` matrix of `pi`, columns are the normals.
    pub fn normal_matrix(&self) -> IntMatrix {
        IntMatrix::from_big_rows(
            (0..self.dim)
                .map(|r| self.normals.iter().map(|u| u[r].clone()).collect())
                .collect(),
            self.len(),
        )
        .expect("normals share the ambient dimension")
    }

    pub fn rational_normal(&self, i: usize) -> Vec<Rational> {
        self.normals[i].iter().map(rat_int).collect()
    }

    /// `<u_i, y> + lambda_i`
    pub fn evaluate(&self, i: usize, y: &[Rational]) -> Rational {
        self.normals[i]
            .iter()
            .zip(y)
            .fold(self.lifts[i].clone(), |acc, (u, v)| acc + rat_int(u) * v)
    }

    /// The point of the solution space `lambda + ker A` that corresponds to
    /// `y`; its coordinates are the values of the affine forms.
    pub fn to_coordinates(&self, y: &[Rational]) -> Vec<Rational> {
        (0..self.len()).map(|i| self.evaluate(i, y)).collect()
    }

    /// `H_i^{>=0}`
    pub fn halfspace(&self, i: usize) -> Constraint {
        Constraint::ge(self.rational_normal(i), self.lifts[i].clone())
    }

    /// `H_i`
    pub fn hyperplane(&self, i: usize) -> Constraint {
        Constraint::eq(self.rational_normal(i), self.lifts[i].clone())
    }
}

/// Flips the normal and lift of every hyperplane with `eps(i) = -1`.
pub fn reorient(arr: &Arrangement, eps: &SignVector) -> Result<Arrangement> {
    eps.check_len(arr.len())?;
    let normals = arr
        .normals
        .iter()
        .zip(eps.signs())
        .map(|(u, s)| match s {
            Sign::Plus => u.clone(),
            Sign::Minus => u.iter().map(|v| -v).collect(),
        })
        .collect();
    let lifts = arr
        .lifts
        .iter()
        .zip(eps.signs())
        .map(|(l, s)| s.apply(l))
        .collect();
    Ok(Arrangement {
        dim: arr.dim,
        normals,
        lifts,
        name: arr.name.clone(),
    })
}

/// Every linearly independent `n`-subset of normals is a `Z`-basis.
/// Dependent subsets impose nothing.
pub fn is_regular(arr: &Arrangement) -> bool {
    let n = arr.dim;
    combinations(arr.len(), n).all(|subset| {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| arr.rational_normal(i)).collect();
        let m = RatMatrix::from_rows(rows, n).expect("square");
        let d = det(&m).expect("square");
        d.is_zero() || d.abs().is_one()
    })
}

/// Every set of `k` hyperplanes with a common point meets in codimension `k`;
/// in particular no `n + 1` of them share a point.
pub fn is_simple(arr: &Arrangement) -> bool {
    simplicity_violation(arr).is_none()
}

/// The first (lexicographically smallest) subset of hyperplanes witnessing
/// non-simplicity, if any.
pub fn simplicity_violation(arr: &Arrangement) -> Option<Vec<usize>> {
    let n = arr.dim;
    for k in 2..=(n + 1).min(arr.len()) {
        for subset in combinations(arr.len(), k) {
            let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| arr.rational_normal(i)).collect();
            let m = RatMatrix::from_rows(rows, n).expect("rows share dimension");
            let rhs: Vec<Rational> = subset.iter().map(|&i| -arr.lifts[i].clone()).collect();
            if m.solve(&rhs).is_some() && rank(&m) < k {
                return Some(subset);
            }
        }
    }
    None
}

pub fn is_smooth(arr: &Arrangement) -> bool {
    is_regular(arr) && is_simple(arr)
}

/// `Delta_eps = {x : eps(i) (<u_i, x> + lambda_i) >= 0 for all i}`
pub fn chamber(arr: &Arrangement, eps: &SignVector) -> Result<Polyhedron> {
    eps.check_len(arr.len())?;
    let constraints = (0..arr.len())
        .map(|i| {
            let s = eps.sign(i);
            Constraint::ge(
                arr.rational_normal(i).iter().map(|v| s.apply(v)).collect(),
                s.apply(&arr.lifts[i]),
            )
        })
        .collect();
    Polyhedron::with_constraints(arr.dim, constraints)
}

/// Indices `k` whose normal is not in the span of the other normals.
pub fn trivial_factors(arr: &Arrangement) -> Vec<usize> {
    let full = rank(&arr.normal_matrix().to_rational());
    (0..arr.len())
        .filter(|&k| {
            let others: Vec<Vec<Rational>> = (0..arr.len())
                .filter(|&i| i != k)
                .map(|i| arr.rational_normal(i))
                .collect();
            let r = if others.is_empty() {
                0
            } else {
                rank(&RatMatrix::from_rows(others, arr.dim).expect("rows share dimension"))
            };
            r < full
        })
        .collect()
}

/// gcd of the maximal minors of a full-column-rank integer matrix equals one.
pub fn is_saturated(basis: &IntMatrix) -> bool {
    let (d, m) = (basis.rows(), basis.cols());
    if m == 0 {
        return true;
    }
    let q = basis.to_rational();
    let mut g = Integer::zero();
    for rows in combinations(d, m) {
        let minor = det(&q.select_rows(&rows)).expect("square");
        g = g.gcd(minor.numer());
        if g.is_one() {
            return true;
        }
    }
    false
}

/// The subtorus data of an arrangement (or of a bare quotient): the kernel
/// basis, the matrix `A` whose column `i` is `iota^* e_i^*`, the moment value
/// `alpha` and the lift it was computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusData {
    iota_basis: IntMatrix,
    a: RatMatrix,
    alpha: Vec<Rational>,
    lifts: Vec<Rational>,
}

impl TorusData {
    /// Quotient data given directly by a saturated `d x m` kernel basis and a
    /// lift, with no arrangement in hand.
    pub fn from_kernel_basis(iota_basis: IntMatrix, lifts: Vec<Rational>) -> Result<Self> {
        let (d, m) = (iota_basis.rows(), iota_basis.cols());
        if lifts.len() != d {
            return Err(Error::DimensionMismatch {
                what: "lifts",
                expected: d,
                found: lifts.len(),
            });
        }
        if rank(&iota_basis.to_rational()) != m {
            return Err(Error::InvalidBasis("columns are linearly dependent".into()));
        }
        if !is_saturated(&iota_basis) {
            return Err(Error::InvalidBasis("lattice is not saturated".into()));
        }
        let a = iota_basis.transpose().to_rational();
        let alpha = a.mul_vec(&lifts);
        Ok(Self {
            iota_basis,
            a,
            alpha,
            lifts,
        })
    }

    /// Torus data of `arr` in a caller-chosen kernel basis.
    pub fn with_basis(arr: &Arrangement, iota_basis: IntMatrix) -> Result<Self> {
        let expected = arr.len() - arr.dim;
        if iota_basis.rows() != arr.len() || iota_basis.cols() != expected {
            return Err(Error::InvalidBasis(format!(
                "expected a {}x{} matrix, got {}x{}",
                arr.len(),
                expected,
                iota_basis.rows(),
                iota_basis.cols()
            )));
        }
        if !arr.normal_matrix().mul(&iota_basis)?.is_zero() {
            return Err(Error::InvalidBasis("columns are not in the kernel of the normals".into()));
        }
        Self::from_kernel_basis(iota_basis, arr.lifts.clone())
    }

    pub fn m(&self) -> usize {
        self.iota_basis.cols()
    }

    pub fn d(&self) -> usize {
        self.iota_basis.rows()
    }

    /// `n = d - m`
    pub fn n(&self) -> usize {
        self.d() - self.m()
    }

    pub fn iota_basis(&self) -> &IntMatrix {
        &self.iota_basis
    }

    pub fn a(&self) -> &RatMatrix {
        &self.a
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn lifts(&self) -> &[Rational] {
        &self.lifts
    }

    /// `iota^* e_i^*` in the dual basis.
    pub fn generator(&self, i: usize) -> Vec<Rational> {
        self.a.column(i)
    }
}

/// Torus data in the pinned kernel basis (see [`kernel_lattice`]).
pub fn torus_data(arr: &Arrangement) -> Result<TorusData> {
    let pi = arr.normal_matrix();
    if rank(&pi.to_rational()) < arr.dim {
        return Err(Error::NormalsDoNotSpan);
    }
    TorusData::with_basis(arr, kernel_lattice(&pi))
}

/// The affine `n`-plane `lambda + ker A` in `R^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Vec<Rational>,
    /// `d x n`, columns span `ker A`.
    pub homogeneous_basis: RatMatrix,
    /// The lexicographically first coordinates on which the plane projects
    /// bijectively.
    pub projection_coords: Vec<usize>,
}

impl SolutionSpace {
    /// Row `i` expresses `x_i - lambda_i` as a linear form in the projected
    /// coordinates `y_j = x_{c_j} - lambda_{c_j}`.
    pub fn coordinate_forms(&self) -> RatMatrix {
        let k_c = self.homogeneous_basis.select_rows(&self.projection_coords);
        let n = k_c.rows();
        // Solve K_C^T Z = K^T so that K K_C^{-1} = Z^T.
        let kt = self.homogeneous_basis.transpose();
        let mut cols = Vec::with_capacity(kt.cols());
        for i in 0..kt.cols() {
            let rhs = kt.column(i);
            cols.push(crate::linalg::solve_square(&k_c.transpose(), &rhs).expect("projection is injective"));
        }
        RatMatrix::from_rows(cols, n).expect("rows of length n")
    }

    pub fn contains(&self, a: &RatMatrix, alpha: &[Rational], x: &[Rational]) -> bool {
        a.mul_vec(x) == alpha
    }
}

pub fn solution_space(td: &TorusData) -> Result<SolutionSpace> {
    let a_int = td.iota_basis.transpose();
    let basis = kernel_lattice(&a_int).to_rational();
    let n = basis.cols();
    let mut coords = Vec::with_capacity(n);
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for i in 0..td.d() {
        if coords.len() == n {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(basis.row(i).to_vec());
        if rank(&RatMatrix::from_rows(trial.clone(), n).expect("rows of length n")) == trial.len() {
            chosen = trial;
            coords.push(i);
        }
    }
    if coords.len() < n {
        return Err(Error::DegenerateProjection);
    }
    Ok(SolutionSpace {
        particular: td.lifts.clone(),
        homogeneous_basis: basis,
        projection_coords: coords,
    })
}

/// Recovers an arrangement from quotient data by cutting the solution space
/// with the coordinate hyperplanes and projecting, with the lift as origin.
/// Normals that come out non-primitive are rescaled by a positive factor
/// (the lift is rescaled with them), which keeps each hyperplane and its side.
pub fn arrangement_from_quotient(td: &TorusData) -> Result<Arrangement> {
    if td.n() == 0 {
        return Err(Error::DegenerateProjection);
    }
    let space = solution_space(td)?;
    let forms = space.coordinate_forms();
    let n = forms.cols();
    let mut normals = Vec::with_capacity(td.d());
    let mut lifts = Vec::with_capacity(td.d());
    for i in 0..td.d() {
        let row = forms.row(i);
        let lcm = row.iter().fold(Integer::one(), |l, v| l.lcm(v.denom()));
        let ints: Vec<Integer> = row.iter().map(|v| (v * rat_int(&lcm)).to_integer()).collect();
        let g = ints.iter().fold(Integer::zero(), |g, v| g.gcd(v));
        if g.is_zero() {
            return Err(Error::DegenerateProjection);
        }
        let scale = Rational::new(lcm, g.clone());
        normals.push(ints.into_iter().map(|v| v / &g).collect());
        lifts.push(&td.lifts[i] * scale);
    }
    Arrangement::new(n, normals, lifts)
}

/// An arrangement certified regular and simple, together with its torus data.
#[derive(Clone, Debug)]
pub struct SmoothArrangement {
    arrangement: Arrangement,
    torus: TorusData,
}

impl SmoothArrangement {
    pub fn new(arrangement: Arrangement) -> Result<Self> {
        let (regular, simple) = (is_regular(&arrangement), is_simple(&arrangement));
        if !(regular && simple) {
            return Err(Error::NotSmooth { regular, simple });
        }
        let torus = torus_data(&arrangement)?;
        Ok(Self { arrangement, torus })
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    pub fn torus(&self) -> &TorusData {
        &self.torus
    }

    pub fn dim(&self) -> usize {
        self.arrangement.dim
    }

    pub fn len(&self) -> usize {
        self.arrangement.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrangement.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::{enumerate_vertices, is_bounded, is_feasible};
    use crate::fixtures;
    use crate::linalg::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn validation_errors() {
        let l = ints(&[0, 0]);
        assert_eq!(
            Arrangement::from_ints(2, &[vec![2, 0], vec![0, 1]], l.clone()),
            Err(Error::NotPrimitive { index: 0 })
        );
        assert_eq!(
            Arrangement::from_ints(2, &[vec![1, 0], vec![-1, 0]], l.clone()),
            Err(Error::NormalsDoNotSpan)
        );
        assert_eq!(
            Arrangement::from_ints(2, &[vec![1, 0]], ints(&[0])),
            Err(Error::TooFewHyperplanes { n: 2, d: 1 })
        );
        assert!(matches!(
            Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1]], ints(&[0])),
            Err(Error::DimensionMismatch { what: "lifts", .. })
        ));
        assert_eq!(
            Arrangement::from_ints(2, &[vec![0, 0], vec![0, 1]], l),
            Err(Error::NotPrimitive { index: 0 })
        );
    }

    #[test]
    fn sign_vectors() {
        let all: Vec<String> = SignVector::enumerate(2).map(|e| e.to_string()).collect();
        assert_eq!(all, ["++", "+-", "-+", "--"]);
        let e: SignVector = "+-".parse().unwrap();
        assert_eq!(e.compose(&"--".parse().unwrap()).to_string(), "-+");
        assert!("+x".parse::<SignVector>().is_err());
    }

    #[test]
    fn hirzebruch_torus_data() {
        let arr = fixtures::hirzebruch();
        assert!(is_regular(&arr) && is_simple(&arr));
        let td = torus_data(&arr).unwrap();
        assert_eq!(td.iota_basis().to_rows(), IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![1, 0], vec![-1, 1]]).to_rows());
        assert_eq!(td.alpha(), &ints(&[1, 2])[..]);
        let other = TorusData::with_basis(&arr, IntMatrix::from_rows(&[vec![1, 0], vec![1, 1], vec![1, 0], vec![0, 1]])).unwrap();
        assert_eq!(other.alpha(), &ints(&[3, 2])[..]);
    }

    #[test]
    fn three_points_torus_data() {
        let arr = fixtures::three_points();
        let td = torus_data(&arr).unwrap();
        assert_eq!(td.alpha(), &[rat(1, 1), rat(-1, 2)][..]);
        let other = TorusData::with_basis(&arr, IntMatrix::from_rows(&[vec![1, 1], vec![1, 0], vec![0, 1]])).unwrap();
        assert_eq!(other.alpha(), &[rat(1, 2), rat(1, 1)][..]);
    }

    #[test]
    fn bad_bases_rejected() {
        let arr = fixtures::three_points();
        let doubled = IntMatrix::from_rows(&[vec![2, 0], vec![2, 1], vec![0, 1]]);
        assert!(matches!(TorusData::with_basis(&arr, doubled), Err(Error::InvalidBasis(_))));
        let wrong = IntMatrix::from_rows(&[vec![1, 0], vec![0, 1], vec![0, 0]]);
        assert!(matches!(TorusData::with_basis(&arr, wrong), Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn saturation() {
        assert!(is_saturated(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 2], vec![0, 1]])));
        assert!(!is_saturated(&IntMatrix::from_rows(&[vec![2], vec![0], vec![4]])));
    }

    #[test]
    fn smoothness() {
        let concurrent = Arrangement::from_ints(2, &[vec![1, 0], vec![0, 1], vec![1, 1]], ints(&[0, 0, 0])).unwrap();
        assert!(is_regular(&concurrent));
        assert!(!is_simple(&concurrent));
        assert_eq!(simplicity_violation(&concurrent), Some(vec![0, 1, 2]));
        let irregular = Arrangement::from_ints(2, &[vec![1, 0], vec![1, 2], vec![0, 1]], ints(&[0, 1, 5])).unwrap();
        assert!(!is_regular(&irregular));
        // coincident hyperplanes share every point
        let doubled = Arrangement::from_ints(1, &[vec![1], vec![1]], ints(&[0, 0])).unwrap();
        assert!(!is_simple(&doubled));
        let parallel = Arrangement::from_ints(1, &[vec![1], vec![-1]], ints(&[0, 0])).unwrap();
        assert!(!is_simple(&parallel));
        assert!(is_smooth(&fixtures::parallel_pair()));
    }

    #[test]
    fn chambers() {
        let arr = fixtures::hirzebruch();
        let trap = chamber(&arr, &SignVector::all_plus(4)).unwrap();
        assert!(is_bounded(&trap));
        assert_eq!(
            enumerate_vertices(&trap).unwrap(),
            vec![ints(&[-1, -1]), ints(&[-1, 1]), ints(&[0, 1]), ints(&[2, -1])]
        );
        let tri = chamber(&arr, &"+++-".parse().unwrap()).unwrap();
        assert_eq!(
            enumerate_vertices(&tri).unwrap(),
            vec![ints(&[-1, 1]), ints(&[-1, 2]), ints(&[0, 1])]
        );
        let empty = chamber(&arr, &"+-+-".parse().unwrap()).unwrap();
        assert!(!is_feasible(&empty).is_feasible());
    }

    #[test]
    fn reorientation_flips_sides() {
        let arr = fixtures::hirzebruch();
        let eps: SignVector = "+-+-".parse().unwrap();
        let r = reorient(&arr, &eps).unwrap();
        assert_eq!(r.normal(1), &[int(0), int(-1)][..]);
        assert_eq!(r.lifts()[3], rat(-1, 1));
        assert_eq!(reorient(&r, &eps).unwrap(), arr);
        assert!(reorient(&arr, &"+".parse().unwrap()).is_err());
    }

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn trivial_factor_detection() {
        assert_eq!(trivial_factors(&fixtures::parallel_pair()), vec![2]);
        assert!(trivial_factors(&fixtures::hirzebruch()).is_empty());
    }

    #[test]
    fn reconstruct_projective_plane() {
        let td = fixtures::diagonal_circle();
        assert_eq!(td.alpha(), &ints(&[3])[..]);
        let space = solution_space(&td).unwrap();
        assert_eq!(space.projection_coords, vec![0, 1]);
        let arr = arrangement_from_quotient(&td).unwrap();
        assert_eq!(arr.normals(), fixtures::projective_plane().normals());
        assert_eq!(arr.lifts(), &ints(&[1, 1, 1])[..]);
    }

    #[test]
    fn evaluate_lands_in_solution_space() {
        let arr = fixtures::hirzebruch();
        let td = torus_data(&arr).unwrap();
        let x = arr.to_coordinates(&[rat(1, 3), rat(-5, 2)]);
        assert_eq!(td.a().mul_vec(&x), td.alpha());
    }
}
