//! Exact polyhedral feasibility.
//!
//! Systems are finite lists of constraints `<a, x> + b {>=, =, >} 0` over the
//! rationals. [`is_feasible`] runs Fourier-Motzkin elimination in ascending
//! variable order, tracking for every derived row the combination of input
//! rows that produced it, so an infeasible verdict always comes with a Farkas
//! multiplier vector and a feasible one with an explicit point.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, rank, solve_square, RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Ge,
    Eq,
    Gt,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub constant: Rational,
}

impl Constraint {
    pub fn new(coefficients: Vec<Rational>, relation: Relation, constant: Rational) -> Self {
        Self {
            coefficients,
            relation,
            constant,
        }
    }

    pub fn ge(coefficients: Vec<Rational>, constant: Rational) -> Self {
        Self::new(coefficients, Relation::Ge, constant)
    }

    pub fn eq(coefficients: Vec<Rational>, constant: Rational) -> Self {
        Self::new(coefficients, Relation::Eq, constant)
    }

    pub fn gt(coefficients: Vec<Rational>, constant: Rational) -> Self {
        Self::new(coefficients, Relation::Gt, constant)
    }

    /// `<a, x> + b <= 0`, stored as `<-a, x> - b >= 0`.
    pub fn le(coefficients: Vec<Rational>, constant: Rational) -> Self {
        Self::ge(coefficients.into_iter().map(|c| -c).collect(), -constant)
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        dot(&self.coefficients, x) + &self.constant
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let v = self.evaluate(x);
        match self.relation {
            Relation::Ge => !v.is_negative(),
            Relation::Eq => v.is_zero(),
            Relation::Gt => v.is_positive(),
        }
    }

    fn is_constant(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    ambient_dim: usize,
    constraints: Vec<Constraint>,
}

impl Polyhedron {
    /// The whole space.
    pub fn new(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            constraints: Vec::new(),
        }
    }

    pub fn with_constraints(ambient_dim: usize, constraints: Vec<Constraint>) -> Result<Self> {
        let mut p = Self::new(ambient_dim);
        for c in constraints {
            p.push(c)?;
        }
        Ok(p)
    }

    pub fn push(&mut self, c: Constraint) -> Result<()> {
        if c.coefficients.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                what: "constraint coefficients",
                expected: self.ambient_dim,
                found: c.coefficients.len(),
            });
        }
        self.constraints.push(c);
        Ok(())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.ambient_dim && self.constraints.iter().all(|c| c.is_satisfied(x))
    }

    pub fn intersect(&self, other: &Polyhedron) -> Result<Polyhedron> {
        if other.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                what: "polyhedron intersection",
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut out = self.clone();
        out.constraints.extend(other.constraints.iter().cloned());
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A point satisfying every constraint.
    Feasible { point: Vec<Rational> },
    /// One multiplier per constraint (nonnegative except on equalities) whose
    /// combination has zero coefficients and an unsatisfiable constant.
    Infeasible { multipliers: Vec<Rational> },
}

impl Certificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Certificate::Feasible { .. })
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            Certificate::Feasible { point } => Some(point),
            Certificate::Infeasible { .. } => None,
        }
    }

    /// Re-checks the certificate against `p` with exact arithmetic.
    pub fn verify(&self, p: &Polyhedron) -> bool {
        match self {
            Certificate::Feasible { point } => p.contains(point),
            Certificate::Infeasible { multipliers } => verify_farkas(p, multipliers),
        }
    }
}

fn verify_farkas(p: &Polyhedron, y: &[Rational]) -> bool {
    if y.len() != p.constraints.len() {
        return false;
    }
    let mut combined = vec![Rational::zero(); p.ambient_dim];
    let mut constant = Rational::zero();
    let mut strict = false;
    for (c, m) in p.constraints.iter().zip(y) {
        if c.relation != Relation::Eq && m.is_negative() {
            return false;
        }
        if c.relation == Relation::Gt && m.is_positive() {
            strict = true;
        }
        for (acc, a) in combined.iter_mut().zip(&c.coefficients) {
            *acc += m * a;
        }
        constant += m * &c.constant;
    }
    combined.iter().all(Zero::is_zero) && (constant.is_negative() || (constant.is_zero() && strict))
}

/// A constraint with the multipliers over the original system that produce it.
#[derive(Clone, Debug)]
struct Row {
    coeffs: Vec<Rational>,
    constant: Rational,
    relation: Relation,
    mult: Vec<Rational>,
}

impl Row {
    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn is_contradiction(&self) -> bool {
        self.is_constant()
            && match self.relation {
                Relation::Ge => self.constant.is_negative(),
                Relation::Gt => !self.constant.is_positive(),
                Relation::Eq => !self.constant.is_zero(),
            }
    }

    fn scale(&mut self, f: &Rational) {
        for v in self.coeffs.iter_mut().chain(self.mult.iter_mut()) {
            *v *= f;
        }
        self.constant *= f;
    }

    /// `self + f * other`
    fn add_scaled(&mut self, f: &Rational, other: &Row) {
        for (v, o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *v += f * o;
        }
        for (v, o) in self.mult.iter_mut().zip(&other.mult) {
            *v += f * o;
        }
        self.constant += f * &other.constant;
    }

    /// Scales so the first nonzero coefficient has absolute value one (exactly
    /// one for equalities, which may be negated).
    fn normalize(&mut self) {
        let Some(lead) = self.coeffs.iter().find(|v| !v.is_zero()).cloned() else {
            return;
        };
        let f = if self.relation == Relation::Eq {
            lead.recip()
        } else {
            lead.abs().recip()
        };
        if !f.is_one() {
            self.scale(&f);
        }
    }
}

fn initial_rows(p: &Polyhedron) -> Vec<Row> {
    let k = p.constraints.len();
    p.constraints
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let mut mult = vec![Rational::zero(); k];
            mult[i] = Rational::one();
            Row {
                coeffs: c.coefficients.clone(),
                constant: c.constant.clone(),
                relation: c.relation,
                mult,
            }
        })
        .collect()
}

/// Eliminates `var` from `rows`. Uses an equality containing `var` for exact
/// substitution when one exists, otherwise pairs lower and upper bounds.
/// Tautological constant rows are dropped; contradictory ones are kept.
fn eliminate_rows(rows: Vec<Row>, var: usize) -> Vec<Row> {
    let eq_pos = rows
        .iter()
        .position(|r| r.relation == Relation::Eq && !r.coeffs[var].is_zero());
    let derived: Vec<Row> = if let Some(e) = eq_pos {
        let pivot = rows[e].clone();
        let inv = pivot.coeffs[var].recip();
        rows.into_iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, mut r)| {
                if !r.coeffs[var].is_zero() {
                    let f = -(&r.coeffs[var] * &inv);
                    r.add_scaled(&f, &pivot);
                    r.coeffs[var] = Rational::zero();
                }
                r
            })
            .collect()
    } else {
        let mut keep = Vec::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for r in rows {
            if r.coeffs[var].is_positive() {
                lower.push(r);
            } else if r.coeffs[var].is_negative() {
                upper.push(r);
            } else {
                keep.push(r);
            }
        }
        for lo in &lower {
            for up in &upper {
                // c_up < 0 < c_lo: (-c_up) * lo + c_lo * up cancels var.
                let mut r = lo.clone();
                r.scale(&-up.coeffs[var].clone());
                r.add_scaled(&lo.coeffs[var], up);
                r.coeffs[var] = Rational::zero();
                r.relation = if lo.relation == Relation::Gt || up.relation == Relation::Gt {
                    Relation::Gt
                } else {
                    Relation::Ge
                };
                keep.push(r);
            }
        }
        keep
    };
    prune(derived)
}

/// Normalises rows, drops tautologies and removes pairwise-dominated
/// inequalities (same normalised coefficients, weaker constant).
fn prune(rows: Vec<Row>) -> Vec<Row> {
    let mut out: Vec<Row> = Vec::with_capacity(rows.len());
    let mut seen: HashMap<(Vec<Rational>, bool), usize> = HashMap::new();
    for mut r in rows {
        if r.is_constant() {
            if r.is_contradiction() {
                out.push(r);
            }
            continue;
        }
        r.normalize();
        let is_eq = r.relation == Relation::Eq;
        let key = (r.coeffs.clone(), is_eq);
        match seen.get(&key) {
            Some(&i) if is_eq => {
                if out[i].constant != r.constant {
                    out.push(r);
                }
            }
            Some(&i) => {
                if implies(&r, &out[i]) {
                    out[i] = r;
                }
            }
            None => {
                seen.insert(key, out.len());
                out.push(r);
            }
        }
    }
    out
}

/// For inequalities with identical coefficients: does `a` imply `b`?
fn implies(a: &Row, b: &Row) -> bool {
    match a.constant.cmp(&b.constant) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Equal => a.relation == Relation::Gt && b.relation != Relation::Gt,
        std::cmp::Ordering::Greater => false,
    }
}

fn farkas_from(row: &Row) -> Certificate {
    let mut multipliers = row.mult.clone();
    if row.relation == Relation::Eq && row.constant.is_positive() {
        for m in multipliers.iter_mut() {
            *m = -m.clone();
        }
    }
    Certificate::Infeasible { multipliers }
}

pub fn is_feasible(p: &Polyhedron) -> Certificate {
    let n = p.ambient_dim;
    let mut rows = initial_rows(p);
    if let Some(bad) = rows.iter().find(|r| r.is_contradiction()) {
        return farkas_from(bad);
    }
    let mut stages: Vec<Vec<Row>> = Vec::with_capacity(n);
    for var in 0..n {
        let next = eliminate_rows(rows.clone(), var);
        stages.push(rows);
        if let Some(bad) = next.iter().find(|r| r.is_contradiction()) {
            return farkas_from(bad);
        }
        rows = next;
    }
    let point = back_substitute(&stages, n);
    debug_assert!(p.contains(&point), "back substitution left the polyhedron");
    Certificate::Feasible { point }
}

fn back_substitute(stages: &[Vec<Row>], n: usize) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); n];
    for var in (0..n).rev() {
        let rows = &stages[var];
        let rest = |r: &Row, x: &[Rational]| -> Rational {
            let mut s = r.constant.clone();
            for j in var + 1..n {
                if !r.coeffs[j].is_zero() {
                    s += &r.coeffs[j] * &x[j];
                }
            }
            s
        };
        if let Some(e) = rows
            .iter()
            .find(|r| r.relation == Relation::Eq && !r.coeffs[var].is_zero())
        {
            x[var] = -rest(e, &x) / &e.coeffs[var];
            continue;
        }
        let mut lo: Option<(Rational, bool)> = None;
        let mut hi: Option<(Rational, bool)> = None;
        for r in rows {
            let c = &r.coeffs[var];
            if c.is_zero() {
                continue;
            }
            let bound = -rest(r, &x) / c;
            let strict = r.relation == Relation::Gt;
            if c.is_positive() {
                if lo.as_ref().is_none_or(|(b, s)| bound > *b || (bound == *b && strict && !s)) {
                    lo = Some((bound, strict));
                }
            } else if hi.as_ref().is_none_or(|(b, s)| bound < *b || (bound == *b && strict && !s)) {
                hi = Some((bound, strict));
            }
        }
        x[var] = match (lo, hi) {
            (Some((l, _)), Some((h, _))) if l == h => l,
            (Some((l, _)), Some((h, _))) => (l + h) / Rational::from_integer(2.into()),
            (Some((l, true)), None) => l + Rational::one(),
            (Some((l, false)), None) => l,
            (None, Some((h, true))) => h - Rational::one(),
            (None, Some((h, false))) => h,
            (None, None) => Rational::zero(),
        };
    }
    x
}

/// Projects `p` onto the coordinates other than `var`. A point extends to a
/// point of `p` iff it satisfies the result.
pub fn eliminate(p: &Polyhedron, var: usize) -> Result<Polyhedron> {
    if var >= p.ambient_dim {
        return Err(Error::DimensionMismatch {
            what: "elimination variable",
            expected: p.ambient_dim,
            found: var,
        });
    }
    let rows = eliminate_rows(initial_rows(p), var);
    let constraints = rows
        .into_iter()
        .map(|mut r| {
            r.coeffs.remove(var);
            Constraint::new(r.coeffs, r.relation, r.constant)
        })
        .collect();
    Polyhedron::with_constraints(p.ambient_dim - 1, constraints)
}

/// Dimension of the affine hull, or -1 for the empty set.
pub fn affine_dimension(p: &Polyhedron) -> i64 {
    if !is_feasible(p).is_feasible() {
        return -1;
    }
    let mut equalities: Vec<Vec<Rational>> = Vec::new();
    for (i, c) in p.constraints.iter().enumerate() {
        let implicit = match c.relation {
            Relation::Eq => true,
            Relation::Gt => false,
            Relation::Ge => {
                let mut strict = p.clone();
                strict.constraints[i].relation = Relation::Gt;
                !is_feasible(&strict).is_feasible()
            }
        };
        if implicit && !c.is_constant() {
            equalities.push(c.coefficients.clone());
        }
    }
    let r = if equalities.is_empty() {
        0
    } else {
        rank(&RatMatrix::from_rows(equalities, p.ambient_dim).expect("rows share dimension"))
    };
    (p.ambient_dim - r) as i64
}

/// The recession cone `{v : <a, v> >= 0 (= 0 for equalities)}`.
pub fn recession_cone(p: &Polyhedron) -> Polyhedron {
    let constraints = p
        .constraints
        .iter()
        .map(|c| {
            let relation = if c.relation == Relation::Eq {
                Relation::Eq
            } else {
                Relation::Ge
            };
            Constraint::new(c.coefficients.clone(), relation, Rational::zero())
        })
        .collect();
    Polyhedron {
        ambient_dim: p.ambient_dim,
        constraints,
    }
}

/// Empty sets count as bounded.
pub fn is_bounded(p: &Polyhedron) -> bool {
    if !is_feasible(p).is_feasible() {
        return true;
    }
    let cone = recession_cone(p);
    let n = p.ambient_dim;
    for j in 0..n {
        for sign in [1i64, -1] {
            let mut probe = cone.clone();
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::from_integer(sign.into());
            probe
                .constraints
                .push(Constraint::ge(e, -Rational::one()));
            if is_feasible(&probe).is_feasible() {
                return false;
            }
        }
    }
    true
}

/// The system `sum_i c_i g_i = target`, `c_i >= 0` (or `> 0` when `strict`)
/// in the coefficient variables `c`.
pub fn cone_system(generators: &[Vec<Rational>], strict: bool, target: &[Rational]) -> Result<Polyhedron> {
    let k = generators.len();
    let m = target.len();
    if let Some(g) = generators.iter().find(|g| g.len() != m) {
        return Err(Error::DimensionMismatch {
            what: "cone generator",
            expected: m,
            found: g.len(),
        });
    }
    let mut p = Polyhedron::new(k);
    for row in 0..m {
        let coeffs = generators.iter().map(|g| g[row].clone()).collect();
        p.constraints.push(Constraint::eq(coeffs, -target[row].clone()));
    }
    for i in 0..k {
        let mut e = vec![Rational::zero(); k];
        e[i] = Rational::one();
        let relation = if strict { Relation::Gt } else { Relation::Ge };
        p.constraints.push(Constraint::new(e, relation, Rational::zero()));
    }
    Ok(p)
}

/// Is `target` a nonnegative (positive, if `strict`) combination of the
/// generators? The feasible witness is the coefficient vector.
pub fn cone_member(generators: &[Vec<Rational>], strict: bool, target: &[Rational]) -> Result<Certificate> {
    Ok(is_feasible(&cone_system(generators, strict, target)?))
}

pub const VERTEX_ORACLE_MAX_DIM: usize = 4;
pub const VERTEX_ORACLE_MAX_CONSTRAINTS: usize = 16;

/// Brute-force basic feasible points, sorted and deduplicated. Exponential,
/// so restricted to small systems.
pub fn enumerate_vertices(p: &Polyhedron) -> Result<Vec<Vec<Rational>>> {
    if p.ambient_dim > VERTEX_ORACLE_MAX_DIM {
        return Err(Error::GuardExceeded {
            what: "vertex enumeration dimension",
            count: p.ambient_dim,
            limit: VERTEX_ORACLE_MAX_DIM,
        });
    }
    if p.constraints.len() > VERTEX_ORACLE_MAX_CONSTRAINTS {
        return Err(Error::GuardExceeded {
            what: "vertex enumeration constraints",
            count: p.constraints.len(),
            limit: VERTEX_ORACLE_MAX_CONSTRAINTS,
        });
    }
    Ok(vertices_unguarded(p))
}

pub(crate) fn vertices_unguarded(p: &Polyhedron) -> Vec<Vec<Rational>> {
    let n = p.ambient_dim;
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for subset in crate::combinatorics::combinations(p.constraints.len(), n) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| p.constraints[i].coefficients.clone()).collect();
        let rhs: Vec<Rational> = subset.iter().map(|&i| -p.constraints[i].constant.clone()).collect();
        let m = RatMatrix::from_rows(rows, n).expect("rows share dimension");
        if let Some(x) = solve_square(&m, &rhs) {
            if p.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn r(v: i64) -> Rational {
        rat(v, 1)
    }

    fn rv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| r(x)).collect()
    }

    fn hirzebruch() -> Polyhedron {
        // <u_i, x> + 1 >= 0 for u = (1,0), (0,1), (-1,-1), (0,-1)
        Polyhedron::with_constraints(
            2,
            vec![
                Constraint::ge(rv(&[1, 0]), r(1)),
                Constraint::ge(rv(&[0, 1]), r(1)),
                Constraint::ge(rv(&[-1, -1]), r(1)),
                Constraint::ge(rv(&[0, -1]), r(1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn unit_interval_feasible() {
        let p = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(0)), Constraint::ge(rv(&[-1]), r(1))]).unwrap();
        let c = is_feasible(&p);
        assert!(c.is_feasible());
        assert!(c.verify(&p));
    }

    #[test]
    fn contradictory_bounds_give_unit_multipliers() {
        let p = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(-1)), Constraint::ge(rv(&[-1]), r(0))]).unwrap();
        let c = is_feasible(&p);
        assert_eq!(c, Certificate::Infeasible { multipliers: rv(&[1, 1]) });
        assert!(c.verify(&p));
    }

    #[test]
    fn strict_contradiction() {
        // x > 0, -x >= 0
        let p = Polyhedron::with_constraints(1, vec![Constraint::gt(rv(&[1]), r(0)), Constraint::ge(rv(&[-1]), r(0))]).unwrap();
        let c = is_feasible(&p);
        assert!(!c.is_feasible());
        assert!(c.verify(&p));
        // x > 0 alone is fine
        let q = Polyhedron::with_constraints(1, vec![Constraint::gt(rv(&[1]), r(0))]).unwrap();
        assert!(is_feasible(&q).verify(&q));
    }

    #[test]
    fn equality_contradiction_sign_fixed() {
        // x = 0 and x - 1 = 0
        let p = Polyhedron::with_constraints(1, vec![Constraint::eq(rv(&[1]), r(0)), Constraint::eq(rv(&[1]), r(-1))]).unwrap();
        let c = is_feasible(&p);
        assert!(!c.is_feasible());
        assert!(c.verify(&p));
    }

    #[test]
    fn constant_rows_checked_up_front() {
        let p = Polyhedron::with_constraints(2, vec![Constraint::ge(rv(&[0, 0]), r(-3))]).unwrap();
        assert_eq!(is_feasible(&p), Certificate::Infeasible { multipliers: rv(&[1]) });
        let zero_dim = Polyhedron::with_constraints(0, vec![Constraint::ge(vec![], r(2))]).unwrap();
        assert_eq!(is_feasible(&zero_dim), Certificate::Feasible { point: vec![] });
    }

    #[test]
    fn eliminate_examples() {
        // x1 + x2 >= 0, -x2 >= 0  ->  x1 >= 0
        let p = Polyhedron::with_constraints(2, vec![Constraint::ge(rv(&[1, 1]), r(0)), Constraint::ge(rv(&[0, -1]), r(0))]).unwrap();
        let q = eliminate(&p, 1).unwrap();
        assert_eq!(q.constraints(), &[Constraint::ge(rv(&[1]), r(0))]);

        let empty = Polyhedron::new(3);
        let q = eliminate(&empty, 0).unwrap();
        assert_eq!(q.ambient_dim(), 2);
        assert!(q.constraints().is_empty());

        let p = Polyhedron::with_constraints(1, vec![Constraint::eq(rv(&[1]), r(0)), Constraint::ge(rv(&[1]), r(-1))]).unwrap();
        let q = eliminate(&p, 0).unwrap();
        assert_eq!(q.constraints().len(), 1);
        assert!(!q.contains(&[]));

        assert!(eliminate(&p, 1).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(affine_dimension(&Polyhedron::new(2)), 2);
        let line = Polyhedron::with_constraints(2, vec![Constraint::eq(rv(&[1, 0]), r(0))]).unwrap();
        assert_eq!(affine_dimension(&line), 1);
        assert_eq!(affine_dimension(&hirzebruch()), 2);
        let empty = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(-1)), Constraint::ge(rv(&[-1]), r(0))]).unwrap();
        assert_eq!(affine_dimension(&empty), -1);
        // x >= 0, -x >= 0: implicit equality
        let point = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(0)), Constraint::ge(rv(&[-1]), r(0))]).unwrap();
        assert_eq!(affine_dimension(&point), 0);
    }

    #[test]
    fn boundedness() {
        assert!(is_bounded(&hirzebruch()));
        let ray = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(0))]).unwrap();
        assert!(!is_bounded(&ray));
        // [1/2, 1]: x - 1/2 >= 0, -x + 1 >= 0
        let seg = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), rat(-1, 2)), Constraint::ge(rv(&[-1]), r(1))]).unwrap();
        assert!(is_bounded(&seg));
        let empty = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(-1)), Constraint::ge(rv(&[-1]), r(0))]).unwrap();
        assert!(is_bounded(&empty));
    }

    #[test]
    fn cone_membership() {
        let e = vec![rv(&[1, 0]), rv(&[0, 1])];
        let c = cone_member(&e, false, &rv(&[3, 2])).unwrap();
        assert_eq!(c.point(), Some(rv(&[3, 2]).as_slice()));

        let skew = vec![rv(&[1, 1]), rv(&[0, 1])];
        let c = cone_member(&skew, false, &rv(&[3, 2])).unwrap();
        assert!(!c.is_feasible());
        assert!(c.verify(&cone_system(&skew, false, &rv(&[3, 2])).unwrap()));

        let c = cone_member(&skew, false, &rv(&[0, 0])).unwrap();
        assert_eq!(c.point(), Some(rv(&[0, 0]).as_slice()));
        let c = cone_member(&skew, true, &rv(&[0, 0])).unwrap();
        assert!(!c.is_feasible());
    }

    #[test]
    fn vertices() {
        let v = enumerate_vertices(&hirzebruch()).unwrap();
        let expected: Vec<Vec<Rational>> = vec![rv(&[-1, -1]), rv(&[-1, 1]), rv(&[0, 1]), rv(&[2, -1])];
        assert_eq!(v, expected);

        let seg = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(0)), Constraint::ge(rv(&[-1]), r(1))]).unwrap();
        assert_eq!(enumerate_vertices(&seg).unwrap(), vec![rv(&[0]), rv(&[1])]);

        let empty = Polyhedron::with_constraints(1, vec![Constraint::ge(rv(&[1]), r(-1)), Constraint::ge(rv(&[-1]), r(0))]).unwrap();
        assert!(enumerate_vertices(&empty).unwrap().is_empty());

        assert!(enumerate_vertices(&Polyhedron::new(5)).is_err());
    }
}
