//! The extended core, the core, and the covering of `Y(alpha, 0)` by the
//! cotangent charts of its compact core components.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arrangement::{chamber, trivial_factors, SignVector, SmoothArrangement};
use crate::combinatorics::checked_pow;
use crate::error::{Error, Result};
use crate::feasibility::{affine_dimension, is_bounded, is_feasible, vertices_unguarded, Polyhedron};
use crate::linalg::Rational;
use crate::stability::{
    chart_semistable, chart_verdict, hk_semistable_numeric, pattern_realizable, state_set, SupportPattern,
    SupportStatus,
};

/// Name of the environment variable the CLI reads to override enumeration limits.
pub const ENUM_LIMIT_ENV: &str = "HYPERTORIC_ENUM_LIMIT";

pub const EXTENDED_CORE_MAX_D: usize = 12;
pub const COVERING_MAX_D: usize = 12;
pub const COMPLEMENT_MAX_D: usize = 9;

/// Limit on exhaustive enumerations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Guard {
    /// Per-operation defaults.
    #[default]
    Default,
    /// At most this many enumerated cases.
    Limit(usize),
    Unlimited,
}

impl Guard {
    fn check(self, what: &'static str, base: usize, d: usize, default_max_d: usize) -> Result<()> {
        let count = checked_pow(base, d).unwrap_or(usize::MAX);
        let limit = match self {
            Guard::Unlimited => return Ok(()),
            Guard::Limit(l) => l,
            Guard::Default => checked_pow(base, default_max_d).expect("defaults fit"),
        };
        if count > limit {
            return Err(Error::GuardExceeded { what, count, limit });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Empty,
    Bounded,
    Unbounded,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Empty => "empty",
            Self::Bounded => "bounded",
            Self::Unbounded => "unbounded",
        }
    }
}

/// The stratum `Z_eps` of the extended core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreComponent {
    pub eps: SignVector,
    pub chamber: Polyhedron,
    pub classification: Classification,
    /// Affine dimension of the chamber, -1 when empty.
    pub dimension: i64,
    /// Sorted vertices, for bounded nonempty chambers.
    pub vertices: Option<Vec<Vec<Rational>>>,
}

impl CoreComponent {
    /// Member of `Theta_cpt`: nonempty, bounded and full-dimensional.
    pub fn is_compact(&self) -> bool {
        self.classification == Classification::Bounded && self.dimension == self.chamber.ambient_dim() as i64
    }
}

fn classify(sa: &SmoothArrangement, eps: SignVector) -> CoreComponent {
    let ch = chamber(sa.arrangement(), &eps).expect("sign vector length matches");
    let (classification, dimension, vertices) = if !is_feasible(&ch).is_feasible() {
        (Classification::Empty, -1, None)
    } else if is_bounded(&ch) {
        (Classification::Bounded, affine_dimension(&ch), Some(vertices_unguarded(&ch)))
    } else {
        (Classification::Unbounded, affine_dimension(&ch), None)
    };
    CoreComponent {
        eps,
        chamber: ch,
        classification,
        dimension,
        vertices,
    }
}

/// One component per sign vector, in enumeration order.
pub fn extended_core(sa: &SmoothArrangement, guard: Guard) -> Result<Vec<CoreComponent>> {
    let d = sa.len();
    guard.check("extended core", 2, d, EXTENDED_CORE_MAX_D)?;
    let all: Vec<SignVector> = SignVector::enumerate(d).collect();
    Ok(all.into_par_iter().map(|eps| classify(sa, eps)).collect())
}

/// The compact components, `Theta_cpt`.
pub fn core(sa: &SmoothArrangement, guard: Guard) -> Result<Vec<CoreComponent>> {
    Ok(extended_core(sa, guard)?.into_iter().filter(CoreComponent::is_compact).collect())
}

pub fn theta_cpt(sa: &SmoothArrangement, guard: Guard) -> Result<Vec<SignVector>> {
    Ok(core(sa, guard)?.into_iter().map(|c| c.eps).collect())
}

/// Both sides of the empty-core criterion, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmptyCoreCriterion {
    pub bounded_exists: bool,
    pub trivial_k: Vec<usize>,
    /// Whether "no bounded chamber" and "some trivial factor" coincide here.
    pub agree: bool,
}

pub fn core_empty_criterion(sa: &SmoothArrangement, guard: Guard) -> Result<EmptyCoreCriterion> {
    let bounded_exists = !core(sa, guard)?.is_empty();
    let trivial_k = trivial_factors(sa.arrangement());
    Ok(EmptyCoreCriterion {
        bounded_exists,
        agree: !bounded_exists == !trivial_k.is_empty(),
        trivial_k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub covered: bool,
    pub patterns_checked: usize,
    pub theta_cpt: Vec<SignVector>,
    /// Each semistable pattern and the first compact chart containing it.
    pub witness: BTreeMap<SupportPattern, SignVector>,
    /// Semistable patterns outside every compact chart.
    pub counterexamples: Vec<SupportPattern>,
}

impl CoverReport {
    /// Re-derives every entry from the stability oracles.
    pub fn verify(&self, sa: &SmoothArrangement) -> Result<bool> {
        let td = sa.torus();
        for (p, eps) in &self.witness {
            let v = chart_verdict(td, eps, p)?;
            if !(v.semistable && v.verify() && self.theta_cpt.contains(eps)) {
                return Ok(false);
            }
        }
        for p in &self.counterexamples {
            if !hk_semistable_numeric(td, p)?.semistable {
                return Ok(false);
            }
            for eps in &self.theta_cpt {
                if chart_semistable(td, eps, p)? {
                    return Ok(false);
                }
            }
        }
        Ok(self.covered == self.counterexamples.is_empty())
    }
}

enum Outcome {
    Unstable,
    Witness(SignVector),
    Counterexample,
}

/// Sweeps every `{Z, W, Zero}` pattern. Patterns with `Both` coordinates are
/// covered by reduction to one of these.
pub fn verify_covering(sa: &SmoothArrangement, guard: Guard) -> Result<CoverReport> {
    let d = sa.len();
    guard.check("covering sweep", 3, d, COVERING_MAX_D)?;
    let theta = theta_cpt(sa, guard)?;
    if theta.is_empty() {
        return Err(Error::EmptyCore);
    }
    let td = sa.torus();
    let patterns = SupportPattern::enumerate(&SupportStatus::NO_BOTH, d);
    let outcomes: Vec<Outcome> = patterns
        .par_iter()
        .map(|p| {
            if !hk_semistable_numeric(td, p)?.semistable {
                return Ok(Outcome::Unstable);
            }
            for eps in &theta {
                if chart_semistable(td, eps, p)? {
                    return Ok(Outcome::Witness(eps.clone()));
                }
            }
            Ok(Outcome::Counterexample)
        })
        .collect::<Result<_>>()?;
    let mut witness = BTreeMap::new();
    let mut counterexamples = Vec::new();
    for (p, o) in patterns.iter().zip(outcomes) {
        match o {
            Outcome::Unstable => {}
            Outcome::Witness(eps) => {
                witness.insert(p.clone(), eps);
            }
            Outcome::Counterexample => counterexamples.push(p.clone()),
        }
    }
    Ok(CoverReport {
        covered: counterexamples.is_empty(),
        patterns_checked: patterns.len(),
        theta_cpt: theta,
        witness,
        counterexamples,
    })
}

/// Pairs `(p, eps)` with `eps` compact where the state set of `p` meets the
/// chamber `Delta_eps` but the chart `eps` rejects `p`.
pub fn adjacency_violations(sa: &SmoothArrangement, guard: Guard) -> Result<Vec<(SupportPattern, SignVector)>> {
    let d = sa.len();
    guard.check("adjacency sweep", 3, d, COVERING_MAX_D)?;
    let comps = core(sa, guard)?;
    let td = sa.torus();
    let patterns = SupportPattern::enumerate(&SupportStatus::NO_BOTH, d);
    let found: Vec<Vec<(SupportPattern, SignVector)>> = patterns
        .par_iter()
        .map(|p| {
            let st = state_set(sa.arrangement(), p)?;
            let mut bad = Vec::new();
            for c in &comps {
                if !chart_semistable(td, &c.eps, p)? && is_feasible(&st.intersect(&c.chamber)?).is_feasible() {
                    bad.push((p.clone(), c.eps.clone()));
                }
            }
            Ok(bad)
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().flatten().collect())
}

pub fn adjacency_lemma_check(sa: &SmoothArrangement, guard: Guard) -> Result<bool> {
    Ok(adjacency_violations(sa, guard)?.is_empty())
}

/// The chart `eps` contains its own open stratum exactly when `Delta_eps` is
/// nonempty.
pub fn verify_density(sa: &SmoothArrangement, eps: &SignVector) -> Result<bool> {
    let chart = chart_semistable(sa.torus(), eps, &SupportPattern::full_for(eps))?;
    let nonempty = is_feasible(&chamber(sa.arrangement(), eps)?).is_feasible();
    Ok(chart == nonempty)
}

/// `verify_density` for every sign vector, in enumeration order.
pub fn density_table(sa: &SmoothArrangement, guard: Guard) -> Result<Vec<(SignVector, bool)>> {
    let d = sa.len();
    guard.check("density sweep", 2, d, EXTENDED_CORE_MAX_D)?;
    let all: Vec<SignVector> = SignVector::enumerate(d).collect();
    all.into_par_iter()
        .map(|eps| verify_density(sa, &eps).map(|ok| (eps, ok)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementReport {
    pub chart_eps: SignVector,
    /// Semistable realizable patterns outside the chart, in enumeration order.
    pub excluded_patterns: Vec<SupportPattern>,
    /// No excluded pattern has a `Both` coordinate.
    pub all_in_extended_core: bool,
    /// Largest state-set dimension among excluded patterns (-1 when none).
    /// `None` when a `Both` pattern is excluded: no dimension claim is made then.
    pub max_state_dim: Option<i64>,
    /// `Both`-free excluded patterns grouped by the nonempty components
    /// `Z_eps'` containing them.
    pub component_breakdown: BTreeMap<SignVector, Vec<SupportPattern>>,
}

pub fn chart_complement(sa: &SmoothArrangement, eps: &SignVector, guard: Guard) -> Result<ComplementReport> {
    let d = sa.len();
    guard.check("complement sweep", 4, d, COMPLEMENT_MAX_D)?;
    if !is_feasible(&chamber(sa.arrangement(), eps)?).is_feasible() {
        return Err(Error::EmptyChamber(eps.to_string()));
    }
    let td = sa.torus();
    let patterns = SupportPattern::enumerate(&SupportStatus::ALL, d);
    let flags: Vec<bool> = patterns
        .par_iter()
        .map(|p| {
            Ok(pattern_realizable(td, p)?
                && hk_semistable_numeric(td, p)?.semistable
                && !chart_semistable(td, eps, p)?)
        })
        .collect::<Result<_>>()?;
    let excluded: Vec<SupportPattern> = patterns
        .into_iter()
        .zip(flags)
        .filter_map(|(p, f)| f.then_some(p))
        .collect();
    let all_in_extended_core = excluded.iter().all(|p| !p.has_both());
    let max_state_dim = if all_in_extended_core {
        let dims: Vec<i64> = excluded
            .par_iter()
            .map(|p| state_set(sa.arrangement(), p).map(|s| affine_dimension(&s)))
            .collect::<Result<_>>()?;
        Some(dims.into_iter().max().unwrap_or(-1))
    } else {
        None
    };
    let mut component_breakdown = BTreeMap::new();
    for comp in extended_core(sa, guard)? {
        if comp.classification == Classification::Empty {
            continue;
        }
        let inside: Vec<SupportPattern> = excluded
            .iter()
            .filter(|p| !p.has_both() && p.lies_in(&comp.eps))
            .cloned()
            .collect();
        if !inside.is_empty() {
            component_breakdown.insert(comp.eps, inside);
        }
    }
    Ok(ComplementReport {
        chart_eps: eps.clone(),
        excluded_patterns: excluded,
        all_in_extended_core,
        max_state_dim,
        component_breakdown,
    })
}
