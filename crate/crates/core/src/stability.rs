//! Semi-stability of support patterns.
//!
//! Points of `C^d x C^d` enter only through which coordinates vanish. The
//! numerical oracles test cone membership of `alpha`; the geometric oracles
//! test nonemptiness of the state set in `n*`. Both return certificates.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::arrangement::{Arrangement, Sign, SignVector, TorusData};
use crate::error::{Error, Result};
use crate::feasibility::{cone_member, cone_system, is_feasible, Certificate, Constraint, Polyhedron};
use crate::linalg::{RatMatrix, Rational};

/// The vanishing pattern of `(z_i, w_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SupportStatus {
    /// `z_i != 0`, `w_i = 0`
    Z,
    /// `z_i = 0`, `w_i != 0`
    W,
    /// `z_i = w_i = 0`
    Zero,
    /// `z_i != 0`, `w_i != 0`
    Both,
}

impl SupportStatus {
    pub const ALL: [SupportStatus; 4] = [Self::Z, Self::W, Self::Zero, Self::Both];
    pub const NO_BOTH: [SupportStatus; 3] = [Self::Z, Self::W, Self::Zero];

    pub fn symbol(self) -> char {
        match self {
            Self::Z => 'z',
            Self::W => 'w',
            Self::Zero => '0',
            Self::Both => '*',
        }
    }

    fn z_nonzero(self) -> bool {
        matches!(self, Self::Z | Self::Both)
    }

    fn w_nonzero(self) -> bool {
        matches!(self, Self::W | Self::Both)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPattern(Vec<SupportStatus>);

impl SupportPattern {
    pub fn new(status: Vec<SupportStatus>) -> Self {
        Self(status)
    }

    /// The toric point with `z_i != 0` exactly on `support` and `w = 0`.
    pub fn toric(d: usize, support: &[usize]) -> Result<Self> {
        let mut status = vec![SupportStatus::Zero; d];
        for &i in support {
            if i >= d {
                return Err(Error::DimensionMismatch {
                    what: "support index",
                    expected: d,
                    found: i + 1,
                });
            }
            status[i] = SupportStatus::Z;
        }
        Ok(Self(status))
    }

    /// The open stratum of the chart `eps`: `Z` where `eps = +1`, `W` otherwise.
    pub fn full_for(eps: &SignVector) -> Self {
        Self(
            eps.signs()
                .iter()
                .map(|s| match s {
                    Sign::Plus => SupportStatus::Z,
                    Sign::Minus => SupportStatus::W,
                })
                .collect(),
        )
    }

    /// All patterns over `alphabet`, lexicographic in the alphabet's order.
    pub fn enumerate(alphabet: &[SupportStatus], d: usize) -> Vec<SupportPattern> {
        let k = alphabet.len();
        let total = k.pow(d as u32);
        (0..total)
            .map(|mut code| {
                let mut status = vec![alphabet[0]; d];
                for slot in status.iter_mut().rev() {
                    *slot = alphabet[code % k];
                    code /= k;
                }
                SupportPattern(status)
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn status(&self, i: usize) -> SupportStatus {
        self.0[i]
    }

    pub fn statuses(&self) -> &[SupportStatus] {
        &self.0
    }

    pub fn has_both(&self) -> bool {
        self.0.contains(&SupportStatus::Both)
    }

    /// True when the pattern lies in the extended core component `eps`:
    /// `w = 0` where `eps = +1` and `z = 0` where `eps = -1`.
    pub fn lies_in(&self, eps: &SignVector) -> bool {
        self.0.iter().zip(eps.signs()).all(|(s, e)| match e {
            Sign::Plus => !s.w_nonzero(),
            Sign::Minus => !s.z_nonzero(),
        })
    }

    fn check_len(&self, d: usize) -> Result<()> {
        if self.len() != d {
            return Err(Error::PatternLength {
                expected: d,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SupportPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for SupportPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                'z' => Ok(SupportStatus::Z),
                'w' => Ok(SupportStatus::W),
                '0' => Ok(SupportStatus::Zero),
                '*' => Ok(SupportStatus::Both),
                found => Err(Error::BadPattern { position, found }),
            })
            .collect::<Result<Vec<_>>>()
            .map(SupportPattern)
    }
}

/// A verdict together with the system it was decided on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub semistable: bool,
    pub certificate: Certificate,
    pub system: Polyhedron,
}

impl StabilityVerdict {
    fn from_system(system: Polyhedron) -> Self {
        let certificate = is_feasible(&system);
        Self {
            semistable: certificate.is_feasible(),
            certificate,
            system,
        }
    }

    pub fn verify(&self) -> bool {
        self.certificate.is_feasible() == self.semistable && self.certificate.verify(&self.system)
    }

    pub fn point(&self) -> Option<&[Rational]> {
        self.certificate.point()
    }
}

/// The signed generators `+-iota^* e_i^*` allowed by a pattern, with their
/// index and sign.
fn hk_generators(td: &TorusData, p: &SupportPattern) -> Vec<(usize, Sign)> {
    let mut out = Vec::new();
    for (i, s) in p.statuses().iter().enumerate() {
        if s.z_nonzero() {
            out.push((i, Sign::Plus));
        }
        if s.w_nonzero() {
            out.push((i, Sign::Minus));
        }
    }
    debug_assert!(out.iter().all(|&(i, _)| i < td.d()));
    out
}

fn signed_columns(td: &TorusData, gens: &[(usize, Sign)]) -> Vec<Vec<Rational>> {
    gens.iter()
        .map(|&(i, s)| {
            let g = td.generator(i);
            match s {
                Sign::Plus => g,
                Sign::Minus => g.into_iter().map(|v| -v).collect(),
            }
        })
        .collect()
}

fn cone_verdict(td: &TorusData, gens: &[(usize, Sign)], strict: bool) -> StabilityVerdict {
    let cols = signed_columns(td, gens);
    let system = cone_system(&cols, strict, td.alpha()).expect("generator lengths match alpha");
    let certificate = cone_member(&cols, strict, td.alpha()).expect("generator lengths match alpha");
    StabilityVerdict {
        semistable: certificate.is_feasible(),
        certificate,
        system,
    }
}

/// `alpha` in the cone spanned by `iota^* e_i^*` over the support.
pub fn toric_semistable_numeric(td: &TorusData, support: &[usize]) -> Result<StabilityVerdict> {
    hk_semistable_numeric(td, &SupportPattern::toric(td.d(), support)?)
}

/// `alpha` in the open cone over the support. Only defined on semistable
/// supports.
pub fn toric_closed_orbit(td: &TorusData, support: &[usize]) -> Result<bool> {
    hk_closed_orbit(td, &SupportPattern::toric(td.d(), support)?)
}

/// `alpha` in `cone{A_i : z_i != 0} + cone{-A_i : w_i != 0}`.
pub fn hk_semistable_numeric(td: &TorusData, p: &SupportPattern) -> Result<StabilityVerdict> {
    p.check_len(td.d())?;
    Ok(cone_verdict(td, &hk_generators(td, p), false))
}

pub fn hk_closed_orbit(td: &TorusData, p: &SupportPattern) -> Result<bool> {
    if !hk_semistable_numeric(td, p)?.semistable {
        return Err(Error::UnstableSupport);
    }
    Ok(cone_verdict(td, &hk_generators(td, p), true).semistable)
}

/// A point `x` with `A x = alpha`, `x_i >= 0` where `w_i = 0` and `x_i <= 0`
/// where `z_i = 0`, read off the cone coefficients. `None` when unstable.
pub fn lemma_witness(td: &TorusData, p: &SupportPattern) -> Result<Option<Vec<Rational>>> {
    p.check_len(td.d())?;
    let gens = hk_generators(td, p);
    let verdict = cone_verdict(td, &gens, false);
    Ok(verdict.point().map(|coeffs| {
        let mut x = vec![Rational::zero(); td.d()];
        for (&(i, s), c) in gens.iter().zip(coeffs) {
            match s {
                Sign::Plus => x[i] += c,
                Sign::Minus => x[i] -= c,
            }
        }
        x
    }))
}

/// `St_A(z, w)`: per coordinate `Z` gives `H^{>=0}`, `W` gives `H^{<=0}`,
/// `Zero` gives `H` and `Both` nothing.
pub fn state_set(arr: &Arrangement, p: &SupportPattern) -> Result<Polyhedron> {
    p.check_len(arr.len())?;
    let mut out = Polyhedron::new(arr.dim());
    for (i, s) in p.statuses().iter().enumerate() {
        let (u, l) = (arr.rational_normal(i), arr.lifts()[i].clone());
        let c = match s {
            SupportStatus::Z => Constraint::ge(u, l),
            SupportStatus::W => Constraint::le(u, l),
            SupportStatus::Zero => Constraint::eq(u, l),
            SupportStatus::Both => continue,
        };
        out.push(c)?;
    }
    Ok(out)
}

pub fn hk_semistable_geometric(arr: &Arrangement, p: &SupportPattern) -> Result<StabilityVerdict> {
    Ok(StabilityVerdict::from_system(state_set(arr, p)?))
}

pub fn toric_semistable_geometric(arr: &Arrangement, support: &[usize]) -> Result<StabilityVerdict> {
    hk_semistable_geometric(arr, &SupportPattern::toric(arr.len(), support)?)
}

fn chart_generators(eps: &SignVector, p: &SupportPattern) -> Vec<(usize, Sign)> {
    p.statuses()
        .iter()
        .zip(eps.signs())
        .enumerate()
        .filter(|(_, (s, e))| match e {
            Sign::Plus => s.z_nonzero(),
            Sign::Minus => s.w_nonzero(),
        })
        .map(|(i, (_, &e))| (i, e))
        .collect()
}

/// The cone test of the chart `U_eps`, with certificate.
pub fn chart_verdict(td: &TorusData, eps: &SignVector, p: &SupportPattern) -> Result<StabilityVerdict> {
    p.check_len(td.d())?;
    if eps.len() != td.d() {
        return Err(Error::DimensionMismatch {
            what: "sign vector",
            expected: td.d(),
            found: eps.len(),
        });
    }
    Ok(cone_verdict(td, &chart_generators(eps, p), false))
}

/// `alpha` in `cone{eps(i) A_i : i active}`.
pub fn chart_semistable(td: &TorusData, eps: &SignVector, p: &SupportPattern) -> Result<bool> {
    Ok(chart_verdict(td, eps, p)?.semistable)
}

/// Whether some point of `mu_C^{-1}(0)` has exactly this pattern: a vector in
/// `ker A` must be nonzero on every `Both` coordinate and zero elsewhere.
pub fn pattern_realizable(td: &TorusData, p: &SupportPattern) -> Result<bool> {
    p.check_len(td.d())?;
    let both: Vec<usize> = (0..p.len()).filter(|&i| p.status(i) == SupportStatus::Both).collect();
    if both.is_empty() {
        return Ok(true);
    }
    let d = td.d();
    let mut rows = td.a().to_rows();
    for j in (0..d).filter(|j| !both.contains(j)) {
        let mut e = vec![Rational::zero(); d];
        e[j] = Rational::from_integer(1.into());
        rows.push(e);
    }
    let kernel = RatMatrix::from_rows(rows, d).expect("rows of length d").kernel();
    Ok(both.iter().all(|&i| kernel.row(i).iter().any(|v| !v.is_zero())))
}

/// `(z_i, w_i) -> (w_i, -z_i)` where `eps(i) = -1`.
pub fn reorient_pattern(p: &SupportPattern, eps: &SignVector) -> Result<SupportPattern> {
    p.check_len(eps.len())?;
    Ok(SupportPattern(
        p.statuses()
            .iter()
            .zip(eps.signs())
            .map(|(&s, e)| match (s, e) {
                (SupportStatus::Z, Sign::Minus) => SupportStatus::W,
                (SupportStatus::W, Sign::Minus) => SupportStatus::Z,
                _ => s,
            })
            .collect(),
    ))
}

/// Replaces every `Both` by `Z` or `W` following the sign of a witness `x`
/// (`Z` when `x_i >= 0`). The result is semistable with the same witness and
/// its chart memberships imply those of `p`. `None` when `p` is unstable.
pub fn both_reduction(td: &TorusData, p: &SupportPattern) -> Result<Option<SupportPattern>> {
    let Some(x) = lemma_witness(td, p)? else {
        return Ok(None);
    };
    Ok(Some(SupportPattern(
        p.statuses()
            .iter()
            .zip(&x)
            .map(|(&s, xi)| match s {
                SupportStatus::Both if xi.is_negative() => SupportStatus::W,
                SupportStatus::Both => SupportStatus::Z,
                _ => s,
            })
            .collect(),
    )))
}
