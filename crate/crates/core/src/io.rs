//! The arrangement file format and the JSON reports.
//!
//! ```json
//! {"dim": 1, "normals": [[-1], [1], [1]], "lifts": ["1", "-1/2", "0"], "name": "three-points"}
//! ```
//!
//! Normals are JSON integers (64-bit). Lifts are strings `"p"` or `"p/q"` with
//! `q > 0`; plain JSON integers are accepted too. Reports write every rational
//! as a `"p/q"` string and keep a fixed key order.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arrangement::{is_regular, is_simple, simplicity_violation, Arrangement, SignVector, SmoothArrangement, TorusData};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational, Integer, Rational};
use crate::quotient::{
    chart_complement, core_empty_criterion, density_table, extended_core, verify_covering, ComplementReport,
    CoreComponent, CoverReport, Guard,
};
use crate::stability::{
    hk_closed_orbit, hk_semistable_geometric, hk_semistable_numeric, lemma_witness, pattern_realizable,
    SupportPattern,
};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrangementFile {
    dim: usize,
    normals: Vec<Vec<i64>>,
    lifts: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn parse_lift(v: &Value) -> Option<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(i.into())),
        _ => None,
    }
}

pub fn parse(bytes: &[u8]) -> Result<Arrangement> {
    let file: ArrangementFile = serde_json::from_slice(bytes).map_err(|e| Error::Format(e.to_string()))?;
    let lifts = file
        .lifts
        .iter()
        .enumerate()
        .map(|(index, v)| parse_lift(v).ok_or(Error::BadLift { index }))
        .collect::<Result<Vec<_>>>()?;
    let arr = Arrangement::from_ints(file.dim, &file.normals, lifts)?;
    Ok(match file.name {
        Some(n) => arr.with_name(n),
        None => arr,
    })
}

fn small(v: &Integer) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::Format(format!("normal entry {v} does not fit in 64 bits")))
}

/// Canonical form: reduced lifts, keys in the order `dim, normals, lifts, name`.
pub fn serialize(arr: &Arrangement) -> Result<String> {
    let file = ArrangementFile {
        dim: arr.dim(),
        normals: arr
            .normals()
            .iter()
            .map(|u| u.iter().map(small).collect())
            .collect::<Result<_>>()?,
        lifts: arr.lifts().iter().map(|l| Value::String(format_rational(l))).collect(),
        name: arr.name().map(str::to_owned),
    };
    Ok(serde_json::to_string(&file).expect("plain data"))
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data")
}

#[derive(Serialize, Debug)]
pub struct SmoothSection {
    pub regular: bool,
    pub simple: bool,
}

#[derive(Serialize, Debug)]
pub struct CheckOutput {
    pub regular: bool,
    pub simple: bool,
    pub smooth: bool,
    /// 1-based indices of hyperplanes meeting in too high a codimension.
    pub simplicity_violation: Option<Vec<usize>>,
}

pub fn check(arr: &Arrangement) -> CheckOutput {
    let (regular, simple) = (is_regular(arr), is_simple(arr));
    CheckOutput {
        regular,
        simple,
        smooth: regular && simple,
        simplicity_violation: simplicity_violation(arr).map(|s| s.into_iter().map(|i| i + 1).collect()),
    }
}

#[derive(Serialize, Debug)]
pub struct TorusSection {
    pub m: usize,
    pub alpha: Vec<String>,
    /// Rows of the `d x m` kernel basis.
    pub kernel_basis: Vec<Vec<String>>,
}

impl TorusSection {
    pub fn new(td: &TorusData) -> Self {
        Self {
            m: td.m(),
            alpha: rats(td.alpha()),
            kernel_basis: td
                .iota_basis()
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ComponentEntry {
    pub eps: String,
    pub classification: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    pub dimension: i64,
}

impl ComponentEntry {
    fn new(c: &CoreComponent) -> Self {
        Self {
            eps: c.eps.to_string(),
            classification: c.classification.as_str(),
            vertices: c.vertices.as_ref().map(|vs| vs.iter().map(|v| rats(v)).collect()),
            dimension: c.dimension,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct CoreSection {
    pub components: Vec<ComponentEntry>,
    pub theta_cpt_count: usize,
    pub theta_cpt: Vec<String>,
    /// 1-based indices of trivial factors.
    pub trivial_factors: Vec<usize>,
    /// Whether "empty core" and "some trivial factor" coincide on this input.
    pub empty_core_criterion_agrees: bool,
}

pub fn core_section(sa: &SmoothArrangement, guard: Guard) -> Result<CoreSection> {
    let comps = extended_core(sa, guard)?;
    let crit = core_empty_criterion(sa, guard)?;
    let theta: Vec<String> = comps.iter().filter(|c| c.is_compact()).map(|c| c.eps.to_string()).collect();
    Ok(CoreSection {
        components: comps.iter().map(ComponentEntry::new).collect(),
        theta_cpt_count: theta.len(),
        theta_cpt: theta,
        trivial_factors: crit.trivial_k.iter().map(|i| i + 1).collect(),
        empty_core_criterion_agrees: crit.agree,
    })
}

#[derive(Serialize, Debug)]
pub struct CoveringSection {
    pub covered: bool,
    pub witness_count: usize,
    pub counterexamples: Vec<String>,
}

impl CoveringSection {
    pub fn new(r: &CoverReport) -> Self {
        Self {
            covered: r.covered,
            witness_count: r.witness.len(),
            counterexamples: r.counterexamples.iter().map(|p| p.to_string()).collect(),
        }
    }
}

/// The `cover` command output: the section plus the full witness map.
#[derive(Serialize, Debug)]
pub struct CoverOutput {
    pub covered: bool,
    pub patterns_checked: usize,
    pub theta_cpt: Vec<String>,
    pub witness_count: usize,
    pub witness: BTreeMap<String, String>,
    pub counterexamples: Vec<String>,
}

impl CoverOutput {
    pub fn new(r: &CoverReport) -> Self {
        Self {
            covered: r.covered,
            patterns_checked: r.patterns_checked,
            theta_cpt: r.theta_cpt.iter().map(|e| e.to_string()).collect(),
            witness_count: r.witness.len(),
            witness: r.witness.iter().map(|(p, e)| (p.to_string(), e.to_string())).collect(),
            counterexamples: r.counterexamples.iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ComplementSection {
    pub chart_eps: String,
    pub excluded_patterns: Vec<String>,
    pub all_in_extended_core: bool,
    pub max_state_dim: Option<i64>,
    pub component_breakdown: BTreeMap<String, Vec<String>>,
}

impl ComplementSection {
    pub fn new(r: &ComplementReport) -> Self {
        let strs = |ps: &[SupportPattern]| ps.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        Self {
            chart_eps: r.chart_eps.to_string(),
            excluded_patterns: strs(&r.excluded_patterns),
            all_in_extended_core: r.all_in_extended_core,
            max_state_dim: r.max_state_dim,
            component_breakdown: r.component_breakdown.iter().map(|(e, ps)| (e.to_string(), strs(ps))).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct StabilityOutput {
    pub pattern: String,
    pub semistable: bool,
    /// A solution of `A x = alpha` with the sign conditions of the pattern.
    pub witness: Option<Vec<String>>,
    /// A point of the state set in `n*`.
    pub state_point: Option<Vec<String>>,
    pub geometric_agrees: bool,
    pub realizable: bool,
    pub closed_orbit: Option<bool>,
}

pub fn stability(arr: &Arrangement, td: &TorusData, p: &SupportPattern) -> Result<StabilityOutput> {
    let numeric = hk_semistable_numeric(td, p)?;
    let geometric = hk_semistable_geometric(arr, p)?;
    Ok(StabilityOutput {
        pattern: p.to_string(),
        semistable: numeric.semistable,
        witness: lemma_witness(td, p)?.map(|x| rats(&x)),
        state_point: geometric.point().map(rats),
        geometric_agrees: numeric.semistable == geometric.semistable,
        realizable: pattern_realizable(td, p)?,
        closed_orbit: if numeric.semistable { Some(hk_closed_orbit(td, p)?) } else { None },
    })
}

#[derive(Serialize, Debug)]
pub struct DensityOutput {
    pub all: bool,
    pub per_eps: BTreeMap<String, bool>,
}

pub fn density(sa: &SmoothArrangement, guard: Guard) -> Result<DensityOutput> {
    let table = density_table(sa, guard)?;
    Ok(DensityOutput {
        all: table.iter().all(|(_, ok)| *ok),
        per_eps: table.into_iter().map(|(e, ok)| (e.to_string(), ok)).collect(),
    })
}

/// Sections that need smoothness are `null` otherwise. `covering` is `null`
/// when the core is empty.
#[derive(Serialize, Debug)]
pub struct Report {
    pub smooth: SmoothSection,
    pub torus: TorusSection,
    pub core: Option<CoreSection>,
    pub covering: Option<CoveringSection>,
    pub density: Option<BTreeMap<String, bool>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub complement: Vec<ComplementSection>,
}

impl Report {
    pub fn to_json(&self) -> String {
        pretty(self)
    }
}

pub fn report(arr: &Arrangement, guard: Guard, charts: &[SignVector]) -> Result<Report> {
    let (regular, simple) = (is_regular(arr), is_simple(arr));
    let torus = TorusSection::new(&crate::arrangement::torus_data(arr)?);
    let smooth = SmoothSection { regular, simple };
    if !(regular && simple) {
        return Ok(Report {
            smooth,
            torus,
            core: None,
            covering: None,
            density: None,
            complement: Vec::new(),
        });
    }
    let sa = SmoothArrangement::new(arr.clone())?;
    let core = core_section(&sa, guard)?;
    let covering = match verify_covering(&sa, guard) {
        Ok(r) => Some(CoveringSection::new(&r)),
        Err(Error::EmptyCore) => None,
        Err(e) => return Err(e),
    };
    let complement = charts
        .iter()
        .map(|e| chart_complement(&sa, e, guard).map(|r| ComplementSection::new(&r)))
        .collect::<Result<_>>()?;
    Ok(Report {
        smooth,
        torus,
        core: Some(core),
        covering,
        density: Some(density(&sa, guard)?.per_eps),
        complement,
    })
}

/// Pretty JSON for any output struct.
pub fn to_json<T: Serialize>(v: &T) -> String {
    pretty(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::rat;

    #[test]
    fn parse_examples() {
        let arr = parse(br#"{"dim":1,"normals":[[-1],[1],[1]],"lifts":["1","-1/2","0"]}"#).unwrap();
        assert_eq!(arr.lifts(), fixtures::three_points().lifts());
        assert_eq!(arr.normals(), fixtures::three_points().normals());
        let arr = parse(br#"{"dim":2,"normals":[[1,0],[0,1],[-1,-1],[0,-1]],"lifts":["1","1","1","1"]}"#).unwrap();
        assert_eq!(arr.normals(), fixtures::hirzebruch().normals());
    }

    #[test]
    fn parse_errors() {
        let e = parse(br#"{"dim":2,"normals":[[2,0],[0,1]],"lifts":["0","0"]}"#).unwrap_err();
        assert_eq!(e.to_string(), "normal 1 not primitive");
        let e = parse(br#"{"dim":2,"normals":[[1,0],[1,0]],"lifts":["0","0"]}"#).unwrap_err();
        assert_eq!(e.to_string(), "normals do not span");
        let e = parse(br#"{"dim":1,"normals":[[1],[1]],"lifts":["0","1/0"]}"#).unwrap_err();
        assert_eq!(e.to_string(), "bad lift 2");
        let e = parse(b"{\"dim\":1,\n\"normals\":[[1]],\n\"lifts\":[\"0\"],\"extra\":1}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
    }

    #[test]
    fn canonical_serialization() {
        let arr = parse(br#"{"lifts":["2/4",0],"normals":[[1],[-1]],"dim":1,"name":"x"}"#).unwrap();
        assert_eq!(
            serialize(&arr).unwrap(),
            r#"{"dim":1,"normals":[[1],[-1]],"lifts":["1/2","0"],"name":"x"}"#
        );
        assert_eq!(arr.lifts()[0], rat(1, 2));
    }

    #[test]
    fn report_keys_in_order() {
        let r = report(&fixtures::three_points(), Guard::Default, &[]).unwrap().to_json();
        let keys = ["\"smooth\"", "\"torus\"", "\"core\"", "\"covering\"", "\"density\""];
        let pos: Vec<usize> = keys.iter().map(|k| r.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(r.contains("\"1/2\""));
        assert!(!r.contains("complement"));
    }

    #[test]
    fn stability_output() {
        let arr = fixtures::three_points();
        let td = crate::arrangement::torus_data(&arr).unwrap();
        let out = stability(&arr, &td, &"zw0".parse().unwrap()).unwrap();
        assert!(out.semistable && out.geometric_agrees && out.realizable);
        assert_eq!(out.witness, Some(vec!["1".into(), "-1/2".into(), "0".into()]));
    }
}
