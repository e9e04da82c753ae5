//! Request/report envelopes behind the command-line front end.
//!
//! All computation lives in the library modules; this module parses request
//! envelopes, dispatches to them, and renders reports. Reports are
//! deterministic byte-for-byte for identical inputs: JSON is emitted with
//! sorted keys and canonical fractions, and the text format is a rendering
//! of the same JSON tree, not a second source of truth.
//!
//! A `--verify N` run re-derives every analytic claim with the brute-force
//! grid oracle and appends the counts plus a match flag; it never changes
//! the analytic payload. A verification mismatch is never expected — it
//! would indicate a bug — and is surfaced by the binary as exit code 3.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bundlealgebra::{
    dual, gr, is_polystable, is_semistable, s_equivalent, twist, FormalBundle,
};
use crate::error::{Error, Result};
use crate::indecomposable::{
    canonical_indecomposable, extension_certificate, include_in_moduli, is_self_conjugate,
    real_or_quaternionic, sigma_indec, twist_from_canonical, IndecClass,
};
use crate::moduli::{gcd_rank_degree, moduli_real_locus, ModuliRealLocusReport};
use crate::oracle::{
    fixed_line_classes, fixed_moduli_points, grid_component_count, GridSpec,
};
use crate::picard::{pic_real_locus, sigma_pic, PicClass};
use crate::topotypes::{
    component_count_higher_genus, component_table_genus1, enumerate_real_types,
    quaternionic_exists,
};
use crate::torus::{CurveSpec, TorusPoint};

pub const SCHEMA_VERSION: u32 = 1;

/// Default oracle grid when `--verify` is given without a resolution and
/// `REBC_DEFAULT_GRID` is unset.
pub const DEFAULT_GRID: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CommandName {
    Classify,
    Picard,
    Topo,
    Algebra,
    Indec,
}

/// Free-form parameter bag shared by the request envelope and the report
/// echo. Which fields are required depends on the command.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Parameters {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_components: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<FormalBundle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub other: Option<FormalBundle>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<PicClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<TorusPoint>,
}

/// A classification request, as read from a file or stdin.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: CommandName,
    #[serde(default)]
    pub curve: Option<CurveSpec>,
    #[serde(default)]
    pub parameters: Parameters,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationCheck {
    pub name: String,
    pub analytic: Value,
    pub oracle: Value,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub grid: u32,
    pub checks: Vec<VerificationCheck>,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: CommandName,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<CurveSpec>,
    pub parameters: Parameters,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    /// Whether every oracle check passed (vacuously true without `--verify`).
    pub fn verification_ok(&self) -> bool {
        self.verification.as_ref().is_none_or(|v| v.matches)
    }
}

/// Canonical JSON rendering: sorted keys, canonical fractions, trailing
/// newline. Identical inputs produce identical bytes.
pub fn report_to_json(report: &Report) -> Result<String> {
    // Round-tripping through Value sorts object keys (BTreeMap-backed).
    let value = serde_json::to_value(report)?;
    let mut out = serde_json::to_string_pretty(&value)?;
    out.push('\n');
    Ok(out)
}

/// Plain-text rendering of the same JSON tree.
pub fn report_to_text(report: &Report) -> Result<String> {
    let value = serde_json::to_value(report)?;
    let mut out = String::new();
    render_value(&value, 0, None, &mut out);
    Ok(out)
}

fn render_value(value: &Value, indent: usize, key: Option<&str>, out: &mut String) {
    let pad = "  ".repeat(indent);
    let prefix = match key {
        Some(k) => format!("{pad}{k}:"),
        None => pad.clone(),
    };
    match value {
        Value::Object(map) if map.is_empty() => out.push_str(&format!("{prefix} {{}}\n")),
        Value::Object(map) => {
            if key.is_some() {
                out.push_str(&format!("{prefix}\n"));
            }
            for (k, v) in map {
                render_value(v, indent + usize::from(key.is_some()), Some(k), out);
            }
        }
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{prefix} []\n")),
        Value::Array(items) => {
            out.push_str(&format!("{prefix}\n"));
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}  -\n"));
                        render_value(item, indent + 2, None, out);
                    }
                    _ => out.push_str(&format!("{pad}  - {}\n", scalar_text(item))),
                }
            }
        }
        scalar => out.push_str(&format!("{prefix} {}\n", scalar_text(scalar))),
    }
}

fn scalar_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn check(name: &str, analytic: Value, oracle: Value) -> VerificationCheck {
    let matches = analytic == oracle;
    VerificationCheck {
        name: name.to_string(),
        analytic,
        oracle,
        matches,
    }
}

fn finish_verification(grid: u32, checks: Vec<VerificationCheck>) -> Verification {
    let matches = checks.iter().all(|c| c.matches);
    Verification {
        grid,
        checks,
        matches,
    }
}

/// Oracle cross-check of a complete (h = 1) real-locus report: fixed-point
/// count and component count in determinant coordinates.
fn verify_coprime_locus(
    c: &CurveSpec,
    degree: i64,
    report: &ModuliRealLocusReport,
    grid: GridSpec,
    name: &str,
    checks: &mut Vec<VerificationCheck>,
) {
    let fixed = fixed_line_classes(c, degree, grid);
    let coords: Vec<TorusPoint> = fixed.iter().map(|l| l.u().clone()).collect();
    let components = grid_component_count(&coords, grid);
    checks.push(check(
        &format!("{name}_component_count"),
        json!(report.components.len()),
        json!(components),
    ));
    // Each analytic component must be a full grid circle.
    let expected_fixed: usize = report
        .components
        .iter()
        .filter(|comp| comp.circle.is_some())
        .count()
        * grid.resolution() as usize;
    checks.push(check(
        &format!("{name}_fixed_point_count"),
        json!(expected_fixed),
        json!(fixed.len()),
    ));
}

/// Oracle cross-check of a partial (h > 1) report: emptiness and strata
/// presence over the exhaustive Sym^h enumeration.
fn verify_partial_locus(
    c: &CurveSpec,
    rank: u32,
    degree: i64,
    report: &ModuliRealLocusReport,
    grid: GridSpec,
    checks: &mut Vec<VerificationCheck>,
) -> Result<()> {
    let fixed = fixed_moduli_points(c, rank, degree, grid)?;
    checks.push(check(
        "moduli_locus_nonempty",
        json!(!report.components.is_empty()),
        json!(!fixed.is_empty()),
    ));
    let has_diagonal = fixed
        .iter()
        .any(|m| m.dets().iter().all(|l| &sigma_pic(c, l) == l));
    let has_mixed = fixed
        .iter()
        .any(|m| m.dets().iter().any(|l| &sigma_pic(c, l) != l));
    let reported_diagonal = report
        .components
        .iter()
        .any(|comp| comp.label == "individually_fixed_determinants");
    let reported_mixed = report.components.iter().any(|comp| comp.label == "mixed_pairs");
    checks.push(check(
        "moduli_stratum_individually_fixed",
        json!(reported_diagonal),
        json!(has_diagonal),
    ));
    checks.push(check(
        "moduli_stratum_mixed_pairs",
        json!(reported_mixed),
        json!(has_mixed),
    ));
    Ok(())
}

/// Full classification of (r, d): moduli real locus plus the locus of
/// self-conjugate indecomposable classes, with optional oracle verification.
pub fn cmd_classify(
    c: &CurveSpec,
    rank: u32,
    degree: i64,
    verify: Option<u32>,
) -> Result<Report> {
    let moduli = moduli_real_locus(c, rank, degree)?;
    let indec = component_table_genus1(c, rank, degree)?;
    let result = json!({
        "moduli": serde_json::to_value(&moduli)?,
        "indecomposables": serde_json::to_value(&indec)?,
    });

    let verification = match verify {
        None => None,
        Some(n) => {
            let grid = GridSpec::new(n)?;
            let mut checks = Vec::new();
            if moduli.h == 1 {
                verify_coprime_locus(c, degree, &moduli, grid, "moduli", &mut checks);
            } else {
                verify_partial_locus(c, rank, degree, &moduli, grid, &mut checks)?;
            }
            // The indecomposable locus is one-dimensional for every h: its
            // coordinates are the fixed stable determinants in Pic^{d'}.
            let d_prime = degree / i64::from(gcd_rank_degree(rank, degree));
            verify_coprime_locus(c, d_prime, &indec, grid, "indecomposables", &mut checks);
            Some(finish_verification(n, checks))
        }
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: CommandName::Classify,
        curve: Some(c.clone()),
        parameters: Parameters {
            rank: Some(rank),
            degree: Some(degree),
            verify,
            ..Parameters::default()
        },
        result,
        verification,
    })
}

/// Real locus of Pic^d, with optional oracle verification.
pub fn cmd_picard(c: &CurveSpec, degree: i64, verify: Option<u32>) -> Result<Report> {
    let report = pic_real_locus(c, degree);
    let result = serde_json::to_value(&report)?;

    let verification = match verify {
        None => None,
        Some(n) => {
            let grid = GridSpec::new(n)?;
            let fixed = fixed_line_classes(c, degree, grid);
            let coords: Vec<TorusPoint> = fixed.iter().map(|l| l.u().clone()).collect();
            let components = grid_component_count(&coords, grid);
            let checks = vec![
                check(
                    "picard_component_count",
                    json!(report.components.len()),
                    json!(components),
                ),
                check(
                    "picard_fixed_point_count",
                    json!(report.components.len() * grid.resolution() as usize),
                    json!(fixed.len()),
                ),
            ];
            Some(finish_verification(n, checks))
        }
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: CommandName::Picard,
        curve: Some(c.clone()),
        parameters: Parameters {
            degree: Some(degree),
            verify,
            ..Parameters::default()
        },
        result,
        verification,
    })
}

/// Topological types of real and quaternionic bundles; with `genus >= 2` the
/// coprime component-count table is reported instead (taking the number of
/// real circles as a free parameter).
pub fn cmd_topo(
    c: &CurveSpec,
    rank: u32,
    degree: i64,
    genus: Option<u32>,
    n_components: Option<u32>,
) -> Result<Report> {
    let genus_val = genus.unwrap_or(1);
    let result = if genus_val <= 1 {
        let types = enumerate_real_types(c, rank, degree);
        json!({
            "real_types": serde_json::to_value(&types)?,
            "real_type_count": types.len(),
            "quaternionic_exists": quaternionic_exists(c, rank, degree, 1),
        })
    } else {
        let n = n_components.ok_or_else(|| {
            Error::InvalidInput("genus >= 2 requires n_components".into())
        })?;
        let table = component_count_higher_genus(n, genus_val, rank, degree)?;
        json!({ "higher_genus": serde_json::to_value(&table)? })
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: CommandName::Topo,
        curve: Some(c.clone()),
        parameters: Parameters {
            rank: Some(rank),
            degree: Some(degree),
            genus,
            n_components,
            ..Parameters::default()
        },
        result,
        verification: None,
    })
}

/// Krull–Schmidt algebra on a formal bundle.
pub fn cmd_algebra(
    c: &CurveSpec,
    op: &str,
    bundle: &FormalBundle,
    other: Option<&FormalBundle>,
    line: Option<&PicClass>,
) -> Result<Report> {
    let result = match op {
        "normal-form" => json!({ "normal_form": serde_json::to_value(bundle.normal_form())? }),
        "slope" => json!({ "slope": bundle.slope().to_string() }),
        "semistable" => json!({ "semistable": is_semistable(bundle) }),
        "polystable" => json!({ "polystable": is_polystable(bundle) }),
        "gr" => json!({ "gr": serde_json::to_value(gr(bundle)?)? }),
        "s-equiv" => {
            let other = other
                .ok_or_else(|| Error::InvalidInput("op s-equiv requires `other`".into()))?;
            json!({ "s_equivalent": s_equivalent(bundle, other)? })
        }
        "dual" => json!({ "dual": serde_json::to_value(dual(bundle))? }),
        "twist" => {
            let line =
                line.ok_or_else(|| Error::InvalidInput("op twist requires `line`".into()))?;
            json!({ "twist": serde_json::to_value(twist(bundle, line)?)? })
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown algebra op {other:?}; expected one of normal-form, slope, \
                 semistable, polystable, gr, s-equiv, dual, twist"
            )))
        }
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: CommandName::Algebra,
        curve: Some(c.clone()),
        parameters: Parameters {
            op: Some(op.to_string()),
            bundle: Some(bundle.clone()),
            other: other.cloned(),
            line: line.cloned(),
            ..Parameters::default()
        },
        result,
        verification: None,
    })
}

/// Indecomposable classes of rank r and degree d: the basepoint-normalized
/// class, the self-conjugate locus, and (optionally) the classification of
/// one specific class given by its stable-determinant coordinate.
pub fn cmd_indec(
    c: &CurveSpec,
    rank: u32,
    degree: i64,
    point: Option<&TorusPoint>,
    verify: Option<u32>,
) -> Result<Report> {
    let canonical = canonical_indecomposable(c, rank, degree)?;
    let locus = component_table_genus1(c, rank, degree)?;
    let h = gcd_rank_degree(rank, degree);
    let d_prime = degree / i64::from(h);

    let mut result = json!({
        "canonical_class": serde_json::to_value(&canonical)?,
        "locus": serde_json::to_value(&locus)?,
    });
    if h >= 2 {
        result["extension_certificate"] = serde_json::to_value(extension_certificate(h)?)?;
    }
    if let Some(u) = point {
        let class = IndecClass::new(rank, degree, PicClass::new(d_prime, u.clone()))?;
        let self_conjugate = is_self_conjugate(c, &class);
        let tag = if self_conjugate {
            Some(real_or_quaternionic(c, &class)?)
        } else {
            None
        };
        result["point"] = json!({
            "class": serde_json::to_value(&class)?,
            "conjugate": serde_json::to_value(sigma_indec(c, &class))?,
            "self_conjugate": self_conjugate,
            "tag": serde_json::to_value(tag)?,
            "twist_from_canonical": serde_json::to_value(twist_from_canonical(c, &class))?,
            "moduli_image": serde_json::to_value(include_in_moduli(&class))?,
        });
    }

    let verification = match verify {
        None => None,
        Some(n) => {
            let grid = GridSpec::new(n)?;
            let mut checks = Vec::new();
            verify_coprime_locus(c, d_prime, &locus, grid, "indecomposables", &mut checks);
            Some(finish_verification(n, checks))
        }
    };

    Ok(Report {
        schema_version: SCHEMA_VERSION,
        command: CommandName::Indec,
        curve: Some(c.clone()),
        parameters: Parameters {
            rank: Some(rank),
            degree: Some(degree),
            point: point.cloned(),
            verify,
            ..Parameters::default()
        },
        result,
        verification,
    })
}

/// Dispatch a request envelope to its handler.
pub fn run_request(req: &Request) -> Result<Report> {
    let need_curve = || {
        req.curve
            .clone()
            .ok_or_else(|| Error::InvalidInput("request needs a curve".into()))
    };
    let need = |name: &str, value: Option<u32>| {
        value.ok_or_else(|| Error::InvalidInput(format!("request needs parameters.{name}")))
    };
    let p = &req.parameters;
    match req.command {
        CommandName::Classify => {
            let rank = need("rank", p.rank)?;
            let degree = p
                .degree
                .ok_or_else(|| Error::InvalidInput("request needs parameters.degree".into()))?;
            cmd_classify(&need_curve()?, rank, degree, p.verify)
        }
        CommandName::Picard => {
            let degree = p
                .degree
                .ok_or_else(|| Error::InvalidInput("request needs parameters.degree".into()))?;
            cmd_picard(&need_curve()?, degree, p.verify)
        }
        CommandName::Topo => {
            let rank = need("rank", p.rank)?;
            let degree = p
                .degree
                .ok_or_else(|| Error::InvalidInput("request needs parameters.degree".into()))?;
            cmd_topo(&need_curve()?, rank, degree, p.genus, p.n_components)
        }
        CommandName::Algebra => {
            let op = p
                .op
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("request needs parameters.op".into()))?;
            let bundle = p
                .bundle
                .as_ref()
                .ok_or_else(|| Error::InvalidInput("request needs parameters.bundle".into()))?;
            cmd_algebra(&need_curve()?, op, bundle, p.other.as_ref(), p.line.as_ref())
        }
        CommandName::Indec => {
            let rank = need("rank", p.rank)?;
            let degree = p
                .degree
                .ok_or_else(|| Error::InvalidInput("request needs parameters.degree".into()))?;
            cmd_indec(&need_curve()?, rank, degree, p.point.as_ref(), p.verify)
        }
    }
}
