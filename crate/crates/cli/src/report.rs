//! Machine-readable classification reports. Exact quantities travel as
//! rational strings; the JSON and text renderings carry the same numbers.

use lpcoh_core::classifier::{Classification, CohomologySpace, Verdict};
use lpcoh_core::rat::{format_rat, Rat, RatInterval};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "lpcoh-report/v1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub tool: ToolInfo,
    pub input: InputEcho,
    /// Requested interval width for certified enclosures.
    pub tol: String,
    pub classification: ClassificationReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral: Option<SpectralSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub name: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalStr {
    pub lo: String,
    pub hi: String,
}

impl IntervalStr {
    pub fn from_interval(iv: &RatInterval) -> Self {
        IntervalStr { lo: format_rat(&iv.lo), hi: format_rat(&iv.hi) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatementReport {
    pub space: String,
    pub range: String,
    pub vanishes: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<IntervalStr>,
    pub statements: Vec<StatementReport>,
    pub tau_is_zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi0: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_nilpotent: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralSection {
    /// Ascending coefficients of the characteristic polynomial of
    /// ad_xi0 restricted to ker tau.
    pub char_poly: Vec<String>,
    pub count_positive: usize,
    pub count_zero: usize,
    pub count_negative: usize,
    pub sum_real_parts: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_positive_real_part: Option<IntervalStr>,
}

fn space_name(space: CohomologySpace) -> &'static str {
    match space {
        CohomologySpace::Torsion => "torsion",
        CohomologySpace::Reduced => "reduced",
        CohomologySpace::Full => "full",
    }
}

pub fn build_report(
    name: &str,
    dim: usize,
    tol: &Rat,
    classification: &Classification,
    timing_ms: Option<f64>,
) -> Report {
    let c = classification;
    let spectral = c.provenance.real_parts.as_ref().map(|r| SpectralSection {
        char_poly: c
            .provenance
            .char_poly
            .as_ref()
            .map(|p| p.coeffs().iter().map(format_rat).collect())
            .unwrap_or_default(),
        count_positive: r.count_positive,
        count_zero: r.count_zero,
        count_negative: r.count_negative,
        sum_real_parts: format_rat(&r.sum_real_parts),
        min_positive_real_part: r.min_positive_real_part.as_ref().map(IntervalStr::from_interval),
    });
    Report {
        schema: SCHEMA.to_string(),
        tool: ToolInfo {
            name: "lpcoh".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        input: InputEcho { name: name.to_string(), dim },
        tol: format_rat(tol),
        classification: ClassificationReport {
            verdict: c.verdict.to_string(),
            exponent: c.exponent.as_ref().map(IntervalStr::from_interval),
            statements: c
                .statements
                .iter()
                .map(|s| StatementReport {
                    space: space_name(s.space).to_string(),
                    range: s.range.to_string(),
                    vanishes: s.vanishes,
                    note: s.note.clone(),
                })
                .collect(),
            tau_is_zero: c.provenance.tau_is_zero,
            xi0: c
                .provenance
                .xi0
                .as_ref()
                .map(|v| v.iter().map(format_rat).collect()),
            kernel_nilpotent: c.provenance.kernel_nilpotent,
        },
        spectral,
        timing_ms,
    }
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::ClosedAtInfinity => "closed-at-infinity",
        Verdict::Heintze => "heintze",
        Verdict::Vanishing => "vanishing",
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let c = &report.classification;
    out.push_str(&format!("algebra: {} (dim {})\n", report.input.name, report.input.dim));
    out.push_str(&format!("verdict: {}\n", c.verdict));
    if let Some(e) = &c.exponent {
        out.push_str(&format!("critical exponent p(G): [{}, {}]\n", e.lo, e.hi));
    }
    out.push_str("statements:\n");
    for s in &c.statements {
        let space = match s.space.as_str() {
            "torsion" => "T^{1,p}",
            "reduced" => "R^{1,p}",
            _ => "H^{1,p}",
        };
        let rel = if s.vanishes { "= 0" } else { "!= 0" };
        out.push_str(&format!("  {space} {rel} for {}", s.range));
        if let Some(note) = &s.note {
            out.push_str(&format!(" ({note})"));
        }
        out.push('\n');
    }
    out.push_str(&format!("tau = 0: {}\n", c.tau_is_zero));
    if let Some(xi) = &c.xi0 {
        out.push_str(&format!("xi0: [{}]\n", xi.join(", ")));
    }
    if let Some(nil) = c.kernel_nilpotent {
        out.push_str(&format!("ker tau nilpotent: {nil}\n"));
    }
    if let Some(sp) = &report.spectral {
        out.push_str(&format!(
            "char poly coefficients (ascending): [{}]\n",
            sp.char_poly.join(", ")
        ));
        out.push_str(&format!(
            "real parts: {} positive, {} zero, {} negative; sum {}\n",
            sp.count_positive, sp.count_zero, sp.count_negative, sp.sum_real_parts
        ));
        if let Some(m) = &sp.min_positive_real_part {
            out.push_str(&format!("smallest real part: [{}, {}]\n", m.lo, m.hi));
        }
    }
    out.push_str(&format!("tol: {}\n", report.tol));
    if let Some(t) = report.timing_ms {
        out.push_str(&format!("timing_ms: {t}\n"));
    }
    out
}
