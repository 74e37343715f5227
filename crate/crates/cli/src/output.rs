//! JSON shapes and text rendering.

use serde::Serialize;
use serde_json::Value;

use trit_codes::codes::{CodeReport, SearchOutcome};
use trit_codes::families::{ClaimReport, ClaimStatus};

#[derive(Serialize)]
pub struct SpecJson {
    pub label: String,
    pub m: u32,
    pub e: u64,
    pub s_check: bool,
    pub modulus: String,
    pub outside_hypotheses: bool,
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub weight: usize,
    pub positions: Vec<u32>,
    pub coeffs: Vec<u8>,
    pub polynomial: String,
}

#[derive(Serialize)]
pub struct SearchJson {
    pub w: usize,
    /// Cell counts can pass 2^64, so they are strings.
    pub cells: String,
    pub outcome: &'static str,
}

#[derive(Serialize)]
pub struct TimingsJson {
    pub total_ms: f64,
    pub searches: Vec<SearchJson>,
}

/// The stable top-level document for one code.
#[derive(Serialize)]
pub struct CodeJson {
    pub spec: SpecJson,
    pub n: u64,
    pub k: u64,
    pub d_exact: Option<u64>,
    pub d_lower: u64,
    pub d_upper: u64,
    pub generator: String,
    pub optimal: bool,
    pub certificates: Vec<CertificateJson>,
    pub family: Value,
    pub timings: TimingsJson,
}

fn outcome_name(o: &SearchOutcome) -> &'static str {
    match o {
        SearchOutcome::Found(_) => "found",
        SearchOutcome::Absent => "absent",
        SearchOutcome::OverBudget => "over-budget",
        SearchOutcome::Skipped => "skipped",
    }
}

impl CodeJson {
    pub fn new(r: &CodeReport, family: Value, total_ms: f64) -> CodeJson {
        CodeJson {
            spec: SpecJson {
                label: r.label.clone(),
                m: r.m,
                e: r.e,
                s_check: r.with_s_check,
                modulus: r.modulus.to_string(),
                outside_hypotheses: r.outside_hypotheses,
            },
            n: r.n,
            k: r.k,
            d_exact: r.d_exact,
            d_lower: r.d_lower,
            d_upper: r.d_upper,
            generator: r.generator.to_string(),
            optimal: r.optimal,
            certificates: r
                .certificates
                .iter()
                .map(|c| CertificateJson {
                    weight: c.weight(),
                    positions: c.positions.clone(),
                    coeffs: c.coeffs.iter().map(|t| t.value()).collect(),
                    polynomial: c.to_polynomial().to_string(),
                })
                .collect(),
            family,
            timings: TimingsJson {
                total_ms,
                searches: r
                    .searches
                    .iter()
                    .map(|s| SearchJson {
                        w: s.w,
                        cells: s.cost.to_string(),
                        outcome: outcome_name(&s.outcome),
                    })
                    .collect(),
            },
        }
    }
}

pub fn status_name(s: &ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Pass => "pass",
        ClaimStatus::Fail(_) => "fail",
        ClaimStatus::PredictedUnverified(_) => "predicted-unverified",
    }
}

pub fn claim_json(c: &ClaimReport) -> Value {
    let reasons: Vec<String> = match &c.status {
        ClaimStatus::Pass => Vec::new(),
        ClaimStatus::Fail(r) => r.clone(),
        ClaimStatus::PredictedUnverified(why) => vec![why.clone()],
    };
    serde_json::json!({
        "tag": c.family.tag(),
        "exponent": c.exponent.e,
        "leader": c.exponent.leader,
        "equivalent": c.exponent.equivalent,
        "claimed": [c.claimed.0, c.claimed.1, c.claimed.2],
        "status": status_name(&c.status),
        "reasons": reasons,
        "checks": c.checks.iter().map(|k| serde_json::json!({"name": k.name, "ok": k.ok})).collect::<Vec<_>>(),
    })
}

/// Multi-line text report for one code.
pub fn code_text(r: &CodeReport) -> String {
    let mut out = format!("{}\n{}\n", r.generator, r.parameters());
    out += &format!(
        "code: {} over GF(3^{})\nmodulus: {}\n",
        r.label, r.m, r.modulus
    );
    if r.outside_hypotheses {
        out += "note: e lies outside the usual hypotheses (|C_e| != m or e in C_1)\n";
    }
    out += &format!(
        "distance: lower {}, upper {} ({} bound {})\n",
        r.d_lower,
        r.d_upper,
        r.bound.name(),
        r.bound.applied
    );
    for s in &r.searches {
        out += &format!(
            "search w={}: {} ({} cells)\n",
            s.w,
            outcome_name(&s.outcome),
            s.cost
        );
    }
    if r.d_exact.is_some() {
        out += &format!("optimal: {}\n", if r.optimal { "yes" } else { "no" });
    }
    for c in &r.certificates {
        out += &format!("certificate: {}\n", c.to_polynomial());
    }
    out
}
