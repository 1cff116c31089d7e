//! The command-line driver: one computation per invocation, rendered as
//! text or as a JSON document.
//!
//! Exit-code contract (enforced by the binary): 0 success, 2 degenerate
//! weights, 3 internal consistency failure, 4 bad arguments.

use serde_json::json;
use thiserror::Error;

use crate::dump::{build_document, rational_to_string};
use crate::golden::{is_computed, reference_polynomial, verify_fixed_points, DROW_BETA_NOTE};
use crate::residue::{interpolation_crosscheck, severi_polynomial, ResidueError};
use crate::torus::{check_generic, Degeneracy, WeightSampler, WeightTriple};
use crate::{rat, Cogenus, RationalPoly};

/// Number of random generic triples the verify mode samples for the
/// weight-independence check.
pub const INDEPENDENCE_SAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Symbolic,
    Interpolate,
    Verify,
    Dump,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: Cogenus,
    pub d: Option<i64>,
    /// Defaults per n when absent: (0,1,2) for one and two nodes, (0,1,3)
    /// for three.
    pub weights: Option<WeightTriple>,
    pub mode: Mode,
    pub format: OutputFormat,
    /// Seed for the sampled weight triples in verify mode.
    pub seed: u64,
}

#[derive(Debug, Clone, Error)]
pub enum RunError {
    #[error("degenerate weights for n = {n}: {degeneracy}")]
    Degenerate { n: Cogenus, degeneracy: Degeneracy },
    #[error("{report}")]
    Consistency { report: String },
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Degenerate { .. } => 2,
            RunError::Consistency { .. } => 3,
        }
    }
}

fn lift(n: Cogenus, err: ResidueError) -> RunError {
    match err {
        ResidueError::Degenerate(degeneracy) => RunError::Degenerate { n, degeneracy },
        other => RunError::Consistency { report: other.to_string() },
    }
}

/// Runs one configured computation and renders its report.
pub fn run(config: &RunConfig) -> Result<String, RunError> {
    let n = config.n;
    let w = config.weights.unwrap_or_else(|| n.default_weights());
    check_generic(&w, n).map_err(|degeneracy| RunError::Degenerate { n, degeneracy })?;
    match config.mode {
        Mode::Symbolic => run_symbolic(config, &w),
        Mode::Interpolate => run_interpolate(config, &w),
        Mode::Verify => run_verify(config, &w),
        Mode::Dump => run_dump(config, &w),
    }
}

fn coefficient_strings(poly: &RationalPoly) -> Vec<String> {
    poly.coeffs().iter().map(rational_to_string).collect()
}

fn validity_note(n: Cogenus) -> String {
    format!(
        "f_{n}(d) is the degree of the {n}-nodal locus for every d >= {}; the polynomial itself is computed for all d",
        n.min_geometric_degree()
    )
}

fn value_string(poly: &RationalPoly, d: i64) -> String {
    let value = poly.eval(&rat(d));
    if value.is_integer() {
        value.to_integer().to_string()
    } else {
        rational_to_string(&value)
    }
}

fn run_symbolic(config: &RunConfig, w: &WeightTriple) -> Result<String, RunError> {
    let n = config.n;
    let poly = severi_polynomial(n, w).map_err(|e| lift(n, e))?;
    match config.format {
        OutputFormat::Text => {
            let mut lines = vec![format!("f_{}(d) = {}", n, poly)];
            lines.push(format!("note: {}", validity_note(n)));
            if let Some(d) = config.d {
                lines.push(format!("f_{}({}) = {}", n, d, value_string(&poly, d)));
            }
            Ok(lines.join("\n"))
        }
        OutputFormat::Structured => {
            let mut doc = json!({
                "n": n.value(),
                "weights": w.values(),
                "polynomial": coefficient_strings(&poly),
                "rendered": poly.to_string(),
                "geometric_from_d": n.min_geometric_degree(),
            });
            if let Some(d) = config.d {
                doc["value"] = json!({ "d": d, "value": value_string(&poly, d) });
            }
            Ok(pretty(&doc))
        }
    }
}

fn run_interpolate(config: &RunConfig, w: &WeightTriple) -> Result<String, RunError> {
    let n = config.n;
    let report = interpolation_crosscheck(n, w).map_err(|e| lift(n, e))?;
    let rendered = match config.format {
        OutputFormat::Text => {
            let samples: Vec<String> =
                report.samples.iter().map(|(d, v)| format!("f({}) = {}", d, v)).collect();
            let mut lines = vec![format!("interpolation cross-check for n = {}, weights {}", n, w)];
            lines.push(format!("  samples:      {}", samples.join(", ")));
            lines.push(format!("  interpolated: {}", report.interpolated));
            lines.push(format!("  symbolic:     {}", report.symbolic));
            lines.push(if report.passed() {
                "PASS: interpolated polynomial matches the symbolic Bott sum".to_string()
            } else {
                "FAIL: interpolated polynomial differs from the symbolic Bott sum".to_string()
            });
            lines.join("\n")
        }
        OutputFormat::Structured => pretty(&json!({
            "n": n.value(),
            "weights": w.values(),
            "samples": report.samples.iter()
                .map(|(d, v)| json!({ "d": d, "value": v.to_string() }))
                .collect::<Vec<_>>(),
            "interpolated": coefficient_strings(&report.interpolated),
            "symbolic": coefficient_strings(&report.symbolic),
            "pass": report.passed(),
        })),
    };
    if report.passed() {
        Ok(rendered)
    } else {
        Err(RunError::Consistency { report: rendered })
    }
}

fn run_verify(config: &RunConfig, w: &WeightTriple) -> Result<String, RunError> {
    let n = config.n;
    let checks = verify_fixed_points(n);
    let all_points_ok = checks.iter().all(|c| c.passed());

    // weight independence: seeded random generic triples must reproduce the
    // polynomial computed at the configured weights
    let reference = severi_polynomial(n, w).map_err(|e| lift(n, e))?;
    let mut sampler = WeightSampler::new(config.seed);
    let mut sampled_ok = 0usize;
    let mut first_mismatch: Option<WeightTriple> = None;
    for _ in 0..INDEPENDENCE_SAMPLES {
        let sample = sampler.next_generic(n);
        match severi_polynomial(n, &sample) {
            Ok(poly) if poly == reference => sampled_ok += 1,
            _ => {
                first_mismatch.get_or_insert(sample);
            }
        }
    }
    let independence_ok = sampled_ok == INDEPENDENCE_SAMPLES;
    let passed = all_points_ok && independence_ok;

    let rendered = match config.format {
        OutputFormat::Text => {
            let mut lines = vec![format!("golden-table verification for n = {}, weights {}", n, w)];
            for (idx, check) in checks.iter().enumerate() {
                lines.push(format!(
                    "  [{:>2}/{}] {} {}",
                    idx + 1,
                    checks.len(),
                    if check.passed() { "PASS" } else { "FAIL" },
                    check.label
                ));
            }
            lines.push(DROW_BETA_NOTE.to_string());
            lines.push(format!(
                "weight independence: {}/{} sampled generic triples (seed {}) reproduce f_{}: {}",
                sampled_ok,
                INDEPENDENCE_SAMPLES,
                config.seed,
                n,
                if independence_ok { "PASS" } else { "FAIL" }
            ));
            if let Some(bad) = first_mismatch {
                lines.push(format!("  first mismatching triple: {}", bad));
            }
            lines.push(format!(
                "{}: {}/{} fixed points match the reference tables",
                if passed { "PASS" } else { "FAIL" },
                checks.iter().filter(|c| c.passed()).count(),
                checks.len()
            ));
            lines.join("\n")
        }
        OutputFormat::Structured => pretty(&json!({
            "n": n.value(),
            "weights": w.values(),
            "points": checks.iter()
                .map(|c| json!({ "label": c.label, "alpha_ok": c.alpha_ok, "beta_ok": c.beta_ok }))
                .collect::<Vec<_>>(),
            "note": DROW_BETA_NOTE,
            "weight_independence": {
                "seed": config.seed,
                "samples": INDEPENDENCE_SAMPLES,
                "matching": sampled_ok,
                "pass": independence_ok,
            },
            "pass": passed,
        })),
    };
    if passed {
        Ok(rendered)
    } else {
        Err(RunError::Consistency { report: rendered })
    }
}

fn run_dump(config: &RunConfig, w: &WeightTriple) -> Result<String, RunError> {
    let n = config.n;
    let doc = build_document(n, w).map_err(|e| lift(n, e))?;
    match config.format {
        OutputFormat::Structured => {
            Ok(serde_json::to_string_pretty(&doc).expect("document serializes"))
        }
        OutputFormat::Text => {
            let ordinary = doc.fixed_points.iter().filter(|p| p.exponents.is_none()).count();
            let exceptional = doc.fixed_points.len() - ordinary;
            let mut lines = vec![
                format!("fixed-point census for n = {}, weights {}", n, w),
                format!(
                    "{} fixed points ({} ordinary, {} exceptional)",
                    doc.fixed_points.len(),
                    ordinary,
                    exceptional
                ),
                String::new(),
            ];
            let poly = severi_polynomial(n, w).map_err(|e| lift(n, e))?;
            let data = crate::dump::document_data(&doc);
            for (idx, datum) in data.iter().enumerate() {
                lines.push(format!("[{:>2}] {}", idx + 1, datum.label));
                let alphas: Vec<String> = datum.alphas.iter().map(|a| a.to_string()).collect();
                lines.push(format!("     alpha: {}", alphas.join(", ")));
                let betas: Vec<String> = datum.betas.iter().map(|b| b.to_string()).collect();
                lines.push(format!("     beta:  {}", betas.join(", ")));
            }
            lines.push(String::new());
            lines.push(format!("f_{}(d) = {}", n, poly));
            lines.push(format!("note: {}", validity_note(n)));
            Ok(lines.join("\n"))
        }
    }
}

/// The embedded cogenus formulas f_1 .. f_6. Only the first three are
/// outputs of this engine; the rest are external results (Vainsencher's
/// formulas) shown for reference.
pub fn reference_report(format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => {
            let mut lines =
                vec!["known cogenus formulas (degree of the n-nodal locus in degree d)".to_string()];
            for n in 1..=6u8 {
                let poly = reference_polynomial(n).expect("tables cover 1..=6");
                let origin = if is_computed(n) {
                    "computed and verified by this engine"
                } else {
                    "external result (Vainsencher), shown for reference only"
                };
                lines.push(format!("f_{}(d) = {}", n, poly));
                lines.push(format!("    [{}]", origin));
            }
            lines.join("\n")
        }
        OutputFormat::Structured => {
            let entries: Vec<_> = (1..=6u8)
                .map(|n| {
                    let poly = reference_polynomial(n).expect("tables cover 1..=6");
                    json!({
                        "n": n,
                        "polynomial": coefficient_strings(&poly),
                        "rendered": poly.to_string(),
                        "computed": is_computed(n),
                        "source": if is_computed(n) { "this engine" } else { "Vainsencher" },
                    })
                })
                .collect();
            pretty(&json!({ "reference": entries }))
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json renders")
}
