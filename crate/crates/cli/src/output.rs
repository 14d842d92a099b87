//! Rendering of suite, diagonalization and benchmark results in the three
//! output formats.

use serde_json::{json, Value};

use gring::{DiagReport, SuiteReport};

use crate::Format;

pub(crate) fn emit_verify(format: Format, config: &Value, suites: &[SuiteReport], pass: bool) {
    match format {
        Format::Json => {
            let doc = json!({
                "config": config,
                "suites": serde_json::to_value(suites).expect("reports serialize"),
                "pass": pass,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("valid json")
            );
        }
        Format::Csv => {
            println!("suite,check,samples,failures,max_residual");
            for s in suites {
                for c in &s.checks {
                    println!(
                        "{},{},{},{},{:e}",
                        s.suite, c.axiom, c.samples, c.failures, c.max_residual
                    );
                }
            }
        }
        Format::Text => {
            println!("config: {}", compact_config(config));
            for s in suites {
                println!("suite {}: {}", s.suite, pass_str(s.pass));
                for c in &s.checks {
                    println!(
                        "  {:<36} samples={:<6} failures={:<3} max_residual={:.3e}",
                        c.axiom, c.samples, c.failures, c.max_residual
                    );
                }
            }
            println!("overall: {}", pass_str(pass));
        }
    }
}

pub(crate) fn emit_diag(format: Format, config: &Value, report: &DiagReport, pass: bool) {
    match format {
        Format::Json => {
            let doc = json!({
                "config": config,
                "report": serde_json::to_value(report).expect("report serializes"),
                "pass": pass,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("valid json")
            );
        }
        Format::Csv => {
            println!("k,hypothesis_residual,eigen_residual,pass");
            for c in &report.checks {
                println!(
                    "{},{:e},{:e},{}",
                    c.k, c.hypothesis_residual, c.eigen_residual, c.pass
                );
            }
        }
        Format::Text => {
            println!("config: {}", compact_config(config));
            println!(
                "hypothesis T*X = X*L: {} (residual {:.3e})",
                pass_str(report.hypothesis_ok),
                report.hypothesis_residual
            );
            for c in &report.checks {
                println!(
                    "  k={:<4} eigen_residual={:.3e}  {}",
                    c.k,
                    c.eigen_residual,
                    pass_str(c.pass)
                );
            }
            println!("overall: {}", pass_str(pass));
        }
    }
}

pub(crate) struct BenchRow {
    pub size: usize,
    pub path: &'static str,
    pub median_ms: f64,
    pub residual: f64,
}

pub(crate) fn emit_bench(format: Format, config: &Value, rows: &[BenchRow], notes: &[String]) {
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "size": r.size,
                        "path": r.path,
                        "median_ms": r.median_ms,
                        "residual": r.residual,
                    })
                })
                .collect();
            let doc = json!({ "config": config, "rows": rows, "notes": notes });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("valid json")
            );
        }
        Format::Csv => {
            println!("size,path,median_ms,residual");
            for r in rows {
                println!("{},{},{:.6},{:e}", r.size, r.path, r.median_ms, r.residual);
            }
        }
        Format::Text => {
            println!("config: {}", compact_config(config));
            println!(
                "{:>8}  {:<10} {:>12}  {:>12}",
                "size", "path", "median_ms", "residual"
            );
            for r in rows {
                println!(
                    "{:>8}  {:<10} {:>12.4}  {:>12.3e}",
                    r.size, r.path, r.median_ms, r.residual
                );
            }
            for note in notes {
                println!("note: {note}");
            }
        }
    }
}

fn pass_str(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn compact_config(config: &Value) -> String {
    let g = config["group"].as_str().unwrap_or("?");
    let r = config["ring"].as_str().unwrap_or("?");
    let seed = &config["seed"];
    let rng = config["rng"].as_str().unwrap_or("?");
    match config.get("samples") {
        Some(samples) => format!("group {g}, ring {r}, seed {seed}, samples {samples}, rng {rng}"),
        None => format!("group {g}, ring {r}, seed {seed}, rng {rng}"),
    }
}
