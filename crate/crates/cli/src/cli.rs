//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 on success, 1 when the input is rejected with a diagnostic,
//! 2 on command-line usage errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use akc_core::{analyze, parse_rational, AnalysisOptions, AnalysisReport, Rational};
use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::catalog;
use crate::dsl;
use crate::elaborate::{elaborate, Diagnostic};
use crate::render;

#[derive(Parser)]
#[command(name = "akc", version, about = "Exact cohomology of Lie algebras with geometric structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an algebra description file
    Analyze {
        /// Path to a .lie file
        file: PathBuf,
        /// Also decompose cohomology in this degree
        #[arg(long)]
        degree: Option<usize>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Override a declared parameter; repeat for several values
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Analyze a built-in example
    Example {
        /// Example name, see `akc examples`
        name: String,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
        /// Set an example parameter; repeat for several values
        #[arg(long = "param", value_name = "NAME=VALUE")]
        params: Vec<String>,
    },
    /// Parse and validate a file without analyzing it
    Check {
        /// Path to a .lie file
        file: PathBuf,
    },
    /// List the built-in examples
    Examples,
}

pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match run(cli.command, out) {
        Ok(()) => 0,
        Err(diagnostic) => {
            let _ = writeln!(err, "{diagnostic}");
            if diagnostic.code == "usage" {
                2
            } else {
                1
            }
        }
    }
}

fn color_enabled() -> bool {
    std::env::var("AKC_COLOR").map(|v| v == "1").unwrap_or(false)
}

fn run(command: Command, out: &mut dyn Write) -> Result<(), Diagnostic> {
    match command {
        Command::Analyze { file, degree, json, params } => {
            let src = std::fs::read_to_string(&file).map_err(|e| {
                Diagnostic::new("io", format!("cannot read {}: {e}", file.display()))
            })?;
            let doc = dsl::parse(&src)
                .map_err(|e| Diagnostic::new("parse", e.to_string()))?;
            let overrides = parse_param_args(&params)?;
            let options = AnalysisOptions { extra_degree: degree };
            let mut labeled = Vec::new();
            for instantiation in instantiations(&overrides) {
                let elaboration = elaborate(&doc, &instantiation)?;
                let report = analyze(elaboration.algebra, &elaboration.structures, options)
                    .map_err(|e| Diagnostic::new("analysis", e.to_string()))?;
                labeled.push((instantiation, report));
            }
            emit_reports(labeled, json, out);
            Ok(())
        }
        Command::Example { name, json, params } => {
            let overrides = parse_param_args(&params)?;
            let mut labeled = Vec::new();
            for instantiation in instantiations(&overrides) {
                let instance = catalog::instantiate(&name, &instantiation)?;
                let report =
                    analyze(instance.algebra, &instance.structures, AnalysisOptions::default())
                        .map_err(|e| Diagnostic::new("analysis", e.to_string()))?;
                labeled.push((instantiation, report));
            }
            emit_reports(labeled, json, out);
            Ok(())
        }
        Command::Check { file } => {
            let src = std::fs::read_to_string(&file).map_err(|e| {
                Diagnostic::new("io", format!("cannot read {}: {e}", file.display()))
            })?;
            let doc = dsl::parse(&src)
                .map_err(|e| Diagnostic::new("parse", e.to_string()))?;
            let elaboration = elaborate(&doc, &[])?;
            let validation = elaboration
                .algebra
                .validate()
                .map_err(|e| Diagnostic::new("jacobi", e.to_string()))?;
            let labels: Vec<String> =
                elaboration.structures.iter().map(|s| s.label.clone()).collect();
            let text = render::render_check(
                elaboration.algebra.name(),
                elaboration.algebra.dim(),
                &validation,
                &labels,
                color_enabled(),
            );
            let _ = write!(out, "{text}");
            Ok(())
        }
        Command::Examples => {
            for entry in catalog::entries() {
                let _ = writeln!(out, "{:<15} {}", entry.name, entry.summary);
                if !entry.params.is_empty() {
                    let _ = writeln!(out, "{:<15}   params: {}", "", entry.params);
                }
            }
            Ok(())
        }
    }
}

fn parse_param_args(args: &[String]) -> Result<Vec<(String, Rational)>, Diagnostic> {
    args.iter()
        .map(|raw| {
            let (name, value) = raw.split_once('=').ok_or_else(|| {
                Diagnostic::new("usage", format!("--param expects NAME=VALUE, got `{raw}`"))
            })?;
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Diagnostic::new(
                    "usage",
                    format!("`{name}` is not a valid parameter name"),
                ));
            }
            let rational = parse_rational(value).ok_or_else(|| {
                Diagnostic::new("usage", format!("`{value}` is not a rational number"))
            })?;
            Ok((name.to_string(), rational))
        })
        .collect()
}

/// Expands repeated `--param` values into the cartesian product of
/// per-name value lists, preserving first-appearance order of names.
fn instantiations(overrides: &[(String, Rational)]) -> Vec<Vec<(String, Rational)>> {
    let mut names: Vec<&String> = Vec::new();
    let mut values: Vec<Vec<&Rational>> = Vec::new();
    for (name, value) in overrides {
        match names.iter().position(|n| *n == name) {
            Some(i) => values[i].push(value),
            None => {
                names.push(name);
                values.push(vec![value]);
            }
        }
    }
    let mut product: Vec<Vec<(String, Rational)>> = vec![Vec::new()];
    for (i, name) in names.iter().enumerate() {
        let mut next = Vec::with_capacity(product.len() * values[i].len());
        for partial in &product {
            for value in &values[i] {
                let mut assignment = partial.clone();
                assignment.push(((*name).clone(), (*value).clone()));
                next.push(assignment);
            }
        }
        product = next;
    }
    product
}

#[derive(Serialize)]
struct MultiReport {
    instantiations: Vec<InstantiationReport>,
    dimensions_agree: bool,
}

#[derive(Serialize)]
struct InstantiationReport {
    params: BTreeMap<String, String>,
    report: AnalysisReport,
}

fn emit_reports(labeled: Vec<(Vec<(String, Rational)>, AnalysisReport)>, json: bool, out: &mut dyn Write) {
    let color = color_enabled();
    if labeled.len() == 1 {
        let (_, report) = &labeled[0];
        if json {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(report).expect("report serializes"));
        } else {
            let _ = write!(out, "{}", render::render_report(report, color));
        }
        return;
    }

    let signatures: Vec<String> =
        labeled.iter().map(|(_, r)| dimension_signature(r)).collect();
    let agree = signatures.windows(2).all(|w| w[0] == w[1]);

    if json {
        let multi = MultiReport {
            instantiations: labeled
                .into_iter()
                .map(|(params, report)| InstantiationReport {
                    params: params
                        .into_iter()
                        .map(|(name, value)| (name, value.to_string()))
                        .collect(),
                    report,
                })
                .collect(),
            dimensions_agree: agree,
        };
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&multi).expect("report serializes"));
    } else {
        for (params, report) in &labeled {
            let label: Vec<String> =
                params.iter().map(|(name, value)| format!("{name}={value}")).collect();
            let _ = writeln!(out, "=== instantiation {} ===", label.join(", "));
            let _ = write!(out, "{}", render::render_report(report, color));
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "dimensions agree across instantiations: {}", if agree { "yes" } else { "no" });
    }
}

/// Per-report skeleton of every dimension and verdict, used to compare
/// instantiations of a parametrized algebra.
fn dimension_signature(report: &AnalysisReport) -> String {
    use std::fmt::Write as _;
    let mut sig = format!("betti={:?}", report.betti);
    for s in &report.structures {
        let _ = write!(
            sig,
            ";{}:integrable={:?},h+={:?},h-={:?},pure={:?},full={:?},p4={:?},lef={:?},hl={:?}",
            s.label, s.integrable, s.h_plus, s.h_minus, s.pure, s.full, s.purity_degree4,
            s.lefschetz2, s.hard_lefschetz
        );
        if let Some(bounds) = &s.bounds {
            let _ = write!(sig, ",bounds=({},{},{})", bounds.h_plus, bounds.h_minus, bounds.ok);
        }
        if let Some(basis) = &s.harmonic_pure_basis {
            let _ = write!(
                sig,
                ",basis={:?}",
                basis.basis.as_ref().map(|b| b.len())
            );
        }
        if let Some(formality) = &s.geometric_formality {
            let _ = write!(sig, ",formal={}", formality.holds);
        }
        for m in &s.massey {
            let _ = write!(
                sig,
                ",massey(<{};{};{}>)=({},{})",
                m.a, m.b, m.c, m.vanishes, m.indeterminacy_dim
            );
        }
        for b in &s.balanced {
            let _ = write!(sig, ",balanced={}", b.balanced);
        }
    }
    if let Some(deg) = &report.degree_analysis {
        let _ = write!(sig, ";deg{}={}", deg.degree, deg.betti);
        for s in &deg.structures {
            let dims: Vec<String> =
                s.subgroups.iter().map(|g| format!("{}={}", g.types, g.dim)).collect();
            let _ = write!(sig, ",{}:[{}],pure={},full={}", s.label, dims.join(","), s.pure, s.full);
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn examples_lists_all_names() {
        let (code, out, _) = run_capture(&["akc", "examples"]);
        assert_eq!(code, 0);
        for name in catalog::NAMES {
            assert!(out.contains(name), "listing mentions {name}");
        }
    }

    #[test]
    fn example_report_is_stable_json() {
        let (code, out, _) = run_capture(&["akc", "example", "iwasawa", "--json"]);
        assert_eq!(code, 0);
        let (code2, out2, _) = run_capture(&["akc", "example", "iwasawa", "--json"]);
        assert_eq!(code2, 0);
        assert_eq!(out, out2, "JSON output is byte-identical across runs");
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["betti"][2], serde_json::json!(8));
    }

    #[test]
    fn unknown_example_is_a_diagnostic() {
        let (code, _, err) = run_capture(&["akc", "example", "heisenberg9"]);
        assert_eq!(code, 1);
        assert!(err.contains("error[unknown-example]"));
    }

    #[test]
    fn malformed_param_is_a_usage_error() {
        let (code, _, err) = run_capture(&["akc", "example", "nilmanifold-n", "--param", "alpha"]);
        assert_eq!(code, 2);
        assert!(err.contains("error[usage]"));

        let (code, _, err) =
            run_capture(&["akc", "example", "nilmanifold-n", "--param", "alpha=x"]);
        assert_eq!(code, 2);
        assert!(err.contains("not a rational"));
    }

    #[test]
    fn multiple_params_compare_instantiations() {
        let (code, out, _) = run_capture(&[
            "akc",
            "example",
            "nilmanifold-n",
            "--param",
            "alpha=2",
            "--param",
            "alpha=3",
            "--param",
            "alpha=5/2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("=== instantiation").count(), 3);
        assert!(out.contains("dimensions agree across instantiations: yes"));
    }

    #[test]
    fn multi_instantiation_json_shape() {
        let (code, out, _) = run_capture(&[
            "akc", "example", "nilmanifold-n", "--json",
            "--param", "alpha=2", "--param", "alpha=3",
        ]);
        assert_eq!(code, 0);
        let value: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(value["dimensions_agree"], serde_json::json!(true));
        assert_eq!(value["instantiations"].as_array().unwrap().len(), 2);
        assert_eq!(value["instantiations"][1]["params"]["alpha"], serde_json::json!("3"));
    }

    #[test]
    fn analyze_and_check_read_files() {
        let dir = std::env::temp_dir().join("akc-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("abelian4.lie");
        std::fs::write(&path, "algebra abelian4 { dim = 4; }\n").unwrap();
        let path_str = path.to_str().unwrap();

        let (code, out, _) = run_capture(&["akc", "analyze", path_str]);
        assert_eq!(code, 0);
        assert!(out.contains("betti: 1 4 6 4 1"));

        let (code, out, _) = run_capture(&["akc", "check", path_str]);
        assert_eq!(code, 0);
        assert!(out.contains("ok: abelian4"));

        let (code, _, err) = run_capture(&["akc", "analyze", "/nonexistent/x.lie"]);
        assert_eq!(code, 1);
        assert!(err.contains("error[io]"));
    }

    #[test]
    fn parse_errors_carry_location() {
        let dir = std::env::temp_dir().join("akc-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("broken.lie");
        std::fs::write(&path, "algebra broken { dim = 4; d e3 = e1^; }\n").unwrap();

        let (code, _, err) = run_capture(&["akc", "check", path.to_str().unwrap()]);
        assert_eq!(code, 1);
        assert!(err.contains("error[parse]"));
        assert!(err.contains("line 1"), "diagnostic names the line: {err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        let (code, _, err) = run_capture(&["akc", "frobnicate"]);
        assert_eq!(code, 2);
        assert!(!err.is_empty());

        let (code, out, _) = run_capture(&["akc", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("analyze"));
    }

    #[test]
    fn degree_flag_adds_degree_block() {
        let (code, out, _) = run_capture(&["akc", "example", "iwasawa"]);
        assert_eq!(code, 0);
        assert!(!out.contains("degree-3 analysis"));

        let dir = std::env::temp_dir().join("akc-cli-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("iwasawa.lie");
        std::fs::write(&path, catalog::sources()[0].1.as_bytes()).unwrap();
        let (code, out, _) =
            run_capture(&["akc", "analyze", path.to_str().unwrap(), "--degree", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("degree-3 analysis"));
    }
}
