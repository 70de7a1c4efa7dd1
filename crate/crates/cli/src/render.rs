//! Human-readable rendering of analysis reports.

use std::fmt::Write;

use akc_core::cealgebra::ValidationReport;
use akc_core::AnalysisReport;

struct Palette {
    bold: &'static str,
    green: &'static str,
    red: &'static str,
    reset: &'static str,
}

impl Palette {
    fn new(color: bool) -> Self {
        if color {
            Palette { bold: "\x1b[1m", green: "\x1b[32m", red: "\x1b[31m", reset: "\x1b[0m" }
        } else {
            Palette { bold: "", green: "", red: "", reset: "" }
        }
    }

    fn yn(&self, value: bool) -> String {
        if value {
            format!("{}yes{}", self.green, self.reset)
        } else {
            format!("{}no{}", self.red, self.reset)
        }
    }
}

pub fn render_report(report: &AnalysisReport, color: bool) -> String {
    let p = Palette::new(color);
    let mut out = String::new();
    let _ = writeln!(out, "{}algebra {} (dim {}){}", p.bold, report.algebra, report.dim, p.reset);
    let f = &report.flags;
    let _ = writeln!(
        out,
        "flags: jacobi {} | unimodular {} | nilpotent {} | solvable {} | completely solvable {}",
        p.yn(f.jacobi),
        p.yn(f.unimodular),
        p.yn(f.nilpotent),
        p.yn(f.solvable),
        f.completely_solvable_hint,
    );
    let _ = writeln!(out, "de Rham comparison: {}", report.derham_identification);
    let betti: Vec<String> = report.betti.iter().map(|b| b.to_string()).collect();
    let _ = writeln!(out, "betti: {}", betti.join(" "));

    for s in &report.structures {
        let _ = writeln!(out, "\n{}structure {}{}", p.bold, s.label, p.reset);
        if let Some(integrable) = s.integrable {
            let _ = writeln!(out, "  integrable: {}", p.yn(integrable));
        }
        if let (Some(h_plus), Some(h_minus)) = (s.h_plus, s.h_minus) {
            match &s.bounds {
                Some(b) => {
                    let _ = writeln!(
                        out,
                        "  h+ = {} (bound {})   h- = {} (bound {})   bounds ok: {}",
                        h_plus, b.h_plus_bound, h_minus, b.h_minus_bound, p.yn(b.ok)
                    );
                }
                None => {
                    let _ = writeln!(out, "  h+ = {h_plus}   h- = {h_minus}");
                }
            }
        }
        if let (Some(pure), Some(full)) = (s.pure, s.full) {
            let _ = write!(out, "  pure: {}   full: {}", p.yn(pure), p.yn(full));
            if let Some(p4) = s.purity_degree4 {
                let _ = write!(out, "   degree-4 pure: {}", p.yn(p4));
            }
            let _ = writeln!(out);
        }
        if let Some(lef) = s.lefschetz2 {
            let _ = writeln!(out, "  lefschetz on harmonic 2-forms: {}", p.yn(lef));
        }
        if let Some(hl) = &s.hard_lefschetz {
            let entries: Vec<String> = hl
                .iter()
                .enumerate()
                .map(|(i, ok)| format!("k={} {}", i + 1, p.yn(*ok)))
                .collect();
            let _ = writeln!(out, "  hard lefschetz [omega^k]: {}", entries.join(", "));
        }
        if let Some(basis) = &s.harmonic_pure_basis {
            match &basis.basis {
                Some(forms) if basis.exists => {
                    let _ = writeln!(out, "  harmonic pure-type basis ({} forms):", forms.len());
                    for form in forms {
                        let _ = writeln!(out, "    {form}");
                    }
                }
                _ => {
                    let _ = writeln!(out, "  harmonic pure-type basis: none");
                }
            }
        }
        if let Some(formality) = &s.geometric_formality {
            match &formality.witness {
                Some([a, b]) if !formality.holds => {
                    let _ = writeln!(
                        out,
                        "  geometric formality: {} (non-harmonic product: ({a}) wedge ({b}))",
                        p.yn(false)
                    );
                }
                _ => {
                    let _ = writeln!(out, "  geometric formality: {}", p.yn(formality.holds));
                }
            }
        }
        if !s.massey.is_empty() {
            let _ = writeln!(out, "  massey triple products on degree-1 classes:");
            for m in &s.massey {
                let verdict = if m.vanishes { "vanishes" } else { "does not vanish" };
                let _ = writeln!(
                    out,
                    "    <[{}], [{}], [{}]> {} (representative {}, indeterminacy dim {})",
                    m.a, m.b, m.c, verdict, m.representative, m.indeterminacy_dim
                );
            }
        }
        for b in &s.balanced {
            let _ = writeln!(
                out,
                "  balanced candidate {}: d-nonzero {} | d(power) = 0 {} | balanced {}",
                b.form,
                p.yn(b.d_nonzero),
                p.yn(b.d_power_zero),
                p.yn(b.balanced)
            );
        }
    }

    if let Some(deg) = &report.degree_analysis {
        let _ = writeln!(out, "\n{}degree-{} analysis{} (betti {})", p.bold, deg.degree, p.reset, deg.betti);
        for s in &deg.structures {
            let _ = writeln!(
                out,
                "  structure {}: pure {}, full {}",
                s.label,
                p.yn(s.pure),
                p.yn(s.full)
            );
            for sub in &s.subgroups {
                let _ = writeln!(out, "    {}: {}", sub.types, sub.dim);
            }
        }
    }

    out
}

pub fn render_check(
    name: &str,
    dim: u8,
    validation: &ValidationReport,
    structure_labels: &[String],
    color: bool,
) -> String {
    let p = Palette::new(color);
    let mut out = String::new();
    let _ = writeln!(out, "{}ok: {name} (dim {dim}){}", p.bold, p.reset);
    let _ = writeln!(
        out,
        "flags: jacobi {} | unimodular {} | nilpotent {} | solvable {} | completely solvable {}",
        p.yn(validation.jacobi_ok),
        p.yn(validation.unimodular),
        p.yn(validation.nilpotent),
        p.yn(validation.solvable),
        validation.completely_solvable,
    );
    if structure_labels.is_empty() {
        let _ = writeln!(out, "structures: none");
    } else {
        let _ = writeln!(out, "structures: {}", structure_labels.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use akc_core::{analyze, AnalysisOptions};

    fn torus_report() -> AnalysisReport {
        let instance = crate::catalog::instantiate("torus6", &[]).unwrap();
        analyze(instance.algebra, &instance.structures, AnalysisOptions::default()).unwrap()
    }

    #[test]
    fn plain_rendering_has_no_escape_codes() {
        let text = render_report(&torus_report(), false);
        assert!(text.contains("algebra torus6 (dim 6)"));
        assert!(text.contains("betti: 1 6 15 20 15 6 1"));
        assert!(text.contains("h+ = 9 (bound 9)"));
        assert!(!text.contains('\x1b'));
    }

    #[test]
    fn colored_rendering_wraps_verdicts() {
        let text = render_report(&torus_report(), true);
        assert!(text.contains("\x1b[32myes\x1b[0m"));
        assert!(text.contains("\x1b[1m"));
    }
}
