use super::checks::{balanced_check, bounds_check};
use super::harmonic::{geometric_formality, pure_type_harmonic_basis};
use super::lefschetz::{hard_lefschetz, lefschetz_type_property};
use super::report::*;
use super::subgroups::pure_full;
use super::{AnalysisError, TypeSet};
use crate::cealgebra::{CeComplex, LieAlgebra, SolvabilityHint};
use crate::exterior::{Form, Scalar};
use crate::geometry::{AlmostComplexStructure, AlmostKahlerTriple, Metric, SymplecticForm};

/// One geometric structure to analyze on the algebra. Any subset of the
/// three ingredients may be present; each unlocks the checks it supports.
#[derive(Clone, Debug, Default)]
pub struct StructureInput {
    pub label: String,
    pub j: Option<AlmostComplexStructure>,
    pub omega: Option<Form>,
    pub metric: Option<Metric>,
    /// Real positive (1,1)-forms to test for the balanced condition.
    pub balanced_candidates: Vec<Form>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalysisOptions {
    /// Also decompose H^k by type for this degree.
    pub extra_degree: Option<usize>,
}

/// Run every applicable check and assemble the serializable report.
pub fn analyze(
    algebra: LieAlgebra,
    structures: &[StructureInput],
    options: AnalysisOptions,
) -> Result<AnalysisReport, AnalysisError> {
    let validation = algebra.validate()?;
    let name = algebra.name().to_string();
    let dim = algebra.dim();
    let cx = CeComplex::new(algebra)?;

    let derham = if validation.nilpotent {
        "exact"
    } else if validation.completely_solvable == SolvabilityHint::Yes {
        "hint"
    } else {
        "invariant-only"
    };

    let massey = massey_scan(&cx);

    let mut structure_reports = Vec::new();
    for input in structures {
        structure_reports.push(structure_report(&cx, input, &massey)?);
    }

    let degree_analysis = options.extra_degree.map(|k| degree_report(&cx, structures, k));

    Ok(AnalysisReport {
        algebra: name,
        dim,
        flags: FlagsReport {
            jacobi: validation.jacobi_ok,
            unimodular: validation.unimodular,
            nilpotent: validation.nilpotent,
            solvable: validation.solvable,
            completely_solvable_hint: validation.completely_solvable.to_string(),
        },
        derham_identification: derham.to_string(),
        betti: cx.betti_numbers(),
        structures: structure_reports,
        degree_analysis,
    })
}

/// Triple Massey products over ordered triples of distinct degree-1 section
/// classes whose two cup products vanish. Structure-independent, so it is
/// computed once and repeated in each structure block.
fn massey_scan(cx: &CeComplex) -> Vec<MasseyReport> {
    let h1 = cx.section_representatives(1);
    let mut out = Vec::new();
    let zero = |v: &[Scalar]| v.iter().all(Scalar::is_zero);
    for (i, a) in h1.iter().enumerate() {
        for (j, b) in h1.iter().enumerate() {
            if j == i {
                continue;
            }
            for (k, c) in h1.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                let Some(ab) = cx.cup(a, b) else { continue };
                let Some(bc) = cx.cup(b, c) else { continue };
                if !zero(&ab) || !zero(&bc) {
                    continue;
                }
                let triple = cx.massey_triple(a, b, c).expect("cups vanish");
                out.push(MasseyReport {
                    a: a.to_string(),
                    b: b.to_string(),
                    c: c.to_string(),
                    vanishes: triple.vanishes,
                    representative: triple.representative.to_string(),
                    indeterminacy_dim: triple.indeterminacy.dim(),
                });
            }
        }
    }
    out
}

fn structure_report(
    cx: &CeComplex,
    input: &StructureInput,
    massey: &[MasseyReport],
) -> Result<StructureReport, AnalysisError> {
    let mut report = StructureReport {
        label: input.label.clone(),
        integrable: None,
        h_plus: None,
        h_minus: None,
        pure: None,
        full: None,
        purity_degree4: None,
        lefschetz2: None,
        hard_lefschetz: None,
        bounds: None,
        harmonic_pure_basis: None,
        geometric_formality: None,
        massey: massey.to_vec(),
        balanced: Vec::new(),
    };

    // the almost-Kähler triple when both J and ω are present
    let triple = match (&input.j, &input.omega) {
        (Some(j), Some(omega)) => Some(match &input.metric {
            Some(metric) => AlmostKahlerTriple::with_metric(
                cx.algebra(),
                j.clone(),
                omega.clone(),
                metric.clone(),
            )?,
            None => AlmostKahlerTriple::new(cx.algebra(), j.clone(), omega.clone())?,
        }),
        _ => None,
    };
    let metric = match (&input.metric, &triple) {
        (Some(m), _) => Some(m.clone()),
        (None, Some(t)) => Some(t.metric().clone()),
        (None, None) => None,
    };

    if let Some(j) = &input.j {
        report.integrable = Some(j.is_integrable(cx));
        let half = cx.algebra().dim() as usize / 2;

        let deg2 = pure_full(cx, j, &[TypeSet::invariant2(), TypeSet::anti_invariant2()]);
        report.h_plus = Some(deg2.subgroups()[0].dim());
        report.h_minus = Some(deg2.subgroups()[1].dim());
        report.pure = Some(deg2.is_pure());
        report.full = Some(deg2.is_full());

        let parts4 = TypeSet::partition(4, half);
        report.purity_degree4 = Some(pure_full(cx, j, &parts4).is_pure());

        let b = bounds_check(cx, j);
        report.bounds = Some(BoundsReport {
            h_plus: b.h_plus,
            h_plus_bound: b.h_plus_bound,
            h_minus: b.h_minus,
            h_minus_bound: b.h_minus_bound,
            ok: b.ok(),
        });

        for h in &input.balanced_candidates {
            let verdict = balanced_check(cx, j, h)?;
            report.balanced.push(BalancedReport {
                form: h.to_string(),
                d_nonzero: verdict.d_nonzero,
                d_power_zero: verdict.d_power_zero,
                balanced: verdict.ok(),
            });
        }
    }

    if let Some(omega) = &input.omega {
        let symplectic = SymplecticForm::new(cx.algebra(), omega.clone())?;
        report.hard_lefschetz = Some(hard_lefschetz(cx, &symplectic));
    }

    if let Some(t) = &triple {
        report.lefschetz2 = Some(lefschetz_type_property(cx, t).holds());
    }

    if let (Some(j), Some(m)) = (&input.j, &metric) {
        let parts = [TypeSet::invariant2(), TypeSet::anti_invariant2()];
        let basis = pure_type_harmonic_basis(cx, m, j, &parts);
        report.harmonic_pure_basis = Some(HarmonicPureBasisReport {
            exists: basis.is_some(),
            basis: basis.map(|forms| forms.iter().map(Form::to_string).collect()),
        });
    }

    if let Some(m) = &metric {
        let verdict = geometric_formality(cx, m);
        report.geometric_formality = Some(FormalityReport {
            holds: verdict.holds(),
            witness: verdict.witness().map(|(a, b)| [a.to_string(), b.to_string()]),
        });
    }

    Ok(report)
}

fn degree_report(cx: &CeComplex, structures: &[StructureInput], k: usize) -> DegreeReport {
    let n = cx.algebra().dim() as usize;
    if k > n {
        return DegreeReport { degree: k, betti: 0, structures: Vec::new() };
    }
    let mut blocks = Vec::new();
    for input in structures {
        let Some(j) = &input.j else { continue };
        let parts = TypeSet::partition(k, n / 2);
        if parts.is_empty() {
            continue;
        }
        let res = pure_full(cx, j, &parts);
        blocks.push(DegreeStructureReport {
            label: input.label.clone(),
            subgroups: res
                .subgroups()
                .iter()
                .map(|g| SubgroupDimReport { types: g.type_set().to_string(), dim: g.dim() })
                .collect(),
            pure: res.is_pure(),
            full: res.is_full(),
        });
    }
    DegreeReport { degree: k, betti: cx.betti(k), structures: blocks }
}
