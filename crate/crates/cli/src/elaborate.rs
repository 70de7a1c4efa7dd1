//! Turns a parsed document into core structures, resolving parameters.

use std::collections::BTreeMap;
use std::fmt;

use akc_core::cealgebra::LieAlgebra;
use akc_core::geometry::{AlmostComplexStructure, AlmostKahlerTriple, GeometryError, Metric, SymplecticForm};
use akc_core::linalg::Matrix;
use akc_core::{Form, Rational, Scalar, StructureInput};
use num::traits::One;

use crate::dsl::{Coeff, Document, Expr, Gens, MetricDecl, Span, Term};

/// A named post-parse error, optionally anchored to a source location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub code: &'static str,
    pub message: String,
    pub span: Option<Span>,
}

impl Diagnostic {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Diagnostic { code, message: message.into(), span: None }
    }

    pub fn at(code: &'static str, message: impl Into<String>, span: Span) -> Self {
        Diagnostic { code, message: message.into(), span: Some(span) }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)?;
        if let Some(span) = self.span {
            write!(f, " ({span})")?;
        }
        Ok(())
    }
}

impl std::error::Error for Diagnostic {}

/// Everything a document denotes once parameters are substituted.
#[derive(Clone, Debug)]
pub struct Elaboration {
    pub algebra: LieAlgebra,
    pub structures: Vec<StructureInput>,
}

/// Resolves a document against parameter overrides. Every override must name
/// a declared parameter; structure data is cross-validated so the analysis
/// itself can assume well-formed inputs.
pub fn elaborate(doc: &Document, overrides: &[(String, Rational)]) -> Result<Elaboration, Diagnostic> {
    let env = param_env(doc, overrides)?;
    let dim = doc.dim.node;

    let mut diffs = vec![Form::zero(dim, 2); dim as usize];
    for (gen, rhs) in &doc.d_equations {
        diffs[gen.node as usize - 1] = form_from_expr(dim, rhs, &env)?;
    }
    let algebra = LieAlgebra::new(doc.name.clone(), dim, diffs)
        .map_err(|e| Diagnostic::new("algebra", e.to_string()))?;
    algebra
        .check_jacobi()
        .map_err(|e| Diagnostic::new("jacobi", e.to_string()))?;

    let j = almost_complex(doc, dim, &env)?;
    let omega = doc.omega.as_ref().map(|expr| form_from_expr(dim, expr, &env)).transpose()?;
    let metric = match &doc.metric {
        None => None,
        Some(MetricDecl::Orthonormal) => Some(Metric::orthonormal(dim)),
        Some(MetricDecl::Gram(expr)) => {
            let gram = gram_from_expr(dim, expr, &env)?;
            Some(Metric::new(gram).map_err(|e| {
                let code = match e {
                    GeometryError::NotPositiveDefinite => "metric-not-positive",
                    GeometryError::NonSquareVolume { .. } => "metric-volume",
                    _ => "metric-invalid",
                };
                Diagnostic::new(code, e.to_string())
            })?)
        }
    };

    cross_validate(&algebra, &j, &omega, &metric)?;

    let structures = match structure_label(&j, &omega, &metric) {
        None => Vec::new(),
        Some(label) => vec![StructureInput {
            label,
            j,
            omega,
            metric,
            balanced_candidates: Vec::new(),
        }],
    };

    Ok(Elaboration { algebra, structures })
}

fn param_env(
    doc: &Document,
    overrides: &[(String, Rational)],
) -> Result<BTreeMap<String, Rational>, Diagnostic> {
    let mut env: BTreeMap<String, Rational> =
        doc.params.iter().map(|(name, value)| (name.node.clone(), value.clone())).collect();
    for (name, value) in overrides {
        match env.get_mut(name) {
            Some(slot) => *slot = value.clone(),
            None => {
                return Err(Diagnostic::new(
                    "unknown-param",
                    format!("algebra `{}` declares no parameter named `{name}`", doc.name),
                ));
            }
        }
    }
    Ok(env)
}

fn term_scalar(term: &Term, env: &BTreeMap<String, Rational>) -> Result<Scalar, Diagnostic> {
    let magnitude = match &term.coeff {
        None => Rational::one(),
        Some(Coeff::Rat(r)) => r.clone(),
        Some(Coeff::Param(name)) => env.get(&name.node).cloned().ok_or_else(|| {
            Diagnostic::at(
                "unknown-param",
                format!("parameter `{}` is not declared", name.node),
                name.span,
            )
        })?,
    };
    let signed = if term.negative { -magnitude } else { magnitude };
    Ok(Scalar::from_rational(signed))
}

fn form_from_expr(
    dim: u8,
    expr: &Expr,
    env: &BTreeMap<String, Rational>,
) -> Result<Form, Diagnostic> {
    let degree = match expr.terms.first().map(|t| &t.gens) {
        Some(Gens::One(_)) => 1,
        _ => 2,
    };
    let mut acc = Form::zero(dim, degree);
    for term in &expr.terms {
        let c = term_scalar(term, env)?;
        let monomial = match &term.gens {
            Gens::One(a) => Form::monomial(dim, &[a.node], c),
            Gens::Wedge(a, b) => Form::monomial(dim, &[a.node, b.node], c),
            Gens::Sym(..) => unreachable!("symmetric products only occur in metric position"),
        };
        acc = &acc + &monomial;
    }
    Ok(acc)
}

fn gram_from_expr(
    dim: u8,
    expr: &Expr,
    env: &BTreeMap<String, Rational>,
) -> Result<Matrix, Diagnostic> {
    let n = dim as usize;
    let mut gram = Matrix::zero(n, n);
    for term in &expr.terms {
        let c = term_scalar(term, env)?;
        let Gens::Sym(a, b) = &term.gens else {
            unreachable!("metric expressions contain only symmetric products")
        };
        let (i, j) = (a.node as usize - 1, b.node as usize - 1);
        gram.set(i, j, gram.get(i, j) + &c);
        if i != j {
            gram.set(j, i, gram.get(j, i) + &c);
        }
    }
    Ok(gram)
}

fn almost_complex(
    doc: &Document,
    dim: u8,
    env: &BTreeMap<String, Rational>,
) -> Result<Option<AlmostComplexStructure>, Diagnostic> {
    if doc.j_lines.is_empty() {
        return Ok(None);
    }
    let mut images: Vec<Option<Form>> = vec![None; dim as usize];
    for (gen, rhs) in &doc.j_lines {
        images[gen.node as usize - 1] = Some(form_from_expr(dim, rhs, env)?);
    }
    let missing: Vec<String> = images
        .iter()
        .enumerate()
        .filter(|(_, image)| image.is_none())
        .map(|(k, _)| format!("e{}", k + 1))
        .collect();
    if !missing.is_empty() {
        return Err(Diagnostic::new(
            "j-underdetermined",
            format!("J images missing for {}", missing.join(", ")),
        ));
    }
    let images = images.into_iter().map(Option::unwrap).collect();
    let j = AlmostComplexStructure::from_coframe_images(images).map_err(|e| match e {
        GeometryError::FrameNotAntiInvolution => {
            Diagnostic::new("j-square", "J^2 = -Id fails for the given images")
        }
        other => Diagnostic::new("j-invalid", other.to_string()),
    })?;
    Ok(Some(j))
}

fn cross_validate(
    algebra: &LieAlgebra,
    j: &Option<AlmostComplexStructure>,
    omega: &Option<Form>,
    metric: &Option<Metric>,
) -> Result<(), Diagnostic> {
    if let Some(w) = omega {
        SymplecticForm::new(algebra, w.clone()).map_err(|e| match e {
            GeometryError::NotSymplectic { reason } if reason == "not closed" => {
                Diagnostic::new("omega-not-closed", "omega is not closed")
            }
            GeometryError::NotSymplectic { reason } if reason == "degenerate" => {
                Diagnostic::new("omega-degenerate", "omega is degenerate")
            }
            other => Diagnostic::new("omega-invalid", other.to_string()),
        })?;
    }
    if let (Some(j), Some(w)) = (j, omega) {
        let triple = match metric {
            Some(m) => AlmostKahlerTriple::with_metric(algebra, j.clone(), w.clone(), m.clone()),
            None => AlmostKahlerTriple::new(algebra, j.clone(), w.clone()),
        };
        triple.map_err(|e| match e {
            GeometryError::NotJInvariant => {
                Diagnostic::new("omega-not-compatible", "omega is not J-invariant")
            }
            GeometryError::NotPositiveDefinite => {
                Diagnostic::new("omega-not-taming", "omega(., J.) is not positive definite")
            }
            GeometryError::IncompatibleMetric => {
                Diagnostic::new("metric-incompatible", "declared metric differs from omega(., J.)")
            }
            other => Diagnostic::new("structure-invalid", other.to_string()),
        })?;
    }
    Ok(())
}

fn structure_label(
    j: &Option<AlmostComplexStructure>,
    omega: &Option<Form>,
    metric: &Option<Metric>,
) -> Option<String> {
    match (j.is_some(), omega.is_some(), metric.is_some()) {
        (false, false, false) => None,
        (true, true, _) => Some("almost-kahler".into()),
        (has_j, has_omega, has_metric) => {
            let mut parts = Vec::new();
            if has_j {
                parts.push("J");
            }
            if has_omega {
                parts.push("omega");
            }
            if has_metric {
                parts.push("metric");
            }
            Some(parts.join("+"))
        }
    }
}
