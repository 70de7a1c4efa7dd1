//! Built-in example algebras, exposed through the same pipeline as files.

use akc_core::cealgebra::LieAlgebra;
use akc_core::geometry::{AlmostComplexStructure, Metric};
use akc_core::{Form, Rational, Scalar, StructureInput};
use num::traits::{One, Signed, Zero};

use crate::dsl;
use crate::elaborate::{elaborate, Diagnostic};

pub const NAMES: [&str; 4] = ["iwasawa", "nakamura", "nilmanifold-n", "torus6"];

const IWASAWA: &str = include_str!("../catalog/iwasawa.lie");
const NAKAMURA: &str = include_str!("../catalog/nakamura.lie");
const TORUS6: &str = include_str!("../catalog/torus6.lie");

/// A catalog entry resolved at concrete parameter values.
#[derive(Clone, Debug)]
pub struct Instance {
    pub source: String,
    pub algebra: LieAlgebra,
    pub structures: Vec<StructureInput>,
}

/// One row of the `examples` listing.
pub struct EntryInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub summary: &'static str,
}

pub fn entries() -> Vec<EntryInfo> {
    vec![
        EntryInfo {
            name: "iwasawa",
            params: "",
            summary: "2-step nilpotent, dim 6; almost-Kahler structure on the Iwasawa quotient",
        },
        EntryInfo {
            name: "nakamura",
            params: "",
            summary: "completely solvable, dim 6; complex and almost-Kahler structures",
        },
        EntryInfo {
            name: "nilmanifold-n",
            params: "alpha=2 (any rational except 0, 1)",
            summary: "2-step nilpotent family, dim 6; almost-Kahler for every alpha",
        },
        EntryInfo {
            name: "torus6",
            params: "",
            summary: "abelian, dim 6; flat Kahler torus",
        },
    ]
}

/// The default `.lie` source of every entry, in listing order.
pub fn sources() -> Vec<(&'static str, String)> {
    vec![
        ("iwasawa", IWASAWA.to_string()),
        ("nakamura", NAKAMURA.to_string()),
        ("nilmanifold-n", nilmanifold_source(&default_alpha())),
        ("torus6", TORUS6.to_string()),
    ]
}

fn default_alpha() -> Rational {
    Rational::from_integer(2.into())
}

pub fn instantiate(name: &str, overrides: &[(String, Rational)]) -> Result<Instance, Diagnostic> {
    match name {
        "iwasawa" => fixed_entry(name, IWASAWA, overrides),
        "torus6" => fixed_entry(name, TORUS6, overrides),
        "nakamura" => {
            let mut instance = fixed_entry(name, NAKAMURA, overrides)?;
            instance.structures.insert(0, nakamura_complex_block());
            Ok(instance)
        }
        "nilmanifold-n" => {
            let mut alpha = default_alpha();
            for (param, value) in overrides {
                if param != "alpha" {
                    return Err(Diagnostic::new(
                        "unknown-param",
                        format!("example `nilmanifold-n` has a single parameter `alpha`, not `{param}`"),
                    ));
                }
                alpha = value.clone();
            }
            if alpha.is_zero() || alpha.is_one() {
                return Err(Diagnostic::new(
                    "bad-param",
                    format!("alpha = {alpha} is excluded; the structure equations divide by alpha and alpha - 1"),
                ));
            }
            let source = nilmanifold_source(&alpha);
            from_source(&source, &[])
        }
        other => Err(Diagnostic::new(
            "unknown-example",
            format!("no example named `{other}`; available: {}", NAMES.join(", ")),
        )),
    }
}

fn fixed_entry(
    name: &str,
    source: &str,
    overrides: &[(String, Rational)],
) -> Result<Instance, Diagnostic> {
    if let Some((param, _)) = overrides.first() {
        return Err(Diagnostic::new(
            "unknown-param",
            format!("example `{name}` has no parameters, got `{param}`"),
        ));
    }
    from_source(source, &[])
}

fn from_source(source: &str, overrides: &[(String, Rational)]) -> Result<Instance, Diagnostic> {
    let doc = dsl::parse(source)
        .map_err(|e| Diagnostic::new("parse", format!("catalog source invalid: {e}")))?;
    let elaboration = elaborate(&doc, overrides)?;
    Ok(Instance {
        source: source.to_string(),
        algebra: elaboration.algebra,
        structures: elaboration.structures,
    })
}

/// The integrable complex structure on the Nakamura algebra, with the flat
/// metric and the candidate balanced form (1/4) e1^e2 + e3^e5 + e4^e6.
fn nakamura_complex_block() -> StructureInput {
    let dim = 6;
    let j = pair_structure(dim, &[(1, 2), (3, 5), (4, 6)]);
    let candidate = &(&Form::monomial(dim, &[1, 2], Scalar::from_ratio(1, 4))
        + &Form::monomial(dim, &[3, 5], Scalar::one()))
        + &Form::monomial(dim, &[4, 6], Scalar::one());
    StructureInput {
        label: "complex".into(),
        j: Some(j),
        omega: None,
        metric: Some(Metric::orthonormal(dim)),
        balanced_candidates: vec![candidate],
    }
}

/// J with J e_a = -e_b, J e_b = e_a on the listed coframe pairs.
fn pair_structure(dim: u8, pairs: &[(u8, u8)]) -> AlmostComplexStructure {
    let mut images = vec![Form::zero(dim, 1); dim as usize];
    for &(a, b) in pairs {
        images[a as usize - 1] = Form::monomial(dim, &[b], Scalar::from_int(-1));
        images[b as usize - 1] = Form::monomial(dim, &[a], Scalar::one());
    }
    AlmostComplexStructure::from_coframe_images(images).expect("pairs define an involution")
}

/// The one-parameter nilpotent family as a document at a concrete alpha.
fn nilmanifold_source(alpha: &Rational) -> String {
    let one: Rational = Rational::one();
    let c4 = (alpha * (alpha - &one)).recip();
    let c5 = (alpha - &one).recip();
    let c6 = alpha.recip();
    let mut src = String::new();
    src.push_str(&format!("# One-parameter nilpotent family at alpha = {alpha}.\n"));
    src.push_str("algebra nilmanifold_n {\n");
    src.push_str("  dim = 6;\n");
    src.push_str(&format!("  d e4 = {};\n", dsl_term(&c4, "e2^e3")));
    src.push_str(&format!("  d e5 = {};\n", dsl_term(&c5, "e1^e3")));
    src.push_str(&format!("  d e6 = {};\n", dsl_term(&c6, "e1^e2")));
    src.push_str("  J e1 = -e4;\n  J e2 = -e5;\n  J e3 = -e6;\n");
    src.push_str("  J e4 = e1;\n  J e5 = e2;\n  J e6 = e3;\n");
    src.push_str("  omega = e1^e4 + e2^e5 + e3^e6;\n");
    src.push_str("  metric = orthonormal;\n");
    src.push_str("}\n");
    src
}

fn dsl_term(c: &Rational, wedge: &str) -> String {
    let (sign, magnitude) = if c.is_negative() { ("-", -c.clone()) } else { ("", c.clone()) };
    if magnitude.is_one() {
        format!("{sign}{wedge}")
    } else {
        format!("{sign}{magnitude} {wedge}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use akc_core::parse_rational;

    #[test]
    fn every_catalog_source_parses_and_elaborates() {
        for (name, _) in sources() {
            let instance = instantiate(name, &[]).unwrap();
            assert!(instance.algebra.dim() == 6, "{name} has dim 6");
            assert!(!instance.structures.is_empty(), "{name} carries a structure");
        }
    }

    #[test]
    fn nakamura_gets_both_structures_in_order() {
        let instance = instantiate("nakamura", &[]).unwrap();
        let labels: Vec<&str> = instance.structures.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, ["complex", "almost-kahler"]);
        assert!(instance.structures[0].omega.is_none());
        assert_eq!(instance.structures[0].balanced_candidates.len(), 1);
    }

    #[test]
    fn nilmanifold_alpha_controls_coefficients() {
        let instance =
            instantiate("nilmanifold-n", &[("alpha".into(), parse_rational("3").unwrap())])
                .unwrap();
        // 1/(alpha(alpha-1)) = 1/6 at alpha = 3.
        assert_eq!(
            instance.algebra.structure_equation(4),
            &Form::monomial(6, &[2, 3], Scalar::from_ratio(1, 6))
        );

        let negative =
            instantiate("nilmanifold-n", &[("alpha".into(), parse_rational("1/2").unwrap())])
                .unwrap();
        assert_eq!(
            negative.algebra.structure_equation(4),
            &Form::monomial(6, &[2, 3], Scalar::from_int(-4))
        );
    }

    #[test]
    fn bad_parameters_are_rejected_by_name() {
        let err = instantiate("nilmanifold-n", &[("alpha".into(), parse_rational("1").unwrap())])
            .unwrap_err();
        assert_eq!(err.code, "bad-param");
        let err = instantiate("nilmanifold-n", &[("beta".into(), parse_rational("2").unwrap())])
            .unwrap_err();
        assert_eq!(err.code, "unknown-param");
        let err = instantiate("torus6", &[("alpha".into(), parse_rational("2").unwrap())])
            .unwrap_err();
        assert_eq!(err.code, "unknown-param");
        assert_eq!(instantiate("nope", &[]).unwrap_err().code, "unknown-example");
    }
}
