use std::fmt::Write;

use super::{Coeff, Document, Expr, Gens, MetricDecl};

/// Canonical rendering: `parse(print(parse(t))) == parse(t)` for every
/// valid `t`, and `print` is the identity on already-canonical text.
pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} {{", doc.name);
    let _ = writeln!(out, "  dim = {};", doc.dim.node);
    for (name, value) in &doc.params {
        let _ = writeln!(out, "  param {} = {};", name.node, value);
    }
    for (gen, rhs) in &doc.d_equations {
        let _ = writeln!(out, "  d e{} = {};", gen.node, expr_string(rhs));
    }
    for (gen, rhs) in &doc.j_lines {
        let _ = writeln!(out, "  J e{} = {};", gen.node, expr_string(rhs));
    }
    if let Some(omega) = &doc.omega {
        let _ = writeln!(out, "  omega = {};", expr_string(omega));
    }
    match &doc.metric {
        Some(MetricDecl::Orthonormal) => {
            let _ = writeln!(out, "  metric = orthonormal;");
        }
        Some(MetricDecl::Gram(gram)) => {
            let _ = writeln!(out, "  metric = {};", expr_string(gram));
        }
        None => {}
    }
    out.push_str("}\n");
    out
}

fn expr_string(expr: &Expr) -> String {
    let mut out = String::new();
    for (i, term) in expr.terms.iter().enumerate() {
        if i == 0 {
            if term.negative {
                out.push('-');
            }
        } else if term.negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match &term.coeff {
            Some(Coeff::Rat(r)) => {
                let _ = write!(out, "{r} ");
            }
            Some(Coeff::Param(p)) => {
                let _ = write!(out, "{} ", p.node);
            }
            None => {}
        }
        match &term.gens {
            Gens::One(a) => {
                let _ = write!(out, "e{}", a.node);
            }
            Gens::Wedge(a, b) => {
                let _ = write!(out, "e{}^e{}", a.node, b.node);
            }
            Gens::Sym(a, b) => {
                let _ = write!(out, "e{}*e{}", a.node, b.node);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    #[test]
    fn printing_reparses_to_the_same_document() {
        let sources = [
            "algebra t2 { dim = 2; }",
            "algebra h { dim = 4; param t = 3/2; d e3 = t e1^e2 - 2 e1^e4; \
             J e1 = -e2; J e2 = e1; omega = e1^e2 + e3^e4; metric = orthonormal; }",
            "algebra g { dim = 3; d e3 = 5/10 e1^e2; metric = 4 e1*e1 + e2*e2 + e3*e3 - e1*e2; }",
        ];
        for src in sources {
            let doc = parse(src).unwrap();
            let printed = print(&doc);
            let reparsed = parse(&printed).unwrap();
            assert_eq!(reparsed, doc, "round-trip failed for {src}");
            // canonical text is a fixed point
            assert_eq!(print(&reparsed), printed);
        }
    }

    #[test]
    fn coefficients_render_reduced() {
        let doc = parse("algebra g { dim = 3; d e3 = 5/10 e1^e2; }").unwrap();
        assert!(print(&doc).contains("d e3 = 1/2 e1^e2;"));
    }
}
