//! Printing a document and parsing it back must be the identity, and the
//! printed text must be a fixed point of print-parse-print.

use akc_cli::dsl::{self, Coeff, Document, Expr, Gens, MetricDecl, Span, Spanned, Term};
use akc_core::Rational;
use num::traits::One;
use proptest::prelude::*;

fn sp<T>(node: T) -> Spanned<T> {
    Spanned { node, span: Span { line: 1, col: 1 } }
}

/// Non-negative, as the grammar keeps signs outside coefficients.
fn arb_rational() -> impl Strategy<Value = Rational> {
    (0i64..=20, 1i64..=9).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// Coefficient 1 is represented as "no coefficient" after parsing, so the
/// generator never produces it explicitly.
fn arb_coeff_rational() -> impl Strategy<Value = Rational> {
    arb_rational().prop_filter("1 is canonicalized away", |r| !r.is_one())
}

/// Parameter names must not look like generators (`e` + digits), so stick
/// to digit-free identifiers.
fn arb_param_name() -> impl Strategy<Value = String> {
    "[a-z][a-z_]{0,3}"
}

fn arb_coeff() -> impl Strategy<Value = Option<Coeff>> {
    prop_oneof![
        2 => Just(None),
        2 => arb_coeff_rational().prop_map(|r| Some(Coeff::Rat(r))),
        1 => arb_param_name().prop_map(|name| Some(Coeff::Param(sp(name)))),
    ]
}

#[derive(Clone, Copy)]
enum Kind {
    One,
    Wedge,
    Sym,
}

fn arb_term(dim: u8, kind: Kind) -> impl Strategy<Value = Term> {
    let gens = match kind {
        Kind::One => (1..=dim).prop_map(|a| Gens::One(sp(a))).boxed(),
        Kind::Wedge => (1..=dim, 1..=dim)
            .prop_map(|(a, b)| Gens::Wedge(sp(a), sp(b)))
            .boxed(),
        Kind::Sym => (1..=dim, 1..=dim)
            .prop_map(|(a, b)| Gens::Sym(sp(a), sp(b)))
            .boxed(),
    };
    (any::<bool>(), arb_coeff(), gens)
        .prop_map(|(negative, coeff, gens)| Term { negative, coeff, gens })
}

fn arb_expr(dim: u8, kind: Kind) -> impl Strategy<Value = Expr> {
    prop::collection::vec(arb_term(dim, kind), 1..=3).prop_map(|terms| Expr { terms })
}

fn arb_document() -> impl Strategy<Value = Document> {
    ("[a-z][a-z0-9_]{0,5}", 2u8..=8).prop_flat_map(|(name, dim)| {
        (
            prop::collection::btree_map(arb_param_name(), arb_rational(), 0..=2),
            prop::collection::btree_map(1..=dim, arb_expr(dim, Kind::Wedge), 0..=3),
            prop::collection::btree_map(1..=dim, arb_expr(dim, Kind::One), 0..=2),
            prop::option::of(arb_expr(dim, Kind::Wedge)),
            prop::option::of(prop_oneof![
                Just(MetricDecl::Orthonormal),
                arb_expr(dim, Kind::Sym).prop_map(MetricDecl::Gram),
            ]),
        )
            .prop_map(move |(params, d_equations, j_lines, omega, metric)| Document {
                name: name.clone(),
                dim: sp(dim),
                params: params.into_iter().map(|(n, v)| (sp(n), v)).collect(),
                d_equations: d_equations.into_iter().map(|(g, e)| (sp(g), e)).collect(),
                j_lines: j_lines.into_iter().map(|(g, e)| (sp(g), e)).collect(),
                omega,
                metric,
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn print_then_parse_is_identity(doc in arb_document()) {
        let printed = dsl::print(&doc);
        let reparsed = dsl::parse(&printed)
            .unwrap_or_else(|e| panic!("printed document must parse: {e}\n{printed}"));
        prop_assert_eq!(&reparsed, &doc);
        prop_assert_eq!(dsl::print(&reparsed), printed);
    }
}
