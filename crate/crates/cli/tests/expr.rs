use proptest::prelude::*;
use toric_qh::expr::{ElementExpr, Factor, Term};
use toric_qh_core::polytope::{builtin, DelzantPolytope};
use toric_qh_core::qh::{Flavor, QhRing, Space};

const CORPUS: &[&str] = &[
    "1", "L", "q", "q^0", "q^1", "q^-1", "q^-12", "q^7", "X1", "X5", "X12", "X1^0", "X1^1", "X1^2",
    "X3^10", "X1*X2", "X1*X1", "X1*q", "X1*q^-2", "L*q^-2", "1*q^3", "X1 + X2", "X1+X2+X3",
    "X1*X4 + L*q^-2", "X1^2*X4*q^3", "X1^2*X4*q^3 + X4*q", "X4*q + X1^2*X4*q^3", "L + L", "1 + 1 + 1",
    "q*q*q", "q^-1*q", "X2*X3*X4*X5", "X5^3 + X4*q^-2", "X4^2 + X4*X5 + q^-2", "L*X1", "X1*L*q^-1",
    "  X1  *  X2  ", "X1^2 *q^ -3", "X1*X2*X3*X4*X5*q^-5 + 1", "1*1", "L*L", "X10^3*q^-30",
    "X1 + X1*q + X1*q^2 + X1*q^3", "q^-1 + q^-2 + q^-3", "X3*X4 + q^-2", "X1*X2*X5 + X4*q^-2",
    "Y4*Q", "M*Q^-2", "Y1^2*Y4*Q^3", "X2^3*X1", "X7*q^100", "X1*X2 + X2*X3 + X3*X1",
];

#[test]
fn corpus_round_trip() {
    assert!(CORPUS.len() >= 50);
    for src in CORPUS {
        let e = ElementExpr::parse(src).unwrap_or_else(|err| panic!("{src}: {err}"));
        let printed = e.to_string();
        assert_eq!(ElementExpr::parse(&printed).unwrap(), e, "{src} -> {printed}");
    }
}

#[test]
fn negative_q_powers_survive() {
    let e = ElementExpr::parse("X1*q^-3").unwrap();
    assert_eq!(e.0[0].0[1], Factor::Q(-3));
    assert_eq!(e.to_string(), "X1*q^-3");
}

#[test]
fn evaluation_in_blowup() {
    let p = DelzantPolytope::new(builtin::blowup_cp3()).unwrap();
    let r = QhRing::build(&p, Space::L, Flavor::Quantum).unwrap();
    let eval = |s: &str| ElementExpr::parse(s).unwrap().evaluate(&r).unwrap();
    assert_eq!(r.render(&eval("X4*X4")), "X1*X4 + L*q^-2");
    assert_eq!(r.render(&eval("X1^3")), "X4*q^-2");
    assert_eq!(eval("X2"), eval("X1 + X1 + X5"));
    assert!(eval("X2 + X5").is_zero());
    assert_eq!(eval("L"), r.unit());
    assert!(eval("X1 + X1").is_zero());
    assert!(ElementExpr::parse("X6").unwrap().evaluate(&r).is_err());
}

fn factor() -> impl Strategy<Value = Factor> {
    prop_oneof![
        (1usize..20, 0u32..6).prop_map(|(index, exp)| Factor::Var { index, exp }),
        (-20i64..20).prop_map(Factor::Q),
        Just(Factor::Fundamental),
        Just(Factor::One),
    ]
}

fn expr() -> impl Strategy<Value = ElementExpr> {
    proptest::collection::vec(proptest::collection::vec(factor(), 1..5).prop_map(Term), 1..5).prop_map(ElementExpr)
}

proptest! {
    #[test]
    fn print_parse_round_trip(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(ElementExpr::parse(&printed).unwrap(), e);
    }
}
