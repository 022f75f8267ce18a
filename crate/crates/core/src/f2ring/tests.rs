use alloc::vec;
use alloc::vec::Vec;

use super::*;

fn m(e: &[u32], t: u32) -> Monomial {
    Monomial::new(e.to_vec(), t)
}

fn p(nvars: usize, ms: &[(&[u32], u32)]) -> F2Poly {
    F2Poly::from_monomials(nvars, ms.iter().map(|(e, t)| m(e, *t)))
}

// Two-variable model with Y = X_1, X = X_2:
// Y^2 + XY + t^2 and X^3 + Y t^2.
fn blowup_ring() -> QuotientRing {
    QuotientRing::new(
        2,
        &[
            p(2, &[(&[2, 0], 0), (&[1, 1], 0), (&[0, 0], 2)]),
            p(2, &[(&[0, 3], 0), (&[1, 0], 2)]),
        ],
    )
    .unwrap()
}

const Y: [u32; 2] = [1, 0];
const X: [u32; 2] = [0, 1];

#[test]
fn normal_forms_in_dehomogenized_ring() {
    let r = blowup_ring();
    // Y^2 -> XY + 1
    assert_eq!(
        r.normal_form(&p(2, &[(&[2, 0], 0)])),
        p(2, &[(&[1, 1], 0), (&[0, 0], 0)])
    );
    // X^3 -> Y
    assert_eq!(r.normal_form(&p(2, &[(&[0, 3], 0)])), p(2, &[(&Y, 0)]));
    for b in r.standard_basis() {
        let f = F2Poly::from_monomial(b.clone());
        assert_eq!(r.normal_form(&f), f);
    }
}

#[test]
fn blowup_standard_basis() {
    let r = blowup_ring();
    let expected = vec![
        m(&[0, 0], 0),
        m(&X, 0),
        m(&Y, 0),
        m(&[0, 2], 0),
        m(&[1, 1], 0),
        m(&[1, 2], 0),
    ];
    assert_eq!(r.standard_basis(), expected.as_slice());
    assert_eq!(r.hilbert_function(), [1, 2, 2, 1]);
    assert_eq!(r.dim(), r.hilbert_function().iter().sum::<usize>());
}

#[test]
fn rehomogenize_examples() {
    let r = blowup_ring();
    let f = p(2, &[(&[1, 1], 0), (&[0, 0], 0)]);
    let e = r.rehomogenize(&f, 2);
    assert_eq!(e.coefficient(&m(&[1, 1], 0)), LaurentF2::monomial(0));
    assert_eq!(e.coefficient(&m(&[0, 0], 0)), LaurentF2::monomial(-2));
    let e = r.rehomogenize(&p(2, &[(&Y, 0)]), 3);
    assert_eq!(e, QHElement::term(m(&Y, 0), -2));
    let e = r.rehomogenize(&p(2, &[(&[1, 2], 0)]), 3);
    assert_eq!(e, QHElement::term(m(&[1, 2], 0), 0));
}

#[test]
fn cp3_single_variable() {
    // F2[X]/(X^4 + t^4)
    let r = QuotientRing::new(1, &[p(1, &[(&[4], 0), (&[0], 4)])]).unwrap();
    let basis: Vec<Monomial> = (0..4).map(|k| m(&[k], 0)).collect();
    assert_eq!(r.standard_basis(), basis.as_slice());
    assert_eq!(r.hilbert_function(), [1, 1, 1, 1]);
}

#[test]
fn zero_ideal_in_no_variables() {
    let r = QuotientRing::new(0, &[]).unwrap();
    assert_eq!(r.standard_basis(), &[Monomial::one(0)]);
    assert_eq!(r.hilbert_function(), [1]);
}

#[test]
fn infinite_dimensional_quotient() {
    let err = QuotientRing::new(2, &[p(2, &[(&[2, 0], 0)])]).unwrap_err();
    assert_eq!(err, RingError::InfiniteDimensional { variable: 1 });
}

#[test]
fn products_with_q_bookkeeping() {
    let r = blowup_ring();
    let y = QHElement::term(m(&Y, 0), 0);
    let x = QHElement::term(m(&X, 0), 0);
    // Y*Y = XY + q^-2
    let mut expected = QHElement::term(m(&[1, 1], 0), 0);
    expected.toggle(m(&[0, 0], 0), -2);
    assert_eq!(r.multiply(&y, &y), expected);
    // X*X*X = Y q^-2
    let x3 = r.multiply(&r.multiply(&x, &x), &x);
    assert_eq!(x3, QHElement::term(m(&Y, 0), -2));
    assert_eq!(r.multiply(&r.unit(), &x3), x3);
}

#[test]
fn saturated_path_agrees_on_low_degree_monomials() {
    let r = blowup_ring();
    for a in 0..=6u32 {
        for b in 0..=6 - a {
            let mono = m(&[a, b], 0);
            let cod = mono.cod();
            let direct = r.rehomogenize(&r.normal_form(&F2Poly::from_monomial(mono.clone())), i64::from(cod));
            let hom = r.homogeneous_normal_form(&F2Poly::from_monomial(mono));
            assert_eq!(hom.homogeneous_cod().unwrap_or(cod), cod);
            assert_eq!(r.element_from_poly(&hom), direct);
            assert_eq!(r.to_poly(&direct, 0).unwrap(), hom);
        }
    }
}
