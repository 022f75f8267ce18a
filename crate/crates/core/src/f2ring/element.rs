use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use super::Monomial;

/// Laurent polynomial in `q` over F₂, stored as its set of exponents.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentF2(BTreeSet<i64>);

impl LaurentF2 {
    pub fn zero() -> Self {
        LaurentF2(BTreeSet::new())
    }

    pub fn monomial(e: i64) -> Self {
        let mut s = BTreeSet::new();
        s.insert(e);
        LaurentF2(s)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponents in ascending order.
    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn toggle(&mut self, e: i64) {
        if !self.0.remove(&e) {
            self.0.insert(e);
        }
    }

    pub fn add_assign(&mut self, other: &LaurentF2) {
        for &e in &other.0 {
            self.toggle(e);
        }
    }

    pub fn shifted(&self, k: i64) -> LaurentF2 {
        LaurentF2(self.0.iter().map(|e| e + k).collect())
    }

    pub fn mul(&self, other: &LaurentF2) -> LaurentF2 {
        let mut out = LaurentF2::zero();
        for a in &self.0 {
            for b in &other.0 {
                out.toggle(a + b);
            }
        }
        out
    }

    /// Units of `F₂[q, q⁻¹]` are exactly the monomials.
    pub fn unit_exponent(&self) -> Option<i64> {
        (self.0.len() == 1).then(|| *self.0.first().unwrap())
    }
}

impl FromIterator<i64> for LaurentF2 {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut l = LaurentF2::zero();
        for e in iter {
            l.toggle(e);
        }
        l
    }
}

impl fmt::Debug for LaurentF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Element of a quotient ring tensored with `F₂[q, q⁻¹]`: a map from
/// standard monomials to Laurent coefficients.
///
/// `m * q^e` has codimension `deg(m) - e` (in units of the generator degree).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct QHElement {
    coeffs: BTreeMap<Monomial, LaurentF2>,
}

impl QHElement {
    pub fn zero() -> Self {
        QHElement::default()
    }

    pub fn term(m: Monomial, e: i64) -> Self {
        let mut x = QHElement::zero();
        x.toggle(m, e);
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn toggle(&mut self, m: Monomial, e: i64) {
        let c = self.coeffs.entry(m.clone()).or_default();
        c.toggle(e);
        if c.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn add_assign(&mut self, other: &QHElement) {
        for (m, e) in other.terms() {
            self.toggle(m.clone(), e);
        }
    }

    pub fn add(&self, other: &QHElement) -> QHElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i64) -> QHElement {
        QHElement {
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), c.shifted(k))).collect(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> LaurentF2 {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> impl Iterator<Item = (&Monomial, &LaurentF2)> + '_ {
        self.coeffs.iter()
    }

    /// `(monomial, q-exponent)` pairs, monomials ascending.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.coeffs.iter().flat_map(|(m, c)| c.exponents().map(move |e| (m, e)))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.values().map(LaurentF2::len).sum()
    }

    /// Common value of `deg(m) - e` over all terms, if there is one.
    pub fn homogeneous_cod(&self) -> Option<i64> {
        let mut cods = self.terms().map(|(m, e)| i64::from(m.x_degree()) - e);
        let c = cods.next()?;
        cods.all(|x| x == c).then_some(c)
    }

    pub fn max_q_exponent(&self) -> Option<i64> {
        self.coeffs.values().filter_map(|c| c.exponents().next_back()).max()
    }

    pub fn monomials(&self) -> Vec<&Monomial> {
        self.coeffs.keys().collect()
    }
}

impl fmt::Display for QHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().rev() {
            for e in c.exponents().rev() {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{m}")?;
                match e {
                    0 => {}
                    1 => f.write_str("*q")?,
                    _ => write!(f, "*q^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
