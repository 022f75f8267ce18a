use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul};

use super::Monomial;

/// Polynomial over F₂: a set of monomials, each with coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Poly {
    nvars: usize,
    terms: BTreeSet<Monomial>,
}

impl F2Poly {
    pub fn zero(nvars: usize) -> Self {
        F2Poly {
            nvars,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = Self::zero(m.nvars());
        p.terms.insert(m);
        p
    }

    /// Sum of the monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(nvars: usize, ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero(nvars);
        for m in ms {
            p.toggle(m);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_monomial(Monomial::var(nvars, i))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + '_ {
        self.terms.iter().rev()
    }

    /// Adds a single monomial (F₂: inserts or cancels).
    pub fn toggle(&mut self, m: Monomial) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> F2Poly {
        F2Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    /// `Some(c)` when every term has codimension `c`; the zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_cod(&self) -> Option<u32> {
        let c = self.terms.first()?.cod();
        self.terms.iter().all(|m| m.cod() == c).then_some(c)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_cod().is_some()
    }

    /// Sets `t = 1`, cancelling terms that collide.
    pub fn dehomogenize(&self) -> F2Poly {
        F2Poly::from_monomials(self.nvars, self.terms.iter().map(Monomial::dehomogenize))
    }

    /// Divides out the largest power of `t` dividing every term.
    pub fn strip_t(&self) -> F2Poly {
        let k = self.terms.iter().map(Monomial::tdeg).min().unwrap_or(0);
        F2Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|m| m.with_t(m.tdeg() - k)).collect(),
        }
    }

    /// Homogenizes against codimension `cod` by padding each term with `t`.
    /// Panics if some term already exceeds `cod`.
    pub fn homogenize_to(&self, cod: u32) -> F2Poly {
        F2Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|m| {
                    assert!(m.x_degree() <= cod, "term above target codimension");
                    m.with_t(cod - m.x_degree())
                })
                .collect(),
        }
    }
}

impl AddAssign<&F2Poly> for F2Poly {
    fn add_assign(&mut self, rhs: &F2Poly) {
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl Add for &F2Poly {
    type Output = F2Poly;
    fn add(self, rhs: &F2Poly) -> F2Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero(self.nvars);
        for a in &self.terms {
            for b in &rhs.terms {
                out.toggle(a.mul(b));
            }
        }
        out
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<&Monomial> = self.terms().collect();
        for (i, m) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
