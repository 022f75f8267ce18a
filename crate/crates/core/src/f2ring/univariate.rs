//! Polynomials in one variable over F₂, packed into 64-bit words.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Univariate {
    // bit k of words[k / 64] is the coefficient of t^k; no trailing zero words
    words: Vec<u64>,
}

impl F2Univariate {
    pub fn zero() -> Self {
        F2Univariate { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0u64; k / 64 + 1];
        words[k / 64] = 1 << (k % 64);
        F2Univariate { words }
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.toggle(e);
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn toggle(&mut self, k: usize) {
        if self.words.len() <= k / 64 {
            self.words.resize(k / 64 + 1, 0);
        }
        self.words[k / 64] ^= 1 << (k % 64);
        self.trim();
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, k: usize) -> bool {
        self.words.get(k / 64).is_some_and(|w| w >> (k % 64) & 1 == 1)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.words.len() * 64).filter(|&k| self.coeff(k))
    }

    /// `Some(k)` when the polynomial is exactly `t^k`.
    pub fn as_monomial(&self) -> Option<usize> {
        let d = self.degree()?;
        (self.words.iter().map(|w| w.count_ones()).sum::<u32>() == 1).then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.words.len().max(other.words.len());
        let mut words: Vec<u64> = (0..n)
            .map(|i| self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0))
            .collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        F2Univariate { words }
    }

    fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (w, b) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + w + 1];
        for (i, &x) in self.words.iter().enumerate() {
            words[i + w] |= x << b;
            if b > 0 {
                words[i + w + 1] |= x >> (64 - b);
            }
        }
        let mut p = F2Univariate { words };
        p.trim();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for k in other.exponents() {
            out = out.add(&self.shl(k));
        }
        out
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            q.toggle(rd - dd);
            r = r.add(&divisor.shl(rd - dd));
        }
        (q, r)
    }

    /// Exact division; panics if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl fmt::Debug for F2Univariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let exps: Vec<usize> = self.exponents().collect();
        for (i, e) in exps.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "t^{e}")?;
        }
        Ok(())
    }
}
