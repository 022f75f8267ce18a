use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{buchberger, F2Poly, GroebnerBasis, Monomial, QHElement, RingError};

/// Finite-dimensional quotient `F₂[X_1..X_d] / I` of a cod-homogeneous ideal,
/// tensored with `F₂[q, q⁻¹]`.
///
/// Arithmetic runs in the dehomogenized (`t = 1`) ring; `q`-powers are
/// recovered from the codimension deficit. The saturated homogeneous basis is
/// kept for cross-checks.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    nvars: usize,
    homogeneous: GroebnerBasis,
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    // table[i][j]: basis indices in the normal form of basis[i] * basis[j]
    table: Vec<Vec<Vec<usize>>>,
}

impl QuotientRing {
    /// Builds the ring from cod-homogeneous relations in `X_1..X_d, t`.
    pub fn new(nvars: usize, relations: &[F2Poly]) -> Result<Self, RingError> {
        let homogeneous = buchberger(nvars, relations)?.saturate_t();
        Self::from_saturated(homogeneous)
    }

    fn from_saturated(homogeneous: GroebnerBasis) -> Result<Self, RingError> {
        let nvars = homogeneous.nvars();
        let gb = homogeneous.dehomogenize();
        let basis = standard_monomials(&gb)?;
        let index: BTreeMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = basis.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let nf = gb.reduce(&F2Poly::from_monomial(basis[i].mul(&basis[j])));
                let mut support: Vec<usize> = nf.terms().map(|m| index[m]).collect();
                support.sort_unstable();
                table[j][i] = support.clone();
                table[i][j] = support;
            }
        }
        Ok(QuotientRing {
            nvars,
            homogeneous,
            gb,
            basis,
            index,
            table,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Reduced basis of the dehomogenized ideal.
    pub fn gb(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Reduced, `t`-saturated basis of the homogeneous ideal.
    pub fn homogeneous_gb(&self) -> &GroebnerBasis {
        &self.homogeneous
    }

    /// Standard monomials sorted by codimension, then monomial order.
    pub fn standard_basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Number of standard monomials in each X-degree.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let top = self.basis.iter().map(Monomial::x_degree).max().unwrap_or(0) as usize;
        let mut h = vec![0; top + 1];
        for m in &self.basis {
            h[m.x_degree() as usize] += 1;
        }
        if self.basis.is_empty() {
            h.clear();
        }
        h
    }

    /// Remainder of `f` with `t = 1`, supported on standard monomials.
    pub fn normal_form(&self, f: &F2Poly) -> F2Poly {
        self.gb.reduce(&f.dehomogenize())
    }

    /// Remainder modulo the saturated homogeneous ideal.
    pub fn homogeneous_normal_form(&self, f: &F2Poly) -> F2Poly {
        self.homogeneous.reduce(f)
    }

    /// Attaches `q`-powers to a normal form: a standard monomial `m` gets
    /// exponent `deg(m) - source_cod`.
    pub fn rehomogenize(&self, f: &F2Poly, source_cod: i64) -> QHElement {
        let mut out = QHElement::zero();
        for m in f.terms() {
            let m = m.dehomogenize();
            let e = i64::from(m.x_degree()) - source_cod;
            out.toggle(m, e);
        }
        out
    }

    pub fn unit(&self) -> QHElement {
        self.reduce_term(&Monomial::one(self.nvars), 0)
    }

    /// `m * q^e` expressed in the standard basis. A `t` factor in `m` counts
    /// as `q^{-1}`.
    pub fn reduce_term(&self, m: &Monomial, e: i64) -> QHElement {
        let x = m.dehomogenize();
        let nf = self.gb.reduce(&F2Poly::from_monomial(x.clone()));
        self.rehomogenize(&nf, i64::from(x.x_degree()))
            .shift_q(e - i64::from(m.tdeg()))
    }

    /// A polynomial in `X, t` read as an element with `t = q⁻¹`.
    pub fn element_from_poly(&self, f: &F2Poly) -> QHElement {
        let mut out = QHElement::zero();
        for m in f.terms() {
            out.add_assign(&self.reduce_term(m, 0));
        }
        out
    }

    /// Product in the quotient, bilinear over `F₂[q, q⁻¹]`.
    pub fn multiply(&self, a: &QHElement, b: &QHElement) -> QHElement {
        let mut out = QHElement::zero();
        for (ma, ea) in a.terms() {
            for (mb, eb) in b.terms() {
                match (self.basis_index(ma), self.basis_index(mb)) {
                    (Some(i), Some(j)) => {
                        let src = i64::from(ma.x_degree() + mb.x_degree());
                        for &k in &self.table[i][j] {
                            let m = &self.basis[k];
                            out.toggle(m.clone(), ea + eb + i64::from(m.x_degree()) - src);
                        }
                    }
                    _ => out.add_assign(&self.reduce_term(&ma.mul(mb), ea + eb)),
                }
            }
        }
        out
    }

    /// Writes an element back as a polynomial in `X, t`, shifted by `t^shift`
    /// so that no exponent is negative. Returns `None` if `shift` is too small.
    pub fn to_poly(&self, a: &QHElement, shift: i64) -> Option<F2Poly> {
        let mut out = F2Poly::zero(self.nvars);
        for (m, e) in a.terms() {
            let k = u32::try_from(shift - e).ok()?;
            out.toggle(m.with_t(k));
        }
        Some(out)
    }
}

/// Monomials in `X_1..X_d` divisible by no leading monomial of `gb`.
pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>, RingError> {
    let nvars = gb.nvars();
    let lms: Vec<&Monomial> = gb.leading_monomials().collect();
    if lms.iter().any(|m| m.is_one()) {
        return Ok(Vec::new());
    }
    for i in 0..nvars {
        if !lms.iter().any(|m| m.pure_power_of() == Some(i)) {
            return Err(RingError::InfiniteDimensional { variable: i });
        }
    }
    let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
    let mut found = alloc::collections::BTreeSet::new();
    let mut frontier = vec![Monomial::one(nvars)];
    found.insert(Monomial::one(nvars));
    while let Some(m) = frontier.pop() {
        for i in 0..nvars {
            let next = m.mul(&Monomial::var(nvars, i));
            if standard(&next) && found.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    Ok(found.into_iter().collect())
}
