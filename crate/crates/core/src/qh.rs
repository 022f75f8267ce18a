//! Classical and quantum presentations of `H_*(L)`, `QH_*(L)`, `H_*(M)` and
//! `QH_*(M)`, together with Lagrangian Seidel elements and the checks built
//! on them.
//!
//! Polynomials use `d` variables, one per facet, plus `t = q⁻¹`. The `L` and
//! `M` presentations share their polynomials; they differ in generator
//! names and in the grading unit (1 for `L`, 2 for `M`).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::f2ring::univariate::F2Univariate;
use crate::f2ring::{buchberger, F2Poly, GroebnerBasis, LaurentF2, Monomial, QHElement, QuotientRing, RingError};
use crate::polytope::{DelzantPolytope, PolytopeError, PrimitiveCollection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// The real Lagrangian; generators in degree 1, `|q| = 1`.
    L,
    /// The ambient toric manifold; generators in degree 2, `|Q| = 2`.
    M,
}

impl Space {
    pub fn grading_unit(self) -> u32 {
        match self {
            Space::L => 1,
            Space::M => 2,
        }
    }

    pub fn variable_prefix(self) -> &'static str {
        match self {
            Space::L => "X",
            Space::M => "Y",
        }
    }

    pub fn q_name(self) -> &'static str {
        match self {
            Space::L => "q",
            Space::M => "Q",
        }
    }

    pub fn fundamental_class(self) -> &'static str {
        match self {
            Space::L => "L",
            Space::M => "M",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QhError {
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("NotInvertible: {0}")]
    NotInvertible(&'static str),
    #[error("facet {facet} out of range (polytope has {facets} facets)")]
    FacetOutOfRange { facet: usize, facets: usize },
    #[error("combination has {got} entries, expected {expected}")]
    ComboLength { expected: usize, got: usize },
    #[error("CrosscheckFailed: Hilbert function {hilbert:?} vs Betti numbers {betti:?}")]
    CrosscheckFailed { hilbert: Vec<usize>, betti: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub cod: u32,
}

/// Generators and relations of one of the four rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub space: Space,
    pub flavor: Flavor,
    pub generators: Vec<Generator>,
    /// One per standard dual basis vector.
    pub linear_relations: Vec<F2Poly>,
    /// One per primitive collection, in the order of
    /// [`DelzantPolytope::primitive_collections`].
    pub sr_relations: Vec<F2Poly>,
    pub grading_unit: u32,
}

impl Presentation {
    pub fn new(p: &DelzantPolytope, space: Space, flavor: Flavor) -> Result<Self, QhError> {
        let sr_relations = match flavor {
            Flavor::Classical => classical_sr(p),
            Flavor::Quantum => quantum_sr(p)?,
        };
        Ok(Presentation {
            space,
            flavor,
            generators: (0..p.num_facets())
                .map(|i| Generator {
                    name: format!("{}{}", space.variable_prefix(), i + 1),
                    cod: space.grading_unit(),
                })
                .collect(),
            linear_relations: linear_relations(p),
            sr_relations,
            grading_unit: space.grading_unit(),
        })
    }

    pub fn nvars(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> impl Iterator<Item = &F2Poly> + '_ {
        self.linear_relations.iter().chain(&self.sr_relations)
    }

    /// Reduced basis of the `t`-saturated homogeneous ideal.
    pub fn ideal(&self) -> Result<GroebnerBasis, QhError> {
        let rels: Vec<F2Poly> = self.relations().cloned().collect();
        Ok(buchberger(self.nvars(), &rels)?.saturate_t())
    }

    /// Renders a relation with this presentation's names; `t` prints as a
    /// negative power of `q`.
    pub fn render_relation(&self, f: &F2Poly) -> String {
        let labels: Vec<usize> = (0..self.nvars()).collect();
        render_poly(f, &labels, self.space)
    }
}

fn render_poly(f: &F2Poly, labels: &[usize], space: Space) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = f
        .terms()
        .map(|m| {
            let mut vars: Vec<(usize, u32)> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (labels[i], e))
                .collect();
            vars.sort();
            let mut factors: Vec<String> = vars
                .into_iter()
                .map(|(l, e)| power(&format!("{}{}", space.variable_prefix(), l + 1), i64::from(e)))
                .collect();
            if m.tdeg() > 0 {
                factors.push(power(space.q_name(), -i64::from(m.tdeg())));
            }
            if factors.is_empty() {
                "1".into()
            } else {
                factors.join("*")
            }
        })
        .collect();
    terms.join(" + ")
}

fn power(name: &str, e: i64) -> String {
    if e == 1 {
        name.into()
    } else {
        format!("{name}^{e}")
    }
}

/// `Σ_k <e_m*, v_k> X_k` reduced mod 2, for `m = 1..n`.
pub fn linear_relations(p: &DelzantPolytope) -> Vec<F2Poly> {
    let d = p.num_facets();
    let facets = p.polytope().facets();
    (0..p.dim())
        .map(|m| {
            F2Poly::from_monomials(
                d,
                (0..d)
                    .filter(|&k| facets[k].normal[m].is_odd())
                    .map(|k| Monomial::var(d, k)),
            )
        })
        .collect()
}

/// One squarefree monomial `Π_{i∈I} X_i` per primitive collection.
pub fn classical_sr(p: &DelzantPolytope) -> Vec<F2Poly> {
    let d = p.num_facets();
    p.primitive_collections()
        .iter()
        .map(|c| F2Poly::from_monomial(collection_monomial(d, c)))
        .collect()
}

fn collection_monomial(d: usize, indices: &[usize]) -> Monomial {
    let mut e = vec![0; d];
    for &i in indices {
        e[i] = 1;
    }
    Monomial::new(e, 0)
}

/// Binomial for one primitive collection:
/// `Π_{i∈I} X_i + Π_{j∉I} X_j^{|a_j|} t^{m_I}`.
pub fn quantum_relation(d: usize, pc: &PrimitiveCollection) -> Result<F2Poly, QhError> {
    let m = pc.quantum_degree()?;
    let mut e = vec![0; d];
    for (j, a) in pc.complement_exponents() {
        e[j] = a;
    }
    Ok(F2Poly::from_monomials(
        d,
        [collection_monomial(d, &pc.indices), Monomial::new(e, m)],
    ))
}

pub fn quantum_sr(p: &DelzantPolytope) -> Result<Vec<F2Poly>, QhError> {
    let d = p.num_facets();
    p.primitive_relations()?
        .iter()
        .map(|pc| quantum_relation(d, pc))
        .collect()
}

/// Whether a Seidel element comes from one facet or a combination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Facet(usize),
    Combination(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeidelElement {
    pub element: QHElement,
    pub inverse: QHElement,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Uniruled,
    Inconclusive,
}

/// Invertible element with no `[L]` term, which rules out a non-uniruled `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniruledCertificate {
    pub witness: QHElement,
    pub witness_facet: usize,
    pub inverse: Option<QHElement>,
    /// Coefficient of `[L]` in the witness; empty for a valid certificate.
    pub fundamental_coefficient: LaurentF2,
    pub verdict: Verdict,
}

/// A presentation together with its quotient ring.
#[derive(Debug, Clone)]
pub struct QhRing {
    presentation: Presentation,
    quotient: QuotientRing,
    collections: Vec<PrimitiveCollection>,
    /// Facet Seidel elements, filled for quantum rings.
    facets: Vec<Option<SeidelElement>>,
}

impl QhRing {
    pub fn build(p: &DelzantPolytope, space: Space, flavor: Flavor) -> Result<Self, QhError> {
        let presentation = Presentation::new(p, space, flavor)?;
        let collections = match flavor {
            Flavor::Quantum => p.primitive_relations()?,
            Flavor::Classical => Vec::new(),
        };
        Self::from_presentation(presentation, collections)
    }

    pub fn from_presentation(
        presentation: Presentation,
        collections: Vec<PrimitiveCollection>,
    ) -> Result<Self, QhError> {
        let rels: Vec<F2Poly> = presentation.relations().cloned().collect();
        let quotient = QuotientRing::new(presentation.nvars(), &rels)?;
        let mut ring = QhRing {
            presentation,
            quotient,
            collections,
            facets: Vec::new(),
        };
        if ring.flavor() == Flavor::Quantum {
            ring.facets = (0..ring.num_facets()).map(|j| ring.compute_seidel_facet(j).ok()).collect();
        }
        Ok(ring)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn quotient(&self) -> &QuotientRing {
        &self.quotient
    }

    /// Primitive collections with Batyrev vectors; empty for classical rings.
    pub fn collections(&self) -> &[PrimitiveCollection] {
        &self.collections
    }

    pub fn space(&self) -> Space {
        self.presentation.space
    }

    pub fn flavor(&self) -> Flavor {
        self.presentation.flavor
    }

    pub fn num_facets(&self) -> usize {
        self.presentation.nvars()
    }

    /// Rank over the coefficient ring.
    pub fn rank(&self) -> usize {
        self.quotient.dim()
    }

    /// Dimensions by codimension, in this space's degree units.
    pub fn hilbert_function(&self) -> Vec<usize> {
        let h = self.quotient.hilbert_function();
        let unit = self.presentation.grading_unit as usize;
        if h.is_empty() {
            return h;
        }
        let mut out = vec![0; (h.len() - 1) * unit + 1];
        for (c, n) in h.into_iter().enumerate() {
            out[c * unit] = n;
        }
        out
    }

    /// The fundamental class `[L]` (or `[M]`).
    pub fn unit(&self) -> QHElement {
        self.quotient.unit()
    }

    pub fn multiply(&self, a: &QHElement, b: &QHElement) -> QHElement {
        self.quotient.multiply(a, b)
    }

    pub fn power(&self, a: &QHElement, k: u32) -> QHElement {
        let mut out = self.unit();
        for _ in 0..k {
            out = self.multiply(&out, a);
        }
        out
    }

    /// `X_j * q^e` in the standard basis.
    pub fn generator_term(&self, j: usize, e: i64) -> Result<QHElement, QhError> {
        let d = self.num_facets();
        if j >= d {
            return Err(QhError::FacetOutOfRange { facet: j, facets: d });
        }
        Ok(self.quotient.reduce_term(&Monomial::var(d, j), e))
    }

    /// Inverse over `F₂[q, q⁻¹]`.
    ///
    /// Multiplication by `a q^{-s}` is a square matrix over `F₂[t]` on the
    /// standard basis; `a` is a unit iff its determinant is a power of `t`.
    /// The solution of `a x = [L]` comes from Cramer's rule with Bareiss
    /// determinants and is checked before returning.
    pub fn invert(&self, a: &QHElement) -> Result<QHElement, QhError> {
        let basis = self.quotient.standard_basis();
        let n = basis.len();
        let unit = self.unit();
        let unit_idx = basis
            .iter()
            .position(Monomial::is_one)
            .ok_or(QhError::NotInvertible("zero ring"))?;
        if a.is_zero() {
            return Err(QhError::NotInvertible("zero element"));
        }
        let columns: Vec<QHElement> = basis
            .iter()
            .map(|b| self.multiply(a, &QHElement::term(b.clone(), 0)))
            .collect();
        let shift = columns.iter().filter_map(QHElement::max_q_exponent).max().unwrap_or(0);
        let mut matrix = vec![vec![F2Univariate::zero(); n]; n];
        for (j, col) in columns.iter().enumerate() {
            for (m, e) in col.terms() {
                let k = self.quotient.basis_index(m).expect("products are normal forms");
                let texp = usize::try_from(shift - e).expect("shift bounds every exponent");
                matrix[k][j].toggle(texp);
            }
        }
        let det = bareiss_det(matrix.clone());
        let Some(k) = det.as_monomial() else {
            return Err(QhError::NotInvertible("determinant is not a power of q"));
        };
        let mut inverse = QHElement::zero();
        for (i, b) in basis.iter().enumerate() {
            let mut cramer = matrix.clone();
            for (r, row) in cramer.iter_mut().enumerate() {
                row[i] = if r == unit_idx {
                    F2Univariate::one()
                } else {
                    F2Univariate::zero()
                };
            }
            // x_i = det(M_i) t^{-k}, then undo the q^{-s} scaling
            for p in bareiss_det(cramer).exponents() {
                let q_exp = k as i64 - p as i64 - shift;
                inverse.toggle(b.clone(), q_exp);
            }
        }
        if self.multiply(a, &inverse) != unit {
            return Err(QhError::NotInvertible("solution failed verification"));
        }
        Ok(inverse)
    }

    /// `S_L(Λ_j^{1/2}) = X_j ⊗ q`, with its inverse.
    pub fn seidel_facet(&self, j: usize) -> Result<SeidelElement, QhError> {
        match self.facets.get(j) {
            Some(Some(s)) => Ok(s.clone()),
            _ => self.compute_seidel_facet(j),
        }
    }

    fn compute_seidel_facet(&self, j: usize) -> Result<SeidelElement, QhError> {
        let element = self.generator_term(j, 1)?;
        let inverse = self.invert(&element)?;
        Ok(SeidelElement {
            element,
            inverse,
            provenance: Provenance::Facet(j),
        })
    }

    /// `Π_j S_L(Λ_j^{1/2})^{c_j}`; negative entries use inverses.
    pub fn seidel_composite(&self, c: &[i64]) -> Result<SeidelElement, QhError> {
        let d = self.num_facets();
        if c.len() != d {
            return Err(QhError::ComboLength { expected: d, got: c.len() });
        }
        let mut element = self.unit();
        let mut inverse = self.unit();
        for (j, &cj) in c.iter().enumerate() {
            if cj == 0 {
                continue;
            }
            let s = self.seidel_facet(j)?;
            let (up, down) = if cj > 0 { (&s.element, &s.inverse) } else { (&s.inverse, &s.element) };
            let k = cj.unsigned_abs() as u32;
            element = self.multiply(&element, &self.power(up, k));
            inverse = self.multiply(&inverse, &self.power(down, k));
        }
        if self.multiply(&element, &inverse) != self.unit() {
            return Err(QhError::NotInvertible("composite failed verification"));
        }
        Ok(SeidelElement {
            element,
            inverse,
            provenance: Provenance::Combination(c.to_vec()),
        })
    }

    /// `Π_{i∈I} (X_i q) = Π_{j∉I} (X_j q)^{|a_j|}` in the ring.
    pub fn verify_seidel_relation(&self, pc: &PrimitiveCollection) -> bool {
        let facet = |j| self.generator_term(j, 1);
        let mut lhs = self.unit();
        for &i in &pc.indices {
            match facet(i) {
                Ok(x) => lhs = self.multiply(&lhs, &x),
                Err(_) => return false,
            }
        }
        let mut rhs = self.unit();
        for (j, a) in pc.complement_exponents() {
            match facet(j) {
                Ok(x) => rhs = self.multiply(&rhs, &self.power(&x, a)),
                Err(_) => return false,
            }
        }
        lhs == rhs
    }

    /// Uses `X_1 ⊗ q` as witness: it must be invertible and have no `[L]` term.
    pub fn uniruled_certificate(&self) -> UniruledCertificate {
        let witness_facet = 0;
        let witness = self
            .generator_term(witness_facet, 1)
            .unwrap_or_else(|_| QHElement::zero());
        let one = Monomial::one(self.num_facets());
        let fundamental_coefficient = witness.coefficient(&one);
        let inverse = self.invert(&witness).ok();
        let verdict = if inverse.is_some() && fundamental_coefficient.is_zero() {
            Verdict::Uniruled
        } else {
            Verdict::Inconclusive
        };
        UniruledCertificate {
            witness,
            witness_facet,
            inverse,
            fundamental_coefficient,
            verdict,
        }
    }

    /// For each variable, the smallest facet index whose generator reduces
    /// to exactly that variable. Variables that never survive map to
    /// themselves.
    pub fn display_labels(&self) -> Vec<usize> {
        let d = self.num_facets();
        let gb = self.quotient.gb();
        let mut labels: Vec<usize> = (0..d).collect();
        for k in (0..d).rev() {
            let nf = gb.reduce(&F2Poly::var(d, k));
            if nf.len() == 1 {
                if let Some(v) = nf.leading().unwrap().pure_power_of() {
                    if nf.leading().unwrap().exps()[v] == 1 {
                        labels[v] = labels[v].min(k);
                    }
                }
            }
        }
        labels
    }

    /// A polynomial in `X, t` with surviving variables renamed as in
    /// [`QhRing::render`].
    pub fn render_poly(&self, f: &F2Poly) -> String {
        render_poly(f, &self.display_labels(), self.space())
    }

    /// Human-readable element, e.g. `X1*X4 + L*q^-2`. Surviving variables
    /// are renamed via [`QhRing::display_labels`].
    pub fn render(&self, a: &QHElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let space = self.space();
        let labels = self.display_labels();
        let mut terms: Vec<(&Monomial, i64)> = a.terms().collect();
        terms.sort_by(|(m1, e1), (m2, e2)| m2.cmp(m1).then(e2.cmp(e1)));
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(m, e)| {
                let mut factors: Vec<(usize, u32)> = m
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| (labels[i], x))
                    .collect();
                factors.sort();
                let mut out: Vec<String> = factors
                    .into_iter()
                    .map(|(l, x)| power(&format!("{}{}", space.variable_prefix(), l + 1), i64::from(x)))
                    .collect();
                if out.is_empty() {
                    out.push(space.fundamental_class().into());
                }
                if e != 0 {
                    out.push(power(space.q_name(), e));
                }
                out.join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

/// Determinant over `F₂[t]` by fraction-free elimination.
fn bareiss_det(mut a: Vec<Vec<F2Univariate>>) -> F2Univariate {
    let n = a.len();
    if n == 0 {
        return F2Univariate::one();
    }
    let mut prev = F2Univariate::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => a.swap(k, p),
                None => return F2Univariate::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).add(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.exact_div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].clone()
}

/// Checks that two presentations define the same ideal under
/// `X_i ↦ Y_i`, `q ↦ Q`, with `M` degrees double those of `L`.
pub fn verify_psi(pl: &Presentation, pm: &Presentation) -> bool {
    if pl.space != Space::L || pm.space != Space::M || pl.nvars() != pm.nvars() {
        return false;
    }
    let names_match = pl.generators.iter().zip(&pm.generators).all(|(x, y)| {
        x.name.strip_prefix(Space::L.variable_prefix()) == y.name.strip_prefix(Space::M.variable_prefix())
            && y.cod == 2 * x.cod
    });
    if !names_match || pm.grading_unit != 2 * pl.grading_unit {
        return false;
    }
    match (pl.ideal(), pm.ideal()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Outcome of comparing the classical Hilbert function with vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    pub xi: Vec<BigInt>,
    /// Morse-index histogram `b_0..b_n` on `L`.
    pub betti: Vec<usize>,
    /// Hilbert function of `H_*(L)` by codimension.
    pub hilbert_l: Vec<usize>,
    /// Hilbert function of `H_*(M)` by real codimension.
    pub hilbert_m: Vec<usize>,
}

/// Classical Hilbert function (read as homological degree `n - c`) against
/// the Morse-index histogram, and the `M` Hilbert function against the `L`
/// one with degrees doubled.
pub fn betti_crosscheck(p: &DelzantPolytope, xi: Option<&[BigInt]>) -> Result<BettiReport, QhError> {
    let xi: Vec<BigInt> = match xi {
        Some(x) => x.to_vec(),
        None => p.generic_xi(),
    };
    let betti = p.betti_numbers(&xi)?;
    let hilbert_l = QhRing::build(p, Space::L, Flavor::Classical)?.hilbert_function();
    let hilbert_m = QhRing::build(p, Space::M, Flavor::Classical)?.hilbert_function();
    let mut by_degree = hilbert_l.clone();
    by_degree.reverse();
    let doubled: Vec<usize> = (0..hilbert_m.len())
        .map(|c| if c % 2 == 0 { hilbert_l.get(c / 2).copied().unwrap_or(0) } else { 0 })
        .collect();
    if by_degree != betti || doubled != hilbert_m {
        return Err(QhError::CrosscheckFailed {
            hilbert: hilbert_l,
            betti,
        });
    }
    Ok(BettiReport {
        xi,
        betti,
        hilbert_l,
        hilbert_m,
    })
}

/// Smallest quantum degree over all primitive collections.
pub fn min_quantum_degree(collections: &[PrimitiveCollection]) -> Result<Option<u32>, QhError> {
    let mut best: Option<u32> = None;
    for pc in collections {
        let m = pc.quantum_degree()?;
        best = Some(best.map_or(m, |b| b.min(m)));
    }
    Ok(best)
}
