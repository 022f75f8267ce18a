//! Delzant polytopes and their combinatorics.
//!
//! Facets are stored with inward normals: the polytope is
//! `{x : <x, v_i> >= a_i}`. Outward input is negated on construction.
//! Offsets are exact rationals in units of π.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{self, IntMat, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Inward,
    Outward,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rat,
}

impl Facet {
    pub fn new<T: Into<BigInt>>(normal: impl IntoIterator<Item = T>, offset: Rat) -> Self {
        Facet {
            normal: normal.into_iter().map(Into::into).collect(),
            offset,
        }
    }

    fn negated(&self) -> Facet {
        Facet {
            normal: self.normal.iter().map(|x| -x).collect(),
            offset: -self.offset.clone(),
        }
    }
}

/// Why a polytope fails the Delzant conditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Rejection {
    #[error("RejectEmpty: no vertices")]
    Empty,
    #[error("RejectUnbounded: vertex {vertex} has an unbounded edge")]
    Unbounded { vertex: usize },
    #[error("RejectNonSimple: vertex {vertex} lies on {tight} facets")]
    NonSimple { vertex: usize, tight: usize },
    #[error("RejectNonUnimodular: vertex {vertex} has normal determinant {det}")]
    NonUnimodular { vertex: usize, det: BigInt },
    #[error("RejectRedundant: facet {facet} touches no vertex")]
    Redundant { facet: usize },
}

impl Rejection {
    /// Stable machine name for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Empty => "RejectEmpty",
            Rejection::Unbounded { .. } => "RejectUnbounded",
            Rejection::NonSimple { .. } => "RejectNonSimple",
            Rejection::NonUnimodular { .. } => "RejectNonUnimodular",
            Rejection::Redundant { .. } => "RejectRedundant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolytopeError {
    #[error("malformed polytope: {0}")]
    Malformed(String),
    #[error(transparent)]
    Rejected(#[from] Rejection),
    #[error("NoBatyrevVector for {indices:?}: {reason}")]
    NoBatyrevVector { indices: Vec<usize>, reason: &'static str },
    #[error("NonUniqueBatyrevVector for {indices:?}: {count} candidates")]
    NonUniqueBatyrevVector { indices: Vec<usize>, count: usize },
    #[error("FanoViolation for {indices:?}: quantum degree {degree}")]
    FanoViolation { indices: Vec<usize>, degree: i64 },
    #[error("NonGenericXi: direction pairs to zero with an edge at vertex {vertex}")]
    NonGenericXi { vertex: usize },
    #[error("{indices:?} is not a primitive collection")]
    NotPrimitive { indices: Vec<usize> },
}

/// A rational polytope `{x : <x, v_i> >= a_i}` with inward normals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    facets: Vec<Facet>,
    convention: Convention,
}

impl Polytope {
    /// Builds a polytope from facets given in `convention`; outward facets
    /// are `<x, v_i> <= b_i` and are negated into inward form.
    pub fn new(dim: usize, facets: Vec<Facet>, convention: Convention) -> Result<Self, PolytopeError> {
        if dim == 0 {
            return Err(PolytopeError::Malformed("dimension must be positive".into()));
        }
        if facets.len() < dim + 1 {
            return Err(PolytopeError::Malformed(alloc::format!(
                "need at least {} facets in dimension {dim}, got {}",
                dim + 1,
                facets.len()
            )));
        }
        for (i, f) in facets.iter().enumerate() {
            if f.normal.len() != dim {
                return Err(PolytopeError::Malformed(alloc::format!(
                    "facet {} normal has length {}, expected {dim}",
                    i + 1,
                    f.normal.len()
                )));
            }
            if !linalg::content(&f.normal).is_one() {
                return Err(PolytopeError::Malformed(alloc::format!(
                    "facet {} normal is not a primitive integer vector",
                    i + 1
                )));
            }
        }
        let facets: Vec<Facet> = match convention {
            Convention::Inward => facets,
            Convention::Outward => facets.iter().map(Facet::negated).collect(),
        };
        for i in 0..facets.len() {
            for j in 0..i {
                if facets[i].normal == facets[j].normal {
                    return Err(PolytopeError::Malformed(alloc::format!(
                        "facets {} and {} share a normal; one is redundant",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Polytope {
            dim,
            facets,
            convention,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    /// Inward facets.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// The convention the polytope was declared in.
    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Facets in the declared convention, as originally supplied.
    pub fn declared_facets(&self) -> Vec<Facet> {
        match self.convention {
            Convention::Inward => self.facets.clone(),
            Convention::Outward => self.facets.iter().map(Facet::negated).collect(),
        }
    }

    /// `d x n` matrix whose rows are the inward normals.
    pub fn normal_matrix(&self) -> IntMat {
        let rows: Vec<Vec<BigInt>> = self.facets.iter().map(|f| f.normal.clone()).collect();
        IntMat::from_rows(self.dim, &rows)
    }

    /// Pairing `<x, v_i> - a_i`; nonnegative on the polytope.
    fn slack(&self, i: usize, x: &[Rat]) -> Rat {
        let f = &self.facets[i];
        let mut s = -f.offset.clone();
        for (xi, vi) in x.iter().zip(&f.normal) {
            s += xi * Rat::from_integer(vi.clone());
        }
        s
    }

    /// Same polytope with facets reordered: new facet `k` is old facet `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Polytope {
        assert_eq!(perm.len(), self.facets.len());
        Polytope {
            dim: self.dim,
            facets: perm.iter().map(|&i| self.facets[i].clone()).collect(),
            convention: self.convention,
        }
    }
}

/// A vertex with its full tight-facet set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub coords: Vec<Rat>,
    /// Facet indices tight at the vertex, ascending.
    pub tight: Vec<usize>,
    /// `|det|` of the tight normal matrix when exactly `n` facets are tight.
    pub det: Option<BigInt>,
    /// Primitive edge directions `w_j` with `<w_j, v_{tight[k]}> = δ_jk`.
    /// Empty unless the vertex is simple and unimodular.
    pub edge_dirs: Vec<Vec<BigInt>>,
}

impl Vertex {
    pub fn is_simple(&self, dim: usize) -> bool {
        self.tight.len() == dim
    }
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Solves every `n`-subset of facets and keeps the feasible points.
///
/// Vertices come back in order of first discovery (lexicographic facet
/// subsets), each with its complete tight set.
pub fn enumerate_vertices(p: &Polytope) -> Vec<Vertex> {
    let n = p.dim;
    let normals = p.normal_matrix();
    let mut seen: BTreeMap<Vec<Rat>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for_each_subset(p.num_facets(), n, |subset| {
        let m = normals.select_rows(subset);
        let b: Vec<Rat> = subset.iter().map(|&i| p.facets[i].offset.clone()).collect();
        let Ok(x) = linalg::solve_rational(&m, &b) else { return };
        if seen.contains_key(&x) {
            return;
        }
        let mut tight = Vec::new();
        for i in 0..p.num_facets() {
            let s = p.slack(i, &x);
            if s.is_negative() {
                return;
            }
            if s.is_zero() {
                tight.push(i);
            }
        }
        seen.insert(x.clone(), ());
        out.push(make_vertex(p, x, tight));
    });
    out
}

fn make_vertex(p: &Polytope, coords: Vec<Rat>, tight: Vec<usize>) -> Vertex {
    let n = p.dim;
    let mut vertex = Vertex {
        coords,
        tight,
        det: None,
        edge_dirs: Vec::new(),
    };
    if vertex.tight.len() != n {
        return vertex;
    }
    let m = p.normal_matrix().select_rows(&vertex.tight);
    let d = linalg::det(&m).abs();
    if d.is_one() {
        // columns of m^{-1}
        for j in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[j] = Rat::one();
            let w = linalg::solve_rational(&m, &e).expect("unimodular matrix is invertible");
            vertex
                .edge_dirs
                .push(w.into_iter().map(|r| r.to_integer()).collect());
        }
    }
    vertex.det = Some(d);
    vertex
}

/// Outcome of the Delzant checks, including every failure found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelzantReport {
    pub vertices: Vec<Vertex>,
    pub failures: Vec<Rejection>,
}

impl DelzantReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tight_counts(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.tight.len()).collect()
    }
}

pub fn validate_delzant(p: &Polytope) -> DelzantReport {
    let vertices = enumerate_vertices(p);
    let mut failures = Vec::new();
    if vertices.is_empty() {
        failures.push(Rejection::Empty);
    }
    for (k, v) in vertices.iter().enumerate() {
        if !v.is_simple(p.dim) {
            failures.push(Rejection::NonSimple {
                vertex: k,
                tight: v.tight.len(),
            });
        } else if let Some(d) = v.det.as_ref().filter(|d| !d.is_one()) {
            failures.push(Rejection::NonUnimodular {
                vertex: k,
                det: d.clone(),
            });
        }
    }
    // An edge leaving a simple vertex is bounded iff some facet not tight
    // there cuts it off.
    if failures.is_empty() {
        for (k, v) in vertices.iter().enumerate() {
            let unbounded = v.edge_dirs.iter().any(|w| {
                !p.facets.iter().any(|f| {
                    let pair: BigInt = w.iter().zip(&f.normal).map(|(a, b)| a * b).sum();
                    pair.is_negative()
                })
            });
            if unbounded {
                failures.push(Rejection::Unbounded { vertex: k });
                break;
            }
        }
        let touched: BTreeSet<usize> = vertices.iter().flat_map(|v| v.tight.iter().copied()).collect();
        for i in 0..p.num_facets() {
            if !touched.contains(&i) {
                failures.push(Rejection::Redundant { facet: i });
            }
        }
    }
    DelzantReport { vertices, failures }
}

/// A primitive collection with its Batyrev vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveCollection {
    /// Sorted facet indices.
    pub indices: Vec<usize>,
    /// `a_I` with `a_k = 1` on `I`, `a_k <= 0` off `I`, `Σ a_k v_k = 0`.
    pub batyrev: Vec<BigInt>,
}

impl PrimitiveCollection {
    /// `m_I = |I| - Σ_{k∉I} |a_k|`; must be positive for a Fano polytope.
    pub fn quantum_degree(&self) -> Result<u32, PolytopeError> {
        let outside: BigInt = self
            .batyrev
            .iter()
            .enumerate()
            .filter(|(k, _)| !self.indices.contains(k))
            .map(|(_, a)| a.abs())
            .sum();
        let m = BigInt::from(self.indices.len()) - outside;
        if m.is_positive() {
            Ok(u32::try_from(&m).expect("quantum degree fits in u32"))
        } else {
            Err(PolytopeError::FanoViolation {
                indices: self.indices.clone(),
                degree: i64::try_from(&m).unwrap_or(i64::MIN),
            })
        }
    }

    /// Facets outside the collection with nonzero exponent `|a_j|`.
    pub fn complement_exponents(&self) -> Vec<(usize, u32)> {
        self.batyrev
            .iter()
            .enumerate()
            .filter(|(k, a)| !self.indices.contains(k) && !a.is_zero())
            .map(|(k, a)| (k, u32::try_from(a.abs()).expect("exponent fits in u32")))
            .collect()
    }
}

/// A polytope that passed [`validate_delzant`], with its vertices cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelzantPolytope {
    polytope: Polytope,
    vertices: Vec<Vertex>,
}

impl DelzantPolytope {
    pub fn new(polytope: Polytope) -> Result<Self, Rejection> {
        let report = validate_delzant(&polytope);
        if let Some(r) = report.failures.into_iter().next() {
            return Err(r);
        }
        Ok(DelzantPolytope {
            polytope,
            vertices: report.vertices,
        })
    }

    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn dim(&self) -> usize {
        self.polytope.dim
    }

    pub fn num_facets(&self) -> usize {
        self.polytope.num_facets()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// True iff `F_I` is nonempty, i.e. some vertex is tight on all of `I`.
    pub fn face_nonempty(&self, indices: &[usize]) -> bool {
        self.vertices
            .iter()
            .any(|v| indices.iter().all(|i| v.tight.binary_search(i).is_ok()))
    }

    /// Inclusion-minimal index sets with empty face, sorted lexicographically.
    pub fn primitive_collections(&self) -> Vec<Vec<usize>> {
        let d = self.num_facets();
        let mut found: Vec<Vec<usize>> = Vec::new();
        // by increasing size, so any empty proper subset is already recorded
        for k in 1..=d {
            for_each_subset(d, k, |s| {
                if self.face_nonempty(s) {
                    return;
                }
                if found.iter().any(|f| f.iter().all(|i| s.contains(i))) {
                    return;
                }
                found.push(s.to_vec());
            });
        }
        found.sort();
        found
    }

    pub fn is_primitive(&self, indices: &[usize]) -> bool {
        if indices.is_empty() || self.face_nonempty(indices) {
            return false;
        }
        (0..indices.len()).all(|skip| {
            let sub: Vec<usize> = indices
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .map(|(_, &i)| i)
                .collect();
            self.face_nonempty(&sub)
        })
    }

    /// The unique integer relation `Σ a_k v_k = 0` with `a = 1` on `indices`,
    /// `a <= 0` elsewhere, and negative support indexing a face.
    ///
    /// The affine lattice `{a in ker : a_I = 1}` is parametrized from the
    /// saturated kernel basis. For each face `S` of the complement, the
    /// region with `a_S <= 0` and zero elsewhere is bounded and enumerated
    /// exhaustively; every lattice point found is collected.
    pub fn batyrev_vector(&self, indices: &[usize]) -> Result<Vec<BigInt>, PolytopeError> {
        if !self.is_primitive(indices) {
            return Err(PolytopeError::NotPrimitive {
                indices: indices.to_vec(),
            });
        }
        let d = self.num_facets();
        let kernel = linalg::kernel_lattice_basis(&self.polytope.normal_matrix());
        // a = K^T t, constrain a_I = 1
        let kt = kernel.transpose();
        let constraint = kt.select_rows(indices);
        let ones = vec![BigInt::one(); indices.len()];
        let Some((t0, free)) = linalg::solve_integer(&constraint, &ones) else {
            return Err(PolytopeError::NoBatyrevVector {
                indices: indices.to_vec(),
                reason: "no integer relation is 1 on the collection",
            });
        };
        let base = kt.mul_vec(&t0);
        let dirs: Vec<Vec<BigInt>> = free.rows().map(|r| kt.mul_vec(r)).collect();

        let complement: Vec<usize> = (0..d).filter(|k| !indices.contains(k)).collect();
        let mut candidates: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        for k in 0..=complement.len().min(self.dim()) {
            let mut err = None;
            for_each_subset(complement.len(), k, |pos| {
                if err.is_some() {
                    return;
                }
                let face: Vec<usize> = pos.iter().map(|&p| complement[p]).collect();
                if !self.face_nonempty(&face) {
                    return;
                }
                let zero: Vec<usize> = complement.iter().copied().filter(|j| !face.contains(j)).collect();
                match lattice_points(&base, &dirs, &zero, &face) {
                    Ok(points) => candidates.extend(points),
                    Err(e) => err = Some(e),
                }
            });
            if let Some(reason) = err {
                return Err(PolytopeError::NoBatyrevVector {
                    indices: indices.to_vec(),
                    reason,
                });
            }
        }
        match candidates.len() {
            0 => Err(PolytopeError::NoBatyrevVector {
                indices: indices.to_vec(),
                reason: "no lattice point satisfies the sign conditions",
            }),
            1 => Ok(candidates.into_iter().next().unwrap()),
            count => Err(PolytopeError::NonUniqueBatyrevVector {
                indices: indices.to_vec(),
                count,
            }),
        }
    }

    /// All primitive collections with Batyrev vectors attached.
    pub fn primitive_relations(&self) -> Result<Vec<PrimitiveCollection>, PolytopeError> {
        self.primitive_collections()
            .into_iter()
            .map(|indices| {
                let batyrev = self.batyrev_vector(&indices)?;
                Ok(PrimitiveCollection { indices, batyrev })
            })
            .collect()
    }

    /// `ξ = (1, B, B², ...)` with `B` exceeding every edge entry in absolute
    /// value; a nonzero edge direction then pairs to a nonzero base-`B` number.
    pub fn generic_xi(&self) -> Vec<BigInt> {
        let max = self
            .vertices
            .iter()
            .flat_map(|v| v.edge_dirs.iter().flatten())
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        let b = max + 1u32;
        let mut xi = Vec::with_capacity(self.dim());
        let mut pow = BigInt::one();
        for _ in 0..self.dim() {
            xi.push(pow.clone());
            pow *= &b;
        }
        xi
    }

    /// Morse index on the real Lagrangian at vertex `k`: the number of edges
    /// along which `<·, ξ>` decreases.
    pub fn morse_index(&self, k: usize, xi: &[BigInt]) -> Result<usize, PolytopeError> {
        morse_index(&self.vertices[k], xi).ok_or(PolytopeError::NonGenericXi { vertex: k })
    }

    /// `b_k = #{vertices of index k}`, `k = 0..=n`.
    pub fn betti_numbers(&self, xi: &[BigInt]) -> Result<Vec<usize>, PolytopeError> {
        let mut b = vec![0; self.dim() + 1];
        for k in 0..self.vertices.len() {
            b[self.morse_index(k, xi)?] += 1;
        }
        Ok(b)
    }
}

/// Index of a simple vertex for the height function `<·, ξ>`; `None` if
/// some edge is orthogonal to `ξ`.
pub fn morse_index(v: &Vertex, xi: &[BigInt]) -> Option<usize> {
    let mut index = 0;
    for w in &v.edge_dirs {
        let pair: BigInt = w.iter().zip(xi).map(|(a, b)| a * b).sum();
        if pair.is_zero() {
            return None;
        }
        if pair.is_negative() {
            index += 1;
        }
    }
    Some(index)
}

/// Integer points `base + Σ s_r dirs_r` with coordinates in `zero` equal to 0
/// and coordinates in `nonpos` at most 0. Errors if the region is unbounded.
fn lattice_points(
    base: &[BigInt],
    dirs: &[Vec<BigInt>],
    zero: &[usize],
    nonpos: &[usize],
) -> Result<Vec<Vec<BigInt>>, &'static str> {
    // eliminate the equalities with an integer solve
    let (base, dirs) = if zero.is_empty() || dirs.is_empty() {
        if dirs.is_empty() && zero.iter().any(|&j| !base[j].is_zero()) {
            return Ok(Vec::new());
        }
        (base.to_vec(), dirs.to_vec())
    } else {
        let rows: Vec<Vec<BigInt>> = zero
            .iter()
            .map(|&j| dirs.iter().map(|d| d[j].clone()).collect())
            .collect();
        let a = IntMat::from_rows(dirs.len(), &rows);
        let rhs: Vec<BigInt> = zero.iter().map(|&j| -&base[j]).collect();
        let Some((s0, free)) = linalg::solve_integer(&a, &rhs) else {
            return Ok(Vec::new());
        };
        let combine = |coef: &[BigInt]| -> Vec<BigInt> {
            let mut v = vec![BigInt::zero(); base.len()];
            for (c, d) in coef.iter().zip(dirs) {
                for (x, y) in v.iter_mut().zip(d) {
                    *x += c * y;
                }
            }
            v
        };
        let shift = combine(&s0);
        let new_base: Vec<BigInt> = base.iter().zip(&shift).map(|(a, b)| a + b).collect();
        let new_dirs: Vec<Vec<BigInt>> = free.rows().map(combine).collect();
        (new_base, new_dirs)
    };

    // inequalities Σ g_r s_r <= -c for each nonpos coordinate
    let constraints: Vec<(Vec<Rat>, Rat)> = nonpos
        .iter()
        .map(|&j| {
            let coeffs = dirs.iter().map(|d| Rat::from_integer(d[j].clone())).collect();
            (coeffs, Rat::from_integer(-&base[j]))
        })
        .collect();
    let mut out = Vec::new();
    let mut params = Vec::with_capacity(dirs.len());
    enumerate_box(&constraints, dirs.len(), &mut params, &mut |s| {
        let mut v = base.clone();
        for (c, d) in s.iter().zip(&dirs) {
            for (x, y) in v.iter_mut().zip(d) {
                *x += c * y;
            }
        }
        if zero.iter().all(|&j| v[j].is_zero()) && nonpos.iter().all(|&j| !v[j].is_positive()) {
            out.push(v);
        }
    })?;
    Ok(out)
}

/// Enumerates integer `s` in `{s : A s <= b}` coordinate by coordinate, with
/// bounds on each coordinate from Fourier-Motzkin projection.
fn enumerate_box(
    constraints: &[(Vec<Rat>, Rat)],
    nvars: usize,
    fixed: &mut Vec<BigInt>,
    visit: &mut impl FnMut(&[BigInt]),
) -> Result<(), &'static str> {
    let k = fixed.len();
    if k == nvars {
        visit(fixed);
        return Ok(());
    }
    // substitute fixed coordinates, keep the rest
    let reduced: Vec<(Vec<Rat>, Rat)> = constraints
        .iter()
        .map(|(c, b)| {
            let mut rhs = b.clone();
            for (ci, si) in c.iter().zip(fixed.iter()) {
                rhs -= ci * Rat::from_integer(si.clone());
            }
            (c[k..].to_vec(), rhs)
        })
        .collect();
    let Some((lo, hi)) = project_bounds(reduced)? else {
        return Ok(());
    };
    let mut s = lo;
    while s <= hi {
        fixed.push(s.clone());
        enumerate_box(constraints, nvars, fixed, visit)?;
        fixed.pop();
        s += 1u32;
    }
    Ok(())
}

/// Integer range of the first variable over `{s : A s <= b}`. `None` when the
/// system is infeasible.
fn project_bounds(mut sys: Vec<(Vec<Rat>, Rat)>) -> Result<Option<(BigInt, BigInt)>, &'static str> {
    let nvars = sys.first().map_or(0, |c| c.0.len());
    if nvars == 0 {
        return Err("unbounded search region");
    }
    // eliminate variables from the last down to index 1
    for v in (1..nvars).rev() {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for c in sys {
            if c.0[v].is_positive() {
                pos.push(c);
            } else if c.0[v].is_negative() {
                neg.push(c);
            } else {
                keep.push(c);
            }
        }
        if pos.is_empty() != neg.is_empty() {
            // variable v is one-sided: free to run off, which would also
            // make the lattice region infinite when feasible
            return Err("unbounded search region");
        }
        for (pc, pb) in &pos {
            for (nc, nb) in &neg {
                let fp = -nc[v].clone();
                let fn_ = pc[v].clone();
                let coeffs: Vec<Rat> = pc.iter().zip(nc).map(|(a, b)| a * &fp + b * &fn_).collect();
                keep.push((coeffs, pb * &fp + nb * &fn_));
            }
        }
        sys = keep;
    }
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (c, b) in &sys {
        let a = &c[0];
        if a.is_zero() {
            if b.is_negative() {
                return Ok(None);
            }
            continue;
        }
        let bound = b / a;
        if a.is_positive() {
            hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
        } else {
            lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
        }
    }
    match (lo, hi) {
        (Some(l), Some(h)) => {
            let (l, h) = (l.ceil().to_integer(), h.floor().to_integer());
            Ok(if l > h { None } else { Some((l, h)) })
        }
        _ => Err("unbounded search region"),
    }
}

/// Polytopes used throughout the examples and tests.
pub mod builtin {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    /// Standard simplex `{x_i >= 0, Σ x_i <= 1}`.
    pub fn cp(n: usize) -> Polytope {
        let mut facets: Vec<Facet> = (0..n)
            .map(|i| {
                let mut v = vec![0i64; n];
                v[i] = 1;
                Facet::new(v, rat(0, 1))
            })
            .collect();
        facets.push(Facet::new(vec![-1i64; n], rat(-1, 1)));
        Polytope::new(n, facets, Convention::Inward).expect("simplex is well formed")
    }

    /// Unit square.
    pub fn cp1xcp1() -> Polytope {
        let facets = vec![
            Facet::new([1i64, 0], rat(0, 1)),
            Facet::new([-1i64, 0], rat(-1, 1)),
            Facet::new([0i64, 1], rat(0, 1)),
            Facet::new([0i64, -1], rat(-1, 1)),
        ];
        Polytope::new(2, facets, Convention::Inward).expect("square is well formed")
    }

    /// The simplex truncated at `x_3 = 1/2`, given with outward normals
    /// `(-1,0,0), (0,-1,0), (0,0,-1), (0,0,1), (1,1,1)`.
    pub fn blowup_cp3() -> Polytope {
        let facets = vec![
            Facet::new([-1i64, 0, 0], rat(0, 1)),
            Facet::new([0i64, -1, 0], rat(0, 1)),
            Facet::new([0i64, 0, -1], rat(0, 1)),
            Facet::new([0i64, 0, 1], rat(1, 2)),
            Facet::new([1i64, 1, 1], rat(1, 1)),
        ];
        Polytope::new(3, facets, Convention::Outward).expect("truncated simplex is well formed")
    }

    /// Looks up `cp<n>`, `cp1xcp1` or `blowup_cp3`.
    pub fn by_name(name: &str) -> Option<Polytope> {
        match name {
            "cp1xcp1" => Some(cp1xcp1()),
            "blowup_cp3" => Some(blowup_cp3()),
            _ => {
                let n: usize = name.strip_prefix("cp")?.parse().ok()?;
                (n >= 1).then(|| cp(n))
            }
        }
    }

    pub const NAMES: &[&str] = &["cp1", "cp2", "cp3", "cp1xcp1", "blowup_cp3"];
}
