#![allow(dead_code)]

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use toric_qh_core::f2ring::{F2Poly, Monomial};
use toric_qh_core::linalg::Rat;
use toric_qh_core::polytope::{builtin, Convention, DelzantPolytope, Facet, Polytope};

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn delzant(name: &str) -> DelzantPolytope {
    DelzantPolytope::new(builtin::by_name(name).unwrap()).unwrap()
}

/// Quadrilateral with a vertex at `(0, 1/2)` whose normals span index 2.
pub fn det2_square() -> Polytope {
    let facets = vec![
        Facet::new([1i64, 0], rat(0, 1)),
        Facet::new([0i64, -1], rat(-1, 1)),
        Facet::new([-1i64, 0], rat(-1, 1)),
        Facet::new([1i64, 2], rat(1, 1)),
    ];
    Polytope::new(2, facets, Convention::Inward).unwrap()
}

/// Square pyramid; the apex `(1/2, 1/2, 1/2)` lies on four facets.
pub fn pyramid() -> Polytope {
    let facets = vec![
        Facet::new([1i64, 0, -1], rat(0, 1)),
        Facet::new([-1i64, 0, -1], rat(-1, 1)),
        Facet::new([0i64, 1, -1], rat(0, 1)),
        Facet::new([0i64, -1, -1], rat(-1, 1)),
        Facet::new([0i64, 0, 1], rat(0, 1)),
    ];
    Polytope::new(3, facets, Convention::Inward).unwrap()
}

/// Polynomials over F2 as bit masks, `bit k` = coefficient of `X^k`.
pub mod gf2x {
    pub fn degree(a: u64) -> i32 {
        63 - a.leading_zeros() as i32
    }

    pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
        let mut out = 0u64;
        let mut a = rem(a, m);
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                out ^= a;
            }
            b >>= 1;
            a = rem(a << 1, m);
        }
        out
    }

    pub fn rem(mut a: u64, m: u64) -> u64 {
        let dm = degree(m);
        while a != 0 && degree(a) >= dm {
            a ^= m << (degree(a) - dm);
        }
        a
    }

    fn divmod(mut a: u64, b: u64) -> (u64, u64) {
        let db = degree(b);
        let mut q = 0;
        while a != 0 && degree(a) >= db {
            let s = degree(a) - db;
            q ^= 1 << s;
            a ^= b << s;
        }
        (q, a)
    }

    fn mul(a: u64, b: u64) -> u64 {
        let mut out = 0;
        for k in 0..64 {
            if b >> k & 1 == 1 {
                out ^= a << k;
            }
        }
        out
    }

    /// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
    pub fn inverse(a: u64, m: u64) -> Option<u64> {
        let (mut r0, mut r1) = (m, rem(a, m));
        let (mut s0, mut s1) = (0u64, 1u64);
        while r1 != 0 {
            let (q, r) = divmod(r0, r1);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s0 ^ mul(q, s1));
        }
        (r0 == 1).then(|| rem(s0, m))
    }
}

/// Reduction with divisors and terms picked at random; an independent
/// check that the remainder does not depend on choices.
pub fn random_reduce<R: Rng>(f: &F2Poly, gens: &[F2Poly], rng: &mut R) -> F2Poly {
    let mut f = f.clone();
    let mut rest = F2Poly::zero(f.nvars());
    loop {
        let terms: Vec<Monomial> = f.terms().cloned().collect();
        if terms.is_empty() {
            return rest;
        }
        let mut candidates = Vec::new();
        for m in &terms {
            for g in gens {
                if let Some(q) = g.leading().unwrap().quotient_of(m) {
                    candidates.push(g.mul_monomial(&q));
                }
            }
        }
        match candidates.choose(rng) {
            Some(h) => f += h,
            None => {
                for m in terms {
                    rest.toggle(m.clone());
                    f.toggle(m);
                }
            }
        }
    }
}

pub fn random_homogeneous<R: Rng>(nvars: usize, cod: u32, terms: usize, rng: &mut R) -> F2Poly {
    let mut f = F2Poly::zero(nvars);
    for _ in 0..terms {
        let mut e = vec![0u32; nvars];
        let mut t = 0;
        for _ in 0..cod {
            let k = rng.gen_range(0..=nvars);
            if k == nvars {
                t += 1;
            } else {
                e[k] += 1;
            }
        }
        f.toggle(Monomial::new(e, t));
    }
    f
}

use toric_qh_core::f2ring::{QHElement, QuotientRing};
use toric_qh_core::qh::QhRing;

/// All monomials in `nvars` variables of total degree at most `max`.
pub fn monomials_up_to(nvars: usize, max: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(nvars)];
    let mut frontier = out.clone();
    for _ in 0..max {
        let mut next = std::collections::BTreeSet::new();
        for m in &frontier {
            for i in 0..nvars {
                next.insert(m.mul(&Monomial::var(nvars, i)));
            }
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Normal form of `m` in the saturated homogeneous ideal, read with `t = q⁻¹`.
pub fn saturated_path(q: &QuotientRing, m: &Monomial) -> QHElement {
    let nf = q.homogeneous_normal_form(&F2Poly::from_monomial(m.clone()));
    let mut out = QHElement::zero();
    for term in nf.terms() {
        out.toggle(term.dehomogenize(), -i64::from(term.tdeg()));
    }
    out
}

/// Number of monomials of cod `<= max` whose two normal-form paths disagree.
pub fn path_disagreements(q: &QuotientRing, max: u32) -> usize {
    monomials_up_to(q.nvars(), max)
        .iter()
        .filter(|m| saturated_path(q, m) != q.reduce_term(m, 0))
        .count()
}

/// The truncated simplex ring at `q = 1` is `F₂[X]/(X⁶+X⁴+1)` with
/// `X1 = X2 = X5 = X`, `X4 = Y = X³`, `X3 = X4 + X5`.
pub const BLOWUP_MODULUS: u64 = 0b101_0001;

pub fn blowup_at_q_one(a: &QHElement) -> u64 {
    let images = [0b10u64, 0b10, 0b1010, 0b1000, 0b10];
    let mut out = 0;
    for (m, _) in a.terms() {
        let mut v = 1u64;
        for (k, &e) in m.exps().iter().enumerate() {
            for _ in 0..e {
                v = gf2x::mul_mod(v, images[k], BLOWUP_MODULUS);
            }
        }
        out ^= v;
    }
    out
}

pub fn random_element<R: Rng>(ring: &QhRing, rng: &mut R) -> QHElement {
    let basis = ring.quotient().standard_basis().to_vec();
    let mut out = QHElement::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let m = basis.choose(rng).unwrap().clone();
        out.toggle(m, rng.gen_range(-3..=3));
    }
    out
}

pub fn random_combo<R: Rng>(d: usize, rng: &mut R) -> Vec<i64> {
    (0..d).map(|_| rng.gen_range(-2..=2)).collect()
}

/// Exhaustive scan of small relation vectors against the cone condition.
pub fn brute_force_batyrev(p: &DelzantPolytope, indices: &[usize], bound: i64) -> Vec<Vec<i64>> {
    let d = p.num_facets();
    let n = p.dim();
    let normals: Vec<Vec<i64>> = p
        .polytope()
        .facets()
        .iter()
        .map(|f| f.normal.iter().map(|x| i64::try_from(x).unwrap()).collect())
        .collect();
    let free: Vec<usize> = (0..d).filter(|k| !indices.contains(k)).collect();
    let mut out = Vec::new();
    let mut vals = vec![-bound; free.len()];
    loop {
        let mut a = vec![1i64; d];
        for (&j, &v) in free.iter().zip(&vals) {
            a[j] = v;
        }
        let sums_to_zero = (0..n).all(|m| (0..d).map(|k| a[k] * normals[k][m]).sum::<i64>() == 0);
        let neg: Vec<usize> = (0..d).filter(|&k| a[k] < 0).collect();
        if sums_to_zero && p.face_nonempty(&neg) {
            out.push(a);
        }
        let Some(i) = (0..vals.len()).find(|&i| vals[i] < 0) else { break };
        vals[i] += 1;
        for v in &mut vals[..i] {
            *v = -bound;
        }
    }
    out
}

/// Simplex vertices are `0` and `e_i`; edges at a vertex point to the others.
pub fn simplex_betti(n: usize, xi: &[i64]) -> Vec<usize> {
    let height = |k: usize| if k == 0 { 0 } else { xi[k - 1] };
    let mut b = vec![0; n + 1];
    for v in 0..=n {
        b[(0..=n).filter(|&w| w != v && height(w) < height(v)).count()] += 1;
    }
    b
}
