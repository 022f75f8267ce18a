use alloc::vec::Vec;

use super::{F2Poly, Monomial, RingError};

/// Reduced Gröbner basis under graded reverse lexicographic order with
/// `t` last. Generators are sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    gens: Vec<F2Poly>,
}

impl GroebnerBasis {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[F2Poly] {
        &self.gens
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.gens.iter().map(|g| g.leading().expect("basis elements are nonzero"))
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.leading_monomials().any(Monomial::is_one)
    }

    /// Fully reduced remainder of `f`.
    pub fn reduce(&self, f: &F2Poly) -> F2Poly {
        reduce(f, &self.gens)
    }

    pub fn contains(&self, f: &F2Poly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Basis of `I : t^∞`. Valid because the order is graded reverse
    /// lexicographic with `t` smallest and the generators are homogeneous:
    /// dividing each basis element by its largest `t`-power already yields
    /// a basis of the saturation; the rerun reduces it.
    pub fn saturate_t(&self) -> GroebnerBasis {
        let stripped: Vec<F2Poly> = self.gens.iter().map(F2Poly::strip_t).collect();
        GroebnerBasis {
            nvars: self.nvars,
            gens: groebner(&stripped),
        }
    }

    /// Sets `t = 1` in every generator. On a `t`-saturated homogeneous basis
    /// no leading monomial involves `t`, so the result is a reduced basis of
    /// the dehomogenized ideal under graded reverse lexicographic order.
    pub fn dehomogenize(&self) -> GroebnerBasis {
        let gens: Vec<F2Poly> = self
            .gens
            .iter()
            .map(F2Poly::dehomogenize)
            .filter(|g| !g.is_zero())
            .collect();
        GroebnerBasis {
            nvars: self.nvars,
            gens: interreduce(gens),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(F2Poly::is_homogeneous)
    }
}

/// Buchberger's algorithm on cod-homogeneous generators.
pub fn buchberger(nvars: usize, gens: &[F2Poly]) -> Result<GroebnerBasis, RingError> {
    for (i, g) in gens.iter().enumerate() {
        if g.nvars() != nvars {
            return Err(RingError::VariableCount {
                expected: nvars,
                got: g.nvars(),
            });
        }
        if !g.is_homogeneous() {
            return Err(RingError::NonHomogeneousGenerator { index: i });
        }
    }
    Ok(GroebnerBasis {
        nvars,
        gens: groebner(gens),
    })
}

/// Remainder of `f` modulo `gens`, reducing every term. Divisors are tried in
/// slice order.
pub(crate) fn reduce(f: &F2Poly, gens: &[F2Poly]) -> F2Poly {
    let mut rest = f.clone();
    let mut rem = F2Poly::zero(f.nvars());
    while let Some(lt) = rest.leading().cloned() {
        let divisor = gens.iter().find_map(|g| {
            let lm = g.leading()?;
            lm.quotient_of(&lt).map(|q| (g, q))
        });
        match divisor {
            Some((g, q)) => rest += &g.mul_monomial(&q),
            None => {
                rest.toggle(lt.clone());
                rem.toggle(lt);
            }
        }
    }
    rem
}

fn s_poly(a: &F2Poly, b: &F2Poly) -> F2Poly {
    let la = a.leading().unwrap();
    let lb = b.leading().unwrap();
    let l = la.lcm(lb);
    let mut s = a.mul_monomial(&la.quotient_of(&l).unwrap());
    s += &b.mul_monomial(&lb.quotient_of(&l).unwrap());
    s
}

fn groebner(input: &[F2Poly]) -> Vec<F2Poly> {
    let mut basis: Vec<F2Poly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for f in input {
        let r = reduce(f, &basis);
        if r.is_zero() {
            continue;
        }
        for i in 0..basis.len() {
            pairs.push((i, basis.len()));
        }
        basis.push(r);
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm first, ties by index
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, &(a, b)), (_, &(c, d))| {
                let l1 = basis[a].leading().unwrap().lcm(basis[b].leading().unwrap());
                let l2 = basis[c].leading().unwrap().lcm(basis[d].leading().unwrap());
                l1.cmp(&l2).then((a, b).cmp(&(c, d)))
            })
            .unwrap();
        let (i, j) = pairs.remove(k);
        let (li, lj) = (basis[i].leading().unwrap(), basis[j].leading().unwrap());
        if li.coprime(lj) {
            continue;
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        let n = basis.len();
        for i in 0..n {
            pairs.push((i, n));
        }
        basis.push(r);
    }
    interreduce(basis)
}

/// Minimal, fully reduced, sorted basis generating the same ideal as a
/// Gröbner basis `basis`.
fn interreduce(mut basis: Vec<F2Poly>) -> Vec<F2Poly> {
    basis.sort_by(|a, b| a.leading().cmp(&b.leading()));
    let mut minimal: Vec<F2Poly> = Vec::new();
    for g in basis {
        let lm = g.leading().unwrap();
        if minimal.iter().any(|h| h.leading().unwrap().divides(lm)) {
            continue;
        }
        minimal.push(g);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let lm = minimal[i].leading().unwrap().clone();
        let mut tail = minimal[i].clone();
        tail.toggle(lm.clone());
        let others: Vec<F2Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let mut g = reduce(&tail, &others);
        g.toggle(lm);
        out.push(g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32], t: u32) -> Monomial {
        Monomial::new(e.to_vec(), t)
    }

    fn p(nvars: usize, ms: &[(&[u32], u32)]) -> F2Poly {
        F2Poly::from_monomials(nvars, ms.iter().map(|(e, t)| m(e, *t)))
    }

    #[test]
    fn principal_monomial_ideal() {
        let x = p(1, &[(&[1], 0)]);
        let gb = buchberger(1, core::slice::from_ref(&x)).unwrap();
        assert_eq!(gb.generators(), &[x]);
    }

    #[test]
    fn zero_generators() {
        let gb = buchberger(2, &[F2Poly::zero(2)]).unwrap();
        assert!(gb.generators().is_empty());
    }

    #[test]
    fn rejects_non_homogeneous() {
        let f = p(1, &[(&[2], 0), (&[1], 0)]);
        assert_eq!(
            buchberger(1, &[f]),
            Err(RingError::NonHomogeneousGenerator { index: 0 })
        );
    }

    #[test]
    fn saturation_examples() {
        // X t -> X
        let gb = buchberger(1, &[p(1, &[(&[1], 1)])]).unwrap().saturate_t();
        assert_eq!(gb.generators(), &[p(1, &[(&[1], 0)])]);
        // X^2 t + X t^2 -> X^2 + X t
        let gb = buchberger(1, &[p(1, &[(&[2], 1), (&[1], 2)])]).unwrap().saturate_t();
        assert_eq!(gb.generators(), &[p(1, &[(&[2], 0), (&[1], 1)])]);
        assert_eq!(gb.saturate_t(), gb);
    }

    #[test]
    fn two_relation_basis_is_already_groebner() {
        // vars (Y, X); Y^2 + XY + t^2 and X^3 + Y t^2
        let f1 = p(2, &[(&[2, 0], 0), (&[1, 1], 0), (&[0, 0], 2)]);
        let f2 = p(2, &[(&[0, 3], 0), (&[1, 0], 2)]);
        let gb = buchberger(2, &[f1.clone(), f2.clone()]).unwrap();
        assert_eq!(gb.generators(), &[f1, f2]);
    }

    #[test]
    fn linear_elimination() {
        // X1 + X2, X1*X2 + t^2  ->  X1 + X2, X2^2 + t^2
        let gb = buchberger(
            2,
            &[p(2, &[(&[1, 0], 0), (&[0, 1], 0)]), p(2, &[(&[1, 1], 0), (&[0, 0], 2)])],
        )
        .unwrap();
        assert_eq!(
            gb.generators(),
            &[p(2, &[(&[1, 0], 0), (&[0, 1], 0)]), p(2, &[(&[0, 2], 0), (&[0, 0], 2)])]
        );
    }
}
