use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// A monomial `X^e * t^k` in `d` variables plus the grading variable
/// `t = q^{-1}`.
///
/// Ordered by graded reverse lexicographic order with
/// `X_1 > X_2 > ... > X_d > t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    t: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            t: 0,
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn t_power(nvars: usize, k: u32) -> Self {
        Monomial {
            exps: vec![0; nvars],
            t: k,
        }
    }

    pub fn new(exps: Vec<u32>, t: u32) -> Self {
        Monomial { exps, t }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn tdeg(&self) -> u32 {
        self.t
    }

    /// Degree in the `X` variables alone.
    pub fn x_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Codimension degree: every `X_i` and `t` count 1.
    pub fn cod(&self) -> u32 {
        self.x_degree() + self.t
    }

    pub fn is_one(&self) -> bool {
        self.t == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// True when only `X_i` (and no `t`) occurs.
    pub fn pure_power_of(&self) -> Option<usize> {
        if self.t != 0 {
            return None;
        }
        let mut nz = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nz.next()?;
        nz.next().is_none().then_some(i)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            t: self.t + other.t,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.t <= other.t && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            t: other.t - self.t,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
            t: self.t.max(other.t),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (self.t == 0 || other.t == 0)
            && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Sets `t = 1`.
    pub fn dehomogenize(&self) -> Monomial {
        Monomial {
            exps: self.exps.clone(),
            t: 0,
        }
    }

    pub fn with_t(&self, t: u32) -> Monomial {
        Monomial {
            exps: self.exps.clone(),
            t,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.cod()
            .cmp(&other.cod())
            .then_with(|| other.t.cmp(&self.t))
            .then_with(|| {
                for (a, b) in self.exps.iter().zip(&other.exps).rev() {
                    match b.cmp(a) {
                        Ordering::Equal => continue,
                        c => return c,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut factor = |f: &mut fmt::Formatter<'_>, name: &dyn fmt::Display, e: u32| -> fmt::Result {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{e}")
            }
        };
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                factor(f, &format_args!("X{}", i + 1), e)?;
            }
        }
        if self.t > 0 {
            factor(f, &"t", self.t)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
