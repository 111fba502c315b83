//! Commutative polynomials in finitely many variables `x_1, ..., x_N`.

use std::fmt;

use crate::index::Graded;
use crate::lin::Lin;
use crate::scalar::Scalar;

/// An exponent vector of fixed length `N`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Graded for Monomial {
    fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.0)
    }
}

/// A polynomial with exact coefficients in `nvars` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: Lin<Monomial>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Lin::zero(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Poly {
            nvars,
            terms: Lin::term(Monomial(vec![0; nvars]), c),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly {
            nvars,
            terms: Lin::basis(Monomial(e)),
        }
    }

    pub fn monomial(exponents: Vec<u32>, c: Scalar) -> Self {
        Poly {
            nvars: exponents.len(),
            terms: Lin::term(Monomial(exponents), c),
        }
    }

    pub fn from_terms(nvars: usize, terms: Lin<Monomial>) -> Self {
        debug_assert!(terms.keys().all(|m| m.0.len() == nvars));
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &Lin<Monomial> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Scalar {
        self.terms.coeff(&Monomial(exponents.to_vec()))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        Poly {
            nvars: self.nvars,
            terms: &self.terms + &other.terms,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.scale(c),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.mul_truncated(other, None)
    }

    /// Product in `Q[x]/(x_i^{bound_i + 1})` when `bounds` is given.
    pub fn mul_truncated(&self, other: &Poly, bounds: Option<&[u32]>) -> Poly {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Lin::zero();
        for (a, ca) in self.terms.iter() {
            'next: for (b, cb) in other.terms.iter() {
                let mut e = Vec::with_capacity(self.nvars);
                for i in 0..self.nvars {
                    let s = a.0[i] + b.0[i];
                    if let Some(bd) = bounds {
                        if s > bd[i] {
                            continue 'next;
                        }
                    }
                    e.push(s);
                }
                out.add_term(Monomial(e), ca * cb);
            }
        }
        Poly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn pow_truncated(&self, n: u32, bounds: Option<&[u32]>) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..n {
            acc = acc.mul_truncated(self, bounds);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Poly {
        self.pow_truncated(n, None)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |m: &Monomial| {
            let factors: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{e}", i + 1)
                        }
                    })
                    .collect();
            if factors.is_empty() {
                "1".to_string()
            } else {
                factors.join("*")
            }
        };
        crate::algebra::write_terms(f, self.terms.iter().map(|(m, c)| (render(m), c)))
    }
}
