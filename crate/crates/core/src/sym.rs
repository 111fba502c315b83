//! Symmetric functions: the polynomial algebra on `e_1, e_2, ...` with the
//! binomial coproduct, and the e/h/p/m bases.
//!
//! [`Sym`] is the e-basis Hopf algebra used by the generic machinery.
//! [`SymElement`] carries a runtime basis tag and converts between bases by
//! pivoting through monomial coefficients.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{self, letter_key, write_terms, Algebra, Element, Hopf};
use crate::cache::memo;
use crate::error::{Error, Result};
use crate::index::{compositions_of, partitions_of, Graded, Partition};
use crate::lin::{Lin, Tensor};
use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, Poly};
use crate::scalar::{Scalar, ScalarRing};

/// Symmetric functions in the elementary basis `e_λ = e_{λ1} e_{λ2} ···`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sym;

/// Product of `f(k)` over the parts `k` of a partition, in `A`.
pub(crate) fn product_over_parts<A: Algebra>(key: &Partition, f: impl Fn(u32) -> Lin<A::Key>) -> Lin<A::Key> {
    algebra::product::<A>(key.parts().iter().map(|&k| f(k)).collect::<Vec<_>>().iter())
}

/// Multiplicative extension of generator coproducts over the parts of a key.
pub(crate) fn coproduct_over_parts<A: Algebra<Key = Partition>>(
    key: &Partition,
    generator: impl Fn(u32) -> Tensor<Partition>,
) -> Tensor<Partition> {
    algebra::coproduct_of_factors::<A>(key.parts().iter().map(|&k| generator(k)))
}

/// `Σ_{i+j=n} x_i ⊗ x_j` with `x_0 = 1`, for single-part partition keys.
pub(crate) fn binomial_generator(n: u32) -> Tensor<Partition> {
    let single = |k: u32| {
        if k == 0 {
            Partition::empty()
        } else {
            Partition::single(k)
        }
    };
    (0..=n)
        .map(|i| (vec![single(i), single(n - i)], Scalar::one()))
        .collect()
}

impl Algebra for Sym {
    type Key = Partition;
    const TAG: &'static str = "sym";
    const BASIS: &'static str = "e";
    const COMMUTATIVE: bool = true;

    fn one() -> Partition {
        Partition::empty()
    }

    fn mul_keys(a: &Partition, b: &Partition) -> Lin<Partition> {
        Lin::basis(a.union(b))
    }

    fn basis(weight: u32) -> Vec<Partition> {
        partitions_of(weight as i64).expect("nonnegative weight")
    }

    fn key_string(key: &Partition) -> String {
        letter_key("e", key.parts())
    }
}

impl Hopf for Sym {
    fn coproduct_key(key: &Partition) -> Tensor<Partition> {
        memo::<Sym, _, _>("coproduct", key, || {
            coproduct_over_parts::<Sym>(key, binomial_generator)
        })
    }

    /// `χ(e_n) = Σ_{|I|=n} (-1)^{r(I)} e_I`, extended multiplicatively.
    fn antipode_key(key: &Partition) -> Lin<Partition> {
        memo::<Sym, _, _>("antipode", key, || product_over_parts::<Sym>(key, antipode_generator))
    }
}

fn antipode_generator(n: u32) -> Lin<Partition> {
    compositions_of(n as i64)
        .expect("nonnegative weight")
        .into_iter()
        .map(|i| (i.to_partition(), Scalar::sign(i.len())))
        .collect()
}

// ---------------------------------------------------------------------------

/// The four classical bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymBasis {
    E,
    H,
    P,
    M,
}

impl SymBasis {
    pub const ALL: [SymBasis; 4] = [SymBasis::E, SymBasis::H, SymBasis::P, SymBasis::M];

    pub fn letter(self) -> &'static str {
        match self {
            SymBasis::E => "e",
            SymBasis::H => "h",
            SymBasis::P => "p",
            SymBasis::M => "m",
        }
    }
}

impl fmt::Display for SymBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl FromStr for SymBasis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(SymBasis::E),
            "h" => Ok(SymBasis::H),
            "p" => Ok(SymBasis::P),
            "m" => Ok(SymBasis::M),
            _ => Err(Error::domain(format!("unknown symmetric function basis {s:?}"))),
        }
    }
}

/// The involutions of the symmetric functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Involution {
    /// `e_k ↦ (-1)^k e_k`.
    Dual,
    /// `e_k ↦ (-1)^k h_k`; coincides with the antipode.
    Whitney,
    /// `e_k ↦ h_k`.
    Omega,
}

impl FromStr for Involution {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dual" => Ok(Involution::Dual),
            "whitney" => Ok(Involution::Whitney),
            "omega" => Ok(Involution::Omega),
            _ => Err(Error::domain(format!("unknown involution {s:?}"))),
        }
    }
}

/// A symmetric function expressed in one of the four bases.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymElement {
    basis: SymBasis,
    terms: Lin<Partition>,
}

impl SymElement {
    pub fn new(basis: SymBasis, terms: Lin<Partition>) -> Self {
        SymElement { basis, terms }
    }

    pub fn zero(basis: SymBasis) -> Self {
        Self::new(basis, Lin::zero())
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::new(basis, Lin::basis(Partition::empty()))
    }

    pub fn basis_element(basis: SymBasis, key: Partition) -> Self {
        Self::new(basis, Lin::basis(key))
    }

    pub fn from_e(x: &Element<Sym>) -> Self {
        Self::new(SymBasis::E, x.lin().clone())
    }

    /// The same element as an [`Element<Sym>`] in the e-basis.
    pub fn to_e(&self) -> Element<Sym> {
        Element::from_lin(
            self.convert(SymBasis::E, ScalarRing::Rationals)
                .expect("e-basis conversion is integral")
                .terms,
        )
    }

    pub fn basis(&self) -> SymBasis {
        self.basis
    }

    pub fn terms(&self) -> &Lin<Partition> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, key: &Partition) -> Scalar {
        self.terms.coeff(key)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.basis, self.terms.scale(s))
    }

    pub fn component(&self, w: u32) -> Self {
        Self::new(self.basis, self.terms.component(w))
    }

    pub fn add(&self, other: &SymElement) -> SymElement {
        let other = other
            .convert(self.basis, ScalarRing::Rationals)
            .expect("rational conversion");
        Self::new(self.basis, &self.terms + &other.terms)
    }

    pub fn sub(&self, other: &SymElement) -> SymElement {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Re-expresses the element in the basis `to`. Over the integers, a
    /// non-integral result is a domain error.
    pub fn convert(&self, to: SymBasis, ring: ScalarRing) -> Result<SymElement> {
        if to == self.basis {
            return Ok(self.clone());
        }
        let mut out = Lin::zero();
        let weights: std::collections::BTreeSet<u32> = self.terms.keys().map(Graded::weight).collect();
        for w in weights {
            let parts = partitions_of(w as i64)?;
            let from_m = transition_to_m(self.basis, w);
            let inverse = inverse_to_m(to, w);
            let row: Vec<Scalar> = parts.iter().map(|p| self.terms.coeff(p)).collect();
            let m_coeffs = vec_mat(&row, &from_m);
            let target = vec_mat(&m_coeffs, &inverse);
            for (p, c) in parts.into_iter().zip(target) {
                out.add_term(p, c);
            }
        }
        let result = SymElement::new(to, out);
        if ring == ScalarRing::Integers && !result.terms.all_coefficients_integral() {
            return Err(Error::domain(format!(
                "the {to}-basis expansion has non-integral coefficients; use rational scalars"
            )));
        }
        Ok(result)
    }

    /// Product, expressed in the basis of `self`.
    pub fn mul(&self, other: &SymElement) -> SymElement {
        let other = other
            .convert(self.basis, ScalarRing::Rationals)
            .expect("rational conversion");
        let terms = match self.basis {
            SymBasis::M => self.terms.bilinear(&other.terms, monomial_product),
            _ => self.terms.bilinear(&other.terms, |a, b| Lin::basis(a.union(b))),
        };
        Self::new(self.basis, terms)
    }

    pub fn pow(&self, n: u32) -> SymElement {
        let mut acc = Self::one(self.basis);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Coproduct in the basis of `self` on both factors.
    pub fn coproduct(&self) -> Tensor<Partition> {
        match self.basis {
            SymBasis::E => self.terms.map_linear(Sym::coproduct_key),
            SymBasis::H => self
                .terms
                .map_linear(|k| coproduct_over_parts::<Sym>(k, binomial_generator)),
            SymBasis::P => self.terms.map_linear(|k| {
                coproduct_over_parts::<Sym>(k, |n| {
                    let p = Partition::single(n);
                    [
                        (vec![p.clone(), Partition::empty()], Scalar::one()),
                        (vec![Partition::empty(), p], Scalar::one()),
                    ]
                    .into_iter()
                    .collect()
                })
            }),
            SymBasis::M => self.terms.map_linear(|k| {
                k.sub_multisets()
                    .into_iter()
                    .map(|(a, b)| (vec![a, b], Scalar::one()))
                    .collect()
            }),
        }
    }

    pub fn counit(&self) -> Scalar {
        self.terms.coeff(&Partition::empty())
    }

    /// Antipode, expressed in the basis of `self`.
    pub fn antipode(&self) -> SymElement {
        match self.basis {
            SymBasis::P => Self::new(
                SymBasis::P,
                self.terms.map_linear(|k| Lin::term(k.clone(), Scalar::sign(k.len()))),
            ),
            SymBasis::E => Self::new(SymBasis::E, algebra::antipode::<Sym>(&self.terms)),
            other => SymElement::from_e(&self.to_e().antipode())
                .convert(other, ScalarRing::Rationals)
                .expect("rational conversion"),
        }
    }

    /// Applies an involution. Elements in the e- or h-basis map generator to
    /// generator; p- and m-basis elements are handled through the e-basis and
    /// converted back.
    pub fn involution(&self, which: Involution) -> SymElement {
        let sign_by_weight = |k: &Partition| Scalar::sign(k.weight() as usize);
        match (self.basis, which) {
            (_, Involution::Dual) => Self::new(
                self.basis,
                self.terms.map_linear(|k| Lin::term(k.clone(), sign_by_weight(k))),
            ),
            (SymBasis::E, Involution::Omega) => Self::new(SymBasis::H, self.terms.clone()),
            (SymBasis::H, Involution::Omega) => Self::new(SymBasis::E, self.terms.clone()),
            (SymBasis::E, Involution::Whitney) => Self::new(
                SymBasis::H,
                self.terms.map_linear(|k| Lin::term(k.clone(), sign_by_weight(k))),
            ),
            (SymBasis::H, Involution::Whitney) => Self::new(
                SymBasis::E,
                self.terms.map_linear(|k| Lin::term(k.clone(), sign_by_weight(k))),
            ),
            (basis, _) => {
                let e = self
                    .convert(SymBasis::E, ScalarRing::Rationals)
                    .expect("rational conversion");
                e.involution(which)
                    .convert(basis, ScalarRing::Rationals)
                    .expect("rational conversion")
            }
        }
    }

    /// The literal symmetric polynomial in `x_1, ..., x_n`. Faithful only
    /// when `n` is at least the largest weight present.
    pub fn expand(&self, n: usize) -> Poly {
        if let Some(w) = self.terms.max_weight() {
            if (w as usize) > n {
                log::warn!("expanding a weight-{w} symmetric function in only {n} variables loses information");
            }
        }
        let mut out = Poly::zero(n);
        for (key, c) in self.terms.iter() {
            let poly = match self.basis {
                SymBasis::M => monomial_polynomial(key, n),
                basis => key
                    .parts()
                    .iter()
                    .fold(Poly::one(n), |acc, &k| acc.mul(&generator_polynomial(basis, k, n))),
            };
            out = out.add(&poly.scale(c));
        }
        out
    }
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.basis.letter();
        write_terms(f, self.terms.iter().map(|(k, c)| (letter_key(letter, k.parts()), c)))
    }
}

impl fmt::Debug for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Hall inner product, bilinear with `⟨h_λ, m_μ⟩ = δ_{λμ}`.
pub fn hall_pair(f: &SymElement, g: &SymElement) -> Scalar {
    let f = f
        .convert(SymBasis::H, ScalarRing::Rationals)
        .expect("rational conversion");
    let g = g
        .convert(SymBasis::M, ScalarRing::Rationals)
        .expect("rational conversion");
    let mut acc = Scalar::zero();
    for (k, c) in f.terms.iter() {
        acc += &(c * &g.terms.coeff(k));
    }
    acc
}

/// Pairs a tensor in the basis `f_basis ⊗ f_basis` against `g ⊗ g'` factorwise.
pub fn hall_pair_tensor(x: &Tensor<Partition>, basis: SymBasis, left: &SymElement, right: &SymElement) -> Scalar {
    let mut acc = Scalar::zero();
    for (pair, c) in x.iter() {
        let a = SymElement::basis_element(basis, pair[0].clone());
        let b = SymElement::basis_element(basis, pair[1].clone());
        acc += &(c * &(&hall_pair(&a, left) * &hall_pair(&b, right)));
    }
    acc
}

fn vec_mat(v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![Scalar::zero(); cols];
    for (vi, row) in v.iter().zip(m) {
        if vi.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += &(vi * x);
        }
    }
    out
}

/// Row `λ`, column `μ`: the coefficient of `m_μ` in the basis element `b_λ`,
/// over the partitions of `w` in enumeration order.
pub fn transition_to_m(basis: SymBasis, w: u32) -> Matrix {
    memo::<SymBasis, _, _>("to_m", &(basis, w), || {
        let parts = partitions_of(w as i64).expect("nonnegative weight");
        parts
            .iter()
            .map(|lambda| {
                parts
                    .iter()
                    .map(|mu| Scalar::from_int(count_fillings(basis, lambda.parts(), mu.parts())))
                    .collect()
            })
            .collect()
    })
}

fn inverse_to_m(basis: SymBasis, w: u32) -> Matrix {
    memo::<SymBasis, _, _>("from_m", &(basis, w), || {
        linalg::invert(&transition_to_m(basis, w)).expect("transition matrices are invertible over the rationals")
    })
}

/// The coefficient of `x^μ` in `b_{λ_1} b_{λ_2} ···`, counted as fillings of
/// a matrix with row sums `λ` and column sums `μ`: 0/1 entries for `e`,
/// arbitrary entries for `h`, one nonzero entry per row for `p`.
fn count_fillings(basis: SymBasis, rows: &[u32], cols: &[u32]) -> i64 {
    if basis == SymBasis::M {
        return i64::from(rows == cols);
    }
    fn distribute(basis: SymBasis, r: u32, col: usize, remaining: &mut Vec<u32>, on_done: &mut dyn FnMut(&Vec<u32>)) {
        if r == 0 {
            on_done(remaining);
            return;
        }
        if col == remaining.len() {
            return;
        }
        let max = match basis {
            SymBasis::E => 1.min(remaining[col]),
            _ => r.min(remaining[col]),
        };
        for take in (0..=max).rev() {
            if basis == SymBasis::P && take != 0 && take != r {
                continue;
            }
            remaining[col] -= take;
            distribute(basis, r - take, col + 1, remaining, on_done);
            remaining[col] += take;
        }
    }
    fn go(basis: SymBasis, rows: &[u32], remaining: Vec<u32>, cache: &mut HashMap<(usize, Vec<u32>), i64>) -> i64 {
        if rows.is_empty() {
            return i64::from(remaining.iter().all(|&x| x == 0));
        }
        let key = (rows.len(), remaining.clone());
        if let Some(&v) = cache.get(&key) {
            return v;
        }
        let mut nexts = Vec::new();
        let mut rem = remaining;
        distribute(basis, rows[0], 0, &mut rem, &mut |r| nexts.push(r.clone()));
        let total = nexts.into_iter().map(|n| go(basis, &rows[1..], n, cache)).sum();
        cache.insert(key, total);
        total
    }
    go(basis, rows, cols.to_vec(), &mut HashMap::new())
}

/// The coefficient of `m_μ` in `m_λ m_ν`: the number of distinct
/// rearrangements `α` of `λ` padded to `ℓ(μ)` parts such that `μ - α` is a
/// rearrangement of `ν` padded the same way.
fn monomial_product(lambda: &Partition, nu: &Partition) -> Lin<Partition> {
    memo::<SymBasis, _, _>("m_product", &(lambda.clone(), nu.clone()), || {
        let w = lambda.weight() + nu.weight();
        let mut out = Lin::zero();
        for mu in partitions_of(w as i64).expect("nonnegative weight") {
            let len = mu.len();
            if lambda.len() > len || nu.len() > len || lambda.len() + nu.len() < len {
                continue;
            }
            let mut padded = lambda.parts().to_vec();
            padded.resize(len, 0);
            let mut count = 0;
            for alpha in padded_permutations(&padded) {
                let mut rest = Vec::with_capacity(len);
                let mut ok = true;
                for (m, a) in mu.parts().iter().zip(&alpha) {
                    if a > m {
                        ok = false;
                        break;
                    }
                    if m > a {
                        rest.push(m - a);
                    }
                }
                if ok && Partition::new(rest).is_ok_and(|p| &p == nu) {
                    count += 1;
                }
            }
            out.add_term(mu, Scalar::from_int(count));
        }
        out
    })
}

/// The distinct rearrangements of a multiset of nonnegative integers.
fn padded_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // Lexicographic next-permutation walk visits each distinct arrangement once.
    loop {
        let Some(i) = (0..sorted.len().saturating_sub(1))
            .rev()
            .find(|&i| sorted[i] < sorted[i + 1])
        else {
            break;
        };
        let j = (i + 1..sorted.len())
            .rev()
            .find(|&j| sorted[j] > sorted[i])
            .expect("successor exists");
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

fn generator_polynomial(basis: SymBasis, k: u32, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    match basis {
        SymBasis::E => {
            for mask in 0u64..(1u64 << n) {
                if mask.count_ones() == k {
                    let e = (0..n).map(|i| ((mask >> i) & 1) as u32).collect();
                    out = out.add(&Poly::monomial(e, Scalar::one()));
                }
            }
        }
        SymBasis::H => {
            fn go(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Poly) {
                if prefix.len() == n - 1 {
                    prefix.push(left);
                    *out = out.add(&Poly::monomial(prefix.clone(), Scalar::one()));
                    prefix.pop();
                    return;
                }
                for a in 0..=left {
                    prefix.push(a);
                    go(n, left - a, prefix, out);
                    prefix.pop();
                }
            }
            if n > 0 {
                go(n, k, &mut Vec::new(), &mut out);
            }
        }
        SymBasis::P => {
            for i in 0..n {
                let mut e = vec![0; n];
                e[i] = k;
                out = out.add(&Poly::monomial(e, Scalar::one()));
            }
        }
        SymBasis::M => unreachable!("m is not multiplicative"),
    }
    out
}

fn monomial_polynomial(key: &Partition, n: usize) -> Poly {
    if key.len() > n {
        return Poly::zero(n);
    }
    let mut padded = key.parts().to_vec();
    padded.resize(n, 0);
    let terms = padded_permutations(&padded)
        .into_iter()
        .map(|e| (Monomial(e), Scalar::one()))
        .collect();
    Poly::from_terms(n, terms)
}

/// Reads back the m-basis expansion of a symmetric polynomial.
pub fn collect_symmetric(poly: &Poly) -> SymElement {
    let mut out = Lin::zero();
    for (mono, c) in poly.terms().iter() {
        let mut sorted = mono.0.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if sorted != mono.0 {
            continue;
        }
        sorted.retain(|&x| x > 0);
        out.add_term(Partition::new(sorted).expect("positive parts"), c.clone());
    }
    SymElement::new(SymBasis::M, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_hopf_axioms;
    use crate::index::part;

    fn el(basis: SymBasis, terms: &[(&[u32], i64)]) -> SymElement {
        SymElement::new(
            basis,
            terms.iter().map(|(p, c)| (part(p), Scalar::from_int(*c))).collect(),
        )
    }

    #[test]
    fn e_products_are_unions() {
        let e1 = el(SymBasis::E, &[(&[1], 1)]);
        assert_eq!(e1.mul(&e1), el(SymBasis::E, &[(&[1, 1], 1)]));
        let h = el(SymBasis::H, &[(&[1], 1)]).mul(&el(SymBasis::H, &[(&[2], 1)]));
        assert_eq!(h, el(SymBasis::H, &[(&[2, 1], 1)]));
    }

    #[test]
    fn monomial_product_small_case() {
        let m1 = el(SymBasis::M, &[(&[1], 1)]);
        assert_eq!(m1.mul(&m1), el(SymBasis::M, &[(&[2], 1), (&[1, 1], 2)]));
    }

    #[test]
    fn conversions_match_known_identities() {
        let h2 = el(SymBasis::H, &[(&[2], 1)]);
        assert_eq!(
            h2.convert(SymBasis::E, ScalarRing::Integers).unwrap(),
            el(SymBasis::E, &[(&[1, 1], 1), (&[2], -1)])
        );
        let p2 = el(SymBasis::P, &[(&[2], 1)]);
        assert_eq!(
            p2.convert(SymBasis::E, ScalarRing::Integers).unwrap(),
            el(SymBasis::E, &[(&[1, 1], 1), (&[2], -2)])
        );
        let m1 = el(SymBasis::M, &[(&[1], 1)]);
        assert_eq!(
            m1.convert(SymBasis::E, ScalarRing::Integers).unwrap(),
            el(SymBasis::E, &[(&[1], 1)])
        );
    }

    #[test]
    fn p_basis_over_integers_is_rejected_when_fractional() {
        let e2 = el(SymBasis::E, &[(&[2], 1)]);
        assert!(matches!(
            e2.convert(SymBasis::P, ScalarRing::Integers),
            Err(Error::Domain(_))
        ));
        let p = e2.convert(SymBasis::P, ScalarRing::Rationals).unwrap();
        assert_eq!(p.coeff(&part(&[1, 1])), Scalar::ratio(1, 2));
        assert_eq!(p.coeff(&part(&[2])), Scalar::ratio(-1, 2));
    }

    #[test]
    fn conversion_round_trips_through_every_basis() {
        for w in 0..=6 {
            for from in SymBasis::ALL {
                for to in SymBasis::ALL {
                    for p in partitions_of(w).unwrap() {
                        let x = SymElement::basis_element(from, p);
                        let back = x
                            .convert(to, ScalarRing::Rationals)
                            .unwrap()
                            .convert(from, ScalarRing::Rationals)
                            .unwrap();
                        assert_eq!(back, x);
                    }
                }
            }
        }
    }

    #[test]
    fn e_basis_coproduct_and_antipode() {
        let e2 = Element::<Sym>::basis(part(&[2]));
        let expected: Tensor<Partition> = [
            (vec![part(&[2]), part(&[])], Scalar::one()),
            (vec![part(&[1]), part(&[1])], Scalar::one()),
            (vec![part(&[]), part(&[2])], Scalar::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(e2.coproduct(), expected);
        assert_eq!(e2.antipode().to_string(), "e[1,1] - e[2]");
        let e3 = Element::<Sym>::basis(part(&[3]));
        assert_eq!(e3.antipode().to_string(), "-e[1,1,1] + 2*e[2,1] - e[3]");
    }

    #[test]
    fn hopf_axioms_low_weight() {
        assert!(check_hopf_axioms::<Sym>(5).passed());
    }

    #[test]
    fn every_basis_coproduct_agrees_with_e_basis() {
        for basis in SymBasis::ALL {
            for p in partitions_of(4).unwrap() {
                let x = SymElement::basis_element(basis, p);
                let direct = x.coproduct();
                let via_e: Tensor<Partition> = x.to_e().coproduct();
                let back = via_e.map_linear(|pair| {
                    let a = SymElement::basis_element(SymBasis::E, pair[0].clone())
                        .convert(basis, ScalarRing::Rationals)
                        .unwrap();
                    let b = SymElement::basis_element(SymBasis::E, pair[1].clone())
                        .convert(basis, ScalarRing::Rationals)
                        .unwrap();
                    a.terms
                        .bilinear(&b.terms, |x, y| Lin::basis(vec![x.clone(), y.clone()]))
                });
                assert_eq!(direct, back, "{basis}");
            }
        }
    }

    #[test]
    fn hall_pairing_examples() {
        let h21 = el(SymBasis::H, &[(&[2, 1], 1)]);
        let m21 = el(SymBasis::M, &[(&[2, 1], 1)]);
        let m11 = el(SymBasis::M, &[(&[1, 1], 1)]);
        let h2 = el(SymBasis::H, &[(&[2], 1)]);
        let e2 = el(SymBasis::E, &[(&[2], 1)]);
        assert_eq!(hall_pair(&h21, &m21), Scalar::one());
        assert_eq!(hall_pair(&h2, &m11), Scalar::zero());
        assert_eq!(hall_pair(&e2, &m11), Scalar::one());
    }

    #[test]
    fn expansions() {
        let e2 = el(SymBasis::E, &[(&[2], 1)]);
        assert_eq!(e2.expand(2).to_string(), "x1*x2");
        let h2 = el(SymBasis::H, &[(&[2], 1)]).expand(2);
        assert_eq!(h2.coeff(&[2, 0]), Scalar::one());
        assert_eq!(h2.coeff(&[1, 1]), Scalar::one());
        assert_eq!(h2.coeff(&[0, 2]), Scalar::one());
        assert_eq!(h2.terms().len(), 3);
        let m21 = el(SymBasis::M, &[(&[2, 1], 1)]).expand(2);
        assert_eq!(m21.coeff(&[2, 1]), Scalar::one());
        assert_eq!(m21.coeff(&[1, 2]), Scalar::one());
        assert_eq!(m21.terms().len(), 2);
    }

    #[test]
    fn involutions() {
        let e3 = el(SymBasis::E, &[(&[3], 1)]);
        assert_eq!(e3.involution(Involution::Dual), el(SymBasis::E, &[(&[3], -1)]));
        let e2 = el(SymBasis::E, &[(&[2], 1)]);
        assert_eq!(e2.involution(Involution::Whitney), el(SymBasis::H, &[(&[2], 1)]));
        let o = e2.involution(Involution::Omega);
        assert_eq!(o, el(SymBasis::H, &[(&[2], 1)]));
        assert_eq!(o.involution(Involution::Omega), e2);
    }

    #[test]
    fn padded_permutations_are_distinct() {
        assert_eq!(padded_permutations(&[1, 0, 0]).len(), 3);
        assert_eq!(padded_permutations(&[2, 1, 0]).len(), 6);
        assert_eq!(padded_permutations(&[]).len(), 1);
    }
}
