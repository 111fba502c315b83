//! Graded connected algebras and Hopf algebras over exact scalars.
//!
//! Each concrete algebra is a zero-sized marker type implementing
//! [`Algebra`] (and [`Hopf`] when it carries a coalgebra). Elements are
//! [`Element<A>`], a sparse combination of basis keys tagged by the marker,
//! so the same underlying algebra can carry different coproducts through
//! different markers (e.g. [`crate::NSym`] and [`crate::Bfk`]).

use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use crate::cache::memo;
use crate::index::Graded;
use crate::lin::{self, Lin, Tensor};
use crate::scalar::Scalar;

/// A graded connected algebra with a distinguished basis.
pub trait Algebra: Copy + Default + PartialEq + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    type Key: Ord + Clone + Hash + fmt::Debug + Graded + Send + Sync + 'static;

    /// Algebra tag used in documents (`sym`, `nsym`, ...).
    const TAG: &'static str;
    /// Basis tag used in documents and in printed keys.
    const BASIS: &'static str;
    /// Coalgebra tag for algebras that carry more than one.
    const STRUCTURE: Option<&'static str> = None;
    const COMMUTATIVE: bool;

    fn one() -> Self::Key;
    fn mul_keys(a: &Self::Key, b: &Self::Key) -> Lin<Self::Key>;
    /// All basis keys of the given weight.
    fn basis(weight: u32) -> Vec<Self::Key>;
    /// Printed form of a basis key; the unit prints as `1`.
    fn key_string(key: &Self::Key) -> String;
}

/// A connected graded Hopf algebra structure on an [`Algebra`].
pub trait Hopf: Algebra {
    fn coproduct_key(key: &Self::Key) -> Tensor<Self::Key>;

    fn antipode_key(key: &Self::Key) -> Lin<Self::Key> {
        recursive_antipode_key::<Self>(key)
    }

    fn counit_key(key: &Self::Key) -> Scalar {
        if key.weight() == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }
}

pub fn multiply<A: Algebra>(x: &Lin<A::Key>, y: &Lin<A::Key>) -> Lin<A::Key> {
    x.bilinear(y, A::mul_keys)
}

pub fn power<A: Algebra>(x: &Lin<A::Key>, n: u32) -> Lin<A::Key> {
    let mut acc = Lin::basis(A::one());
    for _ in 0..n {
        acc = multiply::<A>(&acc, x);
    }
    acc
}

/// Product of a sequence of elements, left to right.
pub fn product<'a, A: Algebra>(xs: impl IntoIterator<Item = &'a Lin<A::Key>>) -> Lin<A::Key> {
    xs.into_iter()
        .fold(Lin::basis(A::one()), |acc, x| multiply::<A>(&acc, x))
}

/// Factorwise product in `A^{⊗n}`.
pub fn tensor_mul<A: Algebra>(x: &Tensor<A::Key>, y: &Tensor<A::Key>) -> Tensor<A::Key> {
    lin::tensor_mul(x, y, &|_, a, b| A::mul_keys(a, b))
}

/// The unit `1 ⊗ ... ⊗ 1` with `n` factors.
pub fn tensor_unit<A: Algebra>(n: usize) -> Tensor<A::Key> {
    Lin::basis(vec![A::one(); n])
}

pub fn coproduct<H: Hopf>(x: &Lin<H::Key>) -> Tensor<H::Key> {
    x.map_linear(H::coproduct_key)
}

pub fn antipode<H: Hopf>(x: &Lin<H::Key>) -> Lin<H::Key> {
    x.map_linear(H::antipode_key)
}

pub fn counit<H: Hopf>(x: &Lin<H::Key>) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, c) in x.iter() {
        acc += &(c * &H::counit_key(k));
    }
    acc
}

/// Multiplicative extension of a coproduct given on the factors of a key.
pub fn coproduct_of_factors<H: Algebra>(factors: impl IntoIterator<Item = Tensor<H::Key>>) -> Tensor<H::Key> {
    factors
        .into_iter()
        .fold(tensor_unit::<H>(2), |acc, d| tensor_mul::<H>(&acc, &d))
}

/// Antipode from the recursion `S(x) = -Σ S(x') x''` over the coproduct
/// terms with `x' ≠ x`, valid in any connected graded bialgebra. Memoized per key.
pub fn recursive_antipode_key<H: Hopf>(key: &H::Key) -> Lin<H::Key> {
    if key.weight() == 0 {
        return Lin::basis(key.clone());
    }
    memo::<H, _, _>("recursive_antipode", key, || {
        let mut out = Lin::zero();
        let w = key.weight();
        for (pair, c) in H::coproduct_key(key).iter() {
            let (left, right) = (&pair[0], &pair[1]);
            if left.weight() == w {
                continue;
            }
            let s_left = recursive_antipode_key::<H>(left);
            let prod = multiply::<H>(&s_left, &Lin::basis(right.clone()));
            out.add_scaled(&prod, &-c);
        }
        out
    })
}

/// `μ ∘ (f ⊗ g) ∘ Δ` applied to a key.
pub fn convolve_key<H: Hopf>(
    key: &H::Key,
    f: impl Fn(&H::Key) -> Lin<H::Key>,
    g: impl Fn(&H::Key) -> Lin<H::Key>,
) -> Lin<H::Key> {
    let mut out = Lin::zero();
    for (pair, c) in H::coproduct_key(key).iter() {
        let prod = multiply::<H>(&f(&pair[0]), &g(&pair[1]));
        out.add_scaled(&prod, c);
    }
    out
}

// ---------------------------------------------------------------------------

/// An element of the algebra `A`: a sparse combination of basis keys.
pub struct Element<A: Algebra> {
    terms: Lin<A::Key>,
    _algebra: PhantomData<A>,
}

impl<A: Algebra> Clone for Element<A> {
    fn clone(&self) -> Self {
        Self::from_lin(self.terms.clone())
    }
}

impl<A: Algebra> PartialEq for Element<A> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<A: Algebra> Eq for Element<A> {}

impl<A: Algebra> Hash for Element<A> {
    fn hash<S: std::hash::Hasher>(&self, state: &mut S) {
        self.terms.hash(state);
    }
}

impl<A: Algebra> Default for Element<A> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<A: Algebra> Element<A> {
    pub fn from_lin(terms: Lin<A::Key>) -> Self {
        Element {
            terms,
            _algebra: PhantomData,
        }
    }

    pub fn zero() -> Self {
        Self::from_lin(Lin::zero())
    }

    pub fn one() -> Self {
        Self::basis(A::one())
    }

    pub fn basis(key: A::Key) -> Self {
        Self::from_lin(Lin::basis(key))
    }

    pub fn term(key: A::Key, coeff: Scalar) -> Self {
        Self::from_lin(Lin::term(key, coeff))
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::term(A::one(), c)
    }

    pub fn lin(&self) -> &Lin<A::Key> {
        &self.terms
    }

    pub fn into_lin(self) -> Lin<A::Key> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn coeff(&self, key: &A::Key) -> Scalar {
        self.terms.coeff(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A::Key, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_lin(self.terms.scale(s))
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::from_lin(power::<A>(&self.terms, n))
    }

    pub fn component(&self, w: u32) -> Self {
        Self::from_lin(self.terms.component(w))
    }

    pub fn homogeneous_weight(&self) -> Option<u32> {
        self.terms.homogeneous_weight()
    }

    /// Reinterprets the same keys under another marker sharing the key type.
    pub fn cast<B: Algebra<Key = A::Key>>(&self) -> Element<B> {
        Element::from_lin(self.terms.clone())
    }

    /// The constant term, i.e. the coefficient of the unit.
    pub fn constant_term(&self) -> Scalar {
        self.terms.coeff(&A::one())
    }
}

impl<H: Hopf> Element<H> {
    pub fn coproduct(&self) -> Tensor<H::Key> {
        coproduct::<H>(&self.terms)
    }

    pub fn antipode(&self) -> Self {
        Self::from_lin(antipode::<H>(&self.terms))
    }

    pub fn counit(&self) -> Scalar {
        counit::<H>(&self.terms)
    }
}

impl<A: Algebra> fmt::Display for Element<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(k, c)| (A::key_string(k), c)))
    }
}

impl<A: Algebra> fmt::Debug for Element<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Writes `c1*k1 + c2*k2 - ...`, omitting unit coefficients; the unit key
/// prints as a bare scalar. Zero prints as `0`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Scalar)>,
) -> fmt::Result {
    let mut first = true;
    for (key, c) in terms {
        let negative = c.is_negative();
        let mag = c.abs();
        if first {
            if negative {
                write!(f, "-")?;
            }
        } else if negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        if key == "1" {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{key}")?;
        } else {
            write!(f, "{mag}*{key}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Printed form `L[i,j,...]` of a key given by its parts.
pub(crate) fn letter_key(letter: &str, parts: &[u32]) -> String {
    if parts.is_empty() {
        return "1".to_string();
    }
    let body: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("{letter}[{}]", body.join(","))
}

impl<A: Algebra> Add for &Element<A> {
    type Output = Element<A>;
    fn add(self, rhs: &Element<A>) -> Element<A> {
        Element::from_lin(&self.terms + &rhs.terms)
    }
}

impl<A: Algebra> Sub for &Element<A> {
    type Output = Element<A>;
    fn sub(self, rhs: &Element<A>) -> Element<A> {
        Element::from_lin(&self.terms - &rhs.terms)
    }
}

impl<A: Algebra> Mul for &Element<A> {
    type Output = Element<A>;
    fn mul(self, rhs: &Element<A>) -> Element<A> {
        Element::from_lin(multiply::<A>(&self.terms, &rhs.terms))
    }
}

impl<A: Algebra> Neg for &Element<A> {
    type Output = Element<A>;
    fn neg(self) -> Element<A> {
        Element::from_lin(-&self.terms)
    }
}

impl<A: Algebra> Add for Element<A> {
    type Output = Element<A>;
    fn add(self, rhs: Element<A>) -> Element<A> {
        &self + &rhs
    }
}

impl<A: Algebra> Sub for Element<A> {
    type Output = Element<A>;
    fn sub(self, rhs: Element<A>) -> Element<A> {
        &self - &rhs
    }
}

impl<A: Algebra> Mul for Element<A> {
    type Output = Element<A>;
    fn mul(self, rhs: Element<A>) -> Element<A> {
        &self * &rhs
    }
}

impl<A: Algebra> Neg for Element<A> {
    type Output = Element<A>;
    fn neg(self) -> Element<A> {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Hopf axiom checks

/// Outcome of checking the Hopf axioms on every basis key up to a weight.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub keys_checked: usize,
    pub coassociativity_failures: Vec<String>,
    pub counit_failures: Vec<String>,
    pub left_antipode_failures: Vec<String>,
    pub right_antipode_failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.coassociativity_failures.is_empty()
            && self.counit_failures.is_empty()
            && self.left_antipode_failures.is_empty()
            && self.right_antipode_failures.is_empty()
    }
}

/// Coassociativity, both counit laws and both antipode convolution
/// identities on every basis key of weight `<= max_weight`.
pub fn check_hopf_axioms<H: Hopf>(max_weight: u32) -> AxiomReport {
    let mut report = AxiomReport::default();
    for w in 0..=max_weight {
        for key in H::basis(w) {
            report.keys_checked += 1;
            let name = H::key_string(&key);
            let delta = H::coproduct_key(&key);

            let left = lin::splice_at(&delta, 0, H::coproduct_key);
            let right = lin::splice_at(&delta, 1, H::coproduct_key);
            if left != right {
                report.coassociativity_failures.push(name.clone());
            }

            let x = lin::tensor1(&Lin::basis(key.clone()));
            let eps_left = lin::contract_at(&delta, 0, H::counit_key);
            let eps_right = lin::contract_at(&delta, 1, H::counit_key);
            if eps_left != x || eps_right != x {
                report.counit_failures.push(name.clone());
            }

            let expected = Lin::term(H::one(), H::counit_key(&key));
            let basis = |k: &H::Key| Lin::basis(k.clone());
            if convolve_key::<H>(&key, H::antipode_key, basis) != expected {
                report.left_antipode_failures.push(name.clone());
            }
            if convolve_key::<H>(&key, basis, H::antipode_key) != expected {
                report.right_antipode_failures.push(name);
            }
        }
    }
    report
}

/// Checks that `Δ(xy) = Δ(x)Δ(y)` on all pairs of basis keys with total
/// weight `<= max_weight`; returns the failing pairs.
pub fn check_bialgebra_compatibility<H: Hopf>(max_weight: u32) -> Vec<(H::Key, H::Key)> {
    let mut failures = Vec::new();
    for wa in 0..=max_weight {
        for wb in 0..=(max_weight - wa) {
            for a in H::basis(wa) {
                for b in H::basis(wb) {
                    let lhs = coproduct::<H>(&H::mul_keys(&a, &b));
                    let rhs = tensor_mul::<H>(&H::coproduct_key(&a), &H::coproduct_key(&b));
                    if lhs != rhs {
                        failures.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    failures
}
