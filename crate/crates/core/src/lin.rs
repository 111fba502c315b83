//! Sparse finite linear combinations with exact coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::index::Graded;
use crate::scalar::Scalar;

/// A finite linear combination of keys. Zero coefficients are never stored,
/// and terms iterate in the key order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

/// Tensor keys: one index per factor.
pub type Tensor<K> = Lin<Vec<K>>;

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &Lin<K>, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c * coeff);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Lin {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    /// Re-index every key; colliding keys are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Lin<L> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a map on keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<L>) -> Lin<L> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Bilinear extension of a map on pairs of keys.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &Lin<L>,
        mut f: impl FnMut(&K, &L) -> Lin<M>,
    ) -> Lin<M> {
        let mut out = Lin::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Lin {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn all_coefficients_integral(&self) -> bool {
        self.terms.values().all(Scalar::is_integer)
    }
}

impl<K: Ord + Clone + Graded> Lin<K> {
    /// The weight-`w` homogeneous component.
    pub fn component(&self, w: u32) -> Self {
        self.filter(|k| k.weight() == w)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.keys().map(Graded::weight).max()
    }

    /// `Some(w)` when every term has weight `w`; `None` for zero or mixed elements.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut ws = self.keys().map(Graded::weight);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut out = Lin::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for Lin<K> {
    type Item = (K, Scalar);
    type IntoIter = btree_map::IntoIter<K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a Lin<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Lin<K>> for Lin<K> {
    fn add_assign(&mut self, rhs: &Lin<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), c.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Lin<K>> for Lin<K> {
    fn sub_assign(&mut self, rhs: &Lin<K>) {
        for (k, c) in rhs.iter() {
            self.add_term(k.clone(), -c);
        }
    }
}

impl<K: Ord + Clone> Add<&Lin<K>> for &Lin<K> {
    type Output = Lin<K>;
    fn add(self, rhs: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub<&Lin<K>> for &Lin<K> {
    type Output = Lin<K>;
    fn sub(self, rhs: &Lin<K>) -> Lin<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Add for Lin<K> {
    type Output = Lin<K>;
    fn add(mut self, rhs: Lin<K>) -> Lin<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for Lin<K> {
    type Output = Lin<K>;
    fn sub(mut self, rhs: Lin<K>) -> Lin<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for &Lin<K> {
    type Output = Lin<K>;
    fn neg(self) -> Lin<K> {
        self.scale(&-Scalar::one())
    }
}

impl<K: Ord + Clone> Neg for Lin<K> {
    type Output = Lin<K>;
    fn neg(self) -> Lin<K> {
        -&self
    }
}

impl<K: Ord + Clone> Mul<&Scalar> for &Lin<K> {
    type Output = Lin<K>;
    fn mul(self, rhs: &Scalar) -> Lin<K> {
        self.scale(rhs)
    }
}

// ---------------------------------------------------------------------------
// tensor plumbing

/// Embeds a single-factor combination as a one-fold tensor.
pub fn tensor1<K: Ord + Clone>(x: &Lin<K>) -> Tensor<K> {
    x.map_keys(|k| vec![k.clone()])
}

/// `x ⊗ y` for arbitrary-arity tensors.
pub fn tensor_product<K: Ord + Clone>(x: &Tensor<K>, y: &Tensor<K>) -> Tensor<K> {
    x.bilinear(y, |a, b| {
        let mut key = a.clone();
        key.extend_from_slice(b);
        Lin::basis(key)
    })
}

/// Factorwise product of two tensors of equal arity; `mul(pos, a, b)` multiplies
/// keys in factor `pos`, keeping `a` on the left.
pub fn tensor_mul<K: Ord + Clone>(x: &Tensor<K>, y: &Tensor<K>, mul: &dyn Fn(usize, &K, &K) -> Lin<K>) -> Tensor<K> {
    x.bilinear(y, |a, b| {
        debug_assert_eq!(a.len(), b.len(), "tensor arity mismatch");
        let mut acc: Tensor<K> = Lin::basis(Vec::with_capacity(a.len()));
        for (pos, (ka, kb)) in a.iter().zip(b).enumerate() {
            let prod = mul(pos, ka, kb);
            acc = acc.bilinear(&prod, |prefix, k| {
                let mut key = prefix.clone();
                key.push(k.clone());
                Lin::basis(key)
            });
            if acc.is_zero() {
                break;
            }
        }
        acc
    })
}

/// Replaces factor `pos` by the tensor `f(key)`, splicing its factors in place.
pub fn splice_at<K: Ord + Clone>(x: &Tensor<K>, pos: usize, mut f: impl FnMut(&K) -> Tensor<K>) -> Tensor<K> {
    x.map_linear(|key| {
        f(&key[pos]).map_keys(|inner| {
            let mut out = Vec::with_capacity(key.len() + inner.len());
            out.extend_from_slice(&key[..pos]);
            out.extend_from_slice(inner);
            out.extend_from_slice(&key[pos + 1..]);
            out
        })
    })
}

/// Inserts the key `unit` as a new factor at position `pos`.
pub fn insert_factor<K: Ord + Clone>(x: &Tensor<K>, pos: usize, unit: &K) -> Tensor<K> {
    x.map_keys(|key| {
        let mut out = key.clone();
        out.insert(pos, unit.clone());
        out
    })
}

/// Applies a scalar-valued functional to factor `pos`, removing it.
pub fn contract_at<K: Ord + Clone>(x: &Tensor<K>, pos: usize, mut f: impl FnMut(&K) -> Scalar) -> Tensor<K> {
    let mut out = Lin::zero();
    for (key, c) in x.iter() {
        let v = f(&key[pos]);
        if v.is_zero() {
            continue;
        }
        let mut k = key.clone();
        k.remove(pos);
        out.add_term(k, c * &v);
    }
    out
}

/// Multiplies factors `pos` and `pos + 1` together.
pub fn merge_adjacent<K: Ord + Clone>(x: &Tensor<K>, pos: usize, mut mul: impl FnMut(&K, &K) -> Lin<K>) -> Tensor<K> {
    x.map_linear(|key| {
        mul(&key[pos], &key[pos + 1]).map_keys(|m| {
            let mut out = Vec::with_capacity(key.len() - 1);
            out.extend_from_slice(&key[..pos]);
            out.push(m.clone());
            out.extend_from_slice(&key[pos + 2..]);
            out
        })
    })
}

/// Exchanges factors `i` and `j`.
pub fn swap_factors<K: Ord + Clone>(x: &Tensor<K>, i: usize, j: usize) -> Tensor<K> {
    x.map_keys(|key| {
        let mut out = key.clone();
        out.swap(i, j);
        out
    })
}

/// Applies a linear map to factor `pos`, keeping the arity.
pub fn apply_at<K: Ord + Clone>(x: &Tensor<K>, pos: usize, mut f: impl FnMut(&K) -> Lin<K>) -> Tensor<K> {
    splice_at(x, pos, |k| tensor1(&f(k)))
}
