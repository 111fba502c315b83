//! Compositions and partitions: the index types for every basis.
//!
//! Both types order first by weight and then lexicographically on their
//! parts, which is the canonical term order of printed elements.
//! Enumeration functions instead list indices of one weight in descending
//! lexicographic order, e.g. `(3), (2,1), (1,2), (1,1,1)`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sum of weights, used for grading sparse elements.
pub trait Graded {
    fn weight(&self) -> u32;
}

/// An ordered sequence of positive integers. The empty composition is the
/// identity of concatenation.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Composition(Vec<u32>);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

fn check_parts(parts: &[u32]) -> Result<()> {
    if parts.contains(&0) {
        return Err(Error::domain(format!(
            "index {parts:?} has a zero part; parts must be >= 1"
        )));
    }
    Ok(())
}

fn weight_then_lex(a: &[u32], b: &[u32]) -> Ordering {
    let wa: u32 = a.iter().sum();
    let wb: u32 = b.iter().sum();
    wa.cmp(&wb).then_with(|| a.cmp(b))
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    write!(f, "[")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, "]")
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        check_parts(&parts)?;
        Ok(Composition(parts))
    }

    /// The identity composition.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// Composition with a single part `n >= 1`.
    pub fn single(n: u32) -> Self {
        assert!(n >= 1, "parts must be >= 1");
        Composition(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation; associative with [`Composition::empty`] as identity.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    pub fn to_partition(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// All ways of writing `self = left * right`, from `(∅, self)` to `(self, ∅)`.
    pub fn deconcatenations(&self) -> impl Iterator<Item = (Composition, Composition)> + '_ {
        (0..=self.0.len()).map(move |i| (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec())))
    }

    /// Every composition obtained by merging runs of adjacent parts, `self` included.
    pub fn coarsenings(&self) -> Vec<Composition> {
        if self.0.is_empty() {
            return vec![Composition::empty()];
        }
        let gaps = self.0.len() - 1;
        let mut out = Vec::with_capacity(1 << gaps);
        for mask in 0u64..(1u64 << gaps) {
            let mut parts = vec![self.0[0]];
            for (g, &p) in self.0[1..].iter().enumerate() {
                if mask & (1 << g) != 0 {
                    *parts.last_mut().unwrap() += p;
                } else {
                    parts.push(p);
                }
            }
            out.push(Composition(parts));
        }
        out
    }
}

impl Partition {
    /// Sorts the parts into weakly decreasing order.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        check_parts(&parts)?;
        Ok(Partition::from_unsorted(parts))
    }

    fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn single(n: u32) -> Self {
        assert!(n >= 1, "parts must be >= 1");
        Partition(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Multiplicities `m_k` of each part value `k`, as (value, count) pairs.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The distinct rearrangements of the parts, in canonical composition order.
    pub fn distinct_permutations(&self) -> Vec<Composition> {
        fn go(remaining: &mut Vec<(u32, u32)>, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
            if remaining.iter().all(|&(_, c)| c == 0) {
                out.push(Composition(prefix.clone()));
                return;
            }
            for i in 0..remaining.len() {
                if remaining[i].1 == 0 {
                    continue;
                }
                remaining[i].1 -= 1;
                prefix.push(remaining[i].0);
                go(remaining, prefix, out);
                prefix.pop();
                remaining[i].1 += 1;
            }
        }
        let mut mult = self.multiplicities();
        mult.reverse();
        let mut out = Vec::new();
        go(&mut mult, &mut Vec::new(), &mut out);
        out
    }

    /// All splittings of the multiset of parts into an ordered pair of sub-multisets,
    /// with the number of ways each splitting arises from distinguishable parts
    /// divided out (each distinct pair appears once).
    pub fn sub_multisets(&self) -> Vec<(Partition, Partition)> {
        let mult = self.multiplicities();
        let mut out = vec![(Vec::new(), Vec::new())];
        for (value, count) in mult {
            let mut next = Vec::with_capacity(out.len() * (count as usize + 1));
            for (l, r) in &out {
                for k in 0..=count {
                    let mut l2: Vec<u32> = l.clone();
                    let mut r2: Vec<u32> = r.clone();
                    l2.extend(std::iter::repeat_n(value, k as usize));
                    r2.extend(std::iter::repeat_n(value, (count - k) as usize));
                    next.push((l2, r2));
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|(l, r)| (Partition::from_unsorted(l), Partition::from_unsorted(r)))
            .collect()
    }
}

impl Graded for Composition {
    fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Graded for Partition {
    fn weight(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl<K: Graded> Graded for Vec<K> {
    fn weight(&self) -> u32 {
        self.iter().map(Graded::weight).sum()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        weight_then_lex(&self.0, &other.0)
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        weight_then_lex(&self.0, &other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl TryFrom<Vec<u32>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Composition> for Vec<u32> {
    fn from(c: Composition) -> Vec<u32> {
        c.0
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl From<Partition> for Composition {
    fn from(p: Partition) -> Composition {
        Composition(p.0)
    }
}

/// Shorthand for building a composition from literal parts; panics on a zero part.
pub fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).expect("valid composition")
}

/// Shorthand for building a partition from literal parts; panics on a zero part.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// All compositions of `n`, in descending lexicographic order.
pub fn compositions_of(n: i64) -> Result<Vec<Composition>> {
    if n < 0 {
        return Err(Error::domain(format!("cannot enumerate compositions of {n}")));
    }
    fn go(n: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in (1..=n).rev() {
            prefix.push(first);
            go(n - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: i64) -> Result<Vec<Partition>> {
    if n < 0 {
        return Err(Error::domain(format!("cannot enumerate partitions of {n}")));
    }
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for first in (1..=n.min(max)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n as u32, n as u32, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Concatenation product of the composition monoid.
pub fn concat(i: &Composition, j: &Composition) -> Composition {
    i.concat(j)
}

pub fn sort_to_partition(i: &Composition) -> Partition {
    i.to_partition()
}
