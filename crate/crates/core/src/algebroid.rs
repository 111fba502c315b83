//! Split Hopf algebroids `(A, A ⊗ H)` and their cobar complexes.
//!
//! A cochain of level `n` lives in `A ⊗ H^{⊗n}` and is stored as a tensor
//! whose first factor is an `A`-key. Base and Hopf algebra share a key type
//! in both algebroids implemented here, so one tensor type serves all
//! levels.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Algebra, Hopf};
use crate::error::{Error, Result};
use crate::index::{Composition, Graded, Partition};
use crate::lin::{self, Lin, Tensor};
use crate::linalg;
use crate::nsym::NSym;
use crate::renorm::{coaction_nsym_key, coaction_sym_key, shifted_coaction_nsym_key, Bfk, FaaDiBruno};
use crate::scalar::Scalar;
use crate::sym::Sym;

type KeyOf<G> = <<G as SplitAlgebroid>::Base as Algebra>::Key;

/// A split Hopf algebroid: a commutative or noncommutative base algebra with
/// a right coaction of a Hopf algebra. The left unit is `a ↦ a ⊗ 1` and the
/// right unit is the coaction.
pub trait SplitAlgebroid: Copy + Default + fmt::Debug + Send + Sync + 'static {
    type Base: Hopf;
    type H: Hopf<Key = KeyOf<Self>>;
    const NAME: &'static str;

    fn coaction_key(key: &KeyOf<Self>) -> Tensor<KeyOf<Self>>;
}

/// Symmetric functions with the Faà di Bruno coaction `e(T) ↦ e(t(T))`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SymFdb;

impl SplitAlgebroid for SymFdb {
    type Base = Sym;
    type H = FaaDiBruno;
    const NAME: &'static str = "S.B";

    fn coaction_key(key: &Partition) -> Tensor<Partition> {
        coaction_sym_key(key)
    }
}

/// Noncommutative symmetric functions coacted on by the renormalization
/// Hopf algebra through its own coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct NsymBfk;

impl SplitAlgebroid for NsymBfk {
    type Base = NSym;
    type H = Bfk;
    const NAME: &'static str = "N.N";

    fn coaction_key(key: &Composition) -> Tensor<Composition> {
        coaction_nsym_key(key)
    }
}

/// Noncommutative symmetric functions with the lift of the symmetric
/// coaction, `Z'(T) ↦ Z'(Z(T))` for `Z'(T) = Σ_{n≥0} Z_n T^n`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NsymBfkShifted;

impl SplitAlgebroid for NsymBfkShifted {
    type Base = NSym;
    type H = Bfk;
    const NAME: &'static str = "N.N-shifted";

    fn coaction_key(key: &Composition) -> Tensor<Composition> {
        shifted_coaction_nsym_key(key)
    }
}

pub const MAX_LEVEL: usize = 2;
pub const MAX_WEIGHT: u32 = 5;

/// Computation bounds for cobar differentials and cohomology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CobarBounds {
    pub max_level: usize,
    pub max_weight: u32,
}

impl Default for CobarBounds {
    fn default() -> Self {
        CobarBounds {
            max_level: MAX_LEVEL,
            max_weight: MAX_WEIGHT,
        }
    }
}

pub fn left_unit<G: SplitAlgebroid>(a: &Lin<KeyOf<G>>) -> Tensor<KeyOf<G>> {
    lin::insert_factor(&lin::tensor1(a), 1, &G::H::one())
}

pub fn right_unit<G: SplitAlgebroid>(a: &Lin<KeyOf<G>>) -> Tensor<KeyOf<G>> {
    a.map_linear(G::coaction_key)
}

/// Factorwise product in `A ⊗ H^{⊗n}`.
pub fn cochain_mul<G: SplitAlgebroid>(x: &Tensor<KeyOf<G>>, y: &Tensor<KeyOf<G>>) -> Tensor<KeyOf<G>> {
    lin::tensor_mul(x, y, &|pos, a, b| {
        if pos == 0 {
            G::Base::mul_keys(a, b)
        } else {
            G::H::mul_keys(a, b)
        }
    })
}

/// The coface `d_i` from level `n` to level `n + 1`.
pub fn coface<G: SplitAlgebroid>(x: &Tensor<KeyOf<G>>, n: usize, i: usize) -> Tensor<KeyOf<G>> {
    assert!(i <= n + 1, "coface index out of range");
    if i == 0 {
        lin::splice_at(x, 0, G::coaction_key)
    } else if i <= n {
        lin::splice_at(x, i, G::H::coproduct_key)
    } else {
        lin::insert_factor(x, n + 1, &G::H::one())
    }
}

/// The codegeneracy `s_j` from level `n` to `n - 1`: the counit on factor `j + 1`.
pub fn codegeneracy<G: SplitAlgebroid>(x: &Tensor<KeyOf<G>>, j: usize) -> Tensor<KeyOf<G>> {
    lin::contract_at(x, j + 1, G::H::counit_key)
}

fn unchecked_differential<G: SplitAlgebroid>(x: &Tensor<KeyOf<G>>, n: usize) -> Tensor<KeyOf<G>> {
    let mut out = Lin::zero();
    for i in 0..=n + 1 {
        out.add_scaled(&coface::<G>(x, n, i), &Scalar::sign(i));
    }
    out
}

/// `d = Σ_{i=0}^{n+1} (-1)^i d_i` on a level-`n` cochain.
pub fn cobar_differential<G: SplitAlgebroid>(
    x: &Tensor<KeyOf<G>>,
    n: usize,
    bounds: CobarBounds,
) -> Result<Tensor<KeyOf<G>>> {
    if n > bounds.max_level {
        return Err(Error::capability(format!(
            "cobar level {n} exceeds the configured bound {}",
            bounds.max_level
        )));
    }
    if x.keys().any(|k| k.len() != n + 1) {
        return Err(Error::type_mismatch(format!("cochain is not of level {n}")));
    }
    Ok(unchecked_differential::<G>(x, n))
}

/// Basis keys of level `n` and total weight `w`; with `normalized`, every
/// `H` factor has positive weight.
pub fn cochain_basis<G: SplitAlgebroid>(n: usize, w: u32, normalized: bool) -> Vec<Vec<KeyOf<G>>> {
    fn go<G: SplitAlgebroid>(
        remaining_factors: usize,
        w: u32,
        normalized: bool,
        prefix: &mut Vec<KeyOf<G>>,
        out: &mut Vec<Vec<KeyOf<G>>>,
    ) {
        if remaining_factors == 0 {
            if w == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        let min = u32::from(normalized);
        for wi in min..=w {
            for key in G::H::basis(wi) {
                prefix.push(key);
                go::<G>(remaining_factors - 1, w - wi, normalized, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    for w0 in 0..=w {
        for a in G::Base::basis(w0) {
            go::<G>(n, w - w0, normalized, &mut vec![a], &mut out);
        }
    }
    out
}

fn differential_rank<G: SplitAlgebroid>(n: usize, w: u32) -> usize {
    let mut columns: BTreeMap<Vec<KeyOf<G>>, usize> = BTreeMap::new();
    let images: Vec<Tensor<KeyOf<G>>> = cochain_basis::<G>(n, w, true)
        .into_iter()
        .map(|k| unchecked_differential::<G>(&Lin::basis(k), n))
        .collect();
    for img in &images {
        for k in img.keys() {
            let next = columns.len();
            columns.entry(k.clone()).or_insert(next);
        }
    }
    let matrix: linalg::Matrix = images
        .iter()
        .map(|img| {
            let mut row = vec![Scalar::zero(); columns.len()];
            for (k, c) in img.iter() {
                row[columns[k]] = c.clone();
            }
            row
        })
        .collect();
    linalg::rank(&matrix)
}

/// Rank over the rationals of `H^s` at weight `w` of the normalized cobar complex.
pub fn cohomology_rank<G: SplitAlgebroid>(w: u32, s: usize, bounds: CobarBounds) -> Result<usize> {
    if w > bounds.max_weight {
        return Err(Error::capability(format!(
            "weight {w} exceeds the configured bound {}",
            bounds.max_weight
        )));
    }
    if s > 1 || s + 1 > bounds.max_level {
        return Err(Error::capability(format!("cohomological degree {s} is not supported")));
    }
    let dim = cochain_basis::<G>(s, w, true).len();
    let outgoing = differential_rank::<G>(s, w);
    let incoming = if s == 0 { 0 } else { differential_rank::<G>(s - 1, w) };
    Ok(dim - outgoing - incoming)
}

/// A cohomology rank in the shape emitted by the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub algebroid: String,
    pub weight: u32,
    pub degree: usize,
    pub rank: usize,
}

pub fn rank_report<G: SplitAlgebroid>(w: u32, s: usize, bounds: CobarBounds) -> Result<RankReport> {
    Ok(RankReport {
        algebroid: G::NAME.to_string(),
        weight: w,
        degree: s,
        rank: cohomology_rank::<G>(w, s, bounds)?,
    })
}

/// Prints a cochain as `a ⊗ h_1 ⊗ ...` with each factor in its own notation.
pub fn format_cochain<G: SplitAlgebroid>(x: &Tensor<KeyOf<G>>) -> String {
    format_tensor(x, |pos, k| {
        if pos == 0 {
            G::Base::key_string(k)
        } else {
            G::H::key_string(k)
        }
    })
}

/// Prints a tensor `c*k1⊗k2 + ...`, naming each factor with `name(position, key)`.
pub fn format_tensor<K: Ord + Clone>(x: &Tensor<K>, name: impl Fn(usize, &K) -> String) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (key, c)) in x.iter().enumerate() {
        let body: Vec<String> = key.iter().enumerate().map(|(p, k)| name(p, k)).collect();
        let body = body.join("⊗");
        let mag = c.abs();
        let sep = match (i, c.is_negative()) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        out.push_str(sep);
        if mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag}*{body}"));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Structural checks

/// Right comodule axioms for a coaction `A → A ⊗ H` on every basis key of
/// weight `<= max_weight`: coassociativity, counit, and multiplicativity on
/// pairs of total weight `<= max_weight`. Returns descriptions of failures.
pub fn check_comodule_axioms<A: Algebra, H: Hopf<Key = A::Key>>(
    coaction: impl Fn(&A::Key) -> Tensor<A::Key>,
    max_weight: u32,
) -> Vec<String> {
    let mut failures = Vec::new();
    for w in 0..=max_weight {
        for key in A::basis(w) {
            let psi = coaction(&key);
            let outer = lin::splice_at(&psi, 0, &coaction);
            let inner = lin::splice_at(&psi, 1, H::coproduct_key);
            if outer != inner {
                failures.push(format!("coassociativity at {}", A::key_string(&key)));
            }
            if lin::contract_at(&psi, 1, H::counit_key) != lin::tensor1(&Lin::basis(key.clone())) {
                failures.push(format!("counit at {}", A::key_string(&key)));
            }
        }
    }
    for wa in 1..=max_weight {
        for wb in 1..=(max_weight - wa) {
            for a in A::basis(wa) {
                for b in A::basis(wb) {
                    let lhs = A::mul_keys(&a, &b).map_linear(&coaction);
                    let rhs = lin::tensor_mul(&coaction(&a), &coaction(&b), &|pos, x, y| {
                        if pos == 0 {
                            A::mul_keys(x, y)
                        } else {
                            H::mul_keys(x, y)
                        }
                    });
                    if lhs != rhs {
                        failures.push(format!(
                            "multiplicativity at {}·{}",
                            A::key_string(&a),
                            A::key_string(&b)
                        ));
                    }
                }
            }
        }
    }
    failures
}

/// Comodule-coalgebra compatibility on the given keys:
/// `(Δ_A ⊗ id) ψ = (id ⊗ id ⊗ μ_H)(id ⊗ swap ⊗ id)(ψ ⊗ ψ) Δ_A`.
pub fn check_comodule_coalgebra<A: Hopf, H: Hopf<Key = A::Key>>(
    coaction: impl Fn(&A::Key) -> Tensor<A::Key>,
    keys: &[A::Key],
) -> Vec<String> {
    let mut failures = Vec::new();
    for key in keys {
        let lhs = lin::splice_at(&coaction(key), 0, A::coproduct_key);
        let delta = A::coproduct_key(key);
        let step = lin::splice_at(&delta, 0, &coaction);
        let step = lin::splice_at(&step, 2, &coaction);
        let step = lin::swap_factors(&step, 1, 2);
        let rhs = lin::merge_adjacent(&step, 2, H::mul_keys);
        if lhs != rhs {
            failures.push(A::key_string(key));
        }
    }
    failures
}

/// Checks `d_j d_i = d_i d_{j-1}` for `i < j` on every basis cochain of
/// level `<= max_level` and weight `<= max_weight`.
pub fn check_cosimplicial_identities<G: SplitAlgebroid>(max_level: usize, max_weight: u32) -> Vec<String> {
    let mut failures = Vec::new();
    for n in 0..=max_level {
        for w in 0..=max_weight {
            for key in cochain_basis::<G>(n, w, false) {
                let x = Lin::basis(key.clone());
                for j in 1..=n + 2 {
                    for i in 0..j {
                        let lhs = coface::<G>(&coface::<G>(&x, n, i), n + 1, j);
                        let rhs = coface::<G>(&coface::<G>(&x, n, j - 1), n + 1, i);
                        if lhs != rhs {
                            failures.push(format!("d{j}d{i} at level {n} on {}", format_cochain::<G>(&x)));
                        }
                    }
                }
            }
        }
    }
    failures
}

/// Checks `d ∘ d = 0` on every basis cochain of level `<= max_level`.
pub fn check_d_squared<G: SplitAlgebroid>(max_level: usize, max_weight: u32) -> Vec<String> {
    let mut failures = Vec::new();
    for n in 0..=max_level {
        for w in 0..=max_weight {
            for key in cochain_basis::<G>(n, w, false) {
                let x = Lin::basis(key);
                let dd = unchecked_differential::<G>(&unchecked_differential::<G>(&x, n), n + 1);
                if !dd.is_zero() {
                    failures.push(format!("level {n}: {}", format_cochain::<G>(&x)));
                }
            }
        }
    }
    failures
}

/// A pure tensor `(a_1 ⊗ h_1) ⊗_A ... ⊗_A (a_n ⊗ h_n)` in the Amitsur complex
/// of the left unit `A → A ⊗ H`; level 0 is `A` itself, the empty product.
pub type AmitsurKey<K> = Vec<(K, K)>;

/// The Amitsur coface inserting the unit `1 ⊗ 1` at position `i`.
pub fn amitsur_coface<G: SplitAlgebroid>(x: &Lin<AmitsurKey<KeyOf<G>>>, i: usize) -> Lin<AmitsurKey<KeyOf<G>>> {
    x.map_keys(|key| {
        let mut out = key.clone();
        out.insert(i, (G::Base::one(), G::H::one()));
        out
    })
}

/// The identification `(A ⊗ H)^{⊗_A n} ≅ A ⊗ H^{⊗n}`, moving every base
/// factor to the left: `⊗_i (a_i ⊗ h_i) ↦ a_1 ··· a_n ⊗ h_1 ⊗ ... ⊗ h_n`.
pub fn amitsur_identify<G: SplitAlgebroid>(x: &Lin<AmitsurKey<KeyOf<G>>>) -> Tensor<KeyOf<G>> {
    x.map_linear(|key| {
        let bases: Vec<Lin<KeyOf<G>>> = key.iter().map(|(a, _)| Lin::basis(a.clone())).collect();
        let a = crate::algebra::product::<G::Base>(bases.iter());
        a.map_keys(|a| {
            let mut out = vec![a.clone()];
            out.extend(key.iter().map(|(_, h)| h.clone()));
            out
        })
    })
}

/// The coface of `A ⊗ (Amitsur complex of Z → H)` inserting `1` before
/// the `i`-th `H` factor.
pub fn trivial_coface<G: SplitAlgebroid>(x: &Tensor<KeyOf<G>>, i: usize) -> Tensor<KeyOf<G>> {
    lin::insert_factor(x, i + 1, &G::H::one())
}

fn amitsur_basis<G: SplitAlgebroid>(n: usize, w: u32) -> Vec<AmitsurKey<KeyOf<G>>> {
    let pairs = |k: u32| -> Vec<(KeyOf<G>, KeyOf<G>)> {
        (0..=k)
            .flat_map(|wa| {
                let hs = G::H::basis(k - wa);
                G::Base::basis(wa)
                    .into_iter()
                    .flat_map(move |a| hs.clone().into_iter().map(move |h| (a.clone(), h)))
            })
            .collect()
    };
    let mut out: Vec<AmitsurKey<KeyOf<G>>> = vec![Vec::new()];
    for slot in 0..n {
        let mut next = Vec::new();
        for prefix in &out {
            let used: u32 = prefix.iter().map(|(a, h)| a.weight() + h.weight()).sum();
            let range = if slot + 1 == n {
                (w - used)..=(w - used)
            } else {
                0..=(w - used)
            };
            for k in range {
                for pair in pairs(k) {
                    let mut key = prefix.clone();
                    key.push(pair);
                    next.push(key);
                }
            }
        }
        out = next;
    }
    out
}

/// Checks the base-change isomorphism between the Amitsur complex of the
/// left unit `A → A ⊗ H` and `A ⊗` the Amitsur complex of `Z → H`: the
/// levelwise identification commutes with every coface on pure tensors of
/// basis elements, and reaches every basis key.
pub fn check_base_change<G: SplitAlgebroid>(max_level: usize, max_weight: u32) -> Vec<String> {
    let mut failures = Vec::new();
    for n in 1..=max_level {
        for w in 0..=max_weight {
            let mut reached = std::collections::BTreeSet::new();
            for key in amitsur_basis::<G>(n, w) {
                let x = Lin::basis(key);
                let ident = amitsur_identify::<G>(&x);
                reached.extend(ident.keys().cloned());
                for i in 0..=n {
                    if amitsur_identify::<G>(&amitsur_coface::<G>(&x, i)) != trivial_coface::<G>(&ident, i) {
                        failures.push(format!("coface {i} at level {n} on {}", format_cochain::<G>(&ident)));
                    }
                }
            }
            let target = cochain_basis::<G>(n, w, false).len();
            if reached.len() != target {
                failures.push(format!("identification not onto at level {n}, weight {w}"));
            }
        }
    }
    failures
}

/// Weight of a cochain key, the sum over all factors.
pub fn cochain_weight<K: Graded>(key: &[K]) -> u32 {
    key.iter().map(Graded::weight).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{comp, part};

    fn e(parts: &[u32]) -> Lin<Partition> {
        Lin::basis(part(parts))
    }

    #[test]
    fn differential_examples() {
        let b = CobarBounds::default();
        let d1 = cobar_differential::<SymFdb>(&lin::tensor1(&e(&[1])), 0, b).unwrap();
        assert!(d1.is_zero());
        let d2 = cobar_differential::<SymFdb>(&lin::tensor1(&e(&[2])), 0, b).unwrap();
        assert_eq!(d2, Lin::basis(vec![part(&[1]), part(&[1])]));
        assert_eq!(format_cochain::<SymFdb>(&d2), "e[1]⊗t[1]");
        assert!(cobar_differential::<SymFdb>(&d2, 1, b).unwrap().is_zero());
    }

    #[test]
    fn level_bound_is_enforced() {
        let x: Tensor<Partition> = Lin::basis(vec![part(&[1]); 4]);
        assert!(matches!(
            cobar_differential::<SymFdb>(&x, 3, CobarBounds::default()),
            Err(Error::Capability(_))
        ));
        assert!(matches!(
            cohomology_rank::<SymFdb>(6, 0, CobarBounds::default()),
            Err(Error::Capability(_))
        ));
    }

    #[test]
    fn h0_ranks_of_sym_fdb() {
        let ranks: Vec<usize> = (0..=3)
            .map(|w| cohomology_rank::<SymFdb>(w, 0, CobarBounds::default()).unwrap())
            .collect();
        assert_eq!(ranks, vec![1, 1, 1, 1]);
    }

    #[test]
    fn simplicial_structure_low_weight() {
        assert!(check_cosimplicial_identities::<SymFdb>(2, 3).is_empty());
        assert!(check_cosimplicial_identities::<NsymBfk>(2, 3).is_empty());
        assert!(check_d_squared::<NsymBfk>(2, 3).is_empty());
        assert!(check_base_change::<SymFdb>(2, 3).is_empty());
    }

    #[test]
    fn sym_coaction_is_compatible_with_the_coproduct() {
        let keys: Vec<Partition> = (1..=4).map(Partition::single).collect();
        assert!(check_comodule_coalgebra::<Sym, FaaDiBruno>(coaction_sym_key, &keys).is_empty());
    }

    #[test]
    fn renormalization_coaction_is_not_a_comodule_coalgebra() {
        let failures = check_comodule_coalgebra::<NSym, Bfk>(coaction_nsym_key, &[comp(&[1])]);
        assert_eq!(failures, vec!["Z[1]".to_string()]);
    }

    #[test]
    fn shifted_coaction_is_a_comodule_coalgebra() {
        assert!(check_comodule_axioms::<NSym, Bfk>(shifted_coaction_nsym_key, 4).is_empty());
        let keys: Vec<Composition> = (1..=5).map(Composition::single).collect();
        assert!(check_comodule_coalgebra::<NSym, Bfk>(shifted_coaction_nsym_key, &keys).is_empty());
    }

    #[test]
    fn shifted_coaction_lifts_the_sym_coaction() {
        for n in 1..=4 {
            let lifted = crate::renorm::abelianize_tensor(&shifted_coaction_nsym_key(&Composition::single(n)));
            assert_eq!(lifted, coaction_sym_key(&Partition::single(n)));
        }
    }
}
