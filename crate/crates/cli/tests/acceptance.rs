//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any criterion fails.
//!
//! The checks recompute expected values with small oracles written here
//! (tensor bookkeeping, ordered-variable expansion, Gaussian elimination,
//! fixed-point reversion, the normal-bundle generating function) instead of
//! calling the library's own verification code.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;

use hopfcalc::algebroid::{
    cobar_differential, cochain_basis, codegeneracy, coface, cohomology_rank, CobarBounds, NsymBfk, NsymBfkShifted,
    SplitAlgebroid, SymFdb,
};
use hopfcalc::index::compositions_of;
use hopfcalc::json::{element_doc, element_from_doc, sym_doc, sym_from_doc, JsonKey};
use hopfcalc::nsym::ns_qs_pair;
use hopfcalc::parse::{parse_element, parse_sym, Parseable};
use hopfcalc::renorm::{bfk_abelianize, coaction_nsym_key, coaction_sym_key, shifted_coaction_nsym_key};
use hopfcalc::topology::{
    abelianize_to_b, beta_embed_series, beta_series, cp_char_number, cp_hurewicz, cp_infinity_coproduct, crn_invariant,
    fgl, miscenko_log,
};
use hopfcalc::{
    Algebra, BPoly, Bfk, Composition, Element, FaaDiBruno, Graded, Hopf, Lin, MultiSeries, NSym, Partition, QSym,
    Scalar, Sym, SymBasis, SymElement, Tensor,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Failures = Vec<String>;
type Criterion = (&'static str, fn() -> Failures);

fn main() {
    let criteria: [Criterion; 8] = [
        ("Hopf axioms for S, N binomial, Q, FdB and BFK", hopf_axioms),
        ("antipode cross-checks", antipode_cross_checks),
        ("Z/M duality, adjunctions and quasi-shuffle", duality),
        ("BFK coproduct values and coassociativity", bfk),
        (
            "comodules, cosimplicial identities and H^0 ranks",
            comodule_and_algebroid,
        ),
        ("topology: log, characteristic numbers, FGL, beta", topology),
        ("combinatorial counts", counts),
        ("command-line contract", cli_contract),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let failures = run();
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status}  {name}", i + 1);
        for f in failures.iter().take(10) {
            println!("    {f}");
        }
        if failures.len() > 10 {
            println!("    ... {} more", failures.len() - 10);
        }
        all &= failures.is_empty();
    }
    if !all {
        std::process::exit(1);
    }
}

// ---------------------------------------------------------------------------
// Tensor bookkeeping

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn comp(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

/// Replaces factor `pos` of every term by the tensor `f(factor)`.
fn splice<K: Ord + Clone>(x: &Tensor<K>, pos: usize, f: impl Fn(&K) -> Tensor<K>) -> Tensor<K> {
    let mut out = Lin::zero();
    for (keys, c) in x.iter() {
        for (inner, d) in f(&keys[pos]).iter() {
            let mut k = keys[..pos].to_vec();
            k.extend(inner.iter().cloned());
            k.extend(keys[pos + 1..].iter().cloned());
            out.add_term(k, c * d);
        }
    }
    out
}

/// Applies a scalar functional to factor `pos`, dropping it.
fn contract<K: Ord + Clone>(x: &Tensor<K>, pos: usize, f: impl Fn(&K) -> Scalar) -> Tensor<K> {
    splice(x, pos, |k| {
        let c = f(k);
        if c.is_zero() {
            Lin::zero()
        } else {
            Lin::term(Vec::new(), c)
        }
    })
}

fn single<K: Ord + Clone>(k: &K) -> Tensor<K> {
    Lin::basis(vec![k.clone()])
}

fn counit_of<K: Graded>(k: &K) -> Scalar {
    if k.weight() == 0 {
        s(1)
    } else {
        s(0)
    }
}

fn keys_up_to<A: Algebra>(w: u32) -> Vec<A::Key> {
    (0..=w).flat_map(A::basis).collect()
}

/// Coassociativity, both counit laws and both antipode identities on every
/// basis key of weight `<= w`.
fn check_hopf<H: Hopf>(label: &str, w: u32) -> Failures {
    let delta = |k: &H::Key| Element::<H>::basis(k.clone()).coproduct();
    let mut out = Vec::new();
    for k in keys_up_to::<H>(w) {
        let name = H::key_string(&k);
        let d = delta(&k);
        if splice(&d, 0, delta) != splice(&d, 1, delta) {
            out.push(format!("{label}: coassociativity fails on {name}"));
        }
        let left = contract(&d, 0, counit_of);
        let right = contract(&d, 1, counit_of);
        if left != single(&k) || right != single(&k) {
            out.push(format!("{label}: counit fails on {name}"));
        }
        let unit = Element::<H>::scalar(counit_of(&k));
        let mut l = Element::<H>::zero();
        let mut r = Element::<H>::zero();
        for (pair, c) in d.iter() {
            let a = Element::<H>::basis(pair[0].clone());
            let b = Element::<H>::basis(pair[1].clone());
            l = l + (&a.antipode() * &b).scale(c);
            r = r + (&a * &b.antipode()).scale(c);
        }
        if l != unit || r != unit {
            out.push(format!("{label}: antipode identity fails on {name}"));
        }
    }
    out
}

fn hopf_axioms() -> Failures {
    let mut out = check_hopf::<Sym>("S binomial", 7);
    out.extend(check_hopf::<NSym>("N binomial", 7));
    out.extend(check_hopf::<QSym>("Q", 6));
    out.extend(check_hopf::<FaaDiBruno>("FdB", 6));
    out.extend(check_hopf::<Bfk>("BFK", 6));
    out
}

// ---------------------------------------------------------------------------

fn e(n: u32) -> Element<Sym> {
    if n == 0 {
        Element::one()
    } else {
        Element::basis(Partition::single(n))
    }
}

/// `h_n` in the e-basis from `Σ_k (-1)^k e_k h_{n-k} = 0`.
fn h_in_e(n: u32) -> Vec<Element<Sym>> {
    let mut h = vec![Element::<Sym>::one()];
    for m in 1..=n {
        let mut acc = Element::zero();
        for k in 1..=m {
            let sign = if k % 2 == 1 { s(1) } else { s(-1) };
            acc = acc + (&e(k) * &h[(m - k) as usize]).scale(&sign);
        }
        h.push(acc);
    }
    h
}

/// Reversion of `T + Σ t_k T^{k+1}` by iterating `g = T - Σ t_k g^{k+1}`,
/// with truncated polynomial arithmetic in coefficient vectors.
fn revert_by_iteration(cap: usize) -> Vec<Element<FaaDiBruno>> {
    let mul = |a: &[Element<FaaDiBruno>], b: &[Element<FaaDiBruno>]| {
        let mut out = vec![Element::zero(); cap + 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j <= cap && !x.is_zero() && !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        out
    };
    let mut g = vec![Element::zero(); cap + 1];
    g[1] = Element::one();
    for _ in 0..cap {
        let mut next = vec![Element::zero(); cap + 1];
        next[1] = Element::one();
        let mut power = g.clone();
        for k in 1..cap {
            power = mul(&power, &g);
            let t = Element::<FaaDiBruno>::basis(Partition::single(k as u32));
            for (i, c) in power.iter().enumerate() {
                next[i] = &next[i] - &(&t * c);
            }
        }
        g = next;
    }
    g
}

fn antipode_cross_checks() -> Failures {
    let mut out = Vec::new();
    let h = h_in_e(8);
    for n in 1..=8u32 {
        let sign = if n % 2 == 0 { s(1) } else { s(-1) };
        if e(n).antipode() != h[n as usize].scale(&sign) {
            out.push(format!("chi_S(e_{n}) != (-1)^{n} h_{n}"));
        }
        let via_basis = SymElement::basis_element(SymBasis::E, Partition::single(n))
            .antipode()
            .convert(SymBasis::H, hopfcalc::ScalarRing::Integers)
            .unwrap();
        if via_basis != SymElement::basis_element(SymBasis::H, Partition::single(n)).scale(&sign) {
            out.push(format!("chi_S(e_{n}) in the h-basis"));
        }
    }
    let g = revert_by_iteration(9);
    let tee = hopfcalc::renorm::generating_series::<FaaDiBruno>(Partition::single, 9);
    let reverted = tee.revert().unwrap();
    for n in 1..=8u32 {
        let chi = Element::<FaaDiBruno>::basis(Partition::single(n)).antipode();
        if chi != g[n as usize + 1] {
            out.push(format!("chi_FdB(t_{n}) differs from the iterated reversion"));
        }
        if chi != reverted.coeff(i64::from(n) + 1) {
            out.push(format!("chi_FdB(t_{n}) differs from revert"));
        }
    }
    for k in keys_up_to::<Bfk>(6) {
        let z = Element::<Bfk>::basis(k.clone());
        let t = Element::<FaaDiBruno>::basis(k.to_partition());
        if bfk_abelianize(&z.antipode()) != t.antipode() {
            out.push(format!("BFK antipode of {} does not abelianize", Bfk::key_string(&k)));
        }
    }
    out
}

// ---------------------------------------------------------------------------

/// Pairing of tensors of compositions with `⟨Z_I, M_J⟩ = δ` in each factor.
fn pair_delta(x: &Tensor<Composition>, y: &Tensor<Composition>) -> Scalar {
    x.iter().fold(s(0), |acc, (k, c)| acc + c * &y.coeff(k))
}

/// `M_I(x_1, ..., x_n)` as a map from exponent vectors to coefficients.
fn ordered_expansion(i: &Composition, n: usize) -> BTreeMap<Vec<u32>, Scalar> {
    fn go(parts: &[u32], start: usize, exps: &mut Vec<u32>, out: &mut BTreeMap<Vec<u32>, Scalar>) {
        let Some((&first, rest)) = parts.split_first() else {
            *out.entry(exps.clone()).or_insert_with(|| s(0)) += &s(1);
            return;
        };
        for v in start..exps.len() {
            exps[v] = first;
            go(rest, v + 1, exps, out);
            exps[v] = 0;
        }
    }
    let mut out = BTreeMap::new();
    go(i.parts(), 0, &mut vec![0; n], &mut out);
    out
}

fn expand_element(x: &Element<QSym>, n: usize) -> BTreeMap<Vec<u32>, Scalar> {
    let mut out: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for (i, c) in x.iter() {
        for (m, d) in ordered_expansion(i, n) {
            *out.entry(m).or_insert_with(|| s(0)) += &(c * &d);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn poly_mul(a: &BTreeMap<Vec<u32>, Scalar>, b: &BTreeMap<Vec<u32>, Scalar>) -> BTreeMap<Vec<u32>, Scalar> {
    let mut out: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let m: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
            *out.entry(m).or_insert_with(|| s(0)) += &(c * d);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn duality() -> Failures {
    let mut out = Vec::new();
    let keys = keys_up_to::<NSym>(6);
    for i in &keys {
        for j in &keys {
            let expected = if i == j { s(1) } else { s(0) };
            let got = ns_qs_pair(&Element::basis(i.clone()), &Element::basis(j.clone()));
            if got != expected {
                out.push(format!("<Z{i}, M{j}> = {got}"));
            }
        }
    }
    for k in &keys {
        let w = k.weight();
        for i in keys_up_to::<NSym>(w) {
            for j in keys_up_to::<NSym>(w - i.weight()) {
                let zz = &Element::<NSym>::basis(i.clone()) * &Element::basis(j.clone());
                let lhs = ns_qs_pair(&zz, &Element::basis(k.clone()));
                let delta_m = Element::<QSym>::basis(k.clone()).coproduct();
                let rhs = pair_delta(&Lin::basis(vec![i.clone(), j.clone()]), &delta_m);
                if lhs != rhs {
                    out.push(format!("<Z{i} Z{j}, M{k}> != <Z{i} ⊗ Z{j}, ΔM{k}>"));
                }
                let mm = &Element::<QSym>::basis(i.clone()) * &Element::basis(j.clone());
                let lhs = ns_qs_pair(&Element::basis(k.clone()), &mm);
                let delta_z = Element::<NSym>::basis(k.clone()).coproduct();
                let rhs = pair_delta(&delta_z, &Lin::basis(vec![i.clone(), j.clone()]));
                if lhs != rhs {
                    out.push(format!("<Z{k}, M{i} M{j}> != <ΔZ{k}, M{i} ⊗ M{j}>"));
                }
            }
        }
    }
    for i in keys_up_to::<QSym>(5) {
        for j in keys_up_to::<QSym>(5 - i.weight()) {
            let n = (i.weight() + j.weight()).max(1) as usize;
            let a = Element::<QSym>::basis(i.clone());
            let b = Element::<QSym>::basis(j.clone());
            if expand_element(&(&a * &b), n) != poly_mul(&expand_element(&a, n), &expand_element(&b, n)) {
                out.push(format!("quasi-shuffle M{i} * M{j} disagrees with the expansion"));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------

fn bfk() -> Failures {
    let mut out = Vec::new();
    let t = |l: &[u32], r: &[u32], c: i64| (vec![comp(l), comp(r)], s(c));
    let z2: Tensor<Composition> = [t(&[2], &[], 1), t(&[1], &[1], 2), t(&[], &[2], 1)]
        .into_iter()
        .collect();
    let z3: Tensor<Composition> = [
        t(&[3], &[], 1),
        t(&[], &[3], 1),
        t(&[1], &[1, 1], 1),
        t(&[1], &[2], 2),
        t(&[2], &[1], 3),
    ]
    .into_iter()
    .collect();
    if Element::<Bfk>::basis(comp(&[2])).coproduct() != z2 {
        out.push("Δ_N Z2 differs from Z2⊗1 + 2 Z1⊗Z1 + 1⊗Z2".to_string());
    }
    if Element::<Bfk>::basis(comp(&[3])).coproduct() != z3 {
        out.push("Δ_N Z3 differs from Z3⊗1 + 1⊗Z3 + Z1⊗(Z[1,1] + 2 Z2) + 3 Z2⊗Z1".to_string());
    }
    let delta = |k: &Composition| Element::<Bfk>::basis(k.clone()).coproduct();
    for k in keys_up_to::<Bfk>(7) {
        let d = delta(&k);
        if splice(&d, 0, delta) != splice(&d, 1, delta) {
            out.push(format!("Δ_N is not coassociative on Z{k}"));
        }
    }
    out
}

// ---------------------------------------------------------------------------

/// Right comodule axioms and multiplicativity of a coaction `A → A ⊗ H`.
fn check_coaction<A: Algebra, H: Hopf<Key = A::Key>>(
    label: &str,
    psi: impl Fn(&A::Key) -> Tensor<A::Key>,
    w: u32,
) -> Failures {
    let delta = |k: &H::Key| Element::<H>::basis(k.clone()).coproduct();
    let mut out = Vec::new();
    let keys = keys_up_to::<A>(w);
    for k in &keys {
        let p = psi(k);
        if splice(&p, 0, &psi) != splice(&p, 1, delta) {
            out.push(format!("{label}: coassociativity fails on {}", A::key_string(k)));
        }
        if contract(&p, 1, counit_of) != single(k) {
            out.push(format!("{label}: counit fails on {}", A::key_string(k)));
        }
    }
    let factorwise = |x: &Tensor<A::Key>, y: &Tensor<A::Key>| {
        let mut r = Lin::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                for (base, c1) in A::mul_keys(&a[0], &b[0]).iter() {
                    for (top, c2) in H::mul_keys(&a[1], &b[1]).iter() {
                        r.add_term(vec![base.clone(), top.clone()], &(c * d) * &(c1 * c2));
                    }
                }
            }
        }
        r
    };
    for a in &keys {
        for b in keys_up_to::<A>(w - a.weight()) {
            let ab = A::mul_keys(a, &b).map_linear(&psi);
            if ab != factorwise(&psi(a), &psi(&b)) {
                out.push(format!(
                    "{label}: not multiplicative on {} * {}",
                    A::key_string(a),
                    A::key_string(&b)
                ));
            }
        }
    }
    out
}

type KeyOf<G> = <<G as SplitAlgebroid>::Base as Algebra>::Key;

/// Cosimplicial identities between cofaces `d_i` and codegeneracies `s_j`,
/// and `d² = 0`, on every basis cochain of level `<= 2` and weight `<= w`.
fn check_cosimplicial<G: SplitAlgebroid>(w: u32) -> Failures {
    let mut out = Vec::new();
    let bounds = CobarBounds::default();
    for n in 0..=2usize {
        for wt in 0..=w {
            for key in cochain_basis::<G>(n, wt, false) {
                let x: Tensor<KeyOf<G>> = Lin::basis(key.clone());
                let tag = format!("{} level {n} on {key:?}", G::NAME);
                for j in 1..=n + 2 {
                    for i in 0..j {
                        let lhs = coface::<G>(&coface::<G>(&x, n, i), n + 1, j);
                        let rhs = coface::<G>(&coface::<G>(&x, n, j - 1), n + 1, i);
                        if lhs != rhs {
                            out.push(format!("d{j} d{i} != d{i} d{} ({tag})", j - 1));
                        }
                    }
                }
                for j in 0..=n {
                    for i in 0..=n + 1 {
                        let lhs = codegeneracy::<G>(&coface::<G>(&x, n, i), j);
                        let rhs = if i < j {
                            coface::<G>(&codegeneracy::<G>(&x, j - 1), n - 1, i)
                        } else if i == j || i == j + 1 {
                            x.clone()
                        } else {
                            coface::<G>(&codegeneracy::<G>(&x, j), n - 1, i - 1)
                        };
                        if lhs != rhs {
                            out.push(format!("s{j} d{i} identity fails ({tag})"));
                        }
                    }
                }
                let d = cobar_differential::<G>(&x, n, bounds).unwrap();
                if n < 2 && !cobar_differential::<G>(&d, n + 1, bounds).unwrap().is_zero() {
                    out.push(format!("d² != 0 ({tag})"));
                }
            }
        }
    }
    out
}

/// Rank of a list of sparse vectors by Gaussian elimination over the rationals.
fn rank<K: Ord + Clone>(vectors: &[Lin<K>]) -> usize {
    let columns: Vec<K> = vectors
        .iter()
        .flat_map(|v| v.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut rows: Vec<Vec<Scalar>> = vectors
        .iter()
        .map(|v| columns.iter().map(|k| v.coeff(k)).collect())
        .collect();
    let mut r = 0;
    for col in 0..columns.len() {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pivot;
                for c in col..columns.len() {
                    let sub = &f * &rows[r][c];
                    rows[i][c] -= &sub;
                }
            }
        }
        r += 1;
    }
    r
}

fn comodule_and_algebroid() -> Failures {
    let mut out = check_coaction::<Sym, FaaDiBruno>("psi_S", coaction_sym_key, 6);
    out.extend(check_coaction::<NSym, Bfk>("psi_N", coaction_nsym_key, 6));
    out.extend(check_coaction::<NSym, Bfk>(
        "psi_N shifted",
        shifted_coaction_nsym_key,
        6,
    ));
    out.extend(check_cosimplicial::<SymFdb>(5));
    out.extend(check_cosimplicial::<NsymBfk>(5));
    out.extend(check_cosimplicial::<NsymBfkShifted>(5));
    for w in 0..=3u32 {
        let vectors: Vec<Tensor<Partition>> = Sym::basis(w)
            .iter()
            .map(|k| &coaction_sym_key(k) - &Lin::basis(vec![k.clone(), Partition::empty()]))
            .collect();
        let kernel = vectors.len() - rank(&vectors);
        let library = cohomology_rank::<SymFdb>(w, 0, CobarBounds::default()).unwrap();
        if kernel != 1 || library != 1 {
            out.push(format!(
                "H^0 of S.B at weight {w}: oracle {kernel}, library {library}, expected 1"
            ));
        }
    }
    out
}

// ---------------------------------------------------------------------------

/// `Σ_λ m_λ(ν) b_λ` for the stable normal bundle of `CP^n`, whose Chern roots
/// are `-(n+1)` copies of `x`: the coefficient of `x^n` in
/// `(1 + Σ_k b_k x^k)^{-(n+1)} = Σ_j C(-(n+1), j) u^j`.
fn normal_bundle_numbers(n: u32) -> Element<BPoly> {
    let n = n as usize;
    let mut u = vec![Element::<BPoly>::zero(); n + 1];
    for (k, slot) in u.iter_mut().enumerate().skip(1) {
        *slot = Element::basis(Partition::single(k as u32));
    }
    let mut power = vec![Element::<BPoly>::zero(); n + 1];
    power[0] = Element::one();
    let mut total = Element::zero();
    let mut binom = s(1);
    let a = -(n as i64 + 1);
    for j in 0..=n {
        total = total + power[n].scale(&binom);
        binom = &(&binom * &s(a - j as i64)) / &s(j as i64 + 1);
        let mut next = vec![Element::<BPoly>::zero(); n + 1];
        for (p, x) in power.iter().enumerate() {
            for (q, y) in u.iter().enumerate() {
                if p + q <= n && !x.is_zero() && !y.is_zero() {
                    next[p + q] = &next[p + q] + &(x * y);
                }
            }
        }
        power = next;
    }
    total
}

fn topology() -> Failures {
    let mut out = Vec::new();
    let log = miscenko_log(8).unwrap();
    for n in 1..=7u32 {
        let chi = Element::<BPoly>::basis(Partition::single(n)).antipode();
        if log.coeff(i64::from(n) + 1) != chi {
            out.push(format!("[T^{}] of the logarithm differs from chi(b_{n})", n + 1));
        }
        if cp_hurewicz(n) != chi.scale(&s(i64::from(n) + 1)) {
            out.push(format!("h(CP_{n}) != {} chi(b_{n})", n + 1));
        }
    }
    for n in 1..=5u32 {
        let oracle = normal_bundle_numbers(n);
        for lambda in BPoly::basis(n) {
            let got = cp_char_number(n, &lambda).unwrap();
            if got != oracle.coeff(&lambda) {
                out.push(format!(
                    "cp_char_number({n}, {lambda}) = {got}, oracle {}",
                    oracle.coeff(&lambda)
                ));
            }
        }
    }

    let cap = 6;
    let f = fgl(cap as i64).unwrap();
    let var = |nv, i| MultiSeries::<BPoly>::variable(nv, i, cap);
    let zero = MultiSeries::<BPoly>::zero(2, cap);
    if f.substitute(&[var(2, 0), zero.clone()]).unwrap() != var(2, 0)
        || f.substitute(&[zero, var(2, 1)]).unwrap() != var(2, 1)
    {
        out.push("F is not unital".to_string());
    }
    if f.substitute(&[var(2, 1), var(2, 0)]).unwrap() != f {
        out.push("F is not commutative".to_string());
    }
    let (x, y, w) = (var(3, 0), var(3, 1), var(3, 2));
    let fxy = f.substitute(&[x.clone(), y.clone()]).unwrap();
    let fyw = f.substitute(&[y, w.clone()]).unwrap();
    if f.substitute(&[fxy, w]).unwrap() != f.substitute(&[x, fyw]).unwrap() {
        out.push("F is not associative".to_string());
    }

    let beta = beta_series(cap as i64).unwrap();
    let lhs = MultiSeries::compose_univariate(&beta, &beta_embed_series(&f)).unwrap();
    let rhs = MultiSeries::from_univariate(&beta, 2, 0)
        .unwrap()
        .mul(&MultiSeries::from_univariate(&beta, 2, 1).unwrap());
    if lhs.truncate(5) != rhs.truncate(5) {
        out.push("beta(F(X, Y)) != beta(X) beta(Y) mod degree 6".to_string());
    }

    if abelianize_to_b(&cp_infinity_coproduct(4).unwrap()) != fgl(4).unwrap() {
        out.push("cp_infinity_coproduct does not abelianize to F mod degree 5".to_string());
    }
    out
}

// ---------------------------------------------------------------------------

fn counts() -> Failures {
    let mut out = Vec::new();
    for n in 1..=12u32 {
        let got: BTreeSet<Vec<u32>> = compositions_of(i64::from(n))
            .unwrap()
            .into_iter()
            .map(Vec::from)
            .collect();
        // A composition of n is a subset of the n - 1 gaps between n dots.
        let oracle: BTreeSet<Vec<u32>> = (0u32..1 << (n - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut run = 1;
                for gap in 0..n - 1 {
                    if mask >> gap & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                parts
            })
            .collect();
        if got.len() != 1 << (n - 1) || got != oracle {
            out.push(format!("compositions of {n}: {} found", got.len()));
        }
    }
    for k in 1..=10u32 {
        let x = crn_invariant(i64::from(k)).unwrap();
        let units = x.iter().filter(|(i, c)| c.is_one() && i.weight() == k).count();
        if units != 1 << (k - 1) || x.len() != units {
            out.push(format!("crn_invariant({k}) has {units} unit coefficients"));
        }
    }
    out
}

// ---------------------------------------------------------------------------

fn hopfcalc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcalc"))
        .args(args)
        .output()
        .expect("the hopfcalc binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 output"),
        String::from_utf8(out.stderr).expect("utf-8 output"),
    )
}

fn random_parts(rng: &mut StdRng) -> Vec<u32> {
    let w: u32 = rng.gen_range(0..=6);
    if w == 0 {
        return Vec::new();
    }
    let mask: u32 = rng.gen_range(0..1 << (w - 1));
    compositions_of(i64::from(w)).unwrap()[mask as usize].parts().to_vec()
}

fn random_scalar(rng: &mut StdRng) -> Scalar {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=5);
    Scalar::ratio(num, den)
}

fn random_element<A: Algebra>(rng: &mut StdRng, key: impl Fn(Vec<u32>) -> A::Key) -> Element<A> {
    let n = rng.gen_range(0..=4);
    let mut out = Element::zero();
    for _ in 0..n {
        out = out + Element::term(key(random_parts(rng)), random_scalar(rng));
    }
    out
}

/// Print/parse and JSON round trips in the library, plus a sample through the binary.
fn round_trip<A: Parseable>(rng: &mut StdRng, key: impl Fn(Vec<u32>) -> A::Key, args: &[&str]) -> Failures
where
    A::Key: JsonKey,
{
    let mut out = Vec::new();
    for i in 0..1000 {
        let x = random_element::<A>(rng, &key);
        let text = x.to_string();
        if parse_element::<A>(&text).as_ref() != Ok(&x) {
            out.push(format!("{}: {text} does not parse back", A::TAG));
        }
        let doc = serde_json::to_string(&element_doc(&x)).unwrap();
        let back = element_from_doc::<A>(&serde_json::from_str(&doc).unwrap());
        if back.as_ref() != Ok(&x) {
            out.push(format!("{}: JSON {doc} does not read back", A::TAG));
        }
        if i % 50 == 0 {
            let mut argv = vec!["--format", "text"];
            argv.extend_from_slice(args);
            argv.extend(["--", text.as_str()]);
            let (code, stdout, _) = hopfcalc(&argv);
            if code != 0 || stdout.trim_end() != text {
                out.push(format!("hopfcalc {argv:?} printed {stdout:?}"));
            }
        }
    }
    out
}

fn sym_round_trip(rng: &mut StdRng) -> Failures {
    let mut out = Vec::new();
    for i in 0..1000 {
        let basis = SymBasis::ALL[rng.gen_range(0..4)];
        let x = SymElement::from_e(&Element::zero())
            .convert(basis, hopfcalc::ScalarRing::Rationals)
            .unwrap();
        let x = (0..rng.gen_range(0..=4)).fold(x, |acc, _| {
            let key = Partition::new(random_parts(rng)).unwrap();
            acc.add(&SymElement::basis_element(basis, key).scale(&random_scalar(rng)))
        });
        let text = x.to_string();
        match parse_sym(&text).and_then(|y| y.convert(basis, hopfcalc::ScalarRing::Rationals)) {
            Ok(y) if y == x => {}
            _ => out.push(format!("sym: {text} does not parse back")),
        }
        let doc = serde_json::to_string(&sym_doc(&x)).unwrap();
        if sym_from_doc(&serde_json::from_str(&doc).unwrap()).as_ref() != Ok(&x) {
            out.push(format!("sym: JSON {doc} does not read back"));
        }
        if i % 50 == 0 && x.terms().keys().any(|k| !k.is_empty()) {
            let (code, stdout, _) = hopfcalc(&["--format", "text", "eval", "--", &text]);
            if code != 0 || stdout.trim_end() != text {
                out.push(format!("hopfcalc eval {text:?} printed {stdout:?}"));
            }
        }
    }
    out
}

/// `$ hopfcalc ...` lines in the README's console blocks, each followed by
/// its expected standard output.
fn readme_examples() -> Vec<(String, String)> {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap_or_default();
    let mut examples = Vec::new();
    let mut in_block = false;
    let mut current: Option<(String, Vec<String>)> = None;
    for line in readme.lines() {
        if line.starts_with("```") {
            if let Some((cmd, lines)) = current.take() {
                examples.push((cmd, lines.join("\n")));
            }
            in_block = line.trim() == "```console";
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ hopfcalc ") {
            if let Some((c, lines)) = current.take() {
                examples.push((c, lines.join("\n")));
            }
            current = Some((cmd.to_string(), Vec::new()));
        } else if let Some((_, lines)) = current.as_mut() {
            lines.push(line.to_string());
        }
    }
    examples
}

fn cli_contract() -> Failures {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut out = sym_round_trip(&mut rng);
    out.extend(round_trip::<NSym>(
        &mut rng,
        |p| Composition::new(p).unwrap(),
        &["eval", "--algebra", "nsym"],
    ));
    out.extend(round_trip::<Bfk>(
        &mut rng,
        |p| Composition::new(p).unwrap(),
        &["--structure", "bfk", "eval", "--algebra", "nsym"],
    ));
    out.extend(round_trip::<QSym>(
        &mut rng,
        |p| Composition::new(p).unwrap(),
        &["eval", "--algebra", "qsym"],
    ));
    out.extend(round_trip::<FaaDiBruno>(
        &mut rng,
        |p| Partition::new(p).unwrap(),
        &["eval", "--algebra", "fdb"],
    ));
    out.extend(round_trip::<BPoly>(
        &mut rng,
        |p| Partition::new(p).unwrap(),
        &["eval", "--algebra", "bpoly"],
    ));

    let (code, json, _) = hopfcalc(&["eval", "e[1]^2 - e[2]"]);
    let expected = r#"{"algebra":"sym","basis":"e","terms":[{"index":[1,1],"coeff":"1"},{"index":[2],"coeff":"-1"}]}"#;
    if code != 0 || json.trim_end() != expected {
        out.push(format!("e1^2 - e2 printed {json:?}"));
    }
    let stable: [&[&str]; 6] = [
        &["coproduct", "--structure", "bfk", "Z[3,1] + 2*Z[2]"],
        &["antipode", "M[1,2,1]"],
        &["convert", "p[3,1]", "--to", "m"],
        &["fgl", "--cap", "5"],
        &["--cap", "5", "fgl", "--nc"],
        &["cobar-differential", "e[2]*e[1] + e[3]"],
    ];
    for args in stable {
        let first = hopfcalc(args);
        let second = hopfcalc(args);
        if first.0 != 0 || first != second {
            out.push(format!("hopfcalc {args:?} is not byte-stable or failed"));
        }
    }

    let examples = readme_examples();
    if examples.len() < 40 {
        out.push(format!(
            "only {} documented invocations found in README.md",
            examples.len()
        ));
    }
    for (cmd, expected) in examples {
        let argv = shlex::split(&cmd).unwrap_or_default();
        let argv: Vec<&str> = argv.iter().map(String::as_str).collect();
        let (code, stdout, stderr) = hopfcalc(&argv);
        if code != 0 || stdout.trim_end() != expected.trim_end() {
            out.push(format!(
                "`hopfcalc {cmd}` exited {code}: {stdout:?} {stderr:?}, expected {expected:?}"
            ));
        }
    }
    out
}
