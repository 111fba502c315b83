//! Noncommutative symmetric functions `Z_I` and quasisymmetric functions
//! `M_I`, the duality between them, abelianization onto the symmetric
//! functions and the inclusion of the symmetric functions into `QSym`.

use crate::algebra::{self, letter_key, Algebra, Element, Hopf};
use crate::cache::memo;
use crate::index::{compositions_of, Composition};
use crate::lin::{Lin, Tensor};
use crate::poly::Poly;
use crate::scalar::{Scalar, ScalarRing};
use crate::sym::{Sym, SymBasis, SymElement};

/// The free associative algebra on `Z_1, Z_2, ...` with the binomial
/// coproduct `Δ Z_n = Σ_{i+j=n} Z_i ⊗ Z_j`, `Z_0 = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct NSym;

/// Quasisymmetric functions in the monomial basis `M_I`, with the
/// quasi-shuffle product and deconcatenation coproduct.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct QSym;

pub(crate) fn all_compositions(weight: u32) -> Vec<Composition> {
    compositions_of(weight as i64).expect("nonnegative weight")
}

/// `Σ_{i+j=n} Z_i ⊗ Z_j` on composition keys.
pub(crate) fn binomial_generator(n: u32) -> Tensor<Composition> {
    let single = |k: u32| {
        if k == 0 {
            Composition::empty()
        } else {
            Composition::single(k)
        }
    };
    (0..=n)
        .map(|i| (vec![single(i), single(n - i)], Scalar::one()))
        .collect()
}

/// Multiplicative extension of generator coproducts over the parts of a word.
pub(crate) fn coproduct_over_letters<A: Algebra<Key = Composition>>(
    key: &Composition,
    generator: impl Fn(u32) -> Tensor<Composition>,
) -> Tensor<Composition> {
    algebra::coproduct_of_factors::<A>(key.parts().iter().map(|&k| generator(k)))
}

impl Algebra for NSym {
    type Key = Composition;
    const TAG: &'static str = "nsym";
    const BASIS: &'static str = "Z";
    const STRUCTURE: Option<&'static str> = Some("binomial");
    const COMMUTATIVE: bool = false;

    fn one() -> Composition {
        Composition::empty()
    }

    fn mul_keys(a: &Composition, b: &Composition) -> Lin<Composition> {
        Lin::basis(a.concat(b))
    }

    fn basis(weight: u32) -> Vec<Composition> {
        all_compositions(weight)
    }

    fn key_string(key: &Composition) -> String {
        letter_key("Z", key.parts())
    }
}

impl Hopf for NSym {
    fn coproduct_key(key: &Composition) -> Tensor<Composition> {
        memo::<NSym, _, _>("coproduct", key, || {
            coproduct_over_letters::<NSym>(key, binomial_generator)
        })
    }

    /// `χ(Z_n) = Σ_{|I|=n} (-1)^{r(I)} Z_I`, extended as an antimorphism.
    fn antipode_key(key: &Composition) -> Lin<Composition> {
        memo::<NSym, _, _>("antipode", key, || {
            let factors: Vec<Lin<Composition>> = key.parts().iter().rev().map(|&n| antipode_generator(n)).collect();
            algebra::product::<NSym>(factors.iter())
        })
    }
}

fn antipode_generator(n: u32) -> Lin<Composition> {
    all_compositions(n)
        .into_iter()
        .map(|i| {
            let sign = Scalar::sign(i.len());
            (i, sign)
        })
        .collect()
}

impl Algebra for QSym {
    type Key = Composition;
    const TAG: &'static str = "qsym";
    const BASIS: &'static str = "M";
    const COMMUTATIVE: bool = true;

    fn one() -> Composition {
        Composition::empty()
    }

    fn mul_keys(a: &Composition, b: &Composition) -> Lin<Composition> {
        quasi_shuffle(a, b)
    }

    fn basis(weight: u32) -> Vec<Composition> {
        all_compositions(weight)
    }

    fn key_string(key: &Composition) -> String {
        letter_key("M", key.parts())
    }
}

impl Hopf for QSym {
    fn coproduct_key(key: &Composition) -> Tensor<Composition> {
        key.deconcatenations()
            .map(|(l, r)| (vec![l, r], Scalar::one()))
            .collect()
    }
}

/// The quasi-shuffle product of two compositions:
/// `aI ⧢ bJ = a(I ⧢ bJ) + b(aI ⧢ J) + (a+b)(I ⧢ J)`.
pub fn quasi_shuffle(a: &Composition, b: &Composition) -> Lin<Composition> {
    if a.is_empty() {
        return Lin::basis(b.clone());
    }
    if b.is_empty() {
        return Lin::basis(a.clone());
    }
    memo::<QSym, _, _>("quasi_shuffle", &(a.clone(), b.clone()), || {
        let (x, rest_a) = (
            a.parts()[0],
            Composition::new(a.parts()[1..].to_vec()).expect("positive parts"),
        );
        let (y, rest_b) = (
            b.parts()[0],
            Composition::new(b.parts()[1..].to_vec()).expect("positive parts"),
        );
        let mut out = Lin::zero();
        let mut prefixed = |head: u32, tail: Lin<Composition>| {
            let head = Composition::single(head);
            for (k, c) in tail.iter() {
                out.add_term(head.concat(k), c.clone());
            }
        };
        prefixed(x, quasi_shuffle(&rest_a, b));
        prefixed(y, quasi_shuffle(a, &rest_b));
        prefixed(x + y, quasi_shuffle(&rest_a, &rest_b));
        out
    })
}

/// The pairing `⟨Z_I, M_J⟩ = δ_{IJ}`, for any composition-indexed algebras.
pub fn pair_compositions(f: &Lin<Composition>, g: &Lin<Composition>) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, c) in f.iter() {
        acc += &(c * &g.coeff(k));
    }
    acc
}

pub fn ns_qs_pair(f: &Element<NSym>, g: &Element<QSym>) -> Scalar {
    pair_compositions(f.lin(), g.lin())
}

/// `⟨a ⊗ b, x⟩ = Σ ⟨a, x'⟩⟨b, x''⟩` for 2-fold tensors of composition keys.
pub fn pair_tensors(f: &Tensor<Composition>, g: &Tensor<Composition>) -> Scalar {
    let mut acc = Scalar::zero();
    for (k, c) in f.iter() {
        acc += &(c * &g.coeff(k));
    }
    acc
}

/// `Z_I ↦ e_{sort(I)}`.
pub fn abelianize_nsym(f: &Element<NSym>) -> Element<Sym> {
    Element::from_lin(f.lin().map_keys(Composition::to_partition))
}

/// The symmetric functions inside `QSym`: `m_λ ↦ Σ_{sort(I)=λ} M_I`.
pub fn include_sym_in_qsym(f: &SymElement) -> Element<QSym> {
    let m = f
        .convert(SymBasis::M, ScalarRing::Rationals)
        .expect("rational conversion");
    Element::from_lin(m.terms().map_linear(|lambda| {
        lambda
            .distinct_permutations()
            .into_iter()
            .map(|i| (i, Scalar::one()))
            .collect()
    }))
}

/// `M_I(x_1, ..., x_n) = Σ_{j_1 < ... < j_r} x_{j_1}^{i_1} ··· x_{j_r}^{i_r}`.
pub fn expand_qsym(f: &Element<QSym>, n: usize) -> Poly {
    let mut out = Poly::zero(n);
    for (i, c) in f.iter() {
        let parts = i.parts();
        let mut dp = vec![Poly::zero(n); parts.len() + 1];
        dp[0] = Poly::one(n);
        for j in 0..n {
            let x = Poly::var(n, j);
            for k in (0..parts.len()).rev() {
                if !dp[k].is_zero() {
                    let term = dp[k].mul(&x.pow(parts[k]));
                    dp[k + 1] = dp[k + 1].add(&term);
                }
            }
        }
        out = out.add(&dp[parts.len()].scale(c));
    }
    out
}
