//! Formal diffeomorphisms: the Faà di Bruno Hopf algebra on `t_1, t_2, ...`
//! (commutative, coproduct dual to composition of `t(T) = Σ t_k T^{k+1}`)
//! and its noncommutative analogue on `Z_1, Z_2, ...`, together with the
//! coactions on the symmetric and noncommutative symmetric functions.

use crate::algebra::{letter_key, Algebra, Element, Hopf};
use crate::cache::memo;
use crate::index::{partitions_of, Composition, Partition};
use crate::lin::{Lin, Tensor};
use crate::nsym::{all_compositions, coproduct_over_letters};
use crate::series::Series;
use crate::sym::{coproduct_over_parts, product_over_parts};

/// The generating series `Σ_{j=0}^{cap-1} x_j T^{j+1}` with `x_0 = 1`.
pub fn generating_series<A: Algebra>(generator: impl Fn(u32) -> A::Key, cap: i64) -> Series<A> {
    Series::from_coeffs(
        cap,
        (0..cap.max(0)).map(|j| {
            let key = if j == 0 { A::one() } else { generator(j as u32) };
            (j + 1, Element::basis(key))
        }),
    )
}

/// `Σ_{j=0}^{n} x_j ⊗ [T^{n+1}] x(T)^{j+1}`: the generator coproduct shared
/// by both diffeomorphism algebras, computed from the series expansion.
fn composition_coproduct_generator<A: Algebra>(n: u32, generator: impl Fn(u32) -> A::Key + Copy) -> Tensor<A::Key> {
    let cap = n as i64 + 1;
    let x = generating_series::<A>(generator, cap);
    let mut out = Lin::zero();
    let mut power = x.clone();
    for j in 0..=n {
        let left = if j == 0 { A::one() } else { generator(j) };
        for (key, c) in power.coeff(cap).iter() {
            out.add_term(vec![left.clone(), key.clone()], c.clone());
        }
        power = power.mul(&x);
    }
    out
}

macro_rules! diffeomorphism_algebra {
    ($(#[$doc:meta])* $name:ident, $tag:literal, $letter:literal) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
        pub struct $name;

        impl Algebra for $name {
            type Key = Partition;
            const TAG: &'static str = $tag;
            const BASIS: &'static str = $letter;
            const STRUCTURE: Option<&'static str> = Some("fdb");
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
                letter_key($letter, key.parts())
            }
        }

        impl Hopf for $name {
            fn coproduct_key(key: &Partition) -> Tensor<Partition> {
                coproduct_over_parts::<$name>(key, |n| {
                    memo::<$name, _, _>("coproduct_generator", &n, || {
                        composition_coproduct_generator::<$name>(n, Partition::single)
                    })
                })
            }

            /// `χ(x_n) = [T^{n+1}]` of the compositional inverse of `x(T)`,
            /// extended multiplicatively.
            fn antipode_key(key: &Partition) -> Lin<Partition> {
                product_over_parts::<$name>(key, |n| {
                    memo::<$name, _, _>("antipode_generator", &n, || {
                        let cap = n as i64 + 1;
                        generating_series::<$name>(Partition::single, cap)
                            .revert()
                            .expect("leading coefficient is 1")
                            .coeff(cap)
                            .into_lin()
                    })
                })
            }
        }
    };
}

diffeomorphism_algebra!(
    /// The Faà di Bruno Hopf algebra in the generators `t_k`.
    FaaDiBruno,
    "fdb",
    "t"
);

diffeomorphism_algebra!(
    /// The same Hopf algebra written in the generators `b_k` of the
    /// homology of `MU`.
    BPoly,
    "bpoly",
    "b"
);

/// The free associative algebra on `Z_k` with the renormalization coproduct
/// `Δ Z_n = Σ_{k≥1} Z_{k-1} ⊗ [T^{n+1}] Z(T)^k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bfk;

impl Algebra for Bfk {
    type Key = Composition;
    const TAG: &'static str = "nsym";
    const BASIS: &'static str = "Z";
    const STRUCTURE: Option<&'static str> = Some("bfk");
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

impl Hopf for Bfk {
    fn coproduct_key(key: &Composition) -> Tensor<Composition> {
        memo::<Bfk, _, _>("coproduct", key, || {
            coproduct_over_letters::<Bfk>(key, bfk_generator_coproduct)
        })
    }
}

fn bfk_generator_coproduct(n: u32) -> Tensor<Composition> {
    memo::<Bfk, _, _>("coproduct_generator", &n, || {
        composition_coproduct_generator::<Bfk>(n, Composition::single)
    })
}

/// `Z_I ↦ t_{sort(I)}`.
pub fn bfk_abelianize(f: &Element<Bfk>) -> Element<FaaDiBruno> {
    Element::from_lin(f.lin().map_keys(Composition::to_partition))
}

/// Factorwise abelianization of composition tensors.
pub fn abelianize_tensor(x: &Tensor<Composition>) -> Tensor<Partition> {
    x.map_keys(|factors| factors.iter().map(Composition::to_partition).collect())
}

// ---------------------------------------------------------------------------
// Coactions

/// `ψ(e_n) = [T^n] e(t(T)) = Σ_k e_k ⊗ [T^n] t(T)^k` in `Sym ⊗ FaaDiBruno`,
/// extended multiplicatively. Both tensor factors multiply by union of
/// partitions.
pub fn coaction_sym_key(key: &Partition) -> Tensor<Partition> {
    coproduct_over_parts::<FaaDiBruno>(key, |n| {
        memo::<FaaDiBruno, _, _>("sym_coaction_generator", &n, || {
            substitution_generator::<FaaDiBruno>(n, Partition::single)
        })
    })
}

pub fn coaction_sym(x: &Lin<Partition>) -> Tensor<Partition> {
    x.map_linear(coaction_sym_key)
}

/// `Σ_{k=0}^{n} x_k ⊗ [T^n] y(T)^k` where `y(T) = Σ y_j T^{j+1}` and both
/// families use the same generator keys.
fn substitution_generator<A: Algebra>(n: u32, generator: impl Fn(u32) -> A::Key + Copy) -> Tensor<A::Key> {
    let cap = n as i64;
    let y = generating_series::<A>(generator, cap.max(1));
    let mut out = Lin::zero();
    let mut power = Series::<A>::one(cap);
    for k in 0..=n {
        let left = if k == 0 { A::one() } else { generator(k) };
        for (key, c) in power.coeff(cap).iter() {
            out.add_term(vec![left.clone(), key.clone()], c.clone());
        }
        power = power.mul(&y).truncate(cap);
    }
    out
}

/// The coaction of the renormalization Hopf algebra on the noncommutative
/// symmetric functions given by its own coproduct.
pub fn coaction_nsym_key(key: &Composition) -> Tensor<Composition> {
    Bfk::coproduct_key(key)
}

/// The noncommutative lift of the symmetric coaction:
/// `ψ'(Z_n) = Σ_j Z_j ⊗ [T^n] Z(T)^j`, extended multiplicatively.
pub fn shifted_coaction_nsym_key(key: &Composition) -> Tensor<Composition> {
    coproduct_over_letters::<Bfk>(key, |n| {
        memo::<Bfk, _, _>("shifted_coaction_generator", &n, || {
            substitution_generator::<Bfk>(n, Composition::single)
        })
    })
}

/// `η_R(Z_k)` curried against `M_I`: the sum over `Δ Z_k = Σ x' ⊗ x''` of
/// `⟨x'', M_I⟩ · x'`.
pub fn right_unit_functional(k: u32, i: &Composition) -> Element<Bfk> {
    let key = if k == 0 {
        Composition::empty()
    } else {
        Composition::single(k)
    };
    let mut out = Lin::zero();
    for (pair, c) in Bfk::coproduct_key(&key).iter() {
        if &pair[1] == i {
            out.add_term(pair[0].clone(), c.clone());
        }
    }
    Element::from_lin(out)
}

/// The coefficient series `Σ_k χ(Z_k) T^{k+1}` of the antipode applied to
/// `Z(T)`, for either composition-indexed Hopf algebra.
pub fn antipode_series<H: Hopf<Key = Composition>>(cap: i64) -> Series<H> {
    generating_series::<H>(Composition::single, cap).map_coeffs(|c| c.antipode())
}
