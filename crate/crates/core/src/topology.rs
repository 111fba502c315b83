//! Cobordism-flavoured applications: the Miščenko logarithm and the formal
//! group law in the generators `b_k`, Hurewicz images and characteristic
//! numbers of projective spaces, the β-series, quasisymmetric characteristic
//! numbers of products of projective spaces, and the noncommutative series
//! attached to the renormalization Hopf algebra.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::algebra::{letter_key, Algebra, Element};
use crate::error::{Error, Result};
use crate::index::{compositions_of, Composition, Graded, Partition};
use crate::lin::Lin;
use crate::nsym::{NSym, QSym};
use crate::poly::Poly;
use crate::renorm::{antipode_series, generating_series, BPoly, Bfk};
use crate::scalar::{Scalar, ScalarRing};
use crate::series::{MultiSeries, Series};

fn require_cap(cap: i64) -> Result<()> {
    if cap < 1 {
        return Err(Error::domain(format!("cap must be at least 1, got {cap}")));
    }
    Ok(())
}

/// `b(T) = Σ_{k≥0} b_k T^{k+1}`, `b_0 = 1`.
pub fn b_series(cap: i64) -> Series<BPoly> {
    generating_series::<BPoly>(Partition::single, cap)
}

/// The logarithm of the universal formal group law: the compositional
/// inverse of `b(T)`.
pub fn miscenko_log(cap: i64) -> Result<Series<BPoly>> {
    require_cap(cap)?;
    b_series(cap).revert()
}

/// `h{CP_n} = (n+1) χ(b_n)` with the composition antipode.
pub fn cp_hurewicz(n: u32) -> Element<BPoly> {
    if n == 0 {
        return Element::one();
    }
    Element::<BPoly>::basis(Partition::single(n))
        .antipode()
        .scale(&Scalar::from_int(i64::from(n) + 1))
}

/// The coefficient of `b_λ` in `h{CP_n}`.
pub fn cp_char_number(n: u32, lambda: &Partition) -> Result<Scalar> {
    if lambda.weight() != n {
        return Err(Error::domain(format!(
            "partition {lambda} has weight {}, expected {n}",
            lambda.weight()
        )));
    }
    Ok(cp_hurewicz(n).coeff(lambda))
}

/// `F(X, Y) = b(b^{-1}(X) + b^{-1}(Y))` modulo total degree `cap`.
pub fn fgl(cap: i64) -> Result<MultiSeries<BPoly>> {
    require_cap(cap)?;
    let log = miscenko_log(cap)?;
    let sum = MultiSeries::from_univariate(&log, 2, 0)?.add(&MultiSeries::from_univariate(&log, 2, 1)?);
    MultiSeries::compose_univariate(&b_series(cap), &sum)
}

// ---------------------------------------------------------------------------

/// Basis key `β^k b_λ` of the polynomial algebra in `b_1, b_2, ...` with a
/// central generator `β` adjoined.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BetaKey {
    pub beta: u32,
    pub b: Partition,
}

impl Graded for BetaKey {
    fn weight(&self) -> u32 {
        self.beta + self.b.weight()
    }
}

impl Ord for BetaKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.beta.cmp(&self.beta))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl PartialOrd for BetaKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `Q[β, b_1, b_2, ...]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaPoly;

impl Algebra for BetaPoly {
    type Key = BetaKey;
    const TAG: &'static str = "bpoly-beta";
    const BASIS: &'static str = "b";
    const COMMUTATIVE: bool = true;

    fn one() -> BetaKey {
        BetaKey::default()
    }

    fn mul_keys(a: &BetaKey, b: &BetaKey) -> Lin<BetaKey> {
        Lin::basis(BetaKey {
            beta: a.beta + b.beta,
            b: a.b.union(&b.b),
        })
    }

    fn basis(weight: u32) -> Vec<BetaKey> {
        (0..=weight)
            .rev()
            .flat_map(|beta| {
                crate::index::partitions_of(i64::from(weight - beta))
                    .expect("nonnegative weight")
                    .into_iter()
                    .map(move |b| BetaKey { beta, b })
            })
            .collect()
    }

    fn key_string(key: &BetaKey) -> String {
        let beta = match key.beta {
            0 => None,
            1 => Some("beta".to_string()),
            k => Some(format!("beta^{k}")),
        };
        let b = (!key.b.is_empty()).then(|| letter_key("b", key.b.parts()));
        match (beta, b) {
            (None, None) => "1".to_string(),
            (Some(x), None) | (None, Some(x)) => x,
            (Some(x), Some(y)) => format!("{x}*{y}"),
        }
    }
}

fn beta_embed(x: &Element<BPoly>) -> Element<BetaPoly> {
    Element::from_lin(x.lin().map_keys(|b| BetaKey { beta: 0, b: b.clone() }))
}

/// `β(T) = exp(β · log(T))`.
pub fn beta_series(cap: i64) -> Result<Series<BetaPoly>> {
    require_cap(cap)?;
    let log = miscenko_log(cap)?.map_coeffs(beta_embed);
    let beta = Element::<BetaPoly>::basis(BetaKey {
        beta: 1,
        b: Partition::empty(),
    });
    log.left_mul(&beta).exp(ScalarRing::Rationals)
}

/// Embeds formal-group-law coefficients into `Q[β, b]`.
pub fn beta_embed_series(f: &MultiSeries<BPoly>) -> MultiSeries<BetaPoly> {
    f.map_coeffs(beta_embed)
}

// ---------------------------------------------------------------------------

/// A product of complex projective spaces `CP^{n_1} × ... × CP^{n_m}` with an
/// ordered list of line-bundle roots, each an integer vector of coefficients
/// of the generators `x_1, ..., x_m` of `H^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectiveProductSpace {
    pub factors: Vec<u32>,
    pub roots: Vec<Vec<i64>>,
}

/// Which bundle the characteristic numbers are taken of.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    Tangential,
    /// The stable normal bundle, with the sign `(-1)^{|I|}`.
    Normal,
}

impl ProjectiveProductSpace {
    pub fn new(factors: Vec<u32>, roots: Vec<Vec<i64>>) -> Result<Self> {
        let space = ProjectiveProductSpace { factors, roots };
        space.validate()?;
        Ok(space)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(r) = self.roots.iter().find(|r| r.len() != self.factors.len()) {
            return Err(Error::domain(format!(
                "root {r:?} has {} coordinates but the space has {} factors",
                r.len(),
                self.factors.len()
            )));
        }
        Ok(())
    }

    /// The tangent roots of the product: `n_j + 1` copies of `x_j` for each factor.
    pub fn tangent(factors: Vec<u32>) -> Self {
        let m = factors.len();
        let roots = factors
            .iter()
            .enumerate()
            .flat_map(|(j, &n)| {
                let mut r = vec![0; m];
                r[j] = 1;
                std::iter::repeat_n(r, n as usize + 1)
            })
            .collect();
        ProjectiveProductSpace { factors, roots }
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().sum()
    }

    fn root_polys(&self) -> Vec<Poly> {
        let m = self.factors.len();
        self.roots
            .iter()
            .map(|r| {
                r.iter().enumerate().fold(Poly::zero(m), |acc, (j, &c)| {
                    acc.add(&Poly::var(m, j).scale(&Scalar::from_int(c)))
                })
            })
            .collect()
    }

    /// `M_I(y_1, ..., y_N)` in the truncated cohomology ring.
    pub fn evaluate_monomial(&self, i: &Composition) -> Poly {
        let m = self.factors.len();
        let bounds = self.factors.clone();
        let ys = self.root_polys();
        let parts = i.parts();
        // dp[k]: sum over increasing choices of roots for the first k parts.
        let mut dp = vec![Poly::zero(m); parts.len() + 1];
        dp[0] = Poly::one(m);
        for y in &ys {
            for k in (0..parts.len()).rev() {
                if dp[k].is_zero() {
                    continue;
                }
                let term = dp[k].mul_truncated(&y.pow_truncated(parts[k], Some(&bounds)), Some(&bounds));
                dp[k + 1] = dp[k + 1].add(&term);
            }
        }
        dp.pop().expect("nonempty table")
    }

    /// Pushforward to a point: the coefficient of `x_1^{n_1} ··· x_m^{n_m}`.
    pub fn pushforward(&self, class: &Poly) -> Scalar {
        class.coeff(&self.factors)
    }

    pub fn evaluate(&self, f: &Element<QSym>) -> Poly {
        let m = self.factors.len();
        f.iter().fold(Poly::zero(m), |acc, (i, c)| {
            acc.add(&self.evaluate_monomial(i).scale(c))
        })
    }
}

/// The characteristic number of `M_I`: evaluate on the ordered roots and push
/// forward. The normal convention pairs `(-1)^{|I|} χ(M_I)` with the
/// tangent roots.
pub fn quasitoric_char_number(
    space: &ProjectiveProductSpace,
    i: &Composition,
    convention: Convention,
) -> Result<Scalar> {
    space.validate()?;
    let class = match convention {
        Convention::Tangential => space.evaluate_monomial(i),
        Convention::Normal => {
            let chi = Element::<QSym>::basis(i.clone()).antipode();
            space.evaluate(&chi).scale(&Scalar::sign(i.weight() as usize))
        }
    };
    Ok(space.pushforward(&class))
}

// ---------------------------------------------------------------------------

/// `Σ_{|I|=k} Z_I`.
pub fn crn_invariant(k: i64) -> Result<Element<NSym>> {
    if k < 1 {
        return Err(Error::domain(format!("k must be at least 1, got {k}")));
    }
    Ok(Element::from_lin(
        compositions_of(k)?.into_iter().map(|i| (i, Scalar::one())).collect(),
    ))
}

/// `(χ Z)(-T)`: the renormalization antipode applied to each coefficient of
/// `Z(T) = Σ Z_k T^{k+1}`, followed by `T ↦ -T`.
pub fn cumulant_series(cap: i64) -> Result<Series<Bfk>> {
    require_cap(cap)?;
    Ok(antipode_series::<Bfk>(cap).negate_variable())
}

/// `Σ_{k≥0} Z_k · ((χZ)(X) + (χZ)(Y))^{k+1}` modulo total degree `cap`, with
/// the renormalization antipode.
pub fn cp_infinity_coproduct(cap: i64) -> Result<MultiSeries<NSym>> {
    require_cap(cap)?;
    let chi: Series<NSym> = antipode_series::<Bfk>(cap).map_coeffs(Element::cast);
    let sum = MultiSeries::from_univariate(&chi, 2, 0)?.add(&MultiSeries::from_univariate(&chi, 2, 1)?);
    let z = generating_series::<NSym>(Composition::single, cap);
    MultiSeries::compose_univariate(&z, &sum)
}

/// `Z_I ↦ b_{sort(I)}` on series coefficients.
pub fn abelianize_to_b(f: &MultiSeries<NSym>) -> MultiSeries<BPoly> {
    f.map_coeffs(|c| Element::from_lin(c.lin().map_keys(Composition::to_partition)))
}
