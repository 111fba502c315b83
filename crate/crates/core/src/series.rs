//! Truncated formal power and Laurent series over any implemented algebra.
//!
//! Indeterminates are central. Coefficients may be noncommutative; products
//! keep the left factor's coefficients on the left. Every series carries an
//! explicit cap: exponents above it are discarded and never recomputed.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{multiply, Algebra, Element};
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::scalar::{Scalar, ScalarRing};

/// A univariate series `Σ c_k T^k`, `k <= cap`, possibly with negative exponents.
#[derive(Clone, PartialEq, Eq)]
pub struct Series<A: Algebra> {
    coeffs: BTreeMap<i64, Element<A>>,
    cap: i64,
}

pub type TruncatedSeries<A> = Series<A>;

impl<A: Algebra> Series<A> {
    pub fn zero(cap: i64) -> Self {
        Series {
            coeffs: BTreeMap::new(),
            cap,
        }
    }

    pub fn one(cap: i64) -> Self {
        Self::monomial(0, Element::one(), cap)
    }

    /// The identity series `T`.
    pub fn variable(cap: i64) -> Self {
        Self::monomial(1, Element::one(), cap)
    }

    pub fn monomial(exponent: i64, coeff: Element<A>, cap: i64) -> Self {
        let mut s = Self::zero(cap);
        s.set(exponent, coeff);
        s
    }

    pub fn from_coeffs(cap: i64, coeffs: impl IntoIterator<Item = (i64, Element<A>)>) -> Self {
        let mut s = Self::zero(cap);
        for (k, c) in coeffs {
            let sum = &s.coeff(k) + &c;
            s.set(k, sum);
        }
        s
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    /// Stores `c` at `T^k`; ignored above the cap, removed when zero.
    pub fn set(&mut self, k: i64, c: Element<A>) {
        if k > self.cap || c.is_zero() {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
    }

    pub fn coeff(&self, k: i64) -> Element<A> {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Element<A>)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest stored exponent.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn truncate(&self, cap: i64) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k <= cap)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
            cap: cap.min(self.cap),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut out = self.truncate(cap);
        for (k, c) in other.iter() {
            if k <= cap {
                let sum = &out.coeff(k) + c;
                out.set(k, sum);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, c) in self.iter() {
            out.set(k, c.scale(s));
        }
        out
    }

    /// Multiplies every coefficient on the left by `c`.
    pub fn left_mul(&self, c: &Element<A>) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, x) in self.iter() {
            out.set(k, c * x);
        }
        out
    }

    /// Cauchy product; the cap is the largest exponent determined by both inputs.
    pub fn mul(&self, other: &Self) -> Self {
        let va = self.valuation().unwrap_or(0).min(0);
        let vb = other.valuation().unwrap_or(0).min(0);
        let cap = (self.cap + vb).min(other.cap + va);
        let mut acc: BTreeMap<i64, Lin<A::Key>> = BTreeMap::new();
        for (i, a) in self.iter() {
            for (j, b) in other.iter() {
                if i + j > cap {
                    continue;
                }
                let prod = multiply::<A>(a.lin(), b.lin());
                *acc.entry(i + j).or_default() += &prod;
            }
        }
        Series::from_coeffs(cap, acc.into_iter().map(|(k, l)| (k, Element::from_lin(l))))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.cap);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    fn require_power_series(&self, what: &str) -> Result<()> {
        match self.valuation() {
            Some(v) if v < 0 => Err(Error::domain(format!(
                "{what} needs a power series, found exponent {v}"
            ))),
            _ => Ok(()),
        }
    }

    /// `T^k · self`.
    pub fn shift(&self, k: i64) -> Self {
        Series::from_coeffs(self.cap + k, self.iter().map(|(e, c)| (e + k, c.clone())))
    }

    /// Two-sided multiplicative inverse. The lowest coefficient must be a
    /// nonzero scalar multiple of the unit; a leading `T^v` with `v != 0`
    /// inverts to `T^{-v}`.
    pub fn invert(&self) -> Result<Self> {
        match self.valuation() {
            Some(v) if v != 0 => return Ok(self.shift(-v).invert()?.shift(-v)),
            _ => {}
        }
        let c0 = self.coeff(0);
        let unit_only = c0.iter().all(|(k, _)| *k == A::one());
        if c0.is_zero() || !unit_only {
            return Err(Error::domain(
                "constant term is not an invertible scalar; series is not invertible",
            ));
        }
        let inv0 = c0.constant_term().inverse()?;
        let mut out = Self::zero(self.cap);
        out.set(0, Element::scalar(inv0.clone()));
        for n in 1..=self.cap {
            let mut acc = Element::<A>::zero();
            for k in 1..=n {
                let fk = self.coeff(k);
                if fk.is_zero() {
                    continue;
                }
                acc = &acc + &(&fk * &out.coeff(n - k));
            }
            out.set(n, acc.scale(&-inv0.clone()));
        }
        Ok(out)
    }

    /// `Σ_k c_k · inner^k`, with `c_k` multiplying on the left of the powers.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.require_power_series("composition")?;
        inner.require_power_series("composition")?;
        if !inner.coeff(0).is_zero() {
            return Err(Error::domain("inner series has a nonzero constant term"));
        }
        let cap = self.cap.min(inner.cap);
        let mut out = Self::zero(cap);
        let mut power = Self::one(cap);
        for k in 0..=cap {
            let ck = self.coeff(k);
            if !ck.is_zero() {
                out = out.add(&power.left_mul(&ck));
            }
            power = power.mul(inner);
            if power.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    /// Compositional inverse of `T + (higher order)` over a commutative algebra,
    /// built one degree at a time.
    pub fn revert(&self) -> Result<Self> {
        if !A::COMMUTATIVE {
            return Err(Error::domain("reversion requires a commutative coefficient algebra"));
        }
        self.require_power_series("reversion")?;
        if !self.coeff(0).is_zero() {
            return Err(Error::domain("series to revert has a nonzero constant term"));
        }
        if self.coeff(1) != Element::one() {
            return Err(Error::domain("leading coefficient must be exactly 1"));
        }
        let mut g = Self::variable(self.cap);
        for n in 2..=self.cap {
            let err = self.compose(&g)?.coeff(n);
            let next = &g.coeff(n) - &err;
            g.set(n, next);
        }
        Ok(g)
    }

    /// The coefficient of `T^{-1}`.
    pub fn residue(&self) -> Element<A> {
        self.coeff(-1)
    }

    pub fn exp(&self, ring: ScalarRing) -> Result<Self> {
        if ring == ScalarRing::Integers {
            return Err(Error::domain("exp needs rational scalars"));
        }
        self.require_power_series("exp")?;
        if !self.coeff(0).is_zero() {
            return Err(Error::domain("exp needs a zero constant term"));
        }
        let mut out = Self::one(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            let f = Scalar::factorial(k as u32).inverse()?;
            out = out.add(&power.scale(&f));
        }
        Ok(out)
    }

    pub fn log(&self, ring: ScalarRing) -> Result<Self> {
        if ring == ScalarRing::Integers {
            return Err(Error::domain("log needs rational scalars"));
        }
        self.require_power_series("log")?;
        if self.coeff(0) != Element::one() {
            return Err(Error::domain("log needs constant term 1"));
        }
        let g = self.sub(&Self::one(self.cap));
        let mut out = Self::zero(self.cap);
        let mut power = Self::one(self.cap);
        for k in 1..=self.cap {
            power = power.mul(&g);
            if power.is_zero() {
                break;
            }
            let f = &Scalar::sign(k as usize + 1) * &Scalar::ratio(1, k);
            out = out.add(&power.scale(&f));
        }
        Ok(out)
    }

    /// The substitution `T ↦ -T`.
    pub fn negate_variable(&self) -> Self {
        let mut out = Self::zero(self.cap);
        for (k, c) in self.iter() {
            out.set(k, c.scale(&Scalar::sign(k.unsigned_abs() as usize)));
        }
        out
    }

    /// Applies a linear map to every coefficient, possibly changing algebras.
    pub fn map_coeffs<B: Algebra>(&self, mut f: impl FnMut(&Element<A>) -> Element<B>) -> Series<B> {
        let mut out = Series::zero(self.cap);
        for (k, c) in self.iter() {
            out.set(k, f(c));
        }
        out
    }

    /// Whether each coefficient of `T^k` is homogeneous of weight `expected(k)`.
    pub fn is_homogeneous_by(&self, expected: impl Fn(i64) -> u32) -> bool {
        self.iter().all(|(k, c)| c.homogeneous_weight() == Some(expected(k)))
    }
}

impl<A: Algebra> fmt::Display for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_series(f, self.iter().map(|(k, c)| (vec![k], c)), &["T"])
    }
}

impl<A: Algebra> fmt::Debug for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (cap {})", self.cap)
    }
}

fn write_series<'a, A: Algebra>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<i64>, &'a Element<A>)>,
    names: &[&str],
) -> fmt::Result {
    let mut first = true;
    for (exps, c) in terms {
        let mono: Vec<String> = exps
            .iter()
            .zip(names)
            .filter(|(e, _)| **e != 0)
            .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
            .collect();
        let mono = mono.join("*");
        let (negative, body) = if c.len() == 1 {
            let (key, coeff) = c.iter().next().unwrap();
            let single = Element::<A>::term(key.clone(), coeff.abs());
            (coeff.is_negative(), single.to_string())
        } else {
            (false, format!("({c})"))
        };
        let text = match (body.as_str(), mono.is_empty()) {
            (b, true) => b.to_string(),
            ("1", false) => mono,
            (b, false) => format!("{b}*{mono}"),
        };
        match (first, negative) {
            (true, true) => write!(f, "-{text}")?,
            (true, false) => write!(f, "{text}")?,
            (false, true) => write!(f, " - {text}")?,
            (false, false) => write!(f, " + {text}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------

/// A power series in `nvars` central variables, truncated at total degree `cap`.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries<A: Algebra> {
    nvars: usize,
    coeffs: BTreeMap<Vec<u32>, Element<A>>,
    cap: u32,
}

impl<A: Algebra> MultiSeries<A> {
    pub fn zero(nvars: usize, cap: u32) -> Self {
        MultiSeries {
            nvars,
            coeffs: BTreeMap::new(),
            cap,
        }
    }

    pub fn one(nvars: usize, cap: u32) -> Self {
        let mut s = Self::zero(nvars, cap);
        s.set(vec![0; nvars], Element::one());
        s
    }

    /// The `i`-th variable (0-based).
    pub fn variable(nvars: usize, i: usize, cap: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut s = Self::zero(nvars, cap);
        s.set(e, Element::one());
        s
    }

    /// Embeds a univariate power series as a series in variable `i`.
    pub fn from_univariate(series: &Series<A>, nvars: usize, i: usize) -> Result<Self> {
        if series.valuation().is_some_and(|v| v < 0) {
            return Err(Error::domain("Laurent terms cannot be embedded"));
        }
        let cap = series.cap().max(0) as u32;
        let mut out = Self::zero(nvars, cap);
        for (k, c) in series.iter() {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            out.set(e, c.clone());
        }
        Ok(out)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn set(&mut self, exps: Vec<u32>, c: Element<A>) {
        assert_eq!(exps.len(), self.nvars, "exponent arity mismatch");
        if exps.iter().sum::<u32>() > self.cap || c.is_zero() {
            self.coeffs.remove(&exps);
        } else {
            self.coeffs.insert(exps, c);
        }
    }

    pub fn coeff(&self, exps: &[u32]) -> Element<A> {
        self.coeffs.get(exps).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &Element<A>)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, cap: u32) -> Self {
        let mut out = Self::zero(self.nvars, cap.min(self.cap));
        for (e, c) in self.iter() {
            out.set(e.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.truncate(other.cap);
        for (e, c) in other.iter() {
            let sum = &out.coeff(e) + c;
            out.set(e.clone(), sum);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (e, c) in self.iter() {
            out.set(e.clone(), c.scale(s));
        }
        out
    }

    pub fn left_mul(&self, c: &Element<A>) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (e, x) in self.iter() {
            out.set(e.clone(), c * x);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let cap = self.cap.min(other.cap);
        let mut acc: BTreeMap<Vec<u32>, Lin<A::Key>> = BTreeMap::new();
        for (ea, a) in self.iter() {
            let da: u32 = ea.iter().sum();
            for (eb, b) in other.iter() {
                let db: u32 = eb.iter().sum();
                if da + db > cap {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += &multiply::<A>(a.lin(), b.lin());
            }
        }
        let mut out = Self::zero(self.nvars, cap);
        for (e, l) in acc {
            out.set(e, Element::from_lin(l));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars, self.cap);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    fn constant_is_zero(&self) -> bool {
        self.coeff(&vec![0; self.nvars]).is_zero()
    }

    /// `Σ_k c_k · inner^k` for a univariate outer series.
    pub fn compose_univariate(outer: &Series<A>, inner: &Self) -> Result<Self> {
        if outer.valuation().is_some_and(|v| v < 0) {
            return Err(Error::domain("composition needs a power series"));
        }
        if !inner.constant_is_zero() {
            return Err(Error::domain("inner series has a nonzero constant term"));
        }
        let cap = inner.cap.min(outer.cap().max(0) as u32);
        let mut out = Self::zero(inner.nvars, cap);
        let mut power = Self::one(inner.nvars, cap);
        for k in 0..=cap as i64 {
            let ck = outer.coeff(k);
            if !ck.is_zero() {
                out = out.add(&power.left_mul(&ck));
            }
            power = power.mul(inner);
        }
        Ok(out)
    }

    /// Substitutes `args[i]` for the `i`-th variable. Each monomial becomes
    /// `c · args[0]^{e_0} · args[1]^{e_1} ···` with `c` on the left.
    pub fn substitute(&self, args: &[Self]) -> Result<Self> {
        if args.len() != self.nvars {
            return Err(Error::type_mismatch("argument count does not match variable count"));
        }
        let nv = args.first().map_or(0, |a| a.nvars);
        if args.iter().any(|a| a.nvars != nv || !a.constant_is_zero()) {
            return Err(Error::domain(
                "substituted series need a common arity and zero constant terms",
            ));
        }
        let cap = args.iter().map(|a| a.cap).fold(self.cap, u32::min);
        let mut out = Self::zero(nv, cap);
        for (e, c) in self.iter() {
            let mut term = Self::one(nv, cap).left_mul(c);
            for (arg, &k) in args.iter().zip(e) {
                term = term.mul(&arg.pow(k));
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Sets variable `i` to zero.
    pub fn drop_variable(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.cap);
        for (e, c) in self.iter() {
            if e[i] == 0 {
                out.set(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn map_coeffs<B: Algebra>(&self, mut f: impl FnMut(&Element<A>) -> Element<B>) -> MultiSeries<B> {
        let mut out = MultiSeries::zero(self.nvars, self.cap);
        for (e, c) in self.iter() {
            out.set(e.clone(), f(c));
        }
        out
    }
}

/// Variable names used for printing multivariate series.
pub const MULTI_VARIABLE_NAMES: [&str; 3] = ["X", "Y", "W"];

impl<A: Algebra> fmt::Display for MultiSeries<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&Vec<u32>, &Element<A>)> = self.iter().collect();
        terms.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), std::cmp::Reverse((*e).clone())));
        write_series(
            f,
            terms
                .into_iter()
                .map(|(e, c)| (e.iter().map(|&x| x as i64).collect(), c)),
            &MULTI_VARIABLE_NAMES,
        )
    }
}

impl<A: Algebra> fmt::Debug for MultiSeries<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (total degree cap {})", self.cap)
    }
}
