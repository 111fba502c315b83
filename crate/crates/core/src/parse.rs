//! Expression syntax shared by the command line and the round-trip tests.
//!
//! ```text
//! expr   := ["-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" ["-"] UINT)?
//! atom   := INT | RATIONAL | GEN "[" UINT ("," UINT)* "]" | "T" | "(" expr ")"
//! GEN    := e | h | p | m | M | Z | t | b
//! ```
//!
//! A leading minus is accepted so that printed elements parse back. The
//! series variable `T` and negative exponents are only meaningful when
//! evaluating into a [`Series`].

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::index::{Composition, Partition};
use crate::nsym::{NSym, QSym};
use crate::renorm::{BPoly, Bfk, FaaDiBruno};
use crate::scalar::{Scalar, ScalarRing};
use crate::series::Series;
use crate::sym::{Sym, SymBasis, SymElement};

/// Longest accepted input, in bytes.
pub const MAX_INPUT_BYTES: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Scalar),
    Generator {
        letter: char,
        index: Vec<u32>,
        column: usize,
    },
    Variable {
        column: usize,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow {
        base: Box<Expr>,
        exponent: i64,
        column: usize,
    },
}

impl Expr {
    /// Generator letters in order of first appearance.
    pub fn letters(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let Expr::Generator { letter, .. } = e {
                if !out.contains(letter) {
                    out.push(*letter);
                }
            }
        });
        out
    }

    pub fn uses_variable(&self) -> bool {
        let mut found = false;
        self.visit(&mut |e| found |= matches!(e, Expr::Variable { .. }));
        found
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Neg(a) | Expr::Pow { base: a, .. } => a.visit(f),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }
}

/// The algebras an expression can be evaluated in, named by their JSON tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraTag {
    Sym,
    NSym,
    QSym,
    Fdb,
    BPoly,
}

impl AlgebraTag {
    pub const ALL: [AlgebraTag; 5] = [
        AlgebraTag::Sym,
        AlgebraTag::NSym,
        AlgebraTag::QSym,
        AlgebraTag::Fdb,
        AlgebraTag::BPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraTag::Sym => "sym",
            AlgebraTag::NSym => "nsym",
            AlgebraTag::QSym => "qsym",
            AlgebraTag::Fdb => "fdb",
            AlgebraTag::BPoly => "bpoly",
        }
    }

    pub fn letters(self) -> &'static [char] {
        match self {
            AlgebraTag::Sym => &['e', 'h', 'p', 'm'],
            AlgebraTag::NSym => &['Z'],
            AlgebraTag::QSym => &['M'],
            AlgebraTag::Fdb => &['t'],
            AlgebraTag::BPoly => &['b'],
        }
    }

    pub fn of_letter(letter: char) -> Option<AlgebraTag> {
        Self::ALL.into_iter().find(|t| t.letters().contains(&letter))
    }

    /// The algebra named by the generators of `expr`; `None` for constants.
    pub fn infer(expr: &Expr) -> Result<Option<AlgebraTag>> {
        let mut found: Option<AlgebraTag> = None;
        for letter in expr.letters() {
            let tag = AlgebraTag::of_letter(letter).expect("parser only admits known letters");
            match found {
                Some(f) if f != tag => {
                    return Err(Error::type_mismatch(format!(
                        "expression mixes generators of {} and {}",
                        f.name(),
                        tag.name()
                    )))
                }
                _ => found = Some(tag),
            }
        }
        Ok(found)
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown algebra {s:?}")))
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &str) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn unexpected(&mut self, what: &str) -> Error {
        match self.peek() {
            Some(c) => Error::syntax(self.pos, format!("expected {what}, found {c:?}")),
            None => Error::syntax(self.pos, format!("expected {what}, found end of input")),
        }
    }

    fn digits(&mut self) -> Option<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, self.chars[start..self.pos].iter().collect()))
    }

    fn uint(&mut self, what: &str) -> Result<(usize, u32)> {
        let Some((col, text)) = self.digits() else {
            return Err(self.unexpected(what));
        };
        let n = text
            .parse::<u32>()
            .map_err(|_| Error::syntax(col, format!("integer {text} is too large here")))?;
        Ok((col, n))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = if self.eat('-') {
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let column = self.pos;
        let negative = self.eat('-');
        let (_, n) = self.uint("a nonnegative integer exponent")?;
        let exponent = if negative { -i64::from(n) } else { i64::from(n) };
        Ok(Expr::Pow {
            base: Box::new(base),
            exponent,
            column,
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')', "')'")?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.number(),
            Some('T') => {
                let column = self.pos;
                self.pos += 1;
                Ok(Expr::Variable { column })
            }
            Some(c) if AlgebraTag::of_letter(c).is_some() => self.generator(),
            Some(c) if c.is_alphabetic() => Err(Error::syntax(self.pos, format!("unknown generator letter {c:?}"))),
            _ => Err(self.unexpected("a number, generator or '('")),
        }
    }

    fn number(&mut self) -> Result<Expr> {
        let (col, num) = self.digits().expect("caller saw a digit");
        let mut text = num;
        if self.chars.get(self.pos) == Some(&'/') {
            self.pos += 1;
            let den: String = {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                self.chars[start..self.pos].iter().collect()
            };
            if den.is_empty() {
                return Err(self.unexpected("a denominator"));
            }
            text = format!("{text}/{den}");
        }
        let value = text.parse::<Scalar>().map_err(|e| Error::syntax(col, e.to_string()))?;
        Ok(Expr::Number(value))
    }

    fn generator(&mut self) -> Result<Expr> {
        let column = self.pos;
        let letter = self.chars[self.pos];
        self.pos += 1;
        self.expect('[', "'['")?;
        let mut index = Vec::new();
        loop {
            let (col, n) = self.uint("a positive index part")?;
            if n == 0 {
                return Err(Error::syntax(col, "index parts must be positive"));
            }
            index.push(n);
            if self.eat(']') {
                break;
            }
            self.expect(',', "',' or ']'")?;
        }
        Ok(Expr::Generator { letter, index, column })
    }
}

/// Parses `text` into an expression tree. Columns in errors are 0-based
/// character offsets.
pub fn parse(text: &str) -> Result<Expr> {
    if text.len() > MAX_INPUT_BYTES {
        return Err(Error::domain(format!(
            "input of {} bytes exceeds the 1 MiB limit",
            text.len()
        )));
    }
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let expr = p.expr()?;
    if p.peek().is_some() {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(expr)
}

/// Parses `text` and checks every generator letter against `tag`.
pub fn parse_expression(text: &str, tag: AlgebraTag) -> Result<Expr> {
    let expr = parse(text)?;
    let mut bad = None;
    expr.visit(&mut |e| {
        if let Expr::Generator { letter, column, .. } = e {
            if bad.is_none() && !tag.letters().contains(letter) {
                bad = Some(Error::syntax(
                    *column,
                    format!("generator {letter:?} does not belong to {tag}"),
                ));
            }
        }
    });
    bad.map_or(Ok(expr), Err)
}

// ---------------------------------------------------------------------------
// Evaluation

/// The arithmetic needed to fold an expression tree.
trait Ring: Sized {
    fn add(self, other: Self) -> Result<Self>;
    fn neg(self) -> Self;
    fn mul(self, other: Self) -> Result<Self>;
    fn pow(self, n: u32) -> Result<Self>;

    fn inverse(self) -> Result<Self> {
        Err(Error::domain("negative exponents need a series context"))
    }
}

enum Leaf<'a> {
    Number(&'a Scalar),
    Generator {
        letter: char,
        index: &'a [u32],
        column: usize,
    },
    Variable {
        column: usize,
    },
}

fn fold<R: Ring>(expr: &Expr, leaf: &mut impl FnMut(Leaf<'_>) -> Result<R>) -> Result<R> {
    match expr {
        Expr::Number(c) => leaf(Leaf::Number(c)),
        Expr::Generator { letter, index, column } => leaf(Leaf::Generator {
            letter: *letter,
            index,
            column: *column,
        }),
        Expr::Variable { column } => leaf(Leaf::Variable { column: *column }),
        Expr::Neg(a) => Ok(fold(a, leaf)?.neg()),
        Expr::Add(a, b) => fold(a, leaf)?.add(fold(b, leaf)?),
        Expr::Sub(a, b) => fold(a, leaf)?.add(fold(b, leaf)?.neg()),
        Expr::Mul(a, b) => fold(a, leaf)?.mul(fold(b, leaf)?),
        Expr::Pow { base, exponent, column } => {
            let x = fold(base, leaf)?;
            let n = u32::try_from(exponent.unsigned_abs()).map_err(|_| Error::syntax(*column, "exponent too large"))?;
            if *exponent < 0 {
                x.inverse()?.pow(n)
            } else {
                x.pow(n)
            }
        }
    }
}

/// Algebras whose elements can be written with generator letters.
pub trait Parseable: Algebra {
    const LETTERS: &'static [char];

    fn generator(letter: char, index: &[u32]) -> Result<Element<Self>>;
}

fn partition(index: &[u32]) -> Partition {
    let mut parts = index.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("parser guarantees positive parts")
}

fn composition(index: &[u32]) -> Composition {
    Composition::new(index.to_vec()).expect("parser guarantees positive parts")
}

fn sym_basis(letter: char) -> SymBasis {
    match letter {
        'e' => SymBasis::E,
        'h' => SymBasis::H,
        'p' => SymBasis::P,
        _ => SymBasis::M,
    }
}

impl Parseable for Sym {
    const LETTERS: &'static [char] = &['e', 'h', 'p', 'm'];

    /// Any of the four bases, converted into the e-basis.
    fn generator(letter: char, index: &[u32]) -> Result<Element<Sym>> {
        Ok(SymElement::basis_element(sym_basis(letter), partition(index)).to_e())
    }
}

macro_rules! parseable {
    ($ty:ty, $letter:literal, $key:ident) => {
        impl Parseable for $ty {
            const LETTERS: &'static [char] = &[$letter];

            fn generator(_: char, index: &[u32]) -> Result<Element<Self>> {
                Ok(Element::basis($key(index)))
            }
        }
    };
}

parseable!(NSym, 'Z', composition);
parseable!(Bfk, 'Z', composition);
parseable!(QSym, 'M', composition);
parseable!(FaaDiBruno, 't', partition);
parseable!(BPoly, 'b', partition);

fn letter_error<A: Parseable>(letter: char, column: usize) -> Error {
    Error::syntax(column, format!("generator {letter:?} does not belong to {}", A::TAG))
}

fn variable_error(column: usize) -> Error {
    Error::syntax(column, "the series variable T is only allowed in series expressions")
}

impl<A: Algebra> Ring for Element<A> {
    fn add(self, other: Self) -> Result<Self> {
        Ok(&self + &other)
    }

    fn neg(self) -> Self {
        -self
    }

    fn mul(self, other: Self) -> Result<Self> {
        Ok(&self * &other)
    }

    fn pow(self, n: u32) -> Result<Self> {
        Ok(Element::pow(&self, n))
    }
}

/// Evaluates `expr` as an element of `A`.
pub fn eval_element<A: Parseable>(expr: &Expr) -> Result<Element<A>> {
    fold(expr, &mut |leaf| match leaf {
        Leaf::Number(c) => Ok(Element::scalar(c.clone())),
        Leaf::Generator { letter, index, column } => {
            if !A::LETTERS.contains(&letter) {
                return Err(letter_error::<A>(letter, column));
            }
            A::generator(letter, index)
        }
        Leaf::Variable { column } => Err(variable_error(column)),
    })
}

pub fn parse_element<A: Parseable>(text: &str) -> Result<Element<A>> {
    eval_element(&parse(text)?)
}

impl<A: Algebra> Ring for Series<A> {
    fn add(self, other: Self) -> Result<Self> {
        Ok(Series::add(&self, &other))
    }

    fn neg(self) -> Self {
        self.scale(&-Scalar::one())
    }

    fn mul(self, other: Self) -> Result<Self> {
        Ok(Series::mul(&self, &other))
    }

    fn pow(self, n: u32) -> Result<Self> {
        Ok(Series::pow(&self, n))
    }

    fn inverse(self) -> Result<Self> {
        self.invert()
    }
}

/// Evaluates `expr` as a series in `T` with coefficients in `A`, truncated
/// above `T^cap`.
pub fn eval_series<A: Parseable>(expr: &Expr, cap: i64) -> Result<Series<A>> {
    fold(expr, &mut |leaf| match leaf {
        Leaf::Number(c) => Ok(Series::one(cap).scale(c)),
        Leaf::Generator { letter, index, column } => {
            if !A::LETTERS.contains(&letter) {
                return Err(letter_error::<A>(letter, column));
            }
            Ok(Series::monomial(0, A::generator(letter, index)?, cap))
        }
        Leaf::Variable { .. } => Ok(Series::variable(cap)),
    })
}

pub fn parse_series<A: Parseable>(text: &str, cap: i64) -> Result<Series<A>> {
    eval_series(&parse(text)?, cap)
}

/// A symmetric function that remembers its basis, or a bare constant that
/// adopts the basis of whatever it meets.
enum SymValue {
    Constant(Scalar),
    Element(SymElement),
}

impl SymValue {
    fn into_basis(self, basis: SymBasis) -> Result<SymElement> {
        match self {
            SymValue::Constant(c) => Ok(SymElement::one(basis).scale(&c)),
            SymValue::Element(x) if x.basis() == basis => Ok(x),
            SymValue::Element(x) => x.convert(basis, ScalarRing::Rationals),
        }
    }

    fn combine(
        self,
        other: SymValue,
        constant: impl Fn(Scalar, Scalar) -> Scalar,
        element: impl Fn(&SymElement, &SymElement) -> SymElement,
    ) -> Result<SymValue> {
        let basis = match (&self, &other) {
            (SymValue::Constant(a), SymValue::Constant(b)) => {
                return Ok(SymValue::Constant(constant(a.clone(), b.clone())))
            }
            (SymValue::Element(x), _) | (_, SymValue::Element(x)) => x.basis(),
        };
        let (x, y) = (self.into_basis(basis)?, other.into_basis(basis)?);
        Ok(SymValue::Element(element(&x, &y)))
    }
}

impl Ring for SymValue {
    fn add(self, other: Self) -> Result<Self> {
        self.combine(other, |a, b| a + b, SymElement::add)
    }

    fn neg(self) -> Self {
        match self {
            SymValue::Constant(c) => SymValue::Constant(-c),
            SymValue::Element(x) => SymValue::Element(x.scale(&-Scalar::one())),
        }
    }

    fn mul(self, other: Self) -> Result<Self> {
        self.combine(other, |a, b| a * b, SymElement::mul)
    }

    fn pow(self, n: u32) -> Result<Self> {
        Ok(match self {
            SymValue::Constant(c) => SymValue::Constant(c.pow(n)),
            SymValue::Element(x) => SymValue::Element(x.pow(n)),
        })
    }
}

/// Evaluates `expr` as a symmetric function. The result is expressed in the
/// basis of the first generator that appears; operands in other bases are
/// converted over the rationals. Constants land in the e-basis.
pub fn eval_sym(expr: &Expr) -> Result<SymElement> {
    let value = fold(expr, &mut |leaf| match leaf {
        Leaf::Number(c) => Ok(SymValue::Constant(c.clone())),
        Leaf::Generator { letter, index, column } => {
            if !Sym::LETTERS.contains(&letter) {
                return Err(letter_error::<Sym>(letter, column));
            }
            Ok(SymValue::Element(SymElement::basis_element(
                sym_basis(letter),
                partition(index),
            )))
        }
        Leaf::Variable { column } => Err(variable_error(column)),
    })?;
    match value {
        SymValue::Element(x) => Ok(x),
        constant => constant.into_basis(SymBasis::E),
    }
}

pub fn parse_sym(text: &str) -> Result<SymElement> {
    eval_sym(&parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::comp;

    #[test]
    fn parses_sums_products_and_powers() {
        let e = parse_expression("Z[2]*Z[1] + 3*Z[3]", AlgebraTag::NSym).unwrap();
        assert!(matches!(e, Expr::Add(..)));
        let e = parse_expression("e[2,1]^2", AlgebraTag::Sym).unwrap();
        assert!(matches!(e, Expr::Pow { exponent: 2, .. }));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        assert_eq!(
            parse("M[1,2").unwrap_err(),
            Error::syntax(5, "expected ',' or ']', found end of input")
        );
        assert!(matches!(parse("e[0]"), Err(Error::Syntax { column: 2, .. })));
        assert!(matches!(parse("q[1]"), Err(Error::Syntax { column: 0, .. })));
        assert!(matches!(parse("e[1] e[2]"), Err(Error::Syntax { column: 5, .. })));
        assert!(matches!(
            parse_expression("e[1] + Z[1]", AlgebraTag::Sym),
            Err(Error::Syntax { column: 7, .. })
        ));
    }

    #[test]
    fn evaluation_respects_order_and_basis() {
        let x: Element<NSym> = parse_element("Z[2]*Z[1] + 3*Z[3]").unwrap();
        assert_eq!(x.to_string(), "Z[2,1] + 3*Z[3]");
        let s = parse_sym("2*h[1]*h[2]").unwrap();
        assert_eq!(s.basis(), SymBasis::H);
        assert_eq!(s.to_string(), "2*h[2,1]");
        assert_eq!(parse_sym("e[1]^2 - e[2]").unwrap().to_string(), "e[1,1] - e[2]");
        assert_eq!(parse_sym("1/2").unwrap().to_string(), "1/2");
    }

    #[test]
    fn series_expressions() {
        let f: Series<FaaDiBruno> = parse_series("T + t[1]*T^2 + t[2]*T^3", 3).unwrap();
        assert_eq!(f.revert().unwrap().to_string(), "T - t[1]*T^2 + (2*t[1,1] - t[2])*T^3");
        let g: Series<NSym> = parse_series("T^-1 + Z[1]", 3).unwrap();
        assert_eq!(g.residue(), Element::one());
        assert!(eval_element::<NSym>(&parse("T").unwrap()).is_err());
    }

    #[test]
    fn printed_elements_parse_back() {
        let x: Element<Bfk> = Element::basis(comp(&[3])).antipode();
        assert_eq!(parse_element::<Bfk>(&x.to_string()).unwrap(), x);
    }
}
