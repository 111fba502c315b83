//! Elements of any of the algebras, chosen at run time from the generator
//! letters of an expression and the `--structure` flag.

use hopfcalc::algebroid::format_tensor;
use hopfcalc::json::{self, element_doc, sym_doc, tensor_doc, FactorDoc, JsonKey};
use hopfcalc::parse::{eval_element, eval_sym, parse, AlgebraTag, Expr};
use hopfcalc::{Algebra, BPoly, Bfk, Element, Error, FaaDiBruno, Hopf, NSym, QSym, Result, SymElement, Tensor};

use crate::commands::Output;
use crate::Structure;

/// An algebra together with the coalgebra structure in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Sym,
    NSym,
    Bfk,
    QSym,
    Fdb,
    BPoly,
}

impl Kind {
    pub fn resolve(tag: AlgebraTag, structure: Option<Structure>) -> Result<Kind> {
        use Structure::*;
        let kind = match (tag, structure) {
            (AlgebraTag::Sym, None | Some(Binomial)) => Kind::Sym,
            (AlgebraTag::NSym, None | Some(Binomial)) => Kind::NSym,
            (AlgebraTag::NSym, Some(Bfk)) => Kind::Bfk,
            (AlgebraTag::QSym, None) => Kind::QSym,
            (AlgebraTag::Fdb, None | Some(Fdb)) => Kind::Fdb,
            (AlgebraTag::BPoly, None | Some(Fdb)) => Kind::BPoly,
            (tag, Some(s)) => {
                return Err(Error::type_mismatch(format!(
                    "{tag} does not carry the {} structure",
                    format!("{s:?}").to_lowercase()
                )))
            }
        };
        Ok(kind)
    }
}

/// The algebra named by `--algebra`, or by the generators of `expr`.
/// Constant expressions default to the symmetric functions.
pub fn algebra_of(expr: &Expr, algebra: Option<&str>) -> Result<AlgebraTag> {
    match algebra {
        Some(name) => name.parse(),
        None => Ok(AlgebraTag::infer(expr)?.unwrap_or(AlgebraTag::Sym)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Sym(SymElement),
    NSym(Element<NSym>),
    Bfk(Element<Bfk>),
    QSym(Element<QSym>),
    Fdb(Element<FaaDiBruno>),
    BPoly(Element<BPoly>),
}

impl Value {
    pub fn parse(text: &str, algebra: Option<&str>, structure: Option<Structure>) -> Result<Value> {
        let expr = parse(text)?;
        let kind = Kind::resolve(algebra_of(&expr, algebra)?, structure)?;
        Value::eval(&expr, kind)
    }

    pub fn eval(expr: &Expr, kind: Kind) -> Result<Value> {
        Ok(match kind {
            Kind::Sym => Value::Sym(eval_sym(expr)?),
            Kind::NSym => Value::NSym(eval_element(expr)?),
            Kind::Bfk => Value::Bfk(eval_element(expr)?),
            Kind::QSym => Value::QSym(eval_element(expr)?),
            Kind::Fdb => Value::Fdb(eval_element(expr)?),
            Kind::BPoly => Value::BPoly(eval_element(expr)?),
        })
    }

    pub fn output(&self) -> Output {
        match self {
            Value::Sym(x) => Output::new(json::to_string(&sym_doc(x)), x.to_string()),
            Value::NSym(x) => element_output(x),
            Value::Bfk(x) => element_output(x),
            Value::QSym(x) => element_output(x),
            Value::Fdb(x) => element_output(x),
            Value::BPoly(x) => element_output(x),
        }
    }

    pub fn coproduct(&self) -> Output {
        match self {
            Value::Sym(x) => {
                let b = x.basis();
                tensor_output(vec![FactorDoc::sym(b); 2], &x.coproduct(), |_, k| {
                    SymElement::basis_element(b, k.clone()).to_string()
                })
            }
            Value::NSym(x) => coproduct_output(x),
            Value::Bfk(x) => coproduct_output(x),
            Value::QSym(x) => coproduct_output(x),
            Value::Fdb(x) => coproduct_output(x),
            Value::BPoly(x) => coproduct_output(x),
        }
    }

    pub fn antipode(&self) -> Value {
        match self {
            Value::Sym(x) => Value::Sym(x.antipode()),
            Value::NSym(x) => Value::NSym(x.antipode()),
            Value::Bfk(x) => Value::Bfk(x.antipode()),
            Value::QSym(x) => Value::QSym(x.antipode()),
            Value::Fdb(x) => Value::Fdb(x.antipode()),
            Value::BPoly(x) => Value::BPoly(x.antipode()),
        }
    }

    pub fn algebra(&self) -> &'static str {
        match self {
            Value::Sym(_) => "sym",
            Value::NSym(_) => NSym::TAG,
            Value::Bfk(_) => Bfk::STRUCTURE.unwrap_or(Bfk::TAG),
            Value::QSym(_) => QSym::TAG,
            Value::Fdb(_) => FaaDiBruno::TAG,
            Value::BPoly(_) => BPoly::TAG,
        }
    }
}

pub fn element_output<A: Algebra>(x: &Element<A>) -> Output
where
    A::Key: JsonKey,
{
    Output::new(json::to_string(&element_doc(x)), x.to_string())
}

fn coproduct_output<H: Hopf>(x: &Element<H>) -> Output
where
    H::Key: JsonKey,
{
    tensor_output(vec![FactorDoc::of::<H>(); 2], &x.coproduct(), |_, k| H::key_string(k))
}

pub fn tensor_output<K: JsonKey + Ord + Clone>(
    factors: Vec<FactorDoc>,
    x: &Tensor<K>,
    name: impl Fn(usize, &K) -> String,
) -> Output {
    Output::new(json::to_string(&tensor_doc(factors, x)), format_tensor(x, name))
}
