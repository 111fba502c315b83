//! JSON documents for elements, tensors and series.
//!
//! Documents are built from structs so that field order is fixed, and terms
//! follow the canonical key order, which makes the output byte-stable.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::index::{Composition, Partition};
use crate::lin::{Lin, Tensor};
use crate::scalar::Scalar;
use crate::series::{MultiSeries, Series, MULTI_VARIABLE_NAMES};
use crate::sym::{SymBasis, SymElement};
use crate::topology::BetaKey;

/// Basis keys with a JSON index representation.
pub trait JsonKey: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

fn parts_from_json(value: &Value) -> Result<Vec<u32>> {
    serde_json::from_value(value.clone()).map_err(|e| Error::domain(format!("bad index {value}: {e}")))
}

impl JsonKey for Composition {
    fn to_json(&self) -> Value {
        Value::from(self.parts().to_vec())
    }

    fn from_json(value: &Value) -> Result<Self> {
        Composition::new(parts_from_json(value)?)
    }
}

impl JsonKey for Partition {
    fn to_json(&self) -> Value {
        Value::from(self.parts().to_vec())
    }

    fn from_json(value: &Value) -> Result<Self> {
        Partition::new(parts_from_json(value)?)
    }
}

impl JsonKey for BetaKey {
    fn to_json(&self) -> Value {
        serde_json::json!({ "beta": self.beta, "b": self.b.parts() })
    }

    fn from_json(value: &Value) -> Result<Self> {
        let beta = value
            .get("beta")
            .and_then(Value::as_u64)
            .and_then(|b| u32::try_from(b).ok())
            .ok_or_else(|| Error::domain(format!("bad beta index {value}")))?;
        let b = Partition::from_json(value.get("b").unwrap_or(&Value::Null))?;
        Ok(BetaKey { beta, b })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub index: Value,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub algebra: String,
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    pub terms: Vec<TermDoc>,
}

/// Algebra, basis and structure of one tensor factor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub algebra: String,
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
}

impl FactorDoc {
    pub fn of<A: Algebra>() -> Self {
        FactorDoc {
            algebra: A::TAG.to_string(),
            basis: A::BASIS.to_string(),
            structure: A::STRUCTURE.map(str::to_string),
        }
    }

    pub fn sym(basis: SymBasis) -> Self {
        FactorDoc {
            algebra: "sym".to_string(),
            basis: basis.letter().to_string(),
            structure: None,
        }
    }
}

/// A two-fold term prints as `left`/`right`, longer ones as `factors`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TensorTermDoc {
    Pair { left: Value, right: Value, coeff: String },
    Many { factors: Vec<Value>, coeff: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TensorDoc {
    pub tensor: Vec<FactorDoc>,
    pub terms: Vec<TensorTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesTermDoc {
    pub exponent: Vec<i64>,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub algebra: String,
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structure: Option<String>,
    pub cap: i64,
    pub variables: Vec<String>,
    pub coefficients: Vec<SeriesTermDoc>,
}

fn term_docs<K: JsonKey + Ord + Clone>(lin: &Lin<K>) -> Vec<TermDoc> {
    lin.iter()
        .map(|(k, c)| TermDoc {
            index: k.to_json(),
            coeff: c.to_string(),
        })
        .collect()
}

fn terms_from_docs<K: JsonKey + Ord + Clone>(terms: &[TermDoc]) -> Result<Lin<K>> {
    let mut out = Lin::zero();
    for t in terms {
        out.add_term(K::from_json(&t.index)?, t.coeff.parse::<Scalar>()?);
    }
    Ok(out)
}

pub fn element_doc<A: Algebra>(x: &Element<A>) -> ElementDoc
where
    A::Key: JsonKey,
{
    let f = FactorDoc::of::<A>();
    ElementDoc {
        algebra: f.algebra,
        basis: f.basis,
        structure: f.structure,
        terms: term_docs(x.lin()),
    }
}

pub fn sym_doc(x: &SymElement) -> ElementDoc {
    ElementDoc {
        algebra: "sym".to_string(),
        basis: x.basis().letter().to_string(),
        structure: None,
        terms: term_docs(x.terms()),
    }
}

fn check_header(doc: &ElementDoc, expected: &FactorDoc) -> Result<()> {
    let found = (&doc.algebra, &doc.basis, &doc.structure);
    if found != (&expected.algebra, &expected.basis, &expected.structure) {
        return Err(Error::type_mismatch(format!(
            "document describes {}/{} ({:?}), expected {}/{} ({:?})",
            doc.algebra, doc.basis, doc.structure, expected.algebra, expected.basis, expected.structure
        )));
    }
    Ok(())
}

pub fn element_from_doc<A: Algebra>(doc: &ElementDoc) -> Result<Element<A>>
where
    A::Key: JsonKey,
{
    check_header(doc, &FactorDoc::of::<A>())?;
    Ok(Element::from_lin(terms_from_docs(&doc.terms)?))
}

pub fn sym_from_doc(doc: &ElementDoc) -> Result<SymElement> {
    let basis: SymBasis = doc.basis.parse()?;
    check_header(doc, &FactorDoc::sym(basis))?;
    Ok(SymElement::new(basis, terms_from_docs(&doc.terms)?))
}

/// A tensor whose factors are described by `factors`, in order.
pub fn tensor_doc<K: JsonKey + Ord + Clone>(factors: Vec<FactorDoc>, x: &Tensor<K>) -> TensorDoc {
    let terms = x
        .iter()
        .map(|(keys, c)| {
            let coeff = c.to_string();
            match keys.as_slice() {
                [l, r] => TensorTermDoc::Pair {
                    left: l.to_json(),
                    right: r.to_json(),
                    coeff,
                },
                _ => TensorTermDoc::Many {
                    factors: keys.iter().map(JsonKey::to_json).collect(),
                    coeff,
                },
            }
        })
        .collect();
    TensorDoc { tensor: factors, terms }
}

pub fn tensor_from_doc<K: JsonKey + Ord + Clone>(doc: &TensorDoc) -> Result<Tensor<K>> {
    let mut out = Lin::zero();
    for t in &doc.terms {
        let (keys, coeff) = match t {
            TensorTermDoc::Pair { left, right, coeff } => (vec![K::from_json(left)?, K::from_json(right)?], coeff),
            TensorTermDoc::Many { factors, coeff } => {
                (factors.iter().map(K::from_json).collect::<Result<Vec<K>>>()?, coeff)
            }
        };
        if keys.len() != doc.tensor.len() {
            return Err(Error::domain("tensor term arity does not match the factor list"));
        }
        out.add_term(keys, coeff.parse::<Scalar>()?);
    }
    Ok(out)
}

pub fn series_doc<A: Algebra>(f: &Series<A>) -> SeriesDoc
where
    A::Key: JsonKey,
{
    let h = FactorDoc::of::<A>();
    SeriesDoc {
        algebra: h.algebra,
        basis: h.basis,
        structure: h.structure,
        cap: f.cap(),
        variables: vec!["T".to_string()],
        coefficients: f
            .iter()
            .map(|(k, c)| SeriesTermDoc {
                exponent: vec![k],
                terms: term_docs(c.lin()),
            })
            .collect(),
    }
}

pub fn multi_series_doc<A: Algebra>(f: &MultiSeries<A>) -> SeriesDoc
where
    A::Key: JsonKey,
{
    let h = FactorDoc::of::<A>();
    let mut coefficients: Vec<SeriesTermDoc> = f
        .iter()
        .map(|(e, c)| SeriesTermDoc {
            exponent: e.iter().map(|&x| i64::from(x)).collect(),
            terms: term_docs(c.lin()),
        })
        .collect();
    coefficients.sort_by_key(|t| (t.exponent.iter().sum::<i64>(), std::cmp::Reverse(t.exponent.clone())));
    SeriesDoc {
        algebra: h.algebra,
        basis: h.basis,
        structure: h.structure,
        cap: i64::from(f.cap()),
        variables: MULTI_VARIABLE_NAMES[..f.nvars()]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        coefficients,
    }
}

pub fn series_from_doc<A: Algebra>(doc: &SeriesDoc) -> Result<Series<A>>
where
    A::Key: JsonKey,
{
    let h = FactorDoc::of::<A>();
    check_header(
        &ElementDoc {
            algebra: doc.algebra.clone(),
            basis: doc.basis.clone(),
            structure: doc.structure.clone(),
            terms: Vec::new(),
        },
        &h,
    )?;
    let mut out = Series::zero(doc.cap);
    for t in &doc.coefficients {
        let [k] = t.exponent.as_slice() else {
            return Err(Error::domain("univariate series terms carry exactly one exponent"));
        };
        out.set(*k, Element::from_lin(terms_from_docs(&t.terms)?));
    }
    Ok(out)
}

/// Compact serialization.
pub fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents contain only strings, numbers and arrays")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{comp, part};
    use crate::nsym::NSym;
    use crate::parse::{parse_series, parse_sym};
    use crate::renorm::{Bfk, FaaDiBruno};

    #[test]
    fn element_documents() {
        let x = parse_sym("e[1]^2 - e[2]").unwrap();
        assert_eq!(
            to_string(&sym_doc(&x)),
            r#"{"algebra":"sym","basis":"e","terms":[{"index":[1,1],"coeff":"1"},{"index":[2],"coeff":"-1"}]}"#
        );
        assert_eq!(sym_from_doc(&sym_doc(&x)).unwrap(), x);
        let zero = Element::<NSym>::zero();
        assert_eq!(
            to_string(&element_doc(&zero)),
            r#"{"algebra":"nsym","basis":"Z","structure":"binomial","terms":[]}"#
        );
    }

    #[test]
    fn tensor_documents() {
        let x: Tensor<Composition> = Lin::term(vec![comp(&[1]), comp(&[1])], Scalar::from_int(2));
        let doc = tensor_doc(vec![FactorDoc::of::<Bfk>(), FactorDoc::of::<Bfk>()], &x);
        assert!(to_string(&doc).ends_with(r#""terms":[{"left":[1],"right":[1],"coeff":"2"}]}"#));
        assert_eq!(tensor_from_doc::<Composition>(&doc).unwrap(), x);
        let y: Tensor<Partition> = Lin::basis(vec![part(&[1]), part(&[]), part(&[2])]);
        let doc = tensor_doc(vec![FactorDoc::of::<FaaDiBruno>(); 3], &y);
        assert!(to_string(&doc).contains(r#"{"factors":[[1],[],[2]],"coeff":"1"}"#));
        assert_eq!(tensor_from_doc::<Partition>(&doc).unwrap(), y);
    }

    #[test]
    fn series_documents() {
        let f: Series<FaaDiBruno> = parse_series("T + 1/2*t[1]*T^2", 4).unwrap();
        let doc = series_doc(&f);
        assert_eq!(doc.cap, 4);
        assert_eq!(series_from_doc::<FaaDiBruno>(&doc).unwrap(), f);
        assert!(element_from_doc::<Bfk>(&element_doc(&Element::<NSym>::one())).is_err());
    }
}
