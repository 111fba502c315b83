use std::path::PathBuf;

use serde::Serialize;

use hopfcalc::algebroid::{
    cobar_differential, format_cochain, rank_report, CobarBounds, NsymBfk, NsymBfkShifted, SplitAlgebroid, SymFdb,
};
use hopfcalc::index::{compositions_of, partitions_of};
use hopfcalc::json::{self, multi_series_doc, series_doc, FactorDoc, JsonKey};
use hopfcalc::lin::{tensor1, Lin};
use hopfcalc::nsym::{abelianize_nsym, expand_qsym, include_sym_in_qsym, ns_qs_pair};
use hopfcalc::parse::{eval_element, eval_series, eval_sym, parse, AlgebraTag, Expr};
use hopfcalc::poly::Poly;
use hopfcalc::renorm::{
    bfk_abelianize, coaction_nsym_key, coaction_sym, right_unit_functional, shifted_coaction_nsym_key,
};
use hopfcalc::sym::{hall_pair, Involution};
use hopfcalc::topology::{
    beta_series, cp_char_number, cp_hurewicz, cp_infinity_coproduct, crn_invariant, cumulant_series, fgl, miscenko_log,
    quasitoric_char_number, Convention, ProjectiveProductSpace,
};
use hopfcalc::verify::Suite;
use hopfcalc::{
    Algebra, BPoly, Bfk, Composition, Element, Error, FaaDiBruno, MultiSeries, NSym, Partition, QSym, Scalar,
    ScalarRing, Series, Sym, SymBasis, SymElement,
};

use crate::value::{algebra_of, element_output, tensor_output, Kind, Value};
use crate::{Charnum, Command, Global};

/// Largest accepted `--cap`.
pub const MAX_CAP: i64 = 16;
/// Largest accepted `verify --weight`.
pub const MAX_VERIFY_WEIGHT: u32 = 12;

/// A rendered result in both output formats.
#[derive(Debug)]
pub struct Output {
    pub json: String,
    pub text: String,
    /// Set by `verify` when a check failed.
    pub failed: bool,
}

impl Output {
    pub fn new(json: String, text: String) -> Self {
        Output {
            json,
            text,
            failed: false,
        }
    }

    fn scalar(s: &Scalar) -> Self {
        Output::new(json::to_string(&s.to_string()), s.to_string())
    }
}

#[derive(Debug)]
pub enum CommandError {
    Engine(Error),
    Io(PathBuf, std::io::Error),
}

impl CommandError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CommandError::Engine(Error::Capability(_)) => 2,
            CommandError::Engine(_) => 1,
            CommandError::Io(..) => 4,
        }
    }
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Engine(e)
    }
}

type Result<T> = std::result::Result<T, CommandError>;

/// Runs `body` with `$a` bound to the algebra type of `kind`.
macro_rules! with_algebra {
    ($kind:expr, $a:ident => $body:expr) => {
        match $kind {
            Kind::Sym => {
                type $a = Sym;
                $body
            }
            Kind::NSym => {
                type $a = NSym;
                $body
            }
            Kind::Bfk => {
                type $a = Bfk;
                $body
            }
            Kind::QSym => {
                type $a = QSym;
                $body
            }
            Kind::Fdb => {
                type $a = FaaDiBruno;
                $body
            }
            Kind::BPoly => {
                type $a = BPoly;
                $body
            }
        }
    };
}

pub fn run(command: &Command, global: Global) -> Result<Output> {
    let structure = global.structure;
    match command {
        Command::Eval { expr, algebra } => {
            let e = parse(expr)?;
            let kind = Kind::resolve(algebra_of(&e, algebra.as_deref())?, structure)?;
            if e.uses_variable() {
                let cap = cap(global)?;
                with_algebra!(kind, A => Ok(series_output(&eval_series::<A>(&e, cap)?)))
            } else {
                Ok(Value::eval(&e, kind)?.output())
            }
        }
        Command::Coproduct { expr, algebra } => Ok(Value::parse(expr, algebra.as_deref(), structure)?.coproduct()),
        Command::Antipode { expr, algebra } => {
            Ok(Value::parse(expr, algebra.as_deref(), structure)?.antipode().output())
        }
        Command::Convert { expr, to, ring } => {
            let x = sym_value(expr)?;
            let to: SymBasis = to.parse()?;
            let y = x.convert(to, scalar_ring(ring)?)?;
            Ok(Value::Sym(y).output())
        }
        Command::Pair { left, right } => pair(left, right),
        Command::Expand { expr, vars } => {
            let poly = match Value::parse(expr, None, structure)? {
                Value::Sym(x) => x.expand(*vars),
                Value::QSym(x) => expand_qsym(&x, *vars),
                other => return Err(unsupported("expand", &other)),
            };
            Ok(poly_output(&poly))
        }
        Command::Involution { expr, which } => {
            let which: Involution = which.parse()?;
            Ok(Value::Sym(sym_value(expr)?.involution(which)).output())
        }
        Command::Abelianize { expr } => match Value::parse(expr, None, structure)? {
            Value::NSym(x) => Ok(Value::Sym(SymElement::from_e(&abelianize_nsym(&x))).output()),
            Value::Bfk(x) => Ok(element_output(&bfk_abelianize(&x))),
            other => Err(unsupported("abelianize", &other)),
        },
        Command::Include { expr } => Ok(element_output(&include_sym_in_qsym(&sym_value(expr)?))),
        Command::Coaction { expr, shifted } => coaction(expr, *shifted),
        Command::Compose { outer, inner } => {
            let (f, g) = (parse(outer)?, parse(inner)?);
            let kind = Kind::resolve(common_algebra(&f, &g)?, structure)?;
            let cap = cap(global)?;
            with_algebra!(kind, A => {
                let h = eval_series::<A>(&f, cap)?.compose(&eval_series::<A>(&g, cap)?)?;
                Ok(series_output(&h))
            })
        }
        Command::Revert { expr } => unary_series(expr, global, SeriesOp::Revert),
        Command::Invert { expr } => unary_series(expr, global, SeriesOp::Invert),
        Command::Exp { expr } => unary_series(expr, global, SeriesOp::Exp),
        Command::Log { expr: Some(expr) } => unary_series(expr, global, SeriesOp::Log),
        Command::Log { expr: None } => Ok(series_output(&miscenko_log(cap(global)?)?)),
        Command::Residue { expr } => {
            let (e, kind) = series_expr(expr, global)?;
            let cap = cap(global)?;
            with_algebra!(kind, A => Ok(element_output(&eval_series::<A>(&e, cap)?.residue())))
        }
        Command::Fgl { nc } => {
            let cap = cap(global)?;
            if *nc {
                Ok(multi_series_output(&cp_infinity_coproduct(cap)?))
            } else {
                Ok(multi_series_output(&fgl(cap)?))
            }
        }
        Command::Beta => Ok(series_output(&beta_series(cap(global)?)?)),
        Command::Hurewicz { n } => Ok(element_output(&cp_hurewicz(*n))),
        Command::Charnum { which } => charnum(which),
        Command::Crn { k } => Ok(element_output(&crn_invariant(*k)?)),
        Command::Cumulant => Ok(series_output(&cumulant_series(cap(global)?)?)),
        Command::CobarRank {
            algebroid,
            weight,
            degree,
        } => {
            let bounds = CobarBounds::default();
            let report = match algebroid.as_str() {
                "S.B" => rank_report::<SymFdb>(*weight, *degree, bounds)?,
                "N.N" => rank_report::<NsymBfk>(*weight, *degree, bounds)?,
                "N.N-shifted" => rank_report::<NsymBfkShifted>(*weight, *degree, bounds)?,
                other => return Err(unknown_algebroid(other)),
            };
            Ok(Output::new(json::to_string(&report), report.rank.to_string()))
        }
        Command::CobarDifferential { expr, algebroid, twice } => {
            let e = parse(expr)?;
            let name = match algebroid {
                Some(name) => name.clone(),
                None => match AlgebraTag::infer(&e)?.unwrap_or(AlgebraTag::Sym) {
                    AlgebraTag::Sym => "S.B".to_string(),
                    AlgebraTag::NSym => "N.N".to_string(),
                    other => {
                        return Err(Error::type_mismatch(format!("{other} is not the base of an algebroid")).into())
                    }
                },
            };
            match name.as_str() {
                "S.B" => differential::<SymFdb>(eval_sym(&e)?.to_e().into_lin(), *twice),
                "N.N" => differential::<NsymBfk>(eval_element::<NSym>(&e)?.into_lin(), *twice),
                "N.N-shifted" => differential::<NsymBfkShifted>(eval_element::<NSym>(&e)?.into_lin(), *twice),
                other => Err(unknown_algebroid(other)),
            }
        }
        Command::RightUnit { k, index } => {
            let i = Composition::new(parts(index)?)?;
            let x: Element<NSym> = right_unit_functional(*k, &i).cast();
            Ok(element_output(&x))
        }
        Command::Enumerate { kind, n } => {
            let items: Vec<Vec<u32>> = match kind.as_str() {
                "compositions" => compositions_of(*n)?.into_iter().map(Vec::from).collect(),
                "partitions" => partitions_of(*n)?.into_iter().map(Vec::from).collect(),
                other => {
                    return Err(
                        Error::domain(format!("unknown kind {other:?}; expected compositions or partitions")).into(),
                    )
                }
            };
            let text: Vec<String> = items.iter().map(|p| format!("{p:?}").replace(' ', "")).collect();
            Ok(Output::new(json::to_string(&items), text.join("\n")))
        }
        Command::Verify { suite, weight } => verify(suite, *weight),
    }
}

fn cap(global: Global) -> Result<i64> {
    match global.cap {
        c if c < 0 => Err(Error::domain(format!("cap must be nonnegative, got {c}")).into()),
        c if c > MAX_CAP => Err(Error::capability(format!("cap {c} exceeds the maximum {MAX_CAP}")).into()),
        c => Ok(c),
    }
}

fn scalar_ring(name: &str) -> Result<ScalarRing> {
    match name {
        "integers" | "Z" => Ok(ScalarRing::Integers),
        "rationals" | "Q" => Ok(ScalarRing::Rationals),
        _ => Err(Error::domain(format!("unknown ring {name:?}; expected integers or rationals")).into()),
    }
}

/// A comma separated list of positive integers; empty for the empty list.
fn parts(text: &str) -> Result<Vec<u32>> {
    let text = text.trim().trim_start_matches('[').trim_end_matches(']');
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::domain(format!("bad index part {:?}", p.trim())).into())
        })
        .collect()
}

fn unsupported(command: &str, value: &Value) -> CommandError {
    Error::type_mismatch(format!("{command} is not defined on {}", value.algebra())).into()
}

fn unknown_algebroid(name: &str) -> CommandError {
    Error::domain(format!("unknown algebroid {name:?}; expected S.B, N.N or N.N-shifted")).into()
}

fn sym_value(expr: &str) -> Result<SymElement> {
    match Value::parse(expr, None, None)? {
        Value::Sym(x) => Ok(x),
        other => Err(unsupported("this command", &other)),
    }
}

fn common_algebra(f: &Expr, g: &Expr) -> Result<AlgebraTag> {
    match (AlgebraTag::infer(f)?, AlgebraTag::infer(g)?) {
        (Some(a), Some(b)) if a != b => {
            Err(Error::type_mismatch(format!("cannot compose a series over {a} with one over {b}")).into())
        }
        (a, b) => Ok(a.or(b).unwrap_or(AlgebraTag::Sym)),
    }
}

fn series_expr(expr: &str, global: Global) -> Result<(Expr, Kind)> {
    let e = parse(expr)?;
    let kind = Kind::resolve(algebra_of(&e, None)?, global.structure)?;
    Ok((e, kind))
}

#[derive(Clone, Copy)]
enum SeriesOp {
    Revert,
    Invert,
    Exp,
    Log,
}

impl SeriesOp {
    fn apply<A: Algebra>(self, f: &Series<A>) -> hopfcalc::Result<Series<A>> {
        match self {
            SeriesOp::Revert => f.revert(),
            SeriesOp::Invert => f.invert(),
            SeriesOp::Exp => f.exp(ScalarRing::Rationals),
            SeriesOp::Log => f.log(ScalarRing::Rationals),
        }
    }
}

fn unary_series(expr: &str, global: Global, op: SeriesOp) -> Result<Output> {
    let (e, kind) = series_expr(expr, global)?;
    let cap = cap(global)?;
    with_algebra!(kind, A => Ok(series_output(&op.apply(&eval_series::<A>(&e, cap)?)?)))
}

fn series_output<A: Algebra>(f: &Series<A>) -> Output
where
    A::Key: JsonKey,
{
    Output::new(json::to_string(&series_doc(f)), f.to_string())
}

fn multi_series_output<A: Algebra>(f: &MultiSeries<A>) -> Output
where
    A::Key: JsonKey,
{
    Output::new(json::to_string(&multi_series_doc(f)), f.to_string())
}

#[derive(Serialize)]
struct PolyTermDoc {
    exponent: Vec<u32>,
    coeff: String,
}

#[derive(Serialize)]
struct PolyDoc {
    variables: usize,
    terms: Vec<PolyTermDoc>,
}

fn poly_output(p: &Poly) -> Output {
    let doc = PolyDoc {
        variables: p.nvars(),
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| PolyTermDoc {
                exponent: m.0.clone(),
                coeff: c.to_string(),
            })
            .collect(),
    };
    Output::new(json::to_string(&doc), p.to_string())
}

fn pair(left: &str, right: &str) -> Result<Output> {
    let value = match (Value::parse(left, None, None)?, Value::parse(right, None, None)?) {
        (Value::Sym(f), Value::Sym(g)) => hall_pair(&f, &g),
        (Value::NSym(z), Value::QSym(m)) | (Value::QSym(m), Value::NSym(z)) => ns_qs_pair(&z, &m),
        (a, b) => {
            return Err(Error::type_mismatch(format!(
                "no pairing between {} and {}; pair sym with sym or Z with M",
                a.algebra(),
                b.algebra()
            ))
            .into())
        }
    };
    Ok(Output::scalar(&value))
}

fn coaction(expr: &str, shifted: bool) -> Result<Output> {
    match Value::parse(expr, None, None)? {
        Value::Sym(x) if !shifted => {
            let x = coaction_sym(x.to_e().lin());
            Ok(tensor_output(
                vec![FactorDoc::sym(SymBasis::E), FactorDoc::of::<FaaDiBruno>()],
                &x,
                |pos, k| {
                    if pos == 0 {
                        Sym::key_string(k)
                    } else {
                        FaaDiBruno::key_string(k)
                    }
                },
            ))
        }
        Value::NSym(x) => {
            let psi = if shifted {
                shifted_coaction_nsym_key
            } else {
                coaction_nsym_key
            };
            let x = x.lin().map_linear(psi);
            Ok(tensor_output(
                vec![FactorDoc::of::<NSym>(), FactorDoc::of::<Bfk>()],
                &x,
                |_, k| NSym::key_string(k),
            ))
        }
        other => Err(unsupported(
            if shifted { "coaction --shifted" } else { "coaction" },
            &other,
        )),
    }
}

fn differential<G: SplitAlgebroid>(x: Lin<<G::Base as Algebra>::Key>, twice: bool) -> Result<Output>
where
    <G::Base as Algebra>::Key: JsonKey,
{
    let bounds = CobarBounds::default();
    let mut y = cobar_differential::<G>(&tensor1(&x), 0, bounds)?;
    let mut level = 1;
    if twice {
        y = cobar_differential::<G>(&y, 1, bounds)?;
        level = 2;
    }
    let mut factors = vec![FactorDoc::of::<G::Base>()];
    factors.extend(std::iter::repeat_n(FactorDoc::of::<G::H>(), level));
    Ok(Output::new(
        json::to_string(&json::tensor_doc(factors, &y)),
        format_cochain::<G>(&y),
    ))
}

fn charnum(which: &Charnum) -> Result<Output> {
    match which {
        Charnum::Cp { n, partition } => {
            let lambda = Partition::new(parts(partition)?)?;
            Ok(Output::scalar(&cp_char_number(*n, &lambda)?))
        }
        Charnum::Quasitoric {
            index,
            space,
            space_file,
            tangent,
            normal,
        } => {
            let i = Composition::new(parts(index)?)?;
            let space = match (space, space_file, tangent) {
                (Some(text), _, _) => space_from_json(text)?,
                (None, Some(path), _) => {
                    let text = std::fs::read_to_string(path).map_err(|e| CommandError::Io(path.clone(), e))?;
                    space_from_json(&text)?
                }
                (None, None, Some(factors)) => ProjectiveProductSpace::tangent(parts(factors)?),
                (None, None, None) => {
                    return Err(Error::domain("give the space with --tangent, --space or --space-file").into())
                }
            };
            let convention = if *normal {
                Convention::Normal
            } else {
                Convention::Tangential
            };
            Ok(Output::scalar(&quasitoric_char_number(&space, &i, convention)?))
        }
    }
}

fn space_from_json(text: &str) -> Result<ProjectiveProductSpace> {
    let space: ProjectiveProductSpace =
        serde_json::from_str(text).map_err(|e| Error::domain(format!("bad space document: {e}")))?;
    space.validate()?;
    Ok(space)
}

fn verify(suite: &str, weight: Option<u32>) -> Result<Output> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    if let Some(w) = weight.filter(|&w| w > MAX_VERIFY_WEIGHT) {
        return Err(Error::capability(format!(
            "verification weight {w} exceeds the maximum {MAX_VERIFY_WEIGHT}"
        ))
        .into());
    }
    let reports = suites
        .iter()
        .map(|s| s.run(weight.unwrap_or(s.default_weight())))
        .collect::<hopfcalc::Result<Vec<_>>>()?;
    let failed = reports.iter().any(|r| !r.passed);
    let json = match reports.as_slice() {
        [one] => json::to_string(one),
        all => json::to_string(&all),
    };
    let text: Vec<String> = reports.iter().map(ToString::to_string).collect();
    Ok(Output {
        json,
        text: text.join("\n\n"),
        failed,
    })
}
