//! Evaluation of a parsed script into an environment and a run report.

use std::collections::HashMap;
use std::fmt;

use pgeo_core::conic::{
    conic_through_5, dual_conic, on_conic, pascal_line, pascal_sixth_point, polar, pole, second_intersection,
    tangent_at, Conic,
};
use pgeo_core::extension::{brouwerian_probe, LlpoOutcome};
use pgeo_core::harmonic::{cross_ratio, harmonic, CrossRatio};
use pgeo_core::linalg::primitive_vec;
use pgeo_core::plane::{apart, incident, join, meet, outside, ProjElement};
use pgeo_core::projectivity::{
    axis_of_homology, center_of_homology, default_matrix, projectivity_from_triples, Carrier, Element, Projectivity,
};
use pgeo_core::{Error, HomLine, HomPoint, Scalar};
use serde::Serialize;

use super::ast::{Ast, Expr, ExprKind, Kind, Pos, Stmt};
use super::parse::{parse, ParseError};

#[derive(Debug, Clone)]
pub enum Value {
    Point(HomPoint),
    Line(HomLine),
    Conic(Box<Conic>),
    Map(Box<Projectivity>),
    Scalar(CrossRatio),
    Bool(bool),
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Conic(_) => "conic",
            Value::Map(_) => "map",
            Value::Scalar(_) => "scalar",
            Value::Bool(_) => "boolean",
        }
    }

    pub fn kind(&self) -> Option<Kind> {
        Some(match self {
            Value::Point(_) => Kind::Point,
            Value::Line(_) => Kind::Line,
            Value::Conic(_) => Kind::Conic,
            Value::Map(_) => Kind::Map,
            Value::Scalar(_) => Kind::Scalar,
            Value::Bool(_) => return None,
        })
    }

    fn from_element(e: Element) -> Value {
        match e {
            Element::Point(p) => Value::Point(p),
            Element::Line(l) => Value::Line(l),
        }
    }

    /// Equality of the geometric objects; maps compare by carriers and
    /// matrix up to scale.
    pub fn same(&self, other: &Value) -> Option<bool> {
        Some(match (self, other) {
            (Value::Point(a), Value::Point(b)) => a == b,
            (Value::Line(a), Value::Line(b)) => a == b,
            (Value::Conic(a), Value::Conic(b)) => a.matrix() == b.matrix(),
            (Value::Map(a), Value::Map(b)) => {
                a.source() == b.source()
                    && a.target() == b.target()
                    && default_matrix(a).proportional(&default_matrix(b))
            }
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Bool(a), Value::Bool(b)) => a == b,
            _ => return None,
        })
    }
}

fn carrier_text(c: &Carrier) -> String {
    match c {
        Carrier::Range(l) => format!("range {l}"),
        Carrier::Pencil(p) => format!("pencil {p}"),
    }
}

fn join_ints<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Canonical text of a value: primitive integer coordinates, the primitive
/// conic matrix, and for maps the carriers with the primitive 2×2 matrix in
/// the default parameters.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Point(p) => write!(f, "{p}"),
            Value::Line(l) => write!(f, "{l}"),
            Value::Conic(k) => {
                let rows: Vec<String> = k.matrix().iter().map(|r| format!("[{}]", join_ints(r))).collect();
                write!(f, "[{}]", rows.join(","))
            }
            Value::Map(pi) => {
                let m = default_matrix(pi);
                let [[a, b], [c, d]] = &m.0;
                let ints = primitive_vec(&[a.clone(), b.clone(), c.clone(), d.clone()]).expect("invertible");
                write!(
                    f,
                    "{} -> {}: [[{}],[{}]]",
                    carrier_text(&pi.source()),
                    carrier_text(&pi.target()),
                    join_ints(&ints[..2]),
                    join_ints(&ints[2..])
                )
            }
            Value::Scalar(x) => write!(f, "{x}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalErrorKind {
    UnknownName(String),
    Redeclared(String),
    UnknownBuiltin(String),
    KindMismatch { expected: String, found: String },
    Arity { name: String, expected: String, found: usize },
    Construction(Error),
}

impl EvalErrorKind {
    /// Short tag used in reports; construction errors use the variant name.
    pub fn tag(&self) -> String {
        match self {
            EvalErrorKind::UnknownName(_) => "UnknownName".into(),
            EvalErrorKind::Redeclared(_) => "Redeclared".into(),
            EvalErrorKind::UnknownBuiltin(_) => "UnknownBuiltin".into(),
            EvalErrorKind::KindMismatch { .. } => "KindMismatch".into(),
            EvalErrorKind::Arity { .. } => "Arity".into(),
            EvalErrorKind::Construction(e) => format!("{e:?}"),
        }
    }
}

impl fmt::Display for EvalErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalErrorKind::UnknownName(n) => write!(f, "`{n}` is not declared"),
            EvalErrorKind::Redeclared(n) => write!(f, "`{n}` is already declared"),
            EvalErrorKind::UnknownBuiltin(n) => write!(f, "no builtin named `{n}`"),
            EvalErrorKind::KindMismatch { expected, found } => write!(f, "expected {expected}, found {found}"),
            EvalErrorKind::Arity { name, expected, found } => {
                write!(f, "`{name}` takes {expected} arguments, got {found}")
            }
            EvalErrorKind::Construction(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalError {
    pub pos: Pos,
    pub kind: EvalErrorKind,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.pos.line, self.pos.col, self.kind)
    }
}

impl std::error::Error for EvalError {}

/// Declared values in declaration order; each name is bound once.
#[derive(Debug, Clone, Default)]
pub struct Env {
    entries: Vec<(String, Value)>,
    index: HashMap<String, usize>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.index.get(name).map(|&i| &self.entries[i].1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Value)> {
        self.entries.iter().map(|(n, v)| (n.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn bind(&mut self, name: &str, v: Value) -> Result<(), EvalErrorKind> {
        if self.index.contains_key(name) {
            return Err(EvalErrorKind::Redeclared(name.into()));
        }
        self.index.insert(name.into(), self.entries.len());
        self.entries.push((name.into(), v));
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Declaration {
    pub name: String,
    pub kind: String,
    pub canonical: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssertionRecord {
    pub source: String,
    pub pass: bool,
    /// Canonical forms of the operands of a failed assertion.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorRecord {
    pub line: usize,
    pub column: usize,
    pub error: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderRequest {
    pub path: String,
    pub viewport: Option<[Scalar; 4]>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunReport {
    pub declarations: Vec<Declaration>,
    pub assertions: Vec<AssertionRecord>,
    pub errors: Vec<ErrorRecord>,
    /// Lines produced by `print`, in order.
    #[serde(skip)]
    pub printed: Vec<String>,
    #[serde(skip)]
    pub renders: Vec<RenderRequest>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;

impl RunReport {
    fn from_parse_error(e: &ParseError) -> Self {
        RunReport {
            errors: vec![ErrorRecord {
                line: e.line,
                column: e.col,
                error: "ParseError".into(),
                message: e.describe(),
            }],
            ..RunReport::default()
        }
    }

    pub fn parse_failed(&self) -> bool {
        self.errors.iter().any(|e| e.error == "ParseError")
    }

    pub fn exit_code(&self) -> i32 {
        if self.parse_failed() {
            EXIT_PARSE
        } else if !self.errors.is_empty() {
            EXIT_CONSTRUCTION
        } else if self.assertions.iter().any(|a| !a.pass) {
            EXIT_ASSERTION
        } else {
            EXIT_OK
        }
    }

    /// Pretty JSON with a trailing newline; identical runs give identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}

fn mismatch(expected: &str, found: &Value) -> EvalErrorKind {
    EvalErrorKind::KindMismatch { expected: expected.into(), found: found.type_name().into() }
}

fn arity(name: &str, expected: &str, args: &[Value]) -> EvalErrorKind {
    EvalErrorKind::Arity { name: name.into(), expected: expected.into(), found: args.len() }
}

fn point(v: &Value) -> Result<&HomPoint, EvalErrorKind> {
    match v {
        Value::Point(p) => Ok(p),
        other => Err(mismatch("point", other)),
    }
}

fn line(v: &Value) -> Result<&HomLine, EvalErrorKind> {
    match v {
        Value::Line(l) => Ok(l),
        other => Err(mismatch("line", other)),
    }
}

fn conic(v: &Value) -> Result<&Conic, EvalErrorKind> {
    match v {
        Value::Conic(k) => Ok(k),
        other => Err(mismatch("conic", other)),
    }
}

fn points<const N: usize>(args: &[Value]) -> Result<[&HomPoint; N], EvalErrorKind> {
    let v: Vec<&HomPoint> = args.iter().map(point).collect::<Result<_, _>>()?;
    Ok(v.try_into().expect("arity checked"))
}

fn element(v: &Value) -> Result<Element, EvalErrorKind> {
    match v {
        Value::Point(p) => Ok(Element::Point(p.clone())),
        Value::Line(l) => Ok(Element::Line(l.clone())),
        other => Err(mismatch("point or line", other)),
    }
}

/// A line names a range, a point names a pencil.
fn carrier(v: &Value) -> Result<Carrier, EvalErrorKind> {
    match v {
        Value::Line(l) => Ok(Carrier::Range(l.clone())),
        Value::Point(p) => Ok(Carrier::Pencil(p.clone())),
        other => Err(mismatch("line or point", other)),
    }
}

/// Signatures, for arity errors: name and argument count.
const BUILTINS: [(&str, usize); 19] = [
    ("join", 2),
    ("meet", 2),
    ("harmonic", 3),
    ("crossratio", 4),
    ("conic5", 5),
    ("on", 2),
    ("outside", 2),
    ("apart", 2),
    ("tangent", 2),
    ("secant2", 3),
    ("polar", 2),
    ("pole", 2),
    ("pascal", 7),
    ("sixth", 7),
    ("projmap", 8),
    ("apply", 2),
    ("axis", 1),
    ("dual", 1),
    ("probe", 1),
];

fn call(name: &str, args: &[Value]) -> Result<Value, EvalErrorKind> {
    let n = BUILTINS
        .iter()
        .find(|(b, _)| *b == name)
        .map(|(_, n)| *n)
        .ok_or_else(|| EvalErrorKind::UnknownBuiltin(name.into()))?;
    if args.len() != n {
        return Err(arity(name, &n.to_string(), args));
    }
    let c = EvalErrorKind::Construction;
    let v = match name {
        "join" => Value::Line(join(point(&args[0])?, point(&args[1])?).map_err(c)?),
        "meet" => Value::Point(meet(line(&args[0])?, line(&args[1])?).map_err(c)?),
        "harmonic" => {
            let [a, b, x] = points::<3>(args)?;
            Value::Point(harmonic(a, b, x).map_err(c)?)
        }
        "crossratio" => {
            let [a, b, x, d] = points::<4>(args)?;
            Value::Scalar(cross_ratio(a, b, x, d).map_err(c)?)
        }
        "conic5" => {
            let [a, b, x, d, e] = points::<5>(args)?;
            Value::Conic(Box::new(conic_through_5(a, b, x, d, e).map_err(c)?))
        }
        "on" | "outside" => {
            let p = point(&args[0])?;
            let on = match &args[1] {
                Value::Line(l) => incident(p, l),
                Value::Conic(k) => on_conic(k, p),
                other => return Err(mismatch("line or conic", other)),
            };
            debug_assert!(!matches!(&args[1], Value::Line(l) if outside(p, l) == on));
            Value::Bool(if name == "on" { on } else { !on })
        }
        "apart" => match (&args[0], &args[1]) {
            (Value::Point(a), Value::Point(b)) => Value::Bool(apart(a, b)),
            (Value::Line(a), Value::Line(b)) => Value::Bool(apart(a, b)),
            (Value::Point(_) | Value::Line(_), other) => return Err(mismatch(args[0].type_name(), other)),
            (other, _) => return Err(mismatch("point or line", other)),
        },
        "tangent" => Value::Line(tangent_at(conic(&args[0])?, point(&args[1])?).map_err(c)?),
        "secant2" => {
            Value::Point(second_intersection(conic(&args[0])?, point(&args[1])?, line(&args[2])?).map_err(c)?)
        }
        "polar" => Value::Line(polar(conic(&args[0])?, point(&args[1])?).map_err(c)?),
        "pole" => Value::Point(pole(conic(&args[0])?, line(&args[1])?).map_err(c)?),
        "pascal" => {
            let k = conic(&args[0])?;
            let h = points::<6>(&args[1..])?;
            Value::Line(pascal_line(k, h).map_err(c)?)
        }
        "sixth" => {
            let k = conic(&args[0])?;
            let five = points::<5>(&args[1..6])?;
            Value::Point(pascal_sixth_point(k, five, line(&args[6])?).map_err(c)?)
        }
        "projmap" => {
            let (src, dst) = (carrier(&args[0])?, carrier(&args[4])?);
            let xs: Vec<Element> = args[1..4].iter().map(element).collect::<Result<_, _>>()?;
            let ys: Vec<Element> = args[5..8].iter().map(element).collect::<Result<_, _>>()?;
            let pi = projectivity_from_triples(&src, [&xs[0], &xs[1], &xs[2]], &dst, [&ys[0], &ys[1], &ys[2]])
                .map_err(c)?;
            Value::Map(Box::new(pi))
        }
        "apply" => {
            let Value::Map(pi) = &args[0] else { return Err(mismatch("map", &args[0])) };
            Value::from_element(pi.apply(&element(&args[1])?).map_err(c)?)
        }
        "axis" => {
            let Value::Map(pi) = &args[0] else { return Err(mismatch("map", &args[0])) };
            match pi.source() {
                Carrier::Range(_) => Value::Line(axis_of_homology(pi).map_err(c)?),
                Carrier::Pencil(_) => Value::Point(center_of_homology(pi).map_err(c)?),
            }
        }
        "dual" => match &args[0] {
            Value::Point(p) => Value::Line(p.dualize()),
            Value::Line(l) => Value::Point(l.dualize()),
            Value::Conic(k) => Value::Conic(Box::new(dual_conic(k).map_err(c)?)),
            Value::Map(pi) => Value::Map(Box::new(pi.dualize())),
            other => return Err(mismatch("point, line, conic or map", other)),
        },
        "probe" => {
            let Value::Scalar(CrossRatio::Finite(alpha)) = &args[0] else {
                return Err(mismatch("finite scalar", &args[0]));
            };
            match brouwerian_probe(alpha).outcome {
                LlpoOutcome::Meet(p) => Value::Point(p),
                LlpoOutcome::IdenticalLines => return Err(c(Error::CoincidentLines)),
            }
        }
        _ => unreachable!("every builtin is listed"),
    };
    Ok(v)
}

fn eval_expr(env: &Env, e: &Expr) -> Result<Value, EvalError> {
    let at = |kind| EvalError { pos: e.pos, kind };
    match &e.kind {
        ExprKind::Affine(x, y) => HomPoint::affine(x, y).map(Value::Point).map_err(|err| at(EvalErrorKind::Construction(err))),
        ExprKind::HomPoint(v) => {
            HomPoint::from_scalars(v).map(Value::Point).map_err(|err| at(EvalErrorKind::Construction(err)))
        }
        ExprKind::HomLine(v) => {
            HomLine::from_scalars(v).map(Value::Line).map_err(|err| at(EvalErrorKind::Construction(err)))
        }
        ExprKind::Number(x) => Ok(Value::Scalar(CrossRatio::Finite(x.clone()))),
        ExprKind::Name(n) => env.get(n).cloned().ok_or_else(|| at(EvalErrorKind::UnknownName(n.clone()))),
        ExprKind::Call(name, args) => {
            let vals: Vec<Value> = args.iter().map(|a| eval_expr(env, a)).collect::<Result<_, _>>()?;
            call(name, &vals).map_err(at)
        }
    }
}

/// Operand values of an assertion, for the failure record.
fn operands(env: &Env, e: &Expr) -> Vec<String> {
    match &e.kind {
        ExprKind::Call(_, args) => args.iter().filter_map(|a| eval_expr(env, a).ok()).map(|v| v.to_string()).collect(),
        _ => vec![],
    }
}

fn run_stmt(env: &mut Env, report: &mut RunReport, s: &Stmt) -> Result<(), EvalError> {
    let pos = s.pos();
    match s {
        Stmt::Decl { kind, name, expr, .. } => {
            let v = eval_expr(env, expr)?;
            if v.kind() != Some(*kind) {
                return Err(EvalError { pos: expr.pos, kind: mismatch(kind.keyword(), &v) });
            }
            report.declarations.push(Declaration { name: name.clone(), kind: kind.to_string(), canonical: v.to_string() });
            env.bind(name, v).map_err(|kind| EvalError { pos, kind })?;
        }
        Stmt::Assert { expr, equals, .. } => {
            let lhs = eval_expr(env, expr)?;
            let (pass, values) = match equals {
                None => match lhs {
                    Value::Bool(b) => (b, if b { vec![] } else { operands(env, expr) }),
                    other => return Err(EvalError { pos: expr.pos, kind: mismatch("boolean", &other) }),
                },
                Some(rhs_expr) => {
                    let rhs = eval_expr(env, rhs_expr)?;
                    let same = lhs.same(&rhs).ok_or_else(|| EvalError {
                        pos: rhs_expr.pos,
                        kind: mismatch(lhs.type_name(), &rhs),
                    })?;
                    (same, if same { vec![] } else { vec![lhs.to_string(), rhs.to_string()] })
                }
            };
            let source = s.to_string().trim_start_matches("assert ").to_string();
            report.assertions.push(AssertionRecord { source, pass, values });
        }
        Stmt::Print { name, .. } => {
            let v = env.get(name).ok_or_else(|| EvalError { pos, kind: EvalErrorKind::UnknownName(name.clone()) })?;
            report.printed.push(format!("{name} = {v}"));
        }
        Stmt::Render { path, viewport, .. } => {
            report.renders.push(RenderRequest { path: path.clone(), viewport: viewport.clone() });
        }
    }
    Ok(())
}

/// Runs the statements in order; the first evaluation error stops the run.
pub fn eval(ast: &Ast) -> (RunReport, Env) {
    let mut env = Env::default();
    let mut report = RunReport::default();
    for s in &ast.stmts {
        if let Err(e) = run_stmt(&mut env, &mut report, s) {
            report.errors.push(ErrorRecord {
                line: e.pos.line,
                column: e.pos.col,
                error: e.kind.tag(),
                message: e.kind.to_string(),
            });
            break;
        }
    }
    (report, env)
}

/// Parses and evaluates; a parse error gives a report holding only that error.
pub fn run_source(src: &str) -> (RunReport, Env) {
    match parse(src) {
        Ok(ast) => eval(&ast),
        Err(e) => (RunReport::from_parse_error(&e), Env::default()),
    }
}
