//! Syntax tree of construction scripts. `Display` prints the canonical
//! source form, which parses back to the same tree.

use std::fmt;

use pgeo_core::Scalar;

/// 1-based line and column of a token.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Line,
    Conic,
    Map,
    Scalar,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::Point, Kind::Line, Kind::Conic, Kind::Map, Kind::Scalar];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Conic => "conic",
            Kind::Map => "map",
            Kind::Scalar => "scalar",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.keyword() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    /// `(x, y)`, a finite point in the chart `z = 1`.
    Affine(Scalar, Scalar),
    /// `<x, y, z>`
    HomPoint([Scalar; 3]),
    /// `[a, b, c]`
    HomLine([Scalar; 3]),
    Number(Scalar),
    Name(String),
    Call(String, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Decl { kind: Kind, name: String, expr: Expr, pos: Pos },
    /// `assert e` or `assert e == f`.
    Assert { expr: Expr, equals: Option<Expr>, pos: Pos },
    Print { name: String, pos: Pos },
    Render { path: String, viewport: Option<[Scalar; 4]>, pos: Pos },
}

impl Stmt {
    pub fn pos(&self) -> Pos {
        match self {
            Stmt::Decl { pos, .. } | Stmt::Assert { pos, .. } | Stmt::Print { pos, .. } | Stmt::Render { pos, .. } => {
                *pos
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ast {
    pub stmts: Vec<Stmt>,
}

impl Ast {
    /// The tree with every position zeroed, for comparing parses of
    /// differently laid out sources.
    pub fn without_positions(&self) -> Ast {
        fn strip(e: &Expr) -> Expr {
            let kind = match &e.kind {
                ExprKind::Call(n, args) => ExprKind::Call(n.clone(), args.iter().map(strip).collect()),
                k => k.clone(),
            };
            Expr { kind, pos: Pos::default() }
        }
        let stmts = self
            .stmts
            .iter()
            .map(|s| match s {
                Stmt::Decl { kind, name, expr, .. } => {
                    Stmt::Decl { kind: *kind, name: name.clone(), expr: strip(expr), pos: Pos::default() }
                }
                Stmt::Assert { expr, equals, .. } => {
                    Stmt::Assert { expr: strip(expr), equals: equals.as_ref().map(strip), pos: Pos::default() }
                }
                Stmt::Print { name, .. } => Stmt::Print { name: name.clone(), pos: Pos::default() },
                Stmt::Render { path, viewport, .. } => {
                    Stmt::Render { path: path.clone(), viewport: viewport.clone(), pos: Pos::default() }
                }
            })
            .collect();
        Ast { stmts }
    }
}

fn triple(f: &mut fmt::Formatter<'_>, open: char, v: &[Scalar; 3], close: char) -> fmt::Result {
    write!(f, "{open}{}, {}, {}{close}", v[0], v[1], v[2])
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Affine(x, y) => write!(f, "({x}, {y})"),
            ExprKind::HomPoint(v) => triple(f, '<', v, '>'),
            ExprKind::HomLine(v) => triple(f, '[', v, ']'),
            ExprKind::Number(x) => write!(f, "{x}"),
            ExprKind::Name(n) => f.write_str(n),
            ExprKind::Call(n, args) => {
                write!(f, "{n}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Decl { kind, name, expr, .. } => write!(f, "{kind} {name} = {expr}"),
            Stmt::Assert { expr, equals: None, .. } => write!(f, "assert {expr}"),
            Stmt::Assert { expr, equals: Some(rhs), .. } => write!(f, "assert {expr} == {rhs}"),
            Stmt::Print { name, .. } => write!(f, "print {name}"),
            Stmt::Render { path, viewport, .. } => {
                write!(f, "render {}", quote(path))?;
                if let Some([a, b, c, d]) = viewport {
                    write!(f, " viewport({a}, {b}, {c}, {d})")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Ast {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
