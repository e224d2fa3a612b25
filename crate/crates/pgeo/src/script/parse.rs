//! Lexer and recursive-descent parser. One statement per line; `#` starts a
//! comment that runs to the end of the line.

use std::fmt;

use pgeo_core::Scalar;

use super::ast::{Ast, Expr, ExprKind, Kind, Pos, Stmt};

/// The first syntax error, with what would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    /// The message without the position.
    pub fn describe(&self) -> String {
        let expected = match self.expected.as_slice() {
            [one] => one.clone(),
            many => format!("one of {}", many.join(", ")),
        };
        format!("expected {expected}, found {}", self.found)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.describe())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(Scalar),
    Str(String),
    Sym(&'static str),
    Newline,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(x) => write!(f, "`{x}`"),
            Tok::Str(_) => f.write_str("string"),
            Tok::Sym(s) => write!(f, "'{s}'"),
            Tok::Newline => f.write_str("end of line"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: Pos,
}

const SYMBOLS: [&str; 9] = ["==", "(", ")", "<", ">", "[", "]", ",", "="];

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (i, text) in src.lines().enumerate() {
        let line = i + 1;
        let chars: Vec<char> = text.chars().collect();
        let mut j = 0;
        while j < chars.len() {
            let c = chars[j];
            let pos = Pos { line, col: j + 1 };
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                j += 1;
                continue;
            }
            let err = |expected: &str, found: String| ParseError { line, col: pos.col, expected: vec![expected.into()], found };
            if c.is_ascii_alphabetic() || c == '_' {
                let start = j;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_' || chars[j] == '\'') {
                    j += 1;
                }
                out.push(Token { tok: Tok::Ident(chars[start..j].iter().collect()), pos });
            } else if c.is_ascii_digit() || c == '-' {
                let start = j;
                j += 1;
                while j < chars.len() && (chars[j].is_ascii_digit() || chars[j] == '/') {
                    j += 1;
                }
                let word: String = chars[start..j].iter().collect();
                let x = word.parse::<Scalar>().map_err(|_| err("number", format!("`{word}`")))?;
                out.push(Token { tok: Tok::Number(x), pos });
            } else if c == '"' {
                let mut s = String::new();
                j += 1;
                loop {
                    match chars.get(j) {
                        None => return Err(err("closing '\"'", "end of line".into())),
                        Some('"') => break,
                        Some('\\') if matches!(chars.get(j + 1), Some('"' | '\\')) => {
                            s.push(chars[j + 1]);
                            j += 2;
                        }
                        Some(&c) => {
                            s.push(c);
                            j += 1;
                        }
                    }
                }
                j += 1;
                out.push(Token { tok: Tok::Str(s), pos });
            } else {
                let rest: String = chars[j..chars.len().min(j + 2)].iter().collect();
                let sym = SYMBOLS.iter().find(|s| rest.starts_with(**s)).ok_or_else(|| err("token", format!("'{c}'")))?;
                j += sym.len();
                out.push(Token { tok: Tok::Sym(sym), pos });
            }
        }
        out.push(Token { tok: Tok::Newline, pos: Pos { line, col: chars.len() + 1 } });
    }
    let line = out.last().map_or(1, |t| t.pos.line + 1);
    out.push(Token { tok: Tok::Eof, pos: Pos { line, col: 1 } });
    Ok(out)
}

const STATEMENT_START: [&str; 8] = ["point", "line", "conic", "map", "scalar", "assert", "print", "render"];
const RESERVED: [&str; 9] = ["point", "line", "conic", "map", "scalar", "assert", "print", "render", "viewport"];

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    /// Errors at end of line point at the last token of the line, which is
    /// where the statement was cut short.
    fn error(&self, expected: &[&str]) -> ParseError {
        let t = &self.toks[self.at];
        let pos = match t.tok {
            Tok::Newline | Tok::Eof if self.at > 0 && !matches!(self.toks[self.at - 1].tok, Tok::Newline) => {
                self.toks[self.at - 1].pos
            }
            _ => t.pos,
        };
        ParseError {
            line: pos.line,
            col: pos.col,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.to_string(),
        }
    }

    fn expect_sym(&mut self, sym: &'static str) -> Result<Pos, ParseError> {
        if *self.peek() == Tok::Sym(sym) {
            Ok(self.bump().pos)
        } else {
            Err(self.error(&[&format!("'{sym}'")]))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), ParseError> {
        match self.peek() {
            Tok::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                let s = s.clone();
                Ok((s, self.bump().pos))
            }
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn number(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Tok::Number(x) => {
                let x = x.clone();
                self.bump();
                Ok(x)
            }
            _ => Err(self.error(&["number"])),
        }
    }

    /// `n (, n){k-1} close`, after the opening symbol.
    fn numbers<const K: usize>(&mut self, close: &'static str) -> Result<[Scalar; K], ParseError> {
        let mut out: Vec<Scalar> = Vec::with_capacity(K);
        for i in 0..K {
            if i > 0 {
                self.expect_sym(",")?;
            }
            out.push(self.number()?);
        }
        self.expect_sym(close)?;
        Ok(out.try_into().expect("K entries"))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let pos = self.toks[self.at].pos;
        let kind = match self.peek().clone() {
            Tok::Number(x) => {
                self.bump();
                ExprKind::Number(x)
            }
            Tok::Sym("(") => {
                self.bump();
                let [x, y] = self.numbers::<2>(")")?;
                ExprKind::Affine(x, y)
            }
            Tok::Sym("<") => {
                self.bump();
                ExprKind::HomPoint(self.numbers::<3>(">")?)
            }
            Tok::Sym("[") => {
                self.bump();
                ExprKind::HomLine(self.numbers::<3>("]")?)
            }
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                self.bump();
                if *self.peek() == Tok::Sym("(") {
                    self.bump();
                    let mut args = Vec::new();
                    if *self.peek() == Tok::Sym(")") {
                        self.bump();
                    } else {
                        loop {
                            args.push(self.expr()?);
                            match self.peek() {
                                Tok::Sym(",") => {
                                    self.bump();
                                }
                                Tok::Sym(")") => {
                                    self.bump();
                                    break;
                                }
                                _ => return Err(self.error(&["','", "')'"])),
                            }
                        }
                    }
                    ExprKind::Call(name, args)
                } else {
                    ExprKind::Name(name)
                }
            }
            _ => return Err(self.error(&["identifier", "number", "'('", "'<'", "'['"])),
        };
        Ok(Expr { kind, pos })
    }

    fn end_of_line(&mut self, also: &[&str]) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Newline | Tok::Eof => {
                self.bump();
                Ok(())
            }
            _ => {
                let mut expected: Vec<&str> = also.to_vec();
                expected.push("end of line");
                Err(self.error(&expected))
            }
        }
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        let (word, pos) = match self.peek() {
            Tok::Ident(w) if STATEMENT_START.contains(&w.as_str()) => (w.clone(), self.bump().pos),
            _ => return Err(self.error(&STATEMENT_START)),
        };
        let stmt = match word.as_str() {
            "assert" => {
                let expr = self.expr()?;
                let equals = if *self.peek() == Tok::Sym("==") {
                    self.bump();
                    Some(self.expr()?)
                } else {
                    None
                };
                self.end_of_line(if equals.is_some() { &[] } else { &["'=='"] })?;
                Stmt::Assert { expr, equals, pos }
            }
            "print" => {
                let (name, _) = self.ident()?;
                self.end_of_line(&[])?;
                Stmt::Print { name, pos }
            }
            "render" => {
                let path = match self.peek() {
                    Tok::Str(s) => {
                        let s = s.clone();
                        self.bump();
                        s
                    }
                    _ => return Err(self.error(&["string"])),
                };
                let viewport = if *self.peek() == Tok::Ident("viewport".into()) {
                    self.bump();
                    self.expect_sym("(")?;
                    Some(self.numbers::<4>(")")?)
                } else {
                    None
                };
                self.end_of_line(if viewport.is_some() { &[] } else { &["`viewport`"] })?;
                Stmt::Render { path, viewport, pos }
            }
            kw => {
                let kind = Kind::from_keyword(kw).expect("statement keyword");
                let (name, _) = self.ident()?;
                self.expect_sym("=")?;
                let expr = self.expr()?;
                self.end_of_line(&[])?;
                Stmt::Decl { kind, name, expr, pos }
            }
        };
        Ok(stmt)
    }
}

pub fn parse(src: &str) -> Result<Ast, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0 };
    let mut stmts = Vec::new();
    loop {
        match p.peek() {
            Tok::Eof => break,
            Tok::Newline => {
                p.bump();
            }
            _ => stmts.push(p.stmt()?),
        }
    }
    Ok(Ast { stmts })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(src: &str) -> ParseError {
        parse(src).unwrap_err()
    }

    #[test]
    fn two_statements_parse_without_type_checks() {
        let ast = parse("point A = (0,0)\nline l = join(A, A)").unwrap();
        assert_eq!(ast.stmts.len(), 2);
        assert_eq!(ast.stmts[1].pos(), Pos { line: 2, col: 1 });
    }

    #[test]
    fn dangling_comma_is_reported_at_the_comma() {
        let e = err("line l = join(A,");
        assert_eq!((e.line, e.col), (1, 16));
        assert_eq!(e.found, "end of line");
        assert!(e.expected.contains(&"identifier".to_string()));
    }

    #[test]
    fn positions_count_from_one() {
        let e = err("point A = (1, 2\n");
        assert_eq!((e.line, e.col), (1, 15));
        let e = err("\n\npoint = (1,2)");
        assert_eq!((e.line, e.col), (3, 7));
        assert_eq!(e.expected, ["identifier"]);
        let e = err("point A = (1,2) junk");
        assert_eq!((e.line, e.col), (1, 17));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let ast = parse("# header\n\npoint A = <1, 2, 3>  # trailing\n").unwrap();
        assert_eq!(ast.stmts.len(), 1);
    }

    #[test]
    fn bad_numbers_and_characters() {
        assert_eq!((err("point A = (1/0, 2)").line, err("point A = (1/0, 2)").col), (1, 12));
        assert_eq!(err("point A = (1, 2) @").found, "'@'");
        assert_eq!(err("line = (1,2)").expected, ["identifier"]);
    }

    #[test]
    fn pretty_print_round_trips() {
        let src = "point A = (1/2, 3)\nline l = [0,1,-1]\nassert on(meet(l, [1,0,0]), l)\nassert crossratio(A, A, A, A) == -1\nrender \"a \\\"b\\\".svg\" viewport(-1, -1, 1, 1)\nprint A\n";
        let ast = parse(src).unwrap();
        let again = parse(&ast.to_string()).unwrap();
        assert_eq!(ast.without_positions(), again.without_positions());
        assert_eq!(again.to_string(), ast.to_string());
    }
}
