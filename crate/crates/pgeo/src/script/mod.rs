//! The construction script language.
//!
//! ```text
//! point A = (0, 0)            # affine literal, also <x,y,z> and [a,b,c]
//! point B = (1, 0)
//! point D = harmonic(A, B, (2, 0))
//! assert apart(D, (2, 0))
//! print D
//! ```

pub mod ast;
pub mod eval;
pub mod parse;

pub use ast::{Ast, Expr, ExprKind, Kind, Pos, Stmt};
pub use eval::{eval, run_source, Env, EvalError, RunReport, Value};
pub use parse::{parse, ParseError};
