//! A line-oriented language for describing figures.
//!
//! ```text
//! # two orthologic triangles
//! point A = (0,0)
//! triangle T = A (4,0) (1,3)
//! triangle T' = (3,3) (-2,2) (1,-2)
//! point O = orthology_center T T'
//! query orthologic T T'
//! ```
//!
//! Statements end at a newline or `;`. A declaration binds a name once;
//! its expression is either a call `function arg...` or a composition of
//! atoms whose meaning depends on the declared kind.

mod eval;
mod ops;
mod parse;
mod svg;

use std::fmt;

use orthokit::Rational;

pub use eval::{answers_json, evaluate, evaluate_objects, Answer, Value};
pub use ops::{Op, FUNCTIONS, QUERIES};
pub use parse::parse_scene;
pub use svg::render_svg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Scalar,
    Point,
    Line,
    Triangle,
    Family,
    Conic,
}

impl Kind {
    pub const DECLARABLE: [Kind; 5] = [Kind::Point, Kind::Line, Kind::Triangle, Kind::Family, Kind::Conic];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Scalar => "scalar",
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Triangle => "triangle",
            Kind::Family => "family",
            Kind::Conic => "conic",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Kind> {
        Kind::DECLARABLE.into_iter().find(|k| k.keyword() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Atom {
    Name(String),
    Number(Rational),
    Tuple(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Call { func: String, args: Vec<Atom> },
    Compose(Vec<Atom>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Decl { kind: Kind, name: String, expr: Expr },
    Query { op: String, args: Vec<Atom> },
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SceneDoc {
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum SceneError {
    #[error("{line}:{col}: syntax error: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("{line}:{col}: name error: {message}")]
    Name { line: usize, col: usize, message: String },
    #[error("{line}:{col}: type error: {message}")]
    Type { line: usize, col: usize, message: String },
    #[error("evaluation error in `{stmt}`: {message}")]
    Eval { stmt: String, message: String },
    #[error("{0}")]
    Io(String),
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Name(n) => f.write_str(n),
            Atom::Number(q) => write!(f, "{q}"),
            Atom::Tuple(items) => {
                let parts: Vec<String> = items.iter().map(|q| q.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

fn write_atoms(f: &mut fmt::Formatter<'_>, atoms: &[Atom]) -> fmt::Result {
    for a in atoms {
        write!(f, " {a}")?;
    }
    Ok(())
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Call { func, args } => {
                f.write_str(func)?;
                write_atoms(f, args)
            }
            Expr::Compose(atoms) => {
                let parts: Vec<String> = atoms.iter().map(|a| a.to_string()).collect();
                f.write_str(&parts.join(" "))
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Decl { kind, name, expr } => write!(f, "{kind} {name} = {expr}"),
            Stmt::Query { op, args } => {
                write!(f, "query {op}")?;
                write_atoms(f, args)
            }
        }
    }
}

/// The canonical text of a scene, one statement per line.
impl fmt::Display for SceneDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
