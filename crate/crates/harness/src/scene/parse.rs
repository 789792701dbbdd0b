//! Lexer and recursive-descent parser with name and kind checking.

use std::collections::HashMap;

use orthokit::kernel::parse_rational;
use orthokit::Rational;

use super::ops::{self, Op};
use super::{Atom, Expr, Kind, SceneDoc, SceneError, Stmt};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Number(Rational),
    LParen,
    RParen,
    Comma,
    Eq,
    End,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Number(q) => format!("`{q}`"),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Eq => "`=`".into(),
        Tok::End => "end of statement".into(),
        Tok::Eof => "end of input".into(),
    }
}

fn syntax(line: usize, col: usize, expected: impl Into<String>) -> SceneError {
    SceneError::Syntax {
        line,
        col,
        expected: expected.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Token>, SceneError> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let chars: Vec<char> = raw.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let single = match c {
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                '=' => Some(Tok::Eq),
                ';' => Some(Tok::End),
                _ => None,
            };
            if let Some(tok) = single {
                out.push(Token { tok, line, col });
                i += 1;
            } else if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                    i += 1;
                }
                let name: String = chars[start..i].iter().collect();
                out.push(Token {
                    tok: Tok::Ident(name),
                    line,
                    col,
                });
            } else if c.is_ascii_digit() || (matches!(c, '-' | '+') && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
                let start = i;
                i += 1;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.' || chars[i] == '/') {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let q = parse_rational(&text).ok_or_else(|| syntax(line, col, "a number such as 3, -1/2 or 0.25"))?;
                out.push(Token {
                    tok: Tok::Number(q),
                    line,
                    col,
                });
            } else {
                return Err(syntax(line, col, "a name, number, `(`, `)`, `,`, `=` or `;`"));
            }
        }
        out.push(Token {
            tok: Tok::End,
            line,
            col: chars.len() + 1,
        });
    }
    let (line, col) = out.last().map_or((1, 1), |t| (t.line, t.col));
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    kinds: HashMap<String, Kind>,
}

/// An atom with its source position.
struct Spanned {
    atom: Atom,
    line: usize,
    col: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, usize, usize), SceneError> {
        let t = self.next();
        match t.tok {
            Tok::Ident(s) => Ok((s, t.line, t.col)),
            _ => Err(syntax(t.line, t.col, format!("{what}, found {}", describe(&t.tok)))),
        }
    }

    fn at_end(&self) -> bool {
        matches!(self.peek().tok, Tok::End | Tok::Eof)
    }

    fn atoms(&mut self) -> Result<Vec<Spanned>, SceneError> {
        let mut out = Vec::new();
        while !self.at_end() {
            out.push(self.atom()?);
        }
        Ok(out)
    }

    fn atom(&mut self) -> Result<Spanned, SceneError> {
        let t = self.next();
        let atom = match t.tok {
            Tok::Ident(s) => Atom::Name(s),
            Tok::Number(q) => Atom::Number(q),
            Tok::LParen => {
                let mut items = Vec::new();
                loop {
                    let n = self.next();
                    match n.tok {
                        Tok::Number(q) => items.push(q),
                        other => return Err(syntax(n.line, n.col, format!("a number, found {}", describe(&other)))),
                    }
                    let sep = self.next();
                    match sep.tok {
                        Tok::Comma => continue,
                        Tok::RParen => break,
                        other => {
                            return Err(syntax(sep.line, sep.col, format!("`,` or `)`, found {}", describe(&other))));
                        }
                    }
                }
                Atom::Tuple(items)
            }
            other => {
                return Err(syntax(t.line, t.col, format!("a name, number or tuple, found {}", describe(&other))));
            }
        };
        Ok(Spanned {
            atom,
            line: t.line,
            col: t.col,
        })
    }

    fn kind_of(&self, a: &Spanned) -> Result<Kind, SceneError> {
        match &a.atom {
            Atom::Name(n) => self.kinds.get(n).copied().ok_or_else(|| SceneError::Name {
                line: a.line,
                col: a.col,
                message: format!("`{n}` is not defined"),
            }),
            Atom::Number(_) => Ok(Kind::Scalar),
            Atom::Tuple(items) => match items.len() {
                2 => Ok(Kind::Point),
                3 => Ok(Kind::Line),
                6 => Ok(Kind::Conic),
                n => Err(SceneError::Type {
                    line: a.line,
                    col: a.col,
                    message: format!("a tuple has 2 (point), 3 (line) or 6 (conic) entries, not {n}"),
                }),
            },
        }
    }

    fn check_args(&self, op: &Op, args: &[Spanned], line: usize, col: usize) -> Result<(), SceneError> {
        if args.len() != op.params.len() {
            return Err(SceneError::Type {
                line,
                col,
                message: format!("`{}` takes {} arguments, got {}", op.name, op.params.len(), args.len()),
            });
        }
        for (a, want) in args.iter().zip(op.params) {
            let got = self.kind_of(a)?;
            if got != *want {
                return Err(SceneError::Type {
                    line: a.line,
                    col: a.col,
                    message: format!("`{}` expects a {want} here, got a {got}", op.name),
                });
            }
        }
        Ok(())
    }

    fn statement(&mut self) -> Result<Option<Stmt>, SceneError> {
        if self.at_end() {
            return Ok(None);
        }
        let (word, line, col) = self.expect_ident("`point`, `line`, `triangle`, `family`, `conic` or `query`")?;
        if word == "query" {
            let (op_name, oline, ocol) = self.expect_ident("a query name")?;
            let op = ops::query(&op_name).ok_or_else(|| SceneError::Name {
                line: oline,
                col: ocol,
                message: format!("unknown query `{op_name}`"),
            })?;
            let args = self.atoms()?;
            self.check_args(op, &args, oline, ocol)?;
            return Ok(Some(Stmt::Query {
                op: op_name,
                args: args.into_iter().map(|a| a.atom).collect(),
            }));
        }
        let Some(kind) = Kind::from_keyword(&word) else {
            return Err(syntax(line, col, "`point`, `line`, `triangle`, `family`, `conic` or `query`"));
        };
        let (name, nline, ncol) = self.expect_ident("a name")?;
        if ops::is_reserved(&name) {
            return Err(SceneError::Name {
                line: nline,
                col: ncol,
                message: format!("`{name}` is reserved"),
            });
        }
        if self.kinds.contains_key(&name) {
            return Err(SceneError::Name {
                line: nline,
                col: ncol,
                message: format!("`{name}` is already defined"),
            });
        }
        let eq = self.next();
        if eq.tok != Tok::Eq {
            return Err(syntax(eq.line, eq.col, format!("`=`, found {}", describe(&eq.tok))));
        }
        let atoms = self.atoms()?;
        let Some(first) = atoms.first() else {
            let t = self.peek();
            return Err(syntax(t.line, t.col, "an expression"));
        };
        let expr = match &first.atom {
            Atom::Name(n) if ops::function(n).is_some() => {
                let op = ops::function(n).expect("checked");
                self.check_args(op, &atoms[1..], first.line, first.col)?;
                let result = op.result.expect("functions have results");
                if result != kind {
                    return Err(SceneError::Type {
                        line: first.line,
                        col: first.col,
                        message: format!("`{n}` gives a {result}, not a {kind}"),
                    });
                }
                Expr::Call {
                    func: n.clone(),
                    args: atoms[1..].iter().map(|a| a.atom.clone()).collect(),
                }
            }
            _ => {
                let got = atoms.iter().map(|a| self.kind_of(a)).collect::<Result<Vec<_>, _>>()?;
                if !composes(kind, &got) {
                    return Err(SceneError::Type {
                        line: first.line,
                        col: first.col,
                        message: format!("cannot build a {kind} from {}", kinds_text(&got)),
                    });
                }
                Expr::Compose(atoms.into_iter().map(|a| a.atom).collect())
            }
        };
        self.kinds.insert(name.clone(), kind);
        Ok(Some(Stmt::Decl { kind, name, expr }))
    }

    fn scene(&mut self) -> Result<SceneDoc, SceneError> {
        let mut stmts = Vec::new();
        loop {
            if let Some(s) = self.statement()? {
                stmts.push(s);
            }
            let t = self.next();
            match t.tok {
                Tok::End => continue,
                Tok::Eof => break,
                other => return Err(syntax(t.line, t.col, format!("end of statement, found {}", describe(&other)))),
            }
        }
        Ok(SceneDoc { stmts })
    }
}

fn kinds_text(kinds: &[Kind]) -> String {
    let parts: Vec<&str> = kinds.iter().map(|k| k.keyword()).collect();
    parts.join(", ")
}

/// Accepted compositions: an object of the same kind, or its defining points.
pub(super) fn composes(kind: Kind, got: &[Kind]) -> bool {
    use Kind::*;
    if got == [kind] {
        return true;
    }
    match kind {
        Line => got == [Point, Point],
        Triangle => got == [Point, Point, Point],
        Family => got == [Triangle, Triangle],
        Conic => got == [Point; 5],
        _ => false,
    }
}

pub fn parse_scene(text: &str) -> Result<SceneDoc, SceneError> {
    let toks = lex(text)?;
    Parser {
        toks,
        pos: 0,
        kinds: HashMap::new(),
    }
    .scene()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declarations_and_queries() {
        let doc = parse_scene("point A = (0,0)\ntriangle T = A (4,0) (0,3)\nquery orthocenter T").unwrap();
        assert_eq!(doc.stmts.len(), 3);
        let doc = parse_scene("triangle T = (0,0) (1,0) (0,1); triangle T' = (1,1) (2,0) (0,3)\nfamily F = T T' ; query degenerate_params F").unwrap();
        assert_eq!(doc.stmts.len(), 4);
    }

    #[test]
    fn unclosed_tuple() {
        let err = parse_scene("point A = (0").unwrap_err();
        assert!(matches!(err, SceneError::Syntax { line: 1, col: 13, .. }), "{err}");
    }

    #[test]
    fn names_and_kinds_are_checked() {
        assert!(matches!(parse_scene("triangle T = A B C"), Err(SceneError::Name { line: 1, col: 14, .. })));
        assert!(matches!(
            parse_scene("point A = (0,0)\npoint A = (1,1)"),
            Err(SceneError::Name { line: 2, .. })
        ));
        assert!(matches!(parse_scene("point pedal = (0,0)"), Err(SceneError::Name { .. })));
        assert!(matches!(
            parse_scene("point A = (0,0)\nline l = orthocenter A"),
            Err(SceneError::Type { line: 2, .. })
        ));
        assert!(matches!(parse_scene("triangle T = (0,0) (1,0)"), Err(SceneError::Type { .. })));
        assert!(matches!(parse_scene("query nope"), Err(SceneError::Name { .. })));
    }

    #[test]
    fn numbers_and_comments() {
        let doc = parse_scene("# comment\npoint A = (-1/2, 0.25) # trailing\n\n").unwrap();
        assert_eq!(
            doc.stmts[0],
            Stmt::Decl {
                kind: Kind::Point,
                name: "A".into(),
                expr: Expr::Compose(vec![Atom::Tuple(vec![Rational::new((-1).into(), 2.into()), Rational::new(1.into(), 4.into())])]),
            }
        );
        assert!(matches!(parse_scene("point A = (1/0, 0)"), Err(SceneError::Syntax { .. })));
        assert!(matches!(parse_scene("point A = (0,0) $"), Err(SceneError::Syntax { col: 17, .. })));
    }

    #[test]
    fn canonical_text_round_trips() {
        let src = "point A=(0,0);triangle T = A (4, 0) (0,3.5)\nquery orthocenter   T";
        let doc = parse_scene(src).unwrap();
        let text = doc.to_string();
        assert_eq!(text, "point A = (0, 0)\ntriangle T = A (4, 0) (0, 7/2)\nquery orthocenter T\n");
        assert_eq!(parse_scene(&text).unwrap(), doc);
    }
}
