//! S-expression reader. Lines starting with `#` or `;` are comments;
//! `union` accepts two or more operands and nests them to the left.

use super::{Expr, ExprError, Label};

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Tok<'_>)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim_start();
        if !(trimmed.starts_with('#') || trimmed.starts_with(';')) {
            let bytes = line.as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                match bytes[i] {
                    b'(' => {
                        out.push((offset + i, Tok::Open));
                        i += 1;
                    }
                    b')' => {
                        out.push((offset + i, Tok::Close));
                        i += 1;
                    }
                    c if c.is_ascii_whitespace() => i += 1,
                    _ => {
                        let start = i;
                        while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'(' && bytes[i] != b')' {
                            i += 1;
                        }
                        out.push((offset + start, Tok::Atom(&line[start..i])));
                    }
                }
            }
        }
        offset += line.len();
    }
    out
}

struct Parser<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    at: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> ExprError {
        let pos = self.toks.get(self.at).map_or(self.end, |t| t.0);
        ExprError::Parse {
            pos,
            message: message.into(),
        }
    }

    fn next(&mut self) -> Option<Tok<'a>> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn peek(&self) -> Option<&Tok<'a>> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn label(&mut self) -> Result<Label, ExprError> {
        match self.peek() {
            Some(Tok::Atom(a)) => match a.parse::<Label>() {
                Ok(l) if l > 0 => {
                    self.at += 1;
                    Ok(l)
                }
                _ => Err(self.err(format!("expected a positive label, found '{a}'"))),
            },
            _ => Err(self.err("expected a label")),
        }
    }

    fn close(&mut self) -> Result<(), ExprError> {
        match self.peek() {
            Some(Tok::Close) => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.err("expected ')'")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        if self.peek() != Some(&Tok::Open) {
            return Err(self.err("expected '('"));
        }
        self.at += 1;
        let op = match self.next() {
            Some(Tok::Atom(a)) => a,
            _ => {
                self.at -= 1;
                return Err(self.err("expected an operation name"));
            }
        };
        let e = match op {
            "intro" => Expr::Intro(self.label()?),
            "union" => {
                let mut e = self.expr()?;
                let mut parts = 1;
                while self.peek() == Some(&Tok::Open) {
                    e = e.union(self.expr()?);
                    parts += 1;
                }
                if parts < 2 {
                    return Err(self.err("union needs at least two operands"));
                }
                e
            }
            "edge" | "arc" | "relabel" => {
                let i = self.label()?;
                let j = self.label()?;
                let s = Box::new(self.expr()?);
                match op {
                    "edge" => Expr::Edge(i, j, s),
                    "arc" => Expr::Arc(i, j, s),
                    _ => Expr::Relabel(i, j, s),
                }
            }
            other => {
                self.at -= 1;
                return Err(self.err(format!("unknown operation '{other}'")));
            }
        };
        self.close()?;
        Ok(e)
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser {
        toks: tokenize(text),
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_text() {
        let text = "# path\n(arc 1 2\n  (union (intro 1) (intro 2)))\n";
        assert_eq!(parse_expr(text).unwrap(), Expr::intro(1).union(Expr::intro(2)).arc(1, 2));
    }

    #[test]
    fn nary_union_nests_left() {
        let e = parse_expr("(union (intro 1) (intro 2) (intro 3))").unwrap();
        assert_eq!(e, Expr::intro(1).union(Expr::intro(2)).union(Expr::intro(3)));
    }

    #[test]
    fn reports_positions() {
        let err = parse_expr("(intro 0)").unwrap_err();
        assert_eq!(
            err,
            ExprError::Parse {
                pos: 7,
                message: "expected a positive label, found '0'".into()
            }
        );
        assert!(matches!(parse_expr("(union (intro 1))"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_expr("(intro 1) (intro 2)"), Err(ExprError::Parse { .. })));
        assert!(matches!(parse_expr("(fold 1)"), Err(ExprError::Parse { pos: 1, .. })));
        assert!(matches!(parse_expr("(intro 1"), Err(ExprError::Parse { pos: 8, .. })));
    }
}
