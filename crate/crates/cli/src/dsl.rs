//! Graph expressions accepted on the command line.
//!
//! ```text
//! graph  := family ':' ints
//!         | 'mseq:' ints | 'area:' ints
//!         | ('glue' | 'union') ':(' graph ',' graph ')'
//! family := complete | path | lollipop | melting | kdel
//! ints   := int (',' int)*
//! ```

use std::fmt;

use chromllt::chromaticq::{
    x_complete, x_join_complete_complete, x_join_complete_lollipop, x_lollipop, x_melting_lollipop, x_path,
};
use chromllt::symfunc::{multiply, SymExpansion};
use chromllt::unigraphs::UnitIntervalGraph;

/// Syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parsed graph expression, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(usize),
    Path(usize),
    Lollipop(usize, usize),
    Melting(usize, usize, usize),
    CompleteDeleted(usize, usize),
    MSeq(Vec<usize>),
    Area(Vec<usize>),
    Glue(Box<GraphExpr>, Box<GraphExpr>),
    Union(Box<GraphExpr>, Box<GraphExpr>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: at, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(x) => self.err(self.pos, format!("expected '{c}', found '{x}'")),
            None => self.err(self.pos, format!("expected '{c}', found end of input")),
        }
    }

    fn word(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.peek() {
                Some(c) => self.err(start, format!("expected a number, found '{c}'")),
                None => self.err(start, "expected a number, found end of input"),
            };
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| ParseError { position: start, message: "number too large".into() })
    }

    /// Comma-separated integers; a comma not followed by a digit is left
    /// for the enclosing expression.
    fn ints(&mut self) -> Result<Vec<usize>, ParseError> {
        let mut out = vec![self.int()?];
        while self.peek() == Some(',') && self.src[self.pos + 1..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn args<const N: usize>(&mut self, name: &str) -> Result<[usize; N], ParseError> {
        let at = self.pos;
        let v = self.ints()?;
        v.as_slice().try_into().or_else(|_| self.err(at, format!("{name} takes {N} argument(s), got {}", v.len())))
    }

    fn graph(&mut self) -> Result<GraphExpr, ParseError> {
        let at = self.pos;
        let name = self.word();
        if name.is_empty() {
            return match self.peek() {
                Some(c) => self.err(at, format!("expected a graph family, found '{c}'")),
                None => self.err(at, "expected a graph family, found end of input"),
            };
        }
        self.expect(':')?;
        Ok(match name {
            "complete" => GraphExpr::Complete(self.args::<1>(name)?[0]),
            "path" => GraphExpr::Path(self.args::<1>(name)?[0]),
            "lollipop" => {
                let [m, n] = self.args(name)?;
                GraphExpr::Lollipop(m, n)
            }
            "melting" => {
                let [m, n, k] = self.args(name)?;
                GraphExpr::Melting(m, n, k)
            }
            "kdel" => {
                let [n, k] = self.args(name)?;
                GraphExpr::CompleteDeleted(n, k)
            }
            "mseq" => {
                if self.peek().is_none() || self.peek() == Some(',') || self.peek() == Some(')') {
                    GraphExpr::MSeq(Vec::new())
                } else {
                    GraphExpr::MSeq(self.ints()?)
                }
            }
            "area" => GraphExpr::Area(self.ints()?),
            "glue" | "union" => {
                self.expect('(')?;
                let a = self.graph()?;
                self.expect(',')?;
                let b = self.graph()?;
                self.expect(')')?;
                if name == "glue" {
                    GraphExpr::Glue(Box::new(a), Box::new(b))
                } else {
                    GraphExpr::Union(Box::new(a), Box::new(b))
                }
            }
            other => return self.err(at, format!("unknown graph family '{other}'")),
        })
    }
}

/// Parses a graph expression; the whole input must be consumed.
pub fn parse_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let g = p.graph()?;
    if p.pos != text.len() {
        return p.err(p.pos, format!("unexpected trailing input '{}'", &text[p.pos..]));
    }
    Ok(g)
}

/// Either a syntax error or a graph the library rejects.
#[derive(Debug)]
pub enum DslError {
    Parse(ParseError),
    Graph(chromllt::Error),
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DslError::Parse(e) => e.fmt(f),
            DslError::Graph(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for DslError {}

impl From<ParseError> for DslError {
    fn from(e: ParseError) -> Self {
        DslError::Parse(e)
    }
}

impl From<chromllt::Error> for DslError {
    fn from(e: chromllt::Error) -> Self {
        DslError::Graph(e)
    }
}

impl GraphExpr {
    pub fn to_graph(&self) -> chromllt::Result<UnitIntervalGraph> {
        use GraphExpr::*;
        match self {
            Complete(n) => Ok(UnitIntervalGraph::complete(*n)),
            Path(n) => Ok(UnitIntervalGraph::path(*n)),
            Lollipop(m, n) => UnitIntervalGraph::lollipop(*m, *n),
            Melting(m, n, k) => UnitIntervalGraph::melting_lollipop(*m, *n, *k),
            CompleteDeleted(n, k) => UnitIntervalGraph::complete_deleted(*n, *k),
            MSeq(m) => UnitIntervalGraph::from_mseq(m.clone()),
            Area(a) => UnitIntervalGraph::from_area(a),
            Glue(a, b) => UnitIntervalGraph::glue_sum(&a.to_graph()?, &b.to_graph()?),
            Union(a, b) => Ok(UnitIntervalGraph::disjoint_union(&a.to_graph()?, &b.to_graph()?)),
        }
    }

    /// Closed-form e-expansion of `X_G` when the expression names a family
    /// that has one (products of such for unions).
    pub fn closed_form(&self) -> Option<chromllt::Result<SymExpansion>> {
        use GraphExpr::*;
        match self {
            Complete(n) => Some(Ok(x_complete(*n))),
            Path(n) => Some(Ok(x_path(*n))),
            Lollipop(0, n) => Some(Ok(x_path(*n))),
            Lollipop(m, n) => Some(x_lollipop(*m, *n)),
            Melting(m, n, k) => Some(x_melting_lollipop(*m, *n, *k)),
            CompleteDeleted(n, k) if *n >= 2 => Some(x_melting_lollipop(*n, 0, *k)),
            Glue(a, b) => match (a.as_ref(), b.as_ref()) {
                (Complete(r), Complete(s)) if *r >= 1 && *s >= 2 => Some(x_join_complete_complete(*r, r + s - 1)),
                (Complete(r), Lollipop(m, n)) if *m >= 3 && *r >= 1 && r <= m => Some(x_join_complete_lollipop(*r, *m, *n)),
                _ => None,
            },
            Union(a, b) => {
                let fa = a.closed_form()?;
                let fb = b.closed_form()?;
                Some(fa.and_then(|fa| fb.and_then(|fb| multiply(&fa, &fb))))
            }
            _ => None,
        }
    }
}

/// Parses and validates a graph expression.
pub fn parse_graph_dsl(text: &str) -> Result<UnitIntervalGraph, DslError> {
    Ok(parse_expr(text)?.to_graph()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_graph_dsl("melting:6,5,2").unwrap().mseq(), &[2, 3, 4, 5, 6, 9, 11, 11, 11, 11]);
        assert_eq!(parse_graph_dsl("mseq:2,3").unwrap(), UnitIntervalGraph::path(3));
        assert_eq!(parse_graph_dsl("area:3,3,2,1,0").unwrap().area(), vec![3, 3, 2, 1, 0]);
        assert_eq!(parse_graph_dsl("kdel:7,3").unwrap(), UnitIntervalGraph::complete_deleted(7, 3).unwrap());
        assert_eq!(parse_graph_dsl("mseq:").unwrap().n(), 1);
        let g = parse_graph_dsl("glue:(complete:3,lollipop:4,2)").unwrap();
        assert_eq!(g.n(), 3 + 6 - 1);
        let u = parse_graph_dsl("union:(path:3,complete:2)").unwrap();
        assert_eq!(u.area(), vec![1, 1, 0, 1, 0]);
        let nested = parse_graph_dsl("union:(glue:(complete:2,complete:3),mseq:2)").unwrap();
        assert_eq!(nested.n(), 6);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_graph_dsl("lollipop:1,1"), Err(DslError::Graph(chromllt::Error::RangeViolation(_)))));
        assert_eq!(parse_expr("star:3").unwrap_err().position, 0);
        assert_eq!(parse_expr("complete:x").unwrap_err().position, 9);
        assert_eq!(parse_expr("complete:3x").unwrap_err().position, 10);
        assert_eq!(parse_expr("glue:(complete:3;path:2)").unwrap_err().position, 16);
        assert_eq!(parse_expr("lollipop:3").unwrap_err().position, 9);
        assert!(matches!(parse_graph_dsl("mseq:3,2"), Err(DslError::Graph(chromllt::Error::InvalidMSeq { .. }))));
    }

    #[test]
    fn closed_forms_available() {
        assert!(parse_expr("glue:(complete:3,lollipop:4,2)").unwrap().closed_form().is_some());
        assert!(parse_expr("union:(path:3,complete:2)").unwrap().closed_form().is_some());
        assert!(parse_expr("mseq:2,3").unwrap().closed_form().is_none());
    }
}
