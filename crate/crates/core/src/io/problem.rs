//! Problem files: a ring declaration followed by named ideals, modules and
//! polynomials.
//!
//! ```text
//! # Appell F1(2,-3,-2,5)
//! ring x, y;
//! ideal I = tx*(tx+ty+4) - x*(tx+ty+2)*(tx-3),
//!           ty*(tx+ty+4) - y*(tx+ty+2)*(ty-2),
//!           (x-y)*dx*dy + 2*dx - 3*dy;
//! module N rank 2 = [dx, -1], [0, dy];
//! poly f = x;
//! ```

use std::sync::Arc;

use crate::arith::CommPoly;
use crate::error::{Error, Result};
use crate::gb::ModulePresentation;
use crate::io::parse::{parse_operator_at, to_poly};
use crate::weyl::{WeylElement, WeylRing};

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub ring: Arc<WeylRing>,
    /// Ideals become cyclic presentations; order of appearance is kept.
    pub modules: Vec<(String, ModulePresentation)>,
    pub polys: Vec<(String, CommPoly)>,
}

impl ProblemFile {
    /// The first ideal or module of the file.
    pub fn primary(&self) -> &ModulePresentation {
        &self.modules[0].1
    }

    pub fn module(&self, name: &str) -> Option<&ModulePresentation> {
        self.modules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn poly(&self, name: &str) -> Option<&CommPoly> {
        self.polys.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }
}

/// A character with its 1-based source position.
#[derive(Clone, Copy)]
struct Ch {
    c: char,
    line: usize,
    col: usize,
}

type Span<'a> = &'a [Ch];

fn err<T>(at: Option<&Ch>, end: (usize, usize), msg: impl Into<String>) -> Result<T> {
    let (line, col) = at.map_or(end, |c| (c.line, c.col));
    Err(Error::Parse { line, col, msg: msg.into() })
}

fn text(s: Span) -> String {
    s.iter().map(|c| c.c).collect()
}

fn trim(mut s: Span) -> Span {
    while s.first().is_some_and(|c| c.c.is_whitespace()) {
        s = &s[1..];
    }
    while s.last().is_some_and(|c| c.c.is_whitespace()) {
        s = &s[..s.len() - 1];
    }
    s
}

/// Split at commas outside brackets and parentheses.
fn split_top(s: Span) -> Vec<Span> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.iter().enumerate() {
        match c.c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Leading identifier and the rest.
fn word(s: Span) -> (String, Span) {
    let s = trim(s);
    let n = s.iter().take_while(|c| c.c.is_alphanumeric() || c.c == '_').count();
    (text(&s[..n]), &s[n..])
}

struct Reader {
    end: (usize, usize),
    ring: Option<Arc<WeylRing>>,
    modules: Vec<(String, ModulePresentation)>,
    polys: Vec<(String, CommPoly)>,
}

impl Reader {
    fn ring(&self, at: Span) -> Result<&Arc<WeylRing>> {
        match &self.ring {
            Some(r) => Ok(r),
            None => err(at.first(), self.end, "`ring` must be declared first"),
        }
    }

    fn operator(&self, s: Span) -> Result<WeylElement> {
        let s = trim(s);
        let Some(first) = s.first() else { return err(None, self.end, "empty expression") };
        parse_operator_at(&text(s), self.ring(s)?, first.line, first.col)
    }

    /// `name =` followed by the body.
    fn binding<'a>(&self, s: Span<'a>) -> Result<(String, Span<'a>)> {
        let (name, rest) = word(s);
        if name.is_empty() {
            return err(trim(s).first(), self.end, "expected a name");
        }
        Ok((name, rest))
    }

    fn expect_eq<'a>(&self, s: Span<'a>) -> Result<Span<'a>> {
        let s = trim(s);
        match s.first() {
            Some(c) if c.c == '=' => Ok(&s[1..]),
            other => err(other, self.end, "expected `=`"),
        }
    }

    fn taken(&self, name: &str, at: Span) -> Result<()> {
        if self.modules.iter().any(|(n, _)| n == name) || self.polys.iter().any(|(n, _)| n == name) {
            return err(trim(at).first(), self.end, format!("`{}` is defined twice", name));
        }
        Ok(())
    }

    fn statement(&mut self, s: Span) -> Result<()> {
        let (kw, rest) = word(s);
        match kw.as_str() {
            "ring" => {
                if self.ring.is_some() {
                    return err(trim(s).first(), self.end, "ring declared twice");
                }
                let names: Vec<String> = split_top(rest).into_iter().map(|p| text(trim(p))).collect();
                for (p, n) in split_top(rest).into_iter().zip(&names) {
                    if n.is_empty() || !n.chars().all(|c| c.is_alphanumeric() || c == '_') {
                        return err(trim(p).first().or(rest.first()), self.end, "expected variable names");
                    }
                }
                let ds: Vec<String> = names.iter().map(|x| format!("d{}", x)).collect();
                self.ring = Some(WeylRing::with_names(&names, &ds, false).map_err(|e| match e {
                    Error::Invalid(msg) => Error::Parse { line: s[0].line, col: s[0].col, msg },
                    other => other,
                })?);
            }
            "ideal" => {
                let (name, rest) = self.binding(rest)?;
                self.taken(&name, s)?;
                let body = self.expect_eq(rest)?;
                let gens = split_top(body).into_iter().map(|p| self.operator(p)).collect::<Result<Vec<_>>>()?;
                let ring = self.ring(s)?.clone();
                self.modules.push((name, ModulePresentation::cyclic(&ring, gens)));
            }
            "module" => {
                let (name, rest) = self.binding(rest)?;
                self.taken(&name, s)?;
                let (kw, rest) = word(rest);
                if kw != "rank" {
                    return err(trim(rest).first(), self.end, "expected `rank`");
                }
                let (r, rest) = word(rest);
                let Ok(rank) = r.parse::<usize>() else { return err(trim(rest).first(), self.end, "expected the rank") };
                let body = self.expect_eq(rest)?;
                let mut rows = Vec::new();
                for row in split_top(body) {
                    let row = trim(row);
                    let inner = match (row.first(), row.last()) {
                        (Some(a), Some(b)) if a.c == '[' && b.c == ']' && row.len() >= 2 => &row[1..row.len() - 1],
                        _ => return err(row.first(), self.end, "expected a row `[e_1, …, e_r]`"),
                    };
                    let entries = split_top(inner).into_iter().map(|p| self.operator(p)).collect::<Result<Vec<_>>>()?;
                    if entries.len() != rank {
                        return err(row.first(), self.end, format!("row has {} entries, rank is {}", entries.len(), rank));
                    }
                    rows.push(entries);
                }
                let ring = self.ring(s)?.clone();
                self.modules.push((name, ModulePresentation::new(&ring, rank, rows)?));
            }
            "poly" => {
                let (name, rest) = self.binding(rest)?;
                self.taken(&name, s)?;
                let body = self.expect_eq(rest)?;
                let e = self.operator(body)?;
                let p = to_poly(&e).map_err(|_| {
                    let at = trim(body)[0];
                    Error::Parse { line: at.line, col: at.col, msg: "polynomials may not contain derivations".into() }
                })?;
                self.polys.push((name, p));
            }
            "" => return err(trim(s).first(), self.end, "expected a statement"),
            other => return err(trim(s).first(), self.end, format!("unknown statement `{}`", other)),
        }
        Ok(())
    }
}

pub fn parse_problem(src: &str) -> Result<ProblemFile> {
    let mut chars = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut comment = false;
    for c in src.chars() {
        if c == '\n' {
            comment = false;
        } else if c == '#' {
            comment = true;
        }
        if !comment {
            chars.push(Ch { c, line, col });
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    let mut rd = Reader { end: (line, col), ring: None, modules: Vec::new(), polys: Vec::new() };
    let mut start = 0;
    for i in 0..chars.len() {
        if chars[i].c == ';' {
            rd.statement(&chars[start..i])?;
            start = i + 1;
        }
    }
    let tail = trim(&chars[start..]);
    if !tail.is_empty() {
        return err(tail.first(), rd.end, "statement is missing its `;`");
    }
    let Some(ring) = rd.ring else { return err(None, rd.end, "no `ring` declaration") };
    if rd.modules.is_empty() {
        return err(None, rd.end, "no ideal or module defined");
    }
    Ok(ProblemFile { ring, modules: rd.modules, polys: rd.polys })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::appell_f1_int;

    #[test]
    fn appell_file() {
        let src = "# Appell\nring x, y;\nideal I = tx*(tx+ty+5-1) - x*(tx+ty+2)*(tx-3),\n  ty*(tx+ty+4) - y*(tx+ty+2)*(ty-2), # second\n  (x-y)*dx*dy + 2*dx - 3*dy;\npoly f = x - 1;\nmodule N rank 2 = [dx, -1], [0, dy];\n";
        let p = parse_problem(src).unwrap();
        assert_eq!(p.primary().relations, appell_f1_int(2, -3, -2, 5).relations);
        assert_eq!(p.poly("f").unwrap().to_string(), "x - 1");
        let n = p.module("N").unwrap();
        assert_eq!((n.rank, n.relations.len()), (2, 2));
    }

    #[test]
    fn errors_point_into_the_file() {
        match parse_problem("ring x;\nideal I = dx,\n   q*x;") {
            Err(Error::Parse { line: 3, col: 4, .. }) => {}
            other => panic!("{:?}", other),
        }
        assert!(matches!(parse_problem("ring x;\nideal I = dx"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_problem("ring x;"), Err(Error::Parse { .. })));
        assert!(matches!(parse_problem("ideal I = dx;"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_problem("ring x;\nmodule M rank 2 = [dx];"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_problem("ring x;\nideal I = dx;\npoly f = dx;"), Err(Error::Parse { line: 3, .. })));
    }
}
