//! Line-oriented problem files.
//!
//! ```text
//! field Q | field Fp <p>
//! ring <name>:<weight> ...
//! module shifts <a1> <a2> ...
//! rel <expr>                  terms carry markers e1..er; a bare term lands in e1
//! ideal <name> = <expr>, <expr>, ...
//! cmd <command> [key=value ...]
//! ```
//!
//! `#` starts a comment. Every error carries a 1-based line and column.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::grmod::ModulePresentation;
use crate::ring::{FieldKind, Polynomial, Ring, RingDescriptor};
use crate::verify::Scope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Hilbert,
    Dim,
    Degree,
    Gsop { seed: Option<u64> },
    Samuel { ideal: String, n_max: Option<u32> },
    Koszul { xs: String },
    Decompose,
    Verify(Scope),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub line: usize,
    /// The command text after `cmd`, whitespace-normalized.
    pub text: String,
    pub kind: CommandKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub ring: Ring,
    pub module: ModulePresentation,
    pub ideals: BTreeMap<String, Vec<Polynomial>>,
    pub commands: Vec<Command>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Whitespace-separated words with their 1-based columns.
fn words(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter().map(|(s, w)| (offset + text[..s].chars().count() + 1, w)).collect()
}

struct Builder {
    field: Option<FieldKind>,
    ring: Option<Ring>,
    shifts: Option<Vec<i64>>,
    relations: Vec<Vec<Polynomial>>,
    ideals: BTreeMap<String, Vec<Polynomial>>,
    commands: Vec<Command>,
    /// Ideal references to resolve once the file is read: (name, line, column).
    references: Vec<(String, usize, usize)>,
}

pub fn parse(text: &str) -> Result<ProblemFile> {
    let mut b = Builder {
        field: None,
        ring: None,
        shifts: None,
        relations: Vec::new(),
        ideals: BTreeMap::new(),
        commands: Vec::new(),
        references: Vec::new(),
    };
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let ws = words(content, 0);
        let Some(&(col, key)) = ws.first() else { continue };
        match key {
            "field" => b.field_line(line, col, &ws[1..])?,
            "ring" => b.ring_line(line, col, &ws[1..])?,
            "module" => b.module_line(line, col, &ws[1..])?,
            "rel" => {
                let start = col - 1 + key.len();
                b.rel_line(line, start, &content.chars().skip(start).collect::<String>())?
            }
            "ideal" => {
                let start = col - 1 + key.len();
                b.ideal_line(line, start, &content.chars().skip(start).collect::<String>())?
            }
            "cmd" => b.cmd_line(line, col, &ws[1..])?,
            other => return Err(err(line, col, format!("unknown key {other:?}"))),
        }
    }
    let ring = b.ring.ok_or_else(|| err(1, 1, "missing ring line"))?;
    for (name, line, column) in &b.references {
        if !b.ideals.contains_key(name) {
            return Err(err(*line, *column, format!("undefined ideal {name:?}")));
        }
    }
    let shifts = b.shifts.unwrap_or_else(|| vec![0]);
    let module = ModulePresentation::new(&ring, shifts, b.relations)?;
    Ok(ProblemFile { ring, module, ideals: b.ideals, commands: b.commands })
}

impl Builder {
    fn ring(&self, line: usize, column: usize) -> Result<Ring> {
        self.ring.clone().ok_or_else(|| err(line, column, "ring must be declared first"))
    }

    fn field_line(&mut self, line: usize, col: usize, args: &[(usize, &str)]) -> Result<()> {
        if self.field.is_some() {
            return Err(err(line, col, "field declared twice"));
        }
        if self.ring.is_some() {
            return Err(err(line, col, "field must precede ring"));
        }
        let field = match args {
            [(_, "Q")] => FieldKind::Rationals,
            [(_, "Fp"), (pc, p)] => {
                let p: u32 = p.parse().map_err(|_| err(line, *pc, format!("bad prime {p:?}")))?;
                FieldKind::prime(p).map_err(|e| err(line, *pc, e.to_string()))?
            }
            [(c, other), ..] => return Err(err(line, *c, format!("unknown field {other:?}"))),
            [] => return Err(err(line, col, "field needs a value")),
        };
        self.field = Some(field);
        Ok(())
    }

    fn ring_line(&mut self, line: usize, col: usize, args: &[(usize, &str)]) -> Result<()> {
        if self.ring.is_some() {
            return Err(err(line, col, "ring declared twice"));
        }
        let mut vars = Vec::new();
        for &(c, w) in args {
            let (name, weight) = w
                .split_once(':')
                .ok_or_else(|| err(line, c, format!("expected name:weight, found {w:?}")))?;
            let weight: u32 = weight
                .parse()
                .map_err(|_| err(line, c + name.len() + 1, format!("bad weight {weight:?}")))?;
            vars.push((name.to_string(), weight));
        }
        let field = self.field.unwrap_or(FieldKind::Rationals);
        self.ring = Some(RingDescriptor::new(field, &vars).map_err(|e| err(line, col, e.to_string()))?);
        Ok(())
    }

    fn module_line(&mut self, line: usize, col: usize, args: &[(usize, &str)]) -> Result<()> {
        self.ring(line, col)?;
        if self.shifts.is_some() {
            return Err(err(line, col, "module declared twice or after a relation"));
        }
        match args.first() {
            Some((_, "shifts")) => {}
            Some((c, other)) => return Err(err(line, *c, format!("unknown module key {other:?}"))),
            None => return Err(err(line, col, "expected `module shifts ...`")),
        }
        let shifts = args[1..]
            .iter()
            .map(|&(c, a)| a.parse::<i64>().map_err(|_| err(line, c, format!("bad shift {a:?}"))))
            .collect::<Result<Vec<_>>>()?;
        self.shifts = Some(shifts);
        Ok(())
    }

    fn rel_line(&mut self, line: usize, offset: usize, text: &str) -> Result<()> {
        let ring = self.ring(line, offset)?;
        let shifts = self.shifts.get_or_insert_with(|| vec![0]).clone();
        if shifts.is_empty() {
            return Err(err(line, offset, "relation on a module with no generators"));
        }
        let mut p = ExprParser::new(&ring, text, line, offset, shifts.len());
        let v = p.parse_all()?;
        let zero = Polynomial::zero(&ring);
        let mut column = vec![zero; shifts.len()];
        for (marker, poly) in v.parts {
            let c = marker.unwrap_or(0);
            column[c] = column[c].add(&poly)?;
        }
        let mut degrees: Vec<i64> = Vec::new();
        for (c, poly) in column.iter().enumerate() {
            for (m, _) in poly.terms() {
                degrees.push(ring.weighted_degree(m) + shifts[c]);
            }
        }
        degrees.sort_unstable();
        if degrees.windows(2).any(|w| w[0] != w[1]) {
            let list: Vec<String> = degrees.iter().map(i64::to_string).collect();
            let lead = text.chars().take_while(|c| c.is_whitespace()).count();
            return Err(err(
                line,
                offset + lead + 1,
                format!("inhomogeneous relation: term degrees {{{}}}", list.join(", ")),
            ));
        }
        self.relations.push(column);
        Ok(())
    }

    fn ideal_line(&mut self, line: usize, offset: usize, text: &str) -> Result<()> {
        let ring = self.ring(line, offset)?;
        let (name_part, body) = text
            .split_once('=')
            .ok_or_else(|| err(line, offset + 1, "expected `ideal <name> = ...`"))?;
        let name = name_part.trim();
        let valid = !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(err(line, offset + 1, format!("bad ideal name {name:?}")));
        }
        if self.ideals.contains_key(name) {
            return Err(err(line, offset + 1, format!("ideal {name:?} defined twice")));
        }
        let mut gens = Vec::new();
        let mut start = offset + name_part.chars().count() + 1;
        if !body.trim().is_empty() {
            for piece in body.split(',') {
                let mut p = ExprParser::new(&ring, piece, line, start, 0);
                let v = p.parse_all()?;
                let poly = v.parts.get(&None).cloned().unwrap_or_else(|| Polynomial::zero(&ring));
                if poly.homogeneity() == crate::ring::Homogeneity::Inhomogeneous {
                    let list: Vec<String> = poly.term_degrees().iter().map(i64::to_string).collect();
                    return Err(err(line, start + 1, format!("inhomogeneous generator: term degrees {{{}}}", list.join(", "))));
                }
                gens.push(poly);
                start += piece.chars().count() + 1;
            }
        }
        self.ideals.insert(name.to_string(), gens);
        Ok(())
    }

    fn cmd_line(&mut self, line: usize, col: usize, args: &[(usize, &str)]) -> Result<()> {
        let Some(&(c0, name)) = args.first() else {
            return Err(err(line, col, "missing command"));
        };
        let mut opts: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
        let mut positional: Vec<(usize, &str)> = Vec::new();
        for &(c, a) in &args[1..] {
            match a.split_once('=') {
                Some((k, v)) => {
                    if opts.insert(k, (c + k.len() + 1, v)).is_some() {
                        return Err(err(line, c, format!("option {k:?} given twice")));
                    }
                }
                None => positional.push((c, a)),
            }
        }
        let allowed: &[&str] = match name {
            "gsop" => &["seed"],
            "samuel" => &["I", "nmax"],
            "koszul" => &["xs"],
            _ => &[],
        };
        for (k, (c, _)) in &opts {
            if !allowed.contains(k) {
                return Err(err(line, c - k.len() - 1, format!("unknown option {k:?} for {name}")));
            }
        }
        if name != "verify" {
            if let Some((c, a)) = positional.first() {
                return Err(err(line, *c, format!("unexpected argument {a:?}")));
            }
        }
        let mut required = |k: &str| -> Result<(usize, String)> {
            let (c, v) = opts.get(k).ok_or_else(|| err(line, c0, format!("{name} needs {k}=...")))?;
            self.references.push((v.to_string(), line, *c));
            Ok((*c, v.to_string()))
        };
        let kind = match name {
            "hilbert" => CommandKind::Hilbert,
            "dim" => CommandKind::Dim,
            "degree" => CommandKind::Degree,
            "decompose" => CommandKind::Decompose,
            "gsop" => CommandKind::Gsop {
                seed: opts
                    .get("seed")
                    .map(|(c, v)| v.parse().map_err(|_| err(line, *c, format!("bad seed {v:?}"))))
                    .transpose()?,
            },
            "samuel" => {
                let (_, ideal) = required("I")?;
                let n_max = opts
                    .get("nmax")
                    .map(|(c, v)| v.parse().map_err(|_| err(line, *c, format!("bad nmax {v:?}"))))
                    .transpose()?;
                CommandKind::Samuel { ideal, n_max }
            }
            "koszul" => CommandKind::Koszul { xs: required("xs")?.1 },
            "verify" => {
                let scope = match positional.as_slice() {
                    [] => Scope::All,
                    [(c, s)] => Scope::parse(s).ok_or_else(|| err(line, *c, format!("unknown verify scope {s:?}")))?,
                    [_, (c, a), ..] => return Err(err(line, *c, format!("unexpected argument {a:?}"))),
                };
                CommandKind::Verify(scope)
            }
            other => return Err(err(line, c0, format!("unknown command {other:?}"))),
        };
        let text = args.iter().map(|(_, a)| *a).collect::<Vec<_>>().join(" ");
        self.commands.push(Command { line, text, kind });
        Ok(())
    }
}

/// A polynomial vector under construction: `None` holds terms without a marker.
#[derive(Clone, Debug)]
struct Vector {
    parts: BTreeMap<Option<usize>, Polynomial>,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

struct ExprParser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    line: usize,
    end_column: usize,
    /// Number of component markers available; 0 forbids markers.
    rank: usize,
}

impl<'a> ExprParser<'a> {
    fn new(ring: &'a Ring, text: &str, line: usize, offset: usize, rank: usize) -> Self {
        let chars: Vec<char> = text.chars().collect();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = offset + i + 1;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                tokens.push((column, Token::Int(s.parse().expect("digits"))));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((column, Token::Ident(chars[start..i].iter().collect())));
            } else {
                tokens.push((column, Token::Sym(c)));
                i += 1;
            }
        }
        ExprParser { ring, tokens, pos: 0, line, end_column: offset + chars.len() + 1, rank }
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_column, |t| t.0)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.column(), message)
    }

    fn peek_sym(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some((_, Token::Sym(c))) => Some(*c),
            _ => None,
        }
    }

    fn parse_all(&mut self) -> Result<Vector> {
        if self.tokens.is_empty() {
            return Err(self.error("expected an expression"));
        }
        let v = self.expr()?;
        if self.pos < self.tokens.len() {
            return Err(self.error("unexpected token"));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<Vector> {
        let mut negate = false;
        if let Some(s @ ('+' | '-')) = self.peek_sym() {
            negate = s == '-';
            self.pos += 1;
        }
        let mut acc = self.term()?;
        if negate {
            acc = self.neg(&acc);
        }
        while let Some(s @ ('+' | '-')) = self.peek_sym() {
            self.pos += 1;
            let t = self.term()?;
            let t = if s == '-' { self.neg(&t) } else { t };
            acc = self.add(acc, t)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Vector> {
        let mut acc = self.factor()?;
        while self.peek_sym() == Some('*') {
            self.pos += 1;
            let col = self.column();
            let f = self.factor()?;
            acc = self.mul(&acc, &f).map_err(|m| err(self.line, col, m))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Vector> {
        let col = self.column();
        let base = self.atom()?;
        if self.peek_sym() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.tokens.get(self.pos) {
            Some((_, Token::Int(n))) => u32::try_from(n).map_err(|_| self.error("exponent too large"))?,
            _ => return Err(self.error("expected a non-negative integer exponent")),
        };
        self.pos += 1;
        let mut acc = self.scalar(BigInt::from(1));
        for _ in 0..e {
            acc = self.mul(&acc, &base).map_err(|m| err(self.line, col, m))?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Vector> {
        let Some((col, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(self.error("unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(self.scalar(n)),
            Token::Ident(name) => {
                if let Some(v) = self.ring.var_index(&name) {
                    return Ok(self.single(None, Polynomial::var(self.ring, v)));
                }
                let marker = name
                    .strip_prefix('e')
                    .and_then(|k| k.parse::<usize>().ok())
                    .filter(|&k| k >= 1 && !name[1..].starts_with('0'));
                match marker {
                    Some(k) if self.rank == 0 => Err(err(self.line, col, format!("component marker e{k} not allowed here"))),
                    Some(k) if k > self.rank => {
                        Err(err(self.line, col, format!("component e{k} exceeds module rank {}", self.rank)))
                    }
                    Some(k) => Ok(self.single(Some(k - 1), Polynomial::one(self.ring))),
                    None => Err(err(self.line, col, format!("unknown variable {name:?}"))),
                }
            }
            Token::Sym('(') => {
                let v = self.expr()?;
                if self.peek_sym() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Token::Sym(c) => Err(err(self.line, col, format!("unexpected {c:?}"))),
        }
    }

    fn single(&self, marker: Option<usize>, p: Polynomial) -> Vector {
        Vector { parts: BTreeMap::from([(marker, p)]) }
    }

    fn scalar(&self, n: BigInt) -> Vector {
        self.single(None, Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)))
    }

    fn neg(&self, v: &Vector) -> Vector {
        Vector { parts: v.parts.iter().map(|(k, p)| (*k, p.neg())).collect() }
    }

    fn add(&self, mut a: Vector, b: Vector) -> Result<Vector> {
        for (k, p) in b.parts {
            let sum = match a.parts.get(&k) {
                Some(q) => q.add(&p)?,
                None => p,
            };
            a.parts.insert(k, sum);
        }
        Ok(a)
    }

    fn mul(&self, a: &Vector, b: &Vector) -> std::result::Result<Vector, String> {
        let mut out = Vector { parts: BTreeMap::new() };
        for (ka, pa) in &a.parts {
            for (kb, pb) in &b.parts {
                let prod = pa.mul(pb).expect("same ring");
                if prod.is_zero() {
                    continue;
                }
                let k = match (ka, kb) {
                    (Some(_), Some(_)) => return Err("product of two component markers".into()),
                    (Some(k), None) | (None, Some(k)) => Some(*k),
                    (None, None) => None,
                };
                let entry = out.parts.entry(k).or_insert_with(|| Polynomial::zero(self.ring));
                *entry = entry.add(&prod).expect("same ring");
            }
        }
        Ok(out)
    }
}

/// Parses a single marker-free polynomial expression.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = ExprParser::new(ring, text, 1, 0, 0);
    let v = p.parse_all()?;
    Ok(v.parts.get(&None).cloned().unwrap_or_else(|| Polynomial::zero(ring)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRUNCATION: &str = "field Q\nring x:1 y:2\nmodule shifts 0\nrel x^2\ncmd degree\n";

    #[test]
    fn minimal_file() {
        let p = parse(TRUNCATION).unwrap();
        assert_eq!(p.ring.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(p.module.relations().len(), 1);
        assert_eq!(p.commands[0].kind, CommandKind::Degree);
    }

    #[test]
    fn default_module_is_the_ring() {
        let p = parse("ring x:1\ncmd dim\n").unwrap();
        assert_eq!(p.module.gen_shifts(), &[0]);
        assert!(p.module.relations().is_empty());
        assert_eq!(p.ring.field(), FieldKind::Rationals);
    }

    #[test]
    fn markers_and_components() {
        let p = parse("ring x:1 y:1\nmodule shifts 0 0\nrel x*e1 - y*e2\nrel 2*(x+y)^2*e2\n").unwrap();
        let r = &p.ring;
        let x = Polynomial::var(r, 0);
        let y = Polynomial::var(r, 1);
        assert_eq!(p.module.relations()[0], vec![x.clone(), y.neg()]);
        let two = Polynomial::constant(r, r.field().from_i64(2));
        let sq = x.add(&y).unwrap().pow(2).mul(&two).unwrap();
        assert_eq!(p.module.relations()[1], vec![Polynomial::zero(r), sq]);
    }

    #[test]
    fn ring_variable_named_like_marker() {
        let p = parse("ring e1:1 x:1\nrel e1*x\n").unwrap();
        assert_eq!(p.module.relations()[0][0].len(), 1);
    }

    #[test]
    fn positioned_errors() {
        let e = parse("ring x:1 y:2\nrel x + y\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse { line: 2, column: 5, message: "inhomogeneous relation: term degrees {1, 2}".into() }
        );
        let e = parse("ring x:1\nrel x + z\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, column: 9, message: "unknown variable \"z\"".into() });
        let e = parse("ring x:1\nfoo bar\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 1, .. }));
        let e = parse("ring x:1\ncmd gsop sed=3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 10, .. }), "{e:?}");
        let e = parse("ring x:1\ncmd samuel I=m\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 14, .. }), "{e:?}");
        let e = parse("ring x:1\nrel x*e2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 7, .. }), "{e:?}");
        let e = parse("ring x:1\nrel e1*e1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
    }

    #[test]
    fn commands_and_ideals() {
        let text = "ring x:1 y:1\nideal m = x, y\nideal g = x+y\n# comment\n\ncmd samuel I=m nmax=5\ncmd koszul xs=g\ncmd gsop seed=9\ncmd verify smoke\ncmd verify\n";
        let p = parse(text).unwrap();
        assert_eq!(p.ideals["m"].len(), 2);
        let kinds: Vec<_> = p.commands.iter().map(|c| c.kind.clone()).collect();
        assert_eq!(
            kinds,
            vec![
                CommandKind::Samuel { ideal: "m".into(), n_max: Some(5) },
                CommandKind::Koszul { xs: "g".into() },
                CommandKind::Gsop { seed: Some(9) },
                CommandKind::Verify(Scope::Smoke),
                CommandKind::Verify(Scope::All),
            ]
        );
        assert_eq!(p.commands[0].text, "samuel I=m nmax=5");
    }

    #[test]
    fn prime_field() {
        let p = parse("field Fp 7\nring x:1\nrel 9*x\n").unwrap();
        assert_eq!(p.ring.field(), FieldKind::Prime(7));
        assert_eq!(p.module.relations()[0][0].terms().next().unwrap().1, &p.ring.field().from_i64(2));
        assert!(parse("field Fp 8\nring x:1\n").is_err());
    }
}
