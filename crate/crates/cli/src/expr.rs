//! Representation expressions.
//!
//! ```text
//! rep    := term ( "(+)" term )*
//! term   := factor ( "(x)" factor )*
//! factor := atom ( "^" INT )?
//! atom   := "fund" | "V(" INT ")" | "word(" [uU]* ")" | "g(" INT ("," INT)* ")"
//!         | "conj(" rep ")" | "(" rep ")"
//! ```
//!
//! `⊕` and `⊗` are accepted for `(+)` and `(x)`, `ū` for `U`.

use std::fmt;

use qdim_core::fusion::{reduce_free, Catalog, Decomposition, FusionRing, GroupKind, IrrepLabel, Letter};
use thiserror::Error;

use crate::error::CliError;

/// Largest exponent accepted by `^`.
pub const MAX_POWER: u32 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepExpr {
    Fund,
    Label(IrrepLabel),
    Sum(Box<RepExpr>, Box<RepExpr>),
    Tensor(Box<RepExpr>, Box<RepExpr>),
    Power(Box<RepExpr>, u32),
    Conj(Box<RepExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: expected {}, found {found}", .expected.join(" | "))]
    Syntax { offset: usize, expected: Vec<&'static str>, found: String },

    #[error("{atom} at byte {offset} is not available for kind \"{kind}\"; {hint}")]
    Catalog { offset: usize, atom: String, kind: &'static str, hint: &'static str },

    #[error("at byte {offset}: {message}")]
    Invalid { offset: usize, message: String },
}

pub fn kind_name(catalog: Catalog) -> &'static str {
    match catalog {
        Catalog::TemperleyLieb { .. } => "ao",
        Catalog::FreeUnitary { .. } => "au",
        Catalog::GroupDual(_) => "group_dual",
    }
}

fn hint(catalog: Catalog) -> &'static str {
    match catalog {
        Catalog::TemperleyLieb { .. } => "use fund or V(r)",
        Catalog::FreeUnitary { .. } => "use fund or word(...) over u and U",
        Catalog::GroupDual(GroupKind::FreeAbelian { .. }) => "use fund or g(a1,...,ak) with one entry per generator",
        Catalog::GroupDual(GroupKind::Free { .. }) => "use fund or g(...) with signed generator indices",
    }
}

pub fn parse_rep(src: &str, catalog: Catalog) -> Result<RepExpr, ExprError> {
    let mut p = Parser { src, pos: 0, catalog };
    let expr = p.rep()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.syntax(&["(+)", "(x)", "^", "end of input"]));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    catalog: Catalog,
}

const ATOMS: &[&str] = &["fund", "V(", "word(", "g(", "conj(", "("];

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn eat_any(&mut self, tokens: &[&str]) -> bool {
        tokens.iter().any(|t| self.eat(t))
    }

    fn syntax(&self, expected: &[&'static str]) -> ExprError {
        let found = match self.rest().chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        ExprError::Syntax { offset: self.pos, expected: expected.to_vec(), found }
    }

    fn expect(&mut self, token: &'static str) -> Result<(), ExprError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.syntax(&[token]))
        }
    }

    fn rep(&mut self) -> Result<RepExpr, ExprError> {
        let mut lhs = self.term()?;
        while self.eat_any(&["(+)", "⊕"]) {
            lhs = RepExpr::Sum(Box::new(lhs), Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<RepExpr, ExprError> {
        let mut lhs = self.factor()?;
        while self.eat_any(&["(x)", "⊗"]) {
            lhs = RepExpr::Tensor(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<RepExpr, ExprError> {
        let atom = self.atom()?;
        if !self.eat("^") {
            return Ok(atom);
        }
        self.skip_ws();
        let offset = self.pos;
        let n = self.uint()?;
        if n > MAX_POWER {
            return Err(ExprError::Invalid { offset, message: format!("exponent {n} exceeds {MAX_POWER}") });
        }
        Ok(RepExpr::Power(Box::new(atom), n))
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let rest = self.rest();
        let boundary = rest[word.len().min(rest.len())..]
            .chars()
            .next()
            .map_or(true, |c| !c.is_alphanumeric() && c != '_');
        if rest.starts_with(word) && boundary {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn atom(&mut self) -> Result<RepExpr, ExprError> {
        self.skip_ws();
        let start = self.pos;
        if self.keyword("fund") {
            return Ok(RepExpr::Fund);
        }
        if self.keyword("conj") {
            self.expect("(")?;
            let inner = self.rep()?;
            self.expect(")")?;
            return Ok(RepExpr::Conj(Box::new(inner)));
        }
        if self.keyword("V") {
            self.expect("(")?;
            self.skip_ws();
            let r = self.uint()?;
            self.expect(")")?;
            return self.bind(start, IrrepLabel::Tl(r));
        }
        if self.keyword("word") {
            self.expect("(")?;
            self.skip_ws();
            let mut letters = Vec::new();
            loop {
                match self.rest().chars().next() {
                    Some('u') => letters.push(Letter::U),
                    Some(c @ ('U' | 'ū')) => {
                        letters.push(Letter::UBar);
                        self.pos += c.len_utf8() - 1;
                    }
                    _ => break,
                }
                self.pos += 1;
            }
            if !self.eat(")") {
                return Err(self.syntax(&["u", "U", ")"]));
            }
            return self.bind(start, IrrepLabel::Word(letters));
        }
        if self.keyword("g") {
            self.expect("(")?;
            let mut entries = vec![self.int()?];
            while self.eat(",") {
                entries.push(self.int()?);
            }
            if !self.eat(")") {
                return Err(self.syntax(&[",", ")"]));
            }
            return self.group_label(start, entries);
        }
        if self.rest().starts_with("(x)") || self.rest().starts_with("(+)") {
            return Err(self.syntax(ATOMS));
        }
        if self.eat("(") {
            let inner = self.rep()?;
            if !self.eat(")") {
                return Err(self.syntax(&["(+)", "(x)", "^", ")"]));
            }
            return Ok(inner);
        }
        Err(self.syntax(ATOMS))
    }

    fn digits(&mut self) -> Result<&str, ExprError> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.syntax(&["INT"]));
        }
        let digits = &self.src[self.pos..self.pos + len];
        self.pos += len;
        Ok(digits)
    }

    fn uint(&mut self) -> Result<u32, ExprError> {
        let offset = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| ExprError::Invalid { offset, message: "integer out of range".into() })
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let offset = self.pos;
        let negative = self.rest().starts_with('-');
        if negative {
            self.pos += 1;
        }
        let magnitude: i64 = self
            .digits()?
            .parse()
            .map_err(|_| ExprError::Invalid { offset, message: "integer out of range".into() })?;
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn mismatch(&self, offset: usize, label: &IrrepLabel) -> ExprError {
        let atom = match label {
            IrrepLabel::Tl(_) | IrrepLabel::Word(_) => label.to_string(),
            _ => self.src[offset..self.pos].trim().to_string(),
        };
        ExprError::Catalog { offset, atom, kind: kind_name(self.catalog), hint: hint(self.catalog) }
    }

    fn bind(&self, offset: usize, label: IrrepLabel) -> Result<RepExpr, ExprError> {
        let ok = matches!(
            (&label, self.catalog),
            (IrrepLabel::Tl(_), Catalog::TemperleyLieb { .. }) | (IrrepLabel::Word(_), Catalog::FreeUnitary { .. })
        );
        if ok {
            Ok(RepExpr::Label(label))
        } else {
            Err(self.mismatch(offset, &label))
        }
    }

    fn group_label(&self, offset: usize, entries: Vec<i64>) -> Result<RepExpr, ExprError> {
        let invalid = |message: String| ExprError::Invalid { offset, message };
        match self.catalog {
            Catalog::GroupDual(GroupKind::FreeAbelian { rank }) => {
                if entries.len() != rank {
                    return Err(invalid(format!("g(...) needs {rank} entries, got {}", entries.len())));
                }
                Ok(RepExpr::Label(IrrepLabel::Abelian(entries)))
            }
            Catalog::GroupDual(GroupKind::Free { rank }) => {
                if entries == [0] {
                    return Ok(RepExpr::Label(IrrepLabel::Free(Vec::new())));
                }
                if let Some(g) = entries.iter().find(|g| **g == 0 || g.unsigned_abs() > rank as u64) {
                    return Err(invalid(format!("generator index {g} is outside ±1..±{rank}")));
                }
                Ok(RepExpr::Label(IrrepLabel::Free(reduce_free(&entries))))
            }
            _ => Err(self.mismatch(offset, &IrrepLabel::Free(entries))),
        }
    }
}

impl RepExpr {
    // 0: rep, 1: term, 2: factor, 3: atom
    fn level(&self) -> u8 {
        match self {
            RepExpr::Sum(..) => 0,
            RepExpr::Tensor(..) => 1,
            RepExpr::Power(..) => 2,
            _ => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min_level: u8) -> fmt::Result {
        if self.level() < min_level {
            f.write_str("(")?;
            self.write_at(f, 0)?;
            return f.write_str(")");
        }
        match self {
            RepExpr::Fund => f.write_str("fund"),
            RepExpr::Label(label) => write!(f, "{label}"),
            RepExpr::Sum(l, r) => {
                l.write_at(f, 0)?;
                f.write_str(" (+) ")?;
                r.write_at(f, 1)
            }
            RepExpr::Tensor(l, r) => {
                l.write_at(f, 1)?;
                f.write_str(" (x) ")?;
                r.write_at(f, 2)
            }
            RepExpr::Power(base, n) => {
                base.write_at(f, 3)?;
                write!(f, "^{n}")
            }
            RepExpr::Conj(inner) => {
                f.write_str("conj(")?;
                inner.write_at(f, 0)?;
                f.write_str(")")
            }
        }
    }

    pub fn evaluate(&self, ring: &FusionRing) -> Result<Decomposition, CliError> {
        Ok(match self {
            RepExpr::Fund => ring.fundamental(),
            RepExpr::Label(label) => {
                ring.check(label)?;
                Decomposition::single(label.clone())
            }
            RepExpr::Sum(l, r) => {
                let mut out = l.evaluate(ring)?;
                out.merge(&r.evaluate(ring)?)?;
                out
            }
            RepExpr::Tensor(l, r) => ring.fuse_decompositions(&l.evaluate(ring)?, &r.evaluate(ring)?)?,
            RepExpr::Power(base, n) => {
                let base = base.evaluate(ring)?;
                let mut out = Decomposition::single(ring.trivial());
                for _ in 0..*n {
                    out = ring.fuse_decompositions(&out, &base)?;
                }
                out
            }
            RepExpr::Conj(inner) => ring.conjugate_decomposition(&inner.evaluate(ring)?)?,
        })
    }
}

impl fmt::Display for RepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}
