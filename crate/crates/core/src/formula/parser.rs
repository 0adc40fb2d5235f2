use thiserror::Error;

use super::Formula;

/// Largest exponent accepted by `^k`.
const MAX_POWER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("exponent 0 at offset {pos}: powers start at 1")]
    PowerZero { pos: usize },
}

impl ParseError {
    fn syntax(pos: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            pos,
            message: message.into(),
        }
    }

    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } | ParseError::PowerZero { pos } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Var(String),
    Int(String),
    Arrow,
    MeetOp,
    JoinOp,
    Amp,
    Tilde,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Var(v) => format!("variable `{v}`"),
            Tok::Int(i) => format!("number `{i}`"),
            Tok::Arrow => "`->`".into(),
            Tok::MeetOp => "`/\\`".into(),
            Tok::JoinOp => "`\\/`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'&' => Tok::Amp,
            b'~' => Tok::Tilde,
            b'^' => Tok::Caret,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'/' if bytes.get(i + 1) == Some(&b'\\') => {
                i += 1;
                Tok::MeetOp
            }
            b'\\' if bytes.get(i + 1) == Some(&b'/') => {
                i += 1;
                Tok::JoinOp
            }
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(text[start..=i].to_string())
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                Tok::Var(text[start..=i].to_string())
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::syntax(
                    start,
                    format!("unexpected character `{ch}`"),
                ));
            }
        };
        i += 1;
        toks.push((start, tok));
    }
    toks.push((text.len(), Tok::End));
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::syntax(
            self.pos(),
            format!("expected {wanted}, found {}", self.peek().describe()),
        )
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.junction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn junction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.conjunction()?;
        let op = self.peek().clone();
        if op != Tok::MeetOp && op != Tok::JoinOp {
            return Ok(acc);
        }
        while *self.peek() == Tok::MeetOp || *self.peek() == Tok::JoinOp {
            if *self.peek() != op {
                return Err(ParseError::syntax(
                    self.pos(),
                    "`/\\` and `\\/` cannot be mixed without parentheses",
                ));
            }
            self.bump();
            let rhs = self.conjunction()?;
            acc = if op == Tok::MeetOp {
                Formula::meet(acc, rhs)
            } else {
                Formula::join(acc, rhs)
            };
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            let rhs = self.unary()?;
            acc = Formula::conj(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if *self.peek() == Tok::Tilde {
            self.bump();
            return Ok(Formula::neg(self.unary()?));
        }
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump().1 {
            Tok::Int(digits) => {
                let k: usize =
                    digits
                        .parse()
                        .ok()
                        .filter(|k| *k <= MAX_POWER)
                        .ok_or_else(|| {
                            ParseError::syntax(pos, format!("exponent exceeds {MAX_POWER}"))
                        })?;
                if k == 0 {
                    return Err(ParseError::PowerZero { pos });
                }
                Ok(Formula::power(&base, k))
            }
            other => Err(ParseError::syntax(
                pos,
                format!("expected exponent, found {}", other.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Var(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Tok::Int(digits) => match digits.as_str() {
                "0" => {
                    self.bump();
                    Ok(Formula::Bot)
                }
                "1" => {
                    self.bump();
                    Ok(Formula::top())
                }
                _ => Err(ParseError::syntax(
                    pos,
                    format!("`{digits}` is not a constant; use 0 or 1"),
                )),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.implication()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a formula")),
        }
    }
}

/// Parses the ASCII concrete syntax into a primitive-connective tree.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0 };
    let f = p.implication()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}
