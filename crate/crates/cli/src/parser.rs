//! Recursive-descent parser for morphism expressions.
//!
//! ```text
//! sum     := ('+' | '-')? term (('+' | '-') term)*
//! term    := rational? '*'? chain | chain
//! chain   := product ('.' product)*
//! product := factor ('*' factor)*
//! factor  := mu(n) | id(n) | w(n) | zero(q, l) | xi(i, j, sum)
//!          | sin[perm] factor | sout[perm] factor | '(' sum ')'
//! ```
//!
//! `g . f` is `g` after `f`. `*` binds tighter than `.`, which binds tighter
//! than `+`; `.` and `*` chains associate to the left.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use propwheel::Coefficient;

use crate::error::ExprError;
use crate::expr::MorphismExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Dot,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(s) => format!("number {s}"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Slash => "`/`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ExprError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (start_line, start_column) = (line, column);
        let push = |out: &mut Vec<Spanned>, tok| {
            out.push(Spanned {
                tok,
                line: start_line,
                column: start_column,
            })
        };
        if c.is_ascii_digit() || c.is_ascii_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&d) = chars.peek() {
                let continues = if c.is_ascii_digit() {
                    d.is_ascii_digit()
                } else {
                    d.is_ascii_alphanumeric() || d == '_'
                };
                if !continues {
                    break;
                }
                word.push(d);
                chars.next();
                column += 1;
            }
            let tok = if c.is_ascii_digit() {
                Tok::Int(word)
            } else {
                Tok::Ident(word)
            };
            push(&mut out, tok);
            continue;
        }
        chars.next();
        if c == '\n' {
            line += 1;
            column = 1;
            continue;
        }
        column += 1;
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '.' => Tok::Dot,
            '/' => Tok::Slash,
            c if c.is_whitespace() => continue,
            c => {
                return Err(ExprError::Syntax {
                    line: start_line,
                    column: start_column,
                    message: format!("unexpected character {c:?}"),
                })
            }
        };
        push(&mut out, tok);
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, message: String) -> ExprError {
        let s = &self.toks[self.pos];
        ExprError::Syntax {
            line: s.line,
            column: s.column,
            message,
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.error_here(format!(
                "expected {}, found {}",
                tok.describe(),
                self.peek().describe()
            )))
        }
    }

    fn integer(&mut self) -> Result<usize, ExprError> {
        match self.peek().clone() {
            Tok::Int(s) => {
                let v = s
                    .parse()
                    .map_err(|_| self.error_here(format!("integer {s} is too large")))?;
                self.next();
                Ok(v)
            }
            t => Err(self.error_here(format!("expected an integer, found {}", t.describe()))),
        }
    }

    fn chain(&mut self) -> Result<MorphismExpr, ExprError> {
        let mut acc = self.product()?;
        while *self.peek() == Tok::Dot {
            self.next();
            let rhs = self.product()?;
            acc = MorphismExpr::compose(acc, rhs);
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<MorphismExpr, ExprError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Tok::Plus => {
                self.next();
                false
            }
            Tok::Minus => {
                self.next();
                true
            }
            _ => false,
        };
        loop {
            terms.push(self.term(negative)?);
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.next();
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            MorphismExpr::Sum(terms)
        })
    }

    fn term(&mut self, negative: bool) -> Result<MorphismExpr, ExprError> {
        let coefficient = match self.peek() {
            Tok::Int(_) => {
                let c = self.rational()?;
                if *self.peek() == Tok::Star {
                    self.next();
                }
                Some(c)
            }
            _ => None,
        };
        let body = self.chain()?;
        Ok(match (coefficient, negative) {
            (Some(c), false) => MorphismExpr::scale(c, body),
            (Some(c), true) => MorphismExpr::scale(-c, body),
            (None, true) => MorphismExpr::scale(-Coefficient::one(), body),
            (None, false) => body,
        })
    }

    fn rational(&mut self) -> Result<Coefficient, ExprError> {
        let digits = |t: Tok| match t {
            Tok::Int(s) => s,
            _ => unreachable!("checked by the caller"),
        };
        let num: BigInt = digits(self.next()).parse().expect("digits");
        if *self.peek() != Tok::Slash {
            return Ok(Coefficient::from_integer(num));
        }
        self.next();
        let den: BigInt = match self.peek() {
            Tok::Int(_) => digits(self.next()).parse().expect("digits"),
            t => {
                return Err(
                    self.error_here(format!("expected a denominator, found {}", t.describe()))
                )
            }
        };
        if den.is_zero() {
            return Err(self.error_here("zero denominator".into()));
        }
        Ok(Coefficient::new(num, den))
    }

    fn product(&mut self) -> Result<MorphismExpr, ExprError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.next();
            let rhs = self.factor()?;
            acc = MorphismExpr::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MorphismExpr, ExprError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.next();
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.next();
                match name.as_str() {
                    "mu" | "id" | "w" => {
                        self.expect(Tok::LParen)?;
                        let n = self.integer()?;
                        self.expect(Tok::RParen)?;
                        Ok(match name.as_str() {
                            "mu" => MorphismExpr::Mu(n),
                            "id" => MorphismExpr::Id(n),
                            _ => MorphismExpr::Wheel(n),
                        })
                    }
                    "zero" => {
                        self.expect(Tok::LParen)?;
                        let q = self.integer()?;
                        self.expect(Tok::Comma)?;
                        let l = self.integer()?;
                        self.expect(Tok::RParen)?;
                        Ok(MorphismExpr::Zero(q, l))
                    }
                    "xi" => {
                        self.expect(Tok::LParen)?;
                        let i = self.integer()?;
                        self.expect(Tok::Comma)?;
                        let j = self.integer()?;
                        self.expect(Tok::Comma)?;
                        let e = self.sum()?;
                        self.expect(Tok::RParen)?;
                        Ok(MorphismExpr::contract(i, j, e))
                    }
                    "sin" | "sout" => {
                        let cycles = self.permutation()?;
                        let e = self.factor()?;
                        Ok(if name == "sin" {
                            MorphismExpr::act_in(cycles, e)
                        } else {
                            MorphismExpr::act_out(cycles, e)
                        })
                    }
                    _ => {
                        self.pos -= 1;
                        Err(self.error_here(format!(
                            "unknown generator `{name}` (expected mu, id, w, zero, xi, sin or sout)"
                        )))
                    }
                }
            }
            t => Err(self.error_here(format!("expected a factor, found {}", t.describe()))),
        }
    }

    /// `[ (a b c)(d e) ]`; labels may also be separated by commas and `()`
    /// denotes the identity.
    fn permutation(&mut self) -> Result<Vec<Vec<usize>>, ExprError> {
        self.expect(Tok::LBracket)?;
        let mut cycles = Vec::new();
        while *self.peek() == Tok::LParen {
            self.next();
            let mut cycle = Vec::new();
            while *self.peek() != Tok::RParen {
                if !cycle.is_empty() && *self.peek() == Tok::Comma {
                    self.next();
                }
                cycle.push(self.integer()?);
            }
            self.next();
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        self.expect(Tok::RBracket)?;
        Ok(cycles)
    }
}

/// Parses an expression and checks that it has a well-defined biarity.
pub fn parse(text: &str) -> Result<MorphismExpr, ExprError> {
    let e = parse_syntax(text)?;
    e.biarity()?;
    Ok(e)
}

/// Parses without biarity inference.
pub fn parse_syntax(text: &str) -> Result<MorphismExpr, ExprError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.sum()?;
    if *p.peek() != Tok::End {
        return Err(p.error_here(format!(
            "unexpected {} after the expression",
            p.peek().describe()
        )));
    }
    Ok(e)
}
