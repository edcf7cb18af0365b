//! The expression language for words and algebra elements.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := [scalar] factor ('*' factor)*
//! factor  := 'A' '(' expr ')' | '(' expr ')' | atom atom*
//! atom    := name | '[' name ']'
//! scalar  := int ['/' posint] '.'
//! ```
//!
//! `*` is the product `⋄` and groups to the left; `⋄` is not associative, so
//! `x * y * z` means `(x * y) * z`. Juxtaposed atoms (`x [y] z`) denote a
//! word literally, without any product. `A` is reserved for `α`.

use std::fmt;

use homsg_core::algebra::{AlgebraElement, Rational};
use homsg_core::terms::{BracketedLetter, GeneratorId, Word};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A single letter `x` or `[x]`.
    Atom(BracketedLetter),
    /// Two or more juxtaposed atoms.
    Literal(Word),
    /// `A(e)`.
    Alpha(Box<Expr>),
    /// `a * b`.
    Diamond(Box<Expr>, Box<Expr>),
    /// `a + b`.
    Sum(Box<Expr>, Box<Expr>),
    /// `a - b`.
    Difference(Box<Expr>, Box<Expr>),
    /// Leading `-e`.
    Negate(Box<Expr>),
    /// `c . e`.
    Scale(Rational, Box<Expr>),
    /// `(e)`.
    Group(Box<Expr>),
}

/// What a parse error is about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// Nothing but whitespace.
    EmptyInput,
    /// A token that does not fit the grammar here.
    Unexpected {
        /// Description of the offending token.
        found: String,
        /// Tokens that would have been accepted.
        expected: Vec<&'static str>,
    },
    /// `A` used as a generator name.
    ReservedName,
    /// A character that starts no token.
    InvalidCharacter(char),
    /// `p/0`.
    ZeroDenominator,
}

/// A syntax error with its 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    /// 1-based line.
    pub line: usize,
    /// 1-based column in characters.
    pub column: usize,
    /// The problem.
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::EmptyInput => f.write_str("empty word is not an element of H(X)"),
            ParseErrorKind::Unexpected { found, expected } => {
                write!(f, "found {found}, expected ")?;
                if expected.len() > 1 {
                    f.write_str("one of ")?;
                }
                f.write_str(&expected.join(", "))
            }
            ParseErrorKind::ReservedName => {
                f.write_str("`A` is reserved for alpha; name the generator `A_` instead")
            }
            ParseErrorKind::InvalidCharacter(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::ZeroDenominator => f.write_str("zero denominator in scalar"),
        }
    }
}

/// Errors from evaluating an expression.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    /// A sum, difference or scalar appeared where a word was required.
    #[error("{0} is only allowed in algebra mode; use `expand`")]
    AlgebraInWordMode(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Int(BigInt),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Star,
    Plus,
    Minus,
    Dot,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Name(n) => format!("name `{n}`"),
            Tok::Int(i) => format!("integer `{i}`"),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Slash => "`/`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let tok = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '[' | ']' | '(' | ')' | '*' | '+' | '-' | '.' | '/' => {
                bump(&mut chars);
                match c {
                    '[' => Tok::LBracket,
                    ']' => Tok::RBracket,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '.' => Tok::Dot,
                    _ => Tok::Slash,
                }
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    s.push(bump(&mut chars));
                }
                Tok::Int(s.parse().expect("digits"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while chars
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
                {
                    s.push(bump(&mut chars));
                }
                Tok::Name(s)
            }
            other => {
                return Err(ParseError {
                    line: l,
                    column: col,
                    kind: ParseErrorKind::InvalidCharacter(other),
                })
            }
        };
        out.push(Token {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].tok
    }

    fn peek2(&self) -> &Tok {
        &self.tokens[(self.pos + 1).min(self.tokens.len() - 1)].tok
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error_here(&self, kind: ParseErrorKind) -> ParseError {
        let t = &self.tokens[self.pos];
        ParseError {
            line: t.line,
            column: t.column,
            kind,
        }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        self.error_here(ParseErrorKind::Unexpected {
            found: self.peek().describe(),
            expected: expected.to_vec(),
        })
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(&[expected]))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.next();
            Expr::Negate(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.next();
                    acc = Expr::Sum(Box::new(acc), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.next();
                    acc = Expr::Difference(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let scalar = match self.peek() {
            Tok::Int(_) => Some(self.scalar()?),
            _ => None,
        };
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.next();
            acc = Expr::Diamond(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(match scalar {
            Some(c) => Expr::Scale(c, Box::new(acc)),
            None => acc,
        })
    }

    fn scalar(&mut self) -> Result<Rational, ParseError> {
        let Tok::Int(numer) = self.next().tok else {
            unreachable!("caller checked for an integer")
        };
        let mut denom = BigInt::one();
        if *self.peek() == Tok::Slash {
            self.next();
            match self.peek().clone() {
                Tok::Int(d) if d.is_zero() => {
                    return Err(self.error_here(ParseErrorKind::ZeroDenominator))
                }
                Tok::Int(d) => {
                    self.next();
                    denom = d;
                }
                _ => return Err(self.unexpected(&["positive integer"])),
            }
        }
        self.expect(Tok::Dot, "`.` after scalar")?;
        Ok(Rational::new(numer, denom))
    }

    fn name(&mut self) -> Result<GeneratorId, ParseError> {
        match self.peek().clone() {
            Tok::Name(n) if n == "A" => Err(self.error_here(ParseErrorKind::ReservedName)),
            Tok::Name(n) => {
                self.next();
                Ok(GeneratorId::new(&n).expect("lexer only produces valid names"))
            }
            _ => Err(self.unexpected(&["generator name"])),
        }
    }

    fn at_atom(&self) -> bool {
        match self.peek() {
            Tok::LBracket => true,
            Tok::Name(n) => !(n == "A" && *self.peek2() == Tok::LParen),
            _ => false,
        }
    }

    fn atom(&mut self) -> Result<BracketedLetter, ParseError> {
        if *self.peek() == Tok::LBracket {
            self.next();
            let g = self.name()?;
            self.expect(Tok::RBracket, "`]`")?;
            Ok(BracketedLetter::bracketed(g))
        } else {
            Ok(BracketedLetter::plain(self.name()?))
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Tok::Name(n) if n == "A" && *self.peek2() == Tok::LParen => {
                self.next();
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Alpha(Box::new(inner)))
            }
            Tok::LParen => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Group(Box::new(inner)))
            }
            _ if self.at_atom() => {
                let mut letters = vec![self.atom()?];
                while self.at_atom() {
                    letters.push(self.atom()?);
                }
                Ok(if letters.len() == 1 {
                    Expr::Atom(letters.pop().unwrap())
                } else {
                    Expr::Literal(Word::new(letters).expect("nonempty"))
                })
            }
            _ => Err(self.unexpected(&["generator name", "`[`", "`(`", "`A(`"])),
        }
    }
}

/// Parses `input` into an expression tree.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let tokens = lex(input)?;
    if tokens.len() == 1 {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::EmptyInput,
        });
    }
    let mut p = Parser { tokens, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(&["`*`", "`+`", "`-`", "end of input"]));
    }
    Ok(e)
}

impl Expr {
    /// True when the expression has no sums, differences, negations or
    /// scalars, so it denotes a single word.
    pub fn is_word_expression(&self) -> bool {
        match self {
            Expr::Atom(_) | Expr::Literal(_) => true,
            Expr::Alpha(e) | Expr::Group(e) => e.is_word_expression(),
            Expr::Diamond(a, b) => a.is_word_expression() && b.is_word_expression(),
            Expr::Sum(..) | Expr::Difference(..) | Expr::Negate(_) | Expr::Scale(..) => false,
        }
    }

    /// Evaluates in `H(X)` with the recursive product.
    pub fn eval_word(&self) -> Result<Word, EvalError> {
        Ok(match self {
            Expr::Atom(l) => Word::from_letter(l.clone()),
            Expr::Literal(w) => w.clone(),
            Expr::Alpha(e) => e.eval_word()?.alpha(),
            Expr::Group(e) => e.eval_word()?,
            Expr::Diamond(a, b) => a.eval_word()?.diamond(&b.eval_word()?),
            Expr::Sum(..) => return Err(EvalError::AlgebraInWordMode("`+`")),
            Expr::Difference(..) | Expr::Negate(_) => {
                return Err(EvalError::AlgebraInWordMode("`-`"))
            }
            Expr::Scale(..) => return Err(EvalError::AlgebraInWordMode("a scalar")),
        })
    }

    /// Evaluates in the rational span of `H(X)`.
    pub fn eval_algebra(&self) -> AlgebraElement {
        match self {
            Expr::Atom(l) => Word::from_letter(l.clone()).into(),
            Expr::Literal(w) => w.clone().into(),
            Expr::Alpha(e) => e.eval_algebra().alpha(),
            Expr::Group(e) => e.eval_algebra(),
            Expr::Diamond(a, b) => a.eval_algebra().diamond(&b.eval_algebra()),
            Expr::Sum(a, b) => &a.eval_algebra() + &b.eval_algebra(),
            Expr::Difference(a, b) => &a.eval_algebra() - &b.eval_algebra(),
            Expr::Negate(e) => -&e.eval_algebra(),
            Expr::Scale(c, e) => e.eval_algebra().scale(c),
        }
    }

    /// Fully parenthesized rendering: every binary operation and scalar
    /// action is wrapped, so grouping is explicit.
    pub fn echo(&self) -> String {
        match self {
            Expr::Atom(l) => l.to_string(),
            Expr::Literal(w) => w.to_string(),
            Expr::Alpha(e) => format!("A({})", e.echo_inner()),
            Expr::Group(e) => e.echo(),
            Expr::Diamond(a, b) => format!("({} * {})", a.echo(), b.echo()),
            Expr::Sum(a, b) => format!("({} + {})", a.echo(), b.echo()),
            Expr::Difference(a, b) => format!("({} - {})", a.echo(), b.echo()),
            Expr::Negate(e) => format!("(-{})", e.echo()),
            Expr::Scale(c, e) => format!("({c} . {})", e.echo()),
        }
    }

    fn echo_inner(&self) -> String {
        let s = self.echo();
        match self.strip_groups() {
            Expr::Diamond(..) | Expr::Sum(..) | Expr::Difference(..) | Expr::Scale(..) | Expr::Negate(_) => {
                s[1..s.len() - 1].to_string()
            }
            _ => s,
        }
    }

    fn strip_groups(&self) -> &Expr {
        match self {
            Expr::Group(e) => e.strip_groups(),
            e => e,
        }
    }
}
