//! Text syntax for scalars, algebra elements, elements of P and elements of
//! the free algebra.
//!
//! ```text
//! expr    := ('+' | '-')? term (('+' | '-') term)*
//! term    := factor ('*'? factor)*            juxtaposition multiplies
//! factor  := primary ('^' int | '^' '*')*     '^*' is the star operation
//! primary := int ('/' int)? | 'q' | 'h' | 'a' | 'a*' | 'c' | 'c*'
//!          | '(' expr ')' | '[' ('adj:' | 'p:')? expr ']'
//! ```
//!
//! `a*` and `c*` are single tokens only when the `*` touches the letter, so
//! `a*c` is `a* c` while `a * c` is `a c`. Brackets build free-algebra
//! generators and are rejected in algebra and scalar input; `p:` additionally
//! requires the payload to lie in P. Negative exponents are accepted on
//! invertible scalars only. The canonical printers (the `Display` impls of
//! [`Scalar`], [`AlgebraElement`], [`PElement`] and [`FreeElement`]) emit
//! text this parser reads back to the same value.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{AlgebraElement, Generator};
use crate::ccr::{FreeElement, FreeGenerator, GeneratorKind};
use crate::plane::{PElement, PMonomial};
use crate::scalar::{Scalar, ScalarError};

/// Largest accepted exponent magnitude.
pub const MAX_EXPONENT: i64 = 4096;
const MAX_DEPTH: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {kind}")]
pub struct ExprError {
    pub offset: usize,
    pub kind: ExprErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ExprErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("exponent is larger than {MAX_EXPONENT} in magnitude")]
    ExponentTooLarge,
    #[error("expression is nested too deeply")]
    TooDeep,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("negative power of a non-invertible expression")]
    NotInvertible,
    #[error("generators are not allowed in a scalar")]
    GeneratorInScalar,
    #[error("free-algebra generators `[...]` are not allowed here")]
    BracketOutsideFree,
    #[error("bare generator in a free-algebra expression (write it in brackets, e.g. `[a]`)")]
    BareGenerator,
    #[error("the star operation applies only to algebra expressions")]
    StarInFreeExpr,
    #[error("expression is not in P: {0}")]
    NotInP(String),
    #[error("expected a single monomial a^i c^j, got {0}")]
    NotAMonomial(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error(transparent)]
    Scalar(ScalarError),
}

fn err<T>(offset: usize, kind: ExprErrorKind) -> Result<T, ExprError> {
    Err(ExprError { offset, kind })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Scalar(Scalar),
    Gen(Generator),
    /// Exponent is never zero; `x^0` parses to the literal `1`.
    Pow { base: Box<Ast>, exp: i64, at: usize },
    Mul(Vec<Ast>),
    Add(Vec<Ast>),
    Neg(Box<Ast>),
    Star { inner: Box<Ast>, at: usize },
    FreeGen { kind: GeneratorKind, require_p: bool, body: Box<Ast>, at: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Slash,
    Q,
    H,
    Gen(Generator),
    Star,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
    Open { kind: GeneratorKind, require_p: bool },
    RBracket,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{}`", n),
            Tok::Slash => f.write_str("`/`"),
            Tok::Q => f.write_str("`q`"),
            Tok::H => f.write_str("`h`"),
            Tok::Gen(g) => write!(f, "`{}`", g.symbol()),
            Tok::Star => f.write_str("`*`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Open { .. } => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let start = pos;
        let b = bytes[pos];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = text[start..pos].parse().map_err(|_| ExprError {
                    offset: start,
                    kind: ExprErrorKind::UnexpectedChar(b as char),
                })?;
                out.push((Tok::Int(n), start));
                continue;
            }
            b'a' | b'c' => {
                let starred = bytes.get(pos + 1) == Some(&b'*');
                pos += if starred { 2 } else { 1 };
                let g = match (b, starred) {
                    (b'a', false) => Generator::A,
                    (b'a', true) => Generator::AStar,
                    (_, false) => Generator::C,
                    (_, true) => Generator::CStar,
                };
                out.push((Tok::Gen(g), start));
                continue;
            }
            b'[' => {
                let rest = &text[pos + 1..];
                let (kind, require_p, skip) = if rest.starts_with("adj:") {
                    (GeneratorKind::Adjoint, false, 5)
                } else if rest.starts_with("p:") {
                    (GeneratorKind::Symbol, true, 3)
                } else {
                    (GeneratorKind::Symbol, false, 1)
                };
                pos += skip;
                out.push((Tok::Open { kind, require_p }, start));
                continue;
            }
            b'/' => Tok::Slash,
            b'q' => Tok::Q,
            b'h' => Tok::H,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b']' => Tok::RBracket,
            _ => {
                let c = text[start..].chars().next().unwrap_or('?');
                return err(start, ExprErrorKind::UnexpectedChar(c));
            }
        };
        pos += 1;
        out.push((tok, start));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, o)| *o)
    }

    fn unexpected<T>(&self, expected: &'static str) -> Result<T, ExprError> {
        let found = match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".into(),
        };
        err(self.offset(), ExprErrorKind::Unexpected { expected, found })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Ast, ExprError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return err(self.offset(), ExprErrorKind::TooDeep);
        }
        let mut terms = Vec::new();
        let negate = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let first = self.term()?;
        terms.push(if negate { Ast::Neg(Box::new(first)) } else { first });
        loop {
            if self.eat(&Tok::Plus) {
                terms.push(self.term()?);
            } else if self.eat(&Tok::Minus) {
                terms.push(Ast::Neg(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(if terms.len() == 1 { terms.pop().unwrap_or(Ast::Add(Vec::new())) } else { Ast::Add(terms) })
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Q | Tok::H | Tok::Gen(_) | Tok::LParen | Tok::Open { .. })
        )
    }

    fn term(&mut self) -> Result<Ast, ExprError> {
        let mut factors = alloc::vec![self.factor()?];
        loop {
            if self.eat(&Tok::Star) || self.starts_factor() {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap_or(Ast::Mul(Vec::new())) } else { Ast::Mul(factors) })
    }

    fn factor(&mut self) -> Result<Ast, ExprError> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Tok::Caret) {
            let at = self.offset();
            self.pos += 1;
            if self.eat(&Tok::Star) {
                base = Ast::Star { inner: Box::new(base), at };
                continue;
            }
            let negative = self.eat(&Tok::Minus);
            let exp_at = self.offset();
            let Some(Tok::Int(n)) = self.peek().cloned() else {
                return self.unexpected("an integer exponent or `*`");
            };
            self.pos += 1;
            let n = match n.to_i64() {
                Some(n) if n <= MAX_EXPONENT => n,
                _ => return err(exp_at, ExprErrorKind::ExponentTooLarge),
            };
            let exp = if negative { -n } else { n };
            base = if exp == 0 {
                Ast::Scalar(Scalar::one())
            } else {
                Ast::Pow { base: Box::new(base), exp, at }
            };
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Ast, ExprError> {
        let at = self.offset();
        let Some(tok) = self.peek().cloned() else {
            return self.unexpected("a factor");
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => {
                let mut r = BigRational::from_integer(n);
                if self.eat(&Tok::Slash) {
                    let den_at = self.offset();
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return self.unexpected("an integer denominator");
                    };
                    self.pos += 1;
                    if d.is_zero() {
                        return err(den_at, ExprErrorKind::ZeroDenominator);
                    }
                    r /= BigRational::from_integer(d);
                }
                Ok(Ast::Scalar(Scalar::from_rational(r)))
            }
            Tok::Q => Ok(Ast::Scalar(Scalar::q_pow(1))),
            Tok::H => Ok(Ast::Scalar(Scalar::h_pow(1))),
            Tok::Gen(g) => Ok(Ast::Gen(g)),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.unexpected("`)`");
                }
                Ok(inner)
            }
            Tok::Open { kind, require_p } => {
                let body = self.expr()?;
                if !self.eat(&Tok::RBracket) {
                    return self.unexpected("`]`");
                }
                Ok(Ast::FreeGen { kind, require_p, body: Box::new(body), at })
            }
            _ => {
                self.pos -= 1;
                self.unexpected("a factor")
            }
        }
    }
}

/// Parses text into an untyped syntax tree.
pub fn parse(text: &str) -> Result<Ast, ExprError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, end: text.len(), depth: 0 };
    let ast = p.expr()?;
    if p.pos != p.toks.len() {
        return p.unexpected("an operator or end of input");
    }
    Ok(ast)
}

fn scalar_pow(s: &Scalar, exp: i64, at: usize) -> Result<Scalar, ExprError> {
    s.pow(exp).map_err(|e| ExprError {
        offset: at,
        kind: match e {
            ScalarError::NotInvertible(_) | ScalarError::DivisionByZero => ExprErrorKind::NotInvertible,
            other => ExprErrorKind::Scalar(other),
        },
    })
}

fn lower_algebra_in(ast: &Ast, scalar_only: bool) -> Result<AlgebraElement, ExprError> {
    Ok(match ast {
        Ast::Scalar(s) => AlgebraElement::scalar(s.clone()),
        Ast::Gen(g) => {
            if scalar_only {
                return err(0, ExprErrorKind::GeneratorInScalar);
            }
            AlgebraElement::generator(*g)
        }
        Ast::Pow { base, exp, at } => {
            let x = lower_algebra_in(base, scalar_only)?;
            if *exp > 0 {
                x.pow(*exp as u32)
            } else {
                match x.as_scalar() {
                    Some(s) => AlgebraElement::scalar(scalar_pow(&s, *exp, *at)?),
                    None => return err(*at, ExprErrorKind::NotInvertible),
                }
            }
        }
        Ast::Mul(fs) => {
            let mut acc = AlgebraElement::one();
            for f in fs {
                acc = acc.mul(&lower_algebra_in(f, scalar_only)?);
            }
            acc
        }
        Ast::Add(ts) => {
            let mut acc = AlgebraElement::zero();
            for t in ts {
                acc = &acc + &lower_algebra_in(t, scalar_only)?;
            }
            acc
        }
        Ast::Neg(x) => -&lower_algebra_in(x, scalar_only)?,
        Ast::Star { inner, .. } => lower_algebra_in(inner, scalar_only)?.star(),
        Ast::FreeGen { at, .. } => return err(*at, ExprErrorKind::BracketOutsideFree),
    })
}

/// Evaluates a tree in SU_q(2).
pub fn lower_algebra(ast: &Ast) -> Result<AlgebraElement, ExprError> {
    lower_algebra_in(ast, false)
}

pub fn lower_scalar(ast: &Ast) -> Result<Scalar, ExprError> {
    let x = lower_algebra_in(ast, true)?;
    Ok(x.as_scalar().unwrap_or_else(Scalar::zero))
}

pub fn lower_free(ast: &Ast) -> Result<FreeElement, ExprError> {
    Ok(match ast {
        Ast::Scalar(s) => FreeElement::scalar(s.clone()),
        Ast::Gen(_) => return err(0, ExprErrorKind::BareGenerator),
        Ast::Pow { base, exp, at } => {
            let x = lower_free(base)?;
            if *exp > 0 {
                let mut acc = FreeElement::one();
                for _ in 0..*exp {
                    acc = acc.mul(&x);
                }
                acc
            } else {
                let only_unit = x.terms().all(|(w, _)| w.0.is_empty());
                if !only_unit {
                    return err(*at, ExprErrorKind::NotInvertible);
                }
                let s = x.terms().next().map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero);
                FreeElement::scalar(scalar_pow(&s, *exp, *at)?)
            }
        }
        Ast::Mul(fs) => {
            let mut acc = FreeElement::one();
            for f in fs {
                acc = acc.mul(&lower_free(f)?);
            }
            acc
        }
        Ast::Add(ts) => {
            let mut acc = FreeElement::zero();
            for t in ts {
                acc = &acc + &lower_free(t)?;
            }
            acc
        }
        Ast::Neg(x) => -&lower_free(x)?,
        Ast::Star { at, .. } => return err(*at, ExprErrorKind::StarInFreeExpr),
        Ast::FreeGen { kind, require_p, body, at } => {
            let payload = lower_algebra(body).map_err(|mut e| {
                if e.kind == ExprErrorKind::BracketOutsideFree {
                    e.offset = e.offset.max(*at);
                }
                e
            })?;
            if *require_p && !payload.is_in_p() {
                return err(*at, ExprErrorKind::NotInP(payload.to_string()));
            }
            let g = FreeGenerator::new(payload, *kind)
                .map_err(|e| ExprError { offset: *at, kind: ExprErrorKind::InvalidGenerator(e.to_string()) })?;
            FreeElement::generator(g)
        }
    })
}

/// Fixes up offsets that lowering cannot know (bare generators carry no
/// position in the tree) by pointing at the first generator token.
fn locate(text: &str, mut e: ExprError) -> ExprError {
    if matches!(e.kind, ExprErrorKind::GeneratorInScalar | ExprErrorKind::BareGenerator) {
        let bytes = text.as_bytes();
        let mut in_bracket = 0usize;
        for (n, b) in bytes.iter().enumerate() {
            match b {
                b'[' => in_bracket += 1,
                b']' => in_bracket = in_bracket.saturating_sub(1),
                b'a' | b'c' if in_bracket == 0 => {
                    e.offset = n;
                    break;
                }
                _ => {}
            }
        }
    }
    e
}

pub fn algebra(text: &str) -> Result<AlgebraElement, ExprError> {
    lower_algebra(&parse(text)?)
}

pub fn scalar(text: &str) -> Result<Scalar, ExprError> {
    lower_scalar(&parse(text)?).map_err(|e| locate(text, e))
}

pub fn p_element(text: &str) -> Result<PElement, ExprError> {
    let x = algebra(text)?;
    PElement::from_algebra(&x).ok_or_else(|| ExprError { offset: 0, kind: ExprErrorKind::NotInP(x.to_string()) })
}

/// A single basis monomial `a^i c^j` with unit coefficient.
pub fn p_monomial(text: &str) -> Result<PMonomial, ExprError> {
    let x = p_element(text)?;
    let single = match x.terms().next() {
        Some((m, c)) if x.len() == 1 && c.is_one() => Some(*m),
        _ => None,
    };
    single.ok_or_else(|| ExprError { offset: 0, kind: ExprErrorKind::NotAMonomial(x.to_string()) })
}

pub fn free(text: &str) -> Result<FreeElement, ExprError> {
    lower_free(&parse(text)?).map_err(|e| locate(text, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{normal_order, NormalMonomial, Word};
    use Generator::*;

    fn e(k: i64, l: u32, m: u32) -> AlgebraElement {
        AlgebraElement::monomial(NormalMonomial::new(k, l, m))
    }

    #[test]
    fn algebra_examples() {
        let got = algebra("a*c - q c a*").unwrap();
        let lhs = normal_order(&Word::letters(&[AStar, C]));
        let rhs = normal_order(&Word::letters(&[C, AStar])).scale(&Scalar::q_pow(1));
        assert_eq!(got, &lhs - &rhs);
        assert_eq!(got, e(-1, 1, 0).scale(&(&Scalar::one() - &Scalar::q_pow(2))));
        assert_eq!(algebra("1").unwrap(), AlgebraElement::one());
        let square = algebra("(a + c)^2").unwrap();
        let expected = &(&e(2, 0, 0) + &e(1, 1, 0).scale(&(&Scalar::one() + &Scalar::q_pow(-1)))) + &e(0, 2, 0);
        assert_eq!(square, expected);
    }

    #[test]
    fn star_token_versus_multiplication() {
        assert_eq!(algebra("a*c").unwrap(), algebra("a* c").unwrap());
        assert_eq!(algebra("a * c").unwrap(), e(1, 1, 0));
        assert_eq!(algebra("(a c)^*").unwrap(), e(1, 1, 0).star());
        assert_eq!(algebra("a^*").unwrap(), e(-1, 0, 0));
        assert_eq!(algebra("c*^2").unwrap(), e(0, 0, 2));
    }

    #[test]
    fn scalar_forms() {
        let s = scalar("1 - q^2 + 1/3*q^-1*h^2").unwrap();
        assert_eq!(s.to_string(), "1 - q^2 + 1/3*q^-1*h^2");
        assert_eq!(scalar("q^-2 q^3").unwrap(), Scalar::q_pow(1));
        assert_eq!(scalar("(2 q)^-1").unwrap(), &Scalar::from_ratio(1, 2) * &Scalar::q_pow(-1));
        assert_eq!(scalar("-3/6").unwrap(), Scalar::from_ratio(-1, 2));
    }

    #[test]
    fn zero_exponent_is_one() {
        assert_eq!(p_monomial("a^1 c^0").unwrap(), PMonomial::new(1, 0));
        assert_eq!(algebra("(a + c)^0").unwrap(), AlgebraElement::one());
    }

    #[test]
    fn errors_carry_offsets() {
        let e1 = algebra("a + ").unwrap_err();
        assert_eq!(e1.offset, 4);
        let e2 = algebra("a $ c").unwrap_err();
        assert_eq!(e2, ExprError { offset: 2, kind: ExprErrorKind::UnexpectedChar('$') });
        let e3 = algebra("(a + c)^-1").unwrap_err();
        assert_eq!((e3.offset, e3.kind), (7, ExprErrorKind::NotInvertible));
        assert_eq!(algebra("(1 - q)^-1").unwrap_err().kind, ExprErrorKind::NotInvertible);
        assert_eq!(algebra("q^99999").unwrap_err().kind, ExprErrorKind::ExponentTooLarge);
        assert_eq!(algebra("1/0").unwrap_err().kind, ExprErrorKind::ZeroDenominator);
        assert_eq!(algebra("[a]").unwrap_err().kind, ExprErrorKind::BracketOutsideFree);
        let e4 = scalar("2 q a").unwrap_err();
        assert_eq!((e4.offset, e4.kind), (4, ExprErrorKind::GeneratorInScalar));
    }

    #[test]
    fn free_expressions() {
        let r = free("[c*]*[c] - q [c]*[c*] - 1").unwrap();
        assert_eq!(r.to_string(), "-1 + [c*]*[c] - q [c]*[c*]");
        assert_eq!(free(&r.to_string()).unwrap(), r);
        assert_eq!(free("[adj:a]").unwrap().to_string(), "[adj:a]");
        assert!(free("[p:a c]").is_ok());
        assert!(matches!(free("[p:a*]").unwrap_err().kind, ExprErrorKind::NotInP(_)));
        assert!(matches!(free("[a + a*]").unwrap_err().kind, ExprErrorKind::InvalidGenerator(_)));
        assert!(matches!(free("[2]").unwrap_err().kind, ExprErrorKind::InvalidGenerator(_)));
        let bare = free("[a] + c").unwrap_err();
        assert_eq!((bare.offset, bare.kind), (6, ExprErrorKind::BareGenerator));
        assert_eq!(free("[a]^*").unwrap_err().kind, ExprErrorKind::StarInFreeExpr);
        assert_eq!(free("[a]^2").unwrap(), free("[a]*[a]").unwrap());
    }

    #[test]
    fn printed_forms_round_trip() {
        for text in ["a c", "(1 - q^2) a*^1 c", "(1 - q^2) 1", "q^-1 a c", "1 - c c*", "0", "-2"] {
            let x = algebra(text).unwrap();
            assert_eq!(x.to_string(), text);
        }
        let p = p_element("2/3*q^2*h a^3 c - c^2").unwrap();
        assert_eq!(p_element(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn junk_does_not_panic() {
        for text in ["", "(", ")", "[", "]", "^", "a^", "[adj:", "[p:]", "1/", "*", "a**", "((((", "h^-1", "q^-"] {
            let _ = algebra(text);
            let _ = free(text);
            let _ = scalar(text);
        }
        let deep: String = "(".repeat(10_000);
        assert_eq!(algebra(&deep).unwrap_err().kind, ExprErrorKind::TooDeep);
    }
}
