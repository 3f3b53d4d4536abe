//! Text form of polynomials.
//!
//! Grammar (whitespace is ignored between tokens):
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' integer)?
//! base     := rational | variable | '(' expr ')'
//! rational := integer ('/' positive-integer)?
//! ```
//!
//! Unary minus is accepted only at the head of an expression, i.e. at the very
//! start or right after `(`. There is no implicit multiplication: `3t` is a
//! syntax error, write `3*t`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::qmath::{Poly, Rat, RatFn};

/// Largest exponent the parser accepts.
pub const MAX_EXPONENT: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Integer(BigInt),
    /// `num/den` written as one literal.
    Rational(BigInt, BigInt),
    Variable(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprToken {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Byte offset of the first character.
    pub position: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

pub fn tokenize(text: &str) -> Result<Vec<ExprToken>> {
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let skip_ws = |mut j: usize| {
        while j < bytes.len() && bytes[j].1.is_whitespace() {
            j += 1;
        }
        j
    };
    let digits_end = |mut j: usize| {
        while j < bytes.len() && bytes[j].1.is_ascii_digit() {
            j += 1;
        }
        j
    };
    let offset = |j: usize| bytes.get(j).map_or(text.len(), |b| b.0);
    while i < bytes.len() {
        let (pos, ch) = bytes[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        let single = |kind| ExprToken {
            kind,
            lexeme: ch.to_string(),
            position: pos,
        };
        match ch {
            '+' => out.push(single(TokenKind::Plus)),
            '-' | '−' => out.push(single(TokenKind::Minus)),
            '*' => out.push(single(TokenKind::Star)),
            '^' => out.push(single(TokenKind::Caret)),
            '(' => out.push(single(TokenKind::LParen)),
            ')' => out.push(single(TokenKind::RParen)),
            c if c.is_ascii_digit() => {
                let end = digits_end(i);
                let num: BigInt = text[pos..offset(end)].parse().unwrap();
                let after = skip_ws(end);
                if after < bytes.len() && bytes[after].1 == '/' {
                    let dstart = skip_ws(after + 1);
                    let dend = digits_end(dstart);
                    if dend == dstart {
                        return Err(err(offset(dstart), "expected denominator digits after '/'"));
                    }
                    let den: BigInt = text[offset(dstart)..offset(dend)].parse().unwrap();
                    if den.is_zero() {
                        return Err(err(offset(dstart), "zero denominator"));
                    }
                    out.push(ExprToken {
                        kind: TokenKind::Rational(num, den),
                        lexeme: text[pos..offset(dend)].to_string(),
                        position: pos,
                    });
                    i = dend;
                } else {
                    out.push(ExprToken {
                        kind: TokenKind::Integer(num),
                        lexeme: text[pos..offset(end)].to_string(),
                        position: pos,
                    });
                    i = end;
                }
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].1.is_alphanumeric() || bytes[j].1 == '_') {
                    j += 1;
                }
                let name = text[pos..offset(j)].to_string();
                out.push(ExprToken {
                    kind: TokenKind::Variable(name.clone()),
                    lexeme: name,
                    position: pos,
                });
                i = j;
                continue;
            }
            '/' => return Err(err(pos, "'/' is only allowed inside a rational literal")),
            other => return Err(err(pos, format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<ExprToken>,
    at: usize,
    var: &'a str,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&TokenKind> {
        self.tokens.get(self.at).map(|t| &t.kind)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |t| t.position)
    }

    fn expr(&mut self) -> Result<Poly> {
        let negate = if self.peek() == Some(&TokenKind::Minus) {
            self.at += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(TokenKind::Plus) => {
                    self.at += 1;
                    acc = acc + self.term()?;
                }
                Some(TokenKind::Minus) => {
                    self.at += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&TokenKind::Star) {
            self.at += 1;
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() != Some(&TokenKind::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.peek().cloned() {
            Some(TokenKind::Integer(k)) => {
                self.at += 1;
                let k = k
                    .to_u32()
                    .filter(|&k| k <= MAX_EXPONENT)
                    .ok_or_else(|| err(pos, format!("exponent larger than {MAX_EXPONENT}")))?;
                Ok(base.pow(k))
            }
            Some(TokenKind::Minus) => Err(err(pos, "negative exponent")),
            Some(TokenKind::Rational(..)) => Err(err(pos, "fractional exponent")),
            _ => Err(err(pos, "expected a non-negative integer exponent")),
        }
    }

    fn base(&mut self) -> Result<Poly> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(TokenKind::Integer(n)) => {
                self.at += 1;
                self.no_juxtaposition()?;
                Ok(Poly::constant(Rat::from_integer(n)))
            }
            Some(TokenKind::Rational(n, d)) => {
                self.at += 1;
                self.no_juxtaposition()?;
                Ok(Poly::constant(Rat::new(n, d)))
            }
            Some(TokenKind::Variable(name)) => {
                if name != self.var {
                    return Err(err(
                        pos,
                        format!("unknown variable {name:?}, expected {:?}", self.var),
                    ));
                }
                self.at += 1;
                self.no_juxtaposition()?;
                Ok(Poly::x())
            }
            Some(TokenKind::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&TokenKind::RParen) {
                    return Err(err(self.pos(), "expected ')'"));
                }
                self.at += 1;
                self.no_juxtaposition()?;
                Ok(inner)
            }
            Some(TokenKind::Minus) => Err(err(
                pos,
                "unary minus is only allowed at the start of an expression or after '('",
            )),
            Some(_) => Err(err(pos, "expected a number, the variable, or '('")),
            None => Err(err(pos, "unexpected end of input")),
        }
    }

    /// Rejects implicit multiplication such as `3t` or `(t+1)(t-1)`.
    fn no_juxtaposition(&self) -> Result<()> {
        match self.peek() {
            Some(TokenKind::Integer(_))
            | Some(TokenKind::Rational(..))
            | Some(TokenKind::Variable(_))
            | Some(TokenKind::LParen) => Err(err(
                self.pos(),
                "implicit multiplication is not supported; use '*'",
            )),
            _ => Ok(()),
        }
    }
}

/// Parses a polynomial in `variable`.
pub fn parse_poly(text: &str, variable: &str) -> Result<Poly> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        var: variable,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.at != p.tokens.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(out)
}

fn render_monomial(c: &Rat, k: usize, var: &str) -> String {
    let pow = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    if k == 0 {
        c.to_string()
    } else if c.is_one() {
        pow
    } else {
        format!("{c}*{pow}")
    }
}

/// Descending-degree canonical text, e.g. `t^3 - 1/2`; the zero polynomial is
/// `0`. Always accepted by [`parse_poly`].
pub fn render_poly(p: &Poly, variable: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let body = render_monomial(&c.abs(), k, variable);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

/// `num` when the denominator is 1, otherwise `(num)/(den)`.
pub fn render_ratfn(r: &RatFn, variable: &str) -> String {
    if r.is_polynomial() {
        render_poly(r.num(), variable)
    } else {
        format!(
            "({})/({})",
            render_poly(r.num(), variable),
            render_poly(r.den(), variable)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmath::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        assert_eq!(
            parse_poly("t^6+t^2+1", "t").unwrap(),
            Poly::from_ints(&[1, 0, 1, 0, 0, 0, 1])
        );
        assert!(parse_poly("(t+1)^2 - t^2 - 2*t - 1", "t").unwrap().is_zero());
        let p = parse_poly("3/5*t^4 - 2", "t").unwrap();
        assert_eq!(p.coeff(4), rat(3, 5));
        assert_eq!(p.coeff(0), int(-2));
        assert_eq!(p.deg(), 4);
        assert_eq!(parse_poly("-(1+u^4)", "u").unwrap(), Poly::from_ints(&[-1, 0, 0, 0, -1]));
        assert_eq!(parse_poly("t − 1", "t").unwrap(), Poly::from_ints(&[-1, 1]));
        assert_eq!(parse_poly("4 / 6", "t").unwrap(), Poly::constant(rat(2, 3)));
    }

    #[test]
    fn rejects_with_positions() {
        let cases = [
            ("3t", 1),
            ("t^-1", 2),
            ("t^1/2", 2),
            ("x+1", 0),
            ("t+", 2),
            ("(t+1", 4),
            ("t*-1", 2),
            ("t/2", 1),
            ("1/0", 2),
            ("t $ 1", 2),
            ("t)", 1),
        ];
        for (text, pos) in cases {
            match parse_poly(text, "t") {
                Err(Error::Parse { position, .. }) => assert_eq!(position, pos, "{text}"),
                other => panic!("{text}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn renders_examples() {
        assert_eq!(render_poly(&Poly::zero(), "t"), "0");
        let p = Poly::new(vec![rat(-1, 2), int(0), int(0), int(1)]);
        assert_eq!(render_poly(&p, "t"), "t^3 - 1/2");
        assert_eq!(render_poly(&Poly::from_ints(&[0, -1, 3]), "s"), "3*s^2 - s");
        let r = RatFn::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 2])).unwrap();
        assert_eq!(render_ratfn(&r, "s"), "(1/2*s + 1/2)/(s)");
    }

    #[test]
    fn tokens_reconstruct_input() {
        let text = " 3 / 5*t ^ 4-( t+2)";
        let toks = tokenize(text).unwrap();
        let joined: String = toks.iter().map(|t| t.lexeme.replace(' ', "")).collect();
        assert_eq!(joined, text.replace(' ', ""));
        assert!(toks.windows(2).all(|w| w[0].position < w[1].position));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-50i64..50, 1i64..20), 0..8)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn parse_render_roundtrip(p in arb_poly()) {
            let text = render_poly(&p, "t");
            let back = parse_poly(&text, "t").unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(render_poly(&back, "t"), text);
        }
    }
}
