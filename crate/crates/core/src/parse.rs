//! Text form of polynomials.
//!
//! ```text
//! poly   := ['+' | '-'] term (('+' | '-') term)*
//! term   := coeff ('*' power)* | power ('*' power)*
//! coeff  := digits ['/' digits]
//! power  := var ['^' digits]
//! var    := 'x' digits '_' digits | 'z' digits '_' '[' digits (',' digits)* ']'
//! ```
//!
//! Whitespace is ignored everywhere. `Display` on [`Polynomial`] produces
//! text in exactly this grammar, so `parse(format(f)) == f`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let chars = text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        Cursor {
            chars,
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    /// Byte offset of the current character in the original text.
    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map(|&(i, _)| i)
            .unwrap_or(self.text.len())
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn error(&self, message: String) -> Error {
        let found = match self.peek() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_string(),
        };
        Error::Syntax {
            position: self.offset(),
            message: message + &found,
        }
    }

    fn digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if s.is_empty() {
            return Err(self.error("expected digits".into()));
        }
        Ok(s)
    }

    fn small(&mut self) -> Result<u32> {
        let at = self.offset();
        let s = self.digits()?;
        s.parse::<u32>().map_err(|_| Error::Syntax {
            position: at,
            message: format!("number `{s}` is too large"),
        })
    }
}

pub fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    parse_polynomial_in(ring, text)
}

/// Parse into any coefficient field; rational coefficients are mapped with
/// [`Field::from_rational`].
pub fn parse_polynomial_in<F: Field>(ring: &Arc<Ring>, text: &str) -> Result<Polynomial<F>> {
    let mut cur = Cursor::new(text);
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let (m, c) = parse_term::<F>(ring, &mut cur)?;
        terms.push((m, if negative { -c } else { c }));
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.bump();
                negative = false;
            }
            Some('-') => {
                cur.bump();
                negative = true;
            }
            Some(_) => return Err(cur.error("expected `+`, `-` or `*`".into())),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}

fn parse_term<F: Field>(ring: &Arc<Ring>, cur: &mut Cursor) -> Result<(Monomial, F)> {
    let mut exps = vec![0u32; ring.nvars()];
    let mut coeff = F::one();
    let mut first = true;
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() && first => {
                let at = cur.offset();
                let num: BigInt = cur.digits()?.parse().expect("digits");
                let den: BigInt = if cur.eat('/') {
                    cur.digits()?.parse().expect("digits")
                } else {
                    BigInt::from(1)
                };
                if den == BigInt::from(0) {
                    return Err(Error::Syntax {
                        position: at,
                        message: "zero denominator".into(),
                    });
                }
                let q = Rational::new(num, den);
                coeff = F::from_rational(&q).ok_or(Error::Syntax {
                    position: at,
                    message: "coefficient is not defined in this field".into(),
                })?;
            }
            Some('x') | Some('z') => {
                let (var, power) = parse_power(ring, cur)?;
                exps[var] = exps[var].checked_add(power).ok_or(Error::Syntax {
                    position: cur.offset(),
                    message: "exponent overflow".into(),
                })?;
            }
            _ => return Err(cur.error("expected a coefficient or a variable".into())),
        }
        first = false;
        if !cur.eat('*') {
            break;
        }
    }
    Ok((Monomial::from_exponents(exps), coeff))
}

fn parse_power(ring: &Arc<Ring>, cur: &mut Cursor) -> Result<(usize, u32)> {
    let at = cur.offset();
    let name = match cur.bump() {
        Some('x') => {
            let block = cur.small()?;
            cur.expect('_')?;
            let j = cur.small()?;
            format!("x{block}_{j}")
        }
        Some('z') => {
            let block = cur.small()?;
            cur.expect('_')?;
            cur.expect('[')?;
            let mut alpha = vec![cur.small()?.to_string()];
            while cur.eat(',') {
                alpha.push(cur.small()?.to_string());
            }
            cur.expect(']')?;
            format!("z{block}_[{}]", alpha.join(","))
        }
        _ => unreachable!("caller checked the leading letter"),
    };
    let var = ring
        .var_index(&name)
        .ok_or(Error::UnknownVariable { name, position: at })?;
    let power = if cur.eat('^') { cur.small()? } else { 1 };
    Ok((var, power))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let r = Ring::source(&[1, 1]).unwrap();
        let f = parse_polynomial(&r, "x1_0*x2_1 - x1_1*x2_0").unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.is_multihomogeneous());

        let g = parse_polynomial(&r, " x1_0 ^ 3 ").unwrap();
        assert_eq!(g.terms()[0].0.exponents(), &[3, 0, 0, 0]);

        let h = parse_polynomial(&r, "1/2*x1_0 + 3/6*x1_0").unwrap();
        assert_eq!(h, parse_polynomial(&r, "x1_0").unwrap());
        assert!(parse_polynomial(&r, "x1_0 - x1_0").unwrap().is_zero());
        assert!(parse_polynomial(&r, "0").unwrap().is_zero());
    }

    #[test]
    fn parses_z_variables() {
        let t = Ring::target(&[1], &[2]).unwrap();
        let f = parse_polynomial(&t, "z1_[2,0]*z1_[0,2] - z1_[ 1 , 1 ]^2").unwrap();
        assert_eq!(f.to_string(), "-z1_[1,1]^2 + z1_[2,0]*z1_[0,2]");
    }

    #[test]
    fn unknown_variable() {
        let r = Ring::source(&[1, 1]).unwrap();
        match parse_polynomial(&r, "x9_0") {
            Err(Error::UnknownVariable { name, position }) => {
                assert_eq!(name, "x9_0");
                assert_eq!(position, 0);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_polynomial(&r, "x1_2"),
            Err(Error::UnknownVariable { .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let r = Ring::source(&[1, 1]).unwrap();
        for (text, pos) in [
            ("x1_0 +", 6),
            ("x1_0 ** x2_0", 6),
            ("x1_", 3),
            ("3/0*x1_0", 0),
            ("", 0),
            ("x1_0 x2_0", 5),
        ] {
            match parse_polynomial(&r, text) {
                Err(Error::Syntax { position, .. }) => assert_eq!(position, pos, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }
}
