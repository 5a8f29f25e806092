//! Infix arithmetic parser for answer expressions and LLM equations,
//! e.g. `3*sqrt(2)` or `ll_ad/ll_df - 3/2`. Produces the same [`Term`]
//! trees as the prefix parser, using `Add`/`Sub`/`Mul`/`Div`/`Pow` heads.

use super::parser::SyntaxError;
use super::term::{rational_from_decimal, Term};
use num_bigint::BigInt;
use num_rational::BigRational;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn err(&self, expected: &str) -> SyntaxError {
        let found = match self.peek() {
            Some(b) => (b as char).to_string(),
            None => "end of input".to_string(),
        };
        SyntaxError { offset: self.pos, expected: expected.to_string(), found }
    }

    fn expr(&mut self) -> Result<Term, SyntaxError> {
        let mut lhs = self.product()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Term::apply("Add", vec![lhs, rhs]);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.product()?;
                    lhs = Term::apply("Sub", vec![lhs, rhs]);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Term, SyntaxError> {
        let mut lhs = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') if self.src.as_bytes().get(self.pos + 1) != Some(&b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Term::apply("Mul", vec![lhs, rhs]);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    lhs = Term::apply("Div", vec![lhs, rhs]);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Term, SyntaxError> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            let inner = self.unary()?;
            // Fold negation into numeric literals; otherwise 0 - x.
            return Ok(match inner {
                Term::Number(n) => Term::Number(-n),
                other => Term::apply("Sub", vec![Term::int(0), other]),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Term, SyntaxError> {
        let base = self.atom()?;
        self.skip_ws();
        let caret = match self.peek() {
            Some(b'^') => 1,
            Some(b'*') if self.src.as_bytes().get(self.pos + 1) == Some(&b'*') => 2,
            _ => 0,
        };
        if caret > 0 {
            self.pos += caret;
            let exp = self.unary()?;
            return Ok(Term::apply("Pow", vec![base, exp]));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Term, SyntaxError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => self.number(),
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let name = self.ident();
                self.skip_ws();
                if self.peek() == Some(b'(') {
                    let head = match name.as_str() {
                        "sqrt" => "Sqrt",
                        "sin" => "Sin",
                        "cos" => "Cos",
                        "tan" => "Tan",
                        // Prefix CDL embedded in an equation line.
                        other => return self.cdl_apply(other.to_string()),
                    };
                    self.pos += 1;
                    let arg = self.expr()?;
                    self.skip_ws();
                    if self.peek() != Some(b')') {
                        return Err(self.err("')'"));
                    }
                    self.pos += 1;
                    Ok(Term::apply(head, vec![arg]))
                } else {
                    Ok(Term::Ident(name))
                }
            }
            _ => Err(self.err("expression")),
        }
    }

    fn cdl_apply(&mut self, head: String) -> Result<Term, SyntaxError> {
        self.pos += 1; // consume '('
        let mut args = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b')') {
            loop {
                args.push(self.expr()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => break,
                    _ => return Err(self.err("',' or ')'")),
                }
            }
        }
        self.pos += 1; // consume ')'
        Ok(Term::Apply { head, args })
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        self.src[start..self.pos].to_string()
    }

    fn number(&mut self) -> Result<Term, SyntaxError> {
        let int_start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let int_part = &self.src[int_start..self.pos];
        let value = if self.peek() == Some(b'.') {
            self.pos += 1;
            let frac_start = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            rational_from_decimal(int_part, &self.src[frac_start..self.pos])
        } else {
            BigRational::from_integer(int_part.parse::<BigInt>().unwrap())
        };
        Ok(Term::Number(value))
    }
}

/// Parses an infix arithmetic expression over symbols and exact numbers.
pub fn parse_expr(src: &str) -> Result<Term, SyntaxError> {
    let mut cur = Cursor { src, pos: 0 };
    let t = cur.expr()?;
    cur.skip_ws();
    if cur.pos != src.len() {
        return Err(cur.err("end of input"));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_integer() {
        assert_eq!(parse_expr("9").unwrap(), Term::int(9));
    }

    #[test]
    fn ratio_minus_constant() {
        let t = parse_expr("ll_ad/ll_df - 3/2").unwrap();
        assert_eq!(
            t,
            Term::apply(
                "Sub",
                vec![
                    Term::apply("Div", vec![Term::ident("ll_ad"), Term::ident("ll_df")]),
                    Term::apply("Div", vec![Term::int(3), Term::int(2)]),
                ]
            )
        );
    }

    #[test]
    fn sqrt_product() {
        let t = parse_expr("3*sqrt(2)").unwrap();
        assert_eq!(t, Term::apply("Mul", vec![Term::int(3), Term::apply("Sqrt", vec![Term::int(2)])]));
    }

    #[test]
    fn precedence_and_parens() {
        let t = parse_expr("(1+2)*4").unwrap();
        assert_eq!(
            t,
            Term::apply("Mul", vec![Term::apply("Add", vec![Term::int(1), Term::int(2)]), Term::int(4)])
        );
    }

    #[test]
    fn power_forms() {
        assert_eq!(
            parse_expr("x^2").unwrap(),
            Term::apply("Pow", vec![Term::ident("x"), Term::int(2)])
        );
        assert_eq!(parse_expr("x**2").unwrap(), parse_expr("x^2").unwrap());
    }

    #[test]
    fn embedded_prefix_cdl() {
        let t = parse_expr("MeasureOfAngle(ABC) - 40").unwrap();
        assert!(t.is_apply("Sub"));
        assert!(t.args()[0].is_apply("MeasureOfAngle"));
    }

    #[test]
    fn negative_literal() {
        assert_eq!(parse_expr("-5").unwrap(), Term::int(-5));
    }
}
