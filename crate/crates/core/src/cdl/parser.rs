//! Recursive-descent parser for prefix CDL expressions such as
//! `Equal(MeasureOfAngle(ABC),40)`. Whitespace-insensitive; numeric
//! literals (including `3/2` and decimals) become exact rationals.

use super::grammar::{head_signature, ArgKind};
use super::term::{rational_from_decimal, Term};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("syntax error at byte {offset}: expected {expected}, found {found:?}")]
pub struct SyntaxError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    warnings: Vec<String>,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0, warnings: Vec::new() }
    }

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

    fn eat(&mut self, byte: u8, expected: &str) -> Result<(), SyntaxError> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn ident(&mut self) -> Result<String, SyntaxError> {
        self.skip_ws();
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b.is_ascii_alphanumeric() || b == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("identifier"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn number(&mut self) -> Result<BigRational, SyntaxError> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let int_start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == int_start {
            return Err(self.err("digit"));
        }
        let int_part = &self.src[int_start..self.pos];
        let mut value = if self.peek() == Some(b'.') {
            self.pos += 1;
            let frac_start = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            rational_from_decimal(int_part, &self.src[frac_start..self.pos])
        } else {
            BigRational::from_integer(int_part.parse::<BigInt>().unwrap())
        };
        // `3/2` is a rational literal, not a Div application.
        if self.peek() == Some(b'/')
            && self.src.as_bytes().get(self.pos + 1).is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
            let den_start = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            let den: BigInt = self.src[den_start..self.pos].parse().unwrap();
            if den == BigInt::from(0) {
                return Err(SyntaxError {
                    offset: den_start,
                    expected: "nonzero denominator".into(),
                    found: "0".into(),
                });
            }
            value /= BigRational::from_integer(den);
        }
        if neg {
            value = -value;
        }
        Ok(value)
    }

    fn term(&mut self) -> Result<Term, SyntaxError> {
        self.skip_ws();
        match self.peek() {
            Some(b) if b.is_ascii_digit() || b == b'-' => Ok(Term::Number(self.number()?)),
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let name = self.ident()?;
                self.skip_ws();
                if self.peek() == Some(b'(') {
                    self.apply(name)
                } else {
                    Ok(Term::Ident(name))
                }
            }
            _ => Err(self.err("term")),
        }
    }

    fn apply(&mut self, head: String) -> Result<Term, SyntaxError> {
        let head_offset = self.pos;
        self.eat(b'(', "'('")?;
        let mut args = Vec::new();
        self.skip_ws();
        if self.peek() != Some(b')') {
            loop {
                args.push(self.term()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => {
                        self.pos += 1;
                    }
                    Some(b')') => break,
                    _ => return Err(self.err("',' or ')'")),
                }
            }
        }
        self.eat(b')', "')'")?;
        match head_signature(&head) {
            Some(sig) => {
                let ok = if sig.variadic { args.len() >= sig.arity } else { args.len() == sig.arity };
                if !ok {
                    return Err(SyntaxError {
                        offset: head_offset,
                        expected: format!(
                            "{} argument{} for {}{}",
                            sig.arity,
                            if sig.arity == 1 { "" } else { "s" },
                            head,
                            if sig.variadic { " or more" } else { "" }
                        ),
                        found: format!("{} arguments", args.len()),
                    });
                }
                if sig.kind == ArgKind::Ident {
                    for a in &args {
                        if !matches!(a, Term::Ident(_)) {
                            return Err(SyntaxError {
                                offset: head_offset,
                                expected: format!("identifier argument for {head}"),
                                found: a.render(),
                            });
                        }
                    }
                }
            }
            None => self.warnings.push(format!("unknown predicate head: {head}")),
        }
        Ok(Term::Apply { head, args })
    }
}

/// Parses a single CDL expression.
pub fn parse_term(src: &str) -> Result<Term, SyntaxError> {
    parse_term_with_warnings(src).map(|(t, _)| t)
}

/// Parses a single CDL expression, also reporting unknown predicate heads.
/// Unknown heads are accepted here; the verifier rejects them at tier 1.
pub fn parse_term_with_warnings(src: &str) -> Result<(Term, Vec<String>), SyntaxError> {
    let mut cur = Cursor::new(src);
    let term = cur.term()?;
    cur.skip_ws();
    if cur.pos != src.len() {
        return Err(cur.err("end of input"));
    }
    Ok((term, cur.warnings))
}

/// Parses a `&`-joined conjunction of CDL expressions, e.g. a theorem
/// premise like `Polygon(BCD)&Equal(MeasureOfAngle(BCD),90)`.
pub fn parse_conjunction(src: &str) -> Result<Vec<Term>, SyntaxError> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = src.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth = depth.saturating_sub(1),
            b'&' if depth == 0 => {
                let piece = &src[start..i];
                if !piece.trim().is_empty() {
                    out.push(offset_err(parse_term(piece), start)?);
                }
                start = i + 1;
            }
            _ => {}
        }
    }
    let piece = &src[start..];
    if !piece.trim().is_empty() {
        out.push(offset_err(parse_term(piece), start)?);
    }
    Ok(out)
}

fn offset_err(r: Result<Term, SyntaxError>, base: usize) -> Result<Term, SyntaxError> {
    r.map_err(|mut e| {
        e.offset += base;
        e
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_angle_equation() {
        let t = parse_term("Equal(MeasureOfAngle(ABC),40)").unwrap();
        assert_eq!(
            t,
            Term::apply(
                "Equal",
                vec![Term::apply("MeasureOfAngle", vec![Term::ident("ABC")]), Term::int(40)]
            )
        );
    }

    #[test]
    fn parses_collinear() {
        let t = parse_term("Collinear(ADFB)").unwrap();
        assert_eq!(t, Term::apply("Collinear", vec![Term::ident("ADFB")]));
    }

    #[test]
    fn slash_literal_is_rational() {
        let t = parse_term("Equal(Div(LengthOfLine(AD),LengthOfLine(DF)),3/2)").unwrap();
        let Term::Apply { args, .. } = &t else { panic!() };
        assert_eq!(args[1], Term::rational(3, 2));
        assert!(args[0].is_apply("Div"));
    }

    #[test]
    fn whitespace_insensitive() {
        let a = parse_term("Equal( MeasureOfAngle( ABC ) , 40 )").unwrap();
        let b = parse_term("Equal(MeasureOfAngle(ABC),40)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn error_carries_offset_and_hint() {
        let e = parse_term("Equal(MeasureOfAngle(ABC),").unwrap_err();
        assert_eq!(e.offset, 26);
        assert!(e.expected.contains("term"));
    }

    #[test]
    fn arity_enforced_for_known_heads() {
        let e = parse_term("MeasureOfAngle(ABC,DEF)").unwrap_err();
        assert!(e.expected.contains("1 argument"));
        let e = parse_term("Equal(1)").unwrap_err();
        assert!(e.expected.contains("2 arguments"));
    }

    #[test]
    fn ident_kind_enforced() {
        let e = parse_term("MeasureOfAngle(40)").unwrap_err();
        assert!(e.expected.contains("identifier argument"));
    }

    #[test]
    fn unknown_head_parses_with_warning() {
        let (t, warnings) = parse_term_with_warnings("FrobnicatesWith(AB,CD)").unwrap();
        assert!(t.is_apply("FrobnicatesWith"));
        assert_eq!(warnings.len(), 1);
    }

    #[test]
    fn conjunction_splits_at_top_level_only() {
        let ts = parse_conjunction("Polygon(BCD)&Equal(MeasureOfAngle(BCD),90)").unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts[0].is_apply("Polygon"));
        assert!(ts[1].is_apply("Equal"));
    }

    #[test]
    fn decimal_literal_parses_exactly() {
        let t = parse_term("Equal(LengthOfLine(AB),2.5)").unwrap();
        let Term::Apply { args, .. } = &t else { panic!() };
        assert_eq!(args[1], Term::rational(5, 2));
    }
}
