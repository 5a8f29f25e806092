use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A parsed CDL expression: predicate/function application, identifier, or
/// exact numeric literal. This is the universal currency for problem
/// statements, theorem premises and conclusions, and goals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Apply { head: String, args: Vec<Term> },
    Ident(String),
    Number(BigRational),
}

impl Term {
    pub fn apply(head: impl Into<String>, args: Vec<Term>) -> Term {
        Term::Apply { head: head.into(), args }
    }

    pub fn ident(name: impl Into<String>) -> Term {
        Term::Ident(name.into())
    }

    pub fn int(n: i64) -> Term {
        Term::Number(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(num: i64, den: i64) -> Term {
        Term::Number(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn head(&self) -> Option<&str> {
        match self {
            Term::Apply { head, .. } => Some(head),
            _ => None,
        }
    }

    pub fn args(&self) -> &[Term] {
        match self {
            Term::Apply { args, .. } => args,
            _ => &[],
        }
    }

    pub fn as_ident(&self) -> Option<&str> {
        match self {
            Term::Ident(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_number(&self) -> Option<&BigRational> {
        match self {
            Term::Number(n) => Some(n),
            _ => None,
        }
    }

    pub fn is_apply(&self, name: &str) -> bool {
        matches!(self, Term::Apply { head, .. } if head == name)
    }

    /// Canonical text form. `parse(render(t))` is structurally equal to `t`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out);
        out
    }

    fn render_into(&self, out: &mut String) {
        match self {
            Term::Apply { head, args } => {
                out.push_str(head);
                out.push('(');
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    a.render_into(out);
                }
                out.push(')');
            }
            Term::Ident(s) => out.push_str(s),
            Term::Number(n) => out.push_str(&render_rational(n)),
        }
    }

    /// Depth-first traversal over the term and all sub-terms.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a Term)) {
        f(self);
        if let Term::Apply { args, .. } = self {
            for a in args {
                a.walk(f);
            }
        }
    }

    /// All identifier leaves in argument position, in order of appearance.
    pub fn idents(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let Term::Ident(s) = t {
                out.push(s.as_str());
            }
        });
        out
    }

    /// Replaces every identifier leaf via the mapping, leaving the tree
    /// structure untouched. Identifiers without a mapping are kept.
    pub fn rename_idents(&self, map: &dyn Fn(&str) -> Option<String>) -> Term {
        match self {
            Term::Apply { head, args } => Term::Apply {
                head: head.clone(),
                args: args.iter().map(|a| a.rename_idents(map)).collect(),
            },
            Term::Ident(s) => match map(s) {
                Some(n) => Term::Ident(n),
                None => Term::Ident(s.clone()),
            },
            Term::Number(n) => Term::Number(n.clone()),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn render_rational(n: &BigRational) -> String {
    if n.denom().is_one() {
        n.numer().to_string()
    } else if n.is_negative() {
        format!("-{}/{}", n.numer().abs(), n.denom())
    } else {
        format!("{}/{}", n.numer(), n.denom())
    }
}

/// Exact rational from a decimal literal: `"40.5"` becomes `81/2`.
pub fn rational_from_decimal(int_part: &str, frac_part: &str) -> BigRational {
    let mut digits = String::with_capacity(int_part.len() + frac_part.len());
    digits.push_str(int_part);
    digits.push_str(frac_part);
    let numer: BigInt = digits.parse().unwrap_or_else(|_| BigInt::zero());
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    BigRational::new(numer, denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_integer_and_rational() {
        assert_eq!(Term::int(40).render(), "40");
        assert_eq!(Term::rational(3, 2).render(), "3/2");
        assert_eq!(Term::rational(-3, 2).render(), "-3/2");
    }

    #[test]
    fn decimal_becomes_exact_rational() {
        assert_eq!(rational_from_decimal("40", "5"), BigRational::new(81.into(), 2.into()));
        assert_eq!(rational_from_decimal("0", "25"), BigRational::new(1.into(), 4.into()));
    }

    #[test]
    fn render_nested_apply() {
        let t = Term::apply(
            "Equal",
            vec![Term::apply("MeasureOfAngle", vec![Term::ident("ABC")]), Term::int(40)],
        );
        assert_eq!(t.render(), "Equal(MeasureOfAngle(ABC),40)");
    }
}
