//! Extension rules: derive entity facts (points, lines, angles, polygons,
//! circle memberships) from construction statements. Mirrors the facts the
//! dataset ships in `construction_cdl_extended`, in canonical form.

use super::canonical::canonicalize;
use crate::cdl::Term;
use std::collections::BTreeSet;

fn ident_term(head: &str, ident: String) -> Term {
    canonicalize(&Term::apply(head, vec![Term::Ident(ident)]))
}

fn add_points(out: &mut BTreeSet<Term>, letters: impl IntoIterator<Item = char>) {
    for c in letters {
        out.insert(Term::apply("Point", vec![Term::Ident(c.to_string())]));
    }
}

fn add_segment(out: &mut BTreeSet<Term>, a: char, b: char) {
    out.insert(ident_term("Line", format!("{a}{b}")));
    add_points(out, [a, b]);
}

/// Derived facts for one construction statement.
fn extend_one(term: &Term, out: &mut BTreeSet<Term>) {
    let Term::Apply { head, args } = term else { return };
    match head.as_str() {
        "Shape" => {
            let segments: Vec<&str> = args.iter().filter_map(Term::as_ident).collect();
            for seg in &segments {
                let chars: Vec<char> = seg.chars().collect();
                if chars.len() == 2 {
                    add_segment(out, chars[0], chars[1]);
                }
            }
            // Angles at shared endpoints of consecutive segments; a closed
            // chain is a polygon.
            let n = segments.len();
            let mut vertices = Vec::new();
            let mut closed = n >= 3;
            for i in 0..n {
                let cur: Vec<char> = segments[i].chars().collect();
                let next: Vec<char> = segments[(i + 1) % n].chars().collect();
                if cur.len() != 2 || next.len() != 2 {
                    closed = false;
                    continue;
                }
                vertices.push(cur[0]);
                if cur[1] == next[0] {
                    if i + 1 < n || n >= 3 {
                        out.insert(ident_term("Angle", format!("{}{}{}", cur[0], cur[1], next[1])));
                    }
                } else {
                    closed = false;
                }
            }
            if closed && n >= 3 {
                let poly: String = vertices.iter().collect();
                extend_one(&Term::apply("Polygon", vec![Term::Ident(poly)]), out);
            }
        }
        "Polygon" => {
            let Some(pts) = args[0].as_ident() else { return };
            let chars: Vec<char> = pts.chars().collect();
            let n = chars.len();
            if n < 3 {
                return;
            }
            out.insert(canonicalize(term));
            for i in 0..n {
                let a = chars[i];
                let b = chars[(i + 1) % n];
                let c = chars[(i + 2) % n];
                add_segment(out, a, b);
                out.insert(ident_term("Angle", format!("{a}{b}{c}")));
            }
        }
        "Collinear" => {
            let Some(pts) = args[0].as_ident() else { return };
            let chars: Vec<char> = pts.chars().collect();
            let n = chars.len();
            if n < 3 {
                return;
            }
            out.insert(canonicalize(term));
            for i in 0..n {
                for j in (i + 1)..n {
                    add_segment(out, chars[i], chars[j]);
                    for k in (j + 1)..n {
                        out.insert(ident_term("Angle", format!("{}{}{}", chars[i], chars[j], chars[k])));
                    }
                }
            }
            // proper subsequences of length >= 3 are also collinear
            for mask in 1u32..(1 << n) {
                if (mask.count_ones() as usize) < 3 || mask == (1 << n) - 1 {
                    continue;
                }
                let sub: String = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| chars[i]).collect();
                out.insert(ident_term("Collinear", sub));
            }
        }
        "Cocircular" => {
            let (Some(center), Some(pts)) = (args[0].as_ident(), args[1].as_ident()) else {
                return;
            };
            out.insert(ident_term("Circle", center.to_string()));
            let chars: Vec<char> = pts.chars().collect();
            let n = chars.len();
            add_points(out, chars.iter().copied());
            for mask in 1u32..(1 << n) {
                let sub: String = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| chars[i]).collect();
                out.insert(canonicalize(&Term::apply(
                    "Cocircular",
                    vec![Term::ident(center), Term::Ident(sub)],
                )));
            }
        }
        "ParallelBetweenLine" | "PerpendicularBetweenLine" => {
            out.insert(canonicalize(term));
            for arg in args {
                if let Some(s) = arg.as_ident() {
                    let chars: Vec<char> = s.chars().collect();
                    if chars.len() == 2 {
                        add_segment(out, chars[0], chars[1]);
                    }
                }
            }
        }
        _ => {
            out.insert(canonicalize(term));
        }
    }
}

/// Expands construction statements into the full set of derived entity
/// facts, canonicalized and sorted.
pub fn extend_construction(construction: &[Term]) -> BTreeSet<Term> {
    let mut out = BTreeSet::new();
    for t in construction {
        extend_one(t, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdl::parse_term;

    fn extend(srcs: &[&str]) -> BTreeSet<String> {
        let terms: Vec<Term> = srcs.iter().map(|s| parse_term(s).unwrap()).collect();
        extend_construction(&terms).into_iter().map(|t| t.render()).collect()
    }

    #[test]
    fn triangle_shape_yields_polygon_angles_lines() {
        let facts = extend(&["Shape(AB,BC,CA)"]);
        assert!(facts.contains("Polygon(ABC)"));
        assert!(facts.contains("Angle(ABC)"));
        assert!(facts.contains("Angle(BCA)"));
        assert!(facts.contains("Angle(ABC)"));
        assert!(facts.contains("Line(AB)"));
        assert!(facts.contains("Line(BC)"));
        assert!(facts.contains("Point(A)"));
    }

    #[test]
    fn open_shape_yields_angle_only() {
        let facts = extend(&["Shape(AO,OB)"]);
        assert!(facts.contains("Angle(AOB)"));
        assert!(!facts.iter().any(|f| f.starts_with("Polygon")));
    }

    #[test]
    fn collinear_yields_subsequences_and_lines() {
        let facts = extend(&["Collinear(ADF)"]);
        assert!(facts.contains("Collinear(ADF)"));
        assert!(facts.contains("Line(AD)"));
        assert!(facts.contains("Line(DF)"));
        assert!(facts.contains("Line(AF)"));
        assert!(facts.contains("Angle(ADF)"));
    }

    #[test]
    fn cocircular_yields_all_subsets() {
        let facts = extend(&["Cocircular(O,ABC)"]);
        assert!(facts.contains("Circle(O)"));
        for sub in ["A", "B", "C", "AB", "AC", "BC", "ABC"] {
            assert!(facts.contains(&format!("Cocircular(O,{sub})")), "missing {sub}");
        }
    }
}
