//! Canonical direction-agnostic forms for geometric terms. Each relation
//! head declares a symmetry orbit; the representative is the
//! lexicographically least member.

use crate::cdl::Term;

/// How a head's identifier arguments may be rewritten without changing the
/// denoted object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Orbit {
    /// `ABC` ≡ `CBA`: vertex fixed in the middle (angles, arcs keep order —
    /// see `Fixed`).
    Reverse,
    /// Endpoints of a segment: `AB` ≡ `BA`, normalized by sorting.
    SortPair,
    /// Cyclic sequence read in either orientation (polygons, cocircular
    /// point lists).
    CycleBothWays,
    /// Ordered sequence readable backwards (collinear point runs).
    Sequence,
    /// No rewriting.
    Fixed,
}

fn ident_orbit(head: &str, arg_index: usize) -> Orbit {
    match head {
        "Angle" | "MeasureOfAngle" => Orbit::Reverse,
        "Line" | "LengthOfLine" => Orbit::SortPair,
        "Polygon" | "RightTriangle" | "IsoscelesTriangle" | "EquilateralTriangle" => {
            // Isosceles apex and right-angle vertex are positional; only the
            // plain polygon is orientation-free.
            if head == "Polygon" {
                Orbit::CycleBothWays
            } else {
                Orbit::Fixed
            }
        }
        "Collinear" => Orbit::Sequence,
        "Cocircular" if arg_index == 1 => Orbit::CycleBothWays,
        _ => Orbit::Fixed,
    }
}

/// Canonicalizes one identifier under the given orbit.
pub fn canonicalize_ident(head: &str, arg_index: usize, ident: &str) -> String {
    match ident_orbit(head, arg_index) {
        Orbit::Reverse | Orbit::Sequence => {
            let rev: String = ident.chars().rev().collect();
            if rev.as_str() < ident {
                rev
            } else {
                ident.to_string()
            }
        }
        Orbit::SortPair => {
            let mut chars: Vec<char> = ident.chars().collect();
            chars.sort_unstable();
            chars.into_iter().collect()
        }
        Orbit::CycleBothWays => least_rotation_both_ways(ident),
        Orbit::Fixed => ident.to_string(),
    }
}

fn least_rotation_both_ways(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    let n = chars.len();
    if n == 0 {
        return String::new();
    }
    let mut best: Option<String> = None;
    for dir in [false, true] {
        let seq: Vec<char> = if dir { chars.iter().rev().copied().collect() } else { chars.clone() };
        for start in 0..n {
            let cand: String = (0..n).map(|i| seq[(start + i) % n]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

/// Maps a geometric relation term to its canonical representative.
/// Identity on non-geometric terms; recurses through arithmetic heads so
/// measure sub-terms inside equations are also normalized.
pub fn canonicalize(t: &Term) -> Term {
    match t {
        Term::Apply { head, args } => {
            let mut out = Vec::with_capacity(args.len());
            for (i, a) in args.iter().enumerate() {
                match a {
                    Term::Ident(s) => out.push(Term::Ident(canonicalize_ident(head, i, s))),
                    other => out.push(canonicalize(other)),
                }
            }
            let canon = Term::Apply { head: head.clone(), args: out };
            normalize_pair_relation(canon)
        }
        other => other.clone(),
    }
}

/// Relations over two directed lines where rotating the whole configuration
/// by a half turn names the same fact: `(AB,CD)` ≡ `(DC,BA)`.
fn normalize_pair_relation(t: Term) -> Term {
    let Term::Apply { head, args } = &t else { return t };
    if !matches!(head.as_str(), "ParallelBetweenLine" | "PerpendicularBetweenLine") {
        return t;
    }
    let (Some(a), Some(b)) = (args[0].as_ident(), args[1].as_ident()) else { return t };
    let flipped_a: String = b.chars().rev().collect();
    let flipped_b: String = a.chars().rev().collect();
    if (flipped_a.as_str(), flipped_b.as_str()) < (a, b) {
        Term::Apply {
            head: head.clone(),
            args: vec![Term::Ident(flipped_a), Term::Ident(flipped_b)],
        }
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdl::parse_term;

    fn canon(src: &str) -> String {
        canonicalize(&parse_term(src).unwrap()).render()
    }

    #[test]
    fn angle_direction_agnostic() {
        assert_eq!(canon("MeasureOfAngle(CBA)"), "MeasureOfAngle(ABC)");
        assert_eq!(canon("MeasureOfAngle(ABC)"), "MeasureOfAngle(ABC)");
    }

    #[test]
    fn polygon_rotations_and_reflection_collapse() {
        assert_eq!(canon("Polygon(GEF)"), "Polygon(EFG)");
        assert_eq!(canon("Polygon(FGE)"), "Polygon(EFG)");
        assert_eq!(canon("Polygon(EFG)"), "Polygon(EFG)");
        assert_eq!(canon("Polygon(GFE)"), "Polygon(EFG)");
    }

    #[test]
    fn line_endpoints_sorted() {
        assert_eq!(canon("LengthOfLine(BA)"), "LengthOfLine(AB)");
        assert_eq!(canon("Line(CB)"), "Line(BC)");
    }

    #[test]
    fn collinear_sequence_reversible() {
        assert_eq!(canon("Collinear(BFDA)"), "Collinear(ADFB)");
        assert_eq!(canon("Collinear(ADFB)"), "Collinear(ADFB)");
    }

    #[test]
    fn cocircular_cycle_center_fixed() {
        assert_eq!(canon("Cocircular(O,BCA)"), "Cocircular(O,ABC)");
        assert_eq!(canon("Cocircular(O,CBA)"), "Cocircular(O,ABC)");
    }

    #[test]
    fn parallel_half_turn_identified() {
        assert_eq!(canon("ParallelBetweenLine(DE,BC)"), canon("ParallelBetweenLine(CB,ED)"));
        assert_ne!(canon("ParallelBetweenLine(DE,BC)"), canon("ParallelBetweenLine(BC,DE)"));
    }

    #[test]
    fn recurses_into_equations() {
        assert_eq!(canon("Equal(MeasureOfAngle(CBA),40)"), "Equal(MeasureOfAngle(ABC),40)");
    }

    #[test]
    fn identity_on_non_geometric() {
        assert_eq!(canon("Add(1,2)"), "Add(1,2)");
    }

    #[test]
    fn idempotent() {
        for src in ["MeasureOfAngle(CBA)", "Polygon(GEF)", "Collinear(BFDA)", "Cocircular(O,CBA)"] {
            let once = canonicalize(&parse_term(src).unwrap());
            assert_eq!(canonicalize(&once), once);
        }
    }
}
