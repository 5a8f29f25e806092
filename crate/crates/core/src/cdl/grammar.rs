//! Table-driven predicate grammar: each known head fixes an arity and the
//! kind of every argument. New predicates from the dataset extend this table
//! without touching the parser.

/// What a head expects in one argument position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgKind {
    /// A bare identifier (entity name or algebraic unknown).
    Ident,
    /// Any term: nested application, identifier, or number.
    Expr,
}

#[derive(Debug, Clone, Copy)]
pub struct HeadSig {
    /// Exact arity, or minimum arity for variadic heads.
    pub arity: usize,
    pub variadic: bool,
    pub kind: ArgKind,
}

const fn fixed(arity: usize, kind: ArgKind) -> HeadSig {
    HeadSig { arity, variadic: false, kind }
}

const fn variadic(min: usize, kind: ArgKind) -> HeadSig {
    HeadSig { arity: min, variadic: true, kind }
}

/// Signature for a known head, or `None` for heads outside the table.
/// Unknown heads still parse (verification rejects them later).
pub fn head_signature(head: &str) -> Option<HeadSig> {
    use ArgKind::*;
    Some(match head {
        // entities and relations
        "Point" | "Line" | "Angle" | "Arc" | "Circle" | "Polygon" | "Collinear"
        | "RightTriangle" | "IsoscelesTriangle" | "EquilateralTriangle" | "Parallelogram"
        | "Rectangle" | "Square" | "Rhombus" | "Trapezoid" => fixed(1, Ident),
        "Shape" => variadic(1, Ident),
        "Cocircular" | "ParallelBetweenLine" | "PerpendicularBetweenLine"
        | "SimilarBetweenTriangle" | "CongruentBetweenTriangle" | "IsMidpointOfLine"
        | "IsDiameterOfCircle" | "IsTangentOfCircle" => fixed(2, Ident),
        // measures
        "MeasureOfAngle" | "LengthOfLine" | "MeasureOfArc" | "LengthOfArc"
        | "RadiusOfCircle" | "DiameterOfCircle" | "PerimeterOfTriangle" | "AreaOfTriangle"
        | "PerimeterOfQuadrilateral" | "AreaOfQuadrilateral" => fixed(1, Ident),
        // arithmetic
        "Add" | "Mul" => variadic(2, Expr),
        "Sub" | "Div" | "Pow" => fixed(2, Expr),
        "Sqrt" | "Sin" | "Cos" | "Tan" => fixed(1, Expr),
        // relations over expressions
        "Equal" | "Gt" | "Lt" => fixed(2, Expr),
        "Value" => fixed(1, Expr),
        _ => return None,
    })
}

/// Heads that denote geometric facts storable in the fact store (as opposed
/// to arithmetic or relational heads).
pub fn is_geometric_head(head: &str) -> bool {
    matches!(
        head,
        "Point"
            | "Line"
            | "Angle"
            | "Arc"
            | "Circle"
            | "Polygon"
            | "Collinear"
            | "Shape"
            | "Cocircular"
            | "RightTriangle"
            | "IsoscelesTriangle"
            | "EquilateralTriangle"
            | "Parallelogram"
            | "Rectangle"
            | "Square"
            | "Rhombus"
            | "Trapezoid"
            | "ParallelBetweenLine"
            | "PerpendicularBetweenLine"
            | "SimilarBetweenTriangle"
            | "CongruentBetweenTriangle"
            | "IsMidpointOfLine"
            | "IsDiameterOfCircle"
            | "IsTangentOfCircle"
    )
}
