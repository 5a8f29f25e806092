//! Problem records in the FormalGeo-7k file format. The exact field names
//! read here are documented in `docs/dataset_schema.md`.

use super::expr::parse_expr;
use super::parser::{parse_term, SyntaxError};
use super::term::Term;
use serde_json::Value;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error("field `{field}` is malformed: {detail}")]
    Malformed { field: &'static str, detail: String },
    #[error("field `{field}`: {err}")]
    Cdl { field: &'static str, err: SyntaxError },
    #[error("file is not a JSON object")]
    NotAnObject,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// One dataset problem: parsed CDL fields plus the ground-truth proof when
/// the record carries one.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub id: u64,
    /// Ground-truth proof length class.
    pub level: u32,
    pub description: String,
    pub construction: Vec<Term>,
    pub construction_extended: Vec<Term>,
    /// The record's `text_cdl` conditions.
    pub conditions: Vec<Term>,
    pub goal: Term,
    /// Exact answer expression (rational or closed form such as `3*sqrt(2)`).
    pub answer: Term,
    pub answer_text: String,
    pub proof: Vec<ProofStep>,
}

/// One proof step: a theorem invocation plus whatever premise/conclusion
/// text the author stated. Dataset ground-truth sequences state neither;
/// LLM responses state both.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofStep {
    pub step_id: u32,
    pub theorem: String,
    pub variation: u32,
    pub args: Vec<String>,
    pub stated_premise: Option<String>,
    pub stated_conclusions: Vec<Term>,
}

impl ProofStep {
    /// Renders the invocation as `name(variation,arg1,arg2)`.
    pub fn call_text(&self) -> String {
        let mut s = format!("{}({}", self.theorem, self.variation);
        for a in &self.args {
            s.push(',');
            s.push_str(a);
        }
        s.push(')');
        s
    }
}

/// Parses a theorem invocation such as `angle_addition(1,BFE,EFG)` into
/// (name, variation, args).
pub fn parse_theorem_call(src: &str) -> Result<(String, u32, Vec<String>), SyntaxError> {
    let src = src.trim();
    let open = src.find('(').ok_or_else(|| SyntaxError {
        offset: src.len(),
        expected: "'('".into(),
        found: "end of input".into(),
    })?;
    let name = src[..open].trim().to_string();
    if name.is_empty() || !name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
        return Err(SyntaxError { offset: 0, expected: "theorem name".into(), found: name });
    }
    let close = src.rfind(')').ok_or_else(|| SyntaxError {
        offset: src.len(),
        expected: "')'".into(),
        found: "end of input".into(),
    })?;
    let inner = &src[open + 1..close];
    let mut parts = inner.split(',').map(str::trim);
    let var_text = parts.next().unwrap_or("");
    let variation: u32 = var_text.parse().map_err(|_| SyntaxError {
        offset: open + 1,
        expected: "variation number".into(),
        found: var_text.to_string(),
    })?;
    let args: Vec<String> = parts.map(|s| s.to_string()).collect();
    if args.iter().any(|a| a.is_empty() || !a.bytes().all(|b| b.is_ascii_alphanumeric())) {
        return Err(SyntaxError {
            offset: open + 1,
            expected: "identifier argument".into(),
            found: inner.to_string(),
        });
    }
    Ok((name, variation, args))
}

fn get_u64(record: &Value, field: &'static str) -> Result<u64, SchemaError> {
    record
        .get(field)
        .ok_or(SchemaError::MissingField(field))?
        .as_u64()
        .ok_or_else(|| SchemaError::Malformed { field, detail: "expected unsigned integer".into() })
}

fn get_str<'v>(record: &'v Value, field: &'static str) -> Result<&'v str, SchemaError> {
    record
        .get(field)
        .ok_or(SchemaError::MissingField(field))?
        .as_str()
        .ok_or_else(|| SchemaError::Malformed { field, detail: "expected string".into() })
}

fn get_cdl_list(record: &Value, field: &'static str) -> Result<Vec<Term>, SchemaError> {
    let arr = record
        .get(field)
        .ok_or(SchemaError::MissingField(field))?
        .as_array()
        .ok_or_else(|| SchemaError::Malformed { field, detail: "expected array of strings".into() })?;
    let mut out = Vec::with_capacity(arr.len());
    for v in arr {
        let s = v
            .as_str()
            .ok_or_else(|| SchemaError::Malformed { field, detail: "expected string element".into() })?;
        out.push(parse_term(s).map_err(|err| SchemaError::Cdl { field, err })?);
    }
    Ok(out)
}

/// Loads a problem from a parsed dataset record.
pub fn load_problem(record: &Value) -> Result<Problem, SchemaError> {
    if !record.is_object() {
        return Err(SchemaError::NotAnObject);
    }
    let id = get_u64(record, "problem_id")?;
    let level = get_u64(record, "problem_level")? as u32;
    let description = record
        .get("problem_text_en")
        .and_then(Value::as_str)
        .unwrap_or_default()
        .to_string();
    let construction = get_cdl_list(record, "construction_cdl")?;
    let construction_extended = get_cdl_list(record, "construction_cdl_extended")?;
    let conditions = get_cdl_list(record, "text_cdl")?;
    let goal_text = get_str(record, "goal_cdl")?;
    let goal = parse_term(goal_text).map_err(|err| SchemaError::Cdl { field: "goal_cdl", err })?;
    let answer_text = get_str(record, "problem_answer")?.to_string();
    let answer =
        parse_expr(&answer_text).map_err(|err| SchemaError::Cdl { field: "problem_answer", err })?;

    let mut proof = Vec::new();
    if let Some(seqs) = record.get("theorem_seqs") {
        let arr = seqs.as_array().ok_or_else(|| SchemaError::Malformed {
            field: "theorem_seqs",
            detail: "expected array of strings".into(),
        })?;
        for (i, v) in arr.iter().enumerate() {
            let s = v.as_str().ok_or_else(|| SchemaError::Malformed {
                field: "theorem_seqs",
                detail: "expected string element".into(),
            })?;
            let (theorem, variation, args) =
                parse_theorem_call(s).map_err(|err| SchemaError::Cdl { field: "theorem_seqs", err })?;
            proof.push(ProofStep {
                step_id: (i + 1) as u32,
                theorem,
                variation,
                args,
                stated_premise: None,
                stated_conclusions: Vec::new(),
            });
        }
    }

    Ok(Problem {
        id,
        level,
        description,
        construction,
        construction_extended,
        conditions,
        goal,
        answer,
        answer_text,
        proof,
    })
}

/// Reads and loads one problem file.
pub fn load_problem_file(path: &Path) -> Result<Problem, SchemaError> {
    let text = std::fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)?;
    load_problem(&value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn record() -> Value {
        json!({
            "problem_id": 42,
            "problem_level": 1,
            "problem_text_en": "Find the measure of angle CAB.",
            "construction_cdl": ["Shape(AB,BC,CA)"],
            "text_cdl": ["Equal(MeasureOfAngle(ABC),40)", "Equal(MeasureOfAngle(BCA),60)"],
            "construction_cdl_extended": ["Polygon(ABC)", "Angle(ABC)"],
            "goal_cdl": "Value(MeasureOfAngle(CAB))",
            "problem_answer": "80",
            "theorem_seqs": ["triangle_property_angle_sum(1,ABC)"]
        })
    }

    #[test]
    fn loads_answer_as_exact_value() {
        let mut r = record();
        r["problem_answer"] = json!("9");
        let p = load_problem(&r).unwrap();
        assert_eq!(p.answer, Term::int(9));
    }

    #[test]
    fn empty_proof_is_valid() {
        let mut r = record();
        r["theorem_seqs"] = json!([]);
        let p = load_problem(&r).unwrap();
        assert!(p.proof.is_empty());
    }

    #[test]
    fn proof_steps_numbered_from_one() {
        let p = load_problem(&record()).unwrap();
        assert_eq!(p.proof.len(), 1);
        assert_eq!(p.proof[0].step_id, 1);
        assert_eq!(p.proof[0].theorem, "triangle_property_angle_sum");
        assert_eq!(p.proof[0].variation, 1);
        assert_eq!(p.proof[0].args, vec!["ABC"]);
    }

    #[test]
    fn missing_field_named_in_error() {
        let mut r = record();
        r.as_object_mut().unwrap().remove("goal_cdl");
        let e = load_problem(&r).unwrap_err();
        assert!(e.to_string().contains("goal_cdl"));
    }

    #[test]
    fn malformed_cdl_named_in_error() {
        let mut r = record();
        r["text_cdl"] = json!(["Equal(MeasureOfAngle(ABC),"]);
        let e = load_problem(&r).unwrap_err();
        assert!(e.to_string().contains("text_cdl"));
    }

    #[test]
    fn theorem_call_round_trip() {
        let (name, var, args) = parse_theorem_call("angle_addition(1,BFE,EFG)").unwrap();
        assert_eq!(name, "angle_addition");
        assert_eq!(var, 1);
        assert_eq!(args, vec!["BFE", "EFG"]);
    }
}
