//! GDL theorem dictionary. Each entry keys on `name(P1,P2,...)` where the
//! parameter tuples are letter patterns (one letter per point slot), and
//! maps variation ids to a premise conjunction and a conclusion list.

use super::parser::{parse_conjunction, parse_term, SyntaxError};
use super::term::Term;
use serde_json::Value;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DictError {
    #[error("duplicate theorem entry `{0}` (variation {1})")]
    Duplicate(String, u32),
    #[error("theorem `{name}`: free variable `{var}` not bound by any parameter")]
    UnboundVariable { name: String, var: char },
    #[error("malformed theorem key `{0}`: expected name(P1,P2,...)")]
    BadKey(String),
    #[error("theorem `{name}` variation `{variation}`: {detail}")]
    BadEntry { name: String, variation: String, detail: String },
    #[error("theorem `{name}`: {err}")]
    Cdl { name: String, err: SyntaxError },
    #[error("dictionary file is not a JSON object")]
    NotAnObject,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

/// One theorem variation: parameter letter-tuples, premise conjunction, and
/// the conclusions it licenses.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremDef {
    pub name: String,
    pub variation: u32,
    /// Letter patterns, e.g. `["GA", "HD"]`; each letter is a point slot.
    pub params: Vec<String>,
    pub premise: Vec<Term>,
    pub conclusions: Vec<Term>,
}

impl TheoremDef {
    /// The set of point variables bound by the parameter tuples.
    pub fn param_letters(&self) -> BTreeSet<char> {
        self.params.iter().flat_map(|p| p.chars()).collect()
    }

    /// Renders the signature as `name(P1,P2)`.
    pub fn signature(&self) -> String {
        format!("{}({})", self.name, self.params.join(","))
    }
}

/// The theorem dictionary, keyed by (name, variation).
#[derive(Debug, Clone, Default)]
pub struct TheoremDict {
    entries: BTreeMap<(String, u32), TheoremDef>,
}

impl TheoremDict {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, def: TheoremDef) -> Result<(), DictError> {
        let key = (def.name.clone(), def.variation);
        if self.entries.contains_key(&key) {
            return Err(DictError::Duplicate(key.0, key.1));
        }
        validate_def(&def)?;
        self.entries.insert(key, def);
        Ok(())
    }

    pub fn get(&self, name: &str, variation: u32) -> Option<&TheoremDef> {
        self.entries.get(&(name.to_string(), variation))
    }

    pub fn contains_name(&self, name: &str) -> bool {
        self.entries.keys().any(|(n, _)| n == name)
    }

    /// Total entry count, counting each variation separately.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct theorem names.
    pub fn name_count(&self) -> usize {
        self.entries.keys().map(|(n, _)| n).collect::<BTreeSet<_>>().len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &TheoremDef> {
        self.entries.values()
    }

    /// Sub-dictionary restricted to the given (name, variation) keys.
    /// Unknown keys are skipped.
    pub fn subset(&self, keys: &BTreeSet<(String, u32)>) -> TheoremDict {
        let entries = self
            .entries
            .iter()
            .filter(|(k, _)| keys.contains(*k))
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        TheoremDict { entries }
    }

    /// Renders the dictionary in the GDL text layout used inside prompts.
    pub fn render_gdl(&self) -> String {
        let mut out = String::new();
        let mut by_name: BTreeMap<&str, Vec<&TheoremDef>> = BTreeMap::new();
        for def in self.entries.values() {
            by_name.entry(&def.name).or_default().push(def);
        }
        for (name, defs) in by_name {
            out.push_str(&format!("{}({})\n", name, defs[0].params.join(",")));
            for def in defs {
                out.push_str(&format!(
                    "  {}: premise: {}; conclusion: [{}]\n",
                    def.variation,
                    def.premise.iter().map(Term::render).collect::<Vec<_>>().join("&"),
                    def.conclusions
                        .iter()
                        .map(|c| format!("\"{}\"", c.render()))
                        .collect::<Vec<_>>()
                        .join(","),
                ));
            }
        }
        out
    }
}

fn validate_def(def: &TheoremDef) -> Result<(), DictError> {
    let bound = def.param_letters();
    for term in def.premise.iter().chain(def.conclusions.iter()) {
        for ident in term.idents() {
            // Point-tuple identifiers only; lowercase algebraic unknowns in
            // conclusions are not point slots.
            for c in ident.chars().filter(|c| c.is_ascii_uppercase()) {
                if !bound.contains(&c) {
                    return Err(DictError::UnboundVariable { name: def.name.clone(), var: c });
                }
            }
        }
    }
    Ok(())
}

fn parse_key(key: &str) -> Result<(String, Vec<String>), DictError> {
    let open = key.find('(').ok_or_else(|| DictError::BadKey(key.to_string()))?;
    if !key.ends_with(')') {
        return Err(DictError::BadKey(key.to_string()));
    }
    let name = key[..open].to_string();
    let inner = &key[open + 1..key.len() - 1];
    let params: Vec<String> = if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|s| s.trim().to_string()).collect()
    };
    if name.is_empty() || params.iter().any(|p| p.is_empty() || !p.bytes().all(|b| b.is_ascii_uppercase())) {
        return Err(DictError::BadKey(key.to_string()));
    }
    Ok((name, params))
}

/// Loads a GDL dictionary from its JSON form. Accepts either the mapping at
/// the top level or nested under a `"Theorems"` key.
pub fn load_theorem_dictionary_value(root: &Value) -> Result<TheoremDict, DictError> {
    let obj = root
        .get("Theorems")
        .and_then(Value::as_object)
        .or_else(|| root.as_object())
        .ok_or(DictError::NotAnObject)?;

    let mut dict = TheoremDict::new();
    let mut seen_names: BTreeMap<String, String> = BTreeMap::new();
    for (key, body) in obj {
        let (name, params) = parse_key(key)?;
        if let Some(prev) = seen_names.insert(name.clone(), key.clone()) {
            // Two keys with the same theorem name collide on every variation.
            let _ = prev;
            return Err(DictError::Duplicate(name, 1));
        }
        let variations = body.as_object().ok_or_else(|| DictError::BadEntry {
            name: name.clone(),
            variation: "-".into(),
            detail: "expected object of variations".into(),
        })?;
        for (var_key, var_body) in variations {
            let variation: u32 = var_key.parse().map_err(|_| DictError::BadEntry {
                name: name.clone(),
                variation: var_key.clone(),
                detail: "variation id must be a positive integer".into(),
            })?;
            let premise_text = var_body
                .get("premise")
                .and_then(Value::as_str)
                .ok_or_else(|| DictError::BadEntry {
                    name: name.clone(),
                    variation: var_key.clone(),
                    detail: "missing `premise` string".into(),
                })?;
            let premise = parse_conjunction(premise_text)
                .map_err(|err| DictError::Cdl { name: name.clone(), err })?;
            let conclusion_arr = var_body
                .get("conclusion")
                .and_then(Value::as_array)
                .ok_or_else(|| DictError::BadEntry {
                    name: name.clone(),
                    variation: var_key.clone(),
                    detail: "missing `conclusion` array".into(),
                })?;
            let mut conclusions = Vec::with_capacity(conclusion_arr.len());
            for c in conclusion_arr {
                let s = c.as_str().ok_or_else(|| DictError::BadEntry {
                    name: name.clone(),
                    variation: var_key.clone(),
                    detail: "conclusion elements must be strings".into(),
                })?;
                conclusions.push(parse_term(s).map_err(|err| DictError::Cdl { name: name.clone(), err })?);
            }
            dict.insert(TheoremDef {
                name: name.clone(),
                variation,
                params: params.clone(),
                premise,
                conclusions,
            })?;
        }
    }
    Ok(dict)
}

/// Loads the GDL dictionary file.
pub fn load_theorem_dictionary(path: &Path) -> Result<TheoremDict, DictError> {
    let text = std::fs::read_to_string(path)?;
    load_theorem_dictionary_str(&text)
}

pub fn load_theorem_dictionary_str(text: &str) -> Result<TheoremDict, DictError> {
    let value: Value = serde_json::from_str(text)?;
    load_theorem_dictionary_value(&value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_file_gives_empty_map() {
        let dict = load_theorem_dictionary_value(&json!({})).unwrap();
        assert!(dict.is_empty());
    }

    #[test]
    fn one_theorem_two_variations_gives_two_entries() {
        let dict = load_theorem_dictionary_value(&json!({
            "parallel_property_alternate_interior_angle(AB,CD)": {
                "1": {
                    "premise": "ParallelBetweenLine(AB,CD)&Line(AD)",
                    "conclusion": ["Equal(MeasureOfAngle(BAD),MeasureOfAngle(CDA))"]
                },
                "2": {
                    "premise": "ParallelBetweenLine(AB,CD)&Line(BC)",
                    "conclusion": ["Equal(MeasureOfAngle(ABC),MeasureOfAngle(DCB))"]
                }
            }
        }))
        .unwrap();
        assert_eq!(dict.len(), 2);
        assert_eq!(dict.name_count(), 1);
        let def = dict.get("parallel_property_alternate_interior_angle", 2).unwrap();
        assert_eq!(def.params, vec!["AB", "CD"]);
        assert_eq!(def.premise.len(), 2);
    }

    #[test]
    fn duplicate_name_is_fatal() {
        let err = load_theorem_dictionary_value(&json!({
            "foo(AB)": { "1": { "premise": "Line(AB)", "conclusion": [] } },
            "foo(ABC)": { "1": { "premise": "Polygon(ABC)", "conclusion": [] } }
        }))
        .unwrap_err();
        assert!(matches!(err, DictError::Duplicate(..)));
    }

    #[test]
    fn unbound_variable_rejected() {
        let err = load_theorem_dictionary_value(&json!({
            "bad(AB)": { "1": { "premise": "Line(AB)&Line(XY)", "conclusion": [] } }
        }))
        .unwrap_err();
        assert!(matches!(err, DictError::UnboundVariable { var: 'X', .. } | DictError::UnboundVariable { var: 'Y', .. }));
    }

    #[test]
    fn theorems_nested_under_key() {
        let dict = load_theorem_dictionary_value(&json!({
            "Theorems": {
                "line_addition(AB,BC)": {
                    "1": {
                        "premise": "Collinear(ABC)",
                        "conclusion": ["Equal(LengthOfLine(AC),Add(LengthOfLine(AB),LengthOfLine(BC)))"]
                    }
                }
            }
        }))
        .unwrap();
        assert_eq!(dict.len(), 1);
    }
}
