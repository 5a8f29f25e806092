//! CDL/GDL ingestion: typed terms, the predicate grammar table, parsers for
//! prefix CDL and infix arithmetic, and loaders for the dataset's problem
//! and theorem-dictionary files.

mod dictionary;
mod expr;
mod grammar;
mod parser;
mod problem;
mod term;

pub use dictionary::{
    load_theorem_dictionary, load_theorem_dictionary_str, load_theorem_dictionary_value, DictError,
    TheoremDef, TheoremDict,
};
pub use expr::parse_expr;
pub use grammar::{head_signature, is_geometric_head, ArgKind, HeadSig};
pub use parser::{parse_conjunction, parse_term, parse_term_with_warnings, SyntaxError};
pub use problem::{load_problem, load_problem_file, parse_theorem_call, Problem, ProofStep, SchemaError};
pub use term::{rational_from_decimal, Term};
