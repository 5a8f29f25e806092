//! Neuro-symbolic proof generation for SAT-level Euclidean geometry.
//!
//! The pipeline has three legs:
//!
//! 1. **Verification** — parse FormalGeo-style CDL problems and proofs
//!    ([`cdl`]), track established geometric facts ([`geometry`]), encode
//!    algebraic consequences ([`algebra`]), and check proofs step by step
//!    with tiered diagnostics ([`verifier`]).
//! 2. **Analogy retrieval** — abstract problems, predict proof similarity
//!    with a small regressor, retrieve analogous problems, and narrow the
//!    theorem dictionary ([`analogy`]).
//! 3. **Orchestration** — assemble few-shot prompts, drive a pluggable LLM
//!    client through a verifier feedback loop ([`orchestrator`]), and
//!    evaluate run records ([`eval`]).

pub mod algebra;
pub mod analogy;
pub mod cdl;
pub mod eval;
pub mod geometry;
pub mod orchestrator;
pub mod verifier;
