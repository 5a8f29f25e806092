//! Normalized store of established geometric facts: canonical,
//! direction-agnostic naming, lazy closure expansion at query time, and
//! extension of constructions into derived entity facts.

mod canonical;
mod extension;
mod state;

pub use canonical::{canonicalize, canonicalize_ident};
pub use extension::extend_construction;
pub use state::{GeoState, HoldsError};
