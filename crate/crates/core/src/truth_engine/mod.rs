//! Truth conventions and the mechanical derivations built on them.
//!
//! Convention T and the T-schema give the classical definitional equation;
//! the "probably" modality, Convention PT and the same schema give the
//! weighted-superposition equation. Traces are checked by [`verify_trace`],
//! which shares no code path with the derivation functions beyond the
//! grammar.

mod context;
mod convention;
mod derivation;
mod goedel;
mod judgment;
mod lukasiewicz;
mod verify;

pub use context::{
    convention_pt, convention_pt_with_phase, probably, pt_degrees, pt_judgment,
    pt_preserves_metadata, ProbabilityContext,
};
pub use convention::{convention_t, t_schema_claims, t_schema_expand, TarskiBiconditional};
pub use derivation::{
    derive_classical_defeq, derive_quantum_defeq, derive_superposition_defeq, DerivationTrace,
    Rule, TraceLine,
};
pub use goedel::{
    goedel_report, GoedelRecord, GoedelReport, Verdict, CONSISTENCY_ATOM, GOEDEL_ATOM,
};
pub use judgment::{Claim, Convention, Judgment, Link, Term};
pub use lukasiewicz::{implies, luka_eval, neg, strong_and, Valuation};
pub use verify::{check_lines, verify_trace};
