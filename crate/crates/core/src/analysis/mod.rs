//! Tensor-power growth, the inequality audit for the symmetry theorem and the
//! three-dimensional counterexample.

mod audit;
mod counterexample;
mod growth;

pub use audit::{
    audit_spectrum, default_n_max, default_probes, theorem_audit, Contrapositive, ContrapositiveRow,
    InequalityRow, ProbeRow, TheoremAudit,
};
pub use counterexample::{build_counterexample, Counterexample};
pub use growth::{
    b_growth, estimate_rate, growth_table, p_growth, GrowthClass, GrowthRow, GrowthTable, RateBand,
    RateEstimate, MIN_RATE_N,
};
