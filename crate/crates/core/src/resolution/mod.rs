//! Closed-form tables, Koszul complexes and mapping cones.

mod closed_forms;
mod cone;
mod pipeline;

pub use closed_forms::{
    prop_1dn_table, prop_23n_table, prop_m_invariants, prop_m_table, prop_ndp1_table,
    prop_sdm1_table, shifted_ring, thm_12n_table, thm_13n_equations, thm_13n_invariants,
};
pub use cone::{koszul_table, mapping_cone, CancellationPair, CancellationSpec, SpecSummand};
pub use pipeline::{
    conjecture_consistency, d2_cancellation_spec, d2_cone, d3_cone, d3_stage1_spec, d3_stage2_spec,
    ideal_generators, m_cone, telescoped_series, ConsistencyReport, ExactSequenceSpec,
};
