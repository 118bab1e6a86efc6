//! The highest-weight layer: ordered simples, standard and costandard
//! objects, quasi-hereditary checks, canonical filtrations, and the
//! stratified projective-cover construction with its diagnostic ladder.

mod cover;
mod filtration;
mod order;
mod standard;
mod structure;

pub use cover::{
    injective_hull_stratified, projective_cover_iterative, projective_cover_stratified,
    CoverCheck, CoverDiagnostic, CoverDiagram, CoverOutcome, CoverSequences, PurityFailure,
};
pub use filtration::{canonical_std_filtration, FiltrationLayer, StdFiltration};
pub use order::OrderedSimples;
pub use standard::{
    bracket_multiplicities, check_maxs_equivalence, check_quasihereditary, costandard_object,
    reciprocity_table, standard_object, MaxsEquivalenceReport, QuasiHereditaryReport,
    ReciprocityRow,
};
pub use structure::{
    check_skew_constraint, costandard_cokernel_decomposition, ext1_support,
    standard_kernel_decomposition, Ext1SupportReport, KernelDecomposition, SkewReport,
    SkewViolation,
};
