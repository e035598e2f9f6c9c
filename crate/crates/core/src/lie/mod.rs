//! Lie multiplicative maps between finite rings and their splitting into a
//! (negative anti-)isomorphism plus a central map.

mod decompose;
mod image;
mod map;
mod pipeline;
mod verify;

pub use decompose::{
    case_name, coords_string, decompose, verify_decomposition, DecompositionResult, PSI_ADDITIVE, PSI_BIJECTIVE,
    PSI_HOMOMORPHISM, PSI_NEG_ANTIHOMOMORPHISM, TAU_ADDITIVE, TAU_CENTRAL, TAU_KILLS_COMMUTATORS, TRIPLE,
};
pub use image::{check_peirce_image, detect_branch, frames, Branch, BranchReport, PeirceImageReport, DIAGONAL_SHAPE};
pub use map::{
    build_map, commutator_span, conjugation, matrix_units, neg_transpose_plus_trace, CentralTerm, MapBuilder, MapFile,
    MapRepr, MapTable, OffsetTerm, ReprSpec,
};
pub use pipeline::{verify_theorem, Failure, Stage, TheoremBundle};
pub use verify::{
    check_almost_additivity, check_bijective, check_injective_and_homogeneous, verify_lie_multiplicative,
    verify_preserves_idempotents, ALMOST_ADDITIVE, HOMOGENEOUS, INJECTIVE, LIE_MULTIPLICATIVE, PRESERVES_IDEMPOTENTS,
    SURJECTIVE, ZERO_FIXED,
};
