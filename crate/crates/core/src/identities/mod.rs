//! Determinant generating functions, closed forms, and the harness that
//! checks them against the enumeration oracles.

mod closed_form;
mod gf;
mod verify;

pub use closed_form::{bsm_closed_form, check_bsm3_recurrence};
pub use gf::{
    bounded_tableaux_gf, bsm_counts, bsm_egf, egf_counts, generalized_gessel_counts,
    generalized_gessel_gf, gessel_counts, gessel_gf, gm_walk_gf, involution_counts, involution_egf,
    total_walk_counts, total_walk_gf, walk_counts,
};
pub use verify::{
    chamber_points, verify_identity, Bounds, IdentityKey, PointRecord, VerificationReport,
};
