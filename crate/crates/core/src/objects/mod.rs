//! Explicit enumeration of the combinatorial objects counted by the
//! generating functions: matchings, oscillating tableaux, standard Young
//! tableaux and permutations.
//!
//! Enumerations are capped. Asking for more than the cap is an
//! [`Error::CapExceeded`](crate::Error::CapExceeded), never a silent
//! truncation.

mod caps;
mod matching;
mod permutation;
mod syt;
mod tableau;

pub use caps::{EnumerationCaps, CAP_RAISE_ENV};
pub use matching::{
    count_matchings, crossing_number, enumerate_matchings, is_bilaterally_symmetric,
    nesting_number, reflect_matching, Matching, MatchingFilter, Matchings,
};
pub use permutation::{
    count_involutions, count_lis_bounded, enumerate_permutations, lis_distribution,
    longest_increasing, Permutation, Permutations,
};
pub use syt::{count_syt, enumerate_syt, partitions_of, StandardTableau};
pub use tableau::{
    count_oscillating_tableaux, enumerate_oscillating_tableaux, gamma_combine, gamma_split,
    is_palindromic, shape_counts, tableau_reverse, tilde_f, OscillatingTableau,
    OscillatingTableaux,
};
