//! Weyl groups: elements, length, Bruhat order, reflections, and parabolic
//! decompositions.

mod group;
mod parabolic;
mod perm;

pub use group::{ElemId, WeylElement, WeylGroup, BRUHAT_TABLE_LIMIT, MAX_GROUP_ORDER};
pub use parabolic::{
    in_parabolic, indices_of, mask_of, min_rep, parabolic_decompose, standardize_subsystem, support_mask,
    ParabolicData, SimpleMask,
};
pub use perm::{parse_perm, suffix_mask, Perm, MAX_DEGREE};
