//! Permutations and fully enumerated permutation groups.

mod group;
mod perm;

pub use group::{
    builtin_group, generate_group, Family, GroupSpec, GroupTable, DEFAULT_ORDER_CAP,
};
pub(crate) use group::split_cycle_list;
pub use perm::Permutation;
