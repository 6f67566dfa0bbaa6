//! Clustering representations: frames, hard clusterings, mass functions and
//! the soft clusterings built from them.

mod frame;
mod hard;
mod possibility;
mod relation;
mod soft;

pub use frame::{FocalSet, Frame, MAX_CLUSTERS};
pub use hard::HardClustering;
pub use possibility::possibility_to_consonant;
pub use relation::{equivalent, pair_relation_mass, relational_of_hard, PairRelationMass, RelationalRepr};
pub use soft::{
    classify, is_fuzzy, is_hard, is_possibilistic, is_rough, prune_masses,
    validate_soft_clustering, EmptySetPolicy, MassFunction, ScKind, SoftClustering,
};
