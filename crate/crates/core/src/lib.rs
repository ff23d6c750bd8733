//! Exact combinatorics behind the existence of mock injective modules:
//! root systems and parabolic weight arithmetic, vector partition functions
//! for `k[U_J]`, `SL_2` modular characters via Steinberg's tensor product
//! theorem, and the linear-reductivity criterion.

pub mod character;
pub mod classify;
pub mod coord_ring;
pub mod error;
pub mod report;
pub mod roots;
pub mod sl2;

pub use character::{char_add, char_mul, dim_of, frobenius_twist, is_rank1_symmetric, Basis, Character};
pub use classify::{
    classify, cyclic_ext_dim, has_proper_mock_injectives, is_linearly_reductive, Classification,
    GroupDatum, IdentityComponent, Witness,
};
pub use coord_ring::{
    brute_force_partition_count, fiber_dimension, fiber_support, partition_count, FiberEntry,
    FiberReport, PartitionCache, PartitionTable,
};
pub use error::{Error, Result};
pub use report::{reproduce, ClaimResult, ReproduceLimits, ReproductionReport};
pub use roots::{
    central_character_of, complement_roots, i_height, parse_cartan_type, CartanType,
    CentralCharacter, ParabolicDatum, Root, RootSystem, Weight,
};
pub use sl2::{
    base_p_digits, decompose_into_simples, hom_dim_into_injective_tensor, remark_sweep,
    simple_char, socle_certificate_wt, tensor_comp_mult, trivial_factor_in_tensor_with_l1,
    weyl_char, zero_weight_mult, SimpleDecomposition, Sl2Weight, SocleCertificate,
};
