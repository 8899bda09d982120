//! Burnside rings of finite groups.
//!
//! Groups are materialized as multiplication tables ([`FiniteGroup`]),
//! their subgroups enumerated into conjugacy classes ([`SubgroupLattice`]),
//! and the Burnside ring is handled through its table of marks
//! ([`BurnsideRing`]). Membership of a ghost vector is decided twice: by
//! the Dress congruences and by exact rational inversion of the marks.
//! On top of that sits the Artin exponent of a subgroup family
//! ([`artin_exponent`]) together with closed-form predictions for p-groups.

pub mod arith;
pub mod artin;
pub mod burnside;
pub mod catalog;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;

pub use artin::{
    abelian_exponent_via_prop44, artin_exponent, check_lemma_41, closed_form_exponent, cyclic_exponent_via_lemma35,
    indicator_vector, theorem_row, verify_main_theorem, ClosedFormCase, DivisorWitness, ExponentResult,
    MembershipRoute, TheoremReport, TheoremRow,
};
pub use burnside::{
    mark, table_of_marks, BurnsideElement, BurnsideRing, Congruence, CongruenceCertificate, GhostVector, MarksSolution,
    TableOfMarks, Violation,
};
pub use catalog::{build, catalog, classify_maximal_cyclic_2group, parse_group_spec, GroupSpec, MaxCyclicType};
pub use error::{Error, Result};
pub use group::{ElementId, FiniteGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use lattice::{
    enumerate_subgroups, is_elementary_abelian, maximal_elementary_abelian, normalizer, select_family, FamilySpec,
    LatticeId, SubgroupClass, SubgroupLattice, DEFAULT_LATTICE_CAP,
};
pub use perm::{group_from_perm_generators, PermGenerators, Permutation};
