//! Automorphism groups, transitivity predicates, the pair-orbit scheme of an
//! edge-transitive graph and group (Reynolds) averaging.

mod group;
mod reynolds;
mod scheme;

pub use group::{
    automorphism_group, automorphism_group_with_budget, compose, edge_orbits, edge_orbits_under, inverse,
    is_edge_transitive, is_vertex_transitive, vertex_orbits, Perm, PermGroup, DEFAULT_NODE_BUDGET,
    MAX_ENUMERATED_ORDER,
};
pub use reynolds::{reynolds_average, reynolds_average_enumerated};
pub use scheme::{pair_orbit_scheme, scheme_from_group, PairOrbitScheme, SchemeClass};
