//! Exact finite permutation groups: elements, closure, conjugacy classes,
//! power maps and the named groups of the classification table.

mod classes;
mod construct;
mod cycles;
mod group;
mod iso;
mod perm;
mod todd_coxeter;

pub use classes::{conjugacy_classes, ConjClassSet};
pub(crate) use classes::prime_factors;
pub use construct::{construct_group, fingerprint, sl25_matrix_action, Fingerprint, GroupLabel};
pub use cycles::{parse_perm, parse_perm_list, CycleParseError};
pub use group::{element_order, group_closure, group_closure_labeled, Group, GroupError, DEFAULT_CLOSURE_BOUND};
pub use iso::{central_quotient, central_quotient_certificate, find_isomorphism, verify_central_quotient, CentralQuotientCertificate};
pub use perm::{compose, product, Perm, PermError};
pub use todd_coxeter::regular_representation;
