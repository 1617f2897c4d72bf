//! Computations on finite semigroups: Green's relations and egg-box
//! diagrams, the inverse of an element along another, and the group, Drazin
//! and Moore–Penrose inverses, together with an exhaustive checker that
//! tests the relationships between them on small semigroups.
//!
//! ```
//! use greenbox::{full_transformation_monoid, green_relations, inverse_along};
//!
//! let s = full_transformation_monoid(3).unwrap();
//! let g = green_relations(&s);
//! let a = s.resolve("221").unwrap();
//! let d = s.resolve("232").unwrap();
//! let r = inverse_along(&s, &g, a, d).unwrap();
//! assert_eq!(s.label(r.b), "323");
//! assert!(r.inner);
//! ```

pub mod error;
pub mod format;
pub mod green;
pub mod inverses;
pub mod matrix;
pub mod semigroup;
pub mod transform;
pub mod verify;

pub use error::{Error, Result};
pub use format::{parse_semigroup, parse_semigroup_with, InvolutionSpec, SemigroupFile};
pub use green::{
    green_relations, h_class_is_group, is_trace_product, render_eggbox, star_relations,
    trace_product_criterion_check, EggBoxBlock, GreenStructure, StarStructure,
};
pub use inverses::{
    bicommutant, commutant, drazin_inverse, drazin_oracle, four_statements, group_inverse,
    group_inverse_oracle, inner_inverses, inverse_along, inverse_along_oracle, inverse_along_right,
    inverses, is_inverse_along, moore_penrose, moore_penrose_oracle, outer_inverses,
    satisfies_drazin_axioms, satisfies_penrose_axioms, CommutantSet, DrazinResult,
    InverseAlongResult,
};
pub use matrix::{Semiring, SmallMatrix};
pub use semigroup::{
    adjoin_identity, boolean_matrices_2x2, full_transformation_monoid, with_involution,
    ClosureLimits, ElementId, MonoidView, Provenance, Semigroup, StarSemigroup,
};
pub use transform::Transformation;
pub use verify::{enumerate_semigroups, run_checks, sweep_orders, CheckId, VerificationReport};
