//! Morse sequences on simplicial complexes.
//!
//! A Morse sequence builds a complex from a base by elementary fillings
//! (critical simplexes) and elementary expansions (gradient pairs). This
//! crate provides the complexes and moves, integer stacks and lower stars,
//! linear-time schedulers for maximal and minimal sequences, the Morse
//! complex over the two-element field, a brute-force oracle, and text
//! formats for the `morse` command-line tool.
//!
//! ```
//! use morse_core::{fixtures, max_constant, critical_vector, CosimplicialComplex};
//!
//! let sphere = CosimplicialComplex::new(fixtures::hollow_tetrahedron()).unwrap();
//! let seq = max_constant(&sphere);
//! assert_eq!(critical_vector(&seq), vec![1, 0, 1]);
//! ```

pub mod complex;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod morse_complex;
pub mod moves;
pub mod oracle;
pub mod schedule;
pub mod sequence;
pub mod simplex;
pub mod stack;

pub use complex::{CosimplicialComplex, SimplexPool};
pub use error::Error;
pub use morse_complex::{
    betti_mod2_from_morse, morse_boundary, morse_reference, MorseBoundary, MorseReference,
};
pub use moves::{FreePair, MembershipView, MoveError};
pub use schedule::{
    max_constant, max_f, max_f_checked, max_lower_star, max_lower_star_with_jobs, max_on_complex,
    min_f, min_f_checked, scheme_max, scheme_min,
};
pub use sequence::{
    audit_maximal, audit_minimal, critical_euler, critical_vector, equivalent, gradient_field,
    validate, validate_f, GradientVectorField, MorseItem, MorseSequence, Violation, ViolationKind,
};
pub use simplex::{Simplex, Vertex};
pub use stack::{
    induced_stack, lower_star, lower_star_partition, validate_stack, LowerStar, Stack, StackRef,
    VertexMap, Weight,
};
