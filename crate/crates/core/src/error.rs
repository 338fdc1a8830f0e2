use thiserror::Error;

use crate::moves::MoveError;
use crate::sequence::Violation;
use crate::simplex::{Simplex, Vertex};
use crate::stack::Weight;

#[derive(Debug, Error)]
pub enum Error {
    #[error("a simplex must have at least one vertex")]
    EmptySimplex,
    #[error("vertex {0} repeated within a simplex")]
    DuplicateVertex(Vertex),
    #[error("simplex {0:?} is not in the pool")]
    NotInPool(Simplex),
    #[error("the pool is not a simplicial complex")]
    NotSimplicial,
    #[error(
        "the pool is not a cosimplicial complex: {0:?} lies between two members but is missing"
    )]
    NotCosimplicial(Simplex),
    #[error("stack has {found} weights for a pool of {expected} simplexes")]
    StackSize { expected: usize, found: usize },
    #[error("no weight given for simplex {0:?}")]
    MissingWeight(Simplex),
    #[error(
        "stack is not monotone: F({face:?}) = {face_weight} > F({coface:?}) = {coface_weight}"
    )]
    NotMonotone {
        face: Simplex,
        face_weight: Weight,
        coface: Simplex,
        coface_weight: Weight,
    },
    #[error("vertex map has no value for vertex {0}")]
    MissingVertexValue(Vertex),
    #[error("vertex map has a value for {0}, which is not a vertex of the complex")]
    UnknownVertex(Vertex),
    #[error(
        "vertex map is not injective (vertices {first} and {second} share value {value}); \
         run `max` on the induced stack instead"
    )]
    NotInjective {
        first: Vertex,
        second: Vertex,
        value: Weight,
    },
    #[error("the sequence must start from the empty complex")]
    NonEmptyBase,
    #[error("invalid Morse sequence: {0}")]
    InvalidSequence(#[from] Violation),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("could not start worker pool: {0}")]
    WorkerPool(String),
    #[error("gradient path enumeration met a closed path through {0:?}")]
    ClosedPath(Simplex),
}
